#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "trustrec/dataset.hpp"

// Dense brute-force reference implementation of the prediction formula.
// Deliberately shares no code with the library: users and items are
// indices 0..m-1 and 0..n-1, missing ratings are empty optionals, and every
// quantity is recomputed from scratch for each call.
namespace oracle {

struct Dense {
    int users = 0;
    int items = 0;
    double lo = 1.0;
    double hi = 5.0;
    std::vector<std::vector<std::optional<double>>> r;  // r[u][j]
    std::vector<std::vector<bool>> trusts;               // trusts[a][u]
};

enum class Strategy { Traditional, TrustAware, Hybrid, Propagated };
enum class Measure { Pearson, Cosine, Iuf };

struct Config {
    Strategy strategy = Strategy::Traditional;
    int d_max = 2;
    Measure measure = Measure::Pearson;
    std::optional<double> rho;
    int min_overlap = 2;
    double fallback = 1.0;
    bool clamp = true;
    bool global_fallback = true;
};

struct Result {
    std::optional<double> value;
    std::string failure;  // empty on success
};

std::optional<double> pearson(const Dense& d, int a, int u, int min_overlap);
std::optional<double> cosine(const Dense& d, int a, int u, int min_overlap);
std::optional<double> iuf_pearson(const Dense& d, int a, int u, int min_overlap);

/// All-pairs trust distances (Floyd-Warshall); -1 when unreachable.
std::vector<std::vector<int>> distances(const Dense& d);

/// Prediction of r[a][j] with that rating removed first.
Result predict(Dense d, int a, int j, const Config& c);

/// Random instance with the given shape. Ratings are integers in [1, 5].
Dense random_dense(std::uint64_t seed, int max_users = 8, int max_items = 8);

/// The same data in library form; every index is in the universe.
trustrec::Dataset to_dataset(const Dense& d);

}  // namespace oracle
