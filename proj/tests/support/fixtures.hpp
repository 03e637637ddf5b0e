#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "trustrec/dataset.hpp"
#include "trustrec/ingestion.hpp"

#ifndef TRUSTREC_TEST_DATA_DIR
#error "TRUSTREC_TEST_DATA_DIR must point at tests/data"
#endif

namespace fixtures {

inline std::string data_path(const std::string& name) {
    return std::string(TRUSTREC_TEST_DATA_DIR) + "/" + name;
}

inline std::string slurp(const std::string& name) {
    std::ifstream in(data_path(name));
    if (!in) throw std::runtime_error("missing fixture " + name);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

inline trustrec::Dataset load(const std::string& ratings_text, const std::string& trust_text) {
    const auto preset = trustrec::format_preset("movielens");
    std::istringstream r(ratings_text), t(trust_text);
    auto ratings = trustrec::load_ratings(r, preset.ratings, preset.scale);
    auto trust = trustrec::load_trust(t, preset.trust);
    return trustrec::make_dataset(std::move(ratings.matrix), std::move(trust.network));
}

/// Eleven users around u5; u5 trusts {2, 8, 10} and i13 is rated by
/// {2, 8, 11, 16, 20}, with 16 and 20 two hops away.
inline trustrec::Dataset fixture_a() {
    return load(slurp("fixture_a_ratings.tsv"), slurp("fixture_a_trust.tsv"));
}

/// u5 trusts {2, 8, 10}; i13 is rated by {2, 8, 11}.
inline trustrec::Dataset fixture_b() {
    return load(slurp("fixture_b_ratings.tsv"), slurp("fixture_b_trust.tsv"));
}

/// fixture_b plus a rating of i13 by u5, so that the pair can be held out.
inline trustrec::Dataset fixture_b_with_target() {
    return load(slurp("fixture_b_ratings.tsv") + "5\t13\t4\n", slurp("fixture_b_trust.tsv"));
}

}  // namespace fixtures
