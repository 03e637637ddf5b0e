#include "trustrec/evaluation.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>

namespace trustrec {

Segment parse_segment(std::string_view name) {
    if (name == "no") return Segment::NoRating;
    if (name == "few") return Segment::FewRating;
    if (name == "regular") return Segment::Regular;
    if (name == "coldstart") return Segment::ColdStart;
    throw std::invalid_argument("unknown segment '" + std::string(name) + "'");
}

bool segment_contains(Segment s, ColdStartClass c) {
    switch (s) {
        case Segment::NoRating: return c == ColdStartClass::NoRating;
        case Segment::FewRating: return c == ColdStartClass::FewRating;
        case Segment::Regular: return c == ColdStartClass::Regular;
        case Segment::ColdStart: return c != ColdStartClass::Regular;
    }
    return false;
}

Metrics compute_metrics(std::span<const Residual> residuals) {
    Metrics m;
    if (residuals.empty()) return m;

    struct Acc {
        double abs = 0.0;
        double sq = 0.0;
        std::size_t n = 0;
    };
    Acc all;
    std::map<UserId, Acc> users;
    for (const Residual& r : residuals) {
        all.abs += std::abs(r.error);
        all.sq += r.error * r.error;
        ++all.n;
        Acc& u = users[r.user];
        u.abs += std::abs(r.error);
        u.sq += r.error * r.error;
        ++u.n;
    }
    const double n = static_cast<double>(all.n);
    m.mae = all.abs / n;
    m.rmse = std::sqrt(all.sq / n);

    double maue = 0.0;
    double rmsue = 0.0;
    for (const auto& [id, acc] : users) {
        const double k = static_cast<double>(acc.n);
        maue += acc.abs / k;
        rmsue += std::sqrt(acc.sq / k);
    }
    m.maue = maue / static_cast<double>(users.size());
    m.rmsue = rmsue / static_cast<double>(users.size());
    return m;
}

std::optional<double> coverage(const EvalSummary& report) {
    if (report.attempted == 0) return std::nullopt;
    return static_cast<double>(report.predicted) / static_cast<double>(report.attempted);
}

EvalSummary summarize(std::span<const Attempt> attempts) {
    EvalSummary s;
    s.attempted = attempts.size();
    std::vector<Residual> residuals;
    residuals.reserve(attempts.size());
    for (const Attempt& a : attempts) {
        if (const auto e = a.error()) residuals.push_back({a.user, *e});
    }
    s.predicted = residuals.size();
    s.coverage = coverage(s);
    s.metrics = compute_metrics(residuals);

    // Per-user errors, residuals grouped by user in input order.
    std::map<UserId, std::pair<double, double>> sums;
    for (const Residual& r : residuals) {
        auto& [abs, sq] = sums[r.user];
        abs += std::abs(r.error);
        sq += r.error * r.error;
        ++s.per_user[r.user].count;
    }
    for (auto& [u, e] : s.per_user) {
        const double k = static_cast<double>(e.count);
        e.mae = sums[u].first / k;
        e.rmse = std::sqrt(sums[u].second / k);
    }
    return s;
}

std::map<ColdStartClass, EvalSummary> segment_by_coldstart(const RatingMatrix& matrix,
                                                           const EvalReport& report) {
    std::map<ColdStartClass, std::vector<Attempt>> parts{
        {ColdStartClass::NoRating, {}},
        {ColdStartClass::FewRating, {}},
        {ColdStartClass::Regular, {}},
    };
    for (const Attempt& a : report.attempts) parts[classify_user(matrix, a.user)].push_back(a);
    std::map<ColdStartClass, EvalSummary> out;
    for (const auto& [c, list] : parts) out.emplace(c, summarize(list));
    return out;
}

std::vector<UserId> evaluation_users(const RatingMatrix& matrix, const EvalConfig& config) {
    if (config.user_sample_size && *config.user_sample_size > matrix.user_count()) {
        throw std::invalid_argument("sample of " + std::to_string(*config.user_sample_size) +
                                    " users exceeds the " + std::to_string(matrix.user_count()) +
                                    " users in the dataset");
    }
    std::vector<UserId> pool;
    for (UserId u : matrix.users()) {
        if (matrix.profile(u).empty()) continue;
        if (config.segment && !segment_contains(*config.segment, classify_user(matrix, u))) continue;
        pool.push_back(u);
    }
    if (config.user_sample_size && *config.user_sample_size < pool.size()) {
        std::mt19937_64 rng(config.rng_seed);
        // Partial Fisher-Yates: the first k slots become the sample.
        const std::size_t k = *config.user_sample_size;
        for (std::size_t i = 0; i < k; ++i) {
            std::uniform_int_distribution<std::size_t> pick(i, pool.size() - 1);
            std::swap(pool[i], pool[pick(rng)]);
        }
        pool.resize(k);
        std::sort(pool.begin(), pool.end());
    }
    return pool;
}

EvalReport leave_one_out(const RatingMatrix& matrix, const TrustNetwork& trust,
                         const EvalConfig& config) {
    config.predictor.validate();
    if (matrix.user_count() == 0 || matrix.rating_count() == 0) {
        throw std::invalid_argument("leave-one-out needs a non-empty rating matrix");
    }
    const std::vector<UserId> users = evaluation_users(matrix, config);

    std::vector<std::vector<Attempt>> per_user(users.size());
    auto run_user = [&](std::size_t k) {
        const UserId a = users[k];
        auto& out = per_user[k];
        for (const Rating& r : matrix.profile(a)) {
            const PredictionOutcome p = predict(matrix, trust, a, r.item, config.predictor);
            out.push_back({a, r.item, r.value, p.value, p.contributor_count, p.failure});
        }
    };

    unsigned threads = config.threads == 0 ? std::thread::hardware_concurrency() : config.threads;
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(users.size())));
    if (threads <= 1) {
        for (std::size_t k = 0; k < users.size(); ++k) run_user(k);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back([&] {
                for (std::size_t k = next++; k < users.size(); k = next++) run_user(k);
            });
        }
    }

    EvalReport report;
    for (auto& list : per_user) {
        report.attempts.insert(report.attempts.end(), std::make_move_iterator(list.begin()),
                               std::make_move_iterator(list.end()));
    }
    static_cast<EvalSummary&>(report) = summarize(report.attempts);
    report.segments = segment_by_coldstart(matrix, report);
    return report;
}

}  // namespace trustrec
