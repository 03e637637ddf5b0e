#include "trustrec/significance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include <boost/math/distributions/students_t.hpp>

namespace trustrec {

SignificanceResult paired_t_test(std::span<const double> differences) {
    const std::size_t n = differences.size();
    if (n < 2) throw std::invalid_argument("paired test needs at least two common users");

    double sum = 0.0;
    for (double d : differences) sum += d;
    const double mean = sum / static_cast<double>(n);
    double ss = 0.0;
    for (double d : differences) ss += (d - mean) * (d - mean);
    const double sd = std::sqrt(ss / static_cast<double>(n - 1));

    SignificanceResult r;
    r.degrees_of_freedom = n - 1;
    if (sd == 0.0) {
        if (mean == 0.0) {
            r.t_statistic = 0.0;
            r.p_value = 1.0;
        } else {
            r.t_statistic = std::copysign(std::numeric_limits<double>::infinity(), mean);
            r.p_value = 0.0;
        }
        return r;
    }
    r.t_statistic = mean / (sd / std::sqrt(static_cast<double>(n)));
    const boost::math::students_t dist(static_cast<double>(r.degrees_of_freedom));
    const double tail = boost::math::cdf(boost::math::complement(dist, std::abs(r.t_statistic)));
    r.p_value = std::clamp(2.0 * tail, 0.0, 1.0);
    return r;
}

SignificanceResult paired_significance(const EvalSummary& a, const EvalSummary& b) {
    std::vector<double> diffs;
    auto ia = a.per_user.begin();
    auto ib = b.per_user.begin();
    while (ia != a.per_user.end() && ib != b.per_user.end()) {
        if (ia->first < ib->first) {
            ++ia;
        } else if (ib->first < ia->first) {
            ++ib;
        } else {
            diffs.push_back(ia->second.mae - ib->second.mae);
            ++ia;
            ++ib;
        }
    }
    return paired_t_test(diffs);
}

}  // namespace trustrec
