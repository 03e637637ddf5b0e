#pragma once

#include <cstddef>
#include <span>

#include "trustrec/evaluation.hpp"

namespace trustrec {

struct SignificanceResult {
    double t_statistic = 0.0;
    std::size_t degrees_of_freedom = 0;
    /// Two-tailed.
    double p_value = 1.0;
};

/// Two-tailed one-sample t-test of the differences against zero.
/// With zero spread the result is degenerate: p = 1 when the mean difference
/// is zero, p = 0 otherwise. Throws std::invalid_argument for fewer than two
/// differences.
SignificanceResult paired_t_test(std::span<const double> differences);

/// Paired test on per-user MAE over users present in both reports;
/// differences are a - b.
SignificanceResult paired_significance(const EvalSummary& a, const EvalSummary& b);

}  // namespace trustrec
