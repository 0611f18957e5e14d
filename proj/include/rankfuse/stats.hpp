#pragma once

/** \file stats.hpp
 *  \brief Two-sided paired Student's t-test over per-fold metric values.
 */

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace rankfuse {

struct LengthMismatchError : std::runtime_error {
    LengthMismatchError() : std::runtime_error("paired samples differ in length") {}
};

struct TooFewPairsError : std::runtime_error {
    TooFewPairsError() : std::runtime_error("paired t-test needs at least 2 pairs") {}
};

struct TTestResult {
    double t_statistic = 0.0;
    std::size_t degrees_of_freedom = 0;
    double p_value = 1.0;
    bool significant_at_05 = false;
    bool degenerate_variance = false;  // sd(diff) == 0 with non-zero mean
};

/** Two-sided paired t-test on fold-aligned samples.
 *
 * t = mean(d) / (sd(d) / sqrt(n)) with sample sd; p from the Student's t
 * distribution via the regularized incomplete beta function.
 * Zero-variance differences: all-zero -> t = 0, p = 1; otherwise p = 0
 * with the degenerate flag set.
 */
TTestResult paired_t_test(const std::vector<double>& a, const std::vector<double>& b);

/// Two-sided tail probability of Student's t with df degrees of freedom.
double student_t_two_sided_p(double t, double df);

/// Regularized incomplete beta I_x(a, b), continued-fraction evaluation.
double regularized_incomplete_beta(double a, double b, double x);

}  // namespace rankfuse
