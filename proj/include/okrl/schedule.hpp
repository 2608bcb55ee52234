#pragma once

#include <optional>
#include <string>
#include <vector>

namespace okrl {

/// Polynomially decaying gain/regularization pair
///   a_k = (k+1)^{-tau1},  lambda_k = (k+1)^{-tau2},
/// admissible only when 0.1 < tau2 < 0.5 < tau1 < 1, tau1 + tau2 < 1 and
/// 3*tau2 < tau1 (all strict). The constructor throws
/// std::invalid_argument listing every violated inequality; use
/// validate_schedule for a non-throwing check.
struct GainSchedule {
    double tau1;
    double tau2;

    GainSchedule(double tau1, double tau2);

    double gain(long k) const;          // a_k
    double reg(long k) const;           // lambda_k
    double step_product(long k) const;  // a_k * lambda_k = (k+1)^{-(tau1+tau2)}
};

struct ScheduleValidation {
    std::optional<GainSchedule> schedule;  // engaged iff violations empty
    std::vector<std::string> violations;
};

ScheduleValidation validate_schedule(double tau1, double tau2);

/// prod_{k=from}^{to} (1 - a_k lambda_k), accumulated in log space; the
/// empty product (from > to) is 1. The k=0 factor is exactly 0, so any
/// product containing it is exactly 0.
double contraction_product(const GainSchedule& s, long from, long to);

}  // namespace okrl
