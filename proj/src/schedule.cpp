#include "okrl/schedule.hpp"

#include <cmath>
#include <stdexcept>

namespace okrl {

ScheduleValidation validate_schedule(double tau1, double tau2) {
    ScheduleValidation v;
    auto fail = [&](const std::string& s) { v.violations.push_back(s); };
    if (!(tau2 > 0.1)) fail("tau2 > 0.1");
    if (!(tau2 < 0.5)) fail("tau2 < 0.5");
    if (!(tau1 > 0.5)) fail("tau1 > 0.5");
    if (!(tau1 < 1.0)) fail("tau1 < 1");
    if (!(tau1 + tau2 < 1.0)) fail("tau1 + tau2 < 1");
    if (!(3.0 * tau2 < tau1)) fail("3*tau2 < tau1");
    if (v.violations.empty()) v.schedule.emplace(tau1, tau2);
    return v;
}

GainSchedule::GainSchedule(double t1, double t2) : tau1(t1), tau2(t2) {
    std::string msg;
    auto fail = [&](const char* s) {
        if (!msg.empty()) msg += ", ";
        msg += s;
    };
    if (!(t2 > 0.1)) fail("tau2 > 0.1");
    if (!(t2 < 0.5)) fail("tau2 < 0.5");
    if (!(t1 > 0.5)) fail("tau1 > 0.5");
    if (!(t1 < 1.0)) fail("tau1 < 1");
    if (!(t1 + t2 < 1.0)) fail("tau1 + tau2 < 1");
    if (!(3.0 * t2 < t1)) fail("3*tau2 < tau1");
    if (!msg.empty())
        throw std::invalid_argument("gain schedule violates: " + msg);
}

double GainSchedule::gain(long k) const { return std::pow(k + 1.0, -tau1); }

double GainSchedule::reg(long k) const { return std::pow(k + 1.0, -tau2); }

double GainSchedule::step_product(long k) const {
    return std::pow(k + 1.0, -(tau1 + tau2));
}

double contraction_product(const GainSchedule& s, long from, long to) {
    if (from > to) return 1.0;
    if (from <= 0) return 0.0;  // 1 - a_0 lambda_0 = 0
    double log_acc = 0.0;
    for (long k = from; k <= to; ++k)
        log_acc += std::log1p(-s.step_product(k));
    return std::exp(log_acc);
}

}  // namespace okrl
