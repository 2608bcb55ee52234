#include "okrl/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "okrl/rng.hpp"

namespace okrl {

namespace {

[[noreturn]] void domain_violation(double x, const Interval& d) {
    throw std::domain_error("point " + std::to_string(x) +
                            " outside kernel domain [" + std::to_string(d.lo) +
                            ", " + std::to_string(d.hi) + "]");
}

}  // namespace

Kernel Kernel::gaussian(double bandwidth, Interval domain) {
    if (!(bandwidth > 0.0))
        throw std::invalid_argument("gaussian bandwidth must be positive");
    if (!(domain.lo < domain.hi))
        throw std::invalid_argument("kernel domain must have positive length");
    Kernel k;
    k.family_ = Family::gaussian;
    k.bandwidth_ = bandwidth;
    k.domain_ = domain;
    k.sup_diag_ = 1.0;  // K(x,x) = e^0
    return k;
}

Kernel Kernel::tabulated(std::vector<double> values, int m, Interval domain,
                         double sup_diag) {
    if (m < 2 || static_cast<int>(values.size()) != m * m)
        throw std::invalid_argument("tabulated kernel needs an m x m table, m >= 2");
    if (!(domain.lo < domain.hi))
        throw std::invalid_argument("kernel domain must have positive length");
    if (!(sup_diag > 0.0))
        throw std::invalid_argument("sup_diag bound must be positive");
    // enforce symmetry of the table
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < i; ++j) {
            const double s = 0.5 * (values[i * m + j] + values[j * m + i]);
            values[i * m + j] = values[j * m + i] = s;
        }
    Kernel k;
    k.family_ = Family::tabulated;
    k.bandwidth_ = 0.0;
    k.domain_ = domain;
    k.sup_diag_ = sup_diag;
    k.table_ = std::make_shared<const std::vector<double>>(std::move(values));
    k.table_m_ = m;
    return k;
}

double Kernel::eval(double x, double y) const {
    if (!domain_.contains(x)) domain_violation(x, domain_);
    if (!domain_.contains(y)) domain_violation(y, domain_);
    if (family_ == Family::gaussian) {
        const double t = (x - y) / bandwidth_;
        return std::exp(-t * t);
    }
    // bilinear interpolation on the uniform table grid
    const int m = table_m_;
    const double h = domain_.length() / (m - 1);
    auto locate = [&](double p, int& i, double& f) {
        const double s = (p - domain_.lo) / h;
        i = std::min(static_cast<int>(s), m - 2);
        f = s - i;
    };
    int i, j;
    double fx, fy;
    locate(x, i, fx);
    locate(y, j, fy);
    const auto& t = *table_;
    const double v00 = t[i * m + j], v01 = t[i * m + j + 1];
    const double v10 = t[(i + 1) * m + j], v11 = t[(i + 1) * m + j + 1];
    return (1 - fx) * ((1 - fy) * v00 + fy * v01) + fx * ((1 - fy) * v10 + fy * v11);
}

Eigen::MatrixXd Kernel::gram(std::span<const double> centers) const {
    const auto n = static_cast<Eigen::Index>(centers.size());
    Eigen::MatrixXd g(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        g(i, i) = eval(centers[i], centers[i]);
        for (Eigen::Index j = 0; j < i; ++j)
            g(i, j) = g(j, i) = eval(centers[i], centers[j]);
    }
    return g;
}

bool Kernel::same_as(const Kernel& other) const {
    if (family_ != other.family_ || !(domain_ == other.domain_)) return false;
    if (family_ == Family::gaussian) return bandwidth_ == other.bandwidth_;
    return table_ == other.table_;
}

KernelRegularityReport check_regularity(const Kernel& kernel, double s,
                                        int trials, std::uint64_t seed) {
    if (!(s >= 0.0 && s <= 1.0))
        throw std::invalid_argument("regularity order s must lie in [0, 1]");
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");

    const Interval d = kernel.domain();
    auto draw = [&](std::uint64_t t, std::uint64_t slot) {
        return d.lo + rng::uniform01(seed, 0, t, slot) * d.length();
    };

    KernelRegularityReport report;
    report.order_s = s;
    for (int t = 0; t < trials; ++t) {
        const double u1 = draw(t, 0), u2 = draw(t, 1);
        const double v1 = draw(t, 2), v2 = draw(t, 3);
        if (u1 == u2 || v1 == v2) continue;
        const double du = std::pow(std::abs(u1 - u2), s);
        const double dv = std::pow(std::abs(v1 - v2), s);
        const double dd = kernel(u1, v1) - kernel(u2, v1) - kernel(u1, v2) + kernel(u2, v2);
        report.mixed_constant = std::max(report.mixed_constant, std::abs(dd) / (du * dv));
        for (double v : {v1, v2}) {
            const double diff = std::abs(kernel(u1, v) - kernel(u2, v));
            report.holder_seminorm_estimate =
                std::max(report.holder_seminorm_estimate, diff / du);
        }
        ++report.sample_count;
    }
    return report;
}

}  // namespace okrl
