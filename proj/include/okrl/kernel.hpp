#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace okrl {

/// Closed interval on the real line; the compact input domain.
struct Interval {
    double lo = 0.0;
    double hi = 1.0;

    bool contains(double x) const { return x >= lo && x <= hi; }
    double length() const { return hi - lo; }
    bool operator==(const Interval&) const = default;
};

/// A continuous positive-definite kernel on a closed interval, together
/// with its diagonal supremum kappa = sup_x K(x,x).
///
/// Two families are supported: the Gaussian kernel
/// K(x,y) = exp(-((x-y)/bandwidth)^2) with kappa = 1, and kernels
/// tabulated on a uniform grid over domain x domain (bilinearly
/// interpolated, symmetrized at construction). Values are immutable after
/// construction; a Kernel can be shared and evaluated concurrently.
class Kernel {
  public:
    enum class Family { gaussian, tabulated };

    static Kernel gaussian(double bandwidth, Interval domain = {0.0, 1.0});

    /// `values` holds K on an m x m uniform grid over domain^2, row-major.
    /// The table is symmetrized; `sup_diag` is the caller-declared kappa.
    static Kernel tabulated(std::vector<double> values, int m,
                            Interval domain, double sup_diag);

    Family family() const { return family_; }
    double bandwidth() const { return bandwidth_; }
    const Interval& domain() const { return domain_; }
    double sup_diag() const { return sup_diag_; }

    /// K(x,y). Throws std::domain_error if either point leaves the domain.
    double eval(double x, double y) const;
    double operator()(double x, double y) const { return eval(x, y); }

    /// Gram matrix G[i][j] = K(c_i, c_j); empty input gives a 0x0 matrix.
    Eigen::MatrixXd gram(std::span<const double> centers) const;

    /// Same kernel function: both expansions built on it are compatible.
    bool same_as(const Kernel& other) const;

  private:
    Kernel() = default;

    Family family_ = Family::gaussian;
    double bandwidth_ = 1.0;
    Interval domain_{0.0, 1.0};
    double sup_diag_ = 1.0;
    std::shared_ptr<const std::vector<double>> table_;
    int table_m_ = 0;
};

/// Empirical Hoelder-regularity estimates for a kernel at order s.
/// Both constants are suprema over the tested sample, hence lower bounds
/// of the true constants.
struct KernelRegularityReport {
    double order_s = 0.0;
    double mixed_constant = 0.0;           // sup |K(u1,v1)-K(u2,v1)-K(u1,v2)+K(u2,v2)| / (|du|^s |dv|^s)
    double holder_seminorm_estimate = 0.0;  // sup |K(u1,v)-K(u2,v)| / |du|^s
    int sample_count = 0;                   // non-degenerate quadruples used
};

/// Samples `trials` random quadruples (u1,u2,v1,v2) from the kernel domain
/// and reports the empirical mixed and plain Hoelder constants of order s.
/// Quadruples with u1 == u2 or v1 == v2 are skipped.
/// Throws std::invalid_argument unless 0 <= s <= 1 and trials >= 1.
KernelRegularityReport check_regularity(const Kernel& kernel, double s,
                                        int trials, std::uint64_t seed);

}  // namespace okrl
