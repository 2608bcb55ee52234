#pragma once

#include <vector>

#include "okrl/kernel.hpp"

namespace okrl {

/// Finite kernel expansion f = sum_i alpha_i K(c_i, .), the concrete
/// representation of every RKHS element in this library. Immutable value
/// type; operations return new expansions.
class KernelExpansion {
  public:
    explicit KernelExpansion(Kernel kernel) : kernel_(std::move(kernel)) {}
    KernelExpansion(Kernel kernel, std::vector<double> centers,
                    std::vector<double> coefficients);

    const Kernel& kernel() const { return kernel_; }
    const std::vector<double>& centers() const { return centers_; }
    const std::vector<double>& coefficients() const { return coeffs_; }
    std::size_t size() const { return centers_.size(); }
    bool empty() const { return centers_.empty(); }

    /// f(x) = sum_i alpha_i K(c_i, x).
    double evaluate(double x) const;

    /// Equivalent expansion with exactly-equal centers merged (coefficients
    /// summed, first-occurrence order kept).
    KernelExpansion merged() const;

  private:
    Kernel kernel_;
    std::vector<double> centers_;
    std::vector<double> coeffs_;
};

/// <f, g>_K = sum_ij alpha_i beta_j K(c_i, d_j). Throws
/// std::invalid_argument when the kernels differ.
double inner(const KernelExpansion& f, const KernelExpansion& g);

/// sqrt(<f,f>) clamped below at 0.
double norm(const KernelExpansion& f);

/// a*f + b*g by concatenation; zero coefficients are dropped.
KernelExpansion combine(double a, const KernelExpansion& f, double b,
                        const KernelExpansion& g);

/// One homogeneous factor of the error recursions:
/// (I - a(K_x (x) K_x + lambda I)) f = (1 - a*lambda) f - a f(x) K_x.
/// Throws std::invalid_argument when a*lambda >= 1 or a*lambda < 0.
KernelExpansion apply_step_operator(const KernelExpansion& f, double x,
                                    double a, double lambda);

/// ||f - g||_K.
double distance(const KernelExpansion& f, const KernelExpansion& g);

/// The unknown function being estimated, with its declared RKHS norm so
/// the Gram-computed norm can be checked against it.
struct TargetFunction {
    KernelExpansion expansion;
    double declared_norm = 0.0;

    /// |norm(expansion) - declared_norm|; should stay within 1e-10.
    double norm_defect() const;
};

}  // namespace okrl
