#include "okrl/rkhs.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace okrl {

namespace {

void require_same_kernel(const KernelExpansion& f, const KernelExpansion& g) {
    if (!f.kernel().same_as(g.kernel()))
        throw std::invalid_argument("kernel expansions built on different kernels");
}

}  // namespace

KernelExpansion::KernelExpansion(Kernel kernel, std::vector<double> centers,
                                 std::vector<double> coefficients)
    : kernel_(std::move(kernel)),
      centers_(std::move(centers)),
      coeffs_(std::move(coefficients)) {
    if (centers_.size() != coeffs_.size())
        throw std::invalid_argument("centers and coefficients differ in length");
    for (double c : centers_)
        if (!kernel_.domain().contains(c))
            throw std::domain_error("expansion center outside kernel domain");
}

double KernelExpansion::evaluate(double x) const {
    if (!kernel_.domain().contains(x))
        throw std::domain_error("evaluation point outside kernel domain");
    double acc = 0.0;
    for (std::size_t i = 0; i < centers_.size(); ++i)
        acc += coeffs_[i] * kernel_.eval(centers_[i], x);
    return acc;
}

KernelExpansion KernelExpansion::merged() const {
    std::vector<double> centers, coeffs;
    std::unordered_map<double, std::size_t> where;
    centers.reserve(centers_.size());
    coeffs.reserve(centers_.size());
    for (std::size_t i = 0; i < centers_.size(); ++i) {
        auto [it, inserted] = where.try_emplace(centers_[i], centers.size());
        if (inserted) {
            centers.push_back(centers_[i]);
            coeffs.push_back(coeffs_[i]);
        } else {
            coeffs[it->second] += coeffs_[i];
        }
    }
    return {kernel_, std::move(centers), std::move(coeffs)};
}

double inner(const KernelExpansion& f, const KernelExpansion& g) {
    require_same_kernel(f, g);
    const auto& cf = f.centers();
    const auto& af = f.coefficients();
    const auto& cg = g.centers();
    const auto& ag = g.coefficients();
    double acc = 0.0;
    for (std::size_t i = 0; i < cf.size(); ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < cg.size(); ++j)
            row += ag[j] * f.kernel().eval(cf[i], cg[j]);
        acc += af[i] * row;
    }
    return acc;
}

double norm(const KernelExpansion& f) {
    return std::sqrt(std::max(inner(f, f), 0.0));
}

KernelExpansion combine(double a, const KernelExpansion& f, double b,
                        const KernelExpansion& g) {
    require_same_kernel(f, g);
    std::vector<double> centers, coeffs;
    centers.reserve(f.size() + g.size());
    coeffs.reserve(f.size() + g.size());
    auto append = [&](double s, const KernelExpansion& e) {
        for (std::size_t i = 0; i < e.size(); ++i) {
            const double c = s * e.coefficients()[i];
            if (c != 0.0) {
                centers.push_back(e.centers()[i]);
                coeffs.push_back(c);
            }
        }
    };
    append(a, f);
    append(b, g);
    return {f.kernel(), std::move(centers), std::move(coeffs)};
}

KernelExpansion apply_step_operator(const KernelExpansion& f, double x,
                                    double a, double lambda) {
    const double al = a * lambda;
    if (al < 0.0 || al >= 1.0)
        throw std::invalid_argument("step operator requires 0 <= a*lambda < 1");
    if (!f.kernel().domain().contains(x))
        throw std::domain_error("step operator point outside kernel domain");
    if (a == 0.0) return f;
    std::vector<double> centers = f.centers();
    std::vector<double> coeffs = f.coefficients();
    const double fx = f.evaluate(x);
    for (double& c : coeffs) c *= 1.0 - al;
    centers.push_back(x);
    coeffs.push_back(-a * fx);
    return {f.kernel(), std::move(centers), std::move(coeffs)};
}

double distance(const KernelExpansion& f, const KernelExpansion& g) {
    return norm(combine(1.0, f, -1.0, g));
}

double TargetFunction::norm_defect() const {
    return std::abs(norm(expansion) - declared_norm);
}

}  // namespace okrl
