#pragma once

#include <span>
#include <vector>

#include "sfde/report.hpp"

namespace sfde::scalar {

/// The power potential psi(r) = |r|^{m+1}/(m+1) with exponent m in [0, 1].
/// At m = 0 its subdifferential is the multivalued sign; for m > 0 it is the
/// odd power |r|^m sgn(r).
struct PowerNonlinearity {
    double m;
    explicit PowerNonlinearity(double exponent);
};

/// Yosida/Moreau regularization parameter eps_y > 0.
struct YosidaRegularization {
    double eps_y;
    explicit YosidaRegularization(double eps);
};

/// Smoothing parameter delta in (0, 1].
struct DeltaSmoothing {
    double delta;
    explicit DeltaSmoothing(double d);
};

/// Closed interval [lo, hi]; the value set of the subdifferential.
struct PhiInterval {
    double lo;
    double hi;
    bool singleton() const { return lo == hi; }
};

double psi(const PowerNonlinearity& nl, double r);

/// Subdifferential of psi at r. Singleton except for m = 0, r = 0, where it
/// is [-1, 1].
PhiInterval phi_set(const PowerNonlinearity& nl, double r);

/// Minimal-section norm inf{|eta| : eta in phi(r)}. Zero at r = 0 for m = 0.
double phi_min_section(const PowerNonlinearity& nl, double r);

/// Resolvent (I + eps*phi)^{-1} r: the unique s with s + eps*phi(s) owning r.
/// Closed form for m = 0 (soft threshold) and m = 1; bracketing bisection
/// plus one Newton polish otherwise.
double resolvent(const PowerNonlinearity& nl, double eps_y, double r);

/// Yosida approximant phi^eps(r) = (r - resolvent(r))/eps.
double yosida_phi(const PowerNonlinearity& nl, double eps_y, double r);

/// Pointwise a.e. derivative of the Yosida approximant; takes the value
/// 1/eps at kinks (the Lipschitz bound).
double yosida_dphi(const PowerNonlinearity& nl, double eps_y, double r);

/// Moreau envelope psi^eps(r) = (eps/2)*phi^eps(r)^2 + psi(J^eps r).
double moreau_psi(const PowerNonlinearity& nl, double eps_y, double r);

/// Smoothed potential psi^delta(r) = ((r^2+delta)^{(m+1)/2} - delta^{(m+1)/2})/(m+1).
double smoothed_psi(const PowerNonlinearity& nl, double delta, double r);

/// phi^delta(r) = (r^2+delta)^{(m-1)/2} r.
double smoothed_phi(const PowerNonlinearity& nl, double delta, double r);

/// d/dr phi^delta(r) = (r^2+delta)^{(m-3)/2} (delta + m r^2), positive for delta > 0.
double smoothed_dphi(const PowerNonlinearity& nl, double delta, double r);

/// Huber function: the m = 0 Moreau envelope in closed form.
double huber(double eps_y, double r);

/// Evaluates the certified inequality set for the regularized family over a
/// grid of points (and pairs drawn from pair_grid x pair_grid):
///   (a) psi(J^eps r) <= psi^eps(r) <= psi(r)
///   (b) |psi(r) - psi^eps(r)| <= eps * |phi(r)|^2   (minimal section)
///   (c) (phi^{e1}(a) - phi^{e2}(b))(a - b) >= -(e1+e2)(1 + a^2 + b^2)
///   (d) phi^d(r) r >= (m+1) psi^d(r) - 1
///       dphi^d(r) r^2 <= (m+1)^2 psi^d(r) + (m+1) delta^{(m+1)/2}
///   (e) |psi^d(r) - psi(r)| <= 2/(m+1) * delta^{(m+1)/2}
/// plus, for m = 0, the Huber identity |psi^eps - huber| <= 1e-12.
/// Each check reports its worst margin and the point attaining it.
CertificateReport verify_inequalities(const PowerNonlinearity& nl,
                                      std::span<const double> eps_values,
                                      std::span<const double> delta_values,
                                      std::span<const double> r_grid,
                                      std::span<const double> pair_grid);

/// Single-regularization convenience wrapper.
CertificateReport verify_inequalities(const PowerNonlinearity& nl,
                                      const YosidaRegularization& yr,
                                      const DeltaSmoothing& ds,
                                      std::span<const double> r_grid);

std::vector<double> linspace_grid(double lo, double hi, double step);

}  // namespace sfde::scalar
