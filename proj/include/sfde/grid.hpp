#pragma once

#include <span>
#include <vector>

#include "sfde/report.hpp"

namespace sfde {

/// Uniform 1D interval (a, b) with n interior nodes and homogeneous
/// Dirichlet data carried implicitly at both ends.
struct Domain1D {
    double a = 0.0;
    double b = 1.0;
    int n = 1;

    Domain1D() = default;
    Domain1D(double left, double right, int interior_nodes);

    double h() const { return (b - a) / (n + 1); }
    double node(int j) const { return a + (j + 1) * h(); }  // j in [0, n)
    double length() const { return b - a; }
    bool operator==(const Domain1D&) const = default;
};

/// Real values on the interior nodes; boundary values are identically zero.
struct GridFunction {
    Domain1D domain;
    std::vector<double> values;

    GridFunction() = default;
    explicit GridFunction(const Domain1D& dom)
        : domain(dom), values(dom.n, 0.0) {}
    GridFunction(const Domain1D& dom, std::vector<double> v);

    int size() const { return static_cast<int>(values.size()); }
    double& operator[](int j) { return values[j]; }
    double operator[](int j) const { return values[j]; }

    GridFunction& operator+=(const GridFunction& o);
    GridFunction& operator-=(const GridFunction& o);
    GridFunction& operator*=(double s);
    /// this += s * o
    void axpy(double s, const GridFunction& o);
    bool all_finite() const;
};

GridFunction operator+(GridFunction u, const GridFunction& v);
GridFunction operator-(GridFunction u, const GridFunction& v);
GridFunction operator*(double s, GridFunction u);

/// Samples f at the interior nodes.
template <class F>
GridFunction sample(const Domain1D& dom, F&& f) {
    GridFunction u(dom);
    for (int j = 0; j < dom.n; ++j) u[j] = f(dom.node(j));
    return u;
}

double l2h_inner(const GridFunction& u, const GridFunction& v);
double l2h_norm(const GridFunction& u);
double lp_norm(const GridFunction& u, double p);
double linf_norm(const GridFunction& u);

/// Squared H^1_0 seminorm: sum over segments of ((u_{j+1}-u_j)^2)/h with the
/// implicit boundary zeros included.
double h1_norm_sq(const GridFunction& u);
double h1_norm(const GridFunction& u);

/// Energy functional (1/(m+1)) * ||u||_{m+1}^{m+1} with h-weighted quadrature.
double varphi_energy(double m, const GridFunction& u);

/// Solves a tridiagonal system in place: lower/upper have size n-1.
/// No pivoting; intended for (column) diagonally dominant systems.
void solve_tridiagonal(std::span<const double> lower, std::span<double> diag,
                       std::span<const double> upper, std::span<double> rhs);

/// Second-difference Dirichlet Laplacian on a Domain1D: the 3-point stencil,
/// its resolvents (I - lambda*Lap)^{-1}, the inverse of -Lap, the discrete
/// sine eigenbasis and the H^-1 inner product it induces.
class DirichletLaplacian {
  public:
    explicit DirichletLaplacian(const Domain1D& dom);

    const Domain1D& domain() const { return dom_; }

    GridFunction apply(const GridFunction& u) const;

    /// (I - lambda * Lap) u = f, lambda >= 0; O(n) Thomas solve.
    GridFunction solve_resolvent(double lambda, const GridFunction& f) const;

    /// -Lap u = f.
    GridFunction inv_neg(const GridFunction& f) const;

    double h_minus1_inner(const GridFunction& u, const GridFunction& v) const;
    double h_minus1_norm_sq(const GridFunction& u) const;
    double h_minus1_norm(const GridFunction& u) const;

    /// lambda_k = (4/h^2) sin^2(k pi / (2(n+1))), k in [1, n].
    double eigenvalue(int k) const;
    /// Raw sine mode e_k(x_j) = sin(k pi j/(n+1)).
    GridFunction sine_mode(int k) const;
    /// Sine mode normalized in the h-weighted L2 inner product.
    GridFunction sine_mode_normalized(int k) const;
    /// Coefficients of u in the normalized sine basis (O(n*n)).
    std::vector<double> sine_coefficients(const GridFunction& u) const;

    /// Orthogonal projection onto the span of the first n_modes sine modes.
    GridFunction galerkin_project(const GridFunction& u, int n_modes) const;

  private:
    Domain1D dom_;
    double inv_h2_;
    void check_domain(const GridFunction& u) const;
};

/// Verifies the discrete subgradient inequality
///   varphi(u) <= (-Lap w, u - y)_{H^-1} + varphi(y)
/// for every y in y_samples, given a selection w with w_j in phi(u_j)
/// (precondition checked to 1e-9). Reports the minimum margin.
CertificateReport subgradient_check(const DirichletLaplacian& lap, double m,
                                    const GridFunction& u,
                                    const GridFunction& w,
                                    std::span<const GridFunction> y_samples);

}  // namespace sfde
