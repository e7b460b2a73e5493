#include "sfde/grid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "sfde/scalar.hpp"

namespace sfde {

Domain1D::Domain1D(double left, double right, int interior_nodes)
    : a(left), b(right), n(interior_nodes) {
    if (!(b > a) || n < 1)
        throw std::invalid_argument("Domain1D: need b > a and n >= 1");
}

GridFunction::GridFunction(const Domain1D& dom, std::vector<double> v)
    : domain(dom), values(std::move(v)) {
    if (static_cast<int>(values.size()) != dom.n)
        throw std::invalid_argument("GridFunction: value count != n");
}

static void check_same_domain(const GridFunction& u, const GridFunction& v) {
    if (!(u.domain == v.domain))
        throw std::invalid_argument("GridFunction: domain mismatch");
}

GridFunction& GridFunction::operator+=(const GridFunction& o) {
    check_same_domain(*this, o);
    for (int j = 0; j < size(); ++j) values[j] += o.values[j];
    return *this;
}

GridFunction& GridFunction::operator-=(const GridFunction& o) {
    check_same_domain(*this, o);
    for (int j = 0; j < size(); ++j) values[j] -= o.values[j];
    return *this;
}

GridFunction& GridFunction::operator*=(double s) {
    for (auto& x : values) x *= s;
    return *this;
}

void GridFunction::axpy(double s, const GridFunction& o) {
    check_same_domain(*this, o);
    for (int j = 0; j < size(); ++j) values[j] += s * o.values[j];
}

bool GridFunction::all_finite() const {
    for (double x : values)
        if (!std::isfinite(x)) return false;
    return true;
}

GridFunction operator+(GridFunction u, const GridFunction& v) {
    u += v;
    return u;
}

GridFunction operator-(GridFunction u, const GridFunction& v) {
    u -= v;
    return u;
}

GridFunction operator*(double s, GridFunction u) {
    u *= s;
    return u;
}

double l2h_inner(const GridFunction& u, const GridFunction& v) {
    check_same_domain(u, v);
    double s = 0.0;
    for (int j = 0; j < u.size(); ++j) s += u[j] * v[j];
    return s * u.domain.h();
}

double l2h_norm(const GridFunction& u) { return std::sqrt(l2h_inner(u, u)); }

double lp_norm(const GridFunction& u, double p) {
    if (!(p >= 1.0)) throw std::invalid_argument("lp_norm: p must be >= 1");
    double s = 0.0;
    for (double x : u.values) s += std::pow(std::abs(x), p);
    return std::pow(u.domain.h() * s, 1.0 / p);
}

double linf_norm(const GridFunction& u) {
    double s = 0.0;
    for (double x : u.values) s = std::max(s, std::abs(x));
    return s;
}

double h1_norm_sq(const GridFunction& u) {
    const double h = u.domain.h();
    double s = 0.0, prev = 0.0;
    for (int j = 0; j < u.size(); ++j) {
        double d = u[j] - prev;
        s += d * d;
        prev = u[j];
    }
    s += prev * prev;  // closing segment to the right boundary zero
    return s / h;
}

double h1_norm(const GridFunction& u) { return std::sqrt(h1_norm_sq(u)); }

double varphi_energy(double m, const GridFunction& u) {
    scalar::PowerNonlinearity nl(m);
    double s = 0.0;
    for (double x : u.values) s += scalar::psi(nl, x);
    return u.domain.h() * s;
}

void solve_tridiagonal(std::span<const double> lower, std::span<double> diag,
                       std::span<const double> upper, std::span<double> rhs) {
    const size_t n = diag.size();
    for (size_t i = 1; i < n; ++i) {
        double w = lower[i - 1] / diag[i - 1];
        diag[i] -= w * upper[i - 1];
        rhs[i] -= w * rhs[i - 1];
    }
    rhs[n - 1] /= diag[n - 1];
    for (size_t i = n - 1; i-- > 0;)
        rhs[i] = (rhs[i] - upper[i] * rhs[i + 1]) / diag[i];
}

DirichletLaplacian::DirichletLaplacian(const Domain1D& dom)
    : dom_(dom), inv_h2_(1.0 / (dom.h() * dom.h())) {}

void DirichletLaplacian::check_domain(const GridFunction& u) const {
    if (!(u.domain == dom_))
        throw std::invalid_argument("DirichletLaplacian: domain mismatch");
}

GridFunction DirichletLaplacian::apply(const GridFunction& u) const {
    check_domain(u);
    const int n = dom_.n;
    GridFunction out(dom_);
    for (int j = 0; j < n; ++j) {
        double left = j > 0 ? u[j - 1] : 0.0;
        double right = j + 1 < n ? u[j + 1] : 0.0;
        out[j] = (left - 2.0 * u[j] + right) * inv_h2_;
    }
    return out;
}

GridFunction DirichletLaplacian::solve_resolvent(double lambda,
                                                 const GridFunction& f) const {
    check_domain(f);
    if (!(lambda >= 0.0))
        throw std::invalid_argument("solve_resolvent: lambda must be >= 0");
    if (lambda == 0.0) return f;
    const int n = dom_.n;
    std::vector<double> diag(n, 1.0 + 2.0 * lambda * inv_h2_);
    std::vector<double> off(n - 1, -lambda * inv_h2_);
    GridFunction out = f;
    solve_tridiagonal(off, diag, off, out.values);
    return out;
}

GridFunction DirichletLaplacian::inv_neg(const GridFunction& f) const {
    check_domain(f);
    const int n = dom_.n;
    std::vector<double> diag(n, 2.0 * inv_h2_);
    std::vector<double> off(n - 1, -inv_h2_);
    GridFunction out = f;
    solve_tridiagonal(off, diag, off, out.values);
    return out;
}

double DirichletLaplacian::h_minus1_inner(const GridFunction& u,
                                          const GridFunction& v) const {
    return l2h_inner(u, inv_neg(v));
}

double DirichletLaplacian::h_minus1_norm_sq(const GridFunction& u) const {
    return h_minus1_inner(u, u);
}

double DirichletLaplacian::h_minus1_norm(const GridFunction& u) const {
    return std::sqrt(std::max(0.0, h_minus1_norm_sq(u)));
}

double DirichletLaplacian::eigenvalue(int k) const {
    if (k < 1 || k > dom_.n)
        throw std::out_of_range("eigenvalue: k out of range");
    double s = std::sin(0.5 * k * std::numbers::pi / (dom_.n + 1));
    return 4.0 * inv_h2_ * s * s;
}

GridFunction DirichletLaplacian::sine_mode(int k) const {
    if (k < 1 || k > dom_.n) throw std::out_of_range("sine_mode: k out of range");
    GridFunction e(dom_);
    for (int j = 0; j < dom_.n; ++j)
        e[j] = std::sin(k * std::numbers::pi * (j + 1) / (dom_.n + 1));
    return e;
}

GridFunction DirichletLaplacian::sine_mode_normalized(int k) const {
    GridFunction e = sine_mode(k);
    // ||e_k||^2_{L2_h} = h (n+1)/2 = (b-a)/2 exactly.
    e *= std::sqrt(2.0 / dom_.length());
    return e;
}

std::vector<double> DirichletLaplacian::sine_coefficients(
    const GridFunction& u) const {
    check_domain(u);
    std::vector<double> c(dom_.n);
    for (int k = 1; k <= dom_.n; ++k)
        c[k - 1] = l2h_inner(u, sine_mode_normalized(k));
    return c;
}

GridFunction DirichletLaplacian::galerkin_project(const GridFunction& u,
                                                  int n_modes) const {
    check_domain(u);
    if (n_modes < 1 || n_modes > dom_.n)
        throw std::out_of_range("galerkin_project: n_modes out of range");
    GridFunction out(dom_);
    for (int k = 1; k <= n_modes; ++k) {
        GridFunction e = sine_mode_normalized(k);
        out.axpy(l2h_inner(u, e), e);
    }
    return out;
}

CertificateReport subgradient_check(const DirichletLaplacian& lap, double m,
                                    const GridFunction& u,
                                    const GridFunction& w,
                                    std::span<const GridFunction> y_samples) {
    scalar::PowerNonlinearity nl(m);
    CertificateReport rep;
    for (int j = 0; j < u.size(); ++j) {
        auto box = scalar::phi_set(nl, u[j]);
        double dist = 0.0;
        if (w[j] < box.lo) dist = box.lo - w[j];
        if (w[j] > box.hi) dist = w[j] - box.hi;
        rep.observe("selection_membership", -dist, 1e-9,
                    {{"node", j}, {"u", u[j]}, {"w", w[j]}});
    }
    if (!rep.all_pass()) return rep;

    GridFunction neg_lap_w = -1.0 * lap.apply(w);
    double phi_u = varphi_energy(m, u);
    for (size_t i = 0; i < y_samples.size(); ++i) {
        const GridFunction& y = y_samples[i];
        double margin = lap.h_minus1_inner(neg_lap_w, u - y) +
                        varphi_energy(m, y) - phi_u;
        rep.observe("subgradient_inequality", margin, 1e-9,
                    {{"y_index", i}});
    }
    return rep;
}

}  // namespace sfde
