#include "sfde/scalar.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sfde {

bool CertificateReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.pass; });
}

void CertificateReport::observe(const std::string& name, double margin,
                                double tol, nlohmann::json point) {
    CheckResult* slot = nullptr;
    for (auto& c : checks) {
        if (c.name == name) {
            slot = &c;
            break;
        }
    }
    if (!slot) {
        checks.push_back(CheckResult{name, true, margin, point, 0});
        slot = &checks.back();
        slot->worst_margin = margin;
        slot->worst_point = std::move(point);
        slot->checked = 1;
        if (margin < -tol) slot->pass = false;
        return;
    }
    ++slot->checked;
    if (margin < slot->worst_margin) {
        slot->worst_margin = margin;
        slot->worst_point = std::move(point);
    }
    if (margin < -tol) slot->pass = false;
}

nlohmann::json CertificateReport::to_json() const {
    nlohmann::json out;
    out["all_pass"] = all_pass();
    auto arr = nlohmann::json::array();
    for (const auto& c : checks) {
        arr.push_back({{"name", c.name},
                       {"pass", c.pass},
                       {"worst_margin", c.worst_margin},
                       {"worst_point", c.worst_point},
                       {"checked", c.checked}});
    }
    out["checks"] = arr;
    return out;
}

namespace scalar {

PowerNonlinearity::PowerNonlinearity(double exponent) : m(exponent) {
    if (!(m >= 0.0 && m <= 1.0))
        throw std::invalid_argument("PowerNonlinearity: m must lie in [0,1]");
}

YosidaRegularization::YosidaRegularization(double eps) : eps_y(eps) {
    if (!(eps_y > 0.0))
        throw std::invalid_argument("YosidaRegularization: eps_y must be > 0");
}

DeltaSmoothing::DeltaSmoothing(double d) : delta(d) {
    if (!(delta > 0.0 && delta <= 1.0))
        throw std::invalid_argument("DeltaSmoothing: delta must lie in (0,1]");
}

double psi(const PowerNonlinearity& nl, double r) {
    if (nl.m == 0.0) return std::abs(r);
    if (nl.m == 1.0) return 0.5 * r * r;
    return std::pow(std::abs(r), nl.m + 1.0) / (nl.m + 1.0);
}

PhiInterval phi_set(const PowerNonlinearity& nl, double r) {
    if (nl.m == 0.0) {
        if (r > 0.0) return {1.0, 1.0};
        if (r < 0.0) return {-1.0, -1.0};
        return {-1.0, 1.0};
    }
    double v = (nl.m == 1.0) ? r
                             : std::copysign(std::pow(std::abs(r), nl.m), r);
    return {v, v};
}

double phi_min_section(const PowerNonlinearity& nl, double r) {
    if (nl.m == 0.0) return r == 0.0 ? 0.0 : 1.0;
    if (nl.m == 1.0) return std::abs(r);
    return std::pow(std::abs(r), nl.m);
}

double resolvent(const PowerNonlinearity& nl, double eps_y, double r) {
    if (!(eps_y > 0.0)) throw std::invalid_argument("resolvent: eps_y <= 0");
    if (nl.m == 0.0) {
        double mag = std::abs(r) - eps_y;
        return mag > 0.0 ? std::copysign(mag, r) : 0.0;
    }
    if (nl.m == 1.0) return r / (1.0 + eps_y);
    if (r == 0.0) return 0.0;

    // s + eps |s|^m sgn(s) = r is odd and strictly increasing; the root has
    // the sign of r and lies in [0, |r|].
    const double m = nl.m;
    const double mag = std::abs(r);
    const double tol = 1e-13 * (1.0 + mag);
    auto residual = [&](double s) { return s + eps_y * std::pow(s, m) - mag; };

    double lo = 0.0, hi = mag, s = 0.5 * mag;
    for (int it = 0; it < 200; ++it) {
        double f = residual(s);
        if (std::abs(f) <= tol) break;
        (f > 0.0 ? hi : lo) = s;
        s = 0.5 * (lo + hi);
    }
    if (s > 0.0) {
        double deriv = 1.0 + eps_y * m * std::pow(s, m - 1.0);
        double polished = s - residual(s) / deriv;
        if (polished > 0.0 && polished <= mag) s = polished;
    }
    return std::copysign(s, r);
}

double yosida_phi(const PowerNonlinearity& nl, double eps_y, double r) {
    if (nl.m == 0.0) return std::clamp(r / eps_y, -1.0, 1.0);
    if (nl.m == 1.0) return r / (1.0 + eps_y);
    return (r - resolvent(nl, eps_y, r)) / eps_y;
}

double yosida_dphi(const PowerNonlinearity& nl, double eps_y, double r) {
    if (nl.m == 0.0) return std::abs(r) <= eps_y ? 1.0 / eps_y : 0.0;
    if (nl.m == 1.0) return 1.0 / (1.0 + eps_y);
    double s = std::abs(resolvent(nl, eps_y, r));
    if (s == 0.0) return 1.0 / eps_y;
    double dphi = nl.m * std::pow(s, nl.m - 1.0);
    return (1.0 - 1.0 / (1.0 + eps_y * dphi)) / eps_y;
}

double moreau_psi(const PowerNonlinearity& nl, double eps_y, double r) {
    double j = resolvent(nl, eps_y, r);
    double yp = (r - j) / eps_y;
    return 0.5 * eps_y * yp * yp + psi(nl, j);
}

double huber(double eps_y, double r) {
    double a = std::abs(r);
    return a <= eps_y ? r * r / (2.0 * eps_y) : a - 0.5 * eps_y;
}

double smoothed_psi(const PowerNonlinearity& nl, double delta, double r) {
    double t = r * r + delta;
    if (nl.m == 0.0) return std::sqrt(t) - std::sqrt(delta);
    if (nl.m == 1.0) return 0.5 * r * r;
    double p = 0.5 * (nl.m + 1.0);
    return (std::pow(t, p) - std::pow(delta, p)) / (nl.m + 1.0);
}

double smoothed_phi(const PowerNonlinearity& nl, double delta, double r) {
    double t = r * r + delta;
    if (nl.m == 0.0) return r / std::sqrt(t);
    if (nl.m == 1.0) return r;
    return std::pow(t, 0.5 * (nl.m - 1.0)) * r;
}

double smoothed_dphi(const PowerNonlinearity& nl, double delta, double r) {
    double t = r * r + delta;
    if (nl.m == 0.0) return delta / (t * std::sqrt(t));
    if (nl.m == 1.0) return 1.0;
    return std::pow(t, 0.5 * (nl.m - 3.0)) * (delta + nl.m * r * r);
}

std::vector<double> linspace_grid(double lo, double hi, double step) {
    if (!(step > 0.0) || !(hi >= lo))
        throw std::invalid_argument("linspace_grid: bad range");
    std::vector<double> g;
    long count = std::lround((hi - lo) / step);
    g.reserve(count + 1);
    for (long i = 0; i <= count; ++i) g.push_back(lo + i * step);
    return g;
}

namespace {

nlohmann::json pt(const PowerNonlinearity& nl,
                  std::initializer_list<std::pair<const char*, double>> kv) {
    nlohmann::json j{{"m", nl.m}};
    for (auto& [k, v] : kv) j[k] = v;
    return j;
}

}  // namespace

CertificateReport verify_inequalities(const PowerNonlinearity& nl,
                                      std::span<const double> eps_values,
                                      std::span<const double> delta_values,
                                      std::span<const double> r_grid,
                                      std::span<const double> pair_grid) {
    if (r_grid.empty())
        throw std::invalid_argument("verify_inequalities: empty r_grid");
    CertificateReport rep;
    const double mp1 = nl.m + 1.0;

    for (double eps : eps_values) {
        YosidaRegularization yr(eps);
        for (double r : r_grid) {
            double j = resolvent(nl, eps, r);
            double env = moreau_psi(nl, eps, r);
            double tol = 1e-12 * (1.0 + std::abs(psi(nl, r)));
            rep.observe("moreau_sandwich_lower", env - psi(nl, j), tol,
                        pt(nl, {{"eps", eps}, {"r", r}}));
            rep.observe("moreau_sandwich_upper", psi(nl, r) - env, tol,
                        pt(nl, {{"eps", eps}, {"r", r}}));
            double sec = phi_min_section(nl, r);
            rep.observe("envelope_error_bound",
                        eps * sec * sec - std::abs(psi(nl, r) - env), tol,
                        pt(nl, {{"eps", eps}, {"r", r}}));
            if (nl.m == 0.0)
                rep.observe("huber_identity",
                            1e-12 - std::abs(env - huber(eps, r)), 0.0,
                            pt(nl, {{"eps", eps}, {"r", r}}));
        }
    }

    // Cross-parameter monotonicity defect on pairs (a, b).
    if (!pair_grid.empty()) {
        for (double e1 : eps_values) {
            for (double e2 : eps_values) {
                std::vector<double> phi1(pair_grid.size()), phi2(pair_grid.size());
                for (size_t i = 0; i < pair_grid.size(); ++i) {
                    phi1[i] = yosida_phi(nl, e1, pair_grid[i]);
                    phi2[i] = yosida_phi(nl, e2, pair_grid[i]);
                }
                for (size_t i = 0; i < pair_grid.size(); ++i) {
                    double a = pair_grid[i];
                    for (size_t k = 0; k < pair_grid.size(); ++k) {
                        double b = pair_grid[k];
                        double lhs = (phi1[i] - phi2[k]) * (a - b);
                        double bound = (e1 + e2) * (1.0 + a * a + b * b);
                        rep.observe(
                            "cross_monotonicity", lhs + bound, 1e-12 * bound,
                            pt(nl, {{"eps1", e1}, {"eps2", e2}, {"a", a}, {"b", b}}));
                    }
                }
            }
        }
    }

    for (double delta : delta_values) {
        DeltaSmoothing ds(delta);
        double shift = std::pow(delta, 0.5 * mp1);
        for (double r : r_grid) {
            double sp = smoothed_psi(nl, delta, r);
            double tol = 1e-12 * (1.0 + std::abs(sp) + r * r);
            rep.observe("smoothed_coercivity",
                        smoothed_phi(nl, delta, r) * r - (mp1 * sp - 1.0), tol,
                        pt(nl, {{"delta", delta}, {"r", r}}));
            rep.observe("smoothed_curvature_bound",
                        mp1 * mp1 * sp + mp1 * shift -
                            smoothed_dphi(nl, delta, r) * r * r,
                        tol, pt(nl, {{"delta", delta}, {"r", r}}));
            rep.observe("smoothed_uniform_error",
                        (2.0 / mp1) * shift - std::abs(sp - psi(nl, r)), tol,
                        pt(nl, {{"delta", delta}, {"r", r}}));
            rep.observe("smoothed_convexity", smoothed_dphi(nl, delta, r), 0.0,
                        pt(nl, {{"delta", delta}, {"r", r}}));
        }
    }
    return rep;
}

CertificateReport verify_inequalities(const PowerNonlinearity& nl,
                                      const YosidaRegularization& yr,
                                      const DeltaSmoothing& ds,
                                      std::span<const double> r_grid) {
    double eps[] = {yr.eps_y};
    double del[] = {ds.delta};
    return verify_inequalities(nl, eps, del, r_grid, r_grid);
}

}  // namespace scalar
}  // namespace sfde
