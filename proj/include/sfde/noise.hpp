#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "sfde/grid.hpp"

namespace sfde {

/// Seeded Brownian increments, one stream per mode: increments[step*K + k]
/// ~ Normal(0, dt_fine), reproducible from (seed, mode, step).
struct WienerPath {
    std::uint64_t seed = 0;
    double dt_fine = 0.0;
    int n_steps = 0;
    int modes = 0;
    std::vector<double> increments;

    static WienerPath sample(std::uint64_t seed, double dt_fine, int n_steps,
                             int modes);

    /// Sums increments in blocks: the same Brownian motion at resolution
    /// factor*dt_fine. factor must divide n_steps.
    WienerPath coarsen(int factor) const;

    std::span<const double> step_increments(int step) const {
        return {increments.data() + static_cast<size_t>(step) * modes,
                static_cast<size_t>(modes)};
    }
};

/// Lipschitz diffusion operator supplied by the caller; lipschitz_sq is the
/// declared squared constant (recorded, not derived).
struct GeneralNoise {
    std::function<GridFunction(double t, const GridFunction& x,
                               std::span<const double> dw)>
        apply;
    std::function<double(const GridFunction& x)> hs_norm_sq;
    double lipschitz_sq = 0.0;
};

/// C^1-type proxy norm for a coefficient on the grid: sup|g| plus the sup of
/// one-sided differences between interior nodes (no boundary segments; the
/// coefficients need not vanish at the boundary).
double c1_proxy_norm(const GridFunction& g);

/// The diffusion operator B: additive (sum sigma^k dbeta^k), linear
/// multiplicative (sum g^k X dbeta^k) or a general Lipschitz callback.
class NoiseModel {
  public:
    enum class Kind { none, additive, linear_multiplicative, general };

    static NoiseModel none();
    static NoiseModel additive(std::vector<GridFunction> sigma);
    static NoiseModel linear_multiplicative(std::vector<GridFunction> coeffs);
    static NoiseModel general(int modes, GeneralNoise op);

    Kind kind() const { return kind_; }
    int mode_count() const { return modes_; }
    const std::vector<GridFunction>& coefficients() const { return coeffs_; }

    /// Noise increment B(t, X) dW for one step's per-mode increments.
    GridFunction apply(double t, const GridFunction& x,
                       std::span<const double> dw) const;

    /// Squared Hilbert-Schmidt norm sum_k ||g^k X||^2_{L2_h} (multiplicative),
    /// sum_k ||sigma^k||^2 (additive), or the callback's value.
    double hs_norm_sq(const GridFunction& x) const;

    /// Recorded squared Lipschitz constant sum_k (proxy norm of g^k)^2.
    double lipschitz_sq() const { return lipschitz_sq_; }

  private:
    Kind kind_ = Kind::none;
    int modes_ = 0;
    std::vector<GridFunction> coeffs_;
    GeneralNoise general_;
    double lipschitz_sq_ = 0.0;
};

}  // namespace sfde
