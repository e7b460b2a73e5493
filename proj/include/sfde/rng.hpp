#pragma once

#include <array>
#include <cstdint>

namespace sfde {

/// Philox4x32-10 counter-based generator. Stateless: every 128-bit counter
/// maps to four 32-bit words under a 64-bit key, so draws are addressable by
/// (seed, stream, index) and reproducible in any evaluation order.
struct Philox4x32 {
    static std::array<std::uint32_t, 4> block(
        const std::array<std::uint32_t, 4>& counter,
        const std::array<std::uint32_t, 2>& key);
};

/// Standard normal draw addressed by (seed, stream, index): two uniforms from
/// one Philox block through the Box-Muller map.
double normal_draw(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

/// Uniform in (0,1), same addressing scheme, independent of normal_draw.
double uniform_draw(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

}  // namespace sfde
