#include "sfde/rng.hpp"

#include <cmath>
#include <numbers>

namespace sfde {

namespace {

constexpr std::uint32_t kMul0 = 0xD2511F53u;
constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi,
                    std::uint32_t& lo) {
    std::uint64_t p = static_cast<std::uint64_t>(a) * b;
    hi = static_cast<std::uint32_t>(p >> 32);
    lo = static_cast<std::uint32_t>(p);
}

}  // namespace

std::array<std::uint32_t, 4> Philox4x32::block(
    const std::array<std::uint32_t, 4>& counter,
    const std::array<std::uint32_t, 2>& key) {
    std::array<std::uint32_t, 4> x = counter;
    std::uint32_t k0 = key[0], k1 = key[1];
    for (int round = 0; round < 10; ++round) {
        std::uint32_t hi0, lo0, hi1, lo1;
        mulhilo(kMul0, x[0], hi0, lo0);
        mulhilo(kMul1, x[2], hi1, lo1);
        x = {hi1 ^ x[1] ^ k0, lo1, hi0 ^ x[3] ^ k1, lo0};
        k0 += kWeyl0;
        k1 += kWeyl1;
    }
    return x;
}

namespace {

inline std::array<std::uint32_t, 4> draw_block(std::uint64_t seed,
                                               std::uint64_t stream,
                                               std::uint64_t index) {
    std::array<std::uint32_t, 4> ctr = {
        static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32),
        static_cast<std::uint32_t>(stream),
        static_cast<std::uint32_t>(stream >> 32)};
    std::array<std::uint32_t, 2> key = {static_cast<std::uint32_t>(seed),
                                        static_cast<std::uint32_t>(seed >> 32)};
    return Philox4x32::block(ctr, key);
}

// Uniform in (0,1) from two 32-bit words, bounded away from 0 and 1.
inline double to_unit(std::uint32_t hi, std::uint32_t lo) {
    std::uint64_t u = (static_cast<std::uint64_t>(hi) << 32) | lo;
    return (static_cast<double>(u >> 11) + 0.5) * 0x1.0p-53;
}

}  // namespace

double normal_draw(std::uint64_t seed, std::uint64_t stream,
                   std::uint64_t index) {
    auto w = draw_block(seed, stream, index);
    double u1 = to_unit(w[0], w[1]);
    double u2 = to_unit(w[2], w[3]);
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
}

double uniform_draw(std::uint64_t seed, std::uint64_t stream,
                    std::uint64_t index) {
    // Distinct stream space from normal_draw's consumer conventions is the
    // caller's responsibility; the block itself is shared.
    auto w = draw_block(seed, stream ^ 0x5851F42D4C957F2Dull, index);
    return to_unit(w[0], w[1]);
}

}  // namespace sfde
