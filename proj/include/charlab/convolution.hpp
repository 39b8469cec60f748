#pragma once

#include <cstdint>
#include <vector>

namespace charlab {

// Exact integer convolution. The NTT works modulo the machine-word prime
// 29 * 2^57 + 1; a convolution is accepted only when every coefficient is
// provably below the modulus (coefficient bound check), so results are exact
// integers, never reductions.
enum class ConvStrategy {
    automatic, // schoolbook for short inputs, NTT above
    schoolbook,
    ntt,
};

inline constexpr std::uint64_t kNttModulus = 4179340454199820289ULL; // 29 * 2^57 + 1
inline constexpr std::uint64_t kNttRoot = 3;

// Acyclic convolution c[k] = sum_i a[i] * b[k-i], length |a|+|b|-1.
// Throws convolution_overflow if the coefficient bound reaches the modulus.
std::vector<std::uint64_t> convolve(const std::vector<std::uint64_t>& a,
                                    const std::vector<std::uint64_t>& b,
                                    ConvStrategy strategy = ConvStrategy::automatic);

// Cyclic convolution of two length-n sequences (indices mod n).
std::vector<std::uint64_t> cyclic_convolve(const std::vector<std::uint64_t>& a,
                                           const std::vector<std::uint64_t>& b,
                                           ConvStrategy strategy = ConvStrategy::automatic);

} // namespace charlab
