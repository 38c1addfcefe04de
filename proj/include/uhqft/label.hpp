#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace uhqft {

// Largest supported dim H_1(F; F_2).
inline constexpr int kMaxLabelDim = 24;

// An element of pi = H_1(F; F_2) = F_2^k. Coordinate i is bit i.
struct H1Label {
  std::uint32_t bits = 0;

  constexpr bool is_zero() const noexcept { return bits == 0; }
  constexpr bool coord(int i) const noexcept { return (bits >> i) & 1u; }

  friend constexpr H1Label operator+(H1Label a, H1Label b) noexcept { return {a.bits ^ b.bits}; }
  H1Label& operator+=(H1Label o) noexcept {
    bits ^= o.bits;
    return *this;
  }
  friend constexpr auto operator<=>(const H1Label&, const H1Label&) = default;
};

// Coordinates in order, e.g. "10" for [1,0]. Empty for k = 0.
std::string to_string(H1Label label, int k);

// Throws InputError on a coordinate other than 0/1 or k > kMaxLabelDim.
H1Label label_from_coords(std::span<const int> coords);
std::vector<int> label_coords(H1Label label, int k);

}  // namespace uhqft
