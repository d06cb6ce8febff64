#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace modjoin {

/// Bit i set <=> atom i present. Ground sets are capped at 64 atoms.
using Mask = std::uint64_t;

inline constexpr std::size_t kMaxGroundSet = 64;

constexpr Mask full_mask(std::size_t n) noexcept {
  return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}
constexpr Mask bit(std::size_t i) noexcept { return Mask{1} << i; }
constexpr bool is_subset(Mask a, Mask b) noexcept { return (a & ~b) == 0; }
constexpr int popcount(Mask m) noexcept { return std::popcount(m); }

std::vector<int> mask_to_indices(Mask m);
Mask indices_to_mask(const std::vector<int>& indices);

/// Dense bit-vector over a ground set of known size.
class Subset {
 public:
  Subset() = default;
  Subset(std::size_t ground_size, Mask bits);
  static Subset empty(std::size_t n) { return Subset(n, 0); }
  static Subset full(std::size_t n) { return Subset(n, full_mask(n)); }
  static Subset of(std::size_t n, const std::vector<int>& indices);

  std::size_t ground_size() const noexcept { return n_; }
  Mask bits() const noexcept { return bits_; }
  int count() const noexcept { return popcount(bits_); }
  bool empty() const noexcept { return bits_ == 0; }
  bool contains(std::size_t i) const noexcept { return (bits_ >> i) & 1U; }
  bool is_subset_of(const Subset& o) const noexcept { return is_subset(bits_, o.bits_); }
  std::vector<int> indices() const { return mask_to_indices(bits_); }

  Subset with(std::size_t i) const { return Subset(n_, bits_ | bit(i)); }
  Subset without(std::size_t i) const { return Subset(n_, bits_ & ~bit(i)); }
  Subset operator|(const Subset& o) const { return Subset(n_, bits_ | o.bits_); }
  Subset operator&(const Subset& o) const { return Subset(n_, bits_ & o.bits_); }
  Subset operator-(const Subset& o) const { return Subset(n_, bits_ & ~o.bits_); }
  Subset complement() const { return Subset(n_, full_mask(n_) & ~bits_); }

  std::string to_string() const;

  friend bool operator==(const Subset&, const Subset&) = default;

 private:
  std::size_t n_ = 0;
  Mask bits_ = 0;
};

/// Lexicographic comparison of the sorted index lists of two masks.
bool lex_less(Mask a, Mask b) noexcept;

}  // namespace modjoin
