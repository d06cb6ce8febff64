#include "modjoin/subset.hpp"

#include "modjoin/errors.hpp"

namespace modjoin {

std::vector<int> mask_to_indices(Mask m) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(popcount(m)));
  while (m != 0) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

Mask indices_to_mask(const std::vector<int>& indices) {
  Mask m = 0;
  for (int i : indices) {
    if (i < 0 || i >= static_cast<int>(kMaxGroundSet)) {
      throw Error(Errc::InvalidInput, "atom index out of range: " + std::to_string(i));
    }
    m |= bit(static_cast<std::size_t>(i));
  }
  return m;
}

Subset::Subset(std::size_t ground_size, Mask bits) : n_(ground_size), bits_(bits) {
  if (ground_size > kMaxGroundSet) {
    throw Error(Errc::TooLarge, "ground sets above 64 atoms are not supported");
  }
  if (!is_subset(bits, full_mask(ground_size))) {
    throw Error(Errc::InvalidInput, "subset has atoms outside the ground set");
  }
}

Subset Subset::of(std::size_t n, const std::vector<int>& indices) {
  for (int i : indices) {
    if (i < 0 || static_cast<std::size_t>(i) >= n) {
      throw Error(Errc::InvalidInput, "atom index " + std::to_string(i) + " outside ground set");
    }
  }
  return Subset(n, indices_to_mask(indices));
}

std::string Subset::to_string() const {
  std::string s = "{";
  bool first = true;
  for (int i : indices()) {
    if (!first) s += ",";
    s += std::to_string(i);
    first = false;
  }
  return s + "}";
}

bool lex_less(Mask a, Mask b) noexcept {
  // The first index where the sorted lists differ decides; a proper prefix
  // sorts first.
  while (a != 0 && b != 0) {
    int ia = std::countr_zero(a);
    int ib = std::countr_zero(b);
    if (ia != ib) return ia < ib;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

}  // namespace modjoin
