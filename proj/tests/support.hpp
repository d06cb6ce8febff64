#pragma once

#include "modjoin/matroid.hpp"
#include "oracle.hpp"

namespace support {

// Library matroid on the same vectors the oracle sees.
inline modjoin::Matroid to_matroid(const oracle::Vectors& v) {
  const modjoin::Field f = v.p ? modjoin::Field::gf(v.p) : modjoin::Field::rational();
  const auto dim = static_cast<Eigen::Index>(v.vecs.empty() ? 0 : v.vecs[0].size());
  modjoin::FieldMatrix m(f, dim, static_cast<Eigen::Index>(v.vecs.size()));
  for (std::size_t j = 0; j < v.vecs.size(); ++j) {
    for (Eigen::Index i = 0; i < dim; ++i) {
      m.set(i, static_cast<Eigen::Index>(j), modjoin::FieldScalar::parse(v.vecs[j][static_cast<std::size_t>(i)].get_str(), f));
    }
  }
  return modjoin::linear_matroid(m);
}

inline oracle::RankFn library_rank(const modjoin::Matroid& m) {
  return [m](oracle::Mask s) { return m.rank(s); };
}

}  // namespace support
