#pragma once

#include <Eigen/Core>
#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "modjoin/subset.hpp"

namespace modjoin {

/// The exact fields supported: the rationals and prime fields GF(p).
struct Field {
  enum class Kind { Rational, Prime };

  Kind kind = Kind::Rational;
  std::uint32_t p = 0;

  static Field rational() { return {}; }
  /// Throws Errc::NotPrime unless p is a prime below 2^31.
  static Field gf(std::uint64_t p);

  bool is_rational() const noexcept { return kind == Kind::Rational; }
  std::string name() const;

  friend bool operator==(const Field&, const Field&) = default;
};

bool is_prime(std::uint64_t n) noexcept;

/// Residue class modulo a prime; value is always reduced into [0, p).
struct Residue {
  std::uint32_t value = 0;
  std::uint32_t p = 2;
  friend bool operator==(const Residue&, const Residue&) = default;
};

/// Element of a Field: a reduced rational or a reduced residue.
class FieldScalar {
 public:
  FieldScalar() : value_(mpq_class(0)) {}
  explicit FieldScalar(mpq_class q) : value_(std::move(q)) { std::get<mpq_class>(value_).canonicalize(); }
  FieldScalar(std::int64_t v, const Field& field);
  static FieldScalar residue(std::int64_t v, std::uint32_t p);
  /// Parses "a", "-a" or "a/b" in the given field.
  static FieldScalar parse(const std::string& text, const Field& field);

  Field field() const;
  bool is_zero() const;
  bool is_rational() const noexcept { return std::holds_alternative<mpq_class>(value_); }
  const mpq_class& rational() const { return std::get<mpq_class>(value_); }
  const Residue& residue_value() const { return std::get<Residue>(value_); }

  FieldScalar operator+(const FieldScalar& o) const;
  FieldScalar operator-(const FieldScalar& o) const;
  FieldScalar operator*(const FieldScalar& o) const;
  /// Throws Errc::InvalidInput on division by zero.
  FieldScalar operator/(const FieldScalar& o) const;
  FieldScalar operator-() const;
  FieldScalar pow(std::uint64_t e) const;

  std::string to_string() const;

  friend bool operator==(const FieldScalar& a, const FieldScalar& b) { return a.value_ == b.value_; }

 private:
  std::variant<mpq_class, Residue> value_;
};

// Scalar policies for the elimination kernels. Each policy carries whatever
// runtime state its field needs (the modulus, for prime fields).
struct RationalOps {
  using Scalar = mpq_class;
  static bool is_zero(const Scalar& x) { return sgn(x) == 0; }
  static Scalar inverse(const Scalar& x) { return Scalar(1) / x; }
  static Scalar mul(const Scalar& a, const Scalar& b) { return a * b; }
  /// a - f*b
  static Scalar sub_mul(const Scalar& a, const Scalar& f, const Scalar& b) { return a - f * b; }
};

struct PrimeOps {
  using Scalar = std::uint32_t;
  std::uint32_t p = 2;

  bool is_zero(Scalar x) const { return x == 0; }
  Scalar mul(Scalar a, Scalar b) const {
    return static_cast<Scalar>(static_cast<std::uint64_t>(a) * b % p);
  }
  Scalar inverse(Scalar x) const;
  Scalar sub_mul(Scalar a, Scalar f, Scalar b) const {
    std::uint64_t fb = static_cast<std::uint64_t>(f) * b % p;
    return static_cast<Scalar>((a + p - fb) % p);
  }
};

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using RationalMatrix = DenseMatrix<mpq_class>;
using ResidueMatrix = DenseMatrix<std::uint32_t>;

/// In-place Gauss-Jordan reduction to reduced row echelon form. Returns the
/// pivot column of each nonzero row, in order; its size is the rank.
template <typename Ops>
std::vector<Eigen::Index> row_reduce(DenseMatrix<typename Ops::Scalar>& m, const Ops& ops) {
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index sel = row;
    while (sel < m.rows() && ops.is_zero(m(sel, col))) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row) m.row(sel).swap(m.row(row));
    auto inv = ops.inverse(m(row, col));
    for (Eigen::Index j = col; j < m.cols(); ++j) m(row, j) = ops.mul(m(row, j), inv);
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (i == row || ops.is_zero(m(i, col))) continue;
      auto f = m(i, col);
      for (Eigen::Index j = col; j < m.cols(); ++j) m(i, j) = ops.sub_mul(m(i, j), f, m(row, j));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

/// Exact rank by elimination; the argument is taken by value and consumed.
template <typename Ops>
std::size_t exact_rank(DenseMatrix<typename Ops::Scalar> m, const Ops& ops) {
  return row_reduce(m, ops).size();
}

/// Dense matrix over a single exact field. Columns of a representation
/// matrix are the atoms of the linear matroid it defines.
class FieldMatrix {
 public:
  FieldMatrix() = default;
  FieldMatrix(Field field, Eigen::Index rows, Eigen::Index cols);
  explicit FieldMatrix(RationalMatrix m) : field_(Field::rational()), data_(std::move(m)) {}
  FieldMatrix(std::uint32_t p, ResidueMatrix m);

  /// Row-major integer entries, reduced into the field.
  static FieldMatrix from_rows(const Field& field, const std::vector<std::vector<std::int64_t>>& rows,
                               Eigen::Index cols = -1);
  static FieldMatrix identity(const Field& field, Eigen::Index n);

  const Field& field() const noexcept { return field_; }
  Eigen::Index rows() const;
  Eigen::Index cols() const;

  FieldScalar at(Eigen::Index i, Eigen::Index j) const;
  void set(Eigen::Index i, Eigen::Index j, const FieldScalar& v);

  FieldMatrix transpose() const;
  FieldMatrix select_columns(const std::vector<Eigen::Index>& cols) const;
  FieldMatrix select_rows(const std::vector<Eigen::Index>& rows) const;

  std::size_t rank() const;
  /// Rank of the columns whose indices are set in the mask.
  std::size_t column_rank(Mask columns) const;
  /// Pivot columns of the row echelon form.
  std::vector<Eigen::Index> pivot_columns() const;

  bool column_is_zero(Eigen::Index j) const;
  bool columns_proportional(Eigen::Index a, Eigen::Index b) const;
  /// Scales column j so that its first nonzero entry is 1.
  void normalize_column(Eigen::Index j);

  const RationalMatrix& rational_data() const { return std::get<RationalMatrix>(data_); }
  const ResidueMatrix& residue_data() const { return std::get<ResidueMatrix>(data_); }

  friend bool operator==(const FieldMatrix& a, const FieldMatrix& b);

 private:
  Field field_;
  std::variant<RationalMatrix, ResidueMatrix> data_;
};

/// Rank of a FieldMatrix; the free-function spelling used by callers.
inline std::size_t matrix_rank(const FieldMatrix& m) { return m.rank(); }

}  // namespace modjoin
