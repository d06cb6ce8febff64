#include "modjoin/field.hpp"

#include "modjoin/errors.hpp"

namespace modjoin {

namespace {

std::uint32_t reduce(std::int64_t v, std::uint32_t p) {
  std::int64_t r = v % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

std::uint32_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint32_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (e != 0) {
    if (e & 1U) result = result * base % p;
    base = base * base % p;
    e >>= 1U;
  }
  return static_cast<std::uint32_t>(result);
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Field Field::gf(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31) || !is_prime(p)) {
    throw Error(Errc::NotPrime, "field characteristic " + std::to_string(p) + " is not a supported prime");
  }
  return Field{Kind::Prime, static_cast<std::uint32_t>(p)};
}

std::string Field::name() const {
  return is_rational() ? "Q" : "GF(" + std::to_string(p) + ")";
}

PrimeOps::Scalar PrimeOps::inverse(Scalar x) const {
  return pow_mod(x, p - 2, p);
}

// --- FieldScalar -----------------------------------------------------------

FieldScalar::FieldScalar(std::int64_t v, const Field& field) {
  if (field.is_rational()) {
    value_ = mpq_class(static_cast<long>(v));
  } else {
    value_ = Residue{reduce(v, field.p), field.p};
  }
}

FieldScalar FieldScalar::residue(std::int64_t v, std::uint32_t p) {
  return FieldScalar(v, Field::gf(p));
}

FieldScalar FieldScalar::parse(const std::string& text, const Field& field) {
  try {
    if (field.is_rational()) {
      mpq_class q(text, 10);
      if (sgn(q.get_den()) == 0) throw Error(Errc::InvalidInput, "zero denominator in '" + text + "'");
      return FieldScalar(q);
    }
    const auto slash = text.find('/');
    mpz_class z(text.substr(0, slash), 10);
    mpz_class r = z % field.p;
    if (r < 0) r += field.p;
    FieldScalar out(static_cast<std::int64_t>(r.get_si()), field);
    if (slash != std::string::npos) {
      mpz_class d(text.substr(slash + 1), 10);
      out = out / FieldScalar::parse(d.get_str(), field);
    }
    return out;
  } catch (const std::invalid_argument&) {
    throw Error(Errc::InvalidInput, "cannot parse scalar '" + text + "' in " + field.name());
  }
}

Field FieldScalar::field() const {
  if (is_rational()) return Field::rational();
  return Field{Field::Kind::Prime, std::get<Residue>(value_).p};
}

bool FieldScalar::is_zero() const {
  if (is_rational()) return sgn(rational()) == 0;
  return residue_value().value == 0;
}

namespace {

void require_same_field(const FieldScalar& a, const FieldScalar& b) {
  if (!(a.field() == b.field())) throw Error(Errc::InvalidInput, "mixed-field arithmetic");
}

}  // namespace

FieldScalar FieldScalar::operator+(const FieldScalar& o) const {
  require_same_field(*this, o);
  if (is_rational()) return FieldScalar(mpq_class(rational() + o.rational()));
  const auto& a = residue_value();
  return FieldScalar(static_cast<std::int64_t>(a.value) + o.residue_value().value, field());
}

FieldScalar FieldScalar::operator-(const FieldScalar& o) const {
  require_same_field(*this, o);
  if (is_rational()) return FieldScalar(mpq_class(rational() - o.rational()));
  const auto& a = residue_value();
  return FieldScalar(static_cast<std::int64_t>(a.value) - o.residue_value().value, field());
}

FieldScalar FieldScalar::operator*(const FieldScalar& o) const {
  require_same_field(*this, o);
  if (is_rational()) return FieldScalar(mpq_class(rational() * o.rational()));
  const auto& a = residue_value();
  PrimeOps ops{a.p};
  return FieldScalar(ops.mul(a.value, o.residue_value().value), field());
}

FieldScalar FieldScalar::operator/(const FieldScalar& o) const {
  require_same_field(*this, o);
  if (o.is_zero()) throw Error(Errc::InvalidInput, "division by zero scalar");
  if (is_rational()) return FieldScalar(mpq_class(rational() / o.rational()));
  const auto& a = residue_value();
  PrimeOps ops{a.p};
  return FieldScalar(ops.mul(a.value, ops.inverse(o.residue_value().value)), field());
}

FieldScalar FieldScalar::operator-() const {
  if (is_rational()) return FieldScalar(mpq_class(-rational()));
  return FieldScalar(-static_cast<std::int64_t>(residue_value().value), field());
}

FieldScalar FieldScalar::pow(std::uint64_t e) const {
  if (is_rational()) {
    mpq_class r = 1;
    for (std::uint64_t i = 0; i < e; ++i) r *= rational();
    return FieldScalar(r);
  }
  const auto& a = residue_value();
  return FieldScalar(pow_mod(a.value, e, a.p), field());
}

std::string FieldScalar::to_string() const {
  if (is_rational()) return rational().get_str();
  return std::to_string(residue_value().value);
}

// --- FieldMatrix -----------------------------------------------------------

FieldMatrix::FieldMatrix(Field field, Eigen::Index rows, Eigen::Index cols) : field_(field) {
  if (field.is_rational()) {
    data_ = RationalMatrix(rows, cols);
  } else {
    data_ = ResidueMatrix(ResidueMatrix::Zero(rows, cols));
  }
}

FieldMatrix::FieldMatrix(std::uint32_t p, ResidueMatrix m) : field_(Field::gf(p)), data_(std::move(m)) {
  for (Eigen::Index i = 0; i < residue_data().size(); ++i) {
    if (residue_data().data()[i] >= p) throw Error(Errc::InvalidInput, "residue not reduced");
  }
}

FieldMatrix FieldMatrix::from_rows(const Field& field, const std::vector<std::vector<std::int64_t>>& rows,
                                   Eigen::Index cols) {
  if (cols < 0) cols = rows.empty() ? 0 : static_cast<Eigen::Index>(rows.front().size());
  FieldMatrix m(field, static_cast<Eigen::Index>(rows.size()), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (static_cast<Eigen::Index>(rows[i].size()) != cols) {
      throw Error(Errc::InvalidInput, "ragged matrix rows");
    }
    for (Eigen::Index j = 0; j < cols; ++j) {
      m.set(static_cast<Eigen::Index>(i), j, FieldScalar(rows[i][static_cast<std::size_t>(j)], field));
    }
  }
  return m;
}

FieldMatrix FieldMatrix::identity(const Field& field, Eigen::Index n) {
  FieldMatrix m(field, n, n);
  for (Eigen::Index i = 0; i < n; ++i) m.set(i, i, FieldScalar(1, field));
  return m;
}

Eigen::Index FieldMatrix::rows() const {
  return std::visit([](const auto& d) { return d.rows(); }, data_);
}

Eigen::Index FieldMatrix::cols() const {
  return std::visit([](const auto& d) { return d.cols(); }, data_);
}

FieldScalar FieldMatrix::at(Eigen::Index i, Eigen::Index j) const {
  if (field_.is_rational()) return FieldScalar(rational_data()(i, j));
  return FieldScalar(residue_data()(i, j), field_);
}

void FieldMatrix::set(Eigen::Index i, Eigen::Index j, const FieldScalar& v) {
  if (!(v.field() == field_)) throw Error(Errc::InvalidInput, "scalar from a different field");
  if (field_.is_rational()) {
    std::get<RationalMatrix>(data_)(i, j) = v.rational();
  } else {
    std::get<ResidueMatrix>(data_)(i, j) = v.residue_value().value;
  }
}

FieldMatrix FieldMatrix::transpose() const {
  FieldMatrix out;
  out.field_ = field_;
  std::visit([&](const auto& d) {
    using M = std::decay_t<decltype(d)>;
    out.data_ = M(d.transpose());
  }, data_);
  return out;
}

FieldMatrix FieldMatrix::select_columns(const std::vector<Eigen::Index>& cols) const {
  FieldMatrix out;
  out.field_ = field_;
  std::visit([&](const auto& d) {
    using M = std::decay_t<decltype(d)>;
    M sub(d.rows(), static_cast<Eigen::Index>(cols.size()));
    for (std::size_t k = 0; k < cols.size(); ++k) sub.col(static_cast<Eigen::Index>(k)) = d.col(cols[k]);
    out.data_ = std::move(sub);
  }, data_);
  return out;
}

FieldMatrix FieldMatrix::select_rows(const std::vector<Eigen::Index>& rows) const {
  FieldMatrix out;
  out.field_ = field_;
  std::visit([&](const auto& d) {
    using M = std::decay_t<decltype(d)>;
    M sub(static_cast<Eigen::Index>(rows.size()), d.cols());
    for (std::size_t k = 0; k < rows.size(); ++k) sub.row(static_cast<Eigen::Index>(k)) = d.row(rows[k]);
    out.data_ = std::move(sub);
  }, data_);
  return out;
}

std::size_t FieldMatrix::rank() const {
  if (field_.is_rational()) return exact_rank(rational_data(), RationalOps{});
  return exact_rank(residue_data(), PrimeOps{field_.p});
}

namespace {

// Rank over GF(2) with columns packed into machine words.
std::size_t gf2_column_rank(const ResidueMatrix& d, Mask columns) {
  std::uint64_t basis[64] = {};
  std::size_t rank = 0;
  const Eigen::Index rows = d.rows();
  for (Mask m = columns; m != 0; m &= m - 1) {
    Eigen::Index j = std::countr_zero(m);
    std::uint64_t v = 0;
    for (Eigen::Index i = 0; i < rows; ++i) v |= static_cast<std::uint64_t>(d(i, j) & 1U) << i;
    for (int b = 63; b >= 0 && v != 0; --b) {
      if (!((v >> b) & 1U)) continue;
      if (basis[b] == 0) {
        basis[b] = v;
        ++rank;
        v = 0;
      } else {
        v ^= basis[b];
      }
    }
  }
  return rank;
}

}  // namespace

std::size_t FieldMatrix::column_rank(Mask columns) const {
  if (!field_.is_rational() && field_.p == 2 && rows() <= 64) {
    return gf2_column_rank(residue_data(), columns);
  }
  std::vector<Eigen::Index> cols;
  for (int j : mask_to_indices(columns)) cols.push_back(j);
  // Rows and columns swap roles freely: elimination runs over the selected
  // columns laid out as rows so short selections stay cheap.
  return std::visit([&](const auto& d) -> std::size_t {
    using M = std::decay_t<decltype(d)>;
    M sub(static_cast<Eigen::Index>(cols.size()), d.rows());
    for (std::size_t k = 0; k < cols.size(); ++k) sub.row(static_cast<Eigen::Index>(k)) = d.col(cols[k]).transpose();
    if constexpr (std::is_same_v<M, RationalMatrix>) {
      return exact_rank(std::move(sub), RationalOps{});
    } else {
      return exact_rank(std::move(sub), PrimeOps{field_.p});
    }
  }, data_);
}

std::vector<Eigen::Index> FieldMatrix::pivot_columns() const {
  if (field_.is_rational()) {
    RationalMatrix m = rational_data();
    return row_reduce(m, RationalOps{});
  }
  ResidueMatrix m = residue_data();
  return row_reduce(m, PrimeOps{field_.p});
}

bool FieldMatrix::column_is_zero(Eigen::Index j) const {
  for (Eigen::Index i = 0; i < rows(); ++i) {
    if (!at(i, j).is_zero()) return false;
  }
  return true;
}

bool FieldMatrix::columns_proportional(Eigen::Index a, Eigen::Index b) const {
  return column_rank(bit(static_cast<std::size_t>(a)) | bit(static_cast<std::size_t>(b))) < 2;
}

void FieldMatrix::normalize_column(Eigen::Index j) {
  for (Eigen::Index i = 0; i < rows(); ++i) {
    FieldScalar lead = at(i, j);
    if (lead.is_zero()) continue;
    for (Eigen::Index k = i; k < rows(); ++k) set(k, j, at(k, j) / lead);
    return;
  }
}

bool operator==(const FieldMatrix& a, const FieldMatrix& b) {
  if (!(a.field_ == b.field_) || a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (!(a.at(i, j) == b.at(i, j))) return false;
    }
  }
  return true;
}

}  // namespace modjoin
