#include "cuspsyz/matrix.hpp"

#include <variant>

#include "cuspsyz/error.hpp"

namespace cuspsyz {

namespace {

struct PrimeArith {
  using Elem = std::uint64_t;
  std::uint64_t p;
  Elem from(const Scalar& s) const { return s.residue(); }
  Scalar to(Elem e) const { return Scalar(e, p); }
  bool zero(Elem e) const { return e == 0; }
  Elem inv(Elem e) const { return mod_inverse(e, p); }
  Elem mul(Elem a, Elem b) const { return a * b % p; }
  // a - f*b
  Elem axpy(Elem a, Elem f, Elem b) const { return (a + p - f * b % p) % p; }
  Elem neg(Elem a) const { return a ? p - a : 0; }
};

struct RationalArith {
  using Elem = Rational;
  Elem from(const Scalar& s) const { return s.rational(); }
  Scalar to(const Elem& e) const { return Scalar(e); }
  bool zero(const Elem& e) const { return e == 0; }
  Elem inv(const Elem& e) const { return Rational(1) / e; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem axpy(const Elem& a, const Elem& f, const Elem& b) const { return a - f * b; }
  Elem neg(const Elem& a) const { return -a; }
};

template <class A>
std::vector<std::size_t> rref_inplace(const A& ar, std::vector<std::vector<typename A::Elem>>& m,
                                      std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t sel = row;
    while (sel < m.size() && ar.zero(m[sel][c])) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    auto inv = ar.inv(m[row][c]);
    for (std::size_t j = c; j < cols; ++j) m[row][j] = ar.mul(m[row][j], inv);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || ar.zero(m[r][c])) continue;
      auto f = m[r][c];
      for (std::size_t j = c; j < cols; ++j)
        if (!ar.zero(m[row][j])) m[r][j] = ar.axpy(m[r][j], f, m[row][j]);
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

template <class A>
ExactMatrix rref_with(const A& ar, const ExactMatrix& in, std::vector<std::size_t>* pivots_out) {
  std::vector<std::vector<typename A::Elem>> m(in.rows(), std::vector<typename A::Elem>(in.cols()));
  for (std::size_t r = 0; r < in.rows(); ++r)
    for (std::size_t c = 0; c < in.cols(); ++c) m[r][c] = ar.from(in.at(r, c));
  auto pivots = rref_inplace(ar, m, in.cols());
  ExactMatrix out(in.field(), in.rows(), in.cols());
  for (std::size_t r = 0; r < in.rows(); ++r)
    for (std::size_t c = 0; c < in.cols(); ++c) out.at(r, c) = ar.to(m[r][c]);
  if (pivots_out) *pivots_out = std::move(pivots);
  return out;
}

template <class A>
class Echelon {
 public:
  using Elem = typename A::Elem;
  Echelon(A ar, std::size_t dim) : ar_(std::move(ar)), dim_(dim) {}

  std::vector<Elem> reduce(const Vector& v, std::size_t* lead) const {
    std::vector<Elem> x(dim_);
    for (std::size_t i = 0; i < dim_; ++i) x[i] = ar_.from(v[i]);
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      auto f = x[piv_[k]];
      if (ar_.zero(f)) continue;
      for (std::size_t j = 0; j < dim_; ++j)
        if (!ar_.zero(rows_[k][j])) x[j] = ar_.axpy(x[j], f, rows_[k][j]);
    }
    *lead = dim_;
    for (std::size_t j = 0; j < dim_; ++j)
      if (!ar_.zero(x[j])) {
        *lead = j;
        break;
      }
    return x;
  }

  bool insert(const Vector& v) {
    std::size_t lead;
    auto x = reduce(v, &lead);
    if (lead == dim_) return false;
    auto inv = ar_.inv(x[lead]);
    for (auto& e : x) e = ar_.mul(e, inv);
    rows_.push_back(std::move(x));
    piv_.push_back(lead);
    return true;
  }

  bool contains(const Vector& v) const {
    std::size_t lead;
    reduce(v, &lead);
    return lead == dim_;
  }

  std::size_t size() const { return rows_.size(); }

 private:
  A ar_;
  std::size_t dim_;
  std::vector<std::vector<Elem>> rows_;
  std::vector<std::size_t> piv_;
};

}  // namespace

ExactMatrix::ExactMatrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

ExactMatrix ExactMatrix::from_rows(const std::vector<Vector>& rows) {
  if (rows.empty() || rows[0].empty())
    fail(ErrorKind::MalformedInput, "cannot infer field and shape of an empty matrix");
  return from_rows(rows[0][0].field(), rows[0].size(), rows);
}

ExactMatrix ExactMatrix::from_rows(Field field, std::size_t cols, const std::vector<Vector>& rows) {
  ExactMatrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) fail(ErrorKind::MalformedInput, "ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) {
      if (rows[r][c].field() != field)
        fail(ErrorKind::MalformedInput, "matrix entries from different fields");
      m.at(r, c) = rows[r][c];
    }
  }
  return m;
}

ExactMatrix ExactMatrix::rref(std::vector<std::size_t>* pivots) const {
  if (field_.is_prime_field()) return rref_with(PrimeArith{field_.characteristic()}, *this, pivots);
  return rref_with(RationalArith{}, *this, pivots);
}

std::size_t ExactMatrix::rank() const {
  std::vector<std::size_t> pivots;
  rref(&pivots);
  return pivots.size();
}

std::vector<Vector> ExactMatrix::kernel_basis() const {
  std::vector<std::size_t> pivots;
  ExactMatrix R = rref(&pivots);
  std::vector<bool> is_pivot(cols_, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    Vector v(cols_, field_.zero());
    v[f] = field_.one();
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -R.at(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

Vector ExactMatrix::apply(const Vector& x) const {
  if (x.size() != cols_) fail(ErrorKind::MalformedInput, "dimension mismatch in matrix product");
  Vector y(rows_, field_.zero());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (!at(r, c).is_zero() && !x[c].is_zero()) y[r] += at(r, c) * x[c];
  return y;
}

struct EchelonBasis::Impl {
  std::variant<Echelon<PrimeArith>, Echelon<RationalArith>> e;
};

EchelonBasis::EchelonBasis(Field field, std::size_t dim) : field_(field), dim_(dim) {
  if (field.is_prime_field())
    impl_.reset(new Impl{Echelon<PrimeArith>(PrimeArith{field.characteristic()}, dim)});
  else
    impl_.reset(new Impl{Echelon<RationalArith>(RationalArith{}, dim)});
}

EchelonBasis::~EchelonBasis() = default;
EchelonBasis::EchelonBasis(EchelonBasis&&) noexcept = default;
EchelonBasis& EchelonBasis::operator=(EchelonBasis&&) noexcept = default;

bool EchelonBasis::insert(const Vector& v) {
  if (v.size() != dim_) fail(ErrorKind::MalformedInput, "vector length differs from ambient dimension");
  return std::visit([&](auto& e) { return e.insert(v); }, impl_->e);
}

bool EchelonBasis::contains(const Vector& v) const {
  if (v.size() != dim_) fail(ErrorKind::MalformedInput, "vector length differs from ambient dimension");
  return std::visit([&](const auto& e) { return e.contains(v); }, impl_->e);
}

std::size_t EchelonBasis::size() const {
  return std::visit([](const auto& e) { return e.size(); }, impl_->e);
}

}  // namespace cuspsyz
