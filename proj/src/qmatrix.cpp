#include "acsurf/qmatrix.hpp"

#include <stdexcept>

namespace acsurf {

QMatrix::QMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix initializer");
    for (const auto& x : r) data_.push_back(x);
  }
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

bool QMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

QVector QMatrix::apply(const QVector& x) const {
  if (x.size() != cols_) throw std::invalid_argument("matrix/vector size mismatch");
  QVector y(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Rational s;
    for (std::size_t j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero() && !x[j].is_zero()) s += at(i, j) * x[j];
    y[i] = s;
  }
  return y;
}

QMatrix rref(QMatrix m, std::vector<std::size_t>* pivots) {
  std::size_t lead = 0;
  for (std::size_t col = 0; col < m.cols() && lead < m.rows(); ++col) {
    std::size_t piv = lead;
    while (piv < m.rows() && m.at(piv, col).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    if (piv != lead)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(lead, j));
    Rational inv = Rational(1) / m.at(lead, col);
    for (std::size_t j = col; j < m.cols(); ++j) m.at(lead, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == lead || m.at(i, col).is_zero()) continue;
      Rational f = m.at(i, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        m.at(i, j) -= f * m.at(lead, j);
    }
    if (pivots) pivots->push_back(col);
    ++lead;
  }
  return m;
}

std::size_t rank(const QMatrix& m) {
  std::vector<std::size_t> piv;
  rref(m, &piv);
  return piv.size();
}

std::vector<QVector> kernel_basis(const QMatrix& m) {
  std::vector<std::size_t> piv;
  QMatrix r = rref(m, &piv);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : piv) is_pivot[c] = true;

  std::vector<QVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    QVector v(m.cols());
    v[free] = Rational(1);
    for (std::size_t k = 0; k < piv.size(); ++k) v[piv[k]] = -r.at(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

Definiteness definiteness(const QMatrix& m) {
  if (!m.is_symmetric()) throw std::invalid_argument("definiteness requires a symmetric matrix");
  std::size_t n = m.rows();

  // Work on a = -m: m is negative (semi)definite iff a is positive (semi)definite.
  QMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a.at(i, j) = -m.at(i, j);

  std::vector<std::size_t> active(n);
  for (std::size_t i = 0; i < n; ++i) active[i] = i;
  std::size_t pivots = 0;

  while (!active.empty()) {
    std::size_t pick = active.size();
    for (std::size_t k = 0; k < active.size(); ++k) {
      if (a.at(active[k], active[k]).sign() > 0) { pick = k; break; }
    }
    if (pick == active.size()) {
      // No positive pivot left. Positive semidefinite iff the remaining block
      // is identically zero.
      for (std::size_t p : active)
        for (std::size_t q : active)
          if (!a.at(p, q).is_zero()) return Definiteness::indefinite_or_positive;
      return Definiteness::negative_semidefinite_singular;
    }
    std::size_t i = active[pick];
    active.erase(active.begin() + pick);
    ++pivots;
    const Rational d = a.at(i, i);
    for (std::size_t p : active) {
      if (a.at(p, i).is_zero()) continue;
      Rational f = a.at(p, i) / d;
      for (std::size_t q : active) a.at(p, q) -= f * a.at(i, q);
    }
  }
  (void)pivots;
  return Definiteness::negative_definite;
}

std::optional<QVector> solve(const QMatrix& m, const QVector& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: rhs size mismatch");
  QMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[i];
  }
  std::vector<std::size_t> piv;
  QMatrix r = rref(aug, &piv);
  if (!piv.empty() && piv.back() == m.cols()) return std::nullopt;
  QVector x(m.cols());
  for (std::size_t k = 0; k < piv.size(); ++k) x[piv[k]] = r.at(k, m.cols());
  return x;
}

std::vector<mpz_class> primitive_integer_generator(const QVector& v) {
  bool all_zero = true;
  for (const auto& x : v)
    if (!x.is_zero()) { all_zero = false; break; }
  if (all_zero) throw std::invalid_argument("primitive generator of the zero vector");

  mpz_class scale = 1;
  for (const auto& x : v) {
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), scale.get_mpz_t(), x.den().get_mpz_t());
    scale = l;
  }
  std::vector<mpz_class> w(v.size());
  mpz_class g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    w[i] = v[i].num() * (scale / v[i].den());
    mpz_class t;
    mpz_gcd(t.get_mpz_t(), g.get_mpz_t(), w[i].get_mpz_t());
    g = t;
  }
  int lead = 0;
  for (const auto& x : w) {
    if (x != 0) { lead = sgn(x); break; }
  }
  if (lead < 0) g = -g;
  for (auto& x : w) x /= g;
  return w;
}

Rational dot(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  return s;
}

}  // namespace acsurf
