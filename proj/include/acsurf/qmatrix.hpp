#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "acsurf/rational.hpp"

namespace acsurf {

// Dense rational matrix, row-major.
class QMatrix {
 public:
  QMatrix() : rows_(0), cols_(0) {}
  QMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  QMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static QMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_symmetric() const;
  QVector apply(const QVector& x) const;  // m * x

  friend bool operator==(const QMatrix& a, const QMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> data_;
};

// Reduced row echelon form; pivot column indices appended to *pivots if given.
QMatrix rref(QMatrix m, std::vector<std::size_t>* pivots = nullptr);

std::size_t rank(const QMatrix& m);

// Basis of the right kernel {x : m x = 0}, one vector per free column of the
// echelon form, in free-column order. Empty when the kernel is trivial.
std::vector<QVector> kernel_basis(const QMatrix& m);

enum class Definiteness {
  negative_definite,
  negative_semidefinite_singular,
  indefinite_or_positive,
};

// Exact classification of a symmetric rational matrix by pivoted symmetric
// elimination on -m. Pivots are always taken on strictly positive diagonal
// entries, so singular leading minors never force a perturbation.
Definiteness definiteness(const QMatrix& m);

// One solution of m x = b (free variables set to zero), or nullopt when the
// system is inconsistent.
std::optional<QVector> solve(const QMatrix& m, const QVector& b);

// Scales a nonzero rational vector to the integer vector with coprime entries
// whose first nonzero entry is positive. Invariant under nonzero rescaling of
// the input.
std::vector<mpz_class> primitive_integer_generator(const QVector& v);

Rational dot(const QVector& a, const QVector& b);

}  // namespace acsurf
