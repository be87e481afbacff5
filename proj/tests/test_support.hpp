#pragma once

// Shared test fixtures and independent oracles. Everything here deliberately
// avoids the library's elimination routines: rank is recomputed fraction-free
// over the integers, and sign behaviour is checked by exhaustive evaluation.

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "acsurf/qmatrix.hpp"
#include "acsurf/rational.hpp"

namespace testsupport {

using acsurf::QMatrix;
using acsurf::QVector;
using acsurf::Rational;

// Fraction-free integer elimination (Bareiss). Exact division by the previous
// pivot; a failed exact division would indicate a broken oracle, so it throws.
inline std::size_t bareiss_rank(std::vector<std::vector<mpz_class>> a) {
  std::size_t m = a.size();
  if (m == 0) return 0;
  std::size_t n = a[0].size();
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = r;
    while (p < m && a[p][c] == 0) ++p;
    if (p == m) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < m; ++i) {
      for (std::size_t j = c + 1; j < n; ++j) {
        mpz_class t = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        if (!mpz_divisible_p(t.get_mpz_t(), prev.get_mpz_t()))
          throw std::logic_error("bareiss oracle: inexact division");
        a[i][j] = t / prev;
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

// Clears denominators row by row (row scaling preserves rank).
inline std::size_t integer_rank(const QMatrix& m) {
  std::vector<std::vector<mpz_class>> a(m.rows(), std::vector<mpz_class>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    mpz_class scale = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      mpz_class l;
      mpz_lcm(l.get_mpz_t(), scale.get_mpz_t(), m.at(i, j).den().get_mpz_t());
      scale = l;
    }
    for (std::size_t j = 0; j < m.cols(); ++j)
      a[i][j] = m.at(i, j).num() * (scale / m.at(i, j).den());
  }
  return bareiss_rank(std::move(a));
}

struct GridScan {
  bool saw_positive = false;
  bool saw_zero_at_nonzero = false;
};

// Evaluates x^T m x over every integer vector with entries in [-bound, bound].
inline GridScan grid_scan(const QMatrix& m, int bound) {
  std::size_t n = m.rows();
  GridScan out;
  std::vector<int> x(n, -bound);
  while (true) {
    bool nonzero = false;
    for (int xi : x)
      if (xi != 0) { nonzero = true; break; }
    if (nonzero) {
      Rational q;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (x[i] != 0 && x[j] != 0) q += m.at(i, j) * Rational(x[i]) * Rational(x[j]);
      if (q.sign() > 0) out.saw_positive = true;
      if (q.is_zero()) out.saw_zero_at_nonzero = true;
    }
    std::size_t k = 0;
    while (k < n && x[k] == bound) x[k++] = -bound;
    if (k == n) break;
    ++x[k];
  }
  return out;
}

// Gram matrix of a configuration of (-2)-classes from an edge list:
// -2 on the diagonal, edge weight off the diagonal.
inline QMatrix gram_from_edges(std::size_t n,
                               const std::vector<std::tuple<int, int, int>>& edges) {
  QMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i) g.at(i, i) = Rational(-2);
  for (auto [a, b, w] : edges) {
    g.at(a, b) = Rational(w);
    g.at(b, a) = Rational(w);
  }
  return g;
}

// Extended Dynkin graphs with their kernel marks, frozen from the defining
// relation 2 v_i = sum of v over neighbours of i.

// Cycle on k+1 nodes (k >= 2); all marks 1.
inline QMatrix affine_cycle_gram(std::size_t k) {
  std::vector<std::tuple<int, int, int>> e;
  std::size_t n = k + 1;
  for (std::size_t i = 0; i < n; ++i)
    e.push_back({static_cast<int>(i), static_cast<int>((i + 1) % n), 1});
  return gram_from_edges(n, e);
}

// Two leaves at each end of a path of n-3 nodes (n >= 5); for n = 4 a star
// with four leaves. Leaves mark 1, path marks 2.
inline QMatrix affine_D_gram(std::size_t n, std::vector<int>* marks = nullptr) {
  std::size_t total = n + 1;
  std::vector<std::tuple<int, int, int>> e;
  if (n == 4) {
    for (int leaf = 1; leaf <= 4; ++leaf) e.push_back({0, leaf, 1});
    if (marks) *marks = {2, 1, 1, 1, 1};
  } else {
    std::size_t path = n - 3;  // nodes 0..path-1
    for (std::size_t i = 0; i + 1 < path; ++i)
      e.push_back({static_cast<int>(i), static_cast<int>(i + 1), 1});
    int p = static_cast<int>(path);
    e.push_back({0, p, 1});
    e.push_back({0, p + 1, 1});
    e.push_back({static_cast<int>(path - 1), p + 2, 1});
    e.push_back({static_cast<int>(path - 1), p + 3, 1});
    if (marks) {
      marks->assign(total, 1);
      for (std::size_t i = 0; i < path; ++i) (*marks)[i] = 2;
    }
  }
  return gram_from_edges(total, e);
}

// Branch node 0 with arms of lengths (2,2,2), (1,3,3), (1,2,5).
inline QMatrix affine_E_gram(int which, std::vector<int>* marks = nullptr) {
  std::vector<std::tuple<int, int, int>> e;
  std::size_t n = 0;
  if (which == 6) {
    n = 7;
    e = {{0, 1, 1}, {1, 2, 1}, {0, 3, 1}, {3, 4, 1}, {0, 5, 1}, {5, 6, 1}};
    if (marks) *marks = {3, 2, 1, 2, 1, 2, 1};
  } else if (which == 7) {
    n = 8;
    e = {{0, 1, 1}, {0, 2, 1}, {2, 3, 1}, {3, 4, 1}, {0, 5, 1}, {5, 6, 1}, {6, 7, 1}};
    if (marks) *marks = {4, 2, 3, 2, 1, 3, 2, 1};
  } else if (which == 8) {
    n = 9;
    e = {{0, 1, 1}, {0, 2, 1}, {2, 3, 1},
         {0, 4, 1}, {4, 5, 1}, {5, 6, 1}, {6, 7, 1}, {7, 8, 1}};
    if (marks) *marks = {6, 3, 4, 2, 5, 4, 3, 2, 1};
  } else {
    throw std::invalid_argument("affine_E_gram: which must be 6, 7 or 8");
  }
  return gram_from_edges(n, e);
}

// Determinant by fraction-free elimination over int64. Intended for the tiny
// matrices of the subset oracle below; entries must stay far from overflow.
inline long long det64(std::vector<std::vector<long long>> a) {
  std::size_t n = a.size();
  long long prev = 1;
  int sign = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      sign = -sign;
    }
    for (std::size_t i = c + 1; i < n; ++i)
      for (std::size_t j = c + 1; j < n; ++j)
        a[i][j] = (a[c][c] * a[i][j] - a[i][c] * a[c][j]) / prev;
    prev = a[c][c];
  }
  return sign * a[n - 1][n - 1];
}

struct SubsetZariski {
  bool exists = false;
  QVector p, n;
};

// Reference decomposition by exhaustive search over support subsets: for each
// subset whose block is negative definite (alternating leading minors), solve
// by Cramer's rule and keep the candidates meeting every invariant. Distinct
// surviving candidates beyond the first indicate a broken oracle.
inline SubsetZariski zariski_subset_oracle(const std::vector<std::vector<long long>>& g,
                                           const std::vector<long long>& d) {
  std::size_t n = d.size();
  if (n > 10) throw std::invalid_argument("subset oracle: configuration too large");

  std::vector<long long> gd(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) gd[i] += g[i][j] * d[j];

  std::vector<std::pair<QVector, QVector>> found;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) s.push_back(i);
    std::size_t k = s.size();

    bool neg_def = true;
    for (std::size_t lead = 1; lead <= k && neg_def; ++lead) {
      std::vector<std::vector<long long>> block(lead, std::vector<long long>(lead));
      for (std::size_t a = 0; a < lead; ++a)
        for (std::size_t b = 0; b < lead; ++b) block[a][b] = g[s[a]][s[b]];
      long long det = det64(block);
      if (lead % 2 == 1 ? det >= 0 : det <= 0) neg_def = false;
    }
    if (!neg_def) continue;

    std::vector<std::vector<long long>> block(k, std::vector<long long>(k));
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b) block[a][b] = g[s[a]][s[b]];
    long long denom = k == 0 ? 1 : det64(block);

    QVector nv(n), pv(n);
    bool ok = true;
    for (std::size_t a = 0; a < k && ok; ++a) {
      auto col = block;
      for (std::size_t b = 0; b < k; ++b) col[b][a] = gd[s[b]];
      Rational x(det64(col), denom);
      if (x.sign() < 0) ok = false;
      nv[s[a]] = x;
    }
    if (!ok) continue;
    for (std::size_t i = 0; i < n; ++i) pv[i] = Rational(d[i]) - nv[i];
    for (std::size_t i = 0; i < n && ok; ++i) {
      Rational pc;
      for (std::size_t j = 0; j < n; ++j) pc += Rational(g[i][j]) * pv[j];
      if (pc.sign() < 0) ok = false;
      if (nv[i].sign() > 0 && !pc.is_zero()) ok = false;
    }
    if (!ok) continue;

    bool duplicate = false;
    for (const auto& f : found)
      if (f.first == pv && f.second == nv) duplicate = true;
    if (!duplicate) found.push_back({pv, nv});
  }

  if (found.size() > 1) throw std::logic_error("subset oracle: decomposition not unique");
  SubsetZariski out;
  if (!found.empty()) {
    out.exists = true;
    out.p = found[0].first;
    out.n = found[0].second;
  }
  return out;
}

inline std::mt19937& rng() {
  static std::mt19937 gen(0x5eed);
  return gen;
}

inline Rational random_rational(int num_bound, int den_bound) {
  std::uniform_int_distribution<int> nd(-num_bound, num_bound);
  std::uniform_int_distribution<int> dd(1, den_bound);
  return Rational(nd(rng()), dd(rng()));
}

}  // namespace testsupport
