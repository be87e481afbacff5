#include "acsurf/poly.hpp"

#include <sstream>
#include <stdexcept>

#include "acsurf/qmatrix.hpp"

namespace acsurf {

Rational Poly1::eval(const Rational& t) const {
  Rational acc(0);
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * t + c_[i];
  return acc;
}

Poly1& Poly1::operator+=(const Poly1& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly1& Poly1::operator-=(const Poly1& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly1 operator*(const Poly1& a, const Poly1& b) {
  if (a.is_zero() || b.is_zero()) return Poly1();
  std::vector<Rational> out(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  return Poly1(std::move(out));
}

Poly1 Poly1::scaled(const Rational& s) const {
  if (s.is_zero()) return Poly1();
  std::vector<Rational> out(c_);
  for (auto& c : out) c *= s;
  return Poly1(std::move(out));
}

std::string Poly1::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i].is_zero()) continue;
    if (!first) os << " + ";
    os << c_[i].str();
    if (i > 0) os << "*" << var << "^" << i;
    first = false;
  }
  return os.str();
}

Poly1DivMod divmod(const Poly1& a, const Poly1& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  Poly1 rem = a;
  std::vector<Rational> q;
  int db = b.degree();
  if (rem.degree() >= db) q.assign(static_cast<std::size_t>(rem.degree() - db) + 1, Rational(0));
  while (!rem.is_zero() && rem.degree() >= db) {
    int shift = rem.degree() - db;
    Rational factor = rem.lead() / b.lead();
    q[static_cast<std::size_t>(shift)] = factor;
    std::vector<Rational> sub(static_cast<std::size_t>(rem.degree()) + 1, Rational(0));
    for (int i = 0; i <= db; ++i) sub[static_cast<std::size_t>(i + shift)] = factor * b.coef(static_cast<std::size_t>(i));
    rem -= Poly1(std::move(sub));
  }
  return {Poly1(std::move(q)), rem};
}

Poly1 exact_div(const Poly1& a, const Poly1& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::logic_error("polynomial division expected to be exact");
  return q;
}

Poly1 poly_gcd(Poly1 a, Poly1 b) {
  while (!b.is_zero()) {
    Poly1 r = divmod(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.is_zero()) a = a.scaled(Rational(1) / a.lead());
  return a;
}

Poly1 restrict_first_zero(const Poly2& p) {
  std::vector<Rational> c;
  for (const auto& [e, v] : p.terms()) {
    if (e.first != 0) continue;
    if (c.size() <= e.second) c.resize(e.second + 1, Rational(0));
    c[e.second] = v;
  }
  return Poly1(std::move(c));
}

Poly1 restrict_second_zero(const Poly2& p) {
  std::vector<Rational> c;
  for (const auto& [e, v] : p.terms()) {
    if (e.second != 0) continue;
    if (c.size() <= e.first) c.resize(e.first + 1, Rational(0));
    c[e.first] = v;
  }
  return Poly1(std::move(c));
}

Rational eval(const Poly2& p, const Rational& x, const Rational& y) {
  Rational acc(0);
  for (const auto& [e, v] : p.terms()) {
    Rational m = v;
    for (unsigned i = 0; i < e.first; ++i) m *= x;
    for (unsigned j = 0; j < e.second; ++j) m *= y;
    acc += m;
  }
  return acc;
}

PlaneCurve::PlaneCurve(unsigned degree, std::map<Exponents, Rational> terms)
    : degree_(degree), terms_(std::move(terms)) {
  if (degree_ == 0) throw std::invalid_argument("curve degree must be positive");
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second.is_zero()) {
      it = terms_.erase(it);
      continue;
    }
    const auto& e = it->first;
    if (e[0] + e[1] + e[2] != degree_)
      throw std::invalid_argument("curve term exponents do not sum to the degree");
    ++it;
  }
  if (terms_.empty()) throw std::invalid_argument("curve has no nonzero term");
}

Rational PlaneCurve::coef(unsigned i, unsigned j, unsigned k) const {
  auto it = terms_.find({i, j, k});
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational PlaneCurve::eval(const Rational& x, const Rational& y, const Rational& z) const {
  Rational acc(0);
  for (const auto& [e, v] : terms_) {
    Rational m = v;
    for (unsigned i = 0; i < e[0]; ++i) m *= x;
    for (unsigned j = 0; j < e[1]; ++j) m *= y;
    for (unsigned k = 0; k < e[2]; ++k) m *= z;
    acc += m;
  }
  return acc;
}

PlaneCurve operator*(const PlaneCurve& a, const PlaneCurve& b) {
  std::map<PlaneCurve::Exponents, Rational> out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      PlaneCurve::Exponents e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]};
      out[e] += ca * cb;
    }
  return PlaneCurve(a.degree_ + b.degree_, std::move(out));
}

PlaneCurve operator+(const PlaneCurve& a, const PlaneCurve& b) {
  if (a.degree_ != b.degree_) throw std::invalid_argument("sum of curves of different degrees");
  std::map<PlaneCurve::Exponents, Rational> out = a.terms_;
  for (const auto& [e, c] : b.terms_) out[e] += c;
  return PlaneCurve(a.degree_, std::move(out));
}

PlaneCurve PlaneCurve::scaled(const Rational& s) const {
  std::map<Exponents, Rational> out = terms_;
  for (auto& [e, c] : out) c *= s;
  return PlaneCurve(degree_, std::move(out));
}

Poly2 PlaneCurve::dehomogenized(char chart) const {
  Poly2 out;
  for (const auto& [e, c] : terms_) {
    switch (chart) {
      case 'z': out.add_term(e[0], e[1], c); break;
      case 'y': out.add_term(e[0], e[2], c); break;
      case 'x': out.add_term(e[1], e[2], c); break;
      default: throw std::invalid_argument("unknown affine chart");
    }
  }
  return out;
}

std::string PlaneCurve::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    os << c.str();
    const char* names[3] = {"x", "y", "z"};
    for (int v = 0; v < 3; ++v)
      if (e[static_cast<std::size_t>(v)] > 0) os << "*" << names[v] << "^" << e[static_cast<std::size_t>(v)];
    first = false;
  }
  return os.str();
}

PlaneCurve make_curve(unsigned degree,
                      const std::vector<std::tuple<unsigned, unsigned, unsigned, Rational>>& t) {
  std::map<PlaneCurve::Exponents, Rational> terms;
  for (const auto& [i, j, k, c] : t) terms[{i, j, k}] += c;
  return PlaneCurve(degree, std::move(terms));
}

namespace {

// Degree-n monomials in three variables, lexicographic by exponent triple.
std::vector<PlaneCurve::Exponents> monomials(unsigned n) {
  std::vector<PlaneCurve::Exponents> out;
  for (unsigned i = 0; i <= n; ++i)
    for (unsigned j = 0; i + j <= n; ++j) out.push_back({i, j, n - i - j});
  return out;
}

std::map<PlaneCurve::Exponents, Rational> partial(const PlaneCurve& f, unsigned var) {
  std::map<PlaneCurve::Exponents, Rational> out;
  for (const auto& [e, c] : f.terms()) {
    if (e[var] == 0) continue;
    PlaneCurve::Exponents d = e;
    d[var] -= 1;
    out[d] += c * Rational(static_cast<long>(e[var]));
  }
  return out;
}

}  // namespace

bool is_smooth(const PlaneCurve& f) {
  unsigned d = f.degree();
  if (d == 1) return true;
  // The three partials have degree d-1 and no common projective zero iff
  // multiples of them span every form of degree 3(d-1) - 2.
  unsigned e = d - 1;
  unsigned target = 3 * e - 2;
  auto rows = monomials(target);
  auto cols = monomials(target - e);
  std::map<PlaneCurve::Exponents, std::size_t> row_index;
  for (std::size_t r = 0; r < rows.size(); ++r) row_index[rows[r]] = r;

  QMatrix m(rows.size(), 3 * cols.size());
  for (unsigned var = 0; var < 3; ++var) {
    auto dp = partial(f, var);
    for (std::size_t c = 0; c < cols.size(); ++c) {
      for (const auto& [ex, coef] : dp) {
        PlaneCurve::Exponents s{ex[0] + cols[c][0], ex[1] + cols[c][1], ex[2] + cols[c][2]};
        m.at(row_index.at(s), var * cols.size() + c) = coef;
      }
    }
  }
  return rank(m) == rows.size();
}

Poly1 resultant_y(const std::vector<Poly1>& f, const std::vector<Poly1>& g) {
  std::size_t m = f.size() - 1, n = g.size() - 1;
  if (m == 0 || n == 0 || f.back().is_zero() || g.back().is_zero())
    throw std::invalid_argument("resultant needs positive degrees and nonzero leading entries");
  std::size_t size = m + n;
  std::vector<std::vector<Poly1>> mat(size, std::vector<Poly1>(size));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k <= m; ++k) mat[r][r + m - k] = f[k];
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t k = 0; k <= n; ++k) mat[n + r][r + n - k] = g[k];

  // Fraction-free elimination; every division is exact in Q[x].
  Poly1 prev(std::vector<Rational>{Rational(1)});
  int sign = 1;
  for (std::size_t k = 0; k + 1 < size; ++k) {
    std::size_t pivot = k;
    while (pivot < size && mat[pivot][k].is_zero()) ++pivot;
    if (pivot == size) return Poly1();
    if (pivot != k) {
      std::swap(mat[pivot], mat[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < size; ++i) {
      for (std::size_t j = k + 1; j < size; ++j)
        mat[i][j] = exact_div(mat[k][k] * mat[i][j] - mat[i][k] * mat[k][j], prev);
      mat[i][k] = Poly1();
    }
    prev = mat[k][k];
  }
  Poly1 det = mat[size - 1][size - 1];
  return sign < 0 ? det.scaled(Rational(-1)) : det;
}

}  // namespace acsurf
