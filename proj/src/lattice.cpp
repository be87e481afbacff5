#include "acsurf/lattice.hpp"

#include <stdexcept>

namespace acsurf {

bool DivisorClass::is_integral() const {
  for (const auto& x : coords)
    if (!x.is_integer()) return false;
  return true;
}

DivisorClass operator+(const DivisorClass& a, const DivisorClass& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("divisor class rank mismatch");
  DivisorClass out(a.rank());
  for (std::size_t i = 0; i < a.rank(); ++i) out.coords[i] = a.coords[i] + b.coords[i];
  return out;
}

DivisorClass operator-(const DivisorClass& a, const DivisorClass& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("divisor class rank mismatch");
  DivisorClass out(a.rank());
  for (std::size_t i = 0; i < a.rank(); ++i) out.coords[i] = a.coords[i] - b.coords[i];
  return out;
}

DivisorClass operator*(const Rational& s, const DivisorClass& a) {
  DivisorClass out(a.rank());
  for (std::size_t i = 0; i < a.rank(); ++i) out.coords[i] = s * a.coords[i];
  return out;
}

SurfaceLattice::SurfaceLattice(std::vector<std::string> labels, DivisorClass canonical,
                               std::vector<BlowUpRecord> history)
    : labels_(std::move(labels)), canonical_(std::move(canonical)), history_(std::move(history)) {
  if (labels_.empty()) throw std::invalid_argument("lattice needs at least the H basis class");
  if (canonical_.rank() != labels_.size())
    throw std::invalid_argument("canonical class rank does not match basis");
  if (history_.size() != labels_.size() - 1)
    throw std::invalid_argument("history length does not match exceptional count");
}

SurfaceLattice SurfaceLattice::plane() {
  return SurfaceLattice({"H"}, DivisorClass({Rational(-3)}), {});
}

QMatrix SurfaceLattice::gram() const {
  QMatrix g(rank(), rank());
  g.at(0, 0) = Rational(1);
  for (std::size_t i = 1; i < rank(); ++i) g.at(i, i) = Rational(-1);
  return g;
}

DivisorClass SurfaceLattice::basis_class(std::size_t index) const {
  if (index >= rank()) throw std::invalid_argument("basis index out of range");
  DivisorClass d(rank());
  d.coords[index] = Rational(1);
  return d;
}

SurfaceLattice blow_up(const SurfaceLattice& l, const std::string& center,
                       const std::string& parent_chart) {
  std::vector<std::string> labels = l.basis_labels();
  labels.push_back("E" + std::to_string(l.rank()));
  QVector k = l.canonical().coords;
  k.push_back(Rational(1));  // K' = pullback(K) + E
  std::vector<BlowUpRecord> hist = l.history();
  hist.push_back({center, parent_chart});
  return SurfaceLattice(std::move(labels), DivisorClass(std::move(k)), std::move(hist));
}

DivisorClass BlowDownMap::pushforward(const DivisorClass& d) const {
  QVector c = d.coords;
  if (dropped_index >= c.size()) throw std::invalid_argument("pushforward rank mismatch");
  c.erase(c.begin() + static_cast<std::ptrdiff_t>(dropped_index));
  return DivisorClass(std::move(c));
}

DivisorClass BlowDownMap::pullback(const DivisorClass& d) const {
  QVector c = d.coords;
  if (dropped_index > c.size()) throw std::invalid_argument("pullback rank mismatch");
  c.insert(c.begin() + static_cast<std::ptrdiff_t>(dropped_index), Rational(0));
  return DivisorClass(std::move(c));
}

BlowDownResult blow_down(const SurfaceLattice& l, const DivisorClass& e) {
  if (e.rank() != l.rank()) throw std::invalid_argument("divisor class rank mismatch");
  std::size_t hit = 0, count = 0;
  for (std::size_t i = 0; i < e.rank(); ++i) {
    if (e.coords[i].is_zero()) continue;
    hit = i;
    ++count;
  }
  if (count != 1 || hit == 0 || e.coords[hit] != Rational(1))
    throw std::invalid_argument(
        "blow_down supports only exceptional basis classes (after relabelling)");

  std::vector<std::string> labels(l.rank() - 1);
  labels[0] = "H";
  for (std::size_t i = 1; i + 1 < l.rank(); ++i) labels[i] = "E" + std::to_string(i);
  QVector k = l.canonical().coords;
  k.erase(k.begin() + static_cast<std::ptrdiff_t>(hit));
  std::vector<BlowUpRecord> hist = l.history();
  hist.erase(hist.begin() + static_cast<std::ptrdiff_t>(hit - 1));
  return BlowDownResult{SurfaceLattice(std::move(labels), DivisorClass(std::move(k)), std::move(hist)),
                        BlowDownMap{hit}};
}

Rational intersect(const SurfaceLattice& l, const DivisorClass& a, const DivisorClass& b) {
  if (a.rank() != l.rank() || b.rank() != l.rank())
    throw std::invalid_argument("divisor class rank mismatch");
  Rational s = a.coords[0] * b.coords[0];
  for (std::size_t i = 1; i < l.rank(); ++i) s -= a.coords[i] * b.coords[i];
  return s;
}

Rational euler_char(const SurfaceLattice& l, const DivisorClass& d) {
  if (!d.is_integral())
    throw std::invalid_argument("euler characteristic needs an integral divisor class");
  Rational dd = intersect(l, d, d);
  Rational dk = intersect(l, d, l.canonical());
  return Rational(1) + (dd - dk) / Rational(2);
}

NoetherReport noether_check(const SurfaceLattice& l) {
  NoetherReport r;
  r.k_squared = intersect(l, l.canonical(), l.canonical());
  r.rank = l.rank();
  r.total = r.k_squared + Rational(2 + static_cast<long>(l.rank()));
  r.holds = (r.total == Rational(12));
  return r;
}

}  // namespace acsurf
