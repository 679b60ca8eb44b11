#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "blockalg/center_poly.hpp"
#include "blockalg/character.hpp"
#include "blockalg/gen_index.hpp"
#include "blockalg/partition.hpp"

namespace blockalg {

namespace detail {

/// Rewrites an arbitrary product word of generators (none equal to x_(1,0))
/// into PBW normal form, accumulating coeff * word into `out`.  Adjacent
/// out-of-order pairs are swapped via x_b x_a = x_a x_b + [x_b, x_a]; a
/// central bracket target is folded into the coefficient as a power of z.
/// Terminates: the swapped word loses an inversion, bracket words are shorter.
inline void straighten_into(std::vector<GenIndex> word, CenterPoly coeff,
                            std::map<Partition, CenterPoly>& out) {
  if (coeff.is_zero()) return;
  std::vector<std::pair<std::vector<GenIndex>, CenterPoly>> work;
  work.emplace_back(std::move(word), std::move(coeff));
  while (!work.empty()) {
    auto [w, c] = std::move(work.back());
    work.pop_back();

    std::size_t k = 0;
    while (k + 1 < w.size() && !(w[k + 1] < w[k])) ++k;
    if (k + 1 >= w.size()) {  // sorted: a PBW monomial
      auto key = Partition::from_sorted(std::move(w));
      auto it = out.find(key);
      if (it == out.end())
        out.emplace(std::move(key), std::move(c));
      else
        it->second += c;
      continue;
    }

    const GenBracket br = bracket(w[k], w[k + 1]);
    if (!br.is_zero()) {
      if (is_central(br.target)) {
        std::vector<GenIndex> shorter(w);
        shorter.erase(shorter.begin() + k, shorter.begin() + k + 2);
        work.emplace_back(std::move(shorter), c.shifted(1) * Rat(br.coeff));
      } else {
        std::vector<GenIndex> shorter(w);
        shorter.erase(shorter.begin() + k + 1);
        shorter[k] = br.target;
        work.emplace_back(std::move(shorter), c * Rat(br.coeff));
      }
    }
    std::swap(w[k], w[k + 1]);
    work.emplace_back(std::move(w), std::move(c));
  }
}

inline void prune_zeros(std::map<Partition, CenterPoly>& terms) {
  for (auto it = terms.begin(); it != terms.end();)
    it = it->second.is_zero() ? terms.erase(it) : std::next(it);
}

}  // namespace detail

/// Element of U(B) in canonical PBW form: a finite map from partitions over
/// K\R to nonzero S(Z) coefficients.  Immutable value semantics; equality is
/// map equality.
class UEAElement {
 public:
  UEAElement() = default;

  static UEAElement zero() { return {}; }
  static UEAElement one() { return scalar(CenterPoly(Rat(1))); }

  static UEAElement scalar(CenterPoly p) {
    UEAElement u;
    if (!p.is_zero()) u.terms_.emplace(Partition(), std::move(p));
    return u;
  }

  /// The generator x_g as an element; x_(1,0) becomes the scalar z.
  static UEAElement generator(GenIndex g) {
    require_generator(g, "UEAElement::generator");
    if (is_central(g)) return scalar(CenterPoly::z());
    UEAElement u;
    u.terms_.emplace(Partition::from_sorted({g}), CenterPoly(Rat(1)));
    return u;
  }

  static UEAElement monomial(const Partition& p, CenterPoly coeff = CenterPoly(Rat(1))) {
    for (const auto& part : p.parts())
      if (is_central(part))
        throw std::invalid_argument("UEAElement: monomial contains x_(1,0); it belongs in S(Z)");
    UEAElement u;
    if (!coeff.is_zero()) u.terms_.emplace(p, std::move(coeff));
    return u;
  }

  /// Straightens an arbitrary product of generators (x_(1,0) allowed; folded
  /// into the coefficient) into canonical form.
  static UEAElement word(std::span<const GenIndex> letters, CenterPoly coeff = CenterPoly(Rat(1))) {
    std::vector<GenIndex> w;
    w.reserve(letters.size());
    std::int64_t z_power = 0;
    for (const auto& g : letters) {
      require_generator(g, "UEAElement::word");
      if (is_central(g))
        ++z_power;
      else
        w.push_back(g);
    }
    UEAElement u;
    detail::straighten_into(std::move(w), coeff.shifted(z_power), u.terms_);
    detail::prune_zeros(u.terms_);
    return u;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Partition, CenterPoly>& terms() const { return terms_; }

  CenterPoly coeff(const Partition& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? CenterPoly() : it->second;
  }

  void add_term(const Partition& p, const CenterPoly& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(p);
    if (it == terms_.end()) {
      terms_.emplace(p, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  UEAElement& operator+=(const UEAElement& o) {
    for (const auto& [p, c] : o.terms_) add_term(p, c);
    return *this;
  }
  UEAElement& operator-=(const UEAElement& o) {
    for (const auto& [p, c] : o.terms_) add_term(p, -c);
    return *this;
  }
  UEAElement& operator*=(const CenterPoly& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [p, c] : terms_) c *= s;
    detail::prune_zeros(terms_);
    return *this;
  }
  UEAElement& operator*=(const Rat& s) { return *this *= CenterPoly(s); }

  friend UEAElement operator+(UEAElement a, const UEAElement& b) { return a += b; }
  friend UEAElement operator-(UEAElement a, const UEAElement& b) { return a -= b; }
  friend UEAElement operator-(UEAElement a) {
    for (auto& [p, c] : a.terms_) c = -c;
    return a;
  }
  friend UEAElement operator*(UEAElement a, const CenterPoly& s) { return a *= s; }
  friend UEAElement operator*(const CenterPoly& s, UEAElement a) { return a *= s; }
  friend UEAElement operator*(UEAElement a, const Rat& s) { return a *= s; }
  friend UEAElement operator*(const Rat& s, UEAElement a) { return a *= s; }

  /// Product in U(B), straightened to canonical PBW form.
  friend UEAElement operator*(const UEAElement& a, const UEAElement& b) {
    UEAElement r;
    for (const auto& [pa, ca] : a.terms_)
      for (const auto& [pb, cb] : b.terms_) {
        std::vector<GenIndex> w;
        w.reserve(pa.parts().size() + pb.parts().size());
        w.insert(w.end(), pa.parts().begin(), pa.parts().end());
        w.insert(w.end(), pb.parts().begin(), pb.parts().end());
        detail::straighten_into(std::move(w), ca * cb, r.terms_);
      }
    detail::prune_zeros(r.terms_);
    return r;
  }

  UEAElement pow(std::int64_t k) const {
    if (k < 0) throw std::invalid_argument("UEAElement::pow: negative exponent");
    UEAElement r = one();
    for (std::int64_t t = 0; t < k; ++t) r = r * *this;
    return r;
  }

  friend bool operator==(const UEAElement&, const UEAElement&) = default;

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [p, c] : terms_) {
      if (!s.empty()) s += " + ";
      s += "(" + c.str() + ")";
      if (!p.empty()) s += "*x" + p.str();
    }
    return s;
  }

 private:
  std::map<Partition, CenterPoly> terms_;
};

inline UEAElement multiply(const UEAElement& a, const UEAElement& b) { return a * b; }

inline UEAElement lie_bracket(const UEAElement& a, const UEAElement& b) {
  return a * b - b * a;
}

/// ht(u): maximal number of non-central generator factors over the terms.
inline std::int64_t height(const UEAElement& u) {
  if (u.is_zero()) throw std::invalid_argument("height: zero element");
  std::int64_t h = 0;
  for (const auto& [p, c] : u.terms()) h = std::max(h, p.length());
  return h;
}

/// Splits into Q-homogeneous components; a term p(z) x_lambda contributes
/// z^k x_lambda at degree |lambda| * (1,0)^k for every power k in p.
inline std::map<QDegree, UEAElement> grade_split(const UEAElement& u) {
  std::map<QDegree, UEAElement> comps;
  for (const auto& [p, c] : u.terms()) {
    const QDegree base = p.degree();
    for (std::int64_t k = 0; k <= c.degree(); ++k) {
      if (c.coeff(k) == 0) continue;
      comps[star(base, star_pow({1, 0}, k))].add_term(p, CenterPoly::monomial(c.coeff(k), k));
    }
  }
  return comps;
}

/// Least Q-degree among the nonzero homogeneous components.
inline QDegree mindeg(const UEAElement& u) {
  if (u.is_zero()) throw std::invalid_argument("mindeg: zero element");
  return grade_split(u).begin()->first;
}

/// Least value of the Z-grading pi over the components (z-powers sit at pi = 0).
inline std::int64_t mindeg1(const UEAElement& u) {
  if (u.is_zero()) throw std::invalid_argument("mindeg1: zero element");
  std::int64_t m = 0;
  bool first = true;
  for (const auto& [p, c] : u.terms()) {
    const std::int64_t v = p.pi_degree();
    if (first || v < m) m = v;
    first = false;
  }
  return m;
}

inline bool supported_in_b_minus(const UEAElement& u) {
  for (const auto& [p, c] : u.terms())
    for (const auto& part : p.parts())
      if (!in_b_minus(part)) return false;
  return true;
}

/// [x, y] for x in n and y in U(b_-), separated as sum v*w + remainder with
/// each w a single generator in n and v, remainder in U(b_-).
struct BracketDecomposition {
  std::vector<std::pair<UEAElement, GenIndex>> extracted;
  UEAElement remainder;
};

inline BracketDecomposition bracket_decompose(GenIndex x, const UEAElement& y) {
  if (!in_n(x)) throw std::invalid_argument("bracket_decompose: x must lie in n");
  if (!supported_in_b_minus(y))
    throw std::invalid_argument("bracket_decompose: y must be supported in U(b_-)");

  const UEAElement lb = lie_bracket(UEAElement::generator(x), y);
  std::map<GenIndex, UEAElement> by_gen;
  BracketDecomposition out;
  for (const auto& [p, c] : lb.terms()) {
    const auto& parts = p.parts();
    std::size_t split = parts.size();
    while (split > 0 && in_n(parts[split - 1])) --split;
    if (split == parts.size()) {
      out.remainder.add_term(p, c);
      continue;
    }
    // At most one n-factor can appear: the commutator replaces a single
    // letter of y and straightening corrections never create a second one.
    if (split != parts.size() - 1)
      throw std::logic_error("bracket_decompose: unexpected multi-generator n-tail");
    std::vector<GenIndex> head(parts.begin(), parts.end() - 1);
    by_gen[parts.back()].add_term(Partition::from_sorted(std::move(head)), c);
  }
  for (auto& [g, v] : by_gen) out.extracted.emplace_back(std::move(v), g);
  return out;
}

/// Component of u in U(b_-) under U(B) = U(b_-) + I_phi: each trailing
/// n-monomial collapses to its phi-value.
inline UEAElement phi_component(const UEAElement& u, const Character& phi) {
  UEAElement r;
  for (const auto& [p, c] : u.terms()) {
    const auto& parts = p.parts();
    std::size_t split = parts.size();
    while (split > 0 && in_n(parts[split - 1])) --split;
    Rat scale(1);
    for (std::size_t k = split; k < parts.size() && scale != 0; ++k)
      scale *= phi.eval_gen(parts[k]);
    if (scale == 0) continue;
    std::vector<GenIndex> head(parts.begin(), parts.begin() + split);
    r.add_term(Partition::from_sorted(std::move(head)), c * scale);
  }
  return r;
}

}  // namespace blockalg
