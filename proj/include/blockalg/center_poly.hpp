#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "blockalg/rational.hpp"

namespace blockalg {

/// Polynomial in the central generator z = x_(1,0), rational coefficients in
/// ascending powers, no trailing zeros (the zero polynomial is empty).
class CenterPoly {
 public:
  CenterPoly() = default;
  explicit CenterPoly(Rat constant) {
    if (constant != 0) c_.push_back(std::move(constant));
  }
  explicit CenterPoly(std::int64_t constant) : CenterPoly(Rat(constant)) {}

  static CenterPoly from_coeffs(std::vector<Rat> coeffs) {
    CenterPoly p;
    p.c_ = std::move(coeffs);
    p.trim();
    return p;
  }

  static CenterPoly z() { return monomial(Rat(1), 1); }

  static CenterPoly monomial(Rat coeff, std::int64_t power) {
    CenterPoly p;
    if (coeff != 0) {
      p.c_.assign(static_cast<std::size_t>(power) + 1, Rat(0));
      p.c_.back() = std::move(coeff);
    }
    return p;
  }

  bool is_zero() const { return c_.empty(); }
  /// Degree in z; -1 for the zero polynomial.
  std::int64_t degree() const { return static_cast<std::int64_t>(c_.size()) - 1; }
  const std::vector<Rat>& coeffs() const { return c_; }

  Rat coeff(std::int64_t k) const {
    if (k < 0 || k >= static_cast<std::int64_t>(c_.size())) return Rat(0);
    return c_[static_cast<std::size_t>(k)];
  }

  Rat leading() const { return c_.empty() ? Rat(0) : c_.back(); }
  bool is_constant() const { return degree() <= 0; }

  /// Multiplication by z^k.
  CenterPoly shifted(std::int64_t k) const {
    if (is_zero() || k == 0) return k == 0 ? *this : CenterPoly();
    CenterPoly p;
    p.c_.assign(static_cast<std::size_t>(k), Rat(0));
    p.c_.insert(p.c_.end(), c_.begin(), c_.end());
    return p;
  }

  Rat eval(const Rat& x) const {
    Rat v(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + *it;
    return v;
  }

  CenterPoly& operator+=(const CenterPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rat(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
  }

  CenterPoly& operator-=(const CenterPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rat(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
  }

  CenterPoly& operator*=(const Rat& s) {
    if (s == 0) {
      c_.clear();
      return *this;
    }
    for (auto& v : c_) v *= s;
    return *this;
  }

  CenterPoly& operator*=(const CenterPoly& o) { return *this = *this * o; }

  friend CenterPoly operator+(CenterPoly a, const CenterPoly& b) { return a += b; }
  friend CenterPoly operator-(CenterPoly a, const CenterPoly& b) { return a -= b; }
  friend CenterPoly operator-(CenterPoly a) {
    for (auto& v : a.c_) v = -v;
    return a;
  }
  friend CenterPoly operator*(CenterPoly a, const Rat& s) { return a *= s; }
  friend CenterPoly operator*(const Rat& s, CenterPoly a) { return a *= s; }

  friend CenterPoly operator*(const CenterPoly& a, const CenterPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    CenterPoly p;
    p.c_.assign(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (std::size_t k = 0; k < a.c_.size(); ++k)
      for (std::size_t l = 0; l < b.c_.size(); ++l) p.c_[k + l] += a.c_[k] * b.c_[l];
    return p;
  }

  /// Division with remainder by a monic divisor (leading coefficient 1).
  std::pair<CenterPoly, CenterPoly> divmod(const CenterPoly& monic) const {
    if (monic.is_zero() || monic.leading() != 1)
      throw std::invalid_argument("divmod: divisor must be monic");
    CenterPoly q, r = *this;
    const std::int64_t d = monic.degree();
    while (!r.is_zero() && r.degree() >= d) {
      const std::int64_t k = r.degree() - d;
      const Rat f = r.leading();
      q += monomial(f, k);
      for (std::int64_t t = 0; t <= d; ++t)
        r.c_[static_cast<std::size_t>(k + t)] -= f * monic.c_[static_cast<std::size_t>(t)];
      r.trim();
    }
    return {std::move(q), std::move(r)};
  }

  friend bool operator==(const CenterPoly&, const CenterPoly&) = default;

  std::string str() const {
    if (c_.empty()) return "0";
    std::string s;
    for (std::size_t k = 0; k < c_.size(); ++k) {
      if (c_[k] == 0) continue;
      Rat v = c_[k];
      if (!s.empty()) {
        s += (v < 0) ? " - " : " + ";
        if (v < 0) v = -v;
      }
      const bool unit = (v == 1 && k > 0);
      if (!unit) s += rat_to_string(v);
      if (k >= 1) {
        if (!unit) s += "*";
        s += (k == 1) ? "z" : "z^" + std::to_string(k);
      }
    }
    return s;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Rat> c_;
};

}  // namespace blockalg
