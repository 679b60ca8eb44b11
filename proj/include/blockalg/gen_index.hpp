#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "blockalg/rational.hpp"

namespace blockalg {

/// Index (a, i) of a basis generator x_(a,i).  The same pair type doubles as
/// an element of the degree group Q = Z x Z, where the second entry may go
/// negative; operations that consume actual generators reject i < 0.
struct GenIndex {
  std::int64_t a = 0;
  std::int64_t i = 0;

  friend bool operator==(const GenIndex&, const GenIndex&) = default;

  /// Total order on Q: by a+i first, ties broken by i.  Translation-invariant
  /// for the star product.
  friend std::strong_ordering operator<=>(const GenIndex& x, const GenIndex& y) {
    if (auto c = (x.a + x.i) <=> (y.a + y.i); c != 0) return c;
    return x.i <=> y.i;
  }
};

using QDegree = GenIndex;

/// Group structure on Q: (a,i) * (b,j) = (a+b, i+j-1), identity (0,1).
constexpr QDegree star(QDegree x, QDegree y) { return {x.a + y.a, x.i + y.i - 1}; }
constexpr QDegree q_identity() { return {0, 1}; }
constexpr QDegree star_inverse(QDegree x) { return {-x.a, 2 - x.i}; }

inline QDegree star_pow(QDegree x, std::int64_t k) {
  if (k < 0) return star_pow(star_inverse(x), -k);
  QDegree r = q_identity();
  for (std::int64_t t = 0; t < k; ++t) r = star(r, x);
  return r;
}

/// pi(a,i) = a+i-1: the order-preserving homomorphism Q -> Z.
constexpr std::int64_t pi(QDegree x) { return x.a + x.i - 1; }
constexpr std::int64_t pi1(QDegree x) { return x.a; }
constexpr std::int64_t pi2(QDegree x) { return x.i; }

constexpr bool is_generator(GenIndex x) { return x.i >= 0; }
constexpr bool is_central(GenIndex x) { return x.a == 1 && x.i == 0; }

inline std::string gen_to_string(GenIndex x) {
  return "(" + std::to_string(x.a) + "," + std::to_string(x.i) + ")";
}

inline void require_generator(GenIndex x, const char* who) {
  if (!is_generator(x))
    throw std::invalid_argument(std::string(who) + ": " + gen_to_string(x) +
                                " has negative second index, not a generator");
}

/// Triangular decomposition: n_- (a+i < 1), h (a+i = 1), n (a+i > 1); the
/// center {x_(1,0)} sits inside h.
enum class GenClass { n_minus, h, n, center };

inline GenClass classify(GenIndex x) {
  require_generator(x, "classify");
  if (is_central(x)) return GenClass::center;
  const std::int64_t s = x.a + x.i;
  if (s > 1) return GenClass::n;
  if (s == 1) return GenClass::h;
  return GenClass::n_minus;
}

constexpr bool in_n(GenIndex x) { return is_generator(x) && x.a + x.i > 1; }
constexpr bool in_h(GenIndex x) { return is_generator(x) && x.a + x.i == 1; }
constexpr bool in_n_minus(GenIndex x) { return is_generator(x) && x.a + x.i < 1; }
constexpr bool in_b_minus(GenIndex x) { return is_generator(x) && x.a + x.i <= 1; }

/// One structure-constant bracket [x_(a,i), x_(b,j)] = ((b-1)i - (a-1)j) x_(a+b, i+j-1).
/// coeff = 0 means the bracket vanishes; target is meaningful only otherwise.
struct GenBracket {
  Int coeff;
  GenIndex target;
  bool is_zero() const { return coeff == 0; }
};

inline GenBracket bracket(GenIndex x, GenIndex y) {
  require_generator(x, "bracket");
  require_generator(y, "bracket");
  Int c = Int(y.a - 1) * x.i - Int(x.a - 1) * y.i;
  if (c == 0) return {Int(0), q_identity()};
  // c != 0 forces i+j >= 1, so the target is a genuine generator.
  return {std::move(c), star(x, y)};
}

}  // namespace blockalg
