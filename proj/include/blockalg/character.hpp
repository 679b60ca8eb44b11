#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

#include "blockalg/gen_index.hpp"
#include "blockalg/rational.hpp"

namespace blockalg {

/// A character phi: n -> scalars, determined by its values on the a+i = 2
/// line, c_m = phi(x_(2-m,m)).  Generators with a+i >= 3 are commutators of
/// that line, so phi vanishes there for every choice of the c_m.
class Character {
 public:
  struct Constant {
    Rat value;
  };
  struct Geometric {  // c_m = c * q^m
    Rat c, q;
  };
  struct Polynomial {  // c_m = sum_k coeffs[k] * m^k
    std::vector<Rat> coeffs;
  };
  struct Factorial {};  // c_m = m!
  struct Explicit {     // c_m = values[m] for m < |values|, else tail
    std::vector<Rat> values;
    Rat tail;
  };
  using Spec = std::variant<Constant, Geometric, Polynomial, Factorial, Explicit>;

  static Character constant(Rat c) { return Character(Constant{std::move(c)}); }
  static Character geometric(Rat c, Rat q) { return Character(Geometric{std::move(c), std::move(q)}); }
  static Character polynomial(std::vector<Rat> coeffs) {
    return Character(Polynomial{std::move(coeffs)});
  }
  static Character factorial() { return Character(Factorial{}); }
  static Character explicit_values(std::vector<Rat> values, Rat tail) {
    return Character(Explicit{std::move(values), std::move(tail)});
  }

  const Spec& spec() const { return spec_; }

  /// c_m = phi(x_(2-m,m)), m >= 0.
  Rat c(std::int64_t m) const {
    if (m < 0) throw std::invalid_argument("Character::c: negative index");
    return std::visit(
        [&](const auto& s) -> Rat {
          using T = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<T, Constant>) {
            return s.value;
          } else if constexpr (std::is_same_v<T, Geometric>) {
            Rat p = s.c;
            for (std::int64_t k = 0; k < m; ++k) p *= s.q;
            return p;
          } else if constexpr (std::is_same_v<T, Polynomial>) {
            Rat v(0), mp(1);
            for (const auto& a : s.coeffs) {
              v += a * mp;
              mp *= m;
            }
            return v;
          } else if constexpr (std::is_same_v<T, Factorial>) {
            return Rat(factorial(m));
          } else {
            if (m < static_cast<std::int64_t>(s.values.size()))
              return s.values[static_cast<std::size_t>(m)];
            return s.tail;
          }
        },
        spec_);
  }

  /// phi on a generator: c_i on the a+i = 2 line, 0 on a+i >= 3; generators
  /// outside n are rejected.
  Rat eval_gen(GenIndex x) const {
    require_generator(x, "Character::eval_gen");
    const std::int64_t s = x.a + x.i;
    if (s == 2) return c(x.i);
    if (s >= 3) return Rat(0);
    throw std::invalid_argument("Character::eval_gen: " + gen_to_string(x) + " is not in n");
  }

  /// Least m <= m_max with c_m = 0, if any.
  std::optional<std::int64_t> first_singular(std::int64_t m_max) const {
    for (std::int64_t m = 0; m <= m_max; ++m)
      if (c(m) == 0) return m;
    return std::nullopt;
  }

  bool nonsingular_up_to(std::int64_t m_max) const { return !first_singular(m_max); }

 private:
  explicit Character(Spec s) : spec_(std::move(s)) {}

  Spec spec_;
};

}  // namespace blockalg
