#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "linquo/error.hpp"

namespace linquo {

/// A monomial in a fixed ambient polynomial ring k[x_1,...,x_n].
///
/// Variables are 1-based everywhere in the public interface. Values are
/// immutable after construction; all operations are pure.
class Monomial {
public:
  explicit Monomial(std::vector<int> exponents);

  static Monomial one(int n);
  static Monomial variable(int n, int index);
  /// Parses the text grammar `x1^2*x2*x4` (or `1` for the constant).
  static Monomial parse(int n, std::string_view text);

  int vars() const { return static_cast<int>(exps_.size()); }
  int degree() const { return degree_; }
  int exponent(int index) const; // 1-based
  const std::vector<int>& exponents() const { return exps_; }

  bool is_one() const { return degree_ == 0; }
  bool is_squarefree() const;

  std::vector<int> support() const;           // ascending, 1-based
  std::optional<int> max_index() const;       // none for the constant 1
  std::optional<int> min_index() const;

  bool divides(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  Monomial times(const Monomial& other) const;
  Monomial times_variable(int index) const;
  /// this / gcd(this, other): the generator of the colon (this):(other).
  Monomial colon(const Monomial& other) const;
  /// Exact division; errors unless other | this.
  Monomial divide(const Monomial& other) const;
  Monomial divide_by_variable(int index) const;

  std::string str() const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.exps_ == b.exps_;
  }
  friend bool operator!=(const Monomial& a, const Monomial& b) {
    return !(a == b);
  }

private:
  void check_same_vars(const Monomial& other) const;

  std::vector<int> exps_;
  int degree_ = 0;
};

/// The three term orders used by the library. Lex is x_1 > ... > x_n,
/// LexReversed is x_n > ... > x_1, Prec refines by the exponent of x_1
/// ascending and breaks ties by Lex descending. Prec is a total order on
/// monomials of a fixed degree only.
enum class TermOrder { lex, lex_reversed, prec };

std::strong_ordering compare(const Monomial& a, const Monomial& b, TermOrder order);

inline bool lex_greater(const Monomial& a, const Monomial& b) {
  return compare(a, b, TermOrder::lex) == std::strong_ordering::greater;
}
inline bool lex_less(const Monomial& a, const Monomial& b) {
  return compare(a, b, TermOrder::lex) == std::strong_ordering::less;
}
inline bool lex_geq(const Monomial& a, const Monomial& b) {
  return compare(a, b, TermOrder::lex) != std::strong_ordering::less;
}
inline bool lex_leq(const Monomial& a, const Monomial& b) {
  return compare(a, b, TermOrder::lex) != std::strong_ordering::greater;
}

/// All monomials of degree d in n variables, in descending Lex order.
/// Errors once the count would exceed `guard`.
std::vector<Monomial> monomials_of_degree(int n, int d, std::uint64_t guard = 1000000);

/// Number of monomials of degree d in n variables, C(n+d-1, d), as a
/// guarded 64-bit value.
std::uint64_t count_monomials_of_degree(int n, int d);

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const {
    std::size_t h = 1469598103934665603ull;
    for (int e : m.exponents()) {
      h ^= static_cast<std::size_t>(e) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

} // namespace linquo
