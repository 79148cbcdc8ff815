#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "linquo/quotients.hpp"
#include "linquo/resolution.hpp"

namespace linquo {

/// A permutation of [m] in one-line notation (1-based values). The product
/// a*b acts as the composite a after b, so a word s_{i_1} ... s_{i_k} folds
/// left to right.
class Permutation {
public:
  static Permutation identity(int m);
  static Permutation from_one_line(std::vector<int> values);
  static Permutation transposition(int m, int i, int j);
  /// Parses cycle notation like "(1 2 4)" or "(1 4)(2 3)".
  static Permutation from_cycles(int m, const std::string& text);

  int size() const { return static_cast<int>(values_.size()); }
  int apply(int i) const { return values_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& one_line() const { return values_; }
  bool is_identity() const;

  int length() const; // inversion count
  Permutation compose(const Permutation& other) const; // this after other
  Permutation inverse() const;
  /// this * s_i (right multiplication by the adjacent transposition).
  Permutation right_multiply(int i) const;
  bool right_descent(int i) const; // length(this * s_i) < length(this)

  std::string str() const;

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.values_ == b.values_;
  }
  friend bool operator!=(const Permutation& a, const Permutation& b) { return !(a == b); }

private:
  explicit Permutation(std::vector<int> values) : values_(std::move(values)) {}
  std::vector<int> values_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const {
    std::size_t h = 1469598103934665603ull;
    for (int v : p.one_line()) {
      h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

/// A word in the simple reflections of the symmetric group S_m: a sequence
/// of letters in [m-1].
struct CoxeterWord {
  int m = 0;
  std::vector<int> letters;

  int size() const { return static_cast<int>(letters.size()); }
};

/// All reduced words of pi, each a letter sequence.
std::vector<std::vector<int>> reduced_words(const Permutation& pi);

Permutation demazure_product(const CoxeterWord& word);

/// Bruhat order via the subword property against one fixed reduced word.
bool bruhat_leq(const Permutation& a, const Permutation& b);

/// Does some subsequence of the word represent pi?
bool word_contains(const CoxeterWord& word, const Permutation& pi);

struct SubwordReport {
  CoxeterWord word;
  Permutation pi = Permutation::identity(1);
  int ell = 0;
  bool empty_complex = false; // word does not contain pi
  /// Position sets of the representing subwords, ordered so their monomials
  /// x_P descend in lex.
  std::vector<std::vector<int>> representing;
  std::vector<std::vector<int>> facets; // complements, in the same order
  std::optional<MonomialIdeal> dual_ideal;
  std::optional<QuotientCertificate> certificate;
  std::vector<int> d_values;
  std::vector<std::vector<int>> min_formula_sets; // {min(P_j \ P_i) : j < i}
};

/// Facets and dual-ideal data of the subword complex. Guarded to m <= 7 and
/// word size <= 14.
SubwordReport subword_complex(const CoxeterWord& word, const Permutation& pi);

struct SubwordBounds {
  int projdim_dual = 0;
  int projdim_dual_bound = 0; // n - ell(pi)
  int projdim_sr_ring = 0;    // ell(pi)
  int reg_sr_bound = 0;       // n - ell(pi) + 1
  bool within_bound = false;
};

SubwordBounds bounds_report(const SubwordReport& report);

struct SpecialClassReport {
  int r = 0;
  std::optional<int> unique_l;
  Monomial factor = Monomial::one(1); // x_{P_r} / x_l
  std::vector<int> prime_variables;   // min(P_j \ P_r) for j < r, then l
  BettiTable betti;                   // C(r, i+1) in the linear degrees
  KPolynomial k_polynomial;           // closed form
  bool sphere = false;
  int height_dual = 0;
  std::vector<Monomial> sr_complete_intersection; // generators of I_Delta
};

/// Applies when r <= n - ell(pi) + 1 and d_r = r - 1; nullopt otherwise.
std::optional<SpecialClassReport> special_class_analysis(const SubwordReport& report);

enum class SphereVerdict { sphere, ball };

/// Sphere when the Demazure product of the whole word is pi, ball otherwise;
/// errors when the word does not contain pi.
SphereVerdict sphere_or_ball(const CoxeterWord& word, const Permutation& pi);

/// K-polynomial of the dual Stanley-Reisner ideal by brute-force Demazure
/// enumeration over all subwords.
KPolynomial kpolynomial_brute_force(const CoxeterWord& word, const Permutation& pi);

} // namespace linquo
