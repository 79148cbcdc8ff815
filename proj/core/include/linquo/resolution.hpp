#pragma once

#include <optional>
#include <string>
#include <vector>

#include "linquo/betti.hpp"
#include "linquo/quotients.hpp"

namespace linquo {

/// Basis symbol f(sigma; u) with internal degree |sigma| + deg(u).
struct BasisLabel {
  std::vector<int> sigma; // ascending 1-based indices
  Monomial gen;
  int degree;

  std::string str() const;
};

struct ResolutionEntry {
  int row;
  int col;
  int sign; // +1 or -1
  Monomial mono;
};

struct ResolutionMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<ResolutionEntry> entries;
};

/// An explicit complex of graded free modules with monomial-entry
/// differentials. `target == ideal` means modules[0] surjects onto I (the
/// generator row is stored separately as `augmentation`); `target ==
/// quotient` means modules[0] is the rank-one free module S mapping onto S/I.
struct GradedFreeResolution {
  enum class Target { ideal, quotient };

  Target target = Target::quotient;
  int n = 0;
  std::vector<std::vector<BasisLabel>> modules;
  std::vector<ResolutionMatrix> diffs; // diffs[k] : modules[k+1] -> modules[k]
  std::optional<ResolutionMatrix> augmentation; // for target == ideal

  /// Human-readable shape like "0 -> S(-5) -> S(-4)^4 -> S(-2)+S(-3)^3".
  std::string shape() const;
};

/// The Koszul complex of a monomial sequence, as a complex over S with
/// K_0 = S; a resolution of S/(f) exactly when f is a regular sequence.
/// Basis e_sigma ordered colex within each stage.
GradedFreeResolution koszul(int n, const std::vector<Monomial>& sequence);

/// Eliahou-Kervaire resolution of a stable ideal: basis f(sigma; u) with
/// max(sigma) < max(u), ordered generator-major with sigma in colex order.
GradedFreeResolution ek_resolution(const MonomialIdeal& ideal);

/// Iterated-mapping-cone resolution of S/I for a linear-quotients
/// certificate whose decomposition function is regular; basis f(sigma; u)
/// with sigma inside set(u). Errors when the decomposition function is not
/// regular or generator degrees are not weakly increasing.
GradedFreeResolution mapping_cone_resolution(const QuotientCertificate& certificate);

struct ComplexReport {
  bool dd_zero = false;
  bool minimal = false;
  BettiTable betti_of_ideal; // ranks by internal degree, stage 0 = generators
};

ComplexReport verify_complex(const GradedFreeResolution& resolution);

/// Numerator polynomial over the common denominator (1-t)^n.
struct KPolynomial {
  int denom_power = 0;
  std::vector<long long> coeffs; // coeffs[k] multiplies t^k

  long long coefficient(int k) const {
    return (k >= 0 && k < static_cast<int>(coeffs.size())) ? coeffs[static_cast<std::size_t>(k)]
                                                           : 0;
  }
  void trim();
  std::string str() const;
  friend bool operator==(const KPolynomial& a, const KPolynomial& b) {
    return a.denom_power == b.denom_power && a.coeffs == b.coeffs;
  }
};

/// H(I,t) = sum_u t^{deg u} / (1-t)^{n-max(u)+1} over the common
/// denominator (1-t)^n, for stable ideals.
KPolynomial stable_hilbert_series(const MonomialIdeal& ideal);

/// Series expansion helper: the coefficient of t^k in N(t)/(1-t)^n.
long long kpolynomial_series_coefficient(const KPolynomial& p, int n, int k);

/// Dense printing of a differential in bracketed row-major layout.
std::string matrix_pretty(const ResolutionMatrix& m);

} // namespace linquo
