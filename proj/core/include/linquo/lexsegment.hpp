#pragma once

#include <string>
#include <vector>

#include "linquo/quotients.hpp"

namespace linquo {

/// The lexsegment L(u,v) = { w of degree d : u >= w >= v in Lex },
/// materialized in descending Lex order.
struct Lexsegment {
  int n = 0;
  int d = 0;
  Monomial u;
  Monomial v;
  std::vector<Monomial> gens;

  MonomialIdeal ideal() const { return MonomialIdeal::from_generators(n, gens); }
  bool principal() const { return gens.size() == 1; }
  bool is_initial() const; // u = x1^d
  bool is_final() const;   // v = xn^d
  bool is_whole_stratum() const { return is_initial() && is_final(); }
};

Lexsegment build_segment(int n, int d, const Monomial& u, const Monomial& v);
Lexsegment initial_segment(int n, int d, const Monomial& v);
Lexsegment final_segment(int n, int d, const Monomial& u);

struct ShadowResult {
  std::vector<Monomial> monomials; // descending lex
  bool lexsegment = false;
  bool initial = false;
};

/// i-th iterated shadow {x_j w} of a set of same-degree monomials.
ShadowResult shadow(int n, const std::vector<Monomial>& monomials, int iterations = 1);

bool is_lexsegment_set(int n, const std::vector<Monomial>& monomials);

enum class CompletelyTag { initial_segment, final_segment, cond_a, cond_b, not_completely };
enum class LinResTag { none, principal, cond_a, cond_b, cond_c, noncompletely_shape,
                       final_segment, reduced };

struct LexClassification {
  bool completely = false;
  CompletelyTag completely_tag = CompletelyTag::not_completely;
  bool linear_resolution = false;
  LinResTag linres_tag = LinResTag::none;
  std::vector<std::string> notes; // normalizations and flagged edge cases
};

/// Classifies the segment: completeness via the finite conditions (cross
/// checkable against a one-step shadow test by persistence), and linearity
/// of the resolution via the classification theorems for completely and
/// non-completely segments.
LexClassification classify(const Lexsegment& segment);

/// The quotient order of the classification: the prec order for completely
/// segments, and the x1-free lex block followed by the x1-divisible
/// reversed-lex block otherwise. Always validated through check_order.
QuotientCertificate quotient_order(const Lexsegment& segment);

struct DimReport {
  int dim = 0;
  bool is_power_of_max_ideal = false;
};
DimReport krull_dim_formula(const Lexsegment& segment);

struct DepthReport {
  int depth = 0;
  int projdim_quotient = 0;
  bool depth_zero = false;
  std::vector<std::string> notes;
};
DepthReport depth_formula(const Lexsegment& segment);

enum class CMCase { power_of_max_ideal, case_a, case_b, principal, none };

struct CMReport {
  bool cohen_macaulay = false;
  CMCase matched = CMCase::none;
  std::vector<std::string> notes;
};
CMReport is_cohen_macaulay(const Lexsegment& segment);

const char* to_string(CompletelyTag tag);
const char* to_string(LinResTag tag);
const char* to_string(CMCase c);

} // namespace linquo
