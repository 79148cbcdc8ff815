#include "linquo/lexsegment.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace linquo {

namespace {

Monomial power_of_variable(int n, int index, int e) {
  std::vector<int> exps(static_cast<std::size_t>(n), 0);
  exps[static_cast<std::size_t>(index - 1)] = e;
  return Monomial(std::move(exps));
}

} // namespace

bool Lexsegment::is_initial() const { return u == power_of_variable(n, 1, d); }
bool Lexsegment::is_final() const { return v == power_of_variable(n, n, d); }

Lexsegment build_segment(int n, int d, const Monomial& u, const Monomial& v) {
  require(n >= 1 && d >= 1, errc::invalid_input, "need n >= 1 and d >= 1");
  require(u.vars() == n && v.vars() == n, errc::dimension_mismatch,
          "segment ends live in the wrong ring");
  require(u.degree() == d && v.degree() == d, errc::invalid_input,
          "segment ends must have degree d");
  require(lex_geq(u, v), errc::invalid_input, "need u >= v in lex order");
  auto stratum = monomials_of_degree(n, d);
  std::vector<Monomial> gens;
  for (const auto& w : stratum)
    if (lex_leq(w, u) && lex_geq(w, v)) gens.push_back(w);
  return Lexsegment{n, d, u, v, std::move(gens)};
}

Lexsegment initial_segment(int n, int d, const Monomial& v) {
  return build_segment(n, d, power_of_variable(n, 1, d), v);
}

Lexsegment final_segment(int n, int d, const Monomial& u) {
  return build_segment(n, d, u, power_of_variable(n, n, d));
}

bool is_lexsegment_set(int n, const std::vector<Monomial>& monomials) {
  if (monomials.empty()) return true;
  int d = monomials.front().degree();
  for (const auto& w : monomials)
    require(w.degree() == d, errc::invalid_input, "set is not equigenerated");
  std::vector<Monomial> sorted = monomials;
  std::sort(sorted.begin(), sorted.end(), lex_greater);
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  auto segment = build_segment(n, d, sorted.front(), sorted.back());
  return segment.gens == sorted;
}

ShadowResult shadow(int n, const std::vector<Monomial>& monomials, int iterations) {
  require(iterations >= 0, errc::invalid_input, "negative shadow iteration");
  std::vector<Monomial> current = monomials;
  if (!current.empty()) {
    int d = current.front().degree();
    for (const auto& w : current)
      require(w.degree() == d, errc::invalid_input, "shadow needs a uniform degree");
  }
  for (int it = 0; it < iterations; ++it) {
    std::vector<Monomial> next;
    next.reserve(current.size() * static_cast<std::size_t>(n));
    for (const auto& w : current)
      for (int i = 1; i <= n; ++i) next.push_back(w.times_variable(i));
    std::sort(next.begin(), next.end(), lex_greater);
    next.erase(std::unique(next.begin(), next.end()), next.end());
    current = std::move(next);
  }
  ShadowResult result;
  result.lexsegment = is_lexsegment_set(n, current);
  result.initial = result.lexsegment && !current.empty() &&
                   current.front() == power_of_variable(n, 1, current.front().degree());
  result.monomials = std::move(current);
  return result;
}

namespace {

/// Condition (a): u = x1^p x2^{d-p}, v = x1^p xn^{d-p} for some 0 < p <= d.
bool condition_a(const Lexsegment& seg) {
  int p = seg.u.exponent(1);
  if (p < 1 || seg.v.exponent(1) != p) return false;
  Monomial eu = power_of_variable(seg.n, 1, p);
  if (seg.d > p) {
    if (seg.n < 2) return false;
    eu = eu.times(power_of_variable(seg.n, 2, seg.d - p));
  }
  Monomial ev = power_of_variable(seg.n, 1, p);
  if (seg.d > p) ev = ev.times(power_of_variable(seg.n, seg.n, seg.d - p));
  return seg.u == eu && seg.v == ev;
}

/// Condition (b) quantifier: for every w < v in the degree stratum there is
/// i > 1 with x_i | w and x1 w / x_i <= u.
bool condition_b_quantifier(const Lexsegment& seg) {
  auto stratum = monomials_of_degree(seg.n, seg.d);
  for (const auto& w : stratum) {
    if (!lex_less(w, seg.v)) continue;
    bool witnessed = false;
    for (int i = 2; i <= seg.n && !witnessed; ++i) {
      if (w.exponent(i) == 0) continue;
      Monomial moved = w.times_variable(1).divide_by_variable(i);
      if (lex_leq(moved, seg.u)) witnessed = true;
    }
    if (!witnessed) return false;
  }
  return true;
}

/// Largest w of degree d strictly below v in lex, if any.
std::optional<Monomial> predecessor_in_stratum(const Lexsegment& seg) {
  auto stratum = monomials_of_degree(seg.n, seg.d);
  for (const auto& w : stratum)
    if (lex_less(w, seg.v)) return w;
  return std::nullopt;
}

bool noncompletely_shape(const Lexsegment& seg) {
  if (seg.u.exponent(1) != 1) return false;
  auto lopt = seg.v.min_index();
  if (!lopt) return false;
  int l = *lopt;
  if (l < 2 || l >= seg.n) return false;
  Monomial expect = power_of_variable(seg.n, l, 1);
  if (seg.d > 1) expect = expect.times(power_of_variable(seg.n, seg.n, seg.d - 1));
  if (seg.v != expect) return false;
  Monomial rest = seg.u.divide_by_variable(1);
  auto rmin = rest.min_index();
  return !rmin || *rmin >= l + 1;
}

/// Completeness of the segment by the finite classification: the final
/// segment rule for v = xn^d, the x1-power pair (a), or the divisor
/// condition (b); a1 = 0 segments with v != xn^d are never completely.
std::pair<bool, CompletelyTag> completeness(const Lexsegment& seg) {
  if (seg.is_initial()) return {true, CompletelyTag::initial_segment};
  if (seg.is_final()) {
    Monomial x2d = seg.n >= 2 ? power_of_variable(seg.n, 2, seg.d) : seg.u;
    bool ok = seg.n < 2 || lex_geq(seg.u, x2d);
    return {ok, ok ? CompletelyTag::final_segment : CompletelyTag::not_completely};
  }
  if (seg.u.exponent(1) == 0) return {false, CompletelyTag::not_completely};
  if (condition_a(seg)) return {true, CompletelyTag::cond_a};
  if (seg.u.exponent(1) != seg.v.exponent(1) && condition_b_quantifier(seg))
    return {true, CompletelyTag::cond_b};
  return {false, CompletelyTag::not_completely};
}

struct StripOp {
  int power;       // common x1 power removed (0 if a variable strip)
  bool variable;   // leading unused variable removed
};

/// Repeatedly removes common x1 powers and unused leading variables until
/// x1 divides u but not v (or the segment degenerates). Linear resolution,
/// depth and quotient orders transfer through these reductions.
struct ReducedSegment {
  Lexsegment seg;
  int stripped_vars = 0;
  int stripped_power = 0;
  std::vector<StripOp> ops;
  std::vector<std::string> notes;
};

Lexsegment strip_power(const Lexsegment& seg, int c) {
  Monomial p = power_of_variable(seg.n, 1, c);
  return build_segment(seg.n, seg.d - c, seg.u.divide(p), seg.v.divide(p));
}

Lexsegment strip_variable(const Lexsegment& seg) {
  auto drop = [](const Monomial& m) {
    std::vector<int> e(m.exponents().begin() + 1, m.exponents().end());
    return Monomial(std::move(e));
  };
  return build_segment(seg.n - 1, seg.d, drop(seg.u), drop(seg.v));
}

ReducedSegment reduce(const Lexsegment& raw, bool strip_v_power) {
  ReducedSegment r{raw, 0, 0, {}, {}};
  for (;;) {
    int a1 = r.seg.u.exponent(1);
    int b1 = r.seg.v.exponent(1);
    if (r.seg.principal()) break;
    if (a1 == 0) {
      require(r.seg.n >= 2, errc::invariant_violation, "cannot strip last variable");
      r.seg = strip_variable(r.seg);
      r.stripped_vars += 1;
      r.ops.push_back({0, true});
      r.notes.push_back("dropped unused leading variable");
      continue;
    }
    int c = strip_v_power ? std::min(a1, b1) : (a1 == b1 ? a1 : 0);
    if (c > 0) {
      r.seg = strip_power(r.seg, c);
      r.stripped_power += c;
      r.ops.push_back({c, false});
      r.notes.push_back("divided both ends by x1^" + std::to_string(c));
      continue;
    }
    break;
  }
  return r;
}

} // namespace

LexClassification classify(const Lexsegment& seg) {
  require(seg.d >= 2, errc::unsupported, "classification needs degree at least 2");
  LexClassification cls;
  auto [comp, ctag] = completeness(seg);
  cls.completely = comp;
  cls.completely_tag = ctag;

  if (seg.principal()) {
    cls.linear_resolution = true;
    cls.linres_tag = LinResTag::principal;
    return cls;
  }
  if (seg.is_final()) {
    cls.linear_resolution = true;
    cls.linres_tag = LinResTag::final_segment;
    if (comp && seg.v.exponent(1) == seg.u.exponent(1) - 1)
      cls.notes.push_back(
          "condition (c) has no monomial below v = xn^d; treated as satisfied");
    return cls;
  }

  // Reduce until x1 divides u; linear resolution is invariant under the
  // reductions while the completeness status is re-evaluated on the reduced
  // segment.
  ReducedSegment red = reduce(seg, /*strip_v_power=*/true);
  cls.notes.insert(cls.notes.end(), red.notes.begin(), red.notes.end());
  const Lexsegment& s = red.seg;
  if (s.principal()) {
    cls.linear_resolution = true;
    cls.linres_tag = LinResTag::principal;
    return cls;
  }
  if (s.is_final()) {
    cls.linear_resolution = true;
    cls.linres_tag = LinResTag::final_segment;
    return cls;
  }
  bool comp_reduced = red.ops.empty() ? comp : completeness(s).first;
  int a1 = s.u.exponent(1);
  int b1 = s.v.exponent(1);
  if (comp_reduced) {
    if (condition_a(s)) {
      cls.linear_resolution = true;
      cls.linres_tag = LinResTag::cond_a;
    } else if (b1 < a1 - 1) {
      cls.linear_resolution = true;
      cls.linres_tag = LinResTag::cond_b;
    } else if (b1 == a1 - 1) {
      auto w = predecessor_in_stratum(s);
      if (!w) {
        cls.linear_resolution = true;
        cls.linres_tag = LinResTag::cond_c;
        cls.notes.push_back(
            "condition (c) has no monomial below v; treated as satisfied");
      } else {
        Monomial moved = w->times_variable(1).divide_by_variable(*w->max_index());
        if (lex_leq(moved, s.u)) {
          cls.linear_resolution = true;
          cls.linres_tag = LinResTag::cond_c;
        }
      }
    }
  } else if (noncompletely_shape(s)) {
    cls.linear_resolution = true;
    cls.linres_tag = LinResTag::noncompletely_shape;
  }
  return cls;
}

namespace {

std::vector<Monomial> prec_ascending(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    return compare(a, b, TermOrder::prec) == std::strong_ordering::less;
  });
  return gens;
}

std::vector<Monomial> lexrev_descending(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    return compare(a, b, TermOrder::lex_reversed) == std::strong_ordering::greater;
  });
  return gens;
}

/// The sum order of the non-completely case: the x1-free block in lex
/// descending, then the x1-divisible block in reversed-lex descending.
std::vector<Monomial> jk_order(const std::vector<Monomial>& gens) {
  std::vector<Monomial> j, k;
  for (const auto& g : gens)
    (g.exponent(1) == 0 ? j : k).push_back(g);
  std::sort(j.begin(), j.end(), lex_greater);
  k = lexrev_descending(std::move(k));
  j.insert(j.end(), k.begin(), k.end());
  return j;
}

Monomial unstrip(const Monomial& m, const std::vector<StripOp>& ops) {
  Monomial out = m;
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
    if (it->variable) {
      std::vector<int> e;
      e.reserve(out.exponents().size() + 1);
      e.push_back(0);
      e.insert(e.end(), out.exponents().begin(), out.exponents().end());
      out = Monomial(std::move(e));
    } else {
      std::vector<int> e = out.exponents();
      e[0] += it->power;
      out = Monomial(std::move(e));
    }
  }
  return out;
}

} // namespace

QuotientCertificate quotient_order(const Lexsegment& seg) {
  auto cls = classify(seg);
  require(cls.linear_resolution, errc::invalid_input,
          "segment has no linear resolution; no quotient order is provided");

  ReducedSegment red = reduce(seg, /*strip_v_power=*/true);
  const Lexsegment& s = red.seg;

  std::vector<Monomial> reduced_order;
  if (s.is_final()) {
    reduced_order = lexrev_descending(s.gens);
  } else {
    bool comp = completeness(s).first;
    if (comp) {
      reduced_order = prec_ascending(s.gens);
    } else {
      reduced_order = jk_order(s.gens);
    }
  }

  std::vector<Monomial> order;
  order.reserve(reduced_order.size());
  for (const auto& m : reduced_order) order.push_back(unstrip(m, red.ops));

  auto res = check_order(seg.ideal(), order);
  auto* cert = std::get_if<QuotientCertificate>(&res);
  require(cert != nullptr, errc::invariant_violation,
          "classified quotient order failed validation");
  return std::move(*cert);
}

DimReport krull_dim_formula(const Lexsegment& raw) {
  DimReport report;
  if (raw.is_whole_stratum()) {
    report.is_power_of_max_ideal = true;
    report.dim = 0;
    return report;
  }
  Lexsegment seg = raw;
  int stripped = 0;
  while (seg.u.exponent(1) == 0) {
    seg = strip_variable(seg);
    stripped += 1;
  }
  int inner;
  if (seg.is_whole_stratum()) {
    inner = 0;
  } else {
    int q = *seg.v.min_index();
    inner = q < seg.n ? seg.n - q : 1;
  }
  report.dim = stripped + inner;
  return report;
}

DepthReport depth_formula(const Lexsegment& raw) {
  DepthReport report;
  if (raw.principal()) {
    report.depth = raw.n - 1;
    report.projdim_quotient = 1;
    report.depth_zero = report.depth == 0;
    return report;
  }
  ReducedSegment red = reduce(raw, /*strip_v_power=*/true);
  report.notes = red.notes;
  const Lexsegment& s = red.seg;
  // now x1 | u and x1 does not divide v
  int inner;
  if (s.d == 1) {
    // degree-one reduced segment is the prime (x1, ..., x_q)
    inner = s.n - *s.v.min_index();
  } else if (lex_geq(s.u.times_variable(s.n).divide_by_variable(1), s.v)) {
    inner = 0;
  } else {
    // here a1 = 1; l is the smallest index of u / x1
    int l = *s.u.divide_by_variable(1).min_index();
    if (s.v == power_of_variable(s.n, 2, s.d) && l >= 4) {
      inner = l - 2; // v = x2^d
    } else {
      // v = x2^{d-1} x_j with 3 <= j <= n-2 and l >= j+2
      int j = 0;
      if (s.n >= 3 && s.v.exponent(2) == s.d - 1) {
        for (int idx = 3; idx <= s.n; ++idx)
          if (s.v.exponent(idx) == 1) j = idx;
        for (int t = 3; t <= s.n; ++t)
          if (t != j && s.v.exponent(t) != 0) j = 0;
      }
      if (j >= 3 && j <= s.n - 2 && l >= j + 2)
        inner = l - j;
      else
        inner = 1;
    }
  }
  report.depth = red.stripped_vars + inner;
  report.projdim_quotient = raw.n - report.depth;
  report.depth_zero = report.depth == 0;
  return report;
}

CMReport is_cohen_macaulay(const Lexsegment& raw) {
  CMReport report;
  if (raw.principal()) {
    report.cohen_macaulay = true;
    report.matched = CMCase::principal;
    return report;
  }
  if (raw.is_whole_stratum()) {
    report.cohen_macaulay = true;
    report.matched = CMCase::power_of_max_ideal;
    return report;
  }
  Lexsegment seg = raw;
  int stripped = 0;
  while (seg.u.exponent(1) == 0) {
    seg = strip_variable(seg);
    stripped += 1;
    report.notes.push_back("dropped unused leading variable");
  }
  if (seg.is_whole_stratum()) {
    report.cohen_macaulay = true;
    report.matched = CMCase::power_of_max_ideal;
    return report;
  }
  int a1 = seg.u.exponent(1);
  int b1 = seg.v.exponent(1);
  if (a1 == b1) {
    // common positive x1 power with at least two generators: the quotient
    // has a height-one minimal prime but is not principal
    report.cohen_macaulay = false;
    return report;
  }
  if (seg.n < 3) {
    report.cohen_macaulay = false;
    return report;
  }
  // case (a): u = x1 xn^{d-1}, v = x2^d
  Monomial ua = power_of_variable(seg.n, 1, 1);
  if (seg.d > 1) ua = ua.times(power_of_variable(seg.n, seg.n, seg.d - 1));
  if (seg.u == ua && seg.v == power_of_variable(seg.n, 2, seg.d)) {
    report.cohen_macaulay = true;
    report.matched = CMCase::case_a;
    return report;
  }
  // case (b): v = x_{n-1}^a xn^{d-a} with a > 0 and xn u / x1 < v
  bool shape_b = seg.v.exponent(seg.n - 1) > 0;
  for (int t = 1; t <= seg.n - 2 && shape_b; ++t)
    if (seg.v.exponent(t) != 0) shape_b = false;
  if (shape_b && b1 == 0 && a1 > 0) {
    Monomial moved = seg.u.times_variable(seg.n).divide_by_variable(1);
    if (lex_less(moved, seg.v)) {
      report.cohen_macaulay = true;
      report.matched = CMCase::case_b;
      return report;
    }
  }
  report.cohen_macaulay = false;
  return report;
}

const char* to_string(CompletelyTag tag) {
  switch (tag) {
    case CompletelyTag::initial_segment: return "initial-segment";
    case CompletelyTag::final_segment: return "final-segment";
    case CompletelyTag::cond_a: return "condition-a";
    case CompletelyTag::cond_b: return "condition-b";
    case CompletelyTag::not_completely: return "not-completely";
  }
  return "?";
}

const char* to_string(LinResTag tag) {
  switch (tag) {
    case LinResTag::none: return "none";
    case LinResTag::principal: return "principal";
    case LinResTag::cond_a: return "condition-a";
    case LinResTag::cond_b: return "condition-b";
    case LinResTag::cond_c: return "condition-c";
    case LinResTag::noncompletely_shape: return "noncompletely-shape";
    case LinResTag::final_segment: return "final-segment";
    case LinResTag::reduced: return "reduced";
  }
  return "?";
}

const char* to_string(CMCase c) {
  switch (c) {
    case CMCase::power_of_max_ideal: return "m^d";
    case CMCase::case_a: return "case-a";
    case CMCase::case_b: return "case-b";
    case CMCase::principal: return "principal";
    case CMCase::none: return "none";
  }
  return "?";
}

} // namespace linquo
