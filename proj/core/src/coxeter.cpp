#include "linquo/coxeter.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace linquo {

Permutation Permutation::identity(int m) {
  require(m >= 1, errc::invalid_input, "group size must be positive");
  std::vector<int> v(static_cast<std::size_t>(m));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::from_one_line(std::vector<int> values) {
  const int m = static_cast<int>(values.size());
  require(m >= 1, errc::invalid_input, "empty permutation");
  std::vector<bool> seen(static_cast<std::size_t>(m), false);
  for (int v : values) {
    require(v >= 1 && v <= m && !seen[static_cast<std::size_t>(v - 1)], errc::invalid_input,
            "not a permutation of [m]");
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
  return Permutation(std::move(values));
}

Permutation Permutation::transposition(int m, int i, int j) {
  auto p = identity(m);
  require(i >= 1 && i <= m && j >= 1 && j <= m && i != j, errc::invalid_input,
          "bad transposition");
  std::swap(p.values_[static_cast<std::size_t>(i - 1)],
            p.values_[static_cast<std::size_t>(j - 1)]);
  return p;
}

Permutation Permutation::from_cycles(int m, const std::string& text) {
  auto p = identity(m);
  std::size_t pos = 0;
  bool any = false;
  while (pos < text.size()) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == ',')) ++pos;
    if (pos >= text.size()) break;
    require(text[pos] == '(', errc::invalid_input, "expected '(' in cycle notation");
    ++pos;
    std::vector<int> cycle;
    while (pos < text.size() && text[pos] != ')') {
      while (pos < text.size() && (text[pos] == ' ' || text[pos] == ',')) ++pos;
      require(pos < text.size() && text[pos] >= '0' && text[pos] <= '9', errc::invalid_input,
              "expected a number in cycle notation");
      int value = 0;
      while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
        value = value * 10 + (text[pos] - '0');
        ++pos;
      }
      require(value >= 1 && value <= m, errc::invalid_input, "cycle entry out of range");
      cycle.push_back(value);
      while (pos < text.size() && (text[pos] == ' ' || text[pos] == ',')) ++pos;
    }
    require(pos < text.size() && text[pos] == ')', errc::invalid_input,
            "unterminated cycle");
    ++pos;
    any = true;
    // cycle (a b c): a -> b -> c -> a
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      int from = cycle[k];
      int to = cycle[(k + 1) % cycle.size()];
      p.values_[static_cast<std::size_t>(from - 1)] = to;
    }
  }
  require(any, errc::invalid_input, "no cycles in cycle notation");
  return from_one_line(p.values_);
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= size(); ++i)
    if (apply(i) != i) return false;
  return true;
}

int Permutation::length() const {
  int inv = 0;
  for (int i = 1; i <= size(); ++i)
    for (int j = i + 1; j <= size(); ++j)
      if (apply(i) > apply(j)) ++inv;
  return inv;
}

Permutation Permutation::compose(const Permutation& other) const {
  require(size() == other.size(), errc::dimension_mismatch, "group sizes differ");
  std::vector<int> v(values_.size());
  for (int i = 1; i <= size(); ++i)
    v[static_cast<std::size_t>(i - 1)] = apply(other.apply(i));
  return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
  std::vector<int> v(values_.size());
  for (int i = 1; i <= size(); ++i) v[static_cast<std::size_t>(apply(i) - 1)] = i;
  return Permutation(std::move(v));
}

Permutation Permutation::right_multiply(int i) const {
  require(i >= 1 && i < size(), errc::invalid_input, "simple reflection out of range");
  std::vector<int> v = values_;
  std::swap(v[static_cast<std::size_t>(i - 1)], v[static_cast<std::size_t>(i)]);
  return Permutation(std::move(v));
}

bool Permutation::right_descent(int i) const {
  require(i >= 1 && i < size(), errc::invalid_input, "simple reflection out of range");
  return apply(i) > apply(i + 1);
}

std::string Permutation::str() const {
  std::ostringstream out;
  out << '[';
  for (int i = 1; i <= size(); ++i) out << apply(i) << (i == size() ? "" : ",");
  out << ']';
  return out.str();
}

std::vector<std::vector<int>> reduced_words(const Permutation& pi) {
  std::unordered_map<Permutation, std::vector<std::vector<int>>, PermutationHash> memo;
  std::function<const std::vector<std::vector<int>>&(const Permutation&)> rec =
      [&](const Permutation& w) -> const std::vector<std::vector<int>>& {
    auto it = memo.find(w);
    if (it != memo.end()) return it->second;
    std::vector<std::vector<int>> words;
    if (w.is_identity()) {
      words.push_back({});
    } else {
      for (int i = 1; i < w.size(); ++i) {
        if (!w.right_descent(i)) continue;
        for (const auto& prefix : rec(w.right_multiply(i))) {
          auto word = prefix;
          word.push_back(i);
          words.push_back(std::move(word));
        }
      }
    }
    return memo.emplace(w, std::move(words)).first->second;
  };
  return rec(pi);
}

Permutation demazure_product(const CoxeterWord& word) {
  require(word.m >= 1, errc::invalid_input, "bad group size");
  Permutation delta = Permutation::identity(word.m);
  for (int letter : word.letters) {
    require(letter >= 1 && letter < word.m, errc::invalid_input, "letter out of range");
    if (!delta.right_descent(letter)) delta = delta.right_multiply(letter);
  }
  return delta;
}

namespace {

/// Elements readable as reduced subword products of a word, pruned to
/// prefixes of reduced words of target (l(w) + l(w^{-1} target) = l(target)).
std::unordered_set<Permutation, PermutationHash> reduced_subword_closure(
    const std::vector<int>& letters, const Permutation& target) {
  const int lt = target.length();
  std::unordered_set<Permutation, PermutationHash> reach;
  reach.insert(Permutation::identity(target.size()));
  for (int letter : letters) {
    std::vector<Permutation> grown;
    for (const auto& w : reach) {
      if (w.right_descent(letter)) continue;
      Permutation next = w.right_multiply(letter);
      if (next.length() + next.inverse().compose(target).length() != lt) continue;
      if (!reach.count(next)) grown.push_back(std::move(next));
    }
    for (auto& w : grown) reach.insert(std::move(w));
  }
  return reach;
}

} // namespace

bool word_contains(const CoxeterWord& word, const Permutation& pi) {
  require(word.m == pi.size(), errc::dimension_mismatch, "word and element sizes differ");
  auto reach = reduced_subword_closure(word.letters, pi);
  return reach.count(pi) > 0;
}

bool bruhat_leq(const Permutation& a, const Permutation& b) {
  require(a.size() == b.size(), errc::dimension_mismatch, "group sizes differ");
  // fixed reduced word of b via descents
  std::vector<int> word;
  Permutation w = b;
  while (!w.is_identity()) {
    for (int i = 1; i < w.size(); ++i)
      if (w.right_descent(i)) {
        word.push_back(i);
        w = w.right_multiply(i);
        break;
      }
  }
  std::reverse(word.begin(), word.end());
  return word_contains(CoxeterWord{a.size(), word}, a);
}

SubwordReport subword_complex(const CoxeterWord& word, const Permutation& pi) {
  require(word.m == pi.size(), errc::dimension_mismatch, "word and element sizes differ");
  require(word.m <= 7, errc::out_of_budget, "symmetric group size guarded to 7");
  require(word.size() <= 14, errc::out_of_budget, "word size guarded to 14");
  require(!pi.is_identity(), errc::invalid_input,
          "the identity element gives the full simplex and a unit dual ideal");
  const int n = word.size();
  const int ell = pi.length();

  SubwordReport report;
  report.word = word;
  report.pi = pi;
  report.ell = ell;
  if (ell > n) {
    report.empty_complex = true;
    return report;
  }

  // enumerate position sets of reduced subwords representing pi
  std::vector<std::vector<int>> representing;
  std::vector<int> picked;
  std::function<void(int, const Permutation&)> rec = [&](int pos, const Permutation& w) {
    if (static_cast<int>(picked.size()) == ell) {
      if (w == pi) representing.push_back(picked);
      return;
    }
    if (pos >= n) return;
    if (n - pos < ell - static_cast<int>(picked.size())) return;
    // take position pos
    int letter = word.letters[static_cast<std::size_t>(pos)];
    if (!w.right_descent(letter)) {
      Permutation next = w.right_multiply(letter);
      if (next.length() + next.inverse().compose(pi).length() == ell) {
        picked.push_back(pos + 1);
        rec(pos + 1, next);
        picked.pop_back();
      }
    }
    rec(pos + 1, w);
  };
  rec(0, Permutation::identity(word.m));

  if (representing.empty()) {
    report.empty_complex = true;
    return report;
  }

  // order by descending lex of x_P: earlier smallest positions first
  std::sort(representing.begin(), representing.end());
  report.representing = std::move(representing);
  for (const auto& P : report.representing) {
    std::vector<int> facet;
    std::size_t k = 0;
    for (int pos = 1; pos <= n; ++pos) {
      if (k < P.size() && P[k] == pos) {
        ++k;
        continue;
      }
      facet.push_back(pos);
    }
    report.facets.push_back(std::move(facet));
  }

  std::vector<Monomial> gens;
  for (const auto& P : report.representing) {
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    for (int pos : P) e[static_cast<std::size_t>(pos - 1)] = 1;
    gens.emplace_back(std::move(e));
  }
  report.dual_ideal = MonomialIdeal::from_generators(n, gens);

  auto res = check_order(*report.dual_ideal, gens);
  auto* cert = std::get_if<QuotientCertificate>(&res);
  require(cert != nullptr, errc::invariant_violation,
          "lex order of the dual generators lost linear quotients");
  report.certificate = *cert;
  for (const auto& s : cert->sets) report.d_values.push_back(static_cast<int>(s.size()));

  // min-formula sets: set(x_{P_i}) = { min(P_j \ P_i) : j < i }
  for (std::size_t i = 0; i < report.representing.size(); ++i) {
    std::vector<int> mins;
    for (std::size_t j = 0; j < i; ++j) {
      int best = 0;
      for (int pos : report.representing[j]) {
        bool in_i = std::find(report.representing[i].begin(), report.representing[i].end(),
                              pos) != report.representing[i].end();
        if (!in_i) {
          best = pos;
          break;
        }
      }
      require(best != 0, errc::invariant_violation, "representing subwords coincide");
      mins.push_back(best);
    }
    std::sort(mins.begin(), mins.end());
    mins.erase(std::unique(mins.begin(), mins.end()), mins.end());
    report.min_formula_sets.push_back(std::move(mins));
  }
  require(report.min_formula_sets == cert->sets, errc::invariant_violation,
          "colon sets disagree with the min formula");
  return report;
}

SubwordBounds bounds_report(const SubwordReport& report) {
  require(!report.empty_complex, errc::invalid_input, "empty subword complex");
  SubwordBounds bounds;
  for (int d : report.d_values) bounds.projdim_dual = std::max(bounds.projdim_dual, d);
  bounds.projdim_dual_bound = report.word.size() - report.ell;
  bounds.projdim_sr_ring = report.ell;
  bounds.reg_sr_bound = report.word.size() - report.ell + 1;
  bounds.within_bound = bounds.projdim_dual <= bounds.projdim_dual_bound;
  require(bounds.within_bound, errc::invariant_violation,
          "projective dimension bound violated");
  return bounds;
}

std::optional<SpecialClassReport> special_class_analysis(const SubwordReport& report) {
  require(!report.empty_complex, errc::invalid_input, "empty subword complex");
  const int n = report.word.size();
  const int r = static_cast<int>(report.representing.size());
  if (r > n - report.ell + 1) return std::nullopt;
  if (report.d_values.back() != r - 1) return std::nullopt;

  SpecialClassReport sc;
  sc.r = r;

  const auto& Pr = report.representing.back();
  const auto& ordered = report.certificate->order; // representing order
  auto min_outside = [&](int j) {
    for (int pos : report.representing[static_cast<std::size_t>(j)])
      if (std::find(Pr.begin(), Pr.end(), pos) == Pr.end()) return pos;
    fail(errc::invariant_violation, "representing subwords coincide");
  };
  // unique l in supp(x_{P_r}) with x_{P_j} = x_{min(P_j \ P_r)} x_{P_r} / x_l
  std::optional<int> unique_l;
  if (r >= 2) {
    for (int l : ordered.back().support()) {
      bool works = true;
      for (int j = 0; j < r - 1 && works; ++j) {
        Monomial expect = ordered.back().times_variable(min_outside(j)).divide_by_variable(l);
        if (expect != ordered[static_cast<std::size_t>(j)]) works = false;
      }
      if (works) {
        require(!unique_l.has_value(), errc::invariant_violation,
                "two admissible values of l in the special class");
        unique_l = l;
      }
    }
    require(unique_l.has_value(), errc::invariant_violation,
            "no admissible l in the special class");
  }
  sc.unique_l = unique_l;

  int l = unique_l.value_or(ordered.back().support().back());
  sc.factor = ordered.back().divide_by_variable(l);
  for (int j = 0; j < r - 1; ++j) sc.prime_variables.push_back(min_outside(j));
  sc.prime_variables.push_back(l);

  for (int i = 0; i < r; ++i)
    sc.betti.add(i, report.ell + i,
                 static_cast<long long>(binomial(static_cast<std::uint64_t>(r),
                                                 static_cast<std::uint64_t>(i + 1))));

  sc.k_polynomial.denom_power = n;
  sc.k_polynomial.coeffs.assign(static_cast<std::size_t>(report.ell + r), 0);
  for (int i = 0; i < r; ++i) {
    long long c = static_cast<long long>(
        binomial(static_cast<std::uint64_t>(r), static_cast<std::uint64_t>(i + 1)));
    sc.k_polynomial.coeffs[static_cast<std::size_t>(report.ell + i)] = (i % 2 == 0) ? c : -c;
  }
  sc.k_polynomial.trim();

  sc.sphere = r == n - report.ell + 1;

  auto primes = radical_and_primes(*report.dual_ideal);
  int height = n;
  for (const auto& p : primes.primes.primes) height = std::min(height, (int)p.size());
  sc.height_dual = height;

  // I_Delta = (prod of prime variables) + (x_k : k in supp(x_{P_r}/x_l))
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  for (int v : sc.prime_variables) e[static_cast<std::size_t>(v - 1)] += 1;
  sc.sr_complete_intersection.emplace_back(e);
  for (int k : sc.factor.support())
    sc.sr_complete_intersection.push_back(Monomial::variable(n, k));
  return sc;
}

SphereVerdict sphere_or_ball(const CoxeterWord& word, const Permutation& pi) {
  require(word_contains(word, pi), errc::invalid_input, "word does not contain the element");
  return demazure_product(word) == pi ? SphereVerdict::sphere : SphereVerdict::ball;
}

KPolynomial kpolynomial_brute_force(const CoxeterWord& word, const Permutation& pi) {
  require(word.size() <= 20, errc::out_of_budget, "word too long for subset enumeration");
  const int n = word.size();
  const int ell = pi.length();
  KPolynomial p;
  p.denom_power = n;
  p.coeffs.assign(static_cast<std::size_t>(n) + 1, 0);
  const std::uint32_t full = (n == 0) ? 0 : ((1u << n) - 1);
  for (std::uint32_t mask = 0;; ++mask) {
    Permutation delta = Permutation::identity(word.m);
    for (int b = 0; b < n; ++b) {
      if (!(mask >> b & 1)) continue;
      int letter = word.letters[static_cast<std::size_t>(b)];
      if (!delta.right_descent(letter)) delta = delta.right_multiply(letter);
    }
    if (delta == pi) {
      int sz = std::popcount(mask);
      p.coeffs[static_cast<std::size_t>(sz)] += ((sz - ell) % 2 == 0) ? 1 : -1;
    }
    if (mask == full) break;
  }
  p.trim();
  return p;
}

} // namespace linquo
