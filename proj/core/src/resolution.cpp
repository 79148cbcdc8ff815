#include "linquo/resolution.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <unordered_map>

namespace linquo {

namespace {

/// All k-subsets of `universe` (ascending vectors), in colex order:
/// enumerate by largest chosen element ascending, recursing on the rest.
std::vector<std::vector<int>> subsets_colex(const std::vector<int>& universe, int k) {
  std::function<std::vector<std::vector<int>>(int, int)> gen = [&](int m, int need)
      -> std::vector<std::vector<int>> {
    std::vector<std::vector<int>> result;
    if (need == 0) {
      result.push_back({});
      return result;
    }
    if (m < need) return result;
    for (int top = need; top <= m; ++top) {
      auto rest = gen(top - 1, need - 1);
      for (auto& s : rest) {
        s.push_back(universe[static_cast<std::size_t>(top - 1)]);
        result.push_back(std::move(s));
      }
    }
    return result;
  };
  return gen(static_cast<int>(universe.size()), k);
}

int alpha_sign(const std::vector<int>& sigma, int t) {
  int count = 0;
  for (int s : sigma)
    if (s < t) ++count;
  return count % 2 == 0 ? 1 : -1;
}

std::vector<int> erase_element(const std::vector<int>& sigma, int t) {
  std::vector<int> out;
  out.reserve(sigma.size() - 1);
  for (int s : sigma)
    if (s != t) out.push_back(s);
  return out;
}

struct LabelKey {
  std::vector<int> sigma;
  std::vector<int> exps;
  bool operator==(const LabelKey& other) const {
    return sigma == other.sigma && exps == other.exps;
  }
};

struct LabelKeyHash {
  std::size_t operator()(const LabelKey& k) const {
    std::size_t h = 1469598103934665603ull;
    auto mix = [&h](int v) {
      h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    };
    for (int v : k.sigma) mix(v);
    mix(-1);
    for (int v : k.exps) mix(v);
    return h;
  }
};

using LabelIndex = std::unordered_map<LabelKey, int, LabelKeyHash>;

LabelIndex index_of(const std::vector<BasisLabel>& labels) {
  LabelIndex idx;
  for (std::size_t i = 0; i < labels.size(); ++i)
    idx[{labels[i].sigma, labels[i].gen.exponents()}] = static_cast<int>(i);
  return idx;
}

} // namespace

std::string BasisLabel::str() const {
  std::ostringstream out;
  out << "f(";
  if (sigma.empty()) {
    out << "{}";
  } else {
    out << '{';
    for (std::size_t i = 0; i < sigma.size(); ++i)
      out << sigma[i] << (i + 1 < sigma.size() ? "," : "");
    out << '}';
  }
  out << "; " << gen.str() << ')';
  return out.str();
}

std::string GradedFreeResolution::shape() const {
  std::ostringstream out;
  out << "0";
  for (std::size_t stage = modules.size(); stage-- > 0;) {
    std::map<int, int> twists;
    for (const auto& b : modules[stage]) twists[b.degree] += 1;
    out << " -> ";
    if (twists.empty()) {
      out << '0';
      continue;
    }
    bool first = true;
    for (const auto& [d, mult] : twists) {
      if (!first) out << " + ";
      first = false;
      if (d == 0)
        out << 'S';
      else
        out << "S(" << -d << ')';
      if (mult > 1) out << '^' << mult;
    }
  }
  out << " -> " << (target == Target::ideal ? "I" : "S/I") << " -> 0";
  return out.str();
}

GradedFreeResolution koszul(int n, const std::vector<Monomial>& sequence) {
  require(!sequence.empty(), errc::invalid_input, "empty sequence");
  for (const auto& f : sequence)
    require(f.vars() == n, errc::dimension_mismatch, "sequence element in wrong ring");
  const int r = static_cast<int>(sequence.size());

  GradedFreeResolution res;
  res.target = GradedFreeResolution::Target::quotient;
  res.n = n;

  std::vector<int> universe(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) universe[static_cast<std::size_t>(i)] = i + 1;

  Monomial unit = Monomial::one(n);
  for (int j = 0; j <= r; ++j) {
    std::vector<BasisLabel> stage;
    for (auto& sigma : subsets_colex(universe, j)) {
      int degree = 0;
      for (int s : sigma) degree += sequence[static_cast<std::size_t>(s - 1)].degree();
      stage.push_back(BasisLabel{std::move(sigma), unit, degree});
    }
    res.modules.push_back(std::move(stage));
  }

  for (int j = 1; j <= r; ++j) {
    const auto& source = res.modules[static_cast<std::size_t>(j)];
    auto idx = index_of(res.modules[static_cast<std::size_t>(j - 1)]);
    ResolutionMatrix m;
    m.rows = static_cast<int>(res.modules[static_cast<std::size_t>(j - 1)].size());
    m.cols = static_cast<int>(source.size());
    for (std::size_t c = 0; c < source.size(); ++c) {
      const auto& sigma = source[c].sigma;
      for (int t : sigma) {
        auto face = erase_element(sigma, t);
        int row = idx.at({face, unit.exponents()});
        m.entries.push_back({row, static_cast<int>(c), alpha_sign(sigma, t),
                             sequence[static_cast<std::size_t>(t - 1)]});
      }
    }
    res.diffs.push_back(std::move(m));
  }
  return res;
}

GradedFreeResolution ek_resolution(const MonomialIdeal& ideal) {
  require(is_stable(ideal), errc::invalid_input, "Eliahou-Kervaire needs a stable ideal");
  GradedFreeResolution res;
  res.target = GradedFreeResolution::Target::ideal;
  res.n = ideal.vars();

  // modules[i] has basis f(sigma; u), |sigma| = i, max(sigma) < max(u)
  int max_sigma = 0;
  for (const auto& u : ideal.gens())
    max_sigma = std::max(max_sigma, u.max_index().value_or(1) - 1);

  for (int i = 0; i <= max_sigma; ++i) {
    std::vector<BasisLabel> stage;
    for (const auto& u : ideal.gens()) {
      int cap = u.max_index().value_or(1) - 1;
      if (i > cap) continue;
      std::vector<int> universe(static_cast<std::size_t>(cap));
      for (int v = 1; v <= cap; ++v) universe[static_cast<std::size_t>(v - 1)] = v;
      for (auto& sigma : subsets_colex(universe, i))
        stage.push_back(BasisLabel{std::move(sigma), u, i + u.degree()});
    }
    if (stage.empty()) break;
    res.modules.push_back(std::move(stage));
  }

  // augmentation row: f(; u) -> u
  ResolutionMatrix aug;
  aug.rows = 1;
  aug.cols = static_cast<int>(res.modules[0].size());
  for (std::size_t c = 0; c < res.modules[0].size(); ++c)
    aug.entries.push_back({0, static_cast<int>(c), 1, res.modules[0][c].gen});
  res.augmentation = std::move(aug);

  for (std::size_t i = 1; i < res.modules.size(); ++i) {
    const auto& source = res.modules[i];
    auto idx = index_of(res.modules[i - 1]);
    auto present = [&](const std::vector<int>& sigma, const Monomial& u) {
      // f(sigma; u) = 0 once max(sigma) >= max(u)
      if (!sigma.empty() && sigma.back() >= u.max_index().value_or(1)) return -1;
      return idx.at({sigma, u.exponents()});
    };
    ResolutionMatrix m;
    m.rows = static_cast<int>(res.modules[i - 1].size());
    m.cols = static_cast<int>(source.size());
    for (std::size_t c = 0; c < source.size(); ++c) {
      const auto& sigma = source[c].sigma;
      const Monomial& u = source[c].gen;
      for (int t : sigma) {
        auto face = erase_element(sigma, t);
        int sign = alpha_sign(sigma, t);
        // -x_t f(sigma\t; u)
        int row = present(face, u);
        if (row >= 0)
          m.entries.push_back({row, static_cast<int>(c), -sign,
                               Monomial::variable(res.n, t)});
        // + y_t f(sigma\t; u_t) with u_t = g(x_t u) canonical
        auto [ut, yt] = canonical_decomposition(ideal, u.times_variable(t));
        int row2 = present(face, ut);
        if (row2 >= 0) m.entries.push_back({row2, static_cast<int>(c), sign, yt});
      }
    }
    res.diffs.push_back(std::move(m));
  }
  return res;
}

GradedFreeResolution mapping_cone_resolution(const QuotientCertificate& certificate) {
  const auto& order = certificate.order;
  for (std::size_t i = 1; i < order.size(); ++i)
    require(order[i - 1].degree() <= order[i].degree(), errc::invalid_input,
            "mapping cone needs weakly increasing generator degrees");
  DecompositionFunction g(certificate);
  auto reg = g.regularity();
  require(reg.regular, errc::invalid_input,
          "mapping cone needs a regular decomposition function");

  const int n = certificate.ideal.vars();
  GradedFreeResolution res;
  res.target = GradedFreeResolution::Target::quotient;
  res.n = n;

  res.modules.push_back({BasisLabel{{}, Monomial::one(n), 0}});

  int max_set = certificate.max_set_size();
  for (int i = 0; i <= max_set; ++i) {
    std::vector<BasisLabel> stage;
    for (std::size_t k = 0; k < order.size(); ++k) {
      const auto& set = certificate.sets[k];
      if (i > static_cast<int>(set.size())) continue;
      for (auto& sigma : subsets_colex(set, i))
        stage.push_back(BasisLabel{std::move(sigma), order[k], i + order[k].degree()});
    }
    if (stage.empty()) break;
    res.modules.push_back(std::move(stage));
  }

  // index of set(u) per generator for the f(sigma; u) = 0 rule
  std::unordered_map<LabelKey, const std::vector<int>*, LabelKeyHash> setof;
  for (std::size_t k = 0; k < order.size(); ++k)
    setof[{{}, order[k].exponents()}] = &certificate.sets[k];
  auto inside_set = [&](const std::vector<int>& sigma, const Monomial& u) {
    const auto* set = setof.at({{}, u.exponents()});
    return std::includes(set->begin(), set->end(), sigma.begin(), sigma.end());
  };

  // d_1 : F_1 -> S, f(; u) -> u
  {
    ResolutionMatrix m;
    m.rows = 1;
    m.cols = static_cast<int>(res.modules[1].size());
    for (std::size_t c = 0; c < res.modules[1].size(); ++c)
      m.entries.push_back({0, static_cast<int>(c), 1, res.modules[1][c].gen});
    res.diffs.push_back(std::move(m));
  }

  for (std::size_t i = 2; i < res.modules.size(); ++i) {
    const auto& source = res.modules[i];
    auto idx = index_of(res.modules[i - 1]);
    ResolutionMatrix m;
    m.rows = static_cast<int>(res.modules[i - 1].size());
    m.cols = static_cast<int>(source.size());
    for (std::size_t c = 0; c < source.size(); ++c) {
      const auto& sigma = source[c].sigma;
      const Monomial& u = source[c].gen;
      for (int t : sigma) {
        auto face = erase_element(sigma, t);
        int sign = alpha_sign(sigma, t);
        // - x_t f(sigma\t; u): face is inside set(u) automatically
        m.entries.push_back({idx.at({face, u.exponents()}), static_cast<int>(c), -sign,
                             Monomial::variable(n, t)});
        // + (x_t u / g(x_t u)) f(sigma\t; g(x_t u)), dropped unless
        // sigma\t lies inside set(g(x_t u))
        Monomial xtu = u.times_variable(t);
        Monomial gu = g.apply(xtu);
        if (inside_set(face, gu)) {
          m.entries.push_back({idx.at({face, gu.exponents()}), static_cast<int>(c), sign,
                               xtu.divide(gu)});
        }
      }
    }
    res.diffs.push_back(std::move(m));
  }
  return res;
}

namespace {

/// Accumulates the product of two monomial matrices as polynomial entries
/// and checks every entry cancels to zero.
bool product_vanishes(const ResolutionMatrix& a, const ResolutionMatrix& b) {
  require(a.cols == b.rows, errc::invalid_input, "matrix shape mismatch in product");
  // (row of a, col of b) -> accumulated coefficients on monomials
  std::map<std::pair<int, int>, std::map<std::vector<int>, long long>> acc;
  std::vector<std::vector<const ResolutionEntry*>> b_by_row(
      static_cast<std::size_t>(b.rows));
  for (const auto& e : b.entries) b_by_row[static_cast<std::size_t>(e.row)].push_back(&e);
  for (const auto& ea : a.entries)
    for (const auto* eb : b_by_row[static_cast<std::size_t>(ea.col)]) {
      auto mono = ea.mono.times(eb->mono);
      acc[{ea.row, eb->col}][mono.exponents()] += static_cast<long long>(ea.sign) * eb->sign;
    }
  for (const auto& [cell, poly] : acc)
    for (const auto& [exps, coeff] : poly)
      if (coeff != 0) return false;
  return true;
}

} // namespace

ComplexReport verify_complex(const GradedFreeResolution& res) {
  ComplexReport report;
  report.dd_zero = true;
  report.minimal = true;

  std::vector<const ResolutionMatrix*> chain;
  if (res.augmentation) chain.push_back(&*res.augmentation);
  for (const auto& d : res.diffs) chain.push_back(&d);

  for (const auto* m : chain)
    for (const auto& e : m->entries)
      if (e.mono.degree() == 0) report.minimal = false;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i)
    if (!product_vanishes(*chain[i], *chain[i + 1])) report.dd_zero = false;

  std::size_t first = res.target == GradedFreeResolution::Target::ideal ? 0 : 1;
  for (std::size_t stage = first; stage < res.modules.size(); ++stage)
    for (const auto& b : res.modules[stage])
      report.betti_of_ideal.add(static_cast<int>(stage - first), b.degree, 1);
  return report;
}

void KPolynomial::trim() {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

std::string KPolynomial::str() const {
  if (coeffs.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    long long c = coeffs[k];
    if (c == 0) continue;
    if (first) {
      if (c < 0) out << '-';
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    long long a = c < 0 ? -c : c;
    if (a != 1 || k == 0) out << a;
    if (k >= 1) {
      out << 't';
      if (k >= 2) out << '^' << k;
    }
  }
  if (first) return "0";
  return out.str();
}

KPolynomial stable_hilbert_series(const MonomialIdeal& ideal) {
  require(is_stable(ideal), errc::invalid_input, "Hilbert formula needs a stable ideal");
  const int n = ideal.vars();
  int degmax = 0;
  for (const auto& u : ideal.gens())
    degmax = std::max(degmax, u.degree() + u.max_index().value_or(1) - 1);
  KPolynomial p;
  p.denom_power = n;
  p.coeffs.assign(static_cast<std::size_t>(degmax + 1), 0);
  for (const auto& u : ideal.gens()) {
    // t^{deg u} * (1-t)^{max(u)-1}
    int m = u.max_index().value_or(1) - 1;
    long long sign = 1;
    for (int k = 0; k <= m; ++k) {
      long long term =
          sign * static_cast<long long>(binomial(static_cast<std::uint64_t>(m),
                                                 static_cast<std::uint64_t>(k)));
      p.coeffs[static_cast<std::size_t>(u.degree() + k)] += term;
      sign = -sign;
    }
  }
  p.trim();
  return p;
}

long long kpolynomial_series_coefficient(const KPolynomial& p, int n, int k) {
  long long total = 0;
  for (int j = 0; j < static_cast<int>(p.coeffs.size()); ++j) {
    if (j > k) break;
    long long c = p.coeffs[static_cast<std::size_t>(j)];
    if (c == 0) continue;
    total += c * static_cast<long long>(
                     binomial(static_cast<std::uint64_t>(n - 1 + k - j),
                              static_cast<std::uint64_t>(k - j)));
  }
  return total;
}

std::string matrix_pretty(const ResolutionMatrix& m) {
  std::vector<std::vector<std::string>> cells(
      static_cast<std::size_t>(m.rows),
      std::vector<std::string>(static_cast<std::size_t>(m.cols), "0"));
  for (const auto& e : m.entries) {
    std::string s = (e.sign < 0 ? "-" : "") + e.mono.str();
    cells[static_cast<std::size_t>(e.row)][static_cast<std::size_t>(e.col)] = s;
  }
  std::vector<std::size_t> width(static_cast<std::size_t>(m.cols), 0);
  for (int c = 0; c < m.cols; ++c)
    for (int r = 0; r < m.rows; ++r)
      width[static_cast<std::size_t>(c)] =
          std::max(width[static_cast<std::size_t>(c)],
                   cells[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)].size());
  std::ostringstream out;
  for (int r = 0; r < m.rows; ++r) {
    out << "[ ";
    for (int c = 0; c < m.cols; ++c) {
      const auto& s = cells[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
      out << std::string(width[static_cast<std::size_t>(c)] - s.size(), ' ') << s;
      out << (c + 1 < m.cols ? "  " : " ");
    }
    out << "]\n";
  }
  return out.str();
}

} // namespace linquo
