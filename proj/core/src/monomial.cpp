#include "linquo/monomial.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <sstream>

namespace linquo {

Monomial::Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {
  require(!exps_.empty(), errc::invalid_input, "monomial needs at least one variable");
  for (int e : exps_) {
    require(e >= 0, errc::invalid_input, "negative exponent");
    degree_ += e;
  }
}

Monomial Monomial::one(int n) {
  require(n >= 1, errc::invalid_input, "variable count must be positive");
  return Monomial(std::vector<int>(static_cast<std::size_t>(n), 0));
}

Monomial Monomial::variable(int n, int index) {
  require(index >= 1 && index <= n, errc::invalid_input, "variable index out of range");
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  e[static_cast<std::size_t>(index - 1)] = 1;
  return Monomial(std::move(e));
}

int Monomial::exponent(int index) const {
  require(index >= 1 && index <= vars(), errc::invalid_input, "variable index out of range");
  return exps_[static_cast<std::size_t>(index - 1)];
}

bool Monomial::is_squarefree() const {
  return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e <= 1; });
}

std::vector<int> Monomial::support() const {
  std::vector<int> s;
  for (int i = 0; i < vars(); ++i)
    if (exps_[static_cast<std::size_t>(i)] > 0) s.push_back(i + 1);
  return s;
}

std::optional<int> Monomial::max_index() const {
  for (int i = vars() - 1; i >= 0; --i)
    if (exps_[static_cast<std::size_t>(i)] > 0) return i + 1;
  return std::nullopt;
}

std::optional<int> Monomial::min_index() const {
  for (int i = 0; i < vars(); ++i)
    if (exps_[static_cast<std::size_t>(i)] > 0) return i + 1;
  return std::nullopt;
}

void Monomial::check_same_vars(const Monomial& other) const {
  require(vars() == other.vars(), errc::dimension_mismatch,
          "monomials live in different ambient rings");
}

bool Monomial::divides(const Monomial& other) const {
  check_same_vars(other);
  for (int i = 0; i < vars(); ++i)
    if (exps_[static_cast<std::size_t>(i)] > other.exps_[static_cast<std::size_t>(i)])
      return false;
  return true;
}

Monomial Monomial::gcd(const Monomial& other) const {
  check_same_vars(other);
  std::vector<int> e(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) e[i] = std::min(exps_[i], other.exps_[i]);
  return Monomial(std::move(e));
}

Monomial Monomial::lcm(const Monomial& other) const {
  check_same_vars(other);
  std::vector<int> e(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) e[i] = std::max(exps_[i], other.exps_[i]);
  return Monomial(std::move(e));
}

Monomial Monomial::times(const Monomial& other) const {
  check_same_vars(other);
  std::vector<int> e(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) e[i] = exps_[i] + other.exps_[i];
  return Monomial(std::move(e));
}

Monomial Monomial::times_variable(int index) const {
  require(index >= 1 && index <= vars(), errc::invalid_input, "variable index out of range");
  std::vector<int> e = exps_;
  e[static_cast<std::size_t>(index - 1)] += 1;
  return Monomial(std::move(e));
}

Monomial Monomial::colon(const Monomial& other) const {
  check_same_vars(other);
  std::vector<int> e(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i)
    e[i] = std::max(exps_[i] - other.exps_[i], 0);
  return Monomial(std::move(e));
}

Monomial Monomial::divide(const Monomial& other) const {
  require(other.divides(*this), errc::invalid_input, "inexact monomial division");
  std::vector<int> e(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) e[i] = exps_[i] - other.exps_[i];
  return Monomial(std::move(e));
}

Monomial Monomial::divide_by_variable(int index) const {
  require(index >= 1 && index <= vars() && exps_[static_cast<std::size_t>(index - 1)] > 0,
          errc::invalid_input, "variable does not divide monomial");
  std::vector<int> e = exps_;
  e[static_cast<std::size_t>(index - 1)] -= 1;
  return Monomial(std::move(e));
}

std::string Monomial::str() const {
  if (is_one()) return "1";
  std::ostringstream out;
  bool first = true;
  for (int i = 1; i <= vars(); ++i) {
    int e = exps_[static_cast<std::size_t>(i - 1)];
    if (e == 0) continue;
    if (!first) out << '*';
    first = false;
    out << 'x' << i;
    if (e > 1) out << '^' << e;
  }
  return out.str();
}

Monomial Monomial::parse(int n, std::string_view text) {
  require(n >= 1, errc::invalid_input, "variable count must be positive");
  // skip surrounding whitespace
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  require(!text.empty(), errc::invalid_input, "empty monomial text");
  if (text == "1") return one(n);

  std::vector<int> e(static_cast<std::size_t>(n), 0);
  std::size_t pos = 0;
  auto parse_int = [&](std::string_view s, std::size_t& p) {
    std::size_t start = p;
    while (p < s.size() && s[p] >= '0' && s[p] <= '9') ++p;
    require(p > start, errc::invalid_input, "expected a number in monomial text");
    int value = 0;
    auto res = std::from_chars(s.data() + start, s.data() + p, value);
    require(res.ec == std::errc(), errc::invalid_input, "bad number in monomial text");
    return value;
  };
  while (pos < text.size()) {
    require(text[pos] == 'x', errc::invalid_input,
            "expected 'x' in monomial text near position " + std::to_string(pos));
    ++pos;
    int index = parse_int(text, pos);
    require(index >= 1 && index <= n, errc::invalid_input,
            "variable x" + std::to_string(index) + " outside ambient ring");
    int power = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      power = parse_int(text, pos);
      require(power >= 1, errc::invalid_input, "exponent must be positive");
    }
    e[static_cast<std::size_t>(index - 1)] += power;
    if (pos < text.size()) {
      require(text[pos] == '*', errc::invalid_input, "expected '*' between factors");
      ++pos;
      require(pos < text.size(), errc::invalid_input, "dangling '*' in monomial text");
    }
  }
  return Monomial(std::move(e));
}

namespace {

std::strong_ordering compare_lex(const Monomial& a, const Monomial& b) {
  for (int i = 0; i < a.vars(); ++i) {
    int ea = a.exponents()[static_cast<std::size_t>(i)];
    int eb = b.exponents()[static_cast<std::size_t>(i)];
    if (ea != eb) return ea > eb ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

std::strong_ordering compare_lex_reversed(const Monomial& a, const Monomial& b) {
  for (int i = a.vars() - 1; i >= 0; --i) {
    int ea = a.exponents()[static_cast<std::size_t>(i)];
    int eb = b.exponents()[static_cast<std::size_t>(i)];
    if (ea != eb) return ea > eb ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

} // namespace

std::strong_ordering compare(const Monomial& a, const Monomial& b, TermOrder order) {
  require(a.vars() == b.vars(), errc::dimension_mismatch,
          "monomials live in different ambient rings");
  switch (order) {
    case TermOrder::lex:
      return compare_lex(a, b);
    case TermOrder::lex_reversed:
      return compare_lex_reversed(a, b);
    case TermOrder::prec: {
      require(a.degree() == b.degree(), errc::invalid_input,
              "prec order compares monomials of equal degree only");
      int a1 = a.exponents()[0];
      int b1 = b.exponents()[0];
      if (a1 != b1) return a1 < b1 ? std::strong_ordering::less : std::strong_ordering::greater;
      // ties break by lex descending: larger in lex comes earlier.
      auto c = compare_lex(a, b);
      if (c == std::strong_ordering::equal) return c;
      return c == std::strong_ordering::greater ? std::strong_ordering::less
                                                : std::strong_ordering::greater;
    }
  }
  fail(errc::invalid_input, "unknown term order");
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    std::uint64_t factor = n - k + i;
    std::uint64_t g = std::gcd(result, i);
    std::uint64_t r = result / g;
    std::uint64_t d = i / g;
    std::uint64_t g2 = std::gcd(factor, d);
    factor /= g2;
    d /= g2;
    require(d == 1, errc::invalid_input, "binomial internal reduction failed");
    require(r <= UINT64_MAX / factor, errc::out_of_budget, "binomial overflow");
    result = r * factor;
  }
  return result;
}

std::uint64_t count_monomials_of_degree(int n, int d) {
  require(n >= 1 && d >= 0, errc::invalid_input, "bad (n, d)");
  return binomial(static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(d) - 1,
                  static_cast<std::uint64_t>(d));
}

std::vector<Monomial> monomials_of_degree(int n, int d, std::uint64_t guard) {
  require(count_monomials_of_degree(n, d) <= guard, errc::out_of_budget,
          "degree stratum too large to enumerate");
  std::vector<Monomial> out;
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  // Descending lex: assign the highest feasible exponent to the earliest
  // variable first.
  std::function<void(int, int)> rec = [&](int var, int remaining) {
    if (var == n) {
      e[static_cast<std::size_t>(n - 1)] = remaining;
      out.emplace_back(e);
      e[static_cast<std::size_t>(n - 1)] = 0;
      return;
    }
    for (int k = remaining; k >= 0; --k) {
      e[static_cast<std::size_t>(var - 1)] = k;
      rec(var + 1, remaining - k);
    }
    e[static_cast<std::size_t>(var - 1)] = 0;
  };
  rec(1, d);
  return out;
}

} // namespace linquo
