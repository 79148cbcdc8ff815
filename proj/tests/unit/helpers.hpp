#pragma once

#include <random>
#include <vector>

#include "linquo/ideal.hpp"

namespace linquo::testing {

inline Monomial mono(int n, const char* text) { return Monomial::parse(n, text); }

inline MonomialIdeal ideal_of(int n, std::initializer_list<const char*> gens) {
  std::vector<Monomial> ms;
  for (const char* g : gens) ms.push_back(Monomial::parse(n, g));
  return MonomialIdeal::from_generators(n, std::move(ms));
}

/// Random monomial of degree within [1, dmax].
inline Monomial random_monomial(int n, int dmax, std::mt19937_64& rng) {
  int d = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(dmax));
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  for (int k = 0; k < d; ++k) e[rng() % static_cast<std::uint64_t>(n)] += 1;
  return Monomial(std::move(e));
}

inline MonomialIdeal random_ideal(int n, int gens, int dmax, std::mt19937_64& rng) {
  std::vector<Monomial> ms;
  for (int k = 0; k < gens; ++k) ms.push_back(random_monomial(n, dmax, rng));
  return MonomialIdeal::from_generators(n, std::move(ms));
}

} // namespace linquo::testing
