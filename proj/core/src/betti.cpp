#include "linquo/betti.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace linquo {

void BettiTable::add(int i, int j, long long value) {
  if (value == 0) return;
  auto key = Key{i, j};
  auto it = entries_.find(key);
  if (it == entries_.end()) {
    entries_.emplace(key, value);
  } else {
    it->second += value;
    if (it->second == 0) entries_.erase(it);
  }
}

long long BettiTable::at(int i, int j) const {
  auto it = entries_.find(Key{i, j});
  return it == entries_.end() ? 0 : it->second;
}

long long BettiTable::total(int i) const {
  long long t = 0;
  for (const auto& [key, value] : entries_)
    if (key.first == i) t += value;
  return t;
}

int BettiTable::projdim() const {
  int p = 0;
  for (const auto& [key, value] : entries_)
    if (value != 0) p = std::max(p, key.first);
  return p;
}

int BettiTable::regularity() const {
  int r = 0;
  bool seen = false;
  for (const auto& [key, value] : entries_)
    if (value != 0) {
      int s = key.second - key.first;
      r = seen ? std::max(r, s) : s;
      seen = true;
    }
  return r;
}

bool BettiTable::linear(int* degree) const {
  std::optional<int> d;
  for (const auto& [key, value] : entries_) {
    if (value == 0) continue;
    int s = key.second - key.first;
    if (!d) {
      d = s;
    } else if (*d != s) {
      return false;
    }
  }
  if (degree && d) *degree = *d;
  return true;
}

std::string BettiTable::grid() const {
  if (entries_.empty()) return "(empty)\n";
  int imax = 0, smin = entries_.begin()->second, smax = 0;
  bool first = true;
  for (const auto& [key, value] : entries_) {
    if (value == 0) continue;
    int s = key.second - key.first;
    imax = std::max(imax, key.first);
    if (first) {
      smin = smax = s;
      first = false;
    } else {
      smin = std::min(smin, s);
      smax = std::max(smax, s);
    }
  }
  std::vector<std::vector<long long>> cells(static_cast<std::size_t>(smax - smin + 1),
                                            std::vector<long long>(static_cast<std::size_t>(imax + 1), 0));
  std::vector<long long> totals(static_cast<std::size_t>(imax + 1), 0);
  for (const auto& [key, value] : entries_) {
    cells[static_cast<std::size_t>(key.second - key.first - smin)]
         [static_cast<std::size_t>(key.first)] += value;
    totals[static_cast<std::size_t>(key.first)] += value;
  }
  std::ostringstream out;
  out << "       ";
  for (int i = 0; i <= imax; ++i) out << i << (i == imax ? "" : " ");
  out << "\ntotal: ";
  for (int i = 0; i <= imax; ++i)
    out << totals[static_cast<std::size_t>(i)] << (i == imax ? "" : " ");
  out << '\n';
  for (int s = smin; s <= smax; ++s) {
    out << s << ":     ";
    for (int i = 0; i <= imax; ++i) {
      long long v = cells[static_cast<std::size_t>(s - smin)][static_cast<std::size_t>(i)];
      if (v == 0)
        out << '.';
      else
        out << v;
      if (i != imax) out << ' ';
    }
    out << '\n';
  }
  return out.str();
}

} // namespace linquo
