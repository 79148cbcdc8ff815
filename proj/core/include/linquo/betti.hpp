#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>

namespace linquo {

/// Graded Betti numbers beta_{i,j}, finitely supported, with i the
/// homological and j the internal degree.
class BettiTable {
public:
  using Key = std::pair<int, int>; // (i, j)

  void add(int i, int j, long long value);
  long long at(int i, int j) const;
  long long total(int i) const;
  const std::map<Key, long long>& entries() const { return entries_; }

  bool empty() const { return entries_.empty(); }
  int projdim() const;      // max i with beta_i != 0 (0 for empty)
  int regularity() const;   // max j - i
  /// True when a single degree d exists with beta_{i,j} = 0 unless j = i + d.
  bool linear(int* degree = nullptr) const;

  friend bool operator==(const BettiTable& a, const BettiTable& b) {
    return a.entries_ == b.entries_;
  }
  friend bool operator!=(const BettiTable& a, const BettiTable& b) { return !(a == b); }

  /// Macaulay-style grid: columns by homological degree, rows by j - i.
  std::string grid() const;

private:
  std::map<Key, long long> entries_;
};

} // namespace linquo
