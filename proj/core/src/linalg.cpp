#include "linquo/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include <boost/multiprecision/cpp_int.hpp>

namespace linquo {

namespace {

using BigInt = boost::multiprecision::cpp_int;

int rank_mod_p(std::vector<std::vector<std::uint64_t>> m, std::uint64_t p) {
  const int rows = static_cast<int>(m.size());
  if (rows == 0) return 0;
  const int cols = static_cast<int>(m[0].size());
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[static_cast<std::size_t>(rank)], m[static_cast<std::size_t>(pivot)]);
    auto& prow = m[static_cast<std::size_t>(rank)];
    // scale pivot row to 1
    std::uint64_t inv = 1, base = prow[static_cast<std::size_t>(col)] % p, e = p - 2;
    while (e) {
      if (e & 1) inv = inv * base % p;
      base = base * base % p;
      e >>= 1;
    }
    for (int c = col; c < cols; ++c)
      prow[static_cast<std::size_t>(c)] = prow[static_cast<std::size_t>(c)] * inv % p;
    for (int r = 0; r < rows; ++r) {
      if (r == rank) continue;
      std::uint64_t f = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
      if (f == 0) continue;
      auto& row = m[static_cast<std::size_t>(r)];
      for (int c = col; c < cols; ++c)
        row[static_cast<std::size_t>(c)] =
            (row[static_cast<std::size_t>(c)] + (p - f) * prow[static_cast<std::size_t>(c)]) % p;
    }
    ++rank;
  }
  return rank;
}

int rank_rational(std::vector<std::vector<BigInt>> m) {
  const int rows = static_cast<int>(m.size());
  if (rows == 0) return 0;
  const int cols = static_cast<int>(m[0].size());
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[static_cast<std::size_t>(rank)], m[static_cast<std::size_t>(pivot)]);
    const auto& prow = m[static_cast<std::size_t>(rank)];
    const BigInt pv = prow[static_cast<std::size_t>(col)];
    for (int r = rank + 1; r < rows; ++r) {
      auto& row = m[static_cast<std::size_t>(r)];
      const BigInt f = row[static_cast<std::size_t>(col)];
      if (f == 0) continue;
      BigInt g = boost::multiprecision::gcd(pv, f);
      BigInt a = pv / g, b = f / g;
      for (int c = col; c < cols; ++c) {
        row[static_cast<std::size_t>(c)] =
            a * row[static_cast<std::size_t>(c)] - b * prow[static_cast<std::size_t>(c)];
      }
      // keep entries small
      BigInt content = 0;
      for (int c = col; c < cols; ++c) {
        content = boost::multiprecision::gcd(content, row[static_cast<std::size_t>(c)]);
        if (content == 1) break;
      }
      if (content > 1)
        for (int c = col; c < cols; ++c) row[static_cast<std::size_t>(c)] /= content;
    }
    ++rank;
  }
  return rank;
}

template <typename T>
std::vector<std::vector<T>> densify(const SparseIntMatrix& m, const std::vector<int>& row_order,
                                    long long modulus) {
  std::vector<std::vector<T>> dense(static_cast<std::size_t>(m.rows),
                                    std::vector<T>(static_cast<std::size_t>(m.cols), T(0)));
  std::vector<int> pos(static_cast<std::size_t>(m.rows));
  for (int r = 0; r < m.rows; ++r) pos[static_cast<std::size_t>(row_order[static_cast<std::size_t>(r)])] = r;
  for (const auto& e : m.entries) {
    require(e.row >= 0 && e.row < m.rows && e.col >= 0 && e.col < m.cols, errc::invalid_input,
            "matrix entry out of range");
    long long v = e.value;
    if (modulus > 0) {
      v %= modulus;
      if (v < 0) v += modulus;
    }
    dense[static_cast<std::size_t>(pos[static_cast<std::size_t>(e.row)])]
         [static_cast<std::size_t>(e.col)] += T(v);
  }
  return dense;
}

int rank_impl(const SparseIntMatrix& m, FieldSpec field, const std::vector<int>& row_order) {
  if (m.rows == 0 || m.cols == 0) return 0;
  if (field.is_rationals()) {
    return rank_rational(densify<BigInt>(m, row_order, 0));
  }
  require(field.characteristic >= 2, errc::invalid_input, "field characteristic must be prime");
  const auto p = static_cast<std::uint64_t>(field.characteristic);
  auto dense = densify<std::uint64_t>(m, row_order, field.characteristic);
  for (auto& row : dense)
    for (auto& v : row) v %= p;
  return rank_mod_p(std::move(dense), p);
}

} // namespace

int rank(const SparseIntMatrix& m, FieldSpec field) {
  std::vector<int> order(static_cast<std::size_t>(m.rows));
  std::iota(order.begin(), order.end(), 0);
  return rank_impl(m, field, order);
}

int rank_with_pivot_seed(const SparseIntMatrix& m, FieldSpec field, std::uint64_t seed) {
  std::vector<int> order(static_cast<std::size_t>(m.rows));
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);
  return rank_impl(m, field, order);
}

std::vector<long long> homology_dimensions(const std::vector<int>& dims,
                                           const std::vector<SparseIntMatrix>& boundaries,
                                           FieldSpec field) {
  const std::size_t k = dims.size();
  require(boundaries.size() + 1 == k || (k == 0 && boundaries.empty()), errc::invalid_input,
          "boundary count must be one less than module count");
  std::vector<int> ranks(k + 1, 0); // ranks[i] = rank d_i (d_0 = 0, d_{k} beyond top = 0)
  for (std::size_t i = 1; i < k; ++i) {
    require(boundaries[i - 1].cols == dims[i] && boundaries[i - 1].rows == dims[i - 1],
            errc::invalid_input, "boundary shape mismatch");
    ranks[i] = rank(boundaries[i - 1], field);
  }
  std::vector<long long> h(k, 0);
  for (std::size_t i = 0; i < k; ++i)
    h[i] = static_cast<long long>(dims[i]) - ranks[i] - ranks[i + 1];
  return h;
}

} // namespace linquo
