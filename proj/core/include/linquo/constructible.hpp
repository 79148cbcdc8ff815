#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include "linquo/betti.hpp"
#include "linquo/ideal.hpp"
#include "linquo/simplicial.hpp"

namespace linquo {

/// Certificate tree for the constructible recursion: a leaf is a principal
/// ideal; a split node carries the two summands and the recorded
/// intersection. Splits are strict (neither part equals the whole ideal).
struct ConstructibilityCertificate {
  struct Node;
  using NodePtr = std::shared_ptr<const Node>;

  struct Node {
    std::optional<Monomial> leaf;
    NodePtr left, right, intersection;

    bool is_leaf() const { return leaf.has_value(); }
  };

  int n = 0;
  NodePtr root;

  static NodePtr make_leaf(Monomial m) {
    auto node = std::make_shared<Node>();
    node->leaf = std::move(m);
    return node;
  }
  static NodePtr make_split(NodePtr left, NodePtr right, NodePtr intersection) {
    auto node = std::make_shared<Node>();
    node->left = std::move(left);
    node->right = std::move(right);
    node->intersection = std::move(intersection);
    return node;
  }
};

struct CertificateVerification {
  bool valid = false;
  std::string failing_node; // path like "root.left.intersection"
  std::string reason;
};

CertificateVerification verify_certificate(const MonomialIdeal& ideal,
                                           const ConstructibilityCertificate& certificate);

/// The ideal generated by a certificate node.
MonomialIdeal certificate_ideal(int n, const ConstructibilityCertificate::NodePtr& node);

enum class Constructibility { found, not_constructible, unknown };

struct ConstructibleSearchResult {
  Constructibility status = Constructibility::unknown;
  std::optional<ConstructibilityCertificate> certificate;
  std::uint64_t nodes_used = 0;
};

/// Certify or refute constructibility of an equigenerated ideal. Linear
/// quotients give an immediate certificate through the last-generator split;
/// otherwise the search branches over two-part generator partitions with
/// memoization. A negative answer is only reported when the search was
/// exhaustive, which is capped at `exhaustive_gen_cap` generators.
ConstructibleSearchResult search_constructible(const MonomialIdeal& ideal,
                                               std::uint64_t budget = 200000,
                                               int exhaustive_gen_cap = 12);

/// Betti numbers through the split recursion
/// beta_i(I) = beta_i(I1) + beta_i(I2) + beta_{i-1}(I1 cap I2).
BettiTable constructible_betti(const MonomialIdeal& ideal,
                               const ConstructibilityCertificate& certificate);

struct Polarization {
  MonomialIdeal ideal; // square-free, in the extended ring
  int source_vars = 0;
  /// (variable index i, copy number j) -> polarized index; copy 1 keeps the
  /// original index, higher copies get fresh indices in (i, j) order.
  std::vector<std::tuple<int, int, int>> variable_map;
};

Polarization polarize(const MonomialIdeal& ideal);
Monomial polarize_monomial(const Monomial& m, const Polarization& p);

/// Direct complex-level constructibility by the facet-partition recursion;
/// an independent counterpart of the ideal-level search.
Constructibility complex_constructible(const SimplicialComplex& complex,
                                       std::uint64_t budget = 200000);

} // namespace linquo
