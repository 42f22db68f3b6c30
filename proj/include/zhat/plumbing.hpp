#pragma once

// Plumbing trees, their linking matrices, and exact linear algebra on them.

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "zhat/rational.hpp"

namespace zhat {

/// Weighted tree. The vertex order is part of the value: it fixes the matrix indexing.
struct PlumbingGraph {
  std::vector<std::int64_t> weights;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  std::size_t size() const { return weights.size(); }
  std::vector<std::int64_t> degrees() const;
  std::vector<std::vector<std::size_t>> adjacency() const;

  /// Throws std::invalid_argument unless the graph is a tree on vertices 0..s-1.
  void validate() const;

  bool operator==(const PlumbingGraph&) const = default;
};

using IntMatrix = std::vector<std::vector<BigInt>>;
using RationalMatrix = std::vector<std::vector<BigRational>>;

/// The symmetric s x s linking matrix: M_ii = m_i, M_ij = 1 iff {i,j} is an edge.
struct PlumbingMatrix {
  std::vector<std::vector<std::int64_t>> entries;
  std::vector<std::int64_t> degrees;

  std::size_t size() const { return entries.size(); }
  std::vector<std::int64_t> weights() const;
  IntMatrix to_int_matrix() const;
};

struct DetInverse {
  BigInt det;
  /// det * M^{-1}, an integer matrix.
  IntMatrix adjugate;
  RationalMatrix inverse;
};

/// A spin^c representative k in m + 2Z^s.
struct SpincRep {
  std::vector<std::int64_t> k;
  bool operator==(const SpincRep&) const = default;
};

/// Throws std::invalid_argument for non-tree input.
PlumbingMatrix build_matrix(const PlumbingGraph& g);

/// Exact determinant by fraction-free elimination.
BigInt determinant(IntMatrix a);

/// All leading principal minors d_1..d_s (stops early and returns the prefix when one vanishes).
std::vector<BigInt> leading_principal_minors(const PlumbingMatrix& m);

/// True iff sign(d_k) = (-1)^k for every leading principal minor.
bool is_negative_definite(const PlumbingMatrix& m);

/// Exact determinant and inverse. Throws std::domain_error for singular input.
DetInverse det_and_inverse(const PlumbingMatrix& m);

/// |det| of M with row and column i removed (1 for a 1x1 matrix).
BigInt vertex_deleted_h(const PlumbingMatrix& m, std::size_t i);

/// |det M| representatives of (m + 2Z^s) / 2MZ^s, from the Hermite normal form of M.
/// Throws std::domain_error for singular M.
std::vector<SpincRep> spinc_representatives(const PlumbingMatrix& m);

/// Whether k1 - k2 lies in 2MZ^s.
bool spinc_equivalent(const PlumbingMatrix& m, const SpincRep& k1, const SpincRep& k2);

/// Neumann blow-down of a (-1)-vertex of degree <= 2: remove it, add 1 to each neighbour's
/// weight, and join the two neighbours when there are two. Vertex order is preserved with
/// index i removed. Throws std::invalid_argument on precondition violation.
PlumbingGraph blow_down(const PlumbingGraph& g, std::size_t i);

/// Inverse moves, used to build invariance test pairs. The new (-1)-vertex is appended last.
PlumbingGraph blow_up_edge(const PlumbingGraph& g, std::size_t i, std::size_t j);
PlumbingGraph blow_up_vertex(const PlumbingGraph& g, std::size_t i);

/// {"vertices": [{"id": 0, "weight": -2}, ...], "edges": [[0, 1], ...]}
PlumbingGraph graph_from_json(const nlohmann::json& j);
nlohmann::json graph_to_json(const PlumbingGraph& g);

}  // namespace zhat
