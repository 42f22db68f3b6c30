#include "zhat/plumbing.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace zhat {

std::vector<std::int64_t> PlumbingGraph::degrees() const {
  std::vector<std::int64_t> d(size(), 0);
  for (const auto& [a, b] : edges) {
    ++d.at(a);
    ++d.at(b);
  }
  return d;
}

std::vector<std::vector<std::size_t>> PlumbingGraph::adjacency() const {
  std::vector<std::vector<std::size_t>> adj(size());
  for (const auto& [a, b] : edges) {
    adj.at(a).push_back(b);
    adj.at(b).push_back(a);
  }
  return adj;
}

void PlumbingGraph::validate() const {
  const std::size_t s = size();
  if (s == 0) throw std::invalid_argument("plumbing graph has no vertices");
  if (edges.size() != s - 1) {
    throw std::invalid_argument("plumbing graph is not a tree: " + std::to_string(edges.size()) +
                                " edges on " + std::to_string(s) + " vertices");
  }
  for (const auto& [a, b] : edges) {
    if (a >= s || b >= s) throw std::invalid_argument("edge refers to a missing vertex");
    if (a == b) throw std::invalid_argument("plumbing graph has a loop");
  }
  // union-find connectivity; s-1 edges + connected => tree
  std::vector<std::size_t> parent(s);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [a, b] : edges) {
    const auto ra = find(a), rb = find(b);
    if (ra == rb) throw std::invalid_argument("plumbing graph has a cycle");
    parent[ra] = rb;
  }
}

std::vector<std::int64_t> PlumbingMatrix::weights() const {
  std::vector<std::int64_t> w(size());
  for (std::size_t i = 0; i < size(); ++i) w[i] = entries[i][i];
  return w;
}

IntMatrix PlumbingMatrix::to_int_matrix() const {
  IntMatrix a(size(), std::vector<BigInt>(size()));
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = 0; j < size(); ++j) a[i][j] = static_cast<long>(entries[i][j]);
  }
  return a;
}

PlumbingMatrix build_matrix(const PlumbingGraph& g) {
  g.validate();
  PlumbingMatrix m;
  const auto s = g.size();
  m.entries.assign(s, std::vector<std::int64_t>(s, 0));
  for (std::size_t i = 0; i < s; ++i) m.entries[i][i] = g.weights[i];
  for (const auto& [a, b] : g.edges) m.entries[a][b] = m.entries[b][a] = 1;
  m.degrees = g.degrees();
  return m;
}

BigInt determinant(IntMatrix a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

std::vector<BigInt> leading_principal_minors(const PlumbingMatrix& m) {
  IntMatrix a = m.to_int_matrix();
  const std::size_t n = a.size();
  std::vector<BigInt> minors;
  BigInt prev = 1;
  // Without pivoting the k-th Bareiss pivot is the k-th leading principal minor.
  for (std::size_t k = 0; k < n; ++k) {
    minors.push_back(a[k][k]);
    if (a[k][k] == 0) break;
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  return minors;
}

bool is_negative_definite(const PlumbingMatrix& m) {
  const auto minors = leading_principal_minors(m);
  if (minors.size() != m.size()) return false;
  for (std::size_t k = 0; k < minors.size(); ++k) {
    const int want = (k % 2 == 0) ? -1 : 1;  // d_{k+1} has sign (-1)^{k+1}
    if (sgn(minors[k]) != want) return false;
  }
  return true;
}

DetInverse det_and_inverse(const PlumbingMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) throw std::domain_error("empty matrix");
  // Fraction-free Gauss-Jordan on [M | I]; ends at [d I | d M^{-1}].
  IntMatrix a(n, std::vector<BigInt>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = static_cast<long>(m.entries[i][j]);
    a[i][n + i] = 1;
  }
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k] == 0) ++p;
    if (p == n) throw std::domain_error("plumbing matrix is singular");
    if (p != k) {
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      const BigInt aik = a[i][k];
      for (std::size_t j = 0; j < 2 * n; ++j) {
        a[i][j] = (a[k][k] * a[i][j] - aik * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  const BigInt d = a[0][0];
  DetInverse out;
  out.det = sign * d;
  out.adjugate.assign(n, std::vector<BigInt>(n));
  out.inverse.assign(n, std::vector<BigRational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      // a[i][n+j] = d (M^{-1})_{ij}; adj = det M^{-1}
      out.adjugate[i][j] = sign * a[i][n + j];
      out.inverse[i][j] = make_rational(a[i][n + j], d);
    }
  }
  return out;
}

BigInt vertex_deleted_h(const PlumbingMatrix& m, std::size_t i) {
  const std::size_t n = m.size();
  if (i >= n) throw std::out_of_range("vertex index out of range");
  IntMatrix a;
  for (std::size_t r = 0; r < n; ++r) {
    if (r == i) continue;
    std::vector<BigInt> row;
    for (std::size_t c = 0; c < n; ++c) {
      if (c != i) row.emplace_back(static_cast<long>(m.entries[r][c]));
    }
    a.push_back(std::move(row));
  }
  return abs(determinant(std::move(a)));
}

namespace {

// Lower-triangular column Hermite form: columns of the result span the same lattice as
// the columns of a, with positive diagonal.
IntMatrix column_hermite_form(IntMatrix a) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) {
    // Euclid on row i across columns i..n-1
    while (true) {
      std::size_t piv = n;
      for (std::size_t j = i; j < n; ++j) {
        if (a[i][j] != 0 && (piv == n || abs(a[i][j]) < abs(a[i][piv]))) piv = j;
      }
      if (piv == n) throw std::domain_error("plumbing matrix is singular");
      if (piv != i) {
        for (std::size_t r = 0; r < n; ++r) std::swap(a[r][i], a[r][piv]);
      }
      bool done = true;
      for (std::size_t j = i + 1; j < n; ++j) {
        if (a[i][j] == 0) continue;
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), a[i][j].get_mpz_t(), a[i][i].get_mpz_t());
        for (std::size_t r = 0; r < n; ++r) a[r][j] -= q * a[r][i];
        if (a[i][j] != 0) done = false;
      }
      if (done) break;
    }
    if (a[i][i] < 0) {
      for (std::size_t r = 0; r < n; ++r) a[r][i] = -a[r][i];
    }
  }
  return a;
}

}  // namespace

std::vector<SpincRep> spinc_representatives(const PlumbingMatrix& m) {
  const std::size_t n = m.size();
  const IntMatrix h = column_hermite_form(m.to_int_matrix());
  // Z^n / MZ^n has representatives {c : 0 <= c_i < h_ii}; k = m + 2c.
  std::vector<std::int64_t> bounds(n);
  BigInt count = 1;
  for (std::size_t i = 0; i < n; ++i) {
    bounds[i] = to_int64(h[i][i]);
    count *= h[i][i];
  }
  if (count > 10'000'000) throw std::length_error("too many spin^c structures to enumerate");
  const auto w = m.weights();
  std::vector<SpincRep> reps;
  std::vector<std::int64_t> c(n, 0);
  while (true) {
    SpincRep rep;
    rep.k.resize(n);
    for (std::size_t i = 0; i < n; ++i) rep.k[i] = w[i] + 2 * c[i];
    reps.push_back(std::move(rep));
    std::size_t i = 0;
    while (i < n && ++c[i] == bounds[i]) c[i++] = 0;
    if (i == n) break;
  }
  return reps;
}

bool spinc_equivalent(const PlumbingMatrix& m, const SpincRep& k1, const SpincRep& k2) {
  const std::size_t n = m.size();
  if (k1.k.size() != n || k2.k.size() != n) throw std::invalid_argument("spin^c vector has wrong length");
  std::vector<std::int64_t> diff(n);
  for (std::size_t i = 0; i < n; ++i) {
    diff[i] = k1.k[i] - k2.k[i];
    if (diff[i] % 2 != 0) return false;
  }
  const auto di = det_and_inverse(m);
  // (k1 - k2)/2 = M z  <=>  adj (k1 - k2)/2 divisible by det
  for (std::size_t i = 0; i < n; ++i) {
    BigInt acc = 0;
    for (std::size_t j = 0; j < n; ++j) acc += di.adjugate[i][j] * static_cast<long>(diff[j] / 2);
    if (acc % di.det != 0) return false;
  }
  return true;
}

PlumbingGraph blow_down(const PlumbingGraph& g, std::size_t i) {
  g.validate();
  if (i >= g.size()) throw std::invalid_argument("blow_down: vertex index out of range");
  if (g.weights[i] != -1) throw std::invalid_argument("blow_down: vertex weight is not -1");
  const auto adj = g.adjacency();
  if (adj[i].size() > 2) throw std::invalid_argument("blow_down: vertex degree exceeds 2");
  if (g.size() == 1) throw std::invalid_argument("blow_down: cannot remove the only vertex");
  auto reindex = [i](std::size_t v) { return v > i ? v - 1 : v; };
  PlumbingGraph out;
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (v == i) continue;
    std::int64_t w = g.weights[v];
    if (std::find(adj[i].begin(), adj[i].end(), v) != adj[i].end()) w += 1;
    out.weights.push_back(w);
  }
  for (const auto& [a, b] : g.edges) {
    if (a == i || b == i) continue;
    out.edges.emplace_back(reindex(a), reindex(b));
  }
  if (adj[i].size() == 2) out.edges.emplace_back(reindex(adj[i][0]), reindex(adj[i][1]));
  out.validate();
  return out;
}

PlumbingGraph blow_up_edge(const PlumbingGraph& g, std::size_t i, std::size_t j) {
  g.validate();
  auto it = std::find_if(g.edges.begin(), g.edges.end(), [&](const auto& e) {
    return (e.first == i && e.second == j) || (e.first == j && e.second == i);
  });
  if (it == g.edges.end()) throw std::invalid_argument("blow_up_edge: no such edge");
  PlumbingGraph out = g;
  out.edges.erase(out.edges.begin() + (it - g.edges.begin()));
  const std::size_t v = out.weights.size();
  out.weights.push_back(-1);
  out.weights[i] -= 1;
  out.weights[j] -= 1;
  out.edges.emplace_back(i, v);
  out.edges.emplace_back(v, j);
  return out;
}

PlumbingGraph blow_up_vertex(const PlumbingGraph& g, std::size_t i) {
  g.validate();
  if (i >= g.size()) throw std::invalid_argument("blow_up_vertex: vertex index out of range");
  PlumbingGraph out = g;
  const std::size_t v = out.weights.size();
  out.weights.push_back(-1);
  out.weights[i] -= 1;
  out.edges.emplace_back(i, v);
  return out;
}

PlumbingGraph graph_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges")) {
    throw std::invalid_argument("plumbing JSON needs \"vertices\" and \"edges\"");
  }
  const auto& vs = j.at("vertices");
  if (!vs.is_array()) throw std::invalid_argument("\"vertices\" must be an array");
  PlumbingGraph g;
  g.weights.assign(vs.size(), 0);
  std::vector<bool> seen(vs.size(), false);
  for (const auto& v : vs) {
    if (!v.contains("id") || !v.contains("weight")) {
      throw std::invalid_argument("vertex entries need \"id\" and \"weight\"");
    }
    const auto id = v.at("id").get<std::int64_t>();
    if (id < 0 || static_cast<std::size_t>(id) >= vs.size() || seen[id]) {
      throw std::invalid_argument("vertex ids must be a permutation of 0..s-1");
    }
    seen[id] = true;
    g.weights[id] = v.at("weight").get<std::int64_t>();
  }
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw std::invalid_argument("edges must be [a, b] pairs");
    const auto a = e[0].get<std::int64_t>(), b = e[1].get<std::int64_t>();
    if (a < 0 || b < 0) throw std::invalid_argument("edge refers to a negative vertex id");
    g.edges.emplace_back(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
  }
  g.validate();
  return g;
}

nlohmann::json graph_to_json(const PlumbingGraph& g) {
  nlohmann::json j;
  j["vertices"] = nlohmann::json::array();
  for (std::size_t i = 0; i < g.size(); ++i) j["vertices"].push_back({{"id", i}, {"weight", g.weights[i]}});
  j["edges"] = nlohmann::json::array();
  for (const auto& [a, b] : g.edges) j["edges"].push_back({a, b});
  return j;
}

}  // namespace zhat
