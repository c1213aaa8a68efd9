#pragma once

// Shared test helpers: seeded random generators and reference
// implementations written independently of the library code they check
// (different algorithms on purpose, so a shared bug is unlikely).

#include <algorithm>
#include <array>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "webtrace/linalg.hpp"
#include "webtrace/rational.hpp"
#include "webtrace/representation.hpp"
#include "webtrace/signature.hpp"
#include "webtrace/tensor.hpp"
#include "webtrace/web.hpp"

namespace testutil {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline webtrace::Rat random_rational(Rng& rng) {
  return webtrace::make_rat(uniform(rng, -4, 4), uniform(rng, 1, 4));
}

inline webtrace::Tensor random_tensor(Rng& rng, int in_rank, int out_rank, int dim) {
  webtrace::Tensor t(in_rank, out_rank, dim);
  for (auto& e : t.entries()) e = random_rational(rng);
  return t;
}

inline webtrace::Representation random_representation(Rng& rng,
                                                      const webtrace::SignaturePtr& sig,
                                                      int dim) {
  std::vector<webtrace::Tensor> tensors;
  for (const auto& t : sig->types()) {
    tensors.push_back(random_tensor(rng, t.in_arity, t.out_arity, dim));
  }
  return webtrace::Representation(sig, dim, std::move(tensors));
}

// --- reference evaluation ---------------------------------------------------

// Boundary tensor of a (k, l)-web by plain recursion over the edge list:
// entry (in_idx, out_idx) fixes the colors of root/sink edges and sums the
// vertex-entry product over all colorings of the remaining edges. Each
// vertexless loop multiplies by dim.
inline webtrace::Tensor oracle_extended(const webtrace::Representation& r,
                                        const webtrace::Web& w) {
  using namespace webtrace;
  const int n = r.dim();
  const auto& edges = w.edges();

  const auto vertex_factor = [&](const std::vector<int>& color) {
    Rat prod = make_rat(1);
    for (std::size_t v = 0; v < w.vertices().size(); ++v) {
      const auto& ty = w.vertex_type(static_cast<int>(v));
      std::vector<int> in_idx(static_cast<std::size_t>(ty.in_arity), -1);
      std::vector<int> out_idx(static_cast<std::size_t>(ty.out_arity), -1);
      for (std::size_t e = 0; e < edges.size(); ++e) {
        const Edge& ed = edges[e];
        if (ed.head.is_port() && ed.head.vertex == static_cast<int>(v)) {
          in_idx[static_cast<std::size_t>(ed.head.slot - 1)] = color[e];
        }
        if (ed.tail.is_port() && ed.tail.vertex == static_cast<int>(v)) {
          out_idx[static_cast<std::size_t>(ed.tail.slot - 1)] = color[e];
        }
      }
      prod *= r.tensor(w.vertices()[v].type).at(in_idx, out_idx);
    }
    return prod;
  };

  Tensor result(w.roots(), w.sinks(), n);
  if (n == 0 && w.roots() + w.sinks() > 0) return result;  // no entries at all

  std::vector<int> boundary(static_cast<std::size_t>(w.roots() + w.sinks()), 0);
  for (;;) {
    std::vector<int> in_idx(boundary.begin(), boundary.begin() + w.roots());
    std::vector<int> out_idx(boundary.begin() + w.roots(), boundary.end());

    // sum over colorings consistent with the boundary
    Rat total = make_rat(0);
    std::vector<int> color(edges.size(), 0);
    const auto consistent = [&](std::size_t e) {
      const Edge& ed = edges[e];
      if (!ed.tail.is_port() && color[e] != in_idx[static_cast<std::size_t>(ed.tail.label - 1)])
        return false;
      if (!ed.head.is_port() && color[e] != out_idx[static_cast<std::size_t>(ed.head.label - 1)])
        return false;
      return true;
    };
    const auto recurse = [&](auto&& self, std::size_t e) -> void {
      if (e == edges.size()) {
        total += vertex_factor(color);
        return;
      }
      for (int c = 0; c < n; ++c) {
        color[e] = c;
        if (consistent(e)) self(self, e + 1);
      }
    };
    if (n > 0 || edges.empty()) recurse(recurse, 0);

    for (long i = 0; i < w.loops(); ++i) total *= make_rat(n);
    result.at(in_idx, out_idx) = total;

    // odometer over the boundary tuple
    std::size_t pos = 0;
    while (pos < boundary.size()) {
      if (++boundary[pos] < n) break;
      boundary[pos] = 0;
      ++pos;
    }
    if (pos == boundary.size()) break;
    if (boundary.empty()) break;
  }
  return result;
}

inline webtrace::Rat oracle_trace(const webtrace::Representation& r, const webtrace::Web& w) {
  if (w.roots() != 0 || w.sinks() != 0) throw std::logic_error("oracle_trace: web not closed");
  return oracle_extended(r, w).entries().at(0);
}

// --- reference isomorphism --------------------------------------------------

namespace detail {

using EdgeRow = std::array<int, 8>;

inline EdgeRow edge_row(const webtrace::Edge& e, const std::vector<int>& vmap) {
  const auto end_cols = [&](const webtrace::EdgeEnd& x, int* c) {
    if (x.is_port()) {
      c[0] = 1;
      c[1] = vmap[static_cast<std::size_t>(x.vertex)];
      c[2] = x.slot;
      c[3] = 0;
    } else {
      c[0] = 0;
      c[1] = -1;
      c[2] = 0;
      c[3] = x.label;
    }
  };
  EdgeRow row{};
  end_cols(e.tail, row.data());
  end_cols(e.head, row.data() + 4);
  return row;
}

inline std::vector<EdgeRow> edge_multiset(const webtrace::Web& w, const std::vector<int>& vmap) {
  std::vector<EdgeRow> rows;
  rows.reserve(w.edges().size());
  for (const auto& e : w.edges()) rows.push_back(edge_row(e, vmap));
  std::sort(rows.begin(), rows.end());
  return rows;
}

}  // namespace detail

// Labeled-boundary isomorphism by brute force over type-respecting vertex
// bijections. Intended for small webs (<= ~7 vertices).
inline bool iso_webs(const webtrace::Web& a, const webtrace::Web& b) {
  const std::size_t m = a.vertices().size();
  if (m != b.vertices().size()) return false;
  if (a.roots() != b.roots() || a.sinks() != b.sinks() || a.loops() != b.loops()) return false;
  if (a.edges().size() != b.edges().size()) return false;

  std::vector<int> ident(m);
  for (std::size_t i = 0; i < m; ++i) ident[i] = static_cast<int>(i);
  const auto b_rows = detail::edge_multiset(b, ident);

  std::vector<int> perm = ident;  // a-vertex i -> b-vertex perm[i]
  std::sort(perm.begin(), perm.end());
  do {
    bool types_ok = true;
    for (std::size_t i = 0; i < m; ++i) {
      if (a.vertices()[i].type != b.vertices()[static_cast<std::size_t>(perm[i])].type) {
        types_ok = false;
        break;
      }
    }
    if (!types_ok) continue;
    if (detail::edge_multiset(a, perm) == b_rows) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return m == 0 && a.loops() == b.loops();
}

// --- reference census ---------------------------------------------------

// Every valid (roots, sinks)-web with at most max_vertices typed vertices and
// max_loops vertexless loops, one per isomorphism class, by exhaustive
// matching of out-ends to in-ends. Dedups with iso_webs.
inline std::vector<webtrace::Web> oracle_census(const webtrace::SignaturePtr& sig, int roots,
                                                int sinks, int max_vertices, int max_loops) {
  using namespace webtrace;
  std::vector<Web> found;

  const auto consider = [&](Web&& w) {
    if (!validate(w).empty()) return;
    for (const Web& prev : found) {
      if (iso_webs(prev, w)) return;
    }
    found.push_back(std::move(w));
  };

  // non-decreasing type sequences of length m
  std::vector<int> types;
  const auto with_types = [&](auto&& self, int m, int min_type) -> void {
    if (static_cast<int>(types.size()) == m) {
      std::vector<WebVertex> vertices;
      std::vector<EdgeEnd> tails, heads;
      for (int rt = 1; rt <= roots; ++rt) tails.push_back(EdgeEnd::boundary(rt));
      for (int sk = 1; sk <= sinks; ++sk) heads.push_back(EdgeEnd::boundary(sk));
      for (int v = 0; v < m; ++v) {
        vertices.push_back({"w" + std::to_string(v), types[static_cast<std::size_t>(v)]});
        const auto& ty = sig->type(types[static_cast<std::size_t>(v)]);
        for (int s = 1; s <= ty.out_arity; ++s) tails.push_back(EdgeEnd::port(v, s));
        for (int s = 1; s <= ty.in_arity; ++s) heads.push_back(EdgeEnd::port(v, s));
      }
      if (tails.size() != heads.size()) return;

      std::vector<Edge> edges(tails.size());
      std::vector<bool> used(heads.size(), false);
      const auto match = [&](auto&& inner, std::size_t t) -> void {
        if (t == tails.size()) {
          for (int c = 0; c <= max_loops; ++c) {
            consider(Web(sig, vertices, edges, roots, sinks, c));
          }
          return;
        }
        for (std::size_t h = 0; h < heads.size(); ++h) {
          if (used[h]) continue;
          used[h] = true;
          edges[t] = Edge{tails[t], heads[h]};
          inner(inner, t + 1);
          used[h] = false;
        }
      };
      match(match, 0);
      return;
    }
    for (int ty = min_type; ty < sig->count(); ++ty) {
      types.push_back(ty);
      self(self, m, ty);
      types.pop_back();
    }
  };

  for (int m = 0; m <= max_vertices; ++m) with_types(with_types, m, 0);
  return found;
}

// --- random webs ----------------------------------------------------------

// Valid by construction: every slot and boundary label is used exactly once.
inline webtrace::Web random_web(Rng& rng, const webtrace::SignaturePtr& sig, int roots,
                                int sinks, int max_vertices, int max_loops = 1) {
  using namespace webtrace;
  // an imbalanced boundary needs at least that many balancing vertices
  const int min_vertices = std::min(roots > sinks ? roots - sinks : sinks - roots,
                                    max_vertices);
  for (int attempt = 0; attempt < 5000; ++attempt) {
    const int m = uniform(rng, min_vertices, max_vertices);
    std::vector<WebVertex> vertices;
    std::vector<EdgeEnd> tails, heads;
    for (int rt = 1; rt <= roots; ++rt) tails.push_back(EdgeEnd::boundary(rt));
    for (int sk = 1; sk <= sinks; ++sk) heads.push_back(EdgeEnd::boundary(sk));
    for (int v = 0; v < m; ++v) {
      const int ty = uniform(rng, 0, sig->count() - 1);
      vertices.push_back({"r" + std::to_string(v), ty});
      for (int s = 1; s <= sig->type(ty).out_arity; ++s) tails.push_back(EdgeEnd::port(v, s));
      for (int s = 1; s <= sig->type(ty).in_arity; ++s) heads.push_back(EdgeEnd::port(v, s));
    }
    if (tails.size() != heads.size()) continue;
    std::shuffle(heads.begin(), heads.end(), rng);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < tails.size(); ++i) edges.push_back(Edge{tails[i], heads[i]});
    return Web(sig, std::move(vertices), std::move(edges), roots, sinks,
               uniform(rng, 0, max_loops));
  }
  throw std::logic_error("random_web: no balanced vertex multiset found");
}

// --- permutations and matrices ---------------------------------------------

inline long perm_cycles(const std::vector<int>& perm) {  // 1-based image list
  std::vector<bool> seen(perm.size(), false);
  long cycles = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    std::size_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = static_cast<std::size_t>(perm[j] - 1);
    }
  }
  return cycles;
}

inline int perm_sign(const std::vector<int>& perm) {
  int inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    for (std::size_t j = i + 1; j < perm.size(); ++j) {
      if (perm[i] > perm[j]) ++inversions;
    }
  }
  return inversions % 2 == 0 ? 1 : -1;
}

// Rank by plain Gaussian elimination over the rationals.
inline long oracle_rank(webtrace::RatMatrix m) {
  using namespace webtrace;
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  long rank = 0;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t pivot = row;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[row]);
    for (std::size_t i = row + 1; i < rows; ++i) {
      if (m[i][col] == 0) continue;
      const Rat factor = m[i][col] / m[row][col];
      for (std::size_t j = col; j < cols; ++j) m[i][j] -= factor * m[row][j];
    }
    ++rank;
    ++row;
  }
  return rank;
}

// (1,1) tensor with entry [in=a; out=j] = m[a][j], so chains of such
// vertices multiply matrices left to right.
inline webtrace::Tensor tensor_of_matrix(const webtrace::RatMatrix& m) {
  const int n = static_cast<int>(m.size());
  webtrace::Tensor t(1, 1, n);
  for (int a = 0; a < n; ++a) {
    for (int j = 0; j < n; ++j) {
      const std::vector<int> in_idx = {a}, out_idx = {j};
      t.at(in_idx, out_idx) = m[static_cast<std::size_t>(a)][static_cast<std::size_t>(j)];
    }
  }
  return t;
}

inline webtrace::RatMatrix random_matrix(Rng& rng, int rows, int cols) {
  webtrace::RatMatrix m(static_cast<std::size_t>(rows));
  for (auto& row : m) {
    row.resize(static_cast<std::size_t>(cols));
    for (auto& x : row) x = random_rational(rng);
  }
  return m;
}

inline webtrace::RatMatrix random_invertible(Rng& rng, int n) {
  for (int attempt = 0; attempt < 200; ++attempt) {
    webtrace::RatMatrix m = random_matrix(rng, n, n);
    if (webtrace::invert(m).has_value()) return m;
  }
  throw std::logic_error("random_invertible: everything came out singular");
}

inline std::string source_path(const std::string& rel) {
  return std::string(WEBTRACE_SOURCE_DIR) + "/" + rel;
}

}  // namespace testutil
