#include "webtrace/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <tuple>

#include "webtrace/errors.hpp"

namespace webtrace {

namespace {

constexpr std::size_t kMaxWirings = 9;  // 9! bijections per type choice

// Nondecreasing type-index sequences of the given length (multisets).
void for_each_type_multiset(int type_count, int length,
                            const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> seq(static_cast<std::size_t>(length), 0);
  if (length == 0) {
    fn(seq);
    return;
  }
  if (type_count == 0) return;
  for (;;) {
    fn(seq);
    int p = length - 1;
    while (p >= 0 && seq[static_cast<std::size_t>(p)] == type_count - 1) --p;
    if (p < 0) return;
    const int next = seq[static_cast<std::size_t>(p)] + 1;
    for (int q = p; q < length; ++q) seq[static_cast<std::size_t>(q)] = next;
  }
}

}  // namespace

std::vector<Web> enumerate_webs(const SignaturePtr& sig, int roots, int sinks,
                                const EnumerationBounds& bounds) {
  if (!sig) throw Error(ErrorCode::invalid_argument, "enumeration without signature");
  if (roots < 0 || sinks < 0 || bounds.max_vertices < 0 || bounds.max_loops < 0) {
    throw Error(ErrorCode::invalid_argument, "negative enumeration parameter");
  }

  std::map<std::tuple<std::size_t, long, std::string>, Web> found;

  for (int m = 0; m <= bounds.max_vertices; ++m) {
    for_each_type_multiset(sig->count(), m, [&](const std::vector<int>& types) {
      // Tails: roots then every out-slot; heads: sinks then every in-slot.
      // A web on these vertices is exactly a bijection tails -> heads.
      int tail_count = roots;
      int head_count = sinks;
      for (int t : types) {
        tail_count += sig->type(t).out_arity;
        head_count += sig->type(t).in_arity;
      }
      if (tail_count != head_count) return;
      if (static_cast<std::size_t>(tail_count) > kMaxWirings) {
        throw Error(ErrorCode::cap_exceeded,
                    "enumeration bounds produce " + std::to_string(tail_count) +
                        "! wirings per vertex-type choice; cap is " +
                        std::to_string(kMaxWirings) + "!");
      }

      std::vector<EdgeEnd> tails, heads;
      for (int i = 1; i <= roots; ++i) tails.push_back(EdgeEnd::boundary(i));
      for (int v = 0; v < m; ++v) {
        for (int s = 1; s <= sig->type(types[static_cast<std::size_t>(v)]).out_arity; ++s) {
          tails.push_back(EdgeEnd::port(v, s));
        }
      }
      for (int j = 1; j <= sinks; ++j) heads.push_back(EdgeEnd::boundary(j));
      for (int v = 0; v < m; ++v) {
        for (int s = 1; s <= sig->type(types[static_cast<std::size_t>(v)]).in_arity; ++s) {
          heads.push_back(EdgeEnd::port(v, s));
        }
      }

      std::vector<WebVertex> vertices;
      for (int v = 0; v < m; ++v) {
        vertices.push_back(WebVertex{"v" + std::to_string(v + 1), types[static_cast<std::size_t>(v)]});
      }

      std::vector<int> assign(static_cast<std::size_t>(tail_count));
      std::iota(assign.begin(), assign.end(), 0);
      do {
        std::vector<Edge> edges;
        edges.reserve(static_cast<std::size_t>(tail_count));
        for (int t = 0; t < tail_count; ++t) {
          edges.push_back(Edge{tails[static_cast<std::size_t>(t)],
                               heads[static_cast<std::size_t>(assign[static_cast<std::size_t>(t)])]});
        }
        for (long loops = 0; loops <= bounds.max_loops; ++loops) {
          Web w(sig, vertices, edges, roots, sinks, loops);
          std::tuple<std::size_t, long, std::string> key{static_cast<std::size_t>(m), loops,
                                                         canonical_key(w)};
          found.emplace(std::move(key), std::move(w));
        }
      } while (std::next_permutation(assign.begin(), assign.end()));
    });
  }

  std::vector<Web> out;
  out.reserve(found.size());
  for (auto& [key, web] : found) out.push_back(std::move(web));
  return out;
}

}  // namespace webtrace
