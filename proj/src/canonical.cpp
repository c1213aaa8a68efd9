#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "webtrace/errors.hpp"
#include "webtrace/web.hpp"

namespace webtrace {

namespace {

constexpr int kMaxVertices = 12;
constexpr long kMaxOrderings = 362880;  // 9!

// Adjacency resolved once: for every vertex, the edge end facing each of its
// slots. Valid webs have exactly one end per slot.
struct Adjacency {
  // per vertex, per out-slot (0-based): the head end of the unique edge there
  std::vector<std::vector<EdgeEnd>> out_heads;
  // per vertex, per in-slot: the tail end of the unique edge there
  std::vector<std::vector<EdgeEnd>> in_tails;
  // per root label (0-based): the head end of the unique edge leaving it
  std::vector<EdgeEnd> root_heads;
};

Adjacency resolve(const Web& w) {
  Adjacency adj;
  const int m = static_cast<int>(w.vertices().size());
  adj.out_heads.resize(static_cast<std::size_t>(m));
  adj.in_tails.resize(static_cast<std::size_t>(m));
  for (int v = 0; v < m; ++v) {
    const auto& t = w.vertex_type(v);
    adj.out_heads[static_cast<std::size_t>(v)].resize(static_cast<std::size_t>(t.out_arity));
    adj.in_tails[static_cast<std::size_t>(v)].resize(static_cast<std::size_t>(t.in_arity));
  }
  adj.root_heads.resize(static_cast<std::size_t>(w.roots()));
  for (const Edge& e : w.edges()) {
    if (e.tail.is_port()) {
      adj.out_heads[static_cast<std::size_t>(e.tail.vertex)][static_cast<std::size_t>(e.tail.slot - 1)] = e.head;
    } else {
      adj.root_heads[static_cast<std::size_t>(e.tail.label - 1)] = e.head;
    }
    if (e.head.is_port()) {
      adj.in_tails[static_cast<std::size_t>(e.head.vertex)][static_cast<std::size_t>(e.head.slot - 1)] = e.tail;
    }
  }
  return adj;
}

// Color refinement: start from vertex types and repeatedly split classes by
// the (position-sensitive) colors seen across each slot, until stable. The
// resulting coloring is iso-invariant, so candidate orderings only permute
// vertices within one color class.
std::vector<int> refine_colors(const Web& w, const Adjacency& adj) {
  const int m = static_cast<int>(w.vertices().size());
  std::vector<int> color(static_cast<std::size_t>(m));
  for (int v = 0; v < m; ++v) color[static_cast<std::size_t>(v)] = w.vertices()[static_cast<std::size_t>(v)].type;

  for (;;) {
    std::vector<std::vector<long>> sigs(static_cast<std::size_t>(m));
    for (int v = 0; v < m; ++v) {
      std::vector<long>& s = sigs[static_cast<std::size_t>(v)];
      s.push_back(color[static_cast<std::size_t>(v)]);
      for (const EdgeEnd& head : adj.out_heads[static_cast<std::size_t>(v)]) {
        if (head.is_port()) {
          s.push_back(1);
          s.push_back(color[static_cast<std::size_t>(head.vertex)]);
          s.push_back(head.slot);
        } else {
          s.push_back(0);
          s.push_back(head.label);
        }
      }
      for (const EdgeEnd& tail : adj.in_tails[static_cast<std::size_t>(v)]) {
        if (tail.is_port()) {
          s.push_back(1);
          s.push_back(color[static_cast<std::size_t>(tail.vertex)]);
          s.push_back(tail.slot);
        } else {
          s.push_back(0);
          s.push_back(tail.label);
        }
      }
    }
    std::map<std::vector<long>, int> rank;
    for (const auto& s : sigs) rank.emplace(s, 0);
    int next = 0;
    for (auto& [sig, r] : rank) r = next++;
    std::vector<int> refined(static_cast<std::size_t>(m));
    for (int v = 0; v < m; ++v) refined[static_cast<std::size_t>(v)] = rank[sigs[static_cast<std::size_t>(v)]];
    if (refined == color) return color;
    color = std::move(refined);
  }
}

void append_end(std::string& key, const EdgeEnd& e, const std::vector<int>& new_index) {
  if (e.is_port()) {
    key += 'p';
    key += std::to_string(new_index[static_cast<std::size_t>(e.vertex)]);
    key += '.';
    key += std::to_string(e.slot);
  } else {
    key += 's';
    key += std::to_string(e.label);
  }
  key += ' ';
}

// Key under a fixed ordering: header, the type sequence, then the head end
// of every tail in canonical tail order (roots 1..k, then each vertex's
// out-slots). For a valid web this determines the web up to vertex names.
std::string key_for_order(const Web& w, const Adjacency& adj,
                          const std::vector<int>& order) {
  const int m = static_cast<int>(order.size());
  std::vector<int> new_index(static_cast<std::size_t>(m));
  for (int pos = 0; pos < m; ++pos) new_index[static_cast<std::size_t>(order[static_cast<std::size_t>(pos)])] = pos;

  std::string key = "k" + std::to_string(w.roots()) + " l" + std::to_string(w.sinks()) +
                    " o" + std::to_string(w.loops()) + " m" + std::to_string(m) + " |";
  for (int pos = 0; pos < m; ++pos) {
    key += ' ';
    key += std::to_string(w.vertices()[static_cast<std::size_t>(order[static_cast<std::size_t>(pos)])].type);
  }
  key += " | ";
  for (const EdgeEnd& head : adj.root_heads) append_end(key, head, new_index);
  for (int pos = 0; pos < m; ++pos) {
    for (const EdgeEnd& head : adj.out_heads[static_cast<std::size_t>(order[static_cast<std::size_t>(pos)])]) {
      append_end(key, head, new_index);
    }
  }
  return key;
}

struct CanonicalResult {
  std::string key;
  std::vector<int> order;
};

CanonicalResult canonicalize(const Web& w) {
  require_valid(w);
  const int m = static_cast<int>(w.vertices().size());
  if (m > kMaxVertices) {
    throw Error(ErrorCode::cap_exceeded,
                "canonical key limited to " + std::to_string(kMaxVertices) +
                    " vertices; got " + std::to_string(m));
  }
  const Adjacency adj = resolve(w);
  const std::vector<int> color = refine_colors(w, adj);

  // Group vertices by color class, preserving class order.
  std::map<int, std::vector<int>> cells;
  for (int v = 0; v < m; ++v) cells[color[static_cast<std::size_t>(v)]].push_back(v);

  long orderings = 1;
  for (const auto& [c, cell] : cells) {
    for (std::size_t i = 2; i <= cell.size(); ++i) {
      orderings *= static_cast<long>(i);
      if (orderings > kMaxOrderings) {
        throw Error(ErrorCode::cap_exceeded,
                    "canonical key: too many candidate orderings");
      }
    }
  }

  std::vector<std::vector<int>> perms;
  perms.reserve(cells.size());
  for (auto& [c, cell] : cells) perms.push_back(cell);

  CanonicalResult best;
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(m));
  // Odometer over per-cell permutations; each wheel runs through
  // std::next_permutation of its (initially sorted) cell.
  for (;;) {
    order.clear();
    for (const auto& cell : perms) order.insert(order.end(), cell.begin(), cell.end());
    std::string key = key_for_order(w, adj, order);
    if (best.key.empty() || key < best.key) {
      best.key = std::move(key);
      best.order = order;
    }

    std::size_t wheel = 0;
    while (wheel < perms.size() && !std::next_permutation(perms[wheel].begin(), perms[wheel].end())) {
      std::sort(perms[wheel].begin(), perms[wheel].end());
      ++wheel;
    }
    if (wheel == perms.size()) break;
  }
  return best;
}

}  // namespace

std::string canonical_key(const Web& w) { return canonicalize(w).key; }

std::vector<int> canonical_order(const Web& w) { return canonicalize(w).order; }

}  // namespace webtrace
