#include "webtrace/gallery.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <utility>

#include "webtrace/errors.hpp"
#include "webtrace/trace.hpp"

namespace webtrace {
namespace {

Rat& entry(Tensor& t, std::initializer_list<int> in, std::initializer_list<int> out) {
  return t.at(std::span<const int>(in.begin(), in.size()),
              std::span<const int>(out.begin(), out.size()));
}

// (1,1) tensor from a square matrix, row index feeding the in-slot. A chain
// of such vertices then multiplies the matrices in path order: the word web
// a -> b evaluates to the product M_a * M_b.
Tensor matrix_tensor(int dim, const RatMatrix& m) {
  if (static_cast<int>(m.size()) != dim) {
    throw Error(ErrorCode::shape_mismatch, "matrix is not dim x dim");
  }
  for (const auto& row : m) {
    if (static_cast<int>(row.size()) != dim) {
      throw Error(ErrorCode::shape_mismatch, "matrix is not dim x dim");
    }
  }
  Tensor t(1, 1, dim);
  for (int a = 0; a < dim; ++a) {
    for (int j = 0; j < dim; ++j) entry(t, {a}, {j}) = m[a][j];
  }
  return t;
}

// (2,2) tensor exchanging the two strands: out-slot 1 carries in-slot 2's
// color and vice versa.
Tensor swap_tensor(int dim) {
  Tensor t(2, 2, dim);
  for (int a = 0; a < dim; ++a) {
    for (int b = 0; b < dim; ++b) entry(t, {a, b}, {b, a}) = Rat(1);
  }
  return t;
}

QuantumWeb difference(const SignaturePtr& sig, const Web& plus, const Web& minus) {
  QuantumWeb q(sig);
  q.add(Rat(1), plus);
  q.add(Rat(-1), minus);
  return q;
}

// Three strands root s -> sink s, the first chord crossing strands
// first.{first,second}, the second chord crossing second.{first,second}.
Web chord_product(const SignaturePtr& sig, std::pair<int, int> first,
                  std::pair<int, int> second) {
  WebBuilder b(sig);
  const int v1 = b.add_vertex("c1", "chord");
  const int v2 = b.add_vertex("c2", "chord");
  struct Tail {
    bool at_root = true;
    int vertex_or_label = 0;
    int slot = 0;
  };
  std::array<Tail, 4> tail{};  // index by strand 1..3
  for (int s = 1; s <= 3; ++s) tail[s] = {true, s, 0};
  const auto attach = [&](int v, std::pair<int, int> strands) {
    const auto wire = [&](int strand, int in_slot) {
      if (tail[strand].at_root) {
        b.edge_from_root(tail[strand].vertex_or_label, v, in_slot);
      } else {
        b.edge(tail[strand].vertex_or_label, tail[strand].slot, v, in_slot);
      }
      tail[strand] = {false, v, in_slot};  // out-slot numbers match in-slots here
    };
    wire(strands.first, 1);
    wire(strands.second, 2);
  };
  attach(v1, first);
  attach(v2, second);
  for (int s = 1; s <= 3; ++s) {
    if (tail[s].at_root) {
      b.strand(s, s);
    } else {
      b.edge_to_sink(tail[s].vertex_or_label, tail[s].slot, s);
    }
  }
  return b.build(3, 3);
}

void check_permutation(std::span<const int> perm, int arity, const char* which) {
  if (static_cast<int>(perm.size()) != arity) {
    throw Error(ErrorCode::invalid_argument,
                std::string(which) + " permutation length does not match the arity");
  }
  std::vector<bool> seen(static_cast<std::size_t>(arity) + 1, false);
  for (int p : perm) {
    if (p < 1 || p > arity || seen[p]) {
      throw Error(ErrorCode::invalid_argument,
                  std::string(which) + " permutation is not a permutation of 1..arity");
    }
    seen[p] = true;
  }
}

void validate_table(const GroupTable& table) {
  std::set<std::string> elems(table.elements.begin(), table.elements.end());
  if (elems.size() != table.elements.size()) {
    throw Error(ErrorCode::invalid_argument, "table not a group: duplicate element name");
  }
  if (!elems.count(table.unit)) {
    throw Error(ErrorCode::invalid_argument,
                "table not a group: unit '" + table.unit + "' is not an element");
  }
  for (const auto& [pair, prod] : table.product) {
    if (!elems.count(pair.first) || !elems.count(pair.second) || !elems.count(prod)) {
      throw Error(ErrorCode::invalid_argument,
                  "table not a group: product " + pair.first + "*" + pair.second + " = " + prod +
                      " mentions an unknown element");
    }
  }
  const auto lookup = [&](const std::string& a, const std::string& b) -> const std::string* {
    const auto it = table.product.find({a, b});
    return it == table.product.end() ? nullptr : &it->second;
  };
  for (const std::string& g : table.elements) {
    const std::string* left = lookup(table.unit, g);
    const std::string* right = lookup(g, table.unit);
    if (!left || *left != g || !right || *right != g) {
      throw Error(ErrorCode::invalid_argument,
                  "table not a group: unit products with '" + g + "' must be recorded and equal " +
                      g);
    }
  }
  for (const std::string& a : table.elements) {
    for (const std::string& b : table.elements) {
      const std::string* ab = lookup(a, b);
      if (!ab) continue;
      for (const std::string& c : table.elements) {
        const std::string* bc = lookup(b, c);
        if (!bc) continue;
        const std::string* ab_c = lookup(*ab, c);
        const std::string* a_bc = lookup(a, *bc);
        if (ab_c && a_bc && *ab_c != *a_bc) {
          throw Error(ErrorCode::invalid_argument, "table not a group: associativity fails at (" +
                                                       a + ", " + b + ", " + c + ")");
        }
      }
    }
  }
}

Expectation expect_zero_iff(bool zero) {
  return zero ? Expectation::zero : Expectation::nonzero;
}

}  // namespace

ExamplePack virtual_links(int dim) {
  auto sig = TypeSignature::make({{"pos", 2, 2}, {"neg", 2, 2}});
  ExamplePack pack;
  pack.name = "virtual_links";
  pack.sig = sig;
  pack.rep = Representation(sig, dim, {swap_tensor(dim), swap_tensor(dim)});
  pack.notes = {
      "two crossing types of arity (2,2); the moves below must all evaluate to zero",
      "both crossings act as the strand swap, so closed diagrams evaluate to "
      "dim^(number of components)",
  };

  const auto curl = [&](const char* type) {
    // Kink: the strand enters in-slot 2, the loop runs out-slot 1 back into
    // in-slot 1, and out-slot 2 exits. Under the swap this is the identity.
    WebBuilder b(sig);
    const int v = b.add_vertex("x", type);
    b.edge_from_root(1, v, 2).edge(v, 1, v, 1).edge_to_sink(v, 2, 1);
    return b.build(1, 1);
  };
  const Web strand1 = word_web(sig, std::vector<int>{});
  pack.relations.push_back({"r1_positive", difference(sig, curl("pos"), strand1),
                            Expectation::zero});
  pack.relations.push_back({"r1_negative", difference(sig, curl("neg"), strand1),
                            Expectation::zero});

  {
    WebBuilder b(sig);
    const int p = b.add_vertex("p", "pos");
    const int q = b.add_vertex("q", "neg");
    b.edge_from_root(1, p, 1).edge_from_root(2, p, 2);
    b.edge(p, 1, q, 1).edge(p, 2, q, 2);
    b.edge_to_sink(q, 1, 1).edge_to_sink(q, 2, 2);
    WebBuilder s(sig);
    s.strand(1, 1).strand(2, 2);
    pack.relations.push_back({"r2", difference(sig, b.build(2, 2), s.build(2, 2)),
                              Expectation::zero});
  }

  {
    // Braid relation on three strands, positive crossings on both sides.
    WebBuilder l(sig);
    const int a = l.add_vertex("a", "pos");
    const int bb = l.add_vertex("b", "pos");
    const int c = l.add_vertex("c", "pos");
    l.edge_from_root(1, a, 1).edge_from_root(2, a, 2);
    l.edge(a, 2, bb, 1).edge_from_root(3, bb, 2);
    l.edge(a, 1, c, 1).edge(bb, 1, c, 2);
    l.edge_to_sink(c, 1, 1).edge_to_sink(c, 2, 2).edge_to_sink(bb, 2, 3);
    WebBuilder r(sig);
    const int d = r.add_vertex("d", "pos");
    const int e = r.add_vertex("e", "pos");
    const int f = r.add_vertex("f", "pos");
    r.edge_from_root(2, d, 1).edge_from_root(3, d, 2);
    r.edge_from_root(1, e, 1).edge(d, 1, e, 2);
    r.edge(e, 2, f, 1).edge(d, 2, f, 2);
    r.edge_to_sink(e, 1, 1).edge_to_sink(f, 1, 2).edge_to_sink(f, 2, 3);
    pack.relations.push_back({"r3", difference(sig, l.build(3, 3), r.build(3, 3)),
                              Expectation::zero});
  }
  return pack;
}

ExamplePack chord_diagrams(int dim) {
  auto sig = TypeSignature::make({{"chord", 2, 2}});
  ExamplePack pack;
  pack.name = "chord_diagrams";
  pack.sig = sig;
  pack.rep = Representation(sig, dim, {swap_tensor(dim)});
  pack.notes = {
      "one chord type of arity (2,2) under the matrix-unit tensor (the swap array)",
      "the closed one-chord diagram evaluates to dim^2",
  };

  {
    const std::vector<int> flip{2, 1};
    Relation rel{"chord_flip", directed_graph_relation(sig, "chord", flip, flip),
                 Expectation::zero};
    pack.relations.push_back(std::move(rel));
  }

  {
    // [C12, C13 + C23] as four two-chord webs on three strands.
    QuantumWeb four(sig);
    four.add(Rat(1), chord_product(sig, {1, 2}, {1, 3}));
    four.add(Rat(-1), chord_product(sig, {1, 3}, {1, 2}));
    four.add(Rat(1), chord_product(sig, {1, 2}, {2, 3}));
    four.add(Rat(-1), chord_product(sig, {2, 3}, {1, 2}));
    pack.relations.push_back({"four_term", std::move(four), Expectation::zero});
  }

  {
    // One circle through one chord: out-slot 1 feeds in-slot 2 and out-slot 2
    // feeds in-slot 1.
    WebBuilder b(sig);
    const int v = b.add_vertex("c", "chord");
    b.edge(v, 1, v, 2).edge(v, 2, v, 1);
    pack.relations.push_back({"one_chord_circle", QuantumWeb::from_web(b.build(0, 0)),
                              expect_zero_iff(dim == 0)});
  }
  return pack;
}

ExamplePack group_pack(const std::string& name, const GroupTable& table, int dim,
                       const std::map<std::string, RatMatrix>& matrices) {
  validate_table(table);
  if (dim < 0) throw Error(ErrorCode::invalid_argument, "negative dimension");

  std::vector<TypeSignature::Type> types;
  types.reserve(table.elements.size());
  for (const std::string& g : table.elements) types.push_back({g, 1, 1});
  auto sig = TypeSignature::make(std::move(types));

  std::vector<Tensor> tensors;
  for (const std::string& g : table.elements) {
    const auto it = matrices.find(g);
    if (it == matrices.end()) {
      throw Error(ErrorCode::invalid_argument, "no matrix for element '" + g + "'");
    }
    tensors.push_back(matrix_tensor(dim, it->second));
  }

  ExamplePack pack;
  pack.name = name;
  pack.sig = sig;
  pack.rep = Representation(sig, dim, std::move(tensors));
  pack.notes = {"one (1,1) type per element; a product relation vanishes exactly when "
                "the assigned matrices respect it"};

  {
    const std::vector<int> unit_word{sig->index_of(table.unit)};
    Relation rel{"unit",
                 difference(sig, word_web(sig, unit_word), word_web(sig, std::vector<int>{})),
                 expect_zero_iff(matrices.at(table.unit) == identity_matrix(dim))};
    pack.relations.push_back(std::move(rel));
  }
  for (const auto& [pair, prod] : table.product) {
    const std::vector<int> path{sig->index_of(pair.first), sig->index_of(pair.second)};
    const std::vector<int> direct{sig->index_of(prod)};
    const bool holds =
        matmul(matrices.at(pair.first), matrices.at(pair.second)) == matrices.at(prod);
    Relation rel{pair.first + "*" + pair.second,
                 difference(sig, word_web(sig, path), word_web(sig, direct)),
                 expect_zero_iff(holds)};
    pack.relations.push_back(std::move(rel));
  }
  return pack;
}

ExamplePack algebra_pack(const std::string& name,
                         const std::vector<std::vector<std::vector<Rat>>>& c,
                         const std::vector<Rat>& unit) {
  const int n = static_cast<int>(c.size());
  if (n == 0) throw Error(ErrorCode::invalid_argument, "empty structure constant array");
  for (const auto& plane : c) {
    if (static_cast<int>(plane.size()) != n) {
      throw Error(ErrorCode::shape_mismatch, "structure constants are not n x n x n");
    }
    for (const auto& row : plane) {
      if (static_cast<int>(row.size()) != n) {
        throw Error(ErrorCode::shape_mismatch, "structure constants are not n x n x n");
      }
    }
  }
  if (static_cast<int>(unit.size()) != n) {
    throw Error(ErrorCode::shape_mismatch, "unit coordinate count does not match the basis");
  }

  auto sig = TypeSignature::make({{"mul", 2, 1}, {"unit", 0, 1}});
  Tensor mul_t(2, 1, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) entry(mul_t, {i, j}, {k}) = c[i][j][k];
    }
  }
  Tensor unit_t(0, 1, n);
  for (int k = 0; k < n; ++k) entry(unit_t, {}, {k}) = unit[k];

  ExamplePack pack;
  pack.name = name;
  pack.sig = sig;
  pack.rep = Representation(sig, n, {std::move(mul_t), std::move(unit_t)});
  pack.notes = {"bilinear product as a (2,1) tensor of structure constants plus a (0,1) unit; "
                "the relations record whether it is associative and unital"};

  bool assoc = true;
  for (int i = 0; i < n && assoc; ++i) {
    for (int j = 0; j < n && assoc; ++j) {
      for (int k = 0; k < n && assoc; ++k) {
        for (int l = 0; l < n && assoc; ++l) {
          Rat lhs(0), rhs(0);
          for (int m = 0; m < n; ++m) {
            lhs += c[i][j][m] * c[m][k][l];
            rhs += c[j][k][m] * c[i][m][l];
          }
          assoc = lhs == rhs;
        }
      }
    }
  }
  bool left_unital = true;
  bool right_unital = true;
  for (int r = 0; r < n; ++r) {
    for (int s = 0; s < n; ++s) {
      Rat left(0), right(0);
      for (int m = 0; m < n; ++m) {
        left += unit[m] * c[m][r][s];
        right += unit[m] * c[r][m][s];
      }
      const Rat want(r == s ? 1 : 0);
      left_unital = left_unital && left == want;
      right_unital = right_unital && right == want;
    }
  }

  {
    WebBuilder l(sig);
    int m1 = l.add_vertex("m1", "mul");
    int m2 = l.add_vertex("m2", "mul");
    l.edge_from_root(1, m1, 1).edge_from_root(2, m1, 2);
    l.edge(m1, 1, m2, 1).edge_from_root(3, m2, 2);
    l.edge_to_sink(m2, 1, 1);
    WebBuilder r(sig);
    m1 = r.add_vertex("m1", "mul");
    m2 = r.add_vertex("m2", "mul");
    r.edge_from_root(2, m1, 1).edge_from_root(3, m1, 2);
    r.edge_from_root(1, m2, 1).edge(m1, 1, m2, 2);
    r.edge_to_sink(m2, 1, 1);
    pack.relations.push_back({"assoc", difference(sig, l.build(3, 1), r.build(3, 1)),
                              expect_zero_iff(assoc)});
  }
  const Web strand1 = word_web(sig, std::vector<int>{});
  {
    WebBuilder b(sig);
    const int u = b.add_vertex("u", "unit");
    const int m = b.add_vertex("m", "mul");
    b.edge(u, 1, m, 1).edge_from_root(1, m, 2).edge_to_sink(m, 1, 1);
    pack.relations.push_back({"unit_left", difference(sig, b.build(1, 1), strand1),
                              expect_zero_iff(left_unital)});
  }
  {
    WebBuilder b(sig);
    const int u = b.add_vertex("u", "unit");
    const int m = b.add_vertex("m", "mul");
    b.edge_from_root(1, m, 1).edge(u, 1, m, 2).edge_to_sink(m, 1, 1);
    pack.relations.push_back({"unit_right", difference(sig, b.build(1, 1), strand1),
                              expect_zero_iff(right_unital)});
  }
  return pack;
}

QuantumWeb directed_graph_relation(const SignaturePtr& sig, std::string_view type,
                                   std::span<const int> in_perm,
                                   std::span<const int> out_perm) {
  const int ti = sig->index_of(type);
  if (ti < 0) {
    throw Error(ErrorCode::missing_type, "unknown type '" + std::string(type) + "'");
  }
  const TypeSignature::Type& t = sig->type(ti);
  check_permutation(in_perm, t.in_arity, "in");
  check_permutation(out_perm, t.out_arity, "out");

  const auto build = [&](bool permuted) {
    WebBuilder b(sig);
    const int v = b.add_vertex("v", type);
    for (int a = 1; a <= t.in_arity; ++a) {
      b.edge_from_root(a, v, permuted ? in_perm[a - 1] : a);
    }
    for (int o = 1; o <= t.out_arity; ++o) {
      b.edge_to_sink(v, o, permuted ? out_perm[o - 1] : o);
    }
    return b.build(t.in_arity, t.out_arity);
  };
  return difference(sig, build(true), build(false));
}

ExamplePack directed_graphs_pack() {
  auto sig = TypeSignature::make({{"sym", 2, 0}, {"asym", 2, 0}});
  const auto array_tensor = [&](std::array<std::array<int, 2>, 2> m) {
    Tensor t(2, 0, 2);
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) entry(t, {a, b}, {}) = Rat(m[a][b]);
    }
    return t;
  };
  const std::array<std::array<int, 2>, 2> sym{{{1, 2}, {2, 5}}};
  const std::array<std::array<int, 2>, 2> asym{{{1, 2}, {3, 5}}};

  ExamplePack pack;
  pack.name = "directed_graphs";
  pack.sig = sig;
  pack.rep = Representation(sig, 2, {array_tensor(sym), array_tensor(asym)});
  pack.notes = {"two (2,0) edge types; swapping the inputs of a vertex is invisible exactly "
                "when its array is symmetric"};

  const std::vector<int> swap_in{2, 1};
  const auto symmetric = [](const std::array<std::array<int, 2>, 2>& m) {
    return m[0][1] == m[1][0];
  };
  pack.relations.push_back({"sym_swap",
                            directed_graph_relation(sig, "sym", swap_in, std::span<const int>{}),
                            expect_zero_iff(symmetric(sym))});
  pack.relations.push_back({"asym_swap",
                            directed_graph_relation(sig, "asym", swap_in, std::span<const int>{}),
                            expect_zero_iff(symmetric(asym))});
  return pack;
}

ExamplePack degenerate_example() {
  auto sig = TypeSignature::make({{"u", 1, 1}});
  const RatMatrix m{{Rat(1), Rat(1)}, {Rat(0), Rat(1)}};

  ExamplePack pack;
  pack.name = "degenerate_unipotent";
  pack.sig = sig;
  pack.rep = Representation(sig, 2, {matrix_tensor(2, m)});
  pack.notes = {
      "the deviation of the unipotent vertex from the bare strand is a nonzero nilpotent "
      "tensor, yet gluing it against any (1,1)-web gives trace zero",
      "bounded witness search therefore exhausts without finding a separating web",
  };

  const std::vector<int> word{0};
  pack.relations.push_back({"deviation",
                            difference(sig, word_web(sig, word), word_web(sig, std::vector<int>{})),
                            expect_zero_iff(m == identity_matrix(2))});
  return pack;
}

ExamplePack hopf_template() {
  ExamplePack pack;
  pack.name = "hopf_template";
  pack.sig = TypeSignature::make({{"mul", 2, 1},
                                  {"unit", 0, 1},
                                  {"comul", 1, 2},
                                  {"counit", 1, 0},
                                  {"antipode", 1, 1}});
  pack.notes = {"type alphabet of a bialgebra-with-antipode presentation; no relation set "
                "and no representation are shipped"};
  return pack;
}

namespace {

GroupTable z2_table() {
  GroupTable t;
  t.elements = {"e", "u"};
  t.unit = "e";
  t.product = {{{"e", "e"}, "e"}, {{"e", "u"}, "u"}, {{"u", "e"}, "u"}, {{"u", "u"}, "e"}};
  return t;
}

ExamplePack z2_diag_pack() {
  std::map<std::string, RatMatrix> m;
  m["e"] = identity_matrix(2);
  m["u"] = {{Rat(1), Rat(0)}, {Rat(0), Rat(-1)}};
  return group_pack("z2_diag", z2_table(), 2, m);
}

ExamplePack z2_nonhom_pack() {
  std::map<std::string, RatMatrix> m;
  m["e"] = identity_matrix(2);
  m["u"] = {{Rat(1), Rat(1)}, {Rat(0), Rat(1)}};  // squares to a shear, not the identity
  return group_pack("z2_nonhom", z2_table(), 2, m);
}

ExamplePack z_fragment_pack() {
  GroupTable t;
  t.elements = {"e", "g", "g2", "g3", "g4"};
  t.unit = "e";
  const auto name = [&](int i) { return t.elements[static_cast<std::size_t>(i)]; };
  for (int i = 0; i <= 4; ++i) {
    for (int j = 0; i + j <= 4; ++j) t.product[{name(i), name(j)}] = name(i + j);
  }
  std::map<std::string, RatMatrix> m;
  for (int i = 0; i <= 4; ++i) m[name(i)] = {{Rat(1), Rat(i)}, {Rat(0), Rat(1)}};
  return group_pack("z_fragment_unipotent", t, 2, m);
}

ExamplePack trivial_group_pack() {
  GroupTable t;
  t.elements = {"e"};
  t.unit = "e";
  t.product = {{{"e", "e"}, "e"}};
  std::map<std::string, RatMatrix> m;
  m["e"] = identity_matrix(1);
  return group_pack("trivial_group", t, 1, m);
}

std::vector<std::vector<std::vector<Rat>>> matrix2_constants() {
  // Basis E(a,b) at index 2a + b; E(a,b) E(c,d) = [b == c] E(a,d).
  std::vector<std::vector<std::vector<Rat>>> c(
      4, std::vector<std::vector<Rat>>(4, std::vector<Rat>(4, Rat(0))));
  const auto idx = [](int a, int b) { return 2 * a + b; };
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      for (int d = 0; d < 2; ++d) c[idx(a, b)][idx(b, d)][idx(a, d)] = Rat(1);
    }
  }
  return c;
}

ExamplePack diag2_algebra_pack() {
  std::vector<std::vector<std::vector<Rat>>> c(
      2, std::vector<std::vector<Rat>>(2, std::vector<Rat>(2, Rat(0))));
  c[0][0][0] = Rat(1);
  c[1][1][1] = Rat(1);
  return algebra_pack("diag2_algebra", c, {Rat(1), Rat(1)});
}

ExamplePack matrix2_algebra_pack() {
  return algebra_pack("matrix2_algebra", matrix2_constants(),
                      {Rat(1), Rat(0), Rat(0), Rat(1)});
}

ExamplePack matrix2_perturbed_pack() {
  auto c = matrix2_constants();
  c[1][1][1] = Rat(1);  // E(0,1) E(0,1) = E(0,1) breaks associativity
  return algebra_pack("matrix2_algebra_perturbed", c, {Rat(1), Rat(0), Rat(0), Rat(1)});
}

}  // namespace

std::vector<std::string> gallery_names() {
  return {"virtual_links",
          "chord_diagrams",
          "z2_diag",
          "z2_nonhom",
          "z_fragment_unipotent",
          "trivial_group",
          "diag2_algebra",
          "matrix2_algebra",
          "matrix2_algebra_perturbed",
          "directed_graphs",
          "degenerate_unipotent",
          "hopf_template"};
}

ExamplePack gallery_pack(std::string_view name) {
  if (name == "virtual_links") return virtual_links();
  if (name == "chord_diagrams") return chord_diagrams();
  if (name == "z2_diag") return z2_diag_pack();
  if (name == "z2_nonhom") return z2_nonhom_pack();
  if (name == "z_fragment_unipotent") return z_fragment_pack();
  if (name == "trivial_group") return trivial_group_pack();
  if (name == "diag2_algebra") return diag2_algebra_pack();
  if (name == "matrix2_algebra") return matrix2_algebra_pack();
  if (name == "matrix2_algebra_perturbed") return matrix2_perturbed_pack();
  if (name == "directed_graphs") return directed_graphs_pack();
  if (name == "degenerate_unipotent") return degenerate_example();
  if (name == "hopf_template") return hopf_template();
  throw Error(ErrorCode::invalid_argument, "unknown gallery pack '" + std::string(name) + "'");
}

std::vector<RelationCheck> check_pack(const ExamplePack& pack, const TraceOptions& opts) {
  std::vector<RelationCheck> out;
  out.reserve(pack.relations.size());
  for (const Relation& rel : pack.relations) {
    RelationCheck rc;
    rc.name = rel.name;
    if (!pack.rep) {
      rc.expect = Expectation::unchecked;
      rc.zero = false;
      rc.match = true;
    } else {
      rc.expect = rel.expect;
      rc.zero = quantum_trace(*pack.rep, rel.web, opts).is_zero();
      rc.match = rel.expect == Expectation::unchecked ||
                 (rel.expect == Expectation::zero) == rc.zero;
    }
    out.push_back(std::move(rc));
  }
  return out;
}

}  // namespace webtrace
