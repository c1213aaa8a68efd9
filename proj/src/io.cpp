#include "webtrace/io.hpp"

#include <cctype>
#include <charconv>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "webtrace/errors.hpp"

namespace webtrace {
namespace {

// ---------------------------------------------------------------------------
// line and token scanning

struct Line {
  int number = 0;
  std::string_view text;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  int number = 1;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view body = text.substr(start, end - start);
    if (!body.empty() && body.back() == '\r') body.remove_suffix(1);
    lines.push_back({number, body});
    ++number;
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

bool is_blank_or_comment(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
  return i == s.size() || s[i] == '#';
}

// Walks the meaningful lines of a document (or of a block inside one),
// keeping original line numbers for error reports.
class LineCursor {
 public:
  explicit LineCursor(std::span<const Line> lines) : lines_(lines) { skip(); }

  bool done() const { return idx_ >= lines_.size(); }
  const Line& peek() const { return lines_[idx_]; }
  const Line& take() {
    const Line& l = lines_[idx_++];
    skip();
    return l;
  }
  // Line number to blame when a document ends too early.
  int end_line() const { return lines_.empty() ? 1 : lines_.back().number + 1; }

 private:
  void skip() {
    while (idx_ < lines_.size() && is_blank_or_comment(lines_[idx_].text)) ++idx_;
  }

  std::span<const Line> lines_;
  std::size_t idx_ = 0;
};

bool token_char(char c) {
  return c != ' ' && c != '\t' && c != '(' && c != ')' && c != ',' && c != ':';
}

// Tokenizer for one line: words (runs of token_char) plus the punctuation
// "(),:" as single characters. Columns are 1-based.
class Scan {
 public:
  explicit Scan(const Line& line) : line_(line) {}

  int line_number() const { return line_.number; }
  int column() const { return static_cast<int>(pos_) + 1; }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(line_.number, column(), message);
  }

  void skip_ws() {
    while (pos_ < line_.text.size() && (line_.text[pos_] == ' ' || line_.text[pos_] == '\t')) {
      ++pos_;
    }
  }

  bool at_end() {
    skip_ws();
    return pos_ >= line_.text.size();
  }

  char peek() {
    skip_ws();
    return pos_ < line_.text.size() ? line_.text[pos_] : '\0';
  }

  void expect_punct(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string_view word(const char* what) {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < line_.text.size() && token_char(line_.text[pos_])) ++pos_;
    if (pos_ == start) fail(std::string("expected ") + what);
    return line_.text.substr(start, pos_ - start);
  }

  void expect_word(std::string_view w) {
    const int col = (skip_ws(), column());
    const std::string_view got = word(("'" + std::string(w) + "'").c_str());
    if (got != w) {
      throw ParseError(line_.number, col,
                       "expected '" + std::string(w) + "', got '" + std::string(got) + "'");
    }
  }

  int integer(const char* what, int min_value) {
    const int col = (skip_ws(), column());
    const std::string_view tok = word(what);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(tok.begin(), tok.end(), value);
    if (ec != std::errc() || ptr != tok.end() || value < min_value) {
      throw ParseError(line_.number, col, std::string("expected ") + what);
    }
    return value;
  }

  long long_integer(const char* what, long min_value) {
    const int col = (skip_ws(), column());
    const std::string_view tok = word(what);
    long value = 0;
    const auto [ptr, ec] = std::from_chars(tok.begin(), tok.end(), value);
    if (ec != std::errc() || ptr != tok.end() || value < min_value) {
      throw ParseError(line_.number, col, std::string("expected ") + what);
    }
    return value;
  }

  // key=value word with an integer value.
  int keyed_integer(std::string_view key, int min_value) {
    const int col = (skip_ws(), column());
    const std::string_view tok = word(("'" + std::string(key) + "=<integer>'").c_str());
    const std::size_t eq = tok.find('=');
    if (eq == std::string_view::npos || tok.substr(0, eq) != key) {
      throw ParseError(line_.number, col, "expected '" + std::string(key) + "=<integer>'");
    }
    const std::string_view val = tok.substr(eq + 1);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(val.begin(), val.end(), value);
    if (ec != std::errc() || ptr != val.end() || value < min_value) {
      throw ParseError(line_.number, col,
                       "expected '" + std::string(key) + "=<integer>' with value >= " +
                           std::to_string(min_value));
    }
    return value;
  }

  std::string_view keyed_word(std::string_view key) {
    const int col = (skip_ws(), column());
    const std::string_view tok = word(("'" + std::string(key) + "=<value>'").c_str());
    const std::size_t eq = tok.find('=');
    if (eq == std::string_view::npos || tok.substr(0, eq) != key) {
      throw ParseError(line_.number, col, "expected '" + std::string(key) + "=<value>'");
    }
    return tok.substr(eq + 1);
  }

  Rat rational(const char* what) {
    const int col = (skip_ws(), column());
    const std::string_view tok = word(what);
    try {
      return parse_rational(tok);
    } catch (const Error& e) {
      throw ParseError(line_.number, col, std::string(what) + ": " + e.what());
    }
  }

  std::string_view rest() {
    skip_ws();
    std::string_view r = line_.text.substr(pos_);
    pos_ = line_.text.size();
    while (!r.empty() && (r.back() == ' ' || r.back() == '\t')) r.remove_suffix(1);
    return r;
  }

  void expect_end() {
    if (!at_end()) fail("unexpected trailing text");
  }

 private:
  const Line& line_;
  std::size_t pos_ = 0;
};

std::string_view first_word(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  const std::size_t start = i;
  while (i < text.size() && token_char(text[i])) ++i;
  return text.substr(start, i - start);
}

// Collects the block between the current position and the line "end <kind>",
// which is consumed but not returned.
std::span<const Line> take_block(LineCursor& cur, std::span<const Line> all,
                                 const Line& opener, std::string_view kind) {
  std::size_t begin_idx = all.size();
  std::size_t end_idx = all.size();
  bool closed = false;
  // Locate the opener in the full span, then scan raw lines for the closer.
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (all[i].number == opener.number) {
      begin_idx = i + 1;
      break;
    }
  }
  for (std::size_t i = begin_idx; i < all.size(); ++i) {
    if (is_blank_or_comment(all[i].text)) continue;
    Scan s(all[i]);
    if (first_word(all[i].text) == "end") {
      s.expect_word("end");
      if (s.word("a block kind") == kind && s.at_end()) {
        end_idx = i;
        closed = true;
        break;
      }
    }
  }
  if (!closed) {
    throw ParseError(opener.number, 1, "block '" + std::string(kind) + "' is never closed");
  }
  // Advance the cursor past the closer.
  while (!cur.done() && cur.peek().number <= all[end_idx].number) cur.take();
  return all.subspan(begin_idx, end_idx - begin_idx);
}

// ---------------------------------------------------------------------------
// signatures

SignaturePtr parse_signature_lines(std::span<const Line> lines) {
  LineCursor cur(lines);
  std::vector<TypeSignature::Type> types;
  std::vector<int> decl_lines;
  while (!cur.done()) {
    const Line& line = cur.take();
    Scan s(line);
    s.expect_word("type");
    const std::string name(s.word("a type name"));
    const int in = s.keyed_integer("in", 0);
    const int out = s.keyed_integer("out", 0);
    s.expect_end();
    for (const auto& t : types) {
      if (t.name == name) {
        throw ParseError(line.number, 1, "duplicate type name '" + name + "'");
      }
    }
    types.push_back({name, in, out});
    decl_lines.push_back(line.number);
  }
  if (types.empty()) {
    throw ParseError(LineCursor(lines).end_line(), 1, "signature with no types");
  }
  try {
    return TypeSignature::make(std::move(types));
  } catch (const Error& e) {
    throw ParseError(decl_lines.front(), 1, e.what());
  }
}

// ---------------------------------------------------------------------------
// webs

struct WebHeader {
  int k = 0;
  int l = 0;
  long loops = 0;
  int line = 0;
};

WebHeader parse_web_header(const Line& line) {
  Scan s(line);
  s.expect_word("web");
  WebHeader h;
  h.k = s.keyed_integer("k", 0);
  h.l = s.keyed_integer("l", 0);
  h.loops = s.keyed_integer("loops", 0);
  s.expect_end();
  h.line = line.number;
  return h;
}

EdgeEnd parse_endpoint(Scan& s, bool tail, const std::map<std::string, int, std::less<>>& ids,
                       const WebHeader& h) {
  if (s.peek() == '(') {
    s.expect_punct('(');
    const int col = s.column();
    const std::string_view id = s.word("a vertex id");
    const auto it = ids.find(id);
    if (it == ids.end()) {
      throw ParseError(s.line_number(), col, "unknown vertex '" + std::string(id) + "'");
    }
    s.expect_punct(',');
    const int kw_col = s.column();
    const std::string_view kw = s.word("'in' or 'out'");
    if (tail && kw != "out") {
      throw ParseError(s.line_number(), kw_col, "edge tails sit on out-slots, not '" +
                                                    std::string(kw) + "'");
    }
    if (!tail && kw != "in") {
      throw ParseError(s.line_number(), kw_col, "edge heads sit on in-slots, not '" +
                                                    std::string(kw) + "'");
    }
    const int slot = s.integer("a positive slot number", 1);
    s.expect_punct(')');
    return EdgeEnd::port(it->second, slot);
  }
  const int col = s.column();
  const std::string_view kw = s.word(tail ? "'root' or '('" : "'sink' or '('");
  if (tail) {
    if (kw != "root") {
      throw ParseError(s.line_number(), col,
                       "expected a tail endpoint: root <i> or (<vertex>, out <slot>)");
    }
    const int label = s.integer("a positive root label", 1);
    if (label > h.k) {
      throw ParseError(s.line_number(), col, "root " + std::to_string(label) +
                                                 " out of range; the web has k=" +
                                                 std::to_string(h.k));
    }
    return EdgeEnd::boundary(label);
  }
  if (kw != "sink") {
    throw ParseError(s.line_number(), col,
                     "expected a head endpoint: sink <j> or (<vertex>, in <slot>)");
  }
  const int label = s.integer("a positive sink label", 1);
  if (label > h.l) {
    throw ParseError(s.line_number(), col, "sink " + std::to_string(label) +
                                               " out of range; the web has l=" +
                                               std::to_string(h.l));
  }
  return EdgeEnd::boundary(label);
}

Web parse_web_lines(std::span<const Line> lines, const SignaturePtr& sig, bool strict) {
  LineCursor cur(lines);
  if (cur.done()) {
    throw ParseError(cur.end_line(), 1, "expected a 'web k=.. l=.. loops=..' header");
  }
  const WebHeader h = parse_web_header(cur.take());

  std::vector<WebVertex> vertices;
  std::vector<Edge> edges;
  std::map<std::string, int, std::less<>> ids;
  bool seen_edge = false;
  while (!cur.done()) {
    const Line& line = cur.peek();
    const std::string_view kind = first_word(line.text);
    if (kind == "vertex") {
      if (seen_edge) {
        throw ParseError(line.number, 1, "vertex lines must precede edge lines");
      }
      cur.take();
      Scan s(line);
      s.expect_word("vertex");
      const int id_col = s.column();
      const std::string id(s.word("a vertex id"));
      s.expect_punct(':');
      const int type_col = s.column();
      const std::string_view type = s.word("a type name");
      s.expect_end();
      if (ids.count(id)) {
        throw ParseError(line.number, id_col, "duplicate vertex id '" + id + "'");
      }
      const int ti = sig->index_of(type);
      if (ti < 0) {
        throw ParseError(line.number, type_col, "unknown type '" + std::string(type) + "'");
      }
      ids.emplace(id, static_cast<int>(vertices.size()));
      vertices.push_back({id, ti});
    } else if (kind == "edge") {
      seen_edge = true;
      cur.take();
      Scan s(line);
      s.expect_word("edge");
      const EdgeEnd tail = parse_endpoint(s, true, ids, h);
      s.expect_word("->");
      const EdgeEnd head = parse_endpoint(s, false, ids, h);
      s.expect_end();
      // Slot ranges are the web's own business; check here for a good line.
      if (tail.is_port()) {
        const auto& t = sig->type(vertices[static_cast<std::size_t>(tail.vertex)].type);
        if (tail.slot > t.out_arity) {
          throw ParseError(line.number, 1,
                           "out-slot " + std::to_string(tail.slot) + " of '" +
                               vertices[static_cast<std::size_t>(tail.vertex)].name +
                               "' exceeds arity " + std::to_string(t.out_arity));
        }
      }
      if (head.is_port()) {
        const auto& t = sig->type(vertices[static_cast<std::size_t>(head.vertex)].type);
        if (head.slot > t.in_arity) {
          throw ParseError(line.number, 1,
                           "in-slot " + std::to_string(head.slot) + " of '" +
                               vertices[static_cast<std::size_t>(head.vertex)].name +
                               "' exceeds arity " + std::to_string(t.in_arity));
        }
      }
      edges.push_back({tail, head});
    } else {
      throw ParseError(line.number, 1,
                       "expected 'vertex', 'edge', or end of the web block");
    }
  }

  Web w(sig, std::move(vertices), std::move(edges), h.k, h.l, h.loops);
  if (strict) {
    const std::vector<std::string> problems = validate(w);
    if (!problems.empty()) {
      throw ParseError(h.line, 1, "invalid web: " + problems.front() +
                                      (problems.size() > 1
                                           ? " (and " + std::to_string(problems.size() - 1) +
                                                 " more)"
                                           : ""));
    }
  }
  return w;
}

void append_endpoint(std::string& out, const EdgeEnd& e, bool tail,
                     const std::vector<std::string>& names) {
  if (e.is_port()) {
    out += '(';
    out += names[static_cast<std::size_t>(e.vertex)];
    out += tail ? ", out " : ", in ";
    out += std::to_string(e.slot);
    out += ')';
  } else {
    out += tail ? "root " : "sink ";
    out += std::to_string(e.label);
  }
}

std::string serialize_web_impl(const Web& w) {
  const bool valid = validate(w).empty();
  const std::size_t m = w.vertices().size();

  // position -> original vertex index
  std::vector<int> order(m);
  if (valid) {
    order = canonical_order(w);
  } else {
    for (std::size_t i = 0; i < m; ++i) order[i] = static_cast<int>(i);
  }
  // Names carry no meaning, so emit position-based ones; isomorphic webs
  // then serialize to identical bytes.
  std::vector<std::string> names(m);
  std::vector<int> position(m, 0);
  for (std::size_t pos = 0; pos < m; ++pos) {
    names[static_cast<std::size_t>(order[pos])] = "v" + std::to_string(pos + 1);
    position[static_cast<std::size_t>(order[pos])] = static_cast<int>(pos);
  }

  std::string out = "web k=" + std::to_string(w.roots()) + " l=" + std::to_string(w.sinks()) +
                    " loops=" + std::to_string(w.loops()) + "\n";
  for (std::size_t pos = 0; pos < m; ++pos) {
    const WebVertex& v = w.vertices()[static_cast<std::size_t>(order[pos])];
    out += "vertex " + names[static_cast<std::size_t>(order[pos])] + " : " +
           w.signature()->type(v.type).name + "\n";
  }

  const auto append_edge = [&](const Edge& e) {
    out += "edge ";
    append_endpoint(out, e.tail, true, names);
    out += " -> ";
    append_endpoint(out, e.head, false, names);
    out += '\n';
  };

  if (!valid) {
    for (const Edge& e : w.edges()) append_edge(e);
    return out;
  }

  // Canonical tail order: roots 1..k, then each vertex's out-slots in
  // canonical position order.
  std::map<std::pair<int, int>, const Edge*> by_port;  // (position, slot) -> edge
  std::vector<const Edge*> by_root(static_cast<std::size_t>(w.roots()), nullptr);
  for (const Edge& e : w.edges()) {
    if (e.tail.is_port()) {
      by_port[{position[static_cast<std::size_t>(e.tail.vertex)], e.tail.slot}] = &e;
    } else {
      by_root[static_cast<std::size_t>(e.tail.label - 1)] = &e;
    }
  }
  for (const Edge* e : by_root) append_edge(*e);
  for (const auto& [key, e] : by_port) append_edge(*e);
  return out;
}

// ---------------------------------------------------------------------------
// quantum webs

QuantumWeb parse_quantum_web_lines(std::span<const Line> lines, const SignaturePtr& sig,
                                   bool strict) {
  (void)strict;  // terms always need validity; see the header note
  QuantumWeb q(sig);
  std::size_t i = 0;
  while (i < lines.size() && is_blank_or_comment(lines[i].text)) ++i;
  while (i < lines.size()) {
    const Line& term_line = lines[i];
    if (first_word(term_line.text) != "term") {
      throw ParseError(term_line.number, 1, "expected 'term <rational>'");
    }
    Scan s(term_line);
    s.expect_word("term");
    const Rat coeff = s.rational("a rational coefficient");
    s.expect_end();
    ++i;
    // The term's web block runs to the next 'term' line or the end.
    const std::size_t begin = i;
    while (i < lines.size() &&
           (is_blank_or_comment(lines[i].text) || first_word(lines[i].text) != "term")) {
      ++i;
    }
    q.add(coeff, parse_web_lines(lines.subspan(begin, i - begin), sig, true));
  }
  return q;
}

// ---------------------------------------------------------------------------
// tensors

Tensor parse_tensor_block(LineCursor& cur, int* dim_out, std::string* name_out) {
  if (cur.done()) {
    throw ParseError(cur.end_line(), 1, "expected a 'tensor ...' header");
  }
  const Line& header = cur.take();
  Scan s(header);
  s.expect_word("tensor");
  if (name_out) *name_out = std::string(s.word("a type name"));
  const int dim = s.keyed_integer("dim", 0);
  const int in = s.keyed_integer("in", 0);
  const int out = s.keyed_integer("out", 0);
  s.expect_end();
  if (dim_out) *dim_out = dim;

  Tensor t(in, out, dim);  // may throw cap_exceeded for absurd shapes
  const std::size_t want = t.entry_count();
  std::size_t got = 0;
  while (got < want) {
    if (cur.done()) {
      throw ParseError(cur.end_line(), 1,
                       "expected " + std::to_string(want) + " entries, found " +
                           std::to_string(got));
    }
    const Line& line = cur.peek();
    const std::string_view fw = first_word(line.text);
    const unsigned char c0 = static_cast<unsigned char>(fw[0]);
    if (!(std::isdigit(c0) || fw[0] == '-' || c0 == 0xe2)) {  // 0xe2 starts U+2212
      throw ParseError(line.number, 1,
                       "expected " + std::to_string(want) + " entries, found " +
                           std::to_string(got));
    }
    cur.take();
    Scan es(line);
    while (!es.at_end()) {
      if (got == want) {
        es.fail("unexpected trailing entries");
      }
      t.entries()[got++] = es.rational("a rational entry");
    }
  }
  return t;
}

Tensor parse_tensor_lines(std::span<const Line> lines) {
  LineCursor cur(lines);
  Tensor t = parse_tensor_block(cur, nullptr, nullptr);
  if (!cur.done()) {
    throw ParseError(cur.peek().number, 1, "unexpected trailing entries");
  }
  return t;
}

void append_tensor_entries(std::string& out, const Tensor& t) {
  const std::size_t per_line = t.dim() > 0 ? static_cast<std::size_t>(t.dim()) : 1;
  std::size_t col = 0;
  for (std::size_t i = 0; i < t.entry_count(); ++i) {
    out += format_rational(t.entries()[i]);
    ++col;
    if (col == per_line || i + 1 == t.entry_count()) {
      out += '\n';
      col = 0;
    } else {
      out += ' ';
    }
  }
}

std::string serialize_tensor_header(const Tensor& t, const std::string* name) {
  std::string out = "tensor ";
  if (name) out += *name + " ";
  out += "dim=" + std::to_string(t.dim()) + " in=" + std::to_string(t.in_rank()) +
         " out=" + std::to_string(t.out_rank()) + "\n";
  return out;
}

// ---------------------------------------------------------------------------
// representations

Representation parse_representation_lines(std::span<const Line> lines) {
  LineCursor cur(lines);
  if (cur.done()) {
    throw ParseError(cur.end_line(), 1, "expected 'dim <n>'");
  }
  const Line& dim_line = cur.take();
  Scan s(dim_line);
  s.expect_word("dim");
  const int dim = s.integer("a non-negative dimension", 0);
  s.expect_end();

  std::vector<TypeSignature::Type> types;
  std::vector<Tensor> tensors;
  while (!cur.done()) {
    const Line& header = cur.peek();
    if (first_word(header.text) != "tensor") {
      throw ParseError(header.number, 1, "expected a 'tensor <name> ...' block");
    }
    int block_dim = 0;
    std::string name;
    Tensor t = parse_tensor_block(cur, &block_dim, &name);
    if (name.empty()) {
      throw ParseError(header.number, 1, "representation tensors need a type name");
    }
    if (block_dim != dim) {
      throw ParseError(header.number, 1,
                       "tensor dimension " + std::to_string(block_dim) +
                           " does not match dim " + std::to_string(dim));
    }
    for (const auto& ty : types) {
      if (ty.name == name) {
        throw ParseError(header.number, 1, "duplicate tensor for type '" + name + "'");
      }
    }
    types.push_back({name, t.in_rank(), t.out_rank()});
    tensors.push_back(std::move(t));
  }
  if (types.empty()) {
    throw ParseError(LineCursor(lines).end_line(), 1, "representation with no tensors");
  }
  try {
    return Representation(TypeSignature::make(std::move(types)), dim, std::move(tensors));
  } catch (const Error& e) {
    throw ParseError(dim_line.number, 1, e.what());
  }
}

// ---------------------------------------------------------------------------
// packs

Expectation parse_expectation(const Line& line, std::string_view word) {
  if (word == "zero") return Expectation::zero;
  if (word == "nonzero") return Expectation::nonzero;
  if (word == "unchecked") return Expectation::unchecked;
  throw ParseError(line.number, 1,
                   "expect= must be zero, nonzero, or unchecked; got '" + std::string(word) +
                       "'");
}

std::string_view expectation_word(Expectation e) {
  switch (e) {
    case Expectation::zero:
      return "zero";
    case Expectation::nonzero:
      return "nonzero";
    default:
      return "unchecked";
  }
}

ExamplePack parse_pack_lines(std::span<const Line> lines) {
  LineCursor cur(lines);
  if (cur.done()) {
    throw ParseError(cur.end_line(), 1, "expected 'pack <name>'");
  }
  const Line& pack_line = cur.take();
  Scan ps(pack_line);
  ps.expect_word("pack");
  ExamplePack pack;
  pack.name = std::string(ps.word("a pack name"));
  ps.expect_end();

  bool closed = false;
  while (!cur.done()) {
    const Line& line = cur.peek();
    const std::string_view kind = first_word(line.text);
    if (kind == "end") {
      cur.take();
      Scan s(line);
      s.expect_word("end");
      s.expect_word("pack");
      s.expect_end();
      closed = true;
      break;
    }
    if (kind == "note") {
      cur.take();
      Scan s(line);
      s.expect_word("note");
      pack.notes.emplace_back(s.rest());
      continue;
    }
    if (kind == "signature") {
      cur.take();
      if (pack.sig) {
        throw ParseError(line.number, 1, "second signature block");
      }
      Scan s(line);
      s.expect_word("signature");
      s.expect_end();
      pack.sig = parse_signature_lines(take_block(cur, lines, line, "signature"));
      continue;
    }
    if (kind == "representation") {
      cur.take();
      if (!pack.sig) {
        throw ParseError(line.number, 1, "representation block before the signature");
      }
      if (pack.rep) {
        throw ParseError(line.number, 1, "second representation block");
      }
      Scan s(line);
      s.expect_word("representation");
      s.expect_end();
      Representation rep =
          parse_representation_lines(take_block(cur, lines, line, "representation"));
      if (!same_signature(pack.sig, rep.signature())) {
        throw ParseError(line.number, 1,
                         "representation signature does not match the pack signature");
      }
      // Re-anchor on the pack's signature object.
      std::vector<Tensor> tensors;
      tensors.reserve(static_cast<std::size_t>(pack.sig->count()));
      for (int i = 0; i < pack.sig->count(); ++i) tensors.push_back(rep.tensor(i));
      pack.rep = Representation(pack.sig, rep.dim(), std::move(tensors));
      continue;
    }
    if (kind == "relation") {
      cur.take();
      if (!pack.sig) {
        throw ParseError(line.number, 1, "relation block before the signature");
      }
      Scan s(line);
      s.expect_word("relation");
      std::string name(s.word("a relation name"));
      const Expectation expect = parse_expectation(line, s.keyed_word("expect"));
      s.expect_end();
      QuantumWeb q =
          parse_quantum_web_lines(take_block(cur, lines, line, "relation"), pack.sig, true);
      pack.relations.push_back({std::move(name), std::move(q), expect});
      continue;
    }
    throw ParseError(line.number, 1,
                     "expected note, signature, representation, relation, or 'end pack'");
  }
  if (!closed) {
    throw ParseError(pack_line.number, 1, "block 'pack' is never closed");
  }
  if (!cur.done()) {
    throw ParseError(cur.peek().number, 1, "unexpected text after 'end pack'");
  }
  if (!pack.sig) {
    throw ParseError(pack_line.number, 1, "pack has no signature block");
  }
  return pack;
}

}  // namespace

// ---------------------------------------------------------------------------
// public entry points

SignaturePtr parse_signature(std::string_view text) {
  const std::vector<Line> lines = split_lines(text);
  return parse_signature_lines(lines);
}

std::string serialize_signature(const TypeSignature& sig) {
  std::string out;
  for (const auto& t : sig.types()) {
    out += "type " + t.name + " in=" + std::to_string(t.in_arity) +
           " out=" + std::to_string(t.out_arity) + "\n";
  }
  return out;
}

Web parse_web(std::string_view text, const SignaturePtr& sig, bool strict) {
  const std::vector<Line> lines = split_lines(text);
  return parse_web_lines(lines, sig, strict);
}

std::string serialize_web(const Web& w) { return serialize_web_impl(w); }

QuantumWeb parse_quantum_web(std::string_view text, const SignaturePtr& sig, bool strict) {
  const std::vector<Line> lines = split_lines(text);
  return parse_quantum_web_lines(lines, sig, strict);
}

std::string serialize_quantum_web(const QuantumWeb& q) {
  std::string out;
  for (const QTerm& term : q.terms()) {
    out += "term " + format_rational(term.coeff) + "\n";
    out += serialize_web(term.web);
  }
  return out;
}

Tensor parse_tensor(std::string_view text) {
  const std::vector<Line> lines = split_lines(text);
  return parse_tensor_lines(lines);
}

std::string serialize_tensor(const Tensor& t) {
  std::string out = serialize_tensor_header(t, nullptr);
  append_tensor_entries(out, t);
  return out;
}

Representation parse_representation(std::string_view text) {
  const std::vector<Line> lines = split_lines(text);
  return parse_representation_lines(lines);
}

std::string serialize_representation(const Representation& r) {
  std::string out = "dim " + std::to_string(r.dim()) + "\n";
  for (int i = 0; i < r.signature()->count(); ++i) {
    out += serialize_tensor_header(r.tensor(i), &r.signature()->type(i).name);
    append_tensor_entries(out, r.tensor(i));
  }
  return out;
}

ExamplePack parse_pack(std::string_view text) {
  const std::vector<Line> lines = split_lines(text);
  return parse_pack_lines(lines);
}

std::string serialize_pack(const ExamplePack& pack) {
  std::string out = "pack " + pack.name + "\n";
  for (const std::string& note : pack.notes) out += "note " + note + "\n";
  out += "signature\n" + serialize_signature(*pack.sig) + "end signature\n";
  if (pack.rep) {
    out += "representation\n" + serialize_representation(*pack.rep) + "end representation\n";
  }
  for (const Relation& rel : pack.relations) {
    out += "relation " + rel.name + " expect=" + std::string(expectation_word(rel.expect)) +
           "\n";
    out += serialize_quantum_web(rel.web);
    out += "end relation\n";
  }
  out += "end pack\n";
  return out;
}

}  // namespace webtrace
