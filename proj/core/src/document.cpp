#include "orbsum/document.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace orbsum {

const Atom* Document::find_atom(const std::string& name) const {
  for (const Atom& a : atoms) {
    if (a.name() == name) return &a;
  }
  return nullptr;
}

const RealizationTree* Document::find_realization(
    const std::string& name) const {
  for (const NamedRealization& r : realizations) {
    if (r.name == name) return &r.tree;
  }
  return nullptr;
}

std::string ParseError::to_string() const {
  std::ostringstream os;
  os << "parse error at line " << line << ", col " << col << ": " << message;
  return os.str();
}

namespace {

struct Token {
  enum class Type { Ident, Int, Symbol, Arrow, End };

  Type type = Type::End;
  std::string text;
  long long value = 0;
  int line = 1;
  int col = 1;
};

struct ParseFail {
  int line;
  int col;
  std::string message;
};

[[noreturn]] void fail(const Token& at, const std::string& message) {
  throw ParseFail{at.line, at.col, message};
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space_and_comments();
      Token t;
      t.line = line_;
      t.col = col_;
      if (pos_ >= text_.size()) {
        t.type = Token::Type::End;
        out.push_back(t);
        return out;
      }
      char c = text_[pos_];
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::string word;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                text_[pos_] == '_')) {
          word += text_[pos_];
          advance();
        }
        t.type = Token::Type::Ident;
        t.text = std::move(word);
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        long long value = 0;
        std::string digits;
        while (pos_ < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          digits += text_[pos_];
          advance();
        }
        if (digits.size() > 9) {
          throw ParseFail{t.line, t.col, "integer literal too large"};
        }
        value = std::stoll(digits);
        t.type = Token::Type::Int;
        t.value = value;
        t.text = std::move(digits);
      } else if (c == '-' && pos_ + 1 < text_.size() &&
                 text_[pos_ + 1] == '>') {
        advance();
        advance();
        t.type = Token::Type::Arrow;
        t.text = "->";
      } else if (std::string("{}(),;=.:").find(c) != std::string::npos) {
        advance();
        t.type = Token::Type::Symbol;
        t.text = std::string(1, c);
      } else {
        throw ParseFail{line_, col_,
                        std::string("unexpected character '") + c + "'"};
      }
      out.push_back(std::move(t));
    }
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_space_and_comments() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else {
        return;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Document run() {
    while (!at_end()) {
      if (accept_keyword("atom")) {
        parse_atom();
      } else if (accept_keyword("realization")) {
        parse_realization();
      } else {
        fail(peek(), "expected 'atom' or 'realization'");
      }
    }
    return std::move(doc_);
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  bool at_end() const { return peek().type == Token::Type::End; }

  const Token& next() { return tokens_[pos_++]; }

  bool accept_symbol(const std::string& s) {
    if (peek().type == Token::Type::Symbol && peek().text == s) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect_symbol(const std::string& s) {
    if (!accept_symbol(s)) fail(peek(), "expected '" + s + "'");
  }

  bool accept_keyword(const std::string& word) {
    if (peek().type == Token::Type::Ident && peek().text == word) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string expect_ident(const std::string& what) {
    if (peek().type != Token::Type::Ident) fail(peek(), "expected " + what);
    return next().text;
  }

  long long expect_int(const std::string& what) {
    if (peek().type != Token::Type::Int) fail(peek(), "expected " + what);
    return next().value;
  }

  ConeOrder expect_order() {
    const Token& at = peek();
    long long v = expect_int("a cone order");
    if (v < 2) fail(at, "order " + std::to_string(v) + " is below 2");
    return ConeOrder(static_cast<int>(v));
  }

  Triple expect_triple() {
    const Token& at = peek();
    expect_symbol("(");
    ConeOrder p = expect_order();
    expect_symbol(",");
    ConeOrder q = expect_order();
    expect_symbol(",");
    ConeOrder r = expect_order();
    expect_symbol(")");
    if (!is_admissible_vertex_triple(p, q, r)) {
      fail(at, "inadmissible vertex triple (" + std::to_string(p.value()) +
                   "," + std::to_string(q.value()) + "," +
                   std::to_string(r.value()) + ")");
    }
    return make_vertex_triple(p, q, r);
  }

  void parse_atom() {
    const Token& name_tok = peek();
    std::string name = expect_ident("an atom name");
    if (is_reserved_atom_name(name)) {
      fail(name_tok, "'" + name + "' is reserved for identity atoms");
    }
    if (doc_.find_atom(name)) {
      fail(name_tok, "atom '" + name + "' already declared");
    }
    expect_symbol("{");
    std::vector<SingularComponent> components;
    while (!accept_symbol("}")) {
      if (accept_keyword("circle")) {
        components.push_back(SingularComponent::circle(expect_order()));
      } else if (accept_keyword("graph")) {
        components.push_back(parse_graph_component());
      } else {
        fail(peek(), "expected 'circle', 'graph', or '}'");
      }
    }
    doc_.atoms.push_back(Atom::irreducible(name, std::move(components)));
  }

  SingularComponent parse_graph_component() {
    const Token& at = peek();
    expect_symbol("{");
    if (!accept_keyword("edges")) fail(peek(), "expected 'edges'");
    std::vector<ConeOrder> edge_orders;
    while (peek().type == Token::Type::Int) {
      edge_orders.push_back(expect_order());
    }
    if (edge_orders.empty()) fail(peek(), "expected at least one edge order");
    expect_symbol(";");
    if (!accept_keyword("vertices")) fail(peek(), "expected 'vertices'");
    std::vector<Triple> triples;
    while (peek().type == Token::Type::Symbol && peek().text == "(") {
      triples.push_back(expect_triple());
    }
    if (triples.empty()) fail(peek(), "expected at least one vertex triple");
    expect_symbol("}");
    try {
      return SingularComponent::graph(std::move(edge_orders),
                                      std::move(triples));
    } catch (const std::invalid_argument& e) {
      fail(at, e.what());
    }
  }

  Atom resolve_atomref() {
    const Token& at = peek();
    std::string name = expect_ident("an atom reference");
    if (name == "S3o") return builtin_identity(SphericalType::ordinary());
    if (name == "S3c") {
      expect_symbol("(");
      ConeOrder p = expect_order();
      expect_symbol(")");
      return builtin_identity(SphericalType::cyclic(p));
    }
    if (name == "S3v") {
      return builtin_identity(SphericalType::vertex(expect_triple()));
    }
    const Atom* atom = doc_.find_atom(name);
    if (!atom) fail(at, "unknown atom '" + name + "'");
    return *atom;
  }

  SphericalType parse_sumtype() {
    const Token& at = peek();
    std::string word = expect_ident("a sum type");
    if (word == "ordinary") return SphericalType::ordinary();
    if (word == "cyclic") {
      expect_symbol("(");
      ConeOrder p = expect_order();
      expect_symbol(")");
      return SphericalType::cyclic(p);
    }
    if (word == "vertex") return SphericalType::vertex(expect_triple());
    fail(at, "unknown sum type '" + word + "'");
  }

  struct CompRef {
    char kind;  // 'c' or 'g'
    int component;
    std::optional<int> vertex;
  };

  CompRef parse_compref() {
    const Token& at = peek();
    std::string word = expect_ident("a component reference like c0 or g1");
    auto parse_indexed = [&](const std::string& w,
                             char prefix) -> std::optional<int> {
      if (w.size() < 2 || w[0] != prefix) return std::nullopt;
      for (std::size_t i = 1; i < w.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(w[i]))) {
          return std::nullopt;
        }
      }
      return std::stoi(w.substr(1));
    };
    CompRef ref{'c', 0, std::nullopt};
    if (auto c = parse_indexed(word, 'c')) {
      ref.kind = 'c';
      ref.component = *c;
    } else if (auto g = parse_indexed(word, 'g')) {
      ref.kind = 'g';
      ref.component = *g;
      if (peek().type == Token::Type::Symbol && peek().text == "." &&
          tokens_[pos_ + 1].type == Token::Type::Ident &&
          parse_indexed(tokens_[pos_ + 1].text, 'v')) {
        expect_symbol(".");
        ref.vertex = *parse_indexed(next().text, 'v');
      }
    } else {
      fail(at, "component reference must look like c0, g1, or g1.v0");
    }
    return ref;
  }

  void parse_realization() {
    const Token& name_tok = peek();
    std::string name = expect_ident("a realization name");
    if (doc_.find_realization(name)) {
      fail(name_tok, "realization '" + name + "' already declared");
    }
    expect_symbol("{");
    RealizationTree tree;
    std::map<std::string, NodeId> by_name;
    // Vertex slots already taken, per node, for attachment inference.
    std::map<NodeId, std::set<std::pair<int, int>>> used_slots;

    while (!accept_symbol("}")) {
      if (accept_keyword("node")) {
        const Token& id_tok = peek();
        std::string id = expect_ident("a node id");
        if (by_name.count(id)) {
          fail(id_tok, "node '" + id + "' already declared");
        }
        expect_symbol("=");
        Atom atom = resolve_atomref();
        by_name[id] = tree.add_node(std::move(atom), id);
        accept_symbol(";");
      } else if (accept_keyword("sum")) {
        parse_sum(tree, by_name, used_slots);
        accept_symbol(";");
      } else {
        fail(peek(), "expected 'node', 'sum', or '}'");
      }
    }
    doc_.realizations.push_back({std::move(name), std::move(tree)});
  }

  NodeId lookup_node(const std::map<std::string, NodeId>& by_name,
                     const Token& at, const std::string& id) {
    auto it = by_name.find(id);
    if (it == by_name.end()) fail(at, "unknown node '" + id + "'");
    return it->second;
  }

  void parse_sum(RealizationTree& tree,
                 const std::map<std::string, NodeId>& by_name,
                 std::map<NodeId, std::set<std::pair<int, int>>>& used_slots) {
    const Token& a_tok = peek();
    std::string a_name = expect_ident("a node id");
    NodeId a = lookup_node(by_name, a_tok, a_name);
    if (peek().type != Token::Type::Arrow) fail(peek(), "expected '->'");
    next();
    const Token& b_tok = peek();
    std::string b_name = expect_ident("a node id");
    NodeId b = lookup_node(by_name, b_tok, b_name);
    expect_symbol(":");
    const Token& type_tok = peek();
    SphericalType type = parse_sumtype();

    SumEdge edge;
    edge.type = type;
    edge.a = a;
    edge.b = b;

    if (accept_keyword("at")) {
      parse_attachment_clause(tree, by_name, edge, type_tok);
    }
    if (!type.is_ordinary()) {
      for (NodeId end : {a, b}) {
        if (!edge.at(end)) {
          edge.at(end) = infer_attachment(tree, end, type, used_slots[end],
                                          type_tok);
        }
      }
      for (NodeId end : {a, b}) {
        if (edge.at(end)->vertex) {
          used_slots[end].insert(
              {edge.at(end)->component, *edge.at(end)->vertex});
        }
      }
    } else if (edge.at_a || edge.at_b) {
      fail(type_tok, "ordinary sums carry no attachments");
    }
    tree.add_edge(std::move(edge));
  }

  void parse_attachment_clause(const RealizationTree& tree,
                               const std::map<std::string, NodeId>& by_name,
                               SumEdge& edge, const Token& type_tok) {
    for (int n = 0; n < 2; ++n) {
      const Token& id_tok = peek();
      std::string id = expect_ident("a node id");
      NodeId node = lookup_node(by_name, id_tok, id);
      if (!edge.touches(node)) {
        fail(id_tok, "attachment names node '" + id +
                         "', which the sum does not touch");
      }
      expect_symbol(".");
      CompRef ref = parse_compref();
      const auto& comps = tree.atom_of(node).components();
      if (ref.component < 0 ||
          static_cast<std::size_t>(ref.component) >= comps.size()) {
        fail(id_tok, "component index out of range for node '" + id + "'");
      }
      const SingularComponent& comp = comps[ref.component];
      if (ref.kind == 'c' && !comp.is_circle()) {
        fail(id_tok, "component " + std::to_string(ref.component) +
                         " of node '" + id + "' is not a circle");
      }
      if (ref.kind == 'g' && comp.is_circle()) {
        fail(id_tok, "component " + std::to_string(ref.component) +
                         " of node '" + id + "' is not a graph");
      }
      if (edge.at(node)) {
        fail(id_tok, "duplicate attachment for node '" + id + "'");
      }
      edge.at(node) = Attachment{node, ref.component, ref.vertex};
      if (!accept_symbol(",")) break;
    }
    (void)type_tok;
  }

  Attachment infer_attachment(const RealizationTree& tree, NodeId node,
                              const SphericalType& type,
                              const std::set<std::pair<int, int>>& used,
                              const Token& at) {
    const auto& comps = tree.atom_of(node).components();
    std::vector<Attachment> candidates;
    for (std::size_t c = 0; c < comps.size(); ++c) {
      if (type.is_cyclic()) {
        if (comps[c].has_order(type.order())) {
          candidates.push_back(
              Attachment{node, static_cast<int>(c), std::nullopt});
        }
      } else if (comps[c].has_vertices()) {
        const auto& triples = comps[c].vertex_triples();
        for (std::size_t v = 0; v < triples.size(); ++v) {
          if (triples[v] == type.triple() &&
              !used.count({static_cast<int>(c), static_cast<int>(v)})) {
            candidates.push_back(Attachment{node, static_cast<int>(c),
                                            static_cast<int>(v)});
          }
        }
      }
    }
    const std::string label = tree.node(node).label;
    if (candidates.empty()) {
      fail(at, "node '" + label + "' has no singular component matching " +
                   type.to_string());
    }
    // Identical vertex slots are interchangeable; anything else is a real
    // ambiguity the file must resolve.
    bool all_same = true;
    for (const Attachment& cand : candidates) {
      if (cand.component != candidates.front().component) all_same = false;
    }
    if (candidates.size() > 1 && (!type.is_vertex() || !all_same)) {
      fail(at, "attachment for node '" + label +
                   "' is ambiguous; specify it with 'at'");
    }
    return candidates.front();
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  Document doc_;
};

}  // namespace

std::variant<Document, ParseError> parse(std::string_view text) {
  try {
    Lexer lexer(text);
    Parser parser(lexer.run());
    return parser.run();
  } catch (const ParseFail& f) {
    return ParseError{f.line, f.col, f.message};
  }
}

namespace {

void serialize_component(std::ostringstream& os, const SingularComponent& c) {
  if (c.is_circle()) {
    os << "  circle " << c.circle_order().value() << "\n";
    return;
  }
  os << "  graph { edges";
  for (const ConeOrder& o : c.edge_orders()) os << " " << o.value();
  os << " ; vertices";
  for (const Triple& t : c.vertex_triples()) {
    os << " (" << t[0].value() << "," << t[1].value() << "," << t[2].value()
       << ")";
  }
  os << " }\n";
}

void serialize_attachment(std::ostringstream& os, const RealizationTree& tree,
                          const Attachment& att) {
  const SingularComponent& comp =
      tree.atom_of(att.node).components()[att.component];
  os << tree.node(att.node).label << "."
     << (comp.is_circle() ? 'c' : 'g') << att.component;
  if (att.vertex) os << ".v" << *att.vertex;
}

}  // namespace

std::string serialize(const Document& doc) {
  std::ostringstream os;
  for (const Atom& a : doc.atoms) {
    os << "atom " << a.name() << " {\n";
    for (const SingularComponent& c : a.components()) {
      serialize_component(os, c);
    }
    os << "}\n\n";
  }
  for (const NamedRealization& r : doc.realizations) {
    os << "realization " << r.name << " {\n";
    for (const TreeNode& n : r.tree.nodes()) {
      os << "  node " << n.label << " = " << n.atom.name() << ";\n";
    }
    for (const SumEdge& e : r.tree.edges()) {
      os << "  sum " << r.tree.node(e.a).label << " -> "
         << r.tree.node(e.b).label << " : " << e.type.to_string();
      if (e.at_a) {
        os << " at ";
        serialize_attachment(os, r.tree, *e.at_a);
        if (e.at_b) {
          os << ", ";
          serialize_attachment(os, r.tree, *e.at_b);
        }
      }
      os << ";\n";
    }
    os << "}\n\n";
  }
  return os.str();
}

}  // namespace orbsum
