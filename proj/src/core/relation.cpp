#include "relation.hpp"

#include <cctype>

#include "error.hpp"

namespace gia {

struct Relation::Node {
  enum class Kind { Constant, Invariant, Add, Sub, Mul, Div, Neg, Pow } kind = Kind::Constant;
  Rational value;
  std::size_t slot = 0;
  long exponent = 0;
  std::shared_ptr<const Node> left;
  std::shared_ptr<const Node> right;
};

namespace {

using NodePtr = std::shared_ptr<const Relation::Node>;
using Kind = Relation::Node::Kind;

NodePtr make(Kind kind, NodePtr left = {}, NodePtr right = {}) {
  auto n = std::make_shared<Relation::Node>();
  n->kind = kind;
  n->left = std::move(left);
  n->right = std::move(right);
  return n;
}

class Parser {
 public:
  Parser(std::string_view text, const InvariantBindings& bindings, const GPoset& p, std::vector<IsoClass>& slots)
      : text_(text), bindings_(bindings), poset_(p), slots_(slots) {}

  NodePtr relation() {
    NodePtr lhs = expr();
    skip();
    if (peek() == '=') {
      ++pos_;
      NodePtr rhs = expr();
      lhs = make(Kind::Sub, lhs, rhs);
    }
    skip();
    require(pos_ == text_.size(), ErrorCode::Parse, "unexpected '" + std::string(1, text_[pos_]) + "' at offset " +
                                                        std::to_string(pos_));
    return lhs;
  }

 private:
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  NodePtr expr() {
    NodePtr node;
    if (peek() == '-') {
      ++pos_;
      node = make(Kind::Neg, term());
    } else {
      if (peek() == '+') ++pos_;
      node = term();
    }
    for (;;) {
      const char c = peek();
      if (c != '+' && c != '-') return node;
      ++pos_;
      node = make(c == '+' ? Kind::Add : Kind::Sub, node, term());
    }
  }

  NodePtr term() {
    NodePtr node = power();
    for (;;) {
      const char c = peek();
      if (c == '*' || c == '/') {
        ++pos_;
        node = make(c == '*' ? Kind::Mul : Kind::Div, node, power());
      } else if (c == '(' || c == '[' || std::isalpha(static_cast<unsigned char>(c))) {
        node = make(Kind::Mul, node, power());
      } else {
        return node;
      }
    }
  }

  NodePtr power() {
    NodePtr base = atom();
    if (peek() != '^') return base;
    ++pos_;
    skip();
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    require(pos_ > start, ErrorCode::Parse, "exponent must be an integer literal");
    auto node = std::make_shared<Relation::Node>();
    node->kind = Kind::Pow;
    node->left = base;
    node->exponent = std::stol(std::string(text_.substr(start, pos_ - start)));
    if (negative) node->exponent = -node->exponent;
    return node;
  }

  NodePtr atom() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      NodePtr inner = expr();
      require(peek() == ')', ErrorCode::Parse, "missing ')'");
      ++pos_;
      return inner;
    }
    if (c == '[') {
      // graph6 bytes include '[' and ']', so a graph6 literal is cut by its own length
      std::size_t close = text_.find(']', pos_);
      const std::size_t first = pos_ + 1;
      if (first < text_.size() && text_[first] >= 63 && text_[first] < 126) {
        const int n = text_[first] - 63;
        const std::size_t len = 1 + static_cast<std::size_t>((n * (n - 1) / 2 + 5) / 6);
        close = first + len;
        require(close < text_.size() && text_[close] == ']', ErrorCode::Parse, "missing ']' after graph6 literal");
      }
      require(close != std::string_view::npos, ErrorCode::Parse, "missing ']'");
      const IsoClass g = canonicalize(parse_graph(text_.substr(pos_ + 1, close - pos_ - 1)));
      pos_ = close + 1;
      return invariant(g);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      auto node = std::make_shared<Relation::Node>();
      node->value = Rational(BigInt(std::string(text_.substr(start, pos_ - start))));
      return node;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      std::string digits;
      if (indexed_name_at(start)) {
        // g<k> and g_<k> stop after the digits, so "g_1g_3" reads as a product
        pos_ = start + 1;
        if (text_[pos_] == '_') ++pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) digits += text_[pos_++];
      } else {
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
          ++pos_;
      }
      const std::string name(text_.substr(start, pos_ - start));
      if (auto it = bindings_.find(name); it != bindings_.end()) return invariant(it->second);
      if (!digits.empty())
        if (auto it = bindings_.find("g" + digits); it != bindings_.end()) return invariant(it->second);
      require(!digits.empty(), ErrorCode::InvalidArgument, "unknown invariant name '" + name + "'");
      const std::size_t k = std::stoul(digits);
      require(k < poset_.size(), ErrorCode::InvalidArgument, "poset has no member " + digits);
      return invariant(poset_[k]);
    }
    fail(ErrorCode::Parse, pos_ < text_.size() ? "unexpected '" + std::string(1, c) + "' at offset " + std::to_string(pos_)
                                               : std::string("unexpected end of relation"));
  }

  bool indexed_name_at(std::size_t at) const {
    if (text_[at] != 'g') return false;
    std::size_t k = at + 1;
    if (k < text_.size() && text_[k] == '_') ++k;
    return k < text_.size() && std::isdigit(static_cast<unsigned char>(text_[k]));
  }

  NodePtr invariant(const IsoClass& g) {
    std::size_t slot = 0;
    while (slot < slots_.size() && !(slots_[slot] == g)) ++slot;
    if (slot == slots_.size()) slots_.push_back(g);
    auto node = std::make_shared<Relation::Node>();
    node->kind = Kind::Invariant;
    node->slot = slot;
    return node;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  const InvariantBindings& bindings_;
  const GPoset& poset_;
  std::vector<IsoClass>& slots_;
};

Rational eval(const Relation::Node& n, const std::vector<Rational>& values) {
  switch (n.kind) {
    case Kind::Constant:
      return n.value;
    case Kind::Invariant:
      return values[n.slot];
    case Kind::Add:
      return eval(*n.left, values) + eval(*n.right, values);
    case Kind::Sub:
      return eval(*n.left, values) - eval(*n.right, values);
    case Kind::Mul:
      return eval(*n.left, values) * eval(*n.right, values);
    case Kind::Div: {
      const Rational d = eval(*n.right, values);
      require(d != 0, ErrorCode::InvalidArgument, "division by zero in relation");
      return eval(*n.left, values) / d;
    }
    case Kind::Neg:
      return -eval(*n.left, values);
    case Kind::Pow: {
      const Rational base = eval(*n.left, values);
      Rational out = 1;
      const long e = n.exponent < 0 ? -n.exponent : n.exponent;
      for (long i = 0; i < e; ++i) out *= base;
      if (n.exponent < 0) {
        require(out != 0, ErrorCode::InvalidArgument, "zero raised to a negative power");
        out = 1 / out;
      }
      return out;
    }
  }
  return 0;
}

}  // namespace

Relation Relation::parse(std::string_view text, const InvariantBindings& bindings, const GPoset& p) {
  Relation r;
  Parser parser(text, bindings, p, r.invariants_);
  r.root_ = parser.relation();
  return r;
}

Rational Relation::residual(const std::vector<Rational>& invariant_values) const {
  return eval(*root_, invariant_values);
}

RelationReport verify_relation(std::string_view text, const InvariantBindings& bindings, const GPoset& p) {
  const Relation r = Relation::parse(text, bindings, p);
  RelationReport report;
  for (std::size_t h = 0; h < p.size(); ++h) {
    std::vector<Rational> values;
    for (const auto& g : r.invariants()) values.emplace_back(from_uint64(count_subgraphs(g, p[h].canon())));
    const Rational res = r.residual(values);
    if (res != 0) {
      report.holds = false;
      report.first_failure = h;
      report.residual = res;
      break;
    }
  }
  return report;
}

}  // namespace gia
