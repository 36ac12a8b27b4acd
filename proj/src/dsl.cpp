#include "irrbase/dsl.hpp"

#include <cctype>
#include <charconv>

#include "irrbase/field.hpp"

namespace irrbase::dsl {

using Kind = GroupExpr::Kind;

bool GroupExpr::only_extraspecial() const {
  if (is_leaf()) return kind == Kind::E;
  return left->only_extraspecial() && right->only_extraspecial();
}

ExprPtr leaf(Kind kind, std::vector<std::uint64_t> args, Variant v) {
  auto e = std::make_shared<GroupExpr>();
  e->kind = kind;
  e->args = std::move(args);
  e->variant = v;
  return e;
}

ExprPtr node(Kind kind, ExprPtr left, ExprPtr right) {
  auto e = std::make_shared<GroupExpr>();
  e->kind = kind;
  e->offset = left->offset;
  e->left = std::move(left);
  e->right = std::move(right);
  return e;
}

ParseError::ParseError(std::size_t off, std::string exp, std::string fnd)
    : std::runtime_error("offset " + std::to_string(off) + ": expected " + exp + ", found " + fnd),
      offset(off),
      expected(std::move(exp)),
      found(std::move(fnd)) {}

namespace {

bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  ExprPtr parse_all() {
    auto e = expr();
    skip();
    if (pos_ != s_.size()) fail("'wr', '(x)', 'x' or end of input");
    return e;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  std::string found() const {
    if (pos_ >= s_.size()) return "end of input";
    std::size_t end = pos_;
    if (ident_char(s_[pos_]))
      while (end < s_.size() && ident_char(s_[end])) ++end;
    else
      ++end;
    return "'" + std::string(s_.substr(pos_, end - pos_)) + "'";
  }

  [[noreturn]] void fail(const std::string& expected) const { throw ParseError(pos_, expected, found()); }

  // a whole word at the cursor, not a prefix of a longer identifier
  bool word(std::string_view w) {
    skip();
    if (s_.substr(pos_, w.size()) != w) return false;
    if (pos_ + w.size() < s_.size() && ident_char(s_[pos_ + w.size()])) return false;
    pos_ += w.size();
    return true;
  }

  bool punct(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!punct(c)) fail(std::string("'") + c + "'");
  }

  // "(x)" with optional inner whitespace
  bool tensor_op() {
    skip();
    const std::size_t save = pos_;
    if (punct('(') && word("x") && punct(')')) return true;
    pos_ = save;
    return false;
  }

  std::uint64_t number() {
    skip();
    std::uint64_t v = 0;
    auto [p, ec] = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), v);
    if (ec == std::errc::result_out_of_range) fail("integer below 2^64");
    if (ec != std::errc()) fail("positive integer");
    if (v == 0) fail("positive integer");
    pos_ = static_cast<std::size_t>(p - s_.data());
    return v;
  }

  void one() {
    skip();
    const std::size_t at = pos_;
    if (number() != 1) {
      pos_ = at;
      fail("1 (only dimension 1 is supported)");
    }
  }

  ExprPtr expr() {
    auto e = term();
    for (;;) {
      Kind k;
      bool alias = false;
      if (word("wr"))
        k = Kind::Wreath;
      else if (tensor_op())
        k = Kind::Tensor;
      else if (word("x")) {
        k = Kind::Direct;
        alias = true;
      } else
        return e;
      auto rhs = term();
      // "x" between extraspecial operands means the tensor product
      if (alias && e->only_extraspecial() && rhs->only_extraspecial()) k = Kind::Tensor;
      e = node(k, e, rhs);
    }
  }

  ExprPtr term() {
    skip();
    const std::size_t at = pos_;
    if (punct('(')) {
      auto e = expr();
      expect(')');
      return e;
    }
    auto e = leaf_expr();
    std::const_pointer_cast<GroupExpr>(e)->offset = at;
    return e;
  }

  ExprPtr leaf_expr() {
    if (word("GL")) {
      expect('(');
      one();
      expect(',');
      const auto q = number();
      expect(')');
      return leaf(Kind::GL, {q});
    }
    if (word("GammaL")) {
      expect('(');
      one();
      expect(',');
      std::vector<std::uint64_t> a{number()};
      if (punct('^')) a.push_back(number());
      expect(')');
      return leaf(Kind::GammaL, a);
    }
    if (word("E")) {
      expect('(');
      std::vector<std::uint64_t> a{number()};
      expect(',');
      a.push_back(number());
      expect(',');
      a.push_back(number());
      expect(',');
      Variant v;
      if (punct('+'))
        v = Variant::Plus;
      else if (punct('-'))
        v = Variant::Minus;
      else if (word("s"))
        v = Variant::Symplectic;
      else
        fail("'+', '-' or 's'");
      expect(')');
      return leaf(Kind::E, a, v);
    }
    for (auto [name, kind] : {std::pair{"Sym", Kind::Sym}, std::pair{"Cyc", Kind::Cyc}})
      if (word(name)) {
        expect('(');
        const auto k = number();
        expect(')');
        return leaf(kind, {k});
      }
    if (word("counterexample")) return leaf(Kind::Counterexample, {});
    fail("a group: GL, GammaL, E, Sym, Cyc, counterexample or '('");
  }
};

std::string variant_text(Variant v) { return v == Variant::Plus ? "+" : v == Variant::Minus ? "-" : "s"; }

std::string at(const GroupExpr& e) { return "offset " + std::to_string(e.offset) + ": "; }

std::uint32_t small(std::uint64_t v, const GroupExpr& e) {
  if (v > 0xffffffffu) throw PreconditionError(at(e) + "parameter " + std::to_string(v) + " out of range");
  return static_cast<std::uint32_t>(v);
}

void tensor_factors(const GroupExpr& e, std::vector<ExtraspecialSpec>& out) {
  if (e.kind == Kind::Tensor) {
    tensor_factors(*e.left, out);
    tensor_factors(*e.right, out);
  } else if (e.kind == Kind::E) {
    out.push_back({small(e.args[0], e), small(e.args[1], e), small(e.args[2], e), e.variant});
  } else {
    throw PreconditionError(at(e) + "tensor factors must be extraspecial groups E(r,m,q,v)");
  }
}

}  // namespace

ExprPtr parse(std::string_view text) { return Parser(text).parse_all(); }

std::string print(const GroupExpr& e) {
  switch (e.kind) {
    case Kind::GL:
      return "GL(1," + std::to_string(e.args[0]) + ")";
    case Kind::GammaL:
      return "GammaL(1," + std::to_string(e.args[0]) + (e.args.size() > 1 ? "^" + std::to_string(e.args[1]) : "") + ")";
    case Kind::E:
      return "E(" + std::to_string(e.args[0]) + "," + std::to_string(e.args[1]) + "," + std::to_string(e.args[2]) + "," +
             variant_text(e.variant) + ")";
    case Kind::Sym:
      return "Sym(" + std::to_string(e.args[0]) + ")";
    case Kind::Cyc:
      return "Cyc(" + std::to_string(e.args[0]) + ")";
    case Kind::Counterexample:
      return "counterexample";
    default:
      break;
  }
  if (e.kind == Kind::Direct && e.left->only_extraspecial() && e.right->only_extraspecial())
    throw std::invalid_argument("a direct product of extraspecial groups has no text form ('x' reads as tensor)");
  const char* op = e.kind == Kind::Wreath ? " wr " : e.kind == Kind::Tensor ? " (x) " : " x ";
  const std::string rhs = e.right->is_leaf() ? print(*e.right) : "(" + print(*e.right) + ")";
  return print(*e.left) + op + rhs;
}

bool same_tree(const GroupExpr& a, const GroupExpr& b) {
  if (a.kind != b.kind || a.args != b.args || a.is_leaf() != b.is_leaf()) return false;
  if (a.kind == Kind::E && a.variant != b.variant) return false;
  return a.is_leaf() || (same_tree(*a.left, *b.left) && same_tree(*a.right, *b.right));
}

GroupHandle elaborate(const GroupExpr& e) {
  try {
    switch (e.kind) {
      case Kind::GL:
        return build_gl1(small(e.args[0], e));
      case Kind::GammaL: {
        std::uint64_t q = e.args[0], d = 1;
        if (e.args.size() > 1) {
          d = e.args[1];
        } else {
          // GammaL(1,n) is the full semilinear group over the prime field
          const auto pp = prime_power(q);
          if (!pp) throw PreconditionError(std::to_string(q) + " is not a prime power");
          q = pp->first;
          d = pp->second;
        }
        return build_semilinear(small(q, e), small(d, e));
      }
      case Kind::E:
        return build_extraspecial({small(e.args[0], e), small(e.args[1], e), small(e.args[2], e), e.variant});
      case Kind::Sym:
        return build_symmetric(small(e.args[0], e));
      case Kind::Cyc:
        return build_cyclic(small(e.args[0], e));
      case Kind::Counterexample:
        return build_counterexample();
      case Kind::Tensor: {
        std::vector<ExtraspecialSpec> specs;
        tensor_factors(e, specs);
        return build_tensor_product(specs);
      }
      case Kind::Wreath: {
        if (e.left->kind == Kind::GL && e.left->args[0] == 2)
          throw PreconditionError("GL(1,2) wr T is reducible: irreducibility of GL(1,q) wr T needs q > 2");
        return build_wreath(elaborate(*e.left), elaborate(*e.right));
      }
      case Kind::Direct:
        return build_direct_product(elaborate(*e.left), elaborate(*e.right));
    }
  } catch (const PreconditionError& err) {
    const std::string msg = err.what();
    if (msg.rfind("offset ", 0) == 0) throw;
    throw PreconditionError(at(e) + msg);
  } catch (const std::invalid_argument& err) {
    throw PreconditionError(at(e) + err.what());
  }
  throw std::logic_error("unknown expression kind");
}

std::uint32_t parse_field(std::string_view text) {
  std::size_t i = 0;
  auto ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  ws();
  if (text.substr(i, 3) != "GF(") throw ParseError(i, "'GF('", "'" + std::string(text.substr(i, 3)) + "'");
  i += 3;
  ws();
  std::uint64_t q = 0;
  auto [p, ec] = std::from_chars(text.data() + i, text.data() + text.size(), q);
  if (ec != std::errc()) throw ParseError(i, "field order", "'" + std::string(text.substr(i, 1)) + "'");
  i = static_cast<std::size_t>(p - text.data());
  ws();
  if (i >= text.size() || text[i] != ')') throw ParseError(i, "')'", i >= text.size() ? "end of input" : "'" + std::string(1, text[i]) + "'");
  ++i;
  ws();
  if (i != text.size()) throw ParseError(i, "end of input", "'" + std::string(1, text[i]) + "'");
  if (!prime_power(q) || q > 0xffffffffu) throw PreconditionError("GF(" + std::to_string(q) + "): " + std::to_string(q) + " is not a prime power");
  return static_cast<std::uint32_t>(q);
}

std::vector<std::uint32_t> parse_vector(std::string_view text, std::uint32_t q) {
  std::size_t i = 0;
  auto ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto here = [&] { return i >= text.size() ? std::string("end of input") : "'" + std::string(1, text[i]) + "'"; };
  ws();
  if (i >= text.size() || text[i] != '[') throw ParseError(i, "'['", here());
  ++i;
  std::vector<std::uint32_t> out;
  for (bool first = true;; first = false) {
    ws();
    if (first && i < text.size() && text[i] == ']') break;
    std::uint64_t digit = 0;
    const std::size_t start = i;
    if (q == 4 && i < text.size() && text[i] == 'w') {
      ++i;
      digit = 2;
      if (i < text.size() && text[i] == '2') {
        ++i;
        digit = 3;
      }
    } else {
      auto [p, ec] = std::from_chars(text.data() + i, text.data() + text.size(), digit);
      if (ec != std::errc()) throw ParseError(i, q == 4 ? "field element (index or 0, 1, w, w2)" : "field element index", here());
      i = static_cast<std::size_t>(p - text.data());
    }
    if (digit >= q) throw ParseError(start, "field element below " + std::to_string(q), std::to_string(digit));
    out.push_back(static_cast<std::uint32_t>(digit));
    ws();
    if (i < text.size() && text[i] == ',') {
      ++i;
      continue;
    }
    if (i < text.size() && text[i] == ']') break;
    throw ParseError(i, "',' or ']'", here());
  }
  ++i;
  ws();
  if (i != text.size()) throw ParseError(i, "end of input", here());
  return out;
}

}  // namespace irrbase::dsl
