#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "irrbase/constructions.hpp"

namespace irrbase::dsl {

// Group expressions, e.g. "GammaL(1,4) wr (Sym(4) wr Sym(3))". The grammar is
// in the README.

struct GroupExpr {
  enum class Kind { GL, GammaL, E, Sym, Cyc, Counterexample, Tensor, Wreath, Direct };
  Kind kind = Kind::Sym;
  // leaves: GL(1,q) -> {q}; GammaL(1,q^d) -> {q, d}; E(r,m,q,v) -> {r, m, q};
  // Sym(k), Cyc(k) -> {k}
  std::vector<std::uint64_t> args;
  Variant variant = Variant::Plus;
  std::shared_ptr<const GroupExpr> left, right;  // binary nodes
  std::size_t offset = 0;                        // byte offset in the source

  bool is_leaf() const { return !left; }
  bool only_extraspecial() const;  // every leaf is E(...)
};

using ExprPtr = std::shared_ptr<const GroupExpr>;

ExprPtr leaf(GroupExpr::Kind kind, std::vector<std::uint64_t> args, Variant v = Variant::Plus);
ExprPtr node(GroupExpr::Kind kind, ExprPtr left, ExprPtr right);

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, std::string expected, std::string found);
  std::size_t offset;
  std::string expected, found;
};

ExprPtr parse(std::string_view text);

/// Canonical text: "(x)" for tensor, "x" for direct product, parentheses only
/// where left association needs them. parse(print(e)) == e structurally.
std::string print(const GroupExpr& e);
bool same_tree(const GroupExpr& a, const GroupExpr& b);

/// Builds the group. Violated preconditions throw PreconditionError naming
/// the condition.
GroupHandle elaborate(const GroupExpr& e);

/// "GF(q)".
std::uint32_t parse_field(std::string_view text);
/// "[a0,a1,...]": field-element indices, or 0,1,w,w2 over GF(4).
std::vector<std::uint32_t> parse_vector(std::string_view text, std::uint32_t q);

}  // namespace irrbase::dsl
