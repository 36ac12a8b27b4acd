#include "irrbase/dsl.hpp"

#include "doctest.h"

#include <random>

using namespace irrbase;
using namespace irrbase::dsl;
using Kind = GroupExpr::Kind;

namespace {

std::string error_of(std::string_view text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

std::string elaboration_error(std::string_view text) {
  try {
    elaborate(*parse(text));
  } catch (const PreconditionError& e) {
    return e.what();
  }
  return "";
}

ExprPtr random_expr(std::mt19937& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth > 0 ? 8 : 5);
  auto n = [&](int hi) { return std::uniform_int_distribution<std::uint64_t>(1, hi)(rng); };
  switch (pick(rng)) {
    case 0: return leaf(Kind::GL, {n(9)});
    case 1: return rng() % 2 ? leaf(Kind::GammaL, {n(5), n(4)}) : leaf(Kind::GammaL, {n(64)});
    case 2: return leaf(Kind::E, {n(5), n(3), n(13)}, static_cast<Variant>(rng() % 3));
    case 3: return leaf(Kind::Sym, {n(6)});
    case 4: return leaf(Kind::Cyc, {n(6)});
    case 5: return leaf(Kind::Counterexample, {});
    case 6: return node(Kind::Wreath, random_expr(rng, depth - 1), random_expr(rng, depth - 1));
    case 7: return node(Kind::Tensor, random_expr(rng, depth - 1), random_expr(rng, depth - 1));
    default: {
      auto a = random_expr(rng, depth - 1), b = random_expr(rng, depth - 1);
      if (a->only_extraspecial() && b->only_extraspecial()) b = leaf(Kind::Sym, {2});
      return node(Kind::Direct, a, b);
    }
  }
}

}  // namespace

TEST_CASE("parse examples") {
  auto w = parse("GL(1,4) wr (Sym(4) wr Sym(3))");
  CHECK(w->kind == Kind::Wreath);
  CHECK(w->left->kind == Kind::GL);
  CHECK(w->left->args == std::vector<std::uint64_t>{4});
  CHECK(w->right->kind == Kind::Wreath);
  CHECK(w->right->left->args == std::vector<std::uint64_t>{4});

  auto t = parse("E(3,1,7,+) (x) E(2,2,13,s)");
  CHECK(t->kind == Kind::Tensor);
  CHECK(t->right->variant == Variant::Symplectic);

  auto g = parse("GammaL(1,2^6)");
  CHECK(g->kind == Kind::GammaL);
  CHECK(g->args == std::vector<std::uint64_t>{2, 6});

  CHECK(parse("counterexample")->kind == Kind::Counterexample);
}

TEST_CASE("wreath associates to the left") {
  auto e = parse("Sym(2) wr Sym(3) wr Sym(4)");
  CHECK(e->left->kind == Kind::Wreath);
  CHECK(e->right->kind == Kind::Sym);
  CHECK(print(*e) == "Sym(2) wr Sym(3) wr Sym(4)");
}

TEST_CASE("whitespace does not matter") {
  auto a = parse("GL(1,4)wr(Sym(4)wr Sym(3))");
  auto b = parse("  GL ( 1 , 4 )  wr  ( Sym ( 4 ) wr Sym ( 3 ) ) ");
  CHECK(same_tree(*a, *b));
  CHECK(same_tree(*parse("E(2,1,5,+)( x )E(3,1,7,+)"), *parse("E(2,1,5,+) (x) E(3,1,7,+)")));
}

TEST_CASE("x is the tensor product only between extraspecial operands") {
  CHECK(parse("E(2,1,5,+) x E(3,1,7,+)")->kind == Kind::Tensor);
  CHECK(parse("E(2,1,5,+) x E(3,1,7,+) x E(5,1,11,+)")->kind == Kind::Tensor);
  CHECK(parse("GL(1,5) x GL(1,5)")->kind == Kind::Direct);
  CHECK(parse("E(2,1,5,+) x GL(1,5)")->kind == Kind::Direct);
  CHECK_THROWS_AS(print(*node(Kind::Direct, leaf(Kind::E, {2, 1, 5}), leaf(Kind::E, {2, 1, 5}))), std::invalid_argument);
}

TEST_CASE("print then parse gives the same tree") {
  for (const char* text : {"GL(1,4) wr (Sym(4) wr Sym(3))", "E(3,1,7,+) (x) E(2,2,13,s)", "GammaL(1,2^6)", "GammaL(1,16)",
                           "GL(1,5) x GL(1,5) x Cyc(2)", "(Sym(3) wr Cyc(2)) wr Sym(2)", "counterexample wr Cyc(2)"}) {
    CAPTURE(text);
    auto e = parse(text);
    auto again = parse(print(*e));
    CHECK(same_tree(*e, *again));
    CHECK(print(*again) == print(*e));
  }
  std::mt19937 rng(17);
  for (int i = 0; i < 500; ++i) {
    auto e = random_expr(rng, 4);
    const auto text = print(*e);
    CAPTURE(text);
    CHECK(same_tree(*e, *parse(text)));
  }
}

TEST_CASE("syntax errors carry byte offsets") {
  CHECK(error_of("GL(1,4) wr") == "offset 10: expected a group: GL, GammaL, E, Sym, Cyc, counterexample or '(', found end of input");
  CHECK(error_of("E(3,1,7,q)") == "offset 8: expected '+', '-' or 's', found 'q'");
  CHECK(error_of("GL(2,4)") == "offset 3: expected 1 (only dimension 1 is supported), found '2'");
  CHECK(error_of("Sym(0)") == "offset 4: expected positive integer, found '0'");
  CHECK(error_of("Sym(3) Sym(2)") == "offset 7: expected 'wr', '(x)', 'x' or end of input, found 'Sym'");
  CHECK(error_of("(Sym(3) wr Cyc(2)") == "offset 17: expected ')', found end of input");
  CHECK(error_of("Symm(3)") == "offset 0: expected a group: GL, GammaL, E, Sym, Cyc, counterexample or '(', found 'Symm'");
  CHECK(error_of("Sym(99999999999999999999)") == "offset 4: expected integer below 2^64, found '99999999999999999999'");
  CHECK(error_of("") != "");
}

TEST_CASE("elaboration") {
  CHECK(elaborate(*parse("E(3,1,7,+)")).order() == 27);
  CHECK(elaborate(*parse("GammaL(1,2^4)")).order() == 60);
  CHECK(elaborate(*parse("GammaL(1,16)")).order() == 60);
  CHECK(elaborate(*parse("GL(1,3) wr Cyc(2)")).order() == 8);
  CHECK(elaborate(*parse("Sym(4) wr Sym(3)")).order() == 82944);
  CHECK(elaborate(*parse("E(2,1,7,+) x E(3,1,7,+)")).degree() == 117649);
  CHECK(elaborate(*parse("counterexample")).degree() == 1u << 24);
}

TEST_CASE("precondition diagnostics name the condition") {
  CHECK(elaboration_error("E(3,1,5,+)").find("r must divide q-1") != std::string::npos);
  CHECK(elaboration_error("E(3,1,5,+)").rfind("offset 0: ", 0) == 0);
  CHECK(elaboration_error("Sym(3) wr E(3,1,7,+)").find("permutation group") != std::string::npos);
  CHECK(elaboration_error("GL(1,2) wr Cyc(3)").find("q > 2") != std::string::npos);
  CHECK(elaboration_error("GammaL(1,12)").find("not a prime power") != std::string::npos);
  CHECK(elaboration_error("E(2,1,5,+) (x) Sym(3)").find("offset 15: tensor factors") == 0);
  CHECK(elaboration_error("GL(1,6)").find("not a prime power") != std::string::npos);
}

TEST_CASE("field and vector literals") {
  CHECK(parse_field("GF(4)") == 4);
  CHECK(parse_field(" GF( 49 ) ") == 49);
  CHECK_THROWS_AS(parse_field("GF(6)"), PreconditionError);
  CHECK_THROWS_AS(parse_field("F(4)"), ParseError);
  CHECK(parse_vector("[1,w,w2,0]", 4) == std::vector<std::uint32_t>{1, 2, 3, 0});
  CHECK(parse_vector("[ 3 , 0 ]", 5) == std::vector<std::uint32_t>{3, 0});
  CHECK(parse_vector("[]", 5).empty());
  CHECK_THROWS_AS(parse_vector("[5]", 5), ParseError);
  CHECK_THROWS_AS(parse_vector("[w]", 5), ParseError);
  CHECK_THROWS_AS(parse_vector("[1,2", 5), ParseError);
}
