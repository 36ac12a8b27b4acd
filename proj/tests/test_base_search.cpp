#include "irrbase/base_search.hpp"

#include "doctest.h"
#include "oracle.hpp"

#include <nlohmann/json.hpp>

#include "irrbase/constructions.hpp"
#include "irrbase/linear.hpp"

using namespace irrbase;

namespace {

SearchOptions with(Engine e) {
  SearchOptions o;
  o.engine = e;
  return o;
}

GroupHandle c2_wr_c2() { return build_wreath(build_cyclic(2), build_cyclic(2)); }

GroupHandle k_group() {
  // Gamma wr S_2 on GF(4)^2, viewed over GF(2)
  return build_wreath(build_semilinear(2, 2), build_symmetric(2));
}

struct Case {
  std::string name;
  GroupHandle g;
};

std::vector<Case> small_matrix() {
  std::vector<Case> out;
  out.push_back({"Sym(3)", build_symmetric(3)});
  out.push_back({"Cyc(5)", build_cyclic(5)});
  out.push_back({"C2 wr C2", c2_wr_c2()});
  out.push_back({"Sym(3) wr Cyc(2)", build_wreath(build_symmetric(3), build_cyclic(2))});
  out.push_back({"Sym(3) x Cyc(4)", build_direct_product(build_symmetric(3), build_cyclic(4))});
  out.push_back({"GL(1,3) wr Cyc(2)", build_wreath(build_gl1(3), build_cyclic(2))});
  out.push_back({"GL(1,3) wr Cyc(3)", build_wreath(build_gl1(3), build_cyclic(3))});
  out.push_back({"GL(1,3) wr Cyc(4)", build_wreath(build_gl1(3), build_cyclic(4))});
  out.push_back({"GL(1,4) wr Cyc(2)", build_wreath(build_gl1(4), build_cyclic(2))});
  out.push_back({"GL(1,5) wr Cyc(2)", build_wreath(build_gl1(5), build_cyclic(2))});
  out.push_back({"GL(1,5) wr Cyc(3)", build_wreath(build_gl1(5), build_cyclic(3))});
  out.push_back({"GL(1,3) wr Sym(3)", build_wreath(build_gl1(3), build_symmetric(3))});
  out.push_back({"E(2,1,3,+)", build_extraspecial({2, 1, 3, Variant::Plus})});
  out.push_back({"E(2,1,5,+)", build_extraspecial({2, 1, 5, Variant::Plus})});
  out.push_back({"E(2,1,5,-)", build_extraspecial({2, 1, 5, Variant::Minus})});
  out.push_back({"E(2,1,13,s)", build_extraspecial({2, 1, 13, Variant::Symplectic})});
  out.push_back({"GammaL(1,2^4)", build_semilinear(2, 4)});
  out.push_back({"GammaL(1,2^6)", build_semilinear(2, 6)});
  out.push_back({"GammaL(1,3^2)", build_semilinear(3, 2)});
  out.push_back({"GammaL(1,2^7)", build_semilinear(2, 7)});
  out.push_back({"GammaL(1,5^3)", build_semilinear(5, 3)});
  out.push_back({"GL(1,7)", build_gl1(7)});
  out.push_back({"K", k_group()});
  out.push_back({"GL(1,5) x GL(1,5)", build_direct_product(build_gl1(5), build_gl1(5))});
  return out;
}

}  // namespace

TEST_CASE("verify_irredundant") {
  auto e = build_extraspecial({3, 1, 7, Variant::Plus});
  const auto w = witness_extraspecial_base({3, 1, 7, Variant::Plus});
  auto r = verify_irredundant(e, w.points);
  CHECK(r.irredundant());
  CHECK(r.is_base);
  CHECK(r.order_chain == std::vector<BigInt>{27, 3, 1});

  auto empty = verify_irredundant(e, {});
  CHECK(empty.irredundant());
  CHECK_FALSE(empty.is_base);
  CHECK(empty.order_chain == std::vector<BigInt>{27});

  const std::vector<PointCode> repeat{w.points[0], w.points[0], w.points[1]};
  auto bad = verify_irredundant(e, repeat);
  REQUIRE(bad.failure_index);
  CHECK(*bad.failure_index == 1);

  // chain route, permutation group
  auto s4 = build_symmetric(4);
  const std::vector<PointCode> seq{0, 1, 1};
  auto rs = verify_irredundant(s4, seq);
  CHECK(rs.failure_index == 2u);
  CHECK(rs.order_chain == std::vector<BigInt>{24, 6, 2, 2});
}

TEST_CASE("pruned searches agree with unpruned search over all points") {
  for (auto& c : small_matrix()) {
    if (c.g.degree() > 200) continue;
    CAPTURE(c.name);
    const auto elements = oracle::closure(c.g.generators(), c.g.degree());
    REQUIRE(BigInt(elements.size()) == c.g.order());
    oracle::BruteBases brute(elements, c.g.degree());
    const unsigned i = brute.max_irredundant(), b = brute.min_base(), gm = brute.greedy_max();
    std::vector<Engine> engines{Engine::Chain};
    if (c.g.context().is_linear()) engines.push_back(Engine::Lattice);
    for (auto engine : engines) {
      CAPTURE(to_string(engine));
      const auto ri = max_irredundant(c.g, with(engine));
      const auto rb = min_base(c.g, with(engine));
      const auto rg = greedy_max(c.g, with(engine));
      const auto rr = greedy_run(c.g, with(engine));
      CHECK(ri.value() == i);
      CHECK(rb.value() == b);
      CHECK(rg.value() == gm);
      CHECK(ri.exact);
      CHECK(rr.value() <= gm);
      CHECK(rr.value() >= b);
      CHECK(b <= gm);
      CHECK(gm <= i);
      CHECK(i <= omega(c.g.order()));
      if (c.g.context().is_linear()) {
        CHECK(i <= c.g.context().dimension);
        CHECK(nonzero_points_independent(c.g.context(), ri.sequence));
      }
      // the greedy witness picks a point of a longest orbit at every step
      std::vector<PointCode> prefix;
      for (auto p : rg.sequence) {
        auto k = pointwise_stabilizer(c.g, prefix);
        std::uint64_t longest = 0, mine = 0;
        for (const auto& o : orbit_partition(k)) longest = std::max(longest, o.size);
        mine = orbit(k, p).size();
        CHECK(mine == longest);
        prefix.push_back(p);
      }
    }
  }
}

TEST_CASE("engines agree beyond the brute-force range") {
  for (auto& c : small_matrix()) {
    if (!c.g.context().is_linear() || c.g.degree() <= 200) continue;
    CAPTURE(c.name);
    for (auto stat : {0, 1, 2}) {
      auto run = [&](Engine e) {
        return stat == 0 ? max_irredundant(c.g, with(e)) : stat == 1 ? min_base(c.g, with(e)) : greedy_max(c.g, with(e));
      };
      CHECK(run(Engine::Chain).value() == run(Engine::Lattice).value());
    }
  }
}

TEST_CASE("known values") {
  CHECK(max_irredundant(build_wreath(build_gl1(3), build_cyclic(2))).value() == 2);
  CHECK(max_irredundant(build_semilinear(2, 4)).value() >= 3);
  CHECK(min_base(build_cyclic(7)).value() == 1);
  CHECK(min_base(k_group()).value() == 3);
  CHECK(greedy_run(k_group()).value() >= 3);
  CHECK(greedy_max(build_cyclic(5)).value() == 1);

  GroupHandle trivial(ActionContext::points(3), {GroupElement::from_cycles(3, {})});
  CHECK(max_irredundant(trivial).value() == 0);
  CHECK(min_base(trivial).order_chain == std::vector<BigInt>{1});
}

TEST_CASE("lattice engine on a large space") {
  // 7^9 points: orbit partitions are out of reach, the lattice is not
  const ExtraspecialSpec s{3, 2, 7, Variant::Plus};
  auto e = build_extraspecial(s);
  auto r = max_irredundant(e);
  CHECK(r.engine == Engine::Lattice);
  CHECK(r.exact);
  CHECK(r.value() >= 3);
  CHECK(r.value() <= 5);
  CHECK(verify_irredundant(e, r.sequence).is_base);
  CHECK(min_base(e).value() <= r.value());
}

TEST_CASE("node budget flags inexact results") {
  SearchOptions o;
  o.node_budget = 2;
  auto r = max_irredundant(build_wreath(build_gl1(3), build_cyclic(4)), o);
  CHECK_FALSE(r.exact);
  CHECK(verify_irredundant(build_wreath(build_gl1(3), build_cyclic(4)), r.sequence).is_base);
}

TEST_CASE("affine adjustment") {
  BaseReport h;
  h.sequence = {3, 5, 7, 9};
  h.order_chain = {16, 8, 4, 2, 1};
  auto g = affine_adjust(h, 81);
  CHECK(g.value() == 5);
  CHECK(g.sequence.front() == 0);
  CHECK(g.order_chain.front() == 16 * 81);

  auto k = k_group();
  auto b = affine_adjust(min_base(k), k.degree());
  CHECK(b.value() == 4);
}

TEST_CASE("I is monotone on subgroups and bounded through normal subgroups") {
  auto g = build_wreath(build_gl1(3), build_cyclic(3));
  GroupHandle base(g.context(), {g.generators()[0], compose(compose(inverse(g.generators()[1]), g.generators()[0]), g.generators()[1]),
                                 compose(compose(g.generators()[1], g.generators()[0]), inverse(g.generators()[1]))});
  auto r = check_subgroup_inequalities(g, base, base);
  CHECK(r.subgroup_holds);
  CHECK(r.normal_holds);
  CHECK(r.i_g == 3);
  CHECK(r.i_n == 3);
  CHECK(r.quotient_bound == 1);
  auto self = check_subgroup_inequalities(g, g, g);
  CHECK(self.quotient_bound == 0);
  CHECK(self.normal_holds);
}

TEST_CASE("report JSON") {
  auto g = build_wreath(build_gl1(3), build_cyclic(2));
  auto r = max_irredundant(g);
  auto j = to_json(r, g.context(), false);
  CHECK(j["statistic"] == "max_irredundant");
  CHECK(j["value"] == 2);
  CHECK(j["sequence"].size() == 2);
  CHECK(j["order_chain"].front() == "8");
  CHECK_FALSE(j.contains("millis"));
  CHECK(to_json(r, g.context()).contains("millis"));
}
