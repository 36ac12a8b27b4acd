#include "irrbase/group.hpp"

#include "doctest.h"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <thread>

using namespace irrbase;

namespace {

using Perm = std::vector<std::uint32_t>;

// Oracle: all group elements as explicit permutations, by closure.
std::set<Perm> closure(const std::vector<GroupElement>& gens, std::uint64_t degree) {
  std::vector<Perm> g;
  for (const auto& s : gens) g.push_back(to_permutation(s, degree).as<PermElement>().images);
  Perm id(degree);
  for (std::uint32_t i = 0; i < degree; ++i) id[i] = i;
  std::set<Perm> seen{id};
  std::vector<Perm> queue{id};
  for (std::size_t k = 0; k < queue.size(); ++k)
    for (const auto& s : g) {
      Perm z(degree);
      for (std::uint32_t i = 0; i < degree; ++i) z[i] = s[queue[k][i]];
      if (seen.insert(z).second) queue.push_back(z);
    }
  return seen;
}

std::set<PointCode> brute_orbit(const std::set<Perm>& elements, PointCode p) {
  std::set<PointCode> o;
  for (const auto& e : elements) o.insert(e[p]);
  return o;
}

std::uint64_t brute_stabilizer(const std::set<Perm>& elements, const std::vector<PointCode>& pts) {
  std::uint64_t n = 0;
  for (const auto& e : elements)
    n += std::all_of(pts.begin(), pts.end(), [&](PointCode p) { return e[p] == p; });
  return n;
}

GroupHandle extraspecial_3_7() {
  auto f = Field::build(7, 1);
  const Elem w = primitive_root_of_unity(*f, 3);
  auto x = GroupElement::matrix(Matrix::diagonal(f, std::vector<Elem>{1, w, f->mul(w, w)}));
  auto y = GroupElement::matrix(Matrix::permutation(f, std::vector<unsigned>{1, 2, 0}));
  return GroupHandle(ActionContext::vectors(f, 3), {x, y});
}

GroupHandle gl1_wr_c2(unsigned p) {
  auto f = Field::build(p, 1);
  const Elem z = f->primitive_element();
  auto a = GroupElement::matrix(Matrix::diagonal(f, std::vector<Elem>{z, 1}));
  auto s = GroupElement::matrix(Matrix::permutation(f, std::vector<unsigned>{1, 0}));
  return GroupHandle(ActionContext::vectors(f, 2), {a, s});
}

GroupHandle gamma_l1(std::uint32_t q, unsigned d) {
  auto space = SemilinearSpace::build(q, d);
  auto m = GroupElement::semilinear(space, space->big_field().primitive_element(), 0);
  auto phi = GroupElement::semilinear(space, 1, space->base_degree());
  return GroupHandle(ActionContext::points(space->size()), {m, phi});
}

}  // namespace

TEST_CASE("symmetric group of degree 3") {
  GroupHandle s3(ActionContext::points(3), {GroupElement::from_cycles(3, {{1, 2}}), GroupElement::from_cycles(3, {{1, 2, 3}})});
  CHECK(s3.order() == 6);
  CHECK(subgroup_chain_bound(s3) == 2);
  CHECK(s3.chain().levels().size() == 2);
}

TEST_CASE("extraspecial 3^{1+2} in GL3(7)") {
  auto e = extraspecial_3_7();
  CHECK(closure(e.generators(), e.degree()).size() == 27);
  CHECK(e.order() == 27);
  CHECK(subgroup_chain_bound(e) == 3);
  // the known-order randomized build gives the same chain order
  GroupHandle declared = extraspecial_3_7();
  declared.with_order(27);
  CHECK(schreier_sims(declared).order() == 27);
  ChainOptions det;
  det.use_known_order = false;
  CHECK(schreier_sims(declared, det).order() == 27);
}

TEST_CASE("GammaL1(64) has order 6*63") {
  auto g = gamma_l1(2, 6);
  CHECK(g.order() == 378);
  CHECK(closure(g.generators(), 64).size() == 378);
  g = gamma_l1(2, 6);
  g.with_order(378);
  CHECK(g.chain().order() == 378);
}

TEST_CASE("apply on each element variant") {
  auto e = extraspecial_3_7();
  CHECK(e.identity().apply(100) == 100);
  // wreath ((gamma,1,1), id) only touches the digits of block 1
  auto f3 = Field::build(3, 1);
  auto gamma = GroupElement::matrix(Matrix::diagonal(f3, std::vector<Elem>{2}));
  auto one = identity_like(gamma);
  auto w = GroupElement::wreath({gamma, one, one}, {0, 1, 2}, {3, 3, 3});
  for (PointCode p = 0; p < 27; ++p) {
    const auto a = unpack(p, 3, 3), b = unpack(w.apply(p), 3, 3);
    CHECK(b[1] == a[1]);
    CHECK(b[2] == a[2]);
    CHECK(b[0] == f3->mul(2, a[0]));
  }
  // Frobenius on GF(4)
  auto space = SemilinearSpace::build(4, 1);
  auto frob = GroupElement::semilinear(space, 1, 1);
  const Field& f4 = space->big_field();
  for (Elem x = 0; x < 4; ++x) CHECK(space->element_of(frob.apply(space->code_of(x))) == f4.mul(x, x));
  CHECK(GroupElement::semilinear(space, 1, 0).is_identity());
  CHECK_THROWS(apply(gamma, 5, ActionContext::points(3)));
  CHECK_THROWS(apply(gamma, 0, ActionContext::points(4)));
}

TEST_CASE("apply respects composition and inversion") {
  std::mt19937_64 rng(1);
  std::vector<GroupHandle> groups{extraspecial_3_7(), gl1_wr_c2(5), gamma_l1(3, 3), gamma_l1(4, 2)};
  auto f4 = Field::build(2, 2);
  auto sp = SemilinearSpace::build(4, 1);
  auto g1 = GroupElement::semilinear(sp, 2, 1), g2 = GroupElement::semilinear(sp, 3, 0);
  auto s = GroupElement::perm({1, 0, 2});
  auto wr1 = GroupElement::wreath({g1, g2, g1}, {1, 2, 0}, {4, 4, 4});
  auto wr2 = GroupElement::wreath({g2, g2, g1}, {0, 2, 1}, {4, 4, 4});
  groups.emplace_back(ActionContext::points(64), std::vector<GroupElement>{wr1, wr2});
  for (const auto& g : groups) {
    RandomElements rnd(g.generators(), 9);
    for (int t = 0; t < 20; ++t) {
      auto a = rnd.next(), b = rnd.next();
      auto ab = compose(a, b), ai = inverse(a);
      for (int k = 0; k < 20; ++k) {
        const PointCode p = rng() % g.degree();
        CHECK(ab.apply(p) == b.apply(a.apply(p)));
        CHECK(ai.apply(a.apply(p)) == p);
      }
      CHECK(compose(a, ai).is_identity());
      CHECK(power(a, 3) == compose(a, compose(a, a)));
    }
  }
}

TEST_CASE("orbits against brute force") {
  auto g = gl1_wr_c2(3);
  auto elements = closure(g.generators(), 9);
  CHECK(elements.size() == 8);
  const PointCode e1 = pack(std::vector<Elem>{1, 0}, 3);
  auto o = orbit(g, e1);
  std::set<PointCode> got(o.points.begin(), o.points.end());
  CHECK(got == brute_orbit(elements, e1));
  std::set<PointCode> expected;
  for (auto v : std::vector<std::vector<Elem>>{{1, 0}, {2, 0}, {0, 1}, {0, 2}}) expected.insert(pack(v, 3));
  CHECK(got == expected);
  CHECK(orbit(g, 0).size() == 1);

  auto gl = gamma_l1(2, 2);
  CHECK(orbit(gl, 1).size() == 3);
  CHECK(closure(gl.generators(), 4).size() == 6);
}

TEST_CASE("orbit partitions") {
  GroupHandle triv(ActionContext::points(7), {GroupElement::from_cycles(7, {})});
  auto parts = orbit_partition(triv);
  CHECK(parts.size() == 7);
  GroupHandle c5(ActionContext::points(5), {GroupElement::from_cycles(5, {{1, 2, 3, 4, 5}})});
  CHECK(orbit_partition(c5).size() == 1);
  CHECK(orbit_partition(c5)[0].size == 5);

  // 2^{1+2}_+ in GL2(5)
  auto f = Field::build(5, 1);
  auto x = GroupElement::matrix(Matrix::diagonal(f, std::vector<Elem>{1, 4}));
  auto y = GroupElement::matrix(Matrix::permutation(f, std::vector<unsigned>{1, 0}));
  GroupHandle e(ActionContext::vectors(f, 2), {x, y});
  auto elements = closure(e.generators(), 25);
  CHECK(elements.size() == 8);
  auto p = orbit_partition(e);
  std::uint64_t total = 0;
  for (const auto& s : p) {
    total += s.size;
    auto bo = brute_orbit(elements, s.representative);
    CHECK(bo.size() == s.size);
    CHECK(*bo.begin() == s.representative);
  }
  CHECK(total == 25);
  CHECK(p[0].representative == 0);
  CHECK(p[0].size == 1);

  // redundant generators do not change the partition
  GroupHandle e2(ActionContext::vectors(f, 2), {x, y, compose(x, y), compose(y, compose(x, y))});
  auto p2 = orbit_partition(e2);
  REQUIRE(p2.size() == p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    CHECK(p2[i].representative == p[i].representative);
    CHECK(p2[i].size == p[i].size);
  }
}

TEST_CASE("orbit-stabilizer and pointwise stabilizers") {
  std::vector<GroupHandle> groups{extraspecial_3_7(), gl1_wr_c2(5), gamma_l1(2, 4), gamma_l1(3, 2)};
  std::mt19937_64 rng(4);
  for (auto& g : groups) {
    auto elements = closure(g.generators(), g.degree());
    CHECK(g.order() == elements.size());
    for (int t = 0; t < 10; ++t) {
      const PointCode a = rng() % g.degree(), b = rng() % g.degree();
      std::vector<PointCode> pts{a};
      auto s = pointwise_stabilizer(g, pts);
      CHECK(s.order() * orbit(g, a).size() == g.order());
      CHECK(s.order() == brute_stabilizer(elements, pts));
      pts.push_back(b);
      auto s2 = pointwise_stabilizer(g, pts);
      CHECK(s2.order() == brute_stabilizer(elements, pts));
      for (const auto& h : s2.generators()) {
        CHECK(h.apply(a) == a);
        CHECK(h.apply(b) == b);
      }
    }
    auto base = g.chain().base();
    CHECK(pointwise_stabilizer(g, base).order() == 1);
  }
}

TEST_CASE("stabilizer of the first eigenvector of 3^{1+2}") {
  auto e = extraspecial_3_7();
  std::vector<PointCode> w0{pack(std::vector<Elem>{1, 0, 0}, 7)};
  CHECK(pointwise_stabilizer(e, w0).order() == 3);
  // Galois stabilizer of the point 1 in GammaL1(2^4)
  auto g = gamma_l1(2, 4);
  std::vector<PointCode> one{1};
  CHECK(pointwise_stabilizer(g, one).order() == 4);
}

TEST_CASE("strip test on random products") {
  GroupHandle s8(ActionContext::points(8),
                 {GroupElement::from_cycles(8, {{1, 2}}), GroupElement::from_cycles(8, {{1, 2, 3, 4, 5, 6, 7, 8}})});
  const auto& c = s8.chain();
  CHECK(c.order() == 40320);
  RandomElements rnd(s8.generators(), 77);
  for (int t = 0; t < 100; ++t) CHECK(c.contains(rnd.next()));
  // an element of a different group is rejected
  GroupHandle a8(ActionContext::points(8),
                 {GroupElement::from_cycles(8, {{1, 2, 3}}), GroupElement::from_cycles(8, {{2, 3, 4, 5, 6, 7, 8}})});
  CHECK(a8.order() == 20160);
  CHECK_FALSE(a8.chain().contains(GroupElement::from_cycles(8, {{1, 2}})));
}

TEST_CASE("declared orders are cross-checked") {
  auto e = extraspecial_3_7();
  e.with_order(81);
  CHECK_THROWS_AS(e.chain(), std::logic_error);
  auto e2 = extraspecial_3_7();
  e2.with_order(9);
  CHECK_THROWS_AS(e2.chain(), std::logic_error);
}

TEST_CASE("degree limit") {
  auto f = Field::build(13, 1);
  auto x = GroupElement::matrix(Matrix::diagonal(f, std::vector<Elem>{2, 1, 1, 1, 1, 1}));
  GroupHandle g(ActionContext::vectors(f, 6), {x});
  ChainOptions small;
  small.degree_limit = 1000;
  CHECK_THROWS_AS(schreier_sims(g, small), std::length_error);
  CHECK_THROWS_AS(g.order(), std::length_error);  // 13^6 is above the default limit
  ChainOptions big;
  big.degree_limit = 5'000'000;
  CHECK(schreier_sims(g, big).order() == 12);
}

TEST_CASE("chains are shared safely between threads") {
  auto g = gamma_l1(2, 8);
  std::vector<std::thread> ts;
  std::vector<BigInt> orders(4);
  for (int i = 0; i < 4; ++i)
    ts.emplace_back([&, i] { orders[i] = g.chain().order(); });
  for (auto& t : ts) t.join();
  for (const auto& o : orders) CHECK(o == 8 * 255);
}

TEST_CASE("prime divisor counting") {
  CHECK(omega(12) == 3);
  CHECK(omega(1) == 0);
  CHECK(omega(BigInt(1) << 24) == 24);
  std::mt19937_64 rng(8);
  for (int t = 0; t < 200; ++t) {
    const std::uint64_t a = rng() % 100000 + 1, b = rng() % 100000 + 1;
    CHECK(omega(BigInt(a) * b) == omega(a) + omega(b));
  }
  // the order of the wreath counterexample is 6^12 * 82944 = 2^22 * 3^16
  const BigInt h = ipow(6, 12) * 82944;
  CHECK(h == (BigInt(1) << 22) * ipow(3, 16));
  CHECK(omega(h) == 38);
}
