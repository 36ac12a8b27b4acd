#include "irrbase/field.hpp"
#include "irrbase/linalg.hpp"

#include "doctest.h"

#include <random>
#include <set>

using namespace irrbase;

namespace {

// Oracle: schoolbook polynomial multiplication modulo the field's modulus,
// written against the packed-coefficient definition of the element index.
std::vector<unsigned> digits(Elem x, unsigned p, unsigned k) {
  std::vector<unsigned> d(k);
  for (unsigned i = 0; i < k; ++i) {
    d[i] = x % p;
    x /= p;
  }
  return d;
}

Elem undigits(const std::vector<unsigned>& d, unsigned p) {
  Elem x = 0;
  for (std::size_t i = d.size(); i-- > 0;) x = x * p + d[i];
  return x;
}

Elem poly_mul(const Field& f, Elem a, Elem b) {
  const unsigned p = f.characteristic(), k = f.degree();
  auto da = digits(a, p, k), db = digits(b, p, k);
  std::vector<unsigned> prod(2 * k, 0);
  for (unsigned i = 0; i < k; ++i)
    for (unsigned j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
  const auto& m = f.modulus();
  for (unsigned deg = 2 * k - 1; deg >= k; --deg) {
    const unsigned c = prod[deg];
    if (c == 0) continue;
    for (unsigned i = 0; i <= k; ++i) prod[deg - k + i] = (prod[deg - k + i] + p * p - c * m[i] % p) % p;
  }
  prod.resize(k);
  return undigits(prod, p);
}

Elem poly_add(const Field& f, Elem a, Elem b) {
  const unsigned p = f.characteristic(), k = f.degree();
  auto da = digits(a, p, k), db = digits(b, p, k);
  for (unsigned i = 0; i < k; ++i) da[i] = (da[i] + db[i]) % p;
  return undigits(da, p);
}

Elem slow_pow(const Field& f, Elem a, std::uint64_t e) {
  Elem r = 1;
  for (std::uint64_t i = 0; i < e; ++i) r = poly_mul(f, r, a);
  return r;
}

std::uint64_t brute_order(const Field& f, Elem a) {
  Elem x = a;
  std::uint64_t n = 1;
  while (x != 1) {
    x = poly_mul(f, x, a);
    ++n;
  }
  return n;
}

Matrix random_matrix(const FieldPtr& f, unsigned r, unsigned c, std::mt19937& rng) {
  Matrix m(f, r, c);
  for (auto& e : m.entries) e = rng() % f->order();
  return m;
}

}  // namespace

TEST_CASE("GF(4) multiplication table matches polynomial arithmetic") {
  auto f = Field::build(2, 2);
  CHECK(f->modulus() == std::vector<unsigned>{1, 1, 1});
  for (Elem a = 0; a < 4; ++a)
    for (Elem b = 0; b < 4; ++b) {
      CHECK(f->mul(a, b) == poly_mul(*f, a, b));
      CHECK(f->add(a, b) == poly_add(*f, a, b));
    }
  const Elem w = f->primitive_element();
  const Elem w2 = f->mul(w, w);
  CHECK(w2 == f->add(w, 1));
  CHECK(f->mul(w, w2) == 1);
  CHECK(f->to_string(w) == "w");
}

TEST_CASE("prime field arithmetic") {
  auto f = Field::build(5, 1);
  CHECK(f->add(2, 3) == 0);
  CHECK(f->mul(2, 3) == 1);
  CHECK(f->inv(2) == 3);
  CHECK(f->neg(1) == 4);
}

TEST_CASE("tables agree with the polynomial oracle") {
  for (auto [p, k] : std::vector<std::pair<unsigned, unsigned>>{{2, 3}, {3, 2}, {2, 6}, {5, 2}, {2, 9}, {3, 6}, {7, 3}}) {
    auto f = Field::build(p, k);
    CAPTURE(p);
    CAPTURE(k);
    std::mt19937 rng(p * 100 + k);
    const unsigned samples = f->order() <= 64 ? 0 : 3000;
    if (samples == 0) {
      for (Elem a = 0; a < f->order(); ++a)
        for (Elem b = 0; b < f->order(); ++b) REQUIRE(f->mul(a, b) == poly_mul(*f, a, b));
    } else {
      for (unsigned t = 0; t < samples; ++t) {
        Elem a = rng() % f->order(), b = rng() % f->order();
        REQUIRE(f->mul(a, b) == poly_mul(*f, a, b));
        REQUIRE(f->add(a, b) == poly_add(*f, a, b));
      }
    }
    // the primitive element has order q-1 and is the least such
    CHECK(brute_order(*f, f->primitive_element()) == f->order() - 1);
    for (Elem a = 1; a < f->primitive_element(); ++a) CHECK(brute_order(*f, a) != f->order() - 1);
  }
}

TEST_CASE("field axioms on random triples") {
  for (auto [p, k] : std::vector<std::pair<unsigned, unsigned>>{{2, 2}, {5, 1}, {3, 2}, {2, 6}, {13, 1}, {2, 10}}) {
    auto f = Field::build(p, k);
    std::mt19937 rng(7 * p + k);
    for (int t = 0; t < 500; ++t) {
      Elem a = rng() % f->order(), b = rng() % f->order(), c = rng() % f->order();
      CHECK(f->mul(a, f->mul(b, c)) == f->mul(f->mul(a, b), c));
      CHECK(f->add(a, f->add(b, c)) == f->add(f->add(a, b), c));
      CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
      CHECK(f->add(a, f->neg(a)) == 0);
      if (a) CHECK(f->mul(a, f->inv(a)) == 1);
    }
  }
}

TEST_CASE("Frobenius is a field automorphism of order k") {
  for (auto [p, k] : std::vector<std::pair<unsigned, unsigned>>{{2, 2}, {3, 3}, {2, 6}, {5, 2}}) {
    auto f = Field::build(p, k);
    for (Elem a = 0; a < f->order(); ++a) {
      CHECK(f->frobenius(a) == f->pow(a, p));
      CHECK(f->frobenius(a, k) == a);
      const Elem b = (a * 7 + 3) % f->order();
      CHECK(f->frobenius(f->add(a, b)) == f->add(f->frobenius(a), f->frobenius(b)));
      CHECK(f->frobenius(f->mul(a, b)) == f->mul(f->frobenius(a), f->frobenius(b)));
    }
  }
}

TEST_CASE("GF(64) contains GF(4) and GF(8)") {
  auto f = Field::build(2, 6);
  unsigned in4 = 0, in8 = 0, in2 = 0;
  for (Elem x = 0; x < 64; ++x) {
    const bool a = slow_pow(*f, x, 4) == x, b = slow_pow(*f, x, 8) == x;
    CHECK(a == f->in_subfield(x, 2));
    CHECK(b == f->in_subfield(x, 3));
    in4 += a;
    in8 += b;
    in2 += a && b;
  }
  CHECK(in4 == 4);
  CHECK(in8 == 8);
  CHECK(in2 == 2);
}

TEST_CASE("field construction errors") {
  CHECK_THROWS_AS(Field::build(4, 1), std::invalid_argument);
  CHECK_THROWS(Field::build(2, 17));
  CHECK_THROWS(Field::with_modulus(2, {1, 0, 1}));  // x^2 + 1 = (x+1)^2
  CHECK(prime_power(64) == std::pair<unsigned, unsigned>{2, 6});
  CHECK_FALSE(prime_power(12).has_value());
}

TEST_CASE("primitive roots of unity") {
  auto f7 = Field::build(7, 1);
  const Elem w = primitive_root_of_unity(*f7, 3);
  CHECK(brute_order(*f7, w) == 3);
  auto f5 = Field::build(5, 1);
  CHECK(primitive_root_of_unity(*f5, 4) == f5->primitive_element());
  auto f4 = Field::build(2, 2);
  const Elem w4 = primitive_root_of_unity(*f4, 3);
  CHECK(brute_order(*f4, w4) == 3);
  CHECK_THROWS_AS(primitive_root_of_unity(*f5, 3), std::invalid_argument);
}

TEST_CASE("least sum of two squares equal to -1") {
  for (auto [p, k] : std::vector<std::pair<unsigned, unsigned>>{{5, 1}, {13, 1}, {3, 2}, {7, 1}, {2, 2}, {3, 1}}) {
    auto f = Field::build(p, k);
    std::pair<Elem, Elem> expected{0, 0};
    bool found = false;
    for (Elem a = 0; a < f->order() && !found; ++a)
      for (Elem b = 0; b < f->order() && !found; ++b)
        if (poly_add(*f, poly_mul(*f, a, a), poly_mul(*f, b, b)) == f->neg(1)) {
          expected = {a, b};
          found = true;
        }
    REQUIRE(found);
    CHECK(find_sum_of_squares(*f) == expected);
  }
  CHECK(find_sum_of_squares(*Field::build(5, 1)) == std::pair<Elem, Elem>{0, 2});
}

TEST_CASE("Kronecker products") {
  auto f4 = Field::build(2, 2);
  const Elem w = f4->primitive_element();
  Matrix d = Matrix::diagonal(f4, std::vector<Elem>{1, w});
  Matrix k = kronecker(Matrix::identity(f4, 2), d);
  CHECK(k == Matrix::diagonal(f4, std::vector<Elem>{1, w, 1, w}));

  auto f5 = Field::build(5, 1);
  std::mt19937 rng(11);
  for (int t = 0; t < 50; ++t) {
    Matrix a = random_matrix(f5, 2, 2, rng), b = random_matrix(f5, 2, 2, rng);
    Matrix c = random_matrix(f5, 2, 2, rng), e = random_matrix(f5, 2, 2, rng);
    CHECK(multiply(kronecker(a, b), kronecker(c, e)) == kronecker(multiply(a, c), multiply(b, e)));
    Matrix g = random_matrix(f5, 3, 2, rng);
    CHECK(kronecker(kronecker(a, b), g) == kronecker(a, kronecker(b, g)));
  }
  CHECK_THROWS(kronecker(Matrix::identity(f4, 1), Matrix::identity(f5, 1)));

  // e1 (x) e2 in GF(3)^2 (x) GF(3)^2 is e2 of GF(3)^4: digits 0100
  auto f3 = Field::build(3, 1);
  const std::vector<Elem> e1{1, 0}, e2{0, 1};
  const auto t = tensor(*f3, e1, e2);
  CHECK(t == std::vector<Elem>{0, 1, 0, 0});
  CHECK(pack(t, 3) == 9);
}

TEST_CASE("packing is a bijection") {
  for (auto [q, d] : std::vector<std::pair<unsigned, unsigned>>{{4, 10}, {3, 12}, {5, 8}, {2, 20}, {7, 7}}) {
    const std::uint64_t n = *checked_power(q, d);
    REQUIRE(n <= (1u << 20));
    for (PointCode c = 0; c < n; ++c) {
      const auto v = unpack(c, q, d);
      REQUIRE(pack(v, q) == c);
    }
  }
  // beyond 2^20: sampled
  std::mt19937_64 rng(3);
  const std::uint64_t n = *checked_power(13, 9);
  for (int t = 0; t < 10000; ++t) {
    const PointCode c = rng() % n;
    CHECK(pack(unpack(c, 13, 9), 13) == c);
  }
  CHECK(unpack(1, 5, 3) == std::vector<Elem>{0, 0, 1});
  CHECK_FALSE(checked_power(2, 63).has_value());
}

TEST_CASE("row-vector action of matrices") {
  auto f5 = Field::build(5, 1);
  const auto e1 = PackedVector::from_coords(f5, std::vector<Elem>{1, 0, 0});
  CHECK(mat_vec_apply(Matrix::identity(f5, 3), e1).code == e1.code);
  // the cycle (1 2 3) as a permutation matrix sends e1 to e2
  Matrix c = Matrix::permutation(f5, std::vector<unsigned>{1, 2, 0});
  CHECK(mat_vec_apply(c, e1).coords() == std::vector<Elem>{0, 1, 0});

  auto f4 = Field::build(2, 2);
  const Elem w = f4->primitive_element(), w2 = f4->mul(w, w);
  Matrix d = Matrix::diagonal(f4, std::vector<Elem>{1, w, w2});
  const auto ones = PackedVector::from_coords(f4, std::vector<Elem>{1, 1, 1});
  CHECK(mat_vec_apply(d, ones).coords() == std::vector<Elem>{1, w, w2});

  std::mt19937 rng(5);
  for (auto f : {f5, f4, Field::build(3, 2)}) {
    for (int t = 0; t < 100; ++t) {
      Matrix a = random_matrix(f, 3, 3, rng), b = random_matrix(f, 3, 3, rng);
      const PointCode v = rng() % *checked_power(f->order(), 3);
      CHECK(mat_vec_apply(multiply(a, b), v) == mat_vec_apply(b, mat_vec_apply(a, v)));
    }
  }
  CHECK_THROWS(mat_vec_apply(Matrix::identity(f5, 2), e1));
}

TEST_CASE("inverse, rank, kernels") {
  auto f7 = Field::build(7, 1);
  std::mt19937 rng(9);
  int invertible = 0;
  for (int t = 0; t < 100; ++t) {
    Matrix a = random_matrix(f7, 4, 4, rng);
    auto inv = inverse(a);
    CHECK(inv.has_value() == (rank(a) == 4));
    if (inv) {
      ++invertible;
      CHECK(multiply(a, *inv).is_identity());
    } else {
      Matrix k = left_kernel(a);
      CHECK(k.rows == 4 - rank(a));
      CHECK(rank(multiply(k, a)) == 0);
    }
  }
  CHECK(invertible > 50);
  Matrix u = Matrix::from_rows(f7, {{1, 0, 0}, {0, 1, 0}});
  Matrix w = Matrix::from_rows(f7, {{0, 1, 0}, {0, 0, 1}});
  CHECK(subspace_intersection(u, w) == Matrix::from_rows(f7, {{0, 1, 0}}));
  CHECK(subspace_sum(u, w).rows == 3);
  CHECK(subspace_contains(u, std::vector<Elem>{3, 4, 0}));
  CHECK_FALSE(subspace_contains(u, std::vector<Elem>{0, 0, 1}));
}
