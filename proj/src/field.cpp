#include "irrbase/field.hpp"

#include <algorithm>
#include <stdexcept>

namespace irrbase {

namespace {

using Poly = std::vector<unsigned>;  // coefficients low to high, over GF(p)

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of f modulo a monic g.
Poly poly_mod(Poly f, const Poly& g, unsigned p) {
  trim(f);
  const std::size_t dg = g.size() - 1;
  while (f.size() > dg) {
    const unsigned lead = f.back();
    const std::size_t shift = f.size() - 1 - dg;
    for (std::size_t i = 0; i <= dg; ++i) {
      f[shift + i] = (f[shift + i] + p - (lead * g[i]) % p) % p;
    }
    trim(f);
  }
  return f;
}

Poly unpack_poly(std::uint64_t code, unsigned p, unsigned len) {
  Poly f(len);
  for (unsigned i = 0; i < len; ++i) {
    f[i] = static_cast<unsigned>(code % p);
    code /= p;
  }
  return f;
}

bool is_irreducible(const Poly& f, unsigned p) {
  const unsigned n = static_cast<unsigned>(f.size() - 1);
  if (n == 1) return true;
  for (unsigned deg = 1; deg <= n / 2; ++deg) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < deg; ++i) count *= p;
    for (std::uint64_t c = 0; c < count; ++c) {
      Poly g = unpack_poly(c, p, deg);
      g.push_back(1);
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::optional<std::pair<unsigned, unsigned>> prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  std::uint64_t p = 2;
  while (p * p <= q && q % p != 0) ++p;
  if (q % p != 0) p = q;
  unsigned k = 0;
  while (q % p == 0) {
    q /= p;
    ++k;
  }
  if (q != 1) return std::nullopt;
  return std::make_pair(static_cast<unsigned>(p), k);
}

std::vector<std::uint64_t> factorize(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    while (n % d == 0) {
      out.push_back(d);
      n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::shared_ptr<const Field> Field::build(unsigned p, unsigned k) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
  if (k == 0) throw std::invalid_argument("field degree must be positive");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxFieldOrder) throw std::length_error("field order exceeds 2^16");
  }
  for (std::uint64_t c = 0; c < q; ++c) {
    Poly f = unpack_poly(c, p, k);
    f.push_back(1);
    if (is_irreducible(f, p)) return std::shared_ptr<const Field>(new Field(p, k, std::move(f)));
  }
  throw std::logic_error("no irreducible polynomial found");
}

std::shared_ptr<const Field> Field::with_modulus(unsigned p, std::vector<unsigned> modulus) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
  if (modulus.size() < 2 || modulus.back() != 1) throw std::invalid_argument("modulus must be monic of degree >= 1");
  for (unsigned c : modulus) {
    if (c >= p) throw std::invalid_argument("modulus coefficient out of range");
  }
  const unsigned k = static_cast<unsigned>(modulus.size() - 1);
  std::uint64_t q = 1;
  for (unsigned i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxFieldOrder) throw std::length_error("field order exceeds 2^16");
  }
  if (!is_irreducible(modulus, p)) throw std::invalid_argument("modulus is reducible");
  return std::shared_ptr<const Field>(new Field(p, k, std::move(modulus)));
}

Field::Field(unsigned p, unsigned k, std::vector<unsigned> modulus)
    : p_(p), k_(k), q_(1), modulus_(std::move(modulus)) {
  for (unsigned i = 0; i < k_; ++i) q_ *= p_;

  neg_.resize(q_);
  for (Elem a = 0; a < q_; ++a) {
    Elem r = 0, place = 1, x = a;
    for (unsigned i = 0; i < k_; ++i) {
      r += ((p_ - x % p_) % p_) * place;
      x /= p_;
      place *= p_;
    }
    neg_[a] = r;
  }

  full_tables_ = q_ <= 256;
  if (full_tables_) {
    mul_table_.resize(static_cast<std::size_t>(q_) * q_);
    add_table_.resize(static_cast<std::size_t>(q_) * q_);
    for (Elem a = 0; a < q_; ++a) {
      for (Elem b = a; b < q_; ++b) {
        const auto m = static_cast<std::uint16_t>(slow_mul(a, b));
        const auto s = static_cast<std::uint16_t>(digit_add(a, b));
        mul_table_[a * q_ + b] = mul_table_[b * q_ + a] = m;
        add_table_[a * q_ + b] = add_table_[b * q_ + a] = s;
      }
    }
  }

  // Canonical primitive element.
  const auto factors = factorize(q_ - 1);
  auto slow_pow = [&](Elem a, std::uint64_t e) {
    Elem r = 1;
    while (e) {
      if (e & 1) r = slow_mul(r, a);
      a = slow_mul(a, a);
      e >>= 1;
    }
    return r;
  };
  primitive_ = 1;
  if (q_ > 2) {
    for (Elem g = 2; g < q_; ++g) {
      bool ok = true;
      for (auto f : factors) {
        if (slow_pow(g, (q_ - 1) / f) == 1) {
          ok = false;
          break;
        }
      }
      if (ok) {
        primitive_ = g;
        break;
      }
    }
  }

  log_.assign(q_, 0);
  exp_.assign(q_, 0);
  {
    Elem x = 1;
    for (std::uint32_t i = 0; i + 1 < q_; ++i) {
      exp_[i] = x;
      log_[x] = i;
      x = slow_mul(x, primitive_);
    }
  }
  inv_.assign(q_, 0);
  for (Elem a = 1; a < q_; ++a) inv_[a] = exp_[(q_ - 1 - log_[a]) % (q_ - 1)];

  frob_.resize(q_);
  for (Elem a = 0; a < q_; ++a) frob_[a] = slow_pow(a, p_);
}

Elem Field::digit_add(Elem a, Elem b) const {
  if (p_ == 2) return a ^ b;
  Elem r = 0, place = 1;
  for (unsigned i = 0; i < k_; ++i) {
    r += ((a % p_ + b % p_) % p_) * place;
    a /= p_;
    b /= p_;
    place *= p_;
  }
  return r;
}

Elem Field::slow_mul(Elem a, Elem b) const {
  const Poly fa = unpack_poly(a, p_, k_);
  const Poly fb = unpack_poly(b, p_, k_);
  Poly prod(2 * k_, 0);
  for (unsigned i = 0; i < k_; ++i) {
    if (fa[i] == 0) continue;
    for (unsigned j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + fa[i] * fb[j]) % p_;
  }
  const Poly r = poly_mod(prod, modulus_, p_);
  Elem code = 0;
  for (std::size_t i = r.size(); i-- > 0;) code = code * p_ + r[i];
  return code;
}

Elem Field::add(Elem a, Elem b) const {
  if (full_tables_) return add_table_[a * q_ + b];
  return digit_add(a, b);
}

Elem Field::mul(Elem a, Elem b) const {
  if (full_tables_) return mul_table_[a * q_ + b];
  if (a == 0 || b == 0) return 0;
  return exp_[(log_[a] + log_[b]) % (q_ - 1)];
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  return inv_[a];
}

Elem Field::pow(Elem a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  return exp_[static_cast<std::uint32_t>((static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1))) % (q_ - 1))];
}

Elem Field::frobenius(Elem x, unsigned e) const {
  e %= k_;
  for (unsigned i = 0; i < e; ++i) x = frob_[x];
  return x;
}

std::uint64_t Field::multiplicative_order(Elem a) const {
  if (a == 0) throw std::domain_error("zero has no multiplicative order");
  std::uint64_t n = q_ - 1;
  for (auto f : factorize(q_ - 1)) {
    if (pow(a, n / f) == 1) n /= f;
  }
  return n;
}

Elem Field::from_int(long long v) const {
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return static_cast<Elem>(r);
}

std::string Field::to_string(Elem x) const {
  if (k_ == 1) return std::to_string(x);
  if (x == 0) return "0";
  // Powers of the canonical primitive element read better than packed codes.
  const auto l = log_[x];
  if (l == 0) return "1";
  if (l == 1) return "w";
  return "w" + std::to_string(l);
}

Elem primitive_root_of_unity(const Field& field, unsigned r) {
  const std::uint32_t n = field.order() - 1;
  if (r == 0 || n % r != 0) {
    throw std::invalid_argument(std::to_string(r) + " does not divide q-1 = " + std::to_string(n));
  }
  return field.pow(field.primitive_element(), n / r);
}

std::pair<Elem, Elem> find_sum_of_squares(const Field& field) {
  const Elem minus_one = field.neg(1);
  for (Elem a = 0; a < field.order(); ++a) {
    const Elem a2 = field.mul(a, a);
    for (Elem b = 0; b < field.order(); ++b) {
      if (field.add(a2, field.mul(b, b)) == minus_one) return {a, b};
    }
  }
  throw std::logic_error("no solution to a^2 + b^2 = -1");
}

}  // namespace irrbase
