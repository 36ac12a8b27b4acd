#include "irrbase/element.hpp"

#include <array>
#include <stdexcept>

namespace irrbase {

namespace {

constexpr unsigned kMaxDim = 64;

std::size_t mix(std::size_t h, std::size_t v) { return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2)); }

std::string cycles_string(const std::vector<std::uint32_t>& images) {
  std::string s;
  std::vector<bool> seen(images.size(), false);
  for (std::uint32_t i = 0; i < images.size(); ++i) {
    if (seen[i] || images[i] == i) continue;
    s += "(";
    std::uint32_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) s += " ";
      s += std::to_string(j + 1);
      first = false;
      j = images[j];
    }
    s += ")";
  }
  return s.empty() ? "()" : s;
}

PointCode apply_matrix(const Matrix& m, PointCode v) {
  const Field& f = *m.field;
  const std::uint32_t q = f.order();
  const unsigned d = m.rows;
  std::array<Elem, kMaxDim> x{};
  std::array<Elem, kMaxDim> y{};
  for (unsigned i = d; i-- > 0;) {
    x[i] = static_cast<Elem>(v % q);
    v /= q;
  }
  for (unsigned i = 0; i < d; ++i) {
    if (x[i] == 0) continue;
    const Elem* row = &m.entries[std::size_t(i) * d];
    if (x[i] == 1) {
      for (unsigned j = 0; j < d; ++j)
        if (row[j]) y[j] = f.add(y[j], row[j]);
    } else {
      for (unsigned j = 0; j < d; ++j)
        if (row[j]) y[j] = f.add(y[j], f.mul(x[i], row[j]));
    }
  }
  PointCode out = 0;
  for (unsigned j = 0; j < d; ++j) out = out * q + y[j];
  return out;
}

}  // namespace

ActionContext ActionContext::vectors(FieldPtr f, unsigned d) {
  const auto n = checked_power(f->order(), d);
  if (!n) throw std::length_error("vector space too large to pack into 62 bits");
  return ActionContext{*n, std::move(f), d};
}

std::string ActionContext::describe_point(PointCode pt) const {
  if (!is_linear()) return std::to_string(pt + 1);
  return PackedVector{field, dimension, pt}.to_string();
}

std::shared_ptr<const SemilinearSpace> SemilinearSpace::build(std::uint32_t q, unsigned d) {
  const auto pk = prime_power(q);
  if (!pk) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
  if (d == 0) throw std::invalid_argument("semilinear dimension must be positive");
  const auto [p, k0] = *pk;
  auto space = std::shared_ptr<SemilinearSpace>(new SemilinearSpace());
  space->d_ = d;
  space->big_ = Field::build(p, k0 * d);
  space->base_ = Field::build(p, k0);
  const Field& big = *space->big_;
  const Field& base = *space->base_;
  const std::uint32_t Q = big.order();

  if (k0 == 1) {
    // Prime base field: coordinates are the polynomial coefficients themselves.
    space->code_to_index_.resize(Q);
    space->index_to_code_.resize(Q);
    for (Elem x = 0; x < Q; ++x) {
      space->code_to_index_[x] = x;
      space->index_to_code_[x] = x;
    }
    return space;
  }

  // Embed GF(q) by sending its generator Y to the least root of its modulus.
  const auto& mod = base.modulus();
  Elem root = 0;
  for (Elem b = 0; b < Q; ++b) {
    Elem acc = 0;
    for (std::size_t i = mod.size(); i-- > 0;) acc = big.add(big.mul(acc, b), big.from_int(mod[i]));
    if (acc == 0) {
      root = b;
      break;
    }
  }
  std::vector<Elem> embed(base.order());
  for (Elem a = 0; a < base.order(); ++a) {
    Elem acc = 0, pw = 1, rest = a;
    for (unsigned i = 0; i < k0; ++i) {
      acc = big.add(acc, big.mul(big.from_int(rest % p), pw));
      rest /= p;
      pw = big.mul(pw, root);
    }
    embed[a] = acc;
  }
  const Elem X = d > 1 ? static_cast<Elem>(p) : 1;
  std::vector<Elem> powers(d);  // powers[i] = X^(d-1-i), the basis vector for coordinate i
  Elem pw = 1;
  for (unsigned i = d; i-- > 0;) {
    powers[i] = pw;
    pw = big.mul(pw, X);
  }
  space->code_to_index_.assign(Q, 0);
  space->index_to_code_.assign(Q, 0);
  for (PointCode code = 0; code < Q; ++code) {
    const auto coords = unpack(code, q, d);
    Elem x = 0;
    for (unsigned i = 0; i < d; ++i) x = big.add(x, big.mul(embed[coords[i]], powers[i]));
    space->code_to_index_[code] = x;
    space->index_to_code_[x] = code;
  }
  return space;
}

GroupElement GroupElement::matrix(Matrix m) {
  if (!m.is_square()) throw std::invalid_argument("group element matrix must be square");
  if (m.rows > kMaxDim) throw std::length_error("matrix dimension above 64");
  if (!inverse(m)) throw std::invalid_argument("group element matrix must be invertible");
  return MatrixElement{std::move(m)};
}

GroupElement GroupElement::semilinear(SemilinearSpacePtr space, Elem alpha, unsigned j) {
  const Field& f = space->big_field();
  if (alpha == 0 || alpha >= f.order()) throw std::invalid_argument("semilinear multiplier must be a nonzero field element");
  j %= f.degree();
  return SemilinearElement{std::move(space), f.frobenius(alpha, j), j};
}

GroupElement GroupElement::wreath(std::vector<GroupElement> components, std::vector<std::uint32_t> top,
                                  std::vector<std::uint64_t> radix) {
  const std::size_t k = components.size();
  if (top.size() != k || radix.size() != k) throw std::invalid_argument("wreath element arity mismatch");
  std::vector<bool> seen(k, false);
  for (auto t : top) {
    if (t >= k || seen[t]) throw std::invalid_argument("wreath top is not a permutation");
    seen[t] = true;
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (components[i].degree() != radix[i]) throw std::invalid_argument("wreath component degree mismatch");
    if (top[i] != i && radix[top[i]] != radix[i]) throw std::invalid_argument("wreath top moves blocks of different sizes");
  }
  return WreathElement{std::move(components), std::move(top), std::move(radix)};
}

GroupElement GroupElement::from_cycles(std::uint32_t n, const std::vector<std::vector<std::uint32_t>>& cycles) {
  std::vector<std::uint32_t> images(n);
  for (std::uint32_t i = 0; i < n; ++i) images[i] = i;
  std::vector<bool> used(n, false);
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      const auto a = c[i], b = c[(i + 1) % c.size()];
      if (a < 1 || a > n || b < 1 || b > n) throw std::invalid_argument("cycle point out of range");
      if (used[a - 1]) throw std::invalid_argument("cycles are not disjoint");
      used[a - 1] = true;
      images[a - 1] = b - 1;
    }
  }
  return perm(std::move(images));
}

PointCode GroupElement::apply(PointCode pt) const {
  switch (v_.index()) {
    case 0:
      return std::get<PermElement>(v_).images[pt];
    case 1:
      return apply_matrix(std::get<MatrixElement>(v_).matrix, pt);
    case 2: {
      const auto& s = std::get<SemilinearElement>(v_);
      const Field& f = s.space->big_field();
      const Elem x = s.space->element_of(pt);
      return s.space->code_of(f.mul(s.coeff, f.frobenius(x, s.frob)));
    }
    default: {
      const auto& w = std::get<WreathElement>(v_);
      const std::size_t k = w.components.size();
      std::array<PointCode, kMaxDim> digits{};
      std::array<PointCode, kMaxDim> out{};
      for (std::size_t i = k; i-- > 0;) {
        digits[i] = pt % w.radix[i];
        pt /= w.radix[i];
      }
      for (std::size_t i = 0; i < k; ++i) out[w.top[i]] = w.components[i].apply(digits[i]);
      PointCode r = 0;
      for (std::size_t i = 0; i < k; ++i) r = r * w.radix[i] + out[i];
      return r;
    }
  }
}

std::uint64_t GroupElement::degree() const {
  switch (v_.index()) {
    case 0:
      return std::get<PermElement>(v_).images.size();
    case 1: {
      const auto& m = std::get<MatrixElement>(v_).matrix;
      return *checked_power(m.field->order(), m.rows);
    }
    case 2:
      return std::get<SemilinearElement>(v_).space->size();
    default: {
      std::uint64_t n = 1;
      for (auto r : std::get<WreathElement>(v_).radix) n *= r;
      return n;
    }
  }
}

bool GroupElement::is_identity() const {
  switch (v_.index()) {
    case 0: {
      const auto& im = std::get<PermElement>(v_).images;
      for (std::uint32_t i = 0; i < im.size(); ++i)
        if (im[i] != i) return false;
      return true;
    }
    case 1:
      return std::get<MatrixElement>(v_).matrix.is_identity();
    case 2: {
      const auto& s = std::get<SemilinearElement>(v_);
      return s.coeff == 1 && s.frob == 0;
    }
    default: {
      const auto& w = std::get<WreathElement>(v_);
      for (std::uint32_t i = 0; i < w.top.size(); ++i)
        if (w.top[i] != i || !w.components[i].is_identity()) return false;
      return true;
    }
  }
}

bool GroupElement::operator==(const GroupElement& other) const {
  if (v_.index() != other.v_.index()) return false;
  switch (v_.index()) {
    case 0:
      return std::get<PermElement>(v_).images == std::get<PermElement>(other.v_).images;
    case 1:
      return std::get<MatrixElement>(v_).matrix == std::get<MatrixElement>(other.v_).matrix;
    case 2: {
      const auto& a = std::get<SemilinearElement>(v_);
      const auto& b = std::get<SemilinearElement>(other.v_);
      return a.space == b.space && a.coeff == b.coeff && a.frob == b.frob;
    }
    default: {
      const auto& a = std::get<WreathElement>(v_);
      const auto& b = std::get<WreathElement>(other.v_);
      return a.top == b.top && a.radix == b.radix && a.components == b.components;
    }
  }
}

std::size_t GroupElement::hash() const {
  std::size_t h = v_.index();
  switch (v_.index()) {
    case 0:
      for (auto x : std::get<PermElement>(v_).images) h = mix(h, x);
      break;
    case 1:
      for (auto x : std::get<MatrixElement>(v_).matrix.entries) h = mix(h, x);
      break;
    case 2: {
      const auto& s = std::get<SemilinearElement>(v_);
      h = mix(mix(h, s.coeff), s.frob);
      break;
    }
    default: {
      const auto& w = std::get<WreathElement>(v_);
      for (auto t : w.top) h = mix(h, t);
      for (const auto& c : w.components) h = mix(h, c.hash());
    }
  }
  return h;
}

std::string GroupElement::to_string() const {
  switch (v_.index()) {
    case 0:
      return cycles_string(std::get<PermElement>(v_).images);
    case 1:
      return std::get<MatrixElement>(v_).matrix.to_string();
    case 2: {
      const auto& s = std::get<SemilinearElement>(v_);
      const Field& f = s.space->big_field();
      std::string r = "x -> " + f.to_string(s.coeff) + "*x";
      if (s.frob) r += "^(" + std::to_string(f.characteristic()) + "^" + std::to_string(s.frob) + ")";
      return r;
    }
    default: {
      const auto& w = std::get<WreathElement>(v_);
      std::string r = "[";
      for (std::size_t i = 0; i < w.components.size(); ++i) {
        if (i) r += "; ";
        r += w.components[i].to_string();
      }
      return r + "] " + cycles_string(w.top);
    }
  }
}

GroupElement compose(const GroupElement& a, const GroupElement& b) {
  if (a.kind() != b.kind()) throw std::invalid_argument("composing elements of different kinds");
  switch (a.kind()) {
    case ElementKind::Perm: {
      const auto& x = a.as<PermElement>().images;
      const auto& y = b.as<PermElement>().images;
      if (x.size() != y.size()) throw std::invalid_argument("composing permutations of different degree");
      std::vector<std::uint32_t> z(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) z[i] = y[x[i]];
      return GroupElement::perm(std::move(z));
    }
    case ElementKind::Matrix:
      return MatrixElement{multiply(a.as<MatrixElement>().matrix, b.as<MatrixElement>().matrix)};
    case ElementKind::Semilinear: {
      const auto& x = a.as<SemilinearElement>();
      const auto& y = b.as<SemilinearElement>();
      if (x.space != y.space) throw std::invalid_argument("composing semilinear maps of different spaces");
      const Field& f = x.space->big_field();
      return SemilinearElement{x.space, f.mul(y.coeff, f.frobenius(x.coeff, y.frob)), (x.frob + y.frob) % f.degree()};
    }
    case ElementKind::Wreath: {
      const auto& x = a.as<WreathElement>();
      const auto& y = b.as<WreathElement>();
      if (x.radix != y.radix) throw std::invalid_argument("composing wreath elements of different shape");
      const std::size_t k = x.top.size();
      WreathElement z;
      z.radix = x.radix;
      z.top.resize(k);
      z.components.reserve(k);
      for (std::size_t i = 0; i < k; ++i) {
        z.components.push_back(compose(x.components[i], y.components[x.top[i]]));
        z.top[i] = y.top[x.top[i]];
      }
      return z;
    }
  }
  throw std::logic_error("unreachable");
}

GroupElement inverse(const GroupElement& g) {
  switch (g.kind()) {
    case ElementKind::Perm: {
      const auto& x = g.as<PermElement>().images;
      std::vector<std::uint32_t> z(x.size());
      for (std::uint32_t i = 0; i < x.size(); ++i) z[x[i]] = i;
      return GroupElement::perm(std::move(z));
    }
    case ElementKind::Matrix:
      return MatrixElement{*inverse(g.as<MatrixElement>().matrix)};
    case ElementKind::Semilinear: {
      const auto& s = g.as<SemilinearElement>();
      const Field& f = s.space->big_field();
      const unsigned back = (f.degree() - s.frob) % f.degree();
      return SemilinearElement{s.space, f.frobenius(f.inv(s.coeff), back), back};
    }
    case ElementKind::Wreath: {
      const auto& w = g.as<WreathElement>();
      const std::size_t k = w.top.size();
      WreathElement z;
      z.radix = w.radix;
      z.top.resize(k);
      z.components.resize(k);
      for (std::size_t i = 0; i < k; ++i) {
        z.components[w.top[i]] = inverse(w.components[i]);
        z.top[w.top[i]] = static_cast<std::uint32_t>(i);
      }
      return z;
    }
  }
  throw std::logic_error("unreachable");
}

GroupElement identity_like(const GroupElement& g) {
  switch (g.kind()) {
    case ElementKind::Perm: {
      std::vector<std::uint32_t> z(g.as<PermElement>().images.size());
      for (std::uint32_t i = 0; i < z.size(); ++i) z[i] = i;
      return GroupElement::perm(std::move(z));
    }
    case ElementKind::Matrix: {
      const auto& m = g.as<MatrixElement>().matrix;
      return MatrixElement{Matrix::identity(m.field, m.rows)};
    }
    case ElementKind::Semilinear:
      return SemilinearElement{g.as<SemilinearElement>().space, 1, 0};
    case ElementKind::Wreath: {
      const auto& w = g.as<WreathElement>();
      WreathElement z;
      z.radix = w.radix;
      for (std::uint32_t i = 0; i < w.top.size(); ++i) {
        z.components.push_back(identity_like(w.components[i]));
        z.top.push_back(i);
      }
      return z;
    }
  }
  throw std::logic_error("unreachable");
}

GroupElement power(const GroupElement& g, std::uint64_t e) {
  GroupElement result = identity_like(g);
  GroupElement base = g;
  while (e) {
    if (e & 1) result = compose(result, base);
    e >>= 1;
    if (e) base = compose(base, base);
  }
  return result;
}

PointCode apply(const GroupElement& g, PointCode pt, const ActionContext& ctx) {
  if (g.degree() != ctx.degree) throw std::invalid_argument("element does not act on this domain");
  if (pt >= ctx.degree) throw std::out_of_range("point outside the domain");
  return g.apply(pt);
}

GroupElement to_permutation(const GroupElement& g, std::uint64_t degree, std::uint64_t limit) {
  if (degree > limit) throw std::length_error("refusing to expand an action of degree " + std::to_string(degree));
  if (g.kind() == ElementKind::Perm) return g;
  std::vector<std::uint32_t> images(degree);
  for (std::uint64_t i = 0; i < degree; ++i) images[i] = static_cast<std::uint32_t>(g.apply(i));
  return GroupElement::perm(std::move(images));
}

}  // namespace irrbase
