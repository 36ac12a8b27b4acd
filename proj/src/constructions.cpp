#include "irrbase/constructions.hpp"

#include <algorithm>

#include "irrbase/enumerate.hpp"

namespace irrbase {

namespace {

unsigned upow(unsigned b, unsigned e) {
  unsigned r = 1;
  while (e--) r *= b;
  return r;
}

Matrix kron_positioned(const FieldPtr& f, unsigned left, const Matrix& g, unsigned right) {
  return kronecker(kronecker(Matrix::identity(f, left), g), Matrix::identity(f, right));
}

GroupElement commutator(const GroupElement& a, const GroupElement& b) {
  return compose(compose(inverse(a), inverse(b)), compose(a, b));
}

bool is_scalar_of_order(const Matrix& m, unsigned order) {
  const Field& f = *m.field;
  const Elem s = m.at(0, 0);
  for (unsigned i = 0; i < m.rows; ++i)
    for (unsigned j = 0; j < m.cols; ++j)
      if (m.at(i, j) != (i == j ? s : 0)) return false;
  return s != 0 && f.multiplicative_order(s) == order;
}

std::uint64_t element_order(const GroupElement& g) {
  std::uint64_t n = 1;
  GroupElement x = g;
  while (!x.is_identity()) {
    x = compose(x, g);
    ++n;
  }
  return n;
}

FieldPtr field_for(std::uint32_t q) {
  const auto pk = prime_power(q);
  if (!pk) throw PreconditionError(std::to_string(q) + " is not a prime power");
  if (q > kMaxFieldOrder) throw PreconditionError("field order " + std::to_string(q) + " above 2^16");
  return Field::build(pk->first, pk->second);
}

std::string variant_char(Variant v) {
  switch (v) {
    case Variant::Plus:
      return "+";
    case Variant::Minus:
      return "-";
    case Variant::Symplectic:
      return "s";
  }
  return "?";
}

PointCode unit_code(std::uint32_t q, unsigned d, unsigned position) {
  return *checked_power(q, d - 1 - position);
}

std::vector<GroupElement> identity_components(const GroupElement& sample, std::size_t k) {
  return std::vector<GroupElement>(k, identity_like(sample));
}

std::vector<std::uint32_t> identity_top(std::size_t k) {
  std::vector<std::uint32_t> t(k);
  for (std::uint32_t i = 0; i < k; ++i) t[i] = i;
  return t;
}

}  // namespace

// ---------------------------------------------------------------------------
// Extraspecial-type groups

unsigned ExtraspecialSpec::dimension() const { return upow(r, m); }

BigInt ExtraspecialSpec::order() const {
  if (variant == Variant::Symplectic) return ipow(BigInt(2), 2 + 2 * m);
  return ipow(BigInt(r), 1 + 2 * m);
}

std::string ExtraspecialSpec::to_string() const {
  return "E(" + std::to_string(r) + "," + std::to_string(m) + "," + std::to_string(q) + "," + variant_char(variant) +
         ")";
}

void validate(const ExtraspecialSpec& s) {
  if (!is_prime(s.r)) throw PreconditionError(s.to_string() + ": r = " + std::to_string(s.r) + " is not prime");
  if (s.m < 1) throw PreconditionError(s.to_string() + ": m must be at least 1");
  field_for(s.q);
  if ((s.q - 1) % s.r != 0)
    throw PreconditionError(s.to_string() + ": r must divide q-1 for the group to exist in GL_{r^m}(q), but " +
                            std::to_string(s.r) + " does not divide " + std::to_string(s.q - 1));
  if (s.variant == Variant::Minus && s.r != 2)
    throw PreconditionError(s.to_string() + ": the minus type requires r = 2 (odd r uses exponent r, the plus type)");
  if (s.variant == Variant::Symplectic && s.r != 2)
    throw PreconditionError(s.to_string() + ": the symplectic type requires r = 2");
  if (s.variant == Variant::Symplectic && (s.q - 1) % 4 != 0)
    throw PreconditionError(s.to_string() + ": the symplectic type requires 4 to divide q-1");
  unsigned d = 1;
  for (unsigned i = 0; i < s.m; ++i) {
    d *= s.r;
    if (d > 64) throw PreconditionError(s.to_string() + ": dimension r^m above 64");
  }
  if (!checked_power(s.q, d)) throw PreconditionError(s.to_string() + ": q^(r^m) does not fit in a point code");
}

ExtraspecialMatrices extraspecial_matrices(const ExtraspecialSpec& s) {
  validate(s);
  ExtraspecialMatrices out;
  out.field = field_for(s.q);
  const FieldPtr& f = out.field;
  const unsigned r = s.r, m = s.m;
  out.dim = upow(r, m);
  out.omega = primitive_root_of_unity(*f, r);
  std::vector<Elem> diag(r);
  std::vector<unsigned> cycle(r);
  for (unsigned i = 0; i < r; ++i) {
    diag[i] = f->pow(out.omega, i);
    cycle[i] = (i + 1) % r;
  }
  const Matrix x = Matrix::diagonal(f, diag);
  const Matrix y = Matrix::permutation(f, cycle);
  for (unsigned i = 1; i <= m; ++i) {
    out.x.push_back(kron_positioned(f, upow(r, m - i), x, upow(r, i - 1)));
    out.y.push_back(kron_positioned(f, upow(r, m - i), y, upow(r, i - 1)));
  }
  if (r == 2) {
    const auto [alpha, beta] = find_sum_of_squares(*f);
    const Matrix a = Matrix::from_rows(f, {{alpha, beta}, {beta, f->neg(alpha)}});
    const Matrix b = Matrix::from_rows(f, {{0, f->neg(1)}, {1, 0}});
    out.x1p = kron_positioned(f, upow(2, m - 1), a, 1);
    out.y1p = kron_positioned(f, upow(2, m - 1), b, 1);
  }
  if ((s.q - 1) % 4 == 0) {
    const Elem zeta = f->pow(f->primitive_element(), (s.q - 1) / 4);
    out.z = scale(Matrix::identity(f, out.dim), zeta);
  }
  return out;
}

std::vector<Matrix> extraspecial_generators(const ExtraspecialSpec& s) {
  auto mats = extraspecial_matrices(s);
  std::vector<Matrix> gens;
  if (s.variant == Variant::Minus) {
    gens.push_back(*mats.x1p);
    for (unsigned i = 1; i < s.m; ++i) gens.push_back(mats.x[i]);
    gens.push_back(*mats.y1p);
    for (unsigned i = 1; i < s.m; ++i) gens.push_back(mats.y[i]);
  } else {
    gens = mats.x;
    gens.insert(gens.end(), mats.y.begin(), mats.y.end());
    if (s.variant == Variant::Symplectic) gens.push_back(*mats.z);
  }
  return gens;
}

GroupHandle build_extraspecial(const ExtraspecialSpec& s) {
  std::vector<GroupElement> gens;
  for (auto& m : extraspecial_generators(s)) gens.push_back(GroupElement::matrix(std::move(m)));
  GroupHandle g(ActionContext::vectors(field_for(s.q), s.dimension()), std::move(gens), s.to_string());
  g.with_order(s.order());
  return g;
}

std::vector<RelationCheck> check_extraspecial_relations(const ExtraspecialSpec& s) {
  const auto mats = extraspecial_matrices(s);
  std::vector<RelationCheck> out;
  auto el = [](const Matrix& m) { return GroupElement::matrix(m); };
  auto add = [&](std::string what, bool ok) { out.push_back({std::move(what), ok}); };
  const unsigned r = s.r;

  // <x_i, y_i> is r_+^{1+2}
  for (unsigned i = 0; i < s.m; ++i) {
    const std::string xi = "x" + std::to_string(i + 1), yi = "y" + std::to_string(i + 1);
    const auto elements = enumerate_elements({el(mats.x[i]), el(mats.y[i])});
    const bool order_ok = elements && elements->size() == std::size_t(r) * r * r;
    add("|<" + xi + "," + yi + ">| = " + std::to_string(r * r * r), order_ok);
    const auto c = commutator(el(mats.x[i]), el(mats.y[i]));
    add("[" + xi + "," + yi + "] is a central scalar of order " + std::to_string(r),
        is_scalar_of_order(c.as<MatrixElement>().matrix, r));
    if (order_ok) {
      std::size_t involutions = 0;
      bool exponent_r = true;
      for (const auto& g : *elements) {
        const auto o = element_order(g);
        involutions += o == 2;
        if (o != 1 && o != r) exponent_r = false;
      }
      if (r == 2)
        add("<" + xi + "," + yi + "> is dihedral of order 8 (five involutions)", involutions == 5);
      else
        add("<" + xi + "," + yi + "> has exponent " + std::to_string(r), exponent_r);
    }
  }
  // cross commutators
  for (unsigned i = 0; i < s.m; ++i)
    for (unsigned j = 0; j < s.m; ++j) {
      if (i == j) continue;
      const std::string a = std::to_string(i + 1), b = std::to_string(j + 1);
      if (i < j) {
        add("[x" + a + ",x" + b + "] = 1", commutator(el(mats.x[i]), el(mats.x[j])).is_identity());
        add("[y" + a + ",y" + b + "] = 1", commutator(el(mats.y[i]), el(mats.y[j])).is_identity());
      }
      add("[x" + a + ",y" + b + "] = 1", commutator(el(mats.x[i]), el(mats.y[j])).is_identity());
    }
  if (s.variant == Variant::Minus) {
    const auto xp = el(*mats.x1p), yp = el(*mats.y1p);
    const auto elements = enumerate_elements({xp, yp});
    std::size_t involutions = 0;
    if (elements)
      for (const auto& g : *elements) involutions += element_order(g) == 2;
    add("<x1',y1'> is quaternion of order 8 (one involution)", elements && elements->size() == 8 && involutions == 1);
    for (unsigned i = 1; i < s.m; ++i) {
      const std::string n = std::to_string(i + 1);
      add("[x1',x" + n + "] = 1", commutator(xp, el(mats.x[i])).is_identity());
      add("[y1',x" + n + "] = 1", commutator(yp, el(mats.x[i])).is_identity());
      add("[x1',y" + n + "] = 1", commutator(xp, el(mats.y[i])).is_identity());
      add("[y1',y" + n + "] = 1", commutator(yp, el(mats.y[i])).is_identity());
    }
  }
  if (s.variant == Variant::Symplectic) add("z is a scalar of order 4", is_scalar_of_order(*mats.z, 4));

  // the group generated has the stated order
  GroupHandle g = build_extraspecial(s);
  std::vector<GroupElement> gens = g.generators();
  const auto all = enumerate_elements(gens);
  const BigInt computed = all ? BigInt(all->size()) : [&] {
    GroupHandle plain(g.context(), gens);
    return plain.order();
  }();
  add("|E| = " + to_string(s.order()), computed == s.order());
  return out;
}

GroupHandle build_tensor_product(const std::vector<ExtraspecialSpec>& specs) {
  if (specs.empty()) throw PreconditionError("tensor product of no factors");
  for (std::size_t i = 0; i < specs.size(); ++i) {
    validate(specs[i]);
    if (specs[i].q != specs[0].q)
      throw PreconditionError("tensor factors must share one field: " + specs[0].to_string() + " and " +
                              specs[i].to_string());
    for (std::size_t j = 0; j < i; ++j)
      if (specs[i].r == specs[j].r)
        throw PreconditionError("tensor factors must have distinct primes r: " + specs[j].to_string() + " and " +
                                specs[i].to_string());
  }
  if (specs.size() == 1) return build_extraspecial(specs[0]);
  const FieldPtr f = field_for(specs[0].q);
  unsigned total = 1;
  for (const auto& s : specs) {
    total *= s.dimension();
    if (total > 64) throw PreconditionError("tensor product dimension above 64");
  }
  if (!checked_power(specs[0].q, total)) throw PreconditionError("tensor product space does not fit in a point code");
  std::vector<GroupElement> gens;
  std::string label;
  BigInt formula = 1;
  unsigned left = 1;
  for (const auto& s : specs) {
    const unsigned right = total / (left * s.dimension());
    for (const auto& g : extraspecial_generators(s)) gens.push_back(GroupElement::matrix(kron_positioned(f, left, g, right)));
    left *= s.dimension();
    label += (label.empty() ? "" : " (x) ") + s.to_string();
    formula *= s.order();
  }
  GroupHandle t(ActionContext::vectors(f, total), gens, label);
  // (a, b) -> a (x) b is injective here: a scalar pair (c, 1/c) would need
  // c of order dividing two coprime prime powers. Still, count when small.
  if (formula <= kEnumerationLimit) {
    const auto all = enumerate_elements(gens);
    if (!all) throw std::logic_error("tensor product larger than its factors allow");
    t.with_order(BigInt(all->size()));
    if (t.declared_order() != formula) throw std::logic_error("tensor product order differs from the product of factor orders");
  } else {
    t.with_order(formula);
  }
  return t;
}

// ---------------------------------------------------------------------------
// Other families

GroupHandle build_gl1(std::uint32_t q) {
  const FieldPtr f = field_for(q);
  const Elem z = f->primitive_element();
  GroupHandle g(ActionContext::vectors(f, 1), {GroupElement::matrix(Matrix::diagonal(f, std::vector<Elem>{z}))},
                "GL(1," + std::to_string(q) + ")");
  g.with_order(q - 1);
  return g;
}

GroupHandle build_semilinear(std::uint32_t q, unsigned d) {
  field_for(q);
  const auto size = checked_power(q, d);
  if (d == 0 || !size || *size > kMaxFieldOrder)
    throw PreconditionError("GammaL(1," + std::to_string(q) + "^" + std::to_string(d) + "): q^d must be at most 2^16");
  auto space = SemilinearSpace::build(q, d);
  std::vector<GroupElement> gens{GroupElement::semilinear(space, space->big_field().primitive_element(), 0)};
  if (d > 1) gens.push_back(GroupElement::semilinear(space, 1, space->base_degree()));
  GroupHandle g(ActionContext::vectors(space->base_field(), d), std::move(gens),
                "GammaL(1," + std::to_string(q) + "^" + std::to_string(d) + ")");
  g.with_order(BigInt(d) * (*size - 1));
  return g;
}

GroupHandle build_semilinear_odd(std::uint32_t q, unsigned d) {
  field_for(q);
  const auto size = checked_power(q, d);
  if (d == 0 || !size || *size > kMaxFieldOrder)
    throw PreconditionError("GammaL(1," + std::to_string(q) + "^" + std::to_string(d) + "): q^d must be at most 2^16");
  auto space = SemilinearSpace::build(q, d);
  std::uint64_t two = 1, gal_two = 1;
  while ((*size - 1) % (two * 2) == 0) two *= 2;
  while (d % (gal_two * 2) == 0) gal_two *= 2;
  const Field& big = space->big_field();
  std::vector<GroupElement> gens{GroupElement::semilinear(space, big.pow(big.primitive_element(), two), 0)};
  if (d / gal_two > 1) gens.push_back(GroupElement::semilinear(space, 1, space->base_degree() * gal_two));
  GroupHandle g(ActionContext::vectors(space->base_field(), d), std::move(gens),
                "GammaL(1," + std::to_string(q) + "^" + std::to_string(d) + ")_odd");
  g.with_order(BigInt((*size - 1) / two) * (d / gal_two));
  return g;
}

GroupHandle build_symmetric(unsigned k) {
  if (k < 1 || k > kExpandLimit) throw PreconditionError("Sym(k) needs 1 <= k <= 65536");
  std::vector<GroupElement> gens;
  if (k == 1) {
    gens.push_back(GroupElement::from_cycles(1, {}));
  } else {
    gens.push_back(GroupElement::from_cycles(k, {{1, 2}}));
    if (k > 2) {
      std::vector<std::uint32_t> c(k);
      for (unsigned i = 0; i < k; ++i) c[i] = i + 1;
      gens.push_back(GroupElement::from_cycles(k, {c}));
    }
  }
  GroupHandle g(ActionContext::points(k), std::move(gens), "Sym(" + std::to_string(k) + ")");
  g.with_order(factorial(k));
  return g;
}

GroupHandle build_cyclic(unsigned k) {
  if (k < 1 || k > kExpandLimit) throw PreconditionError("Cyc(k) needs 1 <= k <= 65536");
  std::vector<std::uint32_t> c(k);
  for (unsigned i = 0; i < k; ++i) c[i] = i + 1;
  std::vector<std::vector<std::uint32_t>> cycles;
  if (k > 1) cycles.push_back(c);
  GroupHandle g(ActionContext::points(k), {GroupElement::from_cycles(k, cycles)}, "Cyc(" + std::to_string(k) + ")");
  g.with_order(k);
  return g;
}

GroupHandle build_wreath(const GroupHandle& l, const GroupHandle& t) {
  if (t.context().is_linear()) throw PreconditionError("the top group of a wreath product must be a permutation group");
  const std::uint64_t k = t.degree();
  const auto& tops = t.action_generators();
  const std::string label = "(" + l.label() + ") wr (" + t.label() + ")";
  const BigInt order = ipow(l.order(), static_cast<unsigned>(k)) * t.order();

  if (!l.context().is_linear()) {
    // imprimitive permutation action on n*k points, block b = {b*n, ..., b*n+n-1}
    const std::uint64_t n = l.degree();
    if (n * k > kExpandLimit) throw PreconditionError("permutation wreath product above 65536 points");
    std::vector<GroupElement> gens;
    for (const auto& s : l.action_generators()) {
      std::vector<std::uint32_t> img(n * k);
      for (std::uint32_t i = 0; i < n * k; ++i) img[i] = i < n ? static_cast<std::uint32_t>(s.apply(i)) : i;
      gens.push_back(GroupElement::perm(std::move(img)));
    }
    for (const auto& s : tops) {
      std::vector<std::uint32_t> img(n * k);
      for (std::uint32_t i = 0; i < n * k; ++i)
        img[i] = static_cast<std::uint32_t>(s.apply(i / n) * n + i % n);
      gens.push_back(GroupElement::perm(std::move(img)));
    }
    GroupHandle g(ActionContext::points(n * k), std::move(gens), label);
    g.with_order(order);
    return g;
  }

  const auto& ctx = l.context();
  const unsigned dim = static_cast<unsigned>(ctx.dimension * k);
  if (k > 64 || !checked_power(ctx.field->order(), dim))
    throw PreconditionError("wreath product space GF(" + std::to_string(ctx.field->order()) + ")^" + std::to_string(dim) +
                            " does not fit in a point code");
  const std::vector<std::uint64_t> radix(k, l.degree());
  std::vector<GroupElement> gens;
  for (const auto& s : l.generators()) {
    auto comps = identity_components(s, k);
    comps[0] = s;
    gens.push_back(GroupElement::wreath(std::move(comps), identity_top(k), radix));
  }
  const auto id = identity_like(l.generators().front());
  for (const auto& s : tops) {
    std::vector<std::uint32_t> top(k);
    for (std::uint32_t i = 0; i < k; ++i) top[i] = static_cast<std::uint32_t>(s.apply(i));
    gens.push_back(GroupElement::wreath(identity_components(id, k), std::move(top), radix));
  }
  GroupHandle g(ActionContext::vectors(ctx.field, dim), std::move(gens), label);
  g.with_order(order);
  return g;
}

GroupHandle build_direct_product(const GroupHandle& a, const GroupHandle& b) {
  const std::string label = "(" + a.label() + ") x (" + b.label() + ")";
  const BigInt order = a.order() * b.order();
  if (a.context().is_linear() != b.context().is_linear())
    throw PreconditionError("direct product of a linear and a permutation group");
  if (!a.context().is_linear()) {
    const std::uint64_t n = a.degree(), m = b.degree();
    if (n + m > kExpandLimit) throw PreconditionError("direct product above 65536 points");
    std::vector<GroupElement> gens;
    for (const auto& s : a.action_generators()) {
      std::vector<std::uint32_t> img(n + m);
      for (std::uint32_t i = 0; i < n + m; ++i) img[i] = i < n ? static_cast<std::uint32_t>(s.apply(i)) : i;
      gens.push_back(GroupElement::perm(std::move(img)));
    }
    for (const auto& s : b.action_generators()) {
      std::vector<std::uint32_t> img(n + m);
      for (std::uint32_t i = 0; i < n + m; ++i) img[i] = i < n ? i : static_cast<std::uint32_t>(n + s.apply(i - n));
      gens.push_back(GroupElement::perm(std::move(img)));
    }
    GroupHandle g(ActionContext::points(n + m), std::move(gens), label);
    g.with_order(order);
    return g;
  }
  if (!same_field(a.context().field, b.context().field))
    throw PreconditionError("direct product factors must act over the same field");
  const unsigned dim = a.context().dimension + b.context().dimension;
  if (!checked_power(a.context().field->order(), dim)) throw PreconditionError("direct product space too large");
  const std::vector<std::uint64_t> radix{a.degree(), b.degree()};
  const auto ida = identity_like(a.generators().front()), idb = identity_like(b.generators().front());
  std::vector<GroupElement> gens;
  for (const auto& s : a.generators()) gens.push_back(GroupElement::wreath({s, idb}, {0, 1}, radix));
  for (const auto& s : b.generators()) gens.push_back(GroupElement::wreath({ida, s}, {0, 1}, radix));
  GroupHandle g(ActionContext::vectors(a.context().field, dim), std::move(gens), label);
  g.with_order(order);
  return g;
}

GroupHandle build_counterexample() {
  GroupHandle gamma = build_semilinear(2, 2);
  gamma.set_label("GammaL(1,4)");
  GroupHandle p = build_wreath(build_symmetric(4), build_symmetric(3));
  GroupHandle h = build_wreath(gamma, p);
  h.set_label("GammaL(1,4) wr (Sym(4) wr Sym(3))");
  return h;
}

// ---------------------------------------------------------------------------
// Witnesses

WitnessSequence witness_extraspecial_base(const ExtraspecialSpec& s) {
  validate(s);
  const unsigned r = s.r, m = s.m, d = s.dimension();
  WitnessSequence w;
  w.claim = "irredundant base of " + s.to_string();
  w.claims_base = true;
  auto wi = [&](unsigned i) {
    // e_1 in the first m-i factors, e_2 in the last i: base-r digits 0..01..1
    unsigned pos = 0;
    for (unsigned j = 0; j < m; ++j) pos = pos * r + (j >= m - i ? 1 : 0);
    return unit_code(s.q, d, pos);
  };
  w.expected_orders.push_back(s.order());
  if (s.variant == Variant::Minus) {
    w.points.push_back(wi(0));
    for (unsigned i = 2; i <= m; ++i) w.points.push_back(wi(i));
    for (unsigned i = 1; i <= m; ++i) w.expected_orders.push_back(ipow(BigInt(2), m - i));
  } else {
    for (unsigned i = 0; i <= m; ++i) w.points.push_back(wi(i));
    for (unsigned i = 0; i <= m; ++i) w.expected_orders.push_back(ipow(BigInt(r), m - i));
  }
  return w;
}

WitnessSequence witness_semilinear_chain(std::uint32_t q, unsigned d) {
  GroupHandle h = build_semilinear(q, d);
  auto space = SemilinearSpace::build(q, d);
  const Field& big = space->big_field();
  const unsigned k0 = space->base_degree();
  const auto primes = factorize(d);  // ascending, with multiplicity
  WitnessSequence w;
  w.claim = "irredundant base of " + h.label();
  w.claims_base = true;
  w.points.push_back(space->code_of(1));
  w.expected_orders.push_back(h.order());
  w.expected_orders.push_back(d);
  unsigned prev = 1, cur = 1;
  for (auto f : primes) {
    cur *= static_cast<unsigned>(f);
    PointCode chosen = 0;
    bool found = false;
    for (PointCode c = 0; c < space->size() && !found; ++c) {
      const Elem x = space->element_of(c);
      if (big.in_subfield(x, k0 * cur) && !big.in_subfield(x, k0 * prev)) {
        chosen = c;
        found = true;
      }
    }
    if (!found) throw std::logic_error("no element in the next subfield layer");
    w.points.push_back(chosen);
    w.expected_orders.push_back(d / cur);
    prev = cur;
  }
  return w;
}

WitnessSequence witness_tensor_sequence(const std::vector<ExtraspecialSpec>& specs,
                                        const std::vector<WitnessSequence>& factors) {
  if (specs.size() != factors.size() || specs.empty()) throw std::invalid_argument("one witness per tensor factor");
  const std::uint32_t q = specs[0].q;
  const FieldPtr f = field_for(q);
  const std::size_t l = specs.size();
  for (const auto& fw : factors)
    if (!fw.claims_base || fw.points.empty()) throw std::invalid_argument("factor witnesses must be bases");

  auto point = [&](std::size_t j, std::size_t t) {
    std::vector<Elem> v{1};
    for (std::size_t i = 0; i < l; ++i) {
      const PointCode c = i == j ? factors[i].points[t] : factors[i].points[0];
      v = tensor(*f, v, unpack(c, q, specs[i].dimension()));
    }
    return pack(v, q);
  };
  // Stabilizer of a pure tensor is the product of the factor stabilizers
  // (coprime orders rule out compensating scalars).
  auto first_stab = [&](std::size_t i) { return factors[i].expected_orders[1]; };

  WitnessSequence w;
  w.claim = "irredundant sequence of the tensor product";
  BigInt total = 1;
  for (const auto& s : specs) total *= s.order();
  w.expected_orders.push_back(total);
  for (std::size_t j = 0; j < l; ++j) {
    for (std::size_t t = (j == 0 ? 0 : 1); t < factors[j].points.size(); ++t) {
      w.points.push_back(point(j, t));
      BigInt o = factors[j].expected_orders[t + 1];
      for (std::size_t i = j + 1; i < l; ++i) o *= first_stab(i);
      w.expected_orders.push_back(o);
    }
  }
  w.claims_base = w.expected_orders.back() == 1;
  return w;
}

std::optional<std::uint32_t> find_gluck_partition(const GroupHandle& t) {
  if (t.context().is_linear()) throw std::invalid_argument("Gluck partitions are for permutation groups");
  const std::uint64_t k = t.degree();
  if (k > 24) throw std::invalid_argument("Gluck partition search needs k <= 24");
  const auto elements = enumerate_elements(t.action_generators());
  if (!elements) throw std::length_error("top group too large to enumerate");
  std::vector<std::vector<std::uint32_t>> moves;
  for (const auto& g : *elements)
    if (!g.is_identity()) moves.push_back(g.as<PermElement>().images);
  for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
    bool trivial = true;
    for (const auto& g : moves) {
      std::uint32_t img = 0;
      for (std::uint32_t i = 0; i < k; ++i)
        if (mask >> i & 1) img |= 1u << g[i];
      if (img == mask) {
        trivial = false;
        break;
      }
    }
    if (trivial) return mask;
  }
  return std::nullopt;
}

}  // namespace irrbase
