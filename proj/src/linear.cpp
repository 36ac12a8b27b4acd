#include "irrbase/linear.hpp"

#include <set>
#include <stdexcept>

namespace irrbase {

namespace {

void require_linear(const ActionContext& ctx) {
  if (!ctx.is_linear()) throw std::invalid_argument("the group does not act on a vector space");
}

std::vector<Matrix> generator_matrices(const GroupHandle& g) {
  std::vector<Matrix> out;
  for (const auto& s : g.generators()) out.push_back(element_matrix(s, g.context()));
  return out;
}

std::vector<Elem> row_times(const Field& f, std::span<const Elem> v, const Matrix& m) {
  std::vector<Elem> r(m.cols, 0);
  for (unsigned i = 0; i < m.rows; ++i) {
    if (v[i] == 0) continue;
    for (unsigned j = 0; j < m.cols; ++j) r[j] = f.add(r[j], f.mul(v[i], m.at(i, j)));
  }
  return r;
}

/// Incremental echelon basis supporting "add if independent".
class Span {
 public:
  Span(FieldPtr f, unsigned dim) : f_(std::move(f)), dim_(dim) {}

  bool add(std::vector<Elem> v) {
    const Field& f = *f_;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Elem t = v[pivots_[i]];
      if (t == 0) continue;
      for (unsigned j = 0; j < dim_; ++j) v[j] = f.sub(v[j], f.mul(t, rows_[i][j]));
    }
    unsigned p = 0;
    while (p < dim_ && v[p] == 0) ++p;
    if (p == dim_) return false;
    const Elem s = f.inv(v[p]);
    for (auto& e : v) e = f.mul(e, s);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Elem t = rows_[i][p];
      if (t == 0) continue;
      for (unsigned j = 0; j < dim_; ++j) rows_[i][j] = f.sub(rows_[i][j], f.mul(t, v[j]));
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
  }
  std::size_t size() const { return rows_.size(); }

 private:
  FieldPtr f_;
  unsigned dim_;
  std::vector<std::vector<Elem>> rows_;
  std::vector<unsigned> pivots_;
};

unsigned spin(const FieldPtr& f, unsigned d, const std::vector<Matrix>& gens, std::span<const Elem> v) {
  Span span(f, d);
  std::vector<std::vector<Elem>> queue;
  if (span.add({v.begin(), v.end()})) queue.emplace_back(v.begin(), v.end());
  for (std::size_t k = 0; k < queue.size() && span.size() < d; ++k)
    for (const auto& m : gens) {
      auto w = row_times(*f, queue[k], m);
      if (span.add(w)) queue.push_back(std::move(w));
    }
  return static_cast<unsigned>(span.size());
}

/// Orbit of an m-dimensional subspace (as RREF rows) under the generators,
/// abandoned once it exceeds `cap` members.
std::optional<std::vector<Matrix>> subspace_orbit(const Matrix& w, const std::vector<Matrix>& gens, std::size_t cap) {
  std::set<std::vector<Elem>> seen{w.entries};
  std::vector<Matrix> out{w};
  for (std::size_t k = 0; k < out.size(); ++k)
    for (const auto& g : gens) {
      Matrix img = row_reduce(multiply(out[k], g));
      if (seen.insert(img.entries).second) {
        if (out.size() >= cap) return std::nullopt;
        out.push_back(std::move(img));
      }
    }
  return out;
}

/// Calls visit(W) for every m-dimensional subspace of GF(q)^d in RREF until
/// visit returns true. Returns whether it stopped early.
template <class Visit>
bool for_each_subspace(const FieldPtr& f, unsigned d, unsigned m, Visit&& visit) {
  const std::uint32_t q = f->order();
  std::vector<unsigned> piv(m);
  for (unsigned i = 0; i < m; ++i) piv[i] = i;
  while (true) {
    // free positions: row i, columns after piv[i] that are not pivots
    std::vector<std::pair<unsigned, unsigned>> free;
    for (unsigned i = 0; i < m; ++i)
      for (unsigned c = piv[i] + 1; c < d; ++c)
        if (std::find(piv.begin(), piv.end(), c) == piv.end()) free.emplace_back(i, c);
    std::vector<Elem> val(free.size(), 0);
    while (true) {
      Matrix w(f, m, d);
      for (unsigned i = 0; i < m; ++i) w.at(i, piv[i]) = 1;
      for (std::size_t t = 0; t < free.size(); ++t) w.at(free[t].first, free[t].second) = val[t];
      if (visit(w)) return true;
      std::size_t t = 0;
      while (t < val.size() && ++val[t] == q) val[t++] = 0;
      if (t == val.size()) break;
    }
    // next pivot combination
    int i = static_cast<int>(m) - 1;
    while (i >= 0 && piv[i] == d - m + static_cast<unsigned>(i)) --i;
    if (i < 0) return false;
    ++piv[i];
    for (unsigned j = static_cast<unsigned>(i) + 1; j < m; ++j) piv[j] = piv[j - 1] + 1;
  }
}

BigInt gaussian_binomial(std::uint64_t q, unsigned n, unsigned k) {
  BigInt num = 1, den = 1;
  for (unsigned i = 0; i < k; ++i) {
    num *= ipow(BigInt(q), n - i) - 1;
    den *= ipow(BigInt(q), i + 1) - 1;
  }
  return num / den;
}

}  // namespace

Matrix element_matrix(const GroupElement& g, const ActionContext& ctx) {
  require_linear(ctx);
  const unsigned d = ctx.dimension;
  const std::uint32_t q = ctx.field->order();
  Matrix m(ctx.field, d, d);
  for (unsigned i = 0; i < d; ++i) {
    std::vector<Elem> e(d, 0);
    e[i] = 1;
    const auto img = unpack(g.apply(pack(e, q)), q, d);
    for (unsigned j = 0; j < d; ++j) m.at(i, j) = img[j];
  }
  return m;
}

unsigned spin_dimension(const GroupHandle& g, std::span<const Elem> v) {
  require_linear(g.context());
  return spin(g.context().field, g.context().dimension, generator_matrices(g), v);
}

bool is_irreducible(const GroupHandle& g) {
  const auto& ctx = g.context();
  require_linear(ctx);
  // cheap sufficient test first; the orbit scan is exhaustive
  if (is_absolutely_irreducible(g)) return true;
  const auto gens = generator_matrices(g);
  for (const auto& o : orbit_partition(g)) {
    if (o.representative == 0) continue;
    const auto v = unpack(o.representative, ctx.field->order(), ctx.dimension);
    if (spin(ctx.field, ctx.dimension, gens, v) < ctx.dimension) return false;
  }
  return true;
}

bool is_absolutely_irreducible(const GroupHandle& g) {
  const auto& ctx = g.context();
  require_linear(ctx);
  const unsigned d = ctx.dimension;
  const auto gens = generator_matrices(g);
  // Spin the identity under right multiplication inside the d^2-dimensional
  // matrix space; the span is the enveloping algebra.
  Span span(ctx.field, d * d);
  std::vector<Matrix> queue{Matrix::identity(ctx.field, d)};
  span.add(queue.front().entries);
  for (std::size_t k = 0; k < queue.size() && span.size() < std::size_t(d) * d; ++k)
    for (const auto& s : gens) {
      Matrix p = multiply(queue[k], s);
      if (span.add(p.entries)) queue.push_back(std::move(p));
    }
  return span.size() == std::size_t(d) * d;
}

bool nonzero_points_independent(const ActionContext& ctx, std::span<const PointCode> pts) {
  require_linear(ctx);
  Span span(ctx.field, ctx.dimension);
  for (PointCode p : pts) {
    if (p == 0) continue;
    if (!span.add(unpack(p, ctx.field->order(), ctx.dimension))) return false;
  }
  return true;
}

PrimitivityResult linear_primitivity(const GroupHandle& g, std::uint64_t subspace_limit) {
  const auto& ctx = g.context();
  require_linear(ctx);
  const unsigned d = ctx.dimension;
  const auto gens = generator_matrices(g);
  PrimitivityResult res;
  for (unsigned m = 1; m < d; ++m) {
    if (d % m) continue;
    if (gaussian_binomial(ctx.field->order(), d, m) > subspace_limit) return res;  // Unknown
  }
  for (unsigned m = 1; m < d; ++m) {
    if (d % m) continue;
    const unsigned k = d / m;
    const bool found = for_each_subspace(ctx.field, d, m, [&](const Matrix& w) {
      auto orb = subspace_orbit(w, gens, k);
      if (!orb || orb->size() != k) return false;
      Matrix sum = (*orb)[0];
      for (std::size_t i = 1; i < orb->size(); ++i) sum = subspace_sum(sum, (*orb)[i]);
      if (sum.rows != d) return false;
      res.block = w;
      return true;
    });
    if (found) {
      res.verdict = Primitivity::Imprimitive;
      res.block_dimension = m;
      return res;
    }
  }
  res.verdict = Primitivity::Primitive;
  return res;
}

}  // namespace irrbase
