#include "irrbase/base_search.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <unordered_map>

#include <boost/dynamic_bitset.hpp>
#include <boost/functional/hash.hpp>
#include <nlohmann/json.hpp>

#include "irrbase/enumerate.hpp"
#include "irrbase/linear.hpp"

namespace irrbase {

std::string to_string(Statistic s) {
  switch (s) {
    case Statistic::MinBase:
      return "min_base";
    case Statistic::MaxIrredundant:
      return "max_irredundant";
    case Statistic::GreedyMax:
      return "greedy_max";
    case Statistic::GreedyRun:
      return "greedy_run";
  }
  return "?";
}

std::string to_string(Engine e) {
  switch (e) {
    case Engine::Auto:
      return "auto";
    case Engine::Chain:
      return "chain";
    case Engine::Lattice:
      return "lattice";
  }
  return "?";
}

nlohmann::json to_json(const BaseReport& r, const ActionContext& ctx, bool timing) {
  nlohmann::json j;
  j["statistic"] = to_string(r.statistic);
  j["group"] = r.group;
  j["value"] = r.value();
  nlohmann::json seq = nlohmann::json::array();
  for (auto p : r.sequence) seq.push_back({{"code", p}, {"point", ctx.describe_point(p)}});
  j["sequence"] = seq;
  nlohmann::json chain = nlohmann::json::array();
  for (const auto& o : r.order_chain) chain.push_back(to_string(o));
  j["order_chain"] = chain;
  j["exact"] = r.exact;
  j["nodes"] = r.nodes;
  j["engine"] = to_string(r.engine);
  if (timing) j["millis"] = r.millis;
  return j;
}

namespace {

struct BudgetExceeded {};

using Key = std::vector<std::uint64_t>;
struct KeyHash {
  std::size_t operator()(const Key& k) const { return boost::hash_range(k.begin(), k.end()); }
};

struct Candidate {
  PointCode point;
  BigInt child_order;
};

// Least t with base^t >= n (base >= 2).
unsigned log_ceil(const BigInt& n, const BigInt& base) {
  unsigned t = 0;
  BigInt x = 1;
  while (x < n) {
    x *= base;
    ++t;
  }
  return t;
}

// ---------------------------------------------------------------------------
// Chain space: states are stabilizer handles, candidates are orbit
// representatives of moved points.

class ChainSpace {
 public:
  struct State {
    GroupHandle h;
    std::vector<PointCode> fixed;  // sorted
  };

  explicit ChainSpace(const GroupHandle& g) : root_{g, {}} {}
  const State& root() const { return root_; }
  BigInt order(const State& s) const { return s.h.order(); }
  bool trivial(const State& s) const { return s.h.order() == 1; }
  Key key(const State& s) const { return {s.fixed.begin(), s.fixed.end()}; }

  std::vector<Candidate> candidates(const State& s) const {
    const BigInt n = s.h.order();
    std::vector<Candidate> out;
    for (const auto& o : orbit_partition(s.h))
      if (o.size > 1) out.push_back({o.representative, n / o.size});
    return out;
  }

  State child(const State& s, const Candidate& c) const {
    const PointCode p[1] = {c.point};
    State t{pointwise_stabilizer(s.h, p), s.fixed};
    t.fixed.insert(std::lower_bound(t.fixed.begin(), t.fixed.end(), c.point), c.point);
    return t;
  }

 private:
  State root_;
};

// ---------------------------------------------------------------------------
// Lattice space. For v in V, G_v = {g : v in Fix(g)}. Let W_v be the least
// intersection of fixed spaces containing v; then G_v is the pointwise
// stabilizer of W_v, and any subgroup K has K_v = K n G_v. So the possible
// stabilizers come from the members W of the intersection lattice that
// contain a vector lying in no smaller member ("realized" members).

class LatticeSpace {
 public:
  using Bits = boost::dynamic_bitset<std::uint64_t>;
  using State = Bits;

  static constexpr std::size_t kMaxMembers = 50'000;

  explicit LatticeSpace(const GroupHandle& g) : ctx_(g.context()) {
    auto elements = enumerate_elements(g.generators());
    if (!elements) throw std::length_error("group too large for the lattice engine");
    n_ = elements->size();
    for (const auto& e : *elements) mats_.push_back(element_matrix(e, ctx_));
    build_lattice();
    root_ = Bits(n_);
    root_.set();
  }

  const State& root() const { return root_; }
  BigInt order(const State& s) const { return BigInt(s.count()); }
  bool trivial(const State& s) const { return s.count() == 1; }
  Key key(const State& s) const {
    Key k;
    boost::to_block_range(s, std::back_inserter(k));
    return k;
  }
  std::size_t members() const { return members_.size(); }

  std::vector<Candidate> candidates(const State& s) const {
    std::map<Key, PointCode> seen;  // child subgroup -> least witness
    const std::size_t n = s.count();
    for (const auto& m : members_) {
      if (!m.witness) continue;
      Bits c = s & m.stab;
      if (c.count() == n) continue;
      Key k;
      boost::to_block_range(c, std::back_inserter(k));
      auto [it, fresh] = seen.emplace(std::move(k), *m.witness);
      if (!fresh) it->second = std::min(it->second, *m.witness);
    }
    std::vector<Candidate> out;
    for (const auto& [k, w] : seen) {
      Bits c(n_);
      boost::from_block_range(k.begin(), k.end(), c);
      out.push_back({w, BigInt(c.count())});
    }
    std::sort(out.begin(), out.end(), [](const Candidate& a, const Candidate& b) { return a.point < b.point; });
    return out;
  }

  State child(const State& s, const Candidate& c) const {
    // K_v computed directly, which also double-checks the lattice bookkeeping
    Bits out(n_);
    for (std::size_t i = s.find_first(); i != Bits::npos; i = s.find_next(i))
      if (mat_vec_apply(mats_[i], c.point) == c.point) out.set(i);
    if (out.count() != c.child_order) throw std::logic_error("fixed-space lattice disagrees with a direct stabilizer");
    return out;
  }

 private:
  struct Member {
    Matrix basis;
    Bits stab;
    std::optional<PointCode> witness;
  };

  bool fixes_all(std::size_t g, const std::vector<PointCode>& codes) const {
    for (auto c : codes)
      if (mat_vec_apply(mats_[g], c) != c) return false;
    return true;
  }

  std::vector<PointCode> codes_of(const Matrix& basis) const {
    std::vector<PointCode> out;
    const std::uint32_t q = ctx_.field->order();
    for (unsigned i = 0; i < basis.rows; ++i)
      out.push_back(pack(std::span<const Elem>(basis.entries.data() + std::size_t(i) * basis.cols, basis.cols), q));
    return out;
  }

  // Fix(g) n W: vectors c*W with c*W*(M - I) = 0.
  Matrix fixed_part(const Matrix& w, const Matrix& m) const {
    if (w.rows == 0) return w;
    const Matrix diff = subtract(multiply(w, m), w);
    const Matrix coeffs = left_kernel(diff);
    if (coeffs.rows == 0) return Matrix(w.field, 0, w.cols);
    return row_reduce(multiply(coeffs, w));
  }

  void build_lattice() {
    const unsigned d = ctx_.dimension;
    std::map<std::vector<Elem>, std::size_t> index;
    std::vector<Matrix> list;
    auto add = [&](Matrix b) {
      auto [it, fresh] = index.emplace(b.entries, list.size());
      if (fresh) {
        if (list.size() >= kMaxMembers) throw std::length_error("fixed-space lattice too large");
        list.push_back(std::move(b));
      }
      return fresh;
    };
    add(Matrix::identity(ctx_.field, d));
    // atoms: distinct proper fixed spaces
    std::vector<std::size_t> atom_elems;
    for (std::size_t g = 0; g < n_; ++g) {
      Matrix f = fixed_part(list[0], mats_[g]);
      if (f.rows == d) continue;
      if (add(std::move(f))) atom_elems.push_back(g);
    }
    const std::size_t atoms = list.size();
    // close under intersection with the atoms
    for (std::size_t i = 1; i < list.size(); ++i) {
      const auto codes = codes_of(list[i]);
      for (std::size_t a = 0; a + 1 < atoms; ++a) {
        const std::size_t g = atom_elems[a];
        if (fixes_all(g, codes)) continue;
        add(fixed_part(list[i], mats_[g]));
      }
    }
    members_.reserve(list.size());
    for (auto& b : list) {
      Member m{std::move(b), Bits(n_), std::nullopt};
      const auto codes = codes_of(m.basis);
      for (std::size_t g = 0; g < n_; ++g)
        if (fixes_all(g, codes)) m.stab.set(g);
      members_.push_back(std::move(m));
    }
    for (auto& m : members_) m.witness = find_witness(m);
  }

  // A vector of W fixed by no element outside Stab(W): least code when W is
  // small, otherwise the first hit of a seeded sampler, with an exhaustive
  // fallback.
  std::optional<PointCode> find_witness(const Member& m) const {
    const unsigned k = m.basis.rows;
    const std::uint32_t q = ctx_.field->order();
    std::vector<std::size_t> outside;
    for (std::size_t g = 0; g < n_; ++g)
      if (!m.stab.test(g)) outside.push_back(g);
    auto realized = [&](PointCode v) {
      for (auto g : outside)
        if (mat_vec_apply(mats_[g], v) == v) return false;
      return true;
    };
    const auto rows = codes_of(m.basis);
    std::vector<Elem> coords(ctx_.dimension);
    auto combine = [&](const std::vector<Elem>& c) {
      std::vector<Elem> v(ctx_.dimension, 0);
      const Field& f = *ctx_.field;
      for (unsigned i = 0; i < k; ++i)
        if (c[i])
          for (unsigned j = 0; j < ctx_.dimension; ++j) v[j] = f.add(v[j], f.mul(c[i], m.basis.at(i, j)));
      return pack(v, q);
    };
    const auto total = checked_power(q, k);
    auto exhaustive = [&]() -> std::optional<PointCode> {
      std::optional<PointCode> best;
      std::vector<Elem> c(k, 0);
      for (std::uint64_t t = 0; t < *total; ++t) {
        std::uint64_t x = t;
        for (unsigned i = 0; i < k; ++i, x /= q) c[i] = static_cast<Elem>(x % q);
        const PointCode v = combine(c);
        if ((!best || v < *best) && realized(v)) best = v;
      }
      return best;
    };
    if (total && *total <= (1u << 14)) return exhaustive();
    std::mt19937_64 rng(0x1a77ce + k);
    std::vector<Elem> c(k);
    for (int tries = 0; tries < 512; ++tries) {
      for (auto& x : c) x = static_cast<Elem>(rng() % q);
      const PointCode v = combine(c);
      if (realized(v)) return v;
    }
    if (total && *total <= (1u << 24)) return exhaustive();
    throw std::length_error("could not settle a fixed-space lattice member");
  }

  ActionContext ctx_;
  std::size_t n_ = 0;
  std::vector<Matrix> mats_;
  std::vector<Member> members_;
  State root_;
};

// ---------------------------------------------------------------------------
// Exact searches with memoization on the state key.

struct Result {
  unsigned value = 0;
  std::vector<PointCode> suffix;
};

template <class Space>
class Searcher {
 public:
  using State = typename Space::State;

  Searcher(const Space& space, std::uint64_t budget) : space_(space), budget_(budget) {}
  std::uint64_t nodes() const { return nodes_; }

  std::vector<Candidate> expand(const State& s) {
    if (++nodes_ > budget_) throw BudgetExceeded{};
    return space_.candidates(s);
  }

  Result max_irredundant(const State& s) { return memoized(memo_max_, s, [&] { return max_impl(s, false); }); }
  Result greedy_max(const State& s) { return memoized(memo_greedy_, s, [&] { return max_impl(s, true); }); }
  Result min_base(const State& s) { return memoized(memo_min_, s, [&] { return min_impl(s); }); }

  Result greedy_run(const State& root) {
    Result r;
    State s = root;
    while (!space_.trivial(s)) {
      auto cands = space_.candidates(s);
      ++nodes_;
      const Candidate* best = nullptr;
      for (const auto& c : cands)
        if (!best || c.child_order < best->child_order ||
            (c.child_order == best->child_order && c.point < best->point))
          best = &c;
      r.suffix.push_back(best->point);
      ++r.value;
      s = space_.child(s, *best);
    }
    return r;
  }

 private:
  using Memo = std::unordered_map<Key, Result, KeyHash>;

  template <class F>
  Result memoized(Memo& memo, const State& s, F&& compute) {
    const Key k = space_.key(s);
    if (auto it = memo.find(k); it != memo.end()) return it->second;
    Result r = compute();
    memo.emplace(k, r);
    return r;
  }

  Result max_impl(const State& s, bool greedy) {
    if (space_.trivial(s)) return {};
    auto cands = expand(s);
    if (greedy) {
      BigInt least = cands.front().child_order;
      for (const auto& c : cands) least = std::min(least, c.child_order);
      std::erase_if(cands, [&](const Candidate& c) { return c.child_order != least; });
    }
    // slow descents first
    std::stable_sort(cands.begin(), cands.end(),
                     [](const Candidate& a, const Candidate& b) { return a.child_order > b.child_order; });
    const unsigned ub = omega(space_.order(s));
    Result best;
    bool have = false;
    for (const auto& c : cands) {
      if (have && 1 + omega(c.child_order) <= best.value) continue;
      const State t = space_.child(s, c);
      Result r = greedy ? greedy_max(t) : max_irredundant(t);
      if (!have || r.value + 1 > best.value) {
        best.value = r.value + 1;
        best.suffix = {c.point};
        best.suffix.insert(best.suffix.end(), r.suffix.begin(), r.suffix.end());
        have = true;
      }
      if (best.value == ub) break;
    }
    return best;
  }

  Result min_impl(const State& s) {
    if (space_.trivial(s)) return {};
    auto cands = expand(s);
    std::stable_sort(cands.begin(), cands.end(),
                     [](const Candidate& a, const Candidate& b) { return a.child_order < b.child_order; });
    const BigInt n = space_.order(s);
    const unsigned lb = log_ceil(n, n / cands.front().child_order);
    Result best;
    bool have = false;
    for (const auto& c : cands) {
      const unsigned child_lb = c.child_order > 1 ? 1 : 0;
      if (have && 1 + child_lb >= best.value) continue;
      Result r = min_base(space_.child(s, c));
      if (!have || r.value + 1 < best.value) {
        best.value = r.value + 1;
        best.suffix = {c.point};
        best.suffix.insert(best.suffix.end(), r.suffix.begin(), r.suffix.end());
        have = true;
      }
      if (best.value == lb) break;
    }
    return best;
  }

  const Space& space_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  Memo memo_max_, memo_min_, memo_greedy_;
};

bool lattice_eligible(const GroupHandle& g) {
  return g.context().is_linear() && g.order() <= kEnumerationLimit;
}

template <class Space>
BaseReport run_search(const GroupHandle& g, const Space& space, Statistic stat, const SearchOptions& options) {
  BaseReport rep;
  rep.statistic = stat;
  rep.group = g.label();
  Searcher<Space> s(space, options.node_budget);
  Result r;
  try {
    switch (stat) {
      case Statistic::MaxIrredundant:
        r = s.max_irredundant(space.root());
        break;
      case Statistic::MinBase:
        r = s.min_base(space.root());
        break;
      case Statistic::GreedyMax:
        r = s.greedy_max(space.root());
        break;
      case Statistic::GreedyRun:
        r = s.greedy_run(space.root());
        break;
    }
  } catch (const BudgetExceeded&) {
    // any greedy base bounds every statistic from the right side
    rep.exact = false;
    Searcher<Space> fallback(space, std::numeric_limits<std::uint64_t>::max());
    r = fallback.greedy_run(space.root());
  }
  rep.sequence = std::move(r.suffix);
  rep.nodes = s.nodes();
  return rep;
}

BaseReport search(const GroupHandle& g, Statistic stat, const SearchOptions& options) {
  const auto t0 = std::chrono::steady_clock::now();
  Engine engine = options.engine;
  if (engine == Engine::Auto) engine = lattice_eligible(g) ? Engine::Lattice : Engine::Chain;
  if (engine == Engine::Lattice && !g.context().is_linear())
    throw std::invalid_argument("the lattice engine needs a linear group");
  BaseReport rep = engine == Engine::Lattice ? run_search(g, LatticeSpace(g), stat, options)
                                             : run_search(g, ChainSpace(g), stat, options);
  rep.engine = engine;
  const auto check = verify_irredundant(g, rep.sequence);
  if (!check.is_base) throw std::logic_error("search produced a sequence that is not an irredundant base");
  rep.order_chain = check.order_chain;
  rep.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace

IrredundanceResult verify_irredundant(const GroupHandle& g, std::span<const PointCode> seq) {
  for (auto p : seq)
    if (p >= g.degree()) throw std::out_of_range("point outside the domain");
  IrredundanceResult res;
  std::vector<BigInt> orders;
  if (lattice_eligible(g)) {
    auto elements = *enumerate_elements(g.generators());
    orders.push_back(elements.size());
    for (auto p : seq) {
      std::erase_if(elements, [&](const GroupElement& e) { return e.apply(p) != p; });
      orders.push_back(elements.size());
    }
  } else {
    std::vector<PointCode> distinct;
    std::vector<std::size_t> level;  // distinct points fixed after each prefix
    for (auto p : seq) {
      if (std::find(distinct.begin(), distinct.end(), p) == distinct.end()) distinct.push_back(p);
      level.push_back(distinct.size());
    }
    ChainOptions opts;
    opts.base_prefix = distinct;
    GroupHandle h = g;
    if (!h.declared_order()) h.with_order(g.order());
    const StabilizerChain c = schreier_sims(h, opts);
    orders.push_back(c.order());
    for (auto l : level) orders.push_back(c.order_from(l));
  }
  for (std::size_t i = 0; i + 1 < orders.size(); ++i) {
    if (orders[i + 1] >= orders[i]) {
      res.failure_index = i;
      orders.resize(i + 2);
      break;
    }
  }
  res.order_chain = std::move(orders);
  res.is_base = !res.failure_index && res.order_chain.back() == 1;
  return res;
}

BaseReport max_irredundant(const GroupHandle& g, const SearchOptions& o) { return search(g, Statistic::MaxIrredundant, o); }
BaseReport min_base(const GroupHandle& g, const SearchOptions& o) { return search(g, Statistic::MinBase, o); }
BaseReport greedy_max(const GroupHandle& g, const SearchOptions& o) { return search(g, Statistic::GreedyMax, o); }
BaseReport greedy_run(const GroupHandle& g, const SearchOptions& o) { return search(g, Statistic::GreedyRun, o); }

BaseReport affine_adjust(const BaseReport& h, std::uint64_t space_size) {
  BaseReport g = h;
  g.group = "V : (" + h.group + ")";
  g.sequence.insert(g.sequence.begin(), 0);
  if (!h.order_chain.empty()) g.order_chain.insert(g.order_chain.begin(), h.order_chain.front() * space_size);
  return g;
}

InequalityReport check_subgroup_inequalities(const GroupHandle& g, const GroupHandle& s, const GroupHandle& n, const SearchOptions& o) {
  InequalityReport r;
  r.label = g.label();
  const auto rg = max_irredundant(g, o), rs = max_irredundant(s, o), rn = max_irredundant(n, o);
  r.i_g = rg.value();
  r.i_s = rs.value();
  r.i_n = rn.value();
  const BigInt gn = g.order() / n.order();
  if (gn * n.order() != g.order()) throw std::invalid_argument("|N| does not divide |G|");
  r.quotient_bound = omega(gn);
  r.exact = rg.exact && rs.exact && rn.exact;
  r.subgroup_holds = r.i_s <= r.i_g;
  r.normal_holds = r.i_g <= r.i_n + r.quotient_bound;
  return r;
}

}  // namespace irrbase
