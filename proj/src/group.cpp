#include "irrbase/group.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <stdexcept>
#include <unordered_set>

namespace irrbase {

namespace {

class Bitset {
 public:
  explicit Bitset(std::uint64_t n) : words_((n + 63) / 64, 0) {}
  bool test(std::uint64_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::uint64_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }

 private:
  std::vector<std::uint64_t> words_;
};

PointCode least_moved_point(const GroupElement& g, std::uint64_t degree) {
  for (PointCode p = 0; p < degree; ++p)
    if (g.apply(p) != p) return p;
  throw std::logic_error("identity has no moved point");
}

}  // namespace

std::uint64_t default_chain_limit() {
  if (const char* env = std::getenv("IRRBASE_CHAIN_LIMIT")) {
    const auto v = std::strtoull(env, nullptr, 10);
    if (v > 0) return v;
  }
  return 1'000'000;
}

// ---------------------------------------------------------------------------
// StabilizerChain

std::vector<PointCode> StabilizerChain::base() const {
  std::vector<PointCode> b;
  for (const auto& l : levels_) b.push_back(l.base_point);
  return b;
}

BigInt StabilizerChain::order() const { return order_from(0); }

BigInt StabilizerChain::order_from(std::size_t level) const {
  BigInt n = 1;
  for (std::size_t i = level; i < levels_.size(); ++i) n *= levels_[i].orbit.size();
  return n;
}

bool StabilizerChain::in_orbit(std::size_t level, PointCode pt) const {
  return levels_[level].schreier[pt] != -2;
}

GroupElement StabilizerChain::transversal(std::size_t level, PointCode pt) const {
  const Level& l = levels_[level];
  if (l.schreier[pt] == -2) throw std::invalid_argument("point outside the basic orbit");
  GroupElement r = identity_;
  while (l.schreier[pt] >= 0) {
    const auto i = static_cast<std::size_t>(l.schreier[pt]);
    r = compose(l.generators[i], r);
    pt = l.inverses[i].apply(pt);
  }
  return r;
}

std::pair<GroupElement, std::size_t> StabilizerChain::strip(GroupElement g, std::size_t from) const {
  for (std::size_t i = from; i < levels_.size(); ++i) {
    const Level& l = levels_[i];
    PointCode x = g.apply(l.base_point);
    if (l.schreier[x] == -2) return {std::move(g), i};
    // multiply by the inverse transversal one generator at a time
    while (l.schreier[x] >= 0) {
      const auto s = static_cast<std::size_t>(l.schreier[x]);
      g = compose(g, l.inverses[s]);
      x = l.inverses[s].apply(x);
    }
  }
  return {std::move(g), levels_.size()};
}

bool StabilizerChain::contains(const GroupElement& g) const {
  auto [r, level] = strip(g);
  return level == levels_.size() && r.is_identity();
}

StabilizerChain StabilizerChain::tail(std::size_t level) const {
  StabilizerChain c(degree_, identity_);
  c.levels_.assign(levels_.begin() + static_cast<std::ptrdiff_t>(std::min(level, levels_.size())), levels_.end());
  return c;
}

void StabilizerChain::append_level(PointCode base_point) {
  if (base_point >= degree_) throw std::out_of_range("base point outside the domain");
  Level l;
  l.base_point = base_point;
  l.schreier.assign(degree_, -2);
  l.schreier[base_point] = -1;
  l.orbit.push_back(base_point);
  levels_.push_back(std::move(l));
}

void StabilizerChain::add_generator(std::size_t level, const GroupElement& g) {
  Level& l = levels_[level];
  l.generators.push_back(g);
  l.inverses.push_back(inverse(g));
  extend_orbit(l, l.generators.size() - 1);
}

void StabilizerChain::extend_orbit(Level& l, std::size_t first_new) {
  // Old points under new generators, then everything new under all
  // generators; existing Schreier entries are never rewritten.
  std::size_t old_size = l.orbit.size();
  for (std::size_t k = 0; k < old_size; ++k) {
    for (std::size_t s = first_new; s < l.generators.size(); ++s) {
      const PointCode y = l.generators[s].apply(l.orbit[k]);
      if (l.schreier[y] == -2) {
        l.schreier[y] = static_cast<std::int32_t>(s);
        l.orbit.push_back(y);
      }
    }
  }
  for (std::size_t k = old_size; k < l.orbit.size(); ++k) {
    for (std::size_t s = 0; s < l.generators.size(); ++s) {
      const PointCode y = l.generators[s].apply(l.orbit[k]);
      if (l.schreier[y] == -2) {
        l.schreier[y] = static_cast<std::int32_t>(s);
        l.orbit.push_back(y);
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Random elements

RandomElements::RandomElements(const std::vector<GroupElement>& generators, std::uint64_t seed)
    : rng_(seed * 0x9e3779b97f4a7c15ULL + 1) {
  if (generators.empty()) throw std::invalid_argument("no generators");
  state_ = generators;
  while (state_.size() < 10) state_.push_back(generators[state_.size() % generators.size()]);
  accumulator_ = identity_like(generators[0]);
  for (int i = 0; i < 50; ++i) next();
}

std::uint64_t RandomElements::draw() {
  // splitmix64
  std::uint64_t z = (rng_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

GroupElement RandomElements::next() {
  const std::size_t n = state_.size();
  const std::size_t i = draw() % n;
  std::size_t j = draw() % (n - 1);
  if (j >= i) ++j;
  if (draw() & 1)
    state_[i] = compose(state_[i], state_[j]);
  else
    state_[i] = compose(state_[j], state_[i]);
  accumulator_ = compose(accumulator_, state_[i]);
  return accumulator_;
}

// ---------------------------------------------------------------------------
// GroupHandle

GroupHandle::GroupHandle(ActionContext ctx, std::vector<GroupElement> generators, std::string label)
    : ctx_(std::move(ctx)), gens_(std::move(generators)), label_(std::move(label)), cache_(std::make_shared<Cache>()) {
  if (gens_.empty()) throw std::invalid_argument("a group needs at least one generator (the identity will do)");
  for (const auto& g : gens_)
    if (g.degree() != ctx_.degree) throw std::invalid_argument("generator does not act on the context's domain");
}

GroupHandle& GroupHandle::with_order(BigInt order) {
  if (order < 1) throw std::invalid_argument("group order must be positive");
  order_ = std::move(order);
  return *this;
}

GroupHandle& GroupHandle::with_chain(StabilizerChain chain) {
  auto c = std::make_unique<StabilizerChain>(std::move(chain));
  if (order_ && *order_ != c->order()) throw std::logic_error("installed chain disagrees with the declared order");
  if (!order_) order_ = c->order();
  std::call_once(cache_->chain_once, [&] { cache_->chain = std::move(c); });
  return *this;
}

BigInt GroupHandle::order() const {
  if (order_) return *order_;
  return chain().order();
}

bool GroupHandle::is_trivial() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const GroupElement& g) { return g.is_identity(); });
}

const StabilizerChain& GroupHandle::chain() const {
  std::call_once(cache_->chain_once, [&] { cache_->chain = std::make_unique<StabilizerChain>(schreier_sims(*this)); });
  return *cache_->chain;
}

bool GroupHandle::has_cached_chain() const { return cache_->chain != nullptr; }

const std::vector<GroupElement>& GroupHandle::action_generators() const {
  std::call_once(cache_->perm_once, [&] {
    for (const auto& g : gens_) {
      if (g.kind() != ElementKind::Perm && ctx_.degree <= kExpandLimit)
        cache_->action_gens.push_back(to_permutation(g, ctx_.degree));
      else
        cache_->action_gens.push_back(g);
    }
  });
  return cache_->action_gens;
}

GroupElement GroupHandle::identity() const { return identity_like(action_generators().front()); }

// ---------------------------------------------------------------------------
// Schreier-Sims

namespace {

/// Adds h (fixing the base points of levels < from) as a strong generator of
/// levels from..j, where j is the first level whose base point h moves.
/// Returns j.
std::size_t insert_strong(StabilizerChain& c, const GroupElement& h, std::size_t from) {
  std::size_t j = from;
  while (j < c.levels().size() && h.apply(c.levels()[j].base_point) == c.levels()[j].base_point) ++j;
  if (j == c.levels().size()) c.append_level(least_moved_point(h, c.degree()));
  for (std::size_t l = from; l <= j; ++l) c.add_generator(l, h);
  return j;
}

/// Deterministic completion: checks every Schreier generator, level by level
/// from the bottom; on a failure the residue becomes a new strong generator
/// and the check resumes at the deepest level it reached.
void complete(StabilizerChain& c) {
  std::vector<std::vector<std::size_t>> checked(c.levels().size());
  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(c.levels().size()) - 1;
  while (i >= 0) {
    const auto li = static_cast<std::size_t>(i);
    if (checked.size() < c.levels().size()) checked.resize(c.levels().size());
    auto& done = checked[li];
    bool jumped = false;
    for (std::size_t s = 0; s < c.levels()[li].generators.size() && !jumped; ++s) {
      if (done.size() <= s) done.resize(s + 1, 0);
      while (done[s] < c.levels()[li].orbit.size()) {
        const auto& level = c.levels()[li];
        const PointCode beta = level.orbit[done[s]];
        const GroupElement& gen = level.generators[s];
        const PointCode image = gen.apply(beta);
        // u_beta * s * u_image^{-1}
        GroupElement sg = compose(c.transversal(li, beta), gen);
        auto [h, stop] = c.strip(std::move(sg), li);
        // strip from li first removes the level-li transversal of image,
        // then sifts through the deeper levels
        (void)image;
        if (stop < li + 1 || !h.is_identity()) {
          if (stop < li + 1) throw std::logic_error("Schreier generator left its own level");
          const std::size_t j = insert_strong(c, h, li + 1);
          if (checked.size() < c.levels().size()) checked.resize(c.levels().size());
          i = static_cast<std::ptrdiff_t>(j);
          jumped = true;
          break;
        }
        ++done[s];
      }
    }
    if (!jumped) --i;
  }
}

void build_prefix(StabilizerChain& c, const std::vector<GroupElement>& gens, const std::vector<PointCode>& prefix) {
  for (PointCode b : prefix) c.append_level(b);
  for (const auto& g : gens) {
    if (g.is_identity()) continue;
    insert_strong(c, g, 0);
  }
}

void verify_chain(const StabilizerChain& c, const std::vector<GroupElement>& gens, std::uint64_t seed) {
  for (const auto& g : gens)
    if (!c.contains(g)) throw std::logic_error("stabilizer chain misses a generator");
  RandomElements rnd(gens, seed ^ 0xabcdef);
  for (int k = 0; k < 100; ++k)
    if (!c.contains(rnd.next())) throw std::logic_error("stabilizer chain misses a random product");
}

}  // namespace

StabilizerChain schreier_sims(const GroupHandle& g, const ChainOptions& options) {
  const std::uint64_t limit = options.degree_limit ? options.degree_limit : default_chain_limit();
  if (g.degree() > limit)
    throw std::length_error("degree " + std::to_string(g.degree()) + " exceeds the stabilizer chain limit " +
                            std::to_string(limit));
  const auto& gens = g.action_generators();
  StabilizerChain c(g.degree(), identity_like(gens.front()));
  build_prefix(c, gens, options.base_prefix);

  if (options.use_known_order && g.declared_order() && !g.is_trivial()) {
    const BigInt& target = *g.declared_order();
    RandomElements rnd(gens, options.seed);
    int misses = 0;
    while (c.order() < target && misses < 200) {
      auto [h, stop] = c.strip(rnd.next());
      if (stop == c.levels().size() && h.is_identity()) {
        ++misses;
        continue;
      }
      misses = 0;
      insert_strong(c, h, 1 <= stop ? 1 : 0);
    }
    if (c.order() > target) throw std::logic_error("group order exceeds its declared order");
    if (c.order() < target) complete(c);
  } else {
    complete(c);
  }
  verify_chain(c, gens, options.seed);
  if (options.use_known_order && g.declared_order() && c.order() != *g.declared_order())
    throw std::logic_error("declared order " + to_string(*g.declared_order()) + " disagrees with computed order " +
                           to_string(c.order()));
  return c;
}

GroupHandle pointwise_stabilizer(const GroupHandle& g, std::span<const PointCode> pts) {
  ChainOptions opts;
  opts.base_prefix.assign(pts.begin(), pts.end());
  StabilizerChain c = [&] {
    if (g.has_cached_chain()) {
      // cheap path: the cached chain already starts with pts
      const auto b = g.chain().base();
      if (b.size() >= pts.size() && std::equal(pts.begin(), pts.end(), b.begin())) return g.chain();
    }
    GroupHandle h = g;
    if (!h.declared_order()) h.with_order(g.order());
    return schreier_sims(h, opts);
  }();
  const std::size_t k = pts.size();
  std::vector<GroupElement> gens;
  if (k < c.levels().size()) gens = c.levels()[k].generators;
  if (gens.empty()) gens.push_back(c.identity());
  GroupHandle s(g.context(), std::move(gens));
  s.with_chain(c.tail(k));
  return s;
}

// ---------------------------------------------------------------------------
// Orbits

Orbit orbit(const GroupHandle& g, PointCode seed) {
  if (seed >= g.degree()) throw std::out_of_range("seed outside the domain");
  const auto& gens = g.action_generators();
  Orbit o;
  o.points.push_back(seed);
  auto run = [&](auto& seen) {
    for (std::size_t k = 0; k < o.points.size(); ++k)
      for (const auto& s : gens) {
        const PointCode y = s.apply(o.points[k]);
        if (!seen.test(y)) {
          seen.set(y);
          o.points.push_back(y);
        }
      }
  };
  if (g.degree() <= kOrbitPartitionLimit) {
    Bitset seen(g.degree());
    seen.set(seed);
    run(seen);
  } else {
    struct HashSeen {
      std::unordered_set<PointCode> s;
      bool test(PointCode p) const { return s.count(p) != 0; }
      void set(PointCode p) { s.insert(p); }
    } seen;
    seen.set(seed);
    run(seen);
  }
  return o;
}

std::vector<OrbitSummary> orbit_partition(const GroupHandle& g) {
  const std::uint64_t n = g.degree();
  if (n > kOrbitPartitionLimit) throw std::length_error("domain too large for an orbit partition");
  const auto& gens = g.action_generators();
  Bitset seen(n);
  std::vector<OrbitSummary> out;
  std::vector<PointCode> queue;
  for (PointCode p = 0; p < n; ++p) {
    if (seen.test(p)) continue;
    seen.set(p);
    queue.assign(1, p);
    for (std::size_t k = 0; k < queue.size(); ++k)
      for (const auto& s : gens) {
        const PointCode y = s.apply(queue[k]);
        if (!seen.test(y)) {
          seen.set(y);
          queue.push_back(y);
        }
      }
    out.push_back({p, queue.size()});
  }
  return out;
}

unsigned subgroup_chain_bound(const GroupHandle& g) { return omega(g.order()); }

}  // namespace irrbase
