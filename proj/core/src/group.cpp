#include "stabforge/group.hpp"

#include <algorithm>
#include <numeric>

namespace stabforge {

StabChain::StabChain(int degree, std::vector<int> preferred_base)
    : degree_(degree), preferred_base_(std::move(preferred_base)) {
  for (int p : preferred_base_) add_level(p);
}

void StabChain::add_level(int point) {
  Level lv;
  lv.base_point = point;
  lv.transversal.resize(degree_);
  lv.transversal_inv.resize(degree_);
  base_.push_back(point);
  levels_.push_back(std::move(lv));
  rebuild_orbit(static_cast<int>(levels_.size()) - 1);
}

std::vector<Perm> StabChain::level_generators(int level) const {
  std::vector<Perm> out;
  for (const Perm& s : sgs_) {
    bool fixes_prefix = true;
    for (int i = 0; i < level; ++i)
      if (s[base_[i]] != base_[i]) { fixes_prefix = false; break; }
    if (fixes_prefix) out.push_back(s);
  }
  return out;
}

void StabChain::rebuild_orbit(int level) {
  Level& lv = levels_[level];
  lv.orbit.clear();
  std::fill(lv.transversal.begin(), lv.transversal.end(), nullptr);
  std::fill(lv.transversal_inv.begin(), lv.transversal_inv.end(), nullptr);
  auto gens = level_generators(level);
  lv.orbit.push_back(lv.base_point);
  lv.transversal[lv.base_point] = std::make_unique<Perm>(Perm::identity(degree_));
  lv.transversal_inv[lv.base_point] = std::make_unique<Perm>(Perm::identity(degree_));
  for (std::size_t head = 0; head < lv.orbit.size(); ++head) {
    int gamma = lv.orbit[head];
    for (const Perm& s : gens) {
      int delta = s[gamma];
      if (!lv.transversal[delta]) {
        Perm u = s.compose(*lv.transversal[gamma]);  // u(base) = delta
        lv.transversal_inv[delta] = std::make_unique<Perm>(u.inverse());
        lv.transversal[delta] = std::make_unique<Perm>(std::move(u));
        lv.orbit.push_back(delta);
      }
    }
  }
}

std::pair<Perm, int> StabChain::strip(const Perm& g, int from_level) const {
  Perm h = g;
  for (int i = from_level; i < levels(); ++i) {
    int beta = h[base_[i]];
    if (!levels_[i].transversal[beta]) return {std::move(h), i};
    h = transversal_inv(i, beta).compose(h);
  }
  return {std::move(h), levels()};
}

void StabChain::insert(const Perm& g) {
  if (g.degree() != degree_) throw DegreeMismatchError("insert: degree mismatch");
  if (g.is_identity()) return;
  auto [res, lvl] = strip(g);
  if (res.is_identity()) return;
  if (lvl == levels()) add_level(res.smallest_moved_point());
  sgs_.push_back(std::move(res));
  // The new strong generator fixes base_[0..lvl-1], so it joins the generator
  // sets of levels 0..lvl. Orbits at levels below the sift start cannot grow
  // (the residue is a word in elements already available there), but here the
  // element came from outside, so refresh everything up to lvl.
  for (int i = 0; i <= lvl && i < levels(); ++i) rebuild_orbit(i);
  complete_from(lvl < levels() ? lvl : levels() - 1);
}

// Schreier-generator fixpoint: on return, every level's point stabilizer is
// generated by the strong generators of the next level.
void StabChain::complete_from(int start_level) {
  int i = std::min(start_level, levels() - 1);
  while (i >= 0) {
    bool extended = false;
    const Level& lv = levels_[i];
    auto gens = level_generators(i);
    for (std::size_t oi = 0; oi < lv.orbit.size() && !extended; ++oi) {
      int gamma = lv.orbit[oi];
      const Perm& u_gamma = *lv.transversal[gamma];
      for (const Perm& s : gens) {
        Perm h = transversal_inv(i, s[gamma]).compose(s).compose(u_gamma);
        if (h.is_identity()) continue;
        auto [res, lvl] = strip(h, i + 1);
        if (res.is_identity()) continue;
        if (lvl == levels()) add_level(res.smallest_moved_point());
        sgs_.push_back(std::move(res));
        for (int k = i + 1; k <= lvl && k < levels(); ++k) rebuild_orbit(k);
        i = std::min(lvl, levels() - 1);
        extended = true;
        break;
      }
    }
    if (!extended) --i;
  }
}

bool StabChain::contains(const Perm& g) const {
  if (g.degree() != degree_) return false;
  auto [res, lvl] = strip(g);
  return lvl == levels() && res.is_identity();
}

BigInt StabChain::order() const {
  BigInt n = 1;
  for (const Level& lv : levels_) n *= static_cast<unsigned>(lv.orbit.size());
  return n;
}

PermGroup::PermGroup(int degree) : degree_(degree), order_(1) {
  chain_ = std::make_shared<StabChain>(degree);
}

PermGroup::PermGroup(int degree, std::vector<Perm> generators,
                     std::vector<int> preferred_base)
    : degree_(degree), gens_(std::move(generators)) {
  auto chain = std::make_shared<StabChain>(degree, std::move(preferred_base));
  for (const Perm& g : gens_) {
    if (g.degree() != degree) throw DegreeMismatchError("generator degree mismatch");
    chain->insert(g);
  }
  order_ = chain->order();
  chain_ = std::move(chain);
}

bool PermGroup::contains(const Perm& g) const { return chain_->contains(g); }

std::vector<std::vector<int>> PermGroup::orbits() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(degree_, 0);
  for (int p = 0; p < degree_; ++p) {
    if (seen[p]) continue;
    std::vector<int> orb{p};
    seen[p] = 1;
    for (std::size_t head = 0; head < orb.size(); ++head)
      for (const Perm& g : gens_) {
        int q = g[orb[head]];
        if (!seen[q]) { seen[q] = 1; orb.push_back(q); }
      }
    std::sort(orb.begin(), orb.end());
    out.push_back(std::move(orb));
  }
  return out;
}

std::vector<int> PermGroup::orbit_of(int point) const {
  for (auto& orb : orbits())
    if (std::binary_search(orb.begin(), orb.end(), point)) return orb;
  throw Error("orbit_of: point out of range");
}

bool PermGroup::is_transitive() const {
  return degree_ > 0 && static_cast<int>(orbit_of(0).size()) == degree_;
}

void PermGroup::for_each_element(const std::function<void(const Perm&)>& fn,
                                 std::int64_t cap) const {
  if (order_ > cap)
    throw CapExceededError("element enumeration over cap: |G| = " + order_.str());
  const StabChain& ch = *chain_;
  // Elements factor uniquely as u_0 ∘ u_1 ∘ ... over the chain levels.
  std::function<void(int, const Perm&)> rec = [&](int level, const Perm& prefix) {
    if (level == ch.levels()) {
      fn(prefix);
      return;
    }
    std::vector<int> pts = ch.orbit(level);
    std::sort(pts.begin(), pts.end());
    for (int gamma : pts) rec(level + 1, prefix.compose(ch.transversal(level, gamma)));
  };
  rec(0, Perm::identity(degree_));
}

std::vector<Perm> PermGroup::elements(ElementFilter filter, std::int64_t cap) const {
  std::vector<Perm> out;
  for_each_element(
      [&](const Perm& g) {
        if (filter == ElementFilter::OddPrimeOrder) {
          std::int64_t o = g.order();
          if (o < 3 || o % 2 == 0) return;
          for (std::int64_t d = 3; d * d <= o; d += 2)
            if (o % d == 0) return;
        }
        out.push_back(g);
      },
      cap);
  return out;
}

Perm PermGroup::random_element(std::uint64_t seed, std::uint64_t index) const {
  const StabChain& ch = *chain_;
  Perm g = Perm::identity(degree_);
  for (int level = 0; level < ch.levels(); ++level) {
    std::vector<int> pts = ch.orbit(level);
    std::sort(pts.begin(), pts.end());
    std::uint64_t r = mix64(seed, index * 131 + static_cast<std::uint64_t>(level));
    g = g.compose(ch.transversal(level, pts[r % pts.size()]));
  }
  return g;
}

PermGroup PermGroup::point_stabilizer(int point) const {
  int p = point;
  return pointwise_stabilizer(std::span<const int>(&p, 1));
}

PermGroup PermGroup::pointwise_stabilizer(std::span<const int> points) const {
  // Rebuild the chain with the wanted points as a forced base prefix; the
  // stabilizer is then generated by the strong generators fixing the prefix.
  std::vector<int> prefix(points.begin(), points.end());
  PermGroup rebased(degree_, gens_, prefix);
  auto gens = rebased.chain().level_generators(static_cast<int>(prefix.size()));
  return PermGroup(degree_, std::move(gens));
}

bool GroupBuilder::add(const Perm& g) {
  if (chain_.contains(g)) return false;
  chain_.insert(g);
  gens_.push_back(g);
  return true;
}

PermGroup GroupBuilder::to_group() const {
  return PermGroup(chain_.degree(), gens_);
}

namespace {

// Orbit of point under the subgroup generated by gens; returns the minimum.
int min_in_orbit(const std::vector<const Perm*>& gens, int point, int degree) {
  if (gens.empty()) return point;
  std::uint64_t seen = std::uint64_t{1} << point;
  std::vector<int> stack{point};
  int best = point;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (const Perm* g : gens) {
      int y = (*g)[x];
      if (!((seen >> y) & 1u)) {
        seen |= std::uint64_t{1} << y;
        best = std::min(best, y);
        stack.push_back(y);
      }
    }
  }
  (void)degree;
  return best;
}

}  // namespace

PermGroup set_stabilizer(const PermGroup& g, PointMask delta) {
  const int n = g.degree();
  delta &= full_mask(n);
  if (delta == 0 || delta == full_mask(n)) return g;
  const StabChain& ch = g.chain();
  const int depth = ch.levels();

  GroupBuilder found(n);

  // img[i] = chosen image of base point i; prefix[i] = partial product. A leaf
  // determines the element completely, so the full check g(delta) = delta runs
  // there; interior levels prune on the base point's membership type and on
  // minimality in the found-subgroup orbit (candidates explored in increasing
  // image order, so a non-minimal image lands in an already-searched coset).
  std::vector<int> img(depth, -1);
  std::vector<Perm> prefix;
  prefix.reserve(depth + 1);
  prefix.push_back(Perm::identity(n));

  std::function<void(int)> rec = [&](int level) {
    const Perm& pi = prefix.back();
    if (level == depth) {
      if (pi.stabilizes(delta)) found.add(pi);
      return;
    }
    const int b = ch.base_point(level);
    const bool b_in = mask_contains(delta, b);
    std::vector<std::pair<int, int>> candidates;  // (image, orbit point)
    for (int gamma : ch.orbit(level)) {
      int beta = pi[gamma];
      if (mask_contains(delta, beta) == b_in) candidates.emplace_back(beta, gamma);
    }
    std::sort(candidates.begin(), candidates.end());
    std::vector<const Perm*> kgens;
    for (auto [beta, gamma] : candidates) {
      kgens.clear();
      for (const Perm& s : found.generators()) {
        bool fixes = true;
        for (int i = 0; i < level; ++i)
          if (s[img[i]] != img[i]) { fixes = false; break; }
        if (fixes) kgens.push_back(&s);
      }
      if (min_in_orbit(kgens, beta, n) < beta) continue;
      img[level] = beta;
      prefix.push_back(pi.compose(ch.transversal(level, gamma)));
      rec(level + 1);
      prefix.pop_back();
      img[level] = -1;
    }
  };
  rec(0);
  return found.to_group();
}

PermGroup set_stabilizer_by_enumeration(const PermGroup& g, PointMask delta,
                                        std::int64_t cap) {
  delta &= full_mask(g.degree());
  GroupBuilder out(g.degree());
  g.for_each_element(
      [&](const Perm& h) {
        if (h.stabilizes(delta)) out.add(h);
      },
      cap);
  return out.to_group();
}

Perm commutator(const Perm& a, const Perm& b) {
  return a.inverse().compose(b.inverse()).compose(a).compose(b);
}

PermGroup normal_closure(const PermGroup& ambient, const std::vector<Perm>& seeds) {
  GroupBuilder h(ambient.degree());
  std::vector<Perm> work;
  for (const Perm& s : seeds)
    if (h.add(s)) work.push_back(s);
  while (!work.empty()) {
    Perm w = std::move(work.back());
    work.pop_back();
    for (const Perm& g : ambient.generators()) {
      Perm c = w.conjugated_by(g);
      if (h.add(c)) work.push_back(std::move(c));
    }
  }
  return h.to_group();
}

PermGroup derived_subgroup(const PermGroup& g) {
  std::vector<Perm> comms;
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      Perm c = commutator(gens[i], gens[j]);
      if (!c.is_identity()) comms.push_back(std::move(c));
    }
  return normal_closure(g, comms);
}

SolvabilityReport solvability_and_nilpotency(const PermGroup& g) {
  constexpr int kSeriesCap = 32;
  SolvabilityReport rep;
  if (g.order() == 1) {
    rep.solvable = rep.nilpotent = true;
    return rep;
  }

  PermGroup h = g;
  for (int step = 1; step <= kSeriesCap; ++step) {
    PermGroup d = derived_subgroup(h);
    if (d.order() == 1) {
      rep.solvable = true;
      rep.derived_length = step;
      break;
    }
    if (d.order() == h.order()) break;  // perfect: series stalled
    h = std::move(d);
    if (step == kSeriesCap)
      throw LimitError("derived series exceeded 32 steps");
  }

  PermGroup l = g;
  for (int step = 1; step <= kSeriesCap; ++step) {
    std::vector<Perm> comms;
    for (const Perm& x : l.generators())
      for (const Perm& y : g.generators()) {
        Perm c = commutator(x, y);
        if (!c.is_identity()) comms.push_back(std::move(c));
      }
    PermGroup next = normal_closure(g, comms);
    if (next.order() == 1) {
      rep.nilpotent = true;
      rep.lower_central_length = step;
      break;
    }
    if (next.order() == l.order()) break;  // series stalled above 1
    l = std::move(next);
    if (step == kSeriesCap)
      throw LimitError("lower central series exceeded 32 steps");
  }
  return rep;
}

bool is_solvable(const PermGroup& g) { return solvability_and_nilpotency(g).solvable; }
bool is_nilpotent(const PermGroup& g) { return solvability_and_nilpotency(g).nilpotent; }

PermGroup o2_residual(const PermGroup& g, std::int64_t cap) {
  GroupBuilder h(g.degree());
  g.for_each_element(
      [&](const Perm& e) {
        std::int64_t o = e.order();
        std::int64_t two_part = 1;
        while (o % 2 == 0) { o /= 2; two_part *= 2; }
        // e^two_part has odd order; odd parts generate O^2(G).
        h.add(e.power(two_part));
      },
      cap);
  PermGroup out = h.to_group();
  if (!is_power_of_two(g.order() / out.order()))
    throw VerificationError("O^2 residual index is not a power of two");
  return out;
}

bool is_elementary_abelian(const PermGroup& g, int p) {
  if (g.order() == 1) return true;
  const auto& gens = g.generators();
  for (const Perm& a : gens) {
    std::int64_t o = a.order();
    if (o != 1 && o != p) return false;
  }
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!(gens[i].compose(gens[j]) == gens[j].compose(gens[i]))) return false;
  return true;
}

std::int64_t group_exponent(const PermGroup& g, std::int64_t cap) {
  std::int64_t e = 1;
  g.for_each_element([&](const Perm& x) { e = std::lcm(e, x.order()); }, cap);
  return e;
}

StructureReport analyze_structure(const PermGroup& s, std::int64_t cap) {
  StructureReport rep;
  rep.stab_order = s.order();
  PermGroup o2 = o2_residual(s, cap);
  rep.o2_order = o2.order();
  rep.o2_exponent = group_exponent(o2, cap);
  rep.o2_is_elementary_abelian_3 = is_elementary_abelian(o2, 3);
  rep.is_2_group = is_power_of_two(s.order());
  rep.required_structure = rep.o2_is_elementary_abelian_3;
  rep.is_nilpotent = solvability_and_nilpotency(s).nilpotent;
  return rep;
}

}  // namespace stabforge
