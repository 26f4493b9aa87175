#include "stabforge/perm.hpp"

#include <numeric>
#include <stdexcept>

namespace stabforge {

Perm::Perm(std::vector<std::uint8_t> images) : img_(std::move(images)) {
  if (img_.size() > kMaxDegree)
    throw CapError("permutation degree exceeds the supported maximum of 64");
  std::uint64_t seen = 0;
  for (auto v : img_) {
    if (v >= img_.size() || (seen >> v) & 1u)
      throw DegreeMismatchError("image table is not a permutation");
    seen |= std::uint64_t{1} << v;
  }
}

Perm::Perm(const std::vector<int>& images) {
  std::vector<std::uint8_t> t;
  t.reserve(images.size());
  for (int v : images) {
    if (v < 0 || v >= static_cast<int>(images.size()))
      throw DegreeMismatchError("image table is not a permutation");
    t.push_back(static_cast<std::uint8_t>(v));
  }
  *this = Perm(std::move(t));
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (img_[i] != i) return false;
  return true;
}

Perm Perm::compose(const Perm& h) const {
  if (degree() != h.degree())
    throw DegreeMismatchError("compose: degree mismatch");
  Perm r;
  r.img_.resize(img_.size());
  for (int x = 0; x < degree(); ++x) r.img_[x] = img_[h.img_[x]];
  return r;
}

Perm Perm::inverse() const {
  Perm r;
  r.img_.resize(img_.size());
  for (int x = 0; x < degree(); ++x) r.img_[img_[x]] = static_cast<std::uint8_t>(x);
  return r;
}

Perm Perm::power(std::int64_t k) const {
  Perm base = k >= 0 ? *this : inverse();
  std::uint64_t e = k >= 0 ? static_cast<std::uint64_t>(k)
                           : static_cast<std::uint64_t>(-(k + 1)) + 1;
  Perm acc = identity(degree());
  while (e) {
    if (e & 1) acc = acc.compose(base);
    base = base.compose(base);
    e >>= 1;
  }
  return acc;
}

Perm Perm::conjugated_by(const Perm& g) const {
  return g.inverse().compose(*this).compose(g);
}

PointMask Perm::image_of(PointMask set) const {
  PointMask out = 0;
  while (set) {
    int x = std::countr_zero(set);
    set &= set - 1;
    out |= PointMask{1} << img_[x];
  }
  return out;
}

std::int64_t Perm::order() const {
  return cycle_structure(*this).element_order;
}

int Perm::smallest_moved_point() const {
  for (int i = 0; i < degree(); ++i)
    if (img_[i] != i) return i;
  return -1;
}

CycleData cycle_structure(const Perm& g) {
  CycleData cd;
  const int n = g.degree();
  std::uint64_t seen = 0;
  for (int i = 0; i < n; ++i) {
    if ((seen >> i) & 1u) continue;
    std::vector<int> cycle{i};
    PointMask mask = PointMask{1} << i;
    seen |= PointMask{1} << i;
    for (int j = g[i]; j != i; j = g[j]) {
      cycle.push_back(j);
      mask |= PointMask{1} << j;
      seen |= PointMask{1} << j;
    }
    if (cycle.size() == 1) ++cd.fixed_count;
    cd.element_order = std::lcm(cd.element_order,
                                static_cast<std::int64_t>(cycle.size()));
    cd.cycles.push_back(std::move(cycle));
    cd.cycle_masks.push_back(mask);
  }
  cd.cycle_count = static_cast<int>(cd.cycles.size());
  return cd;
}

void for_each_invariant_subset(const CycleData& cd,
                               const std::function<bool(PointMask)>& fn) {
  const int c = cd.cycle_count;
  if (c >= 64) throw LimitError("too many cycles to enumerate unions");
  const std::uint64_t total = std::uint64_t{1} << c;
  for (std::uint64_t sel = 0; sel < total; ++sel) {
    PointMask m = 0;
    for (std::uint64_t s = sel; s;) {
      int j = std::countr_zero(s);
      s &= s - 1;
      m |= cd.cycle_masks[j];
    }
    if (!fn(m)) return;
  }
}

std::vector<PointMask> invariant_subsets(const Perm& g) {
  CycleData cd = cycle_structure(g);
  if (cd.cycle_count > 24)
    throw LimitError("invariant_subsets: more than 2^24 cycle unions");
  std::vector<PointMask> out;
  out.reserve(std::size_t{1} << cd.cycle_count);
  for_each_invariant_subset(cd, [&](PointMask m) {
    out.push_back(m);
    return true;
  });
  return out;
}

std::vector<PointMask> invariant_subsets_of_size(const CycleData& cd, int k) {
  std::vector<PointMask> out;
  const int c = cd.cycle_count;
  // Depth-first over cycles with the remaining-size bound as the only pruning;
  // fine for the desk-scale k used by the census and the prime-count checks.
  std::vector<int> lens(c);
  for (int i = 0; i < c; ++i) lens[i] = static_cast<int>(cd.cycles[i].size());
  std::function<void(int, int, PointMask)> rec = [&](int i, int need, PointMask acc) {
    if (need == 0) {
      out.push_back(acc);
      return;
    }
    if (i == c) return;
    rec(i + 1, need, acc);
    if (lens[i] <= need) rec(i + 1, need - lens[i], acc | cd.cycle_masks[i]);
  };
  rec(0, k, 0);
  return out;
}

}  // namespace stabforge
