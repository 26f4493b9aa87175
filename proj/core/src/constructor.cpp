#include "stabforge/constructor.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <utility>
#include <vector>

namespace stabforge {

namespace {

// Lexicographic successor of a strictly increasing index tuple over 0..n-1.
bool next_combination(std::vector<int>& idx, int n) {
  const int k = static_cast<int>(idx.size());
  for (int i = k - 1; i >= 0; --i) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

PointMask mask_of(const std::vector<int>& idx) {
  PointMask m = 0;
  for (int p : idx) m |= PointMask{1} << p;
  return m;
}

// Deterministic k-subset for a (seed, attempt) pair: partial Fisher-Yates
// driven by the counter generator.
PointMask sampled_subset(int n, int k, std::uint64_t seed, std::uint64_t attempt) {
  std::array<int, kMaxDegree> pool;
  for (int i = 0; i < n; ++i) pool[i] = i;
  PointMask m = 0;
  for (int i = 0; i < k; ++i) {
    std::uint64_t r = mix64(seed, attempt * 64 + static_cast<std::uint64_t>(i));
    int j = i + static_cast<int>(r % static_cast<std::uint64_t>(n - i));
    std::swap(pool[i], pool[j]);
    m |= PointMask{1} << pool[i];
  }
  return m;
}

}  // namespace

std::vector<PointMask> regular_set_search(const PermGroup& w, bool forbid_half,
                                          int want, std::int64_t budget,
                                          std::uint64_t seed,
                                          const std::vector<int>& sizes) {
  const int n = w.degree();
  std::vector<int> ks = sizes;
  if (ks.empty())
    for (int k = 1; k <= n / 2; ++k) ks.push_back(k);

  std::vector<PointMask> found;
  std::vector<int> found_sizes;
  for (int k : ks) {
    if (k <= 0 || k > n) continue;
    if (forbid_half && 2 * k == n) continue;
    if (std::find(found_sizes.begin(), found_sizes.end(), k) != found_sizes.end())
      continue;
    PointMask hit = 0;
    bool got = false;
    if (n <= 20 || binomial(n, k) <= budget) {
      std::vector<int> idx(k);
      for (int i = 0; i < k; ++i) idx[i] = i;
      do {
        PointMask m = mask_of(idx);
        if (set_stabilizer(w, m).is_trivial()) {
          hit = m;
          got = true;
          break;
        }
      } while (next_combination(idx, n));
    } else {
      for (std::int64_t t = 0; t < budget; ++t) {
        PointMask m = sampled_subset(n, k, seed, static_cast<std::uint64_t>(t));
        if (set_stabilizer(w, m).is_trivial()) {
          hit = m;
          got = true;
          break;
        }
      }
    }
    if (got) {
      found.push_back(hit);
      found_sizes.push_back(k);
      if (static_cast<int>(found.size()) == want) return found;
    }
  }
  throw NotFoundError("no subset with trivial setwise stabilizer within budget, degree " +
                      std::to_string(n));
}

std::vector<int> pointwise_free_triple(const PermGroup& w) {
  const int n = w.degree();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        const std::array<int, 3> pts{a, b, c};
        if (w.pointwise_stabilizer(pts).is_trivial()) return {a, b, c};
      }
  throw NotFoundError("no 3 points with trivial pointwise stabilizer, degree " +
                      std::to_string(n));
}

NicePair primitive_base_pair(const PermGroup& g, const ConstructorOptions& opts) {
  const int n = g.degree();
  NicePair out;
  int have = 0;
  for (int k = 0; k <= n / 2 && have < 2; ++k) {
    std::int64_t tried = 0;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    bool more = true;
    while (more && ++tried <= opts.per_size_budget) {
      PointMask m = mask_of(idx);
      StructureReport rep = analyze_structure(set_stabilizer(g, m), opts.elem_cap);
      if (rep.required_structure) {
        if (have == 0) {
          out.delta1 = m;
          out.report1 = rep;
        } else {
          out.delta2 = m;
          out.report2 = rep;
        }
        ++have;
        break;
      }
      more = k > 0 && next_combination(idx, n);
    }
  }
  if (have < 2)
    throw NotFoundError("subset scan found no structured pair, degree " +
                        std::to_string(n));
  return out;
}

PointMask wreath_tuple_assembly(const PrimitiveTower& tower,
                                const std::vector<Tag>& tags, const NicePair& pair) {
  const std::vector<int>& block0 = tower.system.blocks[0];
  const PointMask complement =
      full_mask(static_cast<int>(block0.size())) & ~pair.delta1;
  PointMask out = 0;
  for (std::size_t i = 0; i < tags.size(); ++i) {
    PointMask piece = tags[i] == Tag::D1   ? pair.delta1
                      : tags[i] == Tag::D2 ? pair.delta2
                                           : complement;
    for (int x : mask_points(piece))
      out |= PointMask{1} << tower.transversals[i][block0[x]];
  }
  return out;
}

namespace {

std::string tag_string(const std::vector<Tag>& tags) {
  std::string s;
  for (Tag t : tags) {
    if (!s.empty()) s += ' ';
    s += t == Tag::D1 ? "D1" : t == Tag::D2 ? "D2" : "C1";
  }
  return s;
}

// Re-verify a lifted pair inside the group it was built for. Both stabilizer
// structures and the size chain |delta1| < |delta2| <= n/2 must hold.
void verify_pair(const PermGroup& g, NicePair& pair, std::int64_t cap) {
  pair.report1 = analyze_structure(set_stabilizer(g, pair.delta1), cap);
  pair.report2 = analyze_structure(set_stabilizer(g, pair.delta2), cap);
  if (!pair.report1.required_structure || !pair.report2.required_structure)
    throw VerificationError("lifted pair fails the stabilizer structure check");
  const int a = mask_size(pair.delta1);
  const int b = mask_size(pair.delta2);
  if (a >= b || 2 * b > g.degree())
    throw VerificationError("lifted pair fails the size invariants");
}

// Tag tuples per block count. Pieces: D1, D2, and the in-block complement C1
// of D1; with |D1| = a < |D2| = b <= o/2 the three sizes a, b, o-a are
// automatically distinct, which keeps block positions carrying different
// pieces in different orbits of any tuple stabilizer.
std::pair<std::vector<Tag>, std::vector<Tag>> wreath_tags(
    int nb, const PermGroup& w, const ConstructorOptions& opts) {
  constexpr Tag a = Tag::D1, b = Tag::D2, c = Tag::C1;
  switch (nb) {
    case 2:
      return {{a, a}, {b, b}};
    case 3:
      return {{a, a, b}, {a, b, b}};
    case 4:
      return {{a, a, c, b}, {a, b, c, b}};
    case 5:
      return {{a, a, a, b, b}, {a, a, b, b, b}};
    case 7:
      return {{b, b, c, a, a, a, a}, {a, a, c, b, b, b, b}};
    case 8:
      return {{b, b, c, a, a, a, a, a}, {a, a, c, b, b, b, b, b}};
    case 9: {
      // Anchor the unequal positions on points no block permutation fixes
      // simultaneously unless it is the identity.
      std::vector<int> t = pointwise_free_triple(w);
      std::vector<Tag> t1(9, a), t2(9, b);
      t1[t[0]] = b;
      t1[t[1]] = b;
      t1[t[2]] = c;
      t2[t[0]] = a;
      t2[t[1]] = a;
      t2[t[2]] = c;
      return {std::move(t1), std::move(t2)};
    }
    case 6:
      // Solvable primitive block actions have prime-power degree.
      throw VerificationError("six blocks cannot carry a solvable primitive block action");
    default: {
      PointMask gamma =
          regular_set_search(w, /*forbid_half=*/true, 1, opts.per_size_budget,
                             opts.seed)
              .front();
      std::vector<Tag> t1(nb, a), t2(nb, b);
      for (int i : mask_points(gamma)) {
        t1[i] = b;
        t2[i] = a;
      }
      return {std::move(t1), std::move(t2)};
    }
  }
}

NicePair nice_pair_impl(const PermGroup& g, const ConstructorOptions& opts,
                        std::vector<TraceStep>& trace) {
  const int n = g.degree();

  if (!g.is_transitive()) {
    std::vector<std::vector<int>> orbs = g.orbits();
    TraceStep step;
    step.step_case = "intransitive-combine";
    step.degree = n;
    step.n_blocks = static_cast<int>(orbs.size());
    for (const auto& orb : orbs) {
      if (!step.pattern1.empty()) step.pattern1 += '+';
      step.pattern1 += std::to_string(orb.size());
    }
    trace.push_back(std::move(step));

    // delta1 collects every orbit's small piece; delta2 swaps in the large
    // piece on the first orbit only, so the totals stay below half.
    NicePair out;
    bool first = true;
    for (const auto& orbit : orbs) {
      PointMask d1 = 0, d2 = 0;
      if (orbit.size() == 1) {
        d2 = PointMask{1} << orbit[0];
      } else {
        std::vector<Perm> restricted;
        restricted.reserve(g.generators().size());
        for (const Perm& p : g.generators()) {
          std::vector<int> img(orbit.size());
          for (std::size_t i = 0; i < orbit.size(); ++i) {
            auto it = std::lower_bound(orbit.begin(), orbit.end(), p[orbit[i]]);
            img[i] = static_cast<int>(it - orbit.begin());
          }
          restricted.emplace_back(img);
        }
        PermGroup constituent(static_cast<int>(orbit.size()), std::move(restricted));
        NicePair sub = nice_pair_impl(constituent, opts, trace);
        for (int x : mask_points(sub.delta1)) d1 |= PointMask{1} << orbit[x];
        for (int x : mask_points(sub.delta2)) d2 |= PointMask{1} << orbit[x];
      }
      out.delta1 |= d1;
      out.delta2 |= first ? d2 : d1;
      first = false;
    }
    verify_pair(g, out, opts.elem_cap);
    return out;
  }

  if (n <= opts.scan_cap && !opts.force_recursion) {
    NicePair out = primitive_base_pair(g, opts);
    trace.push_back({"primitive-base", n, 0, 0, "", ""});
    return out;
  }

  PrimitiveTower tower = primitive_quotient(g);
  if (tower.primitive) {
    NicePair out = primitive_base_pair(g, opts);
    trace.push_back({"primitive-search", n, 0, 0, "", ""});
    return out;
  }

  const int nb = tower.system.block_count();
  const int bs = tower.system.block_size();
  TraceStep step;
  step.step_case = "wreath-" + std::to_string(nb);
  step.degree = n;
  step.n_blocks = nb;
  step.block_size = bs;
  const std::size_t step_at = trace.size();
  trace.push_back(std::move(step));

  NicePair sub = nice_pair_impl(tower.constituent, opts, trace);
  const int a = mask_size(sub.delta1);
  const int b = mask_size(sub.delta2);
  if (nb == 4 || nb == 7 || nb == 8 || nb == 9) {
    const int c = bs - a;
    if (a == b || a == c || b == c)
      throw VerificationError("tuple pieces must have three distinct sizes");
  }

  auto [tags1, tags2] = wreath_tags(nb, tower.w, opts);
  trace[step_at].pattern1 = tag_string(tags1);
  trace[step_at].pattern2 = tag_string(tags2);

  NicePair out;
  out.delta1 = wreath_tuple_assembly(tower, tags1, sub);
  out.delta2 = wreath_tuple_assembly(tower, tags2, sub);
  verify_pair(g, out, opts.elem_cap);
  return out;
}

}  // namespace

NicePair nice_pair(const PermGroup& g, const ConstructorOptions& opts,
                   std::vector<TraceStep>& trace) {
  if (g.degree() < 2)
    throw NotFoundError("no subset pair exists on fewer than 2 points");
  if (!is_solvable(g)) throw NotSolvableError("group is not solvable");
  return nice_pair_impl(g, opts, trace);
}

NicePair nice_pair(const PermGroup& g, const ConstructorOptions& opts) {
  std::vector<TraceStep> trace;
  return nice_pair(g, opts, trace);
}

Certificate small_stabilizer_set(const PermGroup& g, const ConstructorOptions& opts) {
  Certificate cert;
  cert.degree = g.degree();
  cert.group_order = g.order();
  if (g.is_trivial() || g.degree() <= 1) {
    cert.report = analyze_structure(g, opts.elem_cap);
    cert.pair.report1 = cert.report;
    cert.pair.report2 = cert.report;
    return cert;
  }
  cert.pair = nice_pair(g, opts, cert.trace);
  cert.delta = cert.pair.delta1;
  cert.report = cert.pair.report1;
  return cert;
}

}  // namespace stabforge
