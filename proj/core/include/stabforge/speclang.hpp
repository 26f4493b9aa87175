#pragma once

#include <string>
#include <vector>

#include "stabforge/group.hpp"

namespace stabforge {

// Group expressions: as(p,m) or as(q) | agl(m,p) | asl(m,p) | sym(n) | alt(n)
// | cyc(n) | wr(inner,outer) | prodwr(inner,outer) | disjoint(a,b)
// | perm(n; gen, ...). Names are case-insensitive; whitespace is free except
// inside a cycle, where it separates points.
struct GroupExpr {
  enum class Kind { AS, AGL, ASL, Sym, Alt, Cyc, Wr, ProdWr, Disjoint, Explicit };
  Kind kind = Kind::Sym;
  int a = 0;  // AS: p; AGL/ASL: m; Sym/Alt/Cyc/Explicit: n
  int b = 0;  // AS: m; AGL/ASL: p
  std::vector<GroupExpr> children;   // Wr/ProdWr/Disjoint: inner, outer
  std::vector<Perm> generators;      // Explicit only

  bool operator==(const GroupExpr&) const = default;
};

GroupExpr parse_group_spec(const std::string& text);
PermGroup eval_group_expr(const GroupExpr& expr, const Limits& limits = {});
PermGroup parse_group(const std::string& text, const Limits& limits = {});
std::string format_group_expr(const GroupExpr& expr);

// Product of disjoint cycles on 1-based points, e.g. "(1 2 3)(4 5)"; "id" or
// "( )" is the identity. format emits the canonical form: cycles ordered by
// least moved point, each starting at its least point, 1-cycles omitted.
Perm parse_cycle_notation(const std::string& text, int degree);
std::string format_cycle_notation(const Perm& p);

}  // namespace stabforge
