#include "stabforge/speclang.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <utility>

#include "stabforge/catalog.hpp"

namespace stabforge {

namespace {

struct Cursor {
  const std::string& text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  void expect(char c, const char* what) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c)
      throw ParseError(std::string("expected '") + what + "'", pos, what);
    ++pos;
  }
  bool try_consume(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  std::string ident() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw ParseError("expected a name", pos, "name");
    std::string s = text.substr(start, pos - start);
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
  }
  int integer(const char* what) {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start)
      throw ParseError(std::string("expected ") + what, pos, what);
    long long v = 0;
    auto r = std::from_chars(text.data() + start, text.data() + pos, v);
    if (r.ec != std::errc{} || v > 1'000'000)
      throw RangeError("number too large", start, what);
    return static_cast<int>(v);
  }
};

std::pair<int, int> factor_prime_power(int q, std::size_t at) {
  if (q < 2) throw RangeError("field size must be at least 2", at, "prime power");
  int p = q;
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  int m = 0;
  int r = q;
  while (r % p == 0) {
    r /= p;
    ++m;
  }
  if (r != 1) throw UnsupportedFieldError("field size is not a prime power");
  return {p, m};
}

// One generator: "id" or a product of disjoint cycles on 1-based points.
Perm parse_generator(Cursor& c, int degree) {
  c.skip_ws();
  if (c.pos < c.text.size() &&
      std::isalpha(static_cast<unsigned char>(c.text[c.pos]))) {
    std::size_t at = c.pos;
    if (c.ident() != "id")
      throw ParseError("expected 'id' or a cycle", at, "id");
    return Perm(degree);
  }
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  std::vector<bool> used(degree, false);
  bool any = false;
  while (c.peek() == '(') {
    any = true;
    c.expect('(', "(");
    std::vector<int> cyc;
    while (c.peek() != ')') {
      c.skip_ws();
      std::size_t at = c.pos;
      int v = c.integer("point");
      if (v < 1 || v > degree)
        throw RangeError("point out of range", at, "point in 1..degree");
      int pt = v - 1;
      if (used[pt]) throw RepeatError("point repeated", at, "unused point");
      used[pt] = true;
      cyc.push_back(pt);
    }
    c.expect(')', ")");
    for (std::size_t i = 0; i < cyc.size(); ++i)
      img[cyc[i]] = cyc[(i + 1) % cyc.size()];
  }
  if (!any) throw ParseError("expected 'id' or a cycle", c.pos, "cycle");
  return Perm(img);
}

GroupExpr parse_expr(Cursor& c) {
  c.skip_ws();
  std::size_t at = c.pos;
  std::string name = c.ident();
  GroupExpr e;
  using K = GroupExpr::Kind;
  c.expect('(', "(");
  if (name == "as") {
    e.kind = K::AS;
    std::size_t num_at = c.pos;
    int x = c.integer("p or q");
    if (c.try_consume(',')) {
      e.a = x;
      e.b = c.integer("m");
    } else {
      std::tie(e.a, e.b) = factor_prime_power(x, num_at);
    }
  } else if (name == "agl" || name == "asl") {
    e.kind = name == "agl" ? K::AGL : K::ASL;
    e.a = c.integer("m");
    c.expect(',', ",");
    e.b = c.integer("p");
  } else if (name == "sym" || name == "alt" || name == "cyc") {
    e.kind = name == "sym" ? K::Sym : name == "alt" ? K::Alt : K::Cyc;
    e.a = c.integer("n");
  } else if (name == "wr" || name == "prodwr" || name == "disjoint") {
    e.kind = name == "wr" ? K::Wr : name == "prodwr" ? K::ProdWr : K::Disjoint;
    e.children.push_back(parse_expr(c));
    c.expect(',', ",");
    e.children.push_back(parse_expr(c));
  } else if (name == "perm") {
    e.kind = K::Explicit;
    std::size_t num_at = c.pos;
    e.a = c.integer("degree");
    if (e.a < 1 || e.a > kMaxDegree)
      throw RangeError("degree out of range", num_at, "degree in 1..64");
    c.expect(';', ";");
    e.generators.push_back(parse_generator(c, e.a));
    while (c.try_consume(',')) e.generators.push_back(parse_generator(c, e.a));
  } else {
    throw ParseError("unknown group name '" + name + "'", at,
                     "as|agl|asl|sym|alt|cyc|wr|prodwr|disjoint|perm");
  }
  c.expect(')', ")");
  return e;
}

}  // namespace

GroupExpr parse_group_spec(const std::string& text) {
  Cursor c{text};
  GroupExpr e = parse_expr(c);
  if (!c.at_end()) throw ParseError("trailing input", c.pos, "end of input");
  return e;
}

PermGroup eval_group_expr(const GroupExpr& e, const Limits& limits) {
  using K = GroupExpr::Kind;
  switch (e.kind) {
    case K::AS: return build_affine_semilinear(e.a, e.b, limits);
    case K::AGL: return build_affine_linear(e.a, e.b, LinearVariant::General, limits);
    case K::ASL: return build_affine_linear(e.a, e.b, LinearVariant::Special, limits);
    case K::Sym: return build_symmetric(e.a, limits);
    case K::Alt: return build_alternating(e.a, limits);
    case K::Cyc: return build_cyclic(e.a, limits);
    case K::Wr:
      return build_wreath(eval_group_expr(e.children[0], limits),
                          eval_group_expr(e.children[1], limits),
                          WreathAction::Imprimitive, limits);
    case K::ProdWr:
      return build_wreath(eval_group_expr(e.children[0], limits),
                          eval_group_expr(e.children[1], limits),
                          WreathAction::Product, limits);
    case K::Disjoint:
      return disjoint_product(eval_group_expr(e.children[0], limits),
                              eval_group_expr(e.children[1], limits), limits);
    case K::Explicit: return PermGroup(e.a, e.generators);
  }
  throw Error("unreachable expression kind");
}

PermGroup parse_group(const std::string& text, const Limits& limits) {
  return eval_group_expr(parse_group_spec(text), limits);
}

std::string format_group_expr(const GroupExpr& e) {
  using K = GroupExpr::Kind;
  auto binary = [&](const char* name) {
    return std::string(name) + "(" + format_group_expr(e.children[0]) + "," +
           format_group_expr(e.children[1]) + ")";
  };
  switch (e.kind) {
    case K::AS: return "as(" + std::to_string(e.a) + "," + std::to_string(e.b) + ")";
    case K::AGL: return "agl(" + std::to_string(e.a) + "," + std::to_string(e.b) + ")";
    case K::ASL: return "asl(" + std::to_string(e.a) + "," + std::to_string(e.b) + ")";
    case K::Sym: return "sym(" + std::to_string(e.a) + ")";
    case K::Alt: return "alt(" + std::to_string(e.a) + ")";
    case K::Cyc: return "cyc(" + std::to_string(e.a) + ")";
    case K::Wr: return binary("wr");
    case K::ProdWr: return binary("prodwr");
    case K::Disjoint: return binary("disjoint");
    case K::Explicit: {
      std::string s = "perm(" + std::to_string(e.a) + ";";
      for (std::size_t i = 0; i < e.generators.size(); ++i) {
        if (i) s += ",";
        s += " " + format_cycle_notation(e.generators[i]);
      }
      return s + ")";
    }
  }
  throw Error("unreachable expression kind");
}

Perm parse_cycle_notation(const std::string& text, int degree) {
  if (degree < 1 || degree > kMaxDegree)
    throw RangeError("degree out of range", 0, "degree in 1..64");
  Cursor c{text};
  Perm p = parse_generator(c, degree);
  if (!c.at_end()) throw ParseError("trailing input", c.pos, "end of input");
  return p;
}

std::string format_cycle_notation(const Perm& p) {
  CycleData cd = cycle_structure(p);
  std::string s;
  for (const auto& cyc : cd.cycles) {
    if (cyc.size() < 2) continue;
    s += '(';
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      if (i) s += ' ';
      s += std::to_string(cyc[i] + 1);
    }
    s += ')';
  }
  return s.empty() ? "id" : s;
}

}  // namespace stabforge
