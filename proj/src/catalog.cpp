#include "bcalc/catalog.hpp"

#include <array>

#include "bcalc/error.hpp"
#include "bcalc/parse.hpp"
#include "bcalc/print.hpp"

namespace bcalc {

namespace {

using TypeArgs = std::map<std::string, Type>;

// Replaces each {NAME} in `tmpl` by the parenthesized type bound to NAME.
std::string expand(std::string_view tmpl, const TypeArgs& args) {
  std::string out;
  for (std::size_t i = 0; i < tmpl.size(); ++i) {
    if (tmpl[i] != '{') {
      out += tmpl[i];
      continue;
    }
    std::size_t close = tmpl.find('}', i);
    std::string key(tmpl.substr(i + 1, close - i - 1));
    auto it = args.find(key);
    if (it == args.end()) throw Error("catalog template refers to unknown type " + key);
    out += "(" + print_type(it->second) + ")";
    i = close;
  }
  return out;
}

Term build(std::string_view tmpl, const TypeArgs& args) { return parse_term(expand(tmpl, args)); }

Type arrow(const Type& a, const Type& b) { return Type::arrow(a, b); }
Type tensor(const Type& a, const Type& b) { return Type::tensor(a, b); }

constexpr std::array<std::pair<AxiomId, std::string_view>, 6> kAxioms{{
    {AxiomId::B1, "B1"},
    {AxiomId::B2, "B2"},
    {AxiomId::B3, "B3"},
    {AxiomId::B4, "B4"},
    {AxiomId::B5a, "B5a"},
    {AxiomId::B5b, "B5b"},
}};

// Source text of the homomorphism building blocks. Free variables are
// ascribed everywhere so each block parses on its own and inside the others.
struct HomText {
  std::string pi0, pi1, t1, t2, t3, t4, t5, t6, t7, t8, t9;
};

HomText hom_text() {
  HomText h;
  h.pi0 = "(\\v:{B} * {C}. let <b0:{B}, c0:{C}> = v in b0)";
  h.pi1 = "(\\v:{AB} * {AC}. let <l0:{AB}, r0:{AC}> = v in r0)";
  h.t1 = "(phi : {Kphi}) (\\m:{ABC}. \\x:{A}. " + h.pi0 + " (m x))";
  h.t2 = "(\\j:{AB}. let <x':{B}, y':{C}> = (f : {Sf}) j (x : {A}) in <\\_:{A}. x', \\_:{A}. y'>)";
  h.t3 = "(p : {Y} -> {AC}) " + h.t2;
  h.t4 =
      "(\\p:{Y} -> {AC}. \\y:{A}. let <y0:{A}, y1:{A}> = (alpha : {A} -> {A} * {A}) y in "
      "(p : {Y} -> {AC}) (\\j:{AB}. let <x':{B}, y':{C}> = (f : {Sf}) j (y0 : {A}) in <\\_:{A}. x', \\_:{A}. y'>) y1)";
  h.t5 = "(\\q:{Y}. q (" + h.t1 + "))";
  h.t6 = "(\\u:{Z}. \\v:{Y}. " + h.pi1 + " (u v))";
  h.t7 = "(\\v:{AC}. \\u:{AB}. <u, v>)";
  h.t8 = "(\\i:{AC}. break i as <eta, k> @ {Y} in (g : {Sg}) k (eta " + h.t7 + "))";
  h.t9 = "break (h : {ABC}) as <phi, f> @ {AB} in break " + h.t5 + " as <psi, g> @ {R} in " + h.t8 + " (" + h.t4 +
         " (psi " + h.t6 + "))";
  return h;
}

TypeArgs hom_args(const Type& a, const Type& b, const Type& c) {
  Type ab = arrow(a, b), ac = arrow(a, c), abc = arrow(a, tensor(b, c));
  Type y = arrow(ab, tensor(ab, ac));
  Type z = arrow(y, tensor(ab, ac));
  Type r = arrow(y, ac);
  auto [kphi, sf] = ks_types(abc, ab);
  auto [kpsi, sg] = ks_types(z, r);
  return {{"A", a}, {"B", b}, {"C", c}, {"AB", ab}, {"AC", ac}, {"ABC", abc}, {"Y", y},
          {"Z", z}, {"R", r}, {"Kphi", kphi}, {"Sf", sf}, {"Sg", sg}};
}

}  // namespace

std::string_view axiom_name(AxiomId id) {
  for (auto& [a, name] : kAxioms)
    if (a == id) return name;
  return "?";
}

std::optional<AxiomId> parse_axiom_id(std::string_view text) {
  for (auto& [a, name] : kAxioms)
    if (name == text) return a;
  return std::nullopt;
}

const std::vector<AxiomId>& all_axioms() {
  static const std::vector<AxiomId> ids{AxiomId::B1, AxiomId::B2, AxiomId::B3, AxiomId::B4, AxiomId::B5a, AxiomId::B5b};
  return ids;
}

Term axiom_term(AxiomId id, const Type& a, const Type& b, const Type& c) {
  TypeArgs args{{"A", a}, {"B", b}, {"C", c}};
  switch (id) {
    case AxiomId::B1: return build("\\f:{A} -> {B}. \\g:{B} -> {C}. \\x:{A}. g (f x)", args);
    case AxiomId::B2: return build("\\v:{A} * {B}. let <x:{A}, y:{B}> = v in x", args);
    case AxiomId::B3: return build("\\v:{A} * {B}. let <x:{A}, y:{B}> = v in <y, x>", args);
    case AxiomId::B4:
      return build("\\v:{A} * ({A} -> {B}). let <x:{A}, f:{A} -> {B}> = v in break x as <phi, g> @ {B} in <phi f, g>",
                   args);
    case AxiomId::B5a: return build("\\f:{A} * {B} -> {C}. \\x:{A}. \\y:{B}. f <x, y>", args);
    case AxiomId::B5b: return build("\\g:{A} -> {B} -> {C}. \\a:{A} * {B}. let <x:{A}, y:{B}> = a in g x y", args);
  }
  throw Error("unknown axiom");
}

Type axiom_type(AxiomId id, const Type& a, const Type& b, const Type& c) {
  switch (id) {
    case AxiomId::B1: return arrow(arrow(a, b), arrow(arrow(b, c), arrow(a, c)));
    case AxiomId::B2: return arrow(tensor(a, b), a);
    case AxiomId::B3: return arrow(tensor(a, b), tensor(b, a));
    case AxiomId::B4: return arrow(tensor(a, arrow(a, b)), tensor(b, arrow(b, a)));
    case AxiomId::B5a: return arrow(arrow(tensor(a, b), c), arrow(a, arrow(b, c)));
    case AxiomId::B5b: return arrow(arrow(a, arrow(b, c)), arrow(tensor(a, b), c));
  }
  throw Error("unknown axiom");
}

Term identity_break(const Type& a) { return build("\\x:{A}. break x as <phi, f> @ {A} in phi f", {{"A", a}}); }

DivisibilityTerms divisibility_terms(const Type& a, const Type& b) {
  TypeArgs args{{"A", a}, {"B", b}};
  const std::string t = "\\x:{A}. break x as <phi, f> @ {B} in \\g:{A} -> {B}. <phi g, f>";
  const std::string u = "\\x':{A}. \\g':{A} -> {B}. let <m:{B}, n:{B} -> {A}> = (" + t + ") x' g' in m";
  return {build(t, args), build(u, args)};
}

Term axiom_L_term(const Type& a, const Type& b) {
  return build("\\D:({B} -> {A}) -> {A} -> {B}. \\x:{A}. break x as <phi, f> @ {B} in phi (D f)",
               {{"A", a}, {"B", b}});
}

std::vector<std::pair<std::string, Term>> homomorphism_parts(const Type& a, const Type& b, const Type& c) {
  TypeArgs args = hom_args(a, b, c);
  HomText h = hom_text();
  return {
      {"pi0", build(h.pi0, args)}, {"pi1", build(h.pi1, args)}, {"t1", build(h.t1, args)},
      {"t2", build(h.t2, args)},   {"t3", build(h.t3, args)},   {"t4", build(h.t4, args)},
      {"t5", build(h.t5, args)},   {"t6", build(h.t6, args)},   {"t7", build(h.t7, args)},
      {"t8", build(h.t8, args)},   {"t9", build(h.t9, args)},
  };
}

Term homomorphism_term(const Type& a, const Type& b, const Type& c) {
  HomText h = hom_text();
  return build("\\alpha:{A} -> {A} * {A}. \\h:{ABC}. " + h.t9, hom_args(a, b, c));
}

Term break_free_split(const Type& a, const Type& b) {
  Type k = k_type(a, b);
  TypeArgs args{{"A", a}, {"B", b}, {"K", k}};
  return build(
      "\\b4:{A} * ({A} -> {K}) -> {K} * ({K} -> {A}). \\x:{A}. "
      "let <phi:{K}, h:{K} -> {A}> = b4 <x, \\a:{A}. \\p:{A} -> {B}. p a> in <phi, \\b:{B}. h (\\g:{A} -> {B}. b)>",
      args);
}

Term overlap_closed(const Type& a, const Type& b) {
  return build(
      "break (let <x:{A} -> {A}, y:{B} -> {B}> = <\\a:{A}. a, \\b:{B}. b> in \\c:{A}. c) as <phi, f> @ {B} in "
      "<phi, f>",
      {{"A", a}, {"B", b}});
}

Term overlap_open(const Type& a, const Type& b) {
  return build(
      "break (let <x:{A}, y:{B}> = (z : {A} * {B}) in \\c:{A}. c) as <phi, f> @ {B} in "
      "phi (g : ({A} -> {A}) -> {B})",
      {{"A", a}, {"B", b}});
}

std::vector<std::string> catalog_names() {
  return {"identity", "divisibility-t", "divisibility-u", "axiom-L", "homomorphism",
          "break-free-split", "overlap-closed", "overlap-open"};
}

std::optional<Term> catalog_term(std::string_view name, const Type& a, const Type& b, const Type& c) {
  if (name == "identity") return identity_break(a);
  if (name == "divisibility-t") return divisibility_terms(a, b).t;
  if (name == "divisibility-u") return divisibility_terms(a, b).u;
  if (name == "axiom-L") return axiom_L_term(a, b);
  if (name == "homomorphism") return homomorphism_term(a, b, c);
  if (name == "break-free-split") return break_free_split(a, b);
  if (name == "overlap-closed") return overlap_closed(a, b);
  if (name == "overlap-open") return overlap_open(a, b);
  if (auto id = parse_axiom_id(name)) return axiom_term(*id, a, b, c);
  return std::nullopt;
}

}  // namespace bcalc
