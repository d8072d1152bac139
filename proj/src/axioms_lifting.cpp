#include <array>
#include <map>
#include <stdexcept>

#include "fintop/axioms.hpp"
#include "fintop/lifting.hpp"
#include "fintop/notation.hpp"

namespace fintop {

namespace {

constexpr std::array<std::string_view, 18> kNames = {
    "T0",      "R0",     "T1",             "R1", "T2",                "T2_HALF",          "COMPLETELY_T2",
    "REGULAR", "T3",     "COMPLETELY_REGULAR", "T3_HALF", "NORMAL", "NORMAL_URYSOHN", "T4",
    "COMPLETELY_NORMAL", "PERFECTLY_NORMAL", "TD", "EXTREMALLY_DISCONNECTED",
};

using enum FormulaBackend;
using enum LeftFamily;

// Transcribed displays. Overbars are written as a '~' prefix.
const std::vector<AxiomFormula> kFormulas = {
    {AxiomId::T0, pure_finite, fixed_map, "{x<->y} -> {x=y}", "X -> {*}"},
    {AxiomId::R0, pure_finite, fixed_map, "{x>y} -> {x<->y}", "X -> {*}"},
    {AxiomId::T1, pure_finite, fixed_map, "{x>y} -> {x=y}", "X -> {*}"},
    {AxiomId::T2, pure_finite, each_injective_pair, "{x,y} -> X", "{x>X<y} -> {x=X=y}"},
    {AxiomId::T2_HALF, pure_finite, each_injective_pair, "{x,y} -> X", "{x>x'<X>y'<y} -> {x=x'=X=y'=y}"},
    {AxiomId::COMPLETELY_T2, real_line, each_injective_pair, "{x,y} -> X", "[0,1] -> {*}",
     RealLineModel::interval_to_point},
    {AxiomId::REGULAR, pure_finite, each_point, "{x} -> X", "{x>X<U>F} -> {x=X=U>F}"},
    {AxiomId::COMPLETELY_REGULAR, real_line, each_point, "{x} -> X", "[0,1]+{F} -> {x>F}",
     RealLineModel::interval_with_doubled_one},
    {AxiomId::NORMAL, pure_finite, empty_map, "{} -> X", "{x<x'>X<y'>y} -> {x<x'=X=y'>y}"},
    {AxiomId::NORMAL_URYSOHN, real_line, empty_map, "{} -> X", "{0'}+[0,1]+{1'} -> {0=0'<x>1=1'}",
     RealLineModel::interval_with_doubled_ends},
    {AxiomId::COMPLETELY_NORMAL, pure_finite, empty_map, "{} -> X", "{X<A<->U>U'<W>V'<V<->B>X} -> {U=U',V'=V}"},
    {AxiomId::PERFECTLY_NORMAL, real_line, empty_map, "{} -> X", "[0,1] -> {0<X>1}",
     RealLineModel::interval_over_open_point},
    {AxiomId::TD, pure_finite, each_point, "{x} -> X",
     "{U~Z~x>UZx>~UZx, U~Zx<->U~Z~x>~U~Zx<->~U~Z~x>~UZx<->~UZ~x} -> "
     "{U~Z~x=~U~Z~x=~UZ~x<->UZx=~UZx=U~Zx=~U~Zx}"},
    {AxiomId::EXTREMALLY_DISCONNECTED, pure_finite, empty_map, "{} -> X", "{U>Z',Z<V} -> {U>Z'=Z<V}"},
};

const AxiomFormula kExtremallyDisconnectedAlt = {AxiomId::EXTREMALLY_DISCONNECTED, pure_finite, empty_map,
                                                 "{} -> X", "{U>Z',Z<V} -> {Z'=Z}"};

// ---- real-line models --------------------------------------------------------
//
// A continuous map from a finite space into one of the models has finite
// image. Distinct reals are incomparable, so comparable points take equal real
// values, except that a point valued 0 (or 1) may sit above points valued 0'
// (or 1'). On each component the map therefore uses one real value r plus,
// when r is a doubled endpoint, its partner, and the partner-valued points
// form a closed set. Interior values only matter up to equality, so two
// named ones (t, s) and one fresh one cover every top map.

enum Token : std::uint8_t { kLowDouble, kLow, kHigh, kHighDouble, kInnerT, kInnerS, kInnerFree, kTokenCount };

constexpr std::array<std::string_view, kTokenCount> kTokenNames = {"0'", "0", "1", "1'", "t", "s", "u"};

struct ModelImage {
  // Point of the finite codomain that each token maps to; absent tokens are empty.
  std::array<std::optional<PointIndex>, kTokenCount> image;

  std::optional<Token> partner(Token r) const {
    if (r == kLow && image[kLowDouble]) return kLowDouble;
    if (r == kHigh && image[kHighDouble]) return kHighDouble;
    return std::nullopt;
  }
};

ModelImage model_image(RealLineModel model, const FiniteSpace& codomain) {
  auto at = [&](const char* label) {
    auto p = codomain.find_label(label);
    if (!p) throw std::logic_error(std::string("real-line codomain lacks point ") + label);
    return *p;
  };
  ModelImage m;
  auto interval = [&](PointIndex low, PointIndex inner, PointIndex high) {
    m.image[kLow] = low;
    m.image[kInnerT] = m.image[kInnerS] = m.image[kInnerFree] = inner;
    m.image[kHigh] = high;
  };
  switch (model) {
    case RealLineModel::interval_to_point: {
      const auto pt = at("*");
      interval(pt, pt, pt);
      break;
    }
    case RealLineModel::interval_with_doubled_one: {
      const auto x = at("x");
      interval(x, x, x);
      m.image[kHighDouble] = at("F");
      break;
    }
    case RealLineModel::interval_with_doubled_ends: {
      const auto x = at("x");
      interval(x, x, x);
      m.image[kLowDouble] = at("0=0'");
      m.image[kHighDouble] = at("1=1'");
      break;
    }
    case RealLineModel::interval_over_open_point:
      interval(at("0"), at("X"), at("1"));
      break;
    case RealLineModel::none:
      throw std::logic_error("formula has no real-line model");
  }
  return m;
}

// Whether some continuous d: X -> model has g . d == bottom and d(x) in pins[x].
bool real_diagonal_exists(const FiniteSpace& space, const std::vector<SubsetMask>& components,
                          const ModelImage& model, std::span<const PointIndex> bottom,
                          std::span<const std::uint8_t> pins) {
  for (const auto& component : components) {
    bool feasible = false;
    for (Token r : {kLow, kHigh, kInnerT, kInnerS, kInnerFree}) {
      if (!model.image[r]) continue;
      const auto partner = model.partner(r);
      std::uint64_t forced_double = 0;
      std::uint64_t forced_real = 0;
      bool ok = true;
      for (PointIndex a : component.points()) {
        std::uint8_t allowed = 0;
        if (*model.image[r] == bottom[a]) allowed |= std::uint8_t(1U << r);
        if (partner && *model.image[*partner] == bottom[a]) allowed |= std::uint8_t(1U << *partner);
        allowed &= pins[a];
        if (allowed == 0) {
          ok = false;
          break;
        }
        if (partner && allowed == (1U << *partner)) forced_double |= std::uint64_t{1} << a;
        if (allowed == (1U << r)) forced_real |= std::uint64_t{1} << a;
      }
      if (!ok) continue;
      const auto doubled = closure(space, SubsetMask(space.size(), forced_double));
      if ((doubled.bits() & forced_real) != 0) continue;
      feasible = true;
      break;
    }
    if (!feasible) return false;
  }
  return true;
}

// ---- left families -----------------------------------------------------------

std::vector<ContinuousMap> left_instances(const AxiomFormula& formula, const SpaceRef& x) {
  std::vector<ContinuousMap> out;
  switch (formula.left) {
    case LeftFamily::fixed_map:
      out.push_back(parse_map(formula.left_text));
      break;
    case LeftFamily::each_point: {
      auto a = share(point_space("x"));
      for (PointIndex p = 0; p < x->size(); ++p) out.push_back(trusted_map(a, x, {p}));
      break;
    }
    case LeftFamily::each_injective_pair: {
      auto a = share(discrete_space(2, {"x", "y"}));
      for (PointIndex p = 0; p < x->size(); ++p) {
        for (PointIndex q = 0; q < x->size(); ++q) {
          if (p != q) out.push_back(trusted_map(a, x, {p, q}));
        }
      }
      break;
    }
    case LeftFamily::empty_map:
      out.push_back(trusted_map(share(FiniteSpace()), x, {}));
      break;
  }
  return out;
}

std::string_view real_codomain_text(std::string_view right_text) {
  const auto arrow = right_text.find("->");
  if (arrow == std::string_view::npos) throw std::logic_error("real-line formula without '->'");
  return right_text.substr(arrow + 2);
}

std::string describe_real_top(const ContinuousMap& left, std::span<const Token> tokens) {
  std::string out = "{";
  for (PointIndex a = 0; a < tokens.size(); ++a) {
    if (a > 0) out += ", ";
    out += left.domain().label(a) + ":" + std::string(kTokenNames[tokens[a]]);
  }
  return out + "}";
}

AxiomVerdict check_real_line(const AxiomFormula& formula, const SpaceRef& x) {
  const auto y = share(parse_space(real_codomain_text(formula.right_text)));
  const ModelImage model = model_image(formula.model, *y);
  const auto components = connected_components(*x);
  const std::vector<std::uint64_t> any(x->size(), ~std::uint64_t{0});

  AxiomVerdict verdict;
  for (const auto& left : left_instances(formula, x)) {
    const std::size_t na = left.domain().size();
    MonotoneSearch bottoms(*x, *y);
    bottoms.run(any, [&](std::span<const PointIndex> bottom) {
      // Candidate tokens for each point of the left domain, then every combination.
      std::vector<std::vector<Token>> choices(na);
      for (PointIndex a = 0; a < na; ++a) {
        for (Token t : {kLowDouble, kLow, kInnerT, kInnerS, kHigh, kHighDouble}) {
          if (model.image[t] && *model.image[t] == bottom[left(a)]) choices[a].push_back(t);
        }
        if (choices[a].empty()) return true;
      }
      std::vector<std::size_t> pick(na, 0);
      std::vector<Token> top(na);
      while (true) {
        std::vector<std::uint8_t> pins(x->size(), 0xFF);
        for (PointIndex a = 0; a < na; ++a) {
          top[a] = choices[a][pick[a]];
          pins[left(a)] &= std::uint8_t(1U << top[a]);
        }
        if (!real_diagonal_exists(*x, components, model, bottom, pins)) {
          verdict.holds = false;
          verdict.witness = LiftingWitness{
              format_map(left), describe_real_top(left, top),
              format_map(trusted_map(x, y, std::vector<PointIndex>(bottom.begin(), bottom.end())))};
          return false;
        }
        std::size_t k = 0;
        while (k < na && ++pick[k] == choices[k].size()) pick[k++] = 0;
        if (k == na) return true;
      }
    });
    if (!verdict.holds) return verdict;
  }
  return verdict;
}

AxiomVerdict check_pure_finite(const AxiomFormula& formula, const SpaceRef& x) {
  std::optional<ContinuousMap> right;
  if (formula.left == LeftFamily::fixed_map) {
    right = constant_map(x, share(point_space()), 0);
  } else {
    right = parse_map(formula.right_text);
  }
  for (const auto& left : left_instances(formula, x)) {
    const LiftingProblem problem{left, *right};
    const auto result = has_lifting(problem);
    if (!result.lifts) {
      return AxiomVerdict{false, LiftingWitness{format_map(left), format_map(result.counterexample->top),
                                                format_map(result.counterexample->bottom)}};
    }
  }
  return {};
}

}  // namespace

std::string_view axiom_name(AxiomId id) {
  const auto i = static_cast<std::size_t>(id);
  if (i >= kNames.size()) throw std::invalid_argument("invalid axiom id");
  return kNames[i];
}

std::optional<AxiomId> parse_axiom_name(std::string_view name) {
  for (auto id : kAllAxioms) {
    if (axiom_name(id) == name) return id;
  }
  return std::nullopt;
}

bool is_composite(AxiomId id) { return id == AxiomId::T3 || id == AxiomId::T3_HALF || id == AxiomId::T4; }

bool has_lifting_formula(AxiomId id) { return id != AxiomId::R1; }

bool is_hard_equivalence(AxiomId id) {
  return std::find(kHardEquivalenceAxioms.begin(), kHardEquivalenceAxioms.end(), id) != kHardEquivalenceAxioms.end();
}

bool is_soft_equivalence(AxiomId id) {
  return std::find(kSoftEquivalenceAxioms.begin(), kSoftEquivalenceAxioms.end(), id) != kSoftEquivalenceAxioms.end();
}

const std::vector<AxiomFormula>& axiom_formulas() { return kFormulas; }

const AxiomFormula& formula_for(AxiomId id) {
  for (const auto& f : kFormulas) {
    if (f.id == id) return f;
  }
  throw std::invalid_argument("no lifting formula for " + std::string(axiom_name(id)));
}

const AxiomFormula& extremally_disconnected_alternative() { return kExtremallyDisconnectedAlt; }

AxiomVerdict check_lifting_formula(const FiniteSpace& space, const AxiomFormula& formula) {
  const auto x = share(space);
  return formula.backend == FormulaBackend::real_line ? check_real_line(formula, x) : check_pure_finite(formula, x);
}

AxiomVerdict check_axiom_lifting(const FiniteSpace& space, AxiomId id) {
  auto both = [&](AxiomId a, AxiomId b) {
    auto first = check_lifting_formula(space, formula_for(a));
    if (!first.holds) return first;
    return check_lifting_formula(space, formula_for(b));
  };
  switch (id) {
    case AxiomId::R1:
      throw std::invalid_argument("R1 has no lifting formulation");
    case AxiomId::T3:
      return both(AxiomId::T0, AxiomId::REGULAR);
    case AxiomId::T3_HALF:
      return both(AxiomId::T0, AxiomId::COMPLETELY_REGULAR);
    case AxiomId::T4:
      return both(AxiomId::T1, AxiomId::NORMAL);
    default:
      return check_lifting_formula(space, formula_for(id));
  }
}

}  // namespace fintop
