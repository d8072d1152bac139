#pragma once

// Separation predicates and axioms, each decided two ways: by the classical
// set-theoretic definition, and by a lifting property against a fixed map of
// finite spaces (or of a finite space and a model of the real line).

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fintop/space.hpp"

namespace fintop {

enum class AxiomId : std::uint8_t {
  T0,
  R0,
  T1,
  R1,
  T2,
  T2_HALF,
  COMPLETELY_T2,
  REGULAR,
  T3,
  COMPLETELY_REGULAR,
  T3_HALF,
  NORMAL,
  NORMAL_URYSOHN,
  T4,
  COMPLETELY_NORMAL,
  PERFECTLY_NORMAL,
  TD,
  EXTREMALLY_DISCONNECTED,
};

inline constexpr std::array<AxiomId, 18> kAllAxioms = {
    AxiomId::T0,
    AxiomId::R0,
    AxiomId::T1,
    AxiomId::R1,
    AxiomId::T2,
    AxiomId::T2_HALF,
    AxiomId::COMPLETELY_T2,
    AxiomId::REGULAR,
    AxiomId::T3,
    AxiomId::COMPLETELY_REGULAR,
    AxiomId::T3_HALF,
    AxiomId::NORMAL,
    AxiomId::NORMAL_URYSOHN,
    AxiomId::T4,
    AxiomId::COMPLETELY_NORMAL,
    AxiomId::PERFECTLY_NORMAL,
    AxiomId::TD,
    AxiomId::EXTREMALLY_DISCONNECTED,
};

/// Axioms whose direct and lifting verdicts must coincide on every space.
inline constexpr std::array<AxiomId, 12> kHardEquivalenceAxioms = {
    AxiomId::T0,     AxiomId::R0,       AxiomId::T1,
    AxiomId::T2,     AxiomId::T2_HALF,  AxiomId::REGULAR,
    AxiomId::NORMAL, AxiomId::EXTREMALLY_DISCONNECTED, AxiomId::PERFECTLY_NORMAL,
    AxiomId::COMPLETELY_T2, AxiomId::COMPLETELY_REGULAR, AxiomId::NORMAL_URYSOHN,
};

/// Axioms whose agreement is reported rather than required.
inline constexpr std::array<AxiomId, 2> kSoftEquivalenceAxioms = {AxiomId::TD, AxiomId::COMPLETELY_NORMAL};

std::string_view axiom_name(AxiomId id);
std::optional<AxiomId> parse_axiom_name(std::string_view name);

/// T3, T3_HALF and T4 are conjunctions of other axioms.
bool is_composite(AxiomId id);
/// Everything except R1.
bool has_lifting_formula(AxiomId id);
bool is_hard_equivalence(AxiomId id);
bool is_soft_equivalence(AxiomId id);

// ---- preliminary predicates ------------------------------------------------

bool distinguishable(const FiniteSpace& space, PointIndex x, PointIndex y);
/// A misses cl B and B misses cl A.
bool separated(const FiniteSpace& space, const SubsetMask& a, const SubsetMask& b);
bool separated_by_neighbourhoods(const FiniteSpace& space, const SubsetMask& a, const SubsetMask& b);
bool separated_by_closed_neighbourhoods(const FiniteSpace& space, const SubsetMask& a, const SubsetMask& b);
/// Some continuous real function is 0 on A and 1 on B. On a finite space real
/// functions are constant on components, so this holds iff no component meets both.
bool separated_by_function(const FiniteSpace& space, const SubsetMask& a, const SubsetMask& b);
/// Some continuous real function has zero set exactly A and one set exactly B:
/// A and B are disjoint unions of components.
bool precisely_separated_by_function(const FiniteSpace& space, const SubsetMask& a, const SubsetMask& b);

/// The classical definition.
bool check_axiom_direct(const FiniteSpace& space, AxiomId id);

// ---- lifting formulations ----------------------------------------------------

enum class FormulaBackend { pure_finite, real_line };

/// Which maps stand on the left of the lifting property.
enum class LeftFamily {
  fixed_map,            // left_text is a map; the right map is X -> {*}
  each_point,           // {x} -> X for every point
  each_injective_pair,  // {x,y} -> X for every injective map from the discrete pair
  empty_map,            // {} -> X
};

/// Real-line objects that stand on the right of some formulas. Each is the
/// interval [0,1], possibly with extra endpoints: 1' lies in the closure of 1,
/// 0' in the closure of 0.
enum class RealLineModel {
  none,
  interval_to_point,          // [0,1] -> {*}
  interval_with_doubled_one,  // [0,1] + {F} -> {x>F}, F = 1'
  interval_with_doubled_ends, // {0'} + [0,1] + {1'} -> {0=0'<x>1=1'}
  interval_over_open_point,   // [0,1] -> {0<X>1}
};

struct AxiomFormula {
  AxiomId id;
  FormulaBackend backend;
  LeftFamily left;
  std::string_view left_text;
  /// A map in notation for pure_finite formulas; for real_line formulas the
  /// right map's finite codomain.
  std::string_view right_text;
  RealLineModel model = RealLineModel::none;
};

/// One formula per non-composite axiom except R1, in kAllAxioms order.
const std::vector<AxiomFormula>& axiom_formulas();
const AxiomFormula& formula_for(AxiomId id);
/// The second display for extremal disconnectedness, with {Z'=Z} as codomain.
const AxiomFormula& extremally_disconnected_alternative();

/// A failing square, each map in notation syntax. Real-valued tops are
/// written as point:value lists where t and s stand for interior values.
struct LiftingWitness {
  std::string left;
  std::string top;
  std::string bottom;
};

struct AxiomVerdict {
  bool holds = true;
  std::optional<LiftingWitness> witness;
  explicit operator bool() const noexcept { return holds; }
};

AxiomVerdict check_lifting_formula(const FiniteSpace& space, const AxiomFormula& formula);
/// Throws std::invalid_argument for R1, which has no lifting formulation.
AxiomVerdict check_axiom_lifting(const FiniteSpace& space, AxiomId id);

}  // namespace fintop
