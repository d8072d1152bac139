#pragma once

// Lifting property of a pair of maps. The shape is fixed as
//
//        top
//     A -----> E
//     |        |
//   f |        | g
//     v        v
//     B -----> Y
//       bottom
//
// f lifts against g when every commuting square (g . top == bottom . f)
// has a diagonal d: B -> E with d . f == top and g . d == bottom.

#include <optional>
#include <vector>

#include "fintop/morphism.hpp"

namespace fintop {

struct LiftingProblem {
  ContinuousMap left;   // f: A -> B
  ContinuousMap right;  // g: E -> Y
};

struct Square {
  ContinuousMap top;     // A -> E
  ContinuousMap bottom;  // B -> Y
};

struct LiftingResult {
  bool lifts = true;
  /// First square without a diagonal, when lifts is false.
  std::optional<Square> counterexample;
  explicit operator bool() const noexcept { return lifts; }
};

/// Bottoms outermost, tops innermost, both in monotone-search order.
std::vector<Square> enumerate_commuting_squares(const LiftingProblem& problem);

bool square_commutes(const LiftingProblem& problem, const Square& square);

/// Throws TopologyError when the square does not commute.
std::optional<ContinuousMap> find_diagonal(const LiftingProblem& problem, const Square& square);

LiftingResult has_lifting(const LiftingProblem& problem);

}  // namespace fintop
