#include "fintop/lifting.hpp"

namespace fintop {

namespace {

// Raw-array form of the problem; avoids building ContinuousMap values in the loops.
class LiftingSearch {
 public:
  explicit LiftingSearch(const LiftingProblem& p)
      : f_(p.left),
        g_(p.right),
        a_(p.left.domain()),
        b_(p.left.codomain()),
        e_(p.right.domain()),
        y_(p.right.codomain()),
        fiber_(y_.size(), 0),
        bottoms_(b_, y_),
        tops_(a_, e_),
        diagonals_(b_, e_) {
    for (PointIndex e = 0; e < e_.size(); ++e) fiber_[g_(e)] |= std::uint64_t{1} << e;
  }

  // Visits (top, bottom) image pairs of commuting squares; stops when visit returns false.
  template <class Visitor>
  bool for_each_square(Visitor&& visit) {
    const std::vector<std::uint64_t> any(b_.size(), ~std::uint64_t{0});
    std::vector<std::uint64_t> top_allowed(a_.size());
    return bottoms_.run(any, [&](std::span<const PointIndex> bottom) {
      for (PointIndex a = 0; a < a_.size(); ++a) top_allowed[a] = fiber_[bottom[f_(a)]];
      const std::vector<PointIndex> bottom_copy(bottom.begin(), bottom.end());
      return tops_.run(top_allowed, [&](std::span<const PointIndex> top) { return visit(top, bottom_copy); });
    });
  }

  std::optional<std::vector<PointIndex>> diagonal(std::span<const PointIndex> top,
                                                  std::span<const PointIndex> bottom) {
    std::vector<std::uint64_t> allowed(b_.size());
    for (PointIndex b = 0; b < b_.size(); ++b) allowed[b] = fiber_[bottom[b]];
    for (PointIndex a = 0; a < a_.size(); ++a) allowed[f_(a)] &= std::uint64_t{1} << top[a];
    for (auto bits : allowed) {
      if (bits == 0) return std::nullopt;
    }
    return diagonals_.find(allowed);
  }

 private:
  const ContinuousMap& f_;
  const ContinuousMap& g_;
  const FiniteSpace& a_;
  const FiniteSpace& b_;
  const FiniteSpace& e_;
  const FiniteSpace& y_;
  std::vector<std::uint64_t> fiber_;  // g-fiber over each point of Y
  MonotoneSearch bottoms_;
  MonotoneSearch tops_;
  MonotoneSearch diagonals_;
};

Square make_square(const LiftingProblem& p, std::span<const PointIndex> top, std::span<const PointIndex> bottom) {
  return Square{trusted_map(p.left.domain_ref(), p.right.domain_ref(), {top.begin(), top.end()}),
                trusted_map(p.left.codomain_ref(), p.right.codomain_ref(), {bottom.begin(), bottom.end()})};
}

}  // namespace

std::vector<Square> enumerate_commuting_squares(const LiftingProblem& problem) {
  std::vector<Square> out;
  LiftingSearch search(problem);
  search.for_each_square([&](std::span<const PointIndex> top, std::span<const PointIndex> bottom) {
    out.push_back(make_square(problem, top, bottom));
    return true;
  });
  return out;
}

bool square_commutes(const LiftingProblem& problem, const Square& square) {
  const auto& f = problem.left;
  const auto& g = problem.right;
  if (!(square.top.domain() == f.domain()) || !(square.top.codomain() == g.domain()) ||
      !(square.bottom.domain() == f.codomain()) || !(square.bottom.codomain() == g.codomain())) {
    return false;
  }
  for (PointIndex a = 0; a < f.domain().size(); ++a) {
    if (g(square.top(a)) != square.bottom(f(a))) return false;
  }
  return true;
}

std::optional<ContinuousMap> find_diagonal(const LiftingProblem& problem, const Square& square) {
  if (!square_commutes(problem, square)) throw TopologyError("square does not commute");
  LiftingSearch search(problem);
  auto image = search.diagonal(square.top.image(), square.bottom.image());
  if (!image) return std::nullopt;
  return trusted_map(problem.left.codomain_ref(), problem.right.domain_ref(), std::move(*image));
}

LiftingResult has_lifting(const LiftingProblem& problem) {
  LiftingResult result;
  LiftingSearch search(problem);
  search.for_each_square([&](std::span<const PointIndex> top, std::span<const PointIndex> bottom) {
    if (search.diagonal(top, bottom)) return true;
    result.lifts = false;
    result.counterexample = make_square(problem, top, bottom);
    return false;
  });
  return result;
}

}  // namespace fintop
