#include <bit>
#include <stdexcept>

#include "fintop/axioms.hpp"

namespace fintop {

namespace {

constexpr std::size_t kMaxSubsetSearchPoints = 20;

using Bits = std::uint64_t;

// Raw-bit versions of the predicates; all arguments are subsets of the same space.
class Predicates {
 public:
  explicit Predicates(const FiniteSpace& space) : space_(space), comp_(component_ids(space)) {
    comp_bits_.assign(space.size(), 0);
    for (PointIndex x = 0; x < space.size(); ++x) comp_bits_[comp_[x]] |= Bits{1} << x;
  }

  Bits closure(Bits s) const {
    Bits out = 0;
    for (; s != 0; s &= s - 1) out |= space_.closure_bits(static_cast<PointIndex>(std::countr_zero(s)));
    return out;
  }

  Bits hull(Bits s) const {
    Bits out = 0;
    for (; s != 0; s &= s - 1) out |= space_.neighbourhood_bits(static_cast<PointIndex>(std::countr_zero(s)));
    return out;
  }

  // Union of the components meeting s.
  Bits saturate(Bits s) const {
    Bits out = 0;
    for (; s != 0; s &= s - 1) out |= comp_bits_[comp_[static_cast<PointIndex>(std::countr_zero(s))]];
    return out;
  }

  bool is_closed(Bits s) const { return closure(s) == s; }
  bool is_open(Bits s) const { return hull(s) == s; }

  bool distinguishable(PointIndex x, PointIndex y) const { return !space_.equivalent(x, y); }

  bool separated(Bits a, Bits b) const { return (a & closure(b)) == 0 && (b & closure(a)) == 0; }

  // The smallest open sets around a and b are their hulls.
  bool by_neighbourhoods(Bits a, Bits b) const { return (hull(a) & hull(b)) == 0; }

  bool by_closed_neighbourhoods(Bits a, Bits b) const { return (closure(hull(a)) & closure(hull(b))) == 0; }

  bool by_function(Bits a, Bits b) const { return (saturate(a) & saturate(b)) == 0; }

  bool precisely_by_function(Bits a, Bits b) const {
    return (a & b) == 0 && saturate(a) == a && saturate(b) == b;
  }

  std::size_t size() const { return space_.size(); }

 private:
  const FiniteSpace& space_;
  std::vector<std::size_t> comp_;
  std::vector<Bits> comp_bits_;
};

void require_width(const FiniteSpace& space, const SubsetMask& a, const SubsetMask& b) {
  if (a.width() != space.size() || b.width() != space.size()) {
    throw std::invalid_argument("subset width does not match space size");
  }
}

void require_subset_search(const FiniteSpace& space) {
  if (space.size() > kMaxSubsetSearchPoints) {
    throw std::invalid_argument("direct checks quantify over subsets and support at most " +
                                std::to_string(kMaxSubsetSearchPoints) + " points");
  }
}

template <class Pred>
bool all_distinct_pairs(std::size_t n, Pred&& pred) {
  for (PointIndex x = 0; x < n; ++x) {
    for (PointIndex y = 0; y < n; ++y) {
      if (x != y && !pred(x, y)) return false;
    }
  }
  return true;
}

std::vector<Bits> closed_sets(const Predicates& p) {
  std::vector<Bits> out;
  const Bits end = Bits{1} << p.size();
  for (Bits s = 0; s < end; ++s) {
    if (p.is_closed(s)) out.push_back(s);
  }
  return out;
}

template <class Pred>
bool all_disjoint_closed_pairs(const Predicates& p, Pred&& pred) {
  const auto closed = closed_sets(p);
  for (Bits a : closed) {
    for (Bits b : closed) {
      if ((a & b) == 0 && !pred(a, b)) return false;
    }
  }
  return true;
}

template <class Pred>
bool all_point_closed_pairs(const Predicates& p, Pred&& pred) {
  const auto closed = closed_sets(p);
  for (PointIndex x = 0; x < p.size(); ++x) {
    for (Bits f : closed) {
      if (!((f >> x) & 1U) && !pred(Bits{1} << x, f)) return false;
    }
  }
  return true;
}

bool check_base(const FiniteSpace& space, const Predicates& p, AxiomId id) {
  const std::size_t n = space.size();
  auto single = [](PointIndex x) { return Bits{1} << x; };
  switch (id) {
    case AxiomId::T0:
      return all_distinct_pairs(n, [&](PointIndex x, PointIndex y) { return p.distinguishable(x, y); });
    case AxiomId::R0:
      return all_distinct_pairs(n, [&](PointIndex x, PointIndex y) {
        return !p.distinguishable(x, y) || p.separated(single(x), single(y));
      });
    case AxiomId::T1:
      return all_distinct_pairs(n, [&](PointIndex x, PointIndex y) { return p.separated(single(x), single(y)); });
    case AxiomId::R1:
      return all_distinct_pairs(n, [&](PointIndex x, PointIndex y) {
        return !p.distinguishable(x, y) || p.by_neighbourhoods(single(x), single(y));
      });
    case AxiomId::T2:
      return all_distinct_pairs(
          n, [&](PointIndex x, PointIndex y) { return p.by_neighbourhoods(single(x), single(y)); });
    case AxiomId::T2_HALF:
      return all_distinct_pairs(
          n, [&](PointIndex x, PointIndex y) { return p.by_closed_neighbourhoods(single(x), single(y)); });
    case AxiomId::COMPLETELY_T2:
      return all_distinct_pairs(n, [&](PointIndex x, PointIndex y) { return p.by_function(single(x), single(y)); });
    case AxiomId::REGULAR:
      require_subset_search(space);
      return all_point_closed_pairs(p, [&](Bits x, Bits f) { return p.by_neighbourhoods(x, f); });
    case AxiomId::COMPLETELY_REGULAR:
      require_subset_search(space);
      return all_point_closed_pairs(p, [&](Bits x, Bits f) { return p.by_function(x, f); });
    case AxiomId::NORMAL:
      require_subset_search(space);
      return all_disjoint_closed_pairs(p, [&](Bits a, Bits b) { return p.by_neighbourhoods(a, b); });
    case AxiomId::NORMAL_URYSOHN:
      require_subset_search(space);
      return all_disjoint_closed_pairs(p, [&](Bits a, Bits b) { return p.by_function(a, b); });
    case AxiomId::PERFECTLY_NORMAL:
      require_subset_search(space);
      return all_disjoint_closed_pairs(p, [&](Bits a, Bits b) { return p.precisely_by_function(a, b); });
    case AxiomId::COMPLETELY_NORMAL: {
      require_subset_search(space);
      const Bits end = Bits{1} << n;
      for (Bits a = 0; a < end; ++a) {
        for (Bits b = 0; b < end; ++b) {
          if (p.separated(a, b) && !p.by_neighbourhoods(a, b)) return false;
        }
      }
      return true;
    }
    case AxiomId::TD:
      // {x} = U n Z is solvable iff it holds for the smallest open U and closed Z around x.
      for (PointIndex x = 0; x < n; ++x) {
        if ((space.closure_bits(x) & space.neighbourhood_bits(x)) != single(x)) return false;
      }
      return true;
    case AxiomId::EXTREMALLY_DISCONNECTED: {
      require_subset_search(space);
      const Bits end = Bits{1} << n;
      for (Bits o = 0; o < end; ++o) {
        if (p.is_open(o) && !p.is_open(p.closure(o))) return false;
      }
      return true;
    }
    case AxiomId::T3:
    case AxiomId::T3_HALF:
    case AxiomId::T4:
      break;
  }
  throw std::invalid_argument("not a base axiom");
}

}  // namespace

bool distinguishable(const FiniteSpace& space, PointIndex x, PointIndex y) {
  if (x >= space.size() || y >= space.size()) throw std::out_of_range("point index out of range");
  return !space.equivalent(x, y);
}

bool separated(const FiniteSpace& space, const SubsetMask& a, const SubsetMask& b) {
  require_width(space, a, b);
  return Predicates(space).separated(a.bits(), b.bits());
}

bool separated_by_neighbourhoods(const FiniteSpace& space, const SubsetMask& a, const SubsetMask& b) {
  require_width(space, a, b);
  return Predicates(space).by_neighbourhoods(a.bits(), b.bits());
}

bool separated_by_closed_neighbourhoods(const FiniteSpace& space, const SubsetMask& a, const SubsetMask& b) {
  require_width(space, a, b);
  return Predicates(space).by_closed_neighbourhoods(a.bits(), b.bits());
}

bool separated_by_function(const FiniteSpace& space, const SubsetMask& a, const SubsetMask& b) {
  require_width(space, a, b);
  return Predicates(space).by_function(a.bits(), b.bits());
}

bool precisely_separated_by_function(const FiniteSpace& space, const SubsetMask& a, const SubsetMask& b) {
  require_width(space, a, b);
  return Predicates(space).precisely_by_function(a.bits(), b.bits());
}

bool check_axiom_direct(const FiniteSpace& space, AxiomId id) {
  const Predicates p(space);
  switch (id) {
    case AxiomId::T3:
      return check_base(space, p, AxiomId::T0) && check_base(space, p, AxiomId::REGULAR);
    case AxiomId::T3_HALF:
      return check_base(space, p, AxiomId::T0) && check_base(space, p, AxiomId::COMPLETELY_REGULAR);
    case AxiomId::T4:
      return check_base(space, p, AxiomId::T1) && check_base(space, p, AxiomId::NORMAL);
    default:
      return check_base(space, p, id);
  }
}

}  // namespace fintop
