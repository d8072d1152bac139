#pragma once

#include <algorithm>
#include <memory>
#include <numeric>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "fintop/space.hpp"

namespace fintop {

using SpaceRef = std::shared_ptr<const FiniteSpace>;

inline SpaceRef share(FiniteSpace space) { return std::make_shared<const FiniteSpace>(std::move(space)); }

/// (x, y) with leq(x, y) in the domain but not leq(f x, f y) in the codomain.
struct ContinuityViolation {
  PointIndex x = 0;
  PointIndex y = 0;
  friend bool operator==(const ContinuityViolation&, const ContinuityViolation&) = default;
};

class ContinuityError : public TopologyError {
 public:
  ContinuityError(const std::string& what, ContinuityViolation witness) : TopologyError(what), witness_(witness) {}
  ContinuityViolation witness() const noexcept { return witness_; }

 private:
  ContinuityViolation witness_;
};

/// First violating pair in (x, y) order, or nothing when f is monotone.
std::optional<ContinuityViolation> find_continuity_violation(const FiniteSpace& dom, const FiniteSpace& cod,
                                                             std::span<const PointIndex> image);

/// A monotone total map between two finite spaces. Monotone is the same as continuous here.
class ContinuousMap {
 public:
  /// Throws TopologyError on a bad image array and ContinuityError when not monotone.
  ContinuousMap(SpaceRef dom, SpaceRef cod, std::vector<PointIndex> image);

  const FiniteSpace& domain() const noexcept { return *dom_; }
  const FiniteSpace& codomain() const noexcept { return *cod_; }
  const SpaceRef& domain_ref() const noexcept { return dom_; }
  const SpaceRef& codomain_ref() const noexcept { return cod_; }

  PointIndex operator()(PointIndex x) const { return image_.at(x); }
  std::span<const PointIndex> image() const noexcept { return image_; }

  friend bool operator==(const ContinuousMap& a, const ContinuousMap& b) {
    return a.image_ == b.image_ && *a.dom_ == *b.dom_ && *a.cod_ == *b.cod_;
  }

 private:
  ContinuousMap(SpaceRef dom, SpaceRef cod, std::vector<PointIndex> image, bool /*trusted*/)
      : dom_(std::move(dom)), cod_(std::move(cod)), image_(std::move(image)) {}
  friend ContinuousMap trusted_map(SpaceRef, SpaceRef, std::vector<PointIndex>);

  SpaceRef dom_;
  SpaceRef cod_;
  std::vector<PointIndex> image_;
};

/// Skips validation; for images produced by the monotone search below.
ContinuousMap trusted_map(SpaceRef dom, SpaceRef cod, std::vector<PointIndex> image);

using ContinuityCheck = std::variant<ContinuousMap, ContinuityViolation>;

/// The validated map, or the first violating pair.
ContinuityCheck check_continuous(SpaceRef dom, SpaceRef cod, std::vector<PointIndex> image);

ContinuousMap identity_map(SpaceRef space);
ContinuousMap constant_map(SpaceRef dom, SpaceRef cod, PointIndex value);
/// g after f. Requires cod(f) == dom(g).
ContinuousMap compose(const ContinuousMap& g, const ContinuousMap& f);

/// Domain points ordered closed-first (ascending closure size, then index).
/// This is a linear extension of the reversed specialization order.
std::vector<PointIndex> search_order(const FiniteSpace& dom);

/// Backtracking over monotone maps dom -> cod with f(x) restricted to the bits of
/// allowed[x]. Candidates are pruned against every already-assigned comparable
/// point, and tried lowest image first. The visitor receives the complete image
/// array and returns false to stop; the call returns false iff it was stopped.
class MonotoneSearch {
 public:
  MonotoneSearch(const FiniteSpace& dom, const FiniteSpace& cod);

  template <class Visitor>
  bool run(std::span<const std::uint64_t> allowed, Visitor&& visit) {
    if (dom_.size() == 0) return visit(std::span<const PointIndex>(image_));
    if (cod_.size() == 0) return true;
    return step(0, allowed, visit);
  }

  /// Any monotone map respecting allowed, or nothing.
  std::optional<std::vector<PointIndex>> find(std::span<const std::uint64_t> allowed);

 private:
  struct Link {
    PointIndex other;
    bool other_below;  // leq(other, x): f(x) must lie in cl{f(other)}
    bool other_above;  // leq(x, other): f(other) must lie in cl{f(x)}
  };

  template <class Visitor>
  bool step(std::size_t k, std::span<const std::uint64_t> allowed, Visitor& visit) {
    const PointIndex x = order_[k];
    std::uint64_t cand = allowed[x] & low_bits(cod_.size());
    for (const auto& link : links_[k]) {
      const PointIndex fo = image_[link.other];
      if (link.other_below) cand &= cod_.closure_bits(fo);
      if (link.other_above) cand &= cod_.neighbourhood_bits(fo);
    }
    while (cand != 0) {
      image_[x] = static_cast<PointIndex>(std::countr_zero(cand));
      cand &= cand - 1;
      if (k + 1 == order_.size()) {
        if (!visit(std::span<const PointIndex>(image_))) return false;
      } else if (!step(k + 1, allowed, visit)) {
        return false;
      }
    }
    return true;
  }

  const FiniteSpace& dom_;
  const FiniteSpace& cod_;
  std::vector<PointIndex> order_;
  std::vector<std::vector<Link>> links_;
  std::vector<PointIndex> image_;
};

/// All continuous maps dom -> cod in search order.
std::vector<ContinuousMap> enumerate_continuous_maps(const SpaceRef& dom, const SpaceRef& cod);
std::size_t count_continuous_maps(const FiniteSpace& dom, const FiniteSpace& cod);

/// Some continuous p: dom(i) -> dom(q) with q after p equal to i.
std::optional<ContinuousMap> find_factorization(const ContinuousMap& i, const ContinuousMap& q);

}  // namespace fintop
