#pragma once

// Finite topological spaces stored as specialization preorders.
//
// Order convention used throughout the library: leq(x, y) holds iff
// y lies in the closure of {x}. In the arrow notation this is the arrow
// x > y (x "above" y): x is the more open point, y the more closed one.
// Closed sets contain the closure of each of their points; open sets
// contain every x with leq(x, y) for each of their points y.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fintop {

using PointIndex = std::size_t;
using Arrow = std::pair<PointIndex, PointIndex>;

inline constexpr std::size_t kMaxPoints = 63;

class TopologyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A set of points of one designated space, one bit per point.
class SubsetMask {
 public:
  SubsetMask() = default;
  explicit SubsetMask(std::size_t width, std::uint64_t bits = 0);

  static SubsetMask full(std::size_t width);
  static SubsetMask of(std::size_t width, std::initializer_list<PointIndex> points);

  std::size_t width() const noexcept { return width_; }
  std::uint64_t bits() const noexcept { return bits_; }

  bool contains(PointIndex p) const noexcept { return p < width_ && ((bits_ >> p) & 1U); }
  bool empty() const noexcept { return bits_ == 0; }
  std::size_t count() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }

  SubsetMask with(PointIndex p) const;
  SubsetMask complement() const noexcept;
  bool subset_of(const SubsetMask& other) const;
  bool intersects(const SubsetMask& other) const;
  std::vector<PointIndex> points() const;

  friend SubsetMask operator|(const SubsetMask& a, const SubsetMask& b);
  friend SubsetMask operator&(const SubsetMask& a, const SubsetMask& b);
  friend SubsetMask operator-(const SubsetMask& a, const SubsetMask& b);
  friend bool operator==(const SubsetMask&, const SubsetMask&) = default;

 private:
  std::uint64_t bits_ = 0;
  std::size_t width_ = 0;
};

inline std::uint64_t low_bits(std::size_t width) noexcept {
  return width >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
}

class FiniteSpace {
 public:
  /// The empty space.
  FiniteSpace() = default;

  std::size_t size() const noexcept { return up_.size(); }

  bool leq(PointIndex x, PointIndex y) const noexcept { return (up_[x] >> y) & 1U; }
  bool equivalent(PointIndex x, PointIndex y) const noexcept { return leq(x, y) && leq(y, x); }

  /// cl{x} as raw bits.
  std::uint64_t closure_bits(PointIndex x) const noexcept { return up_[x]; }
  /// The smallest open set containing y: all x with leq(x, y).
  std::uint64_t neighbourhood_bits(PointIndex y) const noexcept { return down_[y]; }

  bool has_labels() const noexcept { return !labels_.empty(); }
  /// Empty string when the space is unlabeled.
  const std::string& label(PointIndex x) const;
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<PointIndex> find_label(const std::string& label) const;
  /// Label when present, otherwise the decimal index.
  std::string display_name(PointIndex x) const;

  SubsetMask all() const { return SubsetMask::full(size()); }
  SubsetMask none() const { return SubsetMask(size()); }
  SubsetMask point(PointIndex x) const;

  /// Same relation, labels dropped or replaced.
  FiniteSpace relabeled(std::vector<std::string> labels) const;

  friend bool operator==(const FiniteSpace&, const FiniteSpace&) = default;

 private:
  friend FiniteSpace build_space(std::size_t, std::span<const Arrow>, std::vector<std::string>);
  friend FiniteSpace space_from_closures(std::vector<std::uint64_t>, std::vector<std::string>);

  std::vector<std::uint64_t> up_;
  std::vector<std::uint64_t> down_;
  std::vector<std::string> labels_;
};

/// Reflexive-transitive closure of the arrow set; an arrow (x, y) means y in cl{x}.
/// Labels are optional; when given there must be one distinct non-empty label per point.
FiniteSpace build_space(std::size_t n, std::span<const Arrow> arrows,
                        std::vector<std::string> labels = {});

/// From closure rows (row x = bits of cl{x}); rows must already be reflexive and transitive.
FiniteSpace space_from_closures(std::vector<std::uint64_t> rows, std::vector<std::string> labels = {});

FiniteSpace discrete_space(std::size_t n, std::vector<std::string> labels = {});
FiniteSpace antidiscrete_space(std::size_t n, std::vector<std::string> labels = {});
FiniteSpace point_space(std::string label = "*");
/// {a > b}: a open, b closed.
FiniteSpace sierpinski_space();

SubsetMask closure(const FiniteSpace& space, const SubsetMask& s);
SubsetMask interior(const FiniteSpace& space, const SubsetMask& s);
/// Smallest open superset.
SubsetMask open_hull(const FiniteSpace& space, const SubsetMask& s);
bool is_closed(const FiniteSpace& space, const SubsetMask& s);
bool is_open(const FiniteSpace& space, const SubsetMask& s);

/// Components of the comparability graph, ordered by their smallest point.
std::vector<SubsetMask> connected_components(const FiniteSpace& space);
/// Component number of every point, numbered as in connected_components.
std::vector<std::size_t> component_ids(const FiniteSpace& space);

/// Canonical generating arrows, sorted: each equivalence class of size k > 1
/// contributes the index-order cycle, and distinct classes are joined by
/// covering arrows between their smallest members.
std::vector<Arrow> generating_arrows(const FiniteSpace& space);

/// Witness bijection phi with leq(x, y) iff leq(phi x, phi y), if one exists.
std::optional<std::vector<PointIndex>> find_homeomorphism(const FiniteSpace& a, const FiniteSpace& b);
bool are_homeomorphic(const FiniteSpace& a, const FiniteSpace& b);
/// Invariant under homeomorphism; equal keys are necessary for homeomorphism.
std::uint64_t homeomorphism_invariant(const FiniteSpace& space);

}  // namespace fintop
