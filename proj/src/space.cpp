#include "fintop/space.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace fintop {

namespace {

void require_width(const SubsetMask& a, std::size_t width) {
  if (a.width() != width) {
    std::ostringstream msg;
    msg << "subset width " << a.width() << " does not match space size " << width;
    throw std::invalid_argument(msg.str());
  }
}

void require_same_width(const SubsetMask& a, const SubsetMask& b) { require_width(b, a.width()); }

template <class F>
void for_each_bit(std::uint64_t bits, F&& f) {
  while (bits != 0) {
    f(static_cast<PointIndex>(std::countr_zero(bits)));
    bits &= bits - 1;
  }
}

void check_labels(const std::vector<std::string>& labels, std::size_t n) {
  if (labels.empty()) return;
  if (labels.size() != n) {
    throw TopologyError("expected " + std::to_string(n) + " labels, got " + std::to_string(labels.size()));
  }
  std::set<std::string> seen;
  for (const auto& l : labels) {
    if (l.empty()) throw TopologyError("empty point label");
    if (!seen.insert(l).second) throw TopologyError("duplicate point label '" + l + "'");
  }
}

std::vector<std::uint64_t> transpose(const std::vector<std::uint64_t>& rows) {
  std::vector<std::uint64_t> cols(rows.size(), 0);
  for (PointIndex x = 0; x < rows.size(); ++x) {
    for_each_bit(rows[x], [&](PointIndex y) { cols[y] |= std::uint64_t{1} << x; });
  }
  return cols;
}

}  // namespace

SubsetMask::SubsetMask(std::size_t width, std::uint64_t bits) : bits_(bits), width_(width) {
  if (width > kMaxPoints) throw std::invalid_argument("subset width exceeds " + std::to_string(kMaxPoints));
  if ((bits & ~low_bits(width)) != 0) throw std::invalid_argument("subset bits outside width");
}

SubsetMask SubsetMask::full(std::size_t width) { return SubsetMask(width, low_bits(width)); }

SubsetMask SubsetMask::of(std::size_t width, std::initializer_list<PointIndex> points) {
  SubsetMask s(width);
  for (auto p : points) s = s.with(p);
  return s;
}

SubsetMask SubsetMask::with(PointIndex p) const {
  if (p >= width_) throw std::out_of_range("point " + std::to_string(p) + " outside subset width");
  return SubsetMask(width_, bits_ | (std::uint64_t{1} << p));
}

SubsetMask SubsetMask::complement() const noexcept {
  SubsetMask s;
  s.width_ = width_;
  s.bits_ = ~bits_ & low_bits(width_);
  return s;
}

bool SubsetMask::subset_of(const SubsetMask& other) const {
  require_same_width(*this, other);
  return (bits_ & ~other.bits_) == 0;
}

bool SubsetMask::intersects(const SubsetMask& other) const {
  require_same_width(*this, other);
  return (bits_ & other.bits_) != 0;
}

std::vector<PointIndex> SubsetMask::points() const {
  std::vector<PointIndex> out;
  for_each_bit(bits_, [&](PointIndex p) { out.push_back(p); });
  return out;
}

SubsetMask operator|(const SubsetMask& a, const SubsetMask& b) {
  require_same_width(a, b);
  return SubsetMask(a.width_, a.bits_ | b.bits_);
}

SubsetMask operator&(const SubsetMask& a, const SubsetMask& b) {
  require_same_width(a, b);
  return SubsetMask(a.width_, a.bits_ & b.bits_);
}

SubsetMask operator-(const SubsetMask& a, const SubsetMask& b) {
  require_same_width(a, b);
  return SubsetMask(a.width_, a.bits_ & ~b.bits_);
}

const std::string& FiniteSpace::label(PointIndex x) const {
  static const std::string kNone;
  if (x >= size()) throw std::out_of_range("point " + std::to_string(x) + " out of range");
  return labels_.empty() ? kNone : labels_[x];
}

std::optional<PointIndex> FiniteSpace::find_label(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<PointIndex>(it - labels_.begin());
}

std::string FiniteSpace::display_name(PointIndex x) const {
  return labels_.empty() ? std::to_string(x) : labels_.at(x);
}

SubsetMask FiniteSpace::point(PointIndex x) const { return SubsetMask(size()).with(x); }

FiniteSpace FiniteSpace::relabeled(std::vector<std::string> labels) const {
  check_labels(labels, size());
  FiniteSpace s = *this;
  s.labels_ = std::move(labels);
  return s;
}

FiniteSpace build_space(std::size_t n, std::span<const Arrow> arrows, std::vector<std::string> labels) {
  if (n > kMaxPoints) throw TopologyError("spaces are limited to " + std::to_string(kMaxPoints) + " points");
  check_labels(labels, n);
  std::vector<std::uint64_t> rows(n);
  for (PointIndex x = 0; x < n; ++x) rows[x] = std::uint64_t{1} << x;
  for (const auto& [x, y] : arrows) {
    if (x >= n || y >= n) {
      std::ostringstream msg;
      msg << "arrow (" << x << "," << y << ") out of range for " << n << " points";
      throw TopologyError(msg.str());
    }
    rows[x] |= std::uint64_t{1} << y;
  }
  // Warshall on bit rows.
  for (PointIndex k = 0; k < n; ++k) {
    for (PointIndex i = 0; i < n; ++i) {
      if ((rows[i] >> k) & 1U) rows[i] |= rows[k];
    }
  }
  FiniteSpace s;
  s.down_ = transpose(rows);
  s.up_ = std::move(rows);
  s.labels_ = std::move(labels);
  return s;
}

FiniteSpace space_from_closures(std::vector<std::uint64_t> rows, std::vector<std::string> labels) {
  const std::size_t n = rows.size();
  if (n > kMaxPoints) throw TopologyError("spaces are limited to " + std::to_string(kMaxPoints) + " points");
  check_labels(labels, n);
  for (PointIndex x = 0; x < n; ++x) {
    if ((rows[x] & ~low_bits(n)) != 0) throw TopologyError("closure row has bits outside the space");
    if (!((rows[x] >> x) & 1U)) throw TopologyError("closure relation is not reflexive");
    std::uint64_t reach = rows[x];
    for_each_bit(rows[x], [&](PointIndex y) { reach |= rows[y]; });
    if (reach != rows[x]) throw TopologyError("closure relation is not transitive");
  }
  FiniteSpace s;
  s.down_ = transpose(rows);
  s.up_ = std::move(rows);
  s.labels_ = std::move(labels);
  return s;
}

FiniteSpace discrete_space(std::size_t n, std::vector<std::string> labels) {
  return build_space(n, {}, std::move(labels));
}

FiniteSpace antidiscrete_space(std::size_t n, std::vector<std::string> labels) {
  std::vector<Arrow> arrows;
  for (PointIndex x = 0; x < n; ++x) {
    for (PointIndex y = 0; y < n; ++y) arrows.emplace_back(x, y);
  }
  return build_space(n, arrows, std::move(labels));
}

FiniteSpace point_space(std::string label) { return build_space(1, {}, {std::move(label)}); }

FiniteSpace sierpinski_space() {
  const Arrow arrow{0, 1};
  return build_space(2, std::span<const Arrow>(&arrow, 1), {"a", "b"});
}

SubsetMask closure(const FiniteSpace& space, const SubsetMask& s) {
  require_width(s, space.size());
  std::uint64_t out = 0;
  for_each_bit(s.bits(), [&](PointIndex x) { out |= space.closure_bits(x); });
  return SubsetMask(space.size(), out);
}

SubsetMask open_hull(const FiniteSpace& space, const SubsetMask& s) {
  require_width(s, space.size());
  std::uint64_t out = 0;
  for_each_bit(s.bits(), [&](PointIndex y) { out |= space.neighbourhood_bits(y); });
  return SubsetMask(space.size(), out);
}

SubsetMask interior(const FiniteSpace& space, const SubsetMask& s) {
  return closure(space, s.complement()).complement();
}

bool is_closed(const FiniteSpace& space, const SubsetMask& s) { return closure(space, s) == s; }

bool is_open(const FiniteSpace& space, const SubsetMask& s) { return is_closed(space, s.complement()); }

std::vector<std::size_t> component_ids(const FiniteSpace& space) {
  const std::size_t n = space.size();
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> ids(n, kUnset);
  std::size_t next = 0;
  for (PointIndex start = 0; start < n; ++start) {
    if (ids[start] != kUnset) continue;
    std::uint64_t comp = 0;
    std::uint64_t frontier = std::uint64_t{1} << start;
    while (frontier != 0) {
      comp |= frontier;
      std::uint64_t grown = 0;
      for_each_bit(frontier, [&](PointIndex x) {
        grown |= space.closure_bits(x) | space.neighbourhood_bits(x);
      });
      frontier = grown & ~comp;
    }
    for_each_bit(comp, [&](PointIndex x) { ids[x] = next; });
    ++next;
  }
  return ids;
}

std::vector<SubsetMask> connected_components(const FiniteSpace& space) {
  const auto ids = component_ids(space);
  std::size_t count = 0;
  for (auto id : ids) count = std::max(count, id + 1);
  std::vector<SubsetMask> out(count, space.none());
  for (PointIndex x = 0; x < ids.size(); ++x) out[ids[x]] = out[ids[x]].with(x);
  return out;
}

std::vector<Arrow> generating_arrows(const FiniteSpace& space) {
  const std::size_t n = space.size();
  std::vector<PointIndex> rep(n);
  for (PointIndex x = 0; x < n; ++x) {
    rep[x] = static_cast<PointIndex>(std::countr_zero(space.closure_bits(x) & space.neighbourhood_bits(x)));
  }
  std::vector<Arrow> arrows;
  for (PointIndex r = 0; r < n; ++r) {
    if (rep[r] != r) continue;
    std::vector<PointIndex> members;
    for (PointIndex x = r; x < n; ++x) {
      if (rep[x] == r) members.push_back(x);
    }
    if (members.size() > 1) {
      for (std::size_t i = 0; i < members.size(); ++i) {
        arrows.emplace_back(members[i], members[(i + 1) % members.size()]);
      }
    }
  }
  for (PointIndex r = 0; r < n; ++r) {
    if (rep[r] != r) continue;
    for (PointIndex s = 0; s < n; ++s) {
      if (rep[s] != s || s == r || !space.leq(r, s) || space.leq(s, r)) continue;
      bool covered = true;
      for (PointIndex m = 0; m < n && covered; ++m) {
        if (rep[m] != m || m == r || m == s) continue;
        if (space.leq(r, m) && !space.leq(m, r) && space.leq(m, s) && !space.leq(s, m)) covered = false;
      }
      if (covered) arrows.emplace_back(r, s);
    }
  }
  std::sort(arrows.begin(), arrows.end());
  return arrows;
}

namespace {

struct PointInvariant {
  std::size_t up = 0;
  std::size_t down = 0;
  std::size_t component = 0;
  auto operator<=>(const PointInvariant&) const = default;
};

std::vector<PointInvariant> point_invariants(const FiniteSpace& space) {
  const auto ids = component_ids(space);
  std::vector<std::size_t> comp_size(space.size() + 1, 0);
  for (auto id : ids) ++comp_size[id];
  std::vector<PointInvariant> inv(space.size());
  for (PointIndex x = 0; x < space.size(); ++x) {
    inv[x] = {static_cast<std::size_t>(std::popcount(space.closure_bits(x))),
              static_cast<std::size_t>(std::popcount(space.neighbourhood_bits(x))), comp_size[ids[x]]};
  }
  return inv;
}

}  // namespace

std::uint64_t homeomorphism_invariant(const FiniteSpace& space) {
  const auto inv = point_invariants(space);
  // Refine each point by the sorted invariants of its closure and neighbourhood.
  std::vector<std::uint64_t> refined(space.size());
  for (PointIndex x = 0; x < space.size(); ++x) {
    std::vector<PointInvariant> up, down;
    for_each_bit(space.closure_bits(x), [&](PointIndex y) { up.push_back(inv[y]); });
    for_each_bit(space.neighbourhood_bits(x), [&](PointIndex y) { down.push_back(inv[y]); });
    std::sort(up.begin(), up.end());
    std::sort(down.begin(), down.end());
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&h](std::uint64_t v) { h = (h ^ v) * 1099511628211ULL; };
    mix(inv[x].up);
    mix(inv[x].down);
    mix(inv[x].component);
    for (const auto& p : up) mix(p.up * 131 + p.down * 17 + p.component);
    mix(0xff);
    for (const auto& p : down) mix(p.up * 131 + p.down * 17 + p.component);
    refined[x] = h;
  }
  std::sort(refined.begin(), refined.end());
  std::uint64_t h = 1469598103934665603ULL ^ space.size();
  for (auto v : refined) h = (h ^ v) * 1099511628211ULL;
  return h;
}

std::optional<std::vector<PointIndex>> find_homeomorphism(const FiniteSpace& a, const FiniteSpace& b) {
  const std::size_t n = a.size();
  if (b.size() != n) return std::nullopt;
  const auto inv_a = point_invariants(a);
  const auto inv_b = point_invariants(b);
  {
    auto sa = inv_a, sb = inv_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  // Assign points of a with the rarest invariant first.
  std::vector<PointIndex> order(n);
  std::iota(order.begin(), order.end(), PointIndex{0});
  std::stable_sort(order.begin(), order.end(), [&](PointIndex x, PointIndex y) {
    auto freq = [&](PointIndex p) { return std::count(inv_a.begin(), inv_a.end(), inv_a[p]); };
    return freq(x) < freq(y);
  });
  std::vector<PointIndex> phi(n, 0);
  std::uint64_t used = 0;
  std::function<bool(std::size_t)> assign = [&](std::size_t k) -> bool {
    if (k == n) return true;
    const PointIndex x = order[k];
    for (PointIndex y = 0; y < n; ++y) {
      if ((used >> y) & 1U) continue;
      if (inv_a[x] != inv_b[y]) continue;
      bool ok = a.leq(x, x) == b.leq(y, y);
      for (std::size_t j = 0; j < k && ok; ++j) {
        const PointIndex z = order[j];
        ok = a.leq(x, z) == b.leq(y, phi[z]) && a.leq(z, x) == b.leq(phi[z], y);
      }
      if (!ok) continue;
      phi[x] = y;
      used |= std::uint64_t{1} << y;
      if (assign(k + 1)) return true;
      used &= ~(std::uint64_t{1} << y);
    }
    return false;
  };
  if (!assign(0)) return std::nullopt;
  return phi;
}

bool are_homeomorphic(const FiniteSpace& a, const FiniteSpace& b) { return find_homeomorphism(a, b).has_value(); }

}  // namespace fintop
