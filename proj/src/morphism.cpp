#include "fintop/morphism.hpp"

#include <sstream>

namespace fintop {

namespace {

void check_image_array(const FiniteSpace& dom, const FiniteSpace& cod, std::span<const PointIndex> image) {
  if (image.size() != dom.size()) {
    throw TopologyError("map has " + std::to_string(image.size()) + " images for " + std::to_string(dom.size()) +
                        " domain points");
  }
  for (PointIndex x = 0; x < image.size(); ++x) {
    if (image[x] >= cod.size()) {
      throw TopologyError("image of point " + std::to_string(x) + " is " + std::to_string(image[x]) +
                          ", codomain has " + std::to_string(cod.size()) + " points");
    }
  }
}

std::uint64_t fiber_bits(const ContinuousMap& q, PointIndex target) {
  std::uint64_t bits = 0;
  for (PointIndex e = 0; e < q.domain().size(); ++e) {
    if (q(e) == target) bits |= std::uint64_t{1} << e;
  }
  return bits;
}

}  // namespace

std::optional<ContinuityViolation> find_continuity_violation(const FiniteSpace& dom, const FiniteSpace& cod,
                                                             std::span<const PointIndex> image) {
  check_image_array(dom, cod, image);
  for (PointIndex x = 0; x < dom.size(); ++x) {
    for (PointIndex y = 0; y < dom.size(); ++y) {
      if (x != y && dom.leq(x, y) && !cod.leq(image[x], image[y])) return ContinuityViolation{x, y};
    }
  }
  return std::nullopt;
}

ContinuousMap::ContinuousMap(SpaceRef dom, SpaceRef cod, std::vector<PointIndex> image)
    : dom_(std::move(dom)), cod_(std::move(cod)), image_(std::move(image)) {
  if (!dom_ || !cod_) throw TopologyError("map requires a domain and a codomain");
  if (auto v = find_continuity_violation(*dom_, *cod_, image_)) {
    std::ostringstream msg;
    msg << "map is not continuous: " << dom_->display_name(v->x) << " > " << dom_->display_name(v->y)
        << " but " << cod_->display_name(image_[v->x]) << " > " << cod_->display_name(image_[v->y])
        << " does not hold";
    throw ContinuityError(msg.str(), *v);
  }
}

ContinuousMap trusted_map(SpaceRef dom, SpaceRef cod, std::vector<PointIndex> image) {
  return ContinuousMap(std::move(dom), std::move(cod), std::move(image), true);
}

ContinuityCheck check_continuous(SpaceRef dom, SpaceRef cod, std::vector<PointIndex> image) {
  if (auto v = find_continuity_violation(*dom, *cod, image)) return *v;
  return trusted_map(std::move(dom), std::move(cod), std::move(image));
}

ContinuousMap identity_map(SpaceRef space) {
  std::vector<PointIndex> image(space->size());
  std::iota(image.begin(), image.end(), PointIndex{0});
  return trusted_map(space, space, std::move(image));
}

ContinuousMap constant_map(SpaceRef dom, SpaceRef cod, PointIndex value) {
  if (value >= cod->size()) throw TopologyError("constant value outside codomain");
  const std::size_t n = dom->size();
  return trusted_map(std::move(dom), std::move(cod), std::vector<PointIndex>(n, value));
}

ContinuousMap compose(const ContinuousMap& g, const ContinuousMap& f) {
  if (!(f.codomain() == g.domain())) throw TopologyError("cannot compose: codomain of f differs from domain of g");
  std::vector<PointIndex> image(f.domain().size());
  for (PointIndex x = 0; x < image.size(); ++x) image[x] = g(f(x));
  return trusted_map(f.domain_ref(), g.codomain_ref(), std::move(image));
}

std::vector<PointIndex> search_order(const FiniteSpace& dom) {
  std::vector<PointIndex> order(dom.size());
  std::iota(order.begin(), order.end(), PointIndex{0});
  std::stable_sort(order.begin(), order.end(), [&](PointIndex a, PointIndex b) {
    return std::popcount(dom.closure_bits(a)) < std::popcount(dom.closure_bits(b));
  });
  return order;
}

MonotoneSearch::MonotoneSearch(const FiniteSpace& dom, const FiniteSpace& cod)
    : dom_(dom), cod_(cod), order_(search_order(dom)), links_(dom.size()), image_(dom.size(), 0) {
  for (std::size_t k = 0; k < order_.size(); ++k) {
    const PointIndex x = order_[k];
    for (std::size_t j = 0; j < k; ++j) {
      const PointIndex z = order_[j];
      const bool below = dom.leq(z, x);
      const bool above = dom.leq(x, z);
      if (below || above) links_[k].push_back({z, below, above});
    }
  }
}

std::optional<std::vector<PointIndex>> MonotoneSearch::find(std::span<const std::uint64_t> allowed) {
  std::optional<std::vector<PointIndex>> found;
  run(allowed, [&](std::span<const PointIndex> image) {
    found.emplace(image.begin(), image.end());
    return false;
  });
  return found;
}

std::vector<ContinuousMap> enumerate_continuous_maps(const SpaceRef& dom, const SpaceRef& cod) {
  std::vector<ContinuousMap> out;
  const std::vector<std::uint64_t> allowed(dom->size(), ~std::uint64_t{0});
  MonotoneSearch search(*dom, *cod);
  search.run(allowed, [&](std::span<const PointIndex> image) {
    out.push_back(trusted_map(dom, cod, std::vector<PointIndex>(image.begin(), image.end())));
    return true;
  });
  return out;
}

std::size_t count_continuous_maps(const FiniteSpace& dom, const FiniteSpace& cod) {
  std::size_t count = 0;
  const std::vector<std::uint64_t> allowed(dom.size(), ~std::uint64_t{0});
  MonotoneSearch search(dom, cod);
  search.run(allowed, [&](std::span<const PointIndex>) {
    ++count;
    return true;
  });
  return count;
}

std::optional<ContinuousMap> find_factorization(const ContinuousMap& i, const ContinuousMap& q) {
  if (!(i.codomain() == q.codomain())) throw TopologyError("cannot factor: maps have different codomains");
  std::vector<std::uint64_t> allowed(i.domain().size());
  for (PointIndex x = 0; x < allowed.size(); ++x) allowed[x] = fiber_bits(q, i(x));
  MonotoneSearch search(i.domain(), q.domain());
  auto image = search.find(allowed);
  if (!image) return std::nullopt;
  return trusted_map(i.domain_ref(), q.domain_ref(), std::move(*image));
}

}  // namespace fintop
