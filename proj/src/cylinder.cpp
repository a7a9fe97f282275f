#include "fintop/cylinder.hpp"

#include <algorithm>

namespace fintop {

CylinderSpace build_cylinder(const SpaceMap& f) {
  const FiniteSpace& x = f.domain();
  const FiniteSpace& y = f.codomain();
  x.require_t0("build_cylinder (domain)");
  y.require_t0("build_cylinder (codomain)");
  const std::size_t nx = x.size();
  const std::size_t n = nx + y.size();

  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& l : x.labels()) labels.push_back("x:" + l);
  for (const auto& l : y.labels()) labels.push_back("y:" + l);

  BitMatrix leq(n);
  for (Element a = 0; a < nx; ++a) {
    for (Element b = 0; b < nx; ++b)
      if (x.leq(a, b)) leq.set(a, b);
    for (Element b = 0; b < y.size(); ++b)
      if (y.leq(f(a), b)) leq.set(a, nx + b);
  }
  for (Element a = 0; a < y.size(); ++a)
    for (Element b = 0; b < y.size(); ++b)
      if (y.leq(a, b)) leq.set(nx + a, nx + b);

  FiniteSpace space = FiniteSpace::from_matrix(std::move(labels), std::move(leq));
  std::vector<Element> xs(nx), ys(y.size());
  for (Element i = 0; i < nx; ++i) xs[i] = i;
  for (Element i = 0; i < y.size(); ++i) ys[i] = nx + i;
  auto x_part = Subspace::of(space, std::move(xs));
  auto y_part = Subspace::of(space, std::move(ys));
  return CylinderSpace{std::move(space), std::move(x_part), std::move(y_part), f};
}

SpaceMap cylinder_retraction(const CylinderSpace& c) {
  const std::size_t nx = c.x_part.size();
  std::vector<Element> values(c.space.size());
  for (Element z = 0; z < c.space.size(); ++z) values[z] = z < nx ? c.source_map(z) : z - nx;
  return SpaceMap(c.space, c.source_map.codomain(), std::move(values));
}

JxDiagnostics jX_cofibration(const CylinderSpace& c) {
  const FiniteSpace& x = c.source_map.domain();
  const FiniteSpace& y = c.source_map.codomain();
  JxDiagnostics out;
  out.report = is_cofibration_inclusion(c.space, c.x_part);
  out.criterion_used = !x.empty() && is_connected(y);
  if (!out.criterion_used) {
    out.verdict = out.report.verdict;
    return out;
  }
  out.verdict = true;
  for (Element target = 0; target < y.size(); ++target) {
    PreimageCheck check{target, {}, std::nullopt};
    for (Element a = 0; a < x.size(); ++a)
      if (y.leq(c.source_map(a), target)) check.preimage.push_back(a);
    check.maximum = maximum_of(x, check.preimage);
    out.verdict = out.verdict && check.maximum.has_value();
    out.preimages.push_back(std::move(check));
  }
  return out;
}

bool jY_not_cofibration_check(const CylinderSpace& c) {
  if (c.x_part.empty() || c.y_part.empty()) {
    throw Error(Errc::EmptyPart, "j_Y check needs both parts of the cylinder to be nonempty");
  }
  if (is_cofibration_inclusion(c.space, c.y_part).verdict) {
    throw std::logic_error("j_Y was classified as a cofibration");
  }
  // The closed-subspace obstruction needs a connected ambient space; use the
  // component containing the first X-point, which also meets Y at f(x).
  const auto components = connected_components(c.space);
  const auto& component = *std::find_if(components.begin(), components.end(),
                                        [](const ElementSet& comp) { return comp.front() == 0; });
  const FiniteSpace piece = induced_subspace(c.space, Subspace::of(c.space, component));
  ElementSet y_in_piece;
  for (std::size_t pos = 0; pos < component.size(); ++pos)
    if (c.y_part.contains(component[pos])) y_in_piece.push_back(pos);
  if (!closed_subspace_obstruction(piece, Subspace::of(piece, std::move(y_in_piece)))) {
    throw std::logic_error("Y-part is not a closed proper subspace of its component");
  }
  return true;
}

}  // namespace fintop
