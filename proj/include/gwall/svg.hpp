#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gwall/walls.hpp"

namespace gwall {

struct SvgWall {
  Wall wall;
  std::string label;
  bool highlight = false;  // the Gieseker wall
};

/// Static diagram of the (β, α) half-plane: semicircles as arcs, the vertical
/// wall dashed. Output depends only on the input. Throws DomainError on an
/// empty list or when nothing drawable remains.
std::string render_walls_svg(const std::vector<SvgWall>& walls,
                             const std::optional<Rational>& vertical);

}  // namespace gwall
