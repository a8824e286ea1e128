#pragma once

#include "allee/classify.hpp"

#include <optional>
#include <string>

namespace allee::cli {

struct RenderOptions {
  int columns = 600;
  /// Right edge of the plotted a-range; default_view(r) when empty.
  std::optional<Rational> view_amax;
  int jobs = 1;
};

/// 3/2 times the largest a among samples with more than three states,
/// capped at the box.
Rational default_view(const ClassificationReport& r);

/// Region map: bp curves traced column by column, one labeled dot per cell.
std::string render_svg(const ClassificationReport& r, const RenderOptions& opt = {});

}  // namespace allee::cli
