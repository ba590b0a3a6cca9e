#pragma once

#include <string>

#include "monofock/measure.hpp"

namespace monofock {

struct PlotSpec {
  int n = 1;
  int width = 640;
  int height = 480;
  std::string output_path;
};

/// Deterministic SVG stem plot of an atomic measure: one vertical stem per
/// atom, height proportional to its weight, symmetric x-axis, labeled.
std::string render_stem_svg(const AtomicMeasure& mu, int width, int height,
                            const std::string& title);

}  // namespace monofock
