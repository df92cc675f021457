#pragma once

// Deterministic SVG drawings of plat diagrams.
//
// Element ids are a public contract: "component-<c>" for each closed curve,
// "crossing-<k>" for the k-th letter (1-based, word order), "cup-<j>" and
// "cap-<j>" for the j-th bottom and top bridge.

#include <string>

#include "platkit/plat.hpp"

namespace platkit {

struct RenderSpec {
  int width = 480;
  int height = 640;
  int strand_spacing = 40;  // also the height of one crossing row
  int crossing_gap = 5;     // half-width of the break in the under strand
  bool labels = false;      // letter labels beside crossings, strand numbers below
};

/// Throws Error("precondition") unless every dimension is positive.
std::string render_svg(const Plat& p, const RenderSpec& spec = {});

}  // namespace platkit
