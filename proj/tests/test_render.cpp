#include <doctest.h>

#include <string>

#include "platkit/error.hpp"
#include "platkit/render.hpp"

using namespace platkit;

namespace {
Plat plat(int strands, std::vector<int> letters) { return Plat(BraidWord::from_signed(strands, letters)); }

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++n;
  return n;
}
}  // namespace

TEST_CASE("the 2 4 1 3 1 plat renders 5 crossings and 3 cups and caps") {
  const std::string svg = render_svg(plat(6, {2, 4, 1, 3, 1}));
  CHECK(count(svg, "class=\"crossing\"") == 5);
  CHECK(count(svg, "class=\"cup\"") == 3);
  CHECK(count(svg, "class=\"cap\"") == 3);
  for (int k = 1; k <= 5; ++k) CHECK(svg.find("id=\"crossing-" + std::to_string(k) + "\"") != std::string::npos);
  for (int j = 1; j <= 3; ++j) CHECK(svg.find("id=\"cup-" + std::to_string(j) + "\"") != std::string::npos);
  CHECK(count(svg, "class=\"component\"") == 1);
  CHECK(svg.find("data-crossings=\"5\"") != std::string::npos);
}

TEST_CASE("trivial plats") {
  const std::string empty = render_svg(plat(2, {}));
  CHECK(count(empty, "class=\"component\"") == 1);
  CHECK(count(empty, "class=\"crossing\"") == 0);
  const std::string one = render_svg(plat(2, {1}));
  CHECK(count(one, "class=\"crossing\"") == 1);
  CHECK(one.find("data-sign=\"1\"") != std::string::npos);
  CHECK(count(render_svg(plat(4, {2, 2})), "class=\"component\"") == 2);
}

TEST_CASE("output is byte-identical across runs and honours the render spec") {
  RenderSpec spec;
  spec.labels = true;
  spec.strand_spacing = 30;
  const Plat p = plat(8, {6, -5, -4, 3, 2, 2, 3, -4});
  CHECK(render_svg(p, spec) == render_svg(p, spec));
  CHECK(render_svg(p, spec) != render_svg(p));
  CHECK(render_svg(p, spec).find("<text") != std::string::npos);
  spec.crossing_gap = 0;
  CHECK_THROWS_AS(render_svg(p, spec), Error);
}

TEST_CASE("the document is well formed at the top level") {
  const std::string svg = render_svg(plat(4, {2, -1, 3}));
  CHECK(svg.rfind("<svg ", 0) == 0);
  CHECK(svg.find("</svg>\n") == svg.size() - 7);
  CHECK(count(svg, "<g ") == count(svg, "</g>"));
}
