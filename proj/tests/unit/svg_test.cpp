#include <gtest/gtest.h>

#include <regex>

#include "lian/map_io.hpp"
#include "lian/svg.hpp"

namespace lian {
namespace {

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

TEST(RenderSvg, EmptyGridWithoutPath) {
  const std::string svg = render_svg(Grid(4, 6), std::nullopt);
  EXPECT_NE(svg.find("width=\"60\" height=\"40\""), std::string::npos);
  EXPECT_EQ(count(svg, "<rect"), 1u);
  EXPECT_EQ(svg.find("polyline"), std::string::npos);
  EXPECT_TRUE(svg.ends_with("</svg>\n"));
}

TEST(RenderSvg, SingleSectionHasTwoPoints) {
  const std::string svg = render_svg(Grid(5, 5), Path::through({{0, 0}, {4, 3}}));
  const std::regex pts("points=\"([^\"]*)\"");
  std::smatch m;
  ASSERT_TRUE(std::regex_search(svg, m, pts));
  EXPECT_EQ(m[1].str(), "5.00,5.00 35.00,45.00");
}

TEST(RenderSvg, ObstaclesAndLabels) {
  Grid g(6, 6);
  g.block_rect(2, 2, 4, 3);
  SvgOptions opts;
  opts.angle_labels = true;
  const std::string svg = render_svg(g, Path::through({{0, 0}, {0, 5}, {5, 5}}), opts);
  EXPECT_EQ(count(svg, "<rect"), 3u);
  EXPECT_NE(svg.find(">90.00&#176;</text>"), std::string::npos);
}

TEST(RenderSvg, OutOfBoundsVertex) {
  EXPECT_THROW(render_svg(Grid(3, 3), Path::through({{0, 0}, {3, 0}})), std::out_of_range);
}

TEST(RenderSvg, MatchesGoldenFile) {
  Grid g(14, 16);
  g.block_rect(2, 7, 6, 9);
  g.block_rect(9, 3, 11, 6);
  const Path p = Path::through({{0, 0}, {0, 5}, {3, 9}, {7, 12}, {12, 12}});
  SvgOptions opts;
  opts.angle_labels = true;
  const std::string svg = render_svg(g, p, opts);
  EXPECT_EQ(svg, render_svg(g, p, opts));
  EXPECT_EQ(svg, read_file(std::string(LIAN_TEST_DATA_DIR) + "/turning_path_delta5.svg"));
}

}  // namespace
}  // namespace lian
