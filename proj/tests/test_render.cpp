#include "implab/render.hpp"

#include <doctest.h>

#include "implab/errors.hpp"
#include "implab/json_io.hpp"

using namespace implab;

namespace {

long long count_of(const std::string& text, const std::string& needle) {
  long long n = 0;
  for (std::size_t at = text.find(needle); at != std::string::npos;
       at = text.find(needle, at + needle.size())) {
    ++n;
  }
  return n;
}

}  // namespace

TEST_CASE("svg output lists every cell and vertex") {
  auto t = Triangulation::kuhn(2, 2);
  const auto labels = random_sperner_labeling(t, 3);
  const std::string svg = render_svg(t, &labels);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(count_of(svg, "<polygon") == t.cell_count());
  CHECK(count_of(svg, "<circle") == t.vertex_count());
  CHECK(render_svg(t, &labels) == svg);

  const std::string bare = render_svg(t);
  CHECK(count_of(bare, "<circle") == t.vertex_count());
  CHECK(count_of(bare, "<text") == 0);
}

TEST_CASE("shaded triangles match the multicolored cells") {
  const auto data = triangulation_from_json(
      read_json_file(std::string(IMPLAB_FIXTURE_DIR) + "/paper_fig_2d.json"));
  const std::string svg = render_svg(data.triangulation, &*data.labels);
  CHECK(count_of(svg, "#fce588") == 3);
  CHECK(count_of(svg, "\"none\"") == 5);
}

TEST_CASE("dot output connects each triangle side once") {
  auto t = Triangulation::kuhn(2, 2);
  const std::string dot = render_dot(t);
  CHECK(dot.rfind("graph board", 0) == 0);
  CHECK(count_of(dot, "[label=") == t.vertex_count());
  // 4 cells with 3 sides each, 3 of them shared: 9 distinct edges.
  CHECK(count_of(dot, " -- ") == 9);
  CHECK(render_dot(t) == dot);
}

TEST_CASE("rendering refuses other dimensions") {
  auto t = Triangulation::kuhn(3, 2);
  CHECK_THROWS_AS(render_svg(t), InputError);
  CHECK_THROWS_AS(render_dot(t), InputError);
}
