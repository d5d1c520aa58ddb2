#include "implab/render.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <utility>
#include <vector>

#include "implab/errors.hpp"

namespace implab {

namespace {

constexpr double kSide = 520.0;
constexpr double kMargin = 40.0;
constexpr double kRoot3Half = 0.8660254037844386;

const char* label_color(int label) {
  switch (label) {
    case 0: return "#d62728";
    case 1: return "#2ca02c";
    case 2: return "#1f77b4";
    default: return "#999999";
  }
}

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

// Corner 0 bottom left, corner 1 bottom right, corner 2 on top.
std::pair<double, double> place(const std::vector<double>& p) {
  const double x = p[1] + 0.5 * p[2];
  const double y = kRoot3Half * p[2];
  return {kMargin + kSide * x, kMargin + kSide * (kRoot3Half - y)};
}

void check_flat(const Triangulation& t) {
  if (t.dim() != 2) {
    throw InputError("rendering works on dimension 2 boards only, got " +
                     std::to_string(t.dim()));
  }
}

std::vector<std::pair<long long, long long>> edges_of(const Triangulation& t) {
  std::set<std::pair<long long, long long>> seen;
  for (long long c = 0; c < t.cell_count(); ++c) {
    const auto verts = t.cell_vertices(c);
    for (std::size_t i = 0; i < verts.size(); ++i) {
      for (std::size_t k = i + 1; k < verts.size(); ++k) {
        seen.insert(std::minmax(verts[i], verts[k]));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

std::string render_svg(const Triangulation& t, const Labeling* labels) {
  check_flat(t);
  if (labels != nullptr) validate_labeling(t, *labels);

  std::vector<long long> shaded;
  if (labels != nullptr) shaded = find_panchromatic_all(t, *labels);

  const double w = kSide + 2 * kMargin;
  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(w) +
         "\" height=\"" + num(w) + "\" viewBox=\"0 0 " + num(w) + " " + num(w) +
         "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  for (long long c = 0; c < t.cell_count(); ++c) {
    const bool pan = std::binary_search(shaded.begin(), shaded.end(), c);
    out += "<polygon points=\"";
    bool first = true;
    for (long long v : t.cell_vertices(c)) {
      const auto [x, y] = place(t.vertex_point(v));
      if (!first) out += ' ';
      out += num(x) + "," + num(y);
      first = false;
    }
    out += "\" fill=\"";
    out += pan ? "#fce588" : "none";
    out += "\" stroke=\"#555555\" stroke-width=\"1\"/>\n";
  }

  for (long long v = 0; v < t.vertex_count(); ++v) {
    const auto [x, y] = place(t.vertex_point(v));
    const int label =
        labels != nullptr ? (*labels)[static_cast<std::size_t>(v)] : -1;
    out += "<circle cx=\"" + num(x) + "\" cy=\"" + num(y) +
           "\" r=\"7\" fill=\"" + label_color(label) +
           "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    if (label >= 0) {
      out += "<text x=\"" + num(x + 10) + "\" y=\"" + num(y - 6) +
             "\" font-size=\"13\" font-family=\"sans-serif\">" +
             std::to_string(label) + "</text>\n";
    }
  }

  out += "</svg>\n";
  return out;
}

std::string render_dot(const Triangulation& t, const Labeling* labels) {
  check_flat(t);
  if (labels != nullptr) validate_labeling(t, *labels);

  std::string out = "graph board {\n";
  out += "  node [shape=circle style=filled fontname=\"sans-serif\"];\n";
  for (long long v = 0; v < t.vertex_count(); ++v) {
    const int label =
        labels != nullptr ? (*labels)[static_cast<std::size_t>(v)] : -1;
    out += "  v" + std::to_string(v) + " [label=\"" + std::to_string(v);
    if (label >= 0) out += ":" + std::to_string(label);
    out += "\" fillcolor=\"" + std::string(label_color(label)) + "\"];\n";
  }
  for (const auto& [a, b] : edges_of(t)) {
    out += "  v" + std::to_string(a) + " -- v" + std::to_string(b) + ";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace implab
