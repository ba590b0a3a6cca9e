#include "monofock/plot.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace monofock {

namespace {
std::string fmt(double x) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.4f", x);
  return std::string(buf);
}
}  // namespace

std::string render_stem_svg(const AtomicMeasure& mu, int width, int height,
                            const std::string& title) {
  const double margin = 42.0;
  const double w = width, h = height;
  const double plot_w = w - 2 * margin;
  const double plot_h = h - 2 * margin;

  double max_abs_atom = 0, max_weight = 0;
  for (const auto& a : mu.atoms)
    max_abs_atom = std::max(max_abs_atom, std::abs(static_cast<double>(a)));
  for (const auto& v : mu.weights)
    max_weight = std::max(max_weight, static_cast<double>(v));
  const double x_span = 1.1 * max_abs_atom;  // symmetric axis
  const double y_span = 1.15 * max_weight;

  auto x_px = [&](double x) { return margin + (x + x_span) / (2 * x_span) * plot_w; };
  auto y_px = [&](double y) { return h - margin - y / y_span * plot_h; };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
     << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " "
     << height << "\">\n";
  os << "<rect width=\"" << width << "\" height=\"" << height
     << "\" fill=\"white\"/>\n";
  os << "<text x=\"" << fmt(w / 2) << "\" y=\"20\" text-anchor=\"middle\" "
        "font-family=\"sans-serif\" font-size=\"14\">"
     << title << "</text>\n";
  // axes
  os << "<line x1=\"" << fmt(margin) << "\" y1=\"" << fmt(h - margin)
     << "\" x2=\"" << fmt(w - margin) << "\" y2=\"" << fmt(h - margin)
     << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  os << "<line x1=\"" << fmt(x_px(0)) << "\" y1=\"" << fmt(margin) << "\" x2=\""
     << fmt(x_px(0)) << "\" y2=\"" << fmt(h - margin)
     << "\" stroke=\"#bbbbbb\" stroke-width=\"1\" stroke-dasharray=\"4,3\"/>\n";
  // x tick labels at the extreme atoms and 0
  for (double tick : {-max_abs_atom, 0.0, max_abs_atom}) {
    os << "<text x=\"" << fmt(x_px(tick)) << "\" y=\"" << fmt(h - margin + 16)
       << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
          "font-size=\"11\">"
       << format_significant(tick, 4) << "</text>\n";
  }
  // y tick at max weight
  os << "<text x=\"" << fmt(margin - 6) << "\" y=\"" << fmt(y_px(max_weight))
     << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
     << format_significant(max_weight, 4) << "</text>\n";

  for (std::size_t k = 0; k < mu.size(); ++k) {
    const double x = x_px(static_cast<double>(mu.atoms[k]));
    const double y = y_px(static_cast<double>(mu.weights[k]));
    os << "<line x1=\"" << fmt(x) << "\" y1=\"" << fmt(h - margin) << "\" x2=\""
       << fmt(x) << "\" y2=\"" << fmt(y)
       << "\" stroke=\"#0057b7\" stroke-width=\"1.5\"/>\n";
    os << "<circle cx=\"" << fmt(x) << "\" cy=\"" << fmt(y)
       << "\" r=\"2.5\" fill=\"#0057b7\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace monofock
