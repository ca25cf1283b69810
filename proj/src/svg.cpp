#include <sstream>

#include "skewdyck/path.hpp"

namespace skewdyck {

std::string render_svg(const SkewPath& path, const SvgOptions& options) {
  if (options.unit_px <= 0) throw std::invalid_argument("unit_px must be positive");
  const int u = options.unit_px;
  const int margin = u;
  const int top = path.max_level();
  const int width = static_cast<int>(path.length()) * u + 2 * margin;
  const int height = top * u + 2 * margin;

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\""
      << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  const auto& levels = path.levels();
  for (std::size_t i = 0; i < path.length(); ++i) {
    const Step s = path.steps()[i];
    const std::string& color = s == Step::Up          ? options.colors.up
                               : s == Step::DownBlack ? options.colors.down_black
                                                      : options.colors.down_red;
    const int x1 = margin + static_cast<int>(i) * u;
    const int y1 = margin + (top - levels[i]) * u;
    const int y2 = margin + (top - levels[i + 1]) * u;
    out << "  <line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x1 + u << "\" y2=\"" << y2
        << "\" stroke=\"" << color << "\" stroke-width=\"2\" stroke-linecap=\"round\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace skewdyck
