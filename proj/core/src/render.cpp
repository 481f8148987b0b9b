#include "schubert/render.hpp"

#include <algorithm>
#include <sstream>

#include "schubert/trace.hpp"

namespace schubert {

namespace {

std::string ascii_render(const Filling& f, const PieceSet& ps) {
  const int n = f.n;
  size_t width = 1;
  for (const auto& t : ps.labels()) width = std::max(width, t.size());
  auto pad = [&](int8_t lbl) {
    std::string t = lbl < 0 ? "?" : ps.label_text(lbl);
    while (t.size() < width) t += ' ';
    return t;
  };
  std::ostringstream os;
  os << "alpha=" << f.alpha << " beta=" << f.beta << " gamma=" << f.gamma
     << " sign=" << (f.sign > 0 ? "+1" : "-1");
  for (auto [i, j] : f.eqvar) os << " eqvar(" << i << ',' << j << ')';
  os << '\n';
  const size_t cellw = 2 * width + 2;
  for (int r = 1; r <= n; ++r) {
    std::string slanted(static_cast<size_t>(n - r) * (cellw / 2), ' ');
    std::string bottom = slanted;
    for (int c = 1; c <= r; ++c) {
      const char lmark = f.ledge_gash[tri_index(r, c)] ? '#' : '/';
      const char rmark = f.redge_gash[tri_index(r, c)] ? '#' : '\\';
      slanted += std::string(1, lmark) + pad(f.le(r, c)) + std::string(1, rmark) + pad(f.re(r, c));
      bottom += "_" + pad(f.h(r, c));
      bottom += std::string(cellw - 1 - width - 1, ' ');
    }
    os << slanted << '\n' << bottom << '\n';
  }
  return os.str();
}

struct Pt {
  double x, y;
};

std::string svg_render(const Filling& f, const PieceSet& ps) {
  const int n = f.n;
  const double s = 64.0;                 // unit side
  const double h = s * 0.8660254037844;  // sqrt(3)/2
  const double w = s * n, ht = h * n;
  auto apexx = [&](int r, int c) { return (n - r) * s / 2 + (c - 1 + 0.5) * s; };
  // U(r,c): base left/right at depth r, apex at depth r-1.
  auto base_l = [&](int r, int c) { return Pt{(n - r) * s / 2 + (c - 1) * s, r * h}; };
  auto base_r = [&](int r, int c) { return Pt{(n - r) * s / 2 + c * s, r * h}; };
  auto apex = [&](int r, int c) { return Pt{apexx(r, c), (r - 1) * h}; };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w + 20 << "\" height=\""
     << ht + 20 << "\" viewBox=\"-10 -10 " << w + 20 << ' ' << ht + 20 << "\">\n";
  os << "<g font-family=\"monospace\" font-size=\"11\" text-anchor=\"middle\">\n";
  // Shade equivariant rhombi first.
  for (int r = 1; r < n; ++r)
    for (int c = 1; c <= r; ++c)
      if (f.is_rhombus_top(r, c)) {
        Pt a = apex(r, c), l = base_l(r, c), rr = base_r(r, c);
        Pt b{apexx(r, c), (r + 1) * h};
        os << "<polygon points=\"" << a.x << ',' << a.y << ' ' << rr.x << ',' << rr.y << ' '
           << b.x << ',' << b.y << ' ' << l.x << ',' << l.y
           << "\" fill=\"#c8c8e8\" stroke=\"none\"/>\n";
      }
  // Cell outlines.
  for (int r = 1; r <= n; ++r)
    for (int c = 1; c <= r; ++c) {
      Pt a = apex(r, c), l = base_l(r, c), rr = base_r(r, c);
      os << "<polygon points=\"" << a.x << ',' << a.y << ' ' << l.x << ',' << l.y << ' '
         << rr.x << ',' << rr.y << "\" fill=\"none\" stroke=\"#444\"/>\n";
    }
  auto text = [&](double x, double y, const std::string& t, const char* color = "#000") {
    os << "<text x=\"" << x << "\" y=\"" << y << "\" fill=\"" << color << "\">" << t
       << "</text>\n";
  };
  for (int r = 1; r <= n; ++r)
    for (int c = 1; c <= r; ++c) {
      Pt a = apex(r, c), l = base_l(r, c), rr = base_r(r, c);
      const size_t i = tri_index(r, c);
      // / edge of U(r,c)
      if (f.ledge_e[i] >= 0) {
        bool gash = f.ledge_gash[i] != 0;
        std::string t = ps.label_text(f.ledge_e[i]);
        if (gash) t = ps.label_text(f.ledge_w[i]) + "/" + t;
        text((a.x + l.x) / 2 - 8, (a.y + l.y) / 2, t, gash ? "#c00" : "#000");
        if (gash)
          os << "<line x1=\"" << (a.x + l.x) / 2 - 4 << "\" y1=\"" << (a.y + l.y) / 2 - 6
             << "\" x2=\"" << (a.x + l.x) / 2 + 4 << "\" y2=\"" << (a.y + l.y) / 2 + 6
             << "\" stroke=\"#c00\" stroke-width=\"2\"/>\n";
      }
      // \ edge
      if (f.redge_w[i] >= 0) {
        bool gash = f.redge_gash[i] != 0;
        std::string t = ps.label_text(f.redge_w[i]);
        if (gash) t += "/" + ps.label_text(f.redge_e[i]);
        text((a.x + rr.x) / 2 + 8, (a.y + rr.y) / 2, t, gash ? "#c00" : "#000");
        if (gash)
          os << "<line x1=\"" << (a.x + rr.x) / 2 - 4 << "\" y1=\"" << (a.y + rr.y) / 2 + 6
             << "\" x2=\"" << (a.x + rr.x) / 2 + 4 << "\" y2=\"" << (a.y + rr.y) / 2 - 6
             << "\" stroke=\"#c00\" stroke-width=\"2\"/>\n";
      }
      // horizontal edge
      if (f.hedge[i] >= 0) text((l.x + rr.x) / 2, l.y - 3, ps.label_text(f.hedge[i]));
    }
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace

std::string render(const Filling& f, const PieceSet& ps, RenderFormat format) {
  return format == RenderFormat::Ascii ? ascii_render(f, ps) : svg_render(f, ps);
}

}  // namespace schubert

namespace schubert {

std::string render_trace_frame(const Filling& f, const PieceSet& ps, int step) {
  PartialPuzzle p = truncate_filling(f, ps, step);
  std::string svg = render(f, ps, RenderFormat::Svg);
  // Overlay a translucent mask over unfilled cells.
  std::ostringstream mask;
  const int n = f.n;
  const double s = 64.0;
  const double h = s * 0.8660254037844;
  for (int r = 1; r <= n; ++r)
    for (int c = 1; c <= r; ++c) {
      const size_t i = tri_index(r, c);
      const double ax = (n - r) * s / 2 + (c - 1 + 0.5) * s;
      const double lx = (n - r) * s / 2 + (c - 1) * s;
      const double rx = lx + s;
      if (!p.grid.up_filled[i])
        mask << "<polygon points=\"" << ax << ',' << (r - 1) * h << ' ' << lx << ',' << r * h
             << ' ' << rx << ',' << r * h << "\" fill=\"#ffffff\" opacity=\"0.8\"/>\n";
      if (c < r && !p.grid.down_filled[i])
        mask << "<polygon points=\"" << ax << ',' << (r - 1) * h << ' ' << (ax + s) << ','
             << (r - 1) * h << ' ' << (lx + s) << ',' << r * h
             << "\" fill=\"#ffffff\" opacity=\"0.8\"/>\n";
    }
  const std::string closing = "</g>\n</svg>\n";
  auto pos = svg.rfind(closing);
  if (pos != std::string::npos) svg.insert(pos + 5, mask.str());
  return svg;
}

}  // namespace schubert
