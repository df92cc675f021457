#include "platkit/render.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <vector>

#include "platkit/error.hpp"

namespace platkit {

namespace {

constexpr std::array<const char*, 8> kPalette{"#1f4e9c", "#b8322a", "#2b8a3e", "#7048a8",
                                              "#c76b00", "#6d4c41", "#c2185b", "#00838f"};
constexpr double kStroke = 2.5;

// Fixed-point with trailing zeros trimmed, so output is locale- and platform-stable.
std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", std::abs(v) < 0.005 ? 0.0 : v);
  std::string s(buf);
  while (s.back() == '0') s.pop_back();
  if (s.back() == '.') s.pop_back();
  return s;
}

struct Layout {
  int strands;
  int rows;
  double s;
  double margin;
  double r;
  double x(int position) const { return margin + (position - 1) * s; }
  double y(int level) const { return margin + r + (rows - level) * s; }  // level 0 = above the cups
  double width() const { return 2 * margin + (strands - 1) * s; }
  double height() const { return 2 * margin + 2 * r + rows * s; }
};

// Crosses row `level` (between levels level-1 and level) from position `from`
// to position `to`, upward or downward.
std::string row_segment(const Layout& L, int level, int from, int to, bool upward) {
  const double y0 = L.y(upward ? level - 1 : level);
  const double y1 = L.y(upward ? level : level - 1);
  if (from == to) return "L" + num(L.x(to)) + " " + num(y1);
  const double ym = (y0 + y1) / 2;
  return "C" + num(L.x(from)) + " " + num(ym) + " " + num(L.x(to)) + " " + num(ym) + " " + num(L.x(to)) + " " +
         num(y1);
}

std::string arc(const Layout& L, int from, int to, bool above) {
  const bool rightward = to > from;
  const int sweep = above == rightward ? 1 : 0;
  return "A" + num(L.r) + " " + num(L.r) + " 0 0 " + std::to_string(sweep) + " " + num(L.x(to)) + " " +
         num(above ? L.y(L.rows) : L.y(0));
}

int partner(int p) { return p % 2 == 1 ? p + 1 : p - 1; }

}  // namespace

std::string render_svg(const Plat& p, const RenderSpec& spec) {
  if (spec.width <= 0 || spec.height <= 0 || spec.strand_spacing <= 0 || spec.crossing_gap <= 0) {
    throw Error("precondition", "render dimensions must be positive");
  }
  const auto& letters = p.word().letters();
  const Layout L{p.strands(), static_cast<int>(letters.size()), static_cast<double>(spec.strand_spacing),
                 static_cast<double>(spec.strand_spacing), spec.strand_spacing / 2.0};

  // position_after[k][p]: where the strand at position p below row k+1 sits above it.
  auto step = [&](int k, int pos) {
    const int i = letters[static_cast<std::size_t>(k)].index();
    if (pos == i) return i + 1;
    if (pos == i + 1) return i;
    return pos;
  };

  std::vector<std::string> paths;
  std::map<std::pair<int, int>, int> row_owner;  // (row, position below the row) -> component
  std::vector<int> cup_owner(static_cast<std::size_t>(p.bridges()) + 1, -1);
  std::vector<int> cap_owner(static_cast<std::size_t>(p.bridges()) + 1, -1);
  std::vector<bool> bottom_seen(static_cast<std::size_t>(p.strands()) + 1, false);

  for (int start = 1; start <= p.strands(); ++start) {
    if (bottom_seen[static_cast<std::size_t>(start)]) continue;
    const int comp = static_cast<int>(paths.size());
    std::string d = "M" + num(L.x(start)) + " " + num(L.y(0));
    int pos = start;
    do {
      bottom_seen[static_cast<std::size_t>(pos)] = true;
      for (int k = 0; k < L.rows; ++k) {
        row_owner[{k, pos}] = comp;
        int next = step(k, pos);
        d += row_segment(L, k + 1, pos, next, true);
        pos = next;
      }
      cap_owner[static_cast<std::size_t>((pos + 1) / 2)] = comp;
      d += arc(L, pos, partner(pos), true);
      pos = partner(pos);
      for (int k = L.rows - 1; k >= 0; --k) {
        int below = pos;
        for (int q = 1; q <= p.strands(); ++q) {
          if (step(k, q) == pos) below = q;
        }
        row_owner[{k, below}] = comp;
        d += row_segment(L, k + 1, pos, below, false);
        pos = below;
      }
      bottom_seen[static_cast<std::size_t>(pos)] = true;
      cup_owner[static_cast<std::size_t>((pos + 1) / 2)] = comp;
      d += arc(L, pos, partner(pos), false);
      pos = partner(pos);
    } while (pos != start);
    paths.push_back(d + "Z");
  }

  auto color = [](int comp) { return kPalette[static_cast<std::size_t>(comp) % kPalette.size()]; };
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << spec.width << "\" height=\"" << spec.height
      << "\" viewBox=\"0 0 " << num(L.width()) << " " << num(L.height()) << "\" data-strands=\"" << p.strands()
      << "\" data-crossings=\"" << L.rows << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (std::size_t c = 0; c < paths.size(); ++c) {
    out << "<path id=\"component-" << c + 1 << "\" class=\"component\" d=\"" << paths[c] << "\" fill=\"none\" stroke=\""
        << color(static_cast<int>(c)) << "\" stroke-width=\"" << num(kStroke) << "\"/>\n";
  }
  for (int j = 1; j <= p.bridges(); ++j) {
    const auto col = color(cup_owner[static_cast<std::size_t>(j)]);
    out << "<path id=\"cup-" << j << "\" class=\"cup\" d=\"M" << num(L.x(2 * j - 1)) << " " << num(L.y(0))
        << arc(L, 2 * j - 1, 2 * j, false) << "\" fill=\"none\" stroke=\"" << col << "\" stroke-width=\""
        << num(kStroke) << "\"/>\n";
    const auto cap_col = color(cap_owner[static_cast<std::size_t>(j)]);
    out << "<path id=\"cap-" << j << "\" class=\"cap\" d=\"M" << num(L.x(2 * j - 1)) << " " << num(L.y(L.rows))
        << arc(L, 2 * j - 1, 2 * j, true) << "\" fill=\"none\" stroke=\"" << cap_col << "\" stroke-width=\""
        << num(kStroke) << "\"/>\n";
  }
  // Over passages are redrawn on a white halo, which breaks the under strand.
  for (int k = 0; k < L.rows; ++k) {
    const BraidLetter l = letters[static_cast<std::size_t>(k)];
    const int i = l.index();
    const int from = l.sign() > 0 ? i : i + 1;
    const int to = l.sign() > 0 ? i + 1 : i;
    const std::string d = "M" + num(L.x(from)) + " " + num(L.y(k)) + row_segment(L, k + 1, from, to, true);
    out << "<g id=\"crossing-" << k + 1 << "\" class=\"crossing\" data-index=\"" << i << "\" data-sign=\""
        << l.sign() << "\">";
    out << "<path d=\"" << d << "\" fill=\"none\" stroke=\"white\" stroke-width=\""
        << num(kStroke + 2.0 * spec.crossing_gap) << "\"/>";
    out << "<path d=\"" << d << "\" fill=\"none\" stroke=\"" << color(row_owner.at({k, from}))
        << "\" stroke-width=\"" << num(kStroke) << "\"/>";
    if (spec.labels) {
      out << "<text x=\"" << num(L.x(i + 1) + L.s * 0.3) << "\" y=\"" << num((L.y(k) + L.y(k + 1)) / 2 + 4)
          << "\" font-size=\"11\" font-family=\"sans-serif\">s" << i << (l.sign() < 0 ? "^-1" : "") << "</text>";
    }
    out << "</g>\n";
  }
  if (spec.labels) {
    for (int q = 1; q <= p.strands(); ++q) {
      out << "<text x=\"" << num(L.x(q) - 3) << "\" y=\"" << num(L.height() - 4)
          << "\" font-size=\"10\" font-family=\"sans-serif\">" << q << "</text>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace platkit
