#include "desargues/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <optional>
#include <sstream>
#include <string_view>

#include "desargues/error.hpp"

namespace desargues {

namespace {

constexpr int kWidth = 800;
constexpr int kGrid = 64;
constexpr int kMaxDepth = 10;
constexpr double kMaxStep = 6.0;  // pixels

std::string num(double v) {
  if (v == 0) v = 0;  // no "-0"
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

// Exact map from the affine chart to screen pixels, y pointing down.
struct Frame {
  Viewport vp;
  Rat scale;

  explicit Frame(const Viewport& v) : vp(v), scale(Rat(kWidth) / (v.xmax - v.xmin)) {}

  Rat height() const { return (vp.ymax - vp.ymin) * scale; }
  std::array<Rat, 2> to_screen(const Rat& x, const Rat& y) const {
    return {(x - vp.xmin) * scale, (vp.ymax - y) * scale};
  }
  std::array<double, 2> to_world(double sx, double sy) const {
    const double s = scale.to_double();
    return {sx / s + vp.xmin.to_double(), vp.ymax.to_double() - sy / s};
  }
  bool inside(const Rat& x, const Rat& y) const {
    return vp.xmin <= x && x <= vp.xmax && vp.ymin <= y && y <= vp.ymax;
  }
  // Three viewport widths around the window.
  bool near(const Rat& x, const Rat& y) const {
    const Rat w = vp.xmax - vp.xmin, h = vp.ymax - vp.ymin;
    return vp.xmin - 3 * w <= x && x <= vp.xmax + 3 * w && vp.ymin - 3 * h <= y &&
           y <= vp.ymax + 3 * h;
  }
};

// Exact clip of a finite line to the viewport; nullopt when it misses.
std::optional<std::array<std::array<Rat, 2>, 2>> clip(const PLine& l, const Viewport& vp) {
  const auto& [u, v, w] = l.coeffs();
  std::vector<std::array<Rat, 2>> hits;
  auto add = [&](const Rat& x, const Rat& y) {
    if (x < vp.xmin || x > vp.xmax || y < vp.ymin || y > vp.ymax) return;
    for (const auto& h : hits)
      if (h[0] == x && h[1] == y) return;
    hits.push_back({x, y});
  };
  if (!v.is_zero()) {
    for (const Rat& x : {vp.xmin, vp.xmax}) add(x, -(u * x + w) / v);
  }
  if (!u.is_zero()) {
    for (const Rat& y : {vp.ymin, vp.ymax}) add(-(v * y + w) / u, y);
  }
  if (hits.size() < 2) return std::nullopt;
  std::sort(hits.begin(), hits.end());
  return std::array<std::array<Rat, 2>, 2>{hits.front(), hits.back()};
}

struct Sample {
  Rat s;
  std::optional<std::array<Rat, 2>> screen;  // empty at infinity or far away
};

// t = s / (1 - |s|) sweeps the whole parameter line as s runs over [-1, 1].
ExtRat parameter(const Rat& s) {
  const Rat d = 1 - s.abs();
  if (d.is_zero()) return ExtRat::infinity();
  return ExtRat(s / d);
}

Sample sample(const RationalParametrization& param, const Frame& frame, const Rat& s) {
  const PPoint p = param.point(parameter(s));
  if (p.at_infinity()) return {s, std::nullopt};
  const auto [x, y] = p.affine_coords();
  if (!frame.near(x, y)) return {s, std::nullopt};
  return {s, frame.to_screen(x, y)};
}

double distance(const std::array<Rat, 2>& a, const std::array<Rat, 2>& b) {
  return std::hypot((a[0] - b[0]).to_double(), (a[1] - b[1]).to_double());
}

void refine(const RationalParametrization& param, const Frame& frame, const Sample& a,
            const Sample& b, int depth, std::vector<Sample>& out) {
  bool split = false;
  if (depth < kMaxDepth) {
    if (a.screen && b.screen)
      split = distance(*a.screen, *b.screen) > kMaxStep;
    else
      split = a.screen.has_value() != b.screen.has_value();
  }
  if (split) {
    const Sample mid = sample(param, frame, (a.s + b.s) / 2);
    refine(param, frame, a, mid, depth + 1, out);
    refine(param, frame, mid, b, depth + 1, out);
  } else {
    out.push_back(b);
  }
}

std::vector<std::vector<std::array<Rat, 2>>> conic_polylines(const Conic& c, const Frame& frame) {
  const PPoint base = find_rational_point(c);
  const RationalParametrization param(c, base);
  std::vector<Sample> samples{sample(param, frame, Rat(-1))};
  for (int k = 1; k <= kGrid; ++k) {
    const Sample next = sample(param, frame, Rat(2 * k - kGrid, kGrid));
    refine(param, frame, samples.back(), next, 0, samples);
  }
  std::vector<std::vector<std::array<Rat, 2>>> lines(1);
  for (const auto& s : samples) {
    if (s.screen) {
      if (lines.back().empty() || lines.back().back() != *s.screen) lines.back().push_back(*s.screen);
    } else if (!lines.back().empty()) {
      lines.emplace_back();
    }
  }
  // s = -1 and s = 1 are the same point: join the ends of a closed curve.
  if (lines.size() > 1 && samples.front().screen && samples.back().screen) {
    auto& last = lines.back();
    last.insert(last.end(), lines.front().begin() + 1, lines.front().end());
    lines.erase(lines.begin());
  }
  std::erase_if(lines, [](const auto& l) { return l.size() < 2; });
  return lines;
}

std::string screen_pair(const std::array<Rat, 2>& p) {
  return num(p[0].to_double()) + "," + num(p[1].to_double());
}

}  // namespace

std::string render_svg(const Scene& scene, const Viewport& viewport, const std::string& figspec) {
  viewport.validate();
  const Frame frame(viewport);
  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(kWidth) +
         "\" height=\"" + num(frame.height().to_double()) + "\" viewBox=\"0 0 " +
         std::to_string(kWidth) + " " + num(frame.height().to_double()) + "\" data-figure=\"" +
         escape(figspec) + "\" data-viewport=\"" + viewport.xmin.str() + "," +
         viewport.ymin.str() + "," + viewport.xmax.str() + "," + viewport.ymax.str() + "\">\n";
  out += "<title>" + escape(figspec) + "</title>\n";
  out += "<rect x=\"0\" y=\"0\" width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  std::string conics, lines, points;
  for (const auto& o : scene.objects()) {
    if (!o.visible) continue;
    const std::string name = escape(o.name);
    if (const auto* c = std::get_if<Conic>(&o.value)) {
      if (c->rank() < 3) {
        conics += "<!-- conic " + name + " is degenerate -->\n";
        continue;
      }
      std::vector<std::vector<std::array<Rat, 2>>> polylines;
      try {
        polylines = conic_polylines(*c, frame);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::NoRationalPoint) throw;
        conics += "<!-- conic " + name + " has no rational point -->\n";
        continue;
      }
      for (const auto& pl : polylines) {
        conics += "<polyline class=\"conic\" data-name=\"" + name + "\" points=\"";
        for (std::size_t k = 0; k < pl.size(); ++k) conics += (k ? " " : "") + screen_pair(pl[k]);
        conics += "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
      }
    } else if (const auto* l = std::get_if<PLine>(&o.value)) {
      if (l->is_at_infinity()) continue;
      const auto seg = clip(*l, viewport);
      if (!seg) continue;
      const auto a = frame.to_screen((*seg)[0][0], (*seg)[0][1]);
      const auto b = frame.to_screen((*seg)[1][0], (*seg)[1][1]);
      lines += "<line class=\"line\" data-name=\"" + name + "\" x1=\"" + num(a[0].to_double()) +
               "\" y1=\"" + num(a[1].to_double()) + "\" x2=\"" + num(b[0].to_double()) +
               "\" y2=\"" + num(b[1].to_double()) + "\" stroke=\"steelblue\"/>\n";
    } else if (const auto* p = std::get_if<PPoint>(&o.value)) {
      if (p->at_infinity()) continue;
      const auto [x, y] = p->affine_coords();
      if (!frame.inside(x, y)) continue;
      const auto s = frame.to_screen(x, y);
      const double sx = s[0].to_double(), sy = s[1].to_double();
      points += "<circle class=\"point\" data-name=\"" + name + "\" cx=\"" + num(sx) +
                "\" cy=\"" + num(sy) + "\" r=\"3\" fill=\"crimson\"/>\n";
      points += "<text x=\"" + num(sx + 5) + "\" y=\"" + num(sy - 5) +
                "\" font-size=\"14\" font-family=\"serif\">" + name + "</text>\n";
    } else if (const auto* q = std::get_if<InscribedQuadrangle>(&o.value)) {
      static constexpr const char* kLabels = "BCDE";
      const auto& v = q->bornes();
      for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
          if (v[i].at_infinity() || v[j].at_infinity()) continue;
          const auto [xa, ya] = v[i].affine_coords();
          const auto [xb, yb] = v[j].affine_coords();
          const auto a = frame.to_screen(xa, ya), b = frame.to_screen(xb, yb);
          lines += "<line class=\"segment\" data-name=\"" + name + "." + kLabels[i] + kLabels[j] +
                   "\" x1=\"" + num(a[0].to_double()) + "\" y1=\"" + num(a[1].to_double()) +
                   "\" x2=\"" + num(b[0].to_double()) + "\" y2=\"" + num(b[1].to_double()) +
                   "\" stroke=\"gray\" stroke-dasharray=\"4 3\"/>\n";
        }
      }
    }
  }
  out += conics + lines + points + "</svg>\n";
  return out;
}

namespace {

struct Parsed {
  std::map<std::string, std::vector<std::vector<std::array<double, 2>>>> conics;
  std::map<std::string, std::array<double, 4>> lines;
  std::map<std::string, std::array<double, 2>> points;
};

// Value of ` key="..."` inside one element, empty when absent.
std::string attr(std::string_view element, std::string_view key) {
  const std::string needle = " " + std::string(key) + "=\"";
  const auto at = element.find(needle);
  if (at == std::string_view::npos) return {};
  const auto from = at + needle.size();
  return std::string(element.substr(from, element.find('"', from) - from));
}

Parsed parse_svg(const std::string& svg) {
  Parsed out;
  for (std::size_t at = svg.find('<'); at != std::string::npos; at = svg.find('<', at + 1)) {
    const auto close = svg.find('>', at);
    if (close == std::string::npos) break;
    const std::string_view element(svg.data() + at, close - at + 1);
    const auto space = element.find(' ');
    if (space == std::string_view::npos) continue;
    const std::string_view tag = element.substr(1, space - 1);
    const std::string name = attr(element, "data-name");
    if (name.empty()) continue;
    if (tag == "polyline") {
      std::vector<std::array<double, 2>> pts;
      std::istringstream in(attr(element, "points"));
      for (std::string pair; in >> pair;) {
        const auto comma = pair.find(',');
        pts.push_back({std::stod(pair.substr(0, comma)), std::stod(pair.substr(comma + 1))});
      }
      out.conics[name].push_back(std::move(pts));
    } else if (tag == "line" && attr(element, "class") == "line") {
      out.lines[name] = {std::stod(attr(element, "x1")), std::stod(attr(element, "y1")),
                         std::stod(attr(element, "x2")), std::stod(attr(element, "y2"))};
    } else if (tag == "circle") {
      out.points[name] = {std::stod(attr(element, "cx")), std::stod(attr(element, "cy"))};
    }
  }
  return out;
}

// |q(x, y, 1)| relative to the size of the terms.
double conic_residual(const Conic& c, double x, double y) {
  const auto k = c.coefficients();
  double scale = 0;
  for (const auto& v : k) scale = std::max(scale, std::abs(v.to_double()));
  const double q = k[0].to_double() * x * x + k[1].to_double() * y * y + k[2].to_double() +
                   k[3].to_double() * x * y + k[4].to_double() * x + k[5].to_double() * y;
  return std::abs(q) / (scale * (x * x + y * y + 1));
}

}  // namespace

IncidenceAudit audit_svg(const Scene& scene, const std::string& svg, const Viewport& viewport,
                         double tolerance) {
  viewport.validate();
  const Frame frame(viewport);
  const Parsed parsed = parse_svg(svg);
  const double diag = std::hypot(double(kWidth), frame.height().to_double());
  IncidenceAudit audit;
  auto note = [&](double err, const std::string& what) {
    ++audit.checked;
    audit.max_relative_error = std::max(audit.max_relative_error, err);
    if (!(err <= tolerance)) audit.failures.push_back(what + " off by " + num(err));
  };

  for (const auto& o : scene.objects()) {
    if (!o.visible) continue;
    const auto* c = std::get_if<Conic>(&o.value);
    const auto it = parsed.conics.find(o.name);
    if (c == nullptr || it == parsed.conics.end()) continue;
    for (const auto& pl : it->second) {
      for (const auto& p : pl) {
        const auto w = frame.to_world(p[0], p[1]);
        note(conic_residual(*c, w[0], w[1]), "sample of " + o.name);
      }
    }
  }

  for (const auto& po : scene.objects()) {
    const auto* p = std::get_if<PPoint>(&po.value);
    const auto pit = parsed.points.find(po.name);
    if (p == nullptr || !po.visible || pit == parsed.points.end()) continue;
    const auto [px, py] = pit->second;
    for (const auto& o : scene.objects()) {
      if (!o.visible) continue;
      if (const auto* l = std::get_if<PLine>(&o.value)) {
        const auto lit = parsed.lines.find(o.name);
        if (lit == parsed.lines.end() || !incident(*p, *l)) continue;
        const auto [x1, y1, x2, y2] = lit->second;
        const double len = std::hypot(x2 - x1, y2 - y1);
        const double off = std::abs((x2 - x1) * (py - y1) - (y2 - y1) * (px - x1)) / len;
        note(off / diag, po.name + " on " + o.name);
      } else if (const auto* k = std::get_if<Conic>(&o.value)) {
        if (parsed.conics.find(o.name) == parsed.conics.end() || !k->contains(*p)) continue;
        const auto w = frame.to_world(px, py);
        note(conic_residual(*k, w[0], w[1]), po.name + " on " + o.name);
      }
    }
  }
  return audit;
}

}  // namespace desargues
