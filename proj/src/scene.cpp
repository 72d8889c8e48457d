#include "desargues/scene.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"

#include "desargues/error.hpp"
#include "desargues/svg.hpp"

namespace desargues {

namespace {

[[noreturn]] void parse_error(int line, int column, const std::string& what) {
  throw Error(ErrorKind::ParseError,
              "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what);
}

bool valid_name(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char ch : s)
    if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '.' || ch == '\''))
      return false;
  return true;
}

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) && line[i] != '#')
      ++i;
    out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

Rat number(const SceneCommand& c, const Token& t) {
  try {
    return Rat::parse(t.text);
  } catch (const Error&) {
    parse_error(c.line, t.column, "malformed rational '" + t.text + "'");
  }
}

ExtRat ext_number(const SceneCommand& c, const Token& t) {
  if (t.text == "inf") return ExtRat::infinity();
  return ExtRat(number(c, t));
}

void name_at(const SceneCommand& c, std::size_t i) {
  if (!valid_name(c.tokens[i].text))
    parse_error(c.line, c.tokens[i].column, "invalid name '" + c.tokens[i].text + "'");
}

// Value after "key=" in token i.
std::string keyed(const SceneCommand& c, std::size_t i, const std::string& key) {
  const Token& t = c.tokens[i];
  if (t.text.rfind(key + "=", 0) != 0 || t.text.size() == key.size() + 1)
    parse_error(c.line, t.column, "expected " + key + "=VALUE, got '" + t.text + "'");
  return t.text.substr(key.size() + 1);
}

Viewport viewport_from(const SceneCommand& c, std::size_t i, const std::string& spec) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  for (std::string p; std::getline(ss, p, ',');) parts.push_back(p);
  if (parts.size() != 4) parse_error(c.line, c.tokens[i].column, "viewport needs four rationals");
  std::array<Rat, 4> v;
  for (int k = 0; k < 4; ++k) v[k] = number(c, {parts[k], c.tokens[i].column});
  return {v[0], v[1], v[2], v[3]};
}

struct OpShape {
  std::size_t min_args, max_args;
  std::vector<std::size_t> outs;  // allowed output counts
};

const std::map<std::string, OpShape>& construct_ops() {
  static const std::map<std::string, OpShape> ops{
      {"join", {2, 2, {1}}},          {"meet", {2, 2, {1}}},
      {"polar", {2, 2, {1}}},         {"pole", {2, 2, {1}}},
      {"traversale", {2, 3, {1, 7}}}, {"diagonal", {1, 1, {3}}},
      {"fgxy", {1, 1, {2}}},          {"intersect", {2, 2, {1, 2}}},
      {"tangents", {2, 2, {1, 2, 4}}}, {"second", {3, 3, {1}}},
      {"harmonic", {3, 3, {1}}},      {"param", {3, 3, {1}}},
      {"harmonic-tangent", {3, 3, {1, 5}}}, {"lemma", {5, 5, {2}}},
      {"conjugate", {3, 3, {1}}},     {"pole-construction", {2, 2, {1}}},
  };
  return ops;
}

// Token count of each check, including "check" and the kind.
const std::map<std::string, std::size_t>& check_shapes() {
  static const std::map<std::string, std::size_t> shapes{
      {"polar", 6},   {"pole", 6},    {"traversale", 6}, {"classify", 5},
      {"on", 4},      {"off", 4},     {"incident", 4},   {"equal", 4},
      {"harmonic", 6}, {"self-polar", 3}, {"fgxy", 3},   {"lemma", 7},
      {"tangent", 4}, {"involution", 9},
  };
  return shapes;
}

void validate(const SceneCommand& c) {
  const auto& t = c.tokens;
  const std::string& kw = t[0].text;
  auto arity = [&](std::size_t lo, std::size_t hi) {
    if (t.size() < lo || t.size() > hi)
      parse_error(c.line, t.back().column,
                  "'" + kw + "' expects " + std::to_string(lo - 1) +
                      (lo == hi ? "" : "-" + std::to_string(hi - 1)) + " arguments, got " +
                      std::to_string(t.size() - 1));
  };
  if (kw == "conic") {
    arity(8, 8);
    name_at(c, 1);
    for (std::size_t i = 2; i < 8; ++i) number(c, t[i]);
  } else if (kw == "point") {
    arity(4, 5);
    name_at(c, 1);
    for (std::size_t i = 2; i < t.size(); ++i) number(c, t[i]);
  } else if (kw == "line") {
    arity(5, 5);
    name_at(c, 1);
    for (std::size_t i = 2; i < 5; ++i) number(c, t[i]);
  } else if (kw == "quadrangle") {
    arity(7, 7);
    name_at(c, 1);
    keyed(c, 2, "conic");
    for (std::size_t i = 3; i < 7; ++i) name_at(c, i);
  } else if (kw == "viewport") {
    arity(5, 5);
    for (std::size_t i = 1; i < 5; ++i) number(c, t[i]);
  } else if (kw == "hide") {
    arity(2, 1000);
    for (std::size_t i = 1; i < t.size(); ++i) name_at(c, i);
  } else if (kw == "render") {
    arity(3, 4);
    keyed(c, 2, "out");
    if (t.size() == 4) viewport_from(c, 3, keyed(c, 3, "viewport"));
  } else if (kw == "construct") {
    arity(3, 1000);
    const auto it = construct_ops().find(t[1].text);
    if (it == construct_ops().end())
      parse_error(c.line, t[1].column, "unknown construction '" + t[1].text + "'");
    std::size_t arrow = 2;
    while (arrow < t.size() && t[arrow].text != "->") ++arrow;
    if (arrow == t.size()) parse_error(c.line, t.back().column, "missing '->'");
    const std::size_t nargs = arrow - 2, nouts = t.size() - arrow - 1;
    const auto& shape = it->second;
    if (nargs < shape.min_args || nargs > shape.max_args)
      parse_error(c.line, t[1].column, "wrong argument count for '" + t[1].text + "'");
    if (std::find(shape.outs.begin(), shape.outs.end(), nouts) == shape.outs.end())
      parse_error(c.line, t[arrow].column, "wrong output count for '" + t[1].text + "'");
    for (std::size_t i = arrow + 1; i < t.size(); ++i) name_at(c, i);
    if (t[1].text == "param") ext_number(c, t[4]);
    if (t[1].text == "traversale" && nargs == 3) {
      const std::string s = keyed(c, 4, "seed");
      if (s.find_first_not_of("0123456789") != std::string::npos)
        parse_error(c.line, t[4].column, "seed must be a nonnegative integer");
    }
  } else if (kw == "check") {
    arity(2, 1000);
    const auto it = check_shapes().find(t[1].text);
    if (it == check_shapes().end())
      parse_error(c.line, t[1].column, "unknown check '" + t[1].text + "'");
    arity(it->second, it->second);
    const std::string& what = t[1].text;
    if ((what == "polar" || what == "pole" || what == "traversale") && t[4].text != "=")
      parse_error(c.line, t[4].column, "expected '='");
    if (what == "classify" && t[3].text != "=") parse_error(c.line, t[3].column, "expected '='");
  } else {
    parse_error(c.line, t[0].column, "unknown command '" + kw + "'");
  }
}

std::string_view kind_name(const SceneValue& v) {
  switch (v.index()) {
    case 0: return "conic";
    case 1: return "point";
    case 2: return "line";
    default: return "quadrangle";
  }
}

bool same_value(const SceneValue& a, const SceneValue& b) {
  if (a.index() != b.index()) return false;
  if (const auto* qa = std::get_if<InscribedQuadrangle>(&a)) {
    const auto& qb = std::get<InscribedQuadrangle>(b);
    return qa->conic() == qb.conic() && qa->bornes() == qb.bornes();
  }
  return std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, InscribedQuadrangle>) {
          return false;
        } else {
          return x == std::get<T>(b);
        }
      },
      a);
}

class Runner {
 public:
  Runner(Scene& scene, const RunOptions& options) : scene_(scene), options_(options) {}

  SceneReport run() {
    scene_.clear_objects();
    for (const auto& c : scene_.commands()) {
      cmd_ = &c;
      try {
        execute(c);
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::ParseError || e.kind() == ErrorKind::UnknownReference ||
            e.kind() == ErrorKind::DuplicateName)
          throw;
        throw Error(e.kind(), "line " + std::to_string(c.line) + " (" + c.text + "): " + e.detail());
      }
    }
    return std::move(report_);
  }

 private:
  const Token& tok(std::size_t i) const { return cmd_->tokens[i]; }

  [[noreturn]] void unknown(std::size_t i, std::string_view kind) const {
    throw Error(ErrorKind::UnknownReference,
                "line " + std::to_string(cmd_->line) + ", column " + std::to_string(tok(i).column) +
                    ": no " + std::string(kind) + " named '" + tok(i).text + "'");
  }

  template <typename T>
  const T& get(std::size_t i, std::string_view kind) const {
    return get_named<T>(tok(i).text, i, kind);
  }

  template <typename T>
  const T& get_named(const std::string& name, std::size_t i, std::string_view kind) const {
    const SceneObject* o = scene_.find(name);
    if (o == nullptr || !std::holds_alternative<T>(o->value)) unknown(i, kind);
    return std::get<T>(o->value);
  }

  void define(std::size_t i, SceneValue v) {
    try {
      scene_.define(tok(i).text, std::move(v));
    } catch (const Error& e) {
      throw Error(ErrorKind::DuplicateName, "line " + std::to_string(cmd_->line) + ", column " +
                                                std::to_string(tok(i).column) + ": " + e.detail());
    }
  }

  void record(bool passed, std::string detail) {
    report_.checks.push_back({cmd_->line, cmd_->text, passed, std::move(detail)});
  }

  void execute(const SceneCommand& c) {
    const auto& t = c.tokens;
    const std::string& kw = t[0].text;
    if (kw == "conic") {
      std::array<Rat, 6> k;
      for (int i = 0; i < 6; ++i) k[i] = number(c, t[2 + i]);
      define(1, Conic::from_coefficients(k));
    } else if (kw == "point") {
      const Rat z = t.size() == 5 ? number(c, t[4]) : Rat(1);
      define(1, PPoint(number(c, t[2]), number(c, t[3]), z));
    } else if (kw == "line") {
      define(1, PLine(number(c, t[2]), number(c, t[3]), number(c, t[4])));
    } else if (kw == "quadrangle") {
      const Conic& k = get_named<Conic>(keyed(c, 2, "conic"), 2, "conic");
      define(1, InscribedQuadrangle(k, get<PPoint>(3, "point"), get<PPoint>(4, "point"),
                                    get<PPoint>(5, "point"), get<PPoint>(6, "point")));
    } else if (kw == "viewport") {
      viewport_ = {number(c, t[1]), number(c, t[2]), number(c, t[3]), number(c, t[4])};
      viewport_.validate();
    } else if (kw == "hide") {
      for (std::size_t i = 1; i < t.size(); ++i) {
        if (scene_.find(t[i].text) == nullptr) unknown(i, "object");
        scene_.hide(t[i].text);
      }
    } else if (kw == "render") {
      render(c);
    } else if (kw == "construct") {
      construct(c);
    } else {
      check(c);
    }
  }

  void render(const SceneCommand& c) {
    const Viewport vp =
        c.tokens.size() == 4 ? viewport_from(c, 3, keyed(c, 3, "viewport")) : viewport_;
    vp.validate();
    std::filesystem::path path = keyed(c, 2, "out");
    if (path.is_relative() && !options_.out_dir.empty()) path = options_.out_dir / path;
    const std::string svg = render_svg(scene_, vp, c.tokens[1].text);
    if (options_.write_files) {
      std::ofstream out(path, std::ios::binary);
      if (!out) throw Error(ErrorKind::IoError, "cannot write " + path.string());
      out << svg;
    }
    report_.renders.push_back({c.tokens[1].text, path, vp, svg});
  }

  void construct(const SceneCommand& c) {
    const auto& t = c.tokens;
    const std::string& op = t[1].text;
    std::size_t arrow = 2;
    while (t[arrow].text != "->") ++arrow;
    const std::size_t out = arrow + 1, nouts = t.size() - out;
    if (op == "join") {
      define(out, join(get<PPoint>(2, "point"), get<PPoint>(3, "point")));
    } else if (op == "meet") {
      define(out, meet(get<PLine>(2, "line"), get<PLine>(3, "line")));
    } else if (op == "polar") {
      define(out, polar(get<Conic>(2, "conic"), get<PPoint>(3, "point")));
    } else if (op == "pole") {
      define(out, pole(get<Conic>(2, "conic"), get<PLine>(3, "line")));
    } else if (op == "pole-construction") {
      define(out, construct_pole(get<Conic>(2, "conic"), get<PLine>(3, "line")).pole);
    } else if (op == "traversale") {
      SecantSearch search;
      if (arrow == 5) search.seed = std::stoull(keyed(c, 4, "seed"));
      const auto tc = construct_traversale(get<Conic>(2, "conic"), get<PPoint>(3, "point"), search);
      define(out, tc.traversale);
      if (nouts == 7) {
        const char* names[6] = {"B", "C", "D", "E", "G", "N"};
        for (int k = 0; k < 6; ++k) define(out + 1 + k, tc.transcript.find(names[k])->point());
      }
    } else if (op == "diagonal") {
      const auto& q = get<InscribedQuadrangle>(2, "quadrangle");
      define(out, q.f());
      define(out + 1, q.n());
      define(out + 2, q.g());
    } else if (op == "fgxy") {
      const auto hr = harmonic_range(get<InscribedQuadrangle>(2, "quadrangle"));
      define(out, hr.x);
      define(out + 1, hr.y);
    } else if (op == "intersect") {
      const auto pts = line_intersect(get<Conic>(2, "conic"), get<PLine>(3, "line"));
      if (pts.size() != nouts)
        throw Error(ErrorKind::NotOnConic, "the line meets the conic in " +
                                               std::to_string(pts.size()) + " points");
      for (std::size_t k = 0; k < nouts; ++k) define(out + k, pts[k]);
    } else if (op == "tangents") {
      const auto ts = tangents_from(get<Conic>(2, "conic"), get<PPoint>(3, "point"));
      if (nouts != ts.size() && nouts != 2 * ts.size())
        throw Error(ErrorKind::OnConic, std::to_string(ts.size()) + " tangents from the point");
      for (std::size_t k = 0; k < ts.size(); ++k) {
        define(out + k, ts[k].line);
        if (nouts == 2 * ts.size()) define(out + ts.size() + k, ts[k].contact);
      }
    } else if (op == "second") {
      define(out, second_intersection(get<Conic>(2, "conic"), get<PPoint>(3, "point"),
                                      get<PPoint>(4, "point")));
    } else if (op == "harmonic") {
      define(out, harmonic_conjugate(get<PPoint>(2, "point"), get<PPoint>(3, "point"),
                                     get<PPoint>(4, "point")));
    } else if (op == "param") {
      const RationalParametrization param(get<Conic>(2, "conic"), get<PPoint>(3, "point"));
      define(out, param.point(ext_number(c, t[4])));
    } else if (op == "harmonic-tangent") {
      const auto ht = construct_tangent_via_harmonic(get<Conic>(2, "conic"),
                                                     get<PPoint>(3, "point"), get<PPoint>(4, "point"));
      define(out, ht.tangent);
      if (nouts == 5) {
        define(out + 1, ht.r);
        define(out + 2, ht.s);
        define(out + 3, ht.h);
        define(out + 4, ht.i);
      }
    } else if (op == "lemma") {
      const auto lemma = incidence_lemma(get<Conic>(2, "conic"), get<PPoint>(3, "point"),
                                         get<PPoint>(4, "point"), get<PPoint>(5, "point"),
                                         get<PPoint>(6, "point"));
      define(out, lemma.e);
      define(out + 1, lemma.p);
    } else if (op == "conjugate") {
      define(out, conjugate_diameters(get<Conic>(2, "conic"), get<PLine>(3, "line"),
                                      get<PLine>(4, "line")));
    }
  }

  void check(const SceneCommand& c) {
    const std::string& what = c.tokens[1].text;
    if (what == "polar") {
      const PLine got = polar(get<Conic>(2, "conic"), get<PPoint>(3, "point"));
      const PLine& want = get<PLine>(5, "line");
      record(got == want, "polar is " + got.str());
    } else if (what == "pole") {
      const PPoint got = pole(get<Conic>(2, "conic"), get<PLine>(3, "line"));
      record(got == get<PPoint>(5, "point"), "pole is " + got.str());
    } else if (what == "traversale") {
      const PLine got = traversale_from_quadrangle(get<Conic>(2, "conic"), get<PPoint>(3, "point"));
      record(got == get<PLine>(5, "line"), "constructed traversale is " + got.str());
    } else if (what == "classify") {
      const auto cl = classify(get<Conic>(2, "conic"));
      record(to_string(cl.kind) == c.tokens[4].text,
             "class is " + std::string(to_string(cl.kind)));
    } else if (what == "on" || what == "off") {
      const Conic& k = get<Conic>(2, "conic");
      const PPoint& p = get<PPoint>(3, "point");
      const Rat v = k.q(p.coords());
      record(v.is_zero() == (what == "on"), "q = " + v.str());
    } else if (what == "incident") {
      const PPoint& p = get<PPoint>(2, "point");
      const PLine& l = get<PLine>(3, "line");
      record(incident(p, l), p.str() + " and " + l.str());
    } else if (what == "equal") {
      const SceneObject* a = scene_.find(c.tokens[2].text);
      const SceneObject* b = scene_.find(c.tokens[3].text);
      if (a == nullptr) unknown(2, "object");
      if (b == nullptr) unknown(3, "object");
      record(same_value(a->value, b->value),
             std::string(kind_name(a->value)) + " vs " + std::string(kind_name(b->value)));
    } else if (what == "harmonic") {
      const ExtRat cr = cross_ratio(get<PPoint>(2, "point"), get<PPoint>(3, "point"),
                                    get<PPoint>(4, "point"), get<PPoint>(5, "point"));
      record(cr == ExtRat(-1), "cross-ratio is " + cr.str());
    } else if (what == "self-polar") {
      const auto& q = get<InscribedQuadrangle>(2, "quadrangle");
      const Conic& k = q.conic();
      record(polar(k, q.f()) == join(q.n(), q.g()) && polar(k, q.n()) == join(q.f(), q.g()) &&
                 polar(k, q.g()) == join(q.f(), q.n()),
             "diagonal triangle " + q.f().str() + " " + q.n().str() + " " + q.g().str());
    } else if (what == "fgxy") {
      const auto hr = harmonic_range(get<InscribedQuadrangle>(2, "quadrangle"));
      record(hr.holds, "(X, Y; F, G) = " + hr.cross.str());
    } else if (what == "lemma") {
      const auto lemma = incidence_lemma(get<Conic>(2, "conic"), get<PPoint>(3, "point"),
                                         get<PPoint>(4, "point"), get<PPoint>(5, "point"),
                                         get<PPoint>(6, "point"));
      record(lemma.holds, "meet is " + lemma.p.str());
    } else if (what == "tangent") {
      const Conic& k = get<Conic>(2, "conic");
      const PLine& l = get<PLine>(3, "line");
      record(is_tangent(k, l), "pole is " + pole(k, l).str());
    } else if (what == "involution") {
      const PLine& l = get<PLine>(2, "line");
      const LineChart chart = LineChart::natural(l);
      const PointPair none{ExtRat(0), ExtRat(0)};
      std::array<PointPair, 3> pairs{none, none, none};
      for (int k = 0; k < 3; ++k) {
        const PPoint& a = get<PPoint>(3 + 2 * k, "point");
        const PPoint& b = get<PPoint>(4 + 2 * k, "point");
        pairs[k] = {chart.coordinate(a), chart.coordinate(b)};
      }
      const auto inv = involution_from_two_pairs(pairs[0], pairs[1], chart);
      record(inv.contains(pairs[2]), pairs[2].str() + " against " + inv.str());
    }
  }

  Scene& scene_;
  const RunOptions& options_;
  const SceneCommand* cmd_ = nullptr;
  Viewport viewport_;
  SceneReport report_;
};

const std::map<int, std::string>& figures() {
  static const std::map<int, std::string> all{
      {8, R"(# fig8: the traversale of F from an inscribed quadrangle.
# F, X, G, Y are in involution (harmonic).
conic K 1 1 -1 0 0 0
point B 1 0
point C -1 0
point D 3/5 4/5
point E 5/13 12/13
quadrangle Q conic=K B C D E
construct diagonal Q -> F N G
construct fgxy Q -> X Y
construct join B C -> BC
construct join D E -> DE
construct join C D -> CD
construct join B E -> BE
construct join B D -> BD
construct join C E -> CE
construct join G N -> GN
construct join N C -> NC
construct join N B -> NB
construct join F G -> FG
check polar K F = GN
check traversale K F = GN
check self-polar Q
check fgxy Q
check harmonic X Y F G
viewport -3/2 -5/4 5/2 7/4
render fig8 out=fig8.svg
)"},
      {10, R"(# fig10: the incidence lemma. NE and FC meet on the conic.
conic K 1 1 -1 0 0 0
point F 2 0
construct polar K F -> T
point N 1/2 1
point D 3/5 4/5
point C 1 0
construct lemma K F N D C -> E P
construct join F D -> FD
construct join N E -> NE
construct join F C -> FC
construct join N D -> ND
check incident N T
check incident C ND
check on K E
check on K P
check lemma K F N D C
viewport -3/2 -5/4 5/2 7/4
render fig10 out=fig10.svg
)"},
      {13, R"(# fig13: the pencil of conics through B, C, D, E cuts the
# line l in pairs of one involution y y' = -16/25.
conic K 1 1 -1 0 0 0
point B 1 0
point C 0 1
point D -1 0
point E 0 -1
line l 5 0 -3
construct join B C -> BC
construct join D E -> DE
construct join C D -> CD
construct join B E -> BE
construct join B D -> BD
construct join C E -> CE
construct meet BC l -> P1
construct meet DE l -> P2
construct meet CD l -> P3
construct meet BE l -> P4
construct meet BD l -> P5
construct meet CE l -> P6
construct intersect K l -> R S
check involution l P1 P2 P3 P4 P5 P6
check involution l P1 P2 P3 P4 R S
viewport -2 -2 2 2
render fig13 out=fig13.svg
)"},
      {14, R"(# fig14: tangents from an exterior point and the contact chord.
conic K 1 1 -1 0 0 0
point F 5/3 0
construct polar K F -> T
construct tangents K F -> T1 T2 R S
point A 0 1
construct harmonic-tangent K A F -> AI R' S' H I
construct join A F -> AF
check incident R T
check incident S T
check tangent K T1
check tangent K T2
check polar K A = AI
hide R' S'
viewport -3/2 -5/4 2 5/4
render fig14 out=fig14.svg
)"},
      {16, R"(# fig16: rational parametrization of the conic by the pencil
# of lines through A.
conic K 1 1 -1 0 0 0
point A -1 0
construct param K A 1/3 -> P1
construct param K A 1/2 -> P2
construct param K A 1 -> P3
construct param K A 2 -> P4
construct param K A -1/2 -> P5
construct param K A -2 -> P6
construct join A P1 -> L1
construct join A P2 -> L2
construct join A P3 -> L3
construct join A P4 -> L4
construct join A P5 -> L5
construct join A P6 -> L6
check on K P1
check on K P2
check on K P3
check on K P4
check on K P5
check on K P6
viewport -3/2 -3/2 3/2 3/2
render fig16 out=fig16.svg
)"},
  };
  return all;
}

}  // namespace

void Viewport::validate() const {
  if (xmin >= xmax || ymin >= ymax) {
    throw Error(ErrorKind::EmptyViewport, "viewport [" + xmin.str() + ", " + xmax.str() +
                                              "] x [" + ymin.str() + ", " + ymax.str() +
                                              "] has no area");
  }
}

Scene Scene::parse(std::string_view text) {
  Scene scene;
  std::istringstream in{std::string(text)};
  int number = 0;
  for (std::string line; std::getline(in, line);) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    SceneCommand c{number, {}, tokenize(line)};
    if (c.tokens.empty()) continue;
    const auto end = line.find('#');
    c.text = line.substr(0, end);
    while (!c.text.empty() && std::isspace(static_cast<unsigned char>(c.text.back()))) c.text.pop_back();
    while (!c.text.empty() && std::isspace(static_cast<unsigned char>(c.text.front())))
      c.text.erase(c.text.begin());
    validate(c);
    scene.commands_.push_back(std::move(c));
  }
  return scene;
}

Scene Scene::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, "cannot read " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

const SceneObject* Scene::find(const std::string& name) const {
  for (const auto& o : objects_)
    if (o.name == name) return &o;
  return nullptr;
}

void Scene::define(const std::string& name, SceneValue value) {
  if (find(name) != nullptr) throw Error(ErrorKind::DuplicateName, "'" + name + "' is already defined");
  objects_.push_back({name, std::move(value), true});
}

void Scene::hide(const std::string& name) {
  for (auto& o : objects_)
    if (o.name == name) o.visible = false;
}

bool SceneReport::ok() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

std::string SceneReport::str() const {
  std::string out;
  int passed = 0;
  for (const auto& c : checks) {
    passed += c.passed;
    out += std::string(c.passed ? "PASS" : "FAIL") + " line " + std::to_string(c.line) + ": " +
           c.command + (c.passed ? "" : " (" + c.detail + ")") + "\n";
  }
  for (const auto& r : renders) out += "RENDER " + r.figspec + " -> " + r.path.string() + "\n";
  nlohmann::ordered_json j;
  j["checks"] = checks.size();
  j["passed"] = passed;
  j["failed"] = static_cast<int>(checks.size()) - passed;
  j["renders"] = nlohmann::ordered_json::array();
  for (const auto& r : renders) j["renders"].push_back(r.path.string());
  j["ok"] = ok();
  return out + "summary " + j.dump() + "\n";
}

SceneReport run_scene(Scene& scene, const RunOptions& options) {
  return Runner(scene, options).run();
}

std::optional<std::string> figure_scene(int figure) {
  const auto it = figures().find(figure);
  if (it == figures().end()) return std::nullopt;
  return it->second;
}

const std::vector<int>& figure_numbers() {
  static const std::vector<int> numbers{8, 10, 13, 14, 16};
  return numbers;
}

}  // namespace desargues
