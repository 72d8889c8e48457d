#include "desargues/verify.hpp"

#include <map>
#include <set>

#include "json.hpp"

#include "desargues/error.hpp"
#include "desargues/synthetic.hpp"

namespace desargues {

namespace {

using Status = Outcome::Status;

void require(bool condition) {
  if (!condition) throw Discard{};
}

InvolutionOnLine draw_involution(Draw& d, const LineChart& chart) {
  const Rat a = d.rat(), b = d.rat(), c = d.rat();
  require(!(a * a + b * c).is_zero());
  return InvolutionOnLine(chart, Mat2{{{a, b}, {c, -a}}});
}

std::string pairs_str(const std::array<PointPair, 3>& p) {
  return p[0].str() + " " + p[1].str() + " " + p[2].str();
}

// Three couples of a random involution (even cases) or random couples.
std::array<PointPair, 3> draw_triple(Draw& d, const LineChart& chart) {
  const PointPair z{ExtRat(0), ExtRat(0)};
  std::array<PointPair, 3> pairs{z, z, z};
  if (d.integer(0, 1) == 0) {
    const auto inv = draw_involution(d, chart);
    for (auto& p : pairs) {
      const ExtRat t(d.rat());
      p = {t, inv.image(t)};
    }
  } else {
    for (auto& p : pairs) p = {ExtRat(d.rat()), ExtRat(d.rat())};
  }
  std::set<Rat> nodes;
  for (const auto& p : pairs) {
    require(!p.has_infinite());
    nodes.insert(p.first.value());
    nodes.insert(p.second.value());
  }
  require(nodes.size() == 6);
  return pairs;
}

const LineChart& x_axis() {
  static const LineChart chart = LineChart::natural(PLine(0, 1, 0));
  return chart;
}

std::vector<Property> involution_equivalence() {
  return {
      {"rectangle-condition-iff-membership",
       [](Draw& d) {
         const auto pairs = draw_triple(d, x_axis());
         const auto inv = involution_from_two_pairs(pairs[0], pairs[1], x_axis());
         const bool member = inv.contains(pairs[2]);
         const bool cond = desargues_condition_check(pairs).holds;
         return Outcome::check(cond == member, pairs_str(pairs) + ": condition " +
                                                   (cond ? "holds" : "fails") + ", membership " +
                                                   (member ? "holds" : "fails"));
       }},
      {"arbre-at-souche",
       [](Draw& d) {
         const auto pairs = draw_triple(d, x_axis());
         const auto inv = involution_from_two_pairs(pairs[0], pairs[1], x_axis());
         require(inv.contains(pairs[2]));
         const ExtRat souche = inv.image(ExtRat::infinity());
         require(!souche.is_infinite());
         return Outcome::check(arbre_check(souche.value(), pairs).holds,
                               pairs_str(pairs) + " souche " + souche.str());
       }},
  };
}

std::vector<Property> ramee() {
  auto setup = [](Draw& d) {
    const LineChart source = LineChart::natural(d.line());
    const LineChart target = LineChart::natural(d.line());
    const PPoint center = d.point();
    require(!source.contains(center) && !target.contains(center));
    const auto inv = draw_involution(d, source);
    return std::tuple{source, target, center, inv, ramee_project(inv, center, target)};
  };
  return {
      {"membership-preserved",
       [setup](Draw& d) {
         const auto [source, target, center, inv, projected] = setup(d);
         const PPoint p = source.point(ExtRat(d.rat()));
         const PPoint q = inv.image(p);
         const PointPair traced{target.coordinate(perspectivity(p, center, target.line())),
                                target.coordinate(perspectivity(q, center, target.line()))};
         return Outcome::check(projected.contains(traced),
                               "traced couple " + traced.str() + " not in " + projected.str());
       }},
      {"kind-preserved",
       [setup](Draw& d) {
         const auto [source, target, center, inv, projected] = setup(d);
         const auto k0 = classify_and_fixed_points(inv).kind;
         const auto k1 = classify_and_fixed_points(projected).kind;
         return Outcome::check(k0 == k1, std::string(to_string(k0)) + " became " +
                                             std::string(to_string(k1)));
       }},
  };
}

std::vector<Property> biduality() {
  return {
      {"pole-of-polar",
       [](Draw& d) {
         const auto [c, base] = d.conic_with_point();
         const PPoint m = d.point();
         require(!c.contains(m));
         const PPoint back = pole(c, polar(c, m));
         return Outcome::check(back == m, m.str() + " came back as " + back.str());
       }},
      {"polar-of-pole",
       [](Draw& d) {
         const auto [c, base] = d.conic_with_point();
         const PLine l = d.line();
         const PLine back = polar(c, pole(c, l));
         return Outcome::check(back == l, l.str() + " came back as " + back.str());
       }},
  };
}

std::vector<Property> incidence_duality() {
  return {
      {"collinear-points-concurrent-polars",
       [](Draw& d) {
         const auto [c, base] = d.conic_with_point();
         const PPoint a = d.point(), b = d.point();
         require(a != b);
         const PPoint x = LineChart::natural(join(a, b)).point(ExtRat(d.rat()));
         return Outcome::check(concurrent(polar(c, a), polar(c, b), polar(c, x)),
                               "polars of " + a.str() + ", " + b.str() + ", " + x.str());
       }},
      {"concurrent-lines-collinear-poles",
       [](Draw& d) {
         const auto [c, base] = d.conic_with_point();
         const PLine l = d.line(), m = d.line();
         require(l != m);
         const PPoint o = meet(l, m);
         const PPoint other = d.point();
         require(other != o);
         const PLine n = join(o, other);
         return Outcome::check(collinear(pole(c, l), pole(c, m), pole(c, n)),
                               "poles of " + l.str() + ", " + m.str() + ", " + n.str());
       }},
  };
}

std::vector<Property> quadrangle_independence() {
  auto seeds = [](Draw& d) {
    return std::pair{static_cast<std::uint64_t>(d.integer(1, 1000000)),
                     static_cast<std::uint64_t>(d.integer(1000001, 2000000))};
  };
  return {
      {"traversale-equals-polar",
       [seeds](Draw& d) {
         const auto [c, base] = d.conic_with_point();
         const PPoint f = d.point();
         require(!c.contains(f));
         const auto [s1, s2] = seeds(d);
         const auto tc = construct_traversale(c, f, {.seed = s1});
         return Outcome::check(tc.traversale == polar(c, f),
                               "GN " + tc.traversale.str() + " vs polar " + polar(c, f).str() +
                                   "\n" + tc.transcript.str());
       }},
      {"independent-quadrangles-agree",
       [seeds](Draw& d) {
         const auto [c, base] = d.conic_with_point();
         const PPoint f = d.point();
         require(!c.contains(f));
         const auto [s1, s2] = seeds(d);
         const auto t1 = construct_traversale(c, f, {.seed = s1});
         const auto t2 = construct_traversale(c, f, {.seed = s2, .base = base});
         return Outcome::check(t1.traversale == t2.traversale,
                               t1.traversale.str() + " vs " + t2.traversale.str() + "\n" +
                                   t1.transcript.str() + t2.transcript.str());
       }},
      {"diagonal-triangle-self-polar",
       [seeds](Draw& d) {
         const auto [c, base] = d.conic_with_point();
         const PPoint f = d.point();
         require(!c.contains(f));
         const auto q = construct_traversale(c, f, {.seed = seeds(d).first}).quadrangle;
         const bool ok = polar(c, q.f()) == join(q.n(), q.g()) &&
                         polar(c, q.n()) == join(q.f(), q.g()) &&
                         polar(c, q.g()) == join(q.f(), q.n());
         return Outcome::check(ok, "diagonal triangle " + q.f().str() + " " + q.n().str() +
                                       " " + q.g().str());
       }},
      {"pole-by-construction",
       [](Draw& d) {
         const auto [c, base] = d.conic_with_point();
         const PLine l = d.line();
         require(!is_tangent(c, l));
         const auto pc = construct_pole(c, l, std::nullopt, {.base = base});
         return Outcome::check(pc.pole == pole(c, l), "constructed " + pc.pole.str() +
                                                          " vs pole " + pole(c, l).str() +
                                                          "\n" + pc.transcript.str());
       }},
  };
}

std::vector<Property> pencil_theorem() {
  auto setup = [](Draw& d) {
    const auto [c, base] = d.conic_with_point();
    const RationalParametrization param(c, base);
    std::array<PPoint, 4> b{base, base, base, base};
    for (auto& p : b) p = d.on_conic(param);
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) require(b[i] != b[j]);
    const PPoint x = d.on_conic(param), y = d.on_conic(param);
    require(x != y);
    const PLine l = join(x, y);
    for (const auto& p : b) require(!incident(p, l));
    return pencil_involution(PencilBase(b, c), l);
  };
  return {
      {"bornale-traces-in-involution",
       [setup](Draw& d) {
         const auto pi = setup(d);
         return Outcome::check(pi.traces_are_members,
                               pairs_str(pi.traces) + " vs " + pi.involution.str());
       }},
      {"member-conic-trace-in-involution",
       [setup](Draw& d) {
         const auto pi = setup(d);
         require(pi.member_trace.has_value());
         return Outcome::check(pi.member_trace_is_member,
                               pi.member_trace->str() + " vs " + pi.involution.str());
       }},
  };
}

std::vector<Property> two_involutions_suite() {
  auto setup = [](Draw& d) {
    const auto [c, base] = d.conic_with_point();
    const RationalParametrization param(c, base);
    const PPoint l0 = d.on_conic(param), m0 = d.on_conic(param);
    require(l0 != m0);
    const PLine l = join(l0, m0);
    const PPoint f = LineChart::natural(l).point(ExtRat(d.rat()));
    require(!c.contains(f));
    return std::tuple{l0, m0, f, two_involutions(c, f, l)};
  };
  return {
      {"distinct",
       [setup](Draw& d) {
         const auto [l0, m0, f, ti] = setup(d);
         return Outcome::check(!(ti.pencil == ti.polar), "pencil and polar involutions agree");
       }},
      {"pencil-fixes-f-h-swaps-l-m",
       [setup](Draw& d) {
         const auto [l0, m0, f, ti] = setup(d);
         return Outcome::check(ti.pencil.image(f) == f && ti.pencil.image(ti.h) == ti.h &&
                                   ti.pencil.image(l0) == m0,
                               ti.pencil.str());
       }},
      {"polar-fixes-l-m-swaps-f-h",
       [setup](Draw& d) {
         const auto [l0, m0, f, ti] = setup(d);
         return Outcome::check(ti.polar.image(l0) == l0 && ti.polar.image(m0) == m0 &&
                                   ti.polar.image(f) == ti.h,
                               ti.polar.str());
       }},
      {"harmonic-LMFH",
       [setup](Draw& d) {
         const auto [l0, m0, f, ti] = setup(d);
         const ExtRat cr = cross_ratio(l0, m0, f, ti.h);
         return Outcome::check(cr == ExtRat(-1), "cross-ratio " + cr.str());
       }},
  };
}

std::vector<Property> harmonic_fgxy() {
  auto setup = [](Draw& d) {
    const auto [c, base] = d.conic_with_point();
    const RationalParametrization param(c, base);
    std::array<PPoint, 4> b{base, base, base, base};
    for (auto& p : b) p = d.on_conic(param);
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) require(b[i] != b[j]);
    return harmonic_range(InscribedQuadrangle(c, b[0], b[1], b[2], b[3]));
  };
  return {
      {"cross-ratio-minus-one",
       [setup](Draw& d) {
         const auto hr = setup(d);
         return Outcome::check(hr.holds, "(X, Y; F, G) = " + hr.cross.str());
       }},
      {"secteur-squared-ratios",
       [setup](Draw& d) {
         const auto hr = setup(d);
         return Outcome::check(hr.secteur, "GX/GY and FX/FY differ in square");
       }},
  };
}

std::vector<Property> transport() {
  auto setup = [](Draw& d) {
    const auto [c, base] = d.conic_with_point();
    const Homography h = d.homography();
    return std::tuple{c, h, transform(c, h)};
  };
  return {
      {"polar-commutes",
       [setup](Draw& d) {
         const auto [c, h, image] = setup(d);
         const PPoint m = d.point();
         return Outcome::check(polar(image, h.apply(m)) == h.apply(polar(c, m)), m.str());
       }},
      {"pole-commutes",
       [setup](Draw& d) {
         const auto [c, h, image] = setup(d);
         const PLine l = d.line();
         return Outcome::check(pole(image, h.apply(l)) == h.apply(pole(c, l)), l.str());
       }},
      {"classification-preserved",
       [setup](Draw& d) {
         const auto [c, h, image] = setup(d);
         return Outcome::check(classify(image).kind == classify(c).kind, image.str());
       }},
      {"polarity-involution-transported",
       [setup](Draw& d) {
         const auto [c, h, image] = setup(d);
         const PLine l = d.line();
         require(!is_tangent(c, l));
         const auto inv = polarity_involution_on_line(c, l);
         const auto moved = polarity_involution_on_line(image, h.apply(l));
         const PPoint p = inv.chart().point(ExtRat(d.rat()));
         const PPoint q = inv.image(p);
         const PointPair pair{moved.chart().coordinate(h.apply(p)),
                              moved.chart().coordinate(h.apply(q))};
         return Outcome::check(moved.contains(pair), pair.str() + " not in " + moved.str());
       }},
      {"center-transport",
       [](Draw& d) {
         const auto [c, base] = d.conic_with_point();
         const PLine lambda = d.line();
         require(!lambda.is_at_infinity());
         const auto tr = transport_check(c, lambda, homography_to_infinity(lambda));
         return Outcome::check(tr.holds, tr.image_center.str() + " vs " +
                                             tr.transported_pole.str());
       }},
  };
}

std::vector<Property> classification() {
  return {
      {"inertia-of-congruent-diagonal",
       [](Draw& d) {
         std::array<int, 3> e{};
         for (auto& x : e) x = static_cast<int>(d.integer(-1, 1));
         require(e[0] != 0 || e[1] != 0 || e[2] != 0);
         const Homography p = d.homography();
         Mat3 m{};
         for (int i = 0; i < 3; ++i) m[i][i] = Rat(e[i]) * d.nonzero(4).abs();
         const Mat3& a = p.matrix();
         const Conic c(transpose(a) * m * a);
         int pos = 0, neg = 0;
         for (int x : e) {
           pos += x > 0;
           neg += x < 0;
         }
         const auto cl = classify(c);
         const std::array<int, 2> expect{std::max(pos, neg), std::min(pos, neg)};
         return Outcome::check(cl.signature == expect && cl.rank == pos + neg,
                               c.str() + " classified with signature (" +
                                   std::to_string(cl.signature[0]) + ", " +
                                   std::to_string(cl.signature[1]) + ")");
       }},
      {"secant-missing-tangent",
       [](Draw& d) {
         const auto [c, base] = d.conic_with_point();
         const RationalParametrization param(c, base);
         PLine l = d.line();
         switch (d.integer(0, 2)) {
           case 0: {
             const PPoint a = d.on_conic(param), b = d.on_conic(param);
             require(a != b);
             l = join(a, b);
             break;
           }
           case 1: l = polar(c, d.on_conic(param)); break;
           default: break;
         }
         if (is_tangent(c, l)) {
           try {
             polarity_involution_on_line(c, l);
           } catch (const Error& e) {
             return Outcome::check(e.kind() == ErrorKind::TangentLine, e.what());
           }
           return Outcome::fail("tangent " + l.str() + " produced an involution");
         }
         const auto kind = classify_and_fixed_points(polarity_involution_on_line(c, l)).kind;
         InvolutionKind expect = InvolutionKind::Elliptic;
         try {
           if (line_intersect(c, l).size() == 2) expect = InvolutionKind::Hyperbolic;
         } catch (const Error& e) {
           if (e.kind() != ErrorKind::IrrationalIntersection) throw;
           expect = InvolutionKind::HyperbolicIrrational;
         }
         return Outcome::check(kind == expect, l.str() + " gave " + std::string(to_string(kind)));
       }},
  };
}

using SuiteFactory = std::vector<Property> (*)();

const std::vector<std::pair<std::string, SuiteFactory>>& suites() {
  static const std::vector<std::pair<std::string, SuiteFactory>> all{
      {"involution-equivalence", involution_equivalence},
      {"ramee", ramee},
      {"biduality", biduality},
      {"incidence-duality", incidence_duality},
      {"quadrangle-independence", quadrangle_independence},
      {"pencil-theorem", pencil_theorem},
      {"two-involutions", two_involutions_suite},
      {"harmonic-FGXY", harmonic_fgxy},
      {"transport", transport},
      {"classification", classification},
  };
  return all;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, f] : suites()) out.push_back(name);
    return out;
  }();
  return names;
}

std::vector<Property> suite_properties(const std::string& name) {
  for (const auto& [id, factory] : suites())
    if (id == name) return factory();
  throw Error(ErrorKind::UnknownSuite, "no suite named '" + name + "'");
}

VerificationReport verify_suite(const std::string& name, std::uint64_t seed, int cases) {
  VerificationReport r{name, seed, cases, {}};
  for (const auto& p : suite_properties(name)) r.properties.push_back(run_property(p, seed, cases));
  return r;
}

bool VerificationReport::ok() const {
  for (const auto& p : properties)
    if (!p.ok()) return false;
  return true;
}

std::string VerificationReport::summary_json() const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["seed"] = seed;
  j["cases"] = cases;
  j["ok"] = ok();
  j["properties"] = nlohmann::ordered_json::array();
  for (const auto& p : properties) {
    nlohmann::ordered_json e;
    e["name"] = p.name;
    e["passed"] = p.passed;
    e["failed"] = p.failed;
    e["discarded"] = p.discarded;
    if (p.counterexample) e["counterexample"] = *p.counterexample;
    j["properties"].push_back(e);
  }
  return j.dump(2);
}

std::string VerificationReport::str() const {
  std::string out = "suite " + suite + " seed=" + std::to_string(seed) +
                    " cases=" + std::to_string(cases) + "\n";
  for (const auto& p : properties) {
    out += std::string(p.ok() ? "  PASS " : "  FAIL ") + p.name + " " +
           std::to_string(p.passed) + "/" + std::to_string(p.passed + p.failed);
    if (p.discarded > 0) out += " (" + std::to_string(p.discarded) + " discarded)";
    out += "\n";
    if (p.counterexample) out += "    counterexample: " + *p.counterexample + "\n";
  }
  return out + "summary " + summary_json() + "\n";
}

}  // namespace desargues
