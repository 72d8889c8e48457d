#include "desargues/acceptance.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>

#include "desargues/conic.hpp"
#include "desargues/error.hpp"
#include "desargues/involution.hpp"
#include "desargues/property.hpp"
#include "desargues/scene.hpp"
#include "desargues/svg.hpp"
#include "desargues/synthetic.hpp"
#include "desargues/verify.hpp"

namespace desargues {

namespace {

using E = ExtRat;

PPoint P(const Rat& x, const Rat& y) { return PPoint::affine(x, y); }

// Runs a criterion body, turning an unexpected library error into a failure.
Criterion criterion(int id, std::string title, const std::function<std::string(bool&)>& body) {
  Criterion c{id, std::move(title), false, {}};
  try {
    bool ok = true;
    c.detail = body(ok);
    c.passed = ok;
  } catch (const Error& e) {
    c.detail = std::string("error ") + e.what();
  }
  return c;
}

std::string suites(const std::vector<std::string>& names, std::uint64_t seed, int cases, bool& ok) {
  std::string out;
  for (const auto& name : names) {
    const auto report = verify_suite(name, seed, cases);
    for (const auto& p : report.properties) {
      ok = ok && p.ok();
      if (!out.empty()) out += ", ";
      out += name + "/" + p.name + " " + std::to_string(p.passed) + "/" +
             std::to_string(p.passed + p.failed);
      if (p.counterexample) out += " [" + *p.counterexample + "]";
    }
  }
  return out;
}

// Calls body on fresh draws of stream `tag` until it has accepted `needed`
// cases; a body returns false (or throws Discard) to reject its inputs.
void cases(std::uint64_t tag, int needed, const std::function<bool(Draw&)>& body) {
  for (int i = 0, accepted = 0; accepted < needed; ++i) {
    auto rng = case_rng(tag, i);
    Draw draw(rng);
    try {
      accepted += body(draw);
    } catch (const Discard&) {
    }
  }
}

std::string count(int good, int total) { return std::to_string(good) + "/" + std::to_string(total); }

// Exterior: the polar meets the conic in two real points.
bool exterior(const Conic& c, const PPoint& f) {
  return !c.contains(f) && restrict_to_line(c, polar(c, f)).discriminant().sign() > 0;
}

std::string traversale_agreement(std::uint64_t seed, bool& ok) {
  const auto start = std::chrono::steady_clock::now();
  int agree = 0, independent = 0, total = 0;
  cases(seed ^ 0x7101, 5, [&](Draw& draw) {
    const auto [conic, base] = draw.conic_with_point();
    for (int i = 0; i < 20; ++i) {
      PPoint f = draw.point();
      while (!exterior(conic, f)) f = draw.point();
      ++total;
      const auto first = construct_traversale(conic, f, {.seed = 2 * seed + 1, .height = 8});
      const auto second = construct_traversale(conic, f, {.seed = 2 * seed + 2 + i, .height = 8});
      const PLine expected = polar(conic, f);
      agree += first.traversale == expected && second.traversale == expected;
      const auto& a = first.quadrangle.bornes();
      const auto& b = second.quadrangle.bornes();
      independent += std::set<std::string>{a[0].str(), a[1].str(), a[2].str(), a[3].str()} !=
                     std::set<std::string>{b[0].str(), b[1].str(), b[2].str(), b[3].str()};
    }
    return true;
  });
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  ok = agree == total && independent == total && seconds < 10;
  char time[32];
  std::snprintf(time, sizeof time, "%.2f", seconds);
  return "agree " + count(agree, total) + ", distinct quadrangles " + count(independent, total) +
         ", " + time + " s";
}

std::string pole_agreement(std::uint64_t seed, bool& ok) {
  int agree = 0;
  cases(seed ^ 0x7102, 100, [&](Draw& draw) {
    const auto [conic, base] = draw.conic_with_point();
    PLine l = draw.line();
    while (is_tangent(conic, l)) l = draw.line();
    agree += pole_by_construction(conic, l) == pole(conic, l);
    return true;
  });
  ok = agree == 100;
  return "agree " + count(agree, 100);
}

std::string worked_example(bool& ok) {
  const Conic circle = Conic::unit_circle();
  const InscribedQuadrangle q(circle, P(1, 0), P(-1, 0), P(Rat(3, 5), Rat(4, 5)),
                              P(Rat(5, 13), Rat(12, 13)));
  const PLine gn = traversale_of(q);
  const auto lemma = incidence_lemma(circle, P(2, 0), P(Rat(1, 2), 1), P(Rat(3, 5), Rat(4, 5)),
                                     P(1, 0));
  ok = q.f() == P(2, 0) && q.g() == P(Rat(1, 2), 1) && q.n() == P(Rat(1, 2), Rat(3, 4)) &&
       gn == PLine(2, 0, -1) && gn == polar(circle, P(2, 0)) && lemma.holds &&
       lemma.p == PPoint(-1, 0, 1);
  return "F=" + q.f().str() + " G=" + q.g().str() + " N=" + q.n().str() + " GN=" + gn.str() +
         " meet=" + lemma.p.str();
}

std::string equivalence(std::uint64_t seed, bool& ok) {
  const std::array<PointPair, 3> triple{PointPair{E(2), E(Rat(1, 2))},
                                        PointPair{E(3), E(Rat(1, 3))},
                                        PointPair{E(4), E(Rat(1, 4))}};
  const auto dc = desargues_condition_check(triple);
  const auto& first = dc.identities[0];
  const bool example = dc.holds && first.lhs_ratio == Rat(1, 9) && first.rhs_ratio == Rat(1, 9);
  ok = example;
  return "triple (2,1/2),(3,1/3),(4,1/4): " +
         (first.lhs_ratio ? first.lhs_ratio->str() : std::string("-")) + " = " +
         (first.rhs_ratio ? first.rhs_ratio->str() : std::string("-")) + "; " +
         suites({"involution-equivalence"}, seed, 200, ok);
}

std::string pencil(std::uint64_t seed, bool& ok) {
  const Conic circle = Conic::unit_circle();
  const PencilBase square({P(1, 0), P(0, 1), P(-1, 0), P(0, -1)}, circle);
  const auto pi = pencil_involution(square, PLine(5, 0, -3));
  const auto& inv = pi.involution;
  ok = inv.image(E(1)) == E(Rat(-16, 25)) && inv.image(E(2)) == E(Rat(-8, 25)) &&
       inv.contains({E(0), E::infinity()}) && inv.contains({E(Rat(4, 5)), E(Rat(-4, 5))}) &&
       pi.traces_are_members && pi.member_trace_is_member;
  return "square on x=3/5: 1 -> " + inv.image(E(1)).str() + "; " +
         suites({"pencil-theorem"}, seed, 100, ok);
}

std::string two(std::uint64_t seed, bool& ok) {
  const auto ti = two_involutions(Conic::unit_circle(), P(2, 0), PLine(0, 1, 0));
  ok = ti.pencil.image(E(2)) == E(2) && ti.pencil.image(E(Rat(1, 2))) == E(Rat(1, 2)) &&
       ti.polar.image(E(3)) == E(Rat(1, 3)) && ti.polar.image(E(-1)) == E(-1) &&
       ti.polar.image(E(Rat(-2, 7))) == E(Rat(-7, 2)) && !(ti.pencil == ti.polar);
  return "x-axis through (2,0): pencil fixes 2, 1/2; polar 3 -> " + ti.polar.image(E(3)).str() +
         "; " + suites({"two-involutions"}, seed, 100, ok);
}

std::string trichotomy(std::uint64_t seed, bool& ok) {
  const auto ord = polarity_involution_on_line(Conic::unit_circle(), PLine(1, 0, -2));
  const auto cl = classify_and_fixed_points(ord);
  const LineChart chart = ord.chart();
  // t -> -3/t in the chart y of the line x = 2.
  bool example = cl.kind == InvolutionKind::Elliptic;
  for (int t : {1, 2, -3, 5})
    example = example && ord.image(chart.coordinate(P(2, t))) == chart.coordinate(P(2, Rat(-3, t)));
  ok = example;
  return std::string("ordinale x=2 ") + (example ? "t -> -3/t elliptic" : "wrong") + "; " +
         suites({"classification"}, seed, 100, ok);
}

std::string diameters(std::uint64_t seed, bool& ok) {
  const Conic circle = Conic::unit_circle();
  const Conic hyperbola = Conic::from_coefficients({1, -1, -1, 0, 0, 0});
  const PLine inf = PLine::at_infinity();
  const auto hf = affine_features(hyperbola, inf);
  const std::set<std::string> expected{PLine(1, 1, 0).str(), PLine(1, -1, 0).str()};
  std::set<std::string> got;
  bool asym = hf.kind == AffineKind::Hyperbola && hf.asymptotes.size() == 2;
  for (const auto& a : hf.asymptotes) {
    got.insert(a.str());
    asym = asym && conjugate_diameters(hyperbola, inf, a) == a;
  }
  asym = asym && got == expected;

  int perpendicular = 0;
  cases(seed ^ 0x7110, 20, [&](Draw& draw) {
    const Rat u = draw.rat(), v = draw.nonzero();
    const PLine d(u, v, 0);
    const auto& a = d.coeffs();
    const Vec3 b = conjugate_diameters(circle, inf, d).coeffs();
    perpendicular += (a[0] * b[0] + a[1] * b[1]).is_zero();
    return true;
  });

  int centers = 0, charts = 0;
  cases(seed ^ 0x7111, 20, [&](Draw& draw) {
    const auto [conic, base] = draw.conic_with_point();
    const PLine lambda = draw.line();
    if (lambda.is_at_infinity() || lambda.coeffs()[2].is_zero() || is_tangent(conic, lambda))
      return false;
    ++charts;
    centers += transport_check(conic, lambda, homography_to_infinity(lambda)).holds;
    return true;
  });
  ok = asym && perpendicular == 20 && centers == 20;
  return "asymptotes " + hf.asymptotes[0].str() + " " + hf.asymptotes[1].str() +
         " self-conjugate; perpendicular " + count(perpendicular, 20) + "; centers " +
         count(centers, charts);
}

std::string self_polar(std::uint64_t seed, bool& ok) {
  int good = 0, total = 0;
  cases(seed ^ 0x7112, 50, [&](Draw& draw) {
    const auto [conic, base] = draw.conic_with_point();
    const RationalParametrization param(conic, base);
    try {
      const InscribedQuadrangle q(conic, draw.on_conic(param), draw.on_conic(param),
                                  draw.on_conic(param), draw.on_conic(param));
      ++total;
      good += polar(conic, q.f()) == join(q.n(), q.g()) &&
              polar(conic, q.n()) == join(q.f(), q.g()) &&
              polar(conic, q.g()) == join(q.f(), q.n());
      return true;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::DegenerateQuadrangle) throw;
      return false;
    }
  });
  ok = good == total;
  return "self-polar " + count(good, total);
}

std::string rendering(bool& ok) {
  std::string out;
  for (int n : figure_numbers()) {
    std::string svg[2];
    IncidenceAudit audit;
    for (int run = 0; run < 2; ++run) {
      Scene scene = Scene::parse(*figure_scene(n));
      const SceneReport report = run_scene(scene, {.out_dir = {}, .write_files = false});
      ok = ok && report.ok() && report.renders.size() == 1;
      if (report.renders.empty()) continue;
      svg[run] = report.renders[0].svg;
      if (run == 0) audit = audit_svg(scene, svg[0], report.renders[0].viewport);
    }
    const bool same = !svg[0].empty() && svg[0] == svg[1];
    ok = ok && same && audit.ok() && audit.checked > 0;
    char line[96];
    std::snprintf(line, sizeof line, "%sfig%d %s %d incidences max %.1e", out.empty() ? "" : "; ",
                  n, same ? "identical" : "differs", audit.checked, audit.max_relative_error);
    out += line;
  }
  return out;
}

}  // namespace

std::string Criterion::str() const {
  char head[16];
  std::snprintf(head, sizeof head, "%s %2d ", passed ? "PASS" : "FAIL", id);
  return head + title + ": " + detail;
}

std::vector<Criterion> run_acceptance(std::uint64_t seed) {
  std::vector<Criterion> out;
  out.push_back(criterion(1, "traversale equals polar for two independent quadrangles",
                          [&](bool& ok) { return traversale_agreement(seed, ok); }));
  out.push_back(criterion(2, "pole by construction equals algebraic pole",
                          [&](bool& ok) { return pole_agreement(seed, ok); }));
  out.push_back(criterion(3, "worked example", [](bool& ok) { return worked_example(ok); }));
  out.push_back(criterion(4, "rectangle condition iff involution membership",
                          [&](bool& ok) { return equivalence(seed, ok); }));
  out.push_back(criterion(5, "perspectivities preserve involutions", [&](bool& ok) {
    return suites({"ramee"}, seed, 100, ok);
  }));
  out.push_back(criterion(6, "pencil theorem", [&](bool& ok) { return pencil(seed, ok); }));
  out.push_back(criterion(7, "two involutions", [&](bool& ok) { return two(seed, ok); }));
  out.push_back(criterion(8, "classification trichotomy", [&](bool& ok) { return trichotomy(seed, ok); }));
  out.push_back(criterion(9, "duality", [&](bool& ok) {
    return suites({"biduality", "incidence-duality"}, seed, 100, ok);
  }));
  out.push_back(criterion(10, "asymptotes, diameters and centers",
                          [&](bool& ok) { return diameters(seed, ok); }));
  out.push_back(criterion(11, "self-polar diagonal triangle",
                          [&](bool& ok) { return self_polar(seed, ok); }));
  out.push_back(criterion(12, "deterministic figures with exact incidences",
                          [](bool& ok) { return rendering(ok); }));
  return out;
}

}  // namespace desargues
