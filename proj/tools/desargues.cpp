// Command-line front end: exact constructions, scene files, figures and the
// verification suites. Exit status 0 on success, 1 on a failed check, 2 on
// invalid input.
#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "desargues/acceptance.hpp"
#include "desargues/conic.hpp"
#include "desargues/error.hpp"
#include "desargues/involution.hpp"
#include "desargues/scene.hpp"
#include "desargues/synthetic.hpp"
#include "desargues/verify.hpp"

using namespace desargues;

namespace {

constexpr int kFailed = 1;
constexpr int kInputError = 2;

// "1,-1/2,3" or "1 -1/2 3".
std::vector<std::string> fields(const std::string& text) {
  std::string s = text;
  std::replace(s.begin(), s.end(), ',', ' ');
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string f; in >> f;) out.push_back(f);
  return out;
}

std::vector<Rat> rationals(const std::string& text, std::size_t lo, std::size_t hi,
                           const std::string& what) {
  const auto f = fields(text);
  if (f.size() < lo || f.size() > hi)
    throw Error(ErrorKind::ParseError, what + " '" + text + "' needs " + std::to_string(lo) +
                                           (lo == hi ? "" : "-" + std::to_string(hi)) +
                                           " rationals");
  std::vector<Rat> out;
  for (const auto& x : f) out.push_back(Rat::parse(x));
  return out;
}

Conic conic_arg(const std::string& text) {
  const auto v = rationals(text, 6, 6, "conic");
  return Conic::from_coefficients({v[0], v[1], v[2], v[3], v[4], v[5]});
}

PPoint point_arg(const std::string& text) {
  const auto v = rationals(text, 2, 3, "point");
  return PPoint(v[0], v[1], v.size() == 3 ? v[2] : Rat(1));
}

PLine line_arg(const std::string& text) {
  const auto v = rationals(text, 3, 3, "line");
  return PLine(v[0], v[1], v[2]);
}

ExtRat ext_arg(const std::string& text) {
  if (text == "inf") return ExtRat::infinity();
  return ExtRat(Rat::parse(text));
}

PointPair pair_arg(const std::string& text) {
  const auto f = fields(text);
  if (f.size() != 2) throw Error(ErrorKind::ParseError, "pair '" + text + "' needs two values");
  return {ext_arg(f[0]), ext_arg(f[1])};
}

struct Globals {
  std::uint64_t seed = 1;
  int cases = 100;
  std::string out;
};

int run_scene_file(Scene scene, const Globals& g) {
  const SceneReport report = run_scene(scene, {.out_dir = g.out, .write_files = true});
  std::cout << report.str();
  return report.ok() ? 0 : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact projective geometry of conics: poles, polars, involutions and figures."};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--seed", g.seed, "Seed for randomized searches and suites (DESARGUES_SEED overrides)");
  app.add_option("--cases", g.cases, "Cases per property in verification suites")
      ->check(CLI::PositiveNumber);
  app.add_option("--out", g.out, "Directory for rendered files");

  std::string conic_text, point_text, line_text, scene_path, suite;
  std::vector<std::string> pairs;
  bool transcript = false, all = false;
  int figure = 0;

  auto* polar_cmd = app.add_subcommand("polar", "Polar line of a point");
  polar_cmd->add_option("conic", conic_text, "a,b,c,d,e,f of ax^2+by^2+cz^2+dxy+exz+fyz")->required();
  polar_cmd->add_option("point", point_text, "x,y[,z]")->required();

  auto* pole_cmd = app.add_subcommand("pole", "Pole of a line");
  pole_cmd->add_option("conic", conic_text, "a,b,c,d,e,f")->required();
  pole_cmd->add_option("line", line_text, "u,v,w")->required();

  auto* trav_cmd = app.add_subcommand("traversale", "Polar of a point by ruler construction");
  trav_cmd->add_option("conic", conic_text, "a,b,c,d,e,f")->required();
  trav_cmd->add_option("point", point_text, "x,y[,z]")->required();
  trav_cmd->add_flag("--transcript", transcript, "Print every construction step");

  auto* inv_cmd = app.add_subcommand(
      "involution", "Involution on a line from two pairs, in the line's natural chart");
  inv_cmd->add_option("line", line_text, "u,v,w")->required();
  inv_cmd->add_option("pairs", pairs, "Two defining pairs t1,t2 (inf allowed), then pairs to test")
      ->required()
      ->expected(2, -1);

  auto* classify_cmd = app.add_subcommand("classify", "Projective and affine type of a conic");
  classify_cmd->add_option("conic", conic_text, "a,b,c,d,e,f")->required();

  auto* run_cmd = app.add_subcommand("run", "Execute a scene file");
  run_cmd->add_option("scene", scene_path, "Scene file")->required()->check(CLI::ExistingFile);

  auto* render_cmd = app.add_subcommand("render", "Render a built-in figure or a scene file");
  auto* fig_opt = render_cmd->add_option("--figure", figure, "Built-in figure: 8, 10, 13, 14 or 16");
  render_cmd->add_option("scene", scene_path, "Scene file")->excludes(fig_opt);

  auto* verify_cmd = app.add_subcommand("verify", "Run verification suites");
  auto* suite_opt = verify_cmd->add_option("suite", suite, "Suite id");
  verify_cmd->add_flag("--all", all, "Every suite, then the acceptance criteria")->excludes(suite_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }
  if (const char* env = std::getenv("DESARGUES_SEED")) {
    try {
      g.seed = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "error: DESARGUES_SEED must be a nonnegative integer\n";
      return kInputError;
    }
  }

  try {
    if (*polar_cmd) {
      std::cout << polar(conic_arg(conic_text), point_arg(point_text)).str() << "\n";
    } else if (*pole_cmd) {
      std::cout << pole(conic_arg(conic_text), line_arg(line_text)).str() << "\n";
    } else if (*trav_cmd) {
      const Conic c = conic_arg(conic_text);
      const PPoint f = point_arg(point_text);
      const auto tc = construct_traversale(c, f, {.seed = g.seed});
      if (transcript) std::cout << tc.transcript.str();
      std::cout << tc.traversale.str() << "\n";
      if (!(tc.traversale == polar(c, f))) {
        std::cout << "disagrees with the polar " << polar(c, f).str() << "\n";
        return kFailed;
      }
    } else if (*inv_cmd) {
      const LineChart chart = LineChart::natural(line_arg(line_text));
      const auto inv = involution_from_two_pairs(pair_arg(pairs[0]), pair_arg(pairs[1]), chart);
      const auto cl = classify_and_fixed_points(inv);
      std::cout << inv.str() << "\n" << to_string(cl.kind) << " discriminant " << cl.discriminant.str();
      for (const auto& p : cl.fixed_points) std::cout << " fixed " << p.str();
      std::cout << "\n";
      bool ok = true;
      for (std::size_t i = 2; i < pairs.size(); ++i) {
        const PointPair p = pair_arg(pairs[i]);
        const bool member = inv.contains(p);
        ok = ok && member;
        std::cout << p.str() << (member ? " member" : " not a member") << "\n";
      }
      return ok ? 0 : kFailed;
    } else if (*classify_cmd) {
      const Conic c = conic_arg(conic_text);
      const auto cl = classify(c);
      std::cout << c.str() << "\n"
                << to_string(cl.kind) << " rank " << cl.rank << " signature ("
                << cl.signature[0] << ", " << cl.signature[1] << ")\n";
      if (cl.kind == ConicKind::NondegenerateReal) {
        const auto af = affine_features(c, PLine::at_infinity());
        std::cout << to_string(af.kind) << " center " << af.center.str() << "\n";
        for (const auto& a : af.asymptotes) std::cout << "asymptote " << a.str() << "\n";
      }
    } else if (*run_cmd) {
      return run_scene_file(Scene::load(scene_path), g);
    } else if (*render_cmd) {
      if (figure != 0) {
        const auto text = figure_scene(figure);
        if (!text) {
          std::cerr << "error: no built-in figure " << figure << "\n";
          return kInputError;
        }
        return run_scene_file(Scene::parse(*text), g);
      }
      if (scene_path.empty()) {
        std::cerr << "error: render needs --figure N or a scene file\n";
        return kInputError;
      }
      return run_scene_file(Scene::load(scene_path), g);
    } else if (*verify_cmd) {
      if (!all && suite.empty()) {
        std::cerr << "error: verify needs a suite id or --all\n";
        return kInputError;
      }
      bool ok = true;
      const std::vector<std::string> names = all ? suite_names() : std::vector<std::string>{suite};
      for (const auto& name : names) {
        const auto report = verify_suite(name, g.seed, g.cases);
        std::cout << report.str();
        ok = ok && report.ok();
      }
      if (all) {
        std::cout << "acceptance seed=" << g.seed << "\n";
        for (const auto& c : run_acceptance(g.seed)) {
          std::cout << c.str() << "\n";
          ok = ok && c.passed;
        }
      }
      return ok ? 0 : kFailed;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return 0;
}
