#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "desargues/conic.hpp"
#include "desargues/projective.hpp"
#include "desargues/synthetic.hpp"

namespace desargues {

struct Token {
  std::string text;
  int column;  // 1-based
};

struct SceneCommand {
  int line;  // 1-based
  std::string text;
  std::vector<Token> tokens;
};

// Axis-aligned window of the affine chart z = 1.
struct Viewport {
  Rat xmin = -2;
  Rat ymin = -2;
  Rat xmax = 2;
  Rat ymax = 2;

  // Throws EmptyViewport unless xmin < xmax and ymin < ymax.
  void validate() const;
  friend bool operator==(const Viewport&, const Viewport&) = default;
};

using SceneValue = std::variant<Conic, PPoint, PLine, InscribedQuadrangle>;

struct SceneObject {
  std::string name;
  SceneValue value;
  bool visible = true;
};

// A parsed scene file: the command list and, once run, the named objects.
//
//   conic NAME a b c d e f        ax^2 + by^2 + cz^2 + dxy + exz + fyz = 0
//   point NAME x y [z]
//   line NAME u v w
//   quadrangle NAME conic=CONIC B C D E
//   construct OP ARGS... -> OUTPUTS...
//   check WHAT ARGS...
//   hide NAME...
//   viewport xmin ymin xmax ymax
//   render FIGSPEC out=PATH [viewport=xmin,ymin,xmax,ymax]
class Scene {
 public:
  // Throws ParseError with line and column on malformed input.
  static Scene parse(std::string_view text);
  static Scene load(const std::filesystem::path& path);  // IoError, ParseError

  const std::vector<SceneCommand>& commands() const { return commands_; }
  const std::vector<SceneObject>& objects() const { return objects_; }
  const SceneObject* find(const std::string& name) const;
  // Throws DuplicateName.
  void define(const std::string& name, SceneValue value);
  void hide(const std::string& name);
  void clear_objects() { objects_.clear(); }

 private:
  std::vector<SceneCommand> commands_;
  std::vector<SceneObject> objects_;
};

struct CheckResult {
  int line;
  std::string command;
  bool passed;
  std::string detail;
};

struct RenderOutput {
  std::string figspec;
  std::filesystem::path path;
  Viewport viewport;
  std::string svg;
};

struct SceneReport {
  std::vector<CheckResult> checks;
  std::vector<RenderOutput> renders;

  bool ok() const;
  // One line per check, then a JSON summary block.
  std::string str() const;
};

struct RunOptions {
  // Directory for relative render paths; the current directory when empty.
  std::filesystem::path out_dir;
  bool write_files = true;
};

// Executes the commands in order. Reference and domain errors are rethrown
// with the offending line named; check failures are recorded, not thrown.
SceneReport run_scene(Scene& scene, const RunOptions& options = {});

// Built-in scenes for the figures 8, 10, 13, 14 and 16; nullopt otherwise.
std::optional<std::string> figure_scene(int figure);
const std::vector<int>& figure_numbers();

}  // namespace desargues
