#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "desargues/conic.hpp"
#include "desargues/projective.hpp"

namespace desargues {

// Thrown from a property body to discard the current inputs.
struct Discard {};

// Source of random inputs for a property case. In recording mode values
// come from the generator and are logged; in replay mode they are read back
// from a (possibly shrunk) log, so a case is fully described by its log.
class Draw {
 public:
  explicit Draw(std::mt19937_64& rng) : rng_(&rng) {}
  explicit Draw(std::vector<Rat> log) : log_(std::move(log)) {}

  const std::vector<Rat>& log() const { return log_; }

  long long integer(long long lo, long long hi);
  Rat rat(long long height = 12);
  Rat nonzero(long long height = 12);
  PPoint point(long long height = 12);
  PPoint affine_point(long long height = 12);
  PLine line(long long height = 12);
  Homography homography(long long height = 6);
  // A nondegenerate real conic (image of the unit circle) and a point on it.
  std::pair<Conic, PPoint> conic_with_point(long long height = 4);
  PPoint on_conic(const RationalParametrization& param, long long height = 12);

 private:
  Rat next(const std::function<Rat()>& fresh);

  std::mt19937_64* rng_ = nullptr;
  std::vector<Rat> log_;
  std::size_t pos_ = 0;
};

struct Outcome {
  enum class Status { Pass, Fail, Discard };
  Status status;
  std::string detail;

  static Outcome pass() { return {Status::Pass, {}}; }
  static Outcome fail(std::string why) { return {Status::Fail, std::move(why)}; }
  static Outcome check(bool ok, std::string why) { return ok ? pass() : fail(std::move(why)); }
};

struct Property {
  std::string name;
  std::function<Outcome(Draw&)> body;
};

struct PropertyResult {
  std::string name;
  int passed = 0;
  int failed = 0;
  int discarded = 0;
  // First failing case after shrinking: inputs and failure detail.
  std::optional<std::string> counterexample;
  bool ok() const { return failed == 0; }
};

// Case i of a run draws from mt19937_64 seeded by (seed, i).
std::mt19937_64 case_rng(std::uint64_t seed, int case_index);

// Runs `cases` cases, regenerating discarded ones up to a retry budget, and
// shrinks the first failure by halving rational numerators and denominators.
PropertyResult run_property(const Property& p, std::uint64_t seed, int cases);

// Smallest log (under repeated halving) that still fails; returns the
// input unchanged when no shrink step applies.
std::pair<std::vector<Rat>, std::string> shrink(const Property& p,
                                                std::vector<Rat> log,
                                                std::string detail);

}  // namespace desargues
