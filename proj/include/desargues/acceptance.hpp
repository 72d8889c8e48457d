#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace desargues {

struct Criterion {
  int id;
  std::string title;
  bool passed;
  std::string detail;

  // "PASS  3 title: detail"
  std::string str() const;
};

// The twelve acceptance criteria, in order. Deterministic for a given seed.
std::vector<Criterion> run_acceptance(std::uint64_t seed = 1);

}  // namespace desargues
