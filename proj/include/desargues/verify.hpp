#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "desargues/property.hpp"

namespace desargues {

struct VerificationReport {
  std::string suite;
  std::uint64_t seed = 0;
  int cases = 0;
  std::vector<PropertyResult> properties;

  bool ok() const;
  // One line per property, then a JSON summary block. Byte-identical for
  // identical (suite, seed, cases).
  std::string str() const;
  std::string summary_json() const;
};

// Suite ids, in a fixed order.
const std::vector<std::string>& suite_names();

// The properties of a suite. Throws UnknownSuite.
std::vector<Property> suite_properties(const std::string& name);

VerificationReport verify_suite(const std::string& name, std::uint64_t seed,
                                int cases);

}  // namespace desargues
