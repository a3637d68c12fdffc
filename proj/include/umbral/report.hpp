#pragma once

#include <map>
#include <string>

namespace umbral {

/// Machine-readable outcome of a numeric verification. Maps keep key order
/// stable so rendered output is deterministic.
struct CheckReport {
  std::string check;
  std::map<std::string, std::string> params;
  std::map<std::string, double> residuals;
  std::map<std::string, std::string> convention;
  bool pass = false;
};

}  // namespace umbral
