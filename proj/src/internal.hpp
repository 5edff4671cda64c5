#pragma once

#include <polybern/rational.hpp>

#include <optional>
#include <vector>

// Cross-module internals shared by the cache owners and the fault hooks.
namespace polybern::detail {

struct Stirling2Fault {
  long n = 0;
  long m = 0;
  long delta = 0;
};

struct AlphaFault {
  std::vector<long> magnitudes;
  long l = 0;
  long delta = 0;
};

std::optional<Stirling2Fault>& stirling2_fault();
std::optional<AlphaFault>& alpha_fault();

}  // namespace polybern::detail
