#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coherent/functionals.hpp"

namespace coherent::cli {

struct VerifyEntry {
  CheckReport report;
  std::string expectation;  // "bound" or "equality"
  bool passed = false;
};

/// Invariant suite for one geometry. Random draws are seeded from `seed`;
/// random states have degree `degree` (default min(6, 2 beta) on the Sphere, 6 elsewhere).
std::vector<VerifyEntry> run_verification(const PhaseSpace& space, std::optional<int> degree,
                                          std::uint64_t seed, const GridOptions& grid = {});

}  // namespace coherent::cli
