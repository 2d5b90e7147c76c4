#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "trefoil/surgery.hpp"

namespace trefoil {

// Named invariant batteries, one per module ("algebra", "surface", "metric",
// "holonomy", "surgery") plus "all".  Each check reports its worst residual
// against its tolerance; checks marked in `detail` as negative controls must
// instead exceed the tolerance.
std::vector<SummaryCheck> run_verify_suite(const std::string &suite, std::uint64_t seed,
                                           int samples);

bool all_pass(const std::vector<SummaryCheck> &checks);

}  // namespace trefoil
