#pragma once

#include "dcat/solver.hpp"

namespace dcat {

/// Searches for a dimension-wise bijection of nondegenerate simplices
/// commuting with faces through the cap (cap < 0: the larger top dimension).
/// With fiber maps given, the isomorphism must also commute with them.
/// Returns the first witness in canonical search order, or nothing.
std::optional<SMap> iso_check(const SSetPtr& a, const SSetPtr& b, Dim cap, Budget& budget,
                              const SMap* fiber_a = nullptr, const SMap* fiber_b = nullptr);

}  // namespace dcat
