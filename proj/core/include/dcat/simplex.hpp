#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace dcat {

using Dim = int;

/// Raised on malformed input (files, presentations, argument errors).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a computation would need data outside the materialized or
/// certified range (dimension caps, quasi-category certificates).
class CertificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when the search node budget runs out. Callers that can report a
/// three-valued answer catch this and surface "inconclusive" instead.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Internal consistency failure; indicates a bug, never bad user input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

#define DCAT_REQUIRE(cond, msg)                           \
  do {                                                    \
    if (!(cond)) throw ::dcat::InternalError(msg);        \
  } while (0)

/// Handle of a nondegenerate simplex inside one SSet: (dimension, position
/// in the canonical per-dimension order).
struct SimplexId {
  Dim dim = 0;
  int idx = 0;

  friend bool operator==(const SimplexId&, const SimplexId&) = default;
  friend auto operator<=>(const SimplexId&, const SimplexId&) = default;
};

/// Strictly decreasing degeneracy word s_{j1} s_{j2} ... s_{jk}, j1 > ... > jk.
using DegenWord = std::vector<int>;

/// A simplex in Eilenberg-Zilber normal form: a strictly decreasing
/// degeneracy word applied to a nondegenerate base simplex. Every simplex of
/// a simplicial set has exactly one such presentation.
struct SimplexRef {
  DegenWord degens;
  SimplexId base;

  Dim dim() const { return base.dim + static_cast<Dim>(degens.size()); }
  bool degenerate() const { return !degens.empty(); }

  /// Word as a bitmask; letters are < 64 at any desk scale we support.
  std::uint64_t word_mask() const {
    std::uint64_t m = 0;
    for (int j : degens) m |= (std::uint64_t{1} << j);
    return m;
  }

  friend bool operator==(const SimplexRef&, const SimplexRef&) = default;
};

/// Canonical total order on refs of equal dimension: nondegenerate first,
/// then by base position, then by word. Used for all deterministic output.
inline bool ref_less(const SimplexRef& a, const SimplexRef& b) {
  if (a.degens.size() != b.degens.size()) return a.degens.size() < b.degens.size();
  if (a.base != b.base) return a.base < b.base;
  return a.degens < b.degens;
}

inline bool word_strictly_decreasing(const DegenWord& w) {
  for (size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] <= w[i + 1]) return false;
  return w.empty() || w.back() >= 0;
}

}  // namespace dcat
