#pragma once

#include <string>
#include <vector>

#include "dcat/sset.hpp"

namespace dcat {

/// A finite degree-wise simplicial family materialized through a cap: for
/// each degree n <= cap a finite set of elements (in canonical order) with
/// face maps into degree n-1 and degeneracy maps into degree n+1 (the latter
/// defined for n < cap). Elements are identified by their index.
struct TabulatedFamily {
  Dim cap = -1;
  std::vector<std::vector<std::string>> names;        // degree -> element -> name
  std::vector<std::vector<std::vector<int>>> face;    // degree -> element -> i -> element
  std::vector<std::vector<std::vector<int>>> deg;     // degree -> element -> i -> element

  int size(Dim n) const {
    return (n < 0 || n > cap) ? 0 : static_cast<int>(names[n].size());
  }
};

/// Nondegenerate presentation of a degree-wise family: the Eilenberg-Zilber
/// extraction. `elem_ref[n][e]` resolves family elements to simplices of the
/// result; `nd_elem[n][idx]` is the inverse on nondegenerate simplices.
struct Extraction {
  SSetPtr sset;
  std::vector<std::vector<SimplexRef>> elem_ref;
  std::vector<std::vector<int>> nd_elem;

  int element_of(const SimplexRef& r) const { return nd_elem[r.base.dim][r.base.idx]; }
};

/// Extracts the canonical nondegenerate presentation. An element is
/// degenerate iff it equals s_i(d_i .) for some i; peeling the largest such i
/// repeatedly yields the canonical word.
Extraction extract(const TabulatedFamily& fam);

/// Word arithmetic on refs that never needs a face table: s_i in normal form.
SimplexRef ref_degenerate(const SimplexRef& r, int i);

/// d_i of a ref when i is a letter of the degeneracy word (the face operator
/// is absorbed by the word, so no face table is needed).
SimplexRef ref_strip(const SimplexRef& r, int i);

}  // namespace dcat
