#pragma once

#include "dcat/nerve.hpp"
#include "dcat/solver.hpp"

namespace dcat {

/// Small categories used across the test and verification suites.
Category bz2_category();            // one object, morphisms {e,s}, s.s = e
Category iso_groupoid_category();   // two objects with a mutually inverse pair
Category poset_2x2_category();      // the square poset 00 < {01,10} < 11
Category chain_category(int n);     // the linear poset 0 < 1 < ... < n

/// Nerve of the category together with its construction certificate.
struct CertifiedNerve {
  NerveSSet nerve;
  Quasicat cert;
};
CertifiedNerve certified_nerve(const Category& cat, Dim cap);

}  // namespace dcat
