#pragma once

#include "dcat/io.hpp"
#include "dcat/operad.hpp"
#include "dcat/report.hpp"

namespace dcat {

/// Simplicial identities and Eilenberg-Zilber normal-form uniqueness over the
/// standard corpus (simplices, boundaries, horns, their pairwise products,
/// and the quotients the constructions use).
Report verify_kernel_laws(Budget& budget);

/// The explicit comparison Sigma(B x_A D) -> Sigma B x_{Sigma A} D is a
/// degree-wise bijection for the nine stock (A in B, D) instances.
Report verify_cylinder_lemma(Budget& budget);

/// The four homotopy-rel-A conditions (right space, middle space, J level,
/// Sigma level) agree for all generated map pairs, and homotopy rel A is an
/// equivalence relation on each map set.
Report verify_homrel(const Quasicat& cert, const std::string& tag, Budget& budget);
Report verify_homrel_suite(Budget& budget);

/// alpha (bijection plus the commuting triangle) over a complex for all
/// vertex pairs at one level.
Report verify_alpha(const Quasicat& cert, const std::string& tag, Dim d, Dim m, Budget& budget);
Report verify_alpha_suite(Budget& budget);

/// theta is an isomorphism exactly on certified d-categories, and the
/// Fun-precomposition bijection holds on vertices and edges.
Report verify_universal_suite(Budget& budget);

/// h_d idempotence, tower compatibility, theta-naturality.
Report verify_functor_laws(Budget& budget);

/// coCartesian edges survive h_1 on product-nerve projections; a known
/// non-coCartesian edge fails.
Report verify_cocart_suite(Budget& budget);

/// The operad suite: validation of the stock operads, the d-operad
/// predicates, h_0(Ass) against Comm, unit maps, re-validation of the
/// truncations, and the multi-mapping comparisons.
Report verify_operad_suite(Budget& budget, bool include_heavy = true);

/// Algebra complexes are 0-categories and precomposition along theta_0 is a
/// bijection on algebra vertices.
Report verify_alg_suite(Budget& budget);

/// Everything above, in canonical order.
Report full_report(Budget& budget, bool include_heavy = true);

}  // namespace dcat
