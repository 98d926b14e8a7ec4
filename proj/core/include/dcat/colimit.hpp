#pragma once

#include "dcat/extract.hpp"
#include "dcat/product.hpp"
#include "dcat/sset.hpp"

namespace dcat {

/// Degree-wise pushout of B <-f- A -g-> C with f an inclusion, renormalized
/// to a nondegenerate presentation. Quotient classes are named by their
/// lexicographically minimal member.
struct Pushout {
  SSetPtr sset;
  SMap leg_b;  // B -> P
  SMap leg_c;  // C -> P
  // canonical member of each nondegenerate class: (side, ref), side 0 = B
  std::vector<std::vector<std::pair<int, SimplexRef>>> rep;

  /// Map P -> Q induced by compatible maps on the legs.
  SMap induced(const Pushout& q, const SMap& bmap, const SMap& cmap) const;

  /// Map out of the pushout assembled from values on the two legs; the
  /// callbacks receive the canonical member ref of each class.
  SMap assemble(const SSetPtr& x, const std::function<SimplexRef(const SimplexRef&)>& eval_b,
                const std::function<SimplexRef(const SimplexRef&)>& eval_c) const;
};

Pushout pushout(const Inclusion& f, const SMap& g, Dim cap = -1);

/// B collapsed along a subcomplex: pushout of A -> Delta^0.
Pushout quotient_to_point(const Inclusion& a_in_b);

/// The constant map K -> X at a vertex.
SMap constant_map(const SSetPtr& k, const SSetPtr& x, SimplexId vertex);

/// n-fold degeneracy of a vertex.
SimplexRef degenerate_to(const SSet& x, SimplexId vertex, Dim n);

/// The relative cylinder object B x_A D (pushout of A <- A x D -> B x D),
/// with enough structure to assemble and solve homotopy extension problems.
struct RelCylinder {
  SSetPtr a, b, d;
  SMap incl_ab;  // A -> B
  Product bxd;
  Product axd;
  Pushout po;  // the cylinder itself

  const SSetPtr& sset() const { return po.sset; }
  /// B -> cylinder at a vertex t of D.
  SMap end(SimplexId t) const;
  /// Assembles h: cylinder -> X from a map on B x D and its A-collapse:
  /// value(b x d side) = eval(b, d), value(A side) = on_a(a).
  SMap assemble(const SSetPtr& x,
                const std::function<SimplexRef(const SimplexRef&, const SimplexRef&)>& eval,
                const std::function<SimplexRef(const SimplexRef&)>& on_a) const;
};

RelCylinder rel_cylinder(const Inclusion& a_in_b, const SSetPtr& d, Dim cap = -1);

/// Cone CK = K * Delta^0: base copy of K, apex, and a cone simplex over every
/// nondegenerate simplex of K.
struct Cone {
  SSetPtr sset;
  SMap base;  // K -> CK
  SimplexId apex;
  /// cone simplex over an arbitrary simplex of K
  SimplexRef over(const SimplexRef& r) const;
  SSetPtr k;
};

Cone cone(const SSetPtr& k);

/// J(K) = (K * Delta^0)/K or Sigma(K) = (K x Delta^1)/(two ends), each with
/// the canonical basepoint pair map del Delta^1 -> result.
struct PointedCone {
  enum Kind { J, Sigma };
  Kind kind;
  SSetPtr k;
  SSetPtr sset;
  SimplexId v0, v1;  // images of 0 (collapsed K) and 1 (cone point)

  // construction innards, kept for resolving and induced maps
  std::shared_ptr<const Cone> cone;        // J only
  std::shared_ptr<const Product> kxi;      // Sigma only
  std::shared_ptr<const Product> kxdi;     // Sigma only: K x del Delta^1
  Pushout po;

  SimplexRef v(int t) const { return SimplexRef{{}, t == 0 ? v0 : v1}; }
  /// J: value on the cone simplex over r; Sigma: value on (r, edge ref of
  /// Delta^1). Both resolve through the quotient.
  SimplexRef over(const SimplexRef& r) const;               // J only
  SimplexRef cyl(const SimplexRef& r, const SimplexRef& t) const;  // Sigma only
};

PointedCone cone_j(const SSetPtr& k, Dim cap = -1);
PointedCone cone_sigma(const SSetPtr& k, Dim cap = -1);

/// Functorial action on an inclusion A -> B (J and Sigma preserve monos).
SMap pointed_cone_map(const PointedCone& src, const PointedCone& dst, const SMap& f);

/// Attempts the name-identity isomorphism between two SSets (every simplex of
/// `a` must exist in `b` with the same name and faces, and counts must match).
std::optional<SMap> iso_by_names(const SSetPtr& a, const SSetPtr& b);

}  // namespace dcat
