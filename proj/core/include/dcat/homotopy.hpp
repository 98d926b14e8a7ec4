#pragma once

#include <map>

#include "dcat/colimit.hpp"
#include "dcat/solver.hpp"

namespace dcat {

/// Decides homotopy rel A between maps B -> X by solving the extension
/// problem over the relative cylinder B x_A Delta^1. The cylinder pair is
/// built once and reused across queries.
class HomotopyChecker {
 public:
  HomotopyChecker(Inclusion a_in_b, Quasicat cert);

  const SSetPtr& b() const { return a_in_b_.dst(); }
  Dim cylinder_dim() const { return cyl_full_.sset()->top_dim(); }

  /// Requires f|A = g|A. Witness (when provided and the answer is Yes) is the
  /// homotopy on B x_A Delta^1.
  Answer homotopic(const SMap& f, const SMap& g, Budget& budget, SMap* witness = nullptr);

  /// f union g as a map on B x_A (boundary Delta^1).
  SMap join_ends(const SMap& f, const SMap& g) const;

  const RelCylinder& cylinder() const { return cyl_full_; }

 private:
  Inclusion a_in_b_;
  Quasicat cert_;
  RelCylinder cyl_ends_;  // over the boundary of Delta^1
  RelCylinder cyl_full_;  // over Delta^1
  SMap ends_incl_;        // cyl_ends_ -> cyl_full_
};

/// The set [A,B,C;X]: maps B -> X extending to C, modulo homotopy rel A.
/// Class representatives are the lexicographically minimal members found.
struct HClassSet {
  SSetPtr b;
  SSetPtr x;
  SearchStatus status = SearchStatus::Complete;
  Dim certified_bound = 0;

  struct Cls {
    Encoded rep;
    SMap rep_map;
    SMap witness;  // an extension of rep to C
    std::vector<Encoded> members;
  };
  std::vector<Cls> classes;        // ordered by rep encoding
  std::map<Encoded, int> member_class;

  int find(const Encoded& e) const {
    auto it = member_class.find(e);
    return it == member_class.end() ? -1 : it->second;
  }
};

/// When the target is certified as a d-category and A contains the (d-1)-
/// skeleton of a B with cells of dimension <= d, homotopy rel A collapses to
/// equality and the class search can skip cylinder solving entirely.
struct DCategoryShortcut {
  Dim d = 0;
};

HClassSet homotopy_classes(const Inclusion& a_in_b, const Inclusion& b_in_c,
                           const Quasicat& cert, Budget& budget,
                           const DCategoryShortcut* shortcut = nullptr);

/// Homotopy classes of edges rel endpoints, with composition via inner-horn
/// fillers; the morphism layer of the ordinary homotopy category.
class EdgeHomotopyCategory {
 public:
  static EdgeHomotopyCategory make(const Quasicat& cert, Budget& budget);

  int class_count() const { return static_cast<int>(reps_.size()); }
  int class_of(const SimplexRef& edge) const;
  const SimplexRef& rep(int cls) const { return reps_[cls]; }
  int src(int cls) const;
  int dst(int cls) const;
  int identity_class(int vertex) const { return ident_[vertex]; }
  int compose(int g, int f) const;  // g after f
  bool invertible(int cls) const;

  /// The edge witnesses an equivalence between its endpoints.
  bool is_equivalence(const SimplexRef& edge) const { return invertible(class_of(edge)); }

 private:
  SSetPtr x_;
  std::vector<SimplexRef> reps_;
  std::vector<int> class_of_ref_;             // index into refs(1)
  std::vector<int> ident_;                    // vertex -> class
  std::map<std::pair<int, int>, int> comp_;
};

/// Simplicial map Delta^1 -> X picking out an edge.
SMap edge_map(const SSetPtr& x, const SimplexRef& e);
/// Simplicial map Delta^0 -> X picking out a vertex.
SMap vertex_map(const SSetPtr& x, SimplexId v);
/// Characteristic map Delta^n -> X of an arbitrary n-simplex.
SMap simplex_map(const SSetPtr& x, const SimplexRef& r);

}  // namespace dcat
