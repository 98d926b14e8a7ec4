#pragma once

#include <functional>

#include "dcat/colimit.hpp"
#include "dcat/homotopy.hpp"
#include "dcat/nerve.hpp"
#include "dcat/solver.hpp"

namespace dcat {

// -- d-category predicate ------------------------------------------------------

struct DCatViolation {
  std::string condition;  // "horn", "(1)" or "(2)"
  Dim dim = 0;
  std::string detail;
};

struct DCatResult {
  Answer answer = Answer::Inconclusive;
  Dim d = 0;
  Dim bound = 0;
  std::optional<DCatViolation> violation;
  bool yes() const { return answer == Answer::Yes; }
};

/// Conditions of the strict d-category predicate: (1) at dimension d
/// (homotopic rel boundary implies equal; at d = 0, equivalent objects are
/// equal) and (2) for d < k <= m (the boundary determines the simplex).
DCatResult is_d_category(const Quasicat& cert, Dim d, Dim m, Budget& budget);

/// Condition (1) alone; this is what licenses the singleton-class shortcut in
/// bracket computations.
bool condition1_holds(const Quasicat& cert, Dim d, Budget& budget);

// -- the d-homotopy category, d >= 1 -------------------------------------------

/// h_d C computed degree-wise by the bracket description: the m-simplices are
/// the classes [sk^{d-1} Delta^m, sk^d Delta^m, sk^{d+1} Delta^m; C], with the
/// simplicial operators acting by precomposition. Materialized through a
/// requested dimension; face/degeneracy data and the canonical unit are kept.
class TruncatedSSet {
 public:
  static TruncatedSSet make(const Quasicat& cert, Dim d, Dim out_dim, Budget& budget);

  Dim d() const { return d_; }
  Dim out_dim() const { return out_dim_; }
  const SSetPtr& source() const { return cert_.sset; }
  const Quasicat& source_cert() const { return cert_; }

  const SSetPtr& sset() const { return ex_.sset; }
  const Extraction& extraction() const { return ex_; }
  /// Unit map; its domain is the out_dim-skeleton of the source.
  const SMap& theta() const { return theta_; }
  const SSetPtr& theta_domain() const { return theta_.src(); }

  const HClassSet& level(Dim m) const { return levels_[m]; }
  int class_count(Dim m) const { return static_cast<int>(levels_[m].classes.size()); }

  /// Class of a bracket member (a map sk^d Delta^m -> C that extends).
  int class_of(Dim m, const SMap& member) const;
  /// Family element of an arbitrary simplex of the extraction.
  int elem_of_ref(const SimplexRef& r) const;
  SimplexRef ref_of_class(Dim m, int cls) const { return ex_.elem_ref[m][cls]; }

  /// The skeleton complexes sk^e Delta^m used by the levels.
  const Subcomplex& skel(Dim m, Dim e) const;

  /// Functoriality: the induced map h_d C -> h_d D of f: C -> D.
  static SMap induced(const TruncatedSSet& hc, const TruncatedSSet& hd, const SMap& f);

 private:
  Quasicat cert_;
  Dim d_ = 1;
  Dim out_dim_ = 2;
  std::vector<HClassSet> levels_;
  std::vector<std::vector<std::vector<int>>> face_;  // m -> cls -> i
  std::vector<std::vector<std::vector<int>>> deg_;
  Extraction ex_;
  SMap theta_;
  mutable std::map<std::pair<Dim, Dim>, Subcomplex> skels_;
};

// -- the d-homotopy category, d <= 0 --------------------------------------------

/// h_d C for d = -2, -1, 0 together with the unit. For d = 0 the preorder
/// uses edge existence (nonempty mapping space in a quasi-category) and
/// mutually related objects are identified before taking the poset nerve.
struct LowTruncation {
  Dim d = 0;
  SSetPtr sset;
  SMap theta;  // from the full source
  // d = 0 bookkeeping
  std::shared_ptr<NerveSSet> poset_nerve;
  std::vector<int> class_of_vertex;  // source vertex -> poset object
};

LowTruncation h_low(const Quasicat& cert, Dim d, Budget& budget);

// -- mapping spaces --------------------------------------------------------------

using RefFilter = std::function<bool(Dim, const SimplexRef&)>;

/// hom^R or hom^M of an ambient complex at a vertex pair, extracted through a
/// degree cap. Right elements of degree n embed into the ambient (n+1)-
/// simplices (front face totally degenerate at X, last vertex Y); middle
/// elements are maps Delta^n x Delta^1 -> C with the two ends collapsed.
class MappingSpace {
 public:
  enum Kind { Right, Middle };

  static MappingSpace right(SSetPtr c, SimplexId x, SimplexId y, Dim cap, Budget& budget,
                            RefFilter filter = nullptr);
  static MappingSpace middle(SSetPtr c, SimplexId x, SimplexId y, Dim cap, Budget& budget);

  Kind kind() const { return kind_; }
  const SSetPtr& ambient() const { return ambient_; }
  SimplexId x() const { return x_; }
  SimplexId y() const { return y_; }
  Dim cap() const { return cap_; }
  const SSetPtr& sset() const { return ex_.sset; }
  const Extraction& extraction() const { return ex_; }

  // Right accessors
  int element_of_ambient(Dim n, const SimplexRef& z) const;
  const SimplexRef& ambient_of(Dim n, int e) const { return elems_[n][e]; }
  /// Extraction simplex of a pinned ambient (n+1)-ref.
  SimplexRef ms_ref(Dim n, const SimplexRef& z) const;
  /// Ambient ref of an arbitrary extraction simplex.
  SimplexRef ambient_of_ref(const SimplexRef& r) const;

  // Middle accessors
  const SMap& cylinder_map(Dim n, int e) const { return elem_maps_[n][e]; }
  const Product& cylinder(Dim n) const { return *prods_[n]; }
  int element_of_map(Dim n, const Encoded& e) const;
  int elem_of_ref_middle(const SimplexRef& r) const;

 private:
  Kind kind_ = Right;
  SSetPtr ambient_;
  SimplexId x_{}, y_{};
  Dim cap_ = 0;
  Extraction ex_;
  // Right
  std::vector<std::vector<SimplexRef>> elems_;
  std::vector<std::unordered_map<std::uint64_t, int>> elem_index_;
  // Middle
  std::vector<std::vector<SMap>> elem_maps_;
  std::vector<std::map<Encoded, int>> elem_map_index_;
  std::vector<std::shared_ptr<Product>> prods_;
  std::vector<std::vector<std::vector<int>>> mid_face_, mid_deg_;
};

/// The comparison monomorphism hom^R -> hom^M (precomposition with the
/// canonical collapse Delta^n x Delta^1 -> Delta^{n+1}).
SMap phi_map(const MappingSpace& right, const MappingSpace& middle);

/// f-bar: the map J(K) -> C corresponding to f: K -> hom^R(X,Y), using the
/// provided cone on K.
SMap j_adjoint(const MappingSpace& right, const PointedCone& jk, const SMap& f);
/// F-bar: the map Sigma(K) -> C corresponding to F: K -> hom^M(X,Y).
SMap sigma_adjoint(const MappingSpace& middle, const PointedCone& sk, const SMap& f);

/// Functor complex Fun(A, B) through a degree cap (degree n enumerates the
/// maps A x Delta^n -> B; expensive, intended for small instances).
struct FunComplex {
  SSetPtr a, b;
  Dim cap = 0;
  Extraction ex;
  std::vector<std::vector<SMap>> elem_maps;  // degree -> maps A x Delta^n -> B
  std::vector<std::shared_ptr<Product>> prods;
  SearchStatus status = SearchStatus::Complete;
};
FunComplex fun_complex(const SSetPtr& a, const SSetPtr& b, Dim cap, Budget& budget);

// -- verification of the structural results --------------------------------------

struct CheckItem {
  std::string id;
  Answer answer = Answer::Inconclusive;
  std::string detail;
};

struct CheckReport {
  std::vector<CheckItem> items;
  bool all_passed() const {
    for (const auto& i : items)
      if (i.answer != Answer::Yes) return false;
    return true;
  }
  void add(const std::string& id, Answer a, const std::string& detail = "") {
    items.push_back({id, a, detail});
  }
  void add(const std::string& id, bool ok, const std::string& detail = "") {
    items.push_back({id, ok ? Answer::Yes : Answer::No, detail});
  }
};

/// Builds the canonical comparison alpha: hom^R_{h_d C}(tX, tY) ->
/// h_{d-1} hom^R_C(X,Y) degree-wise through dimension m, checks that it is an
/// isomorphism commuting with the simplicial operators, and checks the
/// triangle gamma = alpha . beta. Optional filters restrict both mapping
/// spaces to a fiber (used by the operad layer).
struct AlphaData {
  CheckReport report;
  // materialized pieces, exposed for reuse by callers
  std::shared_ptr<TruncatedSSet> hd;            // d >= 1
  std::shared_ptr<LowTruncation> hd_low;        // d <= 0
  std::shared_ptr<MappingSpace> ms_c;           // hom^R_C(X,Y)
  std::shared_ptr<MappingSpace> ms_hd;          // hom^R_{h_d C}
  SSetPtr rhs;                                  // h_{d-1} of ms_c
  std::optional<SMap> alpha, beta, gamma;
};

AlphaData alpha_verify(const Quasicat& cert, SimplexId x, SimplexId y, Dim d, Dim m,
                       Budget& budget, RefFilter filter_c = nullptr,
                       RefFilter filter_hd = nullptr,
                       std::shared_ptr<TruncatedSSet> hd_ready = nullptr);

/// Fun(h_d C, D) -> Fun(C, D) precomposition bijection on vertices and edges,
/// for a target certified as a d-category.
CheckReport universal_property_verify(const Quasicat& cert_c, const Quasicat& cert_d, Dim d,
                                      Dim edge_cap, Budget& budget);

}  // namespace dcat
