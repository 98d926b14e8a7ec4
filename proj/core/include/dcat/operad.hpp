#pragma once

#include "dcat/corpus.hpp"
#include "dcat/iso.hpp"
#include "dcat/truncation.hpp"

namespace dcat {

/// Pointed finite sets <0>..<N> with pointed maps, truncated at an arity cap.
struct FinStar {
  int arity_cap = 3;

  /// A pointed map <m> -> <n>: img[i-1] in {0..n}, 0 the basepoint.
  struct PMap {
    int m = 0, n = 0;
    std::vector<int> img;
    friend bool operator==(const PMap&, const PMap&) = default;
    friend auto operator<=>(const PMap&, const PMap&) = default;
  };

  static PMap identity(int n);
  static PMap rho(int i, int n);  // <n> -> <1>, i |-> 1
  static PMap compose(const PMap& g, const PMap& f);
  static bool inert(const PMap& f);
  static bool active(const PMap& f);
  static std::string mor_id(const PMap& f);
  static std::string obj_id(int n);

  std::vector<PMap> all_maps() const;  // every <m> -> <n> within the cap
  std::vector<PMap> maps_from(int m) const;
  Category category() const;
};

/// A finite strict colored symmetric operad presentation: operation sets by
/// input/output colors, a total composition table, and a symmetric-group
/// action. Identities are derived from the table; the nerve construction
/// re-validates everything through category associativity.
class ColoredOperad {
 public:
  struct Op {
    std::string id;
    std::vector<int> inputs;  // color indices
    int output = 0;
  };

  static ColoredOperad make(
      std::vector<std::string> colors, std::vector<Op> ops,
      const std::vector<std::pair<std::pair<std::string, std::vector<std::string>>, std::string>>&
          composition,
      const std::vector<std::tuple<std::string, std::vector<int>, std::string>>& symmetry);

  int color_count() const { return static_cast<int>(colors_.size()); }
  const std::string& color(int i) const { return colors_[i]; }
  int color_index(const std::string& c) const;
  int op_count() const { return static_cast<int>(ops_.size()); }
  const Op& op(int i) const { return ops_[i]; }
  int op_index(const std::string& id) const;

  /// Operations with the given input profile and output.
  std::vector<int> mul(const std::vector<int>& inputs, int output) const;
  int gamma(int outer, const std::vector<int>& inner) const;
  /// act(op, perm): slot t of the result is slot perm[t] of op (0-based).
  int act(int op, const std::vector<int>& perm) const;
  int identity_op(int color) const { return ident_[color]; }
  int max_arity() const;

 private:
  std::vector<std::string> colors_;
  std::vector<Op> ops_;
  std::map<std::string, int> color_index_;
  std::map<std::string, int> op_index_;
  std::map<std::pair<int, std::vector<int>>, int> gamma_;
  std::map<std::pair<int, std::vector<int>>, int> act_;
  std::vector<int> ident_;

  void validate() const;
};

/// Built-in one-color operads.
ColoredOperad comm_operad(int max_arity);
ColoredOperad ass_operad(int max_arity);
ColoredOperad triv_operad(int max_arity);
/// One color, unary operations {id, p} with p.p = p: has an edge parallel to
/// an inert lift that is not coCartesian (negative control material).
ColoredOperad idempotent_operad();

/// An operad presented over the truncated Fin_*: the category of operators
/// with its projection functor, nerves of both, and the validation
/// certificates (inert coCartesian lifts, Segal decompositions, tuple
/// decompositions) computed within the stated bound.
struct OperadData {
  FinStar fin;
  Category total_cat;
  std::vector<FinStar::PMap> mor_base;  // total morphism -> pointed map
  std::vector<int> obj_arity;           // total object -> n

  std::shared_ptr<NerveSSet> total_nerve;
  std::shared_ptr<NerveSSet> base_nerve;
  SMap proj;
  Quasicat total_cert;
  Dim dim_cap = 3;
  Dim bound = 2;

  struct InertLift {
    int obj;
    FinStar::PMap f;
    int mor;  // chosen coCartesian lift in the total category
  };
  std::vector<InertLift> inert_lifts;
  std::vector<std::vector<int>> decomposition;  // obj -> tuple of <1>-objects
  CheckReport validation;

  const SSetPtr& total() const { return total_nerve->sset(); }
  const SSetPtr& base() const { return base_nerve->sset(); }
  int lift_for(int obj, const FinStar::PMap& f) const;
  /// The base-edge ref of a pointed map.
  SimplexRef base_edge(const FinStar::PMap& f) const;
  /// Whether an edge of the total complex is inert (coCartesian over an
  /// inert pointed map), per the certified bound.
  Answer edge_inert(const SimplexRef& e, Budget& budget) const;
};

/// Builds the category of operators and nerve of a colored operad, runs the
/// full validation within the bound, and records the certificates.
OperadData operad_from_colored(const ColoredOperad& p, int arity_cap, Dim dim_cap, Dim bound,
                               Budget& budget,
                               std::shared_ptr<NerveSSet> shared_base = nullptr);

/// Re-validates existing operad data (used on truncation outputs).
CheckReport validate_operad(OperadData& o, Budget& budget);

/// Strict d-operad predicate per the case split on d.
struct DOperadResult {
  Answer answer = Answer::Inconclusive;
  std::string detail;
};
DOperadResult is_d_operad(const OperadData& o, Dim d, Budget& budget);

/// The d-homotopy operad with its unit map over Fin_*; for d >= 1 the total
/// is re-derived from the bracket truncation of the total complex, for d = 0
/// mapping sets are replaced by their images in Fin_* and isomorphic objects
/// identified, for d = -1 the base itself.
struct TruncatedOperad {
  Dim d = 0;
  OperadData data;
  SMap theta;  // total_O -> total_{h_d O} (domain may be a skeleton for d >= 1)
  // d >= 1 only: the bracket truncation of the total, its projection, and
  // the comparison with the re-derived nerve
  std::shared_ptr<TruncatedSSet> hd_total;
  SMap p_d;          // extraction -> base
  SMap ex_to_nerve;  // extraction -> rebuilt total
};
TruncatedOperad h_d_operad(const OperadData& o, Dim d, Dim out_dim, Budget& budget);

/// Checks that a map of totals over Fin_* preserves inert edges.
Answer preserves_inerts(const OperadData& src, const OperadData& dst, const SMap& f,
                        Budget& budget);

/// The multi-mapping space Mul({X_1..X_n}; Y) as the fiber of the right
/// mapping space at the chosen tuple object over the active map <n> -> <1>.
/// Inputs and output are unary objects of the total category; the tuple
/// object is resolved through the decomposition certificates (canonically
/// least when several qualify).
struct MultiMapSpace {
  int tuple_obj = -1;
  FinStar::PMap active;
  std::shared_ptr<MappingSpace> space;
  const SSetPtr& sset() const { return space->sset(); }
};
MultiMapSpace multi_mapping_space(const OperadData& o, const std::vector<int>& inputs,
                                  int output, Dim cap, Budget& budget);
/// All tuple objects decomposing into the given inputs (for the
/// choice-independence checks).
std::vector<int> tuple_objects(const OperadData& o, const std::vector<int>& inputs);

/// The fiber filter over the active map, reusable for restricted alpha runs.
RefFilter active_fiber_filter(const SMap& proj, const std::shared_ptr<NerveSSet>& base,
                              const SimplexRef& active_edge);

/// Algebra complex: the sub-complex of the relative functor complex over
/// Fin_* spanned by the inert-preserving vertices.
struct AlgComplex {
  Extraction ex;
  std::vector<SMap> vertex_maps;  // the operad maps total_O -> total_U
  SearchStatus status = SearchStatus::Complete;
};
AlgComplex alg_complex(const OperadData& o, const OperadData& u, Dim cap, Budget& budget);

/// Compares Mul_{h_d O}(theta X; theta Y) with h_{d-1} Mul_O(X; Y) through
/// dimension m (via the alpha machinery restricted to the fiber for d >= 1)
/// and checks pi0-surjectivity of the unit.
CheckReport mul_truncation_verify(const OperadData& o, Dim d, const std::vector<int>& inputs,
                                  int output, Dim m, Budget& budget);

}  // namespace dcat
