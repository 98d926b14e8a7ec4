#pragma once

#include <map>
#include <string>
#include <vector>

#include "dcat/sset.hpp"

namespace dcat {

/// A finite category presentation: objects, morphisms with a total
/// composition table, and designated identities. Validated on construction
/// (identity laws, totality on composable pairs, associativity).
class Category {
 public:
  struct Mor {
    std::string id;
    int src = 0, dst = 0;
  };

  static Category make(std::vector<std::string> objects, std::vector<Mor> morphisms,
                       const std::vector<std::array<std::string, 3>>& compose,
                       const std::map<std::string, std::string>& identities);
  /// Thin category of a preorder given by generating pairs (reflexive and
  /// transitive closure is taken).
  static Category from_poset(std::vector<std::string> objects,
                             std::vector<std::pair<std::string, std::string>> le);
  static Category product(const Category& c, const Category& d);

  int object_count() const { return static_cast<int>(objects_.size()); }
  const std::string& object(int i) const { return objects_[i]; }
  int object_index(const std::string& name) const;

  int mor_count() const { return static_cast<int>(mors_.size()); }
  const Mor& mor(int i) const { return mors_[i]; }
  int mor_index(const std::string& id) const;
  int identity_of(int obj) const { return ident_[obj]; }
  bool is_identity(int m) const { return ident_[mors_[m].src] == m; }

  /// g after f; both must be composable.
  int compose(int g, int f) const;
  std::vector<int> homset(int src, int dst) const;

  bool isomorphic_objects(int a, int b) const;

 private:
  std::vector<std::string> objects_;
  std::vector<Mor> mors_;
  std::vector<int> ident_;                    // object -> identity morphism
  std::map<std::pair<int, int>, int> comp_;   // (g, f) -> g.f
  std::map<std::string, int> obj_index_;
  std::map<std::string, int> mor_index_;

  void validate() const;
};

/// Nerve of a category through a dimension cap. Nondegenerate n-simplices
/// are chains of n composable non-identity morphisms; the simplex names join
/// the morphism ids with '|'.
class NerveSSet {
 public:
  static NerveSSet make(Category cat, Dim cap);

  const SSetPtr& sset() const { return sset_; }
  const Category& category() const { return cat_; }
  Dim cap() const { return cap_; }
  /// Dimension through which the presentation is complete; INT_MAX when the
  /// category has no composable chains beyond the cap at all.
  Dim complete_through() const { return complete_through_; }
  int vertex_of_object(int obj) const { return vertex_of_obj_.at(obj); }

  /// Simplex of an arbitrary composable chain (identities allowed); the
  /// chain length must not exceed the cap.
  SimplexRef chain_ref(const std::vector<int>& morphisms) const;
  SimplexRef object_vertex(int obj) const;
  SimplexRef mor_edge(int m) const;
  /// The composable chain of an arbitrary simplex.
  std::vector<int> chain_of(const SimplexRef& r) const;

  /// Nerve functoriality for a functor given by object/morphism assignments.
  static SMap induced(const NerveSSet& src, const NerveSSet& dst,
                      const std::vector<int>& on_objects, const std::vector<int>& on_mors);

 private:
  Category cat_;
  SSetPtr sset_;
  Dim cap_ = 0;
  Dim complete_through_ = 0;
  std::vector<std::vector<std::vector<int>>> chains_;  // dim -> idx -> chain
  std::map<std::vector<int>, SimplexId> chain_index_;
  std::map<int, int> vertex_of_obj_;
};

SSetPtr nerve(const Category& cat, Dim cap);

}  // namespace dcat
