#pragma once

#include <unordered_map>

#include "dcat/sset.hpp"

namespace dcat {

/// Degree-wise product of two finite simplicial sets through a cap.
/// Nondegenerate n-simplices are the pairs of n-simplices with disjoint
/// degeneracy words (the shuffle description, re-extracted by normal forms).
class Product {
 public:
  static Product make(SSetPtr a, SSetPtr b, Dim cap = -1);  // cap<0: dim a + dim b

  const SSetPtr& sset() const { return sset_; }
  const SSetPtr& a() const { return a_; }
  const SSetPtr& b() const { return b_; }
  Dim cap() const { return cap_; }

  const SMap& proj1() const { return proj1_; }
  const SMap& proj2() const { return proj2_; }

  /// Coordinates of a nondegenerate product simplex.
  const std::pair<SimplexRef, SimplexRef>& coords(SimplexId id) const {
    return coords_[id.dim][id.idx];
  }
  /// Coordinates of an arbitrary product simplex.
  std::pair<SimplexRef, SimplexRef> coords_of(const SimplexRef& r) const;

  /// The product simplex with the given coordinates (normalized by peeling
  /// the common degeneracy letters).
  SimplexRef locate(SimplexRef ra, SimplexRef rb) const;

  /// Pairing <f,g>: K -> A x B of two maps with common source.
  SMap pair(const SMap& f, const SMap& g) const;

  /// Functorial map A x B -> A' x B' induced by f: A -> A', g: B -> B'.
  static SMap induced(const Product& src, const Product& dst, const SMap& f, const SMap& g);

 private:
  SSetPtr a_, b_, sset_;
  Dim cap_ = -1;
  SMap proj1_, proj2_;
  std::vector<std::vector<std::pair<SimplexRef, SimplexRef>>> coords_;
  std::vector<std::unordered_map<std::uint64_t, int>> pair_index_;  // dim -> key -> idx

  std::uint64_t pair_key(const SimplexRef& ra, const SimplexRef& rb) const;
};

}  // namespace dcat
