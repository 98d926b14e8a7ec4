#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "dcat/simplex.hpp"

namespace dcat {

class SSet;
using SSetPtr = std::shared_ptr<const SSet>;

/// Interned table of all n-simplices (degenerate ones included) of one SSet,
/// in the canonical ref order, with face-based lookup indexes for the solver.
struct RefTable {
  std::vector<SimplexRef> refs;
  std::unordered_map<std::uint64_t, int> by_key;  // packed (mask, base idx)
  // by_face[i][face table index] -> refs whose i-th face is that ref
  std::vector<std::unordered_map<int, std::vector<int>>> by_face;
  bool face_index_built = false;

  static std::uint64_t pack(const SimplexRef& r) {
    return (r.word_mask() << 24) | static_cast<std::uint64_t>(r.base.idx);
  }
  int index_of(const SimplexRef& r) const {
    auto it = by_key.find(pack(r));
    return it == by_key.end() ? -1 : it->second;
  }
};

/// A finite simplicial set presented by its nondegenerate simplices.
///
/// Per dimension the nondegenerate simplices are named and kept in canonical
/// order (lexicographic by name); the face table stores, for every
/// nondegenerate n-simplex and 0 <= i <= n, a SimplexRef of dimension n-1.
/// Faces and degeneracies of arbitrary simplices are computed through normal
/// forms. Instances are immutable after construction.
class SSet {
 public:
  Dim top_dim() const { return static_cast<Dim>(names_.size()) - 1; }
  bool empty() const { return names_.empty(); }
  int count(Dim n) const {
    return (n < 0 || n > top_dim()) ? 0 : static_cast<int>(names_[n].size());
  }
  int total_count() const;

  const std::string& name(SimplexId id) const { return names_[id.dim][id.idx]; }
  const std::string& name(Dim n, int idx) const { return names_[n][idx]; }
  std::optional<SimplexId> find(const std::string& name) const;
  SimplexId require(const std::string& name) const;
  const std::map<std::string, std::string>& labels() const { return labels_; }

  const SimplexRef& base_face(SimplexId id, int i) const {
    return faces_[id.dim][id.idx][i];
  }

  /// d_i of an arbitrary simplex, computed by pushing the face operator
  /// through the degeneracy word and into the face table if it survives.
  SimplexRef face(const SimplexRef& r, int i) const;

  /// s_i of an arbitrary simplex (normal form maintained).
  SimplexRef degenerate(const SimplexRef& r, int i) const;

  /// Applies a strictly decreasing word (outermost letter first).
  SimplexRef apply_word(const DegenWord& w, SimplexRef r) const;

  /// The j-th vertex of a simplex.
  SimplexRef vertex(const SimplexRef& r, int j) const;

  /// Restriction of r along the inclusion of the sub-simplex spanned by the
  /// sorted vertex subset `keep` (indices into 0..dim).
  SimplexRef subsimplex(SimplexRef r, const std::vector<int>& keep) const;

  /// All n-simplices in canonical order (valid for every n >= 0, also above
  /// top_dim(), where only degenerate simplices exist).
  const RefTable& refs(Dim n) const;
  /// refs(n) with the per-face lookup index materialized.
  const RefTable& refs_indexed(Dim n) const;

  std::string print(const SimplexRef& r) const;

  /// Checks the simplicial identities d_i d_j = d_{j-1} d_i (i < j) on all
  /// nondegenerate simplices, plus face table well-formedness.
  bool validate(std::string* err = nullptr) const;

  bool same_as(const SSet& other) const;  // structural equality

  friend class SSetBuilder;

 private:
  std::vector<std::vector<std::string>> names_;                 // dim -> names
  std::vector<std::vector<std::vector<SimplexRef>>> faces_;     // dim -> idx -> faces
  std::map<std::string, SimplexId> index_;
  std::map<std::string, std::string> labels_;

  mutable std::mutex cache_mutex_;
  mutable std::vector<std::unique_ptr<RefTable>> ref_tables_;
};

/// Incremental construction; faces are given by (word, base name) so that
/// simplices can be registered before the canonical order is fixed.
class SSetBuilder {
 public:
  struct FaceSpec {
    DegenWord degens;
    std::string base;
  };

  void add(Dim n, const std::string& name, std::vector<FaceSpec> faces = {});
  void label(const std::string& name, const std::string& text);
  bool has(const std::string& name) const { return dims_.count(name) > 0; }

  /// Sorts each dimension, resolves face names, validates. Throws InputError
  /// on malformed data.
  SSetPtr build() const;

 private:
  std::map<std::string, Dim> dims_;
  std::vector<std::vector<std::string>> names_;
  std::map<std::string, std::vector<FaceSpec>> faces_;
  std::map<std::string, std::string> labels_;
};

/// A simplicial map, stored on nondegenerate source simplices only; the
/// extension to degenerate simplices is forced by the simplicial identities.
class SMap {
 public:
  SMap() = default;
  SMap(SSetPtr src, SSetPtr dst, std::vector<std::vector<SimplexRef>> assign)
      : src_(std::move(src)), dst_(std::move(dst)), assign_(std::move(assign)) {}

  const SSetPtr& src() const { return src_; }
  const SSetPtr& dst() const { return dst_; }

  const SimplexRef& at(SimplexId id) const { return assign_[id.dim][id.idx]; }
  SimplexRef apply(const SimplexRef& r) const {
    return dst_->apply_word(r.degens, assign_[r.base.dim][r.base.idx]);
  }

  /// Face commutation on every nondegenerate source simplex.
  bool validate(std::string* err = nullptr) const;

  bool injective_up_to(Dim n) const;
  bool is_iso() const;

  friend bool operator==(const SMap& a, const SMap& b) {
    return a.assign_ == b.assign_ && a.src_->same_as(*b.src_) && a.dst_->same_as(*b.dst_);
  }

  static SMap identity(const SSetPtr& s);
  static SMap compose(const SMap& g, const SMap& f);  // g after f

 private:
  SSetPtr src_;
  SSetPtr dst_;
  std::vector<std::vector<SimplexRef>> assign_;  // dim -> idx -> target ref
};

/// A dimension-wise injective SMap; the constructor re-checks injectivity on
/// all simplices up to one dimension above the source top.
class Inclusion {
 public:
  explicit Inclusion(SMap m);
  const SMap& map() const { return map_; }
  const SSetPtr& src() const { return map_.src(); }
  const SSetPtr& dst() const { return map_.dst(); }

 private:
  SMap map_;
};

/// Builds an SMap from a per-simplex assignment function.
SMap make_map(const SSetPtr& src, const SSetPtr& dst,
              const std::function<SimplexRef(SimplexId)>& f);

/// Sub-SSet spanned by the named nondegenerate simplices (must be closed
/// under faces); returns the subcomplex together with its inclusion.
struct Subcomplex {
  SSetPtr sset;
  SMap inclusion;
};
Subcomplex subcomplex(const SSetPtr& k, const std::vector<std::string>& keep_names);

// -- standard complexes -----------------------------------------------------

/// Delta^n; nondegenerate simplices are named by their vertex subsets.
SSetPtr standard(Dim n);
/// boundary of Delta^n.
SSetPtr boundary(Dim n);
/// Horn Lambda^n_i.
SSetPtr horn(Dim n, int i);
SSetPtr empty_sset();
SSetPtr point();  // Delta^0

/// Subcomplex Delta^S of Delta^n (S a sorted vertex subset), as an inclusion.
SMap standard_face_inclusion(Dim n, const std::vector<int>& s);

/// The map Delta^m -> Delta^n induced by a monotone vertex map.
SMap standard_map(Dim m, Dim n, const std::vector<int>& vertex_image);

/// sk^d K together with its inclusion into K (d = -1 gives the empty SSet).
Subcomplex skeleton(const SSetPtr& k, Dim d);

/// Simplex name of a vertex subset of Delta^n ("02", "013", ...).
std::string subset_name(const std::vector<int>& s);
/// Inverse of subset_name.
std::vector<int> parse_subset_name(const std::string& s);

}  // namespace dcat
