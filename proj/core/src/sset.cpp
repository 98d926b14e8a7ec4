#include "dcat/sset.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace dcat {

int SSet::total_count() const {
  int t = 0;
  for (const auto& d : names_) t += static_cast<int>(d.size());
  return t;
}

std::optional<SimplexId> SSet::find(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

SimplexId SSet::require(const std::string& name) const {
  auto id = find(name);
  if (!id) throw InputError("unknown simplex id: " + name);
  return *id;
}

SimplexRef SSet::face(const SimplexRef& r, int i) const {
  DCAT_REQUIRE(r.dim() >= 1 && i >= 0 && i <= r.dim(), "face index out of range");
  DegenWord out;
  int fi = i;
  for (size_t t = 0; t < r.degens.size(); ++t) {
    int j = r.degens[t];
    if (fi < j) {
      out.push_back(j - 1);  // d_i s_j = s_{j-1} d_i
    } else if (fi == j || fi == j + 1) {
      // d_i s_j = id; the face operator is absorbed
      out.insert(out.end(), r.degens.begin() + t + 1, r.degens.end());
      return SimplexRef{std::move(out), r.base};
    } else {
      out.push_back(j);  // d_i s_j = s_j d_{i-1}
      fi -= 1;
    }
  }
  return apply_word(out, base_face(r.base, fi));
}

SimplexRef SSet::degenerate(const SimplexRef& r, int i) const {
  DCAT_REQUIRE(i >= 0 && i <= r.dim(), "degeneracy index out of range");
  DegenWord w;
  w.reserve(r.degens.size() + 1);
  size_t t = 0;
  // s_i s_j = s_{j+1} s_i for i <= j: move s_i inward past larger letters
  while (t < r.degens.size() && i <= r.degens[t]) w.push_back(r.degens[t++] + 1);
  w.push_back(i);
  while (t < r.degens.size()) w.push_back(r.degens[t++]);
  return SimplexRef{std::move(w), r.base};
}

SimplexRef SSet::apply_word(const DegenWord& w, SimplexRef r) const {
  for (auto it = w.rbegin(); it != w.rend(); ++it) r = degenerate(r, *it);
  return r;
}

SimplexRef SSet::vertex(const SimplexRef& r, int j) const {
  SimplexRef v = r;
  // drop all vertices above j, then all below
  while (v.dim() > j) v = face(v, v.dim());
  while (v.dim() > 0) v = face(v, 0);
  return v;
}

SimplexRef SSet::subsimplex(SimplexRef r, const std::vector<int>& keep) const {
  size_t k = keep.size();
  for (int i = r.dim(); i >= 0; --i) {
    bool kept = k > 0 && keep[k - 1] == i;
    if (kept) {
      --k;
    } else {
      r = face(r, i);
    }
  }
  DCAT_REQUIRE(k == 0, "subsimplex: vertex subset not sorted/contained");
  return r;
}

const RefTable& SSet::refs(Dim n) const {
  DCAT_REQUIRE(n >= 0, "refs: negative dimension");
  std::lock_guard<std::mutex> lock(cache_mutex_);
  if (static_cast<size_t>(n) >= ref_tables_.size()) ref_tables_.resize(n + 1);
  if (!ref_tables_[n]) {
    auto tab = std::make_unique<RefTable>();
    // all strictly decreasing words over {0..n-1} of length k, applied to
    // nondegenerate (n-k)-simplices
    for (Dim k = 0; static_cast<Dim>(k) <= n; ++k) {
      Dim bd = n - k;
      if (count(bd) == 0) continue;
      std::vector<DegenWord> words;
      DegenWord cur;
      std::function<void(int, int)> gen = [&](int next_max, int remaining) {
        if (remaining == 0) {
          words.push_back(cur);
          return;
        }
        for (int j = next_max; j >= remaining - 1; --j) {
          cur.push_back(j);
          gen(j - 1, remaining - 1);
          cur.pop_back();
        }
      };
      gen(n - 1, k);
      for (int idx = 0; idx < count(bd); ++idx)
        for (const auto& w : words)
          tab->refs.push_back(SimplexRef{w, SimplexId{bd, idx}});
    }
    std::sort(tab->refs.begin(), tab->refs.end(), ref_less);
    tab->by_key.reserve(tab->refs.size() * 2);
    for (int i = 0; i < static_cast<int>(tab->refs.size()); ++i)
      tab->by_key.emplace(RefTable::pack(tab->refs[i]), i);
    ref_tables_[n] = std::move(tab);
  }
  return *ref_tables_[n];
}

const RefTable& SSet::refs_indexed(Dim n) const {
  const RefTable& below = n > 0 ? refs(n - 1) : refs(0);
  const RefTable& tab = refs(n);
  std::lock_guard<std::mutex> lock(cache_mutex_);
  RefTable& t = *ref_tables_[n];
  if (!t.face_index_built && n > 0) {
    t.by_face.resize(n + 1);
    for (int ri = 0; ri < static_cast<int>(t.refs.size()); ++ri) {
      for (int i = 0; i <= n; ++i) {
        int fi = below.index_of(face(t.refs[ri], i));
        DCAT_REQUIRE(fi >= 0, "face not interned");
        t.by_face[i][fi].push_back(ri);
      }
    }
    t.face_index_built = true;
  }
  return tab;
}

std::string SSet::print(const SimplexRef& r) const {
  if (r.degens.empty()) return name(r.base);
  std::ostringstream os;
  for (int j : r.degens) os << 's' << j;
  os << ':' << name(r.base);
  return os.str();
}

bool SSet::validate(std::string* err) const {
  auto fail = [&](const std::string& m) {
    if (err) *err = m;
    return false;
  };
  for (Dim n = 0; n <= top_dim(); ++n) {
    for (int idx = 0; idx < count(n); ++idx) {
      SimplexRef r{{}, SimplexId{n, idx}};
      for (int i = 0; i <= n && n >= 1; ++i) {
        const SimplexRef& f = base_face(SimplexId{n, idx}, i);
        if (f.dim() != n - 1) return fail("face dimension mismatch at " + name(n, idx));
        if (!word_strictly_decreasing(f.degens))
          return fail("non-canonical degeneracy word at " + name(n, idx));
        if (f.base.dim < 0 || f.base.dim > top_dim() || f.base.idx < 0 ||
            f.base.idx >= count(f.base.dim))
          return fail("dangling face base at " + name(n, idx));
      }
      if (n < 2) continue;
      for (int j = 1; j <= n; ++j)
        for (int i = 0; i < j; ++i)
          if (face(face(r, j), i) != face(face(r, i), j - 1))
            return fail("simplicial identity d_" + std::to_string(i) + " d_" +
                        std::to_string(j) + " fails at " + name(n, idx));
    }
  }
  return true;
}

bool SSet::same_as(const SSet& other) const {
  return this == &other || (names_ == other.names_ && faces_ == other.faces_);
}

// -- builder -----------------------------------------------------------------

void SSetBuilder::add(Dim n, const std::string& name, std::vector<FaceSpec> faces) {
  if (n < 0) throw InputError("simplex dimension must be >= 0");
  if (dims_.count(name)) throw InputError("duplicate simplex id: " + name);
  if (n > 0 && static_cast<Dim>(faces.size()) != n + 1)
    throw InputError("simplex " + name + " needs " + std::to_string(n + 1) + " faces");
  dims_[name] = n;
  if (static_cast<size_t>(n) >= names_.size()) names_.resize(n + 1);
  names_[n].push_back(name);
  faces_[name] = std::move(faces);
}

void SSetBuilder::label(const std::string& name, const std::string& text) {
  labels_[name] = text;
}

SSetPtr SSetBuilder::build() const {
  auto out = std::make_shared<SSet>();
  out->names_ = names_;
  // trim empty top dimensions so top_dim() is meaningful
  while (!out->names_.empty() && out->names_.back().empty()) out->names_.pop_back();
  for (auto& lvl : out->names_) std::sort(lvl.begin(), lvl.end());
  for (Dim n = 0; n <= out->top_dim(); ++n)
    for (int i = 0; i < out->count(n); ++i)
      out->index_[out->names_[n][i]] = SimplexId{n, i};
  out->faces_.resize(out->names_.size());
  for (Dim n = 0; n <= out->top_dim(); ++n) {
    out->faces_[n].resize(out->count(n));
    for (int i = 0; i < out->count(n); ++i) {
      const auto& specs = faces_.at(out->names_[n][i]);
      auto& row = out->faces_[n][i];
      for (const auto& sp : specs) {
        auto bit = out->index_.find(sp.base);
        if (bit == out->index_.end())
          throw InputError("face of " + out->names_[n][i] + " references unknown id " + sp.base);
        if (!word_strictly_decreasing(sp.degens))
          throw InputError("face of " + out->names_[n][i] + " has non-canonical word");
        SimplexRef r{sp.degens, bit->second};
        if (r.dim() != n - 1)
          throw InputError("face of " + out->names_[n][i] + " has wrong dimension");
        row.push_back(std::move(r));
      }
    }
  }
  out->labels_ = labels_;
  std::string err;
  if (!out->validate(&err)) throw InputError("invalid simplicial set: " + err);
  return out;
}

// -- maps --------------------------------------------------------------------

bool SMap::validate(std::string* err) const {
  for (Dim n = 0; n <= src_->top_dim(); ++n) {
    for (int idx = 0; idx < src_->count(n); ++idx) {
      SimplexId id{n, idx};
      if (assign_[n][idx].dim() != n) {
        if (err) *err = "image dimension mismatch at " + src_->name(id);
        return false;
      }
      for (int i = 0; i <= n && n >= 1; ++i) {
        SimplexRef lhs = apply(src_->base_face(id, i));
        SimplexRef rhs = dst_->face(at(id), i);
        if (lhs != rhs) {
          if (err)
            *err = "face commutation fails at " + src_->name(id) + " face " + std::to_string(i);
          return false;
        }
      }
    }
  }
  return true;
}

bool SMap::injective_up_to(Dim n) const {
  for (Dim k = 0; k <= n; ++k) {
    const RefTable& tab = src_->refs(k);
    std::unordered_map<std::uint64_t, int> seen;
    for (const auto& r : tab.refs) {
      std::uint64_t key = RefTable::pack(apply(r));
      if (!seen.emplace(key, 1).second) return false;
    }
  }
  return true;
}

bool SMap::is_iso() const {
  if (src_->top_dim() != dst_->top_dim()) return false;
  for (Dim n = 0; n <= src_->top_dim(); ++n) {
    if (src_->count(n) != dst_->count(n)) return false;
    std::vector<bool> hit(dst_->count(n), false);
    for (int i = 0; i < src_->count(n); ++i) {
      const SimplexRef& im = at(SimplexId{n, i});
      if (im.degenerate() || hit[im.base.idx]) return false;
      hit[im.base.idx] = true;
    }
  }
  return true;
}

SMap SMap::identity(const SSetPtr& s) {
  std::vector<std::vector<SimplexRef>> assign(s->top_dim() + 1);
  for (Dim n = 0; n <= s->top_dim(); ++n)
    for (int i = 0; i < s->count(n); ++i)
      assign[n].push_back(SimplexRef{{}, SimplexId{n, i}});
  return SMap(s, s, std::move(assign));
}

SMap SMap::compose(const SMap& g, const SMap& f) {
  DCAT_REQUIRE(f.dst()->same_as(*g.src()), "compose: middle objects differ");
  std::vector<std::vector<SimplexRef>> assign(f.src()->top_dim() + 1);
  for (Dim n = 0; n <= f.src()->top_dim(); ++n)
    for (int i = 0; i < f.src()->count(n); ++i)
      assign[n].push_back(g.apply(f.at(SimplexId{n, i})));
  return SMap(f.src(), g.dst(), std::move(assign));
}

Inclusion::Inclusion(SMap m) : map_(std::move(m)) {
  std::string err;
  DCAT_REQUIRE(map_.validate(&err), "inclusion is not simplicial: " + err);
  if (!map_.injective_up_to(map_.src()->top_dim() + 1))
    throw InputError("map is not dimension-wise injective");
}

SMap make_map(const SSetPtr& src, const SSetPtr& dst,
              const std::function<SimplexRef(SimplexId)>& f) {
  std::vector<std::vector<SimplexRef>> assign(src->top_dim() + 1);
  for (Dim n = 0; n <= src->top_dim(); ++n)
    for (int i = 0; i < src->count(n); ++i) assign[n].push_back(f(SimplexId{n, i}));
  return SMap(src, dst, std::move(assign));
}

Subcomplex subcomplex(const SSetPtr& k, const std::vector<std::string>& keep_names) {
  SSetBuilder b;
  std::map<std::string, SimplexId> chosen;
  for (const auto& nm : keep_names) chosen[nm] = k->require(nm);
  for (const auto& [nm, id] : chosen) {
    std::vector<SSetBuilder::FaceSpec> fs;
    for (int i = 0; i <= id.dim && id.dim >= 1; ++i) {
      const SimplexRef& f = k->base_face(id, i);
      const std::string& bn = k->name(f.base);
      if (!chosen.count(bn))
        throw InputError("subcomplex not closed under faces: " + nm + " needs " + bn);
      fs.push_back({f.degens, bn});
    }
    b.add(id.dim, nm, std::move(fs));
  }
  auto sub = b.build();
  SMap inc = make_map(sub, k, [&](SimplexId id) {
    return SimplexRef{{}, k->require(sub->name(id))};
  });
  return Subcomplex{sub, std::move(inc)};
}

// -- standard complexes ------------------------------------------------------

std::string subset_name(const std::vector<int>& s) {
  bool wide = !s.empty() && s.back() > 9;
  std::string out;
  for (size_t i = 0; i < s.size(); ++i) {
    if (wide && i) out += '_';
    out += std::to_string(s[i]);
  }
  return out;
}

std::vector<int> parse_subset_name(const std::string& s) {
  std::vector<int> out;
  if (s.find('_') != std::string::npos) {
    std::string tok;
    for (char c : s + "_") {
      if (c == '_') {
        out.push_back(std::stoi(tok));
        tok.clear();
      } else {
        tok += c;
      }
    }
    return out;
  }
  // digit-per-vertex names have strictly increasing digits; anything else is
  // a single wide vertex
  bool increasing = s.size() > 1;
  for (size_t i = 0; i + 1 < s.size(); ++i)
    if (s[i] >= s[i + 1]) increasing = false;
  if (increasing) {
    for (char c : s) out.push_back(c - '0');
  } else {
    out.push_back(std::stoi(s));
  }
  return out;
}

namespace {

std::vector<std::vector<int>> subsets_of_size(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> gen = [&](int from) {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int v = from; v <= n; ++v) {
      cur.push_back(v);
      gen(v + 1);
      cur.pop_back();
    }
  };
  gen(0);
  return out;
}

void add_subset_simplex(SSetBuilder& b, const std::vector<int>& s) {
  std::vector<SSetBuilder::FaceSpec> fs;
  if (s.size() > 1) {
    for (size_t i = 0; i < s.size(); ++i) {
      std::vector<int> f = s;
      f.erase(f.begin() + i);
      fs.push_back({{}, subset_name(f)});
    }
  }
  b.add(static_cast<Dim>(s.size()) - 1, subset_name(s), std::move(fs));
}

}  // namespace

SSetPtr standard(Dim n) {
  if (n < 0) throw InputError("standard simplex dimension must be >= 0");
  static std::mutex mu;
  static std::map<Dim, SSetPtr> memo;
  std::lock_guard<std::mutex> lock(mu);
  auto it = memo.find(n);
  if (it != memo.end()) return it->second;
  SSetBuilder b;
  for (int k = 1; k <= n + 1; ++k)
    for (const auto& s : subsets_of_size(n, k)) add_subset_simplex(b, s);
  return memo[n] = b.build();
}

SSetPtr boundary(Dim n) {
  if (n < 0) throw InputError("boundary dimension must be >= 0");
  SSetBuilder b;
  for (int k = 1; k <= n; ++k)
    for (const auto& s : subsets_of_size(n, k)) add_subset_simplex(b, s);
  return b.build();
}

SSetPtr horn(Dim n, int i) {
  if (n < 1 || i < 0 || i > n) throw InputError("horn indices require n >= 1, 0 <= i <= n");
  SSetBuilder b;
  for (int k = 1; k <= n; ++k)
    for (const auto& s : subsets_of_size(n, k)) {
      // keep S iff S is contained in some face other than the i-th one,
      // i.e. the complement of S is not {i} and not empty
      if (k == n && !std::count(s.begin(), s.end(), i)) continue;
      add_subset_simplex(b, s);
    }
  return b.build();
}

SSetPtr empty_sset() {
  static SSetPtr e = SSetBuilder{}.build();
  return e;
}

SSetPtr point() {
  static SSetPtr p = standard(0);
  return p;
}

SMap standard_face_inclusion(Dim n, const std::vector<int>& s) {
  return standard_map(static_cast<Dim>(s.size()) - 1, n, s);
}

SMap standard_map(Dim m, Dim n, const std::vector<int>& vertex_image) {
  DCAT_REQUIRE(static_cast<Dim>(vertex_image.size()) == m + 1, "vertex map arity mismatch");
  auto src = standard(m);
  auto dst = standard(n);
  return make_map(src, dst, [&](SimplexId id) {
    // image chain with repeats -> normal form over the image subset
    std::vector<int> s = parse_subset_name(src->name(id));
    DegenWord word;
    std::vector<int> img;
    for (int v : s) img.push_back(vertex_image[v]);
    // strip repeats right-to-left: chain position p repeating p-1 is s_{p-1}
    std::vector<int> dedup = img;
    for (int p = static_cast<int>(dedup.size()) - 1; p >= 1; --p)
      if (dedup[p] == dedup[p - 1]) {
        word.push_back(p - 1);
        dedup.erase(dedup.begin() + p);
      }
    // word was collected from high to low position; it is strictly decreasing
    return dst->apply_word(word, SimplexRef{{}, dst->require(subset_name(dedup))});
  });
}

Subcomplex skeleton(const SSetPtr& k, Dim d) {
  if (d < -1) throw InputError("skeleton level must be >= -1");
  std::vector<std::string> keep;
  for (Dim n = 0; n <= std::min(d, k->top_dim()); ++n)
    for (int i = 0; i < k->count(n); ++i) keep.push_back(k->name(n, i));
  if (keep.empty()) {
    auto e = empty_sset();
    return Subcomplex{e, SMap(e, k, {})};
  }
  return subcomplex(k, keep);
}

}  // namespace dcat
