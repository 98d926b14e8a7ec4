#include "dcat/nerve.hpp"

#include <algorithm>
#include <array>
#include <climits>
#include <functional>

namespace dcat {

int Category::object_index(const std::string& name) const {
  auto it = obj_index_.find(name);
  if (it == obj_index_.end()) throw InputError("unknown object: " + name);
  return it->second;
}

int Category::mor_index(const std::string& id) const {
  auto it = mor_index_.find(id);
  if (it == mor_index_.end()) throw InputError("unknown morphism: " + id);
  return it->second;
}

int Category::compose(int g, int f) const {
  DCAT_REQUIRE(mors_[f].dst == mors_[g].src, "compose: morphisms not composable");
  if (is_identity(f)) return g;
  if (is_identity(g)) return f;
  auto it = comp_.find({g, f});
  DCAT_REQUIRE(it != comp_.end(), "composition table incomplete");
  return it->second;
}

std::vector<int> Category::homset(int src, int dst) const {
  std::vector<int> out;
  for (int m = 0; m < mor_count(); ++m)
    if (mors_[m].src == src && mors_[m].dst == dst) out.push_back(m);
  return out;
}

bool Category::isomorphic_objects(int a, int b) const {
  if (a == b) return true;
  for (int u : homset(a, b))
    for (int v : homset(b, a))
      if (compose(v, u) == ident_[a] && compose(u, v) == ident_[b]) return true;
  return false;
}

void Category::validate() const {
  for (int o = 0; o < object_count(); ++o) {
    int e = ident_[o];
    if (e < 0 || mors_[e].src != o || mors_[e].dst != o)
      throw InputError("object " + objects_[o] + " lacks a valid identity");
  }
  for (int f = 0; f < mor_count(); ++f)
    for (int g = 0; g < mor_count(); ++g) {
      if (mors_[f].dst != mors_[g].src) continue;
      int gf = compose(g, f);
      if (mors_[gf].src != mors_[f].src || mors_[gf].dst != mors_[g].dst)
        throw InputError("composition table inconsistent at " + mors_[g].id + "." + mors_[f].id);
    }
  for (int f = 0; f < mor_count(); ++f)
    for (int g = 0; g < mor_count(); ++g)
      for (int h = 0; h < mor_count(); ++h) {
        if (mors_[f].dst != mors_[g].src || mors_[g].dst != mors_[h].src) continue;
        if (compose(h, compose(g, f)) != compose(compose(h, g), f))
          throw InputError("associativity fails at (" + mors_[h].id + "," + mors_[g].id + "," +
                           mors_[f].id + ")");
      }
}

Category Category::make(std::vector<std::string> objects, std::vector<Mor> morphisms,
                        const std::vector<std::array<std::string, 3>>& compose,
                        const std::map<std::string, std::string>& identities) {
  Category c;
  c.objects_ = std::move(objects);
  for (int i = 0; i < c.object_count(); ++i)
    if (!c.obj_index_.emplace(c.objects_[i], i).second)
      throw InputError("duplicate object: " + c.objects_[i]);
  c.mors_ = std::move(morphisms);
  for (int i = 0; i < c.mor_count(); ++i)
    if (!c.mor_index_.emplace(c.mors_[i].id, i).second)
      throw InputError("duplicate morphism id: " + c.mors_[i].id);
  c.ident_.assign(c.object_count(), -1);
  for (const auto& [obj, mid] : identities) {
    int o = c.object_index(obj);
    c.ident_[o] = c.mor_index(mid);
  }
  for (const auto& entry : compose) {
    int g = c.mor_index(entry[0]), f = c.mor_index(entry[1]), gf = c.mor_index(entry[2]);
    if (c.mors_[f].dst != c.mors_[g].src)
      throw InputError("composition entry for non-composable pair " + entry[0] + "." + entry[1]);
    auto [it, fresh] = c.comp_.emplace(std::make_pair(g, f), gf);
    if (!fresh && it->second != gf) throw InputError("conflicting composition entries");
  }
  for (const auto& [pair, gf] : c.comp_) {
    auto [g, f] = pair;
    if (c.ident_[c.mors_[f].src] == f && gf != g)
      throw InputError("identity law violated at " + c.mors_[g].id);
    if (c.ident_[c.mors_[g].src] == g && gf != f)
      throw InputError("identity law violated at " + c.mors_[f].id);
  }
  c.validate();
  return c;
}

Category Category::from_poset(std::vector<std::string> objects,
                              std::vector<std::pair<std::string, std::string>> le) {
  int n = static_cast<int>(objects.size());
  std::map<std::string, int> idx;
  for (int i = 0; i < n; ++i) idx[objects[i]] = i;
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) rel[i][i] = true;
  for (auto& [a, b] : le) rel[idx.at(a)][idx.at(b)] = true;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (rel[i][k] && rel[k][j]) rel[i][j] = true;
  std::vector<Mor> mors;
  std::vector<std::array<std::string, 3>> comp;
  std::map<std::string, std::string> ids;
  auto mid = [&](int i, int j) { return objects[i] + "<=" + objects[j]; };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (rel[i][j]) mors.push_back({mid(i, j), i, j});
  for (int i = 0; i < n; ++i) ids[objects[i]] = mid(i, i);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (rel[i][j] && rel[j][k])
          comp.push_back(std::array<std::string, 3>{mid(j, k), mid(i, j), mid(i, k)});
  return make(std::move(objects), std::move(mors), comp, ids);
}

Category Category::product(const Category& c, const Category& d) {
  std::vector<std::string> objects;
  std::vector<Mor> mors;
  std::vector<std::array<std::string, 3>> comp;
  std::map<std::string, std::string> ids;
  std::map<std::pair<int, int>, int> onum;
  auto oname = [&](int i, int j) { return "(" + c.object(i) + "," + d.object(j) + ")"; };
  auto mname = [&](int f, int g) { return "(" + c.mor(f).id + "," + d.mor(g).id + ")"; };
  for (int i = 0; i < c.object_count(); ++i)
    for (int j = 0; j < d.object_count(); ++j) {
      onum[{i, j}] = static_cast<int>(objects.size());
      objects.push_back(oname(i, j));
    }
  for (int f = 0; f < c.mor_count(); ++f)
    for (int g = 0; g < d.mor_count(); ++g)
      mors.push_back({mname(f, g), onum.at({c.mor(f).src, d.mor(g).src}),
                      onum.at({c.mor(f).dst, d.mor(g).dst})});
  for (int i = 0; i < c.object_count(); ++i)
    for (int j = 0; j < d.object_count(); ++j)
      ids[oname(i, j)] = mname(c.identity_of(i), d.identity_of(j));
  for (int f = 0; f < c.mor_count(); ++f)
    for (int g = 0; g < d.mor_count(); ++g)
      for (int f2 = 0; f2 < c.mor_count(); ++f2)
        for (int g2 = 0; g2 < d.mor_count(); ++g2) {
          if (c.mor(f).dst != c.mor(f2).src || d.mor(g).dst != d.mor(g2).src) continue;
          comp.push_back(std::array<std::string, 3>{
              mname(f2, g2), mname(f, g), mname(c.compose(f2, f), d.compose(g2, g))});
        }
  return make(std::move(objects), std::move(mors), comp, ids);
}

// -- nerve --------------------------------------------------------------------

namespace {

std::string chain_name(const Category& c, const std::vector<int>& ch) {
  std::string out;
  for (size_t i = 0; i < ch.size(); ++i) {
    if (i) out += '|';
    out += c.mor(ch[i]).id;
  }
  return out;
}

// strips identities, collecting the degeneracy word (highest slot first)
std::pair<DegenWord, std::vector<int>> strip_identities(const Category& c,
                                                        std::vector<int> ch) {
  DegenWord word;
  for (int p = static_cast<int>(ch.size()); p >= 1; --p)
    if (c.is_identity(ch[p - 1])) {
      word.push_back(p - 1);
      ch.erase(ch.begin() + p - 1);
    }
  return {std::move(word), std::move(ch)};
}

}  // namespace

NerveSSet NerveSSet::make(Category cat, Dim cap) {
  NerveSSet nv;
  nv.cat_ = std::move(cat);
  nv.cap_ = cap;
  const Category& c = nv.cat_;

  std::vector<std::vector<std::pair<std::string, std::vector<int>>>> nd(cap + 1);
  for (int o = 0; o < c.object_count(); ++o) nd[0].push_back({c.object(o), {-1 - o}});
  std::vector<std::vector<int>> frontier;
  for (int m = 0; m < c.mor_count(); ++m)
    if (!c.is_identity(m)) frontier.push_back({m});
  for (Dim n = 1; n <= cap && !frontier.empty(); ++n) {
    for (const auto& ch : frontier) nd[n].push_back({chain_name(c, ch), ch});
    std::vector<std::vector<int>> next;
    for (const auto& ch : frontier)
      for (int m = 0; m < c.mor_count(); ++m) {
        if (c.is_identity(m) || c.mor(m).src != c.mor(ch.back()).dst) continue;
        auto ext = ch;
        ext.push_back(m);
        next.push_back(std::move(ext));
      }
    frontier = std::move(next);
  }

  nv.chains_.resize(cap + 1);
  for (Dim n = 0; n <= cap; ++n) {
    std::sort(nd[n].begin(), nd[n].end());
    for (int i = 0; i < static_cast<int>(nd[n].size()); ++i) {
      const auto& ch = nd[n][i].second;
      if (n == 0) {
        nv.vertex_of_obj_[-1 - ch[0]] = i;
        nv.chains_[0].push_back({});
      } else {
        nv.chains_[n].push_back(ch);
        nv.chain_index_[ch] = SimplexId{n, i};
      }
    }
  }
  SSetBuilder b;
  auto face_spec = [&](std::vector<int> chain, int src_obj) -> SSetBuilder::FaceSpec {
    auto [word, base] = strip_identities(c, std::move(chain));
    if (base.empty()) {
      int vi = nv.vertex_of_obj_.at(src_obj);
      return {word, nd[0][vi].first};
    }
    return {word, chain_name(c, base)};
  };
  for (Dim n = 0; n <= cap; ++n) {
    for (const auto& [name, ch] : nd[n]) {
      std::vector<SSetBuilder::FaceSpec> fs;
      if (n >= 1) {
        for (int j = 0; j <= n; ++j) {
          std::vector<int> fc;
          if (j == 0)
            fc.assign(ch.begin() + 1, ch.end());
          else if (j == n)
            fc.assign(ch.begin(), ch.end() - 1);
          else {
            fc = ch;
            fc[j - 1] = c.compose(ch[j], ch[j - 1]);
            fc.erase(fc.begin() + j);
          }
          int src_obj = j == 0 ? c.mor(ch[0]).dst : c.mor(ch[0]).src;
          fs.push_back(face_spec(std::move(fc), src_obj));
        }
      }
      b.add(n, name, std::move(fs));
    }
  }
  nv.sset_ = b.build();
  for (Dim n = 0; n <= cap; ++n)
    for (int i = 0; i < static_cast<int>(nd[n].size()); ++i)
      DCAT_REQUIRE(nv.sset_->name(n, i) == nd[n][i].first, "nerve: name order drifted");
  nv.complete_through_ = frontier.empty() ? INT_MAX : cap;
  return nv;
}

SimplexRef NerveSSet::object_vertex(int obj) const {
  return SimplexRef{{}, SimplexId{0, vertex_of_obj_.at(obj)}};
}

SimplexRef NerveSSet::chain_ref(const std::vector<int>& morphisms) const {
  DCAT_REQUIRE(!morphisms.empty(), "chain_ref: use object_vertex for 0-chains");
  auto [word, base] = strip_identities(cat_, morphisms);
  SimplexRef r = base.empty()
                     ? object_vertex(cat_.mor(morphisms[0]).src)
                     : SimplexRef{{}, chain_index_.at(base)};
  return sset_->apply_word(word, r);
}

SimplexRef NerveSSet::mor_edge(int m) const { return chain_ref({m}); }

std::vector<int> NerveSSet::chain_of(const SimplexRef& r) const {
  std::vector<int> ch = r.base.dim == 0 ? std::vector<int>{} : chains_[r.base.dim][r.base.idx];
  // objects along the chain, to insert identities for the degeneracy letters
  std::vector<int> objs;
  if (ch.empty()) {
    for (const auto& [obj, v] : vertex_of_obj_)
      if (v == r.base.idx) objs.push_back(obj);
    DCAT_REQUIRE(objs.size() == 1, "chain_of: vertex object not found");
  } else {
    objs.push_back(cat_.mor(ch[0]).src);
    for (int m : ch) objs.push_back(cat_.mor(m).dst);
  }
  for (auto it = r.degens.rbegin(); it != r.degens.rend(); ++it) {
    int j = *it;  // insert an identity at slot j+1, repeating vertex j
    ch.insert(ch.begin() + j, cat_.identity_of(objs[j]));
    objs.insert(objs.begin() + j, objs[j]);
  }
  return ch;
}

SMap NerveSSet::induced(const NerveSSet& src, const NerveSSet& dst,
                        const std::vector<int>& on_objects, const std::vector<int>& on_mors) {
  SMap m = make_map(src.sset(), dst.sset(), [&](SimplexId id) {
    if (id.dim == 0) {
      for (const auto& [obj, v] : src.vertex_of_obj_)
        if (v == id.idx) return dst.object_vertex(on_objects[obj]);
      throw InternalError("nerve induced: vertex not found");
    }
    std::vector<int> mapped;
    for (int mm : src.chains_[id.dim][id.idx]) mapped.push_back(on_mors[mm]);
    return dst.chain_ref(mapped);
  });
  std::string err;
  DCAT_REQUIRE(m.validate(&err), "nerve induced map not simplicial: " + err);
  return m;
}

SSetPtr nerve(const Category& cat, Dim cap) { return NerveSSet::make(std::move(cat), cap).sset(); }

}  // namespace dcat
