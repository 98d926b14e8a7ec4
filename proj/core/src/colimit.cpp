#include "dcat/colimit.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace dcat {

namespace {

struct UnionFind {
  std::vector<int> up;
  explicit UnionFind(int n) : up(n) { std::iota(up.begin(), up.end(), 0); }
  int find(int x) {
    while (up[x] != x) x = up[x] = up[up[x]];
    return x;
  }
  void join(int x, int y) { up[find(x)] = find(y); }
};

}  // namespace

SimplexRef degenerate_to(const SSet& x, SimplexId vertex, Dim n) {
  SimplexRef r{{}, vertex};
  for (int i = 0; i < n; ++i) r = x.degenerate(r, i);  // any order normalizes
  return r;
}

SMap constant_map(const SSetPtr& k, const SSetPtr& x, SimplexId vertex) {
  return make_map(k, x, [&](SimplexId id) { return degenerate_to(*x, vertex, id.dim); });
}

Pushout pushout(const Inclusion& f, const SMap& g, Dim cap) {
  DCAT_REQUIRE(f.src()->same_as(*g.src()), "pushout: span sources differ");
  const SSet& A = *f.src();
  const SSet& B = *f.dst();
  const SSet& C = *g.dst();
  // quotients of n-skeletal sets are n-skeletal, so this cap is complete
  Dim full = std::max(B.top_dim(), C.top_dim());
  if (cap < full) cap = full;

  TabulatedFamily fam;
  fam.cap = cap;
  fam.names.resize(cap + 1);
  fam.face.resize(cap + 1);
  fam.deg.resize(cap + 1);
  // per degree: class id of each ref (B side then C side), and class reps
  std::vector<std::vector<int>> cls_of(cap + 1);
  std::vector<std::vector<std::pair<int, SimplexRef>>> reps(cap + 1);

  for (Dim n = 0; n <= cap; ++n) {
    const RefTable& tb = B.refs(n);
    const RefTable& tc = C.refs(n);
    int nb = static_cast<int>(tb.refs.size());
    int nc = static_cast<int>(tc.refs.size());
    UnionFind uf(nb + nc);
    for (const auto& ra : A.refs(n).refs) {
      int ib = tb.index_of(f.map().apply(ra));
      int ic = tc.index_of(g.apply(ra));
      DCAT_REQUIRE(ib >= 0 && ic >= 0, "pushout: span image not interned");
      uf.join(ib, nb + ic);
    }
    // canonical member of each class: minimal (print, side)
    std::vector<int> min_at(nb + nc, -1);
    auto print_of = [&](int i) {
      return i < nb ? B.print(tb.refs[i]) : C.print(tc.refs[i - nb]);
    };
    for (int i = 0; i < nb + nc; ++i) {
      int r = uf.find(i);
      if (min_at[r] < 0) {
        min_at[r] = i;
        continue;
      }
      std::string a = print_of(i), b = print_of(min_at[r]);
      if (a < b || (a == b && i < min_at[r])) min_at[r] = i;
    }
    // name classes; collisions across sides get a side suffix
    std::vector<int> roots;
    for (int i = 0; i < nb + nc; ++i)
      if (uf.find(i) == i) roots.push_back(i);
    std::map<std::string, int> name_count;
    std::vector<std::pair<std::string, int>> named;  // (name, root)
    for (int r : roots) name_count[print_of(min_at[r])]++;
    for (int r : roots) {
      int m = min_at[r];
      std::string nm = print_of(m);
      if (name_count[nm] > 1) nm += (m < nb ? "~b" : "~c");
      named.push_back({nm, r});
    }
    std::sort(named.begin(), named.end());
    for (size_t i = 0; i + 1 < named.size(); ++i)
      DCAT_REQUIRE(named[i].first != named[i + 1].first, "pushout: class name collision");
    std::vector<int> cls_of_root(nb + nc, -1);
    for (int e = 0; e < static_cast<int>(named.size()); ++e) {
      cls_of_root[named[e].second] = e;
      int m = min_at[named[e].second];
      reps[n].push_back(m < nb ? std::make_pair(0, tb.refs[m])
                               : std::make_pair(1, tc.refs[m - nb]));
      fam.names[n].push_back(named[e].first);
    }
    cls_of[n].resize(nb + nc);
    for (int i = 0; i < nb + nc; ++i) cls_of[n][i] = cls_of_root[uf.find(i)];
  }

  auto class_of = [&](Dim n, int side, const SimplexRef& r) {
    int i = side == 0 ? B.refs(n).index_of(r)
                      : static_cast<int>(B.refs(n).refs.size()) + C.refs(n).index_of(r);
    DCAT_REQUIRE(cls_of[n][i] >= 0, "pushout: unmapped ref");
    return cls_of[n][i];
  };

  for (Dim n = 0; n <= cap; ++n) {
    int sz = static_cast<int>(fam.names[n].size());
    fam.face[n].resize(sz);
    fam.deg[n].resize(sz);
    for (int e = 0; e < sz; ++e) {
      const auto& [side, r] = reps[n][e];
      const SSet& s = side == 0 ? B : C;
      if (n >= 1) {
        fam.face[n][e].reserve(n + 1);
        for (int i = 0; i <= n; ++i)
          fam.face[n][e].push_back(class_of(n - 1, side, s.face(r, i)));
      }
      if (n < cap) {
        fam.deg[n][e].reserve(n + 1);
        for (int i = 0; i <= n; ++i)
          fam.deg[n][e].push_back(class_of(n + 1, side, s.degenerate(r, i)));
      }
    }
  }

  Extraction ex = extract(fam);
  Pushout out;
  out.sset = ex.sset;
  out.rep.resize(cap + 1);
  for (Dim n = 0; n <= cap; ++n)
    for (int idx = 0; idx < out.sset->count(n); ++idx)
      out.rep[n].push_back(reps[n][ex.nd_elem[n][idx]]);
  auto leg = [&](const SSet& s, int side) {
    return [&, side](SimplexId id) {
      return ex.elem_ref[id.dim][class_of(id.dim, side, SimplexRef{{}, id})];
    };
  };
  out.leg_b = make_map(f.dst(), out.sset, leg(B, 0));
  out.leg_c = make_map(g.dst(), out.sset, leg(C, 1));
  std::string err;
  DCAT_REQUIRE(out.leg_b.validate(&err) && out.leg_c.validate(&err),
               "pushout legs not simplicial: " + err);
  return out;
}

SMap Pushout::induced(const Pushout& q, const SMap& bmap, const SMap& cmap) const {
  SMap m = make_map(sset, q.sset, [&](SimplexId id) {
    const auto& [side, r] = rep[id.dim][id.idx];
    return side == 0 ? q.leg_b.apply(bmap.apply(r)) : q.leg_c.apply(cmap.apply(r));
  });
  std::string err;
  DCAT_REQUIRE(m.validate(&err), "induced pushout map not simplicial: " + err);
  return m;
}

SMap Pushout::assemble(const SSetPtr& x,
                       const std::function<SimplexRef(const SimplexRef&)>& eval_b,
                       const std::function<SimplexRef(const SimplexRef&)>& eval_c) const {
  SMap m = make_map(sset, x, [&](SimplexId id) {
    const auto& [side, r] = rep[id.dim][id.idx];
    return side == 0 ? eval_b(r) : eval_c(r);
  });
  std::string err;
  DCAT_REQUIRE(m.validate(&err), "assembled pushout map not simplicial: " + err);
  return m;
}

Pushout quotient_to_point(const Inclusion& a_in_b) {
  auto pt = point();
  return pushout(a_in_b, constant_map(a_in_b.src(), pt, SimplexId{0, 0}));
}

RelCylinder rel_cylinder(const Inclusion& a_in_b, const SSetPtr& d, Dim cap) {
  RelCylinder cyl;
  cyl.a = a_in_b.src();
  cyl.b = a_in_b.dst();
  cyl.d = d;
  cyl.incl_ab = a_in_b.map();
  cyl.bxd = Product::make(cyl.b, d, cap);
  cyl.axd = Product::make(cyl.a, d, cap);
  SMap f = Product::induced(cyl.axd, cyl.bxd, a_in_b.map(), SMap::identity(d));
  cyl.po = pushout(Inclusion(std::move(f)), cyl.axd.proj1(), cap);
  return cyl;
}

SMap RelCylinder::end(SimplexId t) const {
  SMap in = bxd.pair(SMap::identity(b), constant_map(b, d, t));
  return SMap::compose(po.leg_b, in);
}

SMap RelCylinder::assemble(
    const SSetPtr& x,
    const std::function<SimplexRef(const SimplexRef&, const SimplexRef&)>& eval,
    const std::function<SimplexRef(const SimplexRef&)>& on_a) const {
  SMap m = make_map(po.sset, x, [&](SimplexId id) {
    const auto& [side, r] = po.rep[id.dim][id.idx];
    if (side == 0) {
      auto [rb, rd] = bxd.coords_of(r);
      return eval(rb, rd);
    }
    return on_a(r);
  });
  std::string err;
  DCAT_REQUIRE(m.validate(&err), "assembled cylinder map not simplicial: " + err);
  return m;
}

Cone cone(const SSetPtr& k) {
  Cone c;
  c.k = k;
  SSetBuilder b;
  b.add(0, "@");  // apex; '@' sorts low and is reserved
  for (Dim n = 0; n <= k->top_dim(); ++n) {
    for (int i = 0; i < k->count(n); ++i) {
      const std::string& nm = k->name(n, i);
      std::vector<SSetBuilder::FaceSpec> fs;
      if (n >= 1)
        for (int j = 0; j <= n; ++j) {
          const SimplexRef& f = k->base_face(SimplexId{n, i}, j);
          fs.push_back({f.degens, k->name(f.base)});
        }
      b.add(n, nm, std::move(fs));
      // the cone simplex: faces 0..n are cones of the faces, face n+1 the base
      std::vector<SSetBuilder::FaceSpec> cf;
      if (n == 0) {
        cf.push_back({{}, "@"});
        cf.push_back({{}, nm});
      } else {
        for (int j = 0; j <= n; ++j) {
          const SimplexRef& f = k->base_face(SimplexId{n, i}, j);
          cf.push_back({f.degens, "c[" + k->name(f.base) + "]"});
        }
        cf.push_back({{}, nm});
      }
      b.add(n + 1, "c[" + nm + "]", std::move(cf));
    }
  }
  c.sset = b.build();
  c.base = make_map(k, c.sset, [&](SimplexId id) {
    return SimplexRef{{}, c.sset->require(k->name(id))};
  });
  c.apex = c.sset->require("@");
  std::string err;
  DCAT_REQUIRE(c.base.validate(&err), "cone base not simplicial: " + err);
  return c;
}

SimplexRef Cone::over(const SimplexRef& r) const {
  SimplexId base = sset->require("c[" + k->name(r.base) + "]");
  return sset->apply_word(r.degens, SimplexRef{{}, base});
}

PointedCone cone_j(const SSetPtr& k, Dim cap) {
  if (k->empty()) throw InputError("J(K) needs K nonempty");
  PointedCone pc;
  pc.kind = PointedCone::J;
  pc.k = k;
  pc.cone = std::make_shared<Cone>(cone(k));
  pc.po = pushout(Inclusion(pc.cone->base), constant_map(k, point(), SimplexId{0, 0}), cap);
  pc.sset = pc.po.sset;
  pc.v0 = pc.po.leg_c.at(SimplexId{0, 0}).base;
  pc.v1 = pc.po.leg_b.apply(SimplexRef{{}, pc.cone->apex}).base;
  return pc;
}

PointedCone cone_sigma(const SSetPtr& k, Dim cap) {
  if (k->empty()) throw InputError("Sigma(K) needs K nonempty");
  PointedCone pc;
  pc.kind = PointedCone::Sigma;
  pc.k = k;
  auto i1 = standard(1);
  auto di1 = boundary(1);
  pc.kxi = std::make_shared<Product>(Product::make(k, i1, cap));
  pc.kxdi = std::make_shared<Product>(Product::make(k, di1, cap));
  SMap ends = make_map(di1, i1, [&](SimplexId id) {
    return SimplexRef{{}, i1->require(di1->name(id))};
  });
  SMap f = Product::induced(*pc.kxdi, *pc.kxi, SMap::identity(k), ends);
  pc.po = pushout(Inclusion(std::move(f)), pc.kxdi->proj2(), cap);
  pc.sset = pc.po.sset;
  pc.v0 = pc.po.leg_c.at(SimplexId{0, di1->require("0").idx}).base;
  pc.v1 = pc.po.leg_c.at(SimplexId{0, di1->require("1").idx}).base;
  return pc;
}

SimplexRef PointedCone::over(const SimplexRef& r) const {
  DCAT_REQUIRE(kind == J, "over: J cones only");
  return po.leg_b.apply(cone->over(r));
}

SimplexRef PointedCone::cyl(const SimplexRef& r, const SimplexRef& t) const {
  DCAT_REQUIRE(kind == Sigma, "cyl: Sigma cones only");
  return po.leg_b.apply(kxi->locate(r, t));
}

SMap pointed_cone_map(const PointedCone& src, const PointedCone& dst, const SMap& f) {
  DCAT_REQUIRE(src.kind == dst.kind, "pointed_cone_map: kinds differ");
  if (src.kind == PointedCone::J) {
    // monos send nondegenerate simplices to nondegenerate ones, so the cone
    // functor acts by renaming
    SMap cf = make_map(src.cone->sset, dst.cone->sset, [&](SimplexId id) -> SimplexRef {
      const std::string& nm = src.cone->sset->name(id);
      if (nm == "@") return SimplexRef{{}, dst.cone->apex};
      if (nm.rfind("c[", 0) == 0) {
        SimplexRef im = f.apply(SimplexRef{{}, src.k->require(nm.substr(2, nm.size() - 3))});
        DCAT_REQUIRE(!im.degenerate(), "pointed_cone_map: inclusion expected");
        return dst.cone->over(im);
      }
      return dst.cone->base.apply(f.apply(SimplexRef{{}, src.k->require(nm)}));
    });
    return src.po.induced(dst.po, cf, SMap::identity(point()));
  }
  SMap bf = Product::induced(*src.kxi, *dst.kxi, f, SMap::identity(src.kxi->b()));
  SMap cf = SMap::identity(src.po.leg_c.src());
  return src.po.induced(dst.po, bf, cf);
}

std::optional<SMap> iso_by_names(const SSetPtr& a, const SSetPtr& b) {
  if (a->top_dim() != b->top_dim()) return std::nullopt;
  for (Dim n = 0; n <= a->top_dim(); ++n)
    if (a->count(n) != b->count(n)) return std::nullopt;
  for (Dim n = 0; n <= a->top_dim(); ++n)
    for (int i = 0; i < a->count(n); ++i)
      if (!b->find(a->name(n, i))) return std::nullopt;
  SMap m = make_map(a, b, [&](SimplexId id) {
    return SimplexRef{{}, b->require(a->name(id))};
  });
  if (!m.validate()) return std::nullopt;
  return m;
}

}  // namespace dcat
