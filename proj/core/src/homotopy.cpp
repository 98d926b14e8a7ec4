#include "dcat/homotopy.hpp"

#include <algorithm>
#include <numeric>

namespace dcat {

namespace {

// the two vertices of the interval complexes, by name
int interval_end(const SSet& d, const SimplexRef& rt) {
  return d.name(rt.base) == "0" ? 0 : 1;
}

}  // namespace

HomotopyChecker::HomotopyChecker(Inclusion a_in_b, Quasicat cert)
    : a_in_b_(std::move(a_in_b)),
      cert_(std::move(cert)),
      cyl_ends_(rel_cylinder(a_in_b_, boundary(1))),
      cyl_full_(rel_cylinder(a_in_b_, standard(1))) {
  DCAT_REQUIRE(cert_.sset != nullptr, "homotopy checker needs a certificate");
  Dim need = cyl_full_.sset()->top_dim();
  if (cert_.qc_bound < need + 1)
    throw CertificationError("target not certified as a quasi-category up to dimension " +
                             std::to_string(need + 1));
  if (cert_.complete_through < need)
    throw CertificationError("target presentation not complete through cylinder dimension");
  // the map of cylinders induced by del Delta^1 -> Delta^1
  auto i1 = cyl_full_.d;
  SMap ends = make_map(cyl_ends_.d, i1, [&](SimplexId id) {
    return SimplexRef{{}, i1->require(cyl_ends_.d->name(id))};
  });
  SMap bmap = Product::induced(cyl_ends_.bxd, cyl_full_.bxd, SMap::identity(cyl_ends_.b), ends);
  ends_incl_ = cyl_ends_.po.induced(cyl_full_.po, bmap, SMap::identity(cyl_ends_.a));
}

SMap HomotopyChecker::join_ends(const SMap& f, const SMap& g) const {
  const SMap& incl = a_in_b_.map();
  return cyl_ends_.assemble(
      f.dst(),
      [&](const SimplexRef& rb, const SimplexRef& rt) {
        return interval_end(*cyl_ends_.d, rt) == 0 ? f.apply(rb) : g.apply(rb);
      },
      [&](const SimplexRef& ra) { return f.apply(incl.apply(ra)); });
}

Answer HomotopyChecker::homotopic(const SMap& f, const SMap& g, Budget& budget, SMap* witness) {
  DCAT_REQUIRE(f.dst()->same_as(*cert_.sset) && g.dst()->same_as(*cert_.sset),
               "homotopic: target mismatch");
  const SMap& incl = a_in_b_.map();
  const SSet& a = *a_in_b_.src();
  for (Dim n = 0; n <= a.top_dim(); ++n)
    for (int i = 0; i < a.count(n); ++i) {
      SimplexId id{n, i};
      if (f.apply(incl.at(id)) != g.apply(incl.at(id)))
        throw InputError("homotopic: maps do not agree on A");
    }
  if (f == g) {
    if (witness) {
      SMap collapse = cyl_full_.assemble(
          b(), [&](const SimplexRef& rb, const SimplexRef&) { return rb; },
          [&](const SimplexRef& ra) { return incl.apply(ra); });
      *witness = SMap::compose(f, collapse);
    }
    return Answer::Yes;
  }
  SMap u = join_ends(f, g);
  ExtensionProblem p = ExtensionProblem::extend(Inclusion(ends_incl_), u);
  MapList r = solve(p, true, budget);
  if (!r.maps.empty()) {
    if (witness) *witness = r.maps.front();
    return Answer::Yes;
  }
  return r.complete() ? Answer::No : Answer::Inconclusive;
}

HClassSet homotopy_classes(const Inclusion& a_in_b, const Inclusion& b_in_c,
                           const Quasicat& cert, Budget& budget,
                           const DCategoryShortcut* shortcut) {
  DCAT_REQUIRE(a_in_b.dst()->same_as(*b_in_c.src()), "homotopy_classes: triple mismatch");
  HClassSet out;
  out.b = a_in_b.dst();
  out.x = cert.sset;
  out.certified_bound = cert.qc_bound;

  MapList full = enumerate_maps(b_in_c.dst(), cert.sset, budget);
  if (!full.complete()) out.status = SearchStatus::BudgetExceeded;

  // members of [B,C;X] = image of the restriction map hom(C,X) -> hom(B,X)
  std::map<Encoded, SMap> members;
  for (const SMap& w : full.maps) {
    SMap restricted = SMap::compose(w, b_in_c.map());
    members.try_emplace(encode(restricted), w);
  }

  if (shortcut) {
    // homotopy rel A is equality here (certified d-category target): a
    // homotopy restricted to any d-cell of B is a homotopy rel its boundary
    DCAT_REQUIRE(out.b->top_dim() <= shortcut->d, "shortcut: B has cells above d");
    for (Dim n = 0; n < shortcut->d; ++n)
      DCAT_REQUIRE(a_in_b.src()->count(n) == out.b->count(n),
                   "shortcut: A must contain the (d-1)-skeleton of B");
    for (const auto& [enc, wit] : members) {
      HClassSet::Cls c;
      c.rep = enc;
      c.rep_map = decode(out.b, out.x, enc);
      c.witness = wit;
      c.members = {enc};
      out.member_class[enc] = static_cast<int>(out.classes.size());
      out.classes.push_back(std::move(c));
    }
    return out;
  }

  HomotopyChecker checker(a_in_b, cert);
  for (const auto& [enc, wit] : members) {
    SMap m = decode(out.b, out.x, enc);
    Encoded on_a = encode(SMap::compose(m, a_in_b.map()));
    int home = -1;
    for (int ci = 0; ci < static_cast<int>(out.classes.size()) && home < 0; ++ci) {
      if (encode(SMap::compose(out.classes[ci].rep_map, a_in_b.map())) != on_a) continue;
      Answer a = checker.homotopic(out.classes[ci].rep_map, m, budget);
      if (a == Answer::Inconclusive) out.status = SearchStatus::BudgetExceeded;
      if (a == Answer::Yes) home = ci;
    }
    if (home < 0) {
      HClassSet::Cls c;
      c.rep = enc;
      c.rep_map = std::move(m);
      c.witness = wit;
      c.members = {enc};
      out.member_class[enc] = static_cast<int>(out.classes.size());
      out.classes.push_back(std::move(c));
    } else {
      out.classes[home].members.push_back(enc);
      out.member_class[enc] = home;
    }
  }
  return out;
}

// -- edge homotopy category ----------------------------------------------------

SMap edge_map(const SSetPtr& x, const SimplexRef& e) {
  DCAT_REQUIRE(e.dim() == 1, "edge_map: not an edge");
  auto d1 = standard(1);
  return make_map(d1, x, [&](SimplexId id) -> SimplexRef {
    if (id.dim == 1) return e;
    return d1->name(id) == "0" ? x->face(e, 1) : x->face(e, 0);
  });
}

SMap vertex_map(const SSetPtr& x, SimplexId v) {
  return make_map(point(), x, [&](SimplexId) { return SimplexRef{{}, v}; });
}

SMap simplex_map(const SSetPtr& x, const SimplexRef& r) {
  auto dn = standard(r.dim());
  return make_map(dn, x, [&](SimplexId id) {
    return x->subsimplex(r, parse_subset_name(dn->name(id)));
  });
}

EdgeHomotopyCategory EdgeHomotopyCategory::make(const Quasicat& cert, Budget& budget) {
  EdgeHomotopyCategory hc;
  hc.x_ = cert.sset;
  const SSet& x = *hc.x_;
  const RefTable& edges = x.refs_indexed(1);
  int ne = static_cast<int>(edges.refs.size());
  hc.class_of_ref_.assign(ne, -1);

  auto d1 = standard(1);
  Subcomplex bd = skeleton(d1, 0);
  HomotopyChecker checker(Inclusion(bd.inclusion), cert);

  for (int i = 0; i < ne; ++i) {
    if (hc.class_of_ref_[i] >= 0) continue;
    const SimplexRef& e = edges.refs[i];
    SMap em = edge_map(hc.x_, e);
    int cls = -1;
    for (int c = 0; c < static_cast<int>(hc.reps_.size()) && cls < 0; ++c) {
      if (x.face(hc.reps_[c], 0) != x.face(e, 0) || x.face(hc.reps_[c], 1) != x.face(e, 1))
        continue;
      Answer a = checker.homotopic(edge_map(hc.x_, hc.reps_[c]), em, budget);
      if (a == Answer::Inconclusive)
        throw BudgetError("edge homotopy category: budget exceeded");
      if (a == Answer::Yes) cls = c;
    }
    if (cls < 0) {
      cls = static_cast<int>(hc.reps_.size());
      hc.reps_.push_back(e);
    }
    hc.class_of_ref_[i] = cls;
  }
  hc.ident_.assign(x.count(0), -1);
  for (int v = 0; v < x.count(0); ++v)
    hc.ident_[v] = hc.class_of(ref_degenerate(SimplexRef{{}, SimplexId{0, v}}, 0));

  // composition via inner-horn fillers: a 2-simplex with d2 = f and d0 = g
  const RefTable& tris = x.refs_indexed(2);
  for (int f = 0; f < static_cast<int>(hc.reps_.size()); ++f)
    for (int g = 0; g < static_cast<int>(hc.reps_.size()); ++g) {
      if (x.face(hc.reps_[f], 0) != x.face(hc.reps_[g], 1)) continue;  // dst f != src g
      int fi = edges.index_of(hc.reps_[f]);
      int gi = edges.index_of(hc.reps_[g]);
      auto it = tris.by_face[2].find(fi);
      int comp = -1;
      if (it != tris.by_face[2].end()) {
        for (int ti : it->second) {
          if (x.refs(1).index_of(x.face(tris.refs[ti], 0)) != gi) continue;
          comp = hc.class_of(x.face(tris.refs[ti], 1));
          break;
        }
      }
      if (comp < 0)
        throw CertificationError("edge composition filler missing (target not certified?)");
      hc.comp_[{g, f}] = comp;
    }
  return hc;
}

int EdgeHomotopyCategory::class_of(const SimplexRef& edge) const {
  int i = x_->refs(1).index_of(edge);
  DCAT_REQUIRE(i >= 0 && class_of_ref_[i] >= 0, "class_of: unknown edge");
  return class_of_ref_[i];
}

int EdgeHomotopyCategory::src(int cls) const { return x_->face(reps_[cls], 1).base.idx; }
int EdgeHomotopyCategory::dst(int cls) const { return x_->face(reps_[cls], 0).base.idx; }

int EdgeHomotopyCategory::compose(int g, int f) const {
  auto it = comp_.find({g, f});
  DCAT_REQUIRE(it != comp_.end(), "compose: classes not composable");
  return it->second;
}

bool EdgeHomotopyCategory::invertible(int cls) const {
  int s = src(cls), d = dst(cls);
  for (int u = 0; u < class_count(); ++u) {
    if (src(u) != d || dst(u) != s) continue;
    if (compose(u, cls) == ident_[s] && compose(cls, u) == ident_[d]) return true;
  }
  return false;
}

}  // namespace dcat
