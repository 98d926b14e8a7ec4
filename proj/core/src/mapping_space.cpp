#include <algorithm>

#include "dcat/truncation.hpp"

namespace dcat {

namespace {

// monotone chain with repeats -> (word, strictly increasing chain)
std::pair<DegenWord, std::vector<int>> dedupe_chain(std::vector<int> chain) {
  DegenWord word;
  for (int p = static_cast<int>(chain.size()) - 1; p >= 1; --p)
    if (chain[p] == chain[p - 1]) {
      word.push_back(p - 1);
      chain.erase(chain.begin() + p);
    }
  return {std::move(word), std::move(chain)};
}

// value of an m-simplex z of C on an arbitrary simplex of Delta^m
SimplexRef eval_simplex(const SSet& c, const SimplexRef& z, const SSet& dm,
                        const SimplexRef& t) {
  SimplexRef sub = c.subsimplex(z, parse_subset_name(dm.name(t.base)));
  return c.apply_word(t.degens, sub);
}

}  // namespace

// -- right mapping space ---------------------------------------------------------

MappingSpace MappingSpace::right(SSetPtr c, SimplexId x, SimplexId y, Dim cap, Budget& budget,
                                 RefFilter filter) {
  (void)budget;
  MappingSpace ms;
  ms.kind_ = Right;
  ms.ambient_ = std::move(c);
  ms.x_ = x;
  ms.y_ = y;
  ms.cap_ = cap;
  const SSet& amb = *ms.ambient_;
  DCAT_REQUIRE(x.dim == 0 && y.dim == 0, "mapping space endpoints must be vertices");

  ms.elems_.resize(cap + 1);
  ms.elem_index_.resize(cap + 1);
  TabulatedFamily fam;
  fam.cap = cap;
  fam.names.resize(cap + 1);
  fam.face.resize(cap + 1);
  fam.deg.resize(cap + 1);
  for (Dim n = 0; n <= cap; ++n) {
    SimplexRef front = degenerate_to(amb, x, n);
    std::vector<int> keep;
    for (const auto& z : amb.refs(n + 1).refs) {
      std::vector<int> fr(n + 1);
      for (int i = 0; i <= n; ++i) fr[i] = i;
      if (amb.subsimplex(z, fr) != front) continue;
      if (amb.vertex(z, n + 1) != SimplexRef{{}, y}) continue;
      if (filter && !filter(n, z)) continue;
      ms.elem_index_[n].emplace(RefTable::pack(z), static_cast<int>(ms.elems_[n].size()));
      ms.elems_[n].push_back(z);
      fam.names[n].push_back(amb.print(z));
    }
  }
  for (Dim n = 0; n <= cap; ++n) {
    int sz = static_cast<int>(ms.elems_[n].size());
    fam.face[n].resize(sz);
    fam.deg[n].resize(sz);
    for (int e = 0; e < sz; ++e) {
      const SimplexRef& z = ms.elems_[n][e];
      if (n >= 1)
        for (int i = 0; i <= n; ++i) {
          int fe = ms.element_of_ambient(n - 1, amb.face(z, i));
          DCAT_REQUIRE(fe >= 0, "hom^R: face left the pinned family");
          fam.face[n][e].push_back(fe);
        }
      if (n < cap)
        for (int i = 0; i <= n; ++i) {
          int de = ms.element_of_ambient(n + 1, amb.degenerate(z, i));
          DCAT_REQUIRE(de >= 0, "hom^R: degeneracy left the pinned family");
          fam.deg[n][e].push_back(de);
        }
    }
  }
  ms.ex_ = extract(fam);
  return ms;
}

int MappingSpace::element_of_ambient(Dim n, const SimplexRef& z) const {
  auto it = elem_index_[n].find(RefTable::pack(z));
  return it == elem_index_[n].end() ? -1 : it->second;
}

SimplexRef MappingSpace::ms_ref(Dim n, const SimplexRef& z) const {
  int e = element_of_ambient(n, z);
  DCAT_REQUIRE(e >= 0, "ms_ref: ambient simplex not in the mapping space");
  return ex_.elem_ref[n][e];
}

SimplexRef MappingSpace::ambient_of_ref(const SimplexRef& r) const {
  const SimplexRef& base = elems_[r.base.dim][ex_.element_of(r)];
  return ambient_->apply_word(r.degens, base);
}

// -- middle mapping space --------------------------------------------------------

MappingSpace MappingSpace::middle(SSetPtr c, SimplexId x, SimplexId y, Dim cap,
                                  Budget& budget) {
  MappingSpace ms;
  ms.kind_ = Middle;
  ms.ambient_ = std::move(c);
  ms.x_ = x;
  ms.y_ = y;
  ms.cap_ = cap;
  const SSetPtr& amb = ms.ambient_;
  auto i1 = standard(1);

  ms.elem_maps_.resize(cap + 1);
  ms.elem_map_index_.resize(cap + 1);
  ms.prods_.resize(cap + 1);
  for (Dim n = 0; n <= cap; ++n) {
    ms.prods_[n] = std::make_shared<Product>(Product::make(standard(n), i1));
    const Product& p = *ms.prods_[n];
    ExtensionProblem prob;
    prob.big = p.sset();
    prob.target = amb;
    for (Dim k = 0; k <= p.sset()->top_dim(); ++k)
      for (int idx = 0; idx < p.sset()->count(k); ++idx) {
        const auto& [ra, rb] = p.coords(SimplexId{k, idx});
        if (rb.base.dim != 0) continue;  // not over an end vertex
        SimplexId end = rb.base;
        bool is_zero = p.b()->name(end) == "0";
        prob.pinned.push_back(
            {SimplexId{k, idx}, degenerate_to(*amb, is_zero ? ms.x_ : ms.y_, k)});
      }
    MapList sols = solve(prob, false, budget);
    if (!sols.complete()) throw BudgetError("hom^M enumeration exceeded the budget");
    for (const SMap& m : sols.maps) {
      ms.elem_map_index_[n].emplace(encode(m), static_cast<int>(ms.elem_maps_[n].size()));
      ms.elem_maps_[n].push_back(m);
    }
  }
  // operators act by precomposition with (monotone map) x id
  TabulatedFamily fam;
  fam.cap = cap;
  fam.names.resize(cap + 1);
  fam.face.resize(cap + 1);
  fam.deg.resize(cap + 1);
  ms.mid_face_.resize(cap + 1);
  ms.mid_deg_.resize(cap + 1);
  auto op_elem = [&](Dim from, Dim to, const std::vector<int>& verts, int e) {
    SMap op = Product::induced(*ms.prods_[to], *ms.prods_[from],
                               standard_map(to, from, verts), SMap::identity(i1));
    return ms.element_of_map(to, encode(SMap::compose(ms.elem_maps_[from][e], op)));
  };
  for (Dim n = 0; n <= cap; ++n) {
    int sz = static_cast<int>(ms.elem_maps_[n].size());
    char buf[32];
    for (int e = 0; e < sz; ++e) {
      std::snprintf(buf, sizeof buf, "m%d_%05d", n, e);
      fam.names[n].push_back(buf);
    }
    fam.face[n].resize(sz);
    fam.deg[n].resize(sz);
    for (int e = 0; e < sz; ++e) {
      if (n >= 1)
        for (int i = 0; i <= n; ++i) {
          std::vector<int> verts;
          for (int v = 0; v <= n - 1; ++v) verts.push_back(v < i ? v : v + 1);
          int fe = op_elem(n, n - 1, verts, e);
          DCAT_REQUIRE(fe >= 0, "hom^M: face not enumerated");
          fam.face[n][e].push_back(fe);
        }
      if (n < cap)
        for (int i = 0; i <= n; ++i) {
          std::vector<int> verts;
          for (int v = 0; v <= n + 1; ++v) verts.push_back(v <= i ? v : v - 1);
          int de = op_elem(n, n + 1, verts, e);
          DCAT_REQUIRE(de >= 0, "hom^M: degeneracy not enumerated");
          fam.deg[n][e].push_back(de);
        }
    }
    ms.mid_face_[n] = fam.face[n];
    ms.mid_deg_[n] = fam.deg[n];
  }
  ms.ex_ = extract(fam);
  return ms;
}

int MappingSpace::element_of_map(Dim n, const Encoded& e) const {
  auto it = elem_map_index_[n].find(e);
  return it == elem_map_index_[n].end() ? -1 : it->second;
}

int MappingSpace::elem_of_ref_middle(const SimplexRef& r) const {
  int e = ex_.element_of(SimplexRef{{}, r.base});
  Dim n = r.base.dim;
  for (auto it = r.degens.rbegin(); it != r.degens.rend(); ++it) {
    e = mid_deg_[n][e][*it];
    ++n;
  }
  return e;
}

// -- phi ---------------------------------------------------------------------------

SMap phi_map(const MappingSpace& right, const MappingSpace& middle) {
  DCAT_REQUIRE(right.kind() == MappingSpace::Right && middle.kind() == MappingSpace::Middle,
               "phi: kind mismatch");
  DCAT_REQUIRE(right.ambient()->same_as(*middle.ambient()), "phi: ambient mismatch");
  const SSet& amb = *right.ambient();
  SMap m = make_map(right.sset(), middle.sset(), [&](SimplexId id) {
    Dim n = id.dim;
    const SimplexRef& z = right.ambient_of(n, right.extraction().element_of(SimplexRef{{}, id}));
    const Product& p = middle.cylinder(n);
    auto dn1 = standard(n + 1);
    // collapse (i,0) -> i, (i,1) -> n+1, then evaluate z
    SMap f = make_map(p.sset(), right.ambient(), [&](SimplexId w) {
      const auto& [ra, rb] = p.coords(w);
      std::vector<int> chain;
      for (int j = 0; j <= w.dim; ++j) {
        int av = parse_subset_name(p.a()->name(p.a()->vertex(ra, j).base))[0];
        int bv = parse_subset_name(p.b()->name(p.b()->vertex(rb, j).base))[0];
        chain.push_back(bv == 0 ? av : n + 1);
      }
      auto [word, verts] = dedupe_chain(std::move(chain));
      SimplexRef t = dn1->apply_word(word, SimplexRef{{}, dn1->require(subset_name(verts))});
      return eval_simplex(amb, z, *dn1, t);
    });
    std::string err;
    DCAT_REQUIRE(f.validate(&err), "phi: collapsed map not simplicial: " + err);
    int e = middle.element_of_map(n, encode(f));
    DCAT_REQUIRE(e >= 0, "phi: image not a middle element");
    return middle.extraction().elem_ref[n][e];
  });
  std::string err;
  DCAT_REQUIRE(m.validate(&err), "phi not simplicial: " + err);
  return m;
}

// -- adjunctions --------------------------------------------------------------------

SMap j_adjoint(const MappingSpace& right, const PointedCone& jk, const SMap& f) {
  DCAT_REQUIRE(jk.kind == PointedCone::J, "j_adjoint: J cone expected");
  DCAT_REQUIRE(f.src()->same_as(*jk.k) && f.dst()->same_as(*right.sset()),
               "j_adjoint: map shape mismatch");
  const SSetPtr& amb = right.ambient();
  SMap m = jk.po.assemble(
      amb,
      [&](const SimplexRef& r) -> SimplexRef {
        // B side: a simplex of the cone CK
        const std::string& nm = jk.cone->sset->name(r.base);
        SimplexRef out;
        if (nm == "@") {
          out = SimplexRef{{}, right.y()};
        } else if (nm.rfind("c[", 0) == 0) {
          SimplexId kappa = jk.k->require(nm.substr(2, nm.size() - 3));
          SimplexRef v = f.at(kappa);
          out = right.ambient_of_ref(v);
        } else {
          out = degenerate_to(*amb, right.x(), r.base.dim);
        }
        return amb->apply_word(r.degens, out);
      },
      [&](const SimplexRef& r) { return degenerate_to(*amb, right.x(), r.dim()); });
  return m;
}

SMap sigma_adjoint(const MappingSpace& middle, const PointedCone& sk, const SMap& f) {
  DCAT_REQUIRE(sk.kind == PointedCone::Sigma, "sigma_adjoint: Sigma cone expected");
  DCAT_REQUIRE(f.src()->same_as(*sk.k) && f.dst()->same_as(*middle.sset()),
               "sigma_adjoint: map shape mismatch");
  const SSetPtr& amb = middle.ambient();
  SMap m = sk.po.assemble(
      amb,
      [&](const SimplexRef& r) -> SimplexRef {
        // B side: a simplex of K x Delta^1
        auto [rk, rt] = sk.kxi->coords_of(r);
        SimplexId kappa = rk.base;
        int e = middle.elem_of_ref_middle(f.at(kappa));
        const SMap& fk = middle.cylinder_map(kappa.dim, e);
        auto dk = standard(kappa.dim);
        SimplexRef top{{}, dk->require(subset_name([&] {
          std::vector<int> all;
          for (int v = 0; v <= kappa.dim; ++v) all.push_back(v);
          return all;
        }()))};
        SimplexRef w = middle.cylinder(kappa.dim).locate(dk->apply_word(rk.degens, top), rt);
        return fk.apply(w);
      },
      [&](const SimplexRef& r) -> SimplexRef {
        int end = sk.po.leg_c.src()->name(r.base) == "0" ? 0 : 1;
        return degenerate_to(*amb, end == 0 ? middle.x() : middle.y(), r.dim());
      });
  return m;
}

// -- fun complex ----------------------------------------------------------------------

FunComplex fun_complex(const SSetPtr& a, const SSetPtr& b, Dim cap, Budget& budget) {
  FunComplex fc;
  fc.a = a;
  fc.b = b;
  fc.cap = cap;
  fc.elem_maps.resize(cap + 1);
  fc.prods.resize(cap + 1);
  std::vector<std::map<Encoded, int>> index(cap + 1);
  for (Dim n = 0; n <= cap; ++n) {
    fc.prods[n] = std::make_shared<Product>(Product::make(a, standard(n)));
    MapList sols = enumerate_maps(fc.prods[n]->sset(), b, budget);
    if (!sols.complete()) fc.status = SearchStatus::BudgetExceeded;
    for (const SMap& m : sols.maps) {
      index[n].emplace(encode(m), static_cast<int>(fc.elem_maps[n].size()));
      fc.elem_maps[n].push_back(m);
    }
  }
  TabulatedFamily fam;
  fam.cap = cap;
  fam.names.resize(cap + 1);
  fam.face.resize(cap + 1);
  fam.deg.resize(cap + 1);
  auto op_elem = [&](Dim from, Dim to, const std::vector<int>& verts, int e) {
    SMap op = Product::induced(*fc.prods[to], *fc.prods[from], SMap::identity(a),
                               standard_map(to, from, verts));
    auto it = index[to].find(encode(SMap::compose(fc.elem_maps[from][e], op)));
    return it == index[to].end() ? -1 : it->second;
  };
  for (Dim n = 0; n <= cap; ++n) {
    int sz = static_cast<int>(fc.elem_maps[n].size());
    char buf[32];
    for (int e = 0; e < sz; ++e) {
      std::snprintf(buf, sizeof buf, "f%d_%05d", n, e);
      fam.names[n].push_back(buf);
    }
    fam.face[n].resize(sz);
    fam.deg[n].resize(sz);
    for (int e = 0; e < sz; ++e) {
      if (n >= 1)
        for (int i = 0; i <= n; ++i) {
          std::vector<int> verts;
          for (int v = 0; v <= n - 1; ++v) verts.push_back(v < i ? v : v + 1);
          int fe = op_elem(n, n - 1, verts, e);
          DCAT_REQUIRE(fe >= 0, "fun: face not enumerated");
          fam.face[n][e].push_back(fe);
        }
      if (n < cap)
        for (int i = 0; i <= n; ++i) {
          std::vector<int> verts;
          for (int v = 0; v <= n + 1; ++v) verts.push_back(v <= i ? v : v - 1);
          int de = op_elem(n, n + 1, verts, e);
          DCAT_REQUIRE(de >= 0, "fun: degeneracy not enumerated");
          fam.deg[n][e].push_back(de);
        }
    }
  }
  fc.ex = extract(fam);
  return fc;
}

}  // namespace dcat
