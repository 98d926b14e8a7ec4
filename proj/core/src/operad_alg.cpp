#include <algorithm>
#include <set>

#include "dcat/operad.hpp"

namespace dcat {

AlgComplex alg_complex(const OperadData& o, const OperadData& u, Dim cap, Budget& budget) {
  DCAT_REQUIRE(o.base()->same_as(*u.base()), "alg: operads over different bases");
  AlgComplex out;
  std::vector<std::shared_ptr<Product>> prods(cap + 1);
  std::vector<std::vector<SMap>> elems(cap + 1);
  std::vector<std::map<Encoded, int>> index(cap + 1);
  std::vector<SMap> qmaps(cap + 1);
  for (Dim n = 0; n <= cap; ++n) {
    prods[n] = std::make_shared<Product>(Product::make(o.total(), standard(n)));
    qmaps[n] = SMap::compose(o.proj, prods[n]->proj1());
    ExtensionProblem p;
    p.big = prods[n]->sset();
    p.target = u.total();
    p.fiber_p = &u.proj;
    p.fiber_q = &qmaps[n];
    MapList sols = solve(p, false, budget);
    if (!sols.complete()) out.status = SearchStatus::BudgetExceeded;
    for (const SMap& m : sols.maps) {
      index[n].emplace(encode(m), static_cast<int>(elems[n].size()));
      elems[n].push_back(m);
    }
  }
  // vertex goodness: the underlying maps total_O -> total_U must preserve
  // inert edges
  SMap into0 = prods[0]->pair(SMap::identity(o.total()),
                              constant_map(o.total(), standard(0), SimplexId{0, 0}));
  std::vector<bool> good0(elems[0].size(), false);
  for (size_t v = 0; v < elems[0].size(); ++v) {
    SMap f0 = SMap::compose(elems[0][v], into0);
    good0[v] = preserves_inerts(o, u, f0, budget) == Answer::Yes;
    if (good0[v]) out.vertex_maps.push_back(f0);
  }
  // element vertices via precomposition with the vertex inclusions
  auto op_elem = [&](Dim from, Dim to, const std::vector<int>& verts, int e) {
    SMap op = Product::induced(*prods[to], *prods[from], SMap::identity(o.total()),
                               standard_map(to, from, verts));
    auto it = index[to].find(encode(SMap::compose(elems[from][e], op)));
    DCAT_REQUIRE(it != index[to].end(), "alg: operator left the enumerated family");
    return it->second;
  };
  std::vector<std::vector<bool>> good(cap + 1);
  good[0] = good0;
  for (Dim n = 1; n <= cap; ++n) {
    good[n].assign(elems[n].size(), true);
    for (size_t e = 0; e < elems[n].size(); ++e)
      for (int j = 0; j <= n && good[n][e]; ++j)
        good[n][e] = good0[op_elem(n, 0, {j}, static_cast<int>(e))];
  }
  // filtered, reindexed family
  std::vector<std::vector<int>> keep(cap + 1), pos(cap + 1);
  for (Dim n = 0; n <= cap; ++n) {
    pos[n].assign(elems[n].size(), -1);
    for (size_t e = 0; e < elems[n].size(); ++e)
      if (good[n][e]) {
        pos[n][e] = static_cast<int>(keep[n].size());
        keep[n].push_back(static_cast<int>(e));
      }
  }
  TabulatedFamily fam;
  fam.cap = cap;
  fam.names.resize(cap + 1);
  fam.face.resize(cap + 1);
  fam.deg.resize(cap + 1);
  for (Dim n = 0; n <= cap; ++n) {
    char buf[32];
    fam.face[n].resize(keep[n].size());
    fam.deg[n].resize(keep[n].size());
    for (size_t k = 0; k < keep[n].size(); ++k) {
      std::snprintf(buf, sizeof buf, "a%d_%05d", n, static_cast<int>(k));
      fam.names[n].push_back(buf);
      int e = keep[n][k];
      if (n >= 1)
        for (int i = 0; i <= n; ++i) {
          std::vector<int> verts;
          for (int v = 0; v <= n - 1; ++v) verts.push_back(v < i ? v : v + 1);
          int fe = pos[n - 1][op_elem(n, n - 1, verts, e)];
          DCAT_REQUIRE(fe >= 0, "alg: face of a good element is not good");
          fam.face[n][k].push_back(fe);
        }
      if (n < cap)
        for (int i = 0; i <= n; ++i) {
          std::vector<int> verts;
          for (int v = 0; v <= n + 1; ++v) verts.push_back(v <= i ? v : v - 1);
          int de = pos[n + 1][op_elem(n, n + 1, verts, e)];
          DCAT_REQUIRE(de >= 0, "alg: degeneracy of a good element is not good");
          fam.deg[n][k].push_back(de);
        }
    }
  }
  out.ex = extract(fam);
  return out;
}

CheckReport mul_truncation_verify(const OperadData& o, Dim d, const std::vector<int>& inputs,
                                  int output, Dim m, Budget& budget) {
  CheckReport rep;
  MultiMapSpace mo = multi_mapping_space(o, inputs, output, m, budget);
  TruncatedOperad h = h_d_operad(o, d, std::max<Dim>(2, m + 1), budget);

  // theta on objects
  auto theta_obj = [&](int ob) {
    const SSetPtr& dom = h.theta.src();
    SimplexRef v = h.theta.at(dom->require(o.total_cat.object(ob)));
    return h.data.total_cat.object_index(h.data.total()->name(v.base));
  };
  std::vector<int> tin;
  for (int x : inputs) tin.push_back(theta_obj(x));
  MultiMapSpace mh = multi_mapping_space(h.data, tin, theta_obj(output), m, budget);

  if (d >= 1) {
    SimplexRef fedge = o.base_edge(mo.active);
    SimplexId xv = o.total()->require(o.total_cat.object(mo.tuple_obj));
    SimplexId yv = o.total()->require(o.total_cat.object(output));
    AlphaData a = alpha_verify(o.total_cert, xv, yv, d, m, budget,
                               active_fiber_filter(o.proj, o.base_nerve, fedge),
                               active_fiber_filter(h.p_d, o.base_nerve, fedge), h.hd_total);
    for (auto& item : a.report.items) rep.add("mul." + item.id, item.answer, item.detail);
    // the fiber of the bracket truncation agrees with Mul in the re-derived
    // operad
    bool counts = true;
    for (Dim k = 0; k <= m; ++k)
      counts = counts && a.ms_hd->sset()->count(k) == mh.sset()->count(k);
    rep.add("mul.matches-operad", counts && iso_check(a.ms_hd->sset(), mh.sset(), m, budget)
                                                .has_value());
    // pi0-surjectivity of the unit on the multi-mapping space
    auto classes = pi0(a.ms_hd->sset());
    std::vector<int> cls_of(a.ms_hd->sset()->count(0), -1);
    for (size_t c = 0; c < classes.size(); ++c)
      for (int v : classes[c]) cls_of[v] = static_cast<int>(c);
    std::set<int> hit;
    for (int v = 0; v < a.ms_c->sset()->count(0); ++v)
      hit.insert(cls_of[a.beta->at(SimplexId{0, v}).base.idx]);
    rep.add("mul.pi0-surjective", hit.size() == classes.size());
    return rep;
  }

  // d <= 0: compare directly with the low truncation of the fiber
  Quasicat mcert{mo.sset(), 0, m, "finite"};
  LowTruncation rhs = h_low(mcert, d - 1, budget);
  bool counts = true;
  for (Dim k = 0; k <= m; ++k) counts = counts && rhs.sset->count(k) == mh.sset()->count(k);
  rep.add("mul.compare", counts && iso_check(rhs.sset, mh.sset(), m, budget).has_value());
  if (!mh.sset()->empty()) {
    // the unit hits every component
    auto classes = pi0(mh.sset());
    std::vector<int> cls_of(mh.sset()->count(0), -1);
    for (size_t c = 0; c < classes.size(); ++c)
      for (int v : classes[c]) cls_of[v] = static_cast<int>(c);
    std::set<int> hit;
    for (int v = 0; v < mo.sset()->count(0); ++v) {
      const SimplexRef& z = mo.space->ambient_of(0, mo.space->extraction().element_of(
                                                        SimplexRef{{}, SimplexId{0, v}}));
      SimplexRef im = h.theta.apply(z);
      hit.insert(cls_of[mh.space->ms_ref(0, im).base.idx]);
    }
    rep.add("mul.pi0-surjective", hit.size() == classes.size());
  } else {
    rep.add("mul.pi0-surjective", mo.sset()->empty(), "both fibers empty");
  }
  return rep;
}

}  // namespace dcat
