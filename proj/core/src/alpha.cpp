#include <algorithm>
#include <set>

#include "dcat/truncation.hpp"

namespace dcat {

namespace {

SimplexRef transport(const SimplexRef& r, const SSet& from, const SSet& to) {
  return SimplexRef{r.degens, to.require(from.name(r.base))};
}

std::vector<int> upto(int n) {
  std::vector<int> out(n + 1);
  for (int i = 0; i <= n; ++i) out[i] = i;
  return out;
}

}  // namespace

AlphaData alpha_verify(const Quasicat& cert, SimplexId x, SimplexId y, Dim d, Dim m,
                       Budget& budget, RefFilter filter_c, RefFilter filter_hd,
                       std::shared_ptr<TruncatedSSet> hd_ready) {
  AlphaData out;
  CheckReport& rep = out.report;
  const SSetPtr& c = cert.sset;
  if (d < 0) throw InputError("alpha comparison needs d >= 0");

  out.ms_c = std::make_shared<MappingSpace>(
      MappingSpace::right(c, x, y, m, budget, filter_c));
  SSetPtr msc = out.ms_c->sset();

  if (d == 0) {
    out.hd_low = std::make_shared<LowTruncation>(h_low(cert, 0, budget));
    SimplexId tx = out.hd_low->theta.at(x).base;
    SimplexId ty = out.hd_low->theta.at(y).base;
    out.ms_hd = std::make_shared<MappingSpace>(
        MappingSpace::right(out.hd_low->sset, tx, ty, m, budget, filter_hd));
    // h_{-1} of the mapping space
    Quasicat mcert{msc, 0, m, "finite"};
    LowTruncation rhs = h_low(mcert, -1, budget);
    out.rhs = rhs.sset;
    SSetPtr lhs = out.ms_hd->sset();
    bool lhs_empty = lhs->empty();
    bool rhs_empty = rhs.sset->empty();
    rep.add("alpha.defined", lhs_empty == rhs_empty,
            "both sides empty or both nonempty");
    if (lhs_empty != rhs_empty) return out;
    if (!lhs_empty) {
      SMap alpha = constant_map(lhs, rhs.sset, SimplexId{0, 0});
      std::string err;
      rep.add("alpha.simplicial", alpha.validate(&err), err);
      rep.add("alpha.iso", alpha.is_iso(), "LHS is a single point");
      SMap beta = make_map(msc, lhs, [&](SimplexId id) {
        SimplexRef zc = out.ms_c->ambient_of(id.dim, out.ms_c->extraction().element_of(
                                                         SimplexRef{{}, id}));
        SimplexRef im = out.hd_low->theta.apply(zc);
        return out.ms_hd->ms_ref(id.dim, im);
      });
      rep.add("beta.simplicial", beta.validate(&err), err);
      out.alpha = alpha;
      out.beta = beta;
      out.gamma = rhs.theta;
      rep.add("triangle", SMap::compose(alpha, beta) == rhs.theta, "gamma = alpha . beta");
    } else {
      rep.add("alpha.iso", true, "both sides empty");
      rep.add("triangle", true, "empty");
    }
    return out;
  }

  // d >= 1
  out.hd = hd_ready ? std::move(hd_ready)
                    : std::make_shared<TruncatedSSet>(
                          TruncatedSSet::make(cert, d, m + 1, budget));
  const TruncatedSSet& hd = *out.hd;
  DCAT_REQUIRE(hd.out_dim() >= m + 1, "alpha: h_d materialized too shallow");
  const SSetPtr& dom = hd.theta_domain();
  SimplexId tx = hd.theta().at(dom->require(c->name(x))).base;
  SimplexId ty = hd.theta().at(dom->require(c->name(y))).base;
  out.ms_hd = std::make_shared<MappingSpace>(
      MappingSpace::right(hd.sset(), tx, ty, m, budget, filter_hd));

  // h_{d-1} of the mapping space complex
  Quasicat mcert = certify(msc, m + 2, budget);
  mcert.complete_through = m;
  std::shared_ptr<TruncatedSSet> hm;
  std::shared_ptr<LowTruncation> low;
  SMap gamma;
  if (d >= 2) {
    hm = std::make_shared<TruncatedSSet>(TruncatedSSet::make(mcert, d - 1, m, budget));
    out.rhs = hm->sset();
    gamma = hm->theta();
    DCAT_REQUIRE(gamma.src()->same_as(*msc), "gamma domain differs from the mapping space");
  } else {
    low = std::make_shared<LowTruncation>(h_low(mcert, 0, budget));
    out.rhs = low->sset;
    gamma = low->theta;
  }

  // alpha on an n-simplex z of hom^R_{h_d C}: glue the class representatives
  // over sk^d J(Delta^n), read off the J-adjoint on sk^{d-1} Delta^n, then
  // take its class downstairs
  bool alpha_total = true;
  std::string alpha_err;
  SMap alpha = make_map(out.ms_hd->sset(), out.rhs, [&](SimplexId id) -> SimplexRef {
    Dim n = id.dim;
    const SimplexRef& z =
        out.ms_hd->ambient_of(n, out.ms_hd->extraction().element_of(SimplexRef{{}, id}));
    // values of the glued bracket representative on the cone cells
    auto g_val = [&](const std::vector<int>& sigma) -> SimplexRef {
      std::vector<int> verts = sigma;
      verts.push_back(n + 1);
      SimplexRef w = hd.sset()->subsimplex(z, verts);
      Dim s = w.dim();
      int elem = hd.elem_of_ref(w);
      const SMap& rep_map = hd.level(s).classes[elem].rep_map;
      const SSet& bsrc = *rep_map.src();
      return rep_map.at(bsrc.require(subset_name(upto(s))));
    };
    if (d == 1) {
      // target is the nerve of the poset of vertex classes
      const NerveSSet& nv = *low->poset_nerve;
      const Category& pc = nv.category();
      std::vector<int> chain;
      int prev = -1;
      for (int j = 0; j <= n; ++j) {
        SimplexRef vj = g_val({j});
        SimplexRef mv = out.ms_c->ms_ref(0, vj);
        int obj_vertex = low->theta.at(mv.base).base.idx;
        // poset object of that nerve vertex
        int obj = -1;
        for (int o = 0; o < pc.object_count(); ++o)
          if (nv.vertex_of_object(o) == obj_vertex) obj = o;
        DCAT_REQUIRE(obj >= 0, "alpha: poset object not found");
        if (j > 0) chain.push_back(pc.mor_index(pc.object(prev) + "<=" + pc.object(obj)));
        prev = obj;
      }
      return chain.empty() ? nv.object_vertex(prev) : nv.chain_ref(chain);
    }
    // d >= 2: build the J-adjoint on sk^{d-1} Delta^n and look up its class
    const Subcomplex& sk = hd.skel(n, d - 1);
    SMap ghat = make_map(sk.sset, msc, [&](SimplexId rid) {
      std::vector<int> rho = parse_subset_name(sk.sset->name(rid));
      SimplexRef val = g_val(rho);
      return out.ms_c->ms_ref(rid.dim, val);
    });
    std::string err2;
    if (!ghat.validate(&err2)) {
      alpha_total = false;
      alpha_err = err2;
    }
    int cls = hm->level(n).find(encode(ghat));
    DCAT_REQUIRE(cls >= 0, "alpha: J-adjoint is not a bracket member");
    return hm->ref_of_class(n, cls);
  });
  std::string err;
  rep.add("alpha.welldefined", alpha_total, alpha_err);
  rep.add("alpha.simplicial", alpha.validate(&err), err);
  rep.add("alpha.iso", alpha.is_iso(), "dimension-wise bijection");

  SMap beta = make_map(msc, out.ms_hd->sset(), [&](SimplexId id) {
    SimplexRef zc =
        out.ms_c->ambient_of(id.dim, out.ms_c->extraction().element_of(SimplexRef{{}, id}));
    SimplexRef zdom = transport(zc, *c, *dom);
    SimplexRef im = hd.theta().apply(zdom);
    return out.ms_hd->ms_ref(id.dim, im);
  });
  rep.add("beta.simplicial", beta.validate(&err), err);
  out.alpha = alpha;
  out.beta = beta;
  out.gamma = gamma;
  rep.add("triangle", SMap::compose(alpha, beta) == gamma, "gamma = alpha . beta");
  return out;
}

CheckReport universal_property_verify(const Quasicat& cert_c, const Quasicat& cert_d, Dim d,
                                      Dim edge_cap, Budget& budget) {
  CheckReport rep;
  const SSetPtr& target = cert_d.sset;
  SSetPtr lhs;   // h_d C (or low truncation)
  SMap theta;
  std::shared_ptr<TruncatedSSet> hd;
  std::shared_ptr<LowTruncation> low;
  if (d >= 1) {
    hd = std::make_shared<TruncatedSSet>(TruncatedSSet::make(cert_c, d, d + 1, budget));
    lhs = hd->sset();
    theta = hd->theta();
  } else {
    low = std::make_shared<LowTruncation>(h_low(cert_c, d, budget));
    lhs = low->sset;
    theta = low->theta;
  }
  const SSetPtr& dom = theta.src();

  // vertices: maps h_d C -> D vs maps C -> D under precomposition
  MapList from_hd = enumerate_maps(lhs, target, budget);
  MapList from_c = enumerate_maps(dom, target, budget);
  if (!from_hd.complete() || !from_c.complete()) {
    rep.add("fun.vertices", Answer::Inconclusive, "enumeration exceeded the budget");
    return rep;
  }
  std::set<Encoded> rhs_set;
  for (const SMap& u : from_c.maps) rhs_set.insert(encode(u));
  std::set<Encoded> image;
  bool injective = true;
  for (const SMap& u : from_hd.maps)
    if (!image.insert(encode(SMap::compose(u, theta))).second) injective = false;
  bool onto = image.size() == rhs_set.size() &&
              std::includes(rhs_set.begin(), rhs_set.end(), image.begin(), image.end());
  rep.add("fun.vertices.injective", injective);
  rep.add("fun.vertices.bijective", injective && onto,
          std::to_string(from_hd.maps.size()) + " maps on each side");

  if (edge_cap >= 1) {
    Product lhs_cyl = Product::make(lhs, standard(1));
    Product dom_cyl = Product::make(dom, standard(1));
    SMap theta_cyl = Product::induced(dom_cyl, lhs_cyl, theta, SMap::identity(standard(1)));
    MapList e_hd = enumerate_maps(lhs_cyl.sset(), target, budget);
    MapList e_c = enumerate_maps(dom_cyl.sset(), target, budget);
    if (!e_hd.complete() || !e_c.complete()) {
      rep.add("fun.edges", Answer::Inconclusive, "enumeration exceeded the budget");
      return rep;
    }
    std::set<Encoded> rhs_e;
    for (const SMap& u : e_c.maps) rhs_e.insert(encode(u));
    std::set<Encoded> img_e;
    bool inj_e = true;
    for (const SMap& u : e_hd.maps)
      if (!img_e.insert(encode(SMap::compose(u, theta_cyl))).second) inj_e = false;
    bool onto_e = img_e.size() == rhs_e.size() &&
                  std::includes(rhs_e.begin(), rhs_e.end(), img_e.begin(), img_e.end());
    rep.add("fun.edges.bijective", inj_e && onto_e,
            std::to_string(e_hd.maps.size()) + " edges on each side");
  }
  return rep;
}

}  // namespace dcat
