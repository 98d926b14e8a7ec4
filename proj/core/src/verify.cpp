#include "dcat/verify.hpp"

#include <algorithm>
#include <set>

namespace dcat {

namespace {

// the standard corpus: simplices, boundaries and horns through dimension 4
std::vector<std::pair<std::string, SSetPtr>> standard_corpus() {
  std::vector<std::pair<std::string, SSetPtr>> out;
  for (Dim n = 0; n <= 4; ++n) out.push_back({"delta" + std::to_string(n), standard(n)});
  for (Dim n = 1; n <= 4; ++n) out.push_back({"bd" + std::to_string(n), boundary(n)});
  for (Dim n = 1; n <= 4; ++n)
    for (int i = 0; i <= n; ++i)
      out.push_back({"horn" + std::to_string(n) + "_" + std::to_string(i), horn(n, i)});
  return out;
}

bool ez_roundtrip(const SSet& s, Dim up_to) {
  for (Dim n = 0; n <= up_to; ++n)
    for (const auto& r : s.refs(n).refs) {
      if (s.apply_word(r.degens, SimplexRef{{}, r.base}) != r) return false;
      for (int i = 0; i <= n && n >= 1; ++i) {
        // faces of degeneracies satisfy the cancellation identities
        SimplexRef d = s.degenerate(r, std::min(i, n));
        if (s.face(d, std::min(i, n)) != r) return false;
      }
    }
  return true;
}

SMap name_inclusion(const SSetPtr& a, const SSetPtr& b) {
  return make_map(a, b, [&](SimplexId id) {
    return SimplexRef{{}, b->require(a->name(id))};
  });
}

}  // namespace

Report verify_kernel_laws(Budget& budget) {
  Report rep;
  auto corpus = standard_corpus();
  bool ids_ok = true, ez_ok = true;
  std::string bad;
  for (const auto& [name, s] : corpus) {
    std::string err;
    if (!s->validate(&err)) {
      ids_ok = false;
      bad = name + ": " + err;
    }
    if (!ez_roundtrip(*s, s->top_dim() + 2)) {
      ez_ok = false;
      bad = name;
    }
  }
  rep.add("kernel.identities.corpus", ids_ok, bad);
  rep.add("kernel.normal-form.corpus", ez_ok, bad);

  bool prod_ok = true;
  std::string bad_prod;
  for (size_t i = 0; i < corpus.size() && prod_ok; ++i)
    for (size_t j = i; j < corpus.size() && prod_ok; ++j) {
      Product p = Product::make(corpus[i].second, corpus[j].second, 4);
      std::string err;
      if (!p.sset()->validate(&err) || !ez_roundtrip(*p.sset(), 4)) {
        prod_ok = false;
        bad_prod = corpus[i].first + " x " + corpus[j].first + " " + err;
      }
    }
  rep.add("kernel.identities.products", prod_ok, bad_prod, {{"cap", 4}});

  // the quotient constructions used by the mapping-space machinery
  std::vector<std::pair<std::string, SSetPtr>> quotients;
  {
    auto d1 = standard(1);
    Subcomplex ends = skeleton(d1, 0);
    quotients.push_back({"circle", quotient_to_point(Inclusion(ends.inclusion)).sset});
    quotients.push_back({"j.point", cone_j(point()).sset});
    quotients.push_back({"j.interval", cone_j(d1).sset});
    quotients.push_back({"j.ends", cone_j(boundary(1)).sset});
    quotients.push_back({"sigma.point", cone_sigma(point()).sset});
    quotients.push_back({"sigma.interval", cone_sigma(d1).sset});
    quotients.push_back({"cyl.ends.interval",
                         rel_cylinder(Inclusion(ends.inclusion), d1).po.sset});
    auto d2 = standard(2);
    Subcomplex h21 = subcomplex(d2, {"0", "1", "2", "01", "12"});
    quotients.push_back({"cyl.horn.interval",
                         rel_cylinder(Inclusion(h21.inclusion), d1).po.sset});
  }
  bool q_ok = true;
  std::string bad_q;
  for (const auto& [name, s] : quotients) {
    std::string err;
    if (!s->validate(&err) || !ez_roundtrip(*s, s->top_dim() + 2)) {
      q_ok = false;
      bad_q = name + " " + err;
    }
  }
  rep.add("kernel.identities.quotients", q_ok, bad_q);
  (void)budget;
  return rep;
}

Report verify_cylinder_lemma(Budget& budget) {
  Report rep;
  auto d1 = standard(1);
  auto d2 = standard(2);
  struct Pair {
    std::string tag;
    SSetPtr b;
    std::optional<Subcomplex> a;  // nothing = empty A
  };
  std::vector<Pair> pairs;
  pairs.push_back({"ends-in-interval", d1, skeleton(d1, 0)});
  pairs.push_back({"horn-in-triangle", d2, subcomplex(d2, {"0", "1", "2", "01", "12"})});
  pairs.push_back({"empty-in-interval", d1, std::nullopt});
  std::vector<std::pair<std::string, SSetPtr>> ds = {
      {"point", point()}, {"ends", boundary(1)}, {"interval", standard(1)}};

  for (const auto& pr : pairs)
    for (const auto& [dtag, dd] : ds) {
      std::string id = "cylinder." + pr.tag + "." + dtag;
      // left side: Sigma applied to the relative cylinder B x_A D
      Inclusion a_in_b = pr.a ? Inclusion(pr.a->inclusion)
                              : Inclusion(SMap(empty_sset(), pr.b, {}));
      RelCylinder cyl = rel_cylinder(a_in_b, dd);
      const Pushout& P = cyl.po;
      PointedCone sp = cone_sigma(P.sset);

      // right side: Sigma B x_{Sigma A} D, reading Sigma(empty) as the two
      // marked vertices
      PointedCone sb = cone_sigma(pr.b);
      SSetPtr sa_sset;
      SMap sa_incl;
      std::shared_ptr<PointedCone> sa;
      if (pr.a && !pr.a->sset->empty()) {
        sa = std::make_shared<PointedCone>(cone_sigma(pr.a->sset));
        sa_incl = pointed_cone_map(*sa, sb, pr.a->inclusion);
        sa_sset = sa->sset;
      } else {
        Subcomplex two = subcomplex(
            sb.sset, {sb.sset->name(sb.v0), sb.sset->name(sb.v1)});
        sa_sset = two.sset;
        sa_incl = two.inclusion;
      }
      RelCylinder rhs = rel_cylinder(Inclusion(sa_incl), dd);

      // the comparison, assembled from canonical members
      const Product& pxi = *sp.kxi;  // P x Delta^1
      SMap cmp = make_map(sp.sset, rhs.sset(), [&](SimplexId sid) -> SimplexRef {
        const auto& [side, r] = sp.po.rep[sid.dim][sid.idx];
        if (side == 1) {
          // a marked endpoint: v0 and v1 of Sigma B sit inside Sigma A
          const SSet& di = *sp.po.leg_c.src();
          bool is_zero = di.name(r.base) == "0";
          SimplexId vb = is_zero ? sb.v0 : sb.v1;
          SimplexRef va{{}, sa_sset->require(sb.sset->name(vb))};
          if (sa) va = SimplexRef{{}, sa->sset->require(sa->sset->name(
                                          is_zero ? sa->v0 : sa->v1))};
          return rhs.po.leg_c.apply(sa_sset->apply_word(r.degens, va));
        }
        auto [rp, rt] = pxi.coords_of(r);
        const auto& [pside, pr2] = P.rep[rp.base.dim][rp.base.idx];
        if (pside == 0) {
          SimplexRef member = cyl.bxd.sset()->apply_word(rp.degens, pr2);
          auto [rb, rd] = cyl.bxd.coords_of(member);
          SimplexRef sigma_b = sb.po.leg_b.apply(sb.kxi->locate(rb, rt));
          return rhs.po.leg_b.apply(rhs.bxd.locate(sigma_b, rd));
        }
        // the A side of the relative cylinder
        SimplexRef ra = cyl.a->apply_word(rp.degens, pr2);
        DCAT_REQUIRE(sa != nullptr, "empty A cannot contribute classes");
        SimplexRef sigma_a = sa->po.leg_b.apply(sa->kxi->locate(ra, rt));
        return rhs.po.leg_c.apply(sigma_a);
      });
      std::string err;
      bool simplicial = cmp.validate(&err);
      bool iso = simplicial && cmp.is_iso();
      // degree-wise bijection through dimension 4
      bool degreewise = true;
      for (Dim n = 0; n <= 4; ++n)
        degreewise = degreewise &&
                     sp.sset->refs(n).refs.size() == rhs.sset()->refs(n).refs.size();
      rep.add(id, simplicial && iso && degreewise,
              simplicial ? "" : err, {{"dim", 4}});
    }
  (void)budget;
  return rep;
}

Report verify_homrel(const Quasicat& cert, const std::string& tag, Budget& budget) {
  Report rep;
  const SSetPtr& c = cert.sset;
  auto d1 = standard(1);
  Subcomplex ends = skeleton(d1, 0);
  SMap empty_in(empty_sset(), d1, {});

  PointedCone jk = cone_j(d1);
  PointedCone sk = cone_sigma(d1);
  PointedCone ja = cone_j(boundary(1));
  PointedCone sa = cone_sigma(boundary(1));
  SMap bd_in = name_inclusion(boundary(1), d1);
  SMap j_incl = pointed_cone_map(ja, jk, bd_in);
  SMap s_incl = pointed_cone_map(sa, sk, bd_in);
  // rel-empty homotopies downstairs still fix the basepoint pair: the
  // pinning (X, Y) is part of the mapping-space data on both cone models
  Subcomplex jv01 = subcomplex(jk.sset, {jk.sset->name(jk.v0), jk.sset->name(jk.v1)});
  Subcomplex sv01 =
      subcomplex(sk.sset, {sk.sset->name(sk.v0), sk.sset->name(sk.v1)});

  HomotopyChecker c_rel_ja(Inclusion(j_incl), cert);
  HomotopyChecker c_rel_jempty(Inclusion(jv01.inclusion), cert);
  HomotopyChecker c_rel_sa(Inclusion(s_incl), cert);
  HomotopyChecker c_rel_sempty(Inclusion(sv01.inclusion), cert);

  int pairs_checked = 0, agree_fail = 0, equiv_fail = 0;
  for (int xv = 0; xv < c->count(0); ++xv)
    for (int yv = 0; yv < c->count(0); ++yv) {
      MappingSpace R = MappingSpace::right(c, SimplexId{0, xv}, SimplexId{0, yv}, 3, budget);
      if (R.sset()->empty()) continue;
      MappingSpace M = MappingSpace::middle(c, SimplexId{0, xv}, SimplexId{0, yv}, 3, budget);
      SMap phi = phi_map(R, M);
      Quasicat cert_r = certify(R.sset(), 3, budget);
      cert_r.complete_through = 3;
      Quasicat cert_m = certify(M.sset(), 3, budget);
      cert_m.complete_through = 3;
      HomotopyChecker r_rel_a(Inclusion(ends.inclusion), cert_r);
      HomotopyChecker r_rel_e(Inclusion(SMap(empty_sset(), d1, {})), cert_r);
      HomotopyChecker m_rel_a(Inclusion(name_inclusion(ends.sset, d1)), cert_m);
      HomotopyChecker m_rel_e(Inclusion(SMap(empty_sset(), d1, {})), cert_m);

      MapList maps = enumerate_maps(d1, R.sset(), budget);
      std::vector<SMap> bars, caps, fbars, gbars;
      for (const SMap& f : maps.maps) {
        bars.push_back(j_adjoint(R, jk, f));
        SMap big_f = SMap::compose(phi, f);
        caps.push_back(big_f);
        fbars.push_back(sigma_adjoint(M, sk, big_f));
      }
      // the homotopy relation rel bd on this map set, for the equivalence
      // relation check
      size_t nmaps = maps.maps.size();
      std::vector<std::vector<bool>> hom_bd(nmaps, std::vector<bool>(nmaps, false));
      for (size_t i = 0; i < nmaps; ++i)
        for (size_t j = 0; j < nmaps; ++j) {
          const SMap& f = maps.maps[i];
          const SMap& g = maps.maps[j];
          for (int mode = 0; mode < 2; ++mode) {
            bool rel_bd = mode == 0;
            Encoded fa = encode(SMap::compose(f, ends.inclusion));
            Encoded ga = encode(SMap::compose(g, ends.inclusion));
            // agreement on A must match agreement at the J and Sigma levels
            bool agree1 = !rel_bd || fa == ga;
            bool agree3 =
                !rel_bd || encode(SMap::compose(bars[i], j_incl)) ==
                               encode(SMap::compose(bars[j], j_incl));
            bool agree4 =
                !rel_bd || encode(SMap::compose(fbars[i], s_incl)) ==
                               encode(SMap::compose(fbars[j], s_incl));
            if (agree1 != agree3 || agree1 != agree4) ++agree_fail;
            if (!agree1) continue;
            Answer b1 = (rel_bd ? r_rel_a : r_rel_e).homotopic(f, g, budget);
            Answer b2 = (rel_bd ? m_rel_a : m_rel_e).homotopic(caps[i], caps[j], budget);
            Answer b3 = (rel_bd ? c_rel_ja : c_rel_jempty).homotopic(bars[i], bars[j], budget);
            Answer b4 =
                (rel_bd ? c_rel_sa : c_rel_sempty).homotopic(fbars[i], fbars[j], budget);
            ++pairs_checked;
            if (!(b1 == b2 && b2 == b3 && b3 == b4)) ++agree_fail;
            if (rel_bd && i < nmaps && j < nmaps) hom_bd[i][j] = b1 == Answer::Yes;
          }
        }
      // reflexive, symmetric, transitive (within matching boundary values)
      for (size_t i = 0; i < nmaps; ++i) {
        Encoded fa = encode(SMap::compose(maps.maps[i], ends.inclusion));
        if (!hom_bd[i][i]) ++equiv_fail;
        for (size_t j = 0; j < nmaps; ++j) {
          if (encode(SMap::compose(maps.maps[j], ends.inclusion)) != fa) continue;
          if (hom_bd[i][j] != hom_bd[j][i]) ++equiv_fail;
          for (size_t k = 0; k < nmaps; ++k) {
            if (encode(SMap::compose(maps.maps[k], ends.inclusion)) != fa) continue;
            if (hom_bd[i][j] && hom_bd[j][k] && !hom_bd[i][k]) ++equiv_fail;
          }
        }
      }
    }
  rep.add("homrel." + tag + ".four-conditions", agree_fail == 0,
          std::to_string(pairs_checked) + " pairs checked");
  rep.add("homrel." + tag + ".equivalence-relation", equiv_fail == 0);
  return rep;
}

Report verify_homrel_suite(Budget& budget) {
  Report rep;
  auto d2 = standard(2);
  rep.merge(verify_homrel(certify(d2, 4, budget), "delta2", budget));
  auto bz2 = certified_nerve(bz2_category(), 6);
  rep.merge(verify_homrel(bz2.cert, "bz2", budget));
  auto giso = certified_nerve(iso_groupoid_category(), 6);
  rep.merge(verify_homrel(giso.cert, "iso-groupoid", budget));
  return rep;
}

Report verify_alpha(const Quasicat& cert, const std::string& tag, Dim d, Dim m,
                    Budget& budget) {
  Report rep;
  const SSetPtr& c = cert.sset;
  std::shared_ptr<TruncatedSSet> hd;
  if (d >= 1)
    hd = std::make_shared<TruncatedSSet>(TruncatedSSet::make(cert, d, m + 1, budget));
  bool all_ok = true;
  std::string detail;
  for (int xv = 0; xv < c->count(0); ++xv)
    for (int yv = 0; yv < c->count(0); ++yv) {
      AlphaData a =
          alpha_verify(cert, SimplexId{0, xv}, SimplexId{0, yv}, d, m, budget, nullptr,
                       nullptr, hd);
      if (!a.report.all_passed()) {
        all_ok = false;
        for (const auto& item : a.report.items)
          if (item.answer != Answer::Yes)
            detail = c->name(0, xv) + "->" + c->name(0, yv) + " " + item.id;
      }
    }
  rep.add("alpha." + tag + ".d" + std::to_string(d), all_ok, detail, {{"dim", m}});
  return rep;
}

Report verify_alpha_suite(Budget& budget) {
  Report rep;
  auto d2 = standard(2);
  Quasicat c2 = certify(d2, 6, budget);
  auto bz2 = certified_nerve(bz2_category(), 8);
  auto p22 = certified_nerve(poset_2x2_category(), 8);
  for (Dim d = 0; d <= 2; ++d) {
    rep.merge(verify_alpha(c2, "delta2", d, 3, budget));
    rep.merge(verify_alpha(bz2.cert, "bz2", d, 3, budget));
    rep.merge(verify_alpha(p22.cert, "poset2x2", d, 3, budget));
  }
  // the BZ/2 instance at d = 1 has two-point discrete sides
  SimplexId star = bz2.nerve.sset()->require("*");
  AlphaData a = alpha_verify(bz2.cert, star, star, 1, 2, budget);
  rep.add("alpha.bz2.two-point-sides",
          a.ms_hd->sset()->count(0) == 2 && a.ms_hd->sset()->top_dim() == 0 &&
              a.rhs->count(0) == 2 && a.rhs->top_dim() == 0);
  return rep;
}

Report verify_universal_suite(Budget& budget) {
  Report rep;
  auto p22 = certified_nerve(poset_2x2_category(), 6);
  auto chain = certified_nerve(chain_category(2), 6);
  auto bz2 = certified_nerve(bz2_category(), 6);
  auto giso = certified_nerve(iso_groupoid_category(), 6);

  // theta is an isomorphism exactly on d-categories
  struct Inst {
    std::string tag;
    const Quasicat* cert;
    Dim d;
    bool expect;
  };
  std::vector<Inst> insts = {{"poset2x2.d0", &p22.cert, 0, true},
                             {"chain.d0", &chain.cert, 0, true},
                             {"bz2.d1", &bz2.cert, 1, true},
                             {"iso-groupoid.d1", &giso.cert, 1, true},
                             {"bz2.d0", &bz2.cert, 0, false},
                             {"iso-groupoid.d0", &giso.cert, 0, false}};
  for (const auto& inst : insts) {
    bool is_dcat = is_d_category(*inst.cert, inst.d, 3, budget).yes();
    bool theta_iso;
    if (inst.d >= 1) {
      TruncatedSSet hd = TruncatedSSet::make(*inst.cert, inst.d, inst.d + 1, budget);
      theta_iso = hd.theta().is_iso();
    } else {
      theta_iso = h_low(*inst.cert, inst.d, budget).theta.is_iso();
    }
    rep.add("universal.theta-iso." + inst.tag,
            is_dcat == inst.expect && theta_iso == inst.expect,
            std::string("d-category: ") + (is_dcat ? "yes" : "no"));
  }

  // Fun-precomposition bijections on vertices and edges
  auto d1 = standard(1);
  auto d2 = standard(2);
  rep.merge("universal.fun.interval-to-poset",
            universal_property_verify(certify(d1, 4, budget), p22.cert, 0, 1, budget));
  rep.merge("universal.fun.triangle-to-chain",
            universal_property_verify(certify(d2, 4, budget), chain.cert, 0, 1, budget));
  rep.merge("universal.fun.bz2-to-bz2",
            universal_property_verify(bz2.cert, bz2.cert, 1, 1, budget));
  rep.merge("universal.fun.iso-groupoid-to-bz2",
            universal_property_verify(giso.cert, bz2.cert, 1, 1, budget));
  return rep;
}

Report verify_functor_laws(Budget& budget) {
  Report rep;
  auto bz2 = certified_nerve(bz2_category(), 6);
  auto p22 = certified_nerve(poset_2x2_category(), 6);
  auto giso = certified_nerve(iso_groupoid_category(), 6);

  // idempotence through the materialized range
  for (auto& [tag, cn] : {std::pair<std::string, CertifiedNerve*>{"bz2", &bz2},
                          {"poset2x2", &p22}}) {
    TruncatedSSet h1 = TruncatedSSet::make(cn->cert, 1, 3, budget);
    Quasicat inner = certify(h1.sset(), 3, budget);
    inner.complete_through = 3;
    TruncatedSSet h11 = TruncatedSSet::make(inner, 1, 1, budget);
    rep.add("functor.idempotent.h1." + tag, h11.theta().is_iso());
  }

  // tower compatibility: h_e(h_d C) agrees with h_e C for e <= d
  {
    TruncatedSSet h1 = TruncatedSSet::make(bz2.cert, 1, 3, budget);
    Quasicat inner = certify(h1.sset(), 3, budget);
    inner.complete_through = 3;
    LowTruncation via = h_low(inner, 0, budget);
    LowTruncation direct = h_low(bz2.cert, 0, budget);
    rep.add("functor.tower.h0-h1.bz2",
            iso_check(via.sset, direct.sset, -1, budget).has_value());

    TruncatedSSet h2 = TruncatedSSet::make(bz2.cert, 2, 4, budget);
    Quasicat inner2 = certify(h2.sset(), 4, budget);
    inner2.complete_through = 4;
    TruncatedSSet via1 = TruncatedSSet::make(inner2, 1, 2, budget);
    TruncatedSSet direct1 = TruncatedSSet::make(bz2.cert, 1, 2, budget);
    rep.add("functor.tower.h1-h2.bz2",
            iso_check(via1.sset(), direct1.sset(), -1, budget).has_value());
  }

  // theta-naturality and composition laws
  {
    auto d1 = standard(1);
    Quasicat c1 = certify(d1, 4, budget);
    TruncatedSSet h_c = TruncatedSSet::make(c1, 1, 2, budget);
    TruncatedSSet h_b = TruncatedSSet::make(bz2.cert, 1, 2, budget);
    TruncatedSSet h_g = TruncatedSSet::make(giso.cert, 1, 2, budget);

    SimplexRef s_edge{{}, bz2.nerve.sset()->require("s")};
    SMap f = edge_map(bz2.nerve.sset(), s_edge);
    SMap hf = TruncatedSSet::induced(h_c, h_b, f);
    SMap f_dom = make_map(h_c.theta_domain(), h_b.theta_domain(), [&](SimplexId id) {
      SimplexRef r = f.at(id);
      return SimplexRef{r.degens, h_b.theta_domain()->require(bz2.nerve.sset()->name(r.base))};
    });
    rep.add("functor.naturality.edge-to-bz2",
            SMap::compose(h_b.theta(), f_dom) == SMap::compose(hf, h_c.theta()));

    Category g = iso_groupoid_category();
    SMap collapse = NerveSSet::induced(
        giso.nerve, bz2.nerve, {0, 0},
        {bz2_category().mor_index("e"), bz2_category().mor_index("e"),
         bz2_category().mor_index("s"), bz2_category().mor_index("s")});
    SMap u_edge = edge_map(giso.nerve.sset(), giso.nerve.mor_edge(g.mor_index("u")));
    SMap h_collapse = TruncatedSSet::induced(h_g, h_b, collapse);
    SMap h_u = TruncatedSSet::induced(h_c, h_g, u_edge);
    SMap h_comp = TruncatedSSet::induced(h_c, h_b, SMap::compose(collapse, u_edge));
    rep.add("functor.composition.edge-groupoid-bz2",
            SMap::compose(h_collapse, h_u) == h_comp);
    rep.add("functor.identity.bz2",
            TruncatedSSet::induced(h_b, h_b, SMap::identity(bz2.nerve.sset())) ==
                SMap::identity(h_b.sset()));
  }
  return rep;
}

Report verify_cocart_suite(Budget& budget) {
  Report rep;
  Category c = chain_category(1);
  Category g = iso_groupoid_category();

  auto project = [&](const Category& prod, const NerveSSet& npr, const NerveSSet& nc) {
    std::vector<int> on_objects(prod.object_count());
    std::vector<int> on_mors(prod.mor_count());
    for (int o = 0; o < prod.object_count(); ++o) {
      std::string nm = prod.object(o);
      on_objects[o] = c.object_index(nm.substr(1, nm.find(',') - 1));
    }
    for (int m = 0; m < prod.mor_count(); ++m) {
      std::string nm = prod.mor(m).id;
      on_mors[m] = c.mor_index(nm.substr(1, nm.find(',') - 1));
    }
    return NerveSSet::induced(npr, nc, on_objects, on_mors);
  };

  // chain x iso groupoid: edges with invertible second leg are coCartesian,
  // and their h_1 images stay coCartesian
  {
    Category prod = Category::product(c, g);
    NerveSSet npr = NerveSSet::make(prod, 4);
    NerveSSet nc = NerveSSet::make(c, 4);
    SMap p = project(prod, npr, nc);
    Quasicat cert_pr = nerve_certificate(npr.sset(), npr.complete_through());
    Quasicat cert_c = nerve_certificate(nc.sset(), nc.complete_through());
    TruncatedSSet h_pr = TruncatedSSet::make(cert_pr, 1, 3, budget);
    TruncatedSSet h_c = TruncatedSSet::make(cert_c, 1, 3, budget);
    SMap h_p = TruncatedSSet::induced(h_pr, h_c, p);

    bool recorded_ok = true, image_ok = true;
    int recorded = 0;
    for (int m = 0; m < prod.mor_count(); ++m) {
      if (prod.mor(m).id.find(",u)") == std::string::npos &&
          prod.mor(m).id.find(",v)") == std::string::npos &&
          prod.mor(m).id.find(",ida)") == std::string::npos &&
          prod.mor(m).id.find(",idb)") == std::string::npos)
        continue;
      if (prod.is_identity(m)) continue;
      SimplexRef e = npr.mor_edge(m);
      ++recorded;
      if (is_cocartesian_edge(p, e, 3, budget) != Answer::Yes) recorded_ok = false;
      // image under theta
      SimplexRef edom{e.degens,
                      h_pr.theta_domain()->require(npr.sset()->name(e.base))};
      SimplexRef he = h_pr.theta().apply(edom);
      if (is_cocartesian_edge(h_p, he, 3, budget) != Answer::Yes) image_ok = false;
    }
    rep.add("cocart.recorded.chain-x-groupoid", recorded_ok,
            std::to_string(recorded) + " edges", {{"m", 3}});
    rep.add("cocart.h1-image.chain-x-groupoid", image_ok, "", {{"m", 3}});
  }

  // chain x chain: the edge with a non-invertible second leg fails
  {
    Category prod = Category::product(c, c);
    NerveSSet npr = NerveSSet::make(prod, 4);
    NerveSSet nc = NerveSSet::make(c, 4);
    SMap p = project(prod, npr, nc);
    int bad = prod.mor_index("(p0<=p0,p0<=p1)");
    SimplexRef e = npr.mor_edge(bad);
    rep.add("cocart.negative.chain-x-chain",
            is_cocartesian_edge(p, e, 3, budget) == Answer::No, "", {{"m", 3}});
  }
  return rep;
}

}  // namespace dcat
