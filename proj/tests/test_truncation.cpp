#include <climits>
#include <set>

#include "dcat/corpus.hpp"
#include "dcat/iso.hpp"
#include "dcat/truncation.hpp"
#include "doctest.h"

using namespace dcat;

namespace {

Budget big() { return Budget{}; }

}  // namespace

TEST_CASE("d-category predicate") {
  Budget b = big();
  auto p22 = certified_nerve(poset_2x2_category(), 4);
  CHECK(is_d_category(p22.cert, 0, 3, b).yes());
  CHECK(is_d_category(p22.cert, 1, 3, b).yes());

  auto bz2 = certified_nerve(bz2_category(), 5);
  DCatResult r0 = is_d_category(bz2.cert, 0, 3, b);
  CHECK(r0.answer == Answer::No);
  REQUIRE(r0.violation.has_value());
  CHECK(r0.violation->condition == "(2)");
  CHECK(r0.violation->dim == 1);
  CHECK(is_d_category(bz2.cert, 1, 3, b).yes());

  auto giso = certified_nerve(iso_groupoid_category(), 5);
  // the walking isomorphism has two equivalent objects: condition (1) fails
  // at d = 0 even though no two edges share a boundary
  DCatResult g0 = is_d_category(giso.cert, 0, 3, b);
  CHECK(g0.answer == Answer::No);
  CHECK(is_d_category(giso.cert, 1, 3, b).yes());

  auto d2 = standard(2);
  Quasicat c2 = certify(d2, 4, b);
  CHECK(is_d_category(c2, 0, 4, b).yes());
}

TEST_CASE("h_d of a 1-category is the identity") {
  Budget b = big();
  auto p22 = certified_nerve(poset_2x2_category(), 5);
  TruncatedSSet h1 = TruncatedSSet::make(p22.cert, 1, 3, b);
  CHECK(h1.theta().is_iso());

  auto bz2 = certified_nerve(bz2_category(), 5);
  TruncatedSSet hb = TruncatedSSet::make(bz2.cert, 1, 3, b);
  CHECK(hb.theta().is_iso());
  for (Dim m = 0; m <= 3; ++m) CHECK(hb.sset()->count(m) == 1);
}

TEST_CASE("h_2 of the 3-simplex is the 3-simplex degree-wise") {
  Budget b = big();
  auto d3 = standard(3);
  Quasicat c3 = certify(d3, 5, b);
  TruncatedSSet h2 = TruncatedSSet::make(c3, 2, 3, b);
  CHECK(h2.theta().is_iso());
  for (Dim m = 0; m <= 3; ++m) CHECK(h2.sset()->count(m) == d3->count(m));
}

TEST_CASE("theta is vertex-surjective; iso exactly for d-categories") {
  Budget b = big();
  auto bz2 = certified_nerve(bz2_category(), 5);
  TruncatedSSet h1 = TruncatedSSet::make(bz2.cert, 1, 2, b);
  CHECK(h1.theta().is_iso());
  LowTruncation h0 = h_low(bz2.cert, 0, b);
  CHECK(h0.sset->count(0) == 1);
  CHECK(h0.sset->top_dim() == 0);
  std::set<int> hit;
  for (int v = 0; v < bz2.nerve.sset()->count(0); ++v)
    hit.insert(h0.theta.at(SimplexId{0, v}).base.idx);
  CHECK(hit.size() == static_cast<size_t>(h0.sset->count(0)));
}

TEST_CASE("low truncations follow the case split") {
  Budget b = big();
  Quasicat empty_cert{empty_sset(), 5, INT_MAX, "finite"};
  CHECK(h_low(empty_cert, -1, b).sset->empty());
  CHECK(h_low(empty_cert, -2, b).sset->count(0) == 1);

  auto d2 = standard(2);
  Quasicat c2 = certify(d2, 3, b);
  CHECK(h_low(c2, -1, b).sset->count(0) == 1);
  LowTruncation t0 = h_low(c2, 0, b);
  CHECK(t0.sset->count(0) == 3);
  CHECK(t0.sset->count(1) == 3);
  CHECK(t0.sset->count(2) == 1);
  CHECK(t0.theta.is_iso());

  auto giso = certified_nerve(iso_groupoid_category(), 4);
  LowTruncation g0 = h_low(giso.cert, 0, b);
  CHECK(g0.sset->count(0) == 1);
  CHECK(g0.sset->top_dim() == 0);
}

TEST_CASE("right mapping spaces") {
  Budget b = big();
  auto d1 = standard(1);
  MappingSpace ms = MappingSpace::right(d1, d1->require("0"), d1->require("1"), 2, b);
  CHECK(ms.sset()->count(0) == 1);
  CHECK(ms.sset()->top_dim() == 0);

  auto bz2 = certified_nerve(bz2_category(), 6);
  SimplexId star = bz2.nerve.sset()->require("*");
  MappingSpace mb = MappingSpace::right(bz2.nerve.sset(), star, star, 3, b);
  CHECK(mb.sset()->count(0) == 2);
  CHECK(mb.sset()->top_dim() == 0);
}

TEST_CASE("middle mapping spaces and phi") {
  Budget b = big();
  auto d1 = standard(1);
  MappingSpace mr = MappingSpace::right(d1, d1->require("0"), d1->require("1"), 1, b);
  MappingSpace mm = MappingSpace::middle(d1, d1->require("0"), d1->require("1"), 1, b);
  CHECK(mm.sset()->count(0) == 1);
  SMap phi = phi_map(mr, mm);
  CHECK(phi.validate());

  auto bz2 = certified_nerve(bz2_category(), 6);
  SimplexId star = bz2.nerve.sset()->require("*");
  MappingSpace br = MappingSpace::right(bz2.nerve.sset(), star, star, 2, b);
  MappingSpace bm = MappingSpace::middle(bz2.nerve.sset(), star, star, 2, b);
  SMap phib = phi_map(br, bm);
  CHECK(phib.validate());
  CHECK(phib.injective_up_to(2));
}

TEST_CASE("alpha comparison for the 2-simplex at d = 1") {
  Budget b = big();
  auto d2 = standard(2);
  Quasicat c2 = certify(d2, 6, b);
  for (const char* xv : {"0", "1", "2"})
    for (const char* yv : {"0", "1", "2"}) {
      AlphaData a = alpha_verify(c2, d2->require(xv), d2->require(yv), 1, 2, b);
      CHECK(a.report.all_passed());
    }
}

TEST_CASE("alpha comparison for the one-object groupoid") {
  Budget b = big();
  auto bz2 = certified_nerve(bz2_category(), 8);
  SimplexId star = bz2.nerve.sset()->require("*");
  AlphaData a1 = alpha_verify(bz2.cert, star, star, 1, 2, b);
  CHECK(a1.report.all_passed());
  CHECK(a1.ms_hd->sset()->count(0) == 2);
  CHECK(a1.ms_hd->sset()->top_dim() == 0);
  CHECK(a1.rhs->count(0) == 2);

  AlphaData a0 = alpha_verify(bz2.cert, star, star, 0, 2, b);
  CHECK(a0.report.all_passed());
  CHECK(a0.rhs->count(0) == 1);

  AlphaData a2 = alpha_verify(bz2.cert, star, star, 2, 2, b);
  CHECK(a2.report.all_passed());
}

TEST_CASE("universal property of the unit") {
  Budget b = big();
  auto d1 = standard(1);
  Quasicat c1 = certify(d1, 3, b);
  auto p22 = certified_nerve(poset_2x2_category(), 4);
  CheckReport r0 = universal_property_verify(c1, p22.cert, 0, 1, b);
  CHECK(r0.all_passed());

  auto bz2 = certified_nerve(bz2_category(), 5);
  Quasicat cpt = certify(point(), 3, b);
  CheckReport r1 = universal_property_verify(bz2.cert, cpt, 0, 1, b);
  CHECK(r1.all_passed());

  CheckReport r2 = universal_property_verify(bz2.cert, bz2.cert, 1, 1, b);
  CHECK(r2.all_passed());
}

TEST_CASE("functoriality of h_d") {
  Budget b = big();
  auto bz2 = certified_nerve(bz2_category(), 5);
  auto d1 = standard(1);
  Quasicat c1 = certify(d1, 4, b);

  TruncatedSSet h_c = TruncatedSSet::make(c1, 1, 2, b);
  TruncatedSSet h_b = TruncatedSSet::make(bz2.cert, 1, 2, b);

  SMap idind = TruncatedSSet::induced(h_b, h_b, SMap::identity(bz2.nerve.sset()));
  CHECK(idind == SMap::identity(h_b.sset()));

  // theta-naturality for the map picking out the sigma edge
  SimplexRef s_edge{{}, bz2.nerve.sset()->require("s")};
  SMap f = edge_map(bz2.nerve.sset(), s_edge);
  SMap hf = TruncatedSSet::induced(h_c, h_b, f);
  SMap f_dom = make_map(h_c.theta_domain(), h_b.theta_domain(), [&](SimplexId id) {
    SimplexRef r = f.at(id);
    return SimplexRef{r.degens,
                      h_b.theta_domain()->require(bz2.nerve.sset()->name(r.base))};
  });
  CHECK(SMap::compose(h_b.theta(), f_dom) == SMap::compose(hf, h_c.theta()));

  // composites of two functors
  auto giso = certified_nerve(iso_groupoid_category(), 5);
  TruncatedSSet h_g = TruncatedSSet::make(giso.cert, 1, 2, b);
  Category g = iso_groupoid_category();
  SMap swap = NerveSSet::induced(
      giso.nerve, giso.nerve, {1, 0},
      {g.mor_index("idb"), g.mor_index("ida"), g.mor_index("v"), g.mor_index("u")});
  SMap h_swap = TruncatedSSet::induced(h_g, h_g, swap);
  SMap h_swap2 = TruncatedSSet::induced(h_g, h_g, SMap::compose(swap, swap));
  CHECK(SMap::compose(h_swap, h_swap) == h_swap2);
}

TEST_CASE("idempotence and the truncation tower") {
  Budget b = big();
  auto bz2 = certified_nerve(bz2_category(), 6);
  TruncatedSSet h1 = TruncatedSSet::make(bz2.cert, 1, 3, b);
  // the extraction is capped at 3, so certify within that range only
  Quasicat cert_h1 = certify(h1.sset(), 3, b);
  cert_h1.complete_through = 3;
  TruncatedSSet h11 = TruncatedSSet::make(cert_h1, 1, 1, b);
  CHECK(h11.theta().is_iso());

  LowTruncation via = h_low(cert_h1, 0, b);
  LowTruncation direct = h_low(bz2.cert, 0, b);
  CHECK(iso_check(via.sset, direct.sset, -1, b).has_value());

  SimplexId star = bz2.nerve.sset()->require("*");
  AlphaData a1 = alpha_verify(bz2.cert, star, star, 1, 2, b);
  CHECK(pi0(a1.ms_c->sset()).size() == pi0(a1.ms_hd->sset()).size());
}

TEST_CASE("fun complexes") {
  Budget b = big();
  auto d1 = standard(1);
  FunComplex f0 = fun_complex(point(), d1, 1, b);
  CHECK(f0.ex.sset->count(0) == 2);
  CHECK(f0.ex.sset->count(1) == 1);  // Fun(pt, Delta^1) = Delta^1

  FunComplex f1 = fun_complex(d1, d1, 0, b);
  CHECK(f1.ex.sset->count(0) == 3);

  FunComplex f2 = fun_complex(boundary(1), d1, 0, b);
  CHECK(f2.ex.sset->count(0) == 4);
}
