#include <functional>
#include <set>

#include "dcat/corpus.hpp"
#include "dcat/homotopy.hpp"
#include "dcat/iso.hpp"
#include "dcat/solver.hpp"
#include "doctest.h"

using namespace dcat;

namespace {

Budget big() { return Budget{}; }

// oracle: monotone vertex maps [m] -> [n]
int monotone_count(int m, int n) {
  std::function<int(int, int)> rec = [&](int pos, int from) -> int {
    if (pos == m + 1) return 1;
    int total = 0;
    for (int v = from; v <= n; ++v) total += rec(pos + 1, v);
    return total;
  };
  return rec(0, 0);
}

}  // namespace

TEST_CASE("map enumeration matches the monotone oracle") {
  Budget b = big();
  CHECK(enumerate_maps(point(), standard(2), b).maps.size() == 3);
  CHECK(enumerate_maps(standard(1), standard(1), b).maps.size() == 3);
  CHECK(monotone_count(1, 1) == 3);
  CHECK(enumerate_maps(standard(2), standard(1), b).maps.size() ==
        static_cast<size_t>(monotone_count(2, 1)));
  auto bz2 = certified_nerve(bz2_category(), 4);
  CHECK(enumerate_maps(standard(1), bz2.nerve.sset(), b).maps.size() == 2);
}

TEST_CASE("extension problems") {
  Budget b = big();
  // inner horn of Delta^2 extends uniquely
  auto d2 = standard(2);
  Subcomplex h = subcomplex(d2, {"0", "1", "2", "01", "12"});
  ExtensionProblem p = ExtensionProblem::extend(Inclusion(h.inclusion), h.inclusion);
  MapList ext = solve(p, false, b);
  CHECK(ext.complete());
  CHECK(ext.maps.size() == 1);

  // endpoints into the one-object groupoid nerve: two filling edges
  auto bz2 = certified_nerve(bz2_category(), 4);
  auto d1 = standard(1);
  Subcomplex ends = skeleton(d1, 0);
  SMap both = constant_map(ends.sset, bz2.nerve.sset(), SimplexId{0, 0});
  MapList exts = solve(ExtensionProblem::extend(Inclusion(ends.inclusion), both), false, b);
  CHECK(exts.maps.size() == 2);

  // initial horn into Delta^1 with 01 degenerate and 02 the edge
  Subcomplex h0 = subcomplex(d2, {"0", "1", "2", "01", "02"});
  SMap into = make_map(h0.sset, d1, [&](SimplexId id) -> SimplexRef {
    const std::string& nm = h0.sset->name(id);
    if (nm == "0" || nm == "1") return SimplexRef{{}, d1->require("0")};
    if (nm == "2") return SimplexRef{{}, d1->require("1")};
    if (nm == "01") return ref_degenerate(SimplexRef{{}, d1->require("0")}, 0);
    return SimplexRef{{}, d1->require("01")};
  });
  REQUIRE(into.validate());
  MapList lifts = solve(ExtensionProblem::extend(Inclusion(h0.inclusion), into), false, b);
  CHECK(lifts.maps.size() == 1);
}

TEST_CASE("budget exhaustion is distinguished from a negative answer") {
  Budget tiny{3, 0};
  MapList r = enumerate_maps(standard(2), standard(2), tiny);
  CHECK(r.status == SearchStatus::BudgetExceeded);
  Budget enough = big();
  MapList ok = enumerate_maps(standard(2), standard(2), enough);
  CHECK(ok.complete());
  CHECK(!ok.maps.empty());
}

TEST_CASE("homotopy rel A on the one-object groupoid") {
  Budget b = big();
  auto bz2 = certified_nerve(bz2_category(), 5);
  SSetPtr n = bz2.nerve.sset();
  auto d1 = standard(1);
  Subcomplex ends = skeleton(d1, 0);
  HomotopyChecker rel_ends(Inclusion(ends.inclusion), bz2.cert);

  SimplexRef e_edge = ref_degenerate(SimplexRef{{}, n->require("*")}, 0);
  SimplexRef s_edge{{}, n->require("s")};
  SMap fe = edge_map(n, e_edge);
  SMap fs = edge_map(n, s_edge);

  SMap witness;
  CHECK(rel_ends.homotopic(fe, fe, b, &witness) == Answer::Yes);
  CHECK(witness.validate());
  CHECK(rel_ends.homotopic(fe, fs, b) == Answer::No);

  // rel nothing the endpoints may move: the square with verticals (e, s)
  // fills, so e and s become homotopic once the constraint is dropped
  auto empty = empty_sset();
  SMap none(empty, d1, {});
  HomotopyChecker rel_none(Inclusion(none), bz2.cert);
  CHECK(rel_none.homotopic(fe, fs, b) == Answer::Yes);
  CHECK(rel_none.homotopic(fs, fs, b) == Answer::Yes);

  // rel nothing into a poset nerve: edges with different endpoint classes
  // stay separated
  auto p22 = certified_nerve(poset_2x2_category(), 4);
  SSetPtr np = p22.nerve.sset();
  SMap g1 = edge_map(np, SimplexRef{{}, np->require("00<=01")});
  SMap g2 = edge_map(np, SimplexRef{{}, np->require("10<=11")});
  HomotopyChecker rel_none_p(Inclusion(none), p22.cert);
  CHECK(rel_none_p.homotopic(g2, g1, b) == Answer::No);
}

TEST_CASE("bracket class sets") {
  Budget b = big();
  // [empty, point, point; X] on a discrete X: one class per vertex
  Category disc = Category::from_poset({"a", "b"}, {});
  auto nd = certified_nerve(disc, 2);
  auto pt = point();
  auto empty = empty_sset();
  SMap e_in_p(empty, pt, {});
  HClassSet verts =
      homotopy_classes(Inclusion(e_in_p), Inclusion(SMap::identity(pt)), nd.cert, b);
  CHECK(verts.classes.size() == 2);

  // [bd Delta^1, Delta^1, Delta^1; N(BZ/2)]: the two edge classes
  auto bz2 = certified_nerve(bz2_category(), 5);
  auto d1 = standard(1);
  Subcomplex ends = skeleton(d1, 0);
  HClassSet cls =
      homotopy_classes(Inclusion(ends.inclusion), Inclusion(SMap::identity(d1)), bz2.cert, b);
  CHECK(cls.classes.size() == 2);

  // [sk0, sk1, sk2; Delta^2]: all six edges (degenerate ones included)
  auto d2 = standard(2);
  Quasicat cert2 = certify(d2, 4, b);
  Subcomplex s0 = skeleton(d1, 0);
  HClassSet six = homotopy_classes(Inclusion(s0.inclusion), Inclusion(SMap::identity(d1)),
                                   cert2, b);
  CHECK(six.classes.size() == 6);
}

TEST_CASE("lifting problems") {
  Budget b = big();
  auto d2 = standard(2);
  auto d1 = standard(1);
  auto pt = point();
  Subcomplex h = subcomplex(d2, {"0", "1", "2", "01", "12"});
  Inclusion horn_in(h.inclusion);

  // trivial lift when U = V
  Subcomplex idsub = skeleton(d1, 1);
  Inclusion idincl(idsub.inclusion);
  SMap p1 = constant_map(d1, pt, SimplexId{0, 0});
  SMap bottom = constant_map(idsub.sset, pt, SimplexId{0, 0});
  SMap top2 = make_map(idsub.sset, d1, [&](SimplexId id) {
    return SimplexRef{{}, d1->require(idsub.sset->name(id))};
  });
  LiftingSquare trivial{&p1, &top2, &bottom, &idincl};
  CHECK(has_rlp(trivial, b) == Answer::Yes);

  // Delta^1 over the point has inner-horn lifts
  MapList tops = enumerate_maps(h.sset, d1, b);
  bool all_lift = true;
  for (const SMap& u : tops.maps) {
    SMap bot = constant_map(d2, pt, SimplexId{0, 0});
    LiftingSquare sq{&p1, &u, &bot, &horn_in};
    if (has_rlp(sq, b) != Answer::Yes) all_lift = false;
  }
  CHECK(all_lift);

  // negative control: no section of bd Delta^1 -> Delta^1 over the identity
  auto bd1 = boundary(1);
  SMap pincl = make_map(bd1, d1, [&](SimplexId id) {
    return SimplexRef{{}, d1->require(bd1->name(id))};
  });
  Subcomplex ends = skeleton(d1, 0);
  Inclusion ends_in(ends.inclusion);
  SMap top3 = make_map(ends.sset, bd1, [&](SimplexId id) {
    return SimplexRef{{}, bd1->require(ends.sset->name(id))};
  });
  SMap bot3 = SMap::identity(d1);
  LiftingSquare no_lift{&pincl, &top3, &bot3, &ends_in};
  CHECK(has_rlp(no_lift, b) == Answer::No);
}

TEST_CASE("horn-filling predicates") {
  Budget b = big();
  auto bz2 = certified_nerve(bz2_category(), 4);
  CHECK(is_quasicategory_up_to(bz2.nerve.sset(), 3, b) == Answer::Yes);
  CHECK(is_kan_up_to(bz2.nerve.sset(), 3, b) == Answer::Yes);

  auto p22 = certified_nerve(poset_2x2_category(), 4);
  CHECK(is_quasicategory_up_to(p22.nerve.sset(), 3, b) == Answer::Yes);
  // the square poset has a non-invertible edge, so an outer horn must fail
  CHECK(is_kan_up_to(p22.nerve.sset(), 2, b) == Answer::No);

  auto h21 = horn(2, 1);
  CHECK(is_quasicategory_up_to(h21, 2, b) == Answer::No);
}

TEST_CASE("inner fibrations and coCartesian edges on a product projection") {
  Budget b = big();
  Category c = chain_category(1);
  Category g = iso_groupoid_category();
  Category prod = Category::product(c, g);
  NerveSSet npr = NerveSSet::make(prod, 3);
  NerveSSet nc = NerveSSet::make(c, 3);

  std::vector<int> on_objects(prod.object_count());
  std::vector<int> on_mors(prod.mor_count());
  for (int o = 0; o < prod.object_count(); ++o) {
    std::string nm = prod.object(o);  // "(pi,x)"
    on_objects[o] = c.object_index(nm.substr(1, nm.find(',') - 1));
  }
  for (int m = 0; m < prod.mor_count(); ++m) {
    std::string nm = prod.mor(m).id;  // "(f,g)"
    on_mors[m] = c.mor_index(nm.substr(1, nm.find(',') - 1));
  }
  SMap proj = NerveSSet::induced(npr, nc, on_objects, on_mors);
  CHECK(is_inner_fibration_up_to(proj, 3, b) == Answer::Yes);

  // second leg invertible: coCartesian over the chain direction
  SimplexRef up_iso = npr.mor_edge(prod.mor_index("(p0<=p1,u)"));
  CHECK(is_cocartesian_edge(proj, up_iso, 3, b) == Answer::Yes);

  // over the point: equivalence edges are coCartesian, a poset step is not
  auto giso = certified_nerve(g, 3);
  auto p22 = certified_nerve(poset_2x2_category(), 3);
  auto pt = point();
  SMap to_pt_iso = constant_map(giso.nerve.sset(), pt, SimplexId{0, 0});
  CHECK(is_cocartesian_edge(to_pt_iso, giso.nerve.mor_edge(g.mor_index("u")), 3, b) ==
        Answer::Yes);
  SMap to_pt_poset = constant_map(p22.nerve.sset(), pt, SimplexId{0, 0});
  CHECK(is_cocartesian_edge(to_pt_poset,
                            p22.nerve.mor_edge(poset_2x2_category().mor_index("00<=01")), 3,
                            b) == Answer::No);

  // degenerate edges are always coCartesian over the point
  CHECK(is_cocartesian_edge(
            to_pt_poset,
            ref_degenerate(SimplexRef{{}, p22.nerve.sset()->require("00")}, 0), 3, b) ==
        Answer::Yes);
}

TEST_CASE("pi0 and edge equivalences") {
  Budget b = big();
  CHECK(pi0(boundary(1)).size() == 2);
  auto bz2 = certified_nerve(bz2_category(), 4);
  CHECK(pi0(bz2.nerve.sset()).size() == 1);

  EdgeHomotopyCategory hc = EdgeHomotopyCategory::make(bz2.cert, b);
  SimplexRef s_edge{{}, bz2.nerve.sset()->require("s")};
  CHECK(hc.is_equivalence(s_edge));

  auto p22 = certified_nerve(poset_2x2_category(), 4);
  EdgeHomotopyCategory hp = EdgeHomotopyCategory::make(p22.cert, b);
  SimplexRef step{{}, p22.nerve.sset()->require("00<=01")};
  CHECK(!hp.is_equivalence(step));
}

TEST_CASE("iso search") {
  Budget b = big();
  auto d2 = standard(2);
  CHECK(iso_check(d2, standard(2), -1, b).has_value());
  CHECK(!iso_check(standard(1), boundary(1), -1, b).has_value());

  PointedCone j0 = cone_j(point());
  CHECK(iso_check(j0.sset, standard(1), -1, b).has_value());

  // products are symmetric up to isomorphism
  Product ab = Product::make(standard(2), standard(1));
  Product ba = Product::make(standard(1), standard(2));
  CHECK(iso_check(ab.sset(), ba.sset(), -1, b).has_value());
}
