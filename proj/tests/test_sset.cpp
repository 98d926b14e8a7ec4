#include <set>
#include <functional>
#include <numeric>

#include "dcat/colimit.hpp"
#include "dcat/nerve.hpp"
#include "dcat/product.hpp"
#include "dcat/sset.hpp"
#include "doctest.h"

using namespace dcat;

namespace {

// independent counting oracle: the number of nondegenerate n-simplices of
// Delta^p x Delta^q is the number of pairs of monotone surjections from [n]
// onto faces with jointly injective graphs; enumerated directly over vertex
// chains
int shuffle_count(int p, int q, int n) {
  // chains ((a_0,b_0) <= ... <= (a_n,b_n)) in [p]x[q], strictly increasing in
  // the pair order (jointly nondegenerate), hitting arbitrary sub-ranges
  std::vector<std::pair<int, int>> verts;
  for (int a = 0; a <= p; ++a)
    for (int b = 0; b <= q; ++b) verts.push_back({a, b});
  int count = 0;
  std::vector<int> idx(n + 1, 0);
  std::function<void(int, int)> rec = [&](int pos, int from) {
    if (pos == n + 1) {
      ++count;
      return;
    }
    for (int v = from; v < static_cast<int>(verts.size()); ++v) {
      if (pos > 0) {
        auto [pa, pb] = verts[idx[pos - 1]];
        auto [ca, cb] = verts[v];
        if (ca < pa || cb < pb || (ca == pa && cb == pb)) continue;
      }
      idx[pos] = v;
      rec(pos + 1, 0);
    }
  };
  rec(0, 0);
  return count;
}

// independent degree-wise colimit oracle: class counts of the pushout of
// all n-simplices, via a plain union-find over printed names
int pushout_degree_count(const SSetPtr& a, const SSetPtr& b, const SSetPtr& c, const SMap& f,
                         const SMap& g, Dim n) {
  std::map<std::string, std::string> up;
  std::function<std::string(std::string)> find = [&](std::string k) {
    while (up.count(k) && up[k] != k) k = up[k] = up[up[k]];
    if (!up.count(k)) up[k] = k;
    return k;
  };
  auto key = [&](int side, const SimplexRef& r) {
    return (side ? "c/" : "b/") + (side ? c->print(r) : b->print(r));
  };
  for (const auto& r : b->refs(n).refs) find(key(0, r));
  for (const auto& r : c->refs(n).refs) find(key(1, r));
  for (const auto& r : a->refs(n).refs) up[find(key(0, f.apply(r)))] = find(key(1, g.apply(r)));
  std::set<std::string> roots;
  for (const auto& r : b->refs(n).refs) roots.insert(find(key(0, r)));
  for (const auto& r : c->refs(n).refs) roots.insert(find(key(1, r)));
  return static_cast<int>(roots.size());
}

int total_refs(const SSetPtr& s, Dim n) { return static_cast<int>(s->refs(n).refs.size()); }

}  // namespace

TEST_CASE("standard complexes have the expected cell counts") {
  auto d2 = standard(2);
  CHECK(d2->count(0) == 3);
  CHECK(d2->count(1) == 3);
  CHECK(d2->count(2) == 1);
  CHECK(d2->validate());

  auto bd2 = boundary(2);
  CHECK(bd2->count(0) == 3);
  CHECK(bd2->count(1) == 3);
  CHECK(bd2->count(2) == 0);

  auto h21 = horn(2, 1);
  CHECK(h21->count(0) == 3);
  CHECK(h21->count(1) == 2);
  CHECK(h21->find("01").has_value());
  CHECK(h21->find("12").has_value());
  CHECK(!h21->find("02").has_value());

  CHECK(boundary(0)->empty());
  CHECK_THROWS_AS(horn(0, 0), InputError);
  CHECK_THROWS_AS(standard(-1), InputError);
}

TEST_CASE("skeleton restricts and is idempotent") {
  auto d3 = standard(3);
  auto sk1 = skeleton(d3, 1);
  CHECK(sk1.sset->count(0) == 4);
  CHECK(sk1.sset->count(1) == 6);
  CHECK(sk1.sset->count(2) == 0);
  CHECK(sk1.sset->validate());

  auto full = skeleton(d3, 3);
  CHECK(full.sset->same_as(*d3));

  auto sk0 = skeleton(boundary(2), 0);
  CHECK(sk0.sset->count(0) == 3);
  CHECK(sk0.sset->top_dim() == 0);

  // sk^d . sk^e = sk^min
  auto a = skeleton(skeleton(d3, 2).sset, 1).sset;
  CHECK(a->same_as(*sk1.sset));
  CHECK(skeleton(d3, -1).sset->empty());
}

TEST_CASE("normal form arithmetic satisfies the simplicial identities") {
  auto d3 = standard(3);
  for (Dim n = 1; n <= 5; ++n) {
    for (const auto& r : d3->refs(n).refs) {
      // d_i d_j = d_{j-1} d_i for i < j (needs dimension >= 2)
      if (n >= 2)
        for (int j = 1; j <= n; ++j)
          for (int i = 0; i < j; ++i)
            CHECK(d3->face(d3->face(r, j), i) == d3->face(d3->face(r, i), j - 1));
      // s_i then the EZ peel returns the same simplex
      for (int i = 0; i <= n; ++i) {
        SimplexRef s = d3->degenerate(r, i);
        CHECK(d3->face(s, i) == r);
        CHECK(d3->face(s, i + 1) == r);
      }
    }
  }
}

TEST_CASE("normal-form uniqueness: expansion and renormalization round-trips") {
  auto k = standard(2);
  for (Dim n = 0; n <= 4; ++n)
    for (const auto& r : k->refs(n).refs) {
      // expand the word step by step and re-apply; must land on r itself
      SimplexRef base{{}, r.base};
      CHECK(k->apply_word(r.degens, base) == r);
    }
}

TEST_CASE("products match the shuffle oracle") {
  auto d1 = standard(1);
  Product p = Product::make(d1, d1);
  CHECK(p.sset()->count(0) == 4);
  CHECK(p.sset()->count(1) == 5);
  CHECK(p.sset()->count(2) == 2);
  CHECK(p.sset()->validate());

  for (int n = 0; n <= 2; ++n) CHECK(p.sset()->count(n) == shuffle_count(1, 1, n));

  Product p21 = Product::make(standard(2), standard(1));
  CHECK(p21.sset()->top_dim() == 3);
  CHECK(p21.sset()->count(3) == 3);
  for (int n = 0; n <= 3; ++n) CHECK(p21.sset()->count(n) == shuffle_count(2, 1, n));

  // unit law: K x Delta^0 is isomorphic to K
  Product unit = Product::make(standard(2), point());
  CHECK(unit.sset()->count(0) == 3);
  CHECK(unit.sset()->count(1) == 3);
  CHECK(unit.sset()->count(2) == 1);
  CHECK(unit.proj1().is_iso());
}

TEST_CASE("product projections and pairing agree") {
  auto d2 = standard(2);
  auto d1 = standard(1);
  Product p = Product::make(d2, d1);
  SMap diag_src = standard_map(1, 2, {0, 2});
  SMap to_i = SMap::identity(d1);
  SMap pair = p.pair(diag_src, to_i);
  CHECK(pair.validate());
  CHECK(SMap::compose(p.proj1(), pair) == diag_src);
  CHECK(SMap::compose(p.proj2(), pair) == to_i);
}

TEST_CASE("pushout collapses the interval to a circle") {
  auto d1 = standard(1);
  Subcomplex ends = skeleton(d1, 0);
  Pushout circle = quotient_to_point(Inclusion(ends.inclusion));
  CHECK(circle.sset->count(0) == 1);
  CHECK(circle.sset->count(1) == 1);
  CHECK(circle.sset->top_dim() == 1);
  CHECK(circle.sset->validate());
  // oracle cross-check per degree
  auto a = ends.sset;
  for (Dim n = 0; n <= 3; ++n)
    CHECK(total_refs(circle.sset, n) ==
          pushout_degree_count(a, d1, point(), ends.inclusion,
                               constant_map(a, point(), SimplexId{0, 0}), n));
}

TEST_CASE("pushout along the identity returns the target") {
  auto d2 = standard(2);
  Subcomplex all = skeleton(d2, 2);
  Pushout po = pushout(Inclusion(all.inclusion), SMap::identity(all.sset));
  CHECK(po.sset->count(0) == 3);
  CHECK(po.sset->count(1) == 3);
  CHECK(po.sset->count(2) == 1);
  CHECK(po.leg_c.is_iso());
}

TEST_CASE("horn collapse example from the quotient oracle") {
  // Lambda^2_1 -> Delta^1 collapsing the edge 12, pushed out into Delta^2
  auto d2 = standard(2);
  auto d1 = standard(1);
  Subcomplex horn_sub = subcomplex(d2, {"0", "1", "2", "01", "12"});
  SMap g = make_map(horn_sub.sset, d1, [&](SimplexId id) -> SimplexRef {
    const std::string& nm = horn_sub.sset->name(id);
    if (nm == "0") return SimplexRef{{}, d1->require("0")};
    if (nm == "1" || nm == "2") return SimplexRef{{}, d1->require("1")};
    if (nm == "01") return SimplexRef{{}, d1->require("01")};
    return ref_degenerate(SimplexRef{{}, d1->require("1")}, 0);  // 12 collapses
  });
  REQUIRE(g.validate());
  Pushout po = pushout(Inclusion(horn_sub.inclusion), g);
  CHECK(po.sset->count(0) == 2);
  CHECK(po.sset->count(1) == 2);
  CHECK(po.sset->count(2) == 1);
  for (Dim n = 0; n <= 3; ++n)
    CHECK(total_refs(po.sset, n) ==
          pushout_degree_count(horn_sub.sset, d2, d1, horn_sub.inclusion, g, n));
}

TEST_CASE("pushout legs commute") {
  auto d1 = standard(1);
  Subcomplex ends = skeleton(d1, 0);
  SMap g = constant_map(ends.sset, point(), SimplexId{0, 0});
  Pushout po = pushout(Inclusion(ends.inclusion), g);
  CHECK(SMap::compose(po.leg_b, ends.inclusion) == SMap::compose(po.leg_c, g));
}

TEST_CASE("relative cylinders") {
  auto d1 = standard(1);
  Subcomplex ends = skeleton(d1, 0);

  // D = point: the cylinder is B itself
  RelCylinder c0 = rel_cylinder(Inclusion(ends.inclusion), point());
  CHECK(c0.sset()->count(0) == 2);
  CHECK(c0.sset()->count(1) == 1);

  // D = Delta^1: square with both vertical ends collapsed
  RelCylinder c1 = rel_cylinder(Inclusion(ends.inclusion), d1);
  CHECK(c1.sset()->count(0) == 2);
  CHECK(c1.sset()->count(1) == 3);
  CHECK(c1.sset()->count(2) == 2);

  // empty A: plain product
  auto empty = empty_sset();
  SMap none(empty, d1, {});
  RelCylinder c2 = rel_cylinder(Inclusion(none), d1);
  CHECK(c2.sset()->count(0) == 4);
  CHECK(c2.sset()->count(1) == 5);
  CHECK(c2.sset()->count(2) == 2);

  // B join_A B is the cylinder over the boundary of Delta^1
  RelCylinder cb = rel_cylinder(Inclusion(ends.inclusion), boundary(1));
  Pushout wedge = pushout(Inclusion(ends.inclusion), ends.inclusion);
  CHECK(cb.sset()->count(0) == wedge.sset->count(0));
  CHECK(cb.sset()->count(1) == wedge.sset->count(1));
  CHECK(cb.sset()->top_dim() == wedge.sset->top_dim());
}

TEST_CASE("cones J and Sigma") {
  // J(point) = interval
  PointedCone j0 = cone_j(point());
  CHECK(j0.sset->count(0) == 2);
  CHECK(j0.sset->count(1) == 1);
  CHECK(j0.sset->top_dim() == 1);

  // J(Delta^1): two vertices, two edges, one triangle
  PointedCone j1 = cone_j(standard(1));
  CHECK(j1.sset->count(0) == 2);
  CHECK(j1.sset->count(1) == 2);
  CHECK(j1.sset->count(2) == 1);

  // J of the boundary of Delta^1: wedge of two edges
  PointedCone jb = cone_j(boundary(1));
  CHECK(jb.sset->count(0) == 2);
  CHECK(jb.sset->count(1) == 2);
  CHECK(jb.sset->count(2) == 0);

  // Sigma(point) = interval
  PointedCone s0 = cone_sigma(point());
  CHECK(s0.sset->count(0) == 2);
  CHECK(s0.sset->count(1) == 1);

  // Sigma(Delta^1): the square with both ends collapsed keeps the two
  // vertical edges and the diagonal, and both triangles
  PointedCone s1 = cone_sigma(standard(1));
  CHECK(s1.sset->count(0) == 2);
  CHECK(s1.sset->count(1) == 3);
  CHECK(s1.sset->count(2) == 2);

  CHECK_THROWS_AS(cone_j(empty_sset()), InputError);
  CHECK_THROWS_AS(cone_sigma(empty_sset()), InputError);
}

TEST_CASE("nerves of categories") {
  // poset 0 < 1: the interval
  Category chain = Category::from_poset({"p0", "p1"}, {{"p0", "p1"}});
  auto n1 = nerve(chain, 3);
  CHECK(n1->count(0) == 2);
  CHECK(n1->count(1) == 1);
  CHECK(n1->count(2) == 0);

  // one object, morphisms {e, s} with s.s = e: one cell per dimension
  Category bz2 = Category::make(
      {"*"}, {{"e", 0, 0}, {"s", 0, 0}},
      {{"e", "e", "e"}, {"e", "s", "s"}, {"s", "e", "s"}, {"s", "s", "e"}}, {{"*", "e"}});
  auto nb = nerve(bz2, 3);
  CHECK(nb->count(0) == 1);
  CHECK(nb->count(1) == 1);
  CHECK(nb->count(2) == 1);
  CHECK(nb->count(3) == 1);
  CHECK(nb->validate());

  // two-object discrete category
  Category disc = Category::from_poset({"a", "b"}, {});
  auto nd = nerve(disc, 2);
  CHECK(nd->count(0) == 2);
  CHECK(nd->count(1) == 0);

  // composition tables violating the identity laws are rejected
  CHECK_THROWS_AS(Category::make({"*"}, {{"e", 0, 0}, {"s", 0, 0}},
                                 {{"e", "e", "e"}, {"e", "s", "e"}, {"s", "e", "s"},
                                  {"s", "s", "e"}},
                                 {{"*", "e"}}),
                  InputError);
  // non-associative tables are rejected
  CHECK_THROWS_AS(
      Category::make({"*"}, {{"e", 0, 0}, {"a", 0, 0}, {"b", 0, 0}},
                     {{"e", "e", "e"}, {"e", "a", "a"}, {"a", "e", "a"}, {"e", "b", "b"},
                      {"b", "e", "b"}, {"a", "a", "b"}, {"a", "b", "e"}, {"b", "a", "a"},
                      {"b", "b", "a"}},
                     {{"*", "e"}}),
      InputError);
}

TEST_CASE("nerve chain refs normalize identities") {
  Category bz2 = Category::make(
      {"*"}, {{"e", 0, 0}, {"s", 0, 0}},
      {{"e", "e", "e"}, {"e", "s", "s"}, {"s", "e", "s"}, {"s", "s", "e"}}, {{"*", "e"}});
  NerveSSet nv = NerveSSet::make(bz2, 3);
  int s = nv.category().mor_index("s");
  int e = nv.category().mor_index("e");
  SimplexRef ss = nv.chain_ref({s, s});
  CHECK(ss.degens.empty());
  SimplexRef se = nv.chain_ref({s, e});
  CHECK(se.degens == DegenWord{1});
  SimplexRef es = nv.chain_ref({e, s});
  CHECK(es.degens == DegenWord{0});
  CHECK(nv.chain_of(se) == std::vector<int>{s, e});
}

TEST_CASE("product of nerves agrees with the nerve of the product category") {
  Category chain = Category::from_poset({"p0", "p1"}, {{"p0", "p1"}});
  Category sq = Category::product(chain, chain);
  auto direct = nerve(sq, 2);
  Product viaprod = Product::make(nerve(chain, 2), nerve(chain, 2), 2);
  for (Dim n = 0; n <= 2; ++n) CHECK(direct->count(n) == viaprod.sset()->count(n));
}
