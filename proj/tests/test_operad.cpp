#include <set>

#include "dcat/operad.hpp"
#include "doctest.h"

using namespace dcat;

namespace {

Budget big() { return Budget{}; }

OperadData& comm3() {
  static Budget b;
  static OperadData o = operad_from_colored(comm_operad(3), 3, 2, 2, b);
  return o;
}
OperadData& ass3() {
  static Budget b;
  static OperadData o = operad_from_colored(ass_operad(3), 3, 2, 2, b);
  return o;
}
OperadData& triv3() {
  static Budget b;
  static OperadData o = operad_from_colored(triv_operad(3), 3, 2, 2, b);
  return o;
}
OperadData& comm2() {
  static Budget b;
  static OperadData o = operad_from_colored(comm_operad(2), 2, 3, 2, b);
  return o;
}

int unary_of(const OperadData& o) {
  for (int ob = 0; ob < o.total_cat.object_count(); ++ob)
    if (o.obj_arity[ob] == 1) return ob;
  throw std::runtime_error("no unary object");
}

}  // namespace

TEST_CASE("pointed maps classify as inert or active") {
  FinStar fin{3};
  // maps <2> -> <1>: four in total, two of them inert (the rho's)
  int total = 0, inert = 0;
  for (const auto& f : fin.maps_from(2)) {
    if (f.n != 1) continue;
    ++total;
    if (FinStar::inert(f)) ++inert;
  }
  CHECK(total == 4);
  CHECK(inert == 2);
  CHECK(FinStar::inert(FinStar::rho(1, 2)));
  CHECK(FinStar::inert(FinStar::rho(2, 2)));
  // the identity is both inert and active
  auto id3 = FinStar::identity(3);
  CHECK(FinStar::inert(id3));
  CHECK(FinStar::active(id3));
  // the unique map <0> -> <1> is active but not inert
  FinStar::PMap zero{0, 1, {}};
  CHECK(FinStar::active(zero));
  CHECK(!FinStar::inert(zero));
}

TEST_CASE("the commutative operad is the base itself") {
  Budget b = big();
  OperadData& o = comm3();
  CHECK(o.validation.all_passed());
  // every mapping set a singleton: the projection is an isomorphism
  CHECK(o.proj.is_iso());
  DOperadResult d0 = is_d_operad(o, 0, b);
  CHECK(d0.answer == Answer::Yes);
  // a singleton multi-mapping space in every arity
  int x = unary_of(o);
  MultiMapSpace m2 = multi_mapping_space(o, {x, x}, x, 1, b);
  CHECK(m2.sset()->count(0) == 1);
  CHECK(m2.sset()->top_dim() == 0);
}

TEST_CASE("the associative operad is a 1-operad but not a 0-operad") {
  Budget b = big();
  OperadData& o = ass3();
  CHECK(o.validation.all_passed());
  CHECK(is_d_operad(o, 1, b).answer == Answer::Yes);
  DOperadResult d0 = is_d_operad(o, 0, b);
  CHECK(d0.answer == Answer::No);
  int x = unary_of(o);
  MultiMapSpace m2 = multi_mapping_space(o, {x, x}, x, 1, b);
  CHECK(m2.sset()->count(0) == 2);
  CHECK(m2.sset()->top_dim() == 0);
}

TEST_CASE("the trivial operad has empty higher multi-mapping spaces") {
  Budget b = big();
  OperadData& o = triv3();
  CHECK(o.validation.all_passed());
  int x = unary_of(o);
  MultiMapSpace m2 = multi_mapping_space(o, {x, x}, x, 1, b);
  CHECK(m2.sset()->empty());
  MultiMapSpace m1 = multi_mapping_space(o, {x}, x, 1, b);
  CHECK(m1.sset()->count(0) == 1);
}

TEST_CASE("the empty operad is a (-1)-operad") {
  Budget b = big();
  OperadData o;
  o.fin = FinStar{2};
  o.total_cat = Category::make({}, {}, {}, {});
  o.base_nerve = std::make_shared<NerveSSet>(NerveSSet::make(o.fin.category(), 2));
  o.total_nerve = std::make_shared<NerveSSet>(NerveSSet::make(o.total_cat, 2));
  o.proj = SMap(o.total(), o.base(), {});
  o.total_cert = nerve_certificate(o.total(), INT_MAX);
  o.dim_cap = 2;
  o.bound = 2;
  CHECK(is_d_operad(o, -1, b).answer == Answer::Yes);
  // while a nonempty non-isomorphic projection is not
  CHECK(is_d_operad(ass3(), -1, b).answer == Answer::No);
  CHECK(is_d_operad(comm3(), -1, b).answer == Answer::Yes);
}

TEST_CASE("h_0 of the associative operad is the commutative operad") {
  Budget b = big();
  OperadData& oa = ass3();
  TruncatedOperad h0 = h_d_operad(oa, 0, 2, b);
  CHECK(h0.data.validation.all_passed());
  CHECK(is_d_operad(h0.data, 0, b).answer == Answer::Yes);
  OperadData& oc = comm3();
  auto iso = iso_check(h0.data.total(), oc.total(), 2, b, &h0.data.proj, &oc.proj);
  CHECK(iso.has_value());
  CHECK(preserves_inerts(oa, h0.data, h0.theta, b) == Answer::Yes);
}

TEST_CASE("h_d fixes an operad that is already a d-operad") {
  Budget b = big();
  OperadData& oc = comm2();
  TruncatedOperad h0 = h_d_operad(oc, 0, 2, b);
  CHECK(h0.theta.is_iso());
  TruncatedOperad h1 = h_d_operad(oc, 1, 3, b);
  CHECK(h1.theta.is_iso());
  CHECK(h1.data.validation.all_passed());
  // the bracket truncation agrees with the re-derived nerve degree-wise
  CHECK(h1.ex_to_nerve.is_iso());
}

TEST_CASE("h_{-1} collapses to the base") {
  Budget b = big();
  TruncatedOperad hm = h_d_operad(ass3(), -1, 2, b);
  CHECK(hm.data.proj.is_iso());
  CHECK(is_d_operad(hm.data, -1, b).answer == Answer::Yes);
  CHECK(hm.data.validation.all_passed());
}

TEST_CASE("operad maps preserve inert edges; a corrupted one fails") {
  Budget b = big();
  // the unique map Triv -> Comm over the base
  OperadData& ot = triv3();
  OperadData& oc = comm3();
  std::vector<int> on_objects(ot.total_cat.object_count());
  std::vector<int> on_mors(ot.total_cat.mor_count());
  for (int ob = 0; ob < ot.total_cat.object_count(); ++ob)
    on_objects[ob] = oc.total_cat.object_index(ot.total_cat.object(ob));
  for (int m = 0; m < ot.total_cat.mor_count(); ++m) {
    int found = -1;
    for (int mm : oc.total_cat.homset(on_objects[ot.total_cat.mor(m).src],
                                      on_objects[ot.total_cat.mor(m).dst]))
      if (oc.mor_base[mm] == ot.mor_base[m]) found = mm;
    REQUIRE(found >= 0);
    on_mors[m] = found;
  }
  SMap f = NerveSSet::induced(*ot.total_nerve, *oc.total_nerve, on_objects, on_mors);
  CHECK(preserves_inerts(ot, oc, f, b) == Answer::Yes);

  // the idempotent operad has a non-coCartesian edge parallel to each inert
  // lift; post-composing every component with p is a functor over the base
  // that swaps them in
  OperadData oe = operad_from_colored(idempotent_operad(), 2, 3, 2, b);
  CHECK(oe.validation.all_passed());
  // post-composing every component of a non-invertible morphism with p is a
  // functor over the base (invertible morphisms, identities included, must
  // stay put); it swaps each inert lift for its non-coCartesian parallel
  auto invertible = [&](int m) {
    const auto& mor = oe.total_cat.mor(m);
    for (int w : oe.total_cat.homset(mor.dst, mor.src))
      if (oe.total_cat.compose(w, m) == oe.total_cat.identity_of(mor.src) &&
          oe.total_cat.compose(m, w) == oe.total_cat.identity_of(mor.dst))
        return true;
    return false;
  };
  std::vector<int> eo(oe.total_cat.object_count());
  std::vector<int> em(oe.total_cat.mor_count());
  for (int ob = 0; ob < oe.total_cat.object_count(); ++ob) eo[ob] = ob;
  for (int m = 0; m < oe.total_cat.mor_count(); ++m) {
    if (invertible(m)) {
      em[m] = m;
      continue;
    }
    const std::string& id = oe.total_cat.mor(m).id;
    std::string head = id.substr(0, id.rfind('|') + 1);
    std::string comps = id.substr(id.rfind('|') + 1);
    std::string out;
    for (size_t i = 0; i < comps.size();) {
      if (comps.compare(i, 2, "id") == 0) {
        out += "p";
        i += 2;
      } else {
        out += comps[i];
        i += 1;
      }
    }
    em[m] = oe.total_cat.mor_index(head + out);
  }
  SMap g = NerveSSet::induced(*oe.total_nerve, *oe.total_nerve, eo, em);
  CHECK(preserves_inerts(oe, oe, g, b) == Answer::No);
}

TEST_CASE("algebra complexes") {
  Budget b = big();
  // targets need completeness above the alg cap; all share one base nerve
  auto base = std::make_shared<NerveSSet>(NerveSSet::make(FinStar{2}.category(), 5));
  OperadData u = operad_from_colored(comm_operad(2), 2, 5, 2, b, base);
  OperadData o_triv = operad_from_colored(triv_operad(2), 2, 2, 2, b, base);
  OperadData o_comm = operad_from_colored(comm_operad(2), 2, 2, 2, b, base);
  OperadData o_ass = operad_from_colored(ass_operad(2), 2, 2, 2, b, base);

  AlgComplex a_triv = alg_complex(o_triv, u, 3, b);
  CHECK(a_triv.status == SearchStatus::Complete);
  for (Dim n = 0; n <= 3; ++n) CHECK(a_triv.ex.sset->count(n) == (n == 0 ? 1 : 0));

  AlgComplex a_comm = alg_complex(o_comm, u, 3, b);
  CHECK(a_comm.ex.sset->count(0) == 1);
  CHECK(a_comm.ex.sset->top_dim() == 0);

  // both algebra complexes are 0-categories through dimension 2
  for (AlgComplex* a : {&a_triv, &a_comm}) {
    Quasicat cert = certify(a->ex.sset, 3, b);
    cert.complete_through = 3;
    CHECK(is_d_category(cert, 0, 2, b).yes());
  }

  // precomposition along theta_0: Ass -> Comm is a bijection on vertices
  AlgComplex a_ass = alg_complex(o_ass, u, 0, b);
  TruncatedOperad h0 = h_d_operad(o_ass, 0, 2, b);
  AlgComplex a_h0 = alg_complex(h0.data, u, 0, b);
  CHECK(a_h0.vertex_maps.size() == a_ass.vertex_maps.size());
  std::set<Encoded> got;
  for (const SMap& vm : a_h0.vertex_maps) got.insert(encode(SMap::compose(vm, h0.theta)));
  CHECK(got.size() == a_ass.vertex_maps.size());
  std::set<Encoded> want;
  for (const SMap& vm : a_ass.vertex_maps) want.insert(encode(vm));
  CHECK(got == want);
}

TEST_CASE("multi-mapping truncation comparisons") {
  Budget b = big();
  OperadData& oa = ass3();
  int xa = unary_of(oa);
  CHECK(mul_truncation_verify(oa, 0, {xa, xa}, xa, 1, b).all_passed());

  OperadData& oc = comm2();
  int xc = unary_of(oc);
  CHECK(mul_truncation_verify(oc, 0, {xc, xc}, xc, 1, b).all_passed());
  CHECK(mul_truncation_verify(oc, 1, {xc, xc}, xc, 1, b).all_passed());
  CHECK(mul_truncation_verify(oc, -1, {xc, xc}, xc, 1, b).all_passed());

  OperadData ot = operad_from_colored(triv_operad(2), 2, 3, 2, b);
  int xt = unary_of(ot);
  CHECK(mul_truncation_verify(ot, 0, {xt, xt}, xt, 1, b).all_passed());
  CHECK(mul_truncation_verify(ot, 1, {xt, xt}, xt, 1, b).all_passed());
}

TEST_CASE("truncating the total and the operad differ at d = 0") {
  Budget b = big();
  // over arities {0,1} the two objects become isomorphic in the preorder
  // sense, so h_0 of the total collapses them; the operadic h_0 keeps them
  OperadData o1 = operad_from_colored(comm_operad(1), 1, 3, 2, b);
  LowTruncation t0 = h_low(o1.total_cert, 0, b);
  TruncatedOperad h0 = h_d_operad(o1, 0, 2, b);
  CHECK(t0.sset->count(0) == 1);
  CHECK(h0.data.total()->count(0) == 2);
}

TEST_CASE("tuple objects are unique for one-color operads") {
  Budget b = big();
  OperadData& o = ass3();
  int x = unary_of(o);
  auto tuples = tuple_objects(o, {x, x});
  CHECK(tuples.size() == 1);
  // and the multi-mapping space does not depend on an arbitrary choice
  MultiMapSpace m = multi_mapping_space(o, {x, x}, x, 1, b);
  CHECK(m.tuple_obj == tuples.front());
}
