#include <set>

#include "dcat/verify.hpp"

namespace dcat {

namespace {

int unary_of(const OperadData& o) {
  for (int ob = 0; ob < o.total_cat.object_count(); ++ob)
    if (o.obj_arity[ob] == 1) return ob;
  throw InternalError("no unary object");
}

}  // namespace

Report verify_operad_suite(Budget& budget, bool include_heavy) {
  Report rep;
  const int arity = 3;
  auto base = std::make_shared<NerveSSet>(NerveSSet::make(FinStar{arity}.category(), 2));
  OperadData comm = operad_from_colored(comm_operad(arity), arity, 2, 2, budget, base);
  OperadData ass = operad_from_colored(ass_operad(arity), arity, 2, 2, budget, base);
  OperadData triv = operad_from_colored(triv_operad(arity), arity, 2, 2, budget, base);
  rep.add("operad.comm.validates", comm.validation.all_passed(), "", {{"arity", arity}});
  rep.add("operad.ass.validates", ass.validation.all_passed(), "", {{"arity", arity}});
  rep.add("operad.triv.validates", triv.validation.all_passed(), "", {{"arity", arity}});

  rep.add("operad.comm.is-0-operad", is_d_operad(comm, 0, budget).answer);
  rep.add("operad.ass.is-1-operad", is_d_operad(ass, 1, budget).answer);
  rep.add("operad.ass.not-0-operad",
          is_d_operad(ass, 0, budget).answer == Answer::No);
  {
    int x = unary_of(triv);
    MultiMapSpace m2 = multi_mapping_space(triv, {x, x}, x, 1, budget);
    rep.add("operad.triv.binary-mul-empty", m2.sset()->empty());
    int xa = unary_of(ass);
    MultiMapSpace a2 = multi_mapping_space(ass, {xa, xa}, xa, 1, budget);
    rep.add("operad.ass.binary-mul-two-points",
            a2.sset()->count(0) == 2 && a2.sset()->top_dim() == 0);
  }

  // h_0(Ass) is Comm over the base
  TruncatedOperad h0ass = h_d_operad(ass, 0, 2, budget);
  rep.add("operad.h0-ass.revalidates", h0ass.data.validation.all_passed());
  rep.add("operad.h0-ass.iso-comm",
          iso_check(h0ass.data.total(), comm.total(), 2, budget, &h0ass.data.proj,
                    &comm.proj)
              .has_value(),
          "", {{"arity", arity}});

  // unit maps preserve inert edges; truncations re-validate
  struct Named {
    std::string tag;
    OperadData* o;
  };
  std::vector<Named> stock = {{"comm", &comm}, {"ass", &ass}, {"triv", &triv}};
  for (auto& [tag, o] : stock) {
    for (Dim d : {-1, 0}) {
      TruncatedOperad h = h_d_operad(*o, d, 2, budget);
      rep.add("operad.h" + std::to_string(d) + "." + tag + ".revalidates",
              h.data.validation.all_passed());
      rep.add("operad.h" + std::to_string(d) + "." + tag + ".theta-inert",
              preserves_inerts(*o, h.data, h.theta, budget));
    }
  }
  // the d = 1 layer is the expensive one; the associative operad is included
  // only in the heavy configuration
  for (auto& [tag, o] : stock) {
    if (tag == "ass" && !include_heavy) continue;
    TruncatedOperad h = h_d_operad(*o, 1, 2, budget);
    rep.add("operad.h1." + tag + ".revalidates", h.data.validation.all_passed());
    rep.add("operad.h1." + tag + ".theta-inert",
            preserves_inerts(*o, h.data, h.theta, budget));
    rep.add("operad.h1." + tag + ".matches-bracket-truncation", h.ex_to_nerve.is_iso());
    rep.add("operad.h1." + tag + ".is-1-operad", is_d_operad(h.data, 1, budget).answer);
  }

  // multi-mapping comparisons
  {
    int xa = unary_of(ass);
    rep.merge("operad.mul.ass.d0", mul_truncation_verify(ass, 0, {xa, xa}, xa, 1, budget));
  }
  {
    auto base2 = std::make_shared<NerveSSet>(NerveSSet::make(FinStar{2}.category(), 3));
    OperadData comm2 = operad_from_colored(comm_operad(2), 2, 3, 2, budget, base2);
    OperadData triv2 = operad_from_colored(triv_operad(2), 2, 3, 2, budget, base2);
    int xc = unary_of(comm2), xt = unary_of(triv2);
    rep.merge("operad.mul.comm.d-1",
              mul_truncation_verify(comm2, -1, {xc, xc}, xc, 1, budget));
    rep.merge("operad.mul.comm.d0", mul_truncation_verify(comm2, 0, {xc, xc}, xc, 1, budget));
    rep.merge("operad.mul.comm.d1", mul_truncation_verify(comm2, 1, {xc, xc}, xc, 1, budget));
    rep.merge("operad.mul.triv.d0", mul_truncation_verify(triv2, 0, {xt, xt}, xt, 1, budget));
    rep.merge("operad.mul.triv.d1", mul_truncation_verify(triv2, 1, {xt, xt}, xt, 1, budget));
  }

  // truncating the total and truncating the operad genuinely differ at d = 0
  {
    OperadData c1 = operad_from_colored(comm_operad(1), 1, 3, 2, budget);
    LowTruncation t0 = h_low(c1.total_cert, 0, budget);
    TruncatedOperad h0 = h_d_operad(c1, 0, 2, budget);
    rep.add("operad.warning.h0-differs",
            t0.sset->count(0) == 1 && h0.data.total()->count(0) == 2,
            "fiberwise truncation keeps the two objects");
  }
  return rep;
}

Report verify_alg_suite(Budget& budget) {
  Report rep;
  auto base = std::make_shared<NerveSSet>(NerveSSet::make(FinStar{2}.category(), 5));
  OperadData u = operad_from_colored(comm_operad(2), 2, 5, 2, budget, base);
  OperadData o_triv = operad_from_colored(triv_operad(2), 2, 2, 2, budget, base);
  OperadData o_comm = operad_from_colored(comm_operad(2), 2, 2, 2, budget, base);
  OperadData o_ass = operad_from_colored(ass_operad(2), 2, 2, 2, budget, base);

  AlgComplex a_triv = alg_complex(o_triv, u, 3, budget);
  AlgComplex a_comm = alg_complex(o_comm, u, 3, budget);
  rep.add("alg.triv-comm.single-vertex",
          a_triv.ex.sset->count(0) == 1 && a_triv.ex.sset->top_dim() == 0);
  rep.add("alg.comm-comm.single-vertex",
          a_comm.ex.sset->count(0) == 1 && a_comm.ex.sset->top_dim() == 0);

  for (auto& [tag, alg] : {std::pair<std::string, AlgComplex*>{"triv-comm", &a_triv},
                           {"comm-comm", &a_comm}}) {
    Quasicat cert = certify(alg->ex.sset, 3, budget);
    cert.complete_through = 3;
    rep.add("alg." + tag + ".is-0-category",
            is_d_category(cert, 0, 2, budget).answer, "", {{"dim", 2}});
  }

  // precomposition along theta_0: Ass -> Comm on algebra vertices
  AlgComplex a_ass = alg_complex(o_ass, u, 0, budget);
  TruncatedOperad h0 = h_d_operad(o_ass, 0, 2, budget);
  AlgComplex a_h0 = alg_complex(h0.data, u, 0, budget);
  std::set<Encoded> got, want;
  for (const SMap& vm : a_h0.vertex_maps) got.insert(encode(SMap::compose(vm, h0.theta)));
  for (const SMap& vm : a_ass.vertex_maps) want.insert(encode(vm));
  rep.add("alg.theta0-precomposition-bijection",
          got == want && got.size() == a_h0.vertex_maps.size(),
          std::to_string(a_ass.vertex_maps.size()) + " algebra vertices");
  return rep;
}

Report full_report(Budget& budget, bool include_heavy) {
  Report rep;
  rep.merge(verify_kernel_laws(budget));
  rep.merge(verify_cylinder_lemma(budget));
  rep.merge(verify_homrel_suite(budget));
  rep.merge(verify_alpha_suite(budget));
  rep.merge(verify_universal_suite(budget));
  rep.merge(verify_functor_laws(budget));
  rep.merge(verify_cocart_suite(budget));
  rep.merge(verify_operad_suite(budget, include_heavy));
  rep.merge(verify_alg_suite(budget));
  return rep;
}

}  // namespace dcat
