#include "dcat/solver.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace dcat {

ExtensionProblem ExtensionProblem::extend(const Inclusion& a_in_b, const SMap& partial) {
  DCAT_REQUIRE(a_in_b.src()->same_as(*partial.src()), "extend: domain mismatch");
  ExtensionProblem p;
  p.big = a_in_b.dst();
  p.target = partial.dst();
  const SSet& a = *a_in_b.src();
  for (Dim n = 0; n <= a.top_dim(); ++n)
    for (int i = 0; i < a.count(n); ++i) {
      SimplexRef im = a_in_b.map().at(SimplexId{n, i});
      DCAT_REQUIRE(!im.degenerate(), "extend: inclusion must preserve nondegeneracy");
      p.pinned.push_back({im.base, partial.at(SimplexId{n, i})});
    }
  return p;
}

namespace {

// Variable order: repeatedly schedule, among the simplices whose faces are
// all scheduled, one of maximal dimension (ties by canonical index). Higher
// simplices are placed as soon as their boundary is known, so their face
// constraints prune the search immediately.
std::vector<SimplexId> make_schedule(const SSet& b) {
  std::vector<SimplexId> out;
  Dim top = b.top_dim();
  std::vector<std::vector<int>> missing(top + 1);
  std::vector<std::vector<std::vector<std::pair<Dim, int>>>> dependents(top + 1);
  for (Dim n = 0; n <= top; ++n) {
    missing[n].assign(b.count(n), 0);
    dependents[n].resize(b.count(n));
  }
  for (Dim n = 1; n <= top; ++n)
    for (int i = 0; i < b.count(n); ++i) {
      std::set<std::pair<Dim, int>> faces;
      for (int k = 0; k <= n; ++k) {
        const SimplexRef& f = b.base_face(SimplexId{n, i}, k);
        faces.insert({f.base.dim, f.base.idx});
      }
      missing[n][i] = static_cast<int>(faces.size());
      for (const auto& f : faces) dependents[f.first][f.second].push_back({n, i});
    }
  // schedulable simplices bucketed by dimension
  std::vector<std::vector<int>> ready(top + 1);
  std::vector<std::vector<bool>> queued(top + 1);
  for (Dim n = 0; n <= top; ++n) queued[n].assign(b.count(n), false);
  for (int i = 0; i < b.count(0); ++i) ready[0].push_back(i);
  std::vector<size_t> cursor(top + 1, 0);
  int total = b.total_count();
  while (static_cast<int>(out.size()) < total) {
    Dim pick = -1;
    for (Dim n = top; n >= 0; --n) {
      // drop consumed entries lazily
      if (cursor[n] < ready[n].size()) {
        pick = n;
        break;
      }
    }
    DCAT_REQUIRE(pick >= 0, "schedule: no simplex ready");
    int idx = ready[pick][cursor[pick]++];
    out.push_back(SimplexId{pick, idx});
    for (const auto& [dn, di] : dependents[pick][idx]) {
      if (--missing[dn][di] == 0 && !queued[dn][di]) {
        queued[dn][di] = true;
        ready[dn].push_back(di);
      }
    }
  }
  return out;
}

struct Search {
  const ExtensionProblem& prob;
  const SSet& b;
  const SSet& x;
  Budget& budget;
  bool first_only;
  bool budget_hit = false;

  std::vector<SimplexId> schedule;
  std::vector<std::vector<int>> assign;     // dim -> idx -> ref index or -1
  std::vector<std::vector<bool>> pinned;    // dim -> idx
  std::vector<std::vector<int>> fiber_val;  // dim -> idx -> required D ref index
  std::vector<const RefTable*> xrefs;
  std::vector<const RefTable*> drefs;
  std::vector<std::vector<int>> out;

  Search(const ExtensionProblem& p, bool first, Budget& bud)
      : prob(p), b(*p.big), x(*p.target), budget(bud), first_only(first) {
    Dim top = b.top_dim();
    schedule = make_schedule(b);
    assign.resize(top + 1);
    pinned.resize(top + 1);
    xrefs.resize(top + 1);
    for (Dim n = 0; n <= top; ++n) {
      assign[n].assign(b.count(n), -1);
      pinned[n].assign(b.count(n), false);
      xrefs[n] = &x.refs_indexed(n);
    }
    if (prob.fiber_p) {
      const SSet& d = *prob.fiber_p->dst();
      fiber_val.resize(top + 1);
      drefs.resize(top + 1);
      for (Dim n = 0; n <= top; ++n) {
        drefs[n] = &d.refs(n);
        fiber_val[n].resize(b.count(n));
        for (int i = 0; i < b.count(n); ++i)
          fiber_val[n][i] = drefs[n]->index_of(prob.fiber_q->at(SimplexId{n, i}));
      }
    }
    for (const auto& [id, ref] : prob.pinned) {
      int xi = xrefs[id.dim]->index_of(ref);
      DCAT_REQUIRE(xi >= 0, "pinned value is not a simplex of the target");
      assign[id.dim][id.idx] = xi;
      pinned[id.dim][id.idx] = true;
    }
  }

  int image_of(const SimplexRef& r) const {
    int v = assign[r.base.dim][r.base.idx];
    DCAT_REQUIRE(v >= 0, "image_of: base unassigned");
    if (r.degens.empty()) return v;
    SimplexRef im = x.apply_word(r.degens, xrefs[r.base.dim]->refs[v]);
    return x.refs(im.dim()).index_of(im);
  }

  bool fiber_ok(Dim n, int idx, int ri) const {
    if (!prob.fiber_p) return true;
    return drefs[n]->index_of(prob.fiber_p->apply(xrefs[n]->refs[ri])) == fiber_val[n][idx];
  }

  // candidate images of the scheduled simplex; its faces are already assigned
  std::vector<int> candidates(Dim n, int idx) const {
    const RefTable& tab = *xrefs[n];
    std::vector<int> cand;
    if (n == 0) {
      for (int i = 0; i < static_cast<int>(tab.refs.size()); ++i)
        if (fiber_ok(0, idx, i)) cand.push_back(i);
      return cand;
    }
    std::vector<int> want(n + 1);
    int best_i = -1;
    size_t best_size = SIZE_MAX;
    for (int i = 0; i <= n; ++i) {
      want[i] = image_of(b.base_face(SimplexId{n, idx}, i));
      auto it = tab.by_face[i].find(want[i]);
      size_t sz = it == tab.by_face[i].end() ? 0 : it->second.size();
      if (sz < best_size) {
        best_size = sz;
        best_i = i;
      }
    }
    if (best_size == 0) return {};
    for (int ri : tab.by_face[best_i].at(want[best_i])) {
      bool ok = true;
      for (int i = 0; i <= n && ok; ++i) {
        if (i == best_i) continue;
        ok = x.refs(n - 1).index_of(x.face(tab.refs[ri], i)) == want[i];
      }
      if (ok && fiber_ok(n, idx, ri)) cand.push_back(ri);
    }
    return cand;
  }

  bool pin_consistent(Dim n, int idx) const {
    const SimplexRef& val = xrefs[n]->refs[assign[n][idx]];
    if (!fiber_ok(n, idx, assign[n][idx])) return false;
    for (int i = 0; i <= n && n >= 1; ++i) {
      int want = image_of(b.base_face(SimplexId{n, idx}, i));
      if (x.refs(n - 1).index_of(x.face(val, i)) != want) return false;
    }
    return true;
  }

  // returns true when the whole search should unwind
  bool step(size_t k) {
    if (k == schedule.size()) {
      std::vector<int> flat;
      for (Dim n = 0; n <= b.top_dim(); ++n)
        for (int i = 0; i < b.count(n); ++i) flat.push_back(assign[n][i]);
      out.push_back(std::move(flat));
      return first_only;
    }
    auto [n, idx] = schedule[k];
    if (pinned[n][idx]) {
      if (!budget.tick()) {
        budget_hit = true;
        return true;
      }
      if (!pin_consistent(n, idx)) return false;
      return step(k + 1);
    }
    for (int ri : candidates(n, idx)) {
      if (!budget.tick()) {
        budget_hit = true;
        return true;
      }
      assign[n][idx] = ri;
      if (step(k + 1)) return true;
    }
    assign[n][idx] = -1;
    return false;
  }
};

}  // namespace

MapList solve(const ExtensionProblem& p, bool first_only, Budget& budget) {
  MapList out;
  if (p.big->empty()) {
    out.maps.push_back(SMap(p.big, p.target, {}));
    return out;
  }
  Search s(p, first_only, budget);
  s.step(0);
  out.status = s.budget_hit ? SearchStatus::BudgetExceeded : SearchStatus::Complete;
  std::sort(s.out.begin(), s.out.end());
  const SSet& b = *p.big;
  for (const auto& flat : s.out) {
    std::vector<std::vector<SimplexRef>> assign(b.top_dim() + 1);
    size_t k = 0;
    for (Dim n = 0; n <= b.top_dim(); ++n)
      for (int i = 0; i < b.count(n); ++i) assign[n].push_back(s.xrefs[n]->refs[flat[k++]]);
    out.maps.push_back(SMap(p.big, p.target, std::move(assign)));
  }
  return out;
}

MapList enumerate_maps(const SSetPtr& k, const SSetPtr& x, Budget& budget) {
  ExtensionProblem p;
  p.big = k;
  p.target = x;
  return solve(p, false, budget);
}

Encoded encode(const SMap& m) {
  Encoded e;
  const SSet& src = *m.src();
  const SSet& dst = *m.dst();
  for (Dim n = 0; n <= src.top_dim(); ++n)
    for (int i = 0; i < src.count(n); ++i) {
      int v = dst.refs(n).index_of(m.at(SimplexId{n, i}));
      DCAT_REQUIRE(v >= 0, "encode: value not interned");
      e.vals.push_back(v);
    }
  return e;
}

SMap decode(const SSetPtr& src, const SSetPtr& dst, const Encoded& e) {
  std::vector<std::vector<SimplexRef>> assign(src->top_dim() + 1);
  size_t k = 0;
  for (Dim n = 0; n <= src->top_dim(); ++n)
    for (int i = 0; i < src->count(n); ++i)
      assign[n].push_back(dst->refs(n).refs[e.vals[k++]]);
  return SMap(src, dst, std::move(assign));
}

Answer has_rlp(const LiftingSquare& sq, Budget& budget) {
  ExtensionProblem p = ExtensionProblem::extend(*sq.incl, *sq.top);
  p.fiber_p = sq.p;
  p.fiber_q = sq.bottom;
  MapList r = solve(p, true, budget);
  if (!r.maps.empty()) return Answer::Yes;
  return r.complete() ? Answer::No : Answer::Inconclusive;
}

namespace {

Subcomplex horn_in_standard(const SSetPtr& full, const SSetPtr& h) {
  std::vector<std::string> names;
  for (Dim d = 0; d <= h->top_dim(); ++d)
    for (int k = 0; k < h->count(d); ++k) names.push_back(h->name(d, k));
  return subcomplex(full, names);
}

Answer horn_check(const SSetPtr& x, Dim m, bool inner_only, Budget& budget,
                  HornCounterexample* cx) {
  bool stalled = false;
  for (Dim n = 2; n <= m; ++n) {
    auto full = standard(n);
    for (int i = 0; i <= n; ++i) {
      if (inner_only && (i == 0 || i == n)) continue;
      Subcomplex hs = horn_in_standard(full, horn(n, i));
      MapList horns = enumerate_maps(hs.sset, x, budget);
      if (!horns.complete()) stalled = true;
      for (const SMap& u : horns.maps) {
        ExtensionProblem p = ExtensionProblem::extend(Inclusion(hs.inclusion), u);
        MapList fill = solve(p, true, budget);
        if (!fill.complete()) stalled = true;
        if (fill.maps.empty() && fill.complete()) {
          if (cx) *cx = {n, i, u};
          return Answer::No;
        }
      }
    }
  }
  return stalled ? Answer::Inconclusive : Answer::Yes;
}

}  // namespace

Answer is_quasicategory_up_to(const SSetPtr& x, Dim m, Budget& budget, HornCounterexample* cx) {
  return horn_check(x, m, true, budget, cx);
}

Answer is_kan_up_to(const SSetPtr& x, Dim m, Budget& budget, HornCounterexample* cx) {
  return horn_check(x, m, false, budget, cx);
}

Quasicat certify(const SSetPtr& x, Dim m, Budget& budget) {
  Answer a = is_quasicategory_up_to(x, m, budget);
  if (a == Answer::No) throw CertificationError("target is not a quasi-category");
  if (a == Answer::Inconclusive)
    throw CertificationError("quasi-category check exceeded the budget");
  return Quasicat{x, m, INT_MAX, "exhaustive"};
}

Quasicat nerve_certificate(const SSetPtr& x, Dim complete_through) {
  return Quasicat{x, INT_MAX, complete_through, "nerve"};
}

Answer is_inner_fibration_up_to(const SMap& p, Dim m, Budget& budget, HornCounterexample* cx) {
  bool stalled = false;
  for (Dim n = 2; n <= m; ++n) {
    auto full = standard(n);
    for (int i = 1; i < n; ++i) {
      Subcomplex hs = horn_in_standard(full, horn(n, i));
      Inclusion horn_in(hs.inclusion);
      MapList tops = enumerate_maps(hs.sset, p.src(), budget);
      if (!tops.complete()) stalled = true;
      for (const SMap& u : tops.maps) {
        ExtensionProblem down = ExtensionProblem::extend(horn_in, SMap::compose(p, u));
        MapList bottoms = solve(down, false, budget);
        if (!bottoms.complete()) stalled = true;
        for (const SMap& v : bottoms.maps) {
          LiftingSquare sq{&p, &u, &v, &horn_in};
          Answer lift = has_rlp(sq, budget);
          if (lift == Answer::Inconclusive) stalled = true;
          if (lift == Answer::No) {
            if (cx) *cx = {n, i, u};
            return Answer::No;
          }
        }
      }
    }
  }
  return stalled ? Answer::Inconclusive : Answer::Yes;
}

Answer is_cocartesian_edge(const SMap& p, const SimplexRef& e, Dim m, Budget& budget) {
  DCAT_REQUIRE(e.dim() == 1, "is_cocartesian_edge: not an edge");
  bool stalled = false;
  for (Dim n = 2; n <= m; ++n) {
    auto full = standard(n);
    Subcomplex hs = horn_in_standard(full, horn(n, 0));
    Inclusion horn_in(hs.inclusion);
    ExtensionProblem tops_p;
    tops_p.big = hs.sset;
    tops_p.target = p.src();
    tops_p.pinned.push_back({hs.sset->require("01"), e});
    MapList tops = solve(tops_p, false, budget);
    if (!tops.complete()) stalled = true;
    for (const SMap& u : tops.maps) {
      ExtensionProblem down = ExtensionProblem::extend(horn_in, SMap::compose(p, u));
      MapList bottoms = solve(down, false, budget);
      if (!bottoms.complete()) stalled = true;
      for (const SMap& v : bottoms.maps) {
        LiftingSquare sq{&p, &u, &v, &horn_in};
        Answer lift = has_rlp(sq, budget);
        if (lift == Answer::Inconclusive) stalled = true;
        if (lift == Answer::No) return Answer::No;
      }
    }
  }
  return stalled ? Answer::Inconclusive : Answer::Yes;
}

std::vector<std::vector<int>> pi0(const SSetPtr& x) {
  int n0 = x->count(0);
  std::vector<int> up(n0);
  for (int i = 0; i < n0; ++i) up[i] = i;
  std::function<int(int)> find = [&](int a) {
    while (up[a] != a) a = up[a] = up[up[a]];
    return a;
  };
  for (int e = 0; e < x->count(1); ++e) {
    int s = x->base_face(SimplexId{1, e}, 1).base.idx;
    int t = x->base_face(SimplexId{1, e}, 0).base.idx;
    up[find(s)] = find(t);
  }
  std::vector<std::vector<int>> buckets(n0);
  for (int i = 0; i < n0; ++i) buckets[find(i)].push_back(i);
  std::vector<std::vector<int>> out;
  for (auto& c : buckets)
    if (!c.empty()) out.push_back(std::move(c));
  return out;
}

}  // namespace dcat
