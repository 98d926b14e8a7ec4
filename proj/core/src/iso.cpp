#include "dcat/iso.hpp"

#include <algorithm>

namespace dcat {

namespace {

struct IsoSearch {
  const SSet& a;
  const SSet& b;
  Dim cap;
  Budget& budget;
  const SMap* fiber_a;
  const SMap* fiber_b;

  std::vector<std::vector<int>> assign;  // dim -> a idx -> b idx
  std::vector<std::vector<bool>> used;   // dim -> b idx
  bool found = false;
  bool budget_hit = false;

  // image ref of an a-ref under the partial assignment
  SimplexRef image(const SimplexRef& r) const {
    int v = assign[r.base.dim][r.base.idx];
    DCAT_REQUIRE(v >= 0, "iso image: base unassigned");
    return b.apply_word(r.degens, SimplexRef{{}, SimplexId{r.base.dim, v}});
  }

  bool fiber_ok(Dim n, int ai, int bi) const {
    if (!fiber_a) return true;
    return fiber_a->at(SimplexId{n, ai}) == fiber_b->at(SimplexId{n, bi});
  }

  bool level(Dim n) {
    if (n > cap) {
      found = true;
      return true;
    }
    return pick(n, 0);
  }

  bool pick(Dim n, int ai) {
    if (ai == a.count(n)) return level(n + 1);
    if (n == 0) {
      for (int bi = 0; bi < b.count(0); ++bi) {
        if (used[0][bi] || !fiber_ok(0, ai, bi)) continue;
        if (!budget.tick()) {
          budget_hit = true;
          return true;
        }
        used[0][bi] = true;
        assign[0][ai] = bi;
        if (pick(n, ai + 1)) return true;
        used[0][bi] = false;
      }
      assign[0][ai] = -1;
      return false;
    }
    // higher simplices are determined by their faces
    std::vector<int> want(n + 1);
    const RefTable& blo = b.refs(n - 1);
    for (int i = 0; i <= n; ++i) {
      want[i] = blo.index_of(image(a.base_face(SimplexId{n, ai}, i)));
      DCAT_REQUIRE(want[i] >= 0, "iso: face image not interned");
    }
    const RefTable& tb = b.refs_indexed(n);
    auto it = tb.by_face[0].find(want[0]);
    if (it == tb.by_face[0].end()) return false;
    for (int ri : it->second) {
      const SimplexRef& cand = tb.refs[ri];
      if (cand.degenerate()) continue;
      int bi = cand.base.idx;
      if (used[n][bi] || !fiber_ok(n, ai, bi)) continue;
      bool ok = true;
      for (int i = 1; i <= n && ok; ++i)
        ok = blo.index_of(b.base_face(cand.base, i)) == want[i];
      if (!ok) continue;
      if (!budget.tick()) {
        budget_hit = true;
        return true;
      }
      used[n][bi] = true;
      assign[n][ai] = bi;
      if (pick(n, ai + 1)) return true;
      used[n][bi] = false;
    }
    assign[n][ai] = -1;
    return false;
  }
};

}  // namespace

std::optional<SMap> iso_check(const SSetPtr& a, const SSetPtr& b, Dim cap, Budget& budget,
                              const SMap* fiber_a, const SMap* fiber_b) {
  if (cap < 0) cap = std::max(a->top_dim(), b->top_dim());
  for (Dim n = 0; n <= cap; ++n)
    if (a->count(n) != b->count(n)) return std::nullopt;
  if (a->empty()) return SMap(a, b, {});
  IsoSearch s{*a, *b, std::min(cap, a->top_dim()), budget, fiber_a, fiber_b, {}, {}};
  s.assign.resize(s.cap + 1);
  s.used.resize(s.cap + 1);
  for (Dim n = 0; n <= s.cap; ++n) {
    s.assign[n].assign(a->count(n), -1);
    s.used[n].assign(b->count(n), false);
  }
  s.level(0);
  if (s.budget_hit) throw BudgetError("iso search exceeded the budget");
  if (!s.found) return std::nullopt;
  SMap m = make_map(a, b, [&](SimplexId id) {
    return SimplexRef{{}, SimplexId{id.dim, s.assign[id.dim][id.idx]}};
  });
  std::string err;
  DCAT_REQUIRE(m.validate(&err), "iso witness not simplicial: " + err);
  return m;
}

}  // namespace dcat
