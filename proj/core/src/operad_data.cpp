#include <algorithm>
#include <numeric>

#include "dcat/operad.hpp"

namespace dcat {

namespace {

std::string tuple_name(const ColoredOperad& p, const std::vector<int>& t) {
  std::string s = "[";
  for (size_t i = 0; i < t.size(); ++i) {
    if (i) s += ",";
    s += p.color(t[i]);
  }
  return s + "]";
}

struct MorData {
  FinStar::PMap f;
  std::vector<int> comps;  // operation per target position
};

std::string mor_name(const ColoredOperad& p, const std::string& src, const std::string& dst,
                     const MorData& m) {
  std::string s = src + ">" + dst + "|" + FinStar::mor_id(m.f) + "|";
  for (size_t j = 0; j < m.comps.size(); ++j) {
    if (j) s += ",";
    s += p.op(m.comps[j]).id;
  }
  return s;
}

}  // namespace

int OperadData::lift_for(int obj, const FinStar::PMap& f) const {
  for (const auto& l : inert_lifts)
    if (l.obj == obj && l.f == f) return l.mor;
  throw InternalError("no recorded inert lift");
}

SimplexRef OperadData::base_edge(const FinStar::PMap& f) const {
  return base_nerve->chain_ref({base_nerve->category().mor_index(FinStar::mor_id(f))});
}

Answer OperadData::edge_inert(const SimplexRef& e, Budget& budget) const {
  SimplexRef down = proj.apply(e);
  FinStar::PMap f;
  if (down.degenerate()) {
    int n = obj_arity[/* vertex object */ base_nerve->category().object_index(
        base_nerve->sset()->name(down.base))];
    (void)n;
    f = FinStar::identity(0);  // identities are inert; the arity is irrelevant here
  } else {
    std::vector<int> ch = base_nerve->chain_of(down);
    DCAT_REQUIRE(ch.size() == 1, "edge projects to a longer chain");
    // recover the pointed map from its id
    f = FinStar::PMap{};
    const std::string& id = base_nerve->category().mor(ch[0]).id;
    size_t gt = id.find('>'), co = id.find(':');
    f.m = std::stoi(id.substr(0, gt));
    f.n = std::stoi(id.substr(gt + 1, co - gt - 1));
    for (size_t i = co + 1; i < id.size(); ++i) f.img.push_back(id[i] - '0');
    if (!FinStar::inert(f)) return Answer::No;
  }
  return is_cocartesian_edge(proj, e, bound, budget);
}

namespace {

struct OpCat {
  Category cat;
  std::vector<FinStar::PMap> mor_base;
  std::vector<int> obj_arity;
  std::vector<std::vector<int>> obj_tuple;
};

OpCat build_operator_category(const ColoredOperad& p, const FinStar& fin) {
  OpCat out;
  std::vector<std::vector<int>> tuples;
  for (int n = 0; n <= fin.arity_cap; ++n) {
    std::vector<int> cur(n, 0);
    std::function<void(int)> rec = [&](int i) {
      if (i == n) {
        tuples.push_back(cur);
        return;
      }
      for (int c = 0; c < p.color_count(); ++c) {
        cur[i] = c;
        rec(i + 1);
      }
    };
    rec(0);
  }
  std::vector<std::string> objects;
  std::map<std::vector<int>, int> tuple_index;
  for (const auto& t : tuples) {
    tuple_index[t] = static_cast<int>(objects.size());
    objects.push_back(tuple_name(p, t));
  }

  std::vector<Category::Mor> mors;
  std::vector<MorData> data;
  std::map<std::string, int> mor_lookup;
  for (int s = 0; s < static_cast<int>(tuples.size()); ++s) {
    const auto& a = tuples[s];
    int m = static_cast<int>(a.size());
    for (const auto& f : fin.maps_from(m)) {
      for (int t = 0; t < static_cast<int>(tuples.size()); ++t) {
        const auto& b = tuples[t];
        if (static_cast<int>(b.size()) != f.n) continue;
        // per-position operation choices
        std::vector<std::vector<int>> choices(f.n);
        bool possible = true;
        for (int j = 1; j <= f.n && possible; ++j) {
          std::vector<int> profile;
          for (int i = 1; i <= m; ++i)
            if (f.img[i - 1] == j) profile.push_back(a[i - 1]);
          choices[j - 1] = p.mul(profile, b[j - 1]);
          if (choices[j - 1].empty()) possible = false;
        }
        if (!possible) continue;
        std::vector<int> pick(f.n, 0);
        std::function<void(int)> emit = [&](int j) {
          if (j == f.n) {
            MorData md{f, {}};
            for (int jj = 0; jj < f.n; ++jj) md.comps.push_back(choices[jj][pick[jj]]);
            std::string id = mor_name(p, objects[s], objects[t], md);
            mor_lookup[id] = static_cast<int>(mors.size());
            mors.push_back({id, s, t});
            data.push_back(std::move(md));
            return;
          }
          for (int c = 0; c < static_cast<int>(choices[j].size()); ++c) {
            pick[j] = c;
            emit(j + 1);
          }
        };
        emit(0);
      }
    }
  }

  // composition: base maps compose in Fin_*; components compose through
  // gamma with the block-reordering action
  auto compose_mor = [&](int gi, int fi) -> std::string {
    const MorData& fm = data[fi];
    const MorData& gm = data[gi];
    const auto& a = tuples[mors[fi].src];
    FinStar::PMap gf = FinStar::compose(gm.f, fm.f);
    MorData out{gf, {}};
    for (int k = 1; k <= gm.f.n; ++k) {
      std::vector<int> blocks;  // j with g(j) = k, ascending
      for (int j = 1; j <= gm.f.m; ++j)
        if (gm.f.img[j - 1] == k) blocks.push_back(j);
      std::vector<int> inner;
      std::vector<int> s_order;  // source positions in block order
      for (int j : blocks) {
        inner.push_back(fm.comps[j - 1]);
        for (int i = 1; i <= fm.f.m; ++i)
          if (fm.f.img[i - 1] == j) s_order.push_back(i);
      }
      int raw = p.gamma(gm.comps[k - 1], inner);
      std::vector<int> t_order = s_order;
      std::sort(t_order.begin(), t_order.end());
      std::vector<int> perm(s_order.size());
      for (size_t t2 = 0; t2 < t_order.size(); ++t2)
        perm[t2] = static_cast<int>(
            std::find(s_order.begin(), s_order.end(), t_order[t2]) - s_order.begin());
      out.comps.push_back(p.act(raw, perm));
    }
    return mor_name(p, objects[mors[fi].src], objects[mors[gi].dst], out);
  };

  std::vector<std::array<std::string, 3>> comp;
  for (int fi = 0; fi < static_cast<int>(mors.size()); ++fi)
    for (int gi = 0; gi < static_cast<int>(mors.size()); ++gi) {
      if (mors[fi].dst != mors[gi].src) continue;
      comp.push_back({mors[gi].id, mors[fi].id, compose_mor(gi, fi)});
    }
  std::map<std::string, std::string> ids;
  for (int s = 0; s < static_cast<int>(tuples.size()); ++s) {
    MorData idm{FinStar::identity(static_cast<int>(tuples[s].size())), {}};
    for (int c : tuples[s]) idm.comps.push_back(p.identity_op(c));
    ids[objects[s]] = mor_name(p, objects[s], objects[s], idm);
  }

  out.cat = Category::make(objects, mors, comp, ids);
  out.mor_base.resize(mors.size());
  out.obj_arity.resize(tuples.size());
  out.obj_tuple = tuples;
  // Category::make keeps the given morphism order
  for (int i = 0; i < static_cast<int>(mors.size()); ++i) out.mor_base[i] = data[i].f;
  for (int s = 0; s < static_cast<int>(tuples.size()); ++s)
    out.obj_arity[s] = static_cast<int>(tuples[s].size());
  return out;
}

SMap projection_map(const OperadData& o) {
  std::vector<int> on_objects(o.total_cat.object_count());
  std::vector<int> on_mors(o.total_cat.mor_count());
  const Category& base = o.base_nerve->category();
  for (int ob = 0; ob < o.total_cat.object_count(); ++ob)
    on_objects[ob] = base.object_index(FinStar::obj_id(o.obj_arity[ob]));
  for (int m = 0; m < o.total_cat.mor_count(); ++m)
    on_mors[m] = base.mor_index(FinStar::mor_id(o.mor_base[m]));
  return NerveSSet::induced(*o.total_nerve, *o.base_nerve, on_objects, on_mors);
}

}  // namespace

CheckReport validate_operad(OperadData& o, Budget& budget) {
  CheckReport rep;
  const Category& cat = o.total_cat;
  const Category& base = o.base_nerve->category();

  // the projection is a functor over Fin_* (base maps compose correctly)
  bool functor_ok = true;
  for (int f = 0; f < cat.mor_count() && functor_ok; ++f)
    for (int g = 0; g < cat.mor_count() && functor_ok; ++g) {
      if (cat.mor(f).dst != cat.mor(g).src) continue;
      if (!(o.mor_base[cat.compose(g, f)] == FinStar::compose(o.mor_base[g], o.mor_base[f])))
        functor_ok = false;
    }
  rep.add("proj.functor", functor_ok);

  // inner fibration within the bound (exhaustive horn sweep)
  rep.add("proj.inner-fibration", is_inner_fibration_up_to(o.proj, o.bound, budget));

  // the total is a 1-category in the strict sense, so all mapping spaces of
  // the nerve are discrete
  Answer onecat = is_d_category(o.total_cert, 1, o.bound, budget).answer;
  rep.add("total.1-category", onecat);

  // inert coCartesian lifts for every object and inert map
  o.inert_lifts.clear();
  bool lifts_ok = true;
  std::string lift_detail;
  for (int ob = 0; ob < cat.object_count(); ++ob) {
    for (const auto& f : o.fin.maps_from(o.obj_arity[ob])) {
      if (!FinStar::inert(f)) continue;
      int chosen = -1;
      for (int m = 0; m < cat.mor_count() && chosen < 0; ++m) {
        if (cat.mor(m).src != ob || !(o.mor_base[m] == f)) continue;
        Answer cc = is_cocartesian_edge(o.proj, o.total_nerve->mor_edge(m), o.bound, budget);
        if (cc == Answer::Yes) chosen = m;
      }
      if (chosen < 0) {
        lifts_ok = false;
        lift_detail = "no coCartesian lift of " + FinStar::mor_id(f) + " at " + cat.object(ob);
      } else {
        o.inert_lifts.push_back({ob, f, chosen});
      }
    }
  }
  rep.add("inert.lifts", lifts_ok, lift_detail);

  // Segal condition, strict mode: composing with the rho-lifts is a bijection
  // hom^f(X,Y) -> prod_i hom^{rho_i f}(X,Y_i)
  bool segal_ok = true;
  std::string segal_detail;
  for (int x = 0; x < cat.object_count() && segal_ok; ++x)
    for (int y = 0; y < cat.object_count() && segal_ok; ++y) {
      int n = o.obj_arity[y];
      if (n == 0) continue;
      std::vector<int> rho_lift(n + 1, -1);
      for (int i = 1; i <= n; ++i) rho_lift[i] = o.lift_for(y, FinStar::rho(i, n));
      // collect hom(x,y) grouped by base map
      std::map<std::vector<int>, std::vector<int>> fibers;  // key: (f-id, per-i composite)
      for (int m = 0; m < cat.mor_count(); ++m) {
        if (cat.mor(m).src != x || cat.mor(m).dst != y) continue;
        std::vector<int> key;
        key.push_back(base.mor_index(FinStar::mor_id(o.mor_base[m])));
        for (int i = 1; i <= n; ++i) key.push_back(cat.compose(rho_lift[i], m));
        auto& bucket = fibers[key];
        bucket.push_back(m);
        if (bucket.size() > 1) {
          segal_ok = false;
          segal_detail = "two morphisms share all rho-composites at " + cat.object(x) +
                         " -> " + cat.object(y);
        }
      }
      // surjectivity: every compatible tuple of components is hit
      for (const auto& f : o.fin.all_maps()) {
        if (f.n != n || f.m != o.obj_arity[x]) continue;
        std::vector<std::vector<int>> comp_choices(n);
        long long expected = 1;
        for (int i = 1; i <= n; ++i) {
          FinStar::PMap rf = FinStar::compose(FinStar::rho(i, n), f);
          for (int m = 0; m < cat.mor_count(); ++m)
            if (cat.mor(m).src == x && cat.mor(m).dst == cat.mor(rho_lift[i]).dst &&
                o.mor_base[m] == rf)
              comp_choices[i - 1].push_back(m);
          expected *= static_cast<long long>(comp_choices[i - 1].size());
        }
        long long got = 0;
        for (int m = 0; m < cat.mor_count(); ++m)
          if (cat.mor(m).src == x && cat.mor(m).dst == y && o.mor_base[m] == f) ++got;
        if (got != expected) {
          segal_ok = false;
          segal_detail = "Segal fiber count mismatch over " + FinStar::mor_id(f);
        }
      }
    }
  rep.add("segal.bijection", segal_ok, segal_detail);

  // tuple decompositions: objects over <n> correspond to n-tuples of objects
  // over <1> through the rho-lifts
  o.decomposition.assign(cat.object_count(), {});
  std::map<std::vector<int>, int> seen;
  bool decomp_ok = true;
  long long unary = 0;
  for (int ob = 0; ob < cat.object_count(); ++ob)
    if (o.obj_arity[ob] == 1) ++unary;
  long long expected_total = 0, got_total = cat.object_count();
  for (int n = 0; n <= o.fin.arity_cap; ++n) {
    long long p = 1;
    for (int i = 0; i < n; ++i) p *= unary;
    expected_total += p;
  }
  for (int ob = 0; ob < cat.object_count(); ++ob) {
    int n = o.obj_arity[ob];
    std::vector<int> tup;
    tup.push_back(n);
    for (int i = 1; i <= n; ++i)
      tup.push_back(cat.mor(o.lift_for(ob, FinStar::rho(i, n))).dst);
    o.decomposition[ob] = std::vector<int>(tup.begin() + 1, tup.end());
    if (!seen.emplace(tup, ob).second) decomp_ok = false;
  }
  rep.add("tuple.decomposition", decomp_ok && expected_total == got_total);
  return rep;
}

OperadData operad_from_colored(const ColoredOperad& p, int arity_cap, Dim dim_cap, Dim bound,
                               Budget& budget, std::shared_ptr<NerveSSet> shared_base) {
  OperadData o;
  o.fin = FinStar{arity_cap};
  OpCat oc = build_operator_category(p, o.fin);
  o.total_cat = std::move(oc.cat);
  o.mor_base = std::move(oc.mor_base);
  o.obj_arity = std::move(oc.obj_arity);
  o.dim_cap = dim_cap;
  o.bound = bound;
  o.total_nerve = std::make_shared<NerveSSet>(NerveSSet::make(o.total_cat, dim_cap));
  if (shared_base) {
    DCAT_REQUIRE(shared_base->cap() >= dim_cap, "shared base nerve is too shallow");
    o.base_nerve = std::move(shared_base);
  } else {
    o.base_nerve = std::make_shared<NerveSSet>(NerveSSet::make(o.fin.category(), dim_cap));
  }
  o.proj = projection_map(o);
  o.total_cert = nerve_certificate(o.total(), o.total_nerve->complete_through());
  o.validation = validate_operad(o, budget);
  for (const auto& item : o.validation.items)
    if (item.answer == Answer::No)
      throw InputError("operad validation failed: " + item.id + " " + item.detail);
  return o;
}

DOperadResult is_d_operad(const OperadData& o, Dim d, Budget& budget) {
  DOperadResult res;
  const Category& cat = o.total_cat;
  if (d >= 1) {
    DCatResult r = is_d_category(o.total_cert, d, o.bound, budget);
    res.answer = r.answer;
    if (r.violation) res.detail = r.violation->condition + " at dim " +
                                  std::to_string(r.violation->dim) + ": " + r.violation->detail;
    return res;
  }
  if (d == 0) {
    DCatResult r = is_d_category(o.total_cert, 1, o.bound, budget);
    if (r.answer != Answer::Yes) {
      res.answer = r.answer;
      res.detail = "total is not a 1-category";
      return res;
    }
    for (int a = 0; a < cat.object_count(); ++a)
      for (int b = a + 1; b < cat.object_count(); ++b)
        if (cat.isomorphic_objects(a, b)) {
          res.answer = Answer::No;
          res.detail = "not skeletal: " + cat.object(a) + " ~ " + cat.object(b);
          return res;
        }
    for (int a = 0; a < cat.object_count(); ++a)
      for (int b = 0; b < cat.object_count(); ++b) {
        std::map<std::string, int> seen;
        for (int m : cat.homset(a, b)) {
          if (!seen.emplace(FinStar::mor_id(o.mor_base[m]), m).second) {
            res.answer = Answer::No;
            res.detail = "projection not faithful on hom(" + cat.object(a) + "," +
                         cat.object(b) + ")";
            return res;
          }
        }
      }
    res.answer = Answer::Yes;
    return res;
  }
  if (d == -1) {
    if (cat.object_count() == 0) {
      res.answer = Answer::Yes;
      return res;
    }
    res.answer = answer_of(o.proj.is_iso());
    if (res.answer == Answer::No) res.detail = "projection is not an isomorphism";
    return res;
  }
  throw InputError("d-operad predicate needs d >= -1");
}

}  // namespace dcat
