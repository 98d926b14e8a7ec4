#include "dcat/truncation.hpp"

#include <algorithm>

namespace dcat {

namespace {

std::string level_name(Dim m, int cls) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "t%d_%05d", m, cls);
  return buf;
}

// transports a ref between structurally compatible complexes by name
SimplexRef transport(const SimplexRef& r, const SSet& from, const SSet& to) {
  return SimplexRef{r.degens, to.require(from.name(r.base))};
}

}  // namespace

bool condition1_holds(const Quasicat& cert, Dim d, Budget& budget) {
  const SSet& c = *cert.sset;
  if (d < 0) return true;
  if (d == 0) {
    // equivalent objects must be equal: no invertible edge between distinct
    // vertices
    EdgeHomotopyCategory hc = EdgeHomotopyCategory::make(cert, budget);
    for (int cls = 0; cls < hc.class_count(); ++cls)
      if (hc.src(cls) != hc.dst(cls) && hc.invertible(cls)) return false;
    return true;
  }
  // group d-simplices by boundary; homotopic rel boundary must imply equal
  auto dd = standard(d);
  Subcomplex bd = skeleton(dd, d - 1);
  HomotopyChecker checker(Inclusion(bd.inclusion), cert);
  const RefTable& tab = c.refs(d);
  std::map<std::vector<int>, std::vector<int>> groups;
  for (int i = 0; i < static_cast<int>(tab.refs.size()); ++i) {
    std::vector<int> key;
    for (int j = 0; j <= d; ++j) key.push_back(c.refs(d - 1).index_of(c.face(tab.refs[i], j)));
    groups[key].push_back(i);
  }
  for (const auto& [key, members] : groups)
    for (size_t a = 0; a < members.size(); ++a)
      for (size_t b = a + 1; b < members.size(); ++b) {
        SMap f = simplex_map(cert.sset, tab.refs[members[a]]);
        SMap g = simplex_map(cert.sset, tab.refs[members[b]]);
        Answer ans = checker.homotopic(f, g, budget);
        if (ans == Answer::Inconclusive)
          throw BudgetError("condition (1) check exceeded the budget");
        if (ans == Answer::Yes) return false;
      }
  return true;
}

DCatResult is_d_category(const Quasicat& cert, Dim d, Dim m, Budget& budget) {
  DCatResult res;
  res.d = d;
  res.bound = m;
  if (d < -1) throw InputError("d-category predicate needs d >= -1");
  if (cert.qc_bound < m)
    throw CertificationError("input not certified as a quasi-category up to the bound");
  const SSet& c = *cert.sset;
  // condition (2): for d < k <= m, a k-simplex is determined by its boundary
  for (Dim k = std::max(d + 1, 0); k <= m; ++k) {
    if (k == 0) {
      if (c.count(0) > 1) {
        res.answer = Answer::No;
        res.violation = {"(2)", 0, "two distinct vertices"};
        return res;
      }
      continue;
    }
    const RefTable& tab = c.refs(k);
    std::map<std::vector<int>, int> seen;
    for (int i = 0; i < static_cast<int>(tab.refs.size()); ++i) {
      std::vector<int> key;
      for (int j = 0; j <= k; ++j)
        key.push_back(c.refs(k - 1).index_of(c.face(tab.refs[i], j)));
      auto [it, fresh] = seen.emplace(std::move(key), i);
      if (!fresh) {
        res.answer = Answer::No;
        res.violation = {"(2)", k,
                         c.print(tab.refs[it->second]) + " and " + c.print(tab.refs[i]) +
                             " share a boundary"};
        return res;
      }
    }
  }
  // condition (1) at dimension d
  try {
    if (!condition1_holds(cert, d, budget)) {
      res.answer = Answer::No;
      res.violation = {"(1)", std::max(d, Dim{0}), "homotopic rel boundary but distinct"};
      return res;
    }
  } catch (const BudgetError&) {
    res.answer = Answer::Inconclusive;
    return res;
  }
  res.answer = Answer::Yes;
  return res;
}

// -- TruncatedSSet ---------------------------------------------------------------

const Subcomplex& TruncatedSSet::skel(Dim m, Dim e) const {
  auto key = std::make_pair(m, e);
  auto it = skels_.find(key);
  if (it == skels_.end()) it = skels_.emplace(key, skeleton(standard(m), e)).first;
  return it->second;
}

TruncatedSSet TruncatedSSet::make(const Quasicat& cert, Dim d, Dim out_dim, Budget& budget) {
  DCAT_REQUIRE(d >= 1, "TruncatedSSet: use h_low for d <= 0");
  if (cert.qc_bound < out_dim + 2)
    throw CertificationError("h_d needs the source certified up to out_dim + 2");
  if (cert.complete_through < d + 1)
    throw CertificationError("h_d needs the source presentation complete through d+1");
  TruncatedSSet t;
  t.cert_ = cert;
  t.d_ = d;
  t.out_dim_ = out_dim;

  bool shortcut_ok = condition1_holds(cert, d, budget);
  DCategoryShortcut sc{d};

  t.levels_.reserve(out_dim + 1);
  for (Dim m = 0; m <= out_dim; ++m) {
    const Subcomplex& a = t.skel(m, d - 1);
    const Subcomplex& b = t.skel(m, d);
    const Subcomplex& cc = t.skel(m, d + 1);
    SMap ab = make_map(a.sset, b.sset,
                       [&](SimplexId id) { return transport(SimplexRef{{}, id}, *a.sset, *b.sset); });
    SMap bc = make_map(b.sset, cc.sset,
                       [&](SimplexId id) { return transport(SimplexRef{{}, id}, *b.sset, *cc.sset); });
    t.levels_.push_back(homotopy_classes(Inclusion(ab), Inclusion(bc), cert, budget,
                                         shortcut_ok ? &sc : nullptr));
    if (t.levels_.back().status != SearchStatus::Complete)
      throw BudgetError("h_d level enumeration exceeded the budget");
  }

  // simplicial operators act by precomposition with skeletal standard maps
  t.face_.resize(out_dim + 1);
  t.deg_.resize(out_dim + 1);
  auto op_map = [&](Dim from, Dim to, const std::vector<int>& verts) {
    SMap full = standard_map(from, to, verts);
    const Subcomplex& sf = t.skel(from, d);
    const Subcomplex& st = t.skel(to, d);
    return make_map(sf.sset, st.sset, [&](SimplexId id) {
      SimplexRef im = full.apply(transport(SimplexRef{{}, id}, *sf.sset, *full.src()));
      return transport(im, *full.dst(), *st.sset);
    });
  };
  for (Dim m = 0; m <= out_dim; ++m) {
    int sz = t.class_count(m);
    t.face_[m].resize(sz);
    t.deg_[m].resize(sz);
    for (int cls = 0; cls < sz; ++cls) {
      const SMap& rep = t.levels_[m].classes[cls].rep_map;
      if (m >= 1)
        for (int i = 0; i <= m; ++i) {
          std::vector<int> verts;
          for (int v = 0; v <= m - 1; ++v) verts.push_back(v < i ? v : v + 1);
          t.face_[m][cls].push_back(t.class_of(m - 1, SMap::compose(rep, op_map(m - 1, m, verts))));
        }
      if (m < out_dim)
        for (int i = 0; i <= m; ++i) {
          std::vector<int> verts;
          for (int v = 0; v <= m + 1; ++v) verts.push_back(v <= i ? v : v - 1);
          t.deg_[m][cls].push_back(t.class_of(m + 1, SMap::compose(rep, op_map(m + 1, m, verts))));
        }
    }
  }

  TabulatedFamily fam;
  fam.cap = out_dim;
  fam.names.resize(out_dim + 1);
  fam.face = t.face_;
  fam.deg = t.deg_;
  for (Dim m = 0; m <= out_dim; ++m)
    for (int cls = 0; cls < t.class_count(m); ++cls) fam.names[m].push_back(level_name(m, cls));
  t.ex_ = extract(fam);

  // the unit: a simplex goes to the class of its d-skeleton restriction
  Subcomplex dom = skeleton(cert.sset, out_dim);
  t.theta_ = make_map(dom.sset, t.ex_.sset, [&](SimplexId id) {
    Dim k = id.dim;
    SimplexRef src_ref = transport(SimplexRef{{}, id}, *dom.sset, *cert.sset);
    SMap chi = simplex_map(cert.sset, src_ref);
    const Subcomplex& sk_incl = t.skel(k, d);
    SMap member = SMap::compose(chi, sk_incl.inclusion);
    return t.ex_.elem_ref[k][t.class_of(k, member)];
  });
  std::string err;
  DCAT_REQUIRE(t.theta_.validate(&err), "theta not simplicial: " + err);
  return t;
}

int TruncatedSSet::class_of(Dim m, const SMap& member) const {
  int cls = levels_[m].find(encode(member));
  DCAT_REQUIRE(cls >= 0, "class_of: not a bracket member");
  return cls;
}

int TruncatedSSet::elem_of_ref(const SimplexRef& r) const {
  int e = ex_.element_of(SimplexRef{{}, r.base});
  Dim m = r.base.dim;
  for (auto it = r.degens.rbegin(); it != r.degens.rend(); ++it) {
    e = deg_[m][e][*it];
    ++m;
  }
  return e;
}

SMap TruncatedSSet::induced(const TruncatedSSet& hc, const TruncatedSSet& hd, const SMap& f) {
  DCAT_REQUIRE(hc.d_ == hd.d_, "induced: levels differ");
  DCAT_REQUIRE(f.src()->same_as(*hc.source()) && f.dst()->same_as(*hd.source()),
               "induced: map shape mismatch");
  SMap m = make_map(hc.sset(), hd.sset(), [&](SimplexId id) {
    Dim k = id.dim;
    int cls = hc.ex_.element_of(SimplexRef{{}, id});
    SMap pushed = SMap::compose(f, hc.levels_[k].classes[cls].rep_map);
    return hd.ex_.elem_ref[k][hd.class_of(k, pushed)];
  });
  std::string err;
  DCAT_REQUIRE(m.validate(&err), "induced h_d map not simplicial: " + err);
  return m;
}

// -- low truncations ----------------------------------------------------------------

LowTruncation h_low(const Quasicat& cert, Dim d, Budget& budget) {
  LowTruncation out;
  out.d = d;
  const SSetPtr& c = cert.sset;
  if (d == -2) {
    out.sset = point();
    out.theta = constant_map(c, out.sset, SimplexId{0, 0});
    return out;
  }
  if (d == -1) {
    if (c->empty()) {
      out.sset = empty_sset();
      out.theta = SMap(c, out.sset, {});
    } else {
      out.sset = point();
      out.theta = constant_map(c, out.sset, SimplexId{0, 0});
    }
    return out;
  }
  DCAT_REQUIRE(d == 0, "h_low: d must be -2, -1 or 0");
  if (cert.qc_bound < 2)
    throw CertificationError("h_0 needs the source certified up to dimension 2");
  if (c->empty()) {
    out.sset = empty_sset();
    out.theta = SMap(c, out.sset, {});
    return out;
  }
  int n0 = c->count(0);
  // preorder: x <= y iff an edge x -> y exists (mapping space nonempty)
  std::vector<std::vector<bool>> rel(n0, std::vector<bool>(n0, false));
  for (int v = 0; v < n0; ++v) rel[v][v] = true;
  for (int e = 0; e < c->count(1); ++e) {
    int s = c->base_face(SimplexId{1, e}, 1).base.idx;
    int t = c->base_face(SimplexId{1, e}, 0).base.idx;
    rel[s][t] = true;
  }
  for (int k = 0; k < n0; ++k)
    for (int i = 0; i < n0; ++i)
      for (int j = 0; j < n0; ++j)
        if (rel[i][k] && rel[k][j]) rel[i][j] = true;
  // identify mutually related vertices
  out.class_of_vertex.assign(n0, -1);
  std::vector<std::string> class_names;
  std::vector<int> class_rep;
  for (int v = 0; v < n0; ++v) {
    if (out.class_of_vertex[v] >= 0) continue;
    int cls = static_cast<int>(class_names.size());
    std::string name = c->name(0, v);
    for (int w = v; w < n0; ++w)
      if (rel[v][w] && rel[w][v]) {
        out.class_of_vertex[w] = cls;
        name = std::min(name, c->name(0, w));
      }
    class_names.push_back(name);
    class_rep.push_back(v);
  }
  std::vector<std::pair<std::string, std::string>> le;
  for (size_t a = 0; a < class_rep.size(); ++a)
    for (size_t b2 = 0; b2 < class_rep.size(); ++b2)
      if (rel[class_rep[a]][class_rep[b2]]) le.push_back({class_names[a], class_names[b2]});
  Category poset = Category::from_poset(class_names, le);
  out.poset_nerve = std::make_shared<NerveSSet>(
      NerveSSet::make(poset, std::max<Dim>(1, static_cast<Dim>(class_names.size()))));
  out.sset = out.poset_nerve->sset();
  std::vector<int> obj_of_class(class_names.size());
  for (size_t a = 0; a < class_names.size(); ++a)
    obj_of_class[a] = out.poset_nerve->category().object_index(class_names[a]);
  const NerveSSet& nv = *out.poset_nerve;
  out.theta = make_map(c, out.sset, [&](SimplexId id) {
    std::vector<int> chain;
    const Category& pc = nv.category();
    int prev = -1;
    for (int j = 0; j <= id.dim; ++j) {
      int v = c->vertex(SimplexRef{{}, id}, j).base.idx;
      int obj = obj_of_class[out.class_of_vertex[v]];
      if (j > 0) chain.push_back(pc.mor_index(pc.object(prev) + "<=" + pc.object(obj)));
      prev = obj;
    }
    if (chain.empty()) return nv.object_vertex(prev);
    return nv.chain_ref(chain);
  });
  std::string err;
  DCAT_REQUIRE(out.theta.validate(&err), "theta_0 not simplicial: " + err);
  (void)budget;
  return out;
}

}  // namespace dcat
