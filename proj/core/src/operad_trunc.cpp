#include <algorithm>
#include <set>

#include "dcat/operad.hpp"

namespace dcat {

namespace {

FinStar::PMap parse_pmap(const std::string& id) {
  FinStar::PMap f;
  size_t gt = id.find('>'), co = id.find(':');
  f.m = std::stoi(id.substr(0, gt));
  f.n = std::stoi(id.substr(gt + 1, co - gt - 1));
  for (size_t i = co + 1; i < id.size(); ++i) f.img.push_back(id[i] - '0');
  return f;
}

SMap projection_of(const OperadData& o) {
  std::vector<int> on_objects(o.total_cat.object_count());
  std::vector<int> on_mors(o.total_cat.mor_count());
  const Category& base = o.base_nerve->category();
  for (int ob = 0; ob < o.total_cat.object_count(); ++ob)
    on_objects[ob] = base.object_index(FinStar::obj_id(o.obj_arity[ob]));
  for (int m = 0; m < o.total_cat.mor_count(); ++m)
    on_mors[m] = base.mor_index(FinStar::mor_id(o.mor_base[m]));
  return NerveSSet::induced(*o.total_nerve, *o.base_nerve, on_objects, on_mors);
}

OperadData finish(OperadData o, Budget& budget) {
  if (!o.total_nerve)
    o.total_nerve = std::make_shared<NerveSSet>(NerveSSet::make(o.total_cat, o.dim_cap));
  o.proj = projection_of(o);
  o.total_cert = nerve_certificate(o.total(), o.total_nerve->complete_through());
  o.validation = validate_operad(o, budget);
  return o;
}

// the base itself as an operad (identity-shaped projection)
OperadData base_operad(const FinStar& fin, const std::shared_ptr<NerveSSet>& base_nerve,
                       Dim dim_cap, Dim bound, Budget& budget) {
  OperadData o;
  o.fin = fin;
  o.total_cat = base_nerve->category();
  o.base_nerve = base_nerve;
  o.total_nerve = base_nerve;
  o.dim_cap = dim_cap;
  o.bound = bound;
  o.obj_arity.resize(o.total_cat.object_count());
  for (int ob = 0; ob < o.total_cat.object_count(); ++ob)
    o.obj_arity[ob] = std::stoi(o.total_cat.object(ob).substr(1));
  o.mor_base.resize(o.total_cat.mor_count());
  for (int m = 0; m < o.total_cat.mor_count(); ++m)
    o.mor_base[m] = parse_pmap(o.total_cat.mor(m).id);
  return finish(std::move(o), budget);
}

}  // namespace

TruncatedOperad h_d_operad(const OperadData& o, Dim d, Dim out_dim, Budget& budget) {
  TruncatedOperad out;
  out.d = d;
  if (d < -1) throw InputError("d-homotopy operad needs d >= -1");

  if (d == -1) {
    if (o.total_cat.object_count() == 0) {
      out.data = o;  // the empty operad is its own (-1)-truncation
      out.theta = SMap(o.total(), o.total(), {});
      return out;
    }
    out.data = base_operad(o.fin, o.base_nerve, o.dim_cap, o.bound, budget);
    out.theta = SMap(o.total(), out.data.total(),
                     [&] {
                       // the projection, re-pointed at the new total instance
                       std::vector<std::vector<SimplexRef>> assign(o.total()->top_dim() + 1);
                       for (Dim n = 0; n <= o.total()->top_dim(); ++n)
                         for (int i = 0; i < o.total()->count(n); ++i)
                           assign[n].push_back(o.proj.at(SimplexId{n, i}));
                       return assign;
                     }());
    return out;
  }

  if (d == 0) {
    const Category& cat = o.total_cat;
    int nobj = cat.object_count();
    std::vector<int> cls(nobj, -1);
    std::vector<int> rep;
    for (int a = 0; a < nobj; ++a) {
      if (cls[a] >= 0) continue;
      int c = static_cast<int>(rep.size());
      rep.push_back(a);
      for (int b = a; b < nobj; ++b)
        if (cls[b] < 0 && cat.isomorphic_objects(a, b)) cls[b] = c;
    }
    int ncls = static_cast<int>(rep.size());
    // mapping sets are replaced by their images in Fin_*; the composition
    // this induces must not depend on the representatives
    auto image_set = [&](int x, int y) {
      std::set<std::string> img;
      for (int m : cat.homset(x, y)) img.insert(FinStar::mor_id(o.mor_base[m]));
      return img;
    };
    for (int cx = 0; cx < ncls; ++cx)
      for (int cy = 0; cy < ncls; ++cy) {
        std::set<std::string> base_img = image_set(rep[cx], rep[cy]);
        for (int x = 0; x < nobj; ++x)
          for (int y = 0; y < nobj; ++y)
            if (cls[x] == cx && cls[y] == cy && image_set(x, y) != base_img)
              throw InputError("h_0 operad: induced composition is not unique");
      }
    std::vector<std::string> objects;
    for (int c = 0; c < ncls; ++c) objects.push_back(cat.object(rep[c]));
    std::vector<Category::Mor> mors;
    std::vector<FinStar::PMap> mor_base;
    auto mid = [&](int cx, int cy, const std::string& fid) {
      return objects[cx] + ">" + objects[cy] + "|" + fid;
    };
    for (int cx = 0; cx < ncls; ++cx)
      for (int cy = 0; cy < ncls; ++cy)
        for (const std::string& fid : image_set(rep[cx], rep[cy])) {
          mors.push_back({mid(cx, cy, fid), cx, cy});
          mor_base.push_back(parse_pmap(fid));
        }
    std::vector<std::array<std::string, 3>> comp;
    for (int f = 0; f < static_cast<int>(mors.size()); ++f)
      for (int g = 0; g < static_cast<int>(mors.size()); ++g) {
        if (mors[f].dst != mors[g].src) continue;
        FinStar::PMap gf = FinStar::compose(mor_base[g], mor_base[f]);
        comp.push_back(std::array<std::string, 3>{
            mors[g].id, mors[f].id, mid(mors[f].src, mors[g].dst, FinStar::mor_id(gf))});
      }
    std::map<std::string, std::string> ids;
    for (int c = 0; c < ncls; ++c)
      ids[objects[c]] = mid(c, c, FinStar::mor_id(FinStar::identity(o.obj_arity[rep[c]])));
    OperadData q;
    q.fin = o.fin;
    q.total_cat = Category::make(objects, mors, comp, ids);
    q.mor_base = std::move(mor_base);
    q.obj_arity.resize(ncls);
    for (int c = 0; c < ncls; ++c) q.obj_arity[c] = o.obj_arity[rep[c]];
    q.base_nerve = o.base_nerve;
    q.dim_cap = o.dim_cap;
    q.bound = o.bound;
    out.data = finish(std::move(q), budget);
    std::vector<int> on_objects(nobj), on_mors(cat.mor_count());
    for (int x = 0; x < nobj; ++x) on_objects[x] = cls[x];
    for (int m = 0; m < cat.mor_count(); ++m)
      on_mors[m] = out.data.total_cat.mor_index(
          mid(cls[cat.mor(m).src], cls[cat.mor(m).dst], FinStar::mor_id(o.mor_base[m])));
    out.theta = NerveSSet::induced(*o.total_nerve, *out.data.total_nerve, on_objects, on_mors);
    return out;
  }

  // d >= 1: bracket truncation of the total, then re-derive the category.
  // Fillers must exist (horn sweep through dimension 2) and every pair of
  // fillers over the same composable pair must share its long edge; this is
  // exactly what makes the recovered composition well defined. The full
  // 1-category claim is re-checked on the rebuilt nerve during validation.
  DCAT_REQUIRE(out_dim >= 2, "h_d operad needs out_dim >= 2 to recover composition");
  out.hd_total =
      std::make_shared<TruncatedSSet>(TruncatedSSet::make(o.total_cert, d, out_dim, budget));
  const TruncatedSSet& hd = *out.hd_total;
  const SSetPtr& ex = hd.sset();
  certify(ex, 2, budget);
  {
    const RefTable& t2 = ex->refs(2);
    std::map<std::pair<int, int>, int> long_edge;
    for (const auto& w : t2.refs) {
      int f2 = ex->refs(1).index_of(ex->face(w, 2));
      int f0 = ex->refs(1).index_of(ex->face(w, 0));
      int f1 = ex->refs(1).index_of(ex->face(w, 1));
      auto [it, fresh] = long_edge.emplace(std::make_pair(f2, f0), f1);
      if (!fresh && it->second != f1)
        throw CertificationError("h_d operad: composites are not unique");
    }
  }

  const SSetPtr& base_sset = o.base_nerve->sset();
  auto all_verts = [](Dim m) {
    std::vector<int> v(m + 1);
    for (int i = 0; i <= m; ++i) v[i] = i;
    return v;
  };
  out.p_d = make_map(ex, base_sset, [&](SimplexId id) -> SimplexRef {
    Dim m = id.dim;
    int cls = hd.extraction().element_of(SimplexRef{{}, id});
    const SMap& rep_map = hd.level(m).classes[cls].rep_map;
    SMap down = SMap::compose(o.proj, rep_map);
    if (m <= d) return down.at(down.src()->require(subset_name(all_verts(m))));
    const Subcomplex& sk = hd.skel(m, d);
    MapList fill = solve(ExtensionProblem::extend(Inclusion(sk.inclusion), down), true, budget);
    DCAT_REQUIRE(fill.complete() && !fill.maps.empty(), "p_d: no extension downstairs");
    return fill.maps.front().at(standard(m)->require(subset_name(all_verts(m))));
  });
  std::string err;
  DCAT_REQUIRE(out.p_d.validate(&err), "p_d not simplicial: " + err);

  std::vector<std::string> objects;
  for (int v = 0; v < ex->count(0); ++v) objects.push_back(ex->name(0, v));
  std::vector<Category::Mor> mors;
  std::vector<FinStar::PMap> mor_base;
  std::map<std::string, int> mor_of_name;
  for (int e = 0; e < ex->count(1); ++e) {
    SimplexId id{1, e};
    int src = ex->base_face(id, 1).base.idx;
    int dst = ex->base_face(id, 0).base.idx;
    mor_of_name[ex->name(id)] = static_cast<int>(mors.size());
    mors.push_back({ex->name(id), src, dst});
    SimplexRef down = out.p_d.at(id);
    if (down.degenerate())
      mor_base.push_back(FinStar::identity(std::stoi(base_sset->name(down.base).substr(1))));
    else
      mor_base.push_back(parse_pmap(base_sset->name(down.base)));
  }
  std::vector<int> obj_arity(objects.size());
  std::map<std::string, std::string> ids;
  int n_edges = ex->count(1);
  for (int v = 0; v < ex->count(0); ++v) {
    obj_arity[v] =
        std::stoi(base_sset->name(out.p_d.at(SimplexId{0, v}).base).substr(1));
    std::string idname = "id@" + objects[v];
    ids[objects[v]] = idname;
    mor_of_name[idname] = static_cast<int>(mors.size());
    mors.push_back({idname, v, v});
    mor_base.push_back(FinStar::identity(obj_arity[v]));
  }
  auto edge_ref = [&](int m) -> SimplexRef {
    if (m < n_edges) return SimplexRef{{}, SimplexId{1, m}};
    return ref_degenerate(SimplexRef{{}, SimplexId{0, mors[m].src}}, 0);
  };
  auto mor_of_edge_ref = [&](const SimplexRef& r) -> int {
    if (r.degenerate()) return mor_of_name.at("id@" + ex->name(r.base));
    return mor_of_name.at(ex->name(r.base));
  };
  std::vector<std::array<std::string, 3>> comp;
  const RefTable& tris = ex->refs_indexed(2);
  const RefTable& edges = ex->refs(1);
  for (int f = 0; f < n_edges; ++f)
    for (int g = 0; g < n_edges; ++g) {
      if (mors[f].dst != mors[g].src) continue;
      auto it = tris.by_face[2].find(edges.index_of(edge_ref(f)));
      int comp_mor = -1;
      if (it != tris.by_face[2].end())
        for (int ti : it->second) {
          if (edges.index_of(ex->face(tris.refs[ti], 0)) != edges.index_of(edge_ref(g)))
            continue;
          comp_mor = mor_of_edge_ref(ex->face(tris.refs[ti], 1));
          break;
        }
      DCAT_REQUIRE(comp_mor >= 0, "h_d operad: composite filler missing");
      comp.push_back(std::array<std::string, 3>{mors[g].id, mors[f].id, mors[comp_mor].id});
    }
  OperadData q;
  q.fin = o.fin;
  q.total_cat = Category::make(objects, mors, comp, ids);
  q.mor_base = std::move(mor_base);
  q.obj_arity = std::move(obj_arity);
  q.base_nerve = o.base_nerve;
  q.dim_cap = o.dim_cap;
  q.bound = o.bound;
  out.data = finish(std::move(q), budget);

  const NerveSSet& nv = *out.data.total_nerve;
  out.ex_to_nerve = make_map(ex, out.data.total(), [&](SimplexId id) -> SimplexRef {
    if (id.dim == 0) return nv.object_vertex(id.idx);
    std::vector<int> chain;
    for (int j = 1; j <= id.dim; ++j)
      chain.push_back(mor_of_edge_ref(ex->subsimplex(SimplexRef{{}, id}, {j - 1, j})));
    return nv.chain_ref(chain);
  });
  DCAT_REQUIRE(out.ex_to_nerve.validate(&err), "h_d comparison not simplicial: " + err);
  out.theta = SMap::compose(out.ex_to_nerve, hd.theta());
  return out;
}

Answer preserves_inerts(const OperadData& src, const OperadData& dst, const SMap& f,
                        Budget& budget) {
  DCAT_REQUIRE(f.src()->same_as(*src.total()) && f.dst()->same_as(*dst.total()),
               "preserves_inerts: map shape mismatch");
  bool stalled = false;
  for (int e = 0; e < src.total()->count(1); ++e) {
    SimplexRef er{{}, SimplexId{1, e}};
    Answer in = src.edge_inert(er, budget);
    if (in == Answer::Inconclusive) stalled = true;
    if (in != Answer::Yes) continue;
    Answer good = is_cocartesian_edge(dst.proj, f.apply(er), dst.bound, budget);
    if (good == Answer::Inconclusive) stalled = true;
    if (good == Answer::No) return Answer::No;
  }
  return stalled ? Answer::Inconclusive : Answer::Yes;
}

std::vector<int> tuple_objects(const OperadData& o, const std::vector<int>& inputs) {
  std::vector<int> out;
  int n = static_cast<int>(inputs.size());
  for (int ob = 0; ob < o.total_cat.object_count(); ++ob)
    if (o.obj_arity[ob] == n && o.decomposition[ob] == inputs) out.push_back(ob);
  return out;
}

RefFilter active_fiber_filter(const SMap& proj, const std::shared_ptr<NerveSSet>& base,
                              const SimplexRef& active_edge) {
  return [&proj, base, active_edge](Dim n, const SimplexRef& z) {
    SimplexRef down = proj.apply(z);
    return base->sset()->subsimplex(down, {n, n + 1}) == active_edge;
  };
}

MultiMapSpace multi_mapping_space(const OperadData& o, const std::vector<int>& inputs,
                                  int output, Dim cap, Budget& budget) {
  DCAT_REQUIRE(o.obj_arity[output] == 1, "multi-map output must be a unary object");
  for (int x : inputs)
    DCAT_REQUIRE(o.obj_arity[x] == 1, "multi-map inputs must be unary objects");
  MultiMapSpace out;
  std::vector<int> cands = tuple_objects(o, inputs);
  DCAT_REQUIRE(!cands.empty(), "no tuple object for the inputs");
  out.tuple_obj = cands.front();
  int n = static_cast<int>(inputs.size());
  out.active = FinStar::PMap{n, 1, std::vector<int>(n, 1)};
  SimplexRef fedge = o.base_edge(out.active);
  SimplexId xv = o.total()->require(o.total_cat.object(out.tuple_obj));
  SimplexId yv = o.total()->require(o.total_cat.object(output));
  out.space = std::make_shared<MappingSpace>(MappingSpace::right(
      o.total(), xv, yv, cap, budget, active_fiber_filter(o.proj, o.base_nerve, fedge)));
  return out;
}

}  // namespace dcat
