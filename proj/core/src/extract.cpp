#include "dcat/extract.hpp"

#include <algorithm>

namespace dcat {

SimplexRef ref_degenerate(const SimplexRef& r, int i) {
  DCAT_REQUIRE(i >= 0 && i <= r.dim(), "ref_degenerate: index out of range");
  DegenWord w;
  w.reserve(r.degens.size() + 1);
  size_t t = 0;
  while (t < r.degens.size() && i <= r.degens[t]) w.push_back(r.degens[t++] + 1);
  w.push_back(i);
  while (t < r.degens.size()) w.push_back(r.degens[t++]);
  return SimplexRef{std::move(w), r.base};
}

SimplexRef ref_strip(const SimplexRef& r, int i) {
  DegenWord out;
  int fi = i;
  for (size_t t = 0; t < r.degens.size(); ++t) {
    int j = r.degens[t];
    if (fi < j) {
      out.push_back(j - 1);
    } else if (fi == j || fi == j + 1) {
      out.insert(out.end(), r.degens.begin() + t + 1, r.degens.end());
      return SimplexRef{std::move(out), r.base};
    } else {
      out.push_back(j);
      fi -= 1;
    }
  }
  throw InternalError("ref_strip: face operator not absorbed by the word");
}

Extraction extract(const TabulatedFamily& fam) {
  Extraction out;
  out.elem_ref.resize(fam.cap + 1);
  out.nd_elem.resize(fam.cap + 1);

  SSetBuilder builder;
  std::vector<std::vector<std::pair<std::string, int>>> nd(fam.cap + 1);

  for (Dim n = 0; n <= fam.cap; ++n) {
    int sz = fam.size(n);
    out.elem_ref[n].assign(sz, SimplexRef{});
    std::vector<int> peel(sz, -1);
    for (int e = 0; e < sz; ++e) {
      // largest i with s_i(d_i e) == e, or -1 when nondegenerate
      for (int i = n - 1; i >= 0; --i) {
        int below = fam.face[n][e][i];
        if (fam.deg[n - 1][below][i] == e) {
          peel[e] = i;
          break;
        }
      }
      if (peel[e] < 0) nd[n].push_back({fam.names[n][e], e});
    }
    std::sort(nd[n].begin(), nd[n].end());
    for (size_t k = 0; k + 1 < nd[n].size(); ++k)
      DCAT_REQUIRE(nd[n][k].first != nd[n][k + 1].first,
                   "extract: duplicate element name " + nd[n][k].first);
    for (int idx = 0; idx < static_cast<int>(nd[n].size()); ++idx)
      out.elem_ref[n][nd[n][idx].second] = SimplexRef{{}, SimplexId{n, idx}};
    out.nd_elem[n].resize(nd[n].size());
    for (int idx = 0; idx < static_cast<int>(nd[n].size()); ++idx)
      out.nd_elem[n][idx] = nd[n][idx].second;
    // level n-1 is fully resolved, so one pass settles every degenerate element
    for (int e = 0; e < sz; ++e) {
      if (peel[e] < 0) continue;
      int i = peel[e];
      out.elem_ref[n][e] = ref_degenerate(out.elem_ref[n - 1][fam.face[n][e][i]], i);
    }
    for (const auto& [name, e] : nd[n]) {
      std::vector<SSetBuilder::FaceSpec> fs;
      if (n >= 1) {
        for (int i = 0; i <= n; ++i) {
          const SimplexRef& f = out.elem_ref[n - 1][fam.face[n][e][i]];
          fs.push_back({f.degens, nd[f.base.dim][f.base.idx].first});
        }
      }
      builder.add(n, name, std::move(fs));
    }
  }
  out.sset = builder.build();
  for (Dim n = 0; n <= fam.cap; ++n) {
    DCAT_REQUIRE(out.sset->count(n) == static_cast<int>(nd[n].size()),
                 "extract: count drifted");
    for (int idx = 0; idx < static_cast<int>(nd[n].size()); ++idx)
      DCAT_REQUIRE(out.sset->name(n, idx) == nd[n][idx].first,
                   "extract: name ordering drifted");
  }
  return out;
}

}  // namespace dcat
