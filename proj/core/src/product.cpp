#include "dcat/product.hpp"

#include <algorithm>
#include <bit>

#include "dcat/extract.hpp"

namespace dcat {

namespace {

// peel the common degeneracy letters (largest first); the collected word is
// strictly decreasing and the remaining pair is jointly nondegenerate
DegenWord peel_common(SimplexRef& ra, SimplexRef& rb) {
  DegenWord word;
  while (true) {
    std::uint64_t common = ra.word_mask() & rb.word_mask();
    if (!common) break;
    int i = 63 - std::countl_zero(common);
    word.push_back(i);
    ra = ref_strip(ra, i);
    rb = ref_strip(rb, i);
  }
  return word;
}

}  // namespace

std::uint64_t Product::pair_key(const SimplexRef& ra, const SimplexRef& rb) const {
  std::uint64_t ka = a_->refs(ra.dim()).index_of(ra);
  std::uint64_t kb = b_->refs(rb.dim()).index_of(rb);
  DCAT_REQUIRE(static_cast<std::int64_t>(ka) >= 0 && static_cast<std::int64_t>(kb) >= 0,
               "pair_key: ref not interned");
  return (ka << 32) | kb;
}

Product Product::make(SSetPtr a, SSetPtr b, Dim cap) {
  Product p;
  p.a_ = std::move(a);
  p.b_ = std::move(b);
  if (p.a_->empty() || p.b_->empty())
    cap = -1;
  else if (cap < 0)
    cap = p.a_->top_dim() + p.b_->top_dim();
  p.cap_ = cap;
  p.coords_.resize(cap + 1);
  p.pair_index_.resize(cap + 1);

  SSetBuilder builder;
  std::vector<std::vector<std::pair<std::string, std::pair<SimplexRef, SimplexRef>>>> nd(cap + 1);
  for (Dim n = 0; n <= cap; ++n) {
    const RefTable& ta = p.a_->refs(n);
    const RefTable& tb = p.b_->refs(n);
    for (const auto& ra : ta.refs) {
      std::uint64_t ma = ra.word_mask();
      for (const auto& rb : tb.refs) {
        if (ma & rb.word_mask()) continue;  // a common letter makes the pair degenerate
        nd[n].push_back({"(" + p.a_->print(ra) + "," + p.b_->print(rb) + ")", {ra, rb}});
      }
    }
    std::sort(nd[n].begin(), nd[n].end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    p.coords_[n].reserve(nd[n].size());
    for (int idx = 0; idx < static_cast<int>(nd[n].size()); ++idx) {
      const auto& cs = nd[n][idx].second;
      p.coords_[n].push_back(cs);
      p.pair_index_[n].emplace(p.pair_key(cs.first, cs.second), idx);
    }
  }
  auto locate_spec = [&](SimplexRef fa, SimplexRef fb) -> SSetBuilder::FaceSpec {
    DegenWord word = peel_common(fa, fb);
    Dim m = fa.dim();
    auto it = p.pair_index_[m].find(p.pair_key(fa, fb));
    DCAT_REQUIRE(it != p.pair_index_[m].end(), "product: nondegenerate pair missing");
    return {word, nd[m][it->second].first};
  };
  for (Dim n = 0; n <= cap; ++n) {
    for (const auto& [name, cs] : nd[n]) {
      std::vector<SSetBuilder::FaceSpec> fs;
      if (n >= 1)
        for (int i = 0; i <= n; ++i)
          fs.push_back(locate_spec(p.a_->face(cs.first, i), p.b_->face(cs.second, i)));
      builder.add(n, name, std::move(fs));
    }
  }
  p.sset_ = builder.build();
  for (Dim n = 0; n <= cap; ++n)
    for (int idx = 0; idx < static_cast<int>(nd[n].size()); ++idx)
      DCAT_REQUIRE(p.sset_->name(n, idx) == nd[n][idx].first, "product: name order drifted");

  p.proj1_ = make_map(p.sset_, p.a_, [&p](SimplexId id) { return p.coords(id).first; });
  p.proj2_ = make_map(p.sset_, p.b_, [&p](SimplexId id) { return p.coords(id).second; });
  std::string err;
  DCAT_REQUIRE(p.proj1_.validate(&err) && p.proj2_.validate(&err),
               "product projections not simplicial: " + err);
  return p;
}

SimplexRef Product::locate(SimplexRef ra, SimplexRef rb) const {
  DCAT_REQUIRE(ra.dim() == rb.dim(), "locate: coordinate dimensions differ");
  DegenWord word = peel_common(ra, rb);
  Dim n = ra.dim();
  DCAT_REQUIRE(n <= cap_, "locate: pair above product cap");
  auto it = pair_index_[n].find(pair_key(ra, rb));
  DCAT_REQUIRE(it != pair_index_[n].end(), "locate: nondegenerate pair missing");
  return sset_->apply_word(word, SimplexRef{{}, SimplexId{n, it->second}});
}

std::pair<SimplexRef, SimplexRef> Product::coords_of(const SimplexRef& r) const {
  auto [ca, cb] = coords(r.base);
  return {a_->apply_word(r.degens, ca), b_->apply_word(r.degens, cb)};
}

SMap Product::pair(const SMap& f, const SMap& g) const {
  DCAT_REQUIRE(f.src()->same_as(*g.src()), "pair: sources differ");
  DCAT_REQUIRE(f.dst()->same_as(*a_) && g.dst()->same_as(*b_), "pair: targets differ");
  return make_map(f.src(), sset_, [&](SimplexId id) { return locate(f.at(id), g.at(id)); });
}

SMap Product::induced(const Product& src, const Product& dst, const SMap& f, const SMap& g) {
  return make_map(src.sset(), dst.sset(), [&](SimplexId id) {
    const auto& [ra, rb] = src.coords(id);
    return dst.locate(f.apply(ra), g.apply(rb));
  });
}

}  // namespace dcat
