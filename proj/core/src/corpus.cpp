#include "dcat/corpus.hpp"

namespace dcat {

Category bz2_category() {
  return Category::make(
      {"*"}, {{"e", 0, 0}, {"s", 0, 0}},
      {{"e", "e", "e"}, {"e", "s", "s"}, {"s", "e", "s"}, {"s", "s", "e"}}, {{"*", "e"}});
}

Category iso_groupoid_category() {
  return Category::make({"a", "b"},
                        {{"ida", 0, 0}, {"idb", 1, 1}, {"u", 0, 1}, {"v", 1, 0}},
                        {{"ida", "ida", "ida"},
                         {"idb", "idb", "idb"},
                         {"u", "ida", "u"},
                         {"idb", "u", "u"},
                         {"v", "idb", "v"},
                         {"ida", "v", "v"},
                         {"v", "u", "ida"},
                         {"u", "v", "idb"}},
                        {{"a", "ida"}, {"b", "idb"}});
}

Category poset_2x2_category() {
  return Category::from_poset({"00", "01", "10", "11"},
                              {{"00", "01"}, {"00", "10"}, {"01", "11"}, {"10", "11"}});
}

Category chain_category(int n) {
  std::vector<std::string> objs;
  std::vector<std::pair<std::string, std::string>> le;
  for (int i = 0; i <= n; ++i) objs.push_back("p" + std::to_string(i));
  for (int i = 0; i < n; ++i) le.push_back({objs[i], objs[i + 1]});
  return Category::from_poset(objs, le);
}

CertifiedNerve certified_nerve(const Category& cat, Dim cap) {
  NerveSSet nv = NerveSSet::make(cat, cap);
  Quasicat cert = nerve_certificate(nv.sset(), nv.complete_through());
  return CertifiedNerve{std::move(nv), std::move(cert)};
}

}  // namespace dcat
