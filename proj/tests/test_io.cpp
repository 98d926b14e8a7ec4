#include "dcat/corpus.hpp"
#include "dcat/io.hpp"
#include "doctest.h"

using namespace dcat;

TEST_CASE("SSX round-trips byte-identically") {
  auto d2 = standard(2);
  std::string text = write_ssx(*d2);
  SSetPtr back = read_ssx(text);
  CHECK(back->same_as(*d2));
  CHECK(write_ssx(*back) == text);
  CHECK(write_ssx(*d2) == text);  // repeated serialization is stable

  auto bz2 = certified_nerve(bz2_category(), 4);
  std::string t2 = write_ssx(*bz2.nerve.sset());
  CHECK(read_ssx(t2)->same_as(*bz2.nerve.sset()));
  CHECK(write_ssx(*read_ssx(t2)) == t2);

  CHECK_THROWS_AS(read_ssx("{"), InputError);
  CHECK_THROWS_AS(read_ssx("{\"dims\":{}}"), InputError);
  CHECK_THROWS_AS(read_ssx("{\"dims\":{\"1\":[\"e\"]},\"faces\":{}}"), InputError);
}

TEST_CASE("CAT round-trips and validates") {
  Category bz2 = bz2_category();
  std::string text = write_cat(bz2);
  Category back = read_cat(text);
  CHECK(back.object_count() == 1);
  CHECK(back.mor_count() == 2);
  CHECK(write_cat(back) == text);
  // inconsistent tables are rejected on read
  CHECK_THROWS_AS(
      read_cat("{\"objects\":[\"*\"],\"morphisms\":[{\"id\":\"e\",\"src\":\"*\",\"dst\":\"*\"}],"
               "\"compose\":[[\"e\",\"e\",\"x\"]],\"identities\":{\"*\":\"e\"}}"),
      InputError);
}

TEST_CASE("OPD round-trips") {
  ColoredOperad ass = ass_operad(2);
  std::string text = write_opd(ass);
  ColoredOperad back = read_opd(text);
  CHECK(back.op_count() == ass.op_count());
  CHECK(write_opd(back) == text);

  Budget b;
  OperadData o1 = operad_from_colored(back, 2, 2, 2, b);
  CHECK(o1.validation.all_passed());
}

TEST_CASE("SMAP round-trips against explicit complexes") {
  auto d1 = standard(1);
  auto d2 = standard(2);
  SMap f = standard_map(1, 2, {0, 2});
  std::string text = write_smap(f);
  SMap back = read_smap(text, d1, d2);
  CHECK(back == f);
  CHECK(write_smap(back) == text);
  CHECK_THROWS_AS(read_smap("{\"assign\":{}}", d1, d2), InputError);
}
