#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fqf/genus.hpp"
#include "fqf/serialize.hpp"

using namespace fqf;

TEST_CASE("Gram matrices round-trip through JSON") {
  const int q = 3;
  Mat3 G = Mat3::zero(q);
  G.at(0, 0) = Poly::one(q);
  G.at(1, 1) = Poly(q, {2, 1});
  G.at(2, 2) = Poly(q, {1, 0, 2});
  G.at(0, 2) = G.at(2, 0) = Poly::t(q);
  Json j = gram_to_json(G);
  CHECK(j.at("schema") == kSchemaVersion);
  CHECK(j.at("q") == q);
  CHECK(gram_from_json(j) == G);
  j["schema"] = 99;
  CHECK_THROWS(gram_from_json(j));
}

TEST_CASE("series coefficients round-trip through JSON") {
  UPoly f({Rational(1), Rational(-2, 3), Rational(0), Rational(7)});
  Json j = upoly_to_json(f);
  CHECK(j.is_array());
  CHECK(j.size() == 4);
  CHECK(j[1] == "-2/3");
  CHECK(upoly_from_json(j) == f);
}

TEST_CASE("genus symbol and class list serialization") {
  const int q = 3;
  Poly D = Poly::t(q);
  ClassList cl = exhaustive_classes(q, D);
  Json sym = genus_symbol_to_json(cl.symbol);
  CHECK(sym.at("det") == "t");
  CHECK(sym.at("delta") == 1);
  CHECK(sym.at("r") == 1);
  CHECK(sym.at("hasse").size() == 1);
  int hp = sym.at("hasse").begin().value().get<int>();
  int hinf = sym.at("hasse_inf").get<int>();
  CHECK((hp == 1 || hp == -1));
  CHECK((hinf == 1 || hinf == -1));

  Json j = class_list_to_json(cl);
  CHECK(j.at("schema") == kSchemaVersion);
  CHECK(j.at("classes").size() == cl.reps.size());
  CHECK(j.at("mass") == "1/8");
  for (size_t i = 0; i < cl.reps.size(); ++i) {
    const Json& entry = j.at("classes")[i];
    CHECK(gram_from_json(entry.at("gram")) == cl.reps[i].gram);
    CHECK(entry.at("so") == cl.so_orders[i]);
  }
}
