#include "doctest.h"
#include "nilcomm/error.hpp"
#include "nilcomm/pair.hpp"

using namespace nilcomm;

TEST_CASE("pair type names round trip") {
  for (PairType t : kClassicalTypes) CHECK(parse_pair_type(to_string(t)) == t);
  CHECK_THROWS_AS(parse_pair_type("EVI"), Error);
  try {
    parse_pair_type("XYZ");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::WrongType);
  }
}

TEST_CASE("form data") {
  CHECK_FALSE(form_data(PairType::AI).has_value());
  CHECK_FALSE(form_data(PairType::AIII).has_value());
  CHECK(form_data(PairType::BDI)->epsilon == 1);
  CHECK(form_data(PairType::BDI)->xi == 1);
  CHECK(form_data(PairType::CI)->epsilon == -1);
  CHECK(form_data(PairType::CI)->xi == -1);
  CHECK(form_data(PairType::DIII)->epsilon == 1);
  CHECK(form_data(PairType::DIII)->xi == -1);
  CHECK(form_data(PairType::CII)->epsilon == -1);
  CHECK(form_data(PairType::CII)->xi == 1);
}

TEST_CASE("params validation") {
  CHECK_NOTHROW(make_params(PairType::AI, 5));
  CHECK_THROWS_AS(make_params(PairType::AII, 5), Error);
  CHECK_THROWS_AS(make_params(PairType::BDI, 5), Error);
  CHECK_THROWS_AS(make_params(PairType::BDI, 5, 3, 3), Error);
  CHECK_THROWS_AS(make_params(PairType::CII, 6, 3, 3), Error);
  CHECK_THROWS_AS(make_params(PairType::CI, 4, 2, 2), Error);
  CHECK(make_params(PairType::BDI, 5, 3).signature->count_b == 2);
}

TEST_CASE("params of size") {
  CHECK(params_of_size(PairType::AI, 4).size() == 1);
  CHECK(params_of_size(PairType::AII, 3).empty());
  CHECK(params_of_size(PairType::BDI, 4).size() == 5);
  CHECK(params_of_size(PairType::AIII, 3).size() == 4);
  CHECK(params_of_size(PairType::CII, 8).size() == 5);
  CHECK(params_of_size(PairType::CII, 6).size() == 4);
  for (PairType t : kClassicalTypes)
    for (int n = 0; n <= 8; ++n)
      for (const auto& p : params_of_size(t, n)) CHECK_NOTHROW(check_params(t, p));
}
