#include "doctest.h"
#include "nilcomm/serialize.hpp"
#include "support.hpp"

#include "json.hpp"

using namespace nilcomm;
using testing::D;
using nlohmann::json;

TEST_CASE("diagram round trip") {
  for (const auto& it : testing::all_items(testing::all_types(), 1, 8)) {
    INFO(testing::where(it));
    CHECK(diagram_from_json(diagram_to_json(it.diagram)) == it.diagram);
  }
}

TEST_CASE("diagram shapes") {
  const json lettered = json::parse(diagram_to_json(D("aba/b")));
  CHECK(lettered["text"] == "aba/b");
  CHECK(lettered["rows"].size() == 2);
  CHECK(lettered["rows"][0]["length"] == 3);
  CHECK(lettered["rows"][1]["start"] == "b");
  const json plain = json::parse(diagram_to_json(D("4,2")));
  CHECK(plain["partition"] == json::array({4, 2}));
  CHECK(diagram_from_json("\"3,1\"") == D("3,1"));
  CHECK_THROWS_AS(diagram_from_json("{"), Error);
  CHECK_THROWS_AS(diagram_from_json("{\"rows\": 3}"), Error);
}

TEST_CASE("invariants and reports") {
  const json inv = json::parse(invariants_to_json(D("2,1"), PairType::AI));
  CHECK(inv["defect"] == 1);
  CHECK(inv["dim_orbit"].is_number());

  const json rep = json::parse(report_to_json(classify_components(PairType::AI, make_params(PairType::AI, 5))));
  CHECK(rep["pair"] == "AI n=5");
  CHECK(rep["components"].size() == 1);
  CHECK(rep["eliminated"].size() == 2);

  const json sl = json::parse(selflarge_to_json(is_self_large(D("3,1"), PairType::AI), PairType::AI));
  CHECK(sl["self_large"] == true);

  const json ex = json::parse(exceptional_report_json("EIV"));
  CHECK(ex["components"].size() == 1);

  const json real = json::parse(realization_to_json(realize(D("3,1"), PairType::AI)));
  CHECK(real.is_object());
}
