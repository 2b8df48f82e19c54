#include <doctest.h>

#include "virmod/errors.hpp"
#include "virmod/report.hpp"

using namespace virmod;

TEST_CASE("reports round-trip through JSON") {
  Report r;
  r.command = "invariant verify";
  r.model = std::make_pair(12, 11);
  r.parameters = {{"row", "e6_q12"}};
  r.add_check({"M1", true, "ok"});
  r.add_check({"M2", false, "X_vac,vac = 2"});
  r.data["c"] = rational_json(make_rational(-22, 5));
  r.data["entry"] = cyclotomic_json(cyc_cos(1, 3));
  r.versions = {{"toolkit", kToolkitVersion}};
  const Json j = to_json(r);
  CHECK(j["pass"] == false);
  CHECK(j["data"]["c"] == "-22/5");
  CHECK(j["data"]["entry"]["n"] == 6);
  const Report back = report_from_json(Json::parse(j.dump()));
  CHECK(back == r);
  CHECK(to_json(back).dump() == j.dump());
}

TEST_CASE("check names are unique") {
  Report r;
  r.add_check({"M1", true, ""});
  CHECK_THROWS_AS(r.add_check({"M1", true, ""}), ConventionError);
}

TEST_CASE("config hash is order independent and stable") {
  const std::string h = config_hash({{"order", "20"}, {"cap", "3"}});
  CHECK(h.size() == 16);
  CHECK(h == config_hash({{"cap", "3"}, {"order", "20"}}));
  CHECK(h != config_hash({{"cap", "4"}, {"order", "20"}}));
}

TEST_CASE("text rendering lists checks") {
  Report r;
  r.command = "model info";
  r.add_check({"effective_vacuum_row_positive", true, "fine"});
  const std::string text = render_text(r);
  CHECK(text.find("[PASS] effective_vacuum_row_positive") != std::string::npos);
  CHECK(text.find("result: PASS") != std::string::npos);
}
