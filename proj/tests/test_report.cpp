#include <doctest.h>

#include "lamkit/report.hpp"

using namespace lamkit;

TEST_SUITE("report") {
  TEST_CASE("scalars are exact strings") {
    CHECK(to_json(Rational(3, 26)) == "3/26");
    CHECK(to_json(Rational(2)) == "2");
    CHECK(to_json(Angle(0, 1)) == "0/1");
    CHECK(to_json(Chord(Angle(1, 26), Angle(24, 26))) == "1/26–12/13");
  }

  TEST_CASE("portrait document") {
    auto p = build_portrait(make_collection(2, default_image(2), {1, 0}));
    auto j = portrait_json(p);
    CHECK(j["d"] == 2);
    CHECK(j["image"] == "1/16–3/16");
    CHECK(j["leaves"].size() == 2);
    CHECK(j["regions"].size() == 3);
    CHECK(j["regions"][0]["arcs"][0]["length"].is_string());
    CHECK(j["central_strip"]["degree"] == 2);
    CHECK(j["tree"]["parent"].size() == 3);
    CHECK(j["tree"]["parent"][0] == -1);
    auto flat = portrait_json(build_portrait(make_collection(2, default_image(2), {0, 1})));
    CHECK(flat["central_strip"].is_null());
    // Keys keep their insertion order.
    CHECK(j.begin().key() == "d");
    CHECK(dump(j) == dump(portrait_json(p)));
  }

  TEST_CASE("census and tau") {
    auto c = census_json(census_crosscheck(3));
    CHECK(c["total"] == 5);
    CHECK(c["classes"] == 3);
    CHECK(c["with_strip"] == 2);
    auto text = census_text({census_crosscheck(2), census_crosscheck(3)});
    CHECK(text.find("3  5  3  2  yes") != std::string::npos);
    auto t = tau_json(3, {Rational(1, 6)});
    CHECK(t["values"][0]["tau"] == "1/2");
    CHECK(t["fixed_points"] == Json::array({"0", "1/4", "1/2"}));
  }

  TEST_CASE("strip reports") {
    auto r = verify_csl(make_collection(3, Chord(Angle(2, 13), Angle(3, 13)), {2, 0, 1}));
    auto j = csl_json(r);
    CHECK(j["verdict"] == "PASS");
    CHECK(j["eta"] == "1/39");
    bool has_reentry = false;
    for (const auto& l : j["leaves"]) has_reentry = has_reentry || !l["reentries"].empty();
    CHECK(has_reentry);
    SweepConfig cfg;
    cfg.d = 2;
    cfg.denominator_max = 30;
    cfg.exhaustive_max = 30;
    auto s = sweep_json(cfg, csl_sweep(cfg));
    CHECK(s["status"] == "COMPLETE");
    CHECK(s["verdict"] == "PASS");
  }

  TEST_CASE("orbit reports") {
    auto o = polygon_orbit(3, example_period3(3), 3);
    auto j = orbit_json(o, analyze_orbit_sigma3(o));
    CHECK(j["p"] == 3);
    CHECK(j["k"] == 3);
    CHECK(j["vertices"][0]["angle"] == "1/26");
    CHECK(j["vertices"][0]["itinerary"] == "(001)");
    CHECK(j["iterates"][0]["side_lengths"][0] == "1/26");
    CHECK(j["identity_return"] == true);
    CHECK(j["analysis"]["approaches"][0]["case"] == "same-chord");
    auto s = search_json(SearchLimits{}, search_irp(3, 4, 3));
    CHECK(s["count"] == 0);
    CHECK(s["status"] == "COMPLETE");
    auto q = quadrilateral_json(check_sigma4_quadrilateral());
    CHECK(q["stays_far"] == true);
    CHECK(q["min_distance"] == "11/126");
  }
}
