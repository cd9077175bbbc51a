#include <catch2/catch_amalgamated.hpp>

#include <fstream>

#include "recur/scenario.hpp"
#include "recur/timeline.hpp"

using namespace recur;

namespace {

json read_fixture(const std::string& name) {
    std::ifstream in(std::string(RECUR_SCENARIO_DIR) + "/" + name);
    REQUIRE(in.good());
    json doc;
    in >> doc;
    return doc;
}

json minimal_doc() {
    return json{{"x", {{"name", "x"}, {"components", {{{"label", "A"}, {"duration", "2"}}}}}},
                {"y", {{"name", "y"}, {"components", {{{"label", "B"}, {"duration", "3"}}}}}},
                {"anchor", "0"},
                {"horizon", "6"}};
}

}  // namespace

TEST_CASE("the factory fixture loads with a Monday anchor") {
    Scenario s = load_scenario(read_fixture("factory.json"));
    CHECK(s.x().name() == "Machine");
    CHECK(s.y().name() == "Week");
    CHECK(s.x().period() == 8);
    CHECK(s.y().period() == 7);
    CHECK(s.scale.k == 0);
    CHECK(s.mr.horizon() == Interval(0, 56));
    REQUIRE(s.queries.size() == 1);
    CoincidenceQuery q = s.resolve(s.queries[0].x_label, s.queries[0].y_label);
    CHECK(q.p == 1);
    CHECK(q.q == 2);
}

TEST_CASE("fractional durations rescale the whole scenario") {
    Scenario s = load_scenario(read_fixture("halfday.json"));
    CHECK(s.scale.k == 1);
    CHECK(s.x().period() == 120);
    CHECK(s.y().period() == 135);
    CHECK(s.mr.horizon() == Interval(0, 1080));
    CHECK(s.format(135) == "13.5");
    CHECK(s.format(Interval(0, 1080)) == "[0.0, 108.0)");
}

TEST_CASE("weekday anchors map to day indices") {
    json doc = read_fixture("factory.json");
    doc["anchor"] = "wednesday";
    doc["horizon"] = "56";
    Scenario s = load_scenario(doc);
    CHECK(s.mr.horizon() == Interval(2, 58));
}

TEST_CASE("an anchor can be finer-grained than every duration") {
    json doc = minimal_doc();
    doc["anchor"] = "0.5";
    Scenario s = load_scenario(doc);
    CHECK(s.scale.k == 1);
    CHECK(s.x().period() == 20);
    CHECK(s.mr.horizon() == Interval(5, 65));
}

TEST_CASE("parse, serialize, and parse again land on the same normalized model") {
    for (const char* name : {"factory.json", "halfday.json", "unit_grid.json", "traffic_light.json"}) {
        INFO(name);
        Scenario first = load_scenario(read_fixture(name));
        Scenario second = load_scenario(scenario_to_json(first));
        CHECK(first.x() == second.x());
        CHECK(first.y() == second.y());
        CHECK(first.mr.horizon() == second.mr.horizon());
        CHECK(first.scale == second.scale);
        REQUIRE(first.queries.size() == second.queries.size());
        for (std::size_t i = 0; i < first.queries.size(); ++i) {
            CHECK(first.queries[i].x_label == second.queries[i].x_label);
            CHECK(first.queries[i].y_label == second.queries[i].y_label);
        }
    }
}

TEST_CASE("schema violations are rejected with clear errors") {
    CHECK_THROWS_AS(load_scenario(json::object()), ModelError);

    json no_components = minimal_doc();
    no_components["x"]["components"] = json::array();
    CHECK_THROWS_AS(load_scenario(no_components), ModelError);

    json bad_duration = minimal_doc();
    bad_duration["x"]["components"][0]["duration"] = "two";
    CHECK_THROWS_AS(load_scenario(bad_duration), NonDecimalError);

    json zero_duration = minimal_doc();
    zero_duration["x"]["components"][0]["duration"] = "0";
    CHECK_THROWS_AS(load_scenario(zero_duration), NonPositiveDurationError);

    json bad_horizon = minimal_doc();
    bad_horizon["horizon"] = "7";  // not a common multiple of 2 and 3
    CHECK_THROWS_AS(load_scenario(bad_horizon), NotRecurrentError);

    json bad_query = minimal_doc();
    bad_query["queries"] = json::array({json{{"x", "A"}, {"y", "nope"}}});
    CHECK_THROWS_AS(load_scenario(bad_query), ModelError);

    json dup_labels = minimal_doc();
    dup_labels["x"]["components"] = json::array(
        {json{{"label", "A"}, {"duration", "1"}}, json{{"label", "A"}, {"duration", "1"}}});
    CHECK_THROWS_AS(load_scenario(dup_labels), ModelError);
}

TEST_CASE("integer durations may be written as JSON numbers") {
    json doc = minimal_doc();
    doc["x"]["components"][0]["duration"] = 2;
    doc["horizon"] = 6;
    Scenario s = load_scenario(doc);
    CHECK(s.x().period() == 2);
}

TEST_CASE("event logs parse kinds, targets, and scale") {
    EventLog log = load_event_log(read_fixture("events_clip.json"));
    REQUIRE(log.events.size() == 3);
    CHECK(log.events[0].kind == EventKind::x_start);
    CHECK(log.events[1].kind == EventKind::clip);
    CHECK(log.events[1].clip_target == WatchedSide::y);
    CHECK(log.scale.k == 0);
    REQUIRE(log.policy.has_value());
    CHECK(log.policy->p == 1);
    CHECK(log.policy->q == 2);

    SECTION("fractional times scale the log") {
        json doc{{"events",
                  json::array({json{{"time", "1.5"}, {"kind", "x-start"}},
                               json{{"time", "2"}, {"kind", "y-start"}}})}};
        EventLog fine = load_event_log(doc);
        CHECK(fine.scale.k == 1);
        CHECK(fine.events[0].time == 15);
        CHECK(fine.events[1].time == 20);
    }
    SECTION("events must be time-ordered") {
        json doc{{"events",
                  json::array({json{{"time", "3"}, {"kind", "x-start"}},
                               json{{"time", "2"}, {"kind", "y-start"}}})}};
        CHECK_THROWS_AS(load_event_log(doc), OutOfOrderEventError);
    }
    SECTION("unknown kinds and clip targets are rejected") {
        json doc{{"events", json::array({json{{"time", "3"}, {"kind", "pause"}}})}};
        CHECK_THROWS_AS(load_event_log(doc), ModelError);
        json bad_target{{"events",
                         json::array({json{{"time", "3"}, {"kind", "clip"}, {"target", "z"}}})}};
        CHECK_THROWS_AS(load_event_log(bad_target), ModelError);
    }
}

TEST_CASE("actions render in the log's unit") {
    CHECK(format_action(DisableAction{WatchedSide::y, 5}, DurationScale{0}) == "disable target=y time=5");
    CHECK(format_action(HaltAction{10}, DurationScale{0}) == "halt time=10");
    CHECK(format_action(DisableAction{WatchedSide::x, 15}, DurationScale{1}) ==
          "disable target=x time=1.5");
}

TEST_CASE("the factory timeline reproduces the first three maintenance blocks") {
    Scenario s = load_scenario(read_fixture("factory.json"));
    Timeline timeline = build_timeline(s, 24);
    std::vector<Interval> maintenance;
    for (const auto& rec : timeline.incidences)
        if (rec.component == "Maintenance") maintenance.push_back(rec.span);
    CHECK(maintenance == std::vector<Interval>{{5, 8}, {13, 16}, {21, 24}});
    CHECK(timeline.cycle_boundaries.empty());

    SECTION("one full cycle shows exactly one boundary, at its end") {
        Timeline full = build_timeline(s, 56);
        CHECK(full.cycle_boundaries == std::vector<Tick>{56});
    }
    SECTION("empty and oversized windows are rejected") {
        CHECK_THROWS_AS(build_timeline(s, 0), NonPositiveDurationError);
        CHECK_THROWS_AS(build_timeline(s, 57), ModelError);
    }
    SECTION("the chart marks component initials per tick") {
        std::string chart = render_chart(s, build_timeline(s, 24));
        CHECK(chart.find("Machine") != std::string::npos);
        CHECK(chart.find("WWWWWMMM") != std::string::npos);
        CHECK(chart.find("MTWTFSS") != std::string::npos);
    }
}
