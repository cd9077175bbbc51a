#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "recur/axiom_check.hpp"
#include "support/random_model.hpp"

using namespace recur;

namespace {

MultiRecurrence factory() {
    Eventuality machine("Machine", {Component("Working", 5), Component("Maintenance", 3)});
    std::vector<Component> days;
    for (const char* d : {"Mon", "Tue", "Wed", "Thu", "Fri", "Sat", "Sun"}) days.emplace_back(d, 1);
    Interval horizon(0, 56);
    return MultiRecurrence(Recurrence(std::move(machine), horizon),
                           Recurrence(Eventuality("Week", std::move(days)), horizon));
}

constexpr const char* kExpectedChecks[] = {
    "interval-truth-exclusivity", "sequence-decomposition",   "sequence-truth-is-maximal",
    "maximal-implies-true",       "truth-within-maximal",     "fixed-duration",
    "period-duration-uniform",    "component-mutual-exclusion",
    "coincidence-commutative",    "coincidence-downward-hereditary",
    "coincidence-triple-containment",
    "period-tiling",              "horizon-period-multiple",  "double-recurrence-endpoints",
    "cycle-tiling",               "cycle-period-alignment",   "cycle-decomposition",
    "period-probe",               "incidence-is-unique-phi",
};

}  // namespace

TEST_CASE("the factory model satisfies every structural law") {
    ConsistencyReport report = check_axioms(factory());
    for (const auto& check : report.checks) {
        INFO(check.name);
        CHECK(check.passed());
    }
    REQUIRE(report.all_passed());
    CHECK(report.total_violations() == 0);
    CHECK(report.total_instances() > 1000);
    for (const char* name : kExpectedChecks) {
        INFO(name);
        const CheckResult* check = report.find(name);
        REQUIRE(check != nullptr);
    }
}

TEST_CASE("a two-by-three single-component pair passes") {
    Interval horizon(0, 6);
    MultiRecurrence mr(Recurrence(Eventuality("x", {Component("A", 2)}), horizon),
                       Recurrence(Eventuality("y", {Component("B", 3)}), horizon));
    REQUIRE(check_axioms(mr).all_passed());
}

TEST_CASE("random small models all pass") {
    std::mt19937 rng(211);
    testgen::ModelParams params;
    params.max_components = 3;
    params.max_duration = 4;
    params.cycles = 2;
    for (int round = 0; round < 25; ++round) {
        MultiRecurrence mr = testgen::random_multi_recurrence(rng, params);
        ConsistencyReport report = check_axioms(mr);
        INFO("round " << round);
        REQUIRE(report.all_passed());
    }
}

TEST_CASE("a shifted incidence breaks mutual exclusion and is reported") {
    MultiRecurrence mr = factory();
    IncidenceTable x = build_incidence_table(mr.x());
    IncidenceTable y = build_incidence_table(mr.y());
    // slide one maintenance incidence a day late: [5, 8) becomes [6, 9)
    REQUIRE(x.components[1][0] == Interval(5, 8));
    x.components[1][0] = Interval(6, 9);

    ConsistencyReport report = check_axioms_on(mr, x, y);
    REQUIRE_FALSE(report.all_passed());
    const CheckResult* exclusion = report.find("component-mutual-exclusion");
    REQUIRE(exclusion != nullptr);
    CHECK(exclusion->violation_count > 0);
    CHECK_FALSE(exclusion->messages.empty());
}

TEST_CASE("models too large to enumerate are refused") {
    Interval horizon(0, 4000);
    MultiRecurrence mr(Recurrence(Eventuality("x", {Component("A", 2)}), horizon),
                       Recurrence(Eventuality("y", {Component("B", 4)}), horizon));
    CHECK_THROWS_AS(check_axioms(mr), HorizonTooLargeError);
    CheckOptions roomy;
    roomy.max_grid_points = 20000;
    CHECK(check_axioms(mr, roomy).all_passed());
}

TEST_CASE("violation messages are capped but counted in full") {
    MultiRecurrence mr = factory();
    IncidenceTable x = build_incidence_table(mr.x());
    IncidenceTable y = build_incidence_table(mr.y());
    for (std::size_t r = 0; r < x.components[1].size(); ++r) {
        Interval shifted(x.components[1][r].start() + 1, x.components[1][r].end() + 1);
        x.components[1][r] = shifted;
    }
    CheckOptions options;
    options.max_messages_per_check = 2;
    ConsistencyReport report = check_axioms_on(mr, x, y, options);
    const CheckResult* exclusion = report.find("component-mutual-exclusion");
    REQUIRE(exclusion != nullptr);
    CHECK(exclusion->violation_count >= 6);  // the final shift has no successor to hit
    CHECK(exclusion->messages.size() == 2);
}
