// Command line front end: scenario validation, cycle maps, coincidence
// queries against any of the three engines, timeline rendering, the
// consistency suite, and avoidance-monitor replay.
//
// Exit codes: 0 success / coincidence found, 1 usage or validation error,
// 3 coincidence impossible, 4 monitor halted.

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "recur/recur.hpp"

namespace {

constexpr int kExitFound = 0;
constexpr int kExitError = 1;
constexpr int kExitImpossible = 3;
constexpr int kExitHalted = 4;

recur::json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw recur::Error("cannot open \"" + path + "\"");
    recur::json doc;
    in >> doc;
    return doc;
}

recur::Scenario read_scenario(const std::string& path) {
    return recur::load_scenario(read_json_file(path));
}

enum class Format { text, json };

struct FormatOption {
    std::string value = "text";
    Format get() const {
        if (value == "text") return Format::text;
        if (value == "json") return Format::json;
        throw recur::Error("unknown format \"" + value + "\" (expected text or json)");
    }
};

recur::json interval_json(const recur::Scenario& s, const recur::Interval& i) {
    return {{"start", s.format(i.start())}, {"end", s.format(i.end())}};
}

struct ScenarioQueryRun {
    std::string x;
    std::string y;
    recur::Decision decision;
};

int cmd_validate(const recur::Scenario& s, Format format) {
    const auto& mr = s.mr;
    if (format == Format::json) {
        recur::json doc{{"scenario", "valid"},
                        {"x", {{"name", s.x().name()},
                               {"components", s.x().len()},
                               {"period", s.format(s.x().period())}}},
                        {"y", {{"name", s.y().name()},
                               {"components", s.y().len()},
                               {"period", s.format(s.y().period())}}},
                        {"scale_k", s.scale.k},
                        {"anchor", s.format(mr.horizon().start())},
                        {"horizon", interval_json(s, mr.horizon())},
                        {"cycle_duration", s.format(recur::cycle_duration(mr))},
                        {"cycles", recur::cycles(mr).dim()}};
        std::cout << doc.dump(2) << "\n";
        return kExitFound;
    }
    std::cout << "scenario: valid\n";
    std::cout << "x: " << s.x().name() << " components=" << s.x().len()
              << " period=" << s.format(s.x().period()) << "\n";
    std::cout << "y: " << s.y().name() << " components=" << s.y().len()
              << " period=" << s.format(s.y().period()) << "\n";
    std::cout << "scale-k: " << s.scale.k << "\n";
    std::cout << "anchor: " << s.format(mr.horizon().start()) << "\n";
    std::cout << "horizon: " << s.format(mr.horizon()) << "\n";
    std::cout << "cycle-duration: " << s.format(recur::cycle_duration(mr)) << "\n";
    std::cout << "cycles: " << recur::cycles(mr).dim() << "\n";
    return kExitFound;
}

int cmd_cycle(const recur::Scenario& s, Format format) {
    recur::TimeMap map = recur::cycles(s.mr);
    if (format == Format::json) {
        recur::json list = recur::json::array();
        for (std::size_t c = 1; c <= map.dim(); ++c) {
            recur::json entry = interval_json(s, map[c]);
            entry["index"] = c;
            list.push_back(entry);
        }
        recur::json doc{{"cycle_duration", s.format(recur::cycle_duration(s.mr))}, {"cycles", list}};
        std::cout << doc.dump(2) << "\n";
        return kExitFound;
    }
    std::cout << "cycle-duration: " << s.format(recur::cycle_duration(s.mr)) << "\n";
    std::cout << "cycles: " << map.dim() << "\n";
    for (std::size_t c = 1; c <= map.dim(); ++c)
        std::cout << "cycle: " << c << " " << s.format(map[c]) << "\n";
    return kExitFound;
}

recur::json decision_json(const recur::Scenario& s, const std::string& engine,
                          const std::string& x_label, const std::string& y_label,
                          const recur::Decision& decision) {
    recur::json doc{{"engine", engine},
                    {"x", x_label},
                    {"y", y_label},
                    {"result", decision.found() ? "found" : "impossible"},
                    {"pairs_checked", decision.pairs_checked},
                    {"cycles_examined", decision.cycles_examined}};
    if (decision.found()) {
        doc["witness"] = {{"r", decision.witness->r},
                          {"s", decision.witness->s},
                          {"overlap", interval_json(s, decision.witness->overlap)}};
    }
    return doc;
}

void print_decision_text(const recur::Scenario& s, const std::string& engine,
                         const std::string& x_label, const std::string& y_label,
                         const recur::Decision& decision) {
    std::cout << "engine: " << engine << "\n";
    std::cout << "x: " << x_label << "\n";
    std::cout << "y: " << y_label << "\n";
    std::cout << "result: " << (decision.found() ? "found" : "impossible") << "\n";
    if (decision.found()) {
        std::cout << "r: " << decision.witness->r << "\n";
        std::cout << "s: " << decision.witness->s << "\n";
        std::cout << "overlap: " << s.format(decision.witness->overlap) << "\n";
    }
    std::cout << "pairs-checked: " << decision.pairs_checked << "\n";
    std::cout << "cycles-examined: " << decision.cycles_examined << "\n";
}

int cmd_coincide(const recur::Scenario& s, std::string x_label, std::string y_label,
                 const std::string& engine, Format format) {
    auto solve = [&](const recur::CoincidenceQuery& query) {
        if (engine == "cycle") return recur::solve_in_cycle(s.mr, query);
        if (engine == "oracle") return recur::solve_brute_force(s.mr, query);
        if (engine == "residue") return recur::solve_residue(s.mr, query);
        throw recur::Error("unknown engine \"" + engine + "\" (expected cycle, oracle, or residue)");
    };
    std::vector<ScenarioQueryRun> runs;
    if (!x_label.empty() || !y_label.empty()) {
        if (x_label.empty() || y_label.empty())
            throw recur::Error("coincide needs both component labels (or neither, to run the "
                               "scenario's query list)");
        runs.push_back({x_label, y_label, solve(s.resolve(x_label, y_label))});
    } else {
        if (s.queries.empty())
            throw recur::Error("no labels given and the scenario declares no queries");
        for (const auto& q : s.queries)
            runs.push_back({q.x_label, q.y_label, solve(s.resolve(q.x_label, q.y_label))});
    }

    bool any_found = false;
    for (const auto& r : runs) any_found = any_found || r.decision.found();
    if (format == Format::json) {
        if (runs.size() == 1) {
            std::cout << decision_json(s, engine, runs[0].x, runs[0].y, runs[0].decision).dump(2) << "\n";
        } else {
            recur::json list = recur::json::array();
            for (const auto& r : runs) list.push_back(decision_json(s, engine, r.x, r.y, r.decision));
            std::cout << list.dump(2) << "\n";
        }
    } else {
        bool first = true;
        for (const auto& r : runs) {
            if (!first) std::cout << "\n";
            print_decision_text(s, engine, r.x, r.y, r.decision);
            first = false;
        }
    }
    return any_found ? kExitFound : kExitImpossible;
}

int cmd_timeline(const recur::Scenario& s, const std::string& until_text, Format format) {
    recur::Tick until_span = recur::parse_scaled(until_text, s.scale);
    recur::Timeline timeline = recur::build_timeline(s, until_span);
    if (format == Format::json) {
        recur::json incidences = recur::json::array();
        for (const auto& rec : timeline.incidences) {
            recur::json entry = interval_json(s, rec.span);
            entry["sequence"] = std::string(recur::to_string(rec.side));
            entry["eventuality"] = rec.eventuality;
            entry["component"] = rec.component;
            incidences.push_back(entry);
        }
        recur::json boundaries = recur::json::array();
        for (recur::Tick b : timeline.cycle_boundaries) boundaries.push_back(s.format(b));
        recur::json doc{{"window", s.format(timeline.window)},
                        {"incidences", incidences},
                        {"cycle_boundaries", boundaries},
                        {"chart", recur::render_chart(s, timeline)}};
        std::cout << doc.dump(2) << "\n";
        return kExitFound;
    }
    std::cout << "window: " << s.format(timeline.window) << "\n";
    for (const auto& rec : timeline.incidences)
        std::cout << "incidence: " << recur::to_string(rec.side) << " " << rec.eventuality << " "
                  << rec.component << " " << s.format(rec.span) << "\n";
    for (recur::Tick b : timeline.cycle_boundaries)
        std::cout << "cycle-boundary: " << s.format(b) << "\n";
    std::cout << "chart:\n" << recur::render_chart(s, timeline);
    return kExitFound;
}

int cmd_check_axioms(const recur::Scenario& s, Format format) {
    recur::ConsistencyReport report = recur::check_axioms(s.mr);
    if (format == Format::json) {
        recur::json checks = recur::json::array();
        for (const auto& c : report.checks) {
            recur::json entry{{"name", c.name}, {"instances", c.instances}, {"violations", c.violation_count}};
            if (!c.messages.empty()) entry["messages"] = c.messages;
            checks.push_back(entry);
        }
        recur::json doc{{"checks", checks}, {"result", report.all_passed() ? "pass" : "fail"}};
        std::cout << doc.dump(2) << "\n";
    } else {
        for (const auto& c : report.checks) {
            std::cout << "check: " << c.name << " instances=" << c.instances
                      << " violations=" << c.violation_count << "\n";
            for (const auto& m : c.messages) std::cout << "  violation: " << m << "\n";
        }
        std::cout << "result: " << (report.all_passed() ? "pass" : "fail") << "\n";
    }
    return report.all_passed() ? kExitFound : kExitError;
}

int cmd_simulate(const std::string& events_path, const std::string& scenario_path,
                 const std::string& x_label, const std::string& y_label, Format format) {
    recur::EventLog log = recur::load_event_log(read_json_file(events_path));
    std::optional<recur::AvoidancePolicy> policy = log.policy;
    if (!scenario_path.empty() && !x_label.empty() && !y_label.empty()) {
        recur::Scenario s = read_scenario(scenario_path);
        recur::CoincidenceQuery q = s.resolve(x_label, y_label);
        policy.emplace(q.p, q.q);
    }
    if (!policy)
        throw recur::Error("no avoidance pair: give --scenario with --x/--y labels, or a \"policy\" "
                           "field in the event log");
    std::vector<recur::Action> actions = recur::run(log.events, *policy);
    bool halted = !actions.empty() && std::holds_alternative<recur::HaltAction>(actions.back());
    if (format == Format::json) {
        recur::json list = recur::json::array();
        for (const auto& a : actions) {
            if (const auto* d = std::get_if<recur::DisableAction>(&a))
                list.push_back({{"type", "disable"},
                                {"target", std::string(recur::to_string(d->target))},
                                {"time", recur::format_ticks(d->time, log.scale)}});
            else
                list.push_back({{"type", "halt"},
                                {"time", recur::format_ticks(std::get<recur::HaltAction>(a).time,
                                                             log.scale)}});
        }
        recur::json doc{{"actions", list}, {"halted", halted}};
        std::cout << doc.dump(2) << "\n";
    } else {
        for (const auto& a : actions) std::cout << "action: " << recur::format_action(a, log.scale) << "\n";
    }
    return halted ? kExitHalted : kExitFound;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact reasoning about recurring fixed-duration schedules"};
    app.require_subcommand(1);

    std::string scenario_path, x_label, y_label, engine = "cycle", until_text, events_path;
    FormatOption format;

    auto add_scenario = [&](CLI::App* cmd, bool required = true) {
        auto* opt = cmd->add_option("--scenario", scenario_path, "scenario file (JSON)");
        if (required) opt->required();
        cmd->add_option("--format", format.value, "output format: text or json")
            ->check(CLI::IsMember({"text", "json"}));
    };

    CLI::App* validate = app.add_subcommand("validate", "parse a scenario and print its normalized shape");
    add_scenario(validate);

    CLI::App* cycle = app.add_subcommand("cycle", "print the cycle duration and cycle map");
    add_scenario(cycle);

    CLI::App* coincide = app.add_subcommand("coincide", "decide whether two components ever overlap");
    add_scenario(coincide);
    coincide->add_option("x_label", x_label, "component label in x");
    coincide->add_option("y_label", y_label, "component label in y");
    coincide->add_option("--x", x_label, "component label in x");
    coincide->add_option("--y", y_label, "component label in y");
    coincide->add_option("--engine", engine, "cycle, oracle, or residue")
        ->check(CLI::IsMember({"cycle", "oracle", "residue"}));

    CLI::App* oracle = app.add_subcommand("oracle", "coincide via the whole-horizon reference engine");
    add_scenario(oracle);
    oracle->add_option("x_label", x_label, "component label in x");
    oracle->add_option("y_label", y_label, "component label in y");
    oracle->add_option("--x", x_label, "component label in x");
    oracle->add_option("--y", y_label, "component label in y");

    CLI::App* timeline = app.add_subcommand("timeline", "list incidences and draw a chart");
    add_scenario(timeline);
    timeline->add_option("--until", until_text, "window length in the scenario's unit")->required();

    CLI::App* check = app.add_subcommand("check-axioms", "run the model consistency suite");
    add_scenario(check);

    CLI::App* simulate = app.add_subcommand("simulate", "replay a trigger stream through the monitor");
    simulate->add_option("--events", events_path, "event log file (JSON)")->required();
    add_scenario(simulate, /*required=*/false);
    simulate->add_option("--x", x_label, "watched component label in x");
    simulate->add_option("--y", y_label, "watched component label in y");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitError;
    }

    try {
        if (app.got_subcommand(validate)) return cmd_validate(read_scenario(scenario_path), format.get());
        if (app.got_subcommand(cycle)) return cmd_cycle(read_scenario(scenario_path), format.get());
        if (app.got_subcommand(coincide))
            return cmd_coincide(read_scenario(scenario_path), x_label, y_label, engine, format.get());
        if (app.got_subcommand(oracle))
            return cmd_coincide(read_scenario(scenario_path), x_label, y_label, "oracle", format.get());
        if (app.got_subcommand(timeline))
            return cmd_timeline(read_scenario(scenario_path), until_text, format.get());
        if (app.got_subcommand(check)) return cmd_check_axioms(read_scenario(scenario_path), format.get());
        if (app.got_subcommand(simulate))
            return cmd_simulate(events_path, scenario_path, x_label, y_label, format.get());
    } catch (const recur::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const recur::json::exception& e) {
        std::cerr << "error: invalid JSON: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
