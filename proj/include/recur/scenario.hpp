#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "recur/coincidence.hpp"
#include "recur/decimal.hpp"
#include "recur/monitor.hpp"
#include "recur/recurrence.hpp"

namespace recur {

using json = nlohmann::json;

struct ScenarioQuery {
    std::string x_label;
    std::string y_label;
};

/// A normalized scenario: two eventualities recurring from a shared
/// anchor over a horizon, all rescaled to integer ticks, plus the scale
/// needed to render results back in the file's original unit.
struct Scenario {
    MultiRecurrence mr;
    DurationScale scale;
    std::vector<ScenarioQuery> queries;

    const Eventuality& x() const noexcept { return mr.x().eventuality(); }
    const Eventuality& y() const noexcept { return mr.y().eventuality(); }

    /// Map component labels to query ordinals.
    CoincidenceQuery resolve(std::string_view x_label, std::string_view y_label) const {
        auto p = x().index_of(x_label);
        if (!p) throw ModelError("\"" + x().name() + "\" has no component labeled \"" + std::string(x_label) + "\"");
        auto q = y().index_of(y_label);
        if (!q) throw ModelError("\"" + y().name() + "\" has no component labeled \"" + std::string(y_label) + "\"");
        return CoincidenceQuery{*p, *q};
    }

    std::string format(Tick t) const { return format_ticks(t, scale); }
    std::string format(const Interval& i) const {
        return "[" + format(i.start()) + ", " + format(i.end()) + ")";
    }
};

namespace detail {

inline std::string json_decimal(const json& value, const std::string& where) {
    if (value.is_string()) return value.get<std::string>();
    if (value.is_number_integer()) return std::to_string(value.get<long long>());
    throw ModelError(where + " must be a decimal string (or integer), got: " + value.dump());
}

inline const json& require(const json& obj, const char* key, const std::string& where) {
    if (!obj.is_object() || !obj.contains(key))
        throw ModelError(where + " is missing required field \"" + key + "\"");
    return obj.at(key);
}

/// Anchors may be written as a decimal tick or as a weekday name, which
/// maps to the day index with Monday first ("monday" -> 0 .. "sunday" -> 6).
inline std::string anchor_numeral(const json& anchor) {
    if (!anchor.is_string()) return json_decimal(anchor, "\"anchor\"");
    std::string text = anchor.get<std::string>();
    std::string lower = text;
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    const char* days[] = {"monday", "tuesday", "wednesday", "thursday", "friday", "saturday", "sunday"};
    for (int d = 0; d < 7; ++d)
        if (lower == days[d]) return std::to_string(d);
    return text;
}

struct RawEventuality {
    std::string name;
    std::vector<std::pair<std::string, std::string>> components;  // label, duration numeral
};

inline RawEventuality parse_eventuality(const json& node, const std::string& where) {
    RawEventuality out;
    out.name = require(node, "name", where).get<std::string>();
    const json& comps = require(node, "components", where);
    if (!comps.is_array() || comps.empty())
        throw ModelError(where + ".components must be a non-empty array");
    for (const json& c : comps) {
        std::string label = require(c, "label", where + ".components[]").get<std::string>();
        std::string duration = json_decimal(require(c, "duration", where + ".components[]"),
                                            where + ".components[] duration");
        out.components.emplace_back(std::move(label), std::move(duration));
    }
    return out;
}

}  // namespace detail

/// Build a normalized scenario from its JSON document.
///
/// Every duration, the horizon length, and a numeric anchor share one
/// decimal unit; the whole model is rescaled so the finest written
/// decimal place becomes one tick.
inline Scenario load_scenario(const json& doc) {
    auto raw_x = detail::parse_eventuality(detail::require(doc, "x", "scenario"), "\"x\"");
    auto raw_y = detail::parse_eventuality(detail::require(doc, "y", "scenario"), "\"y\"");
    std::string horizon_text = detail::json_decimal(detail::require(doc, "horizon", "scenario"), "\"horizon\"");
    std::string anchor_text =
        doc.contains("anchor") ? detail::anchor_numeral(doc.at("anchor")) : std::string("0");

    std::vector<std::string> durations;
    for (const auto& [label, duration] : raw_x.components) durations.push_back(duration);
    for (const auto& [label, duration] : raw_y.components) durations.push_back(duration);
    durations.push_back(horizon_text);
    auto [ticks, scale] = normalize_durations(durations);
    if (unsigned anchor_places = decimal_places(anchor_text); anchor_places > scale.k) {
        scale.k = anchor_places;  // the anchor carries the finest decimal place
        ticks.clear();
        for (const auto& d : durations) ticks.push_back(parse_scaled(d, scale));
    }
    Tick anchor = parse_scaled(anchor_text, scale);

    std::vector<Component> comps_x, comps_y;
    std::size_t at = 0;
    for (const auto& [label, duration] : raw_x.components) comps_x.emplace_back(label, ticks[at++]);
    for (const auto& [label, duration] : raw_y.components) comps_y.emplace_back(label, ticks[at++]);
    Tick horizon_span = ticks[at];
    Interval horizon(anchor, checked_add(anchor, horizon_span));

    Scenario out{MultiRecurrence(Recurrence(Eventuality(raw_x.name, std::move(comps_x)), horizon),
                                 Recurrence(Eventuality(raw_y.name, std::move(comps_y)), horizon)),
                 scale,
                 {}};
    if (doc.contains("queries")) {
        for (const json& q : doc.at("queries")) {
            ScenarioQuery query{detail::require(q, "x", "queries[]").get<std::string>(),
                                detail::require(q, "y", "queries[]").get<std::string>()};
            out.resolve(query.x_label, query.y_label);  // labels must resolve
            out.queries.push_back(std::move(query));
        }
    }
    return out;
}

/// Canonical JSON for a normalized scenario, durations rendered in the
/// original unit at the scenario's scale.
inline json scenario_to_json(const Scenario& scenario) {
    auto eventuality_json = [&](const Eventuality& ev) {
        json comps = json::array();
        for (const auto& c : ev.components())
            comps.push_back({{"label", c.label}, {"duration", scenario.format(c.duration)}});
        return json{{"name", ev.name()}, {"components", comps}};
    };
    json doc{{"x", eventuality_json(scenario.x())},
             {"y", eventuality_json(scenario.y())},
             {"anchor", scenario.format(scenario.mr.horizon().start())},
             {"horizon", scenario.format(scenario.mr.horizon().duration())}};
    if (!scenario.queries.empty()) {
        json queries = json::array();
        for (const auto& q : scenario.queries) queries.push_back({{"x", q.x_label}, {"y", q.y_label}});
        doc["queries"] = queries;
    }
    return doc;
}

/// A parsed trigger stream: the events in file order, the decimal scale
/// shared by their timestamps, and the avoidance pair if the file names
/// one.
struct EventLog {
    std::vector<TriggerEvent> events;
    DurationScale scale;
    std::optional<AvoidancePolicy> policy;
};

/// The one action rendering used everywhere: timestamps go back to the
/// log's original unit.
inline std::string format_action(const Action& action, DurationScale scale) {
    if (const auto* d = std::get_if<DisableAction>(&action))
        return "disable target=" + std::string(to_string(d->target)) +
               " time=" + format_ticks(d->time, scale);
    return "halt time=" + format_ticks(std::get<HaltAction>(action).time, scale);
}

inline EventLog load_event_log(const json& doc) {
    EventLog out;
    const json& events = detail::require(doc, "events", "event log");
    if (!events.is_array()) throw ModelError("\"events\" must be an array");

    unsigned k = 0;
    std::vector<std::string> times;
    for (const json& e : events) {
        times.push_back(detail::json_decimal(detail::require(e, "time", "events[]"), "events[] time"));
        k = std::max(k, decimal_places(times.back()));
    }
    out.scale = DurationScale{k};

    std::size_t at = 0;
    for (const json& e : events) {
        Tick t = parse_scaled(times[at++], out.scale);
        std::string kind = detail::require(e, "kind", "events[]").get<std::string>();
        if (kind == "x-start") {
            out.events.push_back(TriggerEvent::x_start(t));
        } else if (kind == "y-start") {
            out.events.push_back(TriggerEvent::y_start(t));
        } else if (kind == "clip") {
            std::string target = detail::require(e, "target", "clip event").get<std::string>();
            if (target != "x" && target != "y")
                throw ModelError("clip target must be \"x\" or \"y\", got \"" + target + "\"");
            out.events.push_back(
                TriggerEvent::clip(t, target == "x" ? WatchedSide::x : WatchedSide::y));
        } else {
            throw ModelError("unknown event kind \"" + kind + "\"");
        }
        if (out.events.size() >= 2 && out.events[out.events.size() - 2].time > t)
            throw OutOfOrderEventError("event log times must be non-decreasing, saw " +
                                       times[at - 2] + " then " + times[at - 1]);
    }
    if (doc.contains("policy")) {
        const json& p = doc.at("policy");
        out.policy.emplace(detail::require(p, "p", "policy").get<std::size_t>(),
                           detail::require(p, "q", "policy").get<std::size_t>());
    }
    return out;
}

}  // namespace recur
