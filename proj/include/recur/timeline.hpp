#pragma once

#include <string>
#include <vector>

#include "recur/scenario.hpp"

namespace recur {

struct IncidenceRecord {
    SequenceSide side;
    std::string eventuality;
    std::string component;
    Interval span;
};

/// Every component incidence of both sequences up to `until`, plus the
/// cycle boundaries reached by then.
struct Timeline {
    Interval window;                         // [anchor, until)
    std::vector<IncidenceRecord> incidences; // x rows first, then y, ascending
    std::vector<Tick> cycle_boundaries;      // anchor + c * lcm, 0 < boundary <= until
};

/// Collect the incidences of the first `until_span` ticks. The window
/// must be a non-empty prefix of the horizon; it need not end on a
/// period boundary, and incidences are clipped out (not truncated) when
/// they extend past it.
inline Timeline build_timeline(const Scenario& scenario, Tick until_span) {
    const Interval horizon = scenario.mr.horizon();
    if (until_span <= 0)
        throw NonPositiveDurationError("timeline window must cover at least one tick");
    if (until_span > horizon.duration())
        throw ModelError("timeline window of " + scenario.format(until_span) +
                         " exceeds the horizon span " + scenario.format(horizon.duration()));
    Timeline out{Interval(horizon.start(), checked_add(horizon.start(), until_span)), {}, {}};

    for (SequenceSide side : {SequenceSide::x, SequenceSide::y}) {
        const Recurrence& rec = side == SequenceSide::x ? scenario.mr.x() : scenario.mr.y();
        const Eventuality& ev = rec.eventuality();
        for (const Interval& period : eta(rec, rec.horizon())) {
            if (period.start() >= out.window.end()) break;
            for (std::size_t p = 0; p < ev.len(); ++p) {
                Interval incidence = phi(ev, p, period);
                if (!is_sub(incidence, out.window)) continue;
                out.incidences.push_back(IncidenceRecord{side, ev.name(), ev.comp(p).label, incidence});
            }
        }
    }
    const Tick lcm = cycle_duration(scenario.mr);
    for (Tick boundary = checked_add(horizon.start(), lcm); boundary <= out.window.end();
         boundary = checked_add(boundary, lcm))
        out.cycle_boundaries.push_back(boundary);
    return out;
}

/// Fixed-width chart: one row per sequence with the first letter of each
/// component's label in every tick cell, and a marker row for cycle
/// boundaries. Meant for eyeballing small windows.
inline std::string render_chart(const Scenario& scenario, const Timeline& timeline) {
    const Tick width = timeline.window.duration();
    const Tick origin = timeline.window.start();
    std::string header(static_cast<std::size_t>(width), ' ');
    for (Tick t = 0; t < width; t += 10) {
        std::string tick_label = scenario.format(checked_add(origin, t));
        for (std::size_t c = 0; c < tick_label.size() && t + static_cast<Tick>(c) < width; ++c)
            header[static_cast<std::size_t>(t) + c] = tick_label[c];
    }

    std::size_t name_width = 0;
    for (const auto& rec : timeline.incidences) name_width = std::max(name_width, rec.eventuality.size());
    name_width = std::max(name_width, std::string("cycles").size());

    auto row = [&](const std::string& label, const std::string& cells) {
        return label + std::string(name_width - label.size(), ' ') + " |" + cells + "|\n";
    };

    std::string chart = row("", header);
    for (SequenceSide side : {SequenceSide::x, SequenceSide::y}) {
        std::string cells(static_cast<std::size_t>(width), '.');
        std::string name;
        for (const auto& rec : timeline.incidences) {
            if (rec.side != side) continue;
            name = rec.eventuality;
            char mark = rec.component.empty() ? '?' : rec.component.front();
            for (Tick t = rec.span.start(); t < rec.span.end(); ++t)
                cells[static_cast<std::size_t>(t - origin)] = mark;
        }
        if (!name.empty()) chart += row(name, cells);
    }
    std::string boundary_cells(static_cast<std::size_t>(width), ' ');
    for (Tick b : timeline.cycle_boundaries)
        if (b - origin < width) boundary_cells[static_cast<std::size_t>(b - origin)] = '|';
    chart += row("cycles", boundary_cells);
    return chart;
}

}  // namespace recur
