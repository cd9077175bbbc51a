#pragma once

#include <optional>
#include <string>
#include <vector>

#include "recur/eventuality.hpp"
#include "recur/interval.hpp"

namespace recur {

/// An eventuality recurring back-to-back over an anchored horizon. The
/// horizon is tiled exactly by whole periods starting at its start; any
/// other horizon is rejected.
class Recurrence {
public:
    Recurrence(Eventuality ev, Interval horizon) : ev_(std::move(ev)), horizon_(horizon) {
        Tick span = horizon_.duration();
        if (span % ev_.period() != 0)
            throw NotRecurrentError("\"" + ev_.name() + "\" does not recur over " + to_string(horizon_) +
                                    ": span " + std::to_string(span) + " is not a multiple of period " +
                                    std::to_string(ev_.period()));
    }

    const Eventuality& eventuality() const noexcept { return ev_; }
    const Interval& horizon() const noexcept { return horizon_; }
    Tick period() const noexcept { return ev_.period(); }

private:
    Eventuality ev_;
    Interval horizon_;
};

/// The consecutive period intervals of `rec` tiling `within`.
///
/// `within` must sit inside the horizon, span a whole number of periods,
/// and start on a period boundary of the anchored recurrence; anything
/// else is NotRecurrentError rather than an empty map, so a failed
/// recurrence is never mistaken for a vacuous query.
inline TimeMap eta(const Recurrence& rec, const Interval& within) {
    const Tick period = rec.period();
    if (!is_sub(within, rec.horizon()))
        throw NotRecurrentError("eta: " + to_string(within) + " is not a subinterval of the horizon " +
                                to_string(rec.horizon()));
    if (floor_mod(checked_sub(within.start(), rec.horizon().start()), period) != 0)
        throw NotRecurrentError("eta: " + to_string(within) + " does not start on a period boundary of \"" +
                                rec.eventuality().name() + "\"");
    if (within.duration() % period != 0)
        throw NotRecurrentError("eta: the span of " + to_string(within) + " is not a multiple of period " +
                                std::to_string(period));
    std::vector<Interval> entries;
    entries.reserve(static_cast<std::size_t>(within.duration() / period));
    for (Tick at = within.start(); at < within.end(); at = checked_add(at, period))
        entries.emplace_back(at, checked_add(at, period));
    return TimeMap(std::move(entries));
}

/// The unique incidence of component p inside one period interval: the
/// period-relative layout span shifted to the period's start.
inline Interval phi(const Eventuality& ev, std::size_t p, const Interval& period_interval) {
    if (p >= ev.len())
        throw IndexOutOfRangeError("phi: component ordinal " + std::to_string(p) + " outside 0.." +
                                   std::to_string(ev.len() - 1) + " of \"" + ev.name() + "\"");
    if (period_interval.duration() != ev.period())
        throw ModelError("phi: " + to_string(period_interval) + " does not span one period of \"" +
                         ev.name() + "\"");
    Tick begin = 0;
    for (std::size_t t = 0; t < p; ++t) begin += ev.comp(t).duration;
    Tick at = checked_add(period_interval.start(), begin);
    return Interval(at, checked_add(at, ev.comp(p).duration));
}

/// Two eventualities recurring over one shared horizon.
class MultiRecurrence {
public:
    MultiRecurrence(Recurrence x, Recurrence y) : x_(std::move(x)), y_(std::move(y)) {
        if (x_.horizon() != y_.horizon())
            throw ModelError("multi-recurrence needs one shared horizon, got " + to_string(x_.horizon()) +
                             " and " + to_string(y_.horizon()));
    }

    const Recurrence& x() const noexcept { return x_; }
    const Recurrence& y() const noexcept { return y_; }
    const Interval& horizon() const noexcept { return x_.horizon(); }

private:
    Recurrence x_;
    Recurrence y_;
};

/// Duration of one cycle: the least common multiple of the two periods.
inline Tick cycle_duration(const Eventuality& x, const Eventuality& y) {
    return checked_lcm(x.period(), y.period());
}

inline Tick cycle_duration(const MultiRecurrence& mr) {
    return cycle_duration(mr.x().eventuality(), mr.y().eventuality());
}

/// One cycle of a double recurrence, with its 1-based position.
struct Cycle {
    Interval interval;
    std::size_t index;
};

/// The consecutive cycles tiling the horizon. The shared horizon is a
/// common multiple of both periods, hence a multiple of their lcm, so
/// the tiling is always exact.
inline TimeMap cycles(const MultiRecurrence& mr) {
    const Tick step = cycle_duration(mr);
    std::vector<Interval> entries;
    for (Tick at = mr.horizon().start(); at < mr.horizon().end(); at = checked_add(at, step))
        entries.emplace_back(at, checked_add(at, step));
    return TimeMap(std::move(entries));
}

inline std::vector<Cycle> cycle_list(const MultiRecurrence& mr) {
    std::vector<Cycle> out;
    TimeMap tm = cycles(mr);
    for (std::size_t c = 1; c <= tm.dim(); ++c) out.push_back(Cycle{tm[c], c});
    return out;
}

/// Which of the two recurring sequences a query refers to.
enum class SequenceSide : std::uint8_t { x, y };

inline std::string_view to_string(SequenceSide s) noexcept {
    return s == SequenceSide::x ? "x" : "y";
}

/// A component of one side, or the whole sequence of one side.
struct Target {
    SequenceSide side;
    std::optional<std::size_t> component;  // absent = whole sequence

    static Target whole(SequenceSide s) noexcept { return Target{s, std::nullopt}; }
    static Target comp(SequenceSide s, std::size_t p) noexcept { return Target{s, p}; }
};

/// Maximal-incidence view of a double recurrence.
///
/// A component is maximally true exactly over its phi span in each
/// period; a whole sequence is maximally true exactly over each period.
/// Truth of a component holds over any subinterval of an incidence
/// (truth never straddles two incidences); a multi-component sequence is
/// true only where it is maximally true.
class IncidenceModel {
public:
    explicit IncidenceModel(MultiRecurrence mr) : mr_(std::move(mr)) {}

    const MultiRecurrence& multi_recurrence() const noexcept { return mr_; }

    const Recurrence& side(SequenceSide s) const noexcept {
        return s == SequenceSide::x ? mr_.x() : mr_.y();
    }

    /// All maximal incidences of the target lying inside `within`, ascending.
    std::vector<Interval> mt_intervals(const Target& target, const Interval& within) const {
        const Recurrence& rec = side(target.side);
        std::vector<Interval> out;
        for (const Interval& period : eta(rec, rec.horizon())) {
            Interval incidence =
                target.component ? phi(rec.eventuality(), *target.component, period) : period;
            if (is_sub(incidence, within)) out.push_back(incidence);
        }
        return out;
    }

    /// Truth of the target over j.
    bool tt_holds(const Target& target, const Interval& j) const {
        const Recurrence& rec = side(target.side);
        bool hereditary = target.component.has_value() || rec.eventuality().len() == 1;
        for (const Interval& period : eta(rec, rec.horizon())) {
            Interval incidence =
                target.component ? phi(rec.eventuality(), *target.component, period) : period;
            if (hereditary ? is_sub(j, incidence) : j == incidence) return true;
            if (incidence.start() > j.end()) break;
        }
        return false;
    }

private:
    MultiRecurrence mr_;
};

/// All maximal incidences of `target` inside `within` (ascending).
inline std::vector<Interval> mt_intervals(const IncidenceModel& model, const Target& target,
                                          const Interval& within) {
    return model.mt_intervals(target, within);
}

inline bool tt_holds(const IncidenceModel& model, const Target& target, const Interval& j) {
    return model.tt_holds(target, j);
}

}  // namespace recur
