#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "recur/arith.hpp"
#include "recur/error.hpp"

namespace recur {

/// The two components a running engine is keeping apart: the watched
/// component of x and the watched component of y.
enum class WatchedSide : std::uint8_t { x, y };

inline std::string_view to_string(WatchedSide t) noexcept {
    return t == WatchedSide::x ? "x" : "y";
}

inline WatchedSide opposite(WatchedSide t) noexcept {
    return t == WatchedSide::x ? WatchedSide::y : WatchedSide::x;
}

/// Which pair (x_p, y_q) is being kept apart. Both ordinals are 0-based
/// and must have a predecessor component (p >= 1, q >= 1): a start
/// trigger fires at the instant the predecessor's incidence ends, so the
/// first component of a sequence has no trigger.
struct AvoidancePolicy {
    std::size_t p;
    std::size_t q;

    AvoidancePolicy(std::size_t p_, std::size_t q_) : p(p_), q(q_) {
        if (p < 1 || q < 1)
            throw ModelError("avoidance needs a predecessor on both sides: p and q must be >= 1");
    }
};

enum class EventKind : std::uint8_t {
    x_start,  // trigger: an incidence of the watched x component is about to begin
    y_start,  // trigger: an incidence of the watched y component is about to begin
    clip,     // lift the standing disable of one watched component
};

struct TriggerEvent {
    Tick time;
    EventKind kind;
    std::optional<WatchedSide> clip_target;  // set iff kind == clip

    static TriggerEvent x_start(Tick t) { return {t, EventKind::x_start, std::nullopt}; }
    static TriggerEvent y_start(Tick t) { return {t, EventKind::y_start, std::nullopt}; }
    static TriggerEvent clip(Tick t, WatchedSide target) { return {t, EventKind::clip, target}; }
};

struct DisableAction {
    WatchedSide target;
    Tick time;

    friend bool operator==(const DisableAction&, const DisableAction&) = default;
};

struct HaltAction {
    Tick time;

    friend bool operator==(const HaltAction&, const HaltAction&) = default;
};

using Action = std::variant<DisableAction, HaltAction>;

inline std::string to_string(const Action& action) {
    if (const auto* d = std::get_if<DisableAction>(&action))
        return "disable target=" + std::string(to_string(d->target)) + " time=" + std::to_string(d->time);
    return "halt time=" + std::to_string(std::get<HaltAction>(action).time);
}

/// Running state of one avoidance engine. A disable persists from the
/// instant it was issued until a clip for the same target arrives; at
/// equal timestamps the clip is applied first, the permissive reading.
class MonitorState {
public:
    bool is_disabled(WatchedSide t) const noexcept { return disabled_since(t).has_value(); }

    std::optional<Tick> disabled_since(WatchedSide t) const noexcept {
        return t == WatchedSide::x ? disabled_x_ : disabled_y_;
    }

    bool halted() const noexcept { return halted_; }
    std::optional<Tick> last_time() const noexcept { return last_time_; }

    void set_disabled(WatchedSide t, std::optional<Tick> since) noexcept {
        (t == WatchedSide::x ? disabled_x_ : disabled_y_) = since;
    }
    void set_halted() noexcept { halted_ = true; }
    void note_time(Tick t) noexcept { last_time_ = t; }

    friend bool operator==(const MonitorState&, const MonitorState&) = default;

private:
    std::optional<Tick> disabled_x_;
    std::optional<Tick> disabled_y_;
    std::optional<Tick> last_time_;
    bool halted_ = false;
};

/// Feed one event through the engine. A start trigger for a side that is
/// not currently disabled disables the opposite side; a start trigger for
/// a disabled side does nothing; a clip lifts the standing disable of its
/// target. Events must arrive in non-decreasing time order, and a halted
/// engine accepts nothing further.
inline std::pair<MonitorState, std::vector<Action>> step(MonitorState state, const TriggerEvent& event,
                                                         const AvoidancePolicy&) {
    if (state.halted()) throw HaltedError("monitor has halted; no further events are accepted");
    if (state.last_time() && event.time < *state.last_time())
        throw OutOfOrderEventError("event at " + std::to_string(event.time) + " arrived after time " +
                                   std::to_string(*state.last_time()));
    state.note_time(event.time);
    std::vector<Action> actions;
    switch (event.kind) {
        case EventKind::clip:
            state.set_disabled(event.clip_target.value(), std::nullopt);
            break;
        case EventKind::x_start:
            if (!state.is_disabled(WatchedSide::x)) {
                state.set_disabled(WatchedSide::y, event.time);
                actions.push_back(DisableAction{WatchedSide::y, event.time});
            }
            break;
        case EventKind::y_start:
            if (!state.is_disabled(WatchedSide::y)) {
                state.set_disabled(WatchedSide::x, event.time);
                actions.push_back(DisableAction{WatchedSide::x, event.time});
            }
            break;
    }
    return {state, std::move(actions)};
}

/// Replay a whole trigger stream. Events sharing a timestamp are one
/// instant: if both watched components receive a start trigger at the
/// same instant the engine emits a single halt and stops, leaving the
/// deadlock to external intervention; otherwise clips at that instant
/// are applied before start triggers.
inline std::vector<Action> run(std::span<const TriggerEvent> events, const AvoidancePolicy& policy) {
    std::vector<Action> actions;
    MonitorState state;
    std::size_t i = 0;
    while (i < events.size()) {
        if (state.last_time() && events[i].time < *state.last_time())
            throw OutOfOrderEventError("event at " + std::to_string(events[i].time) +
                                       " arrived after time " + std::to_string(*state.last_time()));
        std::size_t group_end = i;
        while (group_end < events.size() && events[group_end].time == events[i].time) ++group_end;
        bool has_x = false, has_y = false;
        for (std::size_t k = i; k < group_end; ++k) {
            has_x = has_x || events[k].kind == EventKind::x_start;
            has_y = has_y || events[k].kind == EventKind::y_start;
        }
        if (has_x && has_y) {
            actions.push_back(HaltAction{events[i].time});
            return actions;
        }
        for (std::size_t k = i; k < group_end; ++k)
            if (events[k].kind == EventKind::clip) {
                auto [next, acts] = step(std::move(state), events[k], policy);
                state = std::move(next);
                actions.insert(actions.end(), acts.begin(), acts.end());
            }
        for (std::size_t k = i; k < group_end; ++k)
            if (events[k].kind != EventKind::clip) {
                auto [next, acts] = step(std::move(state), events[k], policy);
                state = std::move(next);
                actions.insert(actions.end(), acts.begin(), acts.end());
            }
        i = group_end;
    }
    return actions;
}

}  // namespace recur
