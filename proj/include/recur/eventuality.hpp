#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "recur/interval.hpp"

namespace recur {

/// One labeled step of an eventuality sequence. Every incidence of the
/// component lasts exactly `duration` ticks.
struct Component {
    std::string label;
    Tick duration;

    Component(std::string label_, Tick duration_) : label(std::move(label_)), duration(duration_) {
        if (duration < 1)
            throw NonPositiveDurationError("component \"" + label + "\" needs a duration of at least 1 tick");
    }

    friend bool operator==(const Component&, const Component&) = default;
};

/// An ordered, non-empty sequence of fixed-duration components. A simple
/// eventuality is the one-component case. One full pass through the
/// components is a period; its duration is the sum of the components'.
class Eventuality {
public:
    Eventuality(std::string name, std::vector<Component> components)
        : name_(std::move(name)), components_(std::move(components)) {
        if (components_.empty())
            throw ModelError("eventuality \"" + name_ + "\" needs at least one component");
        std::unordered_set<std::string_view> seen;
        period_ = 0;
        for (const auto& c : components_) {
            if (!seen.insert(c.label).second)
                throw ModelError("eventuality \"" + name_ + "\" repeats component label \"" + c.label + "\"");
            period_ = checked_add(period_, c.duration);
        }
    }

    const std::string& name() const noexcept { return name_; }
    const std::vector<Component>& components() const noexcept { return components_; }
    std::size_t len() const noexcept { return components_.size(); }
    Tick period() const noexcept { return period_; }

    /// The p-th component, 0-based (the first component is comp(0)).
    const Component& comp(std::size_t p) const {
        if (p >= components_.size())
            throw IndexOutOfRangeError("component ordinal " + std::to_string(p) + " outside 0.." +
                                       std::to_string(components_.size() - 1) + " of \"" + name_ + "\"");
        return components_[p];
    }

    /// Ordinal of the component carrying `label`, if any.
    std::optional<std::size_t> index_of(std::string_view label) const noexcept {
        for (std::size_t p = 0; p < components_.size(); ++p)
            if (components_[p].label == label) return p;
        return std::nullopt;
    }

    friend bool operator==(const Eventuality&, const Eventuality&) = default;

private:
    std::string name_;
    std::vector<Component> components_;
    Tick period_;
};

inline Tick period_duration(const Eventuality& ev) noexcept { return ev.period(); }

/// Free-function form of Eventuality::comp.
inline const Component& comp(const Eventuality& ev, std::size_t p) { return ev.comp(p); }

/// Where each component sits inside one period, as spans relative to the
/// period start. Spans tile [0, period) with no gaps and no overlaps.
struct PeriodLayout {
    std::vector<Interval> offsets;  // offsets[p] covers component p
};

inline PeriodLayout layout(const Eventuality& ev) {
    PeriodLayout out;
    out.offsets.reserve(ev.len());
    Tick at = 0;
    for (const auto& c : ev.components()) {
        Tick next = checked_add(at, c.duration);
        out.offsets.emplace_back(at, next);
        at = next;
    }
    return out;
}

/// The shared part of two incidence intervals: the coincidence interval
/// of the pair, or absent when they are disjoint (meeting included).
inline std::optional<Interval> plus_interval(const Interval& i, const Interval& j) {
    if (is_disjoint(i, j)) return std::nullopt;
    return common(i, j);
}

}  // namespace recur
