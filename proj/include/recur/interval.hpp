#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "recur/arith.hpp"
#include "recur/error.hpp"

namespace recur {

/// Half-open span of integer ticks [start, end), always non-empty.
///
/// With half-open bounds, "i meets j" is the exact endpoint equality
/// i.end() == j.start(), and every qualitative relation below reduces
/// to a handful of integer comparisons. Instantaneous intervals are
/// rejected at construction.
class Interval {
public:
    constexpr Interval(Tick start, Tick end) : start_(start), end_(end) {
        if (start >= end)
            throw NonPositiveDurationError("interval [" + std::to_string(start) + ", " +
                                           std::to_string(end) + ") has no positive duration");
    }

    constexpr Tick start() const noexcept { return start_; }
    constexpr Tick end() const noexcept { return end_; }
    Tick duration() const { return checked_sub(end_, start_); }

    friend auto operator<=>(const Interval&, const Interval&) = default;

private:
    Tick start_;
    Tick end_;
};

inline std::ostream& operator<<(std::ostream& os, const Interval& i) {
    return os << '[' << i.start() << ", " << i.end() << ')';
}

inline std::string to_string(const Interval& i) {
    return "[" + std::to_string(i.start()) + ", " + std::to_string(i.end()) + ")";
}

/// The thirteen qualitative relations between two intervals. Exactly one
/// holds for any ordered pair. The enumeration is laid out so that the
/// converse of relation r is relation 12 - r.
enum class AllenRelation : std::uint8_t {
    before = 0,
    meets = 1,
    overlaps = 2,
    finished_by = 3,
    contains = 4,
    starts = 5,
    equals = 6,
    started_by = 7,
    during = 8,
    finishes = 9,
    overlapped_by = 10,
    met_by = 11,
    after = 12,
};

inline constexpr std::size_t kRelationCount = 13;

constexpr AllenRelation converse(AllenRelation r) noexcept {
    return static_cast<AllenRelation>(12 - static_cast<int>(r));
}

constexpr std::string_view to_string(AllenRelation r) noexcept {
    constexpr std::string_view names[kRelationCount] = {
        "before",  "meets",    "overlaps", "finished-by",   "contains", "starts", "equals",
        "started-by", "during", "finishes", "overlapped-by", "met-by",   "after",
    };
    return names[static_cast<std::size_t>(r)];
}

inline std::ostream& operator<<(std::ostream& os, AllenRelation r) { return os << to_string(r); }

/// The unique relation between i and j, decided by endpoint comparisons.
constexpr AllenRelation relate(const Interval& i, const Interval& j) noexcept {
    if (i.end() < j.start()) return AllenRelation::before;
    if (i.end() == j.start()) return AllenRelation::meets;
    if (j.end() < i.start()) return AllenRelation::after;
    if (j.end() == i.start()) return AllenRelation::met_by;
    // The pair shares at least one tick from here on.
    if (i.start() == j.start()) {
        if (i.end() == j.end()) return AllenRelation::equals;
        return i.end() < j.end() ? AllenRelation::starts : AllenRelation::started_by;
    }
    if (i.end() == j.end())
        return i.start() < j.start() ? AllenRelation::finished_by : AllenRelation::finishes;
    if (i.start() < j.start())
        return i.end() < j.end() ? AllenRelation::overlaps : AllenRelation::contains;
    return i.end() < j.end() ? AllenRelation::during : AllenRelation::overlapped_by;
}

/// True iff the pair shares no tick: one is before the other or they meet.
constexpr bool is_disjoint(const Interval& i, const Interval& j) noexcept {
    return std::max(i.start(), j.start()) >= std::min(i.end(), j.end());
}

/// True iff i starts, finishes, or lies during j (proper containment).
constexpr bool is_within(const Interval& i, const Interval& j) noexcept {
    return j.start() <= i.start() && i.end() <= j.end() && i != j;
}

/// Within or equal.
constexpr bool is_sub(const Interval& i, const Interval& j) noexcept {
    return j.start() <= i.start() && i.end() <= j.end();
}

/// Maximal shared subinterval of a non-disjoint pair.
inline Interval common(const Interval& i, const Interval& j) {
    if (is_disjoint(i, j))
        throw DisjointPairError("no common subinterval: " + to_string(i) + " and " + to_string(j) +
                                " are disjoint");
    return Interval(std::max(i.start(), j.start()), std::min(i.end(), j.end()));
}

/// The auxiliary intervals of a pair, in ascending order.
///
/// For a non-disjoint pair these are the flanks of the shared part: the
/// span between the two starts and the span between the two ends, when
/// non-empty. For a disjoint non-meeting pair it is the single gap.
/// Equal and meeting pairs have none.
inline std::vector<Interval> aux(const Interval& i, const Interval& j) {
    std::vector<Interval> out;
    if (i == j) return out;
    if (is_disjoint(i, j)) {
        Tick gap_start = std::min(i.end(), j.end());
        Tick gap_end = std::max(i.start(), j.start());
        if (gap_start < gap_end) out.emplace_back(gap_start, gap_end);
        return out;
    }
    if (i.start() != j.start())
        out.emplace_back(std::min(i.start(), j.start()), std::max(i.start(), j.start()));
    if (i.end() != j.end())
        out.emplace_back(std::min(i.end(), j.end()), std::max(i.end(), j.end()));
    return out;  // start flank precedes end flank, so already ascending
}

/// The interval started by i and finished by j; defined only when i meets j.
inline Interval cover(const Interval& i, const Interval& j) {
    if (relate(i, j) != AllenRelation::meets)
        throw NotMeetingError("cover undefined: " + to_string(i) + " does not meet " + to_string(j));
    return Interval(i.start(), j.end());
}

/// Non-empty run of contiguous intervals; entry p meets entry p + 1.
/// Indexing is 1-based: tm[1] .. tm[dim()].
class TimeMap {
public:
    explicit TimeMap(std::vector<Interval> entries) : entries_(std::move(entries)) {
        if (entries_.empty()) throw ModelError("a time map must hold at least one interval");
        for (std::size_t p = 0; p + 1 < entries_.size(); ++p) {
            if (relate(entries_[p], entries_[p + 1]) != AllenRelation::meets)
                throw ModelError("time map entry " + std::to_string(p + 1) + " does not meet entry " +
                                 std::to_string(p + 2));
        }
    }

    std::size_t dim() const noexcept { return entries_.size(); }

    /// 1-based access, tm[1] .. tm[dim()].
    const Interval& operator[](std::size_t p) const {
        if (p < 1 || p > entries_.size())
            throw IndexOutOfRangeError("time map index " + std::to_string(p) + " outside 1.." +
                                       std::to_string(entries_.size()));
        return entries_[p - 1];
    }

    const Interval& head() const noexcept { return entries_.front(); }

    /// Everything after the head; empty optional for a one-entry map.
    std::optional<TimeMap> tail() const {
        if (entries_.size() == 1) return std::nullopt;
        return TimeMap(std::vector<Interval>(entries_.begin() + 1, entries_.end()));
    }

    auto begin() const noexcept { return entries_.begin(); }
    auto end() const noexcept { return entries_.end(); }
    const std::vector<Interval>& entries() const noexcept { return entries_; }

    friend bool operator==(const TimeMap&, const TimeMap&) = default;

private:
    std::vector<Interval> entries_;
};

/// The single interval covering the whole map: started by the first entry
/// and finished by the last (or the entry itself for a one-entry map).
inline Interval cover_star(const TimeMap& tm) {
    return Interval(tm.head().start(), tm[tm.dim()].end());
}

}  // namespace recur
