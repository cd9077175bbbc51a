#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "recur/recurrence.hpp"

namespace recur {

/// Does component p of x ever strictly overlap component q of y?
/// Ordinals are 0-based into the respective component sequences.
struct CoincidenceQuery {
    std::size_t p;
    std::size_t q;
};

/// A concrete overlap: the r-th period of x against the s-th period of y
/// (1-based, within the cycle or horizon that was searched) and the
/// shared interval of the two component incidences inside those periods.
struct Witness {
    std::size_t r;
    std::size_t s;
    Interval overlap;

    friend bool operator==(const Witness&, const Witness&) = default;
};

/// Outcome of a coincidence query. When no witness is present, the
/// certificate fields say what was exhausted: a negative answer rests on
/// cycle projection, not on scanning the whole horizon.
struct Decision {
    std::optional<Witness> witness;
    std::size_t cycles_examined = 0;
    std::uint64_t pairs_checked = 0;

    bool found() const noexcept { return witness.has_value(); }
};

namespace detail {

inline void validate_query(const MultiRecurrence& mr, const CoincidenceQuery& query) {
    const auto& x = mr.x().eventuality();
    const auto& y = mr.y().eventuality();
    if (query.p >= x.len())
        throw IndexOutOfRangeError("query ordinal p=" + std::to_string(query.p) + " outside 0.." +
                                   std::to_string(x.len() - 1) + " of \"" + x.name() + "\"");
    if (query.q >= y.len())
        throw IndexOutOfRangeError("query ordinal q=" + std::to_string(query.q) + " outside 0.." +
                                   std::to_string(y.len() - 1) + " of \"" + y.name() + "\"");
}

}  // namespace detail

/// Decide coincidence by projecting over the first cycle only: one cycle
/// of the double recurrence already contains every relative alignment the
/// two sequences will ever reach, so a pair that stays disjoint across it
/// stays disjoint forever. Returns the lexicographically first (r, s)
/// witness, or the certified negative.
inline Decision solve_in_cycle(const MultiRecurrence& mr, const CoincidenceQuery& query) {
    detail::validate_query(mr, query);
    const Interval first_cycle(mr.horizon().start(),
                               checked_add(mr.horizon().start(), cycle_duration(mr)));
    const TimeMap x_periods = eta(mr.x(), first_cycle);
    const TimeMap y_periods = eta(mr.y(), first_cycle);
    Decision decision;
    decision.cycles_examined = 1;
    for (std::size_t r = 1; r <= x_periods.dim(); ++r) {
        const Interval incidence_x = phi(mr.x().eventuality(), query.p, x_periods[r]);
        for (std::size_t s = 1; s <= y_periods.dim(); ++s) {
            const Interval incidence_y = phi(mr.y().eventuality(), query.q, y_periods[s]);
            ++decision.pairs_checked;
            if (!is_disjoint(incidence_x, incidence_y)) {
                decision.witness = Witness{r, s, common(incidence_x, incidence_y)};
                return decision;
            }
        }
    }
    return decision;
}

/// Reference decision procedure: enumerate every period pair across the
/// whole horizon and return the temporally earliest overlap. Exists to
/// cross-check the single-cycle projection; never the fast path.
inline Decision solve_brute_force(const MultiRecurrence& mr, const CoincidenceQuery& query) {
    detail::validate_query(mr, query);
    const TimeMap x_periods = eta(mr.x(), mr.horizon());
    const TimeMap y_periods = eta(mr.y(), mr.horizon());
    Decision decision;
    decision.cycles_examined = cycles(mr).dim();
    for (std::size_t r = 1; r <= x_periods.dim(); ++r) {
        const Interval incidence_x = phi(mr.x().eventuality(), query.p, x_periods[r]);
        for (std::size_t s = 1; s <= y_periods.dim(); ++s) {
            const Interval incidence_y = phi(mr.y().eventuality(), query.q, y_periods[s]);
            ++decision.pairs_checked;
            if (is_disjoint(incidence_x, incidence_y)) continue;
            Interval overlap = common(incidence_x, incidence_y);
            if (!decision.witness || overlap.start() < decision.witness->overlap.start())
                decision.witness = Witness{r, s, overlap};
        }
    }
    return decision;
}

/// Number-theoretic fast path. Within period r of x the watched component
/// occupies a + r*P_x .. a' + r*P_x (rebased to the shared anchor), and
/// symmetrically for y, so the pair overlaps for some (r, s) exactly when
/// some multiple of g = gcd(P_x, P_y) lies strictly between b - a' and
/// b' - a. The verdict is a single window test; on success the smallest
/// admissible (r, s) is reconstructed, and it lands in the first cycle.
inline Decision solve_residue(const MultiRecurrence& mr, const CoincidenceQuery& query) {
    detail::validate_query(mr, query);
    const Eventuality& x = mr.x().eventuality();
    const Eventuality& y = mr.y().eventuality();
    const Tick period_x = x.period();
    const Tick period_y = y.period();
    const Tick g = std::gcd(period_x, period_y);
    const Interval offsets_x = layout(x).offsets[query.p];
    const Interval offsets_y = layout(y).offsets[query.q];
    const Tick a = offsets_x.start(), a_end = offsets_x.end();
    const Tick b = offsets_y.start(), b_end = offsets_y.end();

    Decision decision;
    decision.cycles_examined = 1;
    decision.pairs_checked = 1;

    // smallest and largest integers strictly inside (b - a', b' - a)
    const Tick lo = checked_add(checked_sub(b, a_end), 1);
    const Tick hi = checked_sub(checked_sub(b_end, a), 1);
    const bool window_has_multiple = checked_mul(floor_div(hi, g), g) >= lo;
    if (!window_has_multiple) return decision;

    // Reconstruct the first (r, s) of the first cycle with an overlap:
    // for each r, the admissible s form one contiguous run whose smallest
    // member is ceil((r*P_x - (b' - a) + 1) / P_y), clamped at zero.
    const Tick x_periods_per_cycle = period_y / g;
    const Tick y_periods_per_cycle = period_x / g;
    for (Tick r = 0; r < x_periods_per_cycle; ++r) {
        const Tick shifted = checked_mul(r, period_x);
        Tick s = floor_div(checked_sub(shifted, checked_sub(b_end, a)), period_y) + 1;
        if (s < 0) s = 0;
        if (s >= y_periods_per_cycle) continue;
        if (checked_mul(s, period_y) >= checked_sub(shifted, checked_sub(b, a_end))) continue;
        const Tick anchor = mr.horizon().start();
        Interval incidence_x(checked_add(checked_add(anchor, shifted), a),
                             checked_add(checked_add(anchor, shifted), a_end));
        Interval incidence_y(checked_add(checked_add(anchor, checked_mul(s, period_y)), b),
                             checked_add(checked_add(anchor, checked_mul(s, period_y)), b_end));
        decision.witness = Witness{static_cast<std::size_t>(r) + 1, static_cast<std::size_t>(s) + 1,
                                   common(incidence_x, incidence_y)};
        return decision;
    }
    throw Error("residue window admits a coincidence but no (r, s) was found in one cycle");
}

/// Which clause of pairwise similarity failed first.
enum class SimilarClause : std::uint8_t { duration, relation, auxiliary };

inline std::string_view to_string(SimilarClause c) noexcept {
    switch (c) {
        case SimilarClause::duration: return "duration";
        case SimilarClause::relation: return "relation";
        default: return "auxiliary";
    }
}

struct SimilarVerdict {
    bool similar = false;
    std::optional<SimilarClause> violated;

    explicit operator bool() const noexcept { return similar; }
};

/// Two interval pairs are similar when member durations match, the pairs
/// stand in the same relation, and their auxiliary intervals correspond:
/// equal durations and the same relations to the pair members. Clauses
/// are checked in that order and the first failure is reported.
inline SimilarVerdict similar(const std::pair<Interval, Interval>& first,
                              const std::pair<Interval, Interval>& second) {
    const auto& [i1, j1] = first;
    const auto& [i2, j2] = second;
    if (i1.duration() != i2.duration() || j1.duration() != j2.duration())
        return {false, SimilarClause::duration};
    if (relate(i1, j1) != relate(i2, j2)) return {false, SimilarClause::relation};
    const auto aux1 = aux(i1, j1);
    const auto aux2 = aux(i2, j2);
    for (const Interval& k1 : aux1) {
        bool matched = false;
        for (const Interval& k2 : aux2) {
            if (k1.duration() == k2.duration() && relate(i1, k1) == relate(i2, k2) &&
                relate(k1, j1) == relate(k2, j2)) {
                matched = true;
                break;
            }
        }
        if (!matched) return {false, SimilarClause::auxiliary};
    }
    return {true, std::nullopt};
}

/// Evidence that every cycle looks like every other one.
struct RegularityReport {
    std::uint64_t relation_checks = 0;
    std::uint64_t similarity_checks = 0;
    std::uint64_t component_checks = 0;
    std::vector<std::string> violations;

    bool ok() const noexcept { return violations.empty(); }
};

/// Compare every cycle pair of the horizon: the r-th x-period and s-th
/// y-period must stand in the same relation in each cycle, the period
/// pairs must be similar across cycles, and every component incidence
/// pair (p, q, r, s) must repeat its relation cycle after cycle.
inline RegularityReport check_cycle_regularity(const MultiRecurrence& mr) {
    const TimeMap cycle_map = cycles(mr);
    if (cycle_map.dim() < 2)
        throw NeedTwoCyclesError("cycle regularity needs at least two cycles, horizon holds " +
                                 std::to_string(cycle_map.dim()));
    RegularityReport report;
    const Eventuality& x = mr.x().eventuality();
    const Eventuality& y = mr.y().eventuality();

    std::vector<TimeMap> x_periods, y_periods;
    for (std::size_t c = 1; c <= cycle_map.dim(); ++c) {
        x_periods.push_back(eta(mr.x(), cycle_map[c]));
        y_periods.push_back(eta(mr.y(), cycle_map[c]));
    }
    const std::size_t dim_x = x_periods.front().dim();
    const std::size_t dim_y = y_periods.front().dim();

    for (std::size_t c1 = 0; c1 < cycle_map.dim(); ++c1)
        for (std::size_t c2 = c1 + 1; c2 < cycle_map.dim(); ++c2)
            for (std::size_t r = 1; r <= dim_x; ++r)
                for (std::size_t s = 1; s <= dim_y; ++s) {
                    const Interval px1 = x_periods[c1][r], py1 = y_periods[c1][s];
                    const Interval px2 = x_periods[c2][r], py2 = y_periods[c2][s];
                    ++report.relation_checks;
                    if (relate(px1, py1) != relate(px2, py2))
                        report.violations.push_back(
                            "period relation (r=" + std::to_string(r) + ", s=" + std::to_string(s) +
                            ") differs between cycles " + std::to_string(c1 + 1) + " and " +
                            std::to_string(c2 + 1));
                    ++report.similarity_checks;
                    if (!similar({px1, py1}, {px2, py2}))
                        report.violations.push_back(
                            "period pair (r=" + std::to_string(r) + ", s=" + std::to_string(s) +
                            ") not similar between cycles " + std::to_string(c1 + 1) + " and " +
                            std::to_string(c2 + 1));
                    for (std::size_t p = 0; p < x.len(); ++p)
                        for (std::size_t q = 0; q < y.len(); ++q) {
                            ++report.component_checks;
                            if (relate(phi(x, p, px1), phi(y, q, py1)) !=
                                relate(phi(x, p, px2), phi(y, q, py2)))
                                report.violations.push_back(
                                    "component relation (p=" + std::to_string(p) + ", q=" +
                                    std::to_string(q) + ", r=" + std::to_string(r) + ", s=" +
                                    std::to_string(s) + ") differs between cycles " +
                                    std::to_string(c1 + 1) + " and " + std::to_string(c2 + 1));
                        }
                }
    return report;
}

}  // namespace recur
