#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "recur/recurrence.hpp"

namespace recur {

struct CheckOptions {
    std::size_t max_grid_points = 600;        // refuse larger models
    std::size_t max_messages_per_check = 4;   // violation messages kept verbatim
};

struct CheckResult {
    std::string name;
    std::uint64_t instances = 0;
    std::uint64_t violation_count = 0;
    std::vector<std::string> messages;

    bool passed() const noexcept { return violation_count == 0; }
};

struct ConsistencyReport {
    std::vector<CheckResult> checks;

    bool all_passed() const noexcept {
        for (const auto& c : checks)
            if (!c.passed()) return false;
        return true;
    }

    const CheckResult* find(std::string_view name) const noexcept {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }

    std::uint64_t total_instances() const noexcept {
        std::uint64_t n = 0;
        for (const auto& c : checks) n += c.instances;
        return n;
    }

    std::uint64_t total_violations() const noexcept {
        std::uint64_t n = 0;
        for (const auto& c : checks) n += c.violation_count;
        return n;
    }
};

/// Materialized incidences of one recurrence: the period intervals and,
/// per component, the incidence inside each period. The checker consumes
/// these tables rather than recomputing them, so tests can corrupt a copy
/// and watch the violation surface.
struct IncidenceTable {
    std::vector<Interval> periods;
    std::vector<std::vector<Interval>> components;  // components[p][r]
};

inline IncidenceTable build_incidence_table(const Recurrence& rec) {
    IncidenceTable table;
    TimeMap periods = eta(rec, rec.horizon());
    table.periods.assign(periods.begin(), periods.end());
    table.components.resize(rec.eventuality().len());
    for (std::size_t p = 0; p < rec.eventuality().len(); ++p) {
        table.components[p].reserve(table.periods.size());
        for (const Interval& period : table.periods)
            table.components[p].push_back(phi(rec.eventuality(), p, period));
    }
    return table;
}

namespace detail {

/// One truth-bearing target inside the checker: a component or a whole
/// sequence, with its incidence list and truth semantics.
struct TargetView {
    std::string name;
    const std::vector<Interval>* incidences;
    bool hereditary;  // truth over any subinterval of an incidence
};

inline bool view_tt(const TargetView& view, const Interval& j) {
    for (const Interval& k : *view.incidences) {
        if (view.hereditary ? is_sub(j, k) : j == k) return true;
    }
    return false;
}

class Checker {
public:
    Checker(const MultiRecurrence& mr, const IncidenceTable& tx, const IncidenceTable& ty,
            const CheckOptions& options)
        : mr_(mr), tx_(tx), ty_(ty), options_(options) {
        build_views();
        build_grid();
    }

    ConsistencyReport run() {
        check_interval_truth_exclusivity();
        check_sequence_decomposition();
        check_sequence_truth_is_maximal();
        check_maximal_implies_true();
        check_truth_within_maximal();
        check_fixed_duration();
        check_component_mutual_exclusion();
        check_coincidence_properties();
        check_period_tiling();
        check_double_recurrence_endpoints();
        check_cycle_tiling();
        check_cycle_decomposition();
        check_period_probe();
        check_incidence_is_unique_phi();
        return std::move(report_);
    }

private:
    const MultiRecurrence& mr_;
    const IncidenceTable& tx_;
    const IncidenceTable& ty_;
    CheckOptions options_;
    std::vector<TargetView> views_;           // all components, then both wholes
    std::vector<TargetView> component_views_[2];
    TargetView whole_views_[2] = {};
    std::vector<Tick> grid_;
    ConsistencyReport report_;

    const Recurrence& rec(SequenceSide s) const { return s == SequenceSide::x ? mr_.x() : mr_.y(); }
    const IncidenceTable& table(SequenceSide s) const { return s == SequenceSide::x ? tx_ : ty_; }

    void build_views() {
        for (SequenceSide s : {SequenceSide::x, SequenceSide::y}) {
            const Eventuality& ev = rec(s).eventuality();
            const IncidenceTable& t = table(s);
            for (std::size_t p = 0; p < ev.len(); ++p) {
                TargetView v{ev.name() + "." + ev.comp(p).label, &t.components[p], true};
                component_views_[static_cast<int>(s)].push_back(v);
                views_.push_back(v);
            }
            TargetView w{ev.name(), &t.periods, ev.len() == 1};
            whole_views_[static_cast<int>(s)] = w;
            views_.push_back(w);
        }
    }

    // Endpoint grid: every incidence endpoint, one interior point per gap
    // of two or more ticks, and a few probes outside the horizon. Truth
    // values are constant between consecutive endpoints in this model, so
    // the grid is a sound finite witness set.
    void build_grid() {
        for (const TargetView& v : views_)
            for (const Interval& k : *v.incidences) {
                grid_.push_back(k.start());
                grid_.push_back(k.end());
            }
        const Interval h = mr_.horizon();
        grid_.push_back(checked_sub(h.start(), 3));
        grid_.push_back(checked_sub(h.start(), 1));
        grid_.push_back(checked_add(h.end(), 1));
        grid_.push_back(checked_add(h.end(), 3));
        std::sort(grid_.begin(), grid_.end());
        grid_.erase(std::unique(grid_.begin(), grid_.end()), grid_.end());
        std::vector<Tick> midpoints;
        for (std::size_t i = 0; i + 1 < grid_.size(); ++i)
            if (grid_[i + 1] - grid_[i] >= 2) midpoints.push_back(grid_[i] + (grid_[i + 1] - grid_[i]) / 2);
        grid_.insert(grid_.end(), midpoints.begin(), midpoints.end());
        std::sort(grid_.begin(), grid_.end());
        if (grid_.size() > options_.max_grid_points)
            throw HorizonTooLargeError("consistency check needs " + std::to_string(grid_.size()) +
                                       " grid points, limit is " + std::to_string(options_.max_grid_points));
    }

    CheckResult& begin_check(std::string name) {
        report_.checks.emplace_back();
        report_.checks.back().name = std::move(name);
        return report_.checks.back();
    }

    void fail(CheckResult& check, std::string message) {
        ++check.violation_count;
        if (check.messages.size() < options_.max_messages_per_check)
            check.messages.push_back(std::move(message));
    }

    template <typename Fn>
    void for_each_grid_interval(Fn&& fn) const {
        for (std::size_t a = 0; a < grid_.size(); ++a)
            for (std::size_t b = a + 1; b < grid_.size(); ++b) fn(Interval(grid_[a], grid_[b]));
    }

    /// All grid intervals over which the target is true. For hereditary
    /// targets these are the grid subintervals of incidences; otherwise
    /// the incidences themselves.
    std::vector<Interval> truth_set(const TargetView& view) const {
        std::vector<Interval> out;
        if (!view.hereditary) {
            out = *view.incidences;
            return out;
        }
        for (const Interval& k : *view.incidences) {
            auto lo = std::lower_bound(grid_.begin(), grid_.end(), k.start());
            auto hi = std::upper_bound(grid_.begin(), grid_.end(), k.end());
            for (auto a = lo; a != hi; ++a)
                for (auto b = a + 1; b != hi; ++b)
                    if (*b <= k.end()) out.emplace_back(*a, *b);
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    // Truth over an interval rules out truth over anything overlapping or
    // strictly containing a maximal incidence of the same target.
    void check_interval_truth_exclusivity() {
        CheckResult& check = begin_check("interval-truth-exclusivity");
        for (const TargetView& view : views_) {
            for (const Interval& j : truth_set(view)) {
                for (const Interval& k : *view.incidences) {
                    ++check.instances;
                    AllenRelation r = relate(j, k);
                    bool forbidden = r == AllenRelation::overlaps || r == AllenRelation::overlapped_by ||
                                     r == AllenRelation::contains || r == AllenRelation::started_by ||
                                     r == AllenRelation::finished_by;
                    if (forbidden)
                        fail(check, view.name + ": true over " + to_string(j) + " which " +
                                        std::string(to_string(r)) + " maximal incidence " + to_string(k));
                }
            }
        }
    }

    // Inside each period the first component starts it, consecutive
    // components meet, and the last finishes it.
    void check_sequence_decomposition() {
        CheckResult& check = begin_check("sequence-decomposition");
        for (SequenceSide s : {SequenceSide::x, SequenceSide::y}) {
            const IncidenceTable& t = table(s);
            const std::string& name = rec(s).eventuality().name();
            const std::size_t len = t.components.size();
            for (std::size_t r = 0; r < t.periods.size(); ++r) {
                const Interval& period = t.periods[r];
                ++check.instances;
                const Interval& first = t.components[0][r];
                const Interval& last = t.components[len - 1][r];
                bool first_ok = len == 1 ? first == period : relate(first, period) == AllenRelation::starts;
                bool last_ok = len == 1 ? last == period : relate(last, period) == AllenRelation::finishes;
                if (!first_ok)
                    fail(check, name + ": first component " + to_string(first) + " does not start period " +
                                    to_string(period));
                if (!last_ok)
                    fail(check, name + ": last component " + to_string(last) + " does not finish period " +
                                    to_string(period));
                for (std::size_t p = 0; p + 1 < len; ++p) {
                    ++check.instances;
                    if (relate(t.components[p][r], t.components[p + 1][r]) != AllenRelation::meets)
                        fail(check, name + ": component " + std::to_string(p) + " incidence " +
                                        to_string(t.components[p][r]) + " does not meet component " +
                                        std::to_string(p + 1) + " incidence " +
                                        to_string(t.components[p + 1][r]));
                }
            }
        }
    }

    // A multi-component sequence is true over exactly the intervals that
    // decompose as one full pass through its components. Only intervals
    // starting at a first-component or period start can satisfy either
    // side, so the enumeration is restricted to those starts.
    void check_sequence_truth_is_maximal() {
        CheckResult& check = begin_check("sequence-truth-is-maximal");
        for (SequenceSide s : {SequenceSide::x, SequenceSide::y}) {
            const IncidenceTable& t = table(s);
            const TargetView& whole = whole_views_[static_cast<int>(s)];
            if (whole.hereditary) continue;  // one-component sequences are covered by exclusivity
            std::vector<Tick> starts;
            for (const Interval& k : t.components[0]) starts.push_back(k.start());
            for (const Interval& k : t.periods) starts.push_back(k.start());
            std::sort(starts.begin(), starts.end());
            starts.erase(std::unique(starts.begin(), starts.end()), starts.end());
            for (Tick a : starts)
                for (Tick b : grid_) {
                    if (b <= a) continue;
                    ++check.instances;
                    Interval j(a, b);
                    bool is_incidence = view_tt(whole, j);
                    bool decomposes = decomposes_as_one_pass(t, j);
                    if (is_incidence != decomposes)
                        fail(check, whole.name + ": " + to_string(j) +
                                        (is_incidence ? " is a maximal incidence but does not decompose"
                                                      : " decomposes as one pass but is not an incidence"));
                }
        }
    }

    static bool decomposes_as_one_pass(const IncidenceTable& t, const Interval& j) {
        for (std::size_t r = 0; r < t.periods.size(); ++r) {
            if (t.components[0][r].start() != j.start()) continue;
            Tick at = j.start();
            bool ok = true;
            for (std::size_t p = 0; p < t.components.size(); ++p) {
                const Interval& inc = t.components[p][r];
                if (inc.start() != at || inc.end() > j.end()) {
                    ok = false;
                    break;
                }
                at = inc.end();
            }
            if (ok && at == j.end()) return true;
        }
        return false;
    }

    void check_maximal_implies_true() {
        CheckResult& check = begin_check("maximal-implies-true");
        for (const TargetView& view : views_)
            for (const Interval& k : *view.incidences) {
                ++check.instances;
                if (!view_tt(view, k))
                    fail(check, view.name + ": not true over its own maximal incidence " + to_string(k));
            }
    }

    // Nothing is true forever: every true interval sits inside a maximal one.
    void check_truth_within_maximal() {
        CheckResult& check = begin_check("truth-within-maximal");
        for (const TargetView& view : views_)
            for (const Interval& j : truth_set(view)) {
                ++check.instances;
                bool covered = false;
                for (const Interval& k : *view.incidences)
                    if (is_sub(j, k)) {
                        covered = true;
                        break;
                    }
                if (!covered)
                    fail(check, view.name + ": true over " + to_string(j) +
                                    " which lies inside no maximal incidence");
            }
    }

    void check_fixed_duration() {
        CheckResult& check = begin_check("fixed-duration");
        CheckResult& whole_check = begin_check("period-duration-uniform");
        for (const TargetView& view : views_) {
            bool is_whole = view.name.find('.') == std::string::npos;
            CheckResult& into = is_whole ? whole_check : check;
            if (view.incidences->empty()) continue;
            Tick expected = view.incidences->front().duration();
            for (const Interval& k : *view.incidences) {
                ++into.instances;
                if (k.duration() != expected)
                    fail(into, view.name + ": incidence " + to_string(k) + " has duration " +
                                   std::to_string(k.duration()) + ", expected " + std::to_string(expected));
            }
        }
    }

    // Distinct components of one sequence can never share a tick.
    void check_component_mutual_exclusion() {
        CheckResult& check = begin_check("component-mutual-exclusion");
        for (SequenceSide s : {SequenceSide::x, SequenceSide::y}) {
            const auto& comps = component_views_[static_cast<int>(s)];
            for (std::size_t p = 0; p < comps.size(); ++p)
                for (std::size_t q = p + 1; q < comps.size(); ++q)
                    for (const Interval& a : *comps[p].incidences)
                        for (const Interval& b : *comps[q].incidences) {
                            ++check.instances;
                            if (!is_disjoint(a, b))
                                fail(check, comps[p].name + " over " + to_string(a) + " and " +
                                                comps[q].name + " over " + to_string(b) +
                                                " are not disjoint");
                        }
        }
    }

    // Pairwise coincidence behaves like intersection: commutative, true
    // over every subinterval, and triple coincidences nest in each pair.
    void check_coincidence_properties() {
        CheckResult& commut = begin_check("coincidence-commutative");
        CheckResult& hered = begin_check("coincidence-downward-hereditary");
        CheckResult& triple = begin_check("coincidence-triple-containment");
        const auto& xs = component_views_[0];
        const auto& ys = component_views_[1];
        const std::vector<Interval>& y_periods = ty_.periods;
        for (const TargetView& xv : xs)
            for (const TargetView& yv : ys)
                for (const Interval& i : *xv.incidences)
                    for (const Interval& j : *yv.incidences) {
                        ++commut.instances;
                        auto m = plus_interval(i, j);
                        auto m_swapped = plus_interval(j, i);
                        if (m != m_swapped)
                            fail(commut, "coincidence of " + to_string(i) + " and " + to_string(j) +
                                             " is not commutative");
                        if (!m) continue;
                        // every grid subinterval of the coincidence lies in both incidences
                        auto lo = std::lower_bound(grid_.begin(), grid_.end(), m->start());
                        auto hi = std::upper_bound(grid_.begin(), grid_.end(), m->end());
                        for (auto a = lo; a != hi; ++a)
                            for (auto b = a + 1; b != hi; ++b) {
                                if (*b > m->end()) continue;
                                ++hered.instances;
                                Interval sub(*a, *b);
                                if (!is_sub(sub, i) || !is_sub(sub, j))
                                    fail(hered, to_string(sub) + " inside coincidence " + to_string(*m) +
                                                    " escapes " + to_string(i) + " or " + to_string(j));
                            }
                        for (const Interval& k : y_periods) {
                            if (is_disjoint(i, k) || is_disjoint(j, k)) continue;
                            ++triple.instances;
                            auto nested = plus_interval(*m, k);
                            if (!nested) {
                                fail(triple, "pairwise coincident " + to_string(i) + ", " + to_string(j) +
                                                 ", " + to_string(k) + " have no triple coincidence");
                                continue;
                            }
                            auto jk = plus_interval(j, k);
                            auto ik = plus_interval(i, k);
                            if (!is_sub(*nested, *m) || !is_sub(*nested, *jk) || !is_sub(*nested, *ik))
                                fail(triple, "triple coincidence " + to_string(*nested) +
                                                 " escapes a pairwise coincidence");
                        }
                    }
    }

    // Periods chain and cover the horizon exactly, a whole number of them.
    void check_period_tiling() {
        CheckResult& tiling = begin_check("period-tiling");
        CheckResult& multiple = begin_check("horizon-period-multiple");
        for (SequenceSide s : {SequenceSide::x, SequenceSide::y}) {
            const IncidenceTable& t = table(s);
            const std::string& name = rec(s).eventuality().name();
            ++multiple.instances;
            if (mr_.horizon().duration() % rec(s).period() != 0)
                fail(multiple, name + ": horizon span is not a multiple of the period");
            ++tiling.instances;
            if (t.periods.front().start() != mr_.horizon().start() ||
                t.periods.back().end() != mr_.horizon().end())
                fail(tiling, name + ": periods do not cover the horizon");
            for (std::size_t r = 0; r + 1 < t.periods.size(); ++r) {
                ++tiling.instances;
                if (relate(t.periods[r], t.periods[r + 1]) != AllenRelation::meets)
                    fail(tiling, name + ": period " + std::to_string(r + 1) + " does not meet period " +
                                     std::to_string(r + 2));
            }
        }
    }

    // Both sequences have maximal incidences starting and finishing the
    // shared horizon (or equal to it in the single-period case).
    void check_double_recurrence_endpoints() {
        CheckResult& check = begin_check("double-recurrence-endpoints");
        for (SequenceSide s : {SequenceSide::x, SequenceSide::y}) {
            const IncidenceTable& t = table(s);
            const std::string& name = rec(s).eventuality().name();
            const Interval h = mr_.horizon();
            ++check.instances;
            const Interval& first = t.periods.front();
            const Interval& last = t.periods.back();
            bool first_ok = first == h || relate(first, h) == AllenRelation::starts;
            bool last_ok = last == h || relate(last, h) == AllenRelation::finishes;
            if (!first_ok) fail(check, name + ": no maximal incidence starts the horizon");
            if (!last_ok) fail(check, name + ": no maximal incidence finishes the horizon");
        }
    }

    // Cycles tile the horizon, all with duration lcm of the two periods,
    // and each cycle is itself covered by whole periods of both sequences.
    void check_cycle_tiling() {
        CheckResult& check = begin_check("cycle-tiling");
        CheckResult& align = begin_check("cycle-period-alignment");
        const Tick lcm = cycle_duration(mr_);
        TimeMap cyc = cycles(mr_);
        ++check.instances;
        if (cover_star(cyc) != mr_.horizon()) fail(check, "cycles do not cover the horizon");
        for (std::size_t c = 1; c <= cyc.dim(); ++c) {
            ++check.instances;
            if (cyc[c].duration() != lcm)
                fail(check, "cycle " + std::to_string(c) + " has duration " +
                                std::to_string(cyc[c].duration()) + ", lcm is " + std::to_string(lcm));
            for (SequenceSide s : {SequenceSide::x, SequenceSide::y}) {
                ++align.instances;
                try {
                    if (cover_star(eta(rec(s), cyc[c])) != cyc[c])
                        fail(align, "periods of " + rec(s).eventuality().name() +
                                        " do not cover cycle " + std::to_string(c));
                } catch (const NotRecurrentError& e) {
                    fail(align, std::string("cycle ") + std::to_string(c) + ": " + e.what());
                }
            }
        }
    }

    // With more than one cycle, the horizon splits into the first cycle
    // and a remainder over which both sequences still recur.
    void check_cycle_decomposition() {
        CheckResult& check = begin_check("cycle-decomposition");
        TimeMap cyc = cycles(mr_);
        if (cyc.dim() < 2) return;
        ++check.instances;
        Interval remainder(cyc[1].end(), mr_.horizon().end());
        if (cover(cyc[1], remainder) != mr_.horizon())
            fail(check, "first cycle and remainder do not cover the horizon");
        for (SequenceSide s : {SequenceSide::x, SequenceSide::y}) {
            ++check.instances;
            try {
                eta(rec(s), remainder);
            } catch (const NotRecurrentError&) {
                fail(check, rec(s).eventuality().name() + " does not recur over the remainder " +
                                to_string(remainder));
            }
        }
    }

    // Any interval sharing a tick with the horizon shares one with some
    // period of each sequence. The candidate period is located by binary
    // search on starts; with the contiguous tiling that candidate is the
    // only one that can intersect the probe's first shared tick.
    void check_period_probe() {
        CheckResult& check = begin_check("period-probe");
        for_each_grid_interval([&](const Interval& k) {
            if (is_disjoint(k, mr_.horizon())) return;
            Tick shared = std::max(k.start(), mr_.horizon().start());
            for (SequenceSide s : {SequenceSide::x, SequenceSide::y}) {
                ++check.instances;
                const auto& periods = table(s).periods;
                auto it = std::upper_bound(periods.begin(), periods.end(), shared,
                                           [](Tick t, const Interval& p) { return t < p.start(); });
                bool hit = it != periods.begin() && !is_disjoint(*std::prev(it), k);
                if (!hit && it != periods.end()) hit = !is_disjoint(*it, k);
                if (!hit)
                    fail(check, to_string(k) + " meets the horizon but no period of " +
                                    rec(s).eventuality().name());
            }
        });
    }

    // Every component incidence is the phi image of exactly one period.
    void check_incidence_is_unique_phi() {
        CheckResult& check = begin_check("incidence-is-unique-phi");
        for (SequenceSide s : {SequenceSide::x, SequenceSide::y}) {
            const IncidenceTable& t = table(s);
            const Eventuality& ev = rec(s).eventuality();
            for (std::size_t p = 0; p < t.components.size(); ++p)
                for (const Interval& incidence : t.components[p]) {
                    ++check.instances;
                    std::size_t matches = 0;
                    for (const Interval& period : t.periods)
                        if (phi(ev, p, period) == incidence) ++matches;
                    if (matches != 1)
                        fail(check, ev.name() + "." + ev.comp(p).label + " incidence " +
                                        to_string(incidence) + " matches " + std::to_string(matches) +
                                        " periods, expected exactly 1");
                }
        }
    }
};

}  // namespace detail

/// Run the full consistency suite against explicit incidence tables.
/// Intended for tests that corrupt a table to prove the checks can fail.
inline ConsistencyReport check_axioms_on(const MultiRecurrence& mr, const IncidenceTable& x,
                                         const IncidenceTable& y, const CheckOptions& options = {}) {
    return detail::Checker(mr, x, y, options).run();
}

/// Enumerate the model's endpoint grid and assert every structural law of
/// the recurrence theory on it. All checks pass on any well-formed model;
/// the report lists instance counts and any violations.
inline ConsistencyReport check_axioms(const MultiRecurrence& mr, const CheckOptions& options = {}) {
    IncidenceTable x = build_incidence_table(mr.x());
    IncidenceTable y = build_incidence_table(mr.y());
    return check_axioms_on(mr, x, y, options);
}

}  // namespace recur
