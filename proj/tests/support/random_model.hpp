#pragma once

// Shared generator for randomized model corpora. Deterministic under a
// caller-provided engine so failures replay exactly.

#include <random>
#include <string>
#include <vector>

#include "recur/recurrence.hpp"

namespace recur::testgen {

struct ModelParams {
    int min_components = 1;
    int max_components = 5;
    Tick min_duration = 1;
    Tick max_duration = 6;
    int cycles = 3;
    Tick min_anchor = -20;
    Tick max_anchor = 20;
};

inline Eventuality random_eventuality(std::mt19937& rng, const ModelParams& params,
                                      const std::string& name) {
    std::uniform_int_distribution<int> len_dist(params.min_components, params.max_components);
    std::uniform_int_distribution<Tick> duration_dist(params.min_duration, params.max_duration);
    const int len = len_dist(rng);
    std::vector<Component> components;
    components.reserve(static_cast<std::size_t>(len));
    for (int p = 0; p < len; ++p)
        components.emplace_back(name + std::to_string(p), duration_dist(rng));
    return Eventuality(name, std::move(components));
}

inline MultiRecurrence random_multi_recurrence(std::mt19937& rng, const ModelParams& params) {
    Eventuality x = random_eventuality(rng, params, "x");
    Eventuality y = random_eventuality(rng, params, "y");
    std::uniform_int_distribution<Tick> anchor_dist(params.min_anchor, params.max_anchor);
    const Tick anchor = anchor_dist(rng);
    const Tick span = checked_mul(checked_lcm(x.period(), y.period()), params.cycles);
    const Interval horizon(anchor, checked_add(anchor, span));
    return MultiRecurrence(Recurrence(std::move(x), horizon), Recurrence(std::move(y), horizon));
}

/// Random interval with endpoints inside [lo, hi].
inline Interval random_interval(std::mt19937& rng, Tick lo, Tick hi) {
    std::uniform_int_distribution<Tick> point(lo, hi - 1);
    Tick a = point(rng);
    std::uniform_int_distribution<Tick> end_point(a + 1, hi);
    return Interval(a, end_point(rng));
}

}  // namespace recur::testgen
