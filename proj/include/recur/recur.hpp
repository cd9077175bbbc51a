#pragma once

// Umbrella header for the whole library.

#include "recur/arith.hpp"
#include "recur/axiom_check.hpp"
#include "recur/coincidence.hpp"
#include "recur/composition.hpp"
#include "recur/decimal.hpp"
#include "recur/error.hpp"
#include "recur/eventuality.hpp"
#include "recur/interval.hpp"
#include "recur/monitor.hpp"
#include "recur/recurrence.hpp"
#include "recur/scenario.hpp"
#include "recur/timeline.hpp"
