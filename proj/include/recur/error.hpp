#pragma once

#include <stdexcept>
#include <string>

namespace recur {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Checked tick arithmetic left the representable range.
class OverflowError : public Error {
public:
    using Error::Error;
};

/// A duration (or interval extent) was zero or negative.
class NonPositiveDurationError : public Error {
public:
    using Error::Error;
};

/// A duration string was not a finitely written decimal numeral.
class NonDecimalError : public Error {
public:
    using Error::Error;
};

/// common() was asked for the shared part of a disjoint pair.
class DisjointPairError : public Error {
public:
    using Error::Error;
};

/// cover() was applied to a pair that does not meet.
class NotMeetingError : public Error {
public:
    using Error::Error;
};

/// An ordinal pointed outside a sequence, time map, or query bound.
class IndexOutOfRangeError : public Error {
public:
    using Error::Error;
};

/// The probed interval is not tiled by whole periods from its start.
class NotRecurrentError : public Error {
public:
    using Error::Error;
};

/// The consistency checker refused a model too large to enumerate.
class HorizonTooLargeError : public Error {
public:
    using Error::Error;
};

/// Cycle regularity needs at least two cycles to compare.
class NeedTwoCyclesError : public Error {
public:
    using Error::Error;
};

/// A monitor event arrived with a timestamp earlier than one already seen.
class OutOfOrderEventError : public Error {
public:
    using Error::Error;
};

/// The monitor has halted; no further events are accepted.
class HaltedError : public Error {
public:
    using Error::Error;
};

/// A structural invariant of a model value was violated at construction.
class ModelError : public Error {
public:
    using Error::Error;
};

}  // namespace recur
