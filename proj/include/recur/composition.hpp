#pragma once

#include <array>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "recur/interval.hpp"

namespace recur {

/// A set of qualitative relations, packed into a 13-bit mask.
class RelationSet {
public:
    constexpr RelationSet() = default;

    constexpr static RelationSet all() noexcept {
        RelationSet s;
        s.bits_ = (1u << kRelationCount) - 1;
        return s;
    }

    constexpr RelationSet& insert(AllenRelation r) noexcept {
        bits_ |= bit(r);
        return *this;
    }

    constexpr bool contains(AllenRelation r) const noexcept { return (bits_ & bit(r)) != 0; }
    constexpr std::size_t size() const noexcept {
        std::size_t n = 0;
        for (std::uint16_t b = bits_; b != 0; b &= static_cast<std::uint16_t>(b - 1)) ++n;
        return n;
    }
    constexpr bool empty() const noexcept { return bits_ == 0; }

    std::vector<AllenRelation> to_vector() const {
        std::vector<AllenRelation> out;
        for (std::size_t r = 0; r < kRelationCount; ++r)
            if (contains(static_cast<AllenRelation>(r))) out.push_back(static_cast<AllenRelation>(r));
        return out;
    }

    friend constexpr bool operator==(RelationSet, RelationSet) = default;

private:
    constexpr static std::uint16_t bit(AllenRelation r) noexcept {
        return static_cast<std::uint16_t>(1u << static_cast<unsigned>(r));
    }
    std::uint16_t bits_ = 0;
};

inline std::string to_string(RelationSet s) {
    std::string out = "{";
    bool first = true;
    for (AllenRelation r : s.to_vector()) {
        if (!first) out += ", ";
        out += to_string(r);
        first = false;
    }
    return out + "}";
}

inline std::ostream& operator<<(std::ostream& os, RelationSet s) { return os << to_string(s); }

namespace detail {

// Cells use the usual abbreviations: b m o fi di s e si d f oi mi a,
// plus "all" for the unconstrained cell. Row = relation between i and j,
// column = relation between j and k, cell = possible relations i to k.
//
// The table is shipped as a constant and re-derived cell by cell in the
// test suite by enumerating every endpoint configuration over a small
// grid, so a transcription slip cannot survive the build.
inline constexpr std::string_view kCompositionCells[kRelationCount][kRelationCount] = {
    /* before        */ {"b", "b", "b", "b", "b", "b", "b", "b", "b m o s d", "b m o s d", "b m o s d", "b m o s d", "all"},
    /* meets         */ {"b", "b", "b", "b", "b", "m", "m", "m", "o s d", "o s d", "o s d", "fi e f", "di si oi mi a"},
    /* overlaps      */ {"b", "b", "b m o", "b m o", "b m o fi di", "o", "o", "o fi di", "o s d", "o s d", "o fi di s e si d f oi", "di si oi", "di si oi mi a"},
    /* finished-by   */ {"b", "m", "o", "fi", "di", "o", "fi", "di", "o s d", "fi e f", "di si oi", "di si oi", "di si oi mi a"},
    /* contains      */ {"b m o fi di", "o fi di", "o fi di", "di", "di", "o fi di", "di", "di", "o fi di s e si d f oi", "di si oi", "di si oi", "di si oi", "di si oi mi a"},
    /* starts        */ {"b", "b", "b m o", "b m o", "b m o fi di", "s", "s", "s e si", "d", "d", "d f oi", "mi", "a"},
    /* equals        */ {"b", "m", "o", "fi", "di", "s", "e", "si", "d", "f", "oi", "mi", "a"},
    /* started-by    */ {"b m o fi di", "o fi di", "o fi di", "di", "di", "s e si", "si", "si", "d f oi", "oi", "oi", "mi", "a"},
    /* during        */ {"b", "b", "b m o s d", "b m o s d", "all", "d", "d", "d f oi mi a", "d", "d", "d f oi mi a", "a", "a"},
    /* finishes      */ {"b", "m", "o s d", "fi e f", "di si oi mi a", "d", "f", "oi mi a", "d", "f", "oi mi a", "a", "a"},
    /* overlapped-by */ {"b m o fi di", "o fi di", "o fi di s e si d f oi", "di si oi", "di si oi mi a", "d f oi", "oi", "oi mi a", "d f oi", "oi", "oi mi a", "a", "a"},
    /* met-by        */ {"b m o fi di", "s e si", "d f oi", "mi", "a", "d f oi", "mi", "a", "d f oi", "mi", "a", "a", "a"},
    /* after         */ {"all", "d f oi mi a", "d f oi mi a", "a", "a", "d f oi mi a", "a", "a", "d f oi mi a", "a", "a", "a", "a"},
};

constexpr RelationSet parse_cell(std::string_view cell) {
    if (cell == "all") return RelationSet::all();
    constexpr std::string_view abbr[kRelationCount] = {"b", "m",  "o", "fi", "di", "s", "e",
                                                       "si", "d", "f", "oi", "mi", "a"};
    RelationSet set;
    std::size_t pos = 0;
    while (pos < cell.size()) {
        std::size_t space = cell.find(' ', pos);
        std::string_view token = cell.substr(pos, space == std::string_view::npos ? space : space - pos);
        for (std::size_t r = 0; r < kRelationCount; ++r)
            if (token == abbr[r]) set.insert(static_cast<AllenRelation>(r));
        pos = space == std::string_view::npos ? cell.size() : space + 1;
    }
    return set;
}

constexpr auto build_composition_table() {
    std::array<std::array<RelationSet, kRelationCount>, kRelationCount> table{};
    for (std::size_t r1 = 0; r1 < kRelationCount; ++r1)
        for (std::size_t r2 = 0; r2 < kRelationCount; ++r2)
            table[r1][r2] = parse_cell(kCompositionCells[r1][r2]);
    return table;
}

inline constexpr auto kCompositionTable = build_composition_table();

}  // namespace detail

/// Relations possible between i and k given relate(i, j) == r1 and
/// relate(j, k) == r2.
constexpr RelationSet compose(AllenRelation r1, AllenRelation r2) noexcept {
    return detail::kCompositionTable[static_cast<std::size_t>(r1)][static_cast<std::size_t>(r2)];
}

}  // namespace recur
