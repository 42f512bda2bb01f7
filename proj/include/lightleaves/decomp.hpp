#pragma once

// Decomposition-number interval solver over a Bruhat ideal.
//
// Rows are processed in decreasing Bruhat order (any linear extension). For a
// row y, S(y) denotes the sum-formula right-hand side rewritten into the
// L-basis through the already-processed rows, with interval arithmetic where
// those rows are unsettled. The rules:
//   (a) d_{y,u} <= upper L-coefficient of S(y)           (u > y),
//   (b) y <= v  =>  d_{y,t} >= d_{v,t}                   (embedding),
//   (c) S(y) = 0 forces the row to zero; S(y) != 0 with a single candidate
//       column forces that entry to be >= 1 (radical nonzero).
// Rules only consume strictly higher rows, so one pass reaches the fixpoint
// and the result is independent of the chosen linear extension.

#include <utility>
#include <vector>

#include "lightleaves/grothendieck.hpp"
#include "lightleaves/hecke.hpp"

namespace lightleaves {

struct Interval {
    Int lo = 0;
    Int hi = 0;
    bool settled() const { return lo == hi; }
    friend bool operator==(const Interval& a, const Interval& b) {
        return a.lo == b.lo && a.hi == b.hi;
    }
};

struct DecompositionBounds {
    BruhatIdeal ideal;
    // Entries are stored for pairs y <= u only; (y,y) is [1,1] and anything
    // not stored is [0,0].
    std::map<std::pair<Element, Element>, Interval> entries;

    Interval at(const Element& y, const Element& u) const;
};

// processingOrder, when supplied, must be a linear extension of reverse
// Bruhat order on the ideal; the default is (length desc, word lex asc).
DecompositionBounds solveBounds(const BruhatIdeal& ideal, const Valuation& val,
                                const std::vector<Element>* processingOrder = nullptr);

struct OracleRow {
    Element y;
    Element u;
    Interval interval;
    Int oracle;
    // "consistent-settled" | "consistent-open" | "conflict"
    std::string status;
};

struct OracleReport {
    std::vector<OracleRow> rows;
    std::size_t settled = 0;
    std::size_t conflicts = 0;
    bool consistent() const { return conflicts == 0; }
};

// Compares every stored entry against the KL oracle h_{y,u}(1).
OracleReport klOracleCompare(const BruhatIdeal& ideal, const DecompositionBounds& bounds,
                             KLCache& cache);

}  // namespace lightleaves
