#include "lightleaves/decomp.hpp"

#include <algorithm>

namespace lightleaves {

Interval DecompositionBounds::at(const Element& y, const Element& u) const {
    auto it = entries.find({y, u});
    if (it != entries.end()) return it->second;
    if (y == u) return {1, 1};
    return {0, 0};
}

DecompositionBounds solveBounds(const BruhatIdeal& ideal, const Valuation& val,
                                const std::vector<Element>* processingOrder) {
    std::vector<Element> order;
    if (processingOrder) {
        order = *processingOrder;
        if (order.size() != ideal.size())
            throw ConfigError("solveBounds: processing order does not cover the ideal");
    } else {
        order = ideal.membersSorted();
        std::reverse(order.begin(), order.end());
    }

    // Bruhat relation within the ideal, via the subword property: y <= u iff
    // y is an endpoint of a subexpression of u's word.
    std::map<Element, std::map<Element, Int>> below;  // u -> endpoints of u's word
    for (const auto& [u, word] : ideal.words) below.emplace(u, dimDeltaAll(Expression(ideal.system, word)));
    auto leq = [&](const Element& y, const Element& u) { return below.at(u).count(y) != 0; };

    DecompositionBounds bounds;
    bounds.ideal = ideal;
    for (const Element& y : order) {
        if (!ideal.contains(y)) throw ConfigError("solveBounds: order leaves the ideal");
        bounds.entries[{y, y}] = {1, 1};
        GrothendieckVector S = sumFormulaRHS(ideal, y, val);
        for (const auto& [z, c] : S.coeffs)
            if (bounds.entries.find({z, z}) == bounds.entries.end())
                throw InternalError("solveBounds: order is not a reverse Bruhat extension");

        // L-basis expansion of S with interval coefficients.
        std::map<Element, Interval> lexp;
        for (const auto& [z, c] : S.coeffs)
            for (const auto& [key, iv] : bounds.entries) {
                if (key.first != z) continue;
                Interval& acc = lexp[key.second];
                acc.lo += c * iv.lo;
                acc.hi += c * iv.hi;
            }

        for (const auto& [u, word] : ideal.words) {
            if (u == y || !leq(y, u)) continue;
            auto itL = lexp.find(u);
            Int hi = itL == lexp.end() ? Int(0) : itL->second.hi;  // rule (a)
            Int lo = 0;
            for (const auto& [v, vword] : ideal.words) {  // rule (b)
                if (v == y || !leq(y, v) || !leq(v, u)) continue;
                lo = std::max(lo, bounds.at(v, u).lo);
            }
            if (lo > hi)
                throw InternalError("solveBounds: embedding lower bound exceeds sum-formula cap");
            bounds.entries[{y, u}] = {lo, hi};
        }

        if (!S.isZero()) {  // rule (c)
            std::vector<Element> candidates;
            for (const auto& [u, word] : ideal.words)
                if (u != y && leq(y, u) && bounds.at(y, u).hi > 0) candidates.push_back(u);
            if (candidates.empty())
                throw InternalError("solveBounds: nonzero radical with no candidate factor");
            if (candidates.size() == 1) {
                Interval& iv = bounds.entries[{y, candidates.front()}];
                if (iv.lo < 1) iv.lo = 1;
            }
        }
    }
    return bounds;
}

OracleReport klOracleCompare(const BruhatIdeal& ideal, const DecompositionBounds& bounds,
                             KLCache& cache) {
    OracleReport report;
    // Deterministic row order: (y, u) by (length, word lex).
    std::vector<std::pair<Element, Element>> keys;
    auto members = ideal.membersSorted();
    for (const Element& y : members)
        for (const Element& u : members)
            if (bounds.entries.count({y, u})) keys.push_back({y, u});

    for (const auto& [y, u] : keys) {
        OracleRow row;
        row.y = y;
        row.u = u;
        row.interval = bounds.at(y, u);
        row.oracle = klEvalAtOne(ideal.system, y, u, cache);
        if (row.interval.settled()) {
            ++report.settled;
            row.status = row.oracle == row.interval.lo ? "consistent-settled" : "conflict";
        } else {
            row.status = (row.interval.lo <= row.oracle && row.oracle <= row.interval.hi)
                             ? "consistent-open"
                             : "conflict";
        }
        if (row.status == "conflict") ++report.conflicts;
        report.rows.push_back(std::move(row));
    }
    return report;
}

}  // namespace lightleaves
