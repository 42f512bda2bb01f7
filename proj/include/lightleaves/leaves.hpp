#pragma once

// Subexpression combinatorics over a fixed expression: U/D symbol sequences,
// Tab(y), path dominance, content vectors and cell-module dimensions.
//
// A subexpression of a word (s_{i_1}, ..., s_{i_k}) is a 0/1 vector e. It
// determines prefix endpoints w_0 = 1, w_j = w_{j-1} s_{i_j}^{e_j} and per
// position a symbol in {U0, U1, D0, D1}: the letter is U iff the prefix goes
// up at that position (w_{j-1} alpha_{i_j} > 0), the digit is e_j. The first
// symbol always has letter U.

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "lightleaves/coxeter.hpp"

namespace lightleaves {

enum class Symbol : unsigned char { U0, U1, D0, D1 };

const char* symbolName(Symbol m);
Symbol symbolFromName(const std::string& name);

struct Expression {
    CoxeterSystem system;
    Word word;

    Expression(CoxeterSystem sys, Word w);
    int size() const { return static_cast<int>(word.size()); }
};

struct SubexpressionRecord {
    Expression expr;
    std::vector<std::uint8_t> bits;
    std::vector<Symbol> symbols;
    // w_0 = identity, ..., w_k; size k+1.
    std::vector<Element> prefixEndpoints;

    const Element& endpoint() const { return prefixEndpoints.back(); }
};

// Derives symbols and prefix endpoints for one 0/1 vector.
SubexpressionRecord symbols(const Expression& expr, std::vector<std::uint8_t> bits);

// All 2^k subexpressions in lexicographic bit order. Guarded: the default cap
// of 20 letters keeps the enumeration at desk scale; dimDelta has no such cap.
std::vector<SubexpressionRecord> enumerateSubexpressions(const Expression& expr, int guard = 20);

// Tab(y): the subexpressions expressing y, in lexicographic order of e.
// Empty iff y is not expressible.
std::vector<SubexpressionRecord> tab(const Expression& expr, const Element& y, int guard = 20);

// Number of subexpressions expressing y, by a prefix DP keyed on group
// elements; 0 whenever y is not a subword of the expression.
Int dimDelta(const Expression& expr, const Element& y);

// The whole dimension vector of the DP in one pass: endpoint -> count.
std::map<Element, Int> dimDeltaAll(const Expression& expr);

// Content entry: the signed root w^{<a} alpha_{i_a}, or Zero (nullopt) at
// positions with digit 1. U0 entries are positive roots, D0 entries negative.
using ContentEntry = std::optional<Root>;
std::vector<ContentEntry> content(const SubexpressionRecord& rec);
ContentEntry contentAt(const SubexpressionRecord& rec, int position);

// e <= f in path dominance iff every prefix endpoint of e is Bruhat-below the
// corresponding prefix endpoint of f.
bool pathDominanceLeq(const SubexpressionRecord& e, const SubexpressionRecord& f);

// Minimal index (0-based) where the bit vectors differ, provided the content
// entries there differ too; nullopt signals equal contents at that index,
// which the separation property rules out on valid data.
std::optional<int> separationWitness(const SubexpressionRecord& e, const SubexpressionRecord& f);

}  // namespace lightleaves
