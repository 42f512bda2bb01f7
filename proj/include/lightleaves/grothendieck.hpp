#pragma once

// Bruhat ideals, valuations, sum-formula right-hand sides and the dimension
// isomorphism Phi on the Grothendieck group spanned by the Delta classes.

#include <map>
#include <vector>

#include "lightleaves/gram.hpp"

namespace lightleaves {

// Downward-closed subset of W with a chosen (canonical ShortLex) reduced word
// per member.
struct BruhatIdeal {
    CoxeterSystem system;
    std::map<Element, Word> words;

    bool contains(const Element& w) const { return words.count(w) != 0; }
    std::size_t size() const { return words.size(); }
    // Members ordered by (length, word lex), a linear extension of Bruhat.
    std::vector<Element> membersSorted() const;
    int maxLength() const;
};

// {z : z <= w}, collected as the subexpression endpoints of the canonical
// word of w.
BruhatIdeal idealFromElement(const CoxeterSystem& sys, const Element& w);
// Explicit member set; closure under Bruhat order is validated.
BruhatIdeal idealFromMembers(const CoxeterSystem& sys, const std::vector<Element>& members);

struct Valuation {
    enum class Kind { Char0, CharP };
    Kind kind = Kind::Char0;
    int p = 0;

    static Valuation char0() { return {}; }
    // Requires an odd prime; p = 2 is rejected.
    static Valuation charP(int p);

    // Char0: 1 on every root. CharP: 1 + nu_p(height(beta)).
    Int operator()(const Root& beta) const;
};

struct GrothendieckVector {
    enum class Basis { Delta, L };
    Basis basis = Basis::Delta;
    std::map<Element, Int> coeffs;  // zero coefficients omitted

    void add(const Element& w, const Int& c);
    bool isZero() const { return coeffs.empty(); }
    friend bool operator==(const GrothendieckVector& a, const GrothendieckVector& b) {
        return a.basis == b.basis && a.coeffs == b.coeffs;
    }
};

// dim Delta_pi(y) = sum over the ideal's chosen words of dim Delta_z(y).
Int dimDeltaPi(const BruhatIdeal& ideal, const Element& y);

// Sum over positive roots beta with s_beta y > y of val(beta) [Delta(s_beta y)],
// dropping terms that land outside the ideal.
GrothendieckVector sumFormulaRHS(const BruhatIdeal& ideal, const Element& y, const Valuation& val);

// Phi(v) component at z = sum_y coeff(y) dim Delta_z(y); defined on the
// Delta basis. Every ideal member gets a component (possibly zero).
std::map<Element, Int> phiMap(const BruhatIdeal& ideal, const GrothendieckVector& v);

// Matrix of Phi on the Delta basis, rows = chosen words z, columns = y, both
// in membersSorted order. Unitriangular, hence unimodular.
std::vector<std::vector<Int>> phiMatrix(const BruhatIdeal& ideal);

}  // namespace lightleaves
