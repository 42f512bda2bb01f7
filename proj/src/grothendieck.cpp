#include "lightleaves/grothendieck.hpp"

#include <algorithm>

namespace lightleaves {

std::vector<Element> BruhatIdeal::membersSorted() const {
    std::vector<Element> out;
    out.reserve(words.size());
    for (const auto& [w, word] : words) out.push_back(w);
    std::sort(out.begin(), out.end(), [&](const Element& a, const Element& b) {
        const Word& wa = words.at(a);
        const Word& wb = words.at(b);
        if (wa.size() != wb.size()) return wa.size() < wb.size();
        return wa < wb;
    });
    return out;
}

int BruhatIdeal::maxLength() const {
    std::size_t m = 0;
    for (const auto& [w, word] : words) m = std::max(m, word.size());
    return static_cast<int>(m);
}

BruhatIdeal idealFromElement(const CoxeterSystem& sys, const Element& w) {
    BruhatIdeal ideal;
    ideal.system = sys;
    Expression expr(sys, canonicalWord(sys, w));
    for (const auto& [z, count] : dimDeltaAll(expr)) ideal.words.emplace(z, canonicalWord(sys, z));
    return ideal;
}

BruhatIdeal idealFromMembers(const CoxeterSystem& sys, const std::vector<Element>& members) {
    BruhatIdeal ideal;
    ideal.system = sys;
    for (const Element& w : members) ideal.words.emplace(w, canonicalWord(sys, w));
    for (const auto& [w, word] : ideal.words) {
        Expression expr(sys, word);
        for (const auto& [z, count] : dimDeltaAll(expr))
            if (!ideal.contains(z))
                throw ConfigError("idealFromMembers: set is not downward closed (misses " +
                                  wordToString(canonicalWord(sys, z)) + " below " +
                                  wordToString(word) + ")");
    }
    return ideal;
}

Valuation Valuation::charP(int p) {
    if (p <= 2) throw ConfigError("valuation: p must be an odd prime (p > 2)");
    for (int d = 2; static_cast<long long>(d) * d <= p; ++d)
        if (p % d == 0) throw ConfigError("valuation: p = " + std::to_string(p) + " is not prime");
    Valuation v;
    v.kind = Kind::CharP;
    v.p = p;
    return v;
}

Int Valuation::operator()(const Root& beta) const {
    if (kind == Kind::Char0) return 1;
    Int h = beta.height();
    if (h < 0) h = -h;
    if (h == 0) throw ConfigError("valuation: zero vector is not a root");
    Int nu = 1;  // nu_p(phi(beta)) = 1 + nu_p(height)
    while (h % p == 0) {
        h /= p;
        ++nu;
    }
    return nu;
}

void GrothendieckVector::add(const Element& w, const Int& c) {
    if (c == 0) return;
    auto it = coeffs.find(w);
    if (it == coeffs.end()) {
        coeffs.emplace(w, c);
    } else if ((it->second += c) == 0) {
        coeffs.erase(it);
    }
}

Int dimDeltaPi(const BruhatIdeal& ideal, const Element& y) {
    if (!ideal.contains(y)) throw ConfigError("dimDeltaPi: element is not in the ideal");
    Int total = 0;
    for (const auto& [z, word] : ideal.words) total += dimDelta(Expression(ideal.system, word), y);
    return total;
}

GrothendieckVector sumFormulaRHS(const BruhatIdeal& ideal, const Element& y,
                                 const Valuation& val) {
    if (!ideal.contains(y)) throw ConfigError("sumFormulaRHS: element is not in the ideal");
    GrothendieckVector out;
    out.basis = GrothendieckVector::Basis::Delta;
    const std::size_t ly = ideal.words.at(y).size();
    for (const auto& entry : positiveRootTable(ideal.system, ideal.maxLength() + 1)) {
        Element z = multiply(ideal.system, entry.reflection, y);
        auto it = ideal.words.find(z);
        if (it == ideal.words.end()) continue;  // Delta vanishes outside the ideal
        if (it->second.size() <= ly) continue;  // need s_beta y > y
        out.add(z, val(entry.root));
    }
    return out;
}

std::map<Element, Int> phiMap(const BruhatIdeal& ideal, const GrothendieckVector& v) {
    if (v.basis != GrothendieckVector::Basis::Delta)
        throw ConfigError("phiMap: vector must be in the Delta basis");
    for (const auto& [y, c] : v.coeffs)
        if (!ideal.contains(y)) throw ConfigError("phiMap: vector leaves the ideal");
    std::map<Element, Int> out;
    for (const auto& [z, word] : ideal.words) {
        auto dims = dimDeltaAll(Expression(ideal.system, word));
        Int total = 0;
        for (const auto& [y, c] : v.coeffs) {
            auto it = dims.find(y);
            if (it != dims.end()) total += c * it->second;
        }
        out.emplace(z, total);
    }
    return out;
}

std::vector<std::vector<Int>> phiMatrix(const BruhatIdeal& ideal) {
    auto members = ideal.membersSorted();
    std::vector<std::vector<Int>> m;
    m.reserve(members.size());
    for (const Element& z : members) {
        auto dims = dimDeltaAll(Expression(ideal.system, ideal.words.at(z)));
        std::vector<Int> row;
        row.reserve(members.size());
        for (const Element& y : members) {
            auto it = dims.find(y);
            row.push_back(it == dims.end() ? Int(0) : it->second);
        }
        m.push_back(std::move(row));
    }
    return m;
}

}  // namespace lightleaves
