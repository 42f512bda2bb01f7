#include "lightleaves/leaves.hpp"

#include <algorithm>
#include <functional>

namespace lightleaves {

const char* symbolName(Symbol m) {
    switch (m) {
        case Symbol::U0: return "U0";
        case Symbol::U1: return "U1";
        case Symbol::D0: return "D0";
        case Symbol::D1: return "D1";
    }
    throw InternalError("symbolName: bad symbol");
}

Symbol symbolFromName(const std::string& name) {
    if (name == "U0") return Symbol::U0;
    if (name == "U1") return Symbol::U1;
    if (name == "D0") return Symbol::D0;
    if (name == "D1") return Symbol::D1;
    throw ConfigError("unknown symbol '" + name + "'");
}

Expression::Expression(CoxeterSystem sys, Word w) : system(std::move(sys)), word(std::move(w)) {
    for (int s : word)
        if (s < 0 || s >= system.rank)
            throw ConfigError("expression letter out of range: " + std::to_string(s));
}

SubexpressionRecord symbols(const Expression& expr, std::vector<std::uint8_t> bits) {
    const int k = expr.size();
    if (static_cast<int>(bits.size()) != k)
        throw ConfigError("symbols: bit vector length mismatch");
    SubexpressionRecord rec{expr, std::move(bits), {}, {}};
    rec.symbols.reserve(k);
    rec.prefixEndpoints.reserve(k + 1);
    rec.prefixEndpoints.push_back(identityElement(expr.system));
    for (int j = 0; j < k; ++j) {
        const Element& w = rec.prefixEndpoints.back();
        bool up = apply(expr.system, w, expr.system.simpleRoot(expr.word[j])).isPositive();
        bool taken = rec.bits[j] != 0;
        rec.symbols.push_back(up ? (taken ? Symbol::U1 : Symbol::U0)
                                 : (taken ? Symbol::D1 : Symbol::D0));
        rec.prefixEndpoints.push_back(
            taken ? multiply(expr.system, w, generatorElement(expr.system, expr.word[j])) : w);
    }
    return rec;
}

namespace {

void checkEnumerationGuard(const Expression& expr, int guard) {
    if (expr.size() > guard)
        throw GuardError("enumeration guard: word length " + std::to_string(expr.size()) +
                         " exceeds " + std::to_string(guard) + " (use dimDelta instead)");
}

}  // namespace

std::vector<SubexpressionRecord> enumerateSubexpressions(const Expression& expr, int guard) {
    checkEnumerationGuard(expr, guard);
    const int k = expr.size();
    std::vector<SubexpressionRecord> out;
    out.reserve(std::size_t(1) << k);
    std::vector<std::uint8_t> bits(k, 0);
    // Odometer in lexicographic order; symbols() recomputes the prefix walk,
    // which is cheap at the guarded sizes.
    while (true) {
        out.push_back(symbols(expr, bits));
        int j = k - 1;
        while (j >= 0 && bits[j] == 1) bits[j--] = 0;
        if (j < 0) break;
        bits[j] = 1;
    }
    return out;
}

std::vector<SubexpressionRecord> tab(const Expression& expr, const Element& y, int guard) {
    std::vector<SubexpressionRecord> out;
    for (auto& rec : enumerateSubexpressions(expr, guard))
        if (rec.endpoint() == y) out.push_back(std::move(rec));
    return out;
}

std::map<Element, Int> dimDeltaAll(const Expression& expr) {
    std::map<Element, Int> cur;
    cur.emplace(identityElement(expr.system), 1);
    for (int s : expr.word) {
        std::map<Element, Int> next;
        Element gen = generatorElement(expr.system, s);
        for (const auto& [w, c] : cur) {
            next[w] += c;
            next[multiply(expr.system, w, gen)] += c;
        }
        cur = std::move(next);
    }
    return cur;
}

Int dimDelta(const Expression& expr, const Element& y) {
    auto dims = dimDeltaAll(expr);
    auto it = dims.find(y);
    return it == dims.end() ? Int(0) : it->second;
}

ContentEntry contentAt(const SubexpressionRecord& rec, int position) {
    if (position < 0 || position >= static_cast<int>(rec.bits.size()))
        throw ConfigError("contentAt: position out of range");
    if (rec.bits[position]) return std::nullopt;  // U1/D1
    return apply(rec.expr.system, rec.prefixEndpoints[position],
                 rec.expr.system.simpleRoot(rec.expr.word[position]));
}

std::vector<ContentEntry> content(const SubexpressionRecord& rec) {
    std::vector<ContentEntry> out;
    out.reserve(rec.bits.size());
    for (int a = 0; a < static_cast<int>(rec.bits.size()); ++a) out.push_back(contentAt(rec, a));
    return out;
}

bool pathDominanceLeq(const SubexpressionRecord& e, const SubexpressionRecord& f) {
    if (e.bits.size() != f.bits.size())
        throw ConfigError("pathDominanceLeq: expression length mismatch");
    for (std::size_t i = 1; i < e.prefixEndpoints.size(); ++i)
        if (!bruhatLeq(e.expr.system, e.prefixEndpoints[i], f.prefixEndpoints[i])) return false;
    return true;
}

std::optional<int> separationWitness(const SubexpressionRecord& e, const SubexpressionRecord& f) {
    if (e.bits.size() != f.bits.size())
        throw ConfigError("separationWitness: expression length mismatch");
    if (e.bits == f.bits) throw ConfigError("separationWitness: subexpressions must differ");
    int i = 0;
    while (e.bits[i] == f.bits[i]) ++i;
    ContentEntry ce = contentAt(e, i);
    ContentEntry cf = contentAt(f, i);
    if (ce == cf) return std::nullopt;  // separation failure
    return i;
}

}  // namespace lightleaves
