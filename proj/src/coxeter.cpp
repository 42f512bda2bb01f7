#include "lightleaves/coxeter.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace lightleaves {

namespace {

std::vector<Int> identityMat(int n) {
    std::vector<Int> m(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i) * n + i] = 1;
    return m;
}

std::vector<Int> matMul(int n, const std::vector<Int>& a, const std::vector<Int>& b) {
    std::vector<Int> c(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const Int& aik = a[static_cast<std::size_t>(i) * n + k];
            if (aik == 0) continue;
            for (int j = 0; j < n; ++j)
                c[static_cast<std::size_t>(i) * n + j] += aik * b[static_cast<std::size_t>(k) * n + j];
        }
    return c;
}

std::string pairName(int s, int t) {
    return "(" + generatorName(s) + "," + generatorName(t) + ")";
}

// Column s of the matrix is the image of alpha_s; it is a negative root iff
// all entries are <= 0 (a column of an invertible matrix cannot vanish).
bool columnNonpositive(const Element& w, const std::vector<Int>& m, int s) {
    for (int i = 0; i < w.rank; ++i)
        if (m[static_cast<std::size_t>(i) * w.rank + s] > 0) return false;
    return true;
}

constexpr int kLengthCap = 1000000;

}  // namespace

bool Root::isZero() const {
    for (const Int& c : coords)
        if (c != 0) return false;
    return true;
}

bool Root::isPositive() const {
    if (isZero()) return false;
    for (const Int& c : coords)
        if (c < 0) return false;
    return true;
}

bool Root::isNegative() const {
    if (isZero()) return false;
    for (const Int& c : coords)
        if (c > 0) return false;
    return true;
}

Root Root::negated() const {
    Root r;
    r.coords.reserve(coords.size());
    for (const Int& c : coords) r.coords.push_back(-c);
    return r;
}

Int Root::height() const {
    Int h = 0;
    for (const Int& c : coords) h += c;
    return h;
}

Root CoxeterSystem::simpleRoot(int s) const {
    if (s < 0 || s >= rank) throw ConfigError("generator index out of range: " + std::to_string(s));
    std::vector<Int> c(rank, 0);
    c[s] = 1;
    return Root(std::move(c));
}

CoxeterSystem makeCoxeterSystem(const std::string& name,
                                std::vector<std::vector<int>> coxeter,
                                std::optional<std::vector<std::vector<int>>> cartan) {
    CoxeterSystem sys;
    sys.name = name;
    sys.rank = static_cast<int>(coxeter.size());
    if (sys.rank < 1) throw ConfigError("coxeter_matrix must have positive rank");
    for (const auto& row : coxeter)
        if (static_cast<int>(row.size()) != sys.rank)
            throw ConfigError("coxeter_matrix is not square");
    for (int s = 0; s < sys.rank; ++s) {
        if (coxeter[s][s] != 1)
            throw ConfigError("coxeter_matrix entry " + pairName(s, s) + " must be 1");
        for (int t = 0; t < sys.rank; ++t) {
            if (s == t) continue;
            int m = coxeter[s][t];
            if (coxeter[t][s] != m)
                throw ConfigError("coxeter_matrix not symmetric at " + pairName(s, t));
            if (m != 0 && m != 2 && m != 3 && m != 4 && m != 6)
                throw ConfigError("coxeter_matrix entry " + pairName(s, t) +
                                  " must be one of 2,3,4,6 or 0 (infinity) for an integer Cartan");
        }
    }
    sys.coxeter = std::move(coxeter);

    if (cartan) {
        sys.cartan = std::move(*cartan);
        if (static_cast<int>(sys.cartan.size()) != sys.rank)
            throw ConfigError("cartan_matrix does not match rank");
        for (const auto& row : sys.cartan)
            if (static_cast<int>(row.size()) != sys.rank)
                throw ConfigError("cartan_matrix is not square");
    } else {
        // Simply-laced default; m in {4,6,infinity} has no canonical integer choice.
        sys.cartan.assign(sys.rank, std::vector<int>(sys.rank, 0));
        for (int s = 0; s < sys.rank; ++s) {
            sys.cartan[s][s] = 2;
            for (int t = 0; t < sys.rank; ++t) {
                if (s == t) continue;
                int m = sys.coxeter[s][t];
                if (m == 2)
                    sys.cartan[s][t] = 0;
                else if (m == 3)
                    sys.cartan[s][t] = -1;
                else
                    throw ConfigError("cartan_matrix required: no default entry for " +
                                      pairName(s, t) + " with m = " +
                                      (m == 0 ? std::string("infinity") : std::to_string(m)));
            }
        }
    }

    for (int s = 0; s < sys.rank; ++s) {
        if (sys.cartan[s][s] != 2)
            throw ConfigError("cartan_matrix entry " + pairName(s, s) + " must be 2");
        for (int t = 0; t < sys.rank; ++t) {
            if (s == t) continue;
            int a = sys.cartan[s][t];
            int b = sys.cartan[t][s];
            if (a > 0)
                throw ConfigError("cartan_matrix entry " + pairName(s, t) + " must be <= 0");
            int m = sys.coxeter[s][t];
            long long prod = static_cast<long long>(a) * b;
            if (m == 0) {
                if (prod < 4)
                    throw ConfigError("cartan_matrix product at " + pairName(s, t) +
                                      " must be >= 4 for m = infinity");
            } else {
                long long want = (m == 2) ? 0 : (m == 3) ? 1 : (m == 4) ? 2 : 3;
                if (prod != want)
                    throw ConfigError("cartan_matrix product at " + pairName(s, t) + " is " +
                                      std::to_string(prod) + ", expected " + std::to_string(want) +
                                      " for m = " + std::to_string(m));
            }
        }
    }

    // The realization must be a group representation: (sigma_s sigma_t)^m = id.
    for (int s = 0; s < sys.rank; ++s)
        for (int t = s + 1; t < sys.rank; ++t) {
            int m = sys.coxeter[s][t];
            if (m == 0) continue;
            std::vector<Int> st = matMul(sys.rank, generatorElement(sys, s).mat,
                                         generatorElement(sys, t).mat);
            std::vector<Int> pow = identityMat(sys.rank);
            for (int i = 0; i < m; ++i) pow = matMul(sys.rank, pow, st);
            if (pow != identityMat(sys.rank))
                throw ConfigError("braid relation fails at " + pairName(s, t) +
                                  ": (sigma_s sigma_t)^" + std::to_string(m) + " != identity");
        }
    return sys;
}

CoxeterSystem presetSystem(const std::string& name) {
    if (name == "A1") return makeCoxeterSystem("A1", {{1}});
    if (name == "A2") return makeCoxeterSystem("A2", {{1, 3}, {3, 1}});
    if (name == "A3") return makeCoxeterSystem("A3", {{1, 3, 2}, {3, 1, 3}, {2, 3, 1}});
    if (name == "B2") return makeCoxeterSystem("B2", {{1, 4}, {4, 1}}, {{{2, -1}, {-2, 2}}});
    if (name == "G2") return makeCoxeterSystem("G2", {{1, 6}, {6, 1}}, {{{2, -1}, {-3, 2}}});
    if (name == "A1xA1") return makeCoxeterSystem("A1xA1", {{1, 2}, {2, 1}});
    throw ConfigError("unknown preset '" + name + "' (known: A1, A2, A3, B2, G2, A1xA1)");
}

bool Element::isIdentity() const {
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j)
            if (mat[static_cast<std::size_t>(i) * rank + j] != ((i == j) ? 1 : 0)) return false;
    return true;
}

Element identityElement(const CoxeterSystem& sys) {
    Element e;
    e.rank = sys.rank;
    e.mat = identityMat(sys.rank);
    e.inv = e.mat;
    return e;
}

Element generatorElement(const CoxeterSystem& sys, int s) {
    if (s < 0 || s >= sys.rank)
        throw ConfigError("generator index out of range: " + std::to_string(s));
    Element e;
    e.rank = sys.rank;
    e.mat = identityMat(sys.rank);
    // sigma_s(alpha_t) = alpha_t - a_st alpha_s: row s picks up -a_st.
    for (int t = 0; t < sys.rank; ++t)
        e.mat[static_cast<std::size_t>(s) * sys.rank + t] -= sys.cartan[s][t];
    e.inv = e.mat;
    return e;
}

Element multiply(const CoxeterSystem& sys, const Element& a, const Element& b) {
    Element c;
    c.rank = sys.rank;
    c.mat = matMul(sys.rank, a.mat, b.mat);
    c.inv = matMul(sys.rank, b.inv, a.inv);
    return c;
}

Element inverseElement(const Element& a) {
    Element b;
    b.rank = a.rank;
    b.mat = a.inv;
    b.inv = a.mat;
    return b;
}

Element wordToElement(const CoxeterSystem& sys, const Word& word) {
    Element w = identityElement(sys);
    for (int s : word) w = multiply(sys, w, generatorElement(sys, s));
    return w;
}

Root apply(const CoxeterSystem& sys, const Element& w, const Root& beta) {
    if (static_cast<int>(beta.coords.size()) != sys.rank || w.rank != sys.rank)
        throw ConfigError("apply: dimension mismatch");
    Root out;
    out.coords.assign(sys.rank, 0);
    for (int i = 0; i < sys.rank; ++i)
        for (int j = 0; j < sys.rank; ++j) {
            const Int& m = w.mat[static_cast<std::size_t>(i) * sys.rank + j];
            if (m != 0) out.coords[i] += m * beta.coords[j];
        }
    return out;
}

std::vector<int> rightDescents(const CoxeterSystem& sys, const Element& w) {
    std::vector<int> out;
    for (int s = 0; s < sys.rank; ++s)
        if (columnNonpositive(w, w.mat, s)) out.push_back(s);
    return out;
}

std::vector<int> leftDescents(const CoxeterSystem& sys, const Element& w) {
    std::vector<int> out;
    for (int s = 0; s < sys.rank; ++s)
        if (columnNonpositive(w, w.inv, s)) out.push_back(s);
    return out;
}

int length(const CoxeterSystem& sys, const Element& w) {
    Element cur = w;
    int len = 0;
    while (!cur.isIdentity()) {
        int s = -1;
        for (int t = 0; t < sys.rank; ++t)
            if (columnNonpositive(cur, cur.mat, t)) {
                s = t;
                break;
            }
        if (s < 0) throw InternalError("length: non-identity element with empty descent set");
        cur = multiply(sys, cur, generatorElement(sys, s));
        if (++len > kLengthCap) throw InternalError("length: iteration cap exceeded");
    }
    return len;
}

Word canonicalWord(const CoxeterSystem& sys, const Element& w) {
    Word out;
    Element cur = w;
    while (!cur.isIdentity()) {
        int s = -1;
        for (int t = 0; t < sys.rank; ++t)
            if (columnNonpositive(cur, cur.inv, t)) {
                s = t;
                break;
            }
        if (s < 0) throw InternalError("canonicalWord: non-identity element with empty descent set");
        out.push_back(s);
        cur = multiply(sys, generatorElement(sys, s), cur);
        if (out.size() > static_cast<std::size_t>(kLengthCap))
            throw InternalError("canonicalWord: iteration cap exceeded");
    }
    return out;
}

namespace {

bool bruhatLeqImpl(const CoxeterSystem& sys, Element x, int lx, Element y, int ly) {
    while (true) {
        if (lx == 0) return true;
        if (lx > ly) return false;
        int s = -1;
        for (int t = 0; t < sys.rank; ++t)
            if (columnNonpositive(y, y.mat, t)) {
                s = t;
                break;
            }
        if (s < 0) throw InternalError("bruhatLeq: non-identity element with empty descent set");
        Element gen = generatorElement(sys, s);
        y = multiply(sys, y, gen);
        --ly;
        if (columnNonpositive(x, x.mat, s)) {
            x = multiply(sys, x, gen);
            --lx;
        }
    }
}

}  // namespace

bool bruhatLeq(const CoxeterSystem& sys, const Element& x, const Element& y) {
    return bruhatLeqImpl(sys, x, length(sys, x), y, length(sys, y));
}

namespace {

// BFS by length over the Cayley graph. visit(u, len) is called once per
// element; returns all elements of length <= maxLength (maxLength < 0:
// unbounded). complete is set when the group was exhausted.
template <typename Visit>
GroupSlice bfsElements(const CoxeterSystem& sys, int maxLength, std::size_t cap, Visit visit) {
    GroupSlice out;
    std::set<Element> seen;
    std::vector<Element> level{identityElement(sys)};
    seen.insert(level.front());
    int len = 0;
    while (!level.empty()) {
        for (const Element& u : level) {
            visit(u, len);
            out.elements.push_back(u);
        }
        if (maxLength >= 0 && len >= maxLength) return out;  // bound hit, not exhausted
        std::vector<Element> next;
        for (const Element& u : level)
            for (int s = 0; s < sys.rank; ++s) {
                Element v = multiply(sys, u, generatorElement(sys, s));
                if (seen.insert(v).second) next.push_back(v);
            }
        if (seen.size() > cap)
            throw GuardError("group enumeration guard: more than " + std::to_string(cap) +
                             " elements; supply a length bound");
        level = std::move(next);
        ++len;
    }
    out.complete = true;
    return out;
}

}  // namespace

GroupSlice enumerateElements(const CoxeterSystem& sys, int maxLength, std::size_t cap) {
    return bfsElements(sys, maxLength, cap, [](const Element&, int) {});
}

std::optional<std::vector<Element>> wholeGroup(const CoxeterSystem& sys, std::size_t cap) {
    try {
        GroupSlice slice = bfsElements(sys, -1, cap, [](const Element&, int) {});
        return slice.elements;
    } catch (const GuardError&) {
        return std::nullopt;
    }
}

std::vector<ReflectionEntry> positiveRootTable(const CoxeterSystem& sys, int lengthBound) {
    if (lengthBound < 1) throw ConfigError("positiveRootTable: lengthBound must be >= 1");
    std::map<Root, Element> table;
    bfsElements(sys, lengthBound - 1, 100000, [&](const Element& u, int) {
        for (int s = 0; s < sys.rank; ++s) {
            Root beta = apply(sys, u, sys.simpleRoot(s));
            if (!beta.isPositive() || table.count(beta)) continue;
            Element gen = generatorElement(sys, s);
            Element refl;
            refl.rank = sys.rank;
            refl.mat = matMul(sys.rank, matMul(sys.rank, u.mat, gen.mat), u.inv);
            refl.inv = refl.mat;  // reflections are involutions
            table.emplace(std::move(beta), std::move(refl));
        }
    });
    std::vector<ReflectionEntry> out;
    out.reserve(table.size());
    for (auto& [root, refl] : table) out.push_back({root, refl});
    return out;
}

std::vector<Root> enumeratePositiveRoots(const CoxeterSystem& sys, int lengthBound) {
    std::vector<Root> out;
    for (auto& entry : positiveRootTable(sys, lengthBound)) out.push_back(entry.root);
    return out;
}

Element reflectionForRoot(const CoxeterSystem& sys, const Root& beta, int searchBound) {
    if (static_cast<int>(beta.coords.size()) != sys.rank)
        throw ConfigError("reflectionForRoot: dimension mismatch");
    if (!beta.isPositive()) throw ConfigError("reflectionForRoot: root must be positive");
    int bound = searchBound;
    if (bound < 0) {
        // Descent towards a simple root loses height >= 1 per step.
        Int h = beta.height();
        bound = (h > 4096) ? 4096 : static_cast<int>(h) + 1;
    }
    for (auto& entry : positiveRootTable(sys, bound))
        if (entry.root == beta) return entry.reflection;
    throw ConfigError("reflectionForRoot: " + rootToString(beta) +
                      " not recognized as a root within the search bound");
}

std::string generatorName(int s) { return "s" + std::to_string(s + 1); }

std::string wordToString(const Word& w) {
    if (w.empty()) return "e";
    std::string out;
    for (int s : w) out += generatorName(s);
    return out;
}

std::string rootToString(const Root& r) {
    if (r.isZero()) return "0";
    const int rank = static_cast<int>(r.coords.size());
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < rank; ++i) {
        const Int& c = r.coords[i];
        if (c == 0) continue;
        if (c < 0)
            os << "-";
        else if (!first)
            os << "+";
        Int a = c < 0 ? Int(-c) : c;
        if (a != 1) os << a;
        os << "α";
        if (rank > 1) os << (i + 1);
        first = false;
    }
    return os.str();
}

}  // namespace lightleaves
