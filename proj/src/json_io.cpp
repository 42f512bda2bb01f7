#include "lightleaves/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <limits>

namespace lightleaves {

long long toInt64(const Int& v) {
    if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
        throw InternalError("integer too large for serialization");
    return static_cast<long long>(v);
}

Json systemToJson(const CoxeterSystem& sys) {
    Json j;
    j["name"] = sys.name;
    j["coxeter_matrix"] = sys.coxeter;
    j["cartan_matrix"] = sys.cartan;
    return j;
}

CoxeterSystem systemFromJson(const Json& j) {
    if (!j.contains("coxeter_matrix"))
        throw ConfigError("system config: missing coxeter_matrix");
    std::string name = j.value("name", std::string("custom"));
    std::vector<std::vector<int>> coxeter = j["coxeter_matrix"].get<std::vector<std::vector<int>>>();
    std::optional<std::vector<std::vector<int>>> cartan;
    if (j.contains("cartan_matrix") && !j["cartan_matrix"].is_null())
        cartan = j["cartan_matrix"].get<std::vector<std::vector<int>>>();
    return makeCoxeterSystem(name, std::move(coxeter), std::move(cartan));
}

CoxeterSystem systemFromFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open system config file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ConfigError("system config parse error in " + path + ": " + e.what());
    }
    return systemFromJson(j);
}

Json wordToJson(const Word& w) {
    Json j = Json::array();
    for (int s : w) j.push_back(s);
    return j;
}

Word wordFromJson(const Json& j) {
    Word w;
    for (const auto& v : j) w.push_back(v.get<int>());
    return w;
}

Json rootToJson(const Root& r) {
    Json j = Json::array();
    for (const Int& c : r.coords) j.push_back(toInt64(c));
    return j;
}

Root rootFromJson(const Json& j) {
    Root r;
    for (const auto& v : j) r.coords.push_back(Int(v.get<long long>()));
    return r;
}

Json recordToJson(const SubexpressionRecord& rec) {
    Json j;
    Json bits = Json::array();
    for (auto b : rec.bits) bits.push_back(static_cast<int>(b));
    j["bits"] = std::move(bits);
    Json syms = Json::array();
    for (Symbol m : rec.symbols) syms.push_back(symbolName(m));
    j["symbols"] = std::move(syms);
    j["endpoint_word"] = wordToJson(canonicalWord(rec.expr.system, rec.endpoint()));
    Json contents = Json::array();
    for (const ContentEntry& entry : content(rec))
        contents.push_back(entry ? rootToJson(*entry) : Json(nullptr));
    j["contents"] = std::move(contents);
    return j;
}

SubexpressionRecord recordFromJson(const Expression& expr, const Json& j) {
    std::vector<std::uint8_t> bits;
    for (const auto& v : j.at("bits")) bits.push_back(static_cast<std::uint8_t>(v.get<int>()));
    SubexpressionRecord rec = symbols(expr, std::move(bits));
    // Cross-check the derived fields against the serialized ones.
    const auto& syms = j.at("symbols");
    if (syms.size() != rec.symbols.size())
        throw ConfigError("record: symbol count mismatch");
    for (std::size_t i = 0; i < rec.symbols.size(); ++i)
        if (symbolFromName(syms[i].get<std::string>()) != rec.symbols[i])
            throw ConfigError("record: symbols do not match bits");
    if (wordToElement(expr.system, wordFromJson(j.at("endpoint_word"))) != rec.endpoint())
        throw ConfigError("record: endpoint does not match bits");
    return rec;
}

Json monomialToJson(const SignedRootMonomial& m) {
    Json j;
    if (m.signKnown)
        j["sign"] = m.sign;
    else
        j["sign"] = "±";
    Json factors = Json::array();
    for (const auto& [root, exp] : m.exponents) {
        Json f;
        f["root"] = rootToJson(root);
        f["exp"] = exp;
        factors.push_back(std::move(f));
    }
    j["factors"] = std::move(factors);
    return j;
}

SignedRootMonomial monomialFromJson(const Json& j) {
    SignedRootMonomial m;
    const Json& sign = j.at("sign");
    if (sign.is_string()) {
        if (sign.get<std::string>() != "±")
            throw ConfigError("monomial: bad sign string");
        m.signKnown = false;
    } else {
        m.sign = sign.get<int>();
        if (m.sign != 1 && m.sign != -1) throw ConfigError("monomial: sign must be +1 or -1");
    }
    for (const auto& f : j.at("factors"))
        m.multiplyRoot(rootFromJson(f.at("root")), f.at("exp").get<int>());
    return m;
}

namespace {

// Coefficient lists keyed by canonical words, sorted by (length, word).
std::vector<std::pair<Word, Int>> sortedByWord(const CoxeterSystem& sys,
                                               const std::map<Element, Int>& coeffs) {
    std::vector<std::pair<Word, Int>> out;
    for (const auto& [w, c] : coeffs) out.emplace_back(canonicalWord(sys, w), c);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
        return a.first < b.first;
    });
    return out;
}

}  // namespace

Json grVectorToJson(const CoxeterSystem& sys, const GrothendieckVector& v) {
    Json j;
    j["basis"] = v.basis == GrothendieckVector::Basis::Delta ? "Delta" : "L";
    Json coeffs = Json::array();
    for (const auto& [word, c] : sortedByWord(sys, v.coeffs)) {
        Json entry;
        entry["element"] = wordToJson(word);
        entry["c"] = toInt64(c);
        coeffs.push_back(std::move(entry));
    }
    j["coeffs"] = std::move(coeffs);
    return j;
}

GrothendieckVector grVectorFromJson(const CoxeterSystem& sys, const Json& j) {
    GrothendieckVector v;
    std::string basis = j.at("basis").get<std::string>();
    if (basis == "Delta")
        v.basis = GrothendieckVector::Basis::Delta;
    else if (basis == "L")
        v.basis = GrothendieckVector::Basis::L;
    else
        throw ConfigError("grothendieck vector: basis must be Delta or L");
    for (const auto& entry : j.at("coeffs"))
        v.add(wordToElement(sys, wordFromJson(entry.at("element"))),
              Int(entry.at("c").get<long long>()));
    return v;
}

Json boundsToJson(const DecompositionBounds& bounds, const OracleReport* report) {
    std::map<std::pair<Element, Element>, const OracleRow*> oracleByKey;
    if (report)
        for (const OracleRow& row : report->rows) oracleByKey[{row.y, row.u}] = &row;

    Json rows = Json::array();
    auto members = bounds.ideal.membersSorted();
    for (const Element& y : members)
        for (const Element& u : members) {
            auto it = bounds.entries.find({y, u});
            if (it == bounds.entries.end()) continue;
            Json row;
            row["y"] = wordToJson(bounds.ideal.words.at(y));
            row["u"] = wordToJson(bounds.ideal.words.at(u));
            row["lo"] = toInt64(it->second.lo);
            row["hi"] = toInt64(it->second.hi);
            row["settled"] = it->second.settled();
            if (report) {
                const OracleRow* orow = oracleByKey.at({y, u});
                row["oracle"] = toInt64(orow->oracle);
                row["status"] = orow->status;
            }
            rows.push_back(std::move(row));
        }
    Json j;
    j["rows"] = std::move(rows);
    if (report) {
        j["conflicts"] = report->conflicts;
        j["settled"] = report->settled;
        j["total"] = report->rows.size();
    }
    return j;
}

Json klCacheToJson(const KLCache& cache, const CoxeterSystem& sys) {
    Json j;
    j["format_version"] = 1;
    j["system"] = sys.name;
    Json entries = Json::array();
    for (const auto& [w, h] : cache.snapshot()) {
        Json entry;
        entry["w"] = wordToJson(canonicalWord(sys, w));
        Json terms = Json::array();
        for (const auto& [y, poly] : h.terms) {
            Json term;
            term["y"] = wordToJson(canonicalWord(sys, y));
            Json coeffs = Json::array();
            for (const auto& [e, c] : poly.coeffs) coeffs.push_back({e, toInt64(c)});
            term["coeffs"] = std::move(coeffs);
            terms.push_back(std::move(term));
        }
        entry["terms"] = std::move(terms);
        entries.push_back(std::move(entry));
    }
    j["entries"] = std::move(entries);
    return j;
}

void klCacheFromJson(const Json& j, const CoxeterSystem& sys, KLCache& cache) {
    if (j.value("format_version", 0) != 1)
        throw ConfigError("kl cache: unsupported format_version");
    if (j.value("system", std::string()) != sys.name)
        throw ConfigError("kl cache: system name mismatch (cache is for '" +
                          j.value("system", std::string()) + "')");
    for (const auto& entry : j.at("entries")) {
        Element w = wordToElement(sys, wordFromJson(entry.at("w")));
        HeckeElement h;
        for (const auto& term : entry.at("terms")) {
            Element y = wordToElement(sys, wordFromJson(term.at("y")));
            LaurentPoly p;
            for (const auto& pair : term.at("coeffs"))
                p.add(pair.at(0).get<int>(), Int(pair.at(1).get<long long>()));
            h.add(y, p);
        }
        cache.put(w, std::move(h));
    }
}

void saveKLCache(const KLCache& cache, const CoxeterSystem& sys, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write kl cache file: " + path);
    out << klCacheToJson(cache, sys).dump(2) << "\n";
}

void loadKLCache(const std::string& path, const CoxeterSystem& sys, KLCache& cache) {
    std::ifstream in(path);
    if (!in) return;
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ConfigError("kl cache parse error in " + path + ": " + e.what());
    }
    klCacheFromJson(j, sys, cache);
}

}  // namespace lightleaves
