// Command-line front end: tab | det | dims | sumformula | decomp | kl |
// realize-check. Exit codes: 0 ok, 2 config error, 3 guard violation,
// 4 internal inconsistency.

#include <filesystem>
#include <iostream>

#include "CLI11.hpp"
#include "lightleaves/decomp.hpp"
#include "lightleaves/json_io.hpp"

using namespace lightleaves;

namespace {

CoxeterSystem resolveSystem(const std::string& source) {
    if (std::filesystem::exists(source)) return systemFromFile(source);
    return presetSystem(source);
}

// Words are written with 1-based generator names: "s1s2s1", separators
// optional. "e", "id", "1" and the empty string denote the identity.
Word parseWord(const std::string& text, int rank) {
    if (text.empty() || text == "e" || text == "id" || text == "1") return {};
    Word out;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (c == ' ' || c == ',' || c == '.') {
            ++i;
            continue;
        }
        if (c != 's') throw ConfigError("cannot parse word '" + text + "': expected 's' at position " +
                                        std::to_string(i + 1));
        std::size_t j = i + 1;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        if (j == i + 1) throw ConfigError("cannot parse word '" + text + "': missing index after 's'");
        int idx = std::stoi(text.substr(i + 1, j - i - 1));
        if (idx < 1 || idx > rank)
            throw ConfigError("generator s" + std::to_string(idx) + " out of range (rank " +
                              std::to_string(rank) + ")");
        out.push_back(idx - 1);
        i = j;
    }
    return out;
}

std::string contentString(const std::vector<ContentEntry>& entries) {
    std::string out = "(";
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i) out += ", ";
        out += entries[i] ? rootToString(*entries[i]) : "0";
    }
    return out + ")";
}

std::string bitsString(const std::vector<std::uint8_t>& bits) {
    std::string out = "(";
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (i) out += ",";
        out += bits[i] ? "1" : "0";
    }
    return out + ")";
}

std::string symbolsString(const std::vector<Symbol>& symbols) {
    std::string out = "(";
    for (std::size_t i = 0; i < symbols.size(); ++i) {
        if (i) out += ",";
        out += symbolName(symbols[i]);
    }
    return out + ")";
}

struct CommonOpts {
    std::string system;
    std::string word;
    std::string target;
    std::string format = "text";
    std::string cachePath;
    int prime = 0;
    int maxWordLen = 20;
    int maxIdealSize = 4096;
    bool allTargets = false;
    std::string oracle = "on";
};

Valuation valuationFor(const CommonOpts& o) {
    return o.prime ? Valuation::charP(o.prime) : Valuation::char0();
}

void checkIdealGuard(const BruhatIdeal& ideal, const CommonOpts& o) {
    if (static_cast<int>(ideal.size()) > o.maxIdealSize)
        throw GuardError("ideal size guard: " + std::to_string(ideal.size()) + " exceeds " +
                         std::to_string(o.maxIdealSize) + " (raise --max-ideal)");
}

BruhatIdeal idealFor(const CoxeterSystem& sys, const CommonOpts& o) {
    Word word = parseWord(o.word, sys.rank);
    Element w = wordToElement(sys, word);
    if (canonicalWord(sys, w).size() != word.size())
        std::cerr << "note: word " << wordToString(word)
                  << " is not reduced; the ideal is generated by the element it expresses\n";
    BruhatIdeal ideal = idealFromElement(sys, w);
    checkIdealGuard(ideal, o);
    return ideal;
}

// Endpoints in (length, word) order; the deterministic target sweep.
std::vector<Element> sortedEndpoints(const CoxeterSystem& sys, const std::map<Element, Int>& dims) {
    std::vector<std::pair<Word, Element>> tmp;
    for (const auto& [y, d] : dims) tmp.emplace_back(canonicalWord(sys, y), y);
    std::sort(tmp.begin(), tmp.end(), [](const auto& a, const auto& b) {
        if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
        return a.first < b.first;
    });
    std::vector<Element> out;
    for (auto& [w, y] : tmp) out.push_back(y);
    return out;
}

int cmdTab(const CommonOpts& o) {
    CoxeterSystem sys = resolveSystem(o.system);
    Expression expr(sys, parseWord(o.word, sys.rank));
    Element y = wordToElement(sys, parseWord(o.target, sys.rank));
    auto records = tab(expr, y, o.maxWordLen);
    if (o.format == "json") {
        Json j;
        j["system"] = sys.name;
        j["word"] = wordToJson(expr.word);
        j["target"] = wordToJson(canonicalWord(sys, y));
        Json rs = Json::array();
        for (const auto& rec : records) rs.push_back(recordToJson(rec));
        j["records"] = std::move(rs);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "Tab(" << wordToString(canonicalWord(sys, y)) << ") over "
                  << wordToString(expr.word) << " [" << sys.name << "]: " << records.size()
                  << " subexpression" << (records.size() == 1 ? "" : "s") << "\n";
        for (const auto& rec : records)
            std::cout << "e=" << bitsString(rec.bits) << "  M=" << symbolsString(rec.symbols)
                      << "  content=" << contentString(content(rec)) << "\n";
    }
    return 0;
}

int cmdDet(const CommonOpts& o) {
    CoxeterSystem sys = resolveSystem(o.system);
    Expression expr(sys, parseWord(o.word, sys.rank));
    auto eps = detEpsilonProductAll(expr, o.maxWordLen);
    auto shap = detShapovalovAll(expr);
    std::vector<Element> targets;
    if (o.allTargets) {
        targets = sortedEndpoints(sys, dimDeltaAll(expr));
    } else {
        Element y = wordToElement(sys, parseWord(o.target, sys.rank));
        if (!eps.count(y)) throw ConfigError("target is not expressible in the word");
        targets.push_back(y);
    }
    bool allMatch = true;
    Json results = Json::array();
    for (const Element& y : targets) {
        bool match = eps.at(y).sameMagnitude(shap.at(y));
        allMatch = allMatch && match;
        if (o.format == "json") {
            Json r;
            r["target"] = wordToJson(canonicalWord(sys, y));
            r["epsilon"] = monomialToJson(eps.at(y));
            r["shapovalov"] = monomialToJson(shap.at(y));
            r["match"] = match;
            results.push_back(std::move(r));
        } else {
            std::cout << "target " << wordToString(canonicalWord(sys, y))
                      << ": epsilon=" << eps.at(y).toString()
                      << "  shapovalov=" << shap.at(y).toString() << "  match="
                      << (match ? "true" : "false") << "\n";
        }
    }
    if (o.format == "json") {
        Json j;
        j["system"] = sys.name;
        j["word"] = wordToJson(expr.word);
        j["results"] = std::move(results);
        j["all_match"] = allMatch;
        std::cout << j.dump(2) << "\n";
    }
    if (!allMatch)
        throw InternalError("Shapovalov factorization mismatch; this indicates a bug");
    return 0;
}

int cmdDims(const CommonOpts& o) {
    CoxeterSystem sys = resolveSystem(o.system);
    Expression expr(sys, parseWord(o.word, sys.rank));
    auto dims = dimDeltaAll(expr);
    std::vector<Element> targets;
    if (!o.target.empty() && !o.allTargets)
        targets.push_back(wordToElement(sys, parseWord(o.target, sys.rank)));
    else
        targets = sortedEndpoints(sys, dims);
    Json results = Json::array();
    for (const Element& y : targets) {
        Int d = dims.count(y) ? dims.at(y) : Int(0);
        if (o.format == "json") {
            Json r;
            r["element"] = wordToJson(canonicalWord(sys, y));
            r["dim"] = toInt64(d);
            results.push_back(std::move(r));
        } else {
            std::cout << wordToString(canonicalWord(sys, y)) << ": " << d << "\n";
        }
    }
    if (o.format == "json") {
        Json j;
        j["system"] = sys.name;
        j["word"] = wordToJson(expr.word);
        j["results"] = std::move(results);
        std::cout << j.dump(2) << "\n";
    }
    return 0;
}

int cmdSumFormula(const CommonOpts& o) {
    CoxeterSystem sys = resolveSystem(o.system);
    BruhatIdeal ideal = idealFor(sys, o);
    Element y = wordToElement(sys, parseWord(o.target, sys.rank));
    GrothendieckVector rhs = sumFormulaRHS(ideal, y, valuationFor(o));
    if (o.format == "json") {
        Json j;
        j["system"] = sys.name;
        j["ideal_generator"] = wordToJson(parseWord(o.word, sys.rank));
        j["target"] = wordToJson(canonicalWord(sys, y));
        j["valuation"] = o.prime ? Json(o.prime) : Json("char0");
        j["rhs"] = grVectorToJson(sys, rhs);
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    if (rhs.isZero()) {
        std::cout << "0\n";
        return 0;
    }
    Json listing = grVectorToJson(sys, rhs);  // reuse the sorted coefficient order
    bool first = true;
    for (const auto& entry : listing["coeffs"]) {
        long long c = entry["c"].get<long long>();
        if (!first) std::cout << " + ";
        if (c != 1) std::cout << c << "·";
        std::cout << "[Δ(" << wordToString(wordFromJson(entry["element"])) << ")]";
        first = false;
    }
    std::cout << "\n";
    return 0;
}

int cmdDecomp(const CommonOpts& o) {
    CoxeterSystem sys = resolveSystem(o.system);
    BruhatIdeal ideal = idealFor(sys, o);
    DecompositionBounds bounds = solveBounds(ideal, valuationFor(o));
    bool oracleOn = o.oracle == "on";
    OracleReport report;
    if (oracleOn) {
        KLCache cache(sys.name);
        if (!o.cachePath.empty()) loadKLCache(o.cachePath, sys, cache);
        report = klOracleCompare(ideal, bounds, cache);
        if (!o.cachePath.empty()) saveKLCache(cache, sys, o.cachePath);
    }
    if (o.format == "json") {
        Json j = boundsToJson(bounds, oracleOn ? &report : nullptr);
        j["system"] = sys.name;
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    Json j = boundsToJson(bounds, oracleOn ? &report : nullptr);
    std::cout << "y\tu\tlo\thi\tsettled" << (oracleOn ? "\toracle\tstatus" : "") << "\n";
    for (const auto& row : j["rows"]) {
        std::cout << wordToString(wordFromJson(row["y"])) << "\t"
                  << wordToString(wordFromJson(row["u"])) << "\t" << row["lo"].get<long long>()
                  << "\t" << row["hi"].get<long long>() << "\t"
                  << (row["settled"].get<bool>() ? "yes" : "open");
        if (oracleOn)
            std::cout << "\t" << row["oracle"].get<long long>() << "\t"
                      << row["status"].get<std::string>();
        std::cout << "\n";
    }
    if (oracleOn)
        std::cout << "settled " << report.settled << "/" << report.rows.size() << ", conflicts "
                  << report.conflicts << "\n";
    return 0;
}

int cmdKL(const CommonOpts& o) {
    CoxeterSystem sys = resolveSystem(o.system);
    KLCache cache(sys.name);
    if (!o.cachePath.empty()) loadKLCache(o.cachePath, sys, cache);

    std::vector<Element> ws;
    if (o.allTargets) {
        auto group = wholeGroup(sys, static_cast<std::size_t>(o.maxIdealSize));
        if (!group)
            throw GuardError("group size guard: group is not finite within " +
                             std::to_string(o.maxIdealSize) + " elements (raise --max-ideal)");
        ws = *group;
        std::sort(ws.begin(), ws.end(), [&](const Element& a, const Element& b) {
            Word wa = canonicalWord(sys, a), wb = canonicalWord(sys, b);
            if (wa.size() != wb.size()) return wa.size() < wb.size();
            return wa < wb;
        });
    } else {
        ws.push_back(wordToElement(sys, parseWord(o.word, sys.rank)));
    }

    Json entries = Json::array();
    for (const Element& w : ws) {
        HeckeElement bw = klBasisElement(sys, w, cache);
        std::vector<std::pair<Word, LaurentPoly>> rows;
        for (const auto& [y, p] : bw.terms) rows.emplace_back(canonicalWord(sys, y), p);
        std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
            if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
            return a.first < b.first;
        });
        if (!o.target.empty()) {
            Element y = wordToElement(sys, parseWord(o.target, sys.rank));
            rows = {{canonicalWord(sys, y), bw.coeff(y)}};
        }
        for (const auto& [yword, p] : rows) {
            if (o.format == "json") {
                Json e;
                e["y"] = wordToJson(yword);
                e["w"] = wordToJson(canonicalWord(sys, w));
                Json coeffs = Json::array();
                for (const auto& [exp, c] : p.coeffs) coeffs.push_back({exp, toInt64(c)});
                e["coeffs"] = std::move(coeffs);
                entries.push_back(std::move(e));
            } else {
                std::cout << "h[" << wordToString(yword) << ", "
                          << wordToString(canonicalWord(sys, w)) << "] = " << p.toString() << "\n";
            }
        }
    }
    if (o.format == "json") {
        Json j;
        j["system"] = sys.name;
        j["entries"] = std::move(entries);
        std::cout << j.dump(2) << "\n";
    }
    if (!o.cachePath.empty()) saveKLCache(cache, sys, o.cachePath);
    return 0;
}

int cmdRealizeCheck(const CommonOpts& o) {
    CoxeterSystem sys = resolveSystem(o.system);  // construction runs all checks
    if (o.format == "json") {
        Json j;
        j["ok"] = true;
        j["system"] = systemToJson(sys);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "ok: " << sys.name << " rank " << sys.rank << "\n";
    }
    return 0;
}

void addCommon(CLI::App* cmd, CommonOpts& o, bool needsWord, bool needsTarget) {
    cmd->add_option("--system", o.system, "preset name or config file")->required();
    auto* w = cmd->add_option("--word", o.word, "word in the generators, e.g. s1s2s1");
    if (needsWord) w->required();
    auto* t = cmd->add_option("--target", o.target, "target element word ('e' for the identity)");
    if (needsTarget) t->required();
    cmd->add_option("--format", o.format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--prime", o.prime, "odd prime p for the char-p valuation");
    cmd->add_option("--cache", o.cachePath, "KL cache file (created if missing)");
    cmd->add_option("--max-word-len", o.maxWordLen, "enumeration guard (default 20)");
    cmd->add_option("--max-ideal", o.maxIdealSize, "ideal/group size guard (default 4096)");
    cmd->add_flag("--all-targets,--all", o.allTargets, "sweep all expressible targets");
    cmd->add_option("--oracle", o.oracle, "on | off")->check(CLI::IsMember({"on", "off"}));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Coxeter/Bruhat combinatorics: light-leaves indexing data, "
                 "Gram determinant factorizations, Jantzen-type sum formulas and a "
                 "Kazhdan-Lusztig oracle"};
    app.require_subcommand(1);

    CommonOpts o;
    auto* tabCmd = app.add_subcommand("tab", "list Tab(target) with symbols and contents");
    addCommon(tabCmd, o, true, true);
    auto* detCmd = app.add_subcommand("det", "both Gram determinant factorizations");
    addCommon(detCmd, o, true, false);
    auto* dimsCmd = app.add_subcommand("dims", "cell-module dimensions over a word");
    addCommon(dimsCmd, o, true, false);
    auto* sumCmd = app.add_subcommand("sumformula", "Jantzen sum-formula right-hand side");
    addCommon(sumCmd, o, true, true);
    auto* decompCmd = app.add_subcommand("decomp", "decomposition-number bounds over an ideal");
    addCommon(decompCmd, o, true, false);
    auto* klCmd = app.add_subcommand("kl", "Kazhdan-Lusztig basis coefficients");
    addCommon(klCmd, o, false, false);
    auto* realizeCmd = app.add_subcommand("realize-check", "validate a system configuration");
    realizeCmd->add_option("--system", o.system, "preset name or config file")->required();
    realizeCmd->add_option("--format", o.format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (tabCmd->parsed()) return cmdTab(o);
        if (detCmd->parsed()) return cmdDet(o);
        if (dimsCmd->parsed()) return cmdDims(o);
        if (sumCmd->parsed()) return cmdSumFormula(o);
        if (decompCmd->parsed()) return cmdDecomp(o);
        if (klCmd->parsed()) return cmdKL(o);
        if (realizeCmd->parsed()) return cmdRealizeCheck(o);
    } catch (const GuardError& e) {
        std::cerr << "guard: " << e.what() << "\n";
        return 3;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const InternalError& e) {
        std::cerr << "internal: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "internal: " << e.what() << "\n";
        return 4;
    }
    return 0;
}
