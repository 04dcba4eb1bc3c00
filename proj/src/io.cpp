#include "dejean/io.hpp"

#include <cctype>
#include <sstream>

namespace dejean {

std::string format_word(const Word& w) {
    std::ostringstream os;
    if (w.n <= 26) {
        for (Letter a : w.letters) os << static_cast<char>('a' + a);
    } else {
        for (std::size_t i = 0; i < w.letters.size(); ++i) {
            if (i) os << ' ';
            os << w.letters[i];
        }
    }
    return os.str();
}

Word parse_word(int n, const std::string& text) {
    std::vector<Letter> letters;
    if (n <= 26) {
        for (char ch : text) {
            if (std::isspace(static_cast<unsigned char>(ch))) continue;
            if (ch < 'a' || ch >= 'a' + n)
                throw std::invalid_argument(std::string("letter '") + ch + "' outside a.." +
                                            static_cast<char>('a' + n - 1));
            letters.push_back(ch - 'a');
        }
    } else {
        std::istringstream is(text);
        long long v;
        while (is >> v) letters.push_back(static_cast<Letter>(v));
        if (!is.eof()) throw std::invalid_argument("malformed integer word");
    }
    return make_word(n, std::move(letters));
}

std::string format_code(const Code& c) {
    std::string s;
    s.reserve(c.symbols.size());
    for (CodeSymbol x : c.symbols)
        s += x == CodeSymbol::Minus ? '-' : x == CodeSymbol::Zero ? '0' : '+';
    return s;
}

Code parse_code(int n, const std::string& text) {
    Code c;
    c.n = n;
    for (char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        switch (ch) {
            case '-': c.symbols.push_back(CodeSymbol::Minus); break;
            case '0': c.symbols.push_back(CodeSymbol::Zero); break;
            case '+': c.symbols.push_back(CodeSymbol::Plus); break;
            default: throw std::invalid_argument("code symbols are -, 0, +");
        }
    }
    return c;
}

std::string format_bc(const BcWord& u) {
    std::string s;
    s.reserve(u.symbols.size());
    for (BcSymbol x : u.symbols) s += x == BcSymbol::B ? 'b' : 'c';
    return s;
}

BcWord parse_bc(const std::string& text) {
    BcWord u;
    for (char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        if (ch == 'b') u.symbols.push_back(BcSymbol::B);
        else if (ch == 'c') u.symbols.push_back(BcSymbol::C);
        else throw std::invalid_argument("bc words are over b, c");
    }
    return u;
}

char flavor_flag(Flavor f) {
    switch (f) {
        case Flavor::Rbc: return 'r';
        case Flavor::Nbc: return 'n';
        case Flavor::Lbc: return 'l';
    }
    throw std::logic_error("bad flavor");
}

Flavor parse_flavor(char flag) {
    switch (flag) {
        case 'r': return Flavor::Rbc;
        case 'n': return Flavor::Nbc;
        case 'l': return Flavor::Lbc;
    }
    throw std::invalid_argument("flavor flag must be r, n or l");
}

Ratio parse_ratio(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Ratio::integer(std::stoll(text));
    return Ratio::of(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
}

nlohmann::json witness_json(const FactorWitness& w) {
    return {{"start", w.start},
            {"len", w.len},
            {"period", w.period},
            {"exp", {{"num", w.exponent().num}, {"den", w.exponent().den}}}};
}

nlohmann::json check_result_json(const CheckResult& r) {
    nlohmann::json j{{"threshold", r.threshold()},
                     {"bands", r.bands},
                     {"iterations", r.iterations},
                     {"bc_shortcut", r.used_bc_shortcut}};
    if (r.witness) j["witness"] = witness_json(*r.witness);
    return j;
}

nlohmann::json report_json(const VerificationReport& r) {
    nlohmann::json conds = nlohmann::json::array();
    for (const auto& c : r.conditions) {
        nlohmann::json jc{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail},
                          {"seconds", c.seconds}};
        if (c.witness) jc["witness"] = witness_json(*c.witness);
        conds.push_back(std::move(jc));
    }
    return {{"pass", r.pass()}, {"conditions", std::move(conds)}};
}

nlohmann::json growth_report_json(const GrowthReport& r) {
    nlohmann::json counts = nlohmann::json::array();
    for (std::size_t j = 0; j < r.counts.size(); ++j)
        counts.push_back({{"prefix_len", j}, {"count", r.counts[j]}});
    nlohmann::json j{{"counts", std::move(counts)},
                     {"delta_min", r.delta_min},
                     {"E_size", r.e_size},
                     {"bound_ok", r.bound_ok},
                     {"capped", r.capped}};
    if (r.defect_position) j["defect_position"] = *r.defect_position;
    return j;
}

nlohmann::json family_json(const RootFamily& fam, const Materialized& m) {
    nlohmann::json roots = nlohmann::json::array();
    nlohmann::json images = nlohmann::json::array();
    for (Index i = 0; i < fam.total_roots(); ++i) roots.push_back(format_bc(fam.root(i)));
    for (const Word& w : m.images) images.push_back(format_word(w));
    return {{"n", fam.n},
            {"parity", fam.odd ? "odd" : "even"},
            {"k", m.k},
            {"L", m.L},
            {"roots", std::move(roots)},
            {"images", std::move(images)}};
}

LoadedFamily family_from_json(const nlohmann::json& j) {
    LoadedFamily f;
    f.n = j.at("n").get<int>();
    f.k = j.at("k").get<int>();
    f.odd = j.at("parity").get<std::string>() == "odd";
    f.L = j.at("L").get<Index>();
    for (const auto& r : j.at("roots")) f.roots.push_back(parse_bc(r.get<std::string>()));
    for (const auto& w : j.at("images")) f.images.push_back(parse_word(f.n, w.get<std::string>()));
    for (const Word& w : f.images)
        if (w.size() != f.L) throw std::invalid_argument("family dump: image length differs from L");
    return f;
}

ThreeValuedFamily assign_letters(const LoadedFamily& f) {
    Materialized m;
    m.n = f.n;
    m.k = f.k;
    m.L = f.L;
    m.images = f.images;
    return make_three_valued_family(m);
}

}  // namespace dejean
