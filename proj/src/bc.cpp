#include "dejean/bc.hpp"

#include <tuple>

namespace dejean {

namespace {

const CodeSymbol M = CodeSymbol::Minus;
const CodeSymbol Z = CodeSymbol::Zero;
const CodeSymbol P = CodeSymbol::Plus;

struct ImageTable {
    std::vector<CodeSymbol> b, c;
};

const ImageTable& images(Flavor f) {
    static const ImageTable rbc{{M, P}, {M, P, Z}};
    static const ImageTable nbc{{P, M}, {P, Z, M}};
    static const ImageTable lbc{{M, P}, {Z, M, P}};
    switch (f) {
        case Flavor::Rbc: return rbc;
        case Flavor::Nbc: return nbc;
        case Flavor::Lbc: return lbc;
    }
    throw std::logic_error("bad flavor");
}

bool match_at(const Code& c, Index pos, const std::vector<CodeSymbol>& img) {
    if (pos + static_cast<Index>(img.size()) > c.size()) return false;
    for (std::size_t i = 0; i < img.size(); ++i)
        if (c[pos + static_cast<Index>(i)] != img[i]) return false;
    return true;
}

}  // namespace

BcWord bc_concat(const BcWord& a, const BcWord& b) {
    BcWord r = a;
    r.symbols.insert(r.symbols.end(), b.symbols.begin(), b.symbols.end());
    return r;
}

BcWord bc_repeat(const BcWord& u, int k) {
    BcWord r;
    r.symbols.reserve(u.symbols.size() * static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        r.symbols.insert(r.symbols.end(), u.symbols.begin(), u.symbols.end());
    return r;
}

BcWord bc_rotate_left(const BcWord& u, Index m) {
    if (u.empty()) return u;
    Index k = ((m % u.size()) + u.size()) % u.size();
    BcWord r;
    r.symbols.reserve(u.symbols.size());
    r.symbols.insert(r.symbols.end(), u.symbols.begin() + k, u.symbols.end());
    r.symbols.insert(r.symbols.end(), u.symbols.begin(), u.symbols.begin() + k);
    return r;
}

bool bc_primitive(const BcWord& u) {
    if (u.empty()) return false;
    // smallest period via border array
    std::vector<Index> b(u.symbols.size(), 0);
    Index k = 0;
    for (Index i = 1; i < u.size(); ++i) {
        while (k > 0 && u[i] != u[k]) k = b[k - 1];
        if (u[i] == u[k]) ++k;
        b[i] = k;
    }
    Index per = u.size() - b[u.symbols.size() - 1];
    return per == u.size() || u.size() % per != 0;
}

Code phi(const BcWord& u, Flavor f, int n) {
    const ImageTable& t = images(f);
    Code r;
    r.n = n;
    r.symbols.reserve(static_cast<std::size_t>(phi_length(u)));
    for (BcSymbol s : u.symbols) {
        const auto& img = s == BcSymbol::B ? t.b : t.c;
        r.symbols.insert(r.symbols.end(), img.begin(), img.end());
    }
    return r;
}

Index phi_length(const BcWord& u) {
    Index len = 0;
    for (BcSymbol s : u.symbols) len += s == BcSymbol::B ? 2 : 3;
    return len;
}

std::optional<BcWord> tile_as(const Code& c, Flavor f) {
    const ImageTable& t = images(f);
    BcWord out;
    Index pos = 0;
    while (pos < c.size()) {
        // The two images of one flavor diverge within their first two symbols,
        // except Rbc where c extends b by a trailing Zero; since no Rbc image
        // starts with Zero, preferring the longer match is always safe.
        if (match_at(c, pos, t.c)) {
            out.symbols.push_back(BcSymbol::C);
            pos += static_cast<Index>(t.c.size());
        } else if (match_at(c, pos, t.b)) {
            out.symbols.push_back(BcSymbol::B);
            pos += static_cast<Index>(t.b.size());
        } else {
            return std::nullopt;
        }
    }
    return out;
}

std::set<Flavor> tile_flavors(const Code& c) {
    std::set<Flavor> r;
    for (Flavor f : kAllFlavors)
        if (tile_as(c, f)) r.insert(f);
    return r;
}

bool is_whole_bc(const std::set<Flavor>& flavors) {
    return flavors.count(Flavor::Rbc) > 0 || flavors.count(Flavor::Lbc) > 0;
}

ShiftClassification shift_classification(const BcWord& u, Flavor f, int n) {
    Code c = phi(u, f, n);
    if (c.size() < 3) throw std::invalid_argument("shift_classification: code shorter than 3");
    ShiftClassification r;
    r.per_rotation.reserve(static_cast<std::size_t>(c.size()));
    for (Index m = 0; m < c.size(); ++m) r.per_rotation.push_back(tile_flavors(rotate_left(c, m)));

    const Index len = c.size();
    auto at = [&](Index i) -> const std::set<Flavor>& {
        return r.per_rotation[static_cast<std::size_t>(((i % len) + len) % len)];
    };
    r.all_tileable = true;
    r.adjacent2_whole = true;
    r.adjacent3_all = true;
    for (Index m = 0; m < len; ++m) {
        if (r.all_tileable && at(m).empty()) {
            r.all_tileable = false;
            if (!r.first_violation) { r.first_violation = m; r.violated_clause = "tileable"; }
        }
        if (r.adjacent2_whole && !is_whole_bc(at(m)) && !is_whole_bc(at(m + 1))) {
            r.adjacent2_whole = false;
            if (!r.first_violation) { r.first_violation = m; r.violated_clause = "adjacent2_whole"; }
        }
        std::set<Flavor> seen;
        for (Index d = 0; d < 3; ++d)
            for (Flavor g : at(m + d)) seen.insert(g);
        if (r.adjacent3_all && seen.size() != 3) {
            r.adjacent3_all = false;
            if (!r.first_violation) { r.first_violation = m; r.violated_clause = "adjacent3_all"; }
        }
    }
    return r;
}

bool is_k_bc_root(const Word& w, const BcWord& u, Flavor f, int k, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (k < 1) return fail("k must be >= 1");
    if (!bc_primitive(u)) return fail("bc-root is not primitive, k not minimal");
    if (w.size() < w.n) return fail("word shorter than n");
    Code expected = repeat(phi(u, f, w.n), k);
    if (expected.size() != w.size()) return fail("code length mismatch");
    // The premise precedes the word, so the code covers every position; the
    // k-bc-root requirement makes the premise the word's own n-suffix.
    try {
        Premise p = make_premise(factor(w, w.size() - w.n, w.n));
        Word full = decode(p, expected);
        if (!(factor(full, w.n, w.size()) == w)) return fail("code is not phi(u)^k");
    } catch (const std::exception& e) {
        return fail(std::string("word not decodable from its suffix premise: ") + e.what());
    }
    return true;
}

}  // namespace dejean
