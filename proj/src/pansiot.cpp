#include "dejean/pansiot.hpp"

#include <algorithm>

namespace dejean {

Code concat(const Code& a, const Code& b) {
    if (a.n != b.n) throw std::invalid_argument("concat: alphabet mismatch");
    Code r = a;
    r.symbols.insert(r.symbols.end(), b.symbols.begin(), b.symbols.end());
    return r;
}

Code repeat(const Code& c, int k) {
    if (k < 0) throw std::invalid_argument("repeat: k must be >= 0");
    Code r;
    r.n = c.n;
    r.symbols.reserve(c.symbols.size() * static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        r.symbols.insert(r.symbols.end(), c.symbols.begin(), c.symbols.end());
    return r;
}

Code rotate_left(const Code& c, Index m) {
    if (c.empty()) return c;
    Index k = ((m % c.size()) + c.size()) % c.size();
    Code r;
    r.n = c.n;
    r.symbols.reserve(c.symbols.size());
    r.symbols.insert(r.symbols.end(), c.symbols.begin() + k, c.symbols.end());
    r.symbols.insert(r.symbols.end(), c.symbols.begin(), c.symbols.begin() + k);
    return r;
}

Code code_factor(const Code& c, Index start, Index len) {
    if (start < 0 || len < 0 || start + len > c.size())
        throw std::out_of_range("code factor out of range");
    Code r;
    r.n = c.n;
    r.symbols.assign(c.symbols.begin() + start, c.symbols.begin() + start + len);
    return r;
}

Premise make_premise(Word letters) {
    const Index n = letters.size();
    if (n < 2 || n != letters.n) throw std::invalid_argument("premise must have exactly n letters");
    std::vector<bool> seen(static_cast<std::size_t>(letters.n), false);
    bool distinct = true;
    for (Letter a : letters.letters) {
        if (seen[static_cast<std::size_t>(a)]) distinct = false;
        seen[static_cast<std::size_t>(a)] = true;
    }
    if (distinct) return Premise{std::move(letters), PremiseKind::A0};
    // AMinus: only the first and last letters coincide.
    bool aminus = letters[0] == letters[n - 1];
    std::vector<bool> inner(static_cast<std::size_t>(letters.n), false);
    for (Index i = 0; aminus && i + 1 < n; ++i) {
        if (inner[static_cast<std::size_t>(letters[i])]) aminus = false;
        inner[static_cast<std::size_t>(letters[i])] = true;
    }
    if (!aminus) throw std::invalid_argument("premise is neither A0 nor A- shaped");
    return Premise{std::move(letters), PremiseKind::AMinus};
}

Premise canonical_premise(int n, PremiseKind kind) {
    std::vector<Letter> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i;
    if (kind == PremiseKind::AMinus) v[static_cast<std::size_t>(n - 1)] = 0;
    return Premise{make_word(n, std::move(v)), kind};
}

Letter missing_letter(const Premise& p) {
    if (p.kind != PremiseKind::AMinus)
        throw std::invalid_argument("only an A- premise has a missing letter");
    std::vector<bool> seen(static_cast<std::size_t>(p.letters.n), false);
    for (Letter a : p.letters.letters) seen[static_cast<std::size_t>(a)] = true;
    for (int a = 0; a < p.letters.n; ++a)
        if (!seen[static_cast<std::size_t>(a)]) return a;
    throw std::logic_error("A- premise uses all letters");
}

namespace {

Index symbol_distance(CodeSymbol s, int n) {
    switch (s) {
        case CodeSymbol::Minus: return n - 1;
        case CodeSymbol::Zero: return n;
        case CodeSymbol::Plus: return n + 1;
    }
    throw std::logic_error("bad code symbol");
}

}  // namespace

Word decode(const Premise& p, const Code& c) {
    const int n = p.letters.n;
    if (c.n != n) throw std::invalid_argument("decode: premise/code alphabet mismatch");
    Word w;
    w.n = n;
    w.letters.reserve(p.letters.letters.size() + c.symbols.size());
    std::vector<Index> last(static_cast<std::size_t>(n), -1);
    for (Letter a : p.letters.letters) {
        w.letters.push_back(a);
        last[static_cast<std::size_t>(a)] = w.size() - 1;
    }
    for (Index i = 0; i < c.size(); ++i) {
        const Index j = n + i;
        const Index src = j - symbol_distance(c[i], n);
        Letter a;
        if (src < 0) {
            // Only Plus at the very first code position can reach below the
            // premise; it pulls in the letter the A- premise is missing.
            if (c[i] != CodeSymbol::Plus || p.kind != PremiseKind::AMinus || src != -1)
                throw std::runtime_error("Plus at start with A0 premise");
            a = missing_letter(p);
            if (last[static_cast<std::size_t>(a)] != -1)
                throw std::runtime_error("nearest-occurrence violated at 0");
        } else {
            a = w[src];
            if (last[static_cast<std::size_t>(a)] != src)
                throw std::runtime_error("nearest-occurrence violated at " + std::to_string(i));
        }
        w.letters.push_back(a);
        last[static_cast<std::size_t>(a)] = j;
    }
    return w;
}

std::pair<Premise, Code> encode(const Word& w) {
    const int n = w.n;
    if (w.size() < n) throw std::invalid_argument("word shorter than its alphabet size");
    Premise p = make_premise(factor(w, 0, n));
    Code c;
    c.n = n;
    c.symbols.reserve(static_cast<std::size_t>(w.size() - n));
    std::vector<Index> last(static_cast<std::size_t>(n), -1);
    for (Index i = 0; i < n; ++i) last[static_cast<std::size_t>(w[i])] = i;
    for (Index j = n; j < w.size(); ++j) {
        const Index prev = last[static_cast<std::size_t>(w[j])];
        if (prev < 0) {
            if (j == n && p.kind == PremiseKind::AMinus) {
                c.symbols.push_back(CodeSymbol::Plus);
            } else {
                throw std::runtime_error("not codable at position " + std::to_string(j));
            }
        } else {
            const Index d = j - prev;
            if (d == n - 1) c.symbols.push_back(CodeSymbol::Minus);
            else if (d == n) c.symbols.push_back(CodeSymbol::Zero);
            else if (d == n + 1) c.symbols.push_back(CodeSymbol::Plus);
            else throw std::runtime_error("not codable at position " + std::to_string(j));
        }
        last[static_cast<std::size_t>(w[j])] = j;
    }
    return {std::move(p), std::move(c)};
}

PremiseKind infer_premise_kind(const Code& c) {
    if (c.empty()) throw std::invalid_argument("cannot infer premise kind of an empty code");
    return c[0] == CodeSymbol::Plus ? PremiseKind::AMinus : PremiseKind::A0;
}

bool validate_bc_rule(const Code& c) {
    const int n = c.n;
    for (Index i = n; i < c.size(); ++i) {
        if (c[i] == CodeSymbol::Zero && c[i - n] == CodeSymbol::Zero) return false;
        if (c[i] == CodeSymbol::Minus && i - n - 2 >= 0 && c[i - n - 2] == CodeSymbol::Minus &&
            c[i - n] == CodeSymbol::Minus && c[i - 2] == CodeSymbol::Minus)
            return false;
    }
    return true;
}

Word cyclic_factor(const Code& root, const Premise& p, Index m, Index l) {
    if (root.empty()) throw std::invalid_argument("cyclic_factor: empty root");
    if (l < 1) throw std::invalid_argument("cyclic_factor: l must be >= 1");
    const int n = p.letters.n;
    m = ((m % root.size()) + root.size()) % root.size();
    Word head = decode(p, code_factor(root, 0, m));
    Premise derived = make_premise(factor(head, head.size() - n, n));
    Code rotated = rotate_left(root, m);
    const int reps = static_cast<int>(l <= n ? 0 : (l - n + root.size() - 1) / root.size());
    Word full = decode(derived, repeat(rotated, reps));
    return factor(full, 0, l);
}

}  // namespace dejean
