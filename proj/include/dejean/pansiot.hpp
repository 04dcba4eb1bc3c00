#pragma once

#include "dejean/word.hpp"

namespace dejean {

/// Extended Pansiot code symbol. The sign records the distance from a letter
/// to its nearest equal letter on the left: n-1 for Minus, n for Zero,
/// n+1 for Plus.
enum class CodeSymbol : std::uint8_t { Minus, Zero, Plus };

struct Code {
    int n = 0;
    std::vector<CodeSymbol> symbols;

    Index size() const { return static_cast<Index>(symbols.size()); }
    bool empty() const { return symbols.empty(); }
    CodeSymbol operator[](Index i) const { return symbols[static_cast<std::size_t>(i)]; }
    bool operator==(const Code& o) const { return n == o.n && symbols == o.symbols; }
};

Code concat(const Code& a, const Code& b);
Code repeat(const Code& c, int k);
Code rotate_left(const Code& c, Index m);
Code code_factor(const Code& c, Index start, Index len);

enum class PremiseKind : std::uint8_t { A0, AMinus };

/// The n letters that precede a code and make decoding deterministic.
/// A0: all n letters distinct. AMinus: first == last, the rest distinct.
struct Premise {
    Word letters;
    PremiseKind kind = PremiseKind::A0;
};

/// Infers the kind from the letter pattern; throws if neither fits.
Premise make_premise(Word letters);
Premise canonical_premise(int n, PremiseKind kind);

/// For an AMinus premise, the unique alphabet letter it does not contain.
Letter missing_letter(const Premise& p);

/// Builds the word premise + one letter per code symbol. Each appended letter
/// is w[j - d] with d = n-1 / n / n+1; the decoder additionally validates that
/// this source is the nearest equal occurrence. A code starting with Plus
/// reaches one position before the premise and is only meaningful for an
/// AMinus premise, where it appends the premise's missing letter.
Word decode(const Premise& p, const Code& c);

std::pair<Premise, Code> encode(const Word& w);

/// AMinus iff the code starts with Plus; A0 for Minus or Zero.
PremiseKind infer_premise_kind(const Code& c);

/// Checks the scheduling rule on codes: no Minus at i with Minus at each of
/// i-n-2, i-n, i-2, and no Zero at i with Zero at i-n (1-based i > n).
bool validate_bc_rule(const Code& c);

/// Factor of the circular word defined by `root`: the length-l prefix of the
/// premise-inclusive decode of the code rotated left by m, from the derived
/// premise A' (the n-window of the original decode ending at position n+m).
Word cyclic_factor(const Code& root, const Premise& p, Index m, Index l);

}  // namespace dejean
