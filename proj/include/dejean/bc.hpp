#pragma once

#include "dejean/pansiot.hpp"

#include <array>
#include <set>

namespace dejean {

enum class BcSymbol : std::uint8_t { B, C };

struct BcWord {
    std::vector<BcSymbol> symbols;

    Index size() const { return static_cast<Index>(symbols.size()); }
    bool empty() const { return symbols.empty(); }
    BcSymbol operator[](Index i) const { return symbols[static_cast<std::size_t>(i)]; }
    bool operator==(const BcWord& o) const { return symbols == o.symbols; }
    bool operator<(const BcWord& o) const { return symbols < o.symbols; }
};

BcWord bc_concat(const BcWord& a, const BcWord& b);
BcWord bc_repeat(const BcWord& u, int k);
BcWord bc_rotate_left(const BcWord& u, Index m);
bool bc_primitive(const BcWord& u);

/// The three image tables of the substitution phi:
///   Rbc: b -> "-+",  c -> "-+0"
///   Nbc: b -> "+-",  c -> "+0-"
///   Lbc: b -> "-+",  c -> "0-+"
enum class Flavor : std::uint8_t { Rbc, Nbc, Lbc };

constexpr std::array<Flavor, 3> kAllFlavors{Flavor::Rbc, Flavor::Nbc, Flavor::Lbc};

Code phi(const BcWord& u, Flavor f, int n);
Index phi_length(const BcWord& u);  // 2*|u|_b + 3*|u|_c

/// Parses the code as a concatenation of one flavor's images. The per-flavor
/// image pairs are prefix-distinguishable, so a left-to-right scan with one
/// symbol of lookahead decides the tiling.
std::optional<BcWord> tile_as(const Code& c, Flavor f);

/// All flavors whose images tile the code exactly. Empty set: not a bc-code.
std::set<Flavor> tile_flavors(const Code& c);

/// Whole bc-code: tileable by Rbc or Lbc images.
bool is_whole_bc(const std::set<Flavor>& flavors);

struct ShiftClassification {
    std::vector<std::set<Flavor>> per_rotation;
    bool all_tileable = false;
    bool adjacent2_whole = false;   // among any 2 adjacent rotations one is whole
    bool adjacent3_all = false;     // any 3 adjacent rotations reach all flavors
    std::optional<Index> first_violation;
    std::string violated_clause;
};

ShiftClassification shift_classification(const BcWord& u, Flavor f, int n);

/// True iff the code of w equals phi(u, f)^k, u is primitive as a bc-word,
/// and the n-suffix of w equals its premise. `why` receives a diagnostic on
/// failure when non-null.
bool is_k_bc_root(const Word& w, const BcWord& u, Flavor f, int k, std::string* why = nullptr);

}  // namespace dejean
