#pragma once

#include "dejean/checker.hpp"
#include "dejean/substitution.hpp"

namespace dejean {

/// Longest-common-prefix/suffix statistics of a family. l_V/r_V range over
/// all distinct image pairs, lcp_Vn/lcs_Vn only over pairs of images of
/// distinct letters. epsilon = (l_V + r_V)/(L - 1).
struct FamilyStats {
    Index L = 0;
    Index l_V = 0, r_V = 0;
    Index lcp_Vn = 0, lcs_Vn = 0;
    Ratio epsilon = Ratio::integer(0);
};

FamilyStats family_stats(const ImageFamily& fam);

struct ConditionVerdict {
    std::string name;
    bool pass = false;
    std::string detail;
    std::optional<FactorWitness> witness;
    double seconds = 0.0;
};

struct VerificationReport {
    std::vector<ConditionVerdict> conditions;

    bool pass() const;
    const ConditionVerdict* find(const std::string& name) const;
};

/// Aggregate bound eps + l_V + r_V <= L/(n-1), cross-validated against the
/// equivalent form (l_V + r_V)/(L-1) <= 1/(n-1). Implies both triple clauses.
bool check_C3(const ImageFamily& fam, int n);

/// l2.c1 primitivity, l2.c2 pairwise (eps, {1,2})-thresholdness of uv,
/// l2.c3 the per-letter prefix/suffix clause. eps is the family's own.
VerificationReport check_l2(const ImageFamily& fam, int n, int jobs = 0);

/// l1.c1 primitivity, l1.c2 pairwise plain thresholdness, l1.c3 the triple
/// suffix/prefix clause, for a bijective family of n + k images.
VerificationReport check_l1(const ImageFamily& fam, int n, int k, int jobs = 0);

/// The substitution-compatibility conditions (uf1.1 .. uf3.2) by exhaustive
/// quantification over image tuples and decompositions. Intended for small
/// image lengths; cost grows cubically with L.
VerificationReport check_uf(const ImageFamily& fam, const DeltaRelation& rel,
                            const EpsProfile& prof);

/// What the construction families are held to before substitution use:
/// primitivity, C3, and pairwise c2 across letters only (same-letter images
/// are cyclic alternates and never adjacent in a three-valued image).
VerificationReport check_family_for_substitution(const ImageFamily& fam, int n, int jobs = 0);

/// check_fast on suff_window(u) . pref_window(v); equivalent to the full-pair
/// verdict once the window covers every repeat that can cross the seam.
/// Witness positions refer to the windowed concatenation.
std::optional<FactorWitness> windowed_pair_check(const Word& u, const Word& v, Index window,
                                                 int n, const EpsProfile& prof);

}  // namespace dejean
