#pragma once

#include "dejean/constructions.hpp"

namespace dejean {

/// Per-letter image sets V_a of words over n letters, all of equal length L
/// and pairwise distinct across letters. The 3-valued substitution uses
/// |V_a| == 3 for every letter.
struct ImageFamily {
    int n = 0;       // target alphabet of the image words
    Index L = 0;
    std::vector<std::vector<Word>> images;  // indexed by source letter

    int source_letters() const { return static_cast<int>(images.size()); }
    Index total_images() const;
    const Word& image(int flat) const;          // flat id over all images
    int flat_id(int letter, int slot) const;
    int letter_of(int flat) const;
    std::vector<const Word*> flattened() const;
};

ImageFamily make_image_family(int n, std::vector<std::vector<Word>> images);

/// Groups the materialized construction images into conjugacy classes and
/// assigns one class of three per letter; the leftover class is returned as
/// the spare (alternative) images for tree growth.
struct ThreeValuedFamily {
    ImageFamily family;
    std::vector<Word> spare;
};

ThreeValuedFamily make_three_valued_family(const Materialized& m);

/// f_lambda: the j-th occurrence of letter a maps to V_a[(j-1) mod 3].
Word apply_three_valued(const Word& w, const ImageFamily& fam);

/// Same, also returning the flat image id chosen at every source position.
std::pair<Word, std::vector<int>> apply_three_valued_logged(const Word& w,
                                                            const ImageFamily& fam);

/// Letterwise image concatenation for a bijective family (|V_a| == 1 for each
/// of the n+k source letters).
Word apply_descent_morphism(const Word& w, const ImageFamily& fam);

/// Factors xyx with |x| in E that attain the threshold too tightly (not
/// (|x|, eps)-exponential) and whose right repeat covers position m (1-based).
/// Assumes w is threshold and eps <= 1/(n-1), so |xy| = |x|(n-1).
struct CriticalSets {
    struct Item {
        Index start = 0;    // 0-based start of the factor xyx
        Index repeat = 0;   // |x|
        Index period = 0;   // |xy|
        bool operator==(const Item& o) const {
            return start == o.start && repeat == o.repeat && period == o.period;
        }
    };
    std::vector<Item> factors;          // E_m
    std::vector<Index> left_positions;  // 0-based positions m - |xy| per member
};

CriticalSets critical_factors(const Word& w, int n, const EpsProfile& prof, Index m);

/// Successor relation delta: allowed[flat image id][next letter] = admissible
/// flat ids in V_letter. delta_min is min |delta_a(v)| over v outside V_a.
struct DeltaRelation {
    std::vector<std::vector<std::vector<int>>> allowed;

    static DeltaRelation full(const ImageFamily& fam);
    int delta_min(const ImageFamily& fam) const;
};

/// Least number of intermediate images on a delta-path from u to v
/// (0 when v directly follows u); nullopt when unreachable.
std::optional<int> delta_distance(const DeltaRelation& rel, const ImageFamily& fam, int u, int v);

struct GrowthReport {
    std::vector<std::uint64_t> counts;  // counts[j] = distinct images of pref_j(w); counts[0] = 1
    int delta_min = 0;
    int e_size = 0;
    bool bound_ok = false;  // counts grow by >= delta_min every 2 letters
    bool capped = false;
    std::optional<Index> defect_position;  // empty admissible set seen here (1-based)
};

/// Left-to-right branching enumeration under M1 (delta successors) and M2
/// (critical-position exclusions); counts distinct images per prefix.
GrowthReport enumerate_generalized_images(const Word& w, const ImageFamily& fam,
                                          const DeltaRelation& rel, const EpsProfile& prof,
                                          std::uint64_t cap);

struct AltTreeResult {
    std::vector<Word> words;
    bool all_threshold = false;
    std::optional<std::size_t> first_failure;
};

/// Swaps `replaced` for `alt` at every subset of its first `depth` occurrences
/// in the three-valued image of w; refuses unless the swapped family passes
/// the substitution verification. Every generated word is checked threshold.
AltTreeResult alt_image_tree(const Word& w, const ImageFamily& fam, const Word& alt,
                             const Word& replaced, int depth);

}  // namespace dejean
