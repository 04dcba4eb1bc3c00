#include "dejean/substitution.hpp"

#include <algorithm>
#include <deque>

namespace dejean {

Index ImageFamily::total_images() const {
    Index t = 0;
    for (const auto& v : images) t += static_cast<Index>(v.size());
    return t;
}

const Word& ImageFamily::image(int flat) const {
    for (const auto& v : images) {
        if (flat < static_cast<int>(v.size())) return v[static_cast<std::size_t>(flat)];
        flat -= static_cast<int>(v.size());
    }
    throw std::out_of_range("image id out of range");
}

int ImageFamily::flat_id(int letter, int slot) const {
    int base = 0;
    for (int a = 0; a < letter; ++a) base += static_cast<int>(images[static_cast<std::size_t>(a)].size());
    return base + slot;
}

int ImageFamily::letter_of(int flat) const {
    for (std::size_t a = 0; a < images.size(); ++a) {
        if (flat < static_cast<int>(images[a].size())) return static_cast<int>(a);
        flat -= static_cast<int>(images[a].size());
    }
    throw std::out_of_range("image id out of range");
}

std::vector<const Word*> ImageFamily::flattened() const {
    std::vector<const Word*> r;
    for (const auto& v : images)
        for (const Word& w : v) r.push_back(&w);
    return r;
}

ImageFamily make_image_family(int n, std::vector<std::vector<Word>> images) {
    ImageFamily fam;
    fam.n = n;
    fam.images = std::move(images);
    Index L = -1;
    for (const auto& v : fam.images)
        for (const Word& w : v) {
            if (w.n != n) throw std::invalid_argument("image over wrong alphabet");
            if (L < 0) L = w.size();
            if (w.size() != L) throw std::invalid_argument("images must share one length");
        }
    if (L < 1) throw std::invalid_argument("family needs at least one image");
    fam.L = L;
    auto flat = fam.flattened();
    for (std::size_t i = 0; i < flat.size(); ++i)
        for (std::size_t j = i + 1; j < flat.size(); ++j)
            if (*flat[i] == *flat[j]) throw std::invalid_argument("duplicate image in family");
    return fam;
}

ThreeValuedFamily make_three_valued_family(const Materialized& m) {
    // Conjugate images must share a letter so that adjacent images in a
    // three-valued output are never rotations of one another; pack whole
    // conjugacy classes into triples, first-fit decreasing.
    auto classes = image_conjugacy_classes(m);
    const int n = m.n;
    std::sort(classes.begin(), classes.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a.front() < b.front();
    });
    for (const auto& c : classes)
        if (c.size() > 3)
            throw std::runtime_error("a conjugacy class exceeds the per-letter image count");
    std::vector<std::vector<Index>> bins(static_cast<std::size_t>(n));
    std::vector<std::vector<Index>> leftover;
    for (const auto& cls : classes) {
        bool placed = false;
        for (auto& bin : bins)
            if (bin.size() + cls.size() <= 3) {
                bin.insert(bin.end(), cls.begin(), cls.end());
                placed = true;
                break;
            }
        if (!placed) leftover.push_back(cls);
    }
    for (const auto& bin : bins)
        if (bin.size() != 3)
            throw std::runtime_error("could not pack conjugacy classes into letter triples");
    std::vector<std::vector<Word>> per_letter;
    for (const auto& bin : bins) {
        std::vector<Word> v;
        for (Index idx : bin) v.push_back(m.images[static_cast<std::size_t>(idx)]);
        per_letter.push_back(std::move(v));
    }
    ThreeValuedFamily r{make_image_family(n, std::move(per_letter)), {}};
    for (const auto& cls : leftover)
        for (Index idx : cls) r.spare.push_back(m.images[static_cast<std::size_t>(idx)]);
    return r;
}

std::pair<Word, std::vector<int>> apply_three_valued_logged(const Word& w,
                                                            const ImageFamily& fam) {
    if (w.empty()) throw std::invalid_argument("empty word");
    if (w.n > fam.source_letters()) throw std::invalid_argument("missing image set for a letter");
    Word out;
    out.n = fam.n;
    out.letters.reserve(static_cast<std::size_t>(fam.L * w.size()));
    std::vector<int> log;
    log.reserve(w.letters.size());
    std::vector<int> count(static_cast<std::size_t>(w.n), 0);
    for (Letter a : w.letters) {
        auto& seen = count[static_cast<std::size_t>(a)];
        const auto& va = fam.images[static_cast<std::size_t>(a)];
        if (va.size() != 3) throw std::invalid_argument("three-valued substitution needs |V_a| == 3");
        const int slot = seen % 3;
        ++seen;
        const Word& img = va[static_cast<std::size_t>(slot)];
        out.letters.insert(out.letters.end(), img.letters.begin(), img.letters.end());
        log.push_back(fam.flat_id(a, slot));
    }
    return {std::move(out), std::move(log)};
}

Word apply_three_valued(const Word& w, const ImageFamily& fam) {
    return apply_three_valued_logged(w, fam).first;
}

Word apply_descent_morphism(const Word& w, const ImageFamily& fam) {
    for (const auto& v : fam.images)
        if (v.size() != 1) throw std::invalid_argument("descent morphism needs a bijective family");
    if (!w.empty() && w.n > fam.source_letters())
        throw std::invalid_argument("missing image set for a letter");
    Word out;
    out.n = fam.n;
    out.letters.reserve(static_cast<std::size_t>(fam.L) * w.letters.size());
    for (Letter a : w.letters) {
        const Word& img = fam.images[static_cast<std::size_t>(a)][0];
        out.letters.insert(out.letters.end(), img.letters.begin(), img.letters.end());
    }
    return out;
}

CriticalSets critical_factors(const Word& w, int n, const EpsProfile& prof, Index m) {
    if (m < 1 || m > w.size()) throw std::out_of_range("position m out of range");
    CriticalSets r;
    const Index m0 = m - 1;
    const Ratio bound = repetition_threshold(n);
    for (int e : prof.exempt) {
        if (e < 1) continue;
        const Index p = static_cast<Index>(e) * (n - 1);
        // not (|x|, eps)-exponential at |xy| = |x|(n-1): (p + e + eps)/p > RT
        using i128 = __int128;
        i128 lhs = (static_cast<i128>(p + e) * prof.epsilon.den + prof.epsilon.num) *
                   bound.den;
        i128 rhs = static_cast<i128>(bound.num) * p * prof.epsilon.den;
        if (lhs <= rhs) continue;
        const Index lo = std::max<Index>(0, m0 - p - e + 1);
        const Index hi = m0 - p;
        for (Index s = lo; s <= hi; ++s) {
            if (s < 0 || s + p + e > w.size()) continue;
            bool match = true;
            for (Index t = 0; t < e && match; ++t) match = w[s + t] == w[s + p + t];
            if (!match) continue;
            r.factors.push_back({s, e, p});
            r.left_positions.push_back(m0 - p);
        }
    }
    return r;
}

DeltaRelation DeltaRelation::full(const ImageFamily& fam) {
    DeltaRelation rel;
    const int total = static_cast<int>(fam.total_images());
    rel.allowed.assign(static_cast<std::size_t>(total), {});
    for (int v = 0; v < total; ++v) {
        auto& row = rel.allowed[static_cast<std::size_t>(v)];
        row.assign(static_cast<std::size_t>(fam.source_letters()), {});
        for (int b = 0; b < fam.source_letters(); ++b) {
            if (b == fam.letter_of(v)) continue;  // threshold words never repeat a letter adjacently
            for (std::size_t s = 0; s < fam.images[static_cast<std::size_t>(b)].size(); ++s)
                row[static_cast<std::size_t>(b)].push_back(fam.flat_id(b, static_cast<int>(s)));
        }
    }
    return rel;
}

int DeltaRelation::delta_min(const ImageFamily& fam) const {
    int dmin = -1;
    for (std::size_t v = 0; v < allowed.size(); ++v)
        for (std::size_t b = 0; b < allowed[v].size(); ++b) {
            if (static_cast<int>(b) == fam.letter_of(static_cast<int>(v))) continue;
            int sz = static_cast<int>(allowed[v][b].size());
            if (dmin < 0 || sz < dmin) dmin = sz;
        }
    return dmin < 0 ? 0 : dmin;
}

std::optional<int> delta_distance(const DeltaRelation& rel, const ImageFamily& fam, int u, int v) {
    const int total = static_cast<int>(fam.total_images());
    if (u < 0 || u >= total || v < 0 || v >= total) throw std::out_of_range("image id");
    // edge count of the shortest non-empty path, so u == v asks for a cycle
    std::vector<int> dist(static_cast<std::size_t>(total), -1);
    std::deque<int> queue;
    for (const auto& succ : rel.allowed[static_cast<std::size_t>(u)])
        for (int y : succ)
            if (dist[static_cast<std::size_t>(y)] < 0) {
                dist[static_cast<std::size_t>(y)] = 1;
                queue.push_back(y);
            }
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        if (x == v) break;
        for (const auto& succ : rel.allowed[static_cast<std::size_t>(x)])
            for (int y : succ)
                if (dist[static_cast<std::size_t>(y)] < 0) {
                    dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
                    queue.push_back(y);
                }
    }
    int d = dist[static_cast<std::size_t>(v)];
    if (d < 0) return std::nullopt;
    return d - 1;  // intermediate images between u and v
}

GrowthReport enumerate_generalized_images(const Word& w, const ImageFamily& fam,
                                          const DeltaRelation& rel, const EpsProfile& prof,
                                          std::uint64_t cap) {
    GrowthReport rep;
    rep.delta_min = rel.delta_min(fam);
    rep.e_size = static_cast<int>(prof.exempt.size());
    rep.counts.assign(static_cast<std::size_t>(w.size()) + 1, 0);
    rep.counts[0] = 1;
    if (w.empty()) { rep.bound_ok = true; return rep; }

    // admissible images per position are the delta successors minus the log
    // entries that M2 forces to differ (left-repeat positions of factors whose
    // right repeat starts here)
    std::vector<CriticalSets> crit;
    crit.reserve(static_cast<std::size_t>(w.size()));
    for (Index j = 1; j <= w.size(); ++j) crit.push_back(critical_factors(w, fam.n, prof, j));

    std::vector<int> log(static_cast<std::size_t>(w.size()), -1);
    bool aborted = false;

    auto dfs = [&](auto&& self, Index j) -> void {  // j = next position, 1-based
        if (aborted) return;
        if (j > w.size()) return;
        const Letter b = w[j - 1];
        std::vector<int> choices;
        if (j == 1) {
            for (std::size_t s = 0; s < fam.images[static_cast<std::size_t>(b)].size(); ++s)
                choices.push_back(fam.flat_id(b, static_cast<int>(s)));
        } else {
            choices = rel.allowed[static_cast<std::size_t>(log[static_cast<std::size_t>(j - 2)])]
                                 [static_cast<std::size_t>(b)];
        }
        // exclusions from E_j \ E_{j-1}: right repeat starting exactly at j
        const auto& cs = crit[static_cast<std::size_t>(j - 1)];
        std::vector<int> banned;
        for (std::size_t t = 0; t < cs.factors.size(); ++t) {
            const auto& f = cs.factors[t];
            if (f.start + f.period != j - 1) continue;  // not newly covered at j
            const Index lp = cs.left_positions[t];
            if (lp < j - 1 && log[static_cast<std::size_t>(lp)] >= 0)
                banned.push_back(log[static_cast<std::size_t>(lp)]);
        }
        std::erase_if(choices, [&](int c) {
            return std::find(banned.begin(), banned.end(), c) != banned.end();
        });
        if (choices.empty()) {
            if (!rep.defect_position) rep.defect_position = j;
            return;
        }
        for (int c : choices) {
            if (aborted) return;
            log[static_cast<std::size_t>(j - 1)] = c;
            auto& cnt = rep.counts[static_cast<std::size_t>(j)];
            if (++cnt > cap) { rep.capped = true; aborted = true; return; }
            self(self, j + 1);
        }
        log[static_cast<std::size_t>(j - 1)] = -1;
    };
    dfs(dfs, 1);

    rep.bound_ok = !rep.capped && !rep.defect_position.has_value();
    if (rep.bound_ok)
        for (std::size_t j = 0; j + 2 < rep.counts.size(); ++j)
            if (rep.counts[j + 2] <
                static_cast<std::uint64_t>(rep.delta_min) * rep.counts[j]) {
                rep.bound_ok = false;
                break;
            }
    return rep;
}

}  // namespace dejean
