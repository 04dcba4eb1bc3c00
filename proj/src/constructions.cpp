#include "dejean/constructions.hpp"

#include "dejean/conjugacy.hpp"

#include <numeric>

namespace dejean {

namespace {

BcWord bc_of(const std::string& s) {
    BcWord u;
    u.symbols.reserve(s.size());
    for (char ch : s) u.symbols.push_back(ch == 'b' ? BcSymbol::B : BcSymbol::C);
    return u;
}

BcWord bc_block(int bs, int cs_left, int cs_right) {
    // c^l b^bs c^r
    BcWord u;
    for (int i = 0; i < cs_left; ++i) u.symbols.push_back(BcSymbol::C);
    for (int i = 0; i < bs; ++i) u.symbols.push_back(BcSymbol::B);
    for (int i = 0; i < cs_right; ++i) u.symbols.push_back(BcSymbol::C);
    return u;
}

}  // namespace

BlockSet build_blocks(int n) {
    if (n < 5) throw std::invalid_argument("constructions need n >= 5");
    BlockSet bs;
    bs.n = n;
    bs.odd = n % 2 == 1;
    if (bs.odd) {
        const int m = (n - 3) / 2;
        for (int i = 0; i < 2 * m + 7; i += 2)
            bs.d_odd[i] = bc_block((n + i - 5) / 2, 1, 1);  // c b^((n+i-5)/2) c
        for (int i = 0; i < m; ++i) {
            const BcWord& d6 = bs.d_odd.at(6);
            const BcWord& d0 = bs.d_odd.at(0);
            const BcWord& d4 = bs.d_odd.at(4);
            const BcWord& dx = bs.d_odd.at(2 * i + 8);
            BcWord q = d6;
            q = bc_concat(q, d0);
            q = bc_concat(q, d4);
            q = bc_concat(q, dx);
            q = bc_concat(q, d0);
            q = bc_concat(q, d6);
            BcWord qp = d6;
            qp = bc_concat(qp, d0);
            qp = bc_concat(qp, dx);
            qp = bc_concat(qp, d4);
            qp = bc_concat(qp, d0);
            qp = bc_concat(qp, d6);
            bs.q_odd.push_back(std::move(q));
            bs.qp_odd.push_back(std::move(qp));
        }
    } else {
        const int h = n / 12 + 1;
        bs.d_even.resize(static_cast<std::size_t>(h + 1));
        for (int i = 0; i <= h; ++i)
            for (int j = 0; j <= 3; ++j)
                bs.d_even[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    bc_concat(bc_block((n + 2 * j - 6) / 2, 0, 0), bc_of(std::string(
                                  static_cast<std::size_t>(2 * i + 1), 'c')));  // b^((n+2j-6)/2) c^(2i+1)
        auto d = [&](int i, int j) -> const BcWord& {
            return bs.d_even[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        };
        for (int i = 0; i < h; ++i) {
            auto mk = [&](std::initializer_list<int> js) {
                BcWord q;
                int idx = 0;
                for (int j : js) {
                    // positions 1 and 5 of each q-block are the short d_{0,0}
                    const BcWord& blk = (idx == 1 || idx == 5) ? d(0, 0) : d(i, j);
                    q = bc_concat(q, blk);
                    ++idx;
                }
                return q;
            };
            bs.q_even[0].push_back(mk({3, 0, 1, 2, 1, 0}));
            bs.q_even[1].push_back(mk({3, 0, 3, 1, 1, 0}));
            bs.q_even[2].push_back(mk({3, 0, 2, 3, 1, 0}));
            bs.qp_even[0].push_back(mk({3, 0, 2, 1, 1, 0}));
            bs.qp_even[1].push_back(mk({3, 0, 1, 3, 1, 0}));
            bs.qp_even[2].push_back(mk({3, 0, 3, 2, 1, 0}));
        }
    }
    return bs;
}

const BcWord& RootFamily::root(Index flat) const {
    const Index r = rotations();
    if (flat < r) return minus[static_cast<std::size_t>(flat)];
    if (flat < 2 * r) return zero[static_cast<std::size_t>(flat - r)];
    return plus[static_cast<std::size_t>(flat - 2 * r)];
}

Index RootFamily::root_offset(Index flat) const {
    const Index r = rotations();
    if (flat < r) return minus_off[static_cast<std::size_t>(flat)];
    if (flat < 2 * r) return zero_off[static_cast<std::size_t>(flat - r)];
    return plus_off[static_cast<std::size_t>(flat - 2 * r)];
}

Index RootFamily::code_offset(Index flat) const {
    const Index off = root_offset(flat);
    BcWord prefix;
    prefix.symbols.assign(w0.symbols.begin(), w0.symbols.begin() + off);
    return phi_length(prefix);
}

int suggested_k(const RootFamily& fam) {
    Code c = phi(fam.w0, Flavor::Rbc, fam.n);
    Permutation pi = induced_permutation(canonical_premise(fam.n, PremiseKind::A0), c);
    int ord = pi.order();
    int k = ord;
    while (k < 3) k += ord;
    return k;
}

RootFamily build_roots(int n) {
    BlockSet bs = build_blocks(n);
    RootFamily fam;
    fam.n = n;
    fam.odd = bs.odd;
    fam.default_k = bs.odd ? 3 : 5;

    // q-block sequence of w0 plus the leading d-block of each q.
    std::vector<const BcWord*> qseq;
    std::vector<const BcWord*> lead;
    const BcWord* trail = nullptr;
    if (bs.odd) {
        const int m = (n - 3) / 2;
        const BcWord& d6 = bs.d_odd.at(6);
        auto push = [&](const BcWord& q) {
            qseq.push_back(&q);
            lead.push_back(&d6);
        };
        push(bs.q_odd[0]);
        push(bs.qp_odd[0]);
        for (int i = 0; i < m; ++i) push(bs.q_odd[static_cast<std::size_t>(i)]);
        push(bs.q_odd[0]);
        push(bs.qp_odd[0]);
        for (int i = 0; i < m; ++i) push(bs.qp_odd[static_cast<std::size_t>(i)]);
        trail = &d6;
    } else {
        const int h = n / 12 + 1;
        auto push = [&](const BcWord& q, int i) {
            qseq.push_back(&q);
            lead.push_back(&bs.d_even[static_cast<std::size_t>(i)][3]);
        };
        for (int i = 0; i + 1 < h; ++i)
            for (int j = 0; j < 3; ++j) {
                push(bs.q_even[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)], i);
                push(bs.qp_even[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)], i);
            }
        for (int j = 0; j < 2; ++j) {
            push(bs.q_even[static_cast<std::size_t>(j)][static_cast<std::size_t>(h - 1)], h - 1);
            push(bs.qp_even[static_cast<std::size_t>(j)][static_cast<std::size_t>(h - 1)], h - 1);
        }
        push(bs.q_even[2][static_cast<std::size_t>(h - 1)], h - 1);
        for (int i = 0; i + 1 < h; ++i)
            for (int j = 0; j < 3; ++j) {
                push(bs.qp_even[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)], i);
                push(bs.q_even[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)], i);
            }
        for (int j = 0; j < 2; ++j) {
            push(bs.qp_even[static_cast<std::size_t>(j)][static_cast<std::size_t>(h - 1)], h - 1);
            push(bs.q_even[static_cast<std::size_t>(j)][static_cast<std::size_t>(h - 1)], h - 1);
        }
        push(bs.qp_even[2][static_cast<std::size_t>(h - 1)], h - 1);
        trail = &bs.d_even[0][0];
    }

    for (const BcWord* q : qseq) fam.w0 = bc_concat(fam.w0, *q);
    const Index total = fam.w0.size();

    // sanity: every whole-q rotation must start at its q's leading d-block and
    // end with the shared trailing d-block
    if (fam.w0.empty() || qseq.empty()) throw std::logic_error("empty construction");

    Index off = 0;
    for (std::size_t qi = 0; qi < qseq.size(); ++qi) {
        BcWord w = bc_rotate_left(fam.w0, off);
        const Index dl = lead[qi]->size();
        const Index dt = trail->size();
        // structural check: w = lead . u . trail
        for (Index t = 0; t < dl; ++t)
            if (!(w[t] == (*lead[qi])[t])) throw std::runtime_error("rotation does not start with its d-block");
        for (Index t = 0; t < dt; ++t)
            if (!(w[total - dt + t] == (*trail)[t])) throw std::runtime_error("rotation does not end with the trailing d-block");
        fam.zero.push_back(w);
        fam.zero_off.push_back(off);
        fam.minus.push_back(bc_rotate_left(w, dl));
        fam.minus_off.push_back((off + dl) % total);
        fam.plus.push_back(bc_rotate_left(w, total - dt));
        fam.plus_off.push_back((off + total - dt) % total);
        off += qseq[qi]->size();
    }
    return fam;
}

Materialized materialize(const RootFamily& fam, int k) {
    if (k < 1) throw std::invalid_argument("materialize: k must be >= 1");
    Materialized m;
    m.n = fam.n;
    m.k = k;
    Premise a0 = canonical_premise(fam.n, PremiseKind::A0);
    const Index n = fam.n;
    for (Index i = 0; i < fam.total_roots(); ++i) {
        Code code = phi(fam.root(i), Flavor::Rbc, fam.n);
        Word full = decode(a0, repeat(code, k));
        Word image = factor(full, n, full.size() - n);
        if (!(factor(image, image.size() - n, n) == a0.letters))
            throw std::runtime_error("l3.c2 violated for root " + std::to_string(i));
        if (m.images.empty()) m.L = image.size();
        else if (image.size() != m.L) throw std::logic_error("unequal image lengths");
        m.images.push_back(std::move(image));
    }
    return m;
}

std::vector<std::vector<Index>> image_conjugacy_classes(const Materialized& m) {
    std::vector<std::vector<Index>> classes;
    std::vector<bool> done(m.images.size(), false);
    for (std::size_t i = 0; i < m.images.size(); ++i) {
        if (done[i]) continue;
        std::vector<Index> cls{static_cast<Index>(i)};
        done[i] = true;
        for (std::size_t j = i + 1; j < m.images.size(); ++j) {
            if (done[j]) continue;
            if (conjugate_oracle(m.images[i], m.images[j])) {
                cls.push_back(static_cast<Index>(j));
                done[j] = true;
            }
        }
        classes.push_back(std::move(cls));
    }
    return classes;
}

}  // namespace dejean
