// Copyright 2025 The ldlsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ldlsim/ldl.h"

#include <algorithm>
#include <bit>
#include <numeric>

namespace ldlsim {

namespace {

struct FrontIds {
    int32_t bag = -1;
    int32_t parent = -1;
    std::vector<uint32_t> pivots;
    std::vector<uint32_t> peeled;
    std::vector<uint32_t> remaining;
};

struct Recorder {
    std::vector<uint32_t> pivot_ids;
    std::vector<std::pair<BlockKind, uint32_t>> blocks;
    std::vector<std::vector<uint32_t>> col_ids;
    std::vector<uint8_t> vbit;
    std::vector<uint32_t> peeled_ids;
    std::vector<uint8_t> wbit;
    std::vector<LdlEvent> events;
    std::vector<FrontIds> fronts;
};

/// Dense working matrix of one elimination front. Dead rows and columns are kept zero.
struct Front {
    std::vector<uint32_t> ids;
    BitMatrix s;
    std::vector<uint8_t> d;
    BitVector alive;
    BitVector eligible;

    explicit Front(std::vector<uint32_t> sorted_ids)
        : ids(std::move(sorted_ids)), s(ids.size(), ids.size()), d(ids.size(), 0), alive(ids.size()),
          eligible(ids.size()) {
        for (size_t i = 0; i < ids.size(); i++) {
            alive.set(i, true);
        }
    }

    size_t local(uint32_t id) const {
        auto it = std::lower_bound(ids.begin(), ids.end(), id);
        if (it == ids.end() || *it != id) {
            throw ContractViolation("vertex " + std::to_string(id) + " is not in the front");
        }
        return it - ids.begin();
    }

    std::vector<size_t> row_bits(size_t r) const {
        std::vector<size_t> out;
        const word_t *p = s.row(r);
        for (size_t k = 0; k < s.stride(); k++) {
            word_t w = p[k];
            while (w) {
                out.push_back(k * WORD_BITS + std::countr_zero(w));
                w &= w - 1;
            }
        }
        return out;
    }

    void kill(size_t c, const std::vector<size_t> &touching) {
        alive.set(c, false);
        std::fill(s.row(c), s.row(c) + s.stride(), 0);
        for (size_t r : touching) {
            s.set(r, c, false);
        }
    }

    bool zero_row(size_t r) const {
        return !(d[r] & 1) && !s.row_any(r);
    }
};

void do_peel(Front &f, size_t p, Recorder &rec, FrontIds &fi) {
    rec.peeled_ids.push_back(f.ids[p]);
    rec.wbit.push_back(f.d[p] >> 1);
    rec.events.push_back({LdlEvent::Kind::Peel, f.ids[p]});
    fi.peeled.push_back(f.ids[p]);
    f.alive.set(p, false);
}

void do_pivot1(Front &f, size_t c, Recorder &rec, FrontIds &fi) {
    std::vector<size_t> rows = f.row_bits(c);
    std::vector<uint32_t> col;
    for (size_t r : rows) {
        col.push_back(f.ids[r]);
    }
    rec.blocks.push_back({BlockKind::One, static_cast<uint32_t>(rec.pivot_ids.size())});
    rec.pivot_ids.push_back(f.ids[c]);
    rec.col_ids.push_back(std::move(col));
    rec.vbit.push_back(f.d[c] >> 1);
    rec.events.push_back({LdlEvent::Kind::Pivot1, f.ids[c]});
    fi.pivots.push_back(f.ids[c]);
    std::vector<word_t> rc(f.s.row(c), f.s.row(c) + f.s.stride());
    for (size_t r : rows) {
        word_t *p = f.s.row(r);
        for (size_t k = 0; k < rc.size(); k++) {
            p[k] ^= rc[k];
        }
        f.s.set(r, r, false);
        f.d[r] = (f.d[r] + 3) & 3;
    }
    f.kill(c, rows);
}

void do_pivot2(Front &f, size_t a, size_t b, Recorder &rec, FrontIds &fi) {
    std::vector<word_t> ra(f.s.row(a), f.s.row(a) + f.s.stride());
    std::vector<word_t> rb(f.s.row(b), f.s.row(b) + f.s.stride());
    auto clear = [&](std::vector<word_t> &w) {
        w[a / WORD_BITS] &= ~(word_t{1} << (a % WORD_BITS));
        w[b / WORD_BITS] &= ~(word_t{1} << (b % WORD_BITS));
    };
    clear(ra);
    clear(rb);
    std::vector<size_t> rows_a, rows_b;
    for (size_t k = 0; k < ra.size(); k++) {
        for (word_t w = ra[k]; w; w &= w - 1) {
            rows_a.push_back(k * WORD_BITS + std::countr_zero(w));
        }
        for (word_t w = rb[k]; w; w &= w - 1) {
            rows_b.push_back(k * WORD_BITS + std::countr_zero(w));
        }
    }
    std::vector<uint32_t> col_a, col_b;
    for (size_t r : rows_b) {
        col_a.push_back(f.ids[r]);
    }
    for (size_t r : rows_a) {
        col_b.push_back(f.ids[r]);
    }
    uint32_t first = rec.pivot_ids.size();
    rec.blocks.push_back({BlockKind::AntiDiag2, first});
    rec.pivot_ids.push_back(f.ids[a]);
    rec.pivot_ids.push_back(f.ids[b]);
    rec.col_ids.push_back(std::move(col_a));
    rec.col_ids.push_back(std::move(col_b));
    rec.vbit.push_back(f.d[a] >> 1);
    rec.vbit.push_back(f.d[b] >> 1);
    rec.events.push_back({LdlEvent::Kind::Pivot2, f.ids[a], f.ids[b]});
    fi.pivots.push_back(f.ids[a]);
    fi.pivots.push_back(f.ids[b]);
    for (size_t r : rows_a) {
        word_t *p = f.s.row(r);
        for (size_t k = 0; k < rb.size(); k++) {
            p[k] ^= rb[k];
        }
    }
    for (size_t r : rows_b) {
        word_t *p = f.s.row(r);
        for (size_t k = 0; k < ra.size(); k++) {
            p[k] ^= ra[k];
        }
    }
    std::vector<size_t> touched = rows_a;
    touched.insert(touched.end(), rows_b.begin(), rows_b.end());
    for (size_t r : touched) {
        f.s.set(r, r, false);
    }
    std::vector<bool> in_a(f.ids.size(), false);
    for (size_t r : rows_a) {
        in_a[r] = true;
    }
    for (size_t r : rows_b) {
        if (in_a[r]) {
            f.d[r] = (f.d[r] + 2) & 3;
        }
    }
    touched.push_back(a);
    touched.push_back(b);
    f.kill(a, touched);
    f.kill(b, touched);
}

/// Runs the pivot rule on the eligible rows of the front until no rule applies.
void eliminate(Front &f, Recorder &rec, FrontIds &fi) {
    const size_t m = f.ids.size();
    while (true) {
        BitVector ea = f.alive & f.eligible;
        if (!ea.any()) {
            return;
        }
        for (size_t r = 0; r < m; r++) {
            if (ea.get(r) && f.zero_row(r)) {
                do_peel(f, r, rec, fi);
                ea.set(r, false);
            }
        }
        bool done = false;
        for (size_t r = 0; r < m && !done; r++) {
            if (ea.get(r) && (f.d[r] & 1)) {
                do_pivot1(f, r, rec, fi);
                done = true;
            }
        }
        if (done) {
            continue;
        }
        for (size_t a = 0; a < m && !done; a++) {
            if (!ea.get(a)) {
                continue;
            }
            const word_t *p = f.s.row(a);
            for (size_t k = a / WORD_BITS; k < f.s.stride() && !done; k++) {
                word_t w = p[k] & ea.words()[k];
                if (k == a / WORD_BITS) {
                    size_t sh = a % WORD_BITS + 1;
                    w = sh >= WORD_BITS ? 0 : (w >> sh) << sh;
                }
                if (w) {
                    do_pivot2(f, a, k * WORD_BITS + std::countr_zero(w), rec, fi);
                    done = true;
                }
            }
        }
        if (!done) {
            return;
        }
    }
}

Front dense_front(const PhasedAdjacency &a) {
    std::vector<uint32_t> ids(a.size());
    std::iota(ids.begin(), ids.end(), 0);
    Front f(std::move(ids));
    f.s = a.offdiag();
    for (size_t i = 0; i < a.size(); i++) {
        f.d[i] = a.diag(i);
        f.eligible.set(i, true);
    }
    return f;
}

/// Top-down selected inversion over the fronts. Returns per-front dense blocks of G over the
/// sorted positions of each front, and fills f.secondbit_diag.
struct FrontG {
    std::vector<uint32_t> positions;
    BitMatrix g;
    std::vector<uint8_t> d4;
};

std::vector<FrontG> selected_inverse(ImplicitLdl &f) {
    std::vector<FrontG> out(f.fronts.size());
    f.secondbit_diag = BitVector(f.rank);
    for (size_t fi = f.fronts.size(); fi-- > 0;) {
        const auto &fr = f.fronts[fi];
        FrontG &fg = out[fi];
        auto &F = fg.positions;
        F = fr.pivots;
        F.insert(F.end(), fr.peeled.begin(), fr.peeled.end());
        F.insert(F.end(), fr.remaining.begin(), fr.remaining.end());
        std::sort(F.begin(), F.end());
        const size_t m = F.size();
        fg.g = BitMatrix(m, m);
        fg.d4.assign(m, 0);
        auto loc = [&](uint32_t p) -> size_t { return std::lower_bound(F.begin(), F.end(), p) - F.begin(); };
        if (fr.parent >= 0 && !fr.remaining.empty()) {
            const FrontG &pg = out[fr.parent];
            auto ploc = [&](uint32_t p) -> size_t {
                return std::lower_bound(pg.positions.begin(), pg.positions.end(), p) - pg.positions.begin();
            };
            std::vector<size_t> lu, pu;
            for (uint32_t u : fr.remaining) {
                lu.push_back(loc(u));
                pu.push_back(ploc(u));
            }
            for (size_t i = 0; i < lu.size(); i++) {
                fg.d4[lu[i]] = pg.d4[pu[i]];
                for (size_t j = 0; j < lu.size(); j++) {
                    fg.g.set(lu[i], lu[j], pg.g.get(pu[i], pu[j]));
                }
            }
        }
        std::vector<uint32_t> piv = fr.pivots;
        std::sort(piv.begin(), piv.end());
        for (size_t pi = piv.size(); pi-- > 0;) {
            uint32_t c = piv[pi];
            size_t lc = loc(c);
            std::vector<size_t> rl;
            BitVector in_col(m);
            BitVector rmask(m);
            for (uint32_t r : f.cols[c]) {
                size_t l = loc(r);
                in_col.set(l, true);
                if (r < f.rank) {
                    rl.push_back(l);
                    rmask.set(l, true);
                }
            }
            BitVector acc(m);
            for (size_t l : rl) {
                const word_t *row = fg.g.row(l);
                for (size_t k = 0; k < acc.word_count(); k++) {
                    acc.words()[k] ^= row[k];
                }
            }
            for (size_t i = 0; i < m; i++) {
                uint32_t p = F[i];
                if (p == c || (p < f.rank && p < c)) {
                    continue;
                }
                bool bit = acc.get(i);
                if (p >= f.rank && in_col.get(i)) {
                    bit = !bit;
                }
                if (f.partner[c] == static_cast<int32_t>(p) && p > c) {
                    bit = !bit;
                }
                fg.g.set(i, lc, bit);
                fg.g.set(lc, i, bit);
            }
            int d4 = f.partner[c] < 0 ? 1 : 0;
            size_t twice_pairs = 0;
            for (size_t l : rl) {
                d4 += fg.d4[l];
                const word_t *row = fg.g.row(l);
                for (size_t k = 0; k < rmask.word_count(); k++) {
                    twice_pairs += std::popcount(row[k] & rmask.words()[k]);
                }
                twice_pairs -= fg.g.get(l, l);
            }
            d4 += static_cast<int>(twice_pairs);
            fg.d4[lc] = d4 & 3;
            fg.g.set(lc, lc, d4 & 1);
            f.secondbit_diag.set(c, (d4 >> 1) & 1);
        }
    }
    return out;
}

ImplicitLdl finalize(Recorder &rec, size_t n) {
    ImplicitLdl f;
    f.n = n;
    f.rank = rec.pivot_ids.size();
    f.perm = rec.pivot_ids;
    f.perm.insert(f.perm.end(), rec.peeled_ids.begin(), rec.peeled_ids.end());
    if (f.perm.size() != n) {
        throw ContractViolation("elimination did not cover every row");
    }
    f.pos.assign(n, 0);
    for (uint32_t p = 0; p < n; p++) {
        f.pos[f.perm[p]] = p;
    }
    f.partner.assign(n, -1);
    for (auto [kind, first] : rec.blocks) {
        f.blocks.push_back({kind, first});
        if (kind == BlockKind::One) {
            f.one_by_one++;
        } else {
            f.partner[first] = first + 1;
            f.partner[first + 1] = first;
        }
    }
    f.cols.resize(f.rank);
    for (size_t c = 0; c < f.rank; c++) {
        for (uint32_t id : rec.col_ids[c]) {
            f.cols[c].push_back(f.pos[id]);
        }
        std::sort(f.cols[c].begin(), f.cols[c].end());
    }
    f.v = BitVector(f.rank);
    f.delta = BitVector(f.rank);
    f.w = BitVector(n);
    for (size_t c = 0; c < f.rank; c++) {
        f.v.set(c, rec.vbit[c]);
        f.w.set(c, rec.vbit[c]);
        f.delta.set(c, f.partner[c] < 0);
    }
    for (size_t i = 0; i < rec.peeled_ids.size(); i++) {
        f.w.set(f.rank + i, rec.wbit[i]);
    }
    f.events = rec.events;
    auto to_pos = [&](const std::vector<uint32_t> &ids) {
        std::vector<uint32_t> out;
        for (uint32_t id : ids) {
            out.push_back(f.pos[id]);
        }
        return out;
    };
    for (const auto &fi : rec.fronts) {
        ImplicitLdl::Front fr;
        fr.bag = fi.bag;
        fr.parent = fi.parent;
        fr.pivots = to_pos(fi.pivots);
        fr.peeled = to_pos(fi.peeled);
        fr.remaining = to_pos(fi.remaining);
        f.fronts.push_back(std::move(fr));
    }
    selected_inverse(f);
    return f;
}

}  // namespace

size_t ImplicitLdl::nnz() const {
    size_t c = 0;
    for (const auto &col : cols) {
        c += col.size();
    }
    return c;
}

LdlFactorization ImplicitLdl::expand() const {
    LdlFactorization e;
    e.n = n;
    e.rank = rank;
    e.perm = perm;
    e.L = BitMatrix::identity(n);
    for (size_t c = 0; c < rank; c++) {
        for (uint32_t r : cols[c]) {
            e.L.set(r, c, true);
        }
    }
    e.blocks = blocks;
    for (size_t p = rank; p < n; p++) {
        e.blocks.push_back({BlockKind::Zero, static_cast<uint32_t>(p)});
    }
    e.v = v;
    e.w = w;
    e.delta = delta;
    e.secondbit_diag = secondbit_diag;
    e.events = events;
    return e;
}

BitMatrix LdlFactorization::D() const {
    size_t m = reduced ? rank : n;
    BitMatrix d(m, m);
    for (const auto &b : blocks) {
        if (b.kind == BlockKind::One) {
            d.set(b.pos, b.pos, true);
        } else if (b.kind == BlockKind::AntiDiag2) {
            d.set(b.pos, b.pos + 1, true);
            d.set(b.pos + 1, b.pos, true);
        }
    }
    return d;
}

BitMatrix LdlFactorization::reconstruct() const {
    BitMatrix m = mul(mul(L, D()), L.transpose());
    BitMatrix out(n, n);
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < n; j++) {
            if (m.get(i, j)) {
                out.set(perm[i], perm[j], true);
            }
        }
    }
    return out;
}

BitMatrix LdlFactorization::reduced_L() const {
    if (reduced) {
        return L;
    }
    BitMatrix r(n, rank);
    for (size_t i = 0; i < n; i++) {
        for (size_t c = 0; c < rank; c++) {
            r.set(i, c, L.get(i, c));
        }
    }
    return r;
}

ImplicitLdl factor_dense(const PhasedAdjacency &a) {
    Recorder rec;
    Front f = dense_front(a);
    FrontIds fi;
    fi.bag = 0;
    eliminate(f, rec, fi);
    rec.fronts.push_back(fi);
    ImplicitLdl out = finalize(rec, a.size());
    out.tree.bags.emplace_back(f.ids);
    out.tree.root = 0;
    return out;
}

LdlFactorization ldl_dense(const PhasedAdjacency &a) {
    return factor_dense(a).expand();
}

LdlFactorization ldl_dense(const BitMatrix &a) {
    if (!a.is_symmetric()) {
        throw ContractViolation("ldl_dense: input is not symmetric");
    }
    return ldl_dense(PhasedAdjacency::from_matrix(a));
}

LdlFactorization ldl_reduced(const BitMatrix &a) {
    LdlFactorization f = ldl_dense(a);
    f.L = f.reduced_L();
    f.blocks.erase(std::remove_if(f.blocks.begin(), f.blocks.end(),
                                  [](const DBlock &b) { return b.kind == BlockKind::Zero; }),
                   f.blocks.end());
    f.reduced = true;
    return f;
}

LdlFactorization ldl_dense_forced(const PhasedAdjacency &a, const std::vector<LdlEvent> &events) {
    Recorder rec;
    Front f = dense_front(a);
    FrontIds fi;
    fi.bag = 0;
    auto need_alive = [&](uint32_t v) {
        if (v >= a.size() || !f.alive.get(v)) {
            throw ContractViolation("forced event names a dead or unknown row " + std::to_string(v));
        }
    };
    for (const auto &e : events) {
        switch (e.kind) {
            case LdlEvent::Kind::Peel:
                need_alive(e.a);
                if (!f.zero_row(e.a)) {
                    throw ContractViolation("forced peel of a nonzero row " + std::to_string(e.a));
                }
                do_peel(f, e.a, rec, fi);
                break;
            case LdlEvent::Kind::Pivot1:
                need_alive(e.a);
                if (!(f.d[e.a] & 1)) {
                    throw ContractViolation("forced 1x1 pivot on an even diagonal " + std::to_string(e.a));
                }
                do_pivot1(f, e.a, rec, fi);
                break;
            case LdlEvent::Kind::Pivot2:
                need_alive(e.a);
                need_alive(e.b);
                if ((f.d[e.a] & 1) || (f.d[e.b] & 1) || !f.s.get(e.a, e.b)) {
                    throw ContractViolation("forced 2x2 pivot is not anti-diagonal");
                }
                do_pivot2(f, e.a, e.b, rec, fi);
                break;
        }
    }
    rec.fronts.push_back(fi);
    return finalize(rec, a.size()).expand();
}

ImplicitLdl ldl_tree(const BitMatrix &a, const TreeDecomposition &td) {
    if (!a.is_symmetric()) {
        throw ContractViolation("ldl_tree: input is not symmetric");
    }
    return ldl_tree(PhasedAdjacency::from_matrix(a), td);
}

ImplicitLdl ldl_tree(const PhasedAdjacency &a, const TreeDecomposition &td) {
    const size_t n = a.size();
    Graph g = a.graph();
    validate(td, g);
    if (td.bags.empty()) {
        Recorder rec;
        return finalize(rec, n);
    }
    TreeDecomposition tree = binarize_and_root(td, td.width());
    RootedView rv = rooted_view(tree);
    const size_t nb = tree.bags.size();
    std::vector<uint32_t> depth(nb, 0);
    std::vector<uint32_t> bfs{rv.root};
    for (size_t i = 0; i < bfs.size(); i++) {
        for (uint32_t c : rv.children[bfs[i]]) {
            depth[c] = depth[bfs[i]] + 1;
            bfs.push_back(c);
        }
    }
    std::vector<int32_t> top(n, -1);
    for (uint32_t b : bfs) {
        for (uint32_t v : tree.bags[b]) {
            if (top[v] < 0) {
                top[v] = static_cast<int32_t>(b);
            }
        }
    }
    struct Update {
        std::vector<uint32_t> ids;
        BitMatrix s;
        std::vector<uint8_t> d;
    };
    std::vector<Update> updates(nb);
    std::vector<int32_t> front_of_bag(nb, -1);
    Recorder rec;
    for (uint32_t b : rv.post_order) {
        std::vector<uint32_t> ids = tree.bags[b];
        for (uint32_t c : rv.children[b]) {
            ids.insert(ids.end(), updates[c].ids.begin(), updates[c].ids.end());
        }
        std::sort(ids.begin(), ids.end());
        ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
        Front f(ids);
        for (uint32_t v : tree.bags[b]) {
            if (top[v] != static_cast<int32_t>(b)) {
                continue;
            }
            size_t lv = f.local(v);
            f.d[lv] = (f.d[lv] + a.diag(v)) & 3;
            for (uint32_t u : g.neighbors(v)) {
                uint32_t tu = top[u];
                bool here = depth[tu] < depth[b] || (tu == b && u > v);
                if (here) {
                    size_t lu = f.local(u);
                    f.s.flip(lv, lu);
                    f.s.flip(lu, lv);
                }
            }
        }
        for (uint32_t c : rv.children[b]) {
            Update &up = updates[c];
            std::vector<size_t> map;
            for (uint32_t id : up.ids) {
                map.push_back(f.local(id));
            }
            for (size_t i = 0; i < map.size(); i++) {
                f.d[map[i]] = (f.d[map[i]] + up.d[i]) & 3;
                for (size_t j = 0; j < map.size(); j++) {
                    if (up.s.get(i, j)) {
                        f.s.flip(map[i], map[j]);
                    }
                }
            }
            up = Update{};
        }
        for (size_t i = 0; i < f.ids.size(); i++) {
            if (depth[top[f.ids[i]]] >= depth[b]) {
                f.eligible.set(i, true);
            }
        }
        FrontIds fi;
        fi.bag = static_cast<int32_t>(b);
        eliminate(f, rec, fi);
        Update up;
        std::vector<size_t> keep;
        for (size_t i = 0; i < f.ids.size(); i++) {
            if (f.alive.get(i)) {
                keep.push_back(i);
                up.ids.push_back(f.ids[i]);
                fi.remaining.push_back(f.ids[i]);
            }
        }
        if (rv.parent[b] < 0 && !keep.empty()) {
            throw ContractViolation("ldl_tree: rows left at the root front");
        }
        up.s = BitMatrix(keep.size(), keep.size());
        for (size_t i = 0; i < keep.size(); i++) {
            up.d.push_back(f.d[keep[i]]);
            for (size_t j = 0; j < keep.size(); j++) {
                if (f.s.get(keep[i], keep[j])) {
                    up.s.set(i, j, true);
                }
            }
        }
        updates[b] = std::move(up);
        front_of_bag[b] = static_cast<int32_t>(rec.fronts.size());
        rec.fronts.push_back(std::move(fi));
    }
    for (auto &fi : rec.fronts) {
        int32_t pb = rv.parent[fi.bag];
        fi.parent = pb < 0 ? -1 : front_of_bag[pb];
    }
    ImplicitLdl out = finalize(rec, n);
    out.tree = std::move(tree);
    return out;
}

BitMatrix implicit_apply(const ImplicitLdl &f, LdlOp which, const BitMatrix &x) {
    const size_t n = f.n;
    const size_t r = f.rank;
    if (which == LdlOp::L2L1Inv) {
        if (x.rows() != r) {
            throw ShapeError("implicit_apply: L2L1Inv expects rank rows");
        }
        BitMatrix full(n, x.cols());
        for (size_t i = 0; i < r; i++) {
            std::copy(x.row(i), x.row(i) + x.stride(), full.row(i));
        }
        BitMatrix y = implicit_apply(f, LdlOp::LInv, full);
        BitMatrix out(n - r, x.cols());
        for (size_t i = r; i < n; i++) {
            std::copy(y.row(i), y.row(i) + y.stride(), out.row(i - r));
        }
        return out;
    }
    if (x.rows() != n) {
        throw ShapeError("implicit_apply: expected n rows");
    }
    const size_t s = x.stride();
    BitMatrix y = x;
    auto xor_into = [s](word_t *dst, const word_t *src) {
        for (size_t k = 0; k < s; k++) {
            dst[k] ^= src[k];
        }
    };
    switch (which) {
        case LdlOp::L:
            for (size_t c = 0; c < r; c++) {
                for (uint32_t row : f.cols[c]) {
                    xor_into(y.row(row), x.row(c));
                }
            }
            break;
        case LdlOp::LT:
            for (size_t c = 0; c < r; c++) {
                for (uint32_t row : f.cols[c]) {
                    xor_into(y.row(c), x.row(row));
                }
            }
            break;
        case LdlOp::LInv:
            for (size_t c = 0; c < r; c++) {
                for (uint32_t row : f.cols[c]) {
                    xor_into(y.row(row), y.row(c));
                }
            }
            break;
        case LdlOp::LInvT:
            for (size_t c = r; c-- > 0;) {
                for (uint32_t row : f.cols[c]) {
                    xor_into(y.row(c), y.row(row));
                }
            }
            break;
        case LdlOp::L2L1Inv:
            break;
    }
    return y;
}

PartialInverseBlocks partial_inverse_blocks(const ImplicitLdl &f) {
    ImplicitLdl copy = f;
    std::vector<FrontG> fg = selected_inverse(copy);
    PartialInverseBlocks out;
    out.secondbit_diag = copy.secondbit_diag;
    out.bags.resize(f.tree.bags.size());
    for (size_t i = 0; i < f.fronts.size(); i++) {
        int32_t b = f.fronts[i].bag;
        if (b < 0) {
            continue;
        }
        auto &blk = out.bags[b];
        blk.vertices = f.tree.bags[b];
        const size_t m = blk.vertices.size();
        blk.g = BitMatrix(m, m);
        blk.diag4.assign(m, 0);
        const auto &F = fg[i].positions;
        std::vector<size_t> loc;
        for (uint32_t v : blk.vertices) {
            uint32_t p = f.pos[v];
            loc.push_back(std::lower_bound(F.begin(), F.end(), p) - F.begin());
        }
        for (size_t x = 0; x < m; x++) {
            if (f.pos[blk.vertices[x]] < f.rank) {
                blk.diag4[x] = fg[i].d4[loc[x]];
            }
            for (size_t y = 0; y < m; y++) {
                blk.g.set(x, y, fg[i].g.get(loc[x], loc[y]));
            }
        }
    }
    return out;
}

PartialInverseBlocks partial_inverse_blocks(const ImplicitLdl &f, const TreeDecomposition &td) {
    (void)td;
    return partial_inverse_blocks(f);
}

}  // namespace ldlsim
