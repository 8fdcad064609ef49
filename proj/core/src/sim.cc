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

#include "ldlsim/sim.h"

#include <algorithm>
#include <bit>
#include <cstdio>

#include "ldlsim/pgs.h"
#include "ldlsim/rng.h"

namespace ldlsim {

SimContext prepare(const PhasedAdjacency &a, const std::optional<TreeDecomposition> &td, const SimOptions &options) {
    SimContext ctx;
    ctx.source = a;
    ctx.n = a.size();
    ctx.options = options;
    if (td) {
        ctx.f = ldl_tree(a, *td);
    } else if (a.size() > options.dense_limit) {
        ctx.f = ldl_tree(a, heuristic_decompose(a.graph(), Heuristic::MinDegree));
    } else {
        ctx.f = factor_dense(a);
    }
    ctx.k = ctx.f.rank;
    ctx.perm = ctx.f.perm;
    ctx.v = ctx.f.v;
    ctx.w = ctx.f.w;
    ctx.secondbit_diag = ctx.f.secondbit_diag;
    ctx.u = options.u_rule == URule::Delta ? ctx.f.delta : ctx.f.v ^ ctx.f.delta;
    int p = options.alpha_rule == AlphaRule::PivotCount ? static_cast<int>(ctx.f.one_by_one)
                                                        : static_cast<int>(ctx.v.popcount());
    ctx.alpha = ExactAmplitude::omega_pow(-p);
    return ctx;
}

namespace {

void check_length(const SimContext &ctx, const BitVector &x) {
    if (x.size() != ctx.n) {
        throw ShapeError("query length " + std::to_string(x.size()) + " != " + std::to_string(ctx.n));
    }
}

/// Bit-sliced Z4 accumulator over 64 lanes.
struct Z4Lanes {
    word_t lo = 0;
    word_t hi = 0;
    void add1(word_t b) {
        hi ^= lo & b;
        lo ^= b;
    }
    void add2(word_t b) {
        hi ^= b;
    }
    int get(size_t j) const {
        return static_cast<int>(((lo >> j) & 1) | (((hi >> j) & 1) << 1));
    }
};

}  // namespace

/// b(a, b) = sum over 1x1 blocks a_i b_i + sum over pairs (a_p b_q + a_q b_p), mod 2.
BitVector d_apply(const ImplicitLdl &f, const BitVector &x) {
    BitVector out(f.rank);
    for (const auto &b : f.blocks) {
        if (b.kind == BlockKind::One) {
            out.set(b.pos, x.get(b.pos));
        } else if (b.kind == BlockKind::AntiDiag2) {
            out.set(b.pos, x.get(b.pos + 1));
            out.set(b.pos + 1, x.get(b.pos));
        }
    }
    return out;
}

int d_form(const ImplicitLdl &f, const BitVector &x) {
    int e = 0;
    for (const auto &b : f.blocks) {
        if (b.kind == BlockKind::One) {
            e += x.get(b.pos);
        } else if (b.kind == BlockKind::AntiDiag2) {
            e += 2 * (x.get(b.pos) & x.get(b.pos + 1));
        }
    }
    return e & 3;
}

std::vector<ExactAmplitude> strong_eval(const SimContext &ctx, const std::vector<BitVector> &xs) {
    const size_t n = ctx.n, k = ctx.k;
    std::vector<ExactAmplitude> out(xs.size());
    for (size_t base = 0; base < xs.size(); base += WORD_BITS) {
        const size_t cnt = std::min(WORD_BITS, xs.size() - base);
        BitMatrix t(n, cnt);
        for (size_t j = 0; j < cnt; j++) {
            const BitVector &x = xs[base + j];
            check_length(ctx, x);
            for (size_t p = 0; p < n; p++) {
                if (x.get(ctx.perm[p]) ^ ctx.w.get(p)) {
                    t.set(p, j, true);
                }
            }
        }
        BitMatrix c = implicit_apply(ctx.f, LdlOp::LInv, t);
        word_t zero = 0;
        for (size_t p = k; p < n; p++) {
            zero |= c.row(p)[0];
        }
        Z4Lanes e;
        for (const auto &b : ctx.f.blocks) {
            if (b.kind == BlockKind::One) {
                e.add1(c.row(b.pos)[0]);
            } else if (b.kind == BlockKind::AntiDiag2) {
                e.add2(c.row(b.pos)[0] & c.row(b.pos + 1)[0]);
            }
        }
        if (ctx.options.u_rule == URule::VXorDelta) {
            word_t par = 0;
            for (size_t p = 0; p < k; p++) {
                if (ctx.v.get(p)) {
                    par ^= t.row(p)[0];
                }
            }
            e.add2(par);
        }
        for (size_t j = 0; j < cnt; j++) {
            if ((zero >> j) & 1) {
                out[base + j] = ExactAmplitude();
            } else {
                out[base + j] = ctx.alpha * ExactAmplitude::clifford(-static_cast<int>(k), 2 * e.get(j));
            }
        }
    }
    return out;
}

std::vector<ExactAmplitude> strong_eval_fixed(const SimContext &ctx, const std::vector<uint32_t> &S,
                                              const BitVector &y, const std::vector<BitVector> &xs) {
    const size_t n = ctx.n, k = ctx.k;
    if (y.size() != S.size()) {
        throw ShapeError("strong_eval_fixed: y must align with S");
    }
    std::vector<int8_t> fixed(n, -1);
    for (size_t i = 0; i < S.size(); i++) {
        if (S[i] >= n || fixed[S[i]] >= 0) {
            throw ContractViolation("strong_eval_fixed: S must list distinct indices below n");
        }
        fixed[S[i]] = y.get(i);
    }
    for (const auto &x : xs) {
        check_length(ctx, x);
        for (size_t i = 0; i < S.size(); i++) {
            if (x.get(S[i]) != y.get(i)) {
                throw ContractViolation("strong_eval_fixed: query disagrees with y on S");
            }
        }
    }
    std::vector<uint32_t> F;
    for (uint32_t i = 0; i < n; i++) {
        if (fixed[i] < 0) {
            F.push_back(i);
        }
    }
    const size_t l = F.size();
    // Column 0: t for x = y on S, 0 elsewhere. Column 1 + i: unit vector at the free index F[i].
    BitMatrix t(n, l + 1);
    for (size_t p = 0; p < n; p++) {
        uint32_t orig = ctx.perm[p];
        t.set(p, 0, (fixed[orig] == 1) ^ ctx.w.get(p));
    }
    for (size_t i = 0; i < l; i++) {
        t.set(ctx.f.pos[F[i]], i + 1, true);
    }
    BitMatrix c = implicit_apply(ctx.f, LdlOp::LInv, t);
    BitVector c0(k);
    std::vector<BitVector> g(l, BitVector(k));
    for (size_t p = 0; p < k; p++) {
        c0.set(p, c.get(p, 0));
        for (size_t i = 0; i < l; i++) {
            g[i].set(p, c.get(p, i + 1));
        }
    }
    // Support: peeled rows of c0 + G x_F vanish.
    BitMatrix cons(n - k, l + 1);
    for (size_t p = k; p < n; p++) {
        for (size_t i = 0; i < l; i++) {
            cons.set(p - k, i, c.get(p, i + 1));
        }
        cons.set(p - k, l, c.get(p, 0));
    }
    row_reduce(cons);
    std::vector<BitVector> cons_rows;
    std::vector<bool> cons_rhs;
    bool infeasible = false;
    for (size_t r = 0; r < cons.rows(); r++) {
        BitVector row(l);
        bool any = false;
        for (size_t i = 0; i < l; i++) {
            if (cons.get(r, i)) {
                row.set(i, true);
                any = true;
            }
        }
        if (!any) {
            infeasible |= cons.get(r, l);
            continue;
        }
        cons_rows.push_back(row);
        cons_rhs.push_back(cons.get(r, l));
    }
    const int q0 = d_form(ctx.f, c0);
    BitVector dc0 = d_apply(ctx.f, c0);
    std::vector<int> lin(l);
    std::vector<BitVector> dg(l);
    for (size_t i = 0; i < l; i++) {
        dg[i] = d_apply(ctx.f, g[i]);
        lin[i] = (d_form(ctx.f, g[i]) + 2 * (dc0.dot(g[i]) ? 1 : 0)) & 3;
    }
    std::vector<BitVector> upper(l, BitVector(l));
    for (size_t i = 0; i < l; i++) {
        for (size_t j = i + 1; j < l; j++) {
            upper[i].set(j, g[i].dot(dg[j]));
        }
    }
    // Linear term of the VXorDelta mutation: parity of t1 . v.
    bool vpar0 = false;
    std::vector<bool> vlin(l, false);
    if (ctx.options.u_rule == URule::VXorDelta) {
        for (size_t p = 0; p < k; p++) {
            vpar0 ^= t.get(p, 0) & ctx.v.get(p);
        }
        for (size_t i = 0; i < l; i++) {
            uint32_t p = ctx.f.pos[F[i]];
            vlin[i] = p < k && ctx.v.get(p);
        }
    }
    std::vector<ExactAmplitude> out(xs.size());
    for (size_t qi = 0; qi < xs.size(); qi++) {
        if (infeasible) {
            continue;
        }
        BitVector xf(l);
        for (size_t i = 0; i < l; i++) {
            xf.set(i, xs[qi].get(F[i]));
        }
        bool ok = true;
        for (size_t r = 0; r < cons_rows.size() && ok; r++) {
            ok = cons_rows[r].dot(xf) == cons_rhs[r];
        }
        if (!ok) {
            continue;
        }
        int e = q0;
        size_t pairs = 0;
        bool vpar = vpar0;
        for (size_t i = 0; i < l; i++) {
            if (xf.get(i)) {
                e += lin[i];
                pairs += (upper[i] & xf).popcount();
                vpar ^= vlin[i];
            }
        }
        e += 2 * static_cast<int>(pairs & 1) + 2 * vpar;
        out[qi] = ctx.alpha * ExactAmplitude::clifford(-static_cast<int>(k), 2 * (e & 3));
    }
    return out;
}

BitVector seeded_bits(uint64_t seed, size_t index, size_t d) {
    BitVector s(d);
    const uint64_t key = rng_key(seed, index);
    for (size_t i = 0; i < s.word_count(); i++) {
        s.words()[i] = rng_word(key, i);
    }
    if (d % WORD_BITS) {
        s.words()[s.word_count() - 1] &= (word_t{1} << (d % WORD_BITS)) - 1;
    }
    return s;
}

namespace {

struct AffineSolution {
    BitVector particular;
    /// Kernel basis vectors, each of length `vars`.
    std::vector<BitVector> kernel;
};

/// All c with m c = rhs, as particular + span(kernel).
std::optional<AffineSolution> solve_affine(const BitMatrix &m, const BitVector &rhs) {
    const size_t rows = m.rows(), vars = m.cols();
    BitMatrix aug(rows, vars + 1);
    for (size_t r = 0; r < rows; r++) {
        for (size_t c = 0; c < vars; c++) {
            aug.set(r, c, m.get(r, c));
        }
        aug.set(r, vars, rhs.get(r));
    }
    std::vector<size_t> piv = row_reduce(aug);
    if (!piv.empty() && piv.back() == vars) {
        return std::nullopt;
    }
    AffineSolution sol;
    sol.particular = BitVector(vars);
    std::vector<bool> is_pivot(vars, false);
    for (size_t r = 0; r < piv.size(); r++) {
        is_pivot[piv[r]] = true;
        sol.particular.set(piv[r], aug.get(r, vars));
    }
    for (size_t fc = 0; fc < vars; fc++) {
        if (is_pivot[fc]) {
            continue;
        }
        BitVector kv(vars);
        kv.set(fc, true);
        for (size_t r = 0; r < piv.size(); r++) {
            if (aug.get(r, fc)) {
                kv.set(piv[r], true);
            }
        }
        sol.kernel.push_back(kv);
    }
    return sol;
}

void check_spec(const SampleSpec &spec, size_t n) {
    if (spec.y.size() != spec.S.size()) {
        throw ShapeError("sample spec: y must align with S");
    }
    std::vector<bool> seen(n, false);
    for (uint32_t s : spec.S) {
        if (s >= n || seen[s]) {
            throw ContractViolation("sample spec: S must list distinct indices below n");
        }
        seen[s] = true;
    }
}

}  // namespace

namespace {

/// Solutions c over the leading k coordinates whose samples agree with y on S.
std::optional<AffineSolution> solve_constraints(const SimContext &ctx, const std::vector<uint32_t> &S,
                                                const BitVector &y) {
    const size_t n = ctx.n, k = ctx.k, m = S.size();
    // Rows pos(S) of L~ restricted to the first k columns.
    BitMatrix e(n, m);
    for (size_t j = 0; j < m; j++) {
        e.set(ctx.f.pos[S[j]], j, true);
    }
    BitMatrix rows = implicit_apply(ctx.f, LdlOp::LT, e);
    BitMatrix mm(m, k);
    BitVector rhs(m);
    for (size_t j = 0; j < m; j++) {
        for (size_t c = 0; c < k; c++) {
            mm.set(j, c, rows.get(c, j));
        }
        rhs.set(j, y.get(j) ^ ctx.w.get(ctx.f.pos[S[j]]));
    }
    return solve_affine(mm, rhs);
}

/// L~ applied to [kernel | particular], in position order.
BitMatrix lift_solution(const SimContext &ctx, const AffineSolution &sol) {
    const size_t d = sol.kernel.size();
    BitMatrix kext(ctx.n, d + 1);
    for (size_t p = 0; p < ctx.k; p++) {
        for (size_t i = 0; i < d; i++) {
            kext.set(p, i, sol.kernel[i].get(p));
        }
        kext.set(p, d, sol.particular.get(p));
    }
    return implicit_apply(ctx.f, LdlOp::L, kext);
}

}  // namespace

std::optional<AffineSpace> support_space(const SimContext &ctx, const std::vector<uint32_t> &S, const BitVector &y) {
    check_spec(SampleSpec{S, y, 0, 0}, ctx.n);
    std::optional<AffineSolution> sol = solve_constraints(ctx, S, y);
    if (!sol) {
        return std::nullopt;
    }
    const size_t d = sol->kernel.size();
    BitMatrix lk = lift_solution(ctx, *sol);
    AffineSpace out{BitVector(ctx.n), BitMatrix(ctx.n, d)};
    for (size_t v = 0; v < ctx.n; v++) {
        const uint32_t p = ctx.f.pos[v];
        for (size_t i = 0; i < d; i++) {
            out.gens.set(v, i, lk.get(p, i));
        }
        out.offset.set(v, lk.get(p, d) ^ ctx.w.get(p));
    }
    return out;
}

std::optional<std::vector<BitVector>> weak_sample(const SimContext &ctx, const SampleSpec &spec,
                                                  SampleStrategy strategy) {
    const size_t n = ctx.n, k = ctx.k;
    check_spec(spec, n);
    const size_t m = spec.S.size();
    std::optional<AffineSolution> sol = solve_constraints(ctx, spec.S, spec.y);
    if (!sol) {
        return std::nullopt;
    }
    const size_t d = sol->kernel.size();
    if (strategy == SampleStrategy::Auto) {
        strategy = m > 0 ? SampleStrategy::Explicit : SampleStrategy::Direct;
    }
    std::vector<BitVector> out;
    out.reserve(spec.count);
    if (strategy == SampleStrategy::Direct) {
        // Kernel rows: krow[c] has bit i when kernel vector i has entry c.
        std::vector<BitVector> krow(k, BitVector(d));
        for (size_t i = 0; i < d; i++) {
            for (size_t c = 0; c < k; c++) {
                if (sol->kernel[i].get(c)) {
                    krow[c].set(i, true);
                }
            }
        }
        for (size_t base = 0; base < spec.count; base += WORD_BITS) {
            const size_t cnt = std::min(WORD_BITS, spec.count - base);
            const word_t all = cnt == WORD_BITS ? ~word_t{0} : (word_t{1} << cnt) - 1;
            std::vector<BitVector> s(cnt);
            std::vector<word_t> sw(d, 0);
            for (size_t j = 0; j < cnt; j++) {
                s[j] = seeded_bits(spec.seed, base + j, d);
                for (size_t i = 0; i < d; i++) {
                    sw[i] |= word_t{s[j].get(i)} << j;
                }
            }
            BitMatrix c(n, cnt);
            for (size_t p = 0; p < k; p++) {
                word_t acc = sol->particular.get(p) ? all : 0;
                for (size_t wi = 0; wi < krow[p].word_count(); wi++) {
                    for (word_t bits = krow[p].words()[wi]; bits; bits &= bits - 1) {
                        acc ^= sw[wi * WORD_BITS + std::countr_zero(bits)];
                    }
                }
                c.row(p)[0] = acc;
            }
            BitMatrix x = implicit_apply(ctx.f, LdlOp::L, c);
            for (size_t j = 0; j < cnt; j++) {
                BitVector sample(n);
                for (size_t p = 0; p < n; p++) {
                    sample.set(ctx.perm[p], ((x.row(p)[0] >> j) & 1) ^ ctx.w.get(p));
                }
                out.push_back(std::move(sample));
            }
        }
        return out;
    }
    // Explicit basis on the free coordinates.
    std::vector<bool> in_s(n, false);
    for (uint32_t s : spec.S) {
        in_s[s] = true;
    }
    std::vector<uint32_t> F;
    for (uint32_t i = 0; i < n; i++) {
        if (!in_s[i]) {
            F.push_back(i);
        }
    }
    BitMatrix lk = lift_solution(ctx, *sol);
    std::vector<BitVector> zx(F.size(), BitVector(d));
    std::vector<bool> xp(F.size());
    for (size_t fi = 0; fi < F.size(); fi++) {
        uint32_t p = ctx.f.pos[F[fi]];
        for (size_t i = 0; i < d; i++) {
            zx[fi].set(i, lk.get(p, i));
        }
        xp[fi] = lk.get(p, d) ^ ctx.w.get(p);
    }
    for (size_t j = 0; j < spec.count; j++) {
        BitVector s = seeded_bits(spec.seed, j, d);
        BitVector sample(n);
        for (size_t i = 0; i < m; i++) {
            sample.set(spec.S[i], spec.y.get(i));
        }
        for (size_t fi = 0; fi < F.size(); fi++) {
            sample.set(F[fi], zx[fi].dot(s) ^ xp[fi]);
        }
        out.push_back(std::move(sample));
    }
    return out;
}

std::optional<std::vector<BitVector>> sample_affine(const BitVector &offset, const BitMatrix &gens,
                                                    const SampleSpec &spec) {
    const size_t n = offset.size();
    if (gens.rows() != n) {
        throw ShapeError("sample_affine: generator rows must match the offset length");
    }
    check_spec(spec, n);
    const size_t m = spec.S.size();
    BitMatrix mm(m, gens.cols());
    BitVector rhs(m);
    for (size_t j = 0; j < m; j++) {
        std::copy(gens.row(spec.S[j]), gens.row(spec.S[j]) + gens.stride(), mm.row(j));
        rhs.set(j, spec.y.get(j) ^ offset.get(spec.S[j]));
    }
    std::optional<AffineSolution> sol = solve_affine(mm, rhs);
    if (!sol) {
        return std::nullopt;
    }
    const size_t d = sol->kernel.size();
    BitMatrix kmat(gens.cols(), d);
    for (size_t i = 0; i < d; i++) {
        kmat.set_col(i, sol->kernel[i]);
    }
    BitMatrix z = mul(gens, kmat);
    BitVector base = offset ^ mul(gens, sol->particular);
    std::vector<BitVector> out;
    for (size_t j = 0; j < spec.count; j++) {
        out.push_back(base ^ mul(z, seeded_bits(spec.seed, j, d)));
    }
    return out;
}

namespace {

struct GraphReduction {
    TrimResult trim;
    SimContext ctx;
};

GraphReduction reduce_graph(const Graph &g, const std::vector<Basis> &basis, const std::map<uint32_t, bool> &z) {
    GraphReduction r;
    r.trim = trim_z_vertices(g, z);
    for (size_t i = 0; i < r.trim.kept.size(); i++) {
        if (basis[r.trim.kept[i]] == Basis::Y) {
            r.trim.a.add_diag(i, 1);
        }
    }
    r.ctx = prepare(r.trim.a);
    return r;
}

void check_basis(const Graph &g, const std::vector<Basis> &basis) {
    if (basis.size() != g.size()) {
        throw ShapeError("graph state basis must name every vertex");
    }
}

}  // namespace

std::vector<ExactAmplitude> graph_state_strong(const Graph &g, const std::vector<Basis> &basis,
                                               const std::vector<BitVector> &xs) {
    check_basis(g, basis);
    const size_t n = g.size();
    std::map<std::string, std::vector<size_t>> groups;
    for (size_t i = 0; i < xs.size(); i++) {
        if (xs[i].size() != n) {
            throw ShapeError("graph_state_strong: query length mismatch");
        }
        std::string key;
        for (uint32_t v = 0; v < n; v++) {
            if (basis[v] == Basis::Z) {
                key.push_back(xs[i].get(v) ? '1' : '0');
            }
        }
        groups[key].push_back(i);
    }
    std::vector<ExactAmplitude> out(xs.size());
    for (const auto &[key, idx] : groups) {
        std::map<uint32_t, bool> z;
        for (uint32_t v = 0; v < n; v++) {
            if (basis[v] == Basis::Z) {
                z[v] = xs[idx[0]].get(v);
            }
        }
        GraphReduction r = reduce_graph(g, basis, z);
        std::vector<BitVector> local;
        for (size_t i : idx) {
            BitVector xr(r.trim.kept.size());
            for (size_t j = 0; j < r.trim.kept.size(); j++) {
                xr.set(j, xs[i].get(r.trim.kept[j]));
            }
            local.push_back(xr);
        }
        std::vector<ExactAmplitude> amps = strong_eval(r.ctx, local);
        ExactAmplitude factor = r.trim.phase * r.trim.scale;
        for (size_t j = 0; j < idx.size(); j++) {
            out[idx[j]] = factor * amps[j];
        }
    }
    return out;
}

std::optional<std::vector<BitVector>> graph_state_weak(const Graph &g, const std::vector<Basis> &basis,
                                                       const SampleSpec &spec) {
    check_basis(g, basis);
    const size_t n = g.size();
    std::map<uint32_t, bool> z;
    std::vector<uint32_t> zs;
    for (uint32_t v = 0; v < n; v++) {
        if (basis[v] == Basis::Z) {
            z[v] = false;
            zs.push_back(v);
        }
    }
    GraphReduction r = reduce_graph(g, basis, z);
    const SimContext &ctx = r.ctx;
    const auto &kept = r.trim.kept;
    const size_t nr = kept.size(), k = ctx.k;
    // Offset: w in original coordinates. Generators: one per Z vertex (its bit plus the flip of
    // w on its kept neighbours), then the first k columns of P L~.
    BitVector offset(n);
    for (size_t p = 0; p < nr; p++) {
        offset.set(kept[ctx.perm[p]], ctx.w.get(p));
    }
    BitMatrix gens(n, zs.size() + k);
    for (size_t i = 0; i < zs.size(); i++) {
        gens.set(zs[i], i, true);
        for (uint32_t u : g.neighbors(zs[i])) {
            if (basis[u] != Basis::Z) {
                gens.flip(u, i);
            }
        }
    }
    BitMatrix e(nr, k);
    for (size_t c = 0; c < k; c++) {
        e.set(c, c, true);
    }
    BitMatrix lcols = implicit_apply(ctx.f, LdlOp::L, e);
    for (size_t p = 0; p < nr; p++) {
        for (size_t c = 0; c < k; c++) {
            if (lcols.get(p, c)) {
                gens.set(kept[ctx.perm[p]], zs.size() + c, true);
            }
        }
    }
    return sample_affine(offset, gens, spec);
}

std::string render(const ExactAmplitude &a, Rendering r) {
    if (r == Rendering::Exact) {
        return a.str();
    }
    auto c = a.to_complex();
    char buf[80];
    std::snprintf(buf, sizeof(buf), "%.17g %.17g", c.real(), c.imag());
    return buf;
}

}  // namespace ldlsim
