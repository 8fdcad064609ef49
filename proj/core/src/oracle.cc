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

#include "ldlsim/oracle.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <deque>

namespace ldlsim {

namespace {

const cplx I1{0, 1};
const double R2 = 1 / std::sqrt(2.0);

}  // namespace

Mat2 gate_matrix(GateKind k) {
    const cplx w = std::polar(1.0, M_PI / 4);
    switch (k) {
        case GateKind::H:
            return {R2, R2, R2, -R2};
        case GateKind::S:
            return {1, 0, 0, I1};
        case GateKind::SDG:
            return {1, 0, 0, -I1};
        case GateKind::Z:
            return {1, 0, 0, -1};
        case GateKind::X:
            return {0, 1, 1, 0};
        case GateKind::T:
            return {1, 0, 0, w};
        case GateKind::TDG:
            return {1, 0, 0, std::conj(w)};
        case GateKind::CZ:
            break;
    }
    throw ContractViolation("gate_matrix: CZ is a two-qubit gate");
}

DenseState DenseState::zero(size_t n) {
    if (n > MAX_DENSE_QUBITS) {
        throw std::invalid_argument("dense oracle refuses " + std::to_string(n) + " qubits");
    }
    DenseState s;
    s.n = n;
    s.amps.assign(size_t{1} << n, 0);
    s.amps[0] = 1;
    return s;
}

DenseState DenseState::plus(size_t n) {
    DenseState s = zero(n);
    double a = std::pow(2.0, -0.5 * n);
    std::fill(s.amps.begin(), s.amps.end(), cplx(a));
    return s;
}

DenseState DenseState::graph_state(const Graph &g) {
    DenseState s = plus(g.size());
    for (auto [u, v] : g.edges()) {
        s.apply_cz(u, v);
    }
    return s;
}

void DenseState::apply(const Mat2 &m, uint32_t q) {
    const size_t bit = size_t{1} << q;
    for (size_t i = 0; i < amps.size(); i++) {
        if (i & bit) {
            continue;
        }
        cplx a0 = amps[i], a1 = amps[i | bit];
        amps[i] = m[0] * a0 + m[1] * a1;
        amps[i | bit] = m[2] * a0 + m[3] * a1;
    }
}

void DenseState::apply_cz(uint32_t a, uint32_t b) {
    const size_t mask = (size_t{1} << a) | (size_t{1} << b);
    for (size_t i = 0; i < amps.size(); i++) {
        if ((i & mask) == mask) {
            amps[i] = -amps[i];
        }
    }
}

void DenseState::apply(const Gate &g) {
    if (g.kind == GateKind::CZ) {
        apply_cz(g.a, g.b);
    } else {
        apply(gate_matrix(g.kind), g.a);
    }
}

cplx DenseState::amplitude(const BitVector &x) const {
    size_t idx = 0;
    for (size_t q = 0; q < n; q++) {
        idx |= size_t{x.get(q)} << q;
    }
    return amps[idx];
}

double DenseState::norm2() const {
    double s = 0;
    for (auto a : amps) {
        s += std::norm(a);
    }
    return s;
}

double DenseState::distance(const DenseState &o) const {
    double d = 0;
    for (size_t i = 0; i < amps.size(); i++) {
        d = std::max(d, std::abs(amps[i] - o.amps[i]));
    }
    return d;
}

double DenseState::distance_up_to_phase(const DenseState &o) const {
    size_t ref = 0;
    for (size_t i = 0; i < amps.size(); i++) {
        if (std::abs(amps[i]) > std::abs(amps[ref]) + 1e-12) {
            ref = i;
        }
    }
    if (std::abs(o.amps[ref]) < 1e-12) {
        return std::abs(amps[ref]);
    }
    cplx phase = amps[ref] / o.amps[ref];
    phase /= std::abs(phase);
    double d = 0;
    for (size_t i = 0; i < amps.size(); i++) {
        d = std::max(d, std::abs(amps[i] - phase * o.amps[i]));
    }
    return d;
}

DenseState statevector(const CliffordCircuit &c) {
    DenseState s = DenseState::zero(c.num_qubits);
    for (const auto &g : c.gates) {
        s.apply(g);
    }
    return s;
}

ExactAmplitude pgs_brute_amplitude(const PhasedAdjacency &a, const BitVector &x) {
    const size_t n = a.size();
    if (n > 20) {
        throw std::invalid_argument("pgs_brute_amplitude refuses n > 20");
    }
    if (x.size() != n) {
        throw ShapeError("pgs_brute_amplitude: length mismatch");
    }
    int64_t cnt[4] = {0, 0, 0, 0};
    for (uint64_t yi = 0; yi < (uint64_t{1} << n); yi++) {
        BitVector y = BitVector::from_index(n, yi);
        int e = 3 * a.quadratic_form(y) + 2 * (x.dot(y) ? 1 : 0);
        cnt[e & 3]++;
    }
    return ExactAmplitude({cnt[0] - cnt[2], 0, cnt[1] - cnt[3], 0}, static_cast<int>(n));
}

std::vector<ExactAmplitude> pgs_brute_all(const PhasedAdjacency &a) {
    const size_t n = a.size();
    if (n > 20) {
        throw std::invalid_argument("pgs_brute_all refuses n > 20");
    }
    const size_t N = size_t{1} << n;
    std::vector<uint64_t> adj(n, 0);
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < n; j++) {
            if (a.edge(i, j)) {
                adj[i] |= uint64_t{1} << j;
            }
        }
    }
    std::vector<uint8_t> q(N, 0);
    for (size_t y = 1; y < N; y++) {
        size_t t = std::bit_width(y) - 1;
        size_t rest = y & ~(size_t{1} << t);
        q[y] = (q[rest] + a.diag(t) + 2 * std::popcount(adj[t] & rest)) & 3;
    }
    std::array<std::vector<int64_t>, 4> f;
    for (auto &v : f) {
        v.assign(N, 0);
    }
    for (size_t y = 0; y < N; y++) {
        f[(3 * q[y]) & 3][y] = 1;
    }
    for (auto &v : f) {
        for (size_t h = 1; h < N; h <<= 1) {
            for (size_t i = 0; i < N; i += 2 * h) {
                for (size_t j = i; j < i + h; j++) {
                    int64_t u = v[j], w = v[j + h];
                    v[j] = u + w;
                    v[j + h] = u - w;
                }
            }
        }
    }
    std::vector<ExactAmplitude> out(N);
    for (size_t x = 0; x < N; x++) {
        out[x] = ExactAmplitude({f[0][x] - f[2][x], 0, f[1][x] - f[3][x], 0}, static_cast<int>(n));
    }
    return out;
}

Tableau Tableau::zero_state(size_t n) {
    Tableau t;
    t.n = n;
    t.z = BitMatrix::identity(n);
    t.x = BitMatrix(n, n);
    t.r = BitVector(n);
    return t;
}

bool Tableau::is_valid() const {
    for (size_t i = 0; i < n; i++) {
        for (size_t j = i + 1; j < n; j++) {
            bool s = z.row_vector(i).dot(x.row_vector(j)) ^ x.row_vector(i).dot(z.row_vector(j));
            if (s) {
                return false;
            }
        }
    }
    BitMatrix zx(n, 2 * n);
    for (size_t i = 0; i < n; i++) {
        for (size_t k = 0; k < n; k++) {
            zx.set(i, k, z.get(i, k));
            zx.set(i, n + k, x.get(i, k));
        }
    }
    return rank(zx) == n;
}

void tableau_row_add(Tableau &t, size_t i, size_t j, ModResidue res) {
    auto g = [](int zz, int xx) { return xx + 3 * zz - 2 * zz * xx; };
    auto f = [res](int p1, int p2) {
        if (p1 == 0 || p2 == 0) {
            return 0;
        }
        int d = ((p2 - p1) % 3 + 3) % 3;
        if (res == ModResidue::Balanced && d == 2) {
            d = -1;
        }
        return d;
    };
    int sum = 0;
    for (size_t k = 0; k < t.n; k++) {
        sum += f(g(t.z.get(i, k), t.x.get(i, k)), g(t.z.get(j, k), t.x.get(j, k)));
    }
    int fl = sum >= 0 ? sum / 2 : -((-sum + 1) / 2);
    t.r.set(i, ((t.r.get(i) + t.r.get(j) + fl) % 2 + 2) % 2);
    t.z.xor_row_into(j, i);
    t.x.xor_row_into(j, i);
}

void tableau_apply_h(Tableau &t, size_t q) {
    for (size_t j = 0; j < t.n; j++) {
        bool zz = t.z.get(j, q), xx = t.x.get(j, q);
        t.z.set(j, q, xx);
        t.x.set(j, q, zz);
        if (zz && xx) {
            t.r.flip(j);
        }
    }
}

void tableau_apply_s(Tableau &t, size_t q) {
    for (size_t j = 0; j < t.n; j++) {
        bool zz = t.z.get(j, q), xx = t.x.get(j, q);
        if (zz && xx) {
            t.r.flip(j);
        }
        t.z.set(j, q, zz ^ xx);
    }
}

void tableau_apply_cz(Tableau &t, size_t a, size_t b) {
    for (size_t j = 0; j < t.n; j++) {
        bool xa = t.x.get(j, a), xb = t.x.get(j, b);
        bool za = t.z.get(j, a), zb = t.z.get(j, b);
        if (xa && xb && (za ^ zb)) {
            t.r.flip(j);
        }
        t.z.set(j, a, za ^ xb);
        t.z.set(j, b, zb ^ xa);
    }
}

Tableau tableau_run(const CliffordCircuit &c) {
    Tableau t = Tableau::zero_state(c.num_qubits);
    for (const auto &g : c.gates) {
        switch (g.kind) {
            case GateKind::H:
                tableau_apply_h(t, g.a);
                break;
            case GateKind::S:
                tableau_apply_s(t, g.a);
                break;
            case GateKind::Z:
                tableau_apply_s(t, g.a);
                tableau_apply_s(t, g.a);
                break;
            case GateKind::SDG:
                tableau_apply_s(t, g.a);
                tableau_apply_s(t, g.a);
                tableau_apply_s(t, g.a);
                break;
            case GateKind::X:
                tableau_apply_h(t, g.a);
                tableau_apply_s(t, g.a);
                tableau_apply_s(t, g.a);
                tableau_apply_h(t, g.a);
                break;
            case GateKind::CZ:
                tableau_apply_cz(t, g.a, g.b);
                break;
            case GateKind::T:
            case GateKind::TDG:
                throw UnsupportedGate("tableau_run: T gates are not Clifford");
        }
    }
    return t;
}

double stabilizer_residual(const Tableau &t, const DenseState &psi) {
    const Mat2 X{0, 1, 1, 0}, Y{0, -I1, I1, 0}, Z{1, 0, 0, -1};
    double worst = 0;
    for (size_t j = 0; j < t.n; j++) {
        DenseState p = psi;
        for (size_t k = 0; k < t.n; k++) {
            bool zz = t.z.get(j, k), xx = t.x.get(j, k);
            if (zz && xx) {
                p.apply(Y, k);
            } else if (zz) {
                p.apply(Z, k);
            } else if (xx) {
                p.apply(X, k);
            }
        }
        if (t.r.get(j)) {
            for (auto &a : p.amps) {
                a = -a;
            }
        }
        worst = std::max(worst, p.distance(psi));
    }
    return worst;
}

GraphForm stabilizers_to_graph(const Tableau &t0, ModResidue res) {
    if (!t0.is_valid()) {
        throw ContractViolation("stabilizers_to_graph: rows are not n independent commuting Paulis");
    }
    Tableau t = t0;
    const size_t n = t.n;
    BitVector a(n);
    std::vector<uint8_t> b(n, 0);
    std::vector<uint32_t> p(n);
    for (uint32_t i = 0; i < n; i++) {
        p[i] = i;
    }
    auto column_swap = [&](size_t i, size_t j) {
        if (i == j) {
            return;
        }
        bool ai = a.get(i);
        a.set(i, a.get(j));
        a.set(j, ai);
        std::swap(b[i], b[j]);
        std::swap(p[i], p[j]);
        for (size_t r = 0; r < n; r++) {
            bool zi = t.z.get(r, i), xi = t.x.get(r, i);
            t.z.set(r, i, t.z.get(r, j));
            t.x.set(r, i, t.x.get(r, j));
            t.z.set(r, j, zi);
            t.x.set(r, j, xi);
        }
    };
    for (size_t i = 0; i < n; i++) {
        size_t k = i;
        while (k < n && !t.x.get(i, k)) {
            k++;
        }
        if (k == n) {
            k = i;
            while (k < n && !t.z.get(i, k)) {
                k++;
            }
            if (k == n) {
                throw ContractViolation("stabilizers_to_graph: dependent rows");
            }
            tableau_apply_h(t, k);
            a.flip(k);
        }
        column_swap(i, k);
        for (size_t j = i + 1; j < n; j++) {
            if (t.x.get(j, i)) {
                tableau_row_add(t, j, i, res);
            }
        }
    }
    for (size_t i = n; i-- > 0;) {
        for (size_t j = 0; j < i; j++) {
            if (t.x.get(j, i)) {
                tableau_row_add(t, j, i, res);
            }
        }
    }
    for (size_t i = 0; i < n; i++) {
        if (t.z.get(i, i)) {
            tableau_apply_s(t, i);
            b[i] += 1;
        }
    }
    GraphForm out;
    out.g = Graph(n);
    out.a = BitVector(n);
    out.b.assign(n, 0);
    out.c = BitVector(n);
    for (size_t i = 0; i < n; i++) {
        uint32_t q = p[i];
        out.a.set(q, a.get(i));
        bool sign = t.r.get(i);
        // Z^r on the graph state: becomes X after an H, otherwise merges into S^dag^2.
        if (a.get(i)) {
            out.c.set(q, sign);
            out.b[q] = b[i];
        } else {
            out.b[q] = (b[i] + 2 * sign) & 3;
        }
        for (size_t j = i + 1; j < n; j++) {
            if (t.z.get(i, j)) {
                out.g.add_edge(q, p[j]);
            }
        }
    }
    return out;
}

DenseState graph_form_state(const GraphForm &f) {
    DenseState s = DenseState::graph_state(f.g);
    const Mat2 sdg = gate_matrix(GateKind::SDG), h = gate_matrix(GateKind::H), x = gate_matrix(GateKind::X);
    for (uint32_t q = 0; q < f.g.size(); q++) {
        for (int k = 0; k < f.b[q]; k++) {
            s.apply(sdg, q);
        }
        if (f.a.get(q)) {
            s.apply(h, q);
        }
        if (f.c.get(q)) {
            s.apply(x, q);
        }
    }
    return s;
}

Mat2 mat_mul(const Mat2 &a, const Mat2 &b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
            a[2] * b[1] + a[3] * b[3]};
}

bool equal_up_to_phase(const Mat2 &a, const Mat2 &b) {
    size_t ref = 0;
    for (size_t i = 0; i < 4; i++) {
        if (std::abs(a[i]) > std::abs(a[ref]) + 1e-12) {
            ref = i;
        }
    }
    if (std::abs(b[ref]) < 1e-9) {
        return false;
    }
    cplx ph = a[ref] / b[ref];
    if (std::abs(std::abs(ph) - 1) > 1e-9) {
        return false;
    }
    for (size_t i = 0; i < 4; i++) {
        if (std::abs(a[i] - ph * b[i]) > 1e-9) {
            return false;
        }
    }
    return true;
}

Mat2 z_check() {
    return {1, 0, 0, -I1};
}

Mat2 x_check() {
    Mat2 h = gate_matrix(GateKind::H);
    return mat_mul(mat_mul(h, z_check()), h);
}

namespace {

Mat2 canonical(Mat2 m) {
    for (size_t i = 0; i < 4; i++) {
        if (std::abs(m[i]) > 1e-9) {
            cplx ph = std::conj(m[i]) / std::abs(m[i]);
            for (auto &e : m) {
                e *= ph;
            }
            break;
        }
    }
    return m;
}

}  // namespace

const std::vector<Mat2> &OneQubitClifford::table() {
    static const std::vector<Mat2> t = [] {
        std::vector<Mat2> out{canonical({1, 0, 0, 1})};
        const Mat2 gens[2] = {z_check(), x_check()};
        for (size_t i = 0; i < out.size(); i++) {
            for (const auto &g : gens) {
                Mat2 m = canonical(mat_mul(out[i], g));
                bool seen = std::any_of(out.begin(), out.end(), [&](const Mat2 &o) { return equal_up_to_phase(o, m); });
                if (!seen) {
                    out.push_back(m);
                }
            }
        }
        return out;
    }();
    return t;
}

OneQubitClifford OneQubitClifford::from_matrix(const Mat2 &m) {
    const auto &t = table();
    for (size_t i = 0; i < t.size(); i++) {
        if (equal_up_to_phase(t[i], m)) {
            return OneQubitClifford{static_cast<uint8_t>(i)};
        }
    }
    throw ContractViolation("matrix is not a one-qubit Clifford");
}

OneQubitClifford OneQubitClifford::operator*(const OneQubitClifford &o) const {
    return from_matrix(mat_mul(matrix(), o.matrix()));
}

std::array<int, 3> euler_decompose(const OneQubitClifford &u) {
    const Mat2 id{1, 0, 0, 1};
    Mat2 zp[4], xp[4];
    zp[0] = xp[0] = id;
    for (int k = 1; k < 4; k++) {
        zp[k] = mat_mul(zp[k - 1], z_check());
        xp[k] = mat_mul(xp[k - 1], x_check());
    }
    for (int c = 0; c < 4; c++) {
        for (int b = 0; b < 4; b++) {
            for (int a = 0; a < 4; a++) {
                if (equal_up_to_phase(mat_mul(mat_mul(zp[a], xp[b]), zp[c]), u.matrix())) {
                    return {a, b, c};
                }
            }
        }
    }
    throw ContractViolation("euler_decompose: no decomposition found");
}

std::vector<cplx> zx_tensor(const ZxDiagram &d) {
    const size_t ns = d.spiders.size(), no = d.open.size();
    if (ns + no > 24) {
        throw std::invalid_argument("zx_tensor: diagram too large for dense contraction");
    }
    const double r = 1 / std::sqrt(2.0);
    const Mat2 id{1, 0, 0, 1};
    const Mat2 h{r, r, r, -r};
    auto basis = [&](uint32_t s) {
        return d.spiders[s].kind == SpiderKind::Z ? id : h;
    };
    auto entry = [](const Mat2 &m, int i, int j) {
        return m[2 * i + j];
    };
    std::vector<Mat2> edge_m;
    for (const auto &e : d.edges) {
        Mat2 mid = e.hadamard ? h : id;
        edge_m.push_back(mat_mul(mat_mul(basis(e.u), mid), basis(e.v)));
    }
    std::vector<Mat2> open_m;
    for (const auto &o : d.open) {
        open_m.push_back(mat_mul(o.hadamard ? h : id, basis(o.spider)));
    }
    std::vector<cplx> phase(8);
    for (int k = 0; k < 8; k++) {
        phase[k] = std::polar(1.0, k * M_PI / 4);
    }
    std::vector<cplx> out(size_t{1} << no);
    for (uint64_t y = 0; y < (uint64_t{1} << ns); y++) {
        cplx w = 1;
        for (size_t s = 0; s < ns; s++) {
            if ((y >> s) & 1) {
                w *= phase[d.spiders[s].phase8];
            }
        }
        for (size_t i = 0; i < d.edges.size(); i++) {
            w *= entry(edge_m[i], (y >> d.edges[i].u) & 1, (y >> d.edges[i].v) & 1);
        }
        if (w == cplx(0)) {
            continue;
        }
        for (uint64_t x = 0; x < out.size(); x++) {
            cplx v = w;
            for (size_t i = 0; i < no; i++) {
                v *= entry(open_m[i], (x >> i) & 1, (y >> d.open[i].spider) & 1);
            }
            out[x] += v;
        }
    }
    const cplx s = d.scalar.to_complex();
    for (auto &v : out) {
        v *= s;
    }
    return out;
}

}  // namespace ldlsim
