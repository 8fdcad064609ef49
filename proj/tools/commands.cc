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

#include "commands.h"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "ldlsim/acceptance.h"
#include "ldlsim/analysis.h"
#include "ldlsim/bench.h"
#include "ldlsim/generators.h"
#include "ldlsim/ldl.h"
#include "ldlsim/rng.h"
#include "ldlsim/sim.h"
#include "ldlsim/treedec.h"
#include "ldlsim/zx.h"

namespace ldlsim::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_input(const std::string &path) {
    if (path == "-") {
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    }
    std::ifstream in(path);
    if (!in) {
        throw UsageError("cannot open " + path);
    }
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string bits_str(const BitVector &x) {
    std::string s(x.size(), '0');
    for (size_t i = 0; i < x.size(); i++) {
        s[i] = x.get(i) ? '1' : '0';
    }
    return s;
}

/// Character i of each bitstring is qubit i.
std::vector<BitVector> read_queries(const std::vector<std::string> &inline_xs, const std::string &path, size_t n) {
    std::vector<std::string> words = inline_xs;
    if (!path.empty()) {
        std::istringstream in(read_input(path));
        std::string w;
        while (in >> w) {
            if (w[0] == '#') {
                std::getline(in, w);
                continue;
            }
            words.push_back(w);
        }
    }
    std::vector<BitVector> xs;
    if (words.empty()) {
        if (n > 20) {
            throw UsageError("more than 20 qubits: pass bitstrings with --x or --xs");
        }
        for (uint64_t x = 0; x < (uint64_t{1} << n); x++) {
            xs.push_back(BitVector::from_index(n, x));
        }
        return xs;
    }
    for (const auto &w : words) {
        if (w.size() != n || w.find_first_not_of("01") != std::string::npos) {
            throw UsageError("bad bitstring '" + w + "' for " + std::to_string(n) + " qubits");
        }
        xs.push_back(BitVector::from_string(w));
    }
    return xs;
}

Rendering parse_rendering(const std::string &r) {
    return r == "float" ? Rendering::Float : Rendering::Exact;
}

SampleStrategy parse_strategy(const std::string &s) {
    if (s == "direct") {
        return SampleStrategy::Direct;
    }
    if (s == "explicit") {
        return SampleStrategy::Explicit;
    }
    return SampleStrategy::Auto;
}

Heuristic parse_heuristic(const std::string &h) {
    return h == "min-fill" ? Heuristic::MinFill : Heuristic::MinDegree;
}

CliffordCircuit load_circuit(const RunConfig &cfg) {
    if (cfg.inputs.empty()) {
        throw UsageError("missing circuit file");
    }
    return parse_circuit(read_input(cfg.inputs[0]), cfg.min_qubits);
}

int cmd_strong(const RunConfig &cfg, const std::vector<std::string> &xs_inline, const std::string &xs_path,
               bool no_t, std::ostream &out) {
    CliffordCircuit c = load_circuit(cfg);
    if (no_t && !c.is_clifford()) {
        throw UnsupportedGate("circuit contains T/TDG gates and --no-t was given");
    }
    std::vector<BitVector> xs = read_queries(xs_inline, xs_path, c.num_qubits);
    std::vector<ExactAmplitude> amps;
    if (c.is_clifford()) {
        amps = circuit_strong(c, xs);
    } else {
        CliffordTOptions opt;
        opt.t_cap = cfg.t_cap;
        amps = clifford_t_strong(c, xs, opt);
    }
    const Rendering r = parse_rendering(cfg.render);
    for (size_t i = 0; i < xs.size(); i++) {
        out << bits_str(xs[i]) << " " << render(amps[i], r) << "\n";
    }
    return 0;
}

int cmd_sample(const RunConfig &cfg, std::ostream &out) {
    CliffordCircuit c = load_circuit(cfg);
    if (!c.is_clifford()) {
        throw UnsupportedGate("sample: circuit contains T/TDG gates");
    }
    CircuitSampler sampler(c, parse_strategy(cfg.strategy));
    for (const auto &x : sampler.sample(cfg.count, derive_seed(cfg.seed, "sample"))) {
        out << bits_str(x) << "\n";
    }
    return 0;
}

int cmd_reduce(const RunConfig &cfg, const std::string &td_out, std::ostream &out) {
    CliffordCircuit c = load_circuit(cfg);
    PgsInstance inst = reduce_to_pgs(c);
    out << "# scalar " << render(inst.scalar, parse_rendering(cfg.render)) << "\n";
    out << "# fixed";
    for (uint32_t v : inst.fixed) {
        out << " " << v;
    }
    out << "\n# outputs";
    for (uint32_t v : inst.output_map) {
        out << " " << v;
    }
    out << "\n" << format_pgs(inst.a);
    if (!td_out.empty() && inst.td) {
        std::ofstream f(td_out);
        f << format_td(*inst.td, inst.a.size());
    }
    return 0;
}

PhasedAdjacency load_matrix(const std::string &pgs, const std::string &graph) {
    if (!pgs.empty()) {
        return parse_pgs(read_input(pgs));
    }
    if (!graph.empty()) {
        return PhasedAdjacency::from_graph(parse_edge_list(read_input(graph)));
    }
    throw UsageError("pass --pgs or --graph");
}

int cmd_ldl(const std::string &pgs, const std::string &graph, const std::string &td_path, bool tree,
            const std::string &heuristic, std::ostream &out) {
    PhasedAdjacency a = load_matrix(pgs, graph);
    ImplicitLdl f;
    if (!td_path.empty()) {
        f = ldl_tree(a, parse_td(read_input(td_path)));
    } else if (tree) {
        f = ldl_tree(a, heuristic_decompose(a.graph(), parse_heuristic(heuristic)));
    } else {
        f = factor_dense(a);
    }
    out << "n " << f.n << "\nrank " << f.rank << "\none_by_one " << f.one_by_one << "\nnnz " << f.nnz() << "\n";
    out << "width " << f.tree.width() << "\nperm";
    for (uint32_t p : f.perm) {
        out << " " << p;
    }
    out << "\n";
    for (const auto &b : f.blocks) {
        out << "block " << (b.kind == BlockKind::One ? "1" : b.kind == BlockKind::AntiDiag2 ? "2" : "0") << " "
            << b.pos << "\n";
    }
    out << "v " << bits_str(f.v) << "\nw " << bits_str(f.w) << "\n";
    return 0;
}

int cmd_treedec(const std::string &graph, const std::string &heuristic, int tau, const std::string &validate_path,
                std::ostream &out) {
    Graph g = parse_edge_list(read_input(graph));
    if (!validate_path.empty()) {
        out << "width " << validate(parse_td(read_input(validate_path)), g) << "\n";
        return 0;
    }
    TreeDecomposition td = heuristic_decompose(g, parse_heuristic(heuristic));
    if (tau > 0) {
        td = binarize_and_root(td, tau);
    }
    validate(td, g);
    out << format_td(td, g.size());
    return 0;
}

int cmd_lc(const std::string &a_path, const std::string &b_path, bool orbit, std::ostream &out) {
    Graph a = parse_edge_list(read_input(a_path));
    if (orbit || b_path.empty()) {
        out << "orbit_size " << lc_orbit(a).members.size() << "\n";
        if (a.size() <= MAX_DIAMETER_VERTICES) {
            out << "diameter " << orbit_diameter(a) << "\n";
        }
        if (b_path.empty()) {
            return 0;
        }
    }
    Graph b = parse_edge_list(read_input(b_path));
    LcDecision d = lc_equivalent(a, b);
    out << (d.equivalent ? "equivalent" : "not equivalent") << "\n";
    if (d.witness) {
        const LcWitness &w = *d.witness;
        out << "pi_a";
        for (uint32_t p : w.pi_a) {
            out << " " << p;
        }
        out << "\npi_b";
        for (uint32_t p : w.pi_b) {
            out << " " << p;
        }
        out << "\nu " << bits_str(w.u) << "\nv " << bits_str(w.v) << "\nk " << w.k << "\n";
    }
    return 0;
}

int cmd_learn(const RunConfig &cfg, size_t n, double p, double delta, size_t trials, std::ostream &out) {
    std::mt19937_64 rng(derive_seed(cfg.seed, "learn-demo"));
    size_t failures = 0;
    out << "trial\tn\tedges\trank\tmeasurements\tsuccess\n";
    for (size_t t = 0; t < trials; t++) {
        Graph g = random_graph(rng, n, p);
        LearnResult r = learn_graph_state(g, delta, rng());
        failures += !r.success;
        out << t << "\t" << n << "\t" << g.edge_count() << "\t" << r.rank << "\t" << r.measurements << "\t"
            << (r.success ? 1 : 0) << "\n";
    }
    out << "# failures " << failures << "/" << trials << "\n";
    return 0;
}

int cmd_selftest(const RunConfig &cfg, bool quick, bool inject_alpha, const std::vector<int> &only, std::ostream &out) {
    AcceptanceOptions opt;
    opt.quick = quick;
    opt.seed = cfg.seed;
    if (inject_alpha) {
        opt.sim.alpha_rule = AlphaRule::SumV;
    }
    for (int id : only) {
        if (id < 1 || id > NUM_CRITERIA) {
            throw UsageError("unknown criterion " + std::to_string(id));
        }
    }
    std::vector<int> ids = only;
    if (ids.empty()) {
        for (int i = 1; i <= NUM_CRITERIA; i++) {
            ids.push_back(i);
        }
    }
    size_t passed = 0;
    for (int id : ids) {
        CriterionResult r = run_criterion(id, opt);
        passed += r.passed;
        out << format_result(r) << std::endl;
    }
    out << passed << "/" << ids.size() << " suites passed\n";
    return passed == ids.size() ? 0 : 1;
}

int cmd_bench(const RunConfig &cfg, BenchConfig bc, bool scaling, std::ostream &out) {
    bc.seed = derive_seed(cfg.seed, "bench");
    if (scaling) {
        ScalingReport rep = measure_scaling(bc.qubits.at(0), bc.gates.at(0), bc.samples.at(0), bc.seed, bc.reps);
        out << format_bench(rep.rows);
        out << "# prepare_ratio " << rep.prepare_ratio << "\n# sample_marginal_ratio " << rep.sample_ratio << "\n";
        return 0;
    }
    out << format_bench(run_bench(bc));
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"ldlsim: stabilizer simulation through F2 LDL factorization", "ldlsim"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_common = [&](CLI::App *sub) { sub->add_option("--seed", cfg.seed, "Seed for every random stream")->capture_default_str(); };

    std::vector<std::string> xs_inline;
    std::string xs_path;
    bool no_t = false;
    auto *strong = app.add_subcommand("strong", "Exact amplitudes <x|U|0^n>");
    strong->add_option("circuit", cfg.inputs, "Circuit file, - for stdin")->required();
    strong->add_option("--x", xs_inline, "Bitstring query; character i is qubit i");
    strong->add_option("--xs", xs_path, "File of bitstring queries (default: all 2^n)");
    strong->add_option("--render", cfg.render, "exact or float")->check(CLI::IsMember({"exact", "float"}))->capture_default_str();
    strong->add_option("--t-cap", cfg.t_cap, "Largest T count accepted")->capture_default_str();
    strong->add_flag("--no-t", no_t, "Refuse circuits with T gates");
    strong->add_option("--qubits", cfg.min_qubits, "Minimum qubit count");
    add_common(strong);

    auto *sample = app.add_subcommand("sample", "Seeded measurement samples of U|0^n>");
    sample->add_option("circuit", cfg.inputs, "Circuit file, - for stdin")->required();
    sample->add_option("-k,--count", cfg.count, "Number of samples")->required();
    sample->add_option("--strategy", cfg.strategy, "direct, explicit or auto")
        ->check(CLI::IsMember({"direct", "explicit", "auto"}))
        ->capture_default_str();
    sample->add_option("--qubits", cfg.min_qubits, "Minimum qubit count");
    add_common(sample);

    std::string td_out;
    auto *reduce = app.add_subcommand("reduce", "Reduce a Clifford circuit to a phased graph state instance");
    reduce->add_option("circuit", cfg.inputs, "Circuit file, - for stdin")->required();
    reduce->add_option("--td-out", td_out, "Write the carried tree decomposition (PACE .td)");
    reduce->add_option("--render", cfg.render, "exact or float")->check(CLI::IsMember({"exact", "float"}))->capture_default_str();

    std::string pgs_path, graph_path, td_path, heuristic = "min-degree";
    bool tree = false;
    auto *ldl = app.add_subcommand("ldl", "F2 LDL factorization of a phased adjacency matrix");
    ldl->add_option("--pgs", pgs_path, "pgs text file");
    ldl->add_option("--graph", graph_path, "Edge-list graph file");
    ldl->add_option("--td", td_path, "PACE .td decomposition for the tree path");
    ldl->add_flag("--tree", tree, "Use a heuristic decomposition and the tree path");
    ldl->add_option("--heuristic", heuristic, "min-degree or min-fill")
        ->check(CLI::IsMember({"min-degree", "min-fill"}))
        ->capture_default_str();

    int tau = 0;
    std::string validate_path;
    auto *treedec = app.add_subcommand("treedec", "Heuristic tree decomposition in PACE .td format");
    treedec->add_option("graph", graph_path, "Edge-list graph file")->required();
    treedec->add_option("--heuristic", heuristic, "min-degree or min-fill")
        ->check(CLI::IsMember({"min-degree", "min-fill"}))
        ->capture_default_str();
    treedec->add_option("--binarize", tau, "Root and binarize with this tau");
    treedec->add_option("--validate", validate_path, "Validate this .td file instead and print its width");

    std::string a_path, b_path;
    bool orbit = false;
    auto *lc = app.add_subcommand("lc", "Local-complementation equivalence of two labeled graphs");
    lc->add_option("a", a_path, "Edge-list graph file")->required();
    lc->add_option("b", b_path, "Edge-list graph file");
    lc->add_flag("--orbit", orbit, "Print orbit size and diameter of the first graph");

    size_t learn_n = 8, trials = 10;
    double learn_p = 0.5, delta = 0.01;
    auto *learn = app.add_subcommand("learn-demo", "Learn random graph states from measurement samples");
    learn->add_option("-n,--qubits", learn_n, "Vertices per graph")->capture_default_str();
    learn->add_option("-p,--edge-prob", learn_p, "Edge probability")->capture_default_str();
    learn->add_option("--delta", delta, "Failure probability")->capture_default_str();
    learn->add_option("--trials", trials, "Number of graphs")->capture_default_str();
    add_common(learn);

    bool quick = false, inject_alpha = false;
    std::vector<int> only;
    auto *selftest = app.add_subcommand("selftest", "Run the acceptance suite against the oracles");
    selftest->add_flag("--quick", quick, "Reduced instance counts");
    selftest->add_flag("--inject-sum-v-alpha", inject_alpha, "Use the sum-of-v scalar exponent (mutation check)");
    selftest->add_option("--only", only, "Criterion ids to run");
    add_common(selftest);

    BenchConfig bc;
    bool scaling = false;
    auto *bench = app.add_subcommand("bench", "Time reduce/prepare/strong/sample/tableau over a grid");
    bench->add_option("--qubits", bc.qubits, "Qubit counts")->capture_default_str();
    bench->add_option("--gates", bc.gates, "Gate counts")->capture_default_str();
    bench->add_option("--samples", bc.samples, "Query and sample counts")->capture_default_str();
    bench->add_option("--reps", bc.reps, "Repetitions per timing (median)")->capture_default_str();
    bench->add_option("--tableau-limit", bc.tableau_limit, "Largest n for the tableau column")->capture_default_str();
    bench->add_flag("--scaling", scaling, "Doubling test at the first qubit, gate and sample counts");
    add_common(bench);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp &e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError &e) {
        std::ostringstream o, er;
        int code = app.exit(e, o, er);
        out << o.str();
        err << er.str();
        return code;
    }

    try {
        if (*strong) {
            cfg.subcommand = "strong";
            return cmd_strong(cfg, xs_inline, xs_path, no_t, out);
        }
        if (*sample) {
            cfg.subcommand = "sample";
            return cmd_sample(cfg, out);
        }
        if (*reduce) {
            return cmd_reduce(cfg, td_out, out);
        }
        if (*ldl) {
            return cmd_ldl(pgs_path, graph_path, td_path, tree, heuristic, out);
        }
        if (*treedec) {
            return cmd_treedec(graph_path, heuristic, tau, validate_path, out);
        }
        if (*lc) {
            return cmd_lc(a_path, b_path, orbit, out);
        }
        if (*learn) {
            return cmd_learn(cfg, learn_n, learn_p, delta, trials, out);
        }
        if (*selftest) {
            return cmd_selftest(cfg, quick, inject_alpha, only, out);
        }
        if (*bench) {
            return cmd_bench(cfg, bc, scaling, out);
        }
    } catch (const ParseError &e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

}  // namespace ldlsim::cli
