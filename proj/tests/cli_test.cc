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

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

using ldlsim::cli::run_cli;

namespace {

struct CliRun {
    int status;
    std::string out;
    std::string err;
};

CliRun run(const std::vector<std::string> &args) {
    std::ostringstream out, err;
    int status = run_cli(args, out, err);
    return {status, out.str(), err.str()};
}

std::string temp_file(const std::string &name, const std::string &content) {
    std::string path = ::testing::TempDir() + name;
    std::ofstream(path) << content;
    return path;
}

std::vector<std::string> lines(const std::string &text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        out.push_back(line);
    }
    return out;
}

}  // namespace

TEST(cli, strong_bell_records) {
    std::string bell = temp_file("bell.txt", "H 0\nCNOT 0 1\n");
    CliRun r = run({"strong", bell, "--x", "00", "--x", "01", "--x", "10", "--x", "11"});
    ASSERT_EQ(r.status, 0) << r.err;
    EXPECT_EQ(lines(r.out), (std::vector<std::string>{"00 (-1,0)", "01 zero", "10 zero", "11 (-1,0)"}));
}

TEST(cli, strong_empty_circuit) {
    std::string empty = temp_file("empty.txt", "");
    CliRun r = run({"strong", empty, "--qubits", "3", "--x", "000"});
    ASSERT_EQ(r.status, 0) << r.err;
    EXPECT_EQ(r.out, "000 (0,0)\n");
}

TEST(cli, strong_refusals_and_errors) {
    std::string t = temp_file("t.txt", "H 0\nT 0\n");
    CliRun refused = run({"strong", t, "--no-t"});
    EXPECT_NE(refused.status, 0);
    EXPECT_NE(refused.err.find("T"), std::string::npos);
    CliRun allowed = run({"strong", t});
    EXPECT_EQ(allowed.status, 0);
    EXPECT_EQ(lines(allowed.out).size(), 2u);
    CliRun capped = run({"strong", t, "--t-cap", "0"});
    EXPECT_NE(capped.status, 0);
    std::string bad = temp_file("bad.txt", "H 0\nFROB 1\n");
    CliRun parse = run({"strong", bad});
    EXPECT_NE(parse.status, 0);
    EXPECT_NE(parse.err.find("line 2"), std::string::npos);
    EXPECT_NE(run({"strong", "/nonexistent/file"}).status, 0);
}

TEST(cli, sample_support_and_determinism) {
    std::string bell = temp_file("bell2.txt", "H 0\nCNOT 0 1\n");
    CliRun a = run({"sample", bell, "-k", "1000", "--seed", "0"});
    ASSERT_EQ(a.status, 0) << a.err;
    std::set<std::string> seen;
    for (const auto &l : lines(a.out)) {
        seen.insert(l);
    }
    EXPECT_EQ(seen, (std::set<std::string>{"00", "11"}));
    EXPECT_EQ(lines(a.out).size(), 1000u);
    EXPECT_EQ(run({"sample", bell, "-k", "1000", "--seed", "0"}).out, a.out);
    EXPECT_NE(run({"sample", bell, "-k", "1000", "--seed", "1"}).out, a.out);
    for (const char *strategy : {"direct", "explicit", "auto"}) {
        CliRun s = run({"sample", bell, "-k", "200", "--strategy", strategy});
        ASSERT_EQ(s.status, 0);
        for (const auto &l : lines(s.out)) {
            EXPECT_TRUE(l == "00" || l == "11");
        }
    }

    std::string det = temp_file("det.txt", "X 0\nS 1\nCZ 0 1\n");
    CliRun d = run({"sample", det, "-k", "50"});
    ASSERT_EQ(d.status, 0);
    std::vector<std::string> dl = lines(d.out);
    EXPECT_EQ(std::set<std::string>(dl.begin(), dl.end()), std::set<std::string>{"10"});
}

TEST(cli, reduce_ldl_treedec_lc) {
    std::string bell = temp_file("bell3.txt", "H 0\nCNOT 0 1\n");
    CliRun red = run({"reduce", bell});
    ASSERT_EQ(red.status, 0) << red.err;
    EXPECT_NE(red.out.find("pgs "), std::string::npos);

    std::string p4 = temp_file("p4.txt", "p 4 3\ne 1 2\ne 2 3\ne 3 4\n");
    CliRun td = run({"treedec", p4});
    ASSERT_EQ(td.status, 0) << td.err;
    EXPECT_EQ(td.out.rfind("s td ", 0), 0u);
    std::string tdf = temp_file("p4.td", td.out);
    CliRun val = run({"treedec", p4, "--validate", tdf});
    EXPECT_EQ(val.out, "width 1\n");

    CliRun ldl = run({"ldl", "--graph", p4, "--td", tdf});
    ASSERT_EQ(ldl.status, 0) << ldl.err;
    EXPECT_NE(ldl.out.find("rank 4"), std::string::npos);

    std::string p3 = temp_file("p3.txt", "p 3 2\ne 1 2\ne 2 3\n");
    std::string k3 = temp_file("k3.txt", "p 3 3\ne 1 2\ne 2 3\ne 1 3\n");
    std::string e3 = temp_file("e3.txt", "p 3 1\ne 1 2\n");
    EXPECT_EQ(lines(run({"lc", k3, p3}).out)[0], "equivalent");
    EXPECT_EQ(lines(run({"lc", e3, p3}).out)[0], "not equivalent");
}

TEST(cli, learn_demo_and_help) {
    CliRun r = run({"learn-demo", "--trials", "5", "-n", "6", "--seed", "4"});
    ASSERT_EQ(r.status, 0);
    EXPECT_EQ(lines(r.out).size(), 7u);
    EXPECT_EQ(run({"learn-demo", "--trials", "5", "-n", "6", "--seed", "4"}).out, r.out);
    CliRun help = run({"--help"});
    EXPECT_EQ(help.status, 0);
    for (const char *sub : {"strong", "sample", "reduce", "ldl", "treedec", "lc", "learn-demo", "selftest", "bench"}) {
        EXPECT_NE(help.out.find(sub), std::string::npos) << sub;
    }
    CliRun sub_help = run({"sample", "--help"});
    for (const char *flag : {"--count", "--strategy", "--seed"}) {
        EXPECT_NE(sub_help.out.find(flag), std::string::npos) << flag;
    }
    EXPECT_NE(run({}).status, 0);
}

TEST(cli, selftest_and_mutation) {
    CliRun ok = run({"selftest", "--quick", "--only", "2", "6"});
    EXPECT_EQ(ok.status, 0) << ok.out;
    EXPECT_NE(ok.out.find("2/2 suites passed"), std::string::npos);
    CliRun mutated = run({"selftest", "--quick", "--only", "1", "--inject-sum-v-alpha"});
    EXPECT_NE(mutated.status, 0);
    EXPECT_NE(mutated.out.find("FAIL [1]"), std::string::npos);
}

TEST(cli, bench_rows) {
    CliRun b = run({"bench", "--qubits", "4", "--gates", "100", "--samples", "10", "--reps", "1"});
    ASSERT_EQ(b.status, 0) << b.err;
    std::vector<std::string> l = lines(b.out);
    EXPECT_EQ(l[0], "op\tn\tm\tk\twidth\tseconds");
    EXPECT_EQ(l.size(), 6u);
}
