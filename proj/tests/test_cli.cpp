#include "catch_amalgamated.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "powergraph/cli.hpp"

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = powergraph::cli::run(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spit(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    out << text;
}

} // namespace

TEST_CASE("cli info") {
    const CliResult r = run_cli({"info", "--group", "cyclic:12"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "name: Z_12\n"));
    CHECK(contains(r.out, "order: 12\n"));
    CHECK(contains(r.out, "element orders: 1^1 2^1 3^2 4^2 6^2 12^4\n"));
    CHECK(contains(r.out, "maximal cyclic subgroups: 1\n"));
    CHECK(contains(r.out, "cyc size: 12\n"));
    CHECK(contains(r.out, "sylow p=2: exponent=2 unique=yes cyclic=yes generalized_quaternion=no\n"));
    CHECK(contains(r.out, "sylow p=3: exponent=1 unique=yes cyclic=yes generalized_quaternion=no\n"));

    const CliResult q = run_cli({"info", "--group", "product(quaternion:8,cyclic:3)"});
    CHECK(q.code == 0);
    CHECK(contains(q.out, "name: Q_8 x Z_3\n"));
    CHECK(contains(q.out, "sylow p=2: exponent=3 unique=yes cyclic=no generalized_quaternion=yes\n"));
}

TEST_CASE("cli info from a permutation file") {
    const std::string path = "cli_tmp_s3.perm";
    spit(path, "3\n1 0 2\n1 2 0\n");
    const CliResult r = run_cli({"info", "--perm", path});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "name: cli_tmp_s3\n"));
    CHECK(contains(r.out, "order: 6\n"));
    CHECK(contains(r.out, "element orders: 1^1 2^3 3^2\n"));
    std::remove(path.c_str());
}

TEST_CASE("cli graph export") {
    SECTION("raw edge list of the Klein four power graph") {
        const CliResult r = run_cli({"graph", "--group", "abelian:2,2", "--kind", "power",
                                     "--form", "raw", "--format", "edgelist"});
        CHECK(r.code == 0);
        CHECK(r.out == "0 1\n0 2\n0 3\n");
    }

    SECTION("star of the power complement of Z_6") {
        const CliResult r = run_cli({"graph", "--group", "cyclic:6", "--kind", "power",
                                     "--format", "edgelist"});
        CHECK(r.code == 0);
        CHECK(r.out == "0 1\n1 2\n");
    }

    SECTION("dot output with labels") {
        const CliResult r = run_cli({"graph", "--group", "cyclic:2", "--form", "raw"});
        CHECK(r.code == 0);
        CHECK(r.out == "graph G {\n"
                       "  0 [label=\"0 (o=1)\"];\n"
                       "  1 [label=\"1 (o=2)\"];\n"
                       "  0 -- 1;\n"
                       "}\n");
    }

    SECTION("write to a file") {
        const std::string path = "cli_tmp_graph.dot";
        const CliResult r = run_cli({"graph", "--group", "cyclic:4", "--form", "complement",
                                     "--out", path});
        CHECK(r.code == 0);
        CHECK(r.out.empty());
        CHECK(contains(slurp(path), "graph G {"));
        std::remove(path.c_str());
    }
}

TEST_CASE("cli diam") {
    const CliResult r = run_cli({"diam", "--group", "cyclic:12"});
    CHECK(r.code == 0);
    CHECK(r.out == "3\nisolated: 0(o=1) 1(o=12) 5(o=12) 7(o=12) 11(o=12)\n");

    const CliResult q16 = run_cli({"diam", "--group", "quaternion:16", "--kind", "enhanced"});
    CHECK(q16.code == 0);
    CHECK(contains(q16.out, "2\n"));
    CHECK(contains(q16.out, "isolated: 0(o=1) 4(o=2)\n"));

    const CliResult edgeless = run_cli({"diam", "--group", "cyclic:8"});
    CHECK(edgeless.code == 3);
    CHECK(contains(edgeless.err, "complement has no edges"));
}

TEST_CASE("cli classify") {
    const CliResult r = run_cli({"classify", "--group", "cyclic:12"});
    CHECK(r.code == 0);
    CHECK(r.out == "group: Z_12\n"
                   "order: 12\n"
                   "cyclic: yes\n"
                   "elementary abelian 2-group: no\n"
                   "nilpotent: yes\n"
                   "quaternion times odd cyclic: no\n"
                   "psi: yes (p=2, beta=1, element 2 of order 6)\n"
                   "phi: no\n"
                   "power star diameter: 3 (Psi)\n"
                   "enhanced star diameter: inapplicable (complement has no edges)\n");

    const CliResult q = run_cli({"classify", "--group", "quaternion:8"});
    CHECK(q.code == 0);
    CHECK(contains(q.out, "cyclic: no\n"));
    CHECK(contains(q.out, "psi: no\n"));
    CHECK(contains(q.out, "phi: no\n"));
    CHECK(contains(q.out, "power star diameter: 2 (Otherwise)\n"));
    CHECK(contains(q.out, "enhanced star diameter: 2 (Otherwise)\n"));

    const CliResult klein = run_cli({"classify", "--group", "abelian:2,2"});
    CHECK(contains(klein.out, "elementary abelian 2-group: yes\n"));
    CHECK(contains(klein.out, "power star diameter: 1 (ElemAbelian2)\n"));
}

TEST_CASE("cli verify") {
    const std::string path = "cli_tmp_report.jsonl";
    const CliResult r = run_cli({"verify", "--max-order", "12", "--out", path});
    CHECK(r.code == 0);
    CHECK(contains(r.err, "violations: 0\n"));

    std::ifstream in(path);
    REQUIRE(in.good());
    const auto records = powergraph::parse_report(in);
    in.close();
    CHECK(records.size() >= 2);
    for (const auto& rec : records)
        if (rec.applicable) CHECK(rec.match);

    // reruns are byte identical
    const std::string first = slurp(path);
    const CliResult again = run_cli({"verify", "--max-order", "12", "--out", path});
    CHECK(again.code == 0);
    CHECK(slurp(path) == first);
    std::remove(path.c_str());

    const CliResult with_extra =
        run_cli({"verify", "--max-order", "12", "--extra", "cyclic:105"});
    CHECK(with_extra.code == 0);
    CHECK(contains(with_extra.out, "\"Z_105\""));
}

TEST_CASE("cli search-phi") {
    const CliResult r = run_cli({"search-phi", "--max-order", "16"});
    CHECK(r.code == 0);
    CHECK(contains(r.err, "phi groups: "));
    CHECK(contains(r.err, "catalog groups\n"));
}

TEST_CASE("cli make") {
    SECTION("to stdout") {
        const CliResult r = run_cli({"make", "--group", "cyclic:4"});
        CHECK(r.code == 0);
        CHECK(r.out == "4\n0 1 2 3\n1 2 3 0\n2 3 0 1\n3 0 1 2\n");
    }

    SECTION("file round trip is byte identical") {
        const std::string a = "cli_tmp_a.cay", b = "cli_tmp_b.cay";
        CHECK(run_cli({"make", "--group", "dicyclic:3", "--out", a}).code == 0);
        CHECK(run_cli({"make", "--cay", a, "--out", b}).code == 0);
        CHECK(slurp(a) == slurp(b));

        const CliResult info = run_cli({"info", "--cay", a});
        CHECK(contains(info.out, "name: cli_tmp_a\n"));
        CHECK(contains(info.out, "order: 12\n"));
        std::remove(a.c_str());
        std::remove(b.c_str());
    }
}

TEST_CASE("cli exit codes") {
    CHECK(run_cli({"info", "--group", "cyclic:zzz"}).code == 2);       // parse error
    CHECK(run_cli({"info", "--group", "semidirect:9,3,2"}).code == 2); // invalid action
    CHECK(run_cli({"info", "--cay", "/nonexistent/x.cay"}).code == 5); // io error
    CHECK(run_cli({"info"}).code == 2);                                // missing source
    CHECK(run_cli({"info", "--group", "cyclic:4", "--cay", "x"}).code == 2);
    CHECK(run_cli({"bogus"}).code == 2);
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"graph", "--group", "cyclic:4", "--kind", "sideways"}).code == 2);
    CHECK(run_cli({"info", "--group", "product(symmetric:6,symmetric:6)"}).code == 3); // cap

    const std::string bad = "cli_tmp_bad.cay";
    spit(bad, "2\n0 1\n1 1\n");
    const CliResult r = run_cli({"info", "--cay", bad});
    CHECK(r.code == 3); // not a group
    CHECK(contains(r.err, "cancellation"));
    std::remove(bad.c_str());
}

TEST_CASE("cli help") {
    const CliResult top = run_cli({"--help"});
    CHECK(top.code == 0);
    CHECK(contains(top.out, "powergraph"));
    CHECK(contains(top.out, "verify"));

    const CliResult sub = run_cli({"diam", "--help"});
    CHECK(sub.code == 0);
    CHECK(contains(sub.out, "--kind"));
}
