#include "doctest.h"
#include "support.hpp"

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "equibundle/document.hpp"
#include "equibundle/report.hpp"

using namespace equibundle;
using namespace eqb_test;

namespace {

const Field Q = Field::rationals();
const Field F5 = Field::prime(5);

std::string data(const std::string& name) { return std::string(EQUIBUNDLE_DATA_DIR) + "/" + name; }

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::vector<std::string> corpus() {
    std::vector<std::string> files;
    for (const auto& e : std::filesystem::directory_iterator(EQUIBUNDLE_DATA_DIR))
        if (e.path().extension() == ".txt") files.push_back(e.path().string());
    std::sort(files.begin(), files.end());
    return files;
}

std::string report(const std::string& command, const std::string& file, RunOptions o = {}) {
    const auto r = process_document(command, slurp(data(file)), o);
    REQUIRE_MESSAGE(r.exit_code == exit_ok, r.error);
    return r.report;
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

struct Run {
    int code;
    std::string out;
};

Run run_cli(const std::string& args) {
    const std::string cmd = std::string(EQUIBUNDLE_CLI) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    char buf[4096];
    for (std::size_t n; (n = fread(buf, 1, sizeof buf, p)) > 0;) out.append(buf, n);
    const int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("element parsers") {
    CHECK(parse_scalar("-3/6", Q) == Scalar(mpq_class(-1, 2)));
    CHECK(parse_scalar("7", F5) == F5.from_int(2));
    CHECK(parse_scalar("8 mod 5", F5) == F5.from_int(3));
    CHECK(parse_scalar("1/2", F5) == F5.from_int(3));
    CHECK_THROWS_AS(parse_scalar("1 mod 7", F5), ParseError);
    CHECK_THROWS_AS(parse_scalar("1 mod 5", Q), ParseError);
    CHECK_THROWS_AS(parse_scalar("1/0", Q), ParseError);
    CHECK_THROWS_AS(parse_scalar("1/5", F5), ParseError);
    CHECK_THROWS_AS(parse_scalar("abc", Q), ParseError);

    LaurentPoly p(Q);
    p.add_term(-2, Q.one());
    p.add_term(1, Q.from_int(-3));
    p.add_term(0, Scalar(mpq_class(1, 2)));
    CHECK(parse_laurent("t^-2 - 3*t + 1/2", Q) == p);
    CHECK(parse_laurent(p.to_string(), Q) == p);
    CHECK(parse_laurent("t*t^-1 - 1", Q).is_zero());
    CHECK(parse_laurent("0", Q).is_zero());
    CHECK_THROWS_AS(parse_laurent("s^2", Q), ParseError);
    CHECK_THROWS_AS(parse_laurent("t +", Q), ParseError);
    CHECK_THROWS_AS(parse_laurent("", Q), ParseError);

    const auto x = parse_polynomial("2*x1^2*x3 - x2 + 1", Q, 3);
    CHECK(x.to_string() == "2*x1^2*x3 - x2 + 1");
    CHECK_THROWS_AS(parse_polynomial("x4", Q, 3), ParseError);
    CHECK_THROWS_AS(parse_polynomial("x1^-1", Q, 3), ParseError);

    const TruncatedRing r{Q, 2};
    CHECK(parse_truncated("1 + 2*e + e^2", r) == Truncated(r, {Q.one(), Q.from_int(2)}));
}

TEST_CASE("corpus files are canonical: print(parse(text)) == text") {
    const auto files = corpus();
    REQUIRE(files.size() >= 20);
    for (const auto& f : files) {
        CAPTURE(f);
        const std::string text = slurp(f);
        const Document d = parse_document(text);
        CHECK(print_document(d) == text);
        CHECK(print_document(parse_document(print_document(d))) == text);
    }
}

TEST_CASE("whitespace, comments and key order normalize away") {
    const std::string messy =
        "# a comment\n\n  matrix   =   [[ t ,1],[0,   t^-1 ]]  \r\n"
        "field=Q\n"
        "kind = laurent_matrix\n";
    CHECK(print_document(parse_document(messy)) == slurp(data("upper.txt")));
    const std::string poset = "kind = poset\nsize = 3\nrelations = 0<1, 1<2, 0<2\n";
    CHECK(print_document(parse_document(poset)) == "kind = poset\nsize = 3\nrelations = 0<1, 1<2\n");
    const std::string ops = "kind = findim_algebra\nfield = Q\ndimension = 2\nunit = [1, 0]\nproduct 1 0 = [0, 1]\n"
                            "product 0 0 = [1, 0]\nideal = [[0, 2]]\n";
    CHECK(print_document(parse_document(ops)) == slurp(data("dual_numbers.txt")));
}

TEST_CASE("random objects round trip") {
    for (int trial = 0; trial < 30; ++trial) {
        const Field f = trial % 2 ? F5 : Q;
        const std::size_t n = static_cast<std::size_t>(uniform(1, 3));
        const auto g = random_unimodular(f, n, -1, 2) * LaurentMatrix::diagonal(f, std::vector<std::int64_t>(n, 1)) *
                       random_unimodular(f, n, 1, 2);
        const Document d{f, g};
        CHECK(std::get<LaurentMatrix>(parse_document(print_document(d)).body) == g);

        const TruncatedRing r{f, static_cast<std::size_t>(uniform(1, 3))};
        const auto fm = random_filtered(r, uniform(-2, 1), {1, 2, 2, 3});
        CHECK(std::get<FilteredModule>(parse_document(print_document(Document{f, fm})).body) == fm);

        const GradedAlgebra b(f, {1, 2, 3});
        const auto e = random_graded_module(b, {0, 1, 1}, 3);
        const Document ge{f, GradedModuleDocument{e, std::nullopt, std::nullopt}};
        const auto back = std::get<GradedModuleDocument>(parse_document(print_document(ge)).body);
        CHECK(back.module.relations() == e.relations());
        CHECK(back.module.generator_degrees() == e.generator_degrees());
    }
}

TEST_CASE("parse errors and invalid objects are told apart") {
    const RunOptions o;
    CHECK(process_document("pi0", "kind = poset\nsize = 3\n", o).exit_code == exit_parse_error);
    CHECK(process_document("pi0", "kind = poset\nsize = 2\nrelations = 0-1\n", o).exit_code == exit_parse_error);
    CHECK(process_document("pi0", "kind = poset\nsize = 2\nrelations =\nextra = 1\n", o).exit_code ==
          exit_parse_error);
    CHECK(process_document("pi0", "kind = nonsense\n", o).exit_code == exit_parse_error);
    CHECK(process_document("pi0", "no equals sign\n", o).exit_code == exit_parse_error);
    const auto dup = process_document("pi0", "kind = poset\nsize = 1\nsize = 2\nrelations =\n", o);
    CHECK(dup.exit_code == exit_parse_error);
    CHECK(contains(dup.error, "line 3"));
    CHECK(process_document("classify-p1", "kind = laurent_matrix\nfield = Q\nmatrix = [[t, 1]]\n", o).exit_code ==
          exit_parse_error);
    CHECK(process_document("pi0", "kind = poset\nsize = 2\nrelations = 0<1, 1<0\n", o).exit_code ==
          exit_invalid_input);
    CHECK(process_document("classify-p1", "kind = laurent_matrix\nfield = Q\nmatrix = [[1 + t]]\n", o).exit_code ==
          exit_invalid_input);
    CHECK(process_document("classify-p1", "kind = laurent_matrix\nfield = F4\nmatrix = [[1]]\n", o).exit_code ==
          exit_invalid_input);
    CHECK(process_document("pi0", slurp(data("upper.txt")), o).exit_code == exit_invalid_input);
    CHECK(process_document("homeo-check", slurp(data("collapse_vee.txt")), o).exit_code == exit_invalid_input);
    RunOptions f5;
    f5.field = F5;
    CHECK(process_document("classify-p1", slurp(data("upper.txt")), f5).exit_code == exit_invalid_input);
    CHECK(process_document("cochar-to-bundle", slurp(data("type3.txt")), f5).exit_code == exit_ok);
}

TEST_CASE("reports for the documented examples") {
    CHECK(contains(report("classify-p1", "identity2.txt"), "splitting type: (0, 0)\n"));
    const auto o1 = report("classify-p1", "o1.txt");
    CHECK(contains(o1, "splitting type: (1)\n"));
    CHECK(contains(o1, "h0(0) = 2 "));
    RunOptions verify;
    verify.verify = true;
    const auto upper = report("classify-p1", "upper.txt", verify);
    CHECK(contains(upper, "splitting type: (0, 0)\n"));
    CHECK(contains(upper, "h0 matches sum max(0, d_i + m + 1): yes\n"));
    CHECK(contains(upper, "product equals input: yes\n"));

    CHECK(contains(report("split-filtration", "constant2.txt"), "splitting type: (0, 0)\n"));
    CHECK(contains(report("split-filtration", "step12.txt"), "splitting type: (1, 0)\n"));
    const auto eps = report("split-filtration", "eps_twisted.txt", verify);
    CHECK(contains(eps, "exact: yes\n"));
    CHECK(contains(eps, "graded data agrees: yes\n"));

    CHECK(contains(report("hensel-check", "kxy.txt"), "trivially henselian: yes\n"));
    CHECK(contains(report("hensel-check", "mixed_signs.txt"), "trivially henselian: no\n"));
    CHECK(contains(report("hensel-check", "dual_numbers.txt"), "henselian pair: yes\n"));
    CHECK(contains(report("hensel-check", "split_pair.txt"), "henselian pair: no\n"));
    CHECK(contains(report("lift-idempotent", "idempotent.txt"), "e^2 = e: yes\n"));

    const auto zero = report("nakayama", "nakayama_zero.txt", verify);
    CHECK(contains(zero, "E (x) B/I = 0: yes\n"));
    CHECK(contains(zero, "witness verified: yes\n"));
    CHECK(contains(zero, "enumeration agrees: yes\n"));
    CHECK(contains(report("nakayama", "nakayama_nonzero.txt", verify), "enumeration agrees: yes\n"));
    const auto lift = report("lift-map", "lift_map.txt");
    CHECK(contains(lift, "isomorphism: yes\n"));
    CHECK(contains(lift, "u v = 1: yes\n"));

    CHECK(contains(report("pi0", "antichain3.txt"), "components: 3\n"));
    CHECK(contains(report("prop-b3", "constant_map.txt"),
                   "ClOpen bijection: no; pi0 bijective: no; equivalence holds: yes\n"));
    CHECK(contains(report("prop-b3", "collapse_vee.txt"), "equivalence holds: yes\n"));
    CHECK(contains(report("homeo-check", "discrete_perm.txt"), "agree: yes\n"));
    CHECK(contains(report("lemma-b2", "star.txt"), "bijections hold: yes\n"));
    CHECK(contains(report("clopen", "two_pieces.txt"), "clopen subsets: 4\n"));

    // The emitted bundle is itself a document.
    const auto bundle = report("cochar-to-bundle", "type3.txt");
    const auto g = std::get<LaurentMatrix>(parse_document(bundle).body);
    CHECK(splitting_type(BundleOnP1(g)) == SplittingType({2, 0, -1}));
}

TEST_CASE("binary: exit codes, file order and determinism") {
    const auto a = run_cli("classify-p1 --verify " + data("upper.txt") + " " + data("o1.txt") + " " +
                           data("rational.txt"));
    const auto b = run_cli("classify-p1 --verify " + data("upper.txt") + " " + data("o1.txt") + " " +
                           data("rational.txt"));
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    const auto p1 = a.out.find("upper.txt ==");
    const auto p2 = a.out.find("o1.txt ==");
    const auto p3 = a.out.find("rational.txt ==");
    CHECK(p1 < p2);
    CHECK(p2 < p3);
    CHECK(p3 != std::string::npos);

    CHECK(run_cli("prop-b3 " + data("constant_map.txt")).code == 0);
    CHECK(run_cli("pi0 " + data("upper.txt")).code == 3);
    CHECK(run_cli("pi0 /nonexistent/file.txt").code == 2);
    CHECK(run_cli("no-such-command " + data("upper.txt")).code == 2);
    CHECK(run_cli("h0 --twist-window -1,1 " + data("o1.txt")).out ==
          "h0 window: -1..1\nh0(-1) = 1 [degree bound 0]\nh0(0) = 2 [degree bound 1]\nh0(1) = 3 [degree bound 2]\n");
    // A bound too small to see every section undercounts.
    CHECK(contains(run_cli("h0 --twist-window 0,0 --degree-bound 0 " + data("o1.txt")).out, "h0(0) = 1 "));
    const auto seeded = run_cli("split-filtration " + data("eps_twisted.txt"));
    CHECK(seeded.out == run_cli("split-filtration " + data("eps_twisted.txt")).out);
    CHECK(contains(run_cli("split-filtration --verify " + data("eps_twisted.txt")).out, "graded data agrees: yes"));
}
