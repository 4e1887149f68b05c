// Acceptance gate: one criterion per invocation (argv[1] in 1..12), printing
// a single PASS/FAIL line and exiting 0/1.

#include <cstdlib>
#include <exception>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "dunkl/exprparse.hpp"
#include "dunkl/verify.hpp"

using namespace dunkl;

namespace {

bool suite_over(const std::string& suite, std::vector<int> ns, SuiteOptions opt = {}) {
    opt.progress = &std::cerr;
    for (int n : ns) {
        CheckReport rep = run_suite(suite, n, opt);
        std::cerr << rep.to_text();
        if (!rep.passed()) return false;
    }
    return true;
}

bool gr_case(const std::string& suite, int m, GrBounds bounds) {
    SuiteOptions opt;
    opt.m = m;
    opt.bounds = bounds;
    opt.slack = 2;
    return suite_over(suite, {2}, opt);
}

bool molien_cross_check() {
    for (int n = 2; n <= 3; ++n)
        for (int i = 0; i <= 8; ++i)
            for (int j = 0; i + j <= 8; ++j)
                for (Character chi : {Character::triv, Character::sign}) {
                    int direct = isotypic_basis(n, chi, {i, j}).dim();
                    int series = molien_dimension(n, chi, {i, j});
                    if (direct != series) {
                        std::cerr << "mismatch at n=" << n << " (" << i << "," << j << ")\n";
                        return false;
                    }
                }
    return isotypic_basis(2, Character::sign, {1, 1}).dim() == 2;
}

bool parser_round_trip_and_fuzz() {
    int n = 2;
    std::vector<std::string> corpus = {
        "y1",
        "y2",
        "y1*y1 + y2*y2",
        "e * del^-1 * e",
        "d1*d2 - x1*d2^2",
        "c^2 * s(1,2) - 1/3",
        "del^-3 * (x1 - x2)",
        "e_ * x1 * e",
        "-d1 + c*d1*s(1,2)",
        "(x1 - x2)^2 * del^-1 + 5/7",
    };
    for (const std::string& src : corpus) {
        SkewOperator u = elaborate(*parse(src, n), n);
        SkewOperator again = elaborate(*parse(render(u), n), n);
        if (u != again) {
            std::cerr << "round-trip failed for: " << src << "\n";
            return false;
        }
    }

    // 10^4 random well-formed expressions must elaborate without crashing.
    std::mt19937 rng(271828);
    std::vector<std::string> atoms = {"x1", "x2", "d1",  "d2", "y1",  "y2",
                                      "s(1,2)", "e",  "e_", "del", "c",  "3/2"};
    std::uniform_int_distribution<int> pick(0, static_cast<int>(atoms.size()) - 1);
    std::uniform_int_distribution<int> nterms(1, 3);
    std::uniform_int_distribution<int> nfactors(1, 3);
    std::uniform_int_distribution<int> expo(1, 2);
    for (int t = 0; t < 10000; ++t) {
        std::string src;
        int terms = nterms(rng);
        for (int a = 0; a < terms; ++a) {
            if (a > 0) src += (rng() % 2 ? " + " : " - ");
            int factors = nfactors(rng);
            for (int f = 0; f < factors; ++f) {
                if (f > 0) src += " * ";
                std::string atom = atoms[pick(rng)];
                if (rng() % 4 == 0) {
                    int k = expo(rng);
                    if (atom == "del" && rng() % 2) k = -k;
                    atom += "^" + std::to_string(k);
                }
                src += atom;
            }
        }
        SkewOperator u = elaborate(*parse(src, n), n);
        (void)u;
        if (t % 1000 == 0) std::cerr << "fuzz " << t << "/10000\n";
    }
    return true;
}

} // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: acceptance <criterion 1..12>\n";
        return 2;
    }
    int crit = std::atoi(argv[1]);
    std::string name;
    bool ok = false;
    try {
        switch (crit) {
        case 1:
            name = "dunkl_commute n=2,3";
            ok = suite_over("dunkl_commute", {2, 3});
            break;
        case 2:
            name = "pbw_slices n=2,3";
            ok = suite_over("pbw_slices", {2, 3});
            break;
        case 3:
            name = "heckman n=2,3";
            ok = suite_over("heckman", {2, 3});
            break;
        case 4:
            name = "cm_appendix n=2,3";
            ok = suite_over("cm_appendix", {2, 3});
            break;
        case 5:
            name = "sc5_radial n=2,3";
            ok = suite_over("sc5_radial", {2, 3});
            break;
        case 6:
            name = "twist_lemma n=2";
            ok = suite_over("twist_lemma", {2});
            break;
        case 7:
            name = "qgr m=1 bounds(4,4)";
            ok = gr_case("qgr_main", 1, GrBounds{4, 4});
            break;
        case 8:
            name = "qgr m=2 bounds(3,3)";
            ok = gr_case("qgr_main", 2, GrBounds{3, 3});
            break;
        case 9:
            name = "pgr m=1 bounds(4,4)";
            ok = gr_case("pgr_main", 1, GrBounds{4, 4});
            break;
        case 10:
            name = "isotypic/molien cross-check";
            ok = molien_cross_check();
            break;
        case 11:
            name = "good_values n=2,3,4";
            ok = suite_over("good_values", {2, 3, 4});
            break;
        case 12:
            name = "parser round-trip and fuzz";
            ok = parser_round_trip_and_fuzz();
            break;
        default:
            std::cerr << "criterion out of range\n";
            return 2;
        }
    } catch (const std::exception& e) {
        std::cerr << "exception: " << e.what() << "\n";
        ok = false;
        if (name.empty()) name = "criterion " + std::to_string(crit);
    }
    std::cout << "[PRIMARY] criterion " << crit << " (" << name << "): "
              << (ok ? "PASS" : "FAIL") << std::endl;
    return ok ? 0 : 1;
}
