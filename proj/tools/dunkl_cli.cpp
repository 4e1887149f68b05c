#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "dunkl/exprparse.hpp"
#include "dunkl/verify.hpp"

namespace {

using namespace dunkl;

Rational parse_rational(const std::string& s) {
    std::size_t slash = s.find('/');
    long p = std::stol(slash == std::string::npos ? s : s.substr(0, slash));
    long q = slash == std::string::npos ? 1 : std::stol(s.substr(slash + 1));
    if (q <= 0) throw ParseError("denominator must be positive", slash + 1);
    Rational r(p, q);
    r.canonicalize();
    return r;
}

std::pair<int, int> parse_bounds(const std::string& s) {
    std::size_t comma = s.find(',');
    if (comma == std::string::npos) throw ParseError("expected DX,DY", 0);
    return {std::stoi(s.substr(0, comma)), std::stoi(s.substr(comma + 1))};
}

int cmd_eval(int n, const std::string& expr, const std::string& apply,
             const std::optional<std::string>& c_str) {
    SkewOperator u = elaborate(*parse(expr, n), n);
    if (c_str) u = u.specialize_c(parse_rational(*c_str));
    if (!apply.empty()) {
        SkewOperator f = elaborate(*parse(apply, n), n);
        // the argument must be a function: flatten a coefficient-only operator
        LocFrac arg(Poly(n), 0);
        for (const auto& [key, coeff] : f.terms()) {
            for (int v : key.dexp)
                if (v != 0) throw ShapeError("--apply argument must be a function of x");
            if (!key.w.is_identity()) throw ShapeError("--apply argument must be a function of x");
            arg += coeff;
        }
        std::cout << render(u.apply(arg)) << "\n";
        return 0;
    }
    std::cout << render(u) << "\n";
    return 0;
}

int cmd_symbol(int n, const std::string& expr) {
    SkewOperator u = elaborate(*parse(expr, n), n);
    SymbolElement sym = u.principal_symbol();
    std::cout << sym.str() << "\n";
    try {
        LocPoly p = u.spherical_scalar_symbol();
        std::cout << "spherical scalar: " << p.str() << "\n";
    } catch (const NotSpherical&) {
        // not e-sandwiched; principal symbol only
    }
    return 0;
}

int cmd_hilbert(int n, const std::string& isotype, int m, const std::string& maxdeg,
                const std::string& format) {
    auto [dx, dy] = parse_bounds(maxdeg);
    if (format == "csv") std::cout << "i,j,dim\n";
    for (int i = 0; i <= dx; ++i)
        for (int j = 0; j <= dy; ++j) {
            int dim = m >= 2 ? a_power_basis(n, m, {i, j}).dim()
                             : isotypic_basis(n,
                                              isotype == "sign" ? Character::sign : Character::triv,
                                              {i, j})
                                   .dim();
            std::cerr << "bidegree (" << i << "," << j << ")\n";
            if (format == "csv")
                std::cout << i << "," << j << "," << dim << "\n";
            else
                std::cout << "(" << i << "," << j << ") -> " << dim << "\n";
        }
    return 0;
}

int cmd_grtable(int n, int m, const std::string& side_str, const std::string& maxdeg, int slack,
                const std::optional<std::string>& c_str, const std::string& format) {
    auto [dx, dy] = parse_bounds(maxdeg);
    Side side = side_str == "P" ? Side::P : Side::Q;
    FieldScalar kappa = c_str ? FieldScalar(parse_rational(*c_str)) : FieldScalar::c();
    GrBounds bounds{dx, dy};
    std::cerr << "building spanning set...\n";
    auto spanning = side == Side::Q ? q_spanning_set(n, m, bounds, slack, kappa)
                                    : p_spanning_set(n, m, bounds, slack, kappa);
    std::cerr << spanning.size() << " generators; computing symbols...\n";
    SymbolTable table = gr_dimension_table(spanning, n);
    GrComparison cmp = compare_with_target(table, n, m, side, bounds, slack);

    if (format == "csv") std::cout << "i,j,span,target,status\n";
    bool ok = true;
    for (const auto& [bid, cell] : cmp.table) {
        const char* status = cell.status == CellStatus::match      ? "match"
                             : cell.status == CellStatus::overflow ? "overflow"
                                                                   : "deficit";
        if (cell.status == CellStatus::overflow || !cell.contained) ok = false;
        if (format == "csv")
            std::cout << bid.first << "," << bid.second << "," << cell.span_dim << ","
                      << cell.target_dim << "," << status << "\n";
        else
            std::cout << "(" << bid.first << "," << bid.second << ") span " << cell.span_dim
                      << " target " << cell.target_dim << " " << status << "\n";
    }
    return ok ? 0 : 1;
}

int cmd_verify(const std::string& suite, int n, const std::optional<std::string>& json_path,
               const std::optional<std::string>& c_str, int m, const std::string& maxdeg,
               int slack) {
    SuiteOptions opt;
    if (c_str) opt.c_value = parse_rational(*c_str);
    opt.m = m;
    auto [dx, dy] = parse_bounds(maxdeg);
    opt.bounds = GrBounds{dx, dy};
    opt.slack = slack;
    opt.progress = &std::cerr;
    CheckReport rep = run_suite(suite, n, opt);
    if (json_path) {
        std::ofstream out(*json_path);
        out << rep.to_json() << "\n";
    }
    std::cout << rep.to_text();
    return rep.passed() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact kernel for type-A rational Cherednik algebras via Dunkl operators"};
    app.require_subcommand(1);

    int n = 2, m = 1, slack = 2;
    std::string expr, apply, isotype = "triv", side = "Q", maxdeg = "4,4", suite, format = "text";
    std::optional<std::string> c_str, json_path;

    auto* eval = app.add_subcommand("eval", "parse, normalize, optionally apply to a function");
    eval->add_option("--n", n)->required();
    eval->add_option("--expr", expr)->required();
    eval->add_option("--apply", apply);
    eval->add_option("--c", c_str);

    auto* symbol = app.add_subcommand("symbol", "principal symbol of an expression");
    symbol->add_option("--n", n)->required();
    symbol->add_option("--expr", expr)->required();

    auto* hilbert = app.add_subcommand("hilbert", "bidegree dimension table of A^m");
    hilbert->add_option("--n", n)->required();
    hilbert->add_option("--isotype", isotype)->check(CLI::IsMember({"triv", "sign"}));
    hilbert->add_option("--m", m);
    hilbert->add_option("--maxdeg", maxdeg);
    hilbert->add_option("--format", format)->check(CLI::IsMember({"text", "csv"}));

    auto* grtable = app.add_subcommand("grtable", "gr bidegree comparison for Q/P bimodules");
    grtable->add_option("--n", n)->required();
    grtable->add_option("--m", m);
    grtable->add_option("--side", side)->check(CLI::IsMember({"Q", "P"}));
    grtable->add_option("--maxdeg", maxdeg);
    grtable->add_option("--slack", slack);
    grtable->add_option("--c", c_str);
    grtable->add_option("--format", format)->check(CLI::IsMember({"text", "csv"}));

    auto* verify = app.add_subcommand("verify", "run a named verification suite");
    verify->add_option("--suite", suite)->required();
    verify->add_option("--n", n)->required();
    verify->add_option("--json", json_path);
    verify->add_option("--c", c_str);
    verify->add_option("--m", m);
    verify->add_option("--maxdeg", maxdeg);
    verify->add_option("--slack", slack);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (eval->parsed()) return cmd_eval(n, expr, apply, c_str);
        if (symbol->parsed()) return cmd_symbol(n, expr);
        if (hilbert->parsed()) return cmd_hilbert(n, isotype, m, maxdeg, format);
        if (grtable->parsed()) return cmd_grtable(n, m, side, maxdeg, slack, c_str, format);
        if (verify->parsed()) return cmd_verify(suite, n, json_path, c_str, m, maxdeg, slack);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
