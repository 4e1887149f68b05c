#include "dunkl/verify.hpp"

#include <chrono>
#include <functional>
#include <ostream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "dunkl/exprparse.hpp"

namespace dunkl {

namespace {

using Clock = std::chrono::steady_clock;

long ms_since(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

std::string truncated_render(const SkewOperator& u, std::size_t max_terms = 20) {
    if (u.term_count() <= max_terms) return render(u);
    SkewOperator head(u.n());
    std::size_t k = 0;
    for (const auto& [key, coeff] : u.terms()) {
        if (k++ == max_terms) break;
        head.add_term(key, coeff);
    }
    return render(head) + " + ... (" + std::to_string(u.term_count() - max_terms) + " more terms)";
}

struct Runner {
    CheckReport& rep;
    std::ostream* progress;

    void note(const std::string& line) const {
        if (progress) *progress << line << "\n" << std::flush;
    }

    /// Records pass/fail for "lhs - rhs == 0" with the difference as detail.
    void op_zero(const std::string& name, const std::function<SkewOperator()>& diff) {
        auto start = Clock::now();
        Check c{name, CheckStatus::pass, "exact equality", 0};
        try {
            SkewOperator d = diff();
            if (!d.is_zero()) {
                c.status = CheckStatus::fail;
                c.detail = "nonzero difference: " + truncated_render(d);
            }
        } catch (const std::exception& ex) {
            c.status = CheckStatus::fail;
            c.detail = std::string("exception: ") + ex.what();
        }
        c.ms = ms_since(start);
        note("  " + name + ": " + (c.status == CheckStatus::pass ? "pass" : "FAIL"));
        rep.checks.push_back(std::move(c));
    }

    void boolean(const std::string& name, const std::function<std::pair<bool, std::string>()>& f) {
        auto start = Clock::now();
        Check c{name, CheckStatus::pass, "", 0};
        try {
            auto [ok, detail] = f();
            c.status = ok ? CheckStatus::pass : CheckStatus::fail;
            c.detail = detail;
        } catch (const std::exception& ex) {
            c.status = CheckStatus::fail;
            c.detail = std::string("exception: ") + ex.what();
        }
        c.ms = ms_since(start);
        note("  " + name + ": " + (c.status == CheckStatus::pass ? "pass" : "FAIL"));
        rep.checks.push_back(std::move(c));
    }
};

FieldScalar suite_parameter(const SuiteOptions& opt) {
    return opt.c_value ? FieldScalar(*opt.c_value) : FieldScalar::c();
}

std::string bid_str(Bidegree b) {
    return "(" + std::to_string(b.first) + "," + std::to_string(b.second) + ")";
}

void suite_dunkl_commute(Runner& r, int n, const FieldScalar& kappa) {
    CherednikContext ctx(n, kappa);
    std::vector<SkewOperator> d;
    for (int i = 0; i < n; ++i) d.push_back(dunkl(ctx, i));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            r.op_zero("commute_y" + std::to_string(i + 1) + "_y" + std::to_string(j + 1),
                      [&, i, j] { return d[i] * d[j] - d[j] * d[i]; });
}

/// Sparse echelon over integer-vector column keys; used for PBW ranks.
class VecEchelon {
  public:
    using Row = std::map<std::vector<int>, FieldScalar>;

    bool insert(Row row) {
        while (!row.empty()) {
            auto lead = row.begin();
            auto pivot = rows_.find(lead->first);
            if (pivot == rows_.end()) {
                FieldScalar inv = lead->second.inverse();
                for (auto& [k, v] : row) v *= inv;
                rows_.emplace(row.begin()->first, std::move(row));
                return true;
            }
            FieldScalar f = lead->second;
            for (const auto& [k, v] : pivot->second) {
                auto it = row.find(k);
                FieldScalar next = (it == row.end() ? FieldScalar(0) : it->second) - f * v;
                if (next.is_zero()) {
                    if (it != row.end()) row.erase(it);
                } else if (it == row.end()) {
                    row.emplace(k, std::move(next));
                } else {
                    it->second = std::move(next);
                }
            }
        }
        return false;
    }

    int rank() const { return static_cast<int>(rows_.size()); }

  private:
    std::map<std::vector<int>, Row> rows_;
};

std::vector<std::vector<int>> all_exponents(int n, int maxdeg) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<std::size_t>(n), 0);
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == n) {
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            cur[static_cast<std::size_t>(pos)] = v;
            rec(pos + 1, left - v);
        }
    };
    rec(0, maxdeg);
    return out;
}

/// Flattens operators into sparse rows over a common delta power. Columns
/// sort by descending total d-order first, so PBW monomial rows have
/// pairwise distinct leading columns.
std::vector<VecEchelon::Row> flatten_operators(const std::vector<SkewOperator>& ops, int n) {
    int K = 0;
    for (const SkewOperator& u : ops)
        for (const auto& [key, coeff] : u.terms()) K = std::max(K, coeff.dpow());
    const Poly del = discriminant(n);
    std::map<Perm, int> perm_rank;
    for (const Perm& w : Perm::all(n)) perm_rank.emplace(w, static_cast<int>(perm_rank.size()));

    std::vector<VecEchelon::Row> rows;
    for (const SkewOperator& u : ops) {
        VecEchelon::Row row;
        for (const auto& [key, coeff] : u.terms()) {
            Poly num = coeff.num();
            for (int k = coeff.dpow(); k < K; ++k) num = num * del;
            int total_d = 0;
            for (int v : key.dexp) total_d += v;
            for (const auto& [mono, s] : num.terms()) {
                std::vector<int> col;
                col.push_back(-total_d);
                col.insert(col.end(), key.dexp.begin(), key.dexp.end());
                col.push_back(perm_rank.at(key.w));
                col.insert(col.end(), mono.xe.begin(), mono.xe.end());
                FieldScalar& slot = row[col];
                slot += s;
                if (slot.is_zero()) row.erase(col);
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

void suite_pbw_slices(Runner& r, int n, const FieldScalar& kappa) {
    CherednikContext ctx(n, kappa);
    const int A = 3;
    const auto exps = all_exponents(n, A);

    // Dunkl power lattice
    std::map<std::vector<int>, SkewOperator> dpow;
    for (const auto& b : exps) {
        int t = 0;
        for (int v : b) t += v;
        if (t == 0) {
            dpow.emplace(b, SkewOperator::one(n));
            continue;
        }
        std::vector<int> prev = b;
        int i = 0;
        while (prev[static_cast<std::size_t>(i)] == 0) ++i;
        --prev[static_cast<std::size_t>(i)];
        dpow.emplace(b, dpow.at(prev) * dunkl(ctx, i));
    }

    r.boolean("monomial_rank_full", [&] {
        std::vector<SkewOperator> ops;
        std::vector<int> zero(static_cast<std::size_t>(n), 0);
        for (const auto& a : exps)
            for (const auto& b : exps) {
                SkewOperator base = dpow.at(b).mul_coeff_left(
                    LocFrac(Poly::monomial(n, Monomial{a, zero}, FieldScalar(1)), 0));
                for (const Perm& w : Perm::all(n)) ops.push_back(base.mul_group_right(w));
            }
        r.note("  flattening " + std::to_string(ops.size()) + " operators");
        VecEchelon ech;
        int rank = 0;
        for (auto& row : flatten_operators(ops, n))
            if (ech.insert(std::move(row))) ++rank;
        std::string detail = "rank " + std::to_string(rank) + " of " + std::to_string(ops.size());
        return std::make_pair(rank == static_cast<int>(ops.size()), detail);
    });

    r.boolean("spherical_symbols_match_molien", [&] {
        const SkewOperator E = idempotent(n, IdempotentKind::triv);
        std::vector<SkewOperator> ops;
        std::vector<int> zero(static_cast<std::size_t>(n), 0);
        for (const auto& a : exps)
            for (const auto& b : exps) {
                SkewOperator u = E *
                                 dpow.at(b).mul_coeff_left(LocFrac(
                                     Poly::monomial(n, Monomial{a, zero}, FieldScalar(1)), 0)) *
                                 E;
                if (!u.is_zero()) ops.push_back(std::move(u));
            }
        SymbolTable table = gr_dimension_table(ops, n);
        DimensionTable dims = table.dimensions();
        std::string mismatches;
        for (int i = 0; i <= A; ++i)
            for (int j = 0; j <= A; ++j) {
                int want = molien_dimension(n, Character::triv, {i, j});
                int got = dims.at({i, j});
                if (want != got)
                    mismatches += bid_str({i, j}) + " span " + std::to_string(got) + " molien " +
                                  std::to_string(want) + "; ";
            }
        for (const auto& [bid, d] : dims.dims)
            if ((bid.first < 0 || bid.first > A || bid.second > A) && d != 0)
                mismatches += bid_str(bid) + " unexpected rank " + std::to_string(d) + "; ";
        return std::make_pair(mismatches.empty(),
                              mismatches.empty() ? "all bidegrees match" : mismatches);
    });
}

void suite_heckman(Runner& r, int n, const FieldScalar& kappa) {
    r.op_zero("heckman_identity", [&] {
        SkewOperator lhs = SkewOperator::delta_power(n, -1) *
                           nabla2(CherednikContext(n, kappa + FieldScalar(1))) *
                           idempotent(n, IdempotentKind::sign) * SkewOperator::delta_power(n, 1);
        SkewOperator rhs = nabla2(CherednikContext(n, kappa)) * idempotent(n, IdempotentKind::triv);
        return lhs - rhs;
    });
}

/// Group-free collapse: replaces every group element by the identity;
/// exact for operators about to absorb into e on the right.
SkewOperator group_collapse(const SkewOperator& u) {
    SkewOperator out(u.n());
    Perm id = Perm::identity(u.n());
    for (const auto& [key, coeff] : u.terms())
        out.add_term(SkewOperator::TermKey{key.dexp, id}, coeff);
    return out;
}

void suite_cm_appendix(Runner& r, int n, const FieldScalar& w) {
    const SkewOperator E = idempotent(n, IdempotentKind::triv);
    SkewOperator u = nabla2(CherednikContext(n, w)) * E;
    SkewOperator C = group_collapse(u);
    r.op_zero("collapse_identity", [&] { return u - C * E; });
    r.op_zero("conjugate_equals_calogero_moser",
              [&] { return theta_spher(C, w) - calogero_moser(n, w); });
    r.op_zero("sandwiched_form",
              [&] { return theta_spher(C, w) * E - calogero_moser(n, w) * E; });
}

void suite_sc5_radial(Runner& r, int n, const FieldScalar& w) {
    r.op_zero("radial_conjugation", [&] {
        SkewOperator lhs =
            radial_rhs(n, w).conjugate_by_delta_power(-(w + FieldScalar(1)));
        return lhs - calogero_moser(n, w);
    });
    r.op_zero("cm_parameter_symmetry", [&] {
        return calogero_moser(n, w) - calogero_moser(n, -(w + FieldScalar(1)));
    });
    r.op_zero("delta_laplacian_identity", [&] {
        SkewOperator lhs = SkewOperator::delta_power(n, 1) * laplacian(n) *
                           SkewOperator::delta_power(n, -1);
        SkewOperator rhs = laplacian(n);
        const Poly del = discriminant(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                Poly cof = *del.divide_exact(root_poly(n, i, j));
                SkewOperator dir = SkewOperator::partial(n, i) - SkewOperator::partial(n, j);
                rhs = rhs - SkewOperator::coefficient(LocFrac(cof, 0)) * dir *
                                SkewOperator::delta_power(n, -1) * SkewOperator::scalar(n, FieldScalar(2));
            }
        return lhs - rhs;
    });
}

/// W-invariant orbit sums of x-monomials of the given total degree.
std::vector<Poly> symmetrized_monomials(int n, int deg) {
    std::vector<Poly> out;
    for (const auto& a : all_exponents(n, deg)) {
        int t = 0;
        for (int v : a) t += v;
        if (t != deg) continue;
        bool canonical = true; // descending exponents pick one orbit representative
        for (std::size_t k = 1; k < a.size(); ++k)
            if (a[k] > a[k - 1]) { canonical = false; break; }
        if (!canonical) continue;
        std::set<std::vector<int>> orbit;
        for (const Perm& wp : Perm::all(n)) {
            std::vector<int> img(static_cast<std::size_t>(n), 0);
            for (std::size_t i = 0; i < a.size(); ++i)
                img[static_cast<std::size_t>(wp(static_cast<int>(i)))] = a[i];
            orbit.insert(std::move(img));
        }
        Poly p(n);
        std::vector<int> zero(static_cast<std::size_t>(n), 0);
        for (const auto& img : orbit)
            p += Poly::monomial(n, Monomial{img, zero}, FieldScalar(1));
        out.push_back(std::move(p));
    }
    return out;
}

void suite_twist_lemma(Runner& r, int n, const FieldScalar& kappa) {
    const SkewOperator E = idempotent(n, IdempotentKind::triv);
    const SkewOperator Es = idempotent(n, IdempotentKind::sign);
    const SkewOperator d2 = SkewOperator::delta_power(n, 2);
    const SkewOperator d2i = SkewOperator::delta_power(n, -2);

    for (int deg = 1; deg <= 3; ++deg) {
        int idx = 0;
        for (const Poly& p : symmetrized_monomials(n, deg)) {
            std::string tag = "deg" + std::to_string(deg) + "_" + std::to_string(idx++);
            SkewOperator pe = SkewOperator::coefficient(LocFrac(p, 0)) * E;
            SkewOperator pes = SkewOperator::coefficient(LocFrac(p, 0)) * Es;
            r.op_zero("phi_on_" + tag, [&] { return phi_twist(pe) - pes; });
            r.op_zero("conjugation_fixes_" + tag, [&] { return d2i * pes * d2 - pes; });
        }
    }

    // nabla^2 part, via the parameter-shift chain in the proof:
    // delta^-2 nabla^2_{-k} e_- delta^2 = delta^-1 nabla^2_{-k-1} e delta.
    SkewOperator A = nabla2(CherednikContext(n, -kappa)) * Es;
    SkewOperator B = nabla2(CherednikContext(n, -kappa - FieldScalar(1))) * E;
    r.op_zero("heckman_shifted", [&] {
        return SkewOperator::delta_power(n, -1) * A * SkewOperator::delta_power(n, 1) - B;
    });
    r.op_zero("twist_chain", [&] {
        return d2i * A * d2 -
               SkewOperator::delta_power(n, -1) * B * SkewOperator::delta_power(n, 1);
    });
}

void gr_suite(Runner& r, int n, Side side, const SuiteOptions& opt, const FieldScalar& kappa) {
    auto start = Clock::now();
    r.note("  building spanning set...");
    std::vector<SkewOperator> spanning =
        side == Side::Q ? q_spanning_set(n, opt.m, opt.bounds, opt.slack, kappa)
                        : p_spanning_set(n, opt.m, opt.bounds, opt.slack, kappa);
    r.note("  " + std::to_string(spanning.size()) + " generators in " +
           std::to_string(ms_since(start)) + " ms; computing symbols...");
    SymbolTable table = gr_dimension_table(spanning, n);
    r.note("  comparing with targets...");
    GrComparison cmp = compare_with_target(table, n, opt.m, side, opt.bounds, opt.slack);

    auto cell_list = [&](CellStatus status) {
        std::string out;
        for (const auto& [bid, cell] : cmp.table)
            if (cell.status == status)
                out += bid_str(bid) + " span " + std::to_string(cell.span_dim) + " target " +
                       std::to_string(cell.target_dim) + "; ";
        return out;
    };

    r.boolean("no_overflow", [&] {
        bool ok = !cmp.any_overflow();
        return std::make_pair(ok, ok ? "no overflow at any bidegree" : cell_list(CellStatus::overflow));
    });
    r.boolean("symbols_contained_in_target", [&] {
        std::string bad;
        for (const auto& [bid, cell] : cmp.table)
            if (!cell.contained) bad += bid_str(bid) + "; ";
        return std::make_pair(bad.empty(), bad.empty() ? "all symbols in target span" : bad);
    });
    r.boolean("trusted_region_match", [&] {
        bool ok = cmp.trusted_region_match();
        std::string detail;
        if (ok) {
            detail = "match on 0<=i<=" + std::to_string(opt.bounds.dx) +
                     ", 0<=j<=" + std::to_string(opt.bounds.dy);
        } else {
            for (const auto& [bid, cell] : cmp.table)
                if (bid.first >= 0 && bid.first <= opt.bounds.dx && bid.second >= 0 &&
                    bid.second <= opt.bounds.dy && cell.status != CellStatus::match)
                    detail += bid_str(bid) + " span " + std::to_string(cell.span_dim) + " target " +
                              std::to_string(cell.target_dim) + "; ";
        }
        return std::make_pair(ok, detail);
    });
    r.boolean("deficits_outside_trusted_region", [&] {
        // informational: deficits beyond the bounds are truncation artifacts
        std::string out = cell_list(CellStatus::deficit);
        return std::make_pair(true, out.empty() ? "none" : "reported only: " + out);
    });
}

void suite_good_values(Runner& r, int n, const FieldScalar&) {
    r.boolean("grid_agrees_with_definition", [&] {
        std::string bad;
        // independent enumeration of C cap (-1, 0)
        std::vector<Rational> excluded;
        for (int b = 2; b <= n; ++b)
            for (int a = -(b - 1); a <= -1; ++a) {
                Rational x(a, b);
                x.canonicalize();
                excluded.push_back(x);
            }
        int points = 0;
        for (int p = -6; p <= 6; ++p)
            for (int q = 1; q <= 4; ++q) {
                Rational x(p, q);
                x.canonicalize();
                bool expected = true;
                for (const Rational& ex : excluded)
                    if (x == ex) expected = false;
                if (is_good(x, n) != expected)
                    bad += rational_str(x) + "; ";
                ++points;
            }
        return std::make_pair(bad.empty(),
                              bad.empty() ? std::to_string(points) + " grid points agree" : bad);
    });
    if (n == 2) {
        r.boolean("minus_half_not_good", [&] {
            return std::make_pair(!is_good(Rational(-1, 2), 2), std::string("-1/2 at n=2"));
        });
        r.boolean("half_good", [&] {
            return std::make_pair(is_good(Rational(1, 2), 2), std::string("1/2 at n=2"));
        });
    }
}

} // namespace

bool CheckReport::passed() const {
    for (const Check& c : checks)
        if (c.status == CheckStatus::fail) return false;
    return true;
}

std::string CheckReport::to_json() const {
    nlohmann::ordered_json j;
    j["suite"] = suite;
    j["n"] = n;
    j["param"]["mode"] = c_value ? "rational" : "formal";
    if (c_value) j["param"]["value"] = rational_str(*c_value);
    j["checks"] = nlohmann::ordered_json::array();
    for (const Check& c : checks) {
        nlohmann::ordered_json jc;
        jc["name"] = c.name;
        jc["status"] = c.status == CheckStatus::pass ? "pass"
                       : c.status == CheckStatus::fail ? "fail"
                                                       : "skip";
        jc["detail"] = c.detail;
        jc["ms"] = c.ms;
        j["checks"].push_back(std::move(jc));
    }
    return j.dump(2);
}

std::string CheckReport::to_text() const {
    std::ostringstream out;
    out << "suite " << suite << " (n=" << n << ", c="
        << (c_value ? rational_str(*c_value) : std::string("formal")) << ")\n";
    for (const Check& c : checks)
        out << "  [" << (c.status == CheckStatus::pass ? "pass" : c.status == CheckStatus::fail ? "FAIL" : "skip")
            << "] " << c.name << ": " << c.detail << " (" << c.ms << " ms)\n";
    out << (passed() ? "PASSED" : "FAILED") << "\n";
    return out.str();
}

std::vector<std::string> suite_names() {
    return {"dunkl_commute", "pbw_slices", "heckman",  "cm_appendix", "sc5_radial",
            "twist_lemma",   "qgr_main",   "pgr_main", "good_values"};
}

CheckReport run_suite(const std::string& name, int n, const SuiteOptions& options) {
    if (n < 2) throw ShapeError("run_suite: n must be at least 2");
    CheckReport rep;
    rep.suite = name;
    rep.n = n;
    rep.c_value = options.c_value;
    Runner r{rep, options.progress};
    r.note("suite " + name + " (n=" + std::to_string(n) + ")");
    FieldScalar kappa = suite_parameter(options);

    if (name == "dunkl_commute")
        suite_dunkl_commute(r, n, kappa);
    else if (name == "pbw_slices")
        suite_pbw_slices(r, n, kappa);
    else if (name == "heckman")
        suite_heckman(r, n, kappa);
    else if (name == "cm_appendix")
        suite_cm_appendix(r, n, kappa);
    else if (name == "sc5_radial")
        suite_sc5_radial(r, n, kappa);
    else if (name == "twist_lemma")
        suite_twist_lemma(r, n, kappa);
    else if (name == "qgr_main")
        gr_suite(r, n, Side::Q, options, kappa);
    else if (name == "pgr_main")
        gr_suite(r, n, Side::P, options, kappa);
    else if (name == "good_values")
        suite_good_values(r, n, kappa);
    else
        throw UnknownSuite("unknown suite: " + name);
    return rep;
}

} // namespace dunkl
