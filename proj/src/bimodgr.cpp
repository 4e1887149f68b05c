#include "dunkl/bimodgr.hpp"

#include <algorithm>
#include <functional>

namespace dunkl {

namespace {

long factorial(int n) {
    long f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

std::vector<std::vector<int>> exponents_up_to(int n, int maxdeg) {
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
    rec(0, std::max(maxdeg, 0));
    // stable enumeration order: ascending total degree, then as generated
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        int ta = 0, tb = 0;
        for (int v : a) ta += v;
        for (int v : b) tb += v;
        return ta < tb;
    });
    return out;
}

int total(const std::vector<int>& v) {
    int t = 0;
    for (int x : v) t += x;
    return t;
}

std::vector<int> perm_apply(const Perm& w, const std::vector<int>& v) {
    std::vector<int> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[static_cast<std::size_t>(w(static_cast<int>(i)))] = v[i];
    return out;
}

/// e * u computed cheaply by group averaging.
SkewOperator avg_left(const SkewOperator& u, const std::vector<Perm>& group) {
    SkewOperator acc(u.n());
    for (const Perm& w : group) acc += u.mul_group_left(w);
    return acc.scaled(FieldScalar(Rational(1, factorial(u.n()))));
}

SkewOperator avg_right(const SkewOperator& u, const std::vector<Perm>& group) {
    SkewOperator acc(u.n());
    for (const Perm& w : group) acc += u.mul_group_right(w);
    return acc.scaled(FieldScalar(Rational(1, factorial(u.n()))));
}

/// Lattice of Dunkl powers D_kappa(y)^b for |b| <= maxdeg.
std::map<std::vector<int>, SkewOperator> dunkl_powers(const CherednikContext& ctx, int maxdeg) {
    std::map<std::vector<int>, SkewOperator> pow;
    std::vector<SkewOperator> gens;
    for (int i = 0; i < ctx.n; ++i) gens.push_back(dunkl(ctx, i));
    for (const auto& b : exponents_up_to(ctx.n, maxdeg)) {
        if (total(b) == 0) {
            pow.emplace(b, SkewOperator::one(ctx.n));
            continue;
        }
        std::vector<int> prev = b;
        int i = 0;
        while (prev[static_cast<std::size_t>(i)] == 0) ++i;
        --prev[static_cast<std::size_t>(i)];
        pow.emplace(b, pow.at(prev) * gens[static_cast<std::size_t>(i)]);
    }
    return pow;
}

struct ChainSpec {
    Side side;
    int n, m;
    int factor_a_cap, factor_b_cap;
    int total_a_cap, total_b_cap;
    std::vector<FieldScalar> params; // Dunkl parameter per factor, left to right
};

/// Enumerates sandwiched factor chains. Chains equivalent under the diagonal
/// W-conjugation (which permutes every factor's exponents at once and only
/// changes the sign) are emitted once.
std::vector<SkewOperator> spanning_chain(const ChainSpec& spec) {
    const int n = spec.n;
    const std::vector<Perm> group = Perm::all(n);
    std::vector<Perm> nontrivial;
    for (const Perm& w : group)
        if (!w.is_identity()) nontrivial.push_back(w);

    std::vector<std::map<std::vector<int>, SkewOperator>> powers;
    for (int f = 0; f < spec.m; ++f)
        powers.push_back(dunkl_powers(CherednikContext(n, spec.params[static_cast<std::size_t>(f)]),
                                      spec.factor_b_cap));

    const auto a_choices = exponents_up_to(n, spec.factor_a_cap);
    const auto b_choices = exponents_up_to(n, spec.factor_b_cap);
    const SkewOperator delta1 = SkewOperator::delta_power(n, 1);

    std::vector<SkewOperator> out;
    std::function<void(int, const SkewOperator*, int, int, const std::vector<Perm>&)> rec =
        [&](int f, const SkewOperator* prefix, int sumA, int sumB, const std::vector<Perm>& alive) {
            if (f == spec.m) {
                if (prefix && !prefix->is_zero()) out.push_back(*prefix);
                return;
            }
            for (const auto& a : a_choices) {
                if (sumA + total(a) > spec.total_a_cap) continue;
                for (const auto& b : b_choices) {
                    if (sumB + total(b) > spec.total_b_cap) continue;
                    // canonicity under the diagonal conjugation action
                    std::vector<Perm> next_alive;
                    bool canonical = true;
                    for (const Perm& w : alive) {
                        std::vector<int> wa = perm_apply(w, a), wb = perm_apply(w, b);
                        if (std::tie(wa, wb) < std::tie(a, b)) { canonical = false; break; }
                        if (wa == a && wb == b) next_alive.push_back(w);
                    }
                    if (!canonical) continue;

                    SkewOperator core = powers[static_cast<std::size_t>(f)]
                                            .at(b)
                                            .mul_coeff_left(LocFrac(
                                                Poly::monomial(n, Monomial{a, std::vector<int>(
                                                                                  static_cast<std::size_t>(n), 0)},
                                                               FieldScalar(1)),
                                                spec.side == Side::Q ? 1 : 0));
                    if (spec.side == Side::P) core = core * delta1;
                    SkewOperator cur =
                        prefix ? avg_right(*prefix * core, group) : avg_right(avg_left(core, group), group);
                    if (cur.is_zero()) continue;
                    rec(f + 1, &cur, sumA + total(a), sumB + total(b), next_alive);
                }
            }
        };
    rec(0, nullptr, 0, 0, nontrivial);
    return out;
}

std::vector<Poly> flatten_common_delta(const std::vector<LocPoly>& rows) {
    int K = 0;
    for (const LocPoly& r : rows) K = std::max(K, r.dpow());
    std::vector<Poly> out;
    out.reserve(rows.size());
    for (const LocPoly& r : rows) {
        Poly p = r.num();
        if (p.is_zero()) continue;
        const Poly del = discriminant(p.n());
        for (int k = r.dpow(); k < K; ++k) p = p * del;
        out.push_back(std::move(p));
    }
    return out;
}

} // namespace

std::vector<SkewOperator> q_spanning_set(int n, int m, GrBounds bounds, int slack,
                                         const FieldScalar& kappa) {
    if (m < 1) throw ShapeError("q_spanning_set: m must be positive");
    const int N = n * (n - 1) / 2;
    ChainSpec spec;
    spec.side = Side::Q;
    spec.n = n;
    spec.m = m;
    spec.factor_a_cap = bounds.dx + N + slack;
    spec.factor_b_cap = bounds.dy + slack;
    spec.total_a_cap = bounds.dx + N * m + slack;
    spec.total_b_cap = bounds.dy + slack;
    for (int f = 0; f < m; ++f)
        spec.params.push_back(kappa - FieldScalar(m - 1 - f));
    return spanning_chain(spec);
}

std::vector<SkewOperator> p_spanning_set(int n, int m, GrBounds bounds, int slack,
                                         const FieldScalar& kappa) {
    if (m < 1) throw ShapeError("p_spanning_set: m must be positive");
    const int N = n * (n - 1) / 2;
    ChainSpec spec;
    spec.side = Side::P;
    spec.n = n;
    spec.m = m;
    spec.factor_a_cap = std::max(bounds.dx - N, 0) + slack;
    spec.factor_b_cap = bounds.dy + slack;
    spec.total_a_cap = std::max(bounds.dx - N * m, 0) + slack;
    spec.total_b_cap = bounds.dy + slack;
    for (int f = 0; f < m; ++f)
        spec.params.push_back(kappa - FieldScalar(f));
    return spanning_chain(spec);
}

DimensionTable SymbolTable::dimensions() const {
    DimensionTable out;
    for (const auto& [bid, cell_rows] : rows) out.dims[bid] = locpoly_rank(cell_rows);
    return out;
}

SymbolTable gr_dimension_table(const std::vector<SkewOperator>& spanning, int n) {
    const int N = n * (n - 1) / 2;
    SymbolTable table;
    table.n = n;
    for (std::size_t idx = 0; idx < spanning.size(); ++idx) {
        LocPoly sym;
        try {
            sym = spanning[idx].spherical_scalar_symbol();
        } catch (const NotSpherical& ex) {
            throw NotSpherical("generator " + std::to_string(idx) + ": " + ex.what());
        }
        for (const auto& [bid, comp] : sym.num().bidegree_components()) {
            LocPoly piece(comp, sym.dpow()); // renormalizes if delta divides
            Bidegree cell{bid.first - sym.dpow() * N, bid.second};
            table.rows[cell].push_back(std::move(piece));
        }
    }
    return table;
}

int locpoly_rank(const std::vector<LocPoly>& rows) {
    PolyEchelon ech;
    std::vector<Poly> flat = flatten_common_delta(rows);
    for (Poly& p : flat) ech.insert(std::move(p));
    return ech.rank();
}

bool GrComparison::any_overflow() const {
    for (const auto& [bid, cell] : table)
        if (cell.status == CellStatus::overflow) return true;
    return false;
}

bool GrComparison::all_contained() const {
    for (const auto& [bid, cell] : table)
        if (!cell.contained) return false;
    return true;
}

bool GrComparison::trusted_region_match() const {
    for (const auto& [bid, cell] : table)
        if (bid.first >= 0 && bid.first <= bounds.dx && bid.second >= 0 && bid.second <= bounds.dy &&
            cell.status != CellStatus::match)
            return false;
    return true;
}

GrComparison compare_with_target(const SymbolTable& table, int n, int m, Side side,
                                 GrBounds bounds, int slack) {
    const int N = n * (n - 1) / 2;
    GrComparison cmp;
    cmp.n = n;
    cmp.m = m;
    cmp.side = side;
    cmp.bounds = bounds;
    cmp.slack = slack;

    std::vector<Bidegree> cells;
    const int imin = side == Side::Q ? -m * N : 0;
    for (int i = imin; i <= bounds.dx; ++i)
        for (int j = 0; j <= bounds.dy; ++j) cells.push_back({i, j});
    for (const auto& [bid, r] : table.rows)
        if (std::find(cells.begin(), cells.end(), bid) == cells.end()) cells.push_back(bid);

    const Poly del = discriminant(n);
    for (const Bidegree& cell : cells) {
        GrCell rec;
        const Bidegree tgt_bid =
            side == Side::Q ? Bidegree{cell.first + m * N, cell.second}
                            : Bidegree{cell.first - m * N, cell.second};
        std::vector<LocPoly> target_rows;
        if (tgt_bid.first >= 0 && tgt_bid.second >= 0) {
            for (const Poly& a : a_power_basis(n, m, tgt_bid).basis) {
                if (side == Side::Q) {
                    target_rows.emplace_back(a, m);
                } else {
                    Poly p = a;
                    for (int k = 0; k < m; ++k) p = p * del;
                    target_rows.emplace_back(p, 0);
                }
            }
        }
        rec.target_dim = static_cast<int>(target_rows.size());

        auto it = table.rows.find(cell);
        const std::vector<LocPoly> empty;
        const std::vector<LocPoly>& span = it == table.rows.end() ? empty : it->second;
        rec.span_dim = locpoly_rank(span);

        // membership: adjoining a symbol to the target basis must not grow rank
        std::vector<LocPoly> all = target_rows;
        all.insert(all.end(), span.begin(), span.end());
        std::vector<Poly> flat = flatten_common_delta(all);
        PolyEchelon ech;
        std::size_t k = 0;
        rec.contained = true;
        for (Poly& p : flat) {
            bool grew = ech.insert(std::move(p));
            if (k >= target_rows.size() && grew) rec.contained = false;
            ++k;
        }

        rec.status = rec.span_dim > rec.target_dim  ? CellStatus::overflow
                     : rec.span_dim == rec.target_dim ? CellStatus::match
                                                      : CellStatus::deficit;
        if (rec.span_dim == 0 && rec.target_dim == 0) {
            // empty cell outside both spans: drop from the report
            continue;
        }
        cmp.table[cell] = rec;
    }
    return cmp;
}

} // namespace dunkl
