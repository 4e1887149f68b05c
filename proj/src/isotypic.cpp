#include "dunkl/isotypic.hpp"

#include <functional>
#include <tuple>

namespace dunkl {

namespace {

long factorial(int n) {
    long f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

/// All exponent vectors of length n with the given total degree.
void exponents_of_degree(int n, int deg, std::vector<std::vector<int>>& out) {
    std::vector<int> cur(static_cast<std::size_t>(n), 0);
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == n - 1) {
            cur[static_cast<std::size_t>(pos)] = left;
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            cur[static_cast<std::size_t>(pos)] = v;
            rec(pos + 1, left - v);
        }
    };
    if (n == 0) return;
    rec(0, deg);
}

} // namespace

Poly PolyEchelon::reduce(Poly p) const {
    bool changed = true;
    while (changed && !p.is_zero()) {
        changed = false;
        for (const auto& [m, coeff] : p.terms()) {
            auto it = rows_.find(m);
            if (it == rows_.end()) continue;
            p += it->second.scaled(-coeff);
            changed = true;
            break;
        }
    }
    return p;
}

bool PolyEchelon::insert(Poly p) {
    p = reduce(std::move(p));
    if (p.is_zero()) return false;
    const auto& lead = *p.terms().begin();
    Poly row = p.scaled(lead.second.inverse());
    rows_.emplace(lead.first, std::move(row));
    return true;
}

bool PolyEchelon::in_span(Poly p) const { return reduce(std::move(p)).is_zero(); }

std::vector<Poly> PolyEchelon::basis() const {
    std::vector<Poly> out;
    out.reserve(rows_.size());
    for (const auto& [m, row] : rows_) out.push_back(row);
    return out;
}

IsotypicBasis isotypic_basis(int n, Character character, Bidegree bidegree) {
    std::vector<std::vector<int>> xs, ys;
    exponents_of_degree(n, bidegree.first, xs);
    exponents_of_degree(n, bidegree.second, ys);
    const std::vector<Perm> group = Perm::all(n);
    FieldScalar inv_fact(Rational(1, factorial(n)));

    PolyEchelon ech;
    for (const auto& xe : xs)
        for (const auto& ye : ys) {
            Poly mono = Poly::monomial(n, Monomial{xe, ye}, FieldScalar(1));
            Poly proj(n);
            for (const Perm& w : group) {
                FieldScalar s = inv_fact;
                if (character == Character::sign && w.sign() < 0) s = -s;
                proj += mono.group_act(w).scaled(s);
            }
            if (!proj.is_zero()) ech.insert(std::move(proj));
        }
    return IsotypicBasis{n, character, bidegree, ech.basis()};
}

const IsotypicBasis& a_power_basis(int n, int m, Bidegree bidegree) {
    if (m < 0) throw ShapeError("a_power_basis: m must be nonnegative");
    static std::map<std::tuple<int, int, int, int>, IsotypicBasis> memo;
    auto key = std::make_tuple(n, m, bidegree.first, bidegree.second);
    auto hit = memo.find(key);
    if (hit != memo.end()) return hit->second;

    IsotypicBasis result{n, m % 2 == 0 ? Character::triv : Character::sign, bidegree, {}};
    if (m <= 1) {
        result.basis = isotypic_basis(n, m == 0 ? Character::triv : Character::sign, bidegree).basis;
    } else {
        PolyEchelon ech;
        for (int i1 = 0; i1 <= bidegree.first; ++i1)
            for (int j1 = 0; j1 <= bidegree.second; ++j1) {
                const IsotypicBasis& left = a_power_basis(n, 1, {i1, j1});
                if (left.basis.empty()) continue;
                const IsotypicBasis& right =
                    a_power_basis(n, m - 1, {bidegree.first - i1, bidegree.second - j1});
                for (const Poly& p : left.basis)
                    for (const Poly& q : right.basis) ech.insert(p * q);
            }
        result.basis = ech.basis();
    }
    return memo.emplace(key, std::move(result)).first->second;
}

int exact_rank(const std::vector<std::vector<FieldScalar>>& rows) {
    if (rows.empty()) return 0;
    const std::size_t width = rows.front().size();
    for (const auto& r : rows)
        if (r.size() != width) throw ShapeError("exact_rank: ragged input");

    std::vector<std::vector<FieldScalar>> pivots; // echelon rows, lead col ascending
    std::vector<std::size_t> lead_cols;
    int rank = 0;
    for (const auto& input : rows) {
        std::vector<FieldScalar> r = input;
        for (std::size_t k = 0; k < pivots.size(); ++k) {
            const FieldScalar& v = r[lead_cols[k]];
            if (v.is_zero()) continue;
            FieldScalar f = v;
            for (std::size_t c = lead_cols[k]; c < width; ++c)
                r[c] -= f * pivots[k][c];
        }
        std::size_t lead = width;
        for (std::size_t c = 0; c < width; ++c)
            if (!r[c].is_zero()) { lead = c; break; }
        if (lead == width) continue;
        FieldScalar inv = r[lead].inverse();
        for (std::size_t c = lead; c < width; ++c) r[c] *= inv;
        // keep pivot rows sorted by lead column so reduction is one pass
        std::size_t pos = 0;
        while (pos < lead_cols.size() && lead_cols[pos] < lead) ++pos;
        pivots.insert(pivots.begin() + static_cast<long>(pos), std::move(r));
        lead_cols.insert(lead_cols.begin() + static_cast<long>(pos), lead);
        ++rank;
    }
    return rank;
}

namespace {

/// Coefficient of q^deg in prod_k 1/(1 - q^{cycle_k}).
long cycle_series_coeff(const std::vector<int>& cycles, int deg) {
    std::vector<long> coef(static_cast<std::size_t>(deg) + 1, 0);
    coef[0] = 1;
    for (int len : cycles)
        for (int d = len; d <= deg; ++d)
            coef[static_cast<std::size_t>(d)] += coef[static_cast<std::size_t>(d - len)];
    return coef[static_cast<std::size_t>(deg)];
}

std::vector<int> cycle_lengths(const Perm& w) {
    std::vector<int> out;
    std::vector<bool> seen(static_cast<std::size_t>(w.n()), false);
    for (int i = 0; i < w.n(); ++i) {
        if (seen[static_cast<std::size_t>(i)]) continue;
        int len = 0, j = i;
        while (!seen[static_cast<std::size_t>(j)]) {
            seen[static_cast<std::size_t>(j)] = true;
            j = w(j);
            ++len;
        }
        out.push_back(len);
    }
    return out;
}

} // namespace

int molien_dimension(int n, Character character, Bidegree bidegree) {
    Rational acc(0);
    for (const Perm& w : Perm::all(n)) {
        std::vector<int> cycles = cycle_lengths(w);
        long cq = cycle_series_coeff(cycles, bidegree.first);
        long ct = cycle_series_coeff(cycles, bidegree.second);
        long chi = (character == Character::sign && w.sign() < 0) ? -1 : 1;
        acc += Rational(chi * cq * ct);
    }
    acc /= factorial(n);
    acc.canonicalize();
    if (acc.get_den() != 1) throw ShapeError("molien_dimension: non-integer average");
    return static_cast<int>(acc.get_num().get_si());
}

} // namespace dunkl
