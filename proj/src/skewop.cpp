#include "dunkl/skewop.hpp"

#include <numeric>
#include <sstream>

namespace dunkl {

namespace {

int total(const std::vector<int>& e) { return std::accumulate(e.begin(), e.end(), 0); }

/// Advance a multi-index 0 <= beta <= bound in odometer order.
bool next_below(std::vector<int>& beta, const std::vector<int>& bound) {
    for (std::size_t i = 0; i < beta.size(); ++i) {
        if (beta[i] < bound[i]) {
            ++beta[i];
            for (std::size_t j = 0; j < i; ++j) beta[j] = 0;
            return true;
        }
    }
    return false;
}

BigInt multi_binomial(const std::vector<int>& a, const std::vector<int>& b) {
    BigInt r(1), t;
    for (std::size_t i = 0; i < a.size(); ++i) {
        mpz_bin_uiui(t.get_mpz_t(), static_cast<unsigned long>(a[i]),
                     static_cast<unsigned long>(b[i]));
        r *= t;
    }
    return r;
}

} // namespace

LocPoly::LocPoly(Poly num, int dpow) : num_(std::move(num)), dpow_(dpow) {
    if (dpow_ < 0) throw ShapeError("negative delta power");
    normalize();
}

void LocPoly::normalize() {
    if (num_.is_zero()) {
        dpow_ = 0;
        return;
    }
    Poly d = discriminant(num_.n());
    while (dpow_ > 0) {
        auto q = num_.divide_exact(d);
        if (!q) break;
        num_ = std::move(*q);
        --dpow_;
    }
}

LocPoly LocPoly::operator+(const LocPoly& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    int k = std::max(dpow_, o.dpow_);
    Poly d = discriminant(n());
    Poly a = num_, b = o.num_;
    for (int i = dpow_; i < k; ++i) a = a * d;
    for (int i = o.dpow_; i < k; ++i) b = b * d;
    return LocPoly(a + b, k);
}

LocPoly LocPoly::operator*(const LocPoly& o) const {
    return LocPoly(num_ * o.num_, dpow_ + o.dpow_);
}

LocPoly LocPoly::operator-() const {
    LocPoly r = *this;
    r.num_ = -r.num_;
    return r;
}

LocPoly LocPoly::scaled(const FieldScalar& s) const {
    if (s.is_zero()) return LocPoly();
    LocPoly r = *this;
    r.num_ = r.num_.scaled(s);
    return r;
}

LocPoly LocPoly::group_act(const Perm& w) const {
    LocPoly r;
    r.num_ = num_.group_act(w);
    if (dpow_ % 2 != 0 && w.sign() < 0) r.num_ = -r.num_;
    r.dpow_ = is_zero() ? 0 : dpow_;
    return r;
}

std::string LocPoly::str() const {
    if (dpow_ == 0) return num_.str();
    return "(" + num_.str() + ") / del^" + std::to_string(dpow_);
}

void SymbolElement::add(const Perm& w, const LocPoly& f) {
    if (f.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, f);
    } else {
        it->second = it->second + f;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SymbolElement SymbolElement::operator+(const SymbolElement& o) const {
    SymbolElement r = *this;
    for (const auto& [w, f] : o.terms_) r.add(w, f);
    return r;
}

SymbolElement SymbolElement::operator*(const SymbolElement& o) const {
    SymbolElement r(n_);
    for (const auto& [w, f] : terms_)
        for (const auto& [s, g] : o.terms_) r.add(w.compose(s), f * g.group_act(w));
    return r;
}

std::string SymbolElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, f] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << f.str() << ")";
        if (!w.is_identity()) {
            os << "*[";
            for (int i = 0; i < w.n(); ++i) os << (i ? "," : "") << (w(i) + 1);
            os << "]";
        }
    }
    return os.str();
}

bool SkewOperator::TermKey::operator<(const TermKey& o) const {
    int ta = total(dexp), tb = total(o.dexp);
    if (ta != tb) return ta < tb;
    if (dexp != o.dexp) return dexp > o.dexp;
    return w < o.w;
}

SkewOperator SkewOperator::one(int n) { return scalar(n, FieldScalar(1)); }

SkewOperator SkewOperator::scalar(int n, const FieldScalar& v) {
    return coefficient(LocFrac::constant(n, v));
}

SkewOperator SkewOperator::coefficient(LocFrac f) {
    SkewOperator r(f.n());
    TermKey key{std::vector<int>(static_cast<std::size_t>(f.n()), 0), Perm::identity(f.n())};
    if (!f.is_zero()) r.terms_.emplace(std::move(key), std::move(f));
    return r;
}

SkewOperator SkewOperator::partial(int n, int i) {
    if (i < 0 || i >= n) throw ArityMismatch("partial index out of range");
    SkewOperator r(n);
    TermKey key{std::vector<int>(static_cast<std::size_t>(n), 0), Perm::identity(n)};
    key.dexp[static_cast<std::size_t>(i)] = 1;
    r.terms_.emplace(std::move(key), LocFrac::one(n));
    return r;
}

SkewOperator SkewOperator::group(const Perm& w) {
    SkewOperator r(w.n());
    TermKey key{std::vector<int>(static_cast<std::size_t>(w.n()), 0), w};
    r.terms_.emplace(std::move(key), LocFrac::one(w.n()));
    return r;
}

SkewOperator SkewOperator::delta_power(int n, int k) {
    if (k >= 0) {
        Poly p = Poly::constant(n, FieldScalar(1));
        Poly d = discriminant(n);
        for (int i = 0; i < k; ++i) p = p * d;
        return coefficient(LocFrac(std::move(p), 0));
    }
    return coefficient(LocFrac::delta_inverse_power(n, -k));
}

void SkewOperator::check_arity(const SkewOperator& o) const {
    if (n_ != o.n_) throw ArityMismatch("operator arity mismatch");
}

void SkewOperator::add_term(const TermKey& key, const LocFrac& coeff) {
    if (coeff.is_zero()) return;
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, coeff);
    } else {
        it->second = it->second + coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SkewOperator SkewOperator::operator+(const SkewOperator& o) const {
    check_arity(o);
    SkewOperator r = *this;
    for (const auto& [k, f] : o.terms_) r.add_term(k, f);
    return r;
}

SkewOperator& SkewOperator::operator+=(const SkewOperator& o) {
    check_arity(o);
    for (const auto& [k, f] : o.terms_) add_term(k, f);
    return *this;
}

SkewOperator SkewOperator::operator-(const SkewOperator& o) const { return *this + (-o); }

SkewOperator SkewOperator::operator-() const {
    SkewOperator r(n_);
    for (const auto& [k, f] : terms_) r.terms_.emplace(k, -f);
    return r;
}

SkewOperator SkewOperator::scaled(const FieldScalar& s) const {
    SkewOperator r(n_);
    if (s.is_zero()) return r;
    for (const auto& [k, f] : terms_) {
        LocFrac sf = f.scaled(s);
        if (!sf.is_zero()) r.terms_.emplace(k, std::move(sf));
    }
    return r;
}

SkewOperator SkewOperator::mul_coeff_left(const LocFrac& f) const {
    SkewOperator r(n_);
    for (const auto& [k, g] : terms_) r.add_term(k, f * g);
    return r;
}

SkewOperator SkewOperator::mul_group_left(const Perm& w) const {
    SkewOperator r(n_);
    for (const auto& [k, g] : terms_) {
        TermKey key{std::vector<int>(static_cast<std::size_t>(n_), 0), w.compose(k.w)};
        for (int i = 0; i < n_; ++i)
            key.dexp[static_cast<std::size_t>(w(i))] = k.dexp[static_cast<std::size_t>(i)];
        r.add_term(key, g.group_act(w));
    }
    return r;
}

SkewOperator SkewOperator::mul_group_right(const Perm& w) const {
    SkewOperator r(n_);
    for (const auto& [k, g] : terms_) r.add_term(TermKey{k.dexp, k.w.compose(w)}, g);
    return r;
}

SkewOperator SkewOperator::operator*(const SkewOperator& o) const {
    check_arity(o);
    SkewOperator r(n_);
    const std::size_t un = static_cast<std::size_t>(n_);
    for (const auto& [ka, fa] : terms_) {
        bool flat = total(ka.dexp) == 0;
        for (const auto& [kb, fb] : o.terms_) {
            LocFrac moved = ka.w.is_identity() ? fb : fb.group_act(ka.w);
            // d^b conjugated through w.
            TermKey key{std::vector<int>(un, 0), ka.w.compose(kb.w)};
            for (int i = 0; i < n_; ++i)
                key.dexp[static_cast<std::size_t>(ka.w(i))] = kb.dexp[static_cast<std::size_t>(i)];
            if (flat) {
                r.add_term(key, fa * moved);
                continue;
            }
            // Leibniz: d^a h = sum_{beta <= a} C(a, beta) d^{a-beta}(h) d^beta.
            std::vector<int> beta(un, 0);
            const std::vector<int> wb = key.dexp;
            do {
                LocFrac der = moved;
                for (int i = 0; i < n_ && !der.is_zero(); ++i)
                    for (int k = 0; k < ka.dexp[static_cast<std::size_t>(i)] -
                                            beta[static_cast<std::size_t>(i)];
                         ++k)
                        der = der.derivative(i);
                if (der.is_zero()) continue;
                BigInt binom = multi_binomial(ka.dexp, beta);
                TermKey tk{wb, key.w};
                for (int i = 0; i < n_; ++i) tk.dexp[static_cast<std::size_t>(i)] += beta[static_cast<std::size_t>(i)];
                r.add_term(tk, (fa * der).scaled(FieldScalar(ZPoly(binom), ZPoly(1))));
            } while (next_below(beta, ka.dexp));
        }
    }
    return r;
}

LocFrac SkewOperator::apply(const LocFrac& f) const {
    if (f.n() != n_) throw ArityMismatch("operator/function arity mismatch");
    LocFrac acc(Poly(n_), 0);
    for (const auto& [k, g] : terms_) {
        LocFrac v = f.group_act(k.w);
        for (int i = 0; i < n_ && !v.is_zero(); ++i)
            for (int r = 0; r < k.dexp[static_cast<std::size_t>(i)]; ++r) v = v.derivative(i);
        acc += g * v;
    }
    return acc;
}

int SkewOperator::gamma_degree() const {
    int d = -1;
    for (const auto& [k, f] : terms_) d = std::max(d, total(k.dexp));
    return d;
}

SymbolElement SkewOperator::principal_symbol() const {
    if (is_zero()) throw ZeroOperator("principal symbol of the zero operator");
    int top = gamma_degree();
    SymbolElement s(n_);
    for (const auto& [k, f] : terms_) {
        if (total(k.dexp) != top) continue;
        Monomial m{std::vector<int>(static_cast<std::size_t>(n_), 0), k.dexp};
        s.add(k.w, LocPoly(f.num() * Poly::monomial(n_, m, FieldScalar(1)), f.dpow()));
    }
    return s;
}

SkewOperator SkewOperator::conjugate_by_delta_power(const FieldScalar& w) const {
    SkewOperator out(n_);
    if (is_zero()) return out;
    if (w.is_zero()) return *this;
    Poly d = discriminant(n_);
    // T_i = d_i + w (d_i delta)/delta.
    std::vector<SkewOperator> subst;
    for (int i = 0; i < n_; ++i) {
        SkewOperator t = partial(n_, i);
        LocFrac dlog(d.partial_derivative(Poly::Family::x, i), 1);
        t += coefficient(dlog.scaled(w));
        subst.push_back(std::move(t));
    }
    std::optional<BigInt> iw = w.integer_value();
    std::map<std::vector<int>, SkewOperator> cache;
    cache.emplace(std::vector<int>(static_cast<std::size_t>(n_), 0), one(n_));
    // The substituted generators commute, so powers can be built along any
    // chain through the exponent lattice.
    auto pow_prod = [&](const std::vector<int>& a) -> const SkewOperator& {
        auto it = cache.find(a);
        if (it != cache.end()) return it->second;
        std::vector<int> cur(static_cast<std::size_t>(n_), 0);
        const SkewOperator* acc = &cache.at(cur);
        for (int j = 0; j < n_; ++j)
            for (int k = 0; k < a[static_cast<std::size_t>(j)]; ++k) {
                ++cur[static_cast<std::size_t>(j)];
                auto cit = cache.find(cur);
                if (cit == cache.end())
                    cit = cache.emplace(cur, *acc * subst[static_cast<std::size_t>(j)]).first;
                acc = &cit->second;
            }
        return *acc;
    };
    for (const auto& [k, f] : terms_) {
        int sgn = k.w.sign();
        FieldScalar factor(1);
        if (sgn < 0) {
            if (!iw)
                throw OddPermutationUnderFormalTwist(
                    "conjugation by a formal delta power meets an odd permutation");
            if (mpz_odd_p(iw->get_mpz_t())) factor = FieldScalar(-1);
        }
        const SkewOperator& mid = pow_prod(k.dexp);
        out += mid.mul_coeff_left(f.scaled(factor)).mul_group_right(k.w);
    }
    return out;
}

SkewOperator SkewOperator::substitute_parameter(const FieldScalar& v) const {
    SkewOperator r(n_);
    for (const auto& [k, f] : terms_) r.add_term(k, f.substitute_parameter(v));
    return r;
}

SkewOperator SkewOperator::specialize_c(const Rational& r) const {
    SkewOperator out(n_);
    for (const auto& [k, f] : terms_) out.add_term(k, f.specialize_c(r));
    return out;
}

LocPoly SkewOperator::spherical_scalar_symbol() const {
    SymbolElement s = principal_symbol();
    const auto perms = Perm::all(n_);
    if (s.terms().size() != perms.size())
        throw NotSpherical("symbol is missing group components");
    const LocPoly* common = nullptr;
    for (const auto& [w, f] : s.terms()) {
        if (!common) {
            common = &f;
        } else if (f != *common) {
            throw NotSpherical("symbol group components differ");
        }
    }
    BigInt fact(1);
    for (int i = 2; i <= n_; ++i) fact *= i;
    LocPoly p = common->scaled(FieldScalar(ZPoly(fact), ZPoly(1)));
    for (const auto& w : perms)
        if (p.group_act(w) != p) throw NotSpherical("spherical scalar is not W-invariant");
    return p;
}

std::string SkewOperator::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, f] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << f.str() << ")";
        for (int i = 0; i < n_; ++i) {
            int e = k.dexp[static_cast<std::size_t>(i)];
            if (e > 0) {
                os << "*d" << (i + 1);
                if (e > 1) os << "^" << e;
            }
        }
        if (!k.w.is_identity()) {
            os << "*[";
            for (int i = 0; i < n_; ++i) os << (i ? "," : "") << (k.w(i) + 1);
            os << "]";
        }
    }
    return os.str();
}

} // namespace dunkl
