#include "dunkl/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace dunkl {

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (int v : img_) {
        if (v < 0 || v >= n() || seen[static_cast<std::size_t>(v)])
            throw ShapeError("not a permutation");
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Perm Perm::identity(int n) {
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 0);
    return Perm(std::move(img));
}

Perm Perm::transposition(int n, int i, int j) {
    Perm p = identity(n);
    std::swap(p.img_[static_cast<std::size_t>(i)], p.img_[static_cast<std::size_t>(j)]);
    return p;
}

Perm Perm::compose(const Perm& o) const {
    if (n() != o.n()) throw ArityMismatch("permutation arity mismatch");
    std::vector<int> img(img_.size());
    for (int i = 0; i < n(); ++i) img[static_cast<std::size_t>(i)] = (*this)(o(i));
    return Perm(std::move(img));
}

Perm Perm::inverse() const {
    std::vector<int> img(img_.size());
    for (int i = 0; i < n(); ++i) img[static_cast<std::size_t>((*this)(i))] = i;
    return Perm(std::move(img));
}

int Perm::sign() const {
    int s = 1;
    for (int i = 0; i < n(); ++i)
        for (int j = i + 1; j < n(); ++j)
            if ((*this)(i) > (*this)(j)) s = -s;
    return s;
}

bool Perm::is_identity() const {
    for (int i = 0; i < n(); ++i)
        if ((*this)(i) != i) return false;
    return true;
}

std::vector<Perm> Perm::all(int n) {
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 0);
    std::vector<Perm> out;
    do {
        out.emplace_back(img);
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

std::vector<std::pair<int, int>> Perm::transposition_factors() const {
    std::vector<std::pair<int, int>> out;
    std::vector<int> img(img_);
    // Selection-style factorization: left-multiplying by s(i, pos(i)) fixes i.
    for (int i = 0; i < n(); ++i) {
        if (img[static_cast<std::size_t>(i)] == i) continue;
        int j = i;
        while (img[static_cast<std::size_t>(j)] != i) ++j;
        std::swap(img[static_cast<std::size_t>(i)], img[static_cast<std::size_t>(j)]);
        out.emplace_back(i, j);
    }
    std::reverse(out.begin(), out.end());
    return out;
}

int Monomial::xdeg() const {
    return std::accumulate(xe.begin(), xe.end(), 0);
}

int Monomial::ydeg() const {
    return std::accumulate(ye.begin(), ye.end(), 0);
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r = *this;
    for (std::size_t i = 0; i < xe.size(); ++i) {
        r.xe[i] += o.xe[i];
        r.ye[i] += o.ye[i];
    }
    return r;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
    int axd = a.xdeg(), ayd = a.ydeg(), bxd = b.xdeg(), byd = b.ydeg();
    if (axd + ayd != bxd + byd) return axd + ayd < bxd + byd;
    if (axd != bxd) return axd > bxd;
    if (a.xe != b.xe) return a.xe > b.xe;
    return a.ye > b.ye;
}

Poly Poly::constant(int n, const FieldScalar& v) {
    Poly p(n);
    if (!v.is_zero())
        p.terms_.emplace(Monomial{std::vector<int>(static_cast<std::size_t>(n), 0),
                                  std::vector<int>(static_cast<std::size_t>(n), 0)},
                         v);
    return p;
}

Poly Poly::variable_x(int n, int i) {
    Monomial m{std::vector<int>(static_cast<std::size_t>(n), 0),
               std::vector<int>(static_cast<std::size_t>(n), 0)};
    m.xe[static_cast<std::size_t>(i)] = 1;
    return monomial(n, std::move(m), FieldScalar(1));
}

Poly Poly::variable_y(int n, int i) {
    Monomial m{std::vector<int>(static_cast<std::size_t>(n), 0),
               std::vector<int>(static_cast<std::size_t>(n), 0)};
    m.ye[static_cast<std::size_t>(i)] = 1;
    return monomial(n, std::move(m), FieldScalar(1));
}

Poly Poly::monomial(int n, Monomial m, FieldScalar coeff) {
    Poly p(n);
    if (!coeff.is_zero()) p.terms_.emplace(std::move(m), std::move(coeff));
    return p;
}

void Poly::check_arity(const Poly& o) const {
    if (n_ != o.n_) throw ArityMismatch("polynomial arity mismatch");
}

void Poly::add_term(const Monomial& m, const FieldScalar& coeff) {
    if (coeff.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, coeff);
    } else {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

FieldScalar Poly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? FieldScalar() : it->second;
}

FieldScalar Poly::constant_coeff() const {
    return coeff(Monomial{std::vector<int>(static_cast<std::size_t>(n_), 0),
                          std::vector<int>(static_cast<std::size_t>(n_), 0)});
}

Poly Poly::operator+(const Poly& o) const {
    check_arity(o);
    Poly r = *this;
    for (const auto& [m, v] : o.terms_) r.add_term(m, v);
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    check_arity(o);
    for (const auto& [m, v] : o.terms_) add_term(m, v);
    return *this;
}

Poly Poly::operator-(const Poly& o) const {
    check_arity(o);
    Poly r = *this;
    for (const auto& [m, v] : o.terms_) r.add_term(m, -v);
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    check_arity(o);
    Poly r(n_);
    for (const auto& [m1, v1] : terms_)
        for (const auto& [m2, v2] : o.terms_) r.add_term(m1 * m2, v1 * v2);
    return r;
}

Poly Poly::operator-() const {
    Poly r(n_);
    for (const auto& [m, v] : terms_) r.terms_.emplace(m, -v);
    return r;
}

Poly Poly::scaled(const FieldScalar& s) const {
    Poly r(n_);
    if (s.is_zero()) return r;
    for (const auto& [m, v] : terms_) {
        FieldScalar sv = v * s;
        if (!sv.is_zero()) r.terms_.emplace(m, std::move(sv));
    }
    return r;
}

Poly Poly::partial_derivative(Family f, int i) const {
    if (i < 0 || i >= n_) throw ArityMismatch("derivative index out of range");
    Poly r(n_);
    for (const auto& [m, v] : terms_) {
        const std::vector<int>& e = (f == Family::x) ? m.xe : m.ye;
        int k = e[static_cast<std::size_t>(i)];
        if (k == 0) continue;
        Monomial d = m;
        ((f == Family::x) ? d.xe : d.ye)[static_cast<std::size_t>(i)] = k - 1;
        r.add_term(d, v * FieldScalar(k));
    }
    return r;
}

Poly Poly::group_act(const Perm& w) const {
    if (w.n() != n_) throw ArityMismatch("permutation arity mismatch");
    Poly r(n_);
    for (const auto& [m, v] : terms_) {
        Monomial t{std::vector<int>(static_cast<std::size_t>(n_), 0),
                   std::vector<int>(static_cast<std::size_t>(n_), 0)};
        for (int i = 0; i < n_; ++i) {
            t.xe[static_cast<std::size_t>(w(i))] = m.xe[static_cast<std::size_t>(i)];
            t.ye[static_cast<std::size_t>(w(i))] = m.ye[static_cast<std::size_t>(i)];
        }
        r.terms_.emplace(std::move(t), v);
    }
    return r;
}

std::vector<std::pair<std::pair<int, int>, Poly>> Poly::bidegree_components() const {
    std::map<std::pair<int, int>, Poly> parts;
    for (const auto& [m, v] : terms_) {
        auto key = std::make_pair(m.xdeg(), m.ydeg());
        auto it = parts.find(key);
        if (it == parts.end()) it = parts.emplace(key, Poly(n_)).first;
        it->second.add_term(m, v);
    }
    return {parts.begin(), parts.end()};
}

int Poly::x_degree() const {
    int d = -1;
    for (const auto& [m, v] : terms_) d = std::max(d, m.xdeg());
    return d;
}

int Poly::y_degree() const {
    int d = -1;
    for (const auto& [m, v] : terms_) d = std::max(d, m.ydeg());
    return d;
}

bool Poly::x_only() const {
    for (const auto& [m, v] : terms_)
        if (m.ydeg() != 0) return false;
    return true;
}

bool Poly::is_bihomogeneous() const {
    return bidegree_components().size() <= 1;
}

std::optional<Poly> Poly::divide_exact(const Poly& d) const {
    if (d.is_zero()) throw DivisionByZero("polynomial division by zero");
    Poly rem = *this;
    Poly quot(n_);
    const auto& [dm, dv] = *d.terms_.rbegin(); // leading term in the fixed order
    while (!rem.is_zero()) {
        const auto& [rm, rv] = *rem.terms_.rbegin();
        Monomial q{std::vector<int>(static_cast<std::size_t>(n_), 0),
                   std::vector<int>(static_cast<std::size_t>(n_), 0)};
        for (int i = 0; i < n_; ++i) {
            int qx = rm.xe[static_cast<std::size_t>(i)] - dm.xe[static_cast<std::size_t>(i)];
            int qy = rm.ye[static_cast<std::size_t>(i)] - dm.ye[static_cast<std::size_t>(i)];
            if (qx < 0 || qy < 0) return std::nullopt;
            q.xe[static_cast<std::size_t>(i)] = qx;
            q.ye[static_cast<std::size_t>(i)] = qy;
        }
        Poly t = Poly::monomial(n_, q, rv / dv);
        quot += t;
        rem = rem - t * d;
    }
    return quot;
}

Poly Poly::substitute_parameter(const FieldScalar& v) const {
    Poly r(n_);
    for (const auto& [m, coef] : terms_) r.add_term(m, coef.substitute(v));
    return r;
}

Poly Poly::specialize_c(const Rational& r) const {
    Poly out(n_);
    for (const auto& [m, coef] : terms_) out.add_term(m, FieldScalar(coef.evaluate_at(r)));
    return out;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, v] : terms_) {
        std::string cs = v.str();
        bool neg = !cs.empty() && cs[0] == '-';
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        if (neg) cs = cs.substr(1);
        bool needs_parens = cs.find(' ') != std::string::npos || cs.find('/') != std::string::npos;
        std::ostringstream mono;
        for (int i = 0; i < n_; ++i) {
            int e = m.xe[static_cast<std::size_t>(i)];
            if (e > 0) {
                if (mono.tellp() > 0) mono << "*";
                mono << "x" << (i + 1);
                if (e > 1) mono << "^" << e;
            }
        }
        for (int i = 0; i < n_; ++i) {
            int e = m.ye[static_cast<std::size_t>(i)];
            if (e > 0) {
                if (mono.tellp() > 0) mono << "*";
                mono << "y" << (i + 1);
                if (e > 1) mono << "^" << e;
            }
        }
        std::string ms = mono.str();
        if (ms.empty()) {
            os << (needs_parens ? "(" + cs + ")" : cs);
        } else if (cs == "1") {
            os << ms;
        } else {
            os << (needs_parens ? "(" + cs + ")" : cs) << "*" << ms;
        }
    }
    return os.str();
}

Poly discriminant(int n) {
    Poly d = Poly::constant(n, FieldScalar(1));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) d = d * root_poly(n, i, j);
    return d;
}

Poly root_poly(int n, int i, int j) {
    return Poly::variable_x(n, i) - Poly::variable_x(n, j);
}

} // namespace dunkl
