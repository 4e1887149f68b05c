#include "dunkl/exprparse.hpp"

#include <cctype>

namespace dunkl {

namespace {

struct Lexer {
    const std::string& src;
    std::size_t pos = 0;

    explicit Lexer(const std::string& s) : src(s) {}

    void skip_ws() {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= src.size();
    }
    char peek() {
        skip_ws();
        return pos < src.size() ? src[pos] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c))
            throw ParseError(std::string("expected '") + c + "'", pos);
    }
    long integer() {
        skip_ws();
        std::size_t start = pos;
        bool neg = pos < src.size() && src[pos] == '-';
        if (neg) ++pos;
        if (pos >= src.size() || !std::isdigit(static_cast<unsigned char>(src[pos])))
            throw ParseError("expected integer", pos);
        long v = 0;
        while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) {
            v = v * 10 + (src[pos] - '0');
            if (v > 1000000) throw ParseError("integer too large", start);
            ++pos;
        }
        return neg ? -v : v;
    }
};

struct Parser {
    Lexer lex;
    int n;

    Parser(const std::string& s, int n) : lex(s), n(n) {}

    ExprAst expr() {
        auto node = std::make_unique<ExprNode>();
        node->kind = ExprNode::Kind::Sum;
        node->offset = lex.pos;
        int sign = lex.accept('-') ? -1 : 1;
        node->children.push_back(term());
        node->signs.push_back(sign);
        while (true) {
            if (lex.accept('+'))
                sign = 1;
            else if (lex.accept('-'))
                sign = -1;
            else
                break;
            node->children.push_back(term());
            node->signs.push_back(sign);
        }
        if (node->children.size() == 1 && node->signs[0] == 1) return std::move(node->children[0]);
        return node;
    }

    ExprAst term() {
        auto node = std::make_unique<ExprNode>();
        node->kind = ExprNode::Kind::Product;
        node->offset = lex.pos;
        node->children.push_back(factor());
        while (lex.accept('*')) node->children.push_back(factor());
        if (node->children.size() == 1) return std::move(node->children[0]);
        return node;
    }

    ExprAst factor() {
        ExprAst base = atom();
        if (lex.accept('^')) {
            auto node = std::make_unique<ExprNode>();
            node->kind = ExprNode::Kind::Power;
            node->offset = base->offset;
            long e = lex.integer();
            if (e > 64 || e < -64) throw ParseError("exponent out of range", node->offset);
            node->exponent = static_cast<int>(e);
            node->children.push_back(std::move(base));
            return node;
        }
        return base;
    }

    int index_suffix(std::size_t at) {
        if (lex.pos >= lex.src.size() || !std::isdigit(static_cast<unsigned char>(lex.src[lex.pos])))
            throw ParseError("expected variable index", lex.pos);
        int v = static_cast<int>(lex.integer());
        if (v < 1 || v > n) throw ParseError("index out of range 1..n", at);
        return v;
    }

    ExprAst atom() {
        lex.skip_ws();
        std::size_t at = lex.pos;
        if (lex.eof()) throw ParseError("unexpected end of input", at);
        char ch = lex.peek();
        auto node = std::make_unique<ExprNode>();
        node->offset = at;

        if (std::isdigit(static_cast<unsigned char>(ch))) {
            long p = lex.integer();
            long q = 1;
            if (lex.pos < lex.src.size() && lex.src[lex.pos] == '/') {
                ++lex.pos;
                q = lex.integer();
                if (q <= 0) throw ParseError("denominator must be positive", at);
            }
            node->kind = ExprNode::Kind::Rational;
            node->value = Rational(p, q);
            node->value.canonicalize();
            return node;
        }
        if (lex.accept('(')) {
            ExprAst inner = expr();
            lex.expect(')');
            return inner;
        }
        if (!std::isalpha(static_cast<unsigned char>(ch)))
            throw ParseError("unexpected character", at);
        ++lex.pos;
        switch (ch) {
        case 'c':
            node->kind = ExprNode::Kind::Param;
            return node;
        case 'x':
            node->kind = ExprNode::Kind::X;
            node->index = index_suffix(at);
            return node;
        case 'y':
            node->kind = ExprNode::Kind::Y;
            node->index = index_suffix(at);
            return node;
        case 'd':
            if (lex.pos + 1 < lex.src.size() && lex.src.compare(lex.pos - 1, 3, "del") == 0 &&
                !(lex.pos + 2 < lex.src.size() &&
                  std::isalnum(static_cast<unsigned char>(lex.src[lex.pos + 2])))) {
                lex.pos += 2;
                node->kind = ExprNode::Kind::Del;
                return node;
            }
            node->kind = ExprNode::Kind::D;
            node->index = index_suffix(at);
            return node;
        case 's': {
            node->kind = ExprNode::Kind::Transposition;
            lex.expect('(');
            node->index = static_cast<int>(lex.integer());
            lex.expect(',');
            node->index2 = static_cast<int>(lex.integer());
            lex.expect(')');
            if (node->index < 1 || node->index > n || node->index2 < 1 || node->index2 > n ||
                node->index == node->index2)
                throw ParseError("bad transposition indices", at);
            return node;
        }
        case 'e':
            if (lex.pos < lex.src.size() && lex.src[lex.pos] == '_') {
                ++lex.pos;
                node->kind = ExprNode::Kind::ESign;
            } else {
                node->kind = ExprNode::Kind::E;
            }
            return node;
        default:
            throw ParseError("unknown symbol", at);
        }
    }
};

bool is_scalar_op(const SkewOperator& u, FieldScalar& out) {
    if (u.is_zero()) {
        out = FieldScalar(0);
        return true;
    }
    if (u.term_count() != 1) return false;
    const auto& [key, coeff] = *u.terms().begin();
    for (int v : key.dexp)
        if (v != 0) return false;
    if (!key.w.is_identity()) return false;
    if (coeff.dpow() != 0) return false;
    const Poly& p = coeff.num();
    if (p.terms().size() != 1) return false;
    const auto& [m, s] = *p.terms().begin();
    if (m.xdeg() != 0 || m.ydeg() != 0) return false;
    out = s;
    return true;
}

} // namespace

ExprAst parse(const std::string& src, int n) {
    if (n < 2) throw ShapeError("parse: n must be at least 2");
    Parser parser(src, n);
    ExprAst ast = parser.expr();
    if (!parser.lex.eof()) throw ParseError("trailing input", parser.lex.pos);
    return ast;
}

SkewOperator elaborate(const ExprNode& ast, int n) {
    switch (ast.kind) {
    case ExprNode::Kind::Sum: {
        SkewOperator acc(n);
        for (std::size_t k = 0; k < ast.children.size(); ++k) {
            SkewOperator piece = elaborate(*ast.children[k], n);
            acc += ast.signs[k] < 0 ? -piece : piece;
        }
        return acc;
    }
    case ExprNode::Kind::Product: {
        SkewOperator acc = elaborate(*ast.children.front(), n);
        for (std::size_t k = 1; k < ast.children.size(); ++k)
            acc = acc * elaborate(*ast.children[k], n);
        return acc;
    }
    case ExprNode::Kind::Power: {
        const ExprNode& base = *ast.children.front();
        if (ast.exponent >= 0) {
            SkewOperator b = elaborate(base, n);
            SkewOperator acc = SkewOperator::one(n);
            for (int k = 0; k < ast.exponent; ++k) acc = acc * b;
            return acc;
        }
        if (base.kind == ExprNode::Kind::Del) return SkewOperator::delta_power(n, ast.exponent);
        SkewOperator b = elaborate(base, n);
        FieldScalar v;
        if (!is_scalar_op(b, v))
            throw ParseError("negative exponent requires del or a scalar", ast.offset);
        if (v.is_zero()) throw DivisionByZero("negative power of zero scalar");
        FieldScalar inv = v.inverse(), acc(1);
        for (int k = 0; k < -ast.exponent; ++k) acc *= inv;
        return SkewOperator::scalar(n, acc);
    }
    case ExprNode::Kind::Rational:
        return SkewOperator::scalar(n, FieldScalar(ast.value));
    case ExprNode::Kind::Param:
        return SkewOperator::scalar(n, FieldScalar::c());
    case ExprNode::Kind::X:
        return SkewOperator::coefficient(LocFrac(Poly::variable_x(n, ast.index - 1), 0));
    case ExprNode::Kind::Y:
        return dunkl(CherednikContext(n, FieldScalar::c()), ast.index - 1);
    case ExprNode::Kind::D:
        return SkewOperator::partial(n, ast.index - 1);
    case ExprNode::Kind::Del:
        return SkewOperator::delta_power(n, 1);
    case ExprNode::Kind::Transposition:
        return SkewOperator::group(Perm::transposition(n, ast.index - 1, ast.index2 - 1));
    case ExprNode::Kind::E:
        return idempotent(n, IdempotentKind::triv);
    case ExprNode::Kind::ESign:
        return idempotent(n, IdempotentKind::sign);
    }
    throw ShapeError("elaborate: unreachable");
}

namespace {

struct Piece {
    bool neg = false;
    std::vector<std::string> factors; // joined by '*'; empty means 1
};

std::string scalar_factor(const FieldScalar& s, bool& neg) {
    neg = false;
    if (s.den().degree() == 0 && s.num().degree() <= 0) {
        Rational r = s.is_zero() ? Rational(0)
                                 : Rational(s.num().coeff(0)) / Rational(s.den().coeff(0));
        r.canonicalize();
        if (r < 0) {
            neg = true;
            r = -r;
        }
        return rational_str(r);
    }
    std::string out = "(" + s.num().str() + ")";
    if (s.den().degree() > 0)
        out += "*(" + s.den().str() + ")^-1";
    else if (s.den().coeff(0) != 1)
        out += "*1/" + s.den().coeff(0).get_str();
    return out;
}

void append_exponents(std::vector<std::string>& factors, const char* name,
                      const std::vector<int>& exps) {
    for (std::size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] == 0) continue;
        std::string f = name + std::to_string(i + 1);
        if (exps[i] != 1) f += "^" + std::to_string(exps[i]);
        factors.push_back(std::move(f));
    }
}

std::string join_pieces(const std::vector<Piece>& pieces) {
    if (pieces.empty()) return "0";
    std::string out;
    for (std::size_t k = 0; k < pieces.size(); ++k) {
        const Piece& p = pieces[k];
        if (k == 0)
            out += p.neg ? "-" : "";
        else
            out += p.neg ? " - " : " + ";
        if (p.factors.empty()) {
            out += "1";
        } else {
            for (std::size_t f = 0; f < p.factors.size(); ++f) {
                if (f) out += "*";
                out += p.factors[f];
            }
        }
    }
    return out;
}

/// One monomial of an x-polynomial as factor strings.
Piece monomial_piece(const Monomial& m, const FieldScalar& s) {
    Piece piece;
    bool neg = false;
    std::string sf = scalar_factor(s, neg);
    piece.neg = neg;
    piece.factors.push_back(std::move(sf));
    append_exponents(piece.factors, "x", m.xe);
    return piece;
}

std::string xpoly_str(const Poly& p);

/// Drops a redundant leading "1" factor once other factors exist.
void tidy(Piece& piece) {
    if (piece.factors.size() > 1 && piece.factors.front() == "1")
        piece.factors.erase(piece.factors.begin());
}

std::string xpoly_str(const Poly& p) {
    std::vector<Piece> pieces;
    for (const auto& [m, s] : p.terms()) {
        Piece piece = monomial_piece(m, s);
        tidy(piece);
        pieces.push_back(std::move(piece));
    }
    return join_pieces(pieces);
}

/// Factor strings for a coefficient p/delta^k; multi-term numerators are
/// parenthesized so the result stays grammar-valid.
void coeff_factors(const LocFrac& f, Piece& piece) {
    const Poly& p = f.num();
    if (p.terms().size() == 1) {
        const auto& [m, s] = *p.terms().begin();
        Piece mp = monomial_piece(m, s);
        piece.neg = mp.neg;
        piece.factors = std::move(mp.factors);
    } else {
        piece.factors.push_back("(" + xpoly_str(p) + ")");
    }
    if (f.dpow() > 0) piece.factors.push_back("del^-" + std::to_string(f.dpow()));
}

} // namespace

std::string render(const SkewOperator& u) {
    std::vector<Piece> pieces;
    for (const auto& [key, coeff] : u.terms()) {
        Piece piece;
        coeff_factors(coeff, piece);
        append_exponents(piece.factors, "d", key.dexp);
        for (const auto& [i, j] : key.w.transposition_factors())
            piece.factors.push_back("s(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
        tidy(piece);
        pieces.push_back(std::move(piece));
    }
    return join_pieces(pieces);
}

std::string render(const LocFrac& f) {
    if (f.is_zero()) return "0";
    if (f.dpow() == 0) {
        const Poly& p = f.num();
        if (p.terms().size() == 1 && p.terms().begin()->first.xdeg() == 0) {
            const FieldScalar& s = p.terms().begin()->second;
            if (s.den().degree() == 0 && s.den().coeff(0) == 1) return s.num().str();
        }
        return xpoly_str(p);
    }
    std::vector<Piece> pieces;
    Piece piece;
    coeff_factors(f, piece);
    tidy(piece);
    pieces.push_back(std::move(piece));
    return join_pieces(pieces);
}

} // namespace dunkl
