#pragma once

// Exact coefficient fields: Q, cyclotomic Q(zeta_N), and the rational function
// field Q(q). Every value is kept in a unique canonical form so that equality
// is plain coefficient comparison:
//   - rational: reduced fraction (cpp_rational invariant)
//   - cyclotomic(N): polynomial in zeta of degree < phi(N), reduced mod Phi_N
//   - rational function: num/den in Z[q], gcd(num, den) = 1 over Z[q]
//     (integer content included), lc(den) > 0

#include "hopfpi/upoly.hpp"

#include <cctype>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string_view>
#include <variant>

namespace hopfpi {

enum class FieldKind { rational, cyclotomic, rational_function };

class Scalar;

class FieldCtx {
public:
    static FieldCtx rational() { return FieldCtx(FieldKind::rational, 0); }
    static FieldCtx cyclotomic(unsigned n) {
        if (n == 0) throw std::invalid_argument("FieldCtx: cyclotomic order must be >= 1");
        return FieldCtx(FieldKind::cyclotomic, n);
    }
    static FieldCtx rational_function() { return FieldCtx(FieldKind::rational_function, 0); }

    FieldKind kind() const { return kind_; }
    unsigned cyclotomic_order() const { return n_; }
    unsigned degree() const {
        return kind_ == FieldKind::cyclotomic ? upoly::euler_phi(n_) : 1;
    }
    const ZPoly& reduction_polynomial() const {
        if (kind_ != FieldKind::cyclotomic)
            throw std::logic_error("FieldCtx: reduction polynomial only for cyclotomic fields");
        return cyclotomic_polynomial(n_);
    }

    bool operator==(const FieldCtx& o) const { return kind_ == o.kind_ && n_ == o.n_; }
    bool operator!=(const FieldCtx& o) const { return !(*this == o); }

    // element factories are defined after Scalar
    Scalar zero() const;
    Scalar one() const;
    Scalar integer(long long v) const;
    Scalar from_rational(const QQ& v) const;
    Scalar zeta() const;  // primitive n-th root (cyclotomic only)
    Scalar q() const;     // transcendental generator (rational_function only)

    std::string name() const {
        switch (kind_) {
            case FieldKind::rational: return "Q";
            case FieldKind::cyclotomic: return "Q(zeta_" + std::to_string(n_) + ")";
            case FieldKind::rational_function: return "Q(q)";
        }
        return "?";
    }

private:
    FieldCtx(FieldKind k, unsigned n) : kind_(k), n_(n) {}
    FieldKind kind_;
    unsigned n_;
};

inline FieldCtx field_make(FieldKind kind, unsigned n = 0) {
    switch (kind) {
        case FieldKind::rational: return FieldCtx::rational();
        case FieldKind::cyclotomic: return FieldCtx::cyclotomic(n);
        case FieldKind::rational_function: return FieldCtx::rational_function();
    }
    throw std::invalid_argument("field_make: unknown kind");
}

class Scalar {
    struct Cyc {
        unsigned n;    // cyclotomic order
        QPoly c;       // degree < phi(n), trimmed
        bool operator==(const Cyc& o) const { return n == o.n && c == o.c; }
    };
    struct Frac {
        ZPoly num, den;  // canonical: gcd = 1 over Z[q], lc(den) > 0
        bool operator==(const Frac& o) const { return num == o.num && den == o.den; }
    };
    std::variant<QQ, Cyc, Frac> v_;

    explicit Scalar(QQ q) : v_(std::move(q)) {}
    explicit Scalar(Cyc c) : v_(std::move(c)) {}
    explicit Scalar(Frac f) : v_(std::move(f)) {}

    static Scalar make_cyc(unsigned n, QPoly c) {
        c = reduce_mod_phi(std::move(c), n);
        return Scalar(Cyc{n, std::move(c)});
    }
    static Scalar make_frac(ZPoly num, ZPoly den) {
        if (upoly::is_zero(den))
            throw std::invalid_argument("Scalar: zero denominator");
        if (upoly::is_zero(num)) {
            return Scalar(Frac{{}, {ZZ(1)}});
        }
        ZPoly g = upoly::zgcd(num, den);
        if (upoly::degree(g) > 0 || g != ZPoly{ZZ(1)}) {
            num = upoly::zdiv_exact(num, g);
            den = upoly::zdiv_exact(den, g);
        }
        ZZ cn = upoly::content(num), cd = upoly::content(den);
        ZZ c = upoly::igcd(cn, cd);
        if (den.back() < 0) c = -c;
        if (c != 1) {
            for (auto& x : num) x /= c;
            for (auto& x : den) x /= c;
        }
        return Scalar(Frac{std::move(num), std::move(den)});
    }

    static QPoly reduce_mod_phi(QPoly c, unsigned n) {
        const ZPoly& phiz = cyclotomic_polynomial(n);
        QPoly phi = upoly::to_qpoly(phiz);
        if (c.size() >= phi.size()) {
            QPoly q, r;
            upoly::divmod(c, phi, q, r);
            c = std::move(r);
        }
        upoly::trim(c);
        return c;
    }

    const Cyc& cyc() const { return std::get<Cyc>(v_); }
    const Frac& frac() const { return std::get<Frac>(v_); }

    void check_same(const Scalar& o, const char* op) const {
        if (kind() != o.kind() ||
            (kind() == FieldKind::cyclotomic && cyc().n != o.cyc().n))
            throw std::invalid_argument(std::string("Scalar: field mismatch in ") + op);
    }

    friend class FieldCtx;

public:
    Scalar() : v_(QQ(0)) {}

    FieldKind kind() const {
        switch (v_.index()) {
            case 0: return FieldKind::rational;
            case 1: return FieldKind::cyclotomic;
            default: return FieldKind::rational_function;
        }
    }
    FieldCtx ctx() const {
        switch (kind()) {
            case FieldKind::rational: return FieldCtx::rational();
            case FieldKind::cyclotomic: return FieldCtx::cyclotomic(cyc().n);
            default: return FieldCtx::rational_function();
        }
    }

    bool is_zero() const {
        switch (kind()) {
            case FieldKind::rational: return std::get<QQ>(v_) == 0;
            case FieldKind::cyclotomic: return cyc().c.empty();
            default: return frac().num.empty();
        }
    }
    bool is_one() const { return *this == ctx().one(); }

    // rational value when the element is a constant (always for kind rational;
    // for cyclotomic: degree-0 representative; for Q(q): constant fraction)
    std::optional<QQ> as_rational() const {
        switch (kind()) {
            case FieldKind::rational: return std::get<QQ>(v_);
            case FieldKind::cyclotomic:
                if (cyc().c.empty()) return QQ(0);
                if (cyc().c.size() == 1) return cyc().c[0];
                return std::nullopt;
            default:
                if (frac().num.empty()) return QQ(0);
                if (frac().num.size() == 1 && frac().den.size() == 1)
                    return QQ(frac().num[0], frac().den[0]);
                return std::nullopt;
        }
    }

    bool operator==(const Scalar& o) const { return v_ == o.v_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    Scalar operator-() const {
        switch (kind()) {
            case FieldKind::rational: return Scalar(-std::get<QQ>(v_));
            case FieldKind::cyclotomic: return Scalar(Cyc{cyc().n, upoly::neg(cyc().c)});
            default: return Scalar(Frac{upoly::neg(frac().num), frac().den});
        }
    }

    Scalar operator+(const Scalar& o) const {
        check_same(o, "+");
        switch (kind()) {
            case FieldKind::rational: return Scalar(std::get<QQ>(v_) + std::get<QQ>(o.v_));
            case FieldKind::cyclotomic: {
                QPoly c = upoly::add(cyc().c, o.cyc().c);
                return Scalar(Cyc{cyc().n, std::move(c)});
            }
            default: {
                const Frac &a = frac(), &b = o.frac();
                return make_frac(
                    upoly::add(upoly::mul(a.num, b.den), upoly::mul(b.num, a.den)),
                    upoly::mul(a.den, b.den));
            }
        }
    }
    Scalar operator-(const Scalar& o) const { return *this + (-o); }

    Scalar operator*(const Scalar& o) const {
        check_same(o, "*");
        switch (kind()) {
            case FieldKind::rational: return Scalar(std::get<QQ>(v_) * std::get<QQ>(o.v_));
            case FieldKind::cyclotomic:
                return make_cyc(cyc().n, upoly::mul(cyc().c, o.cyc().c));
            default:
                return make_frac(upoly::mul(frac().num, o.frac().num),
                                 upoly::mul(frac().den, o.frac().den));
        }
    }

    Scalar inverse() const {
        if (is_zero()) throw std::invalid_argument("Scalar: inverse of zero");
        switch (kind()) {
            case FieldKind::rational: return Scalar(1 / std::get<QQ>(v_));
            case FieldKind::cyclotomic: {
                // extended Euclid: u*c + v*Phi = 1  =>  c^{-1} = u mod Phi
                QPoly a = cyc().c, b = upoly::to_qpoly(cyclotomic_polynomial(cyc().n));
                QPoly u0{QQ(1)}, u1{};
                while (!b.empty()) {
                    QPoly q, r;
                    upoly::divmod(a, b, q, r);
                    QPoly u2 = upoly::sub(u0, upoly::mul(q, u1));
                    a = std::move(b);
                    b = std::move(r);
                    u0 = std::move(u1);
                    u1 = std::move(u2);
                }
                // a is the gcd (a nonzero constant since Phi_N is irreducible)
                if (a.size() != 1)
                    throw std::logic_error("Scalar: cyclotomic inverse failed");
                QPoly inv = upoly::scale(u0, QQ(1) / a[0]);
                return make_cyc(cyc().n, std::move(inv));
            }
            default:
                return make_frac(frac().den, frac().num);
        }
    }

    Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    Scalar pow(long long e) const {
        if (e < 0) return inverse().pow(-e);
        Scalar r = ctx().one(), b = *this;
        while (e > 0) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    // total order usable as a map key within one field context
    bool operator<(const Scalar& o) const {
        if (v_.index() != o.v_.index()) return v_.index() < o.v_.index();
        switch (kind()) {
            case FieldKind::rational: return std::get<QQ>(v_) < std::get<QQ>(o.v_);
            case FieldKind::cyclotomic: {
                if (cyc().n != o.cyc().n) return cyc().n < o.cyc().n;
                if (cyc().c.size() != o.cyc().c.size()) return cyc().c.size() < o.cyc().c.size();
                for (std::size_t i = 0; i < cyc().c.size(); ++i)
                    if (cyc().c[i] != o.cyc().c[i]) return cyc().c[i] < o.cyc().c[i];
                return false;
            }
            default: {
                auto cmp = [](const ZPoly& a, const ZPoly& b) {
                    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
                    for (std::size_t i = 0; i < a.size(); ++i)
                        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
                    return 0;
                };
                int c = cmp(frac().num, o.frac().num);
                if (c != 0) return c < 0;
                return cmp(frac().den, o.frac().den) < 0;
            }
        }
    }

    std::string to_string() const {
        std::ostringstream os;
        switch (kind()) {
            case FieldKind::rational: {
                const QQ& q = std::get<QQ>(v_);
                os << numerator(q);
                if (denominator(q) != 1) os << "/" << denominator(q);
                break;
            }
            case FieldKind::cyclotomic: {
                os << poly_str(cyc().c, "zeta");
                break;
            }
            default: {
                ZPoly n = frac().num, d = frac().den;
                bool dtriv = (d.size() == 1 && d[0] == 1);
                if (dtriv) {
                    os << zpoly_str(n);
                } else {
                    os << "(" << zpoly_str(n) << ")/(" << zpoly_str(d) << ")";
                }
                break;
            }
        }
        return os.str();
    }

private:
    static std::string poly_str(const QPoly& p, const char* var) {
        if (p.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (p[i] == 0) continue;
            QQ c = p[i];
            if (!first) os << (c > 0 ? " + " : " - ");
            else if (c < 0) os << "-";
            QQ ac = c > 0 ? c : QQ(-c);
            bool unit = (ac == 1) && i > 0;
            if (!unit) {
                os << numerator(ac);
                if (denominator(ac) != 1) os << "/" << denominator(ac);
            }
            if (i > 0) {
                if (!unit) os << "*";
                os << var;
                if (i > 1) os << "^" << i;
            }
            first = false;
        }
        return os.str();
    }
    static std::string zpoly_str(const ZPoly& p) {
        QPoly q(p.size());
        for (std::size_t i = 0; i < p.size(); ++i) q[i] = QQ(p[i]);
        return poly_str(q, "q");
    }
};

inline Scalar FieldCtx::zero() const { return integer(0); }
inline Scalar FieldCtx::one() const { return integer(1); }

inline Scalar FieldCtx::integer(long long v) const { return from_rational(QQ(v)); }

inline Scalar FieldCtx::from_rational(const QQ& v) const {
    switch (kind_) {
        case FieldKind::rational: return Scalar(v);
        case FieldKind::cyclotomic: {
            QPoly c;
            if (v != 0) c.push_back(v);
            return Scalar(Scalar::Cyc{n_, Scalar::reduce_mod_phi(std::move(c), n_)});
        }
        default: {
            ZPoly num, den{denominator(v)};
            if (v != 0) num.push_back(numerator(v));
            return Scalar::make_frac(std::move(num), std::move(den));
        }
    }
}

inline Scalar FieldCtx::zeta() const {
    if (kind_ != FieldKind::cyclotomic)
        throw std::invalid_argument("FieldCtx: zeta only defined for cyclotomic fields");
    QPoly c{QQ(0), QQ(1)};
    return Scalar::make_cyc(n_, std::move(c));
}

inline Scalar FieldCtx::q() const {
    if (kind_ != FieldKind::rational_function)
        throw std::invalid_argument("FieldCtx: q only defined for the rational function field");
    return Scalar::make_frac(ZPoly{ZZ(0), ZZ(1)}, ZPoly{ZZ(1)});
}

// Multiplicative order of s if finite, std::nullopt otherwise.
// In Q(zeta_N) the unit torsion is exactly mu_M with M = lcm(2, N): one
// exponentiation s^M decides membership; the order is then the least divisor
// d of M with s^d = 1.
inline std::optional<unsigned> is_root_of_unity(const Scalar& s) {
    if (s.is_zero()) throw std::invalid_argument("is_root_of_unity: zero input");
    FieldCtx ctx = s.ctx();
    auto rational_case = [&](const QQ& v) -> std::optional<unsigned> {
        if (v == 1) return 1u;
        if (v == -1) return 2u;
        return std::nullopt;
    };
    switch (ctx.kind()) {
        case FieldKind::rational: return rational_case(*s.as_rational());
        case FieldKind::rational_function: {
            auto v = s.as_rational();
            if (!v) return std::nullopt;
            return rational_case(*v);
        }
        case FieldKind::cyclotomic: {
            unsigned n = ctx.cyclotomic_order();
            unsigned m = (n % 2 == 0) ? n : 2 * n;  // lcm(2, n)
            if (!(s.pow(m) == ctx.one())) return std::nullopt;
            for (unsigned d : upoly::divisors(m))
                if (s.pow(d) == ctx.one()) return d;
            return std::nullopt;  // unreachable
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Scalar literal parser: integers, fractions a/b, q, zeta, ^ integer powers,
// *, /, +, -, parentheses. In a cyclotomic context `q` is accepted as an
// alias for zeta (the paper's examples write character values as q-powers).

struct ParseError : std::runtime_error {
    std::size_t pos;
    ParseError(const std::string& msg, std::size_t p)
        : std::runtime_error(msg), pos(p) {}
};

namespace detail {

class ScalarParser {
public:
    ScalarParser(std::string_view text, const FieldCtx& ctx) : s_(text), ctx_(ctx) {}

    Scalar parse() {
        Scalar v = expr();
        skip_ws();
        if (pos_ != s_.size()) throw ParseError("unexpected trailing input", pos_);
        return v;
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;
    FieldCtx ctx_;

    void skip_ws() {
        while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
    }
    bool peek(char c) {
        skip_ws();
        return pos_ < s_.size() && s_[pos_] == c;
    }
    bool eat(char c) {
        if (peek(c)) {
            ++pos_;
            return true;
        }
        return false;
    }

    Scalar expr() {
        Scalar v = eat('-') ? -term() : (eat('+'), term());
        for (;;) {
            if (eat('+')) v += term();
            else if (eat('-')) v -= term();
            else return v;
        }
    }
    Scalar term() {
        Scalar v = factor();
        for (;;) {
            if (eat('*')) v *= factor();
            else if (eat('/')) {
                Scalar d = factor();
                if (d.is_zero()) throw ParseError("division by zero", pos_);
                v /= d;
            } else return v;
        }
    }
    Scalar factor() {
        skip_ws();
        if (eat('-')) return -factor();
        Scalar v = atom();
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == '^') {
            std::size_t caret = pos_;
            ++pos_;
            long long e = integer_literal("exponent");
            if (v.is_zero() && e < 0) throw ParseError("negative power of zero", caret);
            v = v.pow(e);
        }
        return v;
    }
    Scalar atom() {
        skip_ws();
        if (pos_ >= s_.size()) throw ParseError("unexpected end of expression", pos_);
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Scalar v = expr();
            if (!eat(')')) throw ParseError("expected ')'", pos_);
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long long n = integer_literal("number");
            return ctx_.integer(n);
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
                                        s_[pos_] == '_'))
                ++pos_;
            std::string name(s_.substr(start, pos_ - start));
            if (name == "zeta") {
                if (ctx_.kind() != FieldKind::cyclotomic)
                    throw ParseError("'zeta' requires a cyclotomic field", start);
                return ctx_.zeta();
            }
            if (name == "q") {
                if (ctx_.kind() == FieldKind::rational_function) return ctx_.q();
                if (ctx_.kind() == FieldKind::cyclotomic) return ctx_.zeta();
                throw ParseError("'q' undefined over the rationals", start);
            }
            throw ParseError("unknown symbol '" + name + "'", start);
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }
    long long integer_literal(const char* what) {
        skip_ws();
        bool negative = false;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
            negative = (s_[pos_] == '-');
            ++pos_;
        }
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            throw ParseError(std::string("expected ") + what, pos_);
        long long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_] - '0');
            if (v > (1LL << 56)) throw ParseError("integer literal too large", pos_);
            ++pos_;
        }
        return negative ? -v : v;
    }
};

}  // namespace detail

inline Scalar parse_scalar(std::string_view text, const FieldCtx& ctx) {
    return detail::ScalarParser(text, ctx).parse();
}

}  // namespace hopfpi
