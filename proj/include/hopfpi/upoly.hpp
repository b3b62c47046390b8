#pragma once

// Dense univariate polynomial helpers over exact coefficients (cpp_int / cpp_rational).
// Zero polynomial = empty coefficient vector; otherwise no trailing zeros.

#include <boost/multiprecision/cpp_int.hpp>

#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace hopfpi {

using ZZ = boost::multiprecision::cpp_int;
using QQ = boost::multiprecision::cpp_rational;

using ZPoly = std::vector<ZZ>;
using QPoly = std::vector<QQ>;

namespace upoly {

template <class C>
void trim(std::vector<C>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

template <class C>
bool is_zero(const std::vector<C>& p) {
    return p.empty();
}

// degree of the zero polynomial is -1
template <class C>
int degree(const std::vector<C>& p) {
    return static_cast<int>(p.size()) - 1;
}

template <class C>
std::vector<C> add(const std::vector<C>& a, const std::vector<C>& b) {
    std::vector<C> r(std::max(a.size(), b.size()), C(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    trim(r);
    return r;
}

template <class C>
std::vector<C> sub(const std::vector<C>& a, const std::vector<C>& b) {
    std::vector<C> r(std::max(a.size(), b.size()), C(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

template <class C>
std::vector<C> neg(std::vector<C> a) {
    for (auto& c : a) c = -c;
    return a;
}

template <class C>
std::vector<C> mul(const std::vector<C>& a, const std::vector<C>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<C> r(a.size() + b.size() - 1, C(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

template <class C>
std::vector<C> scale(std::vector<C> a, const C& s) {
    if (s == 0) return {};
    for (auto& c : a) c *= s;
    return a;
}

// quotient/remainder over a field (C must support exact division)
template <class C>
void divmod(const std::vector<C>& a, const std::vector<C>& b, std::vector<C>& q,
            std::vector<C>& r) {
    if (b.empty()) throw std::invalid_argument("upoly: division by zero polynomial");
    r = a;
    q.assign(a.size() > b.size() ? a.size() - b.size() + 1 : 1, C(0));
    while (!r.empty() && r.size() >= b.size()) {
        C c = r.back() / b.back();
        std::size_t shift = r.size() - b.size();
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] -= c * b[i];
        trim(r);
    }
    trim(q);
}

// exact division over ZZ; throws if not divisible
inline ZPoly zdiv_exact(const ZPoly& a, const ZPoly& b) {
    if (b.empty()) throw std::invalid_argument("upoly: division by zero polynomial");
    ZPoly r = a, q;
    q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 1, ZZ(0));
    while (!r.empty() && r.size() >= b.size()) {
        ZZ c = r.back() / b.back();
        if (c * b.back() != r.back()) throw std::runtime_error("upoly: inexact division");
        std::size_t shift = r.size() - b.size();
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] -= c * b[i];
        trim(r);
    }
    if (!r.empty()) throw std::runtime_error("upoly: inexact division");
    trim(q);
    return q;
}

inline ZZ igcd(ZZ a, ZZ b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        ZZ t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline ZZ content(const ZPoly& p) {
    ZZ g = 0;
    for (const auto& c : p) g = igcd(g, c);
    return g;
}

// content divided out, sign of leading coefficient made positive
inline ZPoly primitive_part(const ZPoly& p) {
    if (p.empty()) return {};
    ZZ c = content(p);
    if (p.back() < 0) c = -c;
    ZPoly r = p;
    for (auto& x : r) x /= c;
    return r;
}

inline QPoly to_qpoly(const ZPoly& p) {
    QPoly r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[i] = QQ(p[i]);
    return r;
}

// primitive gcd in Z[x] via monic Euclid in Q[x]
inline ZPoly zgcd(const ZPoly& a, const ZPoly& b) {
    if (a.empty()) return primitive_part(b);
    if (b.empty()) return primitive_part(a);
    QPoly u = to_qpoly(a), v = to_qpoly(b);
    while (!v.empty()) {
        QPoly q, r;
        divmod(u, v, q, r);
        u = std::move(v);
        v = std::move(r);
    }
    // clear denominators, primitivize
    ZZ den = 1;
    for (const auto& c : u) den = den / igcd(den, denominator(c)) * denominator(c);
    ZPoly w(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        QQ t = u[i] * den;
        w[i] = numerator(t);
    }
    return primitive_part(w);
}

inline unsigned euler_phi(unsigned n) {
    unsigned result = n;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

inline std::vector<unsigned> divisors(unsigned n) {
    std::vector<unsigned> lo, hi;
    for (unsigned d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            lo.push_back(d);
            if (d != n / d) hi.push_back(n / d);
        }
    }
    lo.insert(lo.end(), hi.rbegin(), hi.rend());
    return lo;
}

}  // namespace upoly

// N-th cyclotomic polynomial, by exact division of x^N - 1 by the proper-divisor product.
inline const ZPoly& cyclotomic_polynomial(unsigned n) {
    if (n == 0) throw std::invalid_argument("cyclotomic_polynomial: n must be >= 1");
    static std::map<unsigned, ZPoly> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    std::function<const ZPoly&(unsigned)> phi = [&](unsigned m) -> const ZPoly& {
        auto jt = cache.find(m);
        if (jt != cache.end()) return jt->second;
        ZPoly xm1(m + 1, ZZ(0));  // x^m - 1
        xm1[0] = -1;
        xm1[m] = 1;
        ZPoly prod{ZZ(1)};
        for (unsigned d : upoly::divisors(m))
            if (d < m) prod = upoly::mul(prod, phi(d));
        return cache.emplace(m, upoly::zdiv_exact(xm1, prod)).first->second;
    };
    return phi(n);
}

}  // namespace hopfpi
