#pragma once

// Free associative algebra over an exact field: noncommutative polynomials,
// the multilinear identity templates (standard / q-commutator / ad-form),
// and template evaluation in arbitrary target algebras.

#include "hopfpi/scalar.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace hopfpi {

using Word = std::vector<unsigned>;  // generator indices; empty = 1

struct NcPoly {
    FieldCtx ctx;
    std::map<Word, Scalar> terms;  // nonzero coefficients only

    explicit NcPoly(const FieldCtx& c) : ctx(c) {}

    static NcPoly zero(const FieldCtx& c) { return NcPoly(c); }
    static NcPoly one(const FieldCtx& c) {
        NcPoly p(c);
        p.terms[{}] = c.one();
        return p;
    }
    static NcPoly generator(unsigned i, const FieldCtx& c) {
        NcPoly p(c);
        p.terms[{i}] = c.one();
        return p;
    }
    static NcPoly monomial(Word w, Scalar coeff) {
        NcPoly p(coeff.ctx());
        if (!coeff.is_zero()) p.terms[std::move(w)] = std::move(coeff);
        return p;
    }

    bool is_zero() const { return terms.empty(); }

    void add_term(const Word& w, const Scalar& c) {
        if (c.is_zero()) return;
        auto it = terms.find(w);
        if (it == terms.end()) {
            terms.emplace(w, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }

    NcPoly operator+(const NcPoly& o) const {
        NcPoly r = *this;
        for (const auto& [w, c] : o.terms) r.add_term(w, c);
        return r;
    }
    NcPoly operator-(const NcPoly& o) const {
        NcPoly r = *this;
        for (const auto& [w, c] : o.terms) r.add_term(w, -c);
        return r;
    }
    NcPoly operator*(const NcPoly& o) const {
        if (ctx != o.ctx) throw std::invalid_argument("NcPoly: field mismatch");
        NcPoly r(ctx);
        for (const auto& [w1, c1] : terms)
            for (const auto& [w2, c2] : o.terms) {
                Word w = w1;
                w.insert(w.end(), w2.begin(), w2.end());
                r.add_term(w, c1 * c2);
            }
        return r;
    }
    friend NcPoly operator*(const Scalar& s, const NcPoly& p) {
        NcPoly r(p.ctx);
        if (s.is_zero()) return r;
        for (const auto& [w, c] : p.terms) r.terms[w] = s * c;
        return r;
    }
    bool operator==(const NcPoly& o) const { return terms == o.terms; }

    std::string to_string(const std::string& stem = "x") const {
        if (terms.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [w, c] : terms) {
            if (!first) s += " + ";
            s += "(" + c.to_string() + ")";
            for (unsigned g : w) s += "*" + stem + std::to_string(g + 1);
            first = false;
        }
        return s;
    }
};

inline NcPoly nc_multiply(const NcPoly& p, const NcPoly& r) { return p * r; }

// [a, b]_q = ab - q ba
inline NcPoly q_commutator(const NcPoly& a, const NcPoly& b, const Scalar& q) {
    return a * b - q * (b * a);
}

// --------------------------------------------------------------------------
// Permutations of {0..d-1} in lexicographic order; templates index their
// coefficient vector by that order (reproducible certificates).

namespace permutations {

inline std::vector<std::vector<unsigned>> all(unsigned d) {
    std::vector<unsigned> p(d);
    for (unsigned i = 0; i < d; ++i) p[i] = i;
    std::vector<std::vector<unsigned>> r;
    do {
        r.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return r;
}

inline int sign(const std::vector<unsigned>& p) {
    unsigned inv = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++inv;
    return (inv % 2 == 0) ? 1 : -1;
}

inline std::size_t factorial(unsigned d) {
    std::size_t f = 1;
    for (unsigned i = 2; i <= d; ++i) f *= i;
    return f;
}

}  // namespace permutations

struct MultilinearTemplate {
    unsigned degree = 0;
    std::vector<Scalar> coeff;  // indexed by lex rank of the permutation

    bool nontrivial() const {
        for (const auto& c : coeff)
            if (!c.is_zero()) return true;
        return false;
    }

    static MultilinearTemplate sign_vector(unsigned d, const FieldCtx& ctx) {
        MultilinearTemplate t;
        t.degree = d;
        auto perms = permutations::all(d);
        t.coeff.reserve(perms.size());
        for (const auto& p : perms) t.coeff.push_back(ctx.integer(permutations::sign(p)));
        return t;
    }

    bool is_sign_vector() const {
        if (coeff.empty()) return false;
        auto perms = permutations::all(degree);
        for (std::size_t k = 0; k < perms.size(); ++k) {
            auto expect = coeff[0].ctx().integer(permutations::sign(perms[k]));
            if (coeff[k] != expect) return false;
        }
        return true;
    }
};

// s_n = sum over Sym(n) of sgn(sigma) x_{sigma(1)} ... x_{sigma(n)}
inline NcPoly standard_polynomial(unsigned n, const FieldCtx& ctx) {
    if (n == 0) throw std::invalid_argument("standard_polynomial: n must be >= 1");
    NcPoly r(ctx);
    for (const auto& p : permutations::all(n)) {
        Word w(p.begin(), p.end());
        r.add_term(w, ctx.integer(permutations::sign(p)));
    }
    return r;
}

// --------------------------------------------------------------------------
// Template evaluation in a target algebra. The Ops type supplies the ring
// operations on elements E:
//   E zero()                      additive identity
//   E add(const E&, const E&)
//   E mul(const E&, const E&)
//   E smul(const Scalar&, const E&)
//   E ad(const E&, const E&)      adjoint action (only used by ad_form)
//   bool is_zero(const E&)

enum class TemplateShape { plain, q_comm, ad_form };

struct ShapeSpec {
    TemplateShape kind = TemplateShape::plain;
    std::optional<Scalar> q;  // for q_comm

    static ShapeSpec plain() { return {TemplateShape::plain, std::nullopt}; }
    static ShapeSpec q_comm(Scalar qv) { return {TemplateShape::q_comm, std::move(qv)}; }
    static ShapeSpec ad_form() { return {TemplateShape::ad_form, std::nullopt}; }
};

// plain: args = (a_1..a_d), value = sum_sigma c_sigma a_{sigma(1)}...a_{sigma(d)}
// q_comm: args = (x_1..x_d, y_1..y_d), factors [x_i, y_{sigma(i)}]_q
// ad_form: same arity, factors (ad x_i)(y_{sigma(i)})
template <class E, class Ops>
E substitute_multilinear(const MultilinearTemplate& t, const ShapeSpec& shape,
                         std::span<const E> xs, std::span<const E> ys, const Ops& ops) {
    const unsigned d = t.degree;
    auto perms = permutations::all(d);
    if (t.coeff.size() != perms.size())
        throw std::invalid_argument("substitute_multilinear: coefficient count != d!");
    if (shape.kind == TemplateShape::plain) {
        if (xs.size() != d || !ys.empty())
            throw std::invalid_argument("substitute_multilinear: plain shape needs d arguments");
    } else {
        if (xs.size() != d || ys.size() != d)
            throw std::invalid_argument("substitute_multilinear: paired shape needs 2d arguments");
    }

    auto factor = [&](unsigned i, unsigned si) -> E {
        switch (shape.kind) {
            case TemplateShape::plain: return xs[si];
            case TemplateShape::q_comm: {
                E ab = ops.mul(xs[i], ys[si]);
                E ba = ops.mul(ys[si], xs[i]);
                return ops.add(ab, ops.smul(-*shape.q, ba));
            }
            case TemplateShape::ad_form: return ops.ad(xs[i], ys[si]);
        }
        throw std::logic_error("substitute_multilinear: bad shape");
    };

    E acc = ops.zero();
    for (std::size_t k = 0; k < perms.size(); ++k) {
        if (t.coeff[k].is_zero()) continue;
        E prod = factor(0, perms[k][0]);
        for (unsigned i = 1; i < d; ++i) prod = ops.mul(prod, factor(i, perms[k][i]));
        acc = ops.add(acc, ops.smul(t.coeff[k], prod));
    }
    return acc;
}

// free-algebra target
struct NcPolyOps {
    FieldCtx ctx;
    NcPoly zero() const { return NcPoly::zero(ctx); }
    NcPoly add(const NcPoly& a, const NcPoly& b) const { return a + b; }
    NcPoly mul(const NcPoly& a, const NcPoly& b) const { return a * b; }
    NcPoly smul(const Scalar& s, const NcPoly& a) const { return s * a; }
    NcPoly ad(const NcPoly&, const NcPoly&) const {
        throw std::invalid_argument("free algebra target lacks an adjoint action");
    }
    bool is_zero(const NcPoly& a) const { return a.is_zero(); }
};

}  // namespace hopfpi
