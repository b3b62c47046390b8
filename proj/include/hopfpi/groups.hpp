#pragma once

// Finitely generated abelian groups (the grouplike groups Gamma) with
// characters and kernels, and small finite groups given by multiplication
// table (the acting groups G) with conjugacy / delta-set machinery.

#include "hopfpi/linalg.hpp"

#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <string>

namespace hopfpi {

// Z^r x Z/m_1 x ... x Z/m_k. Elements are exponent vectors of length r + k;
// torsion coordinates are kept reduced to [0, m_i).
struct FgAbelianGroup {
    unsigned free_rank = 0;
    std::vector<unsigned> torsion;  // each >= 2

    using Elem = std::vector<ZZ>;

    unsigned num_gens() const { return free_rank + static_cast<unsigned>(torsion.size()); }

    Elem identity() const { return Elem(num_gens(), ZZ(0)); }

    void normalize(Elem& e) const {
        for (std::size_t i = 0; i < torsion.size(); ++i) {
            ZZ m = torsion[i];
            ZZ& x = e[free_rank + i];
            x %= m;
            if (x < 0) x += m;
        }
    }
    Elem mul(const Elem& a, const Elem& b) const {
        Elem r(num_gens());
        for (unsigned i = 0; i < num_gens(); ++i) r[i] = a[i] + b[i];
        normalize(r);
        return r;
    }
    Elem inv(const Elem& a) const {
        Elem r(num_gens());
        for (unsigned i = 0; i < num_gens(); ++i) r[i] = -a[i];
        normalize(r);
        return r;
    }
    Elem pow(const Elem& a, const ZZ& k) const {
        Elem r(num_gens());
        for (unsigned i = 0; i < num_gens(); ++i) r[i] = a[i] * k;
        normalize(r);
        return r;
    }
    Elem generator(unsigned i) const {
        Elem r = identity();
        r[i] = 1;
        normalize(r);
        return r;
    }
    bool is_identity(const Elem& e) const {
        for (const auto& x : e)
            if (x != 0) return false;
        return true;
    }
    bool is_finite() const { return free_rank == 0; }
    ZZ order() const {
        if (!is_finite()) return 0;  // 0 encodes infinite
        ZZ o = 1;
        for (unsigned m : torsion) o *= m;
        return o;
    }
};

// Character of an FgAbelianGroup, stored by generator images.
struct Character {
    std::vector<Scalar> images;  // one per generator

    void validate(const FgAbelianGroup& g) const {
        if (images.size() != g.num_gens())
            throw std::invalid_argument("Character: image count does not match generators");
        for (const auto& s : images)
            if (s.is_zero()) throw std::invalid_argument("Character: zero image");
        for (std::size_t i = 0; i < g.torsion.size(); ++i) {
            const Scalar& s = images[g.free_rank + i];
            if (!(s.pow(g.torsion[i]).is_one()))
                throw std::invalid_argument(
                    "Character: torsion generator image order does not divide the torsion order");
        }
    }

    Scalar eval(const FgAbelianGroup& g, const FgAbelianGroup::Elem& e) const {
        Scalar r = images.empty() ? FieldCtx::rational().one() : images[0].ctx().one();
        for (unsigned i = 0; i < g.num_gens(); ++i) {
            if (e[i] == 0) continue;
            long long k = static_cast<long long>(e[i]);
            r *= images[i].pow(k);
        }
        return r;
    }

    Character pointwise_mul(const Character& o) const {
        Character r;
        r.images.reserve(images.size());
        for (std::size_t i = 0; i < images.size(); ++i) r.images.push_back(images[i] * o.images[i]);
        return r;
    }

    bool is_trivial() const {
        for (const auto& s : images)
            if (!s.is_one()) return false;
        return true;
    }
};

inline Character trivial_character(const FgAbelianGroup& g, const FieldCtx& ctx) {
    Character c;
    c.images.assign(g.num_gens(), ctx.one());
    return c;
}

// lcm of the orders of the generator images; nullopt if some image has
// infinite multiplicative order.
inline std::optional<unsigned> character_order(const Character& chi) {
    unsigned ord = 1;
    for (const auto& s : chi.images) {
        auto o = is_root_of_unity(s);
        if (!o) return std::nullopt;
        ord = std::lcm(ord, *o);
    }
    return ord;
}

// --------------------------------------------------------------------------
// Integer Smith normal form (small matrices). Returns D = U*A*V with U, V
// unimodular; only V is needed by callers (kernel extraction).

namespace detail {

struct SmithResult {
    std::vector<std::vector<ZZ>> d;  // diagonalized matrix
    std::vector<std::vector<ZZ>> v;  // right transform, cols x cols
};

inline SmithResult smith_normal_form(std::vector<std::vector<ZZ>> a) {
    std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    std::vector<std::vector<ZZ>> v(cols, std::vector<ZZ>(cols, ZZ(0)));
    for (std::size_t i = 0; i < cols; ++i) v[i][i] = 1;

    auto col_op = [&](std::size_t j1, std::size_t j2, const ZZ& m) {
        // col_{j2} -= m * col_{j1}
        for (std::size_t i = 0; i < rows; ++i) a[i][j2] -= m * a[i][j1];
        for (std::size_t i = 0; i < cols; ++i) v[i][j2] -= m * v[i][j1];
    };
    auto col_swap = [&](std::size_t j1, std::size_t j2) {
        for (std::size_t i = 0; i < rows; ++i) std::swap(a[i][j1], a[i][j2]);
        for (std::size_t i = 0; i < cols; ++i) std::swap(v[i][j1], v[i][j2]);
    };
    auto row_op = [&](std::size_t i1, std::size_t i2, const ZZ& m) {
        for (std::size_t j = 0; j < cols; ++j) a[i2][j] -= m * a[i1][j];
    };

    std::size_t t = 0;
    while (t < rows && t < cols) {
        // find a nonzero pivot in the remaining block
        std::size_t pi = t, pj = t;
        bool found = false;
        for (std::size_t i = t; i < rows && !found; ++i)
            for (std::size_t j = t; j < cols && !found; ++j)
                if (a[i][j] != 0) {
                    pi = i;
                    pj = j;
                    found = true;
                }
        if (!found) break;
        std::swap(a[t], a[pi]);
        col_swap(t, pj);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a[i][t] == 0) continue;
                ZZ m = a[i][t] / a[t][t];
                row_op(t, i, m);
                if (a[i][t] != 0) {  // remainder smaller than pivot: swap up
                    std::swap(a[t], a[i]);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a[t][j] == 0) continue;
                ZZ m = a[t][j] / a[t][t];
                col_op(t, j, m);
                if (a[t][j] != 0) {
                    col_swap(t, j);
                    clean = false;
                }
            }
        }
        if (a[t][t] < 0) {
            for (std::size_t i = 0; i < rows; ++i) a[i][t] = -a[i][t];
            for (std::size_t i = 0; i < cols; ++i) v[i][t] = -v[i][t];
        }
        ++t;
    }
    // divisibility chain is not needed by the kernel computation; skip it
    return {std::move(a), std::move(v)};
}

// integer determinant by fraction-free (Bareiss) elimination
inline ZZ int_det(std::vector<std::vector<ZZ>> m) {
    std::size_t n = m.size();
    if (n == 0) return 1;
    ZZ prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t s = k + 1;
            while (s < n && m[s][k] == 0) ++s;
            if (s == n) return 0;
            std::swap(m[k], m[s]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

}  // namespace detail

// Joint kernel of a family of finite-order characters, via the integer
// lattice kernel (Smith normal form of the exponent matrix).
struct CharacterKernel {
    std::vector<FgAbelianGroup::Elem> generators;  // generate Gamma_chi
    ZZ index;                                      // [Gamma : Gamma_chi]
};

inline CharacterKernel character_kernel(const std::vector<Character>& chis,
                                        const FgAbelianGroup& gamma) {
    const unsigned n = gamma.num_gens();
    // orders and a discrete log basis per character
    struct Row {
        unsigned m;                  // modulus for this character row
        std::vector<ZZ> t;           // dlogs of generator images
    };
    std::vector<Row> rows;
    for (const auto& chi : chis) {
        chi.validate(gamma);
        auto ord = character_order(chi);
        if (!ord)
            throw std::invalid_argument(
                "character_kernel: unsupported-kernel (character of infinite order)");
        if (*ord == 1) continue;  // trivial character contributes nothing
        Row row;
        row.m = *ord;
        // the image group is cyclic of order m; find a generator zeta_m of it:
        // the values live in the torsion of the scalar field, so dlog by scan.
        // We express each image as a power of a fixed primitive m-th root,
        // built as a product of powers of the images themselves.
        // Simpler: dlog each image against an abstract Z/m via its own order:
        // map chi to hom Gamma -> Z/m by solving with CRT over value orders.
        // Use the subgroup of roots of unity: pick s = some image of order m
        // if one exists, else synthesize via pairwise products.
        // Robust approach: work in Z/m with additive dlogs found by scanning
        // powers of a primitive root chosen from the group generated by the
        // images.
        std::vector<Scalar> imgs = chi.images;
        // build the cyclic group generated by all images, find a generator
        const FieldCtx ctx = imgs.empty() ? FieldCtx::rational() : imgs[0].ctx();
        std::vector<Scalar> elems{ctx.one()};
        std::set<std::string> seen{ctx.one().to_string()};
        std::vector<Scalar> frontier = elems;
        while (!frontier.empty()) {
            std::vector<Scalar> next;
            for (const auto& e : frontier)
                for (const auto& g : imgs) {
                    Scalar p = e * g;
                    auto key = p.to_string();
                    if (seen.insert(key).second) {
                        elems.push_back(p);
                        next.push_back(p);
                    }
                }
            frontier = std::move(next);
        }
        if (elems.size() != row.m)
            throw std::logic_error("character_kernel: image subgroup order mismatch");
        Scalar gen = ctx.one();
        for (const auto& e : elems) {
            auto o = is_root_of_unity(e);
            if (o && *o == row.m) {
                gen = e;
                break;
            }
        }
        auto dlog = [&](const Scalar& s) -> ZZ {
            Scalar p = ctx.one();
            for (unsigned k = 0; k < row.m; ++k) {
                if (p == s) return k;
                p *= gen;
            }
            throw std::logic_error("character_kernel: dlog failure");
        };
        row.t.resize(n);
        for (unsigned i = 0; i < n; ++i) row.t[i] = dlog(imgs[i]);
        rows.push_back(std::move(row));
    }

    if (rows.empty()) {
        CharacterKernel k;
        for (unsigned i = 0; i < n; ++i) k.generators.push_back(gamma.generator(i));
        k.index = 1;
        return k;
    }

    // kernel lattice L = { v : T v == 0 mod m_row, each row }; compute as the
    // projection of ker [T | diag(m) stacked] onto the first n coordinates.
    const std::size_t L = rows.size();
    std::vector<std::vector<ZZ>> A(L, std::vector<ZZ>(n + L, ZZ(0)));
    for (std::size_t r = 0; r < L; ++r) {
        for (unsigned i = 0; i < n; ++i) A[r][i] = rows[r].t[i];
        A[r][n + r] = rows[r].m;
    }
    auto snf = detail::smith_normal_form(A);
    // kernel basis: columns j of V with D column j zero
    std::vector<std::vector<ZZ>> lattice_basis;  // vectors in Z^n
    for (std::size_t j = 0; j < n + L; ++j) {
        bool zero_col = true;
        for (std::size_t i = 0; i < L; ++i)
            if (snf.d[i][j] != 0) {
                zero_col = false;
                break;
            }
        if (!zero_col) continue;
        std::vector<ZZ> v(n);
        for (unsigned i = 0; i < n; ++i) v[i] = snf.v[i][j];
        lattice_basis.push_back(std::move(v));
    }
    if (lattice_basis.size() != n)
        throw std::logic_error("character_kernel: kernel lattice rank mismatch");

    CharacterKernel k;
    std::vector<std::vector<ZZ>> B(n, std::vector<ZZ>(n));
    for (unsigned j = 0; j < n; ++j)
        for (unsigned i = 0; i < n; ++i) B[i][j] = lattice_basis[j][i];
    ZZ det = detail::int_det(B);
    k.index = det < 0 ? -det : det;
    for (auto& v : lattice_basis) {
        gamma.normalize(v);
        if (!gamma.is_identity(v)) k.generators.push_back(std::move(v));
    }
    return k;
}

// --------------------------------------------------------------------------
// Finite groups by multiplication table.

class FiniteGroup {
public:
    explicit FiniteGroup(std::vector<std::vector<int>> table) : table_(std::move(table)) {
        n_ = static_cast<unsigned>(table_.size());
        if (n_ == 0) throw std::invalid_argument("FiniteGroup: empty table");
        for (const auto& row : table_) {
            if (row.size() != n_) throw std::invalid_argument("FiniteGroup: ragged table");
            for (int x : row)
                if (x < 0 || static_cast<unsigned>(x) >= n_)
                    throw std::invalid_argument("FiniteGroup: index out of range");
        }
        // identity
        id_ = n_;
        for (unsigned e = 0; e < n_; ++e) {
            bool ok = true;
            for (unsigned g = 0; g < n_ && ok; ++g)
                ok = (mul(e, g) == static_cast<int>(g)) && (mul(g, e) == static_cast<int>(g));
            if (ok) {
                id_ = e;
                break;
            }
        }
        if (id_ == n_) throw std::invalid_argument("FiniteGroup: no two-sided identity");
        // inverses
        inv_.assign(n_, -1);
        for (unsigned g = 0; g < n_; ++g) {
            for (unsigned h = 0; h < n_; ++h)
                if (mul(g, h) == static_cast<int>(id_) && mul(h, g) == static_cast<int>(id_)) {
                    inv_[g] = static_cast<int>(h);
                    break;
                }
            if (inv_[g] < 0) throw std::invalid_argument("FiniteGroup: missing inverse");
        }
        // associativity
        for (unsigned a = 0; a < n_; ++a)
            for (unsigned b = 0; b < n_; ++b)
                for (unsigned c = 0; c < n_; ++c)
                    if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                        throw std::invalid_argument("FiniteGroup: table is not associative");
    }

    unsigned order() const { return n_; }
    unsigned identity() const { return id_; }
    int mul(int a, int b) const { return table_[a][b]; }
    int inv(int a) const { return inv_[a]; }
    int conjugate(int g, int x) const { return mul(mul(g, x), inv_[g]); }
    int commutator(int a, int b) const { return mul(mul(inv_[a], inv_[b]), mul(a, b)); }
    const std::vector<std::vector<int>>& table() const { return table_; }

    std::vector<int> conjugacy_class(int x) const {
        std::vector<bool> in(n_, false);
        std::vector<int> cls;
        for (unsigned g = 0; g < n_; ++g) {
            int y = conjugate(static_cast<int>(g), x);
            if (!in[y]) {
                in[y] = true;
                cls.push_back(y);
            }
        }
        std::sort(cls.begin(), cls.end());
        return cls;
    }

    // closure of a subset under multiplication and inverses
    std::vector<int> closure(std::vector<int> gens) const {
        std::set<int> s(gens.begin(), gens.end());
        s.insert(static_cast<int>(id_));
        bool grew = true;
        while (grew) {
            grew = false;
            std::vector<int> cur(s.begin(), s.end());
            for (int a : cur)
                for (int b : cur) {
                    if (s.insert(mul(a, b)).second) grew = true;
                }
            for (int a : cur)
                if (s.insert(inv_[a]).second) grew = true;
        }
        return {s.begin(), s.end()};
    }

    // all subgroups (element sets, sorted), by closure growth from {e}
    std::vector<std::vector<int>> subgroups(unsigned order_cap = 64) const {
        if (n_ > order_cap)
            throw std::invalid_argument("FiniteGroup: subgroup enumeration cap exceeded");
        std::set<std::vector<int>> found;
        std::vector<std::vector<int>> frontier{{static_cast<int>(id_)}};
        found.insert(frontier[0]);
        while (!frontier.empty()) {
            std::vector<std::vector<int>> next;
            for (const auto& h : frontier) {
                for (unsigned g = 0; g < n_; ++g) {
                    if (std::binary_search(h.begin(), h.end(), static_cast<int>(g))) continue;
                    std::vector<int> gens = h;
                    gens.push_back(static_cast<int>(g));
                    auto k = closure(gens);
                    if (found.insert(k).second) next.push_back(k);
                }
            }
            frontier = std::move(next);
        }
        return {found.begin(), found.end()};
    }

    bool subset_abelian(const std::vector<int>& s) const {
        for (int a : s)
            for (int b : s)
                if (mul(a, b) != mul(b, a)) return false;
        return true;
    }

private:
    std::vector<std::vector<int>> table_;
    std::vector<int> inv_;
    unsigned n_ = 0;
    unsigned id_ = 0;
};

struct ConjugacyProfile {
    std::vector<std::vector<int>> classes;       // partition of G
    std::vector<unsigned> class_size_of;         // per element
    std::vector<int> commutator_subgroup;        // sorted element list
    // delta_k(G) = elements whose class size is <= k; sizes indexed by k=1..|G|
    std::vector<unsigned> delta_sizes;
    bool nw_forward_holds = false;    // |[G,G]| = k  =>  G = Delta_k(G)
    unsigned k_commutator = 0;        // |[G,G]|
    unsigned k_fc = 0;                // max class size (minimal k with Delta_k = G)
    bool nw_converse_bound_holds = false;  // |[G,G]| < (k^4)^{k^4} with k = k_fc
};

inline ConjugacyProfile conjugacy_profile(const FiniteGroup& g) {
    ConjugacyProfile p;
    unsigned n = g.order();
    p.class_size_of.assign(n, 0);
    std::vector<bool> done(n, false);
    for (unsigned x = 0; x < n; ++x) {
        if (done[x]) continue;
        auto cls = g.conjugacy_class(static_cast<int>(x));
        for (int y : cls) {
            done[y] = true;
            p.class_size_of[y] = static_cast<unsigned>(cls.size());
        }
        p.classes.push_back(std::move(cls));
    }
    std::vector<int> comms;
    for (unsigned a = 0; a < n; ++a)
        for (unsigned b = 0; b < n; ++b) comms.push_back(g.commutator(a, b));
    p.commutator_subgroup = g.closure(comms);
    p.k_commutator = static_cast<unsigned>(p.commutator_subgroup.size());

    p.delta_sizes.assign(n + 1, 0);
    for (unsigned k = 1; k <= n; ++k) {
        unsigned cnt = 0;
        for (unsigned x = 0; x < n; ++x)
            if (p.class_size_of[x] <= k) ++cnt;
        p.delta_sizes[k] = cnt;
    }
    p.k_fc = *std::max_element(p.class_size_of.begin(), p.class_size_of.end());
    p.nw_forward_holds = (p.delta_sizes[std::min(p.k_commutator, n)] == n);
    // converse bound |[G,G]| < (k^4)^{k^4}, compared via logarithms; the bound
    // itself is astronomically large for k beyond a few
    {
        double lhs = std::log(static_cast<double>(p.k_commutator));
        double k4 = std::pow(static_cast<double>(p.k_fc), 4.0);
        double rhs = k4 * std::log(k4);
        p.nw_converse_bound_holds = lhs < rhs;
    }
    return p;
}

inline std::vector<int> delta_k(const FiniteGroup& g, unsigned k) {
    std::vector<int> r;
    for (unsigned x = 0; x < g.order(); ++x)
        if (g.conjugacy_class(static_cast<int>(x)).size() <= k) r.push_back(static_cast<int>(x));
    return r;
}

// Maximal-order abelian subgroup satisfying `pred` (if given); nullopt when
// none qualifies. Throws when |G| exceeds the enumeration cap.
inline std::optional<std::vector<int>> find_abelian_finite_index(
    const FiniteGroup& g, const std::function<bool(const std::vector<int>&)>& pred = nullptr,
    unsigned order_cap = 64) {
    auto subs = g.subgroups(order_cap);
    std::optional<std::vector<int>> best;
    for (const auto& s : subs) {
        if (!g.subset_abelian(s)) continue;
        if (pred && !pred(s)) continue;
        if (!best || s.size() > best->size()) best = s;
    }
    return best;
}

}  // namespace hopfpi
