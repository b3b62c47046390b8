#include "hopfpi/freealg.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace hopfpi;

namespace {

NcPoly x(unsigned i, const FieldCtx& ctx) { return NcPoly::generator(i, ctx); }

NcPoly random_ncpoly(const FieldCtx& ctx, std::mt19937_64& rng, unsigned ngens = 3,
                     unsigned nterms = 3, unsigned maxlen = 3) {
    std::uniform_int_distribution<int> coeff(-5, 5);
    std::uniform_int_distribution<unsigned> len(0, maxlen), gen(0, ngens - 1);
    NcPoly p(ctx);
    for (unsigned t = 0; t < nterms; ++t) {
        Word w(len(rng));
        for (auto& g : w) g = gen(rng);
        p.add_term(w, ctx.integer(coeff(rng)));
    }
    return p;
}

}  // namespace

TEST_CASE("nc_multiply basics") {
    auto ctx = FieldCtx::rational();
    auto x1 = x(0, ctx), x2 = x(1, ctx);

    CHECK(nc_multiply(x1, x2) == NcPoly::monomial({0, 1}, ctx.one()));

    // (x1 + x2) * x1 = x1 x1 + x2 x1
    NcPoly lhs = nc_multiply(x1 + x2, x1);
    NcPoly expect = NcPoly::monomial({0, 0}, ctx.one()) + NcPoly::monomial({1, 0}, ctx.one());
    CHECK(lhs == expect);

    // multiplication by the empty word is the identity
    NcPoly comm = x1 * x2 - x2 * x1;
    CHECK(nc_multiply(comm, NcPoly::one(ctx)) == comm);

    // field mismatch is an error
    auto rf = FieldCtx::rational_function();
    CHECK_THROWS_AS(nc_multiply(x1, NcPoly::generator(0, rf)), std::invalid_argument);

    // associativity and bilinearity on random triples
    std::mt19937_64 rng(7);
    for (int i = 0; i < 30; ++i) {
        NcPoly a = random_ncpoly(ctx, rng), b = random_ncpoly(ctx, rng),
               c = random_ncpoly(ctx, rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("standard polynomial") {
    auto ctx = FieldCtx::rational();

    CHECK(standard_polynomial(2, ctx) == x(0, ctx) * x(1, ctx) - x(1, ctx) * x(0, ctx));

    auto s3 = standard_polynomial(3, ctx);
    CHECK(s3.terms.size() == 6);
    // coefficient of x3 x2 x1 is -1 (the 3-letter order reversal is odd)
    CHECK(s3.terms.at(Word{2, 1, 0}) == -ctx.one());

    auto s4 = standard_polynomial(4, ctx);
    CHECK(s4.terms.size() == 24);
}

TEST_CASE("standard polynomial is alternating in its argument slots") {
    auto ctx = FieldCtx::rational();
    for (unsigned n = 2; n <= 5; ++n) {
        auto t = MultilinearTemplate::sign_vector(n, ctx);
        NcPolyOps ops{ctx};
        std::vector<NcPoly> args;
        for (unsigned i = 0; i < n; ++i) args.push_back(x(i, ctx));
        NcPoly base = substitute_multilinear<NcPoly>(t, ShapeSpec::plain(), args, {}, ops);
        CHECK(base == standard_polynomial(n, ctx));
        for (unsigned i = 0; i + 1 < n; ++i) {
            auto swapped = args;
            std::swap(swapped[i], swapped[i + 1]);
            NcPoly alt = substitute_multilinear<NcPoly>(t, ShapeSpec::plain(), swapped, {}, ops);
            CHECK(alt == NcPoly::zero(ctx) - base);
        }
        // repeated argument kills the alternating sum
        if (n >= 2) {
            auto degen = args;
            degen[1] = degen[0];
            CHECK(substitute_multilinear<NcPoly>(t, ShapeSpec::plain(), degen, {}, ops).is_zero());
        }
    }
}

TEST_CASE("q-commutator") {
    auto ctx = FieldCtx::cyclotomic(4);
    auto a = x(0, ctx), b = x(1, ctx);

    CHECK(q_commutator(a, b, ctx.one()) == a * b - b * a);
    CHECK(q_commutator(a, a, ctx.one()).is_zero());

    Scalar z = ctx.zeta();
    NcPoly expect = a * b - z * (b * a);
    CHECK(q_commutator(a, b, z) == expect);
}

TEST_CASE("substitution is linear in each slot") {
    auto ctx = FieldCtx::rational();
    NcPolyOps ops{ctx};
    std::mt19937_64 rng(99);
    auto t = MultilinearTemplate::sign_vector(3, ctx);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<NcPoly> args{random_ncpoly(ctx, rng), random_ncpoly(ctx, rng),
                                 random_ncpoly(ctx, rng)};
        NcPoly u = random_ncpoly(ctx, rng), v = random_ncpoly(ctx, rng);
        Scalar c = ctx.integer(3);
        for (unsigned slot = 0; slot < 3; ++slot) {
            auto a1 = args, a2 = args, a3 = args;
            a1[slot] = u;
            a2[slot] = v;
            a3[slot] = u + c * v;
            NcPoly e1 = substitute_multilinear<NcPoly>(t, ShapeSpec::plain(), a1, {}, ops);
            NcPoly e2 = substitute_multilinear<NcPoly>(t, ShapeSpec::plain(), a2, {}, ops);
            NcPoly e3 = substitute_multilinear<NcPoly>(t, ShapeSpec::plain(), a3, {}, ops);
            CHECK(e3 == e1 + c * e2);
        }
    }
}

TEST_CASE("plain evaluation of S_2 equals the ring commutator") {
    auto ctx = FieldCtx::rational();
    NcPolyOps ops{ctx};
    auto t = MultilinearTemplate::sign_vector(2, ctx);
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        NcPoly a = random_ncpoly(ctx, rng), b = random_ncpoly(ctx, rng);
        std::vector<NcPoly> args{a, b};
        NcPoly s2 = substitute_multilinear<NcPoly>(t, ShapeSpec::plain(), args, {}, ops);
        CHECK(s2 == a * b - b * a);
    }
}

TEST_CASE("q_comm shape with q = 1 vanishes on commuting arguments") {
    auto ctx = FieldCtx::rational();
    NcPolyOps ops{ctx};
    auto t = MultilinearTemplate::sign_vector(2, ctx);
    // powers of a single generator commute
    NcPoly g = x(0, ctx);
    std::vector<NcPoly> xs{g, g * g}, ys{g * g * g, g};
    NcPoly r = substitute_multilinear<NcPoly>(t, ShapeSpec::q_comm(ctx.one()), xs, ys, ops);
    CHECK(r.is_zero());
}

TEST_CASE("template shape errors") {
    auto ctx = FieldCtx::rational();
    NcPolyOps ops{ctx};
    auto t = MultilinearTemplate::sign_vector(2, ctx);
    std::vector<NcPoly> three{x(0, ctx), x(1, ctx), x(2, ctx)};
    CHECK_THROWS_AS(substitute_multilinear<NcPoly>(t, ShapeSpec::plain(), three, {}, ops),
                    std::invalid_argument);
    std::vector<NcPoly> two{x(0, ctx), x(1, ctx)};
    CHECK_THROWS_AS(substitute_multilinear<NcPoly>(t, ShapeSpec::ad_form(), two, two, ops),
                    std::invalid_argument);  // free algebra has no adjoint action
}

TEST_CASE("permutation order and signs") {
    auto perms = permutations::all(3);
    REQUIRE(perms.size() == 6);
    CHECK(perms.front() == std::vector<unsigned>{0, 1, 2});
    CHECK(perms.back() == std::vector<unsigned>{2, 1, 0});
    CHECK(permutations::sign(perms.front()) == 1);
    CHECK(permutations::sign({1, 0, 2}) == -1);
    CHECK(permutations::factorial(6) == 720);
}
