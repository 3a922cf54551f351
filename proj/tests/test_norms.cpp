#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "normtop/errors.hpp"
#include "normtop/norms.hpp"
#include "normtop/sampling.hpp"

using namespace normtop;

namespace {

NormExpr diag(std::map<Index, Rat> weights, Rat def = Rat(1)) {
    return NormExpr::diagonal(WeightFunction(std::move(weights), std::move(def)));
}

std::vector<FinVector> seeded_samples(std::uint64_t seed, std::size_t count, const IndexSet& slice) {
    SampleGen gen(seed);
    std::vector<FinVector> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        out.push_back(gen.next_vector(slice, slice.size(), 32, 32));
    return out;
}

} // namespace

TEST_CASE("constructors reject degenerate input") {
    CHECK_THROWS_AS(WeightFunction({{0, Rat(0)}}, Rat(1)), InvalidArgument);
    CHECK_THROWS_AS(WeightFunction({}, Rat(0)), InvalidArgument);
    CHECK_THROWS_AS(NormExpr::scale(Rat(0), NormExpr::uniform()), InvalidArgument);
    CHECK_THROWS_AS(NormExpr::scale(Rat(-2), NormExpr::uniform()), InvalidArgument);
    CHECK_THROWS_AS(NormExpr::max_of({}), InvalidArgument);
    CHECK_THROWS_AS(NormExpr::sup_family({}), InvalidArgument);
    CHECK_THROWS_AS(NormExpr::sup_family({{NormExpr::uniform(), Rat(0)}}), InvalidArgument);
    CHECK_THROWS_AS(NormExpr::extension(NormExpr::uniform(), Flag(IndexSet({0}), {1}), {Rat(0)}),
                    InvalidArgument);
    CHECK_THROWS_AS(NormExpr::extension(NormExpr::uniform(), Flag(IndexSet({0}), {1}), {}),
                    InvalidArgument);
}

TEST_CASE("supremum norm on basis vectors") {
    const NormExpr sup = NormExpr::uniform();
    for (Index k : {0u, 1u, 7u, 100u})
        CHECK(eval_norm(sup, FinVector::unit(k)) == 1);
    CHECK(eval_norm(sup, FinVector()) == 0);
}

TEST_CASE("diagonal norm with schema weights") {
    // w(k) = f(i,k)+1 gives N_i(e_k) = f(i,k)+1
    const NormExpr n = diag({{0, Rat(8)}, {3, Rat(6)}});
    CHECK(eval_norm(n, FinVector::unit(0)) == 8);
    CHECK(eval_norm(n, FinVector::unit(3)) == 6);
    CHECK(eval_norm(n, FinVector::unit(9)) == 1);
    CHECK(eval_norm(n, FinVector()) == 0);
}

TEST_CASE("scale, max and sup-family evaluation") {
    const NormExpr base = NormExpr::uniform();
    const NormExpr five = NormExpr::scale(Rat(5), base);
    const FinVector v = add(FinVector::unit(0), FinVector::scaled_unit(1, make_rat(1, 2)));
    CHECK(eval_norm(five, v) == 5 * eval_norm(base, v));

    const NormExpr a = diag({{0, Rat(1)}, {1, Rat(4)}});
    const NormExpr b = diag({{0, Rat(3)}, {1, Rat(2)}});
    const NormExpr m = NormExpr::max_of({a, b});
    CHECK(eval_norm(m, FinVector::unit(0)) == 3);
    CHECK(eval_norm(m, FinVector::unit(1)) == 4);

    const NormExpr fam = NormExpr::sup_family({{a, Rat(1)}, {b, Rat(2)}});
    CHECK(eval_norm(fam, FinVector::unit(0)) == rat_max(Rat(1), make_rat(3, 2)));
    CHECK(eval_norm(fam, FinVector::unit(1)) == 4);
}

TEST_CASE("extension evaluation and domain") {
    // N'(y + lambda x) = max(N(y), eps^{-1} |lambda|)
    const NormExpr ext =
        NormExpr::extension(NormExpr::uniform(), Flag(IndexSet({0}), {1}), {make_rat(1, 2)});
    CHECK(eval_norm(ext, FinVector::unit(0)) == 1);
    CHECK(eval_norm(ext, FinVector::unit(1)) == 2);
    CHECK(eval_norm(ext, add(FinVector::unit(0), FinVector::scaled_unit(1, make_rat(1, 4)))) == 1);
    CHECK_THROWS_AS(eval_norm(ext, FinVector::unit(2)), DomainViolation);

    CHECK(norm_domain(ext) == IndexSet({0, 1}));
    CHECK_FALSE(norm_domain(NormExpr::uniform()));

    // the extension agrees with its base on the base slice
    SampleGen gen(3);
    for (int i = 0; i < 50; ++i) {
        const FinVector y = gen.next_vector(IndexSet({0}), 1, 16, 16);
        CHECK(eval_norm(ext, y) == eval_norm(NormExpr::uniform(), y));
    }
}

TEST_CASE("weight profile matches structural evaluation") {
    const NormExpr a = diag({{0, Rat(2)}, {2, make_rat(1, 3)}});
    const NormExpr chain =
        NormExpr::extension(a, Flag(IndexSet({0, 2}), {5, 6}), {make_rat(1, 2), make_rat(1, 8)});
    const NormExpr expr = NormExpr::sup_family(
        {{NormExpr::max_of({chain, NormExpr::scale(Rat(3), chain)}), Rat(2)}, {chain, Rat(1)}});

    const WeightProfile p = weight_profile(expr);
    REQUIRE(p.domain());
    CHECK(*p.domain() == IndexSet({0, 2, 5, 6}));

    SampleGen gen(11);
    for (int i = 0; i < 100; ++i) {
        const FinVector v = gen.next_vector(IndexSet({0, 2, 5, 6}), 4, 32, 32);
        Rat via_profile(0);
        for (const auto& [k, x] : v.coords())
            via_profile = rat_max(via_profile, Rat(p.at(k) * rat_abs(x)));
        CHECK(via_profile == eval_norm(expr, v));
    }
    CHECK_THROWS_AS(p.at(1), DomainViolation);
}

TEST_CASE("check_norm_axioms") {
    const IndexSet slice({0, 1, 2});
    std::vector<FinVector> samples = seeded_samples(5, 20, slice);
    samples.push_back(FinVector::unit(0));
    samples.push_back(FinVector::unit(1));
    samples.push_back(add(FinVector::unit(0), FinVector::unit(1)));

    CHECK(check_norm_axioms(NormExpr::uniform(), samples).passed);
    CHECK(check_norm_axioms(NormExpr::max_of({diag({{0, Rat(2)}}), diag({{1, Rat(3)}})}), samples)
              .passed);
}

TEST_CASE("ball boxes") {
    const FinVector zero;

    SUBCASE("unit ball of the absolute value") {
        const Box b = ball_box(NormExpr::uniform(), IndexSet({0}), Rat(1), zero);
        CHECK(b.bounds_at(0) == std::pair<Rat, Rat>(Rat(-1), Rat(1)));
    }
    SUBCASE("weight 2 halves the interval") {
        const Box b = ball_box(diag({{0, Rat(2)}}), IndexSet({0}), Rat(1), zero);
        CHECK(b.bounds_at(0) == std::pair<Rat, Rat>(make_rat(-1, 2), make_rat(1, 2)));
    }
    SUBCASE("extension box") {
        const NormExpr ext =
            NormExpr::extension(NormExpr::uniform(), Flag(IndexSet({0}), {1}), {make_rat(1, 2)});
        const Box b = ball_box(ext, IndexSet({0, 1}), Rat(1), zero);
        CHECK(b.bounds_at(0) == std::pair<Rat, Rat>(Rat(-1), Rat(1)));
        CHECK(b.bounds_at(1) == std::pair<Rat, Rat>(make_rat(-1, 2), make_rat(1, 2)));
    }
    SUBCASE("membership in the box agrees with the norm inequality") {
        const NormExpr n = diag({{0, Rat(2)}, {1, make_rat(1, 3)}});
        const FinVector center = FinVector::scaled_unit(0, make_rat(1, 4));
        const Box b = ball_box(n, IndexSet({0, 1}), make_rat(3, 2), center);
        SampleGen gen(17);
        for (int i = 0; i < 200; ++i) {
            const FinVector p = gen.next_vector(IndexSet({0, 1}), 2, 8, 4);
            const bool in_box = b.contains(p);
            const bool in_ball = eval_norm(n, subtract(p, center)) <= make_rat(3, 2);
            CHECK(in_box == in_ball);
        }
    }
    SUBCASE("center outside the slice is an error") {
        CHECK_THROWS_AS(ball_box(NormExpr::uniform(), IndexSet({0}), Rat(1), FinVector::unit(3)),
                        DomainViolation);
    }
}

TEST_CASE("box vertices") {
    const Box b(IndexSet({0, 2}), {{Rat(-1), Rat(1)}, {Rat(0), Rat(2)}});
    const auto vs = b.vertices();
    CHECK(vs.size() == 4);
    for (const FinVector& v : vs)
        CHECK(b.contains(v));
}
