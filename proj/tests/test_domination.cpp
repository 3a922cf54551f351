#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "normtop/domination.hpp"
#include "normtop/errors.hpp"
#include "normtop/sampling.hpp"

using namespace normtop;

namespace {

FuncTable grid(std::size_t rows, std::size_t cols, Nat (*f)(std::size_t, std::size_t)) {
    FuncTable t(rows, cols);
    for (std::size_t x = 0; x < rows; ++x)
        for (std::size_t y = 0; y < cols; ++y)
            t.set(x, y, f(x, y));
    return t;
}

// Independent oracle: g(n) as a literal maximum over the leading square.
std::vector<Nat> leading_square_maxima(const FuncTable& f) {
    const std::size_t n = std::max(f.rows(), f.cols());
    std::vector<Nat> g(n, Nat(0));
    for (std::size_t m = 0; m < n; ++m) {
        Nat best(0);
        for (std::size_t x = 0; x <= m && x < f.rows(); ++x)
            for (std::size_t y = 0; y <= m && y < f.cols(); ++y)
                best = std::max(best, f.at(x, y));
        g[m] = best;
    }
    return g;
}

NormExpr diag(std::map<Index, Rat> weights, Rat def = Rat(1)) {
    return NormExpr::diagonal(WeightFunction(std::move(weights), std::move(def)));
}

} // namespace

TEST_CASE("solve_sepdom_table: zero function") {
    const FuncTable t(10, 10);
    const SepDomCert cert = solve_sepdom_table(t);
    for (const Nat& v : cert.G)
        CHECK(v == 0);
    CHECK(check_sepdom(t, cert).ok);
}

TEST_CASE("solve_sepdom_table: f(k,l) = k+l gives g(n) = 2n") {
    const FuncTable t = grid(10, 10, [](std::size_t x, std::size_t y) { return Nat(x + y); });
    const SepDomCert cert = solve_sepdom_table(t);
    const std::vector<Nat> oracle = leading_square_maxima(t);
    for (std::size_t n = 0; n < 10; ++n) {
        CHECK(cert.G[n] == Nat(2 * n));
        CHECK(cert.G[n] == oracle[n]);
    }
    CHECK(cert.H == cert.G);
    // exhaustive: k+l <= max(2k, 2l) on all 100 entries
    CHECK(check_sepdom(t, cert).ok);
}

TEST_CASE("solve_sepdom_table: f(k,l) = k*l gives g(n) = n^2") {
    const FuncTable t = grid(8, 8, [](std::size_t x, std::size_t y) { return Nat(x * y); });
    const SepDomCert cert = solve_sepdom_table(t);
    const std::vector<Nat> oracle = leading_square_maxima(t);
    for (std::size_t n = 0; n < 8; ++n) {
        CHECK(cert.G[n] == Nat(n * n));
        CHECK(cert.G[n] == oracle[n]);
    }
    CHECK(check_sepdom(t, cert).ok);
}

TEST_CASE("solve_sepdom_table: rectangular tables are padded") {
    const FuncTable t = grid(3, 7, [](std::size_t x, std::size_t y) { return Nat(x * 10 + y); });
    const SepDomCert cert = solve_sepdom_table(t);
    CHECK(cert.G.size() == 3);
    CHECK(cert.H.size() == 7);
    CHECK(check_sepdom(t, cert).ok);
    const std::vector<Nat> oracle = leading_square_maxima(t);
    for (std::size_t n = 0; n < 7; ++n)
        CHECK(cert.H[n] == oracle[n]);
}

TEST_CASE("solve output is non-decreasing on random tables") {
    SampleGen gen(101);
    for (int round = 0; round < 50; ++round) {
        FuncTable t(12, 12);
        for (std::size_t x = 0; x < 12; ++x)
            for (std::size_t y = 0; y < 12; ++y)
                t.set(x, y, Nat(gen.next_below(1000)));
        const SepDomCert cert = solve_sepdom_table(t);
        for (std::size_t n = 1; n < cert.G.size(); ++n)
            CHECK(cert.G[n - 1] <= cert.G[n]);
        CHECK(check_sepdom(t, cert).ok);
    }
}

TEST_CASE("check_sepdom finds the first violation") {
    FuncTable t(1, 1);
    t.set(0, 0, Nat(5));
    SepDomCert cert{CertForm::Max, {Nat(0)}, {Nat(0)}};
    const SepDomCheck r = check_sepdom(t, cert);
    CHECK_FALSE(r.ok);
    CHECK(r.violation == std::pair<std::size_t, std::size_t>(0, 0));

    SepDomCert wrong_size{CertForm::Max, {Nat(0), Nat(0)}, {Nat(0)}};
    CHECK_THROWS_AS(check_sepdom(t, wrong_size), InvalidArgument);
}

TEST_CASE("max_to_product") {
    SUBCASE("zero certificate bounds by one") {
        const SepDomCert p = max_to_product({CertForm::Max, {Nat(0)}, {Nat(0)}});
        CHECK(p.form == CertForm::Product);
        CHECK(p.G[0] == 1);
        CHECK(p.H[0] == 1);
    }
    SUBCASE("single entry: max(3,4) <= 4*5") {
        const SepDomCert p = max_to_product({CertForm::Max, {Nat(3)}, {Nat(4)}});
        CHECK(p.G[0] * p.H[0] == 20);
    }
    SUBCASE("the product form still certifies the k+l table") {
        const FuncTable t = grid(10, 10, [](std::size_t x, std::size_t y) { return Nat(x + y); });
        const SepDomCert p = max_to_product(solve_sepdom_table(t));
        CHECK(check_sepdom(t, p).ok);
    }
    CHECK_THROWS_AS(max_to_product({CertForm::Product, {}, {}}), InvalidArgument);
}

TEST_CASE("product_to_max") {
    SUBCASE("zeros stay zero, ones stay one") {
        const SepDomCert a = product_to_max({Rat(0)}, {Rat(0)});
        CHECK(a.G[0] == 0);
        CHECK(a.H[0] == 0);
        const SepDomCert b = product_to_max({Rat(1)}, {Rat(1)});
        CHECK(b.G[0] == 1);
        CHECK(b.H[0] == 1);
    }
    SUBCASE("ceiled squares: g=3/2, h=2") {
        const SepDomCert c = product_to_max({make_rat(3, 2)}, {Rat(2)});
        CHECK(c.G[0] == 3); // ceil(9/4)
        CHECK(c.H[0] == 4);
        CHECK(std::max(c.G[0], c.H[0]) >= 3); // covers the product bound 3
    }
    CHECK_THROWS_AS(product_to_max({Rat(-1)}, {Rat(0)}), InvalidArgument);
}

TEST_CASE("round-trip: max -> product -> max still certifies") {
    SampleGen gen(202);
    for (int round = 0; round < 25; ++round) {
        FuncTable t(9, 9);
        for (std::size_t x = 0; x < 9; ++x)
            for (std::size_t y = 0; y < 9; ++y)
                t.set(x, y, Nat(gen.next_below(500)));
        const SepDomCert m = solve_sepdom_table(t);
        const SepDomCert p = max_to_product(m);
        CHECK(check_sepdom(t, p).ok);
        std::vector<Rat> g, h;
        for (const Nat& v : p.G)
            g.emplace_back(v);
        for (const Nat& v : p.H)
            h.emplace_back(v);
        const SepDomCert back = product_to_max(g, h);
        CHECK(check_sepdom(t, back).ok);
    }
}

TEST_CASE("equivalence constants") {
    const IndexSet J({0, 1});
    const NormExpr ones = NormExpr::uniform();

    SUBCASE("identical norms") {
        CHECK(equivalence_constant(ones, ones, J) == 1);
    }
    SUBCASE("diagonal (2,3) against (1,1)") {
        const EquivConstant r = equivalence_constant_detail(diag({{0, Rat(2)}, {1, Rat(3)}}), ones, J);
        CHECK(r.c == 3);
        // the witness is tight
        CHECK(eval_norm(diag({{0, Rat(2)}, {1, Rat(3)}}), r.witness) == r.c * eval_norm(ones, r.witness));
    }
    SUBCASE("homogeneity: Scale(5, N) against N") {
        CHECK(equivalence_constant(NormExpr::scale(Rat(5), ones), ones, J) == 5);
    }
    SUBCASE("reciprocal product is at least one") {
        SampleGen gen(7);
        for (int round = 0; round < 40; ++round) {
            std::map<Index, Rat> wa, wb;
            for (Index k : {0u, 1u, 2u}) {
                wa[k] = rat_abs(gen.next_scalar(9, 4)) + 1;
                wb[k] = rat_abs(gen.next_scalar(9, 4)) + 1;
            }
            const NormExpr na = diag(wa), nb = diag(wb);
            const IndexSet K({0, 1, 2});
            CHECK(equivalence_constant(na, nb, K) * equivalence_constant(nb, na, K) >= 1);
        }
    }
    SUBCASE("norm not defined on the slice") {
        const NormExpr ext = NormExpr::extension(ones, Flag(IndexSet({0}), {1}), {Rat(1)});
        CHECK_THROWS_AS(equivalence_constant(ext, ones, IndexSet({0, 5})), DomainViolation);
    }
}

TEST_CASE("dominate_family") {
    SUBCASE("single member") {
        const DomCert cert = dominate_family({NormExpr::uniform()}, std::nullopt, {});
        CHECK(cert.constants == std::vector<Rat>{Rat(1)});
        CHECK(eval_norm(cert.dominating, FinVector::unit(0)) == 1);
    }
    SUBCASE("coordinate-wise max of two diagonals") {
        const DomCert cert = dominate_family(
            {diag({{0, Rat(1)}, {1, Rat(4)}}), diag({{0, Rat(3)}, {1, Rat(2)}})}, std::nullopt, {});
        CHECK(eval_norm(cert.dominating, FinVector::unit(0)) == 3);
        CHECK(eval_norm(cert.dominating, FinVector::unit(1)) == 4);
    }
    SUBCASE("scaled members with matching constants collapse to the base") {
        const NormExpr base = NormExpr::uniform();
        std::vector<NormExpr> members;
        std::vector<Rat> g;
        for (int i = 0; i < 10; ++i) {
            members.push_back(NormExpr::scale(Rat(i + 1), base));
            g.emplace_back(i + 1);
        }
        SampleGen gen(5);
        std::vector<FinVector> samples;
        for (int i = 0; i < 30; ++i)
            samples.push_back(gen.next_vector(IndexSet({0, 1, 2, 3}), 3, 16, 16));
        const DomCert cert = dominate_family(members, g, samples);
        for (const FinVector& v : cert.checked_on) {
            const Rat dom = eval_norm(cert.dominating, v);
            CHECK(dom == eval_norm(base, v));
            for (std::size_t i = 0; i < members.size(); ++i)
                CHECK(eval_norm(members[i], v) == cert.constants[i] * dom); // equality throughout
        }
    }
    CHECK_THROWS_AS(dominate_family({}, std::nullopt, {}), InvalidArgument);
    CHECK_THROWS_AS(dominate_family({NormExpr::uniform()}, std::vector<Rat>{Rat(0)}, {}),
                    InvalidArgument);
}

TEST_CASE("schema_norms") {
    SUBCASE("zero schema gives the supremum norm everywhere") {
        const WeightSchema schema{FuncTable(4, 4)};
        for (const NormExpr& n : schema_norms(schema))
            for (Index k : {0u, 1u, 2u, 3u, 9u})
                CHECK(eval_norm(n, FinVector::unit(k)) == 1);
    }
    SUBCASE("f(i,k) = i+k") {
        const WeightSchema schema{
            grid(5, 5, [](std::size_t i, std::size_t k) { return Nat(i + k); })};
        const auto norms = schema_norms(schema);
        CHECK(eval_norm(norms[2], FinVector::unit(3)) == 6); // f(2,3)+1
        for (std::size_t i = 0; i < 5; ++i)
            for (Index k = 0; k < 5; ++k)
                CHECK(eval_norm(norms[i], FinVector::unit(k)) == Rat(Nat(i + k + 1)));
    }
    SUBCASE("single cell") {
        FuncTable t(1, 1);
        t.set(0, 0, Nat(7));
        const auto norms = schema_norms(WeightSchema{t});
        CHECK(eval_norm(norms[0], FinVector::unit(0)) == 8);
    }
}

TEST_CASE("dominate_schema") {
    SUBCASE("zero schema against the supremum norm") {
        const WeightSchema schema{FuncTable(3, 3)};
        const std::vector<IndexSet> slices = {IndexSet({0}), IndexSet({0, 1}), IndexSet({0, 1, 2})};
        const SchemaDomination r = dominate_schema(schema, NormExpr::uniform(), slices, {});
        for (std::size_t i = 0; i < r.constant_table.rows(); ++i)
            for (std::size_t j = 0; j < r.constant_table.cols(); ++j)
                CHECK(r.constant_table.at(i, j) == 1);
        CHECK(check_sepdom(r.constant_table, r.table_cert).ok);
    }
    SUBCASE("f(i,k) = i*k, exhaustive pipeline check") {
        const WeightSchema schema{
            grid(4, 4, [](std::size_t i, std::size_t k) { return Nat(i * k); })};
        const std::vector<IndexSet> slices = {IndexSet({0, 1, 2, 3}), IndexSet({1, 3}), IndexSet({2})};
        SampleGen gen(99);
        std::vector<FinVector> samples;
        for (int i = 0; i < 100; ++i)
            samples.push_back(gen.next_vector(IndexSet({0, 1, 2, 3}), 4, 32, 32));
        const SchemaDomination r = dominate_schema(schema, NormExpr::uniform(), slices, samples);

        // c(i,J) = max_{k in J} (ik+1) for the all-ones reference
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < slices.size(); ++j) {
                Nat expected(0);
                for (const Index k : slices[j])
                    expected = std::max(expected, Nat(i * k + 1));
                CHECK(r.constant_table.at(i, j) == expected);
            }
        CHECK(check_sepdom(r.constant_table, r.table_cert).ok);

        // the certificate inequality holds on everything it was checked on
        for (const FinVector& v : r.cert.checked_on) {
            const Rat dom = eval_norm(r.cert.dominating, v);
            for (std::size_t i = 0; i < r.members.size(); ++i)
                CHECK(eval_norm(r.members[i], v) <= r.cert.constants[i] * dom);
        }
        // and the sup norm is below the reference on covered supports
        for (const FinVector& v : samples)
            CHECK(eval_norm(r.cert.dominating, v) <= eval_norm(NormExpr::uniform(), v));
    }
    SUBCASE("single index, single slice") {
        FuncTable t(1, 2);
        t.set(0, 0, Nat(4));
        t.set(0, 1, Nat(2));
        const SchemaDomination r =
            dominate_schema(WeightSchema{t}, NormExpr::uniform(), {IndexSet({0, 1})}, {});
        CHECK(r.members.size() == 1);
        CHECK(r.constant_table.at(0, 0) == 5);
    }
    SUBCASE("sample outside every slice is an error") {
        const WeightSchema schema{FuncTable(2, 2)};
        CHECK_THROWS_AS(dominate_schema(schema, NormExpr::uniform(), {IndexSet({0, 1})},
                                        {FinVector::unit(5)}),
                        PreconditionFailure);
    }
}
