#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "normtop/errors.hpp"
#include "normtop/json_io.hpp"
#include "normtop/sampling.hpp"

using namespace normtop;
using io::json;

namespace {

// Random norm expression over the given slice, small depth.
NormExpr random_norm(SampleGen& gen, int depth) {
    const auto positive = [&gen] { return rat_abs(gen.next_scalar(9, 4)) + make_rat(1, 7); };
    if (depth == 0 || gen.next_below(3) == 0) {
        std::map<Index, Rat> weights;
        const std::size_t n = gen.next_below(4);
        for (std::size_t i = 0; i < n; ++i)
            weights[static_cast<Index>(gen.next_below(6))] = positive();
        return NormExpr::diagonal(WeightFunction(std::move(weights), positive()));
    }
    switch (gen.next_below(3)) {
    case 0:
        return NormExpr::scale(positive(), random_norm(gen, depth - 1));
    case 1: {
        std::vector<NormExpr> members;
        const std::size_t n = 1 + gen.next_below(3);
        for (std::size_t i = 0; i < n; ++i)
            members.push_back(random_norm(gen, depth - 1));
        return NormExpr::max_of(std::move(members));
    }
    default: {
        std::vector<NormExpr::SupFamily::Member> members;
        const std::size_t n = 1 + gen.next_below(3);
        for (std::size_t i = 0; i < n; ++i)
            members.push_back({random_norm(gen, depth - 1), positive()});
        return NormExpr::sup_family(std::move(members));
    }
    }
}

} // namespace

TEST_CASE("rationals and vectors") {
    CHECK(io::to_json(make_rat(-1, 3)) == "-1/3");
    CHECK(io::rat_from_json(json("2/6")) == make_rat(1, 3));
    CHECK(io::rat_from_json(json(7)) == Rat(7));
    CHECK_THROWS_AS(io::rat_from_json(json(1.5)), InvalidArgument);

    const FinVector v = combine(Rat(2), FinVector::unit(0), Rat(-1), FinVector::unit(5));
    const json j = io::to_json(v);
    CHECK(j == json{{"0", "2/1"}, {"5", "-1/1"}});
    CHECK(io::vector_from_json(j) == v);
    CHECK(io::vector_from_json(json::object()).is_zero());
    CHECK_THROWS_AS(io::vector_from_json(json{{"x", "1/1"}}), InvalidArgument);

    // explicit zero entries are dropped on parse
    CHECK(io::vector_from_json(json{{"3", "0/5"}}).is_zero());
}

TEST_CASE("norm expressions round-trip") {
    SampleGen gen(41);
    const IndexSet slice({0, 1, 2, 3, 4, 5});
    for (int round = 0; round < 60; ++round) {
        const NormExpr n = random_norm(gen, 3);
        const NormExpr back = io::norm_from_json(io::to_json(n));
        CHECK(n == back);
        // and they evaluate identically
        const FinVector v = gen.next_vector(slice, 4, 16, 16);
        CHECK(eval_norm(n, v) == eval_norm(back, v));
    }
}

TEST_CASE("extension expressions round-trip") {
    const NormExpr ext = NormExpr::extension(
        NormExpr::uniform(), Flag(IndexSet({0, 2}), {5, 6}), {make_rat(1, 2), make_rat(1, 8)});
    const json j = io::to_json(ext);
    CHECK(j.at("type") == "extension");
    CHECK(j.at("epsilons") == json::array({"1/2", "1/8"}));
    CHECK(io::norm_from_json(j) == ext);
}

TEST_CASE("tables and certificates") {
    FuncTable t(2, 3);
    t.set(0, 1, Nat(5));
    t.set(1, 2, Nat("123456789012345678901234567890"));
    const json j = io::to_json(t);
    CHECK(j.at("rows") == 2);
    CHECK(j.at("entries")[0][1] == 5);
    CHECK(j.at("entries")[1][2].is_string()); // too big for a JSON number
    const FuncTable back = io::table_from_json(j);
    CHECK(back.at(1, 2) == t.at(1, 2));

    const SepDomCert cert{CertForm::Max, {Nat(1), Nat(2)}, {Nat(3), Nat(4), Nat(5)}};
    const SepDomCert cert_back = io::sepdom_cert_from_json(io::to_json(cert));
    CHECK(cert_back.form == CertForm::Max);
    CHECK(cert_back.G == cert.G);
    CHECK(cert_back.H == cert.H);

    json bad = io::to_json(t);
    bad["rows"] = 7;
    CHECK_THROWS_AS(io::table_from_json(bad), InvalidArgument);
}

TEST_CASE("covers round-trip") {
    std::map<std::size_t, std::vector<BallSpec>> levels;
    levels[1].emplace_back(FinVector::unit(0), make_rat(1, 3), NormExpr::uniform(), true);
    levels[2].emplace_back(FinVector(), Rat(2), NormExpr::uniform(), false);
    const BallCover cover(Flag(IndexSet({0}), {1, 2}), std::move(levels));

    const BallCover back = io::cover_from_json(io::to_json(cover));
    CHECK(back.flag() == cover.flag());
    CHECK(back.ball_count() == 2);
    CHECK(back.levels().at(1).front().center == FinVector::unit(0));
    CHECK(back.levels().at(2).front().open == false);
}

TEST_CASE("ordinals round-trip") {
    const CnfOrdinal o({{2, 3}, {0, 5}});
    const json j = io::to_json(o);
    CHECK(j == json::array({json::array({2, 3}), json::array({0, 5})}));
    CHECK(io::ordinal_from_json(j) == o);
    CHECK(io::ordinal_from_json(json::array()).is_zero());
    CHECK_THROWS_AS(io::ordinal_from_json(json::array({json::array({1, 0})})), InvalidArgument);
}
