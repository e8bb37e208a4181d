#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "zorbit/weyl.hpp"

using namespace zorbit;

TEST_CASE("perm parsing and composition") {
    Perm p = Perm::parse("3 1 4 2 5");
    CHECK(p.str() == "3 1 4 2 5");
    CHECK((p * p.inverse()).is_identity());
    Perm a = Perm::parse("2 1 3"), b = Perm::parse("1 3 2");
    CHECK((a * b)(2) == a(b(2)));
    CHECK_THROWS(Perm::parse("1 1 2"));
    CHECK_THROWS(Perm::parse("1 x 2"));
    CHECK_THROWS(Perm::parse("0 1"));
}

TEST_CASE("model spec validation") {
    CHECK_NOTHROW(ModelSpec::make(Family::D, 6, 2));
    CHECK_NOTHROW(ModelSpec::make(Family::C, 6, 1));
    CHECK_THROWS_AS(ModelSpec::make(Family::D, 6, 1), SpecError);
    CHECK_THROWS_AS(ModelSpec::make(Family::B, 6, 2), SpecError);
    CHECK_THROWS_AS(ModelSpec::make(Family::C, 6, 2), SpecError);
    CHECK_THROWS_AS(ModelSpec::make(Family::A, 5, 3), SpecError);
    CHECK(ModelSpec::make(Family::B, 5, 2).ambient() == 6);
}

TEST_CASE("type length examples") {
    WeylKind d6{1, 6};
    Perm w = Perm::parse("6 5 3 4 2 1");
    CHECK(w.inversions() == 14);
    CHECK(type_length(w, d6) == 6);
    CHECK(coxeter_length(w, d6) == 6);
    CHECK_FALSE(in_weyl(Perm::parse("6 5 4 3 2 1"), d6));
    CHECK(in_weyl(Perm::parse("6 5 4 3 2 1"), WeylKind{-1, 6}));
    CHECK(type_length(Perm::parse("6 5 4 3 2 1"), WeylKind{-1, 6}) == 9);
    CHECK_THROWS(type_length(Perm::parse("2 1 3 4"), WeylKind{1, 4}));
}

TEST_CASE("type length agrees with word length") {
    for (int eps : {1, -1})
        for (int d = 1; d <= 7; ++d) {
            if (eps == -1 && d % 2) continue;
            WeylKind k{eps, d};
            auto bfs = oracle::bfs_lengths(k);
            auto all = enumerate_weyl(k);
            CHECK(all.size() == bfs.size());
            for (const auto& p : all) {
                CHECK(type_length(p, k) == bfs.at(p));
                CHECK(coxeter_length(p, k) == bfs.at(p));
            }
        }
}

TEST_CASE("weyl group orders and longest elements") {
    int h = 4;
    CHECK(enumerate_weyl(WeylKind{1, 8}).size() == 192);
    CHECK(enumerate_weyl(WeylKind{1, 9}).size() == 384);
    CHECK(enumerate_weyl(WeylKind{-1, 8}).size() == 384);
    CHECK(type_length(longest_element(WeylKind{1, 9}), WeylKind{1, 9}) == h * h);
    CHECK(type_length(longest_element(WeylKind{-1, 8}), WeylKind{-1, 8}) == h * h);
    CHECK(type_length(longest_element(WeylKind{1, 8}), WeylKind{1, 8}) == h * h - h);
    CHECK(type_length(longest_element(WeylKind{1, 6}), WeylKind{1, 6}) == 6);
    CHECK(longest_element(WeylKind{1, 6}).str() == "6 5 3 4 2 1");
}

TEST_CASE("bruhat order matches subword criterion") {
    CHECK(bruhat_leq(Perm::parse("2 1 3"), Perm::parse("3 1 2"), WeylKind{0, 3}));
    CHECK_FALSE(bruhat_leq(Perm::parse("1 3 2"), Perm::parse("2 1 3"), WeylKind{0, 3}));
    CHECK_FALSE(bruhat_leq(Perm::parse("3 2 1"), Perm::parse("3 1 2"), WeylKind{0, 3}));
    for (WeylKind k : {WeylKind{0, 4}, WeylKind{1, 6}, WeylKind{-1, 4}, WeylKind{1, 5}}) {
        auto all = enumerate_weyl(k);
        for (const auto& u : all)
            for (const auto& w : all) CHECK(bruhat_leq(u, w, k) == oracle::bruhat_subword(u, w, k));
    }
}

TEST_CASE("coset decomposition") {
    std::vector<ModelSpec> specs = {ModelSpec::make(Family::A, 5, 2), ModelSpec::make(Family::A, 6, 2),
                                    ModelSpec::make(Family::B, 5, 2), ModelSpec::make(Family::B, 7, 2),
                                    ModelSpec::make(Family::C, 6, 1), ModelSpec::make(Family::C, 6, 3),
                                    ModelSpec::make(Family::D, 6, 2), ModelSpec::make(Family::D, 8, 2),
                                    ModelSpec::make(Family::D, 4, 2), ModelSpec::make(Family::B, 3, 0)};
    for (const auto& s : specs) {
        auto all = enumerate_weyl(s.weyl());
        std::size_t wp = 0, minimal = 0;
        for (const auto& w : all) {
            wp += in_WP(w, s);
            minimal += in_min_WP(w, s);
            auto d = coset_decompose(w, s);
            CHECK(d.tau * d.nu == w);
            CHECK(type_length(w, s.weyl()) == type_length(d.tau, s.weyl()) + type_length(d.nu, s.weyl()));
        }
        CHECK(wp * minimal == all.size());
    }
}

TEST_CASE("theta and induced permutations") {
    auto s = ModelSpec::make(Family::A, 5, 2);
    CHECK(theta_on_WP(Perm::parse("1 2 3 5 4"), s).str() == "2 1 3 4 5");
    CHECK_THROWS(theta_on_WP(Perm::parse("3 1 2 5 4"), s));
    CHECK(induced_perm(Perm::parse("5 2 7 1 3 4 6"), 1, 3).str() == "2 3 1");
    auto d = ModelSpec::make(Family::D, 8, 2);
    for (const auto& w : enumerate_weyl(d.weyl()))
        if (in_WP(w, d)) CHECK(theta_on_WP(theta_on_WP(w, d), d) == w);
}

TEST_CASE("inversions of check(v) v^-1") {
    int premised = 0;
    for (int d = 1; d <= 6; ++d)
        for (const auto& v : enumerate_weyl(WeylKind{0, d})) {
            long lhs = (check_of(v) * v.inverse()).inversions();
            CHECK(lhs == 2 * v.inversions() - 2 * crossed_pairs(v));
            if (sigma_alternative(v)) {
                ++premised;
                CHECK(crossed_pairs(v) == 0);
                CHECK(lhs == 2 * v.inversions());
            }
        }
    CHECK(premised > 0);
    CHECK(sigma_alternative(Perm::parse("1 2 3")));
    CHECK_FALSE(sigma_alternative(Perm::parse("2 1 4 3")));
}
