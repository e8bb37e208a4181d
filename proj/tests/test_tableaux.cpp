#include <doctest.h>

#include <set>

#include "zorbit/orbits.hpp"
#include "zorbit/resolve.hpp"
#include "zorbit/tableaux.hpp"

using namespace zorbit;

TEST_CASE("tableau validity") {
    CHECK(TwoColTableau{5, {2, 4}}.valid());
    CHECK(TwoColTableau{5, {1, 4}}.valid());
    CHECK_FALSE(TwoColTableau{4, {2, 4}}.valid());
    CHECK_FALSE(TwoColTableau{5, {4, 2}}.valid());
    CHECK_FALSE(TwoColTableau{4, {2, 3, 4}}.valid());
    CHECK_THROWS(TwoColTableau::make(4, {3, 4}));
    CHECK(TwoColTableau{5, {2, 4}}.first_column() == std::vector<int>{1, 3, 5});
}

TEST_CASE("enumeration counts") {
    CHECK(enumerate_tableaux(4, 1).size() == 3);
    CHECK(enumerate_tableaux(5, 2).size() == 5);
    CHECK(enumerate_tableaux(6, 0).size() == 1);
    auto t = enumerate_tableaux(6, 2);
    for (std::size_t i = 1; i < t.size(); ++i) CHECK(t[i - 1].p < t[i].p);
    for (int n = 0; n <= 10; ++n)
        for (int r = 0; 2 * r <= n; ++r) CHECK(enumerate_tableaux(n, r).size() == hook_component_count(n, r));
}

TEST_CASE("golden words") {
    auto a = tableau_to_w(TwoColTableau::make(5, {2, 4}));
    CHECK(a.w == Perm::parse("3 1 4 2 5"));
    CHECK(a.q == std::vector<int>{3, 5});
    CHECK(a.s == std::vector<int>{1});
    CHECK(tableau_to_w(TwoColTableau::make(6, {2, 4})).w == Perm::parse("4 1 5 2 6 3"));
    auto c = TwoColTableau::make(7, {2, 4, 5});
    CHECK(tableau_to_w(c).w == Perm::parse("4 1 5 2 3 7 6"));
    CHECK_FALSE(separated(c));
    CHECK(separated(TwoColTableau::make(5, {2, 4})));
}

TEST_CASE("dims") {
    auto a = tableau_dims(TwoColTableau::make(5, {2, 4}));
    CHECK(a.dim_HB == 1);
    CHECK(a.len_w == 3);
    auto b = tableau_dims(TwoColTableau::make(6, {2, 4}));
    CHECK(b.dim_HB == 1);
    CHECK(b.len_w == 6);
    auto z = TwoColTableau::make(4, {});
    CHECK(tableau_dims(z).len_w == 6);
    CHECK(tableau_to_w(z).w == Perm::parse("4 3 2 1"));
}

TEST_CASE("all tableaux up to n = 9") {
    for (int n = 1; n <= 9; ++n)
        for (int r = 0; 2 * r <= n; ++r) {
            std::set<Perm> seen;
            auto spec = ModelSpec::make(Family::A, n, r);
            for (const auto& t : enumerate_tableaux(n, r)) {
                auto tw = tableau_to_w(t);
                CHECK(tw.w.inversions() == (n - r) * (n - r - 1) / 2);
                for (int i = 0; i < r; ++i) CHECK(tw.q[i] > t.p[i]);
                std::set<int> all(t.p.begin(), t.p.end());
                all.insert(tw.q.begin(), tw.q.end());
                all.insert(tw.s.begin(), tw.s.end());
                CHECK(all.size() == static_cast<std::size_t>(n));
                auto c = check_conditions(tw.w, spec);
                CHECK(c.a);
                CHECK(c.b);
                CHECK(seen.insert(tw.w).second);
            }
        }
}

TEST_CASE("render") {
    CHECK(render(TwoColTableau::make(5, {2, 4})) == "5 4\n3 2\n1\n");
}
