#include <doctest.h>

#include "zorbit/counterex.hpp"

using namespace zorbit;

TEST_CASE("scene") {
    Scene sc = build_scene();
    CHECK((sc.f(1).transpose() * sc.omega * sc.f(8))(0, 0).is_one());
    CHECK(sc.N * sc.f(5) == sc.f(1));
    CHECK(sc.N * sc.f(6) == sc.f(2));
    CHECK(sc.N * sc.f(7) == sc.f(3).scaled(Scalar(mpq_class(-1))));
    CHECK((sc.U(3) * sc.U(-3)).is_identity());
    CHECK(sc.w * sc.f(2) == sc.f(5));
}

TEST_CASE("subspace helpers") {
    Scene sc = build_scene();
    CHECK(describe(coord_span({2, 1}, 8)) == "<f1,f2>");
    CHECK(perp(coord_span({1, 2, 3}, 8), sc.omega) == coord_span({1, 2, 3, 4, 5}, 8));
    CHECK(image(sc.N, MatSpace::full(8, 1)) == coord_span({1, 2, 3, 4}, 8));
    CHECK_THROWS(alpha(sc.f(5), sc.f(1), sc));
    CHECK_FALSE(alpha(sc.f(1), sc.f(4), sc).is_zero());
    CHECK(alpha(sc.f(1), sc.f(2), sc).is_zero());
    CHECK(alpha(sc.f(1), sc.f(4), sc) == -alpha(sc.f(4), sc.f(1), sc));
}

TEST_CASE("limit by saturation") {
    Scene sc = build_scene();
    auto l = limit_span({{sc.f(1)}, {sc.f(3), sc.f(5)}, {sc.f(3)}});
    CHECK(l == coord_span({1, 3, 5}, 8));
    CHECK(limit_span({{sc.f(1), sc.f(2)}}) == coord_span({1}, 8));
    CHECK_THROWS(limit_span({{sc.f(1)}, {sc.f(1)}}));
}

TEST_CASE("phi on the fixed flags") {
    Scene sc = build_scene();
    std::vector<Matrix> b;
    for (int i = 1; i <= 8; ++i) b.push_back(sc.f(i));
    Flag F = flag_from_basis(b);
    CHECK(F.dims == std::vector<int>{1, 2, 3, 5, 6, 7});
    CHECK(orthogonal_flag(F, sc.omega));
    Flag wF = apply(sc.w, F);
    CHECK(n_stable(wF, sc.N));
    CHECK(phi(wF, sc) == coord_span({1, 2}, 8));
    CHECK(phi(apply(sc.s, F), sc) == coord_span({1, 3}, 8));
    CHECK(phi(apply(sc.U(mpq_class(1, 2)), wF), sc) == coord_span({1, 2}, 8));
}

TEST_CASE("non-continuity") {
    auto rep = verify_noncontinuity();
    for (const auto& f : rep.failures) MESSAGE(f);
    CHECK(rep.ok());
    CHECK(rep.limit_flag_equal);
    CHECK(rep.discontinuous);
    CHECK(rep.isotropic);
    CHECK(rep.wF_n_stable);
    auto j = to_json(rep);
    CHECK(j["family_phi"] == "<f1,f2>");
    CHECK(j["phi_limit"] == "<f1,f3>");
}
