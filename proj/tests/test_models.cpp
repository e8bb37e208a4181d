#include <doctest.h>

#include <random>

#include "zorbit/models.hpp"

using namespace zorbit;

namespace {

std::vector<ModelSpec> sample_specs() {
    return {ModelSpec::make(Family::A, 4, 1), ModelSpec::make(Family::A, 5, 2), ModelSpec::make(Family::A, 6, 3),
            ModelSpec::make(Family::B, 5, 2), ModelSpec::make(Family::B, 7, 2), ModelSpec::make(Family::B, 9, 4),
            ModelSpec::make(Family::C, 6, 1), ModelSpec::make(Family::C, 6, 3), ModelSpec::make(Family::D, 6, 2),
            ModelSpec::make(Family::D, 8, 4), ModelSpec::make(Family::D, 8, 2)};
}

long dim_G(const ModelSpec& s) {
    long m = s.n / 2;
    switch (s.family) {
    case Family::A: return static_cast<long>(s.n) * s.n;
    case Family::B: return m * (2 * m + 1);
    case Family::C: return m * (2 * m + 1);
    case Family::D: return m * (2 * m - 1);
    }
    return -1;
}

}  // namespace

TEST_CASE("lie algebra dimensions") {
    for (const auto& s : sample_specs()) {
        long m = s.n / 2, r = s.r;
        CHECK(lie_basis(Tag::G, s).dim() == dim_G(s));
        long rank = s.family == Family::A ? s.n : m;
        CHECK(lie_basis(Tag::T, s).dim() == rank);
        CHECK(lie_basis(Tag::B, s).dim() == (dim_G(s) + rank) / 2);
        MatSpace H = lie_basis(Tag::H, s), BH = H.intersect(lie_basis(Tag::B, s));
        if (s.family == Family::A) CHECK(H.dim() - BH.dim() == r * (r - 1) / 2);
        if (s.family == Family::B || s.family == Family::D) CHECK(H.dim() - BH.dim() == (r / 2) * (r / 2));
        CHECK(lie_basis(Tag::G, s).contains(nilpotent_e(s)));
        CHECK(lie_basis(Tag::Z, s).contains(lie_basis(Tag::H, s)));
        CHECK(lie_basis(Tag::P, s).contains(lie_basis(Tag::Z, s)));
    }
}

TEST_CASE("lie dimensions are the same over small primes") {
    for (const auto& s : sample_specs())
        for (Tag t : {Tag::G, Tag::B, Tag::Z, Tag::H, Tag::P}) {
            auto q = lie_basis(t, s).dim();
            for (unsigned long p : {3UL, 5UL, 7UL}) CHECK(lie_basis(t, s, Field::prime(p)).dim() == q);
        }
}

TEST_CASE("borel conjugates") {
    auto s = ModelSpec::make(Family::D, 6, 2);
    MatSpace B = lie_basis(Tag::B, s);
    for (const auto& w : enumerate_weyl(s.weyl())) {
        Matrix P = perm_matrix(w);
        MatSpace Bw = lie_basis(Tag::BorelConj, s, Field::rationals(), w);
        CHECK(Bw.dim() == B.dim());
        CHECK(Bw == B.map([&](const Matrix& x) { return P * x * P.inverse(); }, 6, 6));
    }
    CHECK_THROWS(lie_basis(Tag::BorelConj, s, Field::rationals(), Perm::parse("2 1 3 4 5 6")));
}

TEST_CASE("membership") {
    for (const auto& s : sample_specs()) {
        int N = s.ambient();
        Matrix I = Matrix::identity(N);
        for (Tag t : {Tag::G, Tag::B, Tag::T, Tag::P, Tag::L, Tag::Z, Tag::H}) CHECK(member(I, t, s));
        Matrix b = I;
        for (const auto& y : lie_basis(Tag::B, s).basis())
            if (!(I - y).det().is_zero()) b = b * cayley(y);
        CHECK(member(b, Tag::B, s));
        for (const auto& w : enumerate_weyl(s.weyl())) {
            Matrix g = weyl_lift(w, s.family, s.n);
            CHECK(member(g, Tag::G, s));
            CHECK(monomial_perm(g) == ambient_perm(w, s));
            CHECK(member(g * b * g.inverse(), Tag::BorelConj, s, w));
        }
    }
    auto d = ModelSpec::make(Family::D, 4, 0);
    Matrix swap14 = perm_matrix(Perm::parse("4 2 3 1"));
    CHECK_FALSE(member(swap14, Tag::G, d));
    CHECK(member(perm_matrix(Perm::parse("4 3 2 1")), Tag::G, d));
    CHECK_THROWS_AS(member(Matrix::identity(3), Tag::G, d), ShapeError);
    auto a = ModelSpec::make(Family::A, 3, 1);
    CHECK_FALSE(member(Matrix(3, 3), Tag::G, a));
}

TEST_CASE("cayley elements lie in the groups") {
    std::mt19937_64 rng(5);
    for (const auto& s : sample_specs()) {
        if (s.family == Family::A) continue;
        MatSpace g = lie_basis(Tag::G, s), z = lie_basis(Tag::Z, s);
        for (int k = 0; k < 3; ++k) {
            Matrix x = random_element(g, rng, 2);
            try {
                CHECK(member(cayley(x), Tag::G, s));
            } catch (const std::domain_error&) {
            }
            Matrix y = random_element(z, rng, 2);
            try {
                Matrix c = cayley(y);
                CHECK(member(c, Tag::Z, s));
                Matrix v = apply_varpi(c, s);
                CHECK(member(v, Tag::H, s));
            } catch (const std::domain_error&) {
            }
        }
    }
}

TEST_CASE("theta and varpi") {
    auto s = ModelSpec::make(Family::A, 4, 1);
    Matrix l = block_diag({Matrix::from_ints({{2}}), Matrix::from_ints({{1, 1}, {0, 1}}), Matrix::from_ints({{3}})});
    Matrix t = apply_theta(l, s);
    CHECK(t(0, 0) == Scalar(3, Field::rationals()));
    CHECK(apply_theta(t, s) == l);
    CHECK_THROWS(apply_theta(Matrix::from_ints({{1, 1, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}), s));
    auto d = ModelSpec::make(Family::D, 8, 2);
    std::mt19937_64 rng(3);
    MatSpace L = lie_basis(Tag::L, d);
    for (int k = 0; k < 5; ++k) {
        Matrix x = random_element(L, rng, 1);
        if ((Matrix::identity(8) - x).det().is_zero()) continue;
        Matrix g = cayley(x);
        CHECK(apply_theta(apply_theta(g, d), d) == g);
    }
}

TEST_CASE("b embedding") {
    for (int n : {3, 5, 7})
        for (const auto& w : enumerate_weyl(WeylKind{1, n})) {
            Perm e = embed_b(w);
            CHECK(in_weyl(e, WeylKind{1, n + 1}));
            CHECK(contract_b(e) == w);
        }
    Perm a = Perm::parse("3 2 1"), b = Perm::parse("1 2 3");
    CHECK(embed_b(a * b) == embed_b(a) * embed_b(b));
}

TEST_CASE("dickson invariant") {
    Field f2 = Field::prime(2);
    CHECK(dickson(perm_matrix(Perm::parse("4 2 3 1"), f2)) == 1);
    CHECK(dickson(perm_matrix(Perm::parse("4 3 2 1"), f2)) == 0);
    CHECK(dickson(Matrix::identity(6, f2)) == 0);
    CHECK_THROWS(dickson(Matrix::identity(3, f2)));
    CHECK_THROWS(dickson(Matrix::identity(4)));
    CHECK_THROWS(dickson(perm_matrix(Perm::parse("2 1 3 4"), f2)));
}

TEST_CASE("dickson is a homomorphism") {
    std::mt19937_64 rng(3);
    for (int d : {4, 6}) {
        int ones = 0;
        for (int k = 0; k < 100; ++k) {
            Matrix g = random_orthogonal_gf2(d, rng), h = random_orthogonal_gf2(d, rng);
            CHECK(dickson(g * h) == (dickson(g) ^ dickson(h)));
            ones += dickson(g);
        }
        CHECK(ones > 0);
        CHECK(ones < 100);
    }
}

TEST_CASE("chi sequence") {
    Field f2 = Field::prime(2);
    for (int n = 1; n <= 8; ++n)
        for (int s = 1; 2 * s <= n; ++s) {
            Matrix N = standard_order_two(n, s, f2);
            CHECK((N * N).is_zero());
            auto chi = chi_sequence(N, 3);
            CHECK(chi[0] == (2 * s == n ? 0 : 1));
            CHECK(chi[1] == 1);
            CHECK(chi[2] == 1);
        }
    CHECK(chi_sequence(standard_order_two(4, 1, f2), 3) == std::vector<int>{1, 1, 1});
    CHECK(chi_sequence(Matrix(4, 4, f2), 2) == std::vector<int>{1, 1});
    auto d = ModelSpec::make(Family::D, 4, 2);
    CHECK(chi_sequence(nilpotent_e(d, f2), 2) == std::vector<int>{0, 1});
    CHECK_THROWS(chi_sequence(Matrix::identity(4, f2), 1));
    CHECK_THROWS(chi_sequence(Matrix(2, 2), 1));
}
