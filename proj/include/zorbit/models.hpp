#pragma once

#include <random>
#include <string>
#include <vector>

#include "zorbit/exact.hpp"
#include "zorbit/weyl.hpp"

namespace zorbit {

enum class Tag { G, B, T, P, L, Z, H, BorelConj };

Tag parse_tag(const std::string& s);
std::string tag_name(Tag t);

// P e_i = e_{p(i)}.
Matrix perm_matrix(const Perm& p, Field f = Field::rationals());
// Underlying permutation of a monomial matrix.
Perm monomial_perm(const Matrix& m);

// S_n -> S_{n+1} for n odd, landing in the Weyl group of the even orthogonal ambient.
Perm embed_b(const Perm& p);
Perm contract_b(const Perm& p);
Perm ambient_perm(const Perm& p, const ModelSpec& s);
Perm model_perm(const Perm& p, const ModelSpec& s);

Matrix form_I(int eps, int m, Field f = Field::rationals());
// (delta M)_{ij} = M_{bar j, bar i}
Matrix delta(const Matrix& m);

Matrix nilpotent_e(const ModelSpec& s, Field f = Field::rationals());

// The group G of family f on n letters (ambient n+1 for B), without the parabolic data.
MatSpace lie_group(Family f, int n, Field k);
bool member_group(const Matrix& g, Family f, int n);

// Signed permutation matrix in G lifting w (w on the model's n letters).
Matrix weyl_lift(const Perm& w, Family f, int n, Field k = Field::rationals());

MatSpace lie_basis(Tag t, const ModelSpec& s, Field f = Field::rationals(), const Perm& w = Perm());
bool member(const Matrix& g, Tag t, const ModelSpec& s, const Perm& w = Perm());

Matrix apply_theta(const Matrix& l, const ModelSpec& s);
Matrix apply_varpi(const Matrix& z, const ModelSpec& s);

// Dickson invariant of g in O_{2m}(GF(2)) for Q = sum_{k<=m} y_k y_{2m+1-k}.
int dickson(const Matrix& g);

// Q(y) = sum_{k <= (n+1)/2} y_k y_{n+1-k}
Scalar quadratic_form(const Matrix& y);
bool totally_isotropic(const MatSpace& s);
// chi_m(N) = min { l : N^l(ker N^m) totally isotropic }, m = 1..m_max, for nilpotent N over GF(2).
std::vector<int> chi_sequence(const Matrix& N, int m_max);
// sum_{i <= s} E_{i, n-s+i} over f: square zero, image <f_1..f_s>.
Matrix standard_order_two(int n, int s, Field f);
// Product of random reflections and Levi elements diag(a, delta(a)^-1) in O_d(GF(2)).
Matrix random_orthogonal_gf2(int d, std::mt19937_64& rng, int factors = 8);

// (I - X)^{-1} (I + X); throws if I - X is singular.
Matrix cayley(const Matrix& x);
Matrix random_element(const MatSpace& s, std::mt19937_64& rng, int bound);

}  // namespace zorbit
