#pragma once

#include <string>
#include <vector>

#include "zorbit/exact.hpp"
#include "zorbit/json_io.hpp"
#include "zorbit/perm.hpp"

namespace zorbit {

// Subspaces of Q^8 are MatSpaces of 8x1 columns.
using Subspace = MatSpace;

Subspace span_of(const std::vector<Matrix>& cols);
Subspace coord_span(const std::vector<int>& idx, int dim);  // 1-based f_i
std::string describe(const Subspace& s);

// Orthogonal flag V_1 < ... < V_{d-1} with the middle member omitted.
struct Flag {
    std::vector<int> dims;
    std::vector<Subspace> spaces;
    const Subspace& at(int d) const;
    bool operator==(const Flag& o) const { return dims == o.dims && spaces == o.spaces; }
};
// F(b_1, ..., b_d)_i = <b_1, ..., b_i>
Flag flag_from_basis(const std::vector<Matrix>& b);

struct Scene {
    int n = 4, r = 2;
    Matrix omega, N, w, s;
    Perm w_perm, s_perm;
    Matrix U(const mpq_class& t) const;
    Matrix f(int i) const;  // basis vector, 1-based
};
// Throws std::logic_error if an invariant fails.
Scene build_scene();

Subspace perp(const Subspace& s, const Matrix& omega);
Subspace image(const Matrix& m, const Subspace& s);
bool orthogonal_flag(const Flag& fl, const Matrix& omega);
bool n_stable(const Flag& fl, const Matrix& N);
Flag apply(const Matrix& g, const Flag& fl);

// sum over i < n of V_i cap N(V_i^perp)
Subspace phi(const Flag& fl, const Scene& sc);
// alpha(Nu, Nv) = omega(u, Nv) on Im N.
Scalar alpha(const Matrix& x, const Matrix& y, const Scene& sc);
bool alpha_isotropic(const Subspace& s, const Scene& sc);

// Limit at c = 0 of the span of columns with entries polynomial in c, columns given by coefficient lists.
Subspace limit_span(const std::vector<std::vector<Matrix>>& cols);

struct NoncontinuityReport {
    std::vector<std::string> t_values;
    bool family_matches = true;  // U(t) wF equals F(f1, f3 + f5/t, f2, f4 - f6/t, f3, f7, f4, f8)
    bool limit_flag_equal = false;
    bool wF_n_stable = false;
    Subspace phi_w, family_phi, phi_limit;
    bool family_phi_constant = true;
    bool isotropic = false;
    bool discontinuous = false;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};
NoncontinuityReport verify_noncontinuity();
json to_json(const NoncontinuityReport& r);

}  // namespace zorbit
