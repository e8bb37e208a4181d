#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "zorbit/exact.hpp"
#include "zorbit/weyl.hpp"

namespace zorbit {

std::vector<Perm> enumerate_WP(const ModelSpec& s);

// S_r (A), fixed-point-free involutions (B, D) or all involutions (C) of S_r.
std::vector<Perm> u_parameters(const ModelSpec& s);
std::uint64_t u_factor(const ModelSpec& s);
std::uint64_t count_orbits(const ModelSpec& s);

// Number of standard tableaux of shape (2^r, 1^{n-2r}).
std::uint64_t hook_component_count(int n, int r);

struct HookIdentity {
    std::uint64_t count = 0;
    std::uint64_t components = 0;
    std::uint64_t factor = 0;
    bool holds = false;
};
HookIdentity hook_identity(int n, int r);

struct OrbitStats {
    int d_v = 0;
    Perm s_v;
};
OrbitStats orbit_stats(const Perm& v, const ModelSpec& s);

// sigma with g in B P_sigma B (upper triangular Borel), from ranks of lower-left corners.
Perm bruhat_cell(const Matrix& g);

// Parameter u of the orbit of x B_r in GL_r / B_r (families B, C, D).
Perm classify_orbit_u(const Matrix& x, const ModelSpec& s);

// Permutation w with w B a T-fixed point of the orbit (u, v), if the orbit has one.
std::optional<Perm> t_fixed_rep(const Perm& u, const Perm& v, const ModelSpec& s);

}  // namespace zorbit
