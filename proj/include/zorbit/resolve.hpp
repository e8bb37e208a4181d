#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "zorbit/exact.hpp"
#include "zorbit/json_io.hpp"
#include "zorbit/weyl.hpp"

namespace zorbit {

// Lie algebras of one model, computed once and shared read-only by sweeps.
struct ModelContext {
    ModelSpec spec;
    Field field;
    MatSpace G, Z, B, H;
    MatSpace Z_levi, Z_unip;  // Z within the block diagonal / strictly block upper part
    MatSpace mid_B;           // Borel of the middle group, in its own ambient size
    std::size_t dim_H_mod_BH = 0;
    std::size_t dim_Z_mod_ZcapB = 0;

    explicit ModelContext(const ModelSpec& s, Field f = Field::rationals());
    MatSpace borel_conj(const Perm& w) const;
    MatSpace z_cap_borel_conj(const Perm& w) const;
};

struct Conditions {
    bool a = false;
    bool b = false;
};
Conditions check_conditions(const Perm& w, const ModelSpec& s);

// Check-symmetric sigma with v sigma(i) < v sigma(j) or v sigma(bar i) > v sigma(bar j) for all i < j.
Perm find_sigma(const Perm& v);

struct FixedRep {
    Matrix z0;
    Perm w;
};
FixedRep fix_representative(const Perm& v, const ModelSpec& s);

struct OrbitDims {
    std::size_t dim_Z = 0;
    std::size_t dim_ZcapBw = 0;
    std::size_t codim = 0;
};
OrbitDims dim_orbit_oracle(const Perm& w, const ModelContext& ctx);
OrbitDims dim_orbit_oracle(const Perm& w, const ModelSpec& s);

// Right-hand side l(w) + dim Z/Z^B + l(tau^-1 theta(tau))/2 - l(tau).
long dimension_formula_rhs(const Perm& w, const ModelContext& ctx);

struct LengthIdentity {
    int len_tau = 0;
    int len_tau_theta = 0;
    int len_u0 = 0;
    bool holds = false;
};
LengthIdentity length_identity(const Perm& w, const ModelSpec& s);

struct ReportConfig {
    int samples = 50;
    std::uint64_t seed = 20240601;
    int bound = 2;
};

struct ResolutionReport {
    ModelSpec spec;
    Perm v, w, tau, nu;
    Matrix z0;
    int len_w = 0, len_tau = 0, len_tau_theta = 0, len_u0 = 0;
    std::size_t dim_Z = 0, dim_ZcapBw = 0, codim = 0, dim_H_mod_BH = 0;
    bool cond_a = false, cond_b = false, s_match = true;
    std::array<bool, 4> hypotheses{};
    std::vector<std::string> failures;
    std::string caveat;

    bool ok() const { return failures.empty(); }
};

ResolutionReport hypothesis_report(const Perm& v, const ModelContext& ctx, const ReportConfig& cfg = {});
json to_json(const ResolutionReport& r);

}  // namespace zorbit
