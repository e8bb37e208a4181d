#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zorbit/resolve.hpp"

namespace zorbit {

enum class Exec { serial, parallel };

// 0 leaves the OpenMP default.
void set_threads(int n);
int max_threads();

struct DimFormulaRow {
    Perm w;
    long codim = 0;
    long rhs = 0;
    bool ok() const { return codim == rhs; }
};
std::vector<DimFormulaRow> dim_formula_sweep(const ModelContext& ctx, Exec ex = Exec::parallel);

std::vector<ResolutionReport> resolve_sweep(const ModelContext& ctx, const ReportConfig& cfg, Exec ex = Exec::parallel);

struct LieDimRow {
    std::string tag;  // "G", ..., or "Bw:<perm>"
    std::size_t dim_q = 0;
    std::vector<std::pair<std::uint64_t, std::size_t>> dim_p;
    bool ok() const;
};
// Tags G, B, Z, H and `bw_samples` pseudorandom Bw, over Q and each prime.
std::vector<LieDimRow> lie_constancy_sweep(const ModelSpec& s, const std::vector<std::uint64_t>& primes, int bw_samples,
                                           std::uint64_t seed, Exec ex = Exec::parallel);

}  // namespace zorbit
