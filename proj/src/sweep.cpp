#include "zorbit/sweep.hpp"

#include <random>

#include <omp.h>

#include "zorbit/models.hpp"

namespace zorbit {

void set_threads(int n) {
    if (n > 0) omp_set_num_threads(n);
}

int max_threads() { return omp_get_max_threads(); }

namespace {

// Fills out[i] = f(i); results land by index so order never depends on scheduling.
template <class T, class F>
void run_indexed(std::vector<T>& out, F&& f, Exec ex) {
    const long n = static_cast<long>(out.size());
    if (ex == Exec::serial) {
        for (long i = 0; i < n; ++i) out[i] = f(i);
        return;
    }
    std::exception_ptr err;
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n; ++i) {
        try {
            out[i] = f(i);
        } catch (...) {
#pragma omp critical
            if (!err) err = std::current_exception();
        }
    }
    if (err) std::rethrow_exception(err);
}

}  // namespace

std::vector<DimFormulaRow> dim_formula_sweep(const ModelContext& ctx, Exec ex) {
    auto ws = enumerate_weyl(ctx.spec.weyl());
    std::vector<DimFormulaRow> out(ws.size());
    run_indexed(out, [&](long i) {
        DimFormulaRow row;
        row.w = ws[i];
        row.codim = static_cast<long>(dim_orbit_oracle(ws[i], ctx).codim);
        row.rhs = dimension_formula_rhs(ws[i], ctx);
        return row;
    }, ex);
    return out;
}

std::vector<ResolutionReport> resolve_sweep(const ModelContext& ctx, const ReportConfig& cfg, Exec ex) {
    auto vs = enumerate_weyl(ctx.spec.weyl());
    std::vector<ResolutionReport> out(vs.size());
    run_indexed(out, [&](long i) { return hypothesis_report(vs[i], ctx, cfg); }, ex);
    return out;
}

bool LieDimRow::ok() const {
    for (const auto& [p, d] : dim_p)
        if (d != dim_q) return false;
    return true;
}

std::vector<LieDimRow> lie_constancy_sweep(const ModelSpec& s, const std::vector<std::uint64_t>& primes, int bw_samples,
                                           std::uint64_t seed, Exec ex) {
    std::vector<std::pair<Tag, Perm>> jobs{{Tag::G, Perm()}, {Tag::B, Perm()}, {Tag::Z, Perm()}, {Tag::H, Perm()}};
    auto ws = enumerate_weyl(s.weyl());
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, ws.size() - 1);
    for (int k = 0; k < bw_samples; ++k) jobs.push_back({Tag::BorelConj, ws[pick(rng)]});

    std::vector<LieDimRow> out(jobs.size());
    run_indexed(out, [&](long i) {
        const auto& [t, w] = jobs[i];
        LieDimRow row;
        row.tag = t == Tag::BorelConj ? "Bw:" + w.str() : tag_name(t);
        row.dim_q = lie_basis(t, s, Field::rationals(), w).dim();
        for (auto p : primes) row.dim_p.push_back({p, lie_basis(t, s, Field::prime(p), w).dim()});
        return row;
    }, ex);
    return out;
}

}  // namespace zorbit
