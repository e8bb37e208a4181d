#include "zorbit/acceptance.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "zorbit/chars.hpp"
#include "zorbit/counterex.hpp"
#include "zorbit/models.hpp"
#include "zorbit/orbits.hpp"
#include "zorbit/resolve.hpp"
#include "zorbit/sweep.hpp"
#include "zorbit/tableaux.hpp"

namespace zorbit {

namespace {

std::vector<ModelSpec> sweep_specs() {
    return {ModelSpec::make(Family::A, 4, 1), ModelSpec::make(Family::A, 5, 2), ModelSpec::make(Family::B, 5, 2),
            ModelSpec::make(Family::D, 6, 2)};
}

std::vector<ModelSpec> all_specs(int nmax) {
    std::vector<ModelSpec> out;
    for (int n = 1; n <= nmax; ++n)
        for (int r = 0; 2 * r <= n; ++r)
            for (Family f : {Family::A, Family::B, Family::C, Family::D}) {
                try {
                    out.push_back(ModelSpec::make(f, n, r));
                } catch (const SpecError&) {
                }
            }
    return out;
}

// Each check returns an empty string on success, otherwise the first failure.
using Check = std::function<std::string(std::ostringstream&)>;

std::string orbit_hook(std::ostringstream& info) {
    int cases = 0;
    for (int n = 1; n <= 10; ++n)
        for (int r = 0; 2 * r <= n; ++r) {
            auto h = hook_identity(n, r);
            ++cases;
            if (!h.holds)
                return "n=" + std::to_string(n) + " r=" + std::to_string(r) + ": " + std::to_string(h.count) + " != " +
                       std::to_string(h.components) + "*" + std::to_string(h.factor);
        }
    info << cases << " (n,r) pairs";
    return {};
}

std::string golden_tableaux(std::ostringstream& info) {
    struct Case {
        int n;
        std::vector<int> p;
        const char* w;
    };
    for (const auto& c : {Case{5, {2, 4}, "3 1 4 2 5"}, Case{6, {2, 4}, "4 1 5 2 6 3"}, Case{7, {2, 4, 5}, "4 1 5 2 3 7 6"}}) {
        auto w = tableau_to_w(TwoColTableau::make(c.n, c.p)).w;
        if (w != Perm::parse(c.w)) return "n=" + std::to_string(c.n) + " gives [" + w.str() + "], expected [" + c.w + "]";
    }
    int count = 0;
    for (int n = 1; n <= 9; ++n)
        for (int r = 0; 2 * r <= n; ++r)
            for (const auto& t : enumerate_tableaux(n, r)) {
                ++count;
                auto w = tableau_to_w(t).w;
                if (w.inversions() != (n - r) * (n - r - 1) / 2) return "length of w_tau for n=" + std::to_string(n) + " is off";
            }
    info << "3 examples, " << count << " tableaux";
    return {};
}

std::string dim_formula(std::ostringstream& info) {
    long rows = 0;
    for (const auto& s : sweep_specs()) {
        ModelContext ctx(s);
        for (const auto& row : dim_formula_sweep(ctx)) {
            ++rows;
            if (!row.ok())
                return s.str() + " w=[" + row.w.str() + "]: codim " + std::to_string(row.codim) + " != " + std::to_string(row.rhs);
        }
    }
    info << rows << " elements";
    return {};
}

std::string hypothesis_one(std::ostringstream& info) {
    long rows = 0;
    ReportConfig cfg;
    cfg.samples = 0;
    for (const auto& s : sweep_specs()) {
        ModelContext ctx(s);
        for (const auto& rep : resolve_sweep(ctx, cfg)) {
            ++rows;
            if (!rep.hypotheses[0] || !rep.cond_a || !rep.cond_b)
                return s.str() + " v=[" + rep.v.str() + "]: " + (rep.failures.empty() ? "hypothesis 1 fails" : rep.failures[0]);
        }
    }
    info << rows << " elements";
    return {};
}

std::string lengths(std::ostringstream& info) {
    long count = 0;
    for (int d = 1; d <= 8; ++d)
        for (int eps : {1, -1}) {
            if (eps == -1 && d % 2) continue;
            WeylKind k = WeylKind::make(eps, d);
            for (const auto& u : enumerate_weyl(k)) {
                ++count;
                if (type_length(u, k) != coxeter_length(u, k))
                    return "eps=" + std::to_string(eps) + " d=" + std::to_string(d) + " u=[" + u.str() + "]";
            }
            int m = d / 2;
            int want = eps == -1 ? m * m : (d % 2 ? m * m : m * m - m);
            if (type_length(longest_element(k), k) != want) return "longest element length, eps=" + std::to_string(eps) + " d=" + std::to_string(d);
        }
    info << count << " elements";
    return {};
}

std::string permutation_lemma(std::ostringstream& info) {
    long count = 0, premised = 0;
    for (int d = 1; d <= 6; ++d)
        for (const auto& v : enumerate_weyl(WeylKind{0, d})) {
            ++count;
            long lhs = (check_of(v) * v.inverse()).inversions();
            if (lhs != 2L * v.inversions() - 2L * crossed_pairs(v)) return "inversion formula fails for [" + v.str() + "]";
            if (sigma_alternative(v)) {
                ++premised;
                if (lhs != 2L * v.inversions()) return "conditional identity fails for [" + v.str() + "]";
            }
            if (d <= 5) {
                Perm s = find_sigma(v);
                if (check_of(s) != s || !sigma_alternative(v * s)) return "find_sigma fails for [" + v.str() + "]";
            }
        }
    info << count << " permutations, " << premised << " satisfy the alternative";
    return {};
}

std::string characters(std::ostringstream& info) {
    int count = 0;
    for (const auto& s : all_specs(10)) {
        ++count;
        auto res = dominance_character(s);
        long want = s.family == Family::A ? 0 : (s.family == Family::C ? -1 : 1);
        for (long x : res.weight)
            if (x != want) return s.str() + ": unexpected coordinate " + std::to_string(x);
        bool dominant_expected = s.family != Family::C || res.weight.empty();
        if (res.dominant != dominant_expected) return s.str() + ": dominance flag is wrong";
    }
    info << count << " specs";
    return {};
}

std::string counterexample(std::ostringstream& info) {
    auto rep = verify_noncontinuity();
    if (!rep.ok()) return rep.failures[0];
    if (describe(rep.family_phi) != "<f1,f2>" || describe(rep.phi_limit) != "<f1,f3>") return "unexpected phi values";
    info << describe(rep.family_phi) << " vs " << describe(rep.phi_limit);
    return {};
}

std::string char_two(std::ostringstream& info, unsigned long seed) {
    Field f2 = Field::prime(2);
    int forms = 0;
    for (int n = 1; n <= 8; ++n)
        for (int s = 1; 2 * s <= n; ++s) {
            Matrix N = standard_order_two(n, s, f2);
            std::vector<Matrix> cols;
            for (int j = 0; j < n; ++j) cols.push_back(N.block(0, j, n, 1));
            if (!totally_isotropic(MatSpace::span(n, 1, f2, cols))) return "image not isotropic";
            auto chi = chi_sequence(N, 3);
            ++forms;
            if (chi[0] != (2 * s == n ? 0 : 1) || chi[1] != 1 || chi[2] != 1)
                return "chi pattern fails for n=" + std::to_string(n) + " rank " + std::to_string(s);
        }
    std::mt19937_64 rng(seed);
    for (int d : {4, 6})
        for (int k = 0; k < 200; ++k) {
            Matrix g = random_orthogonal_gf2(d, rng), h = random_orthogonal_gf2(d, rng);
            if (dickson(g * h) != (dickson(g) ^ dickson(h))) return "Dickson is not additive in O_" + std::to_string(d);
        }
    info << forms << " block forms, 400 pairs";
    return {};
}

std::string lie_constancy(std::ostringstream& info, unsigned long seed) {
    std::vector<ModelSpec> specs;
    for (int n = 1; n <= 6; ++n)
        for (int r = 0; 2 * r <= n; ++r) specs.push_back(ModelSpec::make(Family::A, n, r));
    specs.push_back(ModelSpec::make(Family::B, 5, 2));
    specs.push_back(ModelSpec::make(Family::D, 6, 2));
    long rows = 0;
    for (const auto& s : specs)
        for (const auto& row : lie_constancy_sweep(s, {3, 5, 7, 11}, 3, seed)) {
            ++rows;
            if (!row.ok()) return s.str() + " " + row.tag + ": dimension depends on the field";
        }
    info << rows << " (spec, tag) rows over 5 fields";
    return {};
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceConfig& cfg) {
    set_threads(cfg.threads);
    std::vector<std::pair<std::string, Check>> checks{
        {"orbit count equals hook count times factor, n <= 10", orbit_hook},
        {"tableau golden words and l(w_tau) = C(n-r,2), n <= 9", golden_tableaux},
        {"dimension formula for all w", dim_formula},
        {"corrected representative: codim = l(w) + dim H/B_H, (a), (b)", hypothesis_one},
        {"type length equals Coxeter length, d <= 8", lengths},
        {"inversions of check(v) v^-1 and find_sigma", permutation_lemma},
        {"2 rho_H - rho_G on T_H", characters},
        {"phi is not continuous", counterexample},
        {"chi sequence and Dickson invariant over GF(2)",
         [&](std::ostringstream& os) { return char_two(os, cfg.seed); }},
        {"Lie dimensions agree over Q and GF(p)", [&](std::ostringstream& os) { return lie_constancy(os, cfg.seed); }},
    };
    std::vector<CriterionResult> out;
    for (std::size_t i = 0; i < checks.size(); ++i) {
        CriterionResult res;
        res.id = static_cast<int>(i) + 1;
        res.name = checks[i].first;
        auto t0 = std::chrono::steady_clock::now();
        std::ostringstream info;
        try {
            std::string err = checks[i].second(info);
            res.pass = err.empty();
            res.detail = res.pass ? info.str() : err;
        } catch (const std::exception& e) {
            res.detail = std::string("exception: ") + e.what();
        }
        res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        out.push_back(res);
    }
    return out;
}

}  // namespace zorbit
