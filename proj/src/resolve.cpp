#include "zorbit/resolve.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "zorbit/models.hpp"
#include "zorbit/orbits.hpp"

namespace zorbit {

namespace {

int block_of(std::size_t i, int N, int r) {
    int k = static_cast<int>(i);
    return k < r ? 0 : (k < N - r ? 1 : 2);
}

bool increasing_on(const Perm& p, int lo, int hi) {
    for (int i = lo; i < hi; ++i)
        if (p(i) > p(i + 1)) return false;
    return true;
}

}  // namespace

ModelContext::ModelContext(const ModelSpec& s, Field f) : spec(s), field(f) {
    int N = s.ambient(), r = s.r;
    G = lie_basis(Tag::G, s, f);
    Z = lie_basis(Tag::Z, s, f);
    B = lie_basis(Tag::B, s, f);
    H = lie_basis(Tag::H, s, f);
    Z_levi = Z.with_zeros([&](std::size_t i, std::size_t j) { return block_of(i, N, r) != block_of(j, N, r); });
    Z_unip = Z.with_zeros([&](std::size_t i, std::size_t j) { return block_of(i, N, r) >= block_of(j, N, r); });
    int h = s.middle();
    if (h > 0) mid_B = lie_group(s.family, h, f).with_zeros([](std::size_t i, std::size_t j) { return i > j; });
    dim_H_mod_BH = H.dim() - H.intersect(B).dim();
    dim_Z_mod_ZcapB = Z.dim() - Z.with_zeros([](std::size_t i, std::size_t j) { return i > j; }).dim();
}

MatSpace ModelContext::borel_conj(const Perm& w) const {
    if (!in_weyl(w, spec.weyl())) throw std::invalid_argument("[" + w.str() + "] is not in W for " + spec.str());
    Perm xi = ambient_perm(w, spec).inverse();
    return G.with_zeros([&](std::size_t i, std::size_t j) { return xi(static_cast<int>(i) + 1) > xi(static_cast<int>(j) + 1); });
}

MatSpace ModelContext::z_cap_borel_conj(const Perm& w) const {
    if (!in_weyl(w, spec.weyl())) throw std::invalid_argument("[" + w.str() + "] is not in W for " + spec.str());
    Perm xi = ambient_perm(w, spec).inverse();
    return Z.with_zeros([&](std::size_t i, std::size_t j) { return xi(static_cast<int>(i) + 1) > xi(static_cast<int>(j) + 1); });
}

Conditions check_conditions(const Perm& w, const ModelSpec& s) {
    if (!in_weyl(w, s.weyl())) throw std::invalid_argument("[" + w.str() + "] is not in W for " + s.str());
    Perm wi = w.inverse();
    int r = s.r, h = s.middle();
    Conditions c;
    Perm mid = induced_perm(wi, r, h);
    if (s.family == Family::A) {
        c.a = mid == longest_element(WeylKind{0, h});
        c.b = increasing_on(wi, 1, r);
        return c;
    }
    c.a = mid == orbit_stats(w, s).s_v * u0(s);
    c.b = true;
    for (int i = 1; i <= r && c.b; ++i)
        for (int j = i + 1; j <= r; ++j)
            if (!(wi(i) < wi(j) || wi(r - i + 1) > wi(r - j + 1))) {
                c.b = false;
                break;
            }
    return c;
}

Perm find_sigma(const Perm& v) {
    int k = v.size(), h = k / 2;
    Perm a = Perm::identity(k);
    for (int i = 1; i <= h; ++i)
        if (v(i) > v(bar(i, k))) a = a * Perm::transposition(k, i, bar(i, k));
    Perm c = v * a;
    std::vector<int> idx(h);
    std::iota(idx.begin(), idx.end(), 1);
    std::sort(idx.begin(), idx.end(), [&](int x, int y) { return c(x) < c(y); });
    std::vector<int> b(k);
    for (int t = 1; t <= h; ++t) {
        b[t - 1] = idx[t - 1];
        b[bar(t, k) - 1] = bar(idx[t - 1], k);
    }
    if (k % 2) b[h] = h + 1;
    Perm sigma = a * Perm(b);
    if (!(check_of(sigma) == sigma)) throw std::logic_error("find_sigma produced a non-symmetric permutation");
    return sigma;
}

FixedRep fix_representative(const Perm& v, const ModelSpec& s) {
    if (!in_weyl(v, s.weyl())) throw std::invalid_argument("[" + v.str() + "] is not in W for " + s.str());
    Field q = Field::rationals();
    int r = s.r, h = s.middle();
    Perm vi = v.inverse();
    Perm top = induced_perm(vi, 0, r), mid = induced_perm(vi, r, h);
    Matrix z0;
    if (s.family == Family::A) {
        Matrix g2 = perm_matrix(top.inverse(), q);
        Matrix g1 = perm_matrix(mid.inverse() * longest_element(WeylKind{0, h}), q);
        z0 = block_diag({g2, g1, g2});
    } else {
        Perm sigma1 = mid.inverse() * orbit_stats(v, s).s_v * u0(s);
        if (!in_weyl(sigma1, s.middle_weyl())) throw std::logic_error("middle correction left the Weyl group");
        Perm sigma2 = find_sigma(top);
        Matrix P = perm_matrix(sigma2, q);
        Matrix g2;
        if (s.family == Family::C) {
            Matrix d = Matrix::identity(r, q);
            d.set(r / 2, r / 2, sigma2.sign());
            g2 = P * d;
        } else {
            Matrix I = form_I(-1, r, q);
            Matrix lam = I * P * I * P.inverse();
            Matrix d = Matrix::identity(r, q);
            for (int i = 0; i < r / 2; ++i) d.set(i, i, lam(i, i));
            g2 = d * P;
        }
        Matrix I = form_I(-s.eps(), r, q);
        std::vector<Matrix> blocks = {g2};
        if (h > 0) blocks.push_back(weyl_lift(sigma1, s.family, h, q));
        blocks.push_back(I * g2 * I);
        z0 = block_diag(blocks);
    }
    if (!member(z0, Tag::Z, s)) throw std::logic_error("constructed z0 is not in Z for v = [" + v.str() + "]");
    Matrix lifted = weyl_lift(v, s.family, s.n, q);
    Perm w = model_perm(monomial_perm(z0.inverse() * lifted), s);
    return {z0, w};
}

OrbitDims dim_orbit_oracle(const Perm& w, const ModelContext& ctx) {
    if (!ctx.field.is_rational()) throw std::invalid_argument("dim_orbit_oracle works in characteristic 0");
    OrbitDims d;
    d.dim_Z = ctx.Z.dim();
    d.dim_ZcapBw = ctx.z_cap_borel_conj(w).dim();
    d.codim = d.dim_Z - d.dim_ZcapBw;
    return d;
}

OrbitDims dim_orbit_oracle(const Perm& w, const ModelSpec& s) { return dim_orbit_oracle(w, ModelContext(s)); }

long dimension_formula_rhs(const Perm& w, const ModelContext& ctx) {
    const ModelSpec& s = ctx.spec;
    auto d = coset_decompose(w, s);
    int lt = type_length(d.tau, s.weyl());
    int ltt = type_length(d.tau.inverse() * theta_on_WP(d.tau, s), s.weyl());
    if (ltt % 2) throw std::logic_error("odd length of tau^-1 theta(tau)");
    return type_length(w, s.weyl()) + static_cast<long>(ctx.dim_Z_mod_ZcapB) + ltt / 2 - lt;
}

LengthIdentity length_identity(const Perm& w, const ModelSpec& s) {
    Conditions c = check_conditions(w, s);
    if (!c.a || !c.b)
        throw std::invalid_argument("length_identity: [" + w.str() + "] violates condition " + std::string(!c.a ? "(a)" : "(b)"));
    auto d = coset_decompose(w, s);
    LengthIdentity li;
    li.len_tau = type_length(d.tau, s.weyl());
    li.len_tau_theta = type_length(d.tau.inverse() * theta_on_WP(d.tau, s), s.weyl());
    li.len_u0 = type_length(u0(s), s.middle_weyl());
    li.holds = li.len_tau_theta % 2 == 0 && li.len_tau - li.len_tau_theta / 2 == li.len_u0;
    return li;
}

namespace {

bool sample_shape_ok(const Matrix& z, const ModelSpec& s, std::string& why) {
    int N = s.ambient(), r = s.r, M = N - 2 * r;
    Field f = z.field();
    Matrix y = z.inverse() * apply_varpi(z, s);
    if (!y.block(0, 0, r, r).is_identity() || !y.block(N - r, N - r, r, r).is_identity()) {
        why = "corner blocks of z^-1 varpi(z) are not the identity";
        return false;
    }
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
            if (block_of(i, N, r) > block_of(j, N, r) && !y(i, j).is_zero()) {
                why = "z^-1 varpi(z) is not block upper triangular";
                return false;
            }
    if (M == 0) return true;
    Matrix C = y.block(r, r, M, M);
    if (!member_group(C, s.family, s.middle())) {
        why = "middle block of z^-1 varpi(z) is not in the middle group";
        return false;
    }
    Matrix u = block_diag({Matrix::identity(r, f), C.inverse(), Matrix::identity(r, f)}) * y;
    for (int b = 0; b < 3; ++b) {
        int lo = b == 0 ? 0 : (b == 1 ? r : N - r), len = b == 1 ? M : r;
        if (!u.block(lo, lo, len, len).is_identity()) {
            why = "right factor of z^-1 varpi(z) is not block unipotent";
            return false;
        }
    }
    return true;
}

Matrix random_cayley(const MatSpace& s, std::mt19937_64& rng, int bound) {
    Matrix I = Matrix::identity(s.rows(), s.field());
    for (int attempt = 0; attempt < 50; ++attempt) {
        Matrix x = random_element(s, rng, bound);
        if (!(I - x).det().is_zero() && !(I + x).det().is_zero()) return cayley(x);
    }
    return I;
}

}  // namespace

ResolutionReport hypothesis_report(const Perm& v, const ModelContext& ctx, const ReportConfig& cfg) {
    const ModelSpec& s = ctx.spec;
    if (!ctx.field.is_rational()) throw std::invalid_argument("hypothesis_report works in characteristic 0");
    ResolutionReport rep;
    rep.spec = s;
    rep.v = v;
    auto fail = [&](const std::string& m) { rep.failures.push_back(m); };

    FixedRep fr = fix_representative(v, s);
    rep.z0 = fr.z0;
    rep.w = fr.w;
    const Perm& w = fr.w;
    auto d = coset_decompose(w, s);
    rep.tau = d.tau;
    rep.nu = d.nu;
    rep.len_w = type_length(w, s.weyl());
    rep.len_tau = type_length(d.tau, s.weyl());
    rep.len_tau_theta = type_length(d.tau.inverse() * theta_on_WP(d.tau, s), s.weyl());
    rep.len_u0 = type_length(u0(s), s.middle_weyl());
    Conditions c = check_conditions(w, s);
    rep.cond_a = c.a;
    rep.cond_b = c.b;
    if (s.family != Family::A) rep.s_match = orbit_stats(v, s).s_v == orbit_stats(w, s).s_v;
    if (!c.a) fail("condition (a) fails for w = [" + w.str() + "]");
    if (!c.b) fail("condition (b) fails for w = [" + w.str() + "]");
    if (!rep.s_match) fail("s_v differs from s_w");

    MatSpace zb = ctx.z_cap_borel_conj(w);
    rep.dim_Z = ctx.Z.dim();
    rep.dim_ZcapBw = zb.dim();
    rep.codim = rep.dim_Z - rep.dim_ZcapBw;
    rep.dim_H_mod_BH = ctx.dim_H_mod_BH;
    std::size_t expected = static_cast<std::size_t>(rep.len_w) + rep.dim_H_mod_BH;

    // 1: dimension formula for the corrected representative.
    rep.hypotheses[0] = c.a && c.b && rep.codim == expected;
    if (rep.codim != expected)
        fail("hypothesis 1: codim " + std::to_string(rep.codim) + " != l(w) + dim H/B_H = " + std::to_string(expected));
    if (c.a && c.b) {
        LengthIdentity li = length_identity(w, s);
        if (!li.holds) fail("length identity l(tau) - l(tau^-1 theta tau)/2 = l(u0) fails");
    }

    // 2: the u0-conjugate of the middle Borel lies in wB, and z^-1 varpi(z) has the block shape of the proof.
    bool incl = true;
    int N = s.ambient(), r = s.r, h = s.middle();
    Perm xi = ambient_perm(w, s).inverse();
    auto in_wB = [&](std::size_t i, std::size_t j) { return xi(static_cast<int>(i) + 1) <= xi(static_cast<int>(j) + 1); };
    if (h > 0) {
        Matrix P = weyl_lift(u0(s), s.family, h);
        Matrix Pi = P.inverse();
        for (const auto& y : ctx.mid_B.basis()) {
            Matrix big(N, N);
            big.set_block(r, r, P * y * Pi);
            for (int i = 0; i < N && incl; ++i)
                for (int j = 0; j < N; ++j)
                    if (!big(i, j).is_zero() && !in_wB(i, j)) {
                        incl = false;
                        break;
                    }
        }
    }
    if (!incl) fail("hypothesis 2: conjugated middle Borel is not contained in wB");
    std::seed_seq seq{cfg.seed, static_cast<std::uint64_t>(s.n), static_cast<std::uint64_t>(s.r)};
    std::mt19937_64 rng(seq);
    for (int x : v.images()) rng.discard(static_cast<unsigned>(x));
    bool shapes = true;
    for (int k = 0; k < cfg.samples && shapes; ++k) {
        Matrix z = random_cayley(ctx.Z_levi, rng, cfg.bound) * random_cayley(ctx.Z_unip, rng, cfg.bound);
        std::string why;
        if (!member(z, Tag::Z, s)) {
            shapes = false;
            fail("hypothesis 2: sampled element left Z");
        } else if (!sample_shape_ok(z, s, why)) {
            shapes = false;
            fail("hypothesis 2: " + why);
        }
    }
    rep.hypotheses[1] = c.a && incl && shapes;

    // 3: Lie(Z cap wB) splits along the Levi and unipotent parts of Z, and d varpi maps it into Lie B_H.
    MatSpace zl = ctx.Z_levi.with_zeros([&](std::size_t i, std::size_t j) { return !in_wB(i, j); });
    MatSpace zu = ctx.Z_unip.with_zeros([&](std::size_t i, std::size_t j) { return !in_wB(i, j); });
    bool split = zl.dim() + zu.dim() == zb.dim() && zb.contains(zl) && zb.contains(zu);
    bool to_bh = true;
    for (const auto& x : zb.basis()) {
        Matrix p(N, N);
        p.set_block(0, 0, x.block(0, 0, r, r));
        p.set_block(N - r, N - r, x.block(N - r, N - r, r, r));
        if (!p.is_upper_triangular() || !ctx.H.contains(p)) {
            to_bh = false;
            break;
        }
    }
    if (!split) fail("hypothesis 3: Lie(Z cap wB) does not split along Levi and unipotent parts");
    if (!to_bh) fail("hypothesis 3: d varpi(Lie(Z cap wB)) is not in Lie B_H");
    rep.hypotheses[2] = split && to_bh;

    // 4: Lie dimension of Z cap wB matches the group dimension dim Z - l(w) - dim H/B_H.
    rep.hypotheses[3] = rep.dim_Z >= expected && rep.dim_ZcapBw == rep.dim_Z - expected;
    if (!rep.hypotheses[3]) fail("hypothesis 4: dim Lie(Z cap wB) != dim Z - l(w) - dim H/B_H");

    if (s.family == Family::C)
        rep.caveat = "type C: Z is replaced by its neutral component; orbits whose parameter u is not conjugate to w0 have no T-fixed point and are not covered";
    return rep;
}

json to_json(const ResolutionReport& r) {
    json j;
    j["spec"] = r.spec.str();
    j["v"] = r.v.str();
    j["z0"] = to_json(r.z0);
    j["w"] = r.w.str();
    j["tau"] = r.tau.str();
    j["nu"] = r.nu.str();
    j["len_w"] = r.len_w;
    j["len_tau"] = r.len_tau;
    j["len_tau_theta"] = r.len_tau_theta;
    j["len_u0"] = r.len_u0;
    j["dim_Z"] = r.dim_Z;
    j["dim_ZcapBw"] = r.dim_ZcapBw;
    j["codim"] = r.codim;
    j["dim_H_mod_BH"] = r.dim_H_mod_BH;
    j["condition_a"] = r.cond_a;
    j["condition_b"] = r.cond_b;
    j["hypotheses"] = {r.hypotheses[0], r.hypotheses[1], r.hypotheses[2], r.hypotheses[3]};
    j["failures"] = r.failures;
    if (!r.caveat.empty()) j["caveat"] = r.caveat;
    j["ok"] = r.ok();
    return j;
}

}  // namespace zorbit
