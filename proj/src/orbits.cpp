#include "zorbit/orbits.hpp"

#include <algorithm>
#include <stdexcept>

#include "zorbit/models.hpp"

namespace zorbit {

std::vector<Perm> enumerate_WP(const ModelSpec& s) {
    std::vector<Perm> out;
    if (s.family == Family::A) {
        // Block-increasing permutations, one per assignment of values to the three position blocks.
        int n = s.n, r = s.r;
        std::vector<int> label(n);
        for (int v = 0; v < n; ++v) label[v] = v < r ? 0 : (v < n - r ? 1 : 2);
        do {
            std::vector<int> img;
            for (int b = 0; b < 3; ++b)
                for (int v = 0; v < n; ++v)
                    if (label[v] == b) img.push_back(v + 1);
            Perm u(img);
            if (!in_min_WP(u, s)) throw std::logic_error("block-increasing permutation is not minimal");
            out.push_back(u);
        } while (std::next_permutation(label.begin(), label.end()));
        std::sort(out.begin(), out.end());
        return out;
    }
    for (const auto& w : enumerate_weyl(s.weyl()))
        if (in_min_WP(w, s)) out.push_back(w);
    return out;
}

std::vector<Perm> u_parameters(const ModelSpec& s) {
    std::vector<Perm> out;
    for (const auto& u : enumerate_weyl(WeylKind{0, s.r})) {
        if (s.family == Family::A)
            out.push_back(u);
        else if (u.is_involution() && (s.family == Family::C || u.fixed_points() == 0))
            out.push_back(u);
    }
    return out;
}

std::uint64_t u_factor(const ModelSpec& s) {
    int r = s.r;
    std::uint64_t f = 1;
    if (s.family == Family::A) {
        for (int k = 2; k <= r; ++k) f *= k;
    } else if (s.family == Family::C) {
        std::uint64_t a = 1, b = 1;
        for (int k = 1; k <= r; ++k) {
            std::uint64_t c = b + (k - 1) * a;
            a = b;
            b = c;
        }
        f = b;
    } else {
        if (r % 2) return 0;
        for (int k = r - 1; k > 1; k -= 2) f *= k;
    }
    return f;
}

std::uint64_t count_orbits(const ModelSpec& s) { return u_factor(s) * enumerate_WP(s).size(); }

std::uint64_t hook_component_count(int n, int r) {
    if (r < 0 || 2 * r > n) throw SpecError("need 0 <= 2r <= n");
    mpz_class num = 1, den = 1;
    for (int k = 2; k <= n; ++k) num *= k;
    for (int i = 1; i <= n - r; ++i) {
        den *= (i <= r ? 1 : 0) + (n - r - i) + 1;
        if (i <= r) den *= r - i + 1;
    }
    mpz_class q = num / den;
    return q.get_ui();
}

HookIdentity hook_identity(int n, int r) {
    HookIdentity h;
    h.count = count_orbits(ModelSpec::make(Family::A, n, r));
    h.components = hook_component_count(n, r);
    h.factor = 1;
    for (int k = n - 2 * r + 2; k <= n - r + 1; ++k) h.factor *= k;
    h.holds = h.count == h.components * h.factor;
    return h;
}

OrbitStats orbit_stats(const Perm& v, const ModelSpec& s) {
    if (!in_weyl(v, s.weyl())) throw std::invalid_argument("[" + v.str() + "] is not in W for " + s.str());
    OrbitStats st;
    Perm vi = v.inverse();
    int h = s.half();
    for (int i = s.r + 1; i <= h; ++i)
        if (vi(i) > h) ++st.d_v;
    int mid = s.middle();
    st.s_v = Perm::identity(mid);
    if (s.eps() == 1 && s.n % 2 == 0 && st.d_v % 2) st.s_v = Perm::transposition(mid, mid / 2, mid / 2 + 1);
    return st;
}

Perm bruhat_cell(const Matrix& g) {
    if (!g.square()) throw ShapeError("bruhat_cell needs a square matrix");
    int m = static_cast<int>(g.rows());
    if (g.rank() != static_cast<std::size_t>(m)) throw std::invalid_argument("bruhat_cell needs an invertible matrix");
    // rk[a][j] = rank of rows a..m, columns 1..j (1-based), zero when empty.
    std::vector<std::vector<int>> rk(m + 2, std::vector<int>(m + 1, 0));
    for (int a = 1; a <= m; ++a)
        for (int j = 1; j <= m; ++j) rk[a][j] = static_cast<int>(g.block(a - 1, 0, m - a + 1, j).rank());
    std::vector<int> img(m, 0);
    for (int j = 1; j <= m; ++j)
        for (int a = 1; a <= m; ++a)
            if (rk[a][j] - rk[a][j - 1] - rk[a + 1][j] + rk[a + 1][j - 1] == 1) img[j - 1] = a;
    return Perm(img);
}

Perm classify_orbit_u(const Matrix& x, const ModelSpec& s) {
    if (s.family == Family::A) throw std::invalid_argument("orbit classification is for families B, C, D");
    std::size_t r = static_cast<std::size_t>(s.r);
    if (x.rows() != r || x.cols() != r) throw ShapeError("classify_orbit_u expects an r x r matrix");
    Matrix I = form_I(-s.eps(), s.r, x.field());
    Perm u = longest_element(WeylKind{0, s.r}) * bruhat_cell(I * delta(x) * I * x);
    auto params = u_parameters(s);
    if (std::find(params.begin(), params.end(), u) == params.end())
        throw std::logic_error("classified parameter [" + u.str() + "] is not admissible");
    return u;
}

std::optional<Perm> t_fixed_rep(const Perm& u, const Perm& v, const ModelSpec& s) {
    auto params = u_parameters(s);
    if (std::find(params.begin(), params.end(), u) == params.end())
        throw std::invalid_argument("[" + u.str() + "] is not an orbit parameter for " + s.str());
    if (!in_min_WP(v, s)) throw std::invalid_argument("[" + v.str() + "] is not in W^P for " + s.str());
    Perm id_mid = Perm::identity(s.middle());
    if (s.family == Family::A) return perm_diag({u, id_mid, Perm::identity(s.r)}) * v.inverse();
    for (const auto& pi : enumerate_weyl(WeylKind{0, s.r})) {
        Matrix x = perm_matrix(pi);
        if (classify_orbit_u(x, s) != u) continue;
        Perm tail = monomial_perm(delta(x).inverse());
        return perm_diag({pi, id_mid, tail}) * v.inverse();
    }
    return std::nullopt;
}

}  // namespace zorbit
