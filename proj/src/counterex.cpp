#include "zorbit/counterex.hpp"

#include <sstream>
#include <stdexcept>

#include "zorbit/models.hpp"

namespace zorbit {

namespace {

constexpr int kDim = 8;

Field Q() { return Field::rationals(); }

void require(bool ok, const std::string& what) {
    if (!ok) throw std::logic_error("scene invariant failed: " + what);
}

Matrix columns(const std::vector<Matrix>& cols, int rows) {
    Matrix m(rows, cols.size(), Q());
    for (std::size_t j = 0; j < cols.size(); ++j) m.set_block(0, j, cols[j]);
    return m;
}

// Some u with m u = x; throws if x is not in the image.
Matrix preimage(const Matrix& m, const Matrix& x) {
    Matrix aug(m.rows(), m.cols() + 1, m.field());
    aug.set_block(0, 0, m);
    aug.set_block(0, m.cols(), x);
    Rref rr = rref(aug);
    Matrix u(m.cols(), 1, m.field());
    for (std::size_t k = 0; k < rr.rank; ++k) {
        std::size_t c = rr.pivots[k];
        if (c == m.cols()) throw std::invalid_argument("vector is not in the image");
        u.set(c, 0, rr.form(k, m.cols()));
    }
    return u;
}

}  // namespace

Subspace span_of(const std::vector<Matrix>& cols) { return MatSpace::span(kDim, 1, Q(), cols); }

Subspace coord_span(const std::vector<int>& idx, int dim) {
    std::vector<Matrix> cols;
    for (int i : idx) {
        Matrix e(dim, 1, Q());
        e.set(i - 1, 0, 1);
        cols.push_back(e);
    }
    return MatSpace::span(dim, 1, Q(), cols);
}

std::string describe(const Subspace& s) {
    std::ostringstream os;
    bool coords = true;
    std::vector<int> idx;
    for (const auto& b : s.basis()) {
        int nz = 0, at = -1;
        for (std::size_t i = 0; i < b.rows(); ++i)
            if (!b(i, 0).is_zero()) {
                ++nz;
                at = static_cast<int>(i);
            }
        if (nz != 1 || !b(at, 0).is_one()) coords = false;
        idx.push_back(at + 1);
    }
    if (coords) {
        os << '<';
        for (std::size_t k = 0; k < idx.size(); ++k) os << (k ? "," : "") << 'f' << idx[k];
        os << '>';
        return os.str();
    }
    os << "span(";
    bool first = true;
    for (const auto& b : s.basis()) {
        os << (first ? "" : "; ");
        first = false;
        for (std::size_t i = 0; i < b.rows(); ++i) os << (i ? " " : "") << b(i, 0).str();
    }
    os << ')';
    return os.str();
}

const Subspace& Flag::at(int d) const {
    for (std::size_t k = 0; k < dims.size(); ++k)
        if (dims[k] == d) return spaces[k];
    throw std::out_of_range("flag has no member of dimension " + std::to_string(d));
}

Flag flag_from_basis(const std::vector<Matrix>& b) {
    int d = static_cast<int>(b.size());
    Flag fl;
    for (int i = 1; i < d; ++i) {
        if (2 * i == d) continue;
        fl.dims.push_back(i);
        fl.spaces.push_back(MatSpace::span(b[0].rows(), 1, b[0].field(), std::vector<Matrix>(b.begin(), b.begin() + i)));
    }
    return fl;
}

Matrix Scene::f(int i) const {
    Matrix e(kDim, 1, Q());
    e.set(i - 1, 0, 1);
    return e;
}

Matrix Scene::U(const mpq_class& t) const {
    Matrix u = Matrix::identity(kDim, Q());
    u.set(2, 4, Scalar(t));
    u.set(3, 5, Scalar(mpq_class(-t)));
    return u;
}

Scene build_scene() {
    Scene sc;
    int d = 2 * sc.n;
    sc.omega = Matrix(d, d, Q());
    for (int i = 0; i < d; ++i) sc.omega.set(i, d - 1 - i, 1);
    sc.N = Matrix(d, d, Q());
    for (int i = 1; i <= 2 * sc.r; ++i) sc.N.set(i - 1, d - 2 * sc.r + i - 1, i <= sc.r ? 1 : -1);
    sc.w_perm = Perm::parse("1 5 2 6 3 7 4 8");
    sc.s_perm = Perm::parse("1 3 2 4 5 7 6 8");
    sc.w = perm_matrix(sc.w_perm, Q());
    sc.s = perm_matrix(sc.s_perm, Q());

    const Matrix& O = sc.omega;
    require((sc.f(1).transpose() * O * sc.f(8))(0, 0).is_one(), "omega(f1, f8) = 1");
    require((sc.N.transpose() * O + O * sc.N).is_zero(), "N is antiadjoint");
    require((sc.N * sc.N).is_zero(), "N^2 = 0");
    require(sc.N.rank() == 2 * static_cast<std::size_t>(sc.r), "rank N");
    for (const Matrix* g : {&sc.w, &sc.s}) {
        require((g->transpose() * O * *g) == O, "w, s preserve omega");
        require(g->det().is_one(), "w, s have determinant 1");
    }
    for (long t : {1L, 2L, -3L}) {
        Matrix u = sc.U(t);
        require(u * sc.N == sc.N * u, "U(t) commutes with N");
        require(u.transpose() * O * u == O, "U(t) preserves omega");
        require((u * sc.U(-t)).is_identity(), "U(t) U(-t) = 1");
    }
    return sc;
}

Subspace perp(const Subspace& s, const Matrix& omega) {
    auto b = s.basis();
    if (b.empty()) return MatSpace::full(omega.rows(), 1, omega.field());
    Matrix m = columns(b, static_cast<int>(omega.rows())).transpose() * omega;
    return nullspace(m);
}

Subspace image(const Matrix& m, const Subspace& s) {
    return s.map([&](const Matrix& x) { return m * x; }, m.rows(), 1);
}

bool orthogonal_flag(const Flag& fl, const Matrix& omega) {
    int d = static_cast<int>(omega.rows());
    for (std::size_t k = 0; k < fl.dims.size(); ++k) {
        if (static_cast<int>(fl.spaces[k].dim()) != fl.dims[k]) return false;
        if (k && !fl.spaces[k].contains(fl.spaces[k - 1])) return false;
        if (!(perp(fl.spaces[k], omega) == fl.at(d - fl.dims[k]))) return false;
    }
    return true;
}

bool n_stable(const Flag& fl, const Matrix& N) {
    for (const auto& v : fl.spaces)
        if (!v.contains(image(N, v))) return false;
    return true;
}

Flag apply(const Matrix& g, const Flag& fl) {
    Flag out{fl.dims, {}};
    for (const auto& v : fl.spaces) out.spaces.push_back(image(g, v));
    return out;
}

Subspace phi(const Flag& fl, const Scene& sc) {
    Subspace acc(kDim, 1, Q());
    for (int i = 1; i < sc.n; ++i) {
        const Subspace& v = fl.at(i);
        acc = acc.sum(v.intersect(image(sc.N, perp(v, sc.omega))));
    }
    return acc;
}

Scalar alpha(const Matrix& x, const Matrix& y, const Scene& sc) {
    Matrix u = preimage(sc.N, x);
    return (u.transpose() * sc.omega * y)(0, 0);
}

bool alpha_isotropic(const Subspace& s, const Scene& sc) {
    auto b = s.basis();
    for (const auto& x : b)
        for (const auto& y : b)
            if (!alpha(x, y, sc).is_zero()) return false;
    return true;
}

Subspace limit_span(const std::vector<std::vector<Matrix>>& cols_in) {
    auto cols = cols_in;
    if (cols.empty()) return Subspace(kDim, 1, Q());
    std::size_t rows = cols[0][0].rows();
    for (int guard = 0; guard < 1000; ++guard) {
        std::vector<Matrix> c0;
        for (const auto& c : cols) c0.push_back(c[0]);
        Matrix m0 = columns(c0, static_cast<int>(rows));
        MatSpace ker = nullspace(m0);
        if (ker.dim() == 0) return MatSpace::span(rows, 1, Q(), c0);
        Matrix lam = ker.basis()[0];
        std::size_t j = 0;
        while (lam(j, 0).is_zero()) ++j;
        std::size_t deg = 0;
        for (const auto& c : cols) deg = std::max(deg, c.size());
        std::vector<Matrix> comb(deg, Matrix(rows, 1, Q()));
        for (std::size_t i = 0; i < cols.size(); ++i)
            for (std::size_t e = 0; e < cols[i].size(); ++e) comb[e] = comb[e] + cols[i][e].scaled(lam(i, 0));
        if (!comb[0].is_zero()) throw std::logic_error("kernel combination has a constant term");
        comb.erase(comb.begin());
        bool zero = true;
        for (const auto& x : comb) zero = zero && x.is_zero();
        if (zero) throw std::invalid_argument("columns are dependent for generic c");
        cols[j] = comb;
    }
    throw std::logic_error("limit did not stabilise");
}

NoncontinuityReport verify_noncontinuity() {
    NoncontinuityReport rep;
    auto fail = [&](const std::string& m) { rep.failures.push_back(m); };
    Scene sc = build_scene();
    auto f = [&](int i) { return sc.f(i); };
    std::vector<Matrix> std_basis;
    for (int i = 1; i <= kDim; ++i) std_basis.push_back(f(i));
    Flag F = flag_from_basis(std_basis);
    Flag wF = apply(sc.w, F);
    Flag sF = apply(sc.s, F);
    Flag sF_printed = flag_from_basis({f(1), f(3), f(2), f(4), f(5), f(7), f(6), f(8)});
    if (!(sF == sF_printed)) fail("sF differs from F(f1, f3, f2, f4, f5, f7, f6, f8)");
    if (!orthogonal_flag(wF, sc.omega) || !orthogonal_flag(sF, sc.omega)) fail("wF or sF is not an orthogonal flag");
    rep.wF_n_stable = n_stable(wF, sc.N);
    if (!rep.wF_n_stable) fail("wF is not N-stable");

    rep.phi_w = phi(wF, sc);
    Subspace f12 = coord_span({1, 2}, kDim), f13 = coord_span({1, 3}, kDim);
    if (!(rep.phi_w == f12)) fail("phi(wF) = " + describe(rep.phi_w));

    rep.family_phi = rep.phi_w;
    for (mpq_class t : {mpq_class(1), mpq_class(2), mpq_class(-3), mpq_class(1, 2)}) {
        rep.t_values.push_back(t.get_str());
        Flag ut = apply(sc.U(t), wF);
        mpq_class c = 1 / t;
        Flag printed = flag_from_basis({f(1), f(3) + f(5).scaled(Scalar(c)), f(2), f(4) - f(6).scaled(Scalar(c)), f(3), f(7), f(4), f(8)});
        if (!(ut == printed)) {
            rep.family_matches = false;
            fail("U(t) wF differs from the printed flag at t = " + t.get_str());
        }
        if (!n_stable(ut, sc.N)) fail("U(t) wF is not N-stable at t = " + t.get_str());
        Subspace p = phi(ut, sc);
        if (!(p == rep.phi_w)) {
            rep.family_phi_constant = false;
            fail("phi(U(t) wF) = " + describe(p) + " at t = " + t.get_str());
        }
    }

    // Columns f1, f3 + c f5, f2, f4 - c f6, f3, f7, f4, f8 with c = 1/t; limit member by member at c = 0.
    std::vector<std::vector<Matrix>> cols{{f(1)}, {f(3), f(5)}, {f(2)}, {f(4), f(6).scaled(Scalar(mpq_class(-1)))},
                                          {f(3)}, {f(7)}, {f(4)}, {f(8)}};
    Flag lim{F.dims, {}};
    for (int d : F.dims) lim.spaces.push_back(limit_span(std::vector<std::vector<Matrix>>(cols.begin(), cols.begin() + d)));
    rep.limit_flag_equal = lim == sF;
    if (!rep.limit_flag_equal) fail("limit flag differs from sF");

    rep.phi_limit = phi(sF, sc);
    if (!(rep.phi_limit == f13)) fail("phi(sF) = " + describe(rep.phi_limit));
    if (!(rep.phi_limit == image(sc.s, rep.phi_w))) fail("phi(sF) differs from s phi(wF)");
    rep.isotropic = alpha_isotropic(rep.phi_w, sc) && alpha_isotropic(rep.phi_limit, sc);
    if (!rep.isotropic) fail("phi values are not alpha-isotropic");
    if (rep.phi_w.dim() != static_cast<std::size_t>(sc.r) || rep.phi_limit.dim() != static_cast<std::size_t>(sc.r))
        fail("phi values do not have dimension r");
    rep.discontinuous = rep.limit_flag_equal && rep.family_phi_constant && !(rep.family_phi == rep.phi_limit);
    if (!rep.discontinuous) fail("no discontinuity witnessed");
    return rep;
}

json to_json(const NoncontinuityReport& r) {
    return {{"family_phi", describe(r.family_phi)},
            {"phi_w", describe(r.phi_w)},
            {"t_values", r.t_values},
            {"family_matches", r.family_matches},
            {"limit_flag_equal", r.limit_flag_equal},
            {"phi_limit", describe(r.phi_limit)},
            {"wF_n_stable", r.wF_n_stable},
            {"alpha_isotropic", r.isotropic},
            {"discontinuous", r.discontinuous},
            {"failures", r.failures},
            {"ok", r.ok()}};
}

}  // namespace zorbit
