#include "zorbit/models.hpp"

#include <map>

namespace zorbit {

Tag parse_tag(const std::string& s) {
    static const std::map<std::string, Tag> tags = {{"G", Tag::G}, {"B", Tag::B}, {"T", Tag::T}, {"P", Tag::P},
                                                    {"L", Tag::L}, {"Z", Tag::Z}, {"H", Tag::H}, {"BorelConj", Tag::BorelConj}};
    auto it = tags.find(s);
    if (it == tags.end()) throw std::invalid_argument("unknown group tag \"" + s + "\"");
    return it->second;
}

std::string tag_name(Tag t) {
    switch (t) {
    case Tag::G: return "G";
    case Tag::B: return "B";
    case Tag::T: return "T";
    case Tag::P: return "P";
    case Tag::L: return "L";
    case Tag::Z: return "Z";
    case Tag::H: return "H";
    case Tag::BorelConj: return "BorelConj";
    }
    return "?";
}

Matrix perm_matrix(const Perm& p, Field f) {
    Matrix m(p.size(), p.size(), f);
    for (int i = 1; i <= p.size(); ++i) m.set(p(i) - 1, i - 1, 1);
    return m;
}

Perm monomial_perm(const Matrix& m) {
    if (!m.square()) throw ShapeError("monomial matrix must be square");
    std::vector<int> v(m.cols(), 0);
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (!m(i, j).is_zero()) {
                if (v[j]) throw std::invalid_argument("matrix is not monomial");
                v[j] = static_cast<int>(i) + 1;
            }
    for (int x : v)
        if (!x) throw std::invalid_argument("matrix is not monomial");
    return Perm(std::move(v));
}

Perm embed_b(const Perm& p) {
    int n = p.size();
    if (n % 2 == 0) throw std::invalid_argument("embed_b needs an odd number of letters");
    int m = n / 2;
    auto lift = [m](int j) { return j <= m ? j : j + 1; };
    std::vector<int> v(n + 1);
    int big = 0;
    for (int i = 1; i <= m; ++i) {
        v[i - 1] = lift(p(i));
        big += p(i) > m + 1;
    }
    for (int i = m + 2; i <= n; ++i) v[i] = lift(p(i));
    v[m] = big % 2 ? m + 2 : m + 1;
    v[m + 1] = big % 2 ? m + 1 : m + 2;
    return Perm(std::move(v));
}

Perm contract_b(const Perm& p) {
    int N = p.size();
    if (N % 2) throw std::invalid_argument("contract_b needs an even number of letters");
    int m = N / 2 - 1;
    auto drop = [m](int j) { return j <= m ? j : j - 1; };
    if (p(m + 1) != m + 1 && p(m + 1) != m + 2) throw std::invalid_argument("permutation does not fix the middle pair");
    std::vector<int> v(N - 1);
    for (int i = 1; i <= m; ++i) v[i - 1] = drop(p(i));
    v[m] = m + 1;
    for (int i = m + 3; i <= N; ++i) v[i - 2] = drop(p(i));
    return Perm(std::move(v));
}

Perm ambient_perm(const Perm& p, const ModelSpec& s) { return s.family == Family::B ? embed_b(p) : p; }
Perm model_perm(const Perm& p, const ModelSpec& s) { return s.family == Family::B ? contract_b(p) : p; }

Matrix form_I(int eps, int m, Field f) {
    Matrix I(m, m, f);
    for (int i = 0; i < m; ++i) I.set(i, i, i < (m + 1) / 2 ? 1 : eps);
    return I;
}

Matrix delta(const Matrix& m) {
    if (!m.square()) throw ShapeError("delta needs a square matrix");
    std::size_t N = m.rows();
    Matrix d(N, N, m.field());
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) d.set(i, j, m(N - 1 - j, N - 1 - i));
    return d;
}

Matrix nilpotent_e(const ModelSpec& s, Field f) {
    int N = s.ambient(), r = s.r;
    Matrix e(N, N, f);
    e.set_block(0, N - r, s.family == Family::A ? Matrix::identity(r, f) : form_I(-s.eps(), r, f));
    return e;
}

namespace {

struct Equations {
    int N;
    Field f;
    std::vector<std::vector<std::pair<int, long>>> rows;

    int var(int i, int j) const { return i * N + j; }
    void add(std::vector<std::pair<int, long>> row) { rows.push_back(std::move(row)); }
    void zero(int i, int j) { add({{var(i, j), 1}}); }

    Matrix matrix() const {
        Matrix m(rows.size(), N * N, f);
        for (std::size_t k = 0; k < rows.size(); ++k)
            for (auto [v, c] : rows[k]) m.set(k, v, m(k, v) + Scalar(c, f));
        return m;
    }
    MatSpace solve() const {
        if (rows.empty()) return MatSpace::full(N, N, f);
        return MatSpace::solve(N, N, matrix());
    }
};

int ambient_of(Family fam, int n) { return fam == Family::B ? n + 1 : n; }

void check_family_size(Family fam, int n) {
    if (n < 0) throw SpecError("negative size");
    if ((fam == Family::C || fam == Family::D) && n % 2) throw SpecError("families C and D need an even size");
    if (fam == Family::B && n % 2 == 0) throw SpecError("family B needs an odd size");
}

void group_equations(Equations& eq, Family fam, int n) {
    check_family_size(fam, n);
    int N = eq.N;
    if (fam == Family::C && eq.f.characteristic() == 2) throw std::domain_error("type C is not supported in characteristic 2");
    if (fam == Family::A) return;
    if (fam == Family::C) {
        auto I = [N](int i) { return i < (N + 1) / 2 ? 1L : -1L; };
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) eq.add({{eq.var(i, j), 1}, {eq.var(N - 1 - j, N - 1 - i), I(i) * I(j)}});
        return;
    }
    for (int i = 0; i < N; ++i) {
        for (int j = 0; j < N; ++j) eq.add({{eq.var(i, j), 1}, {eq.var(N - 1 - j, N - 1 - i), 1}});
        eq.zero(N - 1 - i, i);
    }
    if (fam == Family::B) {
        int a = N / 2 - 1, b = N / 2;
        for (int i = 0; i < N; ++i) eq.add({{eq.var(i, a), 1}, {eq.var(i, b), -1}});
    }
}

int block_of(int i, int N, int r) { return i < r ? 0 : (i < N - r ? 1 : 2); }

bool refined_isotropic(const Matrix& g) {
    std::size_t N = g.rows(), m = N / 2;
    for (std::size_t i = 0; i < N; ++i) {
        Scalar s(0, g.field());
        for (std::size_t k = 0; k < m; ++k) s += g(k, i) * g(N - 1 - k, i);
        if (!s.is_zero()) return false;
    }
    return true;
}

}  // namespace

MatSpace lie_group(Family fam, int n, Field k) {
    Equations eq{ambient_of(fam, n), k, {}};
    group_equations(eq, fam, n);
    return eq.solve();
}

bool member_group(const Matrix& g, Family fam, int n) {
    check_family_size(fam, n);
    int N = ambient_of(fam, n);
    if (g.rows() != static_cast<std::size_t>(N) || g.cols() != static_cast<std::size_t>(N)) throw ShapeError("matrix size does not match the model");
    Field f = g.field();
    if (fam == Family::A) return !g.det().is_zero();
    if (fam == Family::C) {
        if (f.characteristic() == 2) throw std::domain_error("type C is not supported in characteristic 2");
        Matrix I = form_I(-1, N, f);
        return (I * delta(g) * I * g).is_identity();
    }
    if (!(delta(g) * g).is_identity() || !refined_isotropic(g)) return false;
    if (f.characteristic() == 2) {
        if ((g + Matrix::identity(N, f)).rank() % 2) return false;
    } else if (!g.det().is_one()) {
        return false;
    }
    if (fam == Family::B) {
        int a = N / 2 - 1, b = N / 2;
        for (int i = 0; i < N; ++i) {
            Scalar want(i == a ? 1 : (i == b ? -1 : 0), f);
            if (g(i, a) - g(i, b) != want) return false;
        }
    }
    return true;
}

Matrix weyl_lift(const Perm& w, Family fam, int n, Field k) {
    check_family_size(fam, n);
    if (w.size() != n) throw ShapeError("weyl_lift: permutation size does not match");
    Perm x = fam == Family::B ? embed_b(w) : w;
    int N = x.size();
    Matrix d = Matrix::identity(N, k);
    if (fam == Family::C) {
        auto I = [N](int i) { return i <= N / 2 ? 1 : -1; };
        for (int i = 1; i <= N / 2; ++i) d.set(x(bar(i, N)) - 1, x(bar(i, N)) - 1, I(i) * I(x(i)));
    } else if (fam == Family::B && x(N / 2) != N / 2) {
        d.set(N / 2 - 1, N / 2 - 1, -1);
        d.set(N / 2, N / 2, -1);
    }
    Matrix g = d * perm_matrix(x, k);
    if (!member_group(g, fam, n)) throw std::invalid_argument("[" + w.str() + "] has no monomial lift in G");
    return g;
}

MatSpace lie_basis(Tag t, const ModelSpec& s, Field f, const Perm& w) {
    int N = s.ambient(), r = s.r;
    Equations eq{N, f, {}};
    group_equations(eq, s.family, s.n);
    switch (t) {
    case Tag::G:
        break;
    case Tag::B:
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < i; ++j) eq.zero(i, j);
        break;
    case Tag::T:
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j)
                if (i != j) eq.zero(i, j);
        break;
    case Tag::P:
    case Tag::L:
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) {
                int bi = block_of(i, N, r), bj = block_of(j, N, r);
                if (bi > bj || (t == Tag::L && bi != bj)) eq.zero(i, j);
            }
        break;
    case Tag::Z: {
        auto e = [&](int i, int j) -> long {
            if (i >= r || j != N - r + i) return 0;
            return s.family == Family::A || i < (r + 1) / 2 ? 1 : -s.eps();
        };
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) {
                std::vector<std::pair<int, long>> row;
                for (int k = 0; k < N; ++k) {
                    if (e(k, j)) row.push_back({eq.var(i, k), e(k, j)});
                    if (e(i, k)) row.push_back({eq.var(k, j), -e(i, k)});
                }
                if (!row.empty()) eq.add(std::move(row));
            }
        break;
    }
    case Tag::H: {
        Matrix I = s.family == Family::A ? Matrix::identity(r, f) : form_I(-s.eps(), r, f);
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) {
                int bi = block_of(i, N, r), bj = block_of(j, N, r);
                if (bi != bj || bi == 1) eq.zero(i, j);
            }
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) {
                long c = (I(i, i) * I(j, j)).is_one() ? 1 : -1;
                eq.add({{eq.var(N - r + i, N - r + j), 1}, {eq.var(i, j), -c}});
            }
        break;
    }
    case Tag::BorelConj: {
        Perm x = ambient_perm(w, s);
        if (!in_weyl(w, s.weyl())) throw std::invalid_argument("[" + w.str() + "] is not in W for " + s.str());
        Perm xi = x.inverse();
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j)
                if (xi(i + 1) > xi(j + 1)) eq.zero(i, j);
        break;
    }
    }
    return eq.solve();
}

bool member(const Matrix& g, Tag t, const ModelSpec& s, const Perm& w) {
    if (!member_group(g, s.family, s.n)) return false;
    int N = s.ambient(), r = s.r;
    Field f = g.field();
    auto pattern = [&](auto zero_at) {
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j)
                if (zero_at(i, j) && !g(i, j).is_zero()) return false;
        return true;
    };
    auto blocks_ok = [&](bool diag) {
        return pattern([&](int i, int j) {
            int bi = block_of(i, N, r), bj = block_of(j, N, r);
            return bi > bj || (diag && bi != bj);
        });
    };
    switch (t) {
    case Tag::G: return true;
    case Tag::B: return g.is_upper_triangular();
    case Tag::T: return pattern([](int i, int j) { return i != j; });
    case Tag::P: return blocks_ok(false);
    case Tag::L: return blocks_ok(true);
    case Tag::Z: {
        Matrix e = nilpotent_e(s, f);
        return g * e == e * g;
    }
    case Tag::H: {
        if (!blocks_ok(true) || !g.block(r, r, N - 2 * r, N - 2 * r).is_identity()) return false;
        Matrix I = s.family == Family::A ? Matrix::identity(r, f) : form_I(-s.eps(), r, f);
        return g.block(N - r, N - r, r, r) == I * g.block(0, 0, r, r) * I;
    }
    case Tag::BorelConj: {
        if (!in_weyl(w, s.weyl())) throw std::invalid_argument("[" + w.str() + "] is not in W for " + s.str());
        Matrix P = perm_matrix(ambient_perm(w, s), f);
        return (P.inverse() * g * P).is_upper_triangular();
    }
    }
    return false;
}

Matrix apply_theta(const Matrix& l, const ModelSpec& s) {
    if (!member(l, Tag::L, s)) throw std::invalid_argument("apply_theta: matrix is not in L");
    int N = s.ambient(), r = s.r;
    Field f = l.field();
    Matrix a = l.block(0, 0, r, r), b = l.block(r, r, N - 2 * r, N - 2 * r), c = l.block(N - r, N - r, r, r);
    if (s.family == Family::A) return block_diag({c, b, a});
    Matrix I = form_I(-s.eps(), r, f);
    return block_diag({I * c * I, b, I * a * I});
}

Matrix apply_varpi(const Matrix& z, const ModelSpec& s) {
    if (!member(z, Tag::Z, s)) throw std::invalid_argument("apply_varpi: matrix is not in Z");
    int N = s.ambient(), r = s.r;
    Field f = z.field();
    return block_diag({z.block(0, 0, r, r), Matrix::identity(N - 2 * r, f), z.block(N - r, N - r, r, r)});
}

int dickson(const Matrix& g) {
    if (g.field().characteristic() != 2) throw std::invalid_argument("dickson: matrix must be over GF(2)");
    if (!g.square() || g.rows() % 2) throw ShapeError("dickson: need an even square matrix");
    if (!(delta(g) * g).is_identity() || !refined_isotropic(g)) throw std::invalid_argument("dickson: matrix is not orthogonal");
    return static_cast<int>((g + Matrix::identity(g.rows(), g.field())).rank() % 2);
}

Matrix standard_order_two(int n, int s, Field f) {
    if (s < 0 || 2 * s > n) throw std::invalid_argument("need 0 <= s <= n/2");
    Matrix N(n, n, f);
    for (int i = 0; i < s; ++i) N.set(i, n - s + i, 1);
    return N;
}

Matrix random_orthogonal_gf2(int d, std::mt19937_64& rng, int factors) {
    if (d % 2 || d <= 0) throw ShapeError("random_orthogonal_gf2: need an even positive size");
    Field f2 = Field::prime(2);
    int m = d / 2;
    Matrix J(d, d, f2);
    for (int i = 0; i < d; ++i) J.set(i, d - 1 - i, 1);
    std::bernoulli_distribution coin(0.5);
    auto random_matrix = [&](int rows) {
        Matrix x(rows, rows == d ? 1 : rows, f2);
        for (std::size_t i = 0; i < x.rows(); ++i)
            for (std::size_t j = 0; j < x.cols(); ++j) x.set(i, j, coin(rng) ? 1 : 0);
        return x;
    };
    Matrix g = Matrix::identity(d, f2);
    for (int k = 0; k < factors; ++k) {
        if (coin(rng)) {
            Matrix v = random_matrix(d);
            while (!quadratic_form(v).is_one()) v = random_matrix(d);
            g = g * (Matrix::identity(d, f2) + v * v.transpose() * J);
        } else {
            Matrix a = random_matrix(m);
            while (a.det().is_zero()) a = random_matrix(m);
            Matrix l(d, d, f2);
            l.set_block(0, 0, a);
            l.set_block(m, m, delta(a.inverse()));
            g = g * l;
        }
    }
    return g;
}

Scalar quadratic_form(const Matrix& y) {
    if (y.cols() != 1) throw ShapeError("quadratic_form expects a column vector");
    std::size_t n = y.rows();
    Scalar q(0, y.field());
    for (std::size_t k = 0; k < (n + 1) / 2; ++k) q += y(k, 0) * y(n - 1 - k, 0);
    return q;
}

bool totally_isotropic(const MatSpace& s) {
    auto b = s.basis();
    for (std::size_t i = 0; i < b.size(); ++i) {
        Scalar qi = quadratic_form(b[i]);
        if (!qi.is_zero()) return false;
        for (std::size_t j = i + 1; j < b.size(); ++j)
            if (!(quadratic_form(b[i] + b[j]) - qi - quadratic_form(b[j])).is_zero()) return false;
    }
    return true;
}

std::vector<int> chi_sequence(const Matrix& N, int m_max) {
    if (N.field().characteristic() != 2) throw std::invalid_argument("chi_sequence: matrix must be over GF(2)");
    if (!N.square()) throw ShapeError("chi_sequence: need a square matrix");
    std::size_t n = N.rows();
    if (!N.power(static_cast<unsigned>(n)).is_zero()) throw std::invalid_argument("chi_sequence: matrix is not nilpotent");
    std::vector<int> out;
    for (int m = 1; m <= m_max; ++m) {
        MatSpace K = nullspace(N.power(m));
        Matrix Nl = Matrix::identity(n, N.field());
        for (int l = 0;; ++l) {
            MatSpace S = K.map([&](const Matrix& v) { return Nl * v; }, n, 1);
            if (totally_isotropic(S)) {
                out.push_back(l);
                break;
            }
            Nl = Nl * N;
        }
    }
    return out;
}

Matrix cayley(const Matrix& x) {
    Matrix I = Matrix::identity(x.rows(), x.field());
    return (I - x).inverse() * (I + x);
}

Matrix random_element(const MatSpace& s, std::mt19937_64& rng, int bound) {
    std::uniform_int_distribution<long> d(-bound, bound);
    Matrix x(s.rows(), s.cols(), s.field());
    for (const auto& b : s.basis()) x = x + b.scaled(Scalar(d(rng), s.field()));
    return x;
}

}  // namespace zorbit
