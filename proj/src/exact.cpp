#include "zorbit/exact.hpp"

#include <sstream>

namespace zorbit {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t reduce_long(long v, std::uint64_t p) {
    long m = v % static_cast<long>(p);
    if (m < 0) m += static_cast<long>(p);
    return static_cast<std::uint64_t>(m);
}

std::uint64_t reduce_mpz(const mpz_class& z, std::uint64_t p) {
    mpz_class m = z % mpz_class(std::to_string(p));
    if (m < 0) m += mpz_class(std::to_string(p));
    return std::stoull(m.get_str());
}

}  // namespace

Field Field::prime(std::uint64_t p) {
    if (p < 2) throw std::invalid_argument("not a prime: " + std::to_string(p));
    if (p >= (1ULL << 62)) throw std::invalid_argument("prime too large: " + std::to_string(p));
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) throw std::invalid_argument("not a prime: " + std::to_string(p));
    Field f;
    f.p_ = p;
    return f;
}

std::string Field::name() const { return p_ == 0 ? "Q" : "GF(" + std::to_string(p_) + ")"; }

Scalar::Scalar(long v, Field f) : p_(f.characteristic()) {
    if (p_ == 0)
        q_ = v;
    else
        r_ = reduce_long(v, p_);
}

Scalar Scalar::convert(const mpq_class& q, Field f) {
    if (f.is_rational()) return Scalar(q);
    Scalar s;
    s.p_ = f.characteristic();
    std::uint64_t den = reduce_mpz(q.get_den(), s.p_);
    if (den == 0) throw std::domain_error("denominator vanishes in " + f.name());
    s.r_ = mulmod(reduce_mpz(q.get_num(), s.p_), powmod(den, s.p_ - 2, s.p_), s.p_);
    return s;
}

const mpq_class& Scalar::rational() const {
    if (p_ != 0) throw FieldMismatch("scalar is not rational");
    return q_;
}

std::uint64_t Scalar::residue() const {
    if (p_ == 0) throw FieldMismatch("scalar is not a residue");
    return r_;
}

void Scalar::same_field(const Scalar& o) const {
    if (p_ != o.p_) throw FieldMismatch("field mismatch: " + field().name() + " vs " + o.field().name());
}

Scalar Scalar::operator+(const Scalar& o) const {
    same_field(o);
    Scalar s;
    s.p_ = p_;
    if (p_ == 0)
        s.q_ = q_ + o.q_;
    else
        s.r_ = (r_ + o.r_) % p_;
    return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
    same_field(o);
    Scalar s;
    s.p_ = p_;
    if (p_ == 0)
        s.q_ = q_ - o.q_;
    else
        s.r_ = (r_ + p_ - o.r_) % p_;
    return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
    same_field(o);
    Scalar s;
    s.p_ = p_;
    if (p_ == 0)
        s.q_ = q_ * o.q_;
    else
        s.r_ = mulmod(r_, o.r_, p_);
    return s;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    Scalar s;
    s.p_ = p_;
    if (p_ == 0)
        s.q_ = 1 / q_;
    else
        s.r_ = powmod(r_, p_ - 2, p_);
    return s;
}

Scalar Scalar::operator/(const Scalar& o) const {
    same_field(o);
    return *this * o.inverse();
}

Scalar Scalar::operator-() const {
    Scalar s;
    s.p_ = p_;
    if (p_ == 0)
        s.q_ = -q_;
    else
        s.r_ = (p_ - r_) % p_;
    return s;
}

bool Scalar::operator==(const Scalar& o) const {
    same_field(o);
    return p_ == 0 ? q_ == o.q_ : r_ == o.r_;
}

std::string Scalar::str() const { return p_ == 0 ? q_.get_str() : std::to_string(r_); }

Matrix::Matrix(std::size_t rows, std::size_t cols, Field f)
    : rows_(rows), cols_(cols), field_(f), data_(rows * cols, Scalar(0, f)) {}

Matrix Matrix::identity(std::size_t n, Field f) {
    Matrix m(n, n, f);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

Matrix Matrix::from_ints(const std::vector<std::vector<long>>& rows, Field f) {
    std::size_t c = rows.empty() ? 0 : rows[0].size();
    Matrix m(rows.size(), c, f);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != c) throw ShapeError("ragged matrix rows");
        for (std::size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows) {
    if (rows.empty() || rows[0].empty()) throw ShapeError("matrix needs at least one entry to fix its field");
    Matrix m(rows.size(), rows[0].size(), rows[0][0].field());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_) throw ShapeError("ragged matrix rows");
        for (std::size_t j = 0; j < m.cols_; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

Matrix Matrix::column(const std::vector<Scalar>& v, Field f) {
    Matrix m(v.size(), 1, f);
    for (std::size_t i = 0; i < v.size(); ++i) m.set(i, 0, v[i]);
    return m;
}

void Matrix::set(std::size_t i, std::size_t j, const Scalar& s) {
    if (!(s.field() == field_)) throw FieldMismatch("entry over " + s.field().name() + " in matrix over " + field_.name());
    data_[i * cols_ + j] = s;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("shape mismatch in +");
    if (!(field_ == o.field_)) throw FieldMismatch("field mismatch in +");
    Matrix r(*this);
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] += o.data_[k];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("shape mismatch in -");
    if (!(field_ == o.field_)) throw FieldMismatch("field mismatch in -");
    Matrix r(*this);
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] -= o.data_[k];
    return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw ShapeError("shape mismatch in *");
    if (!(field_ == o.field_)) throw FieldMismatch("field mismatch in *");
    Matrix r(rows_, o.cols_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = (*this)(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                const Scalar& b = o(k, j);
                if (!b.is_zero()) r.data_[i * o.cols_ + j] += a * b;
            }
        }
    return r;
}

Matrix Matrix::scaled(const Scalar& s) const {
    Matrix r(*this);
    for (auto& x : r.data_) x *= s;
    return r;
}

bool Matrix::operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || !(field_ == o.field_)) return false;
    for (std::size_t k = 0; k < data_.size(); ++k)
        if (data_[k] != o.data_[k]) return false;
    return true;
}

Matrix Matrix::transpose() const {
    Matrix r(cols_, rows_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.data_[j * rows_ + i] = (*this)(i, j);
    return r;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw ShapeError("block out of range");
    Matrix r(nr, nc, field_);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) r.data_[i * nc + j] = (*this)(r0 + i, c0 + j);
    return r;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw ShapeError("block out of range");
    if (!(field_ == b.field_)) throw FieldMismatch("field mismatch in set_block");
    for (std::size_t i = 0; i < b.rows_; ++i)
        for (std::size_t j = 0; j < b.cols_; ++j) data_[(r0 + i) * cols_ + c0 + j] = b(i, j);
}

bool Matrix::is_zero() const {
    for (const auto& x : data_)
        if (!x.is_zero()) return false;
    return true;
}

bool Matrix::is_identity() const {
    if (!square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (i == j ? !(*this)(i, j).is_one() : !(*this)(i, j).is_zero()) return false;
    return true;
}

bool Matrix::is_upper_triangular() const {
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < i && j < cols_; ++j)
            if (!(*this)(i, j).is_zero()) return false;
    return true;
}

Matrix Matrix::unflatten(const std::vector<Scalar>& v, std::size_t rows, std::size_t cols, Field f) {
    if (v.size() != rows * cols) throw ShapeError("unflatten size mismatch");
    Matrix m(rows, cols, f);
    for (std::size_t k = 0; k < v.size(); ++k) m.set(k / cols, k % cols, v[k]);
    return m;
}

std::size_t Matrix::rank() const { return rref(*this).rank; }

Scalar Matrix::det() const {
    if (!square()) throw ShapeError("det of non-square matrix");
    Matrix a(*this);
    Scalar d(1, field_);
    std::size_t n = rows_;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a(p, c).is_zero()) ++p;
        if (p == n) return Scalar(0, field_);
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a.data_[p * n + j], a.data_[c * n + j]);
            d = -d;
        }
        Scalar piv = a(c, c);
        d *= piv;
        Scalar inv = piv.inverse();
        for (std::size_t i = c + 1; i < n; ++i) {
            if (a(i, c).is_zero()) continue;
            Scalar f = a(i, c) * inv;
            for (std::size_t j = c; j < n; ++j) a.data_[i * n + j] -= f * a(c, j);
        }
    }
    return d;
}

Matrix Matrix::inverse() const {
    if (!square()) throw ShapeError("inverse of non-square matrix");
    std::size_t n = rows_;
    Matrix aug(n, 2 * n, field_);
    aug.set_block(0, 0, *this);
    aug.set_block(0, n, identity(n, field_));
    Rref r = rref(aug);
    if (r.rank < n || r.pivots[n - 1] != n - 1) throw std::domain_error("matrix is singular");
    return r.form.block(0, n, n, n);
}

Matrix Matrix::power(unsigned k) const {
    if (!square()) throw ShapeError("power of non-square matrix");
    Matrix r = identity(rows_, field_);
    for (unsigned i = 0; i < k; ++i) r = r * *this;
    return r;
}

std::string Matrix::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j).str();
        os << '\n';
    }
    return os.str();
}

Matrix block_diag(const std::vector<Matrix>& blocks) {
    if (blocks.empty()) return Matrix();
    std::size_t n = 0, m = 0;
    for (const auto& b : blocks) n += b.rows(), m += b.cols();
    Matrix r(n, m, blocks[0].field());
    std::size_t i = 0, j = 0;
    for (const auto& b : blocks) {
        r.set_block(i, j, b);
        i += b.rows();
        j += b.cols();
    }
    return r;
}

Rref rref(const Matrix& m) {
    Rref out;
    out.form = m;
    Matrix& a = out.form;
    std::size_t R = a.rows(), C = a.cols(), row = 0;
    for (std::size_t c = 0; c < C && row < R; ++c) {
        std::size_t p = row;
        while (p < R && a(p, c).is_zero()) ++p;
        if (p == R) continue;
        if (p != row)
            for (std::size_t j = 0; j < C; ++j) {
                Scalar t = a(p, j);
                a.set(p, j, a(row, j));
                a.set(row, j, t);
            }
        Scalar inv = a(row, c).inverse();
        for (std::size_t j = c; j < C; ++j)
            if (!a(row, j).is_zero()) a.set(row, j, a(row, j) * inv);
        for (std::size_t i = 0; i < R; ++i) {
            if (i == row || a(i, c).is_zero()) continue;
            Scalar f = a(i, c);
            for (std::size_t j = c; j < C; ++j)
                if (!a(row, j).is_zero()) a.set(i, j, a(i, j) - f * a(row, j));
        }
        out.pivots.push_back(c);
        ++row;
    }
    out.rank = row;
    return out;
}

MatSpace nullspace(const Matrix& m) {
    return MatSpace::solve(m.cols(), 1, m);
}

MatSpace::MatSpace(std::size_t rows, std::size_t cols, Field f)
    : rows_(rows), cols_(cols), field_(f), echelon_(0, rows * cols, f) {}

MatSpace MatSpace::span(std::size_t rows, std::size_t cols, Field f, const std::vector<Matrix>& gens) {
    MatSpace s(rows, cols, f);
    if (gens.empty()) return s;
    Matrix g(gens.size(), rows * cols, f);
    for (std::size_t k = 0; k < gens.size(); ++k) {
        if (gens[k].rows() != rows || gens[k].cols() != cols) throw ShapeError("generator shape mismatch");
        if (!(gens[k].field() == f)) throw FieldMismatch("generator over wrong field");
        auto v = gens[k].flatten();
        for (std::size_t j = 0; j < v.size(); ++j) g.set(k, j, v[j]);
    }
    Rref r = rref(g);
    s.echelon_ = r.form.block(0, 0, r.rank, rows * cols);
    s.pivots_ = r.pivots;
    return s;
}

MatSpace MatSpace::full(std::size_t rows, std::size_t cols, Field f) {
    MatSpace s(rows, cols, f);
    s.echelon_ = Matrix::identity(rows * cols, f);
    for (std::size_t k = 0; k < rows * cols; ++k) s.pivots_.push_back(k);
    return s;
}

MatSpace MatSpace::solve(std::size_t rows, std::size_t cols, const Matrix& eqs) {
    std::size_t N = rows * cols;
    if (eqs.cols() != N) throw ShapeError("equation width does not match matrix shape");
    Field f = eqs.field();
    Rref r = rref(eqs);
    std::vector<bool> is_pivot(N, false);
    for (auto p : r.pivots) is_pivot[p] = true;
    std::vector<Matrix> gens;
    for (std::size_t free = 0; free < N; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Scalar> v(N, Scalar(0, f));
        v[free] = Scalar(1, f);
        for (std::size_t i = 0; i < r.rank; ++i) v[r.pivots[i]] = -r.form(i, free);
        gens.push_back(Matrix::unflatten(v, rows, cols, f));
    }
    MatSpace s = span(rows, cols, f, gens);
    if (s.dim() + r.rank != N) throw std::logic_error("rank-nullity violated");
    return s;
}

std::vector<Matrix> MatSpace::basis() const {
    std::vector<Matrix> out;
    for (std::size_t i = 0; i < dim(); ++i) out.push_back(echelon_.block(i, 0, 1, rows_ * cols_));
    for (auto& m : out) m = Matrix::unflatten(m.flatten(), rows_, cols_, field_);
    return out;
}

std::vector<Scalar> MatSpace::reduce(std::vector<Scalar> v) const {
    for (std::size_t i = 0; i < dim(); ++i) {
        Scalar c = v[pivots_[i]];
        if (c.is_zero()) continue;
        for (std::size_t j = pivots_[i]; j < v.size(); ++j)
            if (!echelon_(i, j).is_zero()) v[j] -= c * echelon_(i, j);
    }
    return v;
}

bool MatSpace::contains(const Matrix& x) const {
    if (x.rows() != rows_ || x.cols() != cols_) throw ShapeError("shape mismatch in contains");
    if (!(x.field() == field_)) throw FieldMismatch("field mismatch in contains");
    for (const auto& s : reduce(x.flatten()))
        if (!s.is_zero()) return false;
    return true;
}

void MatSpace::check_compatible(const MatSpace& s) const {
    if (s.rows_ != rows_ || s.cols_ != cols_) throw ShapeError("ambient shape mismatch");
    if (!(s.field_ == field_)) throw FieldMismatch("field mismatch between subspaces");
}

bool MatSpace::contains(const MatSpace& s) const {
    check_compatible(s);
    for (const auto& b : s.basis())
        if (!contains(b)) return false;
    return true;
}

MatSpace MatSpace::sum(const MatSpace& s) const {
    check_compatible(s);
    auto g = basis();
    for (auto& b : s.basis()) g.push_back(b);
    return span(rows_, cols_, field_, g);
}

MatSpace MatSpace::intersect(const MatSpace& s) const {
    check_compatible(s);
    std::size_t N = rows_ * cols_, a = dim(), b = s.dim();
    MatSpace out(rows_, cols_, field_);
    if (a == 0 || b == 0) return out;
    Matrix sys(N, a + b, field_);
    for (std::size_t i = 0; i < a; ++i)
        for (std::size_t k = 0; k < N; ++k) sys.set(k, i, echelon_(i, k));
    for (std::size_t j = 0; j < b; ++j)
        for (std::size_t k = 0; k < N; ++k) sys.set(k, a + j, -s.echelon_(j, k));
    std::vector<Matrix> gens;
    for (const auto& c : nullspace(sys).basis()) {
        std::vector<Scalar> v(N, Scalar(0, field_));
        for (std::size_t i = 0; i < a; ++i)
            if (!c(i, 0).is_zero())
                for (std::size_t k = 0; k < N; ++k) v[k] += c(i, 0) * echelon_(i, k);
        gens.push_back(Matrix::unflatten(v, rows_, cols_, field_));
    }
    out = span(rows_, cols_, field_, gens);
    if (out.dim() + sum(s).dim() != a + b) throw std::logic_error("dimension formula for intersection violated");
    return out;
}

MatSpace MatSpace::map(const std::function<Matrix(const Matrix&)>& f, std::size_t rows, std::size_t cols) const {
    std::vector<Matrix> g;
    for (const auto& b : basis()) g.push_back(f(b));
    return span(rows, cols, field_, g);
}

MatSpace MatSpace::with_zeros(const std::function<bool(std::size_t, std::size_t)>& zero_at) const {
    std::vector<std::size_t> pos;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (zero_at(i, j)) pos.push_back(i * cols_ + j);
    if (pos.empty() || dim() == 0) return *this;
    Matrix sys(pos.size(), dim(), field_);
    for (std::size_t k = 0; k < pos.size(); ++k)
        for (std::size_t b = 0; b < dim(); ++b) sys.set(k, b, echelon_(b, pos[k]));
    std::vector<Matrix> gens;
    std::size_t N = rows_ * cols_;
    for (const auto& c : nullspace(sys).basis()) {
        std::vector<Scalar> v(N, Scalar(0, field_));
        for (std::size_t b = 0; b < dim(); ++b)
            if (!c(b, 0).is_zero())
                for (std::size_t k = 0; k < N; ++k) v[k] += c(b, 0) * echelon_(b, k);
        gens.push_back(Matrix::unflatten(v, rows_, cols_, field_));
    }
    return span(rows_, cols_, field_, gens);
}

bool MatSpace::operator==(const MatSpace& s) const {
    return s.rows_ == rows_ && s.cols_ == cols_ && s.field_ == field_ && s.echelon_ == echelon_;
}

}  // namespace zorbit
