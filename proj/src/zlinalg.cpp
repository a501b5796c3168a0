#include "toricsec/zlinalg.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace toricsec {

Integer binomial(long n, long k)
{
    if (k < 0 || k > n)
        return 0;
    Integer r = 1;
    for (long i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

IntVec make_vec(std::initializer_list<long> entries)
{
    IntVec v;
    v.reserve(entries.size());
    for (long e : entries)
        v.emplace_back(e);
    return v;
}

std::string to_string(const IntVec& v)
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? "," : "") << v[i];
    os << ')';
    return os.str();
}

static void require_same_length(const IntVec& a, const IntVec& b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("dimension mismatch: " + to_string(a) + " vs " + to_string(b));
}

IntVec operator+(const IntVec& a, const IntVec& b)
{
    require_same_length(a, b);
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] + b[i];
    return r;
}

IntVec operator-(const IntVec& a, const IntVec& b)
{
    require_same_length(a, b);
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] - b[i];
    return r;
}

IntVec operator*(const Integer& c, const IntVec& v)
{
    IntVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        r[i] = c * v[i];
    return r;
}

Integer dot(const IntVec& a, const IntVec& b)
{
    require_same_length(a, b);
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

bool is_zero(const IntVec& v)
{
    return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

Integer content(const IntVec& v)
{
    Integer g = 0;
    for (const auto& x : v)
        g = gcd(g, x);
    return abs(g);
}

IntVec primitive_vector(const IntVec& v)
{
    Integer g = content(v);
    if (g == 0)
        throw std::invalid_argument("zero vector has no primitive direction");
    IntVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        r[i] = v[i] / g;
    return r;
}

// ---------------------------------------------------------------------------
// IntMat

IntMat::IntMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMat::IntMat(std::initializer_list<std::initializer_list<long>> rows)
{
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_)
            throw std::invalid_argument("ragged matrix literal");
        for (long e : r)
            data_.emplace_back(e);
    }
}

IntMat IntMat::identity(std::size_t n)
{
    IntMat m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

IntMat IntMat::from_rows(std::span<const IntVec> rows, std::size_t cols)
{
    IntMat m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols)
            throw std::invalid_argument("dimension mismatch in matrix rows");
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = rows[i][j];
    }
    return m;
}

IntMat IntMat::from_columns(std::span<const IntVec> cols, std::size_t rows)
{
    return from_rows(cols, rows).transposed();
}

IntVec IntMat::row(std::size_t i) const
{
    return IntVec(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

IntVec IntMat::col(std::size_t j) const
{
    IntVec c(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        c[i] = (*this)(i, j);
    return c;
}

IntMat IntMat::transposed() const
{
    IntMat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

void IntMat::swap_rows(std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    for (std::size_t j = 0; j < cols_; ++j)
        std::swap((*this)(a, j), (*this)(b, j));
}

void IntMat::add_row_multiple(std::size_t dst, std::size_t src, const Integer& c)
{
    if (c == 0)
        return;
    for (std::size_t j = 0; j < cols_; ++j)
        (*this)(dst, j) += c * (*this)(src, j);
}

void IntMat::negate_row(std::size_t i)
{
    for (std::size_t j = 0; j < cols_; ++j)
        (*this)(i, j) = -(*this)(i, j);
}

IntMat operator*(const IntMat& a, const IntMat& b)
{
    if (a.cols() != b.rows())
        throw std::invalid_argument("matrix product dimension mismatch");
    IntMat c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

IntVec operator*(const IntMat& a, const IntVec& v)
{
    if (a.cols() != v.size())
        throw std::invalid_argument("matrix-vector dimension mismatch");
    IntVec r(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            r[i] += a(i, j) * v[j];
    return r;
}

std::ostream& operator<<(std::ostream& os, const IntMat& m)
{
    os << '[';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? "," : "") << '[';
        for (std::size_t j = 0; j < m.cols(); ++j)
            os << (j ? "," : "") << m(i, j);
        os << ']';
    }
    return os << ']';
}

Integer determinant(const IntMat& m)
{
    if (m.rows() != m.cols())
        throw std::invalid_argument("determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0)
        return 1;
    IntMat a = m;
    Integer sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0)
                ++p;
            if (p == n)
                return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

// Reduces column `col` below row `pivot_row` to zero using unimodular row
// operations mirrored into `u`. Returns false if the column is already zero.
static bool eliminate_column(IntMat& h, IntMat& u, std::size_t pivot_row, std::size_t col)
{
    const std::size_t rows = h.rows();
    for (;;) {
        std::size_t best = rows;
        for (std::size_t i = pivot_row; i < rows; ++i) {
            if (h(i, col) == 0)
                continue;
            if (best == rows || abs(h(i, col)) < abs(h(best, col)))
                best = i;
        }
        if (best == rows)
            return false;
        h.swap_rows(pivot_row, best);
        u.swap_rows(pivot_row, best);
        bool done = true;
        for (std::size_t i = pivot_row + 1; i < rows; ++i) {
            if (h(i, col) == 0)
                continue;
            Integer q = h(i, col) / h(pivot_row, col);  // truncating
            h.add_row_multiple(i, pivot_row, -q);
            u.add_row_multiple(i, pivot_row, -q);
            if (h(i, col) != 0)
                done = false;
        }
        if (done)
            return true;
    }
}

static Integer floor_div(const Integer& a, const Integer& b)
{
    Integer q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        q -= 1;
    return q;
}

HermiteResult hermite_normal_form(const IntMat& m)
{
    IntMat h = m;
    IntMat u = IntMat::identity(m.rows());
    std::size_t r = 0;
    for (std::size_t c = 0; c < h.cols() && r < h.rows(); ++c) {
        if (!eliminate_column(h, u, r, c))
            continue;
        if (h(r, c) < 0) {
            h.negate_row(r);
            u.negate_row(r);
        }
        for (std::size_t i = 0; i < r; ++i) {
            Integer q = floor_div(h(i, c), h(r, c));
            h.add_row_multiple(i, r, -q);
            u.add_row_multiple(i, r, -q);
        }
        ++r;
    }
    return {std::move(h), std::move(u)};
}

static std::size_t hnf_rank(const IntMat& h)
{
    std::size_t r = 0;
    for (std::size_t i = 0; i < h.rows(); ++i) {
        bool nonzero = false;
        for (std::size_t j = 0; j < h.cols() && !nonzero; ++j)
            nonzero = h(i, j) != 0;
        if (nonzero)
            ++r;
    }
    return r;
}

std::size_t rank(const IntMat& m)
{
    return hnf_rank(hermite_normal_form(m).H);
}

static bool is_diagonal(const IntMat& a)
{
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i != j && a(i, j) != 0)
                return false;
    return true;
}

std::vector<Integer> smith_invariants(const IntMat& m)
{
    IntMat a = m;
    while (!is_diagonal(a)) {
        a = hermite_normal_form(a).H;
        if (is_diagonal(a))
            break;
        a = hermite_normal_form(a.transposed()).H.transposed();
    }
    const std::size_t k = std::min(a.rows(), a.cols());
    std::vector<Integer> d(k);
    for (std::size_t i = 0; i < k; ++i)
        d[i] = abs(a(i, i));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) {
            Integer g = gcd(d[i], d[j]);
            Integer l = (g == 0) ? Integer(0) : d[i] / g * d[j];
            d[i] = g;
            d[j] = l;
        }
    // zeros (rank deficiency) sort last
    std::stable_partition(d.begin(), d.end(), [](const Integer& x) { return x != 0; });
    return d;
}

bool is_partial_lattice_basis(std::span<const IntVec> vectors, std::size_t n)
{
    if (vectors.size() > n)
        throw std::invalid_argument("too many vectors");
    if (vectors.empty())
        return true;
    auto inv = smith_invariants(IntMat::from_rows(vectors, n));
    return std::all_of(inv.begin(), inv.end(), [](const Integer& x) { return x == 1; });
}

IntMat integer_kernel(const IntMat& m)
{
    HermiteResult hr = hermite_normal_form(m.transposed());
    const std::size_t r = hnf_rank(hr.H);
    const std::size_t n = m.cols();
    IntMat k(n - r, n);
    for (std::size_t i = r; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            k(i - r, j) = hr.U(i, j);
    return k;
}

IntMat unimodular_inverse(const IntMat& m)
{
    if (m.rows() != m.cols() || abs(determinant(m)) != 1)
        throw std::invalid_argument("matrix is not unimodular");
    // U * m == H == identity for a unimodular m
    return hermite_normal_form(m).U;
}

// ---------------------------------------------------------------------------
// AffineUnimodularMap

AffineUnimodularMap::AffineUnimodularMap(IntMat linear, IntVec translation)
    : linear_(std::move(linear)), translation_(std::move(translation))
{
    if (linear_.rows() != linear_.cols() || linear_.rows() != translation_.size())
        throw std::invalid_argument("affine map dimension mismatch");
    if (abs(determinant(linear_)) != 1)
        throw std::invalid_argument("affine map linear part is not unimodular");
}

AffineUnimodularMap AffineUnimodularMap::identity(std::size_t n)
{
    return AffineUnimodularMap(IntMat::identity(n), IntVec(n));
}

AffineUnimodularMap AffineUnimodularMap::translation(IntVec t)
{
    const std::size_t n = t.size();
    return AffineUnimodularMap(IntMat::identity(n), std::move(t));
}

AffineUnimodularMap AffineUnimodularMap::permutation(std::span<const std::size_t> perm)
{
    const std::size_t n = perm.size();
    IntMat p(n, n);
    std::vector<bool> seen(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        if (perm[i] >= n || seen[perm[i]])
            throw std::invalid_argument("not a permutation");
        seen[perm[i]] = true;
        p(perm[i], i) = 1;
    }
    return AffineUnimodularMap(std::move(p), IntVec(n));
}

IntVec AffineUnimodularMap::apply(const IntVec& p) const
{
    if (p.size() != dim())
        throw std::invalid_argument("dimension mismatch applying affine map to " + to_string(p));
    return linear_ * p + translation_;
}

AffineUnimodularMap AffineUnimodularMap::inverse() const
{
    IntMat inv = unimodular_inverse(linear_);
    IntVec t = inv * translation_;
    return AffineUnimodularMap(std::move(inv), Integer(-1) * t);
}

AffineUnimodularMap AffineUnimodularMap::compose(const AffineUnimodularMap& first) const
{
    return AffineUnimodularMap(linear_ * first.linear_, linear_ * first.translation_ + translation_);
}

IntVec apply_map(const AffineUnimodularMap& m, const IntVec& p)
{
    return m.apply(p);
}

// ---------------------------------------------------------------------------
// AffineLatticeChart

AffineLatticeChart::AffineLatticeChart(std::span<const IntVec> points)
{
    if (points.empty())
        throw std::invalid_argument("affine chart of an empty point set");
    origin_ = *std::min_element(points.begin(), points.end());
    const std::size_t n = origin_.size();
    std::vector<IntVec> diffs;
    for (const auto& p : points) {
        if (p.size() != n)
            throw std::invalid_argument("points of unequal length");
        if (p != origin_)
            diffs.push_back(p - origin_);
    }
    IntMat d = IntMat::from_rows(diffs, n);
    if (rank(d) == n) {
        basis_ = IntMat::identity(n);
        coordinates_ = IntMat::identity(n);
        return;
    }
    // Normals to the affine hull, then the saturated lattice they cut out.
    IntMat normals = integer_kernel(d);
    const std::size_t c = normals.rows();
    HermiteResult hr = hermite_normal_form(normals.transposed());
    IntMat uinv = unimodular_inverse(hr.U);
    const std::size_t k = n - c;
    basis_ = IntMat(k, n);
    coordinates_ = IntMat(n, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            basis_(i, j) = hr.U(c + i, j);
            coordinates_(j, i) = uinv(j, c + i);
        }
}

IntVec AffineLatticeChart::to_local(const IntVec& q) const
{
    IntVec diff = q - origin_;
    IntVec local(dim());
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = 0; j < ambient_dim(); ++j)
            local[i] += diff[j] * coordinates_(j, i);
    return local;
}

IntVec AffineLatticeChart::to_ambient(const IntVec& local) const
{
    if (local.size() != dim())
        throw std::invalid_argument("local coordinate dimension mismatch");
    IntVec q = origin_;
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = 0; j < ambient_dim(); ++j)
            q[j] += local[i] * basis_(i, j);
    return q;
}

}  // namespace toricsec
