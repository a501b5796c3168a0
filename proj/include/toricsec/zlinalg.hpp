// Exact integer linear algebra over Z: vectors, matrices, Hermite and Smith
// normal forms, lattice kernels and affine unimodular maps.

#ifndef TORICSEC_ZLINALG_HPP
#define TORICSEC_ZLINALG_HPP

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace toricsec {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

using IntVec = std::vector<Integer>;

IntVec make_vec(std::initializer_list<long> entries);

/// Binomial coefficient, 0 unless 0 <= k <= n.
Integer binomial(long n, long k);
std::string to_string(const IntVec& v);

IntVec operator+(const IntVec& a, const IntVec& b);
IntVec operator-(const IntVec& a, const IntVec& b);
IntVec operator*(const Integer& c, const IntVec& v);
Integer dot(const IntVec& a, const IntVec& b);
bool is_zero(const IntVec& v);
Integer content(const IntVec& v);  // gcd of the entries, 0 for the zero vector

/// Divides v by the gcd of its entries. The direction (and sign) of v is kept.
IntVec primitive_vector(const IntVec& v);

/// Dense row-major integer matrix.
class IntMat
{
public:
    IntMat() = default;
    IntMat(std::size_t rows, std::size_t cols);
    IntMat(std::initializer_list<std::initializer_list<long>> rows);

    static IntMat identity(std::size_t n);
    static IntMat from_rows(std::span<const IntVec> rows, std::size_t cols);
    static IntMat from_columns(std::span<const IntVec> cols, std::size_t rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    IntVec row(std::size_t i) const;
    IntVec col(std::size_t j) const;
    IntMat transposed() const;

    void swap_rows(std::size_t a, std::size_t b);
    /// row[dst] += c * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, const Integer& c);
    void negate_row(std::size_t i);

    friend bool operator==(const IntMat&, const IntMat&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

IntMat operator*(const IntMat& a, const IntMat& b);
IntVec operator*(const IntMat& a, const IntVec& v);
std::ostream& operator<<(std::ostream& os, const IntMat& m);

/// Exact determinant (fraction-free Bareiss elimination).
Integer determinant(const IntMat& m);
std::size_t rank(const IntMat& m);

struct HermiteResult
{
    IntMat H;  // row Hermite normal form
    IntMat U;  // unimodular, U * M == H
};

/// Row-style Hermite normal form: H is in row echelon form with positive
/// pivots and entries above each pivot reduced into [0, pivot). Pivot
/// selection picks the smallest absolute value, lowest row index on ties.
HermiteResult hermite_normal_form(const IntMat& m);

/// Diagonal of the Smith normal form, nonnegative, each dividing the next,
/// length min(rows, cols). Computed by alternating row and column HNF.
std::vector<Integer> smith_invariants(const IntMat& m);

/// True iff the given vectors extend to a Z-basis of Z^n.
/// Throws std::invalid_argument if more than n vectors are given.
bool is_partial_lattice_basis(std::span<const IntVec> vectors, std::size_t n);

/// Rows form a Z-basis of {x in Z^cols : m x = 0}.
IntMat integer_kernel(const IntMat& m);

/// Inverse of a matrix with determinant +-1. Throws if not unimodular.
IntMat unimodular_inverse(const IntMat& m);

/// x -> linear * x + translation with |det linear| == 1.
class AffineUnimodularMap
{
public:
    AffineUnimodularMap(IntMat linear, IntVec translation);

    static AffineUnimodularMap identity(std::size_t n);
    static AffineUnimodularMap translation(IntVec t);
    /// Sends coordinate i to coordinate perm[i].
    static AffineUnimodularMap permutation(std::span<const std::size_t> perm);

    std::size_t dim() const { return linear_.rows(); }
    const IntMat& linear() const { return linear_; }
    const IntVec& translation() const { return translation_; }

    IntVec apply(const IntVec& p) const;
    AffineUnimodularMap inverse() const;
    /// (*this) after `first`
    AffineUnimodularMap compose(const AffineUnimodularMap& first) const;

    friend bool operator==(const AffineUnimodularMap&, const AffineUnimodularMap&) = default;

private:
    IntMat linear_;
    IntVec translation_;
};

IntVec apply_map(const AffineUnimodularMap& m, const IntVec& p);

/// Affine coordinates for the lattice aff(points) ∩ Z^n. Every point q of the
/// affine hull satisfies q = origin + basis^T * to_local(q).
class AffineLatticeChart
{
public:
    explicit AffineLatticeChart(std::span<const IntVec> points);

    std::size_t ambient_dim() const { return origin_.size(); }
    std::size_t dim() const { return basis_.rows(); }
    bool is_full() const { return dim() == ambient_dim(); }

    const IntVec& origin() const { return origin_; }
    const IntMat& basis() const { return basis_; }  // dim x ambient_dim

    IntVec to_local(const IntVec& q) const;
    IntVec to_ambient(const IntVec& local) const;

private:
    IntVec origin_;
    IntMat basis_;
    IntMat coordinates_;  // ambient_dim x dim, local = (q - origin)^T * coordinates_
};

}  // namespace toricsec

#endif
