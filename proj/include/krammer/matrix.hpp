#pragma once

// Dense matrices over a commutative ring, with a division-free
// characteristic polynomial and exact inversion over Z[q^±1, t^±1].

#include <complex>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "krammer/fraction.hpp"
#include "krammer/laurent.hpp"

namespace krammer {

inline bool is_zero(const std::complex<double>& z) { return z == 0.0; }

template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, T fill = T(0))
        : rows_(rows), cols_(cols), data_(rows * cols, fill)
    {
    }
    Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
        : rows_(rows), cols_(cols), data_(std::move(data))
    {
        if (data_.size() != rows_ * cols_) throw std::invalid_argument("matrix entry count mismatch");
    }

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }
    const std::vector<T>& entries() const { return data_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool operator==(const Matrix&) const = default;

    Matrix transpose() const
    {
        Matrix out(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
        return out;
    }

    template <class F>
    auto map(F f) const -> Matrix<decltype(f(std::declval<const T&>()))>
    {
        using U = decltype(f(std::declval<const T&>()));
        std::vector<U> out;
        out.reserve(data_.size());
        for (const auto& x : data_) out.push_back(f(x));
        return Matrix<U>(rows_, cols_, std::move(out));
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b)
    {
        if (a.cols_ != b.rows_)
            throw std::invalid_argument("matrix product dimension mismatch: " + std::to_string(a.cols_) +
                                        " vs " + std::to_string(b.rows_));
        Matrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (is_zero(aik)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    const T& bkj = b(k, j);
                    if (!is_zero(bkj)) out(i, j) += aik * bkj;
                }
            }
        return out;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) { return zip(a, b, std::plus<>{}); }
    friend Matrix operator-(const Matrix& a, const Matrix& b) { return zip(a, b, std::minus<>{}); }

    friend Matrix operator*(const T& s, const Matrix& m)
    {
        return m.map([&](const T& x) { return T(s * x); });
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;

    template <class Op>
    static Matrix zip(const Matrix& a, const Matrix& b, Op op)
    {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix shape mismatch");
        Matrix out(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = op(a.data_[i], b.data_[i]);
        return out;
    }
};

using RingMatrix = Matrix<LaurentPoly>;
using CMatrix = Matrix<std::complex<double>>;

inline RingMatrix bar(const RingMatrix& m)
{
    return m.map([](const LaurentPoly& p) { return bar(p); });
}

/**
 * Characteristic polynomial det(x*I - A) by Berkowitz's algorithm.
 *
 * Uses only ring operations, so it works over any commutative ring.  Returns
 * coefficients lowest degree first; the last one is 1.
 */
template <class T>
std::vector<T> charpoly(const Matrix<T>& a)
{
    if (!a.square()) throw std::invalid_argument("characteristic polynomial of a non-square matrix");
    const std::size_t n = a.rows();
    // `poly` holds the char poly of the leading r x r block, highest degree first.
    std::vector<T> poly{T(1)};
    for (std::size_t r = 0; r < n; ++r) {
        // Toeplitz column: 1, -a_rr, -R C, -R A C, ..., -R A^{r-1} C
        std::vector<T> toeplitz;
        toeplitz.reserve(r + 2);
        toeplitz.push_back(T(1));
        toeplitz.push_back(T(0) - a(r, r));
        std::vector<T> col(r);
        for (std::size_t i = 0; i < r; ++i) col[i] = a(i, r);
        for (std::size_t k = 0; k < r; ++k) {
            T dot(0);
            for (std::size_t j = 0; j < r; ++j)
                if (!is_zero(a(r, j)) && !is_zero(col[j])) dot += a(r, j) * col[j];
            toeplitz.push_back(T(0) - dot);
            if (k + 1 == r) break;
            std::vector<T> next(r, T(0));
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < r; ++j)
                    if (!is_zero(a(i, j)) && !is_zero(col[j])) next[i] += a(i, j) * col[j];
            col = std::move(next);
        }
        std::vector<T> grown(r + 2, T(0));
        for (std::size_t i = 0; i < r + 2; ++i)
            for (std::size_t j = 0; j <= std::min(i, r); ++j)
                if (!is_zero(toeplitz[i - j]) && !is_zero(poly[j])) grown[i] += toeplitz[i - j] * poly[j];
        poly = std::move(grown);
    }
    return {poly.rbegin(), poly.rend()};
}

template <class T>
T determinant(const Matrix<T>& a)
{
    auto cp = charpoly(a);
    return a.rows() % 2 == 0 ? cp.front() : T(T(0) - cp.front());
}

struct SingularMatrixError : std::domain_error {
    using std::domain_error::domain_error;
};

/**
 * Exact inverse of a matrix over Z[q^±1, t^±1] by Gauss-Jordan elimination
 * over fractions.  Throws SingularMatrixError when no inverse exists over the
 * fraction field and std::domain_error when the inverse has an entry that is
 * not a Laurent polynomial.
 */
inline RingMatrix inverse_exact(const RingMatrix& a)
{
    if (!a.square()) throw std::invalid_argument("inverse of a non-square matrix");
    const std::size_t n = a.rows();
    Matrix<RingFraction> work(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) work(i, j) = RingFraction(a(i, j));
        work(i, n + i) = RingFraction(LaurentPoly(1));
    }

    for (std::size_t c = 0; c < n; ++c) {
        // Prefer unit pivots, then the sparsest numerator.
        std::size_t pivot = n;
        for (std::size_t r = c; r < n; ++r) {
            const auto& f = work(r, c);
            if (f.is_zero()) continue;
            if (pivot == n) {
                pivot = r;
                continue;
            }
            const auto& best = work(pivot, c);
            bool unit = f.den().is_unit() && f.num().is_unit();
            bool best_unit = best.den().is_unit() && best.num().is_unit();
            if ((unit && !best_unit) ||
                (unit == best_unit && f.num().size() + f.den().size() < best.num().size() + best.den().size()))
                pivot = r;
        }
        if (pivot == n) throw SingularMatrixError("matrix is singular");
        if (pivot != c)
            for (std::size_t j = 0; j < 2 * n; ++j) std::swap(work(c, j), work(pivot, j));

        const RingFraction p = work(c, c);
        for (std::size_t j = 0; j < 2 * n; ++j)
            if (!work(c, j).is_zero()) work(c, j) = work(c, j) / p;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || work(r, c).is_zero()) continue;
            const RingFraction factor = work(r, c);
            for (std::size_t j = 0; j < 2 * n; ++j)
                if (!work(c, j).is_zero()) work(r, j) = work(r, j) - factor * work(c, j);
        }
    }

    RingMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            auto entry = work(i, n + j).as_laurent();
            if (!entry) throw std::domain_error("inverse has a non-Laurent entry");
            inv(i, j) = std::move(*entry);
        }
    return inv;
}

}  // namespace krammer
