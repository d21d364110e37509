#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "krammer/braid.hpp"
#include "krammer/laurent.hpp"
#include "krammer/matrix.hpp"

namespace krammer {

/// 1 <= i < j <= n
struct Pair {
    int i = 1;
    int j = 2;

    auto operator<=>(const Pair&) const = default;
};

/// The basis v_{i,j}, 1 <= i < j <= n, in lexicographic order.
class LKBasis {
public:
    explicit LKBasis(int n) : n_(n)
    {
        if (n < 2) throw std::invalid_argument("Lawrence-Krammer basis needs n >= 2");
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) pairs_.push_back({i, j});
    }

    int n() const { return n_; }
    std::size_t size() const { return pairs_.size(); }
    const std::vector<Pair>& pairs() const { return pairs_; }
    const Pair& operator[](std::size_t k) const { return pairs_[k]; }

    /// Position of v_{i,j}; needs 1 <= i < j <= n.
    std::size_t index(int i, int j) const
    {
        if (!(1 <= i && i < j && j <= n_))
            throw std::out_of_range("no basis vector v_{" + std::to_string(i) + "," + std::to_string(j) + "}");
        // rows before i contribute (n-1) + (n-2) + ... + (n-i+1)
        std::size_t before = static_cast<std::size_t>((i - 1) * n_ - (i - 1) * i / 2);
        return before + static_cast<std::size_t>(j - i - 1);
    }
    std::size_t index(const Pair& p) const { return index(p.i, p.j); }

    std::string label(std::size_t k) const
    {
        return "v_" + std::to_string(pairs_[k].i) + "," + std::to_string(pairs_[k].j);
    }

private:
    int n_;
    std::vector<Pair> pairs_;
};

/**
 * Matrix of sigma_i (sign +1) on the v_{j,k} basis, column convention: the
 * column of v_{j,k} holds the coordinates of sigma_i . v_{j,k}.
 *
 *   v_{j,k}                                      i not in {j-1, j, k-1, k}
 *   q v_{i,k} + (q^2-q) v_{i,j} + (1-q) v_{j,k}  i = j-1
 *   v_{j+1,k}                                    i = j != k-1
 *   q v_{j,i} + (1-q) v_{j,k} - (q^2-q) t v_{i,k}  i = k-1 != j
 *   v_{j,k+1}                                    i = k
 *   -t q^2 v_{j,k}                               i = j = k-1
 */
inline RingMatrix generator_matrix(int n, int i)
{
    if (n < 2 || i < 1 || i > n - 1)
        throw std::out_of_range("sigma_" + std::to_string(i) + " is not a generator of B_" + std::to_string(n));
    const LKBasis basis(n);
    const LaurentPoly& q = q_var;
    const LaurentPoly& t = t_var;
    RingMatrix m(basis.size(), basis.size());
    for (std::size_t col = 0; col < basis.size(); ++col) {
        const auto [j, k] = basis[col];
        auto put = [&](int a, int b, const LaurentPoly& c) { m(basis.index(a, b), col) += c; };
        if (i == j && i == k - 1) {
            put(j, k, -t * q * q);
        } else if (i != j - 1 && i != j && i != k - 1 && i != k) {
            put(j, k, 1);
        } else if (i == j - 1) {
            put(i, k, q);
            put(i, j, q * q - q);
            put(j, k, 1 - q);
        } else if (i == j) {
            put(j + 1, k, 1);
        } else if (i == k - 1) {
            put(j, i, q);
            put(j, k, 1 - q);
            put(i, k, -(q * q - q) * t);
        } else {  // i == k
            put(j, k + 1, 1);
        }
    }
    return m;
}

/**
 * The Lawrence-Krammer representation of B_n with all generator matrices and
 * their exact inverses built at construction.  Immutable afterwards, so one
 * instance may be shared between threads.
 */
class LKRepresentation {
public:
    explicit LKRepresentation(int n) : basis_(n)
    {
        for (int i = 1; i < n; ++i) {
            positive_.push_back(generator_matrix(n, i));
            negative_.push_back(inverse_exact(positive_.back()));
        }
    }

    int n() const { return basis_.n(); }
    std::size_t dim() const { return basis_.size(); }
    const LKBasis& basis() const { return basis_; }

    const RingMatrix& generator(int i, int sign = 1) const
    {
        if (i < 1 || i > n() - 1)
            throw std::out_of_range("sigma_" + std::to_string(i) + " is not a generator of B_" + std::to_string(n()));
        return sign > 0 ? positive_[i - 1] : negative_[i - 1];
    }
    const RingMatrix& generator(const Letter& l) const { return generator(l.index, l.sign); }

    /// Ordered product, first letter leftmost; the empty word gives I.
    RingMatrix matrix(const BraidWord& w) const
    {
        if (w.strands() != n())
            throw std::invalid_argument("word in B_" + std::to_string(w.strands()) + " given to representation of B_" +
                                        std::to_string(n()));
        RingMatrix m = RingMatrix::identity(dim());
        for (const auto& l : w.letters()) m = m * generator(l);
        return m;
    }

private:
    LKBasis basis_;
    std::vector<RingMatrix> positive_;
    std::vector<RingMatrix> negative_;
};

/// Convenience for one-off use; builds a representation per call.
inline RingMatrix rep_matrix(const BraidWord& w) { return LKRepresentation(w.strands()).matrix(w); }

inline RingMatrix gen_matrix(int n, int i, int sign)
{
    if (sign > 0) return generator_matrix(n, i);
    return inverse_exact(generator_matrix(n, i));
}

}  // namespace krammer
