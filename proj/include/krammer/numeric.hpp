#pragma once

// Specialization of the exact objects at unit-modulus (q, t): definiteness of
// the form, unitarization, and spectral comparisons.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "krammer/braid.hpp"
#include "krammer/form.hpp"
#include "krammer/lkrep.hpp"
#include "krammer/matrix.hpp"

namespace krammer {

using cplx = std::complex<double>;

/// A point (q0, t0) on the unit torus.
class UnitParams {
public:
    static constexpr double kModulusTolerance = 1e-12;

    UnitParams(cplx q0, cplx t0) : q0_(q0), t0_(t0)
    {
        if (std::abs(std::abs(q0) - 1.0) >= kModulusTolerance || std::abs(std::abs(t0) - 1.0) >= kModulusTolerance)
            throw std::invalid_argument("UnitParams need |q0| = |t0| = 1");
    }

    /// q0 = exp(i*q_angle), t0 = i*exp(i*t_angle): offsets from the point (1, i).
    static UnitParams from_offsets(double q_angle, double t_angle)
    {
        return {std::polar(1.0, q_angle), std::polar(1.0, std::numbers::pi / 2 + t_angle)};
    }

    cplx q0() const { return q0_; }
    cplx t0() const { return t0_; }

private:
    cplx q0_;
    cplx t0_;
};

inline CMatrix evaluate(const RingMatrix& m, const UnitParams& p)
{
    return m.map([&](const LaurentPoly& x) { return eval(x, p.q0(), p.t0()); });
}

inline CMatrix adjoint(const CMatrix& m)
{
    return m.transpose().map([](const cplx& z) { return std::conj(z); });
}

inline double max_abs(const CMatrix& m)
{
    double best = 0.0;
    for (const auto& z : m.entries()) best = std::max(best, std::abs(z));
    return best;
}

/// Largest |U^dagger U - I| entry.
inline double unitarity_defect(const CMatrix& u)
{
    return max_abs(adjoint(u) * u - CMatrix::identity(u.rows()));
}

/**
 * J at p, computed as prefactor(p) * (J / prefactor)(p).  The expanded
 * entries of J carry a factor (q-1)^2 and lose most of their digits near q = 1.
 */
inline CMatrix evaluate_form(int n, const UnitParams& p)
{
    const cplx q = p.q0(), t = p.t0();
    const cplx c = -(1.0 - t) * (1.0 + q * t) * (q - 1.0) * (q - 1.0) / (t * t * q * q * q);
    return evaluate(normalized_form_matrix(n), p).map([&](const cplx& z) { return c * z; });
}

struct SpecializedMatrix {
    int n = 2;
    CMatrix entries;
    UnitParams params{1.0, 1.0};
    std::string source;
};

inline int strands_for_dimension(std::size_t dim)
{
    for (int n = 2;; ++n) {
        std::size_t d = static_cast<std::size_t>(n * (n - 1) / 2);
        if (d == dim) return n;
        if (d > dim) throw std::invalid_argument("dimension " + std::to_string(dim) + " is not n(n-1)/2");
    }
}

inline SpecializedMatrix specialize(const RingMatrix& m, const UnitParams& p, std::string source = {})
{
    if (!m.square()) throw std::invalid_argument("specialize needs a square matrix");
    return {strands_for_dimension(m.rows()), evaluate(m, p), p, std::move(source)};
}

// ---------------------------------------------------------------------------
// Definiteness

/// 2n^4 + 6n^3
inline long long definiteness_denominator(int n)
{
    const long long m = n;
    return 2 * m * m * m * m + 6 * m * m * m;
}

/// Radius of the ball around (q, t) = (1, i) where the form is known to be negative definite.
inline double definiteness_radius(int n)
{
    if (n < 2) throw std::invalid_argument("radius needs n >= 2");
    return 1.0 / static_cast<double>(definiteness_denominator(n));
}

/// P^T A P = L L^dagger with P the permutation `perm` (column k of P is e_{perm[k]}).
struct PivotedCholesky {
    CMatrix lower;
    std::vector<std::size_t> perm;
};

/**
 * Cholesky factorization with diagonal pivoting of a Hermitian matrix.
 * nullopt unless every pivot is strictly positive, i.e. unless the matrix is
 * positive definite (pivots below 1e-13 of the largest diagonal count as zero).
 */
inline std::optional<PivotedCholesky> cholesky(const CMatrix& a)
{
    if (!a.square()) throw std::invalid_argument("cholesky of a non-square matrix");
    const std::size_t n = a.rows();
    CMatrix w = a;
    std::vector<std::size_t> perm(n);
    for (std::size_t k = 0; k < n; ++k) perm[k] = k;
    double scale = 0.0;
    for (std::size_t k = 0; k < n; ++k) scale = std::max(scale, std::abs(a(k, k)));
    if (scale == 0.0) return std::nullopt;

    CMatrix l(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        for (std::size_t r = k + 1; r < n; ++r)
            if (w(r, r).real() > w(p, p).real()) p = r;
        if (p != k) {
            std::swap(perm[k], perm[p]);
            for (std::size_t c = 0; c < n; ++c) std::swap(w(k, c), w(p, c));
            for (std::size_t r = 0; r < n; ++r) std::swap(w(r, k), w(r, p));
            for (std::size_t c = 0; c < k; ++c) std::swap(l(k, c), l(p, c));
        }
        const double pivot = w(k, k).real();
        if (!(pivot > 1e-13 * scale)) return std::nullopt;
        const double root = std::sqrt(pivot);
        l(k, k) = root;
        for (std::size_t r = k + 1; r < n; ++r) l(r, k) = w(r, k) / root;
        for (std::size_t r = k + 1; r < n; ++r)
            for (std::size_t c = k + 1; c < n; ++c) w(r, c) -= l(r, k) * std::conj(l(c, k));
    }
    return PivotedCholesky{std::move(l), std::move(perm)};
}

struct NotHermitianError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// (H + H^dagger)/2 after checking |H - H^dagger| <= tol * max|H|.
inline CMatrix hermitian_part(const CMatrix& h, double tol = 1e-10)
{
    const CMatrix adj = adjoint(h);
    if (max_abs(h - adj) > tol * max_abs(h))
        throw NotHermitianError("matrix is not Hermitian within tolerance");
    return CMatrix(h.rows(), h.cols(), (h + adj).map([](const cplx& z) { return 0.5 * z; }).entries());
}

/// True iff -H admits a Cholesky factorization.  H = 0 counts as not definite.
inline bool certify_negative_definite(const CMatrix& h)
{
    if (max_abs(h) == 0.0) return false;
    const CMatrix neg = hermitian_part(h).map([](const cplx& z) { return -z; });
    return cholesky(neg).has_value();
}

inline bool certify_negative_definite(int n, const UnitParams& p)
{
    return certify_negative_definite(evaluate_form(n, p));
}

/// q0 = exp(i e), t0 = i exp(i d) with e, d uniform in (-radius, radius), e != 0.
template <class Rng>
UnitParams sample_params(Rng& rng, double radius)
{
    std::uniform_real_distribution<double> dist(-radius, radius);
    double e = 0.0;
    while (e == 0.0) e = dist(rng);
    return UnitParams::from_offsets(e, dist(rng));
}

// ---------------------------------------------------------------------------
// The quadratic form written out in coordinates

/**
 * Coefficient of the first sum in k (pairs a=c, b>d or b=d, c<a).  Only
 * -1 is consistent with the entries of the form table.
 */
enum class QuadformVariant { first_sum_plus, first_sum_minus };

/**
 * For v = sum lambda_{a,b} v_{a,b}:
 *   <v,v> / D  =  sum |lambda|^2 + 2 Re( (q-1) / ((1-qt)(1+q^2 t)) * k )
 * with D = -(1-t)(1-q^2t^2)(q-1)^2(1+q^2t) t^-2 q^-3 and
 *   k = s * sum_{a=c, b>d  or  b=d, c<a} lambda_{a,b} conj(lambda_{c,d})
 *     + sum_{a=d} q^2 t lambda_{a,b} conj(lambda_{c,d})
 *     + sum_{c<a<d<b} (q-1)(1+qt) lambda_{a,b} conj(lambda_{c,d}).
 * Both sides are evaluated for random complex lambda; returns the largest
 * absolute difference.
 */
template <class Rng>
double quadform_identity_check(int n, const UnitParams& p, int trials, Rng& rng,
                               QuadformVariant variant = QuadformVariant::first_sum_minus)
{
    const LKBasis basis(n);
    const CMatrix h = evaluate_form(n, p);
    const cplx q = p.q0(), t = p.t0();
    const cplx denom = -(1.0 - t) * (1.0 - q * q * t * t) * (q - 1.0) * (q - 1.0) * (1.0 + q * q * t) / (t * t * q * q * q);
    if (std::abs(denom) == 0.0) throw std::domain_error("quadratic form denominator vanishes");
    const cplx ratio = (q - 1.0) / ((1.0 - q * t) * (1.0 + q * q * t));
    const double first = variant == QuadformVariant::first_sum_plus ? 1.0 : -1.0;

    std::normal_distribution<double> gauss;
    double worst = 0.0;
    for (int trial = 0; trial < trials; ++trial) {
        std::vector<cplx> lambda(basis.size());
        for (auto& z : lambda) z = {gauss(rng), gauss(rng)};

        cplx lhs = 0.0;
        for (std::size_t x = 0; x < basis.size(); ++x)
            for (std::size_t y = 0; y < basis.size(); ++y) lhs += lambda[x] * h(x, y) * std::conj(lambda[y]);
        lhs /= denom;

        double norm2 = 0.0;
        cplx k = 0.0;
        for (std::size_t x = 0; x < basis.size(); ++x) {
            norm2 += std::norm(lambda[x]);
            const auto [a, b] = basis[x];
            for (std::size_t y = 0; y < basis.size(); ++y) {
                const auto [c, d] = basis[y];
                const cplx term = lambda[x] * std::conj(lambda[y]);
                if ((a == c && b > d) || (b == d && c < a)) k += first * term;
                if (a == d) k += q * q * t * term;
                if (c < a && a < d && d < b) k += (q - 1.0) * (1.0 + q * t) * term;
            }
        }
        const double rhs = norm2 + 2.0 * (ratio * k).real();
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    return worst;
}

// ---------------------------------------------------------------------------
// Unitarization

struct DefinitenessError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Inverse of a lower-triangular matrix with nonzero diagonal.
inline CMatrix lower_inverse(const CMatrix& l)
{
    const std::size_t n = l.rows();
    CMatrix inv(n, n);
    for (std::size_t c = 0; c < n; ++c) {
        inv(c, c) = 1.0 / l(c, c);
        for (std::size_t r = c + 1; r < n; ++r) {
            cplx sum = 0.0;
            for (std::size_t k = c; k < r; ++k) sum += l(r, k) * inv(k, c);
            inv(r, c) = -sum / l(r, r);
        }
    }
    return inv;
}

/**
 * Conjugates a form-preserving matrix into the unitary group.
 *
 * Under M^T H conj(M) = H the positive definite G = -conj(H) satisfies
 * M^dagger G M = G.  With G = (P L)(P L)^dagger from the pivoted Cholesky
 * factorization, L^dagger P^T M P L^-dagger is unitary.
 */
inline CMatrix unitarize(const CMatrix& m, const CMatrix& h, double preserve_tol = 1e-8)
{
    if (!m.square() || m.rows() != h.rows() || !h.square()) throw std::invalid_argument("unitarize shape mismatch");
    const CMatrix herm = hermitian_part(h);
    const CMatrix conj_m = m.map([](const cplx& z) { return std::conj(z); });
    if (max_abs(m.transpose() * herm * conj_m - herm) > preserve_tol * max_abs(herm))
        throw std::invalid_argument("matrix does not preserve the form");

    const CMatrix g = herm.map([](const cplx& z) { return -std::conj(z); });
    auto chol = cholesky(g);
    if (!chol) throw DefinitenessError("form is not negative definite at these parameters");

    const std::size_t n = m.rows();
    CMatrix permuted(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) permuted(r, c) = m(chol->perm[r], chol->perm[c]);
    const CMatrix linv = lower_inverse(chol->lower);
    return adjoint(chol->lower) * permuted * adjoint(linv);
}

inline SpecializedMatrix unitarize(const SpecializedMatrix& m, const SpecializedMatrix& h)
{
    return {m.n, unitarize(m.entries, h.entries), m.params, m.source + " (unitarized)"};
}

// ---------------------------------------------------------------------------
// Spectra

/**
 * det(x I - A) for a complex matrix: reduction to upper Hessenberg form by
 * stabilized elementary similarities, then the Hessenberg determinant
 * recurrence.  Coefficients lowest degree first.
 */
inline std::vector<cplx> numeric_charpoly(const CMatrix& input)
{
    if (!input.square()) throw std::invalid_argument("characteristic polynomial of a non-square matrix");
    const std::size_t n = input.rows();
    CMatrix a = input;
    for (std::size_t k = 0; k + 2 < n; ++k) {
        std::size_t p = k + 1;
        for (std::size_t r = k + 2; r < n; ++r)
            if (std::abs(a(r, k)) > std::abs(a(p, k))) p = r;
        if (a(p, k) == 0.0) continue;
        if (p != k + 1) {
            for (std::size_t c = 0; c < n; ++c) std::swap(a(p, c), a(k + 1, c));
            for (std::size_t r = 0; r < n; ++r) std::swap(a(r, p), a(r, k + 1));
        }
        for (std::size_t r = k + 2; r < n; ++r) {
            const cplx f = a(r, k) / a(k + 1, k);
            if (f == 0.0) continue;
            for (std::size_t c = 0; c < n; ++c) a(r, c) -= f * a(k + 1, c);
            for (std::size_t rr = 0; rr < n; ++rr) a(rr, k + 1) += f * a(rr, r);
        }
    }

    // polys[m] = char poly of the leading m x m block, lowest degree first
    std::vector<std::vector<cplx>> polys{{1.0}};
    for (std::size_t m = 1; m <= n; ++m) {
        const std::size_t col = m - 1;
        std::vector<cplx> next(m + 1, 0.0);
        const auto& prev = polys[m - 1];
        for (std::size_t d = 0; d < prev.size(); ++d) {
            next[d + 1] += prev[d];
            next[d] -= a(col, col) * prev[d];
        }
        cplx sub = 1.0;  // product of subdiagonal entries h_{r+1,r} ... h_{col,col-1}
        for (std::size_t r = col; r-- > 0;) {
            sub *= a(r + 1, r);
            const cplx f = a(r, col) * sub;
            for (std::size_t d = 0; d < polys[r].size(); ++d) next[d] -= f * polys[r][d];
        }
        polys.push_back(std::move(next));
    }
    return polys.back();
}

/// Largest coefficient difference, relative to max(1, largest coefficient).
inline double charpoly_distance(const std::vector<cplx>& a, const std::vector<cplx>& b)
{
    if (a.size() != b.size()) return INFINITY;
    double diff = 0.0, scale = 1.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        diff = std::max(diff, std::abs(a[k] - b[k]));
        scale = std::max({scale, std::abs(a[k]), std::abs(b[k])});
    }
    return diff / scale;
}

/// The representation's generators evaluated at one parameter point.
class SpecializedRepresentation {
public:
    SpecializedRepresentation(const LKRepresentation& rep, const UnitParams& p) : n_(rep.n()), params_(p)
    {
        for (int i = 1; i < rep.n(); ++i) {
            positive_.push_back(evaluate(rep.generator(i, 1), p));
            negative_.push_back(evaluate(rep.generator(i, -1), p));
        }
        form_ = evaluate_form(rep.n(), p);
    }

    int n() const { return n_; }
    const UnitParams& params() const { return params_; }
    const CMatrix& form() const { return form_; }
    const CMatrix& generator(const Letter& l) const
    {
        return l.sign > 0 ? positive_.at(l.index - 1) : negative_.at(l.index - 1);
    }

    CMatrix matrix(const BraidWord& w) const
    {
        if (w.strands() != n_) throw std::invalid_argument("word has the wrong number of strands");
        CMatrix m = CMatrix::identity(form_.rows());
        for (const auto& l : w.letters()) m = m * generator(l);
        return m;
    }

private:
    int n_;
    UnitParams params_;
    std::vector<CMatrix> positive_;
    std::vector<CMatrix> negative_;
    CMatrix form_;
};

// ---------------------------------------------------------------------------
// f versus c f^-1 c

struct ConjugacyReport {
    BraidWord word{2};
    BraidWord reversed{2};
    UnitParams params{1.0, 1.0};
    bool exact_checked = false;
    bool charpoly_exact_equal = false;
    std::vector<LaurentPoly> charpoly_exact;
    double numeric_residual = 0.0;                 // word vs reversed, numeric char polys
    std::optional<double> exact_vs_numeric;        // exact coefficients evaluated vs numeric
    bool unitarily_conjugate = false;
    std::string note = "braid conjugacy not decided";
};

struct ConjugacyOptions {
    bool exact = true;
};

/**
 * Compares the spectra of rho(w) and rho(reverse(w)).  Equal characteristic
 * polynomials of these unitarizable matrices mean they are conjugate in the
 * unitary group; whether the braids are conjugate is not decided here.
 */
inline ConjugacyReport conjugacy_experiment(const LKRepresentation& rep, const SpecializedRepresentation& numeric,
                                            const BraidWord& w, ConjugacyOptions options = {})
{
    ConjugacyReport r;
    r.word = w;
    r.reversed = reverse_word(w);
    r.params = numeric.params();

    const auto num_w = numeric_charpoly(numeric.matrix(r.word));
    const auto num_rev = numeric_charpoly(numeric.matrix(r.reversed));
    r.numeric_residual = charpoly_distance(num_w, num_rev);

    if (options.exact) {
        r.exact_checked = true;
        r.charpoly_exact = charpoly(rep.matrix(r.word));
        r.charpoly_exact_equal = r.charpoly_exact == charpoly(rep.matrix(r.reversed));
        std::vector<cplx> evaluated;
        for (const auto& c : r.charpoly_exact) evaluated.push_back(eval(c, r.params.q0(), r.params.t0()));
        r.exact_vs_numeric = charpoly_distance(evaluated, num_w);
        r.unitarily_conjugate = r.charpoly_exact_equal;
    } else {
        r.unitarily_conjugate = r.numeric_residual < 1e-8;
    }
    return r;
}

inline ConjugacyReport conjugacy_experiment(const BraidWord& w, const UnitParams& p, ConjugacyOptions options = {})
{
    LKRepresentation rep(w.strands());
    return conjugacy_experiment(rep, SpecializedRepresentation(rep, p), w, options);
}

}  // namespace krammer
