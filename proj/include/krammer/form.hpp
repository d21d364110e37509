#pragma once

// The sesquilinear intersection form <v_{i,j}, v_{k,l}> preserved by the
// Lawrence-Krammer representation, in closed form.

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "krammer/laurent.hpp"
#include "krammer/lkrep.hpp"
#include "krammer/matrix.hpp"

namespace krammer {

/// -(1-t)(1+qt)(q-1)^2 t^-2 q^-3, the common factor of every form entry.
inline LaurentPoly form_prefactor()
{
    const auto& q = q_var;
    const auto& t = t_var;
    return -(1 - t) * (1 + q * t) * (q - 1).pow(2) * LaurentPoly::monomial(1, -3, -2);
}

/// <v_{i,j}, v_{k,l}> divided by form_prefactor().
inline LaurentPoly normalized_form_entry(int i, int j, int k, int l)
{
    const auto& q = q_var;
    const auto& t = t_var;
    if ((i == k && k < j && j < l) || (i < k && k < j && j == l)) return -q * q * t * t * (q - 1);
    if ((k == i && i < l && l < j) || (k < i && i < j && j == l)) return -(q - 1);
    if (i < j && j == k && k < l) return t * (q - 1);
    if (k < l && l == i && i < j) return q * q * t * (q - 1);
    if (i < k && k < j && j < l) return -t * (q - 1).pow(2) * (1 + q * t);
    if (k < i && i < l && l < j) return (q - 1).pow(2) * (1 + q * t);
    if (k == i && j == l) return (1 - q * t) * (1 + q * q * t);
    return {};
}

struct FormMatrix {
    int n = 2;
    LaurentPoly prefactor;
    RingMatrix normalized;  // J / prefactor
    RingMatrix J;
};

inline RingMatrix normalized_form_matrix(int n)
{
    const LKBasis basis(n);
    RingMatrix m(basis.size(), basis.size());
    for (std::size_t a = 0; a < basis.size(); ++a)
        for (std::size_t b = 0; b < basis.size(); ++b)
            m(a, b) = normalized_form_entry(basis[a].i, basis[a].j, basis[b].i, basis[b].j);
    return m;
}

inline FormMatrix form_matrix(int n)
{
    if (n < 2) throw std::invalid_argument("form needs n >= 2");
    FormMatrix f{n, form_prefactor(), normalized_form_matrix(n), {}};
    f.J = f.prefactor * f.normalized;
    return f;
}

/// J^T == bar(J), exactly.
inline bool is_bar_hermitian(const RingMatrix& j)
{
    return j.square() && j.transpose() == bar(j);
}

inline bool check_hermitian_symmetry(int n) { return is_bar_hermitian(form_matrix(n).J); }

/// The four candidate matrix identities for "M preserves J".
enum class FormConvention {
    MT_J_barM,  // M^T J bar(M) = J
    barMT_J_M,  // bar(M)^T J M = J
    M_J_barMT,  // M J bar(M)^T = J
    barM_J_MT,  // bar(M) J M^T = J
};

inline constexpr std::array<FormConvention, 4> all_form_conventions{
    FormConvention::MT_J_barM, FormConvention::barMT_J_M, FormConvention::M_J_barMT, FormConvention::barM_J_MT};

/// Established by check_invariance: <x, y> = x^T J bar(y).
inline constexpr FormConvention kFormConvention = FormConvention::MT_J_barM;

inline std::string_view to_string(FormConvention c)
{
    switch (c) {
    case FormConvention::MT_J_barM: return "M^T*J*bar(M) = J";
    case FormConvention::barMT_J_M: return "bar(M)^T*J*M = J";
    case FormConvention::M_J_barMT: return "M*J*bar(M)^T = J";
    case FormConvention::barM_J_MT: return "bar(M)*J*M^T = J";
    }
    return "?";
}

inline bool preserves(FormConvention c, const RingMatrix& m, const RingMatrix& j)
{
    switch (c) {
    case FormConvention::MT_J_barM: return m.transpose() * j * bar(m) == j;
    case FormConvention::barMT_J_M: return bar(m).transpose() * j * m == j;
    case FormConvention::M_J_barMT: return m * j * bar(m).transpose() == j;
    case FormConvention::barM_J_MT: return bar(m) * j * m.transpose() == j;
    }
    return false;
}

struct FormInconsistencyError : std::logic_error {
    using std::logic_error::logic_error;
};

/**
 * Finds the candidate identity that holds for every generator of B_n.
 * When several hold (n = 2 is 1x1, where all four coincide) the frozen
 * kFormConvention is preferred.  Throws FormInconsistencyError if none holds.
 */
inline std::pair<FormConvention, bool> check_invariance(const LKRepresentation& rep)
{
    const RingMatrix j = form_matrix(rep.n()).J;
    std::optional<FormConvention> found;
    for (FormConvention c : all_form_conventions) {
        bool all = true;
        for (int i = 1; i < rep.n() && all; ++i) all = preserves(c, rep.generator(i), j);
        if (all && (!found || c == kFormConvention)) found = c;
    }
    if (!found) throw FormInconsistencyError("no candidate identity preserves the form for n=" + std::to_string(rep.n()));
    return {*found, true};
}

inline std::pair<FormConvention, bool> check_invariance(int n) { return check_invariance(LKRepresentation(n)); }

/// <x, y> = x^T J bar(y) for coordinate vectors over the ring.
inline LaurentPoly form_pairing(const RingMatrix& j, const std::vector<LaurentPoly>& x, const std::vector<LaurentPoly>& y)
{
    if (x.size() != j.rows() || y.size() != j.cols()) throw std::invalid_argument("vector size mismatch");
    LaurentPoly sum;
    for (std::size_t a = 0; a < x.size(); ++a) {
        if (x[a].is_zero()) continue;
        for (std::size_t b = 0; b < y.size(); ++b)
            if (!j(a, b).is_zero() && !y[b].is_zero()) sum += x[a] * j(a, b) * bar(y[b]);
    }
    return sum;
}

struct NonsingularityError : std::logic_error {
    using std::logic_error::logic_error;
};

/**
 * det(J / prefactor).  At q = 1 every off-diagonal entry vanishes, so the
 * determinant must collapse to ((1-t)(1+t))^N; a mismatch throws.
 */
inline LaurentPoly nonsingularity_certificate(int n)
{
    const RingMatrix m = normalized_form_matrix(n);
    LaurentPoly det = determinant(m);
    const auto& t = t_var;
    LaurentPoly expected = ((1 - t) * (1 + t)).pow(static_cast<unsigned>(m.rows()));
    if (collapse_q1(det) != expected)
        throw NonsingularityError("q=1 collapse of det(J/c) is " + to_string(collapse_q1(det)) + ", expected " +
                                  to_string(expected));
    return det;
}

}  // namespace krammer
