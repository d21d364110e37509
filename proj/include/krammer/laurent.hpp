#pragma once

// Exact arithmetic in Z[q^±1, t^±1].

#include <algorithm>
#include <complex>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace krammer {

using Integer = boost::multiprecision::cpp_int;

/// Exponent pair of q^eq * t^et, ordered lexicographically by (eq, et).
struct Monomial {
    int eq = 0;
    int et = 0;

    auto operator<=>(const Monomial&) const = default;

    Monomial operator*(const Monomial& o) const { return {eq + o.eq, et + o.et}; }
    Monomial operator/(const Monomial& o) const { return {eq - o.eq, et - o.et}; }
};

struct Term {
    Monomial exp;
    Integer coeff;

    bool operator==(const Term&) const = default;
};

/**
 * Element of the two-variable Laurent polynomial ring over the integers.
 *
 * Terms are kept sorted by exponent with no zero coefficients and no repeated
 * exponents, so structural equality is ring equality.  Values are immutable
 * once built; all arithmetic returns fresh objects.
 */
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(int c) : LaurentPoly(Integer(c)) {}
    LaurentPoly(long long c) : LaurentPoly(Integer(c)) {}
    LaurentPoly(Integer c)
    {
        if (c != 0) terms_.push_back({{0, 0}, std::move(c)});
    }

    static LaurentPoly monomial(Integer c, int eq, int et)
    {
        LaurentPoly p;
        if (c != 0) p.terms_.push_back({{eq, et}, std::move(c)});
        return p;
    }
    static LaurentPoly q(int power = 1) { return monomial(1, power, 0); }
    static LaurentPoly t(int power = 1) { return monomial(1, 0, power); }

    /// Builds a canonical polynomial from arbitrary (possibly repeated, zero) terms.
    static LaurentPoly from_terms(std::vector<Term> terms)
    {
        LaurentPoly p;
        p.terms_ = std::move(terms);
        p.canonicalize();
        return p;
    }

    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    /// Units of the ring are exactly ±q^a t^b.
    bool is_unit() const { return is_monomial() && abs(terms_.front().coeff) == 1; }

    Integer coeff(int eq, int et) const
    {
        Monomial m{eq, et};
        auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                                   [](const Term& a, const Monomial& b) { return a.exp < b; });
        if (it != terms_.end() && it->exp == m) return it->coeff;
        return 0;
    }

    /// Largest / smallest term in lex order; precondition: nonzero.
    const Term& leading() const { return terms_.back(); }
    const Term& trailing() const { return terms_.front(); }

    int min_q() const { return extreme([](const Term& x) { return x.exp.eq; }, false); }
    int max_q() const { return extreme([](const Term& x) { return x.exp.eq; }, true); }
    int min_t() const { return extreme([](const Term& x) { return x.exp.et; }, false); }
    int max_t() const { return extreme([](const Term& x) { return x.exp.et; }, true); }

    bool operator==(const LaurentPoly&) const = default;

    LaurentPoly operator-() const
    {
        LaurentPoly r = *this;
        for (auto& term : r.terms_) term.coeff = -term.coeff;
        return r;
    }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b)
    {
        return merge(a, b, false);
    }
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b)
    {
        return merge(a, b, true);
    }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b)
    {
        if (a.is_zero() || b.is_zero()) return {};
        if (a.is_monomial()) return b.scaled(a.terms_.front());
        if (b.is_monomial()) return a.scaled(b.terms_.front());
        std::vector<Term> out;
        out.reserve(a.size() * b.size());
        for (const auto& x : a.terms_)
            for (const auto& y : b.terms_) out.push_back({x.exp * y.exp, x.coeff * y.coeff});
        return from_terms(std::move(out));
    }

    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    LaurentPoly pow(unsigned k) const
    {
        LaurentPoly result = 1, base = *this;
        while (k) {
            if (k & 1u) result *= base;
            k >>= 1u;
            if (k) base *= base;
        }
        return result;
    }

    /// Multiplies every coefficient by c and shifts by the monomial of `by`.
    LaurentPoly scaled(const Term& by) const
    {
        LaurentPoly r;
        r.terms_.reserve(terms_.size());
        for (const auto& x : terms_) r.terms_.push_back({x.exp * by.exp, x.coeff * by.coeff});
        return r;  // order is preserved by a monomial shift
    }

    /// gcd of all coefficients (0 for the zero polynomial), always nonnegative.
    Integer content() const
    {
        Integer g = 0;
        for (const auto& x : terms_) g = gcd(g, x.coeff);
        return g;
    }

    /// Divides every coefficient by d; precondition: d divides each coefficient.
    LaurentPoly divided_coefficients(const Integer& d) const
    {
        LaurentPoly r = *this;
        for (auto& x : r.terms_) x.coeff /= d;
        return r;
    }

private:
    std::vector<Term> terms_;

    template <class F>
    int extreme(F key, bool want_max) const
    {
        if (terms_.empty()) throw std::domain_error("degree of the zero polynomial");
        int best = key(terms_.front());
        for (const auto& x : terms_) best = want_max ? std::max(best, key(x)) : std::min(best, key(x));
        return best;
    }

    void canonicalize()
    {
        std::sort(terms_.begin(), terms_.end(),
                  [](const Term& a, const Term& b) { return a.exp < b.exp; });
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (auto& x : terms_) {
            if (!out.empty() && out.back().exp == x.exp)
                out.back().coeff += x.coeff;
            else
                out.push_back(std::move(x));
            if (out.back().coeff == 0) out.pop_back();
        }
        terms_ = std::move(out);
    }

    static LaurentPoly merge(const LaurentPoly& a, const LaurentPoly& b, bool subtract)
    {
        LaurentPoly r;
        r.terms_.reserve(a.size() + b.size());
        auto i = a.terms_.begin(), j = b.terms_.begin();
        while (i != a.terms_.end() || j != b.terms_.end()) {
            if (j == b.terms_.end() || (i != a.terms_.end() && i->exp < j->exp)) {
                r.terms_.push_back(*i++);
            } else if (i == a.terms_.end() || j->exp < i->exp) {
                r.terms_.push_back({j->exp, subtract ? Integer(-j->coeff) : j->coeff});
                ++j;
            } else {
                Integer c = subtract ? Integer(i->coeff - j->coeff) : Integer(i->coeff + j->coeff);
                if (c != 0) r.terms_.push_back({i->exp, std::move(c)});
                ++i, ++j;
            }
        }
        return r;
    }
};

inline bool is_zero(const LaurentPoly& p) { return p.is_zero(); }

inline const LaurentPoly q_var = LaurentPoly::q();
inline const LaurentPoly t_var = LaurentPoly::t();

/// Ring involution q -> q^-1, t -> t^-1.
inline LaurentPoly bar(const LaurentPoly& p)
{
    std::vector<Term> terms;
    terms.reserve(p.size());
    for (const auto& x : p.terms()) terms.push_back({{-x.exp.eq, -x.exp.et}, x.coeff});
    return LaurentPoly::from_terms(std::move(terms));
}

/// Substitutes q = 1; the result has eq = 0 throughout.
inline LaurentPoly collapse_q1(const LaurentPoly& p)
{
    std::vector<Term> terms;
    terms.reserve(p.size());
    for (const auto& x : p.terms()) terms.push_back({{0, x.exp.et}, x.coeff});
    return LaurentPoly::from_terms(std::move(terms));
}

inline std::complex<double> int_pow(std::complex<double> base, int e)
{
    if (base == 0.0 && e < 0) throw std::domain_error("negative power of zero");
    if (e < 0) {
        base = 1.0 / base;
        e = -e;
    }
    std::complex<double> r = 1.0;
    while (e) {
        if (e & 1) r *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return r;
}

inline std::complex<double> eval(const LaurentPoly& p, std::complex<double> q0, std::complex<double> t0)
{
    std::complex<double> sum = 0.0;
    for (const auto& x : p.terms())
        sum += x.coeff.convert_to<double>() * int_pow(q0, x.exp.eq) * int_pow(t0, x.exp.et);
    return sum;
}

/**
 * Exact quotient num / den when den divides num in Z[q^±1, t^±1]; nullopt
 * otherwise.  Lex-leading-term long division, with the quotient's exponents
 * confined to the per-variable degree box implied by num and den.
 */
inline std::optional<LaurentPoly> divide_exact(const LaurentPoly& num, const LaurentPoly& den)
{
    if (den.is_zero()) throw std::domain_error("division by the zero polynomial");
    if (num.is_zero()) return LaurentPoly{};
    if (den.is_monomial()) {
        const Term& d = den.trailing();
        std::vector<Term> out;
        out.reserve(num.size());
        for (const auto& x : num.terms()) {
            if (x.coeff % d.coeff != 0) return std::nullopt;
            out.push_back({x.exp / d.exp, x.coeff / d.coeff});
        }
        return LaurentPoly::from_terms(std::move(out));
    }
    const int qlo = num.min_q() - den.min_q(), qhi = num.max_q() - den.max_q();
    const int tlo = num.min_t() - den.min_t(), thi = num.max_t() - den.max_t();
    if (qlo > qhi || tlo > thi) return std::nullopt;

    LaurentPoly rest = num;
    std::vector<Term> quotient;
    const Term& dl = den.leading();
    while (!rest.is_zero()) {
        const Term& rl = rest.leading();
        Monomial m = rl.exp / dl.exp;
        if (m.eq < qlo || m.eq > qhi || m.et < tlo || m.et > thi) return std::nullopt;
        if (rl.coeff % dl.coeff != 0) return std::nullopt;
        Term step{m, rl.coeff / dl.coeff};
        rest -= den.scaled(step);
        quotient.push_back(std::move(step));
    }
    return LaurentPoly::from_terms(std::move(quotient));
}

namespace detail {
inline std::string power_string(const char* var, int e)
{
    if (e == 1) return var;
    return std::string(var) + "^" + std::to_string(e);
}
}  // namespace detail

/// Renders like "-q^2*t + 1", highest term first.
inline std::string to_string(const LaurentPoly& p)
{
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        Integer c = it->coeff;
        bool negative = c < 0;
        if (negative) c = -c;
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        first = false;

        std::string mono;
        if (it->exp.eq != 0) mono = detail::power_string("q", it->exp.eq);
        if (it->exp.et != 0) {
            if (!mono.empty()) mono += "*";
            mono += detail::power_string("t", it->exp.et);
        }
        if (mono.empty())
            os << c;
        else if (c == 1)
            os << mono;
        else
            os << c << "*" << mono;
    }
    return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << to_string(p); }

}  // namespace krammer
