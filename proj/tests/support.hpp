#pragma once

// Random generators for property tests.

#include <random>
#include <vector>

#include "krammer/krammer.hpp"

namespace krammer::testing {

using Rng = std::mt19937_64;

inline LaurentPoly random_poly(Rng& rng, int max_terms = 4, int max_exp = 3, int max_coeff = 5)
{
    std::uniform_int_distribution<int> count(0, max_terms);
    std::uniform_int_distribution<int> exp(-max_exp, max_exp);
    std::uniform_int_distribution<int> coeff(-max_coeff, max_coeff);
    std::vector<Term> terms;
    for (int k = count(rng); k > 0; --k) terms.push_back({{exp(rng), exp(rng)}, coeff(rng)});
    return LaurentPoly::from_terms(std::move(terms));
}

inline RingMatrix random_matrix(Rng& rng, std::size_t n, int max_terms = 2, int max_exp = 1, int max_coeff = 3)
{
    RingMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) m(r, c) = random_poly(rng, max_terms, max_exp, max_coeff);
    return m;
}

inline BraidWord random_word(Rng& rng, int n, std::size_t length)
{
    std::uniform_int_distribution<int> index(1, n - 1);
    std::bernoulli_distribution positive(0.5);
    std::vector<Letter> letters;
    for (std::size_t k = 0; k < length; ++k) letters.push_back({index(rng), positive(rng) ? 1 : -1});
    return BraidWord(n, std::move(letters));
}

inline UnitParams random_unit_params(Rng& rng)
{
    std::uniform_real_distribution<double> angle(-3.14159, 3.14159);
    return {std::polar(1.0, angle(rng)), std::polar(1.0, angle(rng))};
}

}  // namespace krammer::testing
