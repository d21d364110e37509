#pragma once

// JSON encodings.
//   LaurentPoly   [[eq, et, "coeff"], ...] sorted by (eq, et)
//   RingMatrix    {"rows", "cols", "entries": [LaurentPoly, ...]} row-major
//   BraidWord     {"n", "letters": [signed ints]}

#include <complex>
#include <string>
#include <vector>

#include <json.hpp>

#include "krammer/braid.hpp"
#include "krammer/chains.hpp"
#include "krammer/form.hpp"
#include "krammer/laurent.hpp"
#include "krammer/matrix.hpp"
#include "krammer/numeric.hpp"

namespace krammer {

using json = nlohmann::json;

inline json to_json(const LaurentPoly& p)
{
    json out = json::array();
    for (const auto& term : p.terms()) out.push_back({term.exp.eq, term.exp.et, term.coeff.str()});
    return out;
}

inline LaurentPoly laurent_from_json(const json& j)
{
    if (!j.is_array()) throw std::invalid_argument("LaurentPoly JSON must be an array");
    std::vector<Term> terms;
    for (const auto& item : j) {
        if (!item.is_array() || item.size() != 3 || !item[2].is_string())
            throw std::invalid_argument("LaurentPoly term must be [eq, et, \"coeff\"]");
        terms.push_back({{item[0].get<int>(), item[1].get<int>()}, Integer(item[2].get<std::string>())});
    }
    return LaurentPoly::from_terms(std::move(terms));
}

inline json to_json(const RingMatrix& m)
{
    json entries = json::array();
    for (const auto& e : m.entries()) entries.push_back(to_json(e));
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

inline RingMatrix matrix_from_json(const json& j)
{
    const auto rows = j.at("rows").get<std::size_t>();
    const auto cols = j.at("cols").get<std::size_t>();
    std::vector<LaurentPoly> entries;
    for (const auto& e : j.at("entries")) entries.push_back(laurent_from_json(e));
    return RingMatrix(rows, cols, std::move(entries));
}

inline json to_json(const BraidWord& w) { return {{"n", w.strands()}, {"letters", w.signed_indices()}}; }

inline BraidWord word_from_json(const json& j)
{
    return BraidWord::from_signed(j.at("n").get<int>(), j.at("letters").get<std::vector<int>>());
}

inline json to_json(const std::complex<double>& z) { return {z.real(), z.imag()}; }

inline json to_json(const UnitParams& p) { return {{"q", to_json(p.q0())}, {"t", to_json(p.t0())}}; }

inline json to_json(const std::vector<LaurentPoly>& coeffs)
{
    json out = json::array();
    for (const auto& c : coeffs) out.push_back(to_json(c));
    return out;
}

inline json to_json(const std::vector<std::complex<double>>& coeffs)
{
    json out = json::array();
    for (const auto& c : coeffs) out.push_back(to_json(c));
    return out;
}

inline json basis_json(const LKBasis& basis)
{
    json out = json::array();
    for (const auto& p : basis.pairs()) out.push_back({p.i, p.j});
    return out;
}

inline json to_json(const ConjugacyReport& r)
{
    json out{{"word", render(r.word)},
             {"reversed", render(r.reversed)},
             {"n", r.word.strands()},
             {"params", to_json(r.params)},
             {"numeric_residuals", {{"word_vs_reversed", r.numeric_residual}}},
             {"unitarily_conjugate", r.unitarily_conjugate},
             {"note", r.note}};
    if (r.exact_checked) {
        out["charpoly_exact_equal"] = r.charpoly_exact_equal;
        out["charpoly_exact"] = to_json(r.charpoly_exact);
        if (r.exact_vs_numeric) out["numeric_residuals"]["exact_vs_numeric"] = *r.exact_vs_numeric;
    } else {
        out["charpoly_exact_equal"] = nullptr;
    }
    return out;
}

inline json to_json(const OracleReport& r)
{
    json out{{"n", r.n},
             {"cross_term_sign", r.sign == CrossTermSign::minus ? "minus" : "plus"},
             {"zero_pattern_match", r.zero_pattern_match},
             {"mismatched_entries", r.mismatched_entries},
             {"oracle", to_json(r.oracle)},
             {"form", to_json(r.reference)}};
    if (r.reconciliation)
        out["reconciliation"] = {{"unit", to_json(r.reconciliation->unit)},
                                 {"unit_text", to_string(r.reconciliation->unit)},
                                 {"bar", r.reconciliation->bar}};
    else
        out["reconciliation"] = nullptr;
    return out;
}

}  // namespace krammer
