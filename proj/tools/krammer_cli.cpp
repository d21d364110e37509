// krammer: command-line front end.
//
//   krammer matrix   --word "1 -2" [--n N]
//   krammer form     --n N [--normalized]
//   krammer verify   --n N
//   krammer oracle   --n N [--cross-sign minus|plus]
//   krammer spectrum --word W [--q-epsilon E --t-epsilon D | --seed S]
//   krammer conj     --word W [--q-epsilon E --t-epsilon D | --seed S] [--max-length L]
//   krammer scan     --n N [--grid K] [--radius R]
//
// Exit codes: 0 success, 1 property failure, 2 usage error.

#include <cstdint>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "krammer/krammer.hpp"

using namespace krammer;

namespace {

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Options {
    std::optional<int> n;
    std::optional<std::string> word;
    std::optional<double> q_epsilon;
    std::optional<double> t_epsilon;
    std::uint64_t seed = 1;
    std::string format = "json";
    std::size_t max_length = 12;
    bool normalized = false;
    std::string cross_sign = "plus";
    int grid = 5;
    std::optional<double> radius;
};

void add_common(CLI::App* sub, Options& o)
{
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
}

void add_word(CLI::App* sub, Options& o, bool required)
{
    auto* opt = sub->add_option("--word", o.word, "Braid word: signed generator indices, -j is the inverse of sigma_j");
    if (required) opt->required();
    sub->add_option("--n", o.n, "Number of strands (default 1 + max |index|)")->check(CLI::Range(2, 64));
}

void add_params(CLI::App* sub, Options& o)
{
    sub->add_option("--q-epsilon", o.q_epsilon, "q0 = exp(i*eps)");
    sub->add_option("--t-epsilon", o.t_epsilon, "t0 = i*exp(i*delta)");
    sub->add_option("--seed", o.seed, "Seed for sampling parameters when no epsilon is given");
}

int strands(const Options& o)
{
    if (o.n) return *o.n;
    if (o.word) return infer_strands(*o.word);
    throw UsageError("--n or --word is required");
}

BraidWord word_of(const Options& o, int n)
{
    try {
        return parse_word(o.word.value_or(""), n);
    } catch (const BraidParseError& e) {
        throw UsageError(e.what());
    }
}

UnitParams params_of(const Options& o, int n)
{
    if (o.q_epsilon || o.t_epsilon) return UnitParams::from_offsets(o.q_epsilon.value_or(0.0), o.t_epsilon.value_or(0.0));
    std::mt19937_64 rng(o.seed);
    return sample_params(rng, definiteness_radius(n));
}

std::string fmt(double x)
{
    std::ostringstream s;
    s.precision(17);
    s << x;
    return s.str();
}

std::string fmt(const cplx& z) { return "(" + fmt(z.real()) + ", " + fmt(z.imag()) + ")"; }

json params_json(const UnitParams& p, double q_eps, double t_eps)
{
    json j = to_json(p);
    j["q_epsilon"] = q_eps;
    j["t_epsilon"] = t_eps;
    return j;
}

double q_offset(const UnitParams& p) { return std::arg(p.q0()); }
double t_offset(const UnitParams& p) { return std::arg(p.t0() / cplx(0.0, 1.0)); }

void print_matrix_text(std::ostream& out, const RingMatrix& m, const LKBasis& basis)
{
    for (std::size_t c = 0; c < m.cols(); ++c) {
        out << "image of " << basis.label(c) << ":\n";
        for (std::size_t r = 0; r < m.rows(); ++r)
            if (!m(r, c).is_zero()) out << "  " << basis.label(r) << "  " << to_string(m(r, c)) << "\n";
    }
}

json matrix_json(const RingMatrix& m)
{
    json j = to_json(m);
    json text = json::array();
    for (const auto& e : m.entries()) text.push_back(to_string(e));
    j["entries_text"] = std::move(text);
    return j;
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

// ---------------------------------------------------------------------------

int run_matrix(const Options& o, std::ostream& out)
{
    const int n = strands(o);
    const BraidWord w = word_of(o, n);
    const LKRepresentation rep(n);
    const RingMatrix m = rep.matrix(w);
    if (o.format == "json") {
        emit(out, {{"n", n}, {"word", to_json(w)}, {"basis", basis_json(rep.basis())}, {"matrix", matrix_json(m)}});
    } else {
        out << "n = " << n << ", word = [" << render(w) << "]\n";
        print_matrix_text(out, m, rep.basis());
    }
    return 0;
}

int run_form(const Options& o, std::ostream& out)
{
    const int n = strands(o);
    const FormMatrix f = form_matrix(n);
    const RingMatrix& m = o.normalized ? f.normalized : f.J;
    const LKBasis basis(n);
    if (o.format == "json") {
        emit(out, {{"n", n},
                   {"basis", basis_json(basis)},
                   {"normalized", o.normalized},
                   {"prefactor", to_json(f.prefactor)},
                   {"prefactor_text", to_string(f.prefactor)},
                   {"convention", std::string(to_string(kFormConvention))},
                   {"matrix", matrix_json(m)}});
    } else {
        out << "n = " << n << (o.normalized ? ", J / c" : ", J") << "\nc = " << to_string(f.prefactor) << "\n";
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c)
                if (!m(r, c).is_zero())
                    out << "<" << basis.label(r) << ", " << basis.label(c) << ">  " << to_string(m(r, c)) << "\n";
    }
    return 0;
}

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

Check run_check(const std::string& name, const std::function<std::string()>& body)
{
    Check c{name, false, {}};
    try {
        c.detail = body();
        c.pass = true;
    } catch (const std::exception& e) {
        c.detail = e.what();
    }
    return c;
}

int run_verify(const Options& o, std::ostream& out)
{
    const int n = strands(o);
    const LKRepresentation rep(n);
    const auto id = RingMatrix::identity(rep.dim());
    auto require = [](bool ok, const std::string& what) {
        if (!ok) throw std::logic_error(what);
    };

    std::vector<Check> checks;
    checks.push_back(run_check("braid_relations", [&] {
        for (int i = 1; i < n; ++i) {
            if (i + 1 < n)
                require(rep.generator(i) * rep.generator(i + 1) * rep.generator(i) ==
                            rep.generator(i + 1) * rep.generator(i) * rep.generator(i + 1),
                        "braid relation fails at i=" + std::to_string(i));
            for (int j = i + 2; j < n; ++j)
                require(rep.generator(i) * rep.generator(j) == rep.generator(j) * rep.generator(i),
                        "far commutation fails at " + std::to_string(i) + "," + std::to_string(j));
        }
        return std::string("exact");
    }));
    checks.push_back(run_check("generator_inverses", [&] {
        for (int i = 1; i < n; ++i)
            require(rep.generator(i, 1) * rep.generator(i, -1) == id, "inverse fails at i=" + std::to_string(i));
        return std::string("exact");
    }));
    checks.push_back(run_check("hermitian_symmetry", [&] {
        require(check_hermitian_symmetry(n), "J^T != bar(J)");
        return std::string("J^T = bar(J)");
    }));
    checks.push_back(run_check("invariance", [&] {
        auto [convention, ok] = check_invariance(rep);
        require(ok && convention == kFormConvention, "form preserved only under " + std::string(to_string(convention)));
        return std::string(to_string(convention));
    }));
    checks.push_back(run_check("cycles", [&] {
        require(vij_cycle_check(n), "some v_ij has nonzero boundary");
        return std::string("d v_ij = 0");
    }));
    checks.push_back(run_check("oracle", [&] {
        auto r = compare_oracle(n);
        require(r.zero_pattern_match && r.reconciliation.has_value(), "oracle does not reconcile with J");
        return "unit " + to_string(r.reconciliation->unit) + (r.reconciliation->bar ? ", bar" : ", no bar");
    }));
    checks.push_back(run_check("nonsingularity", [&] {
        auto det = nonsingularity_certificate(n);
        return "det(J/c) has " + std::to_string(det.size()) + " terms";
    }));
    checks.push_back(run_check("fox_calibration", [&] {
        auto cal = calibrate_fox(n);
        return std::string(to_string(cal.order)) + ", unit " + to_string(cal.unit) + (cal.bar ? ", bar" : "");
    }));

    bool all = true;
    for (const auto& c : checks) all = all && c.pass;
    if (o.format == "json") {
        json props = json::object();
        for (const auto& c : checks) props[c.name] = {{"pass", c.pass}, {"detail", c.detail}};
        emit(out, {{"n", n}, {"properties", props}, {"all_pass", all}});
    } else {
        for (const auto& c : checks) out << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
        out << (all ? "all properties pass" : "some properties fail") << "\n";
    }
    return all ? 0 : 1;
}

int run_oracle(const Options& o, std::ostream& out)
{
    const int n = strands(o);
    const auto sign = o.cross_sign == "minus" ? CrossTermSign::minus : CrossTermSign::plus;
    const auto r = compare_oracle(n, sign);
    const bool ok = r.zero_pattern_match && r.reconciliation.has_value();
    if (o.format == "json") {
        emit(out, to_json(r));
    } else {
        out << "n = " << n << ", cross-term sign " << o.cross_sign << "\n"
            << "zero patterns match: " << (r.zero_pattern_match ? "yes" : "no") << "\n"
            << "entries differing from J: " << r.mismatched_entries << "\n";
        if (r.reconciliation)
            out << "oracle = " << to_string(r.reconciliation->unit) << " * " << (r.reconciliation->bar ? "bar(J)" : "J")
                << "\n";
        else
            out << "no single unit reconciles oracle and J\n";
    }
    return ok ? 0 : 1;
}

int run_spectrum(const Options& o, std::ostream& out)
{
    const int n = strands(o);
    const BraidWord w = word_of(o, n);
    const UnitParams p = params_of(o, n);
    const LKRepresentation rep(n);
    const SpecializedRepresentation spec(rep, p);
    const auto numeric = numeric_charpoly(spec.matrix(w));
    std::optional<std::vector<LaurentPoly>> exact;
    std::optional<double> distance;
    if (w.length() <= o.max_length) {
        exact = charpoly(rep.matrix(w));
        std::vector<cplx> evaluated;
        for (const auto& c : *exact) evaluated.push_back(eval(c, p.q0(), p.t0()));
        distance = charpoly_distance(evaluated, numeric);
    }
    if (o.format == "json") {
        json j{{"n", n},
               {"word", render(w)},
               {"params", params_json(p, q_offset(p), t_offset(p))},
               {"charpoly_numeric", to_json(numeric)}};
        j["charpoly_exact"] = exact ? to_json(*exact) : json(nullptr);
        j["exact_vs_numeric"] = distance ? json(*distance) : json(nullptr);
        emit(out, j);
    } else {
        out << "n = " << n << ", word = [" << render(w) << "], q0 = " << fmt(p.q0()) << ", t0 = " << fmt(p.t0())
            << "\n";
        if (exact)
            for (std::size_t k = 0; k < exact->size(); ++k) out << "x^" << k << ": " << to_string((*exact)[k]) << "\n";
        else
            out << "exact characteristic polynomial skipped: word longer than --max-length\n";
        for (std::size_t k = 0; k < numeric.size(); ++k) out << "x^" << k << " ~ " << fmt(numeric[k]) << "\n";
        if (distance) out << "exact vs numeric: " << fmt(*distance) << "\n";
    }
    return 0;
}

int run_conj(const Options& o, std::ostream& out)
{
    const int n = strands(o);
    const BraidWord w = word_of(o, n);
    const UnitParams p = params_of(o, n);
    const LKRepresentation rep(n);
    const SpecializedRepresentation spec(rep, p);
    const auto r = conjugacy_experiment(rep, spec, w, {w.length() <= o.max_length});
    const bool definite = certify_negative_definite(spec.form());
    if (o.format == "json") {
        json j = to_json(r);
        j["params"] = params_json(p, q_offset(p), t_offset(p));
        j["definiteness"] = definite;
        emit(out, j);
    } else {
        out << "word     [" << render(r.word) << "]\nreversed [" << render(r.reversed) << "]\n";
        if (r.exact_checked)
            out << "exact characteristic polynomials " << (r.charpoly_exact_equal ? "equal" : "differ") << "\n";
        else
            out << "exact check skipped: word longer than --max-length\n";
        out << "numeric residual " << fmt(r.numeric_residual) << "\n"
            << "form negative definite at parameters: " << (definite ? "yes" : "no") << "\n"
            << "matrices unitarily conjugate: " << (r.unitarily_conjugate ? "yes" : "no") << "\n"
            << "note: " << r.note << "\n";
    }
    return r.unitarily_conjugate ? 0 : 1;
}

int run_scan(const Options& o, std::ostream& out)
{
    const int n = strands(o);
    if (o.grid < 1) throw UsageError("--grid must be positive");
    const double bound = definiteness_radius(n);
    const double r = o.radius.value_or(bound);
    if (!(r > 0.0)) throw UsageError("--radius must be positive");
    const bool empirical = r > bound;
    const int k = o.grid;

    // Offsets r * (2a + 1.5 - k) / k lie in (-r, r) and are never zero.
    std::vector<double> offsets;
    for (int a = 0; a < k; ++a) offsets.push_back(r * (2.0 * a + 1.5 - k) / k);
    const std::size_t total = offsets.size() * offsets.size();
    std::vector<char> definite(total, 0);
    parallel_for(total, [&](std::size_t idx) {
        const auto p = UnitParams::from_offsets(offsets[idx / offsets.size()], offsets[idx % offsets.size()]);
        definite[idx] = certify_negative_definite(n, p);
    });

    std::size_t count = 0;
    for (char d : definite) count += d;
    const bool all = count == total;
    if (o.format == "json") {
        json points = json::array();
        for (std::size_t idx = 0; idx < total; ++idx)
            points.push_back({{"q_epsilon", offsets[idx / offsets.size()]},
                              {"t_epsilon", offsets[idx % offsets.size()]},
                              {"negative_definite", static_cast<bool>(definite[idx])}});
        emit(out, {{"n", n},
                   {"radius", r},
                   {"theorem_radius", bound},
                   {"empirical", empirical},
                   {"points", points},
                   {"negative_definite_count", count},
                   {"all_negative_definite", all}});
    } else {
        out << "n = " << n << ", radius " << fmt(r) << (empirical ? " (empirical, beyond the proven radius)" : "")
            << "\n"
            << count << " of " << total << " grid points negative definite\n";
    }
    if (empirical) return 0;
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Lawrence-Krammer representation toolkit"};
    app.require_subcommand(1);
    Options o;

    auto* matrix = app.add_subcommand("matrix", "Print rho(word)");
    add_word(matrix, o, false);
    add_common(matrix, o);

    auto* form = app.add_subcommand("form", "Print the invariant form J, or J/c with --normalized");
    form->add_option("--n", o.n, "Number of strands")->required()->check(CLI::Range(2, 64));
    form->add_flag("--normalized", o.normalized, "Print J divided by its scalar prefactor");
    add_common(form, o);

    auto* verify = app.add_subcommand("verify", "Run the exact invariant suite");
    verify->add_option("--n", o.n, "Number of strands")->required()->check(CLI::Range(2, 64));
    add_common(verify, o);

    auto* oracle = app.add_subcommand("oracle", "Compare the intersection oracle with J");
    oracle->add_option("--n", o.n, "Number of strands")->required()->check(CLI::Range(2, 64));
    oracle->add_option("--cross-sign", o.cross_sign, "Sign of the cross sum in Y_i")
        ->check(CLI::IsMember({"minus", "plus"}));
    add_common(oracle, o);

    auto* spectrum = app.add_subcommand("spectrum", "Exact and numeric characteristic polynomials of rho(word)");
    add_word(spectrum, o, true);
    add_params(spectrum, o);
    spectrum->add_option("--max-length", o.max_length, "Longest word for the exact computation");
    add_common(spectrum, o);

    auto* conj = app.add_subcommand("conj", "Compare rho(word) with rho(reversed word)");
    add_word(conj, o, true);
    add_params(conj, o);
    conj->add_option("--max-length", o.max_length, "Longest word for the exact computation");
    add_common(conj, o);

    auto* scan = app.add_subcommand("scan", "Negative definiteness on a grid around (1, i)");
    scan->add_option("--n", o.n, "Number of strands")->required()->check(CLI::Range(2, 64));
    scan->add_option("--grid", o.grid, "Points per axis");
    scan->add_option("--radius", o.radius, "Half-width of the grid (default: the proven radius)");
    add_common(scan, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const std::vector<std::pair<CLI::App*, int (*)(const Options&, std::ostream&)>> dispatch{
        {matrix, run_matrix}, {form, run_form},   {verify, run_verify}, {oracle, run_oracle},
        {spectrum, run_spectrum}, {conj, run_conj}, {scan, run_scan}};
    try {
        for (const auto& [sub, fn] : dispatch)
            if (sub->parsed()) return fn(o, std::cout);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const BraidParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
