// Small tour of the library: rho of a braid, the invariant form, and a
// unitarized specialization near (q, t) = (1, i).

#include <iostream>

#include "krammer/krammer.hpp"

int main()
{
    using namespace krammer;

    const BraidWord w = parse_word("1 2 -1", 3);
    const LKRepresentation rep(3);
    const RingMatrix m = rep.matrix(w);
    std::cout << "rho(" << render(w) << "):\n";
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) std::cout << "  [" << to_string(m(r, c)) << "]";
        std::cout << "\n";
    }

    const RingMatrix j = form_matrix(3).J;
    std::cout << "form preserved: " << (m.transpose() * j * bar(m) == j ? "yes" : "no") << "\n";

    const auto p = UnitParams::from_offsets(0.5 * definiteness_radius(3), 0.0);
    const SpecializedRepresentation spec(rep, p);
    const CMatrix u = unitarize(spec.matrix(w), spec.form());
    std::cout << "unitarity defect after conjugation: " << unitarity_defect(u) << "\n";

    const auto report = conjugacy_experiment(rep, spec, w);
    std::cout << "char polys of word and reversed word equal: " << (report.charpoly_exact_equal ? "yes" : "no")
              << " (" << report.note << ")\n";
}
