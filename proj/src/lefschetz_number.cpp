#include "linlef/lefschetz_number.hpp"

#include "linlef/errors.hpp"
#include "linlef/linalg.hpp"

namespace linlef {

namespace {

Rational alternating_sum(const std::vector<Rational>& values)
{
    Rational s;
    for (std::size_t p = 0; p < values.size(); ++p) s += (p % 2 == 0) ? values[p] : -values[p];
    return s;
}

std::vector<Rational> cochain_traces(const ChainMap& chain)
{
    std::vector<Rational> t;
    for (const auto& m : chain.maps) t.push_back(m.trace());
    return t;
}

std::vector<Rational> cohomology_traces(const std::vector<Matrix>& maps)
{
    std::vector<Rational> t;
    for (const auto& m : maps) t.push_back(m.trace());
    return t;
}

} // namespace

Rational linearization(const Matrix& a)
{
    if (!a.is_square()) throw InputError("NonSquare: linearization needs a square matrix");
    return determinant(Matrix::identity(a.rows()) - a);
}

LefschetzReport twisted_lefschetz(const LieAlgebra& algebra, const Representation& module, const LieMorphism& f,
                                  const Intertwiner& xi, const LinearizationTarget& target)
{
    validate(algebra);
    validate_rep(module);

    const CochainComplex complex = build_complex(algebra, module);
    const CohomologyData data = cohomology(complex);
    const ChainMap chain = induced_chain_map(complex, f, xi);

    LefschetzReport r;
    r.betti = data.betti();
    r.cohomology_maps = induced_cohomology_map(complex, data, chain);
    r.traces = cohomology_traces(r.cohomology_maps);
    r.lefschetz_cohomology = alternating_sum(r.traces);
    r.hopf_trace = alternating_sum(cochain_traces(chain));
    if (r.hopf_trace != r.lefschetz_cohomology)
        throw InternalError("Hopf trace " + r.hopf_trace.str() + " differs from cohomological trace " +
                            r.lefschetz_cohomology.str());

    r.linearization = linearization(target.a);
    r.linearization_source = target.source;
    r.agree = r.linearization == r.lefschetz_cohomology;
    r.disagreement_possible = !module.is_trivial() || module.dim != 1 || !is_nilpotent(algebra);

    if (!r.agree && target.a.rows() == target.algebra.dim()) {
        const auto reference = LieMorphism::endomorphism(target.algebra, target.a);
        if (!find_morphism_violation(reference)) {
            const CochainComplex ref_complex = build_complex(target.algebra, Representation::trivial(target.algebra));
            const Intertwiner one{reference, ref_complex.module, Matrix::identity(1)};
            const auto ref_traces = cohomology_traces(induced_cohomology_map(ref_complex, reference, one));
            for (std::size_t p = 0; p < std::min(ref_traces.size(), r.traces.size()); ++p)
                if (ref_traces[p] != r.traces[p]) {
                    r.first_divergent_degree = p;
                    break;
                }
        }
    }
    return r;
}

LefschetzReport twisted_lefschetz(const LieAlgebra& algebra, const Representation& module, const LieMorphism& f,
                                  const Intertwiner& xi)
{
    return twisted_lefschetz(algebra, module, f, xi, LinearizationTarget{f.matrix, algebra, "map"});
}

LefschetzReport untwisted_lefschetz(const LieAlgebra& algebra, const LieMorphism& f)
{
    const Representation trivial = Representation::trivial(algebra);
    return twisted_lefschetz(algebra, trivial, f, Intertwiner{f, trivial, Matrix::identity(1)});
}

HopfCheck hopf_trace_identity_check(const LieMorphism& f, const Intertwiner& xi, const CochainComplex& complex)
{
    const CohomologyData data = cohomology(complex);
    const ChainMap chain = induced_chain_map(complex, f, xi);

    HopfCheck h;
    h.cochain_value = alternating_sum(cochain_traces(chain));
    h.cohomology_value = alternating_sum(cohomology_traces(induced_cohomology_map(complex, data, chain)));
    if (h.cochain_value != h.cohomology_value)
        throw InternalError("Hopf trace identity failed: cochain " + h.cochain_value.str() + " vs cohomology " +
                            h.cohomology_value.str());
    h.det_value = linearization(f.matrix) * xi.matrix.trace();
    h.det_matches = h.det_value == h.cochain_value;
    return h;
}

} // namespace linlef
