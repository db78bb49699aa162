#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mclag/abelian_group.hpp"
#include "mclag/errors.hpp"
#include "mclag/int_matrix.hpp"
#include "mclag/presentations.hpp"
#include "mclag/smith.hpp"

namespace mclag {

// The cellular chain complex of the presentation 2-complex with local
// coefficients:  C2 = Z^(|relators| * r)  -> C1 = Z^(|gens| * r) -> C0 = Z^r.
// Basis layout: within each generator/relator block the coefficient index
// varies fastest; blocks are ordered as in the presentation.
struct LocalChainComplex {
    IntMatrix d1; // r x (|gens| * r)
    IntMatrix d2; // (|gens| * r) x (|relators| * r)
    std::size_t coefficient_rank = 0;
};

// Boundary maps, using the inverted left action:
//   d1(<e> (x) c)         = (e^-1 - 1) c
//   d2(<l1...ln> (x) c)   = sum_t <l_t> (x) (l1...l_{t-1})^-1 c
// with <e^-1> (x) c := -<e> (x) e c for inverse letters.
inline LocalChainComplex chain_boundaries(const GroupPresentation& pres,
                                          const IntRepresentation& rep) {
    std::string why;
    if (!validate_representation(rep, &why)) throw InvalidRepresentation(why);
    const std::size_t r = rep.rank;
    const std::size_t ng = pres.generator_count();
    const std::size_t nr = pres.relators.size();
    std::vector<IntMatrix> inv = detail::representation_inverses(rep, nullptr);

    LocalChainComplex cc;
    cc.coefficient_rank = r;
    cc.d1 = IntMatrix(r, ng * r);
    for (std::size_t t = 0; t < ng; ++t)
        for (std::size_t a = 0; a < r; ++a)
            for (std::size_t b = 0; b < r; ++b)
                cc.d1(a, t * r + b) = inv[t](a, b) - (a == b ? 1 : 0);

    cc.d2 = IntMatrix(ng * r, nr * r);
    for (std::size_t rel = 0; rel < nr; ++rel) {
        IntMatrix prefix_inv = IntMatrix::identity(r); // (l1...l_{t-1})^-1
        for (const Letter& l : pres.relators[rel]) {
            const std::size_t t = static_cast<std::size_t>(l.generator);
            if (l.exponent == 1) {
                for (std::size_t a = 0; a < r; ++a)
                    for (std::size_t b = 0; b < r; ++b)
                        if (prefix_inv(a, b) != 0) cc.d2(t * r + a, rel * r + b) += prefix_inv(a, b);
                prefix_inv = inv[t] * prefix_inv;
            } else {
                IntMatrix moved = rep.images[t] * prefix_inv;
                for (std::size_t a = 0; a < r; ++a)
                    for (std::size_t b = 0; b < r; ++b)
                        if (moved(a, b) != 0) cc.d2(t * r + a, rel * r + b) -= moved(a, b);
                prefix_inv = std::move(moved);
            }
        }
    }
    return cc;
}

inline FgAbelianGroup homology_h0(const GroupPresentation& pres, const IntRepresentation& rep) {
    return cokernel_invariants(chain_boundaries(pres, rep).d1);
}

inline FgAbelianGroup homology_h1(const GroupPresentation& pres, const IntRepresentation& rep) {
    LocalChainComplex cc = chain_boundaries(pres, rep);
    return subquotient(cc.d2, cc.d1);
}

struct CycleClassInfo {
    std::optional<Int> order; // empty = infinite order
    bool generates_h1 = false;
};

// Order of the class of a 1-cycle in H1 and whether it generates.
inline CycleClassInfo cycle_class_order(const GroupPresentation& pres,
                                        const IntRepresentation& rep,
                                        const std::vector<Int>& cycle) {
    LocalChainComplex cc = chain_boundaries(pres, rep);
    if (cycle.size() != cc.d1.cols()) throw DimensionMismatch("cycle length != rank of C1");
    for (const Int& y : cc.d1.apply(cycle))
        if (y != 0) throw NotACycle("d1(cycle) != 0");

    detail::SnfOptions opt;
    opt.with_v_inv = true;
    detail::SnfCore core = detail::snf_core(cc.d1, opt);
    IntMatrix rel = (core.v_inv * cc.d2).row_slice(core.rank, cc.d1.cols());
    std::vector<Int> coords = core.v_inv.apply(cycle);
    std::vector<Int> x(coords.begin() + static_cast<std::ptrdiff_t>(core.rank), coords.end());

    QuotientStructure q(rel);
    return CycleClassInfo{q.order_of(x), q.generates(x)};
}

} // namespace mclag
