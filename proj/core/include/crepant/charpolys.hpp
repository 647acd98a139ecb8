#ifndef CREPANT_CHARPOLYS_HPP
#define CREPANT_CHARPOLYS_HPP

#include "crepant/cycpoly.hpp"

#include <optional>
#include <vector>

namespace crepant {

/** Coefficient field for admissible characteristic polynomials. */
enum class CoeffField { Qj, Qu7 };

struct CharpolyConstraints {
    bool det_one = false;
    /**
     * 1 is an eigenvalue, or the spectrum is a power of the field's junior
     * tail ((j,j,j) for Qj, (zeta7, zeta7^2, zeta7^4) for Qu7) padded by
     * eigenvalue 1.  Over Qj this additionally requires an eigenvalue in
     * {1, j, j^2} of multiplicity at least two (the common-eigenspace
     * constraint of the dimension-four argument).
     */
    bool needs_eigenvalue_one = false;
    std::optional<long> order;  // lcm of the eigenvalue orders
};

/**
 * All monic degree-m products of the field's allowed irreducible factors
 * (cyclotomic polynomials that stay irreducible over the field, plus their
 * splittings: Phi_3 = (X-j)(X-j^2) over Qj, the Gauss-period cubics of
 * Phi_7 over Qu7, ...) whose roots are roots of unity, subject to the
 * constraints.  Deterministically ordered.
 */
std::vector<CycPoly> admissible_charpolys(int m, CoeffField field,
                                          const CharpolyConstraints& constraints);

}  // namespace crepant

#endif
