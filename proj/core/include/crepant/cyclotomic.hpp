#ifndef CREPANT_CYCLOTOMIC_HPP
#define CREPANT_CYCLOTOMIC_HPP

#include "crepant/intpoly.hpp"

#include <map>
#include <optional>

namespace crepant {

long euler_phi(long n);

/** The n-th cyclotomic polynomial, memoized. */
const IntPoly& cyclotomic_poly(long n);

/**
 * Factor a monic integer polynomial as a product of cyclotomic polynomials.
 * Returns the multiset {d -> multiplicity} with prod Phi_d^mult == p, or
 * nullopt when p has an irreducible factor that is not cyclotomic.  This is
 * the rationality rejection used by the classification filters.
 */
std::optional<std::map<long, int>> factor_into_cyclotomics(const IntPoly& p);

}  // namespace crepant

#endif
