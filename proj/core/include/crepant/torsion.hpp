#ifndef CREPANT_TORSION_HPP
#define CREPANT_TORSION_HPP

#include "crepant/intmat.hpp"
#include "crepant/matgroup.hpp"

#include <json.hpp>

namespace crepant {

/**
 * Number of isolated fixed points of the automorphism with matrix m on a
 * compatible abelian-variety model: the product of Phi_u(1)^alpha_u over the
 * cyclotomic factorization of the real characteristic polynomial of m (i.e.
 * charpoly(m) * conj(charpoly(m))).  Throws std::domain_error when 1 is an
 * eigenvalue (non-isolated fixed locus) or when the real characteristic
 * polynomial is not a product of cyclotomic polynomials.
 */
Int fixed_point_count(const MatrixOverCyc& m);

/**
 * The same count along the lattice route: |det(I - R)| for the 2n x 2n
 * integer matrix R realizing m + conj(m) on an invariant lattice (companion
 * blocks of the cyclotomic factors).  Must agree with fixed_point_count.
 */
Int fixed_point_count_det(const MatrixOverCyc& m);

/** An integer lattice action reduced modulo ell. */
struct TorsionAction {
    long modulus = 2;  // ell >= 2
    IntMat reduced;    // square matrix over Z/ell (entries in [0, ell))
};

TorsionAction reduce_action(const IntMat& r, long ell);

/**
 * Number of ell-torsion fixed points: the cardinality of ker(reduced - I) on
 * (Z/ell)^rank, via the Smith normal form of the integer lift (valid for
 * composite ell as well).
 */
Int torsion_fixed_points(const TorsionAction& a);

/** total * stab / fixed as an exact rational. */
Rational double_counting(const Int& total_points, const Int& stabilizer_count,
                         const Int& fixed_per_element);

struct CheckReport {
    std::string check_id;
    std::string claim_ref;
    std::string status;  // "pass" or "fail"
    std::string lhs;
    std::string rhs;
};

nlohmann::json report_to_json(const CheckReport& r);

/**
 * Exact verification of the Gauss-period identities for the quadratic
 * integers u7, u8, u15, u16, v16, u20, u24 against their closed forms
 * (u7^2 + u7 + 2 = 0, u8^2 + 2 = 0, u15^2 - u15 + 4 = 0,
 * u16^2 + 4 + 2 sqrt2 = 0, v16^2 + 4 - 2 sqrt2 = 0, u20^2 + 5 = 0,
 * u24^2 + 6 = 0, with sqrt2 = zeta8 + zeta8^7).
 */
std::vector<CheckReport> verify_cm_identities();

/** The Gauss period sum of zeta_k^a over the exponent set. */
CycNum gauss_period(long k, const std::vector<long>& exps);

/**
 * The junior-orbit counting chain: 260 junior elements by double counting,
 * 256 = 2^8, 65 = 260/4, with the parity facts (65 odd, 260 = 0 mod 4)
 * asserted as report entries.
 */
std::vector<CheckReport> counting_reports();

}  // namespace crepant

#endif
