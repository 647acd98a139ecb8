#ifndef CREPANT_LATTICE_HPP
#define CREPANT_LATTICE_HPP

#include "crepant/torsion.hpp"

namespace crepant {

/**
 * A rank-2m integer lattice embedded in C^m: 2m basis vectors with exact
 * cyclotomic coordinates.  For E_z factors the basis is (1, z) per coordinate,
 * in row-major product order.
 */
struct LatticeModel {
    int m = 1;                               // complex dimension
    std::vector<std::vector<CycNum>> basis;  // 2m vectors, each of length m
};

/** The lattice of E_z^copies with basis 1, z in each coordinate. */
LatticeModel ez_power_model(const CycNum& z, int copies);

/**
 * The 2m x 2m integer matrix of the action on the lattice basis (column t is
 * the image of basis vector t).  Throws std::invalid_argument when the action
 * does not map the lattice into itself.
 */
IntMat integer_realization(const LatticeModel& lattice, const MatrixOverCyc& action);

/**
 * Certify that C^{phi(k)/2} / Im(f(S_k)), for f(S_k) the coordinatewise
 * embedding x -> (sigma_a(x))_{a in S_k} of Z[zeta_k], is the product lattice
 * Z[(psi_1(u_k), ..., psi_mk(u_k))]^r: finds a Z[u_k]-module basis of
 * Z[zeta_k] among the powers of zeta_k (unimodular over Z, certified by HNF)
 * and an exact C-linear change of coordinates carrying one lattice basis to
 * the other, where u_k is the Gauss period over S_k and psi_j are the distinct
 * restrictions of the sigma_a.  k must be one of {3,4,6,7,8,12,15,16,20,24}
 * with its standard exponent set.
 */
CheckReport verify_lattice_row(long k, const std::vector<long>& exps);

/** The Table of supported (k, exponent set, target label) rows. */
struct LatticeRowSpec {
    long k;
    std::vector<long> exps;
    std::string target;
};
const std::vector<LatticeRowSpec>& lattice_rows();

}  // namespace crepant

#endif
