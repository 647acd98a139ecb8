#ifndef CREPANT_CHARTABLE_HPP
#define CREPANT_CHARTABLE_HPP

#include "crepant/matgroup.hpp"

namespace crepant {

/**
 * Complete irreducible character table: chars[i][r] is the exact cyclotomic
 * value of the i-th character on the r-th conjugacy class (conductor dividing
 * the group exponent); rows sorted by degree, then by value keys.
 */
struct CharacterTable {
    std::vector<ConjClass> classes;
    std::vector<long> class_sizes;
    std::vector<int> inverse_class;  // class index of the inverses
    std::vector<long> degrees;
    std::vector<std::vector<CycNum>> chars;
};

/**
 * Dixon's method: class-constant matrices split into common eigenvectors
 * modulo a prime p = 1 (mod exp(g)) with p > 2 sqrt(|g|), degrees and values
 * recovered mod p and lifted to exact cyclotomic numbers via eigenvalue
 * multiplicities.  Throws when |g| > cap.
 */
CharacterTable character_table(const FiniteMatrixGroup& g, long cap = 2048);

/**
 * <phi, phi> for a class function phi (indexed like the class list): the sum
 * of squared multiplicities n_1^2 + ... + n_k^2 when phi is a character.
 * Throws std::invalid_argument when the result is not a rational integer.
 */
long splitting_coefficient(const FiniteMatrixGroup& g, const std::vector<CycNum>& phi);

}  // namespace crepant

#endif
