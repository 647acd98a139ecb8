#ifndef CREPANT_JUNIORENUM_HPP
#define CREPANT_JUNIORENUM_HPP

#include "crepant/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace crepant {

/** Multiset of residues modulo d, entries exponent -> multiplicity >= 1. */
struct ExpMultiset {
    long d = 1;
    std::map<long, int> entries;

    int size() const;
    void add(long a, int mult = 1);
    bool operator==(const ExpMultiset& o) const { return d == o.d && entries == o.entries; }
};

/** d - A, entry-wise modulo d. */
ExpMultiset negate_mod(const ExpMultiset& A);
ExpMultiset multiset_union(const ExpMultiset& A, const ExpMultiset& B);
/**
 * A together with the negatives of its non-self-conjugate entries:
 * A u {{d-a : a in A, d-a != a}}.  Self-conjugate residues (only a = d/2)
 * are not doubled.
 */
ExpMultiset conjugate_closure(const ExpMultiset& A);

/** Sorted exponent vector a_1 <= ... <= a_n of eigenvalues zeta_d^{a_i}. */
struct RankedEigenvector {
    long d = 1;
    std::vector<long> exponents;  // ascending, each in [0, d)
};

/** (a_1 + ... + a_n)/d as a reduced rational. */
Rational age(const RankedEigenvector& v);
bool is_junior(const RankedEigenvector& v);
/** Exponent-wise a -> (d - a) mod d, re-sorted. */
RankedEigenvector inverse(const RankedEigenvector& v);

/**
 * All u >= 3 with phi(u)^2/u <= 8, or u even with phi(u)^2/u <= 4:
 * [3, 10] together with {12,14,15,16,18,20,21,24,30,36,42}.
 */
std::vector<long> solve_phi_inequality();

/**
 * S_{A,d}(u) = sum over a in A of a/(u * gcd(a, d)); requires u >= 2,
 * u | d, d >= 3 and every entry of exact order u (i.e. u = d/gcd(d,a)).
 */
Rational s_value(const ExpMultiset& A, long d, long u);

/** One admissible block: u, multiplicity alpha, the scaled multiset (1/d)A, its S-value. */
struct BlockRow {
    long u = 2;
    int alpha = 1;
    std::vector<Rational> block;  // entries of (1/d)A, ascending, in lowest terms
    Rational s;

    bool operator==(const BlockRow& o) const {
        return u == o.u && alpha == o.alpha && block == o.block && s == o.s;
    }
};

/**
 * Every (u, alpha, (1/d)A) with conjugate_closure(A) = {residues of order u}^{*alpha}
 * and S-value <= 1; ordered by u, then alpha, then block lexicographically.
 */
std::vector<BlockRow> enumerate_blocks();

/** A combination of blocks over distinct u whose S-values sum to exactly 1. */
struct PartitionRow {
    std::vector<BlockRow> rows;  // increasing u
    bool free_codim2 = false;
};

/**
 * All combinations of BlockRows over pairwise distinct u summing to S = 1,
 * flagged by freeness in codimension 2 of the realized exponent vector at
 * d = lcm of the block denominators.  Ordered lexicographically by u-sequence,
 * then alpha-sequence, then blocks.
 */
std::vector<PartitionRow> enumerate_partitions();

/** Order d plus the fixed nontrivial tail of exponents (the non-1 eigenvalues). */
struct JuniorType {
    long d = 3;
    std::vector<long> tail;  // ascending, no zero entries

    bool operator==(const JuniorType& o) const { return d == o.d && tail == o.tail; }
};

/**
 * The junior types realizable in dimension n: free-in-codim-2 partition rows
 * with d >= 3, tails filtered by length <= n.  Twelve types for n >= 6.
 */
std::vector<JuniorType> classify_junior_types(int n);

/**
 * True iff the cyclic group generated by diag(zeta_d^{a_i}) acts freely in
 * codimension c: for every ell in [1, d-1], at least c+1 exponents a satisfy
 * d does not divide ell*a.
 */
bool check_free_in_codim(const RankedEigenvector& v, int c);

/** One similarity class of <g> for g an automorphism of an abelian fourfold. */
struct FourfoldElementClass {
    long order = 1;
    std::vector<long> exponents;  // canonical ranked eigenvector, length 4
    bool junior = false;
    std::string isogeny_tag;  // "arbitrary", "ExEj3", "Ej4", "Ei4", "ExEu7_3",
                              // "Eu8_4", "Eu15_4", "Su16v16_2", "Eu20_4", "Eu24_4"
};

/**
 * All classes of finite-order diagonalizable fourfold automorphism generators:
 * determinant one, rational degree-8 real characteristic polynomial, free in
 * codimension 2; one class per inversion pair (A ~ (d-A) mod d), canonical
 * representative the lexicographically smaller of the two sorted vectors.
 * Ordered by order, then exponents.
 */
std::vector<FourfoldElementClass> classify_fourfold_elements();

}  // namespace crepant

#endif
