#ifndef CREPANT_CATALOG_HPP
#define CREPANT_CATALOG_HPP

#include "crepant/matgroup.hpp"

#include <json.hpp>

#include <optional>

namespace crepant {

/**
 * One named group in a catalog: generators (permutations or exact cyclotomic
 * matrices), an optional order hint checked at closure time, and free-form
 * tags.
 */
struct CatalogEntry {
    std::string name;
    std::vector<MatrixOverCyc> generators;
    std::optional<long> expected_order;
    std::vector<std::string> tags;
};

/**
 * Closure of the entry's generators; throws std::runtime_error naming the
 * entry when the closure exceeds cap or contradicts expected_order.
 */
FiniteMatrixGroup close_entry(const CatalogEntry& e, long cap = 1000000);

/** Closure of e, memoized per (name, generator keys); shared across callers. */
const FiniteMatrixGroup& cached_closure(const CatalogEntry& e, long cap = 1000000);

/** Z_n as diag(zeta_n). */
CatalogEntry build_cyclic(long n);
/** Block-diagonal direct product a x b. */
CatalogEntry build_direct(const CatalogEntry& a, const CatalogEntry& b);
/**
 * Z_n x| Z_k, the Z_k generator conjugating the Z_n generator to its m-th
 * power: monomial matrices of dimension ord(m mod n).  Requires m^k = 1 and
 * gcd(m, n) = 1; throws std::invalid_argument otherwise ("invalid action").
 */
CatalogEntry build_semidirect_cyclic(long n, long k, long m);
/**
 * Generalized quaternion group Q_q, q = 2^e >= 8:
 * <diag(zeta_{q/2}, zeta_{q/2}^-1), [[0,1],[-1,0]]>.
 */
CatalogEntry build_quaternion(long q);
/**
 * Z_n x| Q_q for odd n, q in {8, 16}: the antidiagonal generator inverts the
 * Z_n part and the diagonal one centralizes it, or, with by_diagonal set, the
 * diagonal order-(q/2) generator inverts and the antidiagonal centralizes
 * (realized by the representation induced from the index-2 centralizing
 * subgroup, dimension 4).
 */
CatalogEntry build_semidirect_quaternion(long n, long q, bool by_diagonal = false);
/** SL(2, F3) of order 24 as exact 2 x 2 matrices over Q(i). */
CatalogEntry build_sl23();
/** SL(3, F2) of order 168, permuting the seven nonzero vectors of F2^3. */
CatalogEntry build_sl32();
/**
 * Q8 x| (Z7 x| Z3) of order 168: the fiber product of SL(2,F3) and Z7 x| Z3
 * over their common Z3 quotients, as permutations of 15 points (the eight
 * nonzero vectors of F3^2 plus seven points for Z7).
 */
CatalogEntry build_q8_frobenius();

/**
 * The bundled catalog: Z3, Z7, Z15, Q8, Q16, SL23, SL32, Z3xZ3, Z7xZ7,
 * Z3sdZ8, Z7sdZ3, Q8sd_Z7sdZ3, Z3x_Q8sd_Z7sdZ3, Z5xQ8, Z5sdQ8, Z5sdQ16,
 * Z3sdQ16, Z3xQ16; the last five carry their small-group index as a tag.
 */
const std::vector<CatalogEntry>& builtin_catalog();

/**
 * Parse and validate a catalog file: {"entries": [{"name", "generators":
 * {"kind": "perm"|"matrix", "data"}, "expected_order"?, "tags"?}]}.  A file
 * with no content yields an empty list.  Throws std::runtime_error with the
 * offending entry named on closure-cap or order-hint failures, and on schema
 * errors.
 */
std::vector<CatalogEntry> load_catalog(const std::string& path, long cap = 1000000);

/** Matrix encoding used by the catalog schema (see serialize.hpp for CycNum). */
nlohmann::json generators_to_json(const std::vector<MatrixOverCyc>& gens);

/** Closure cap: CREPANT_CAP when set to a positive integer, else 1000000. */
long default_cap();

}  // namespace crepant

#endif
