#ifndef CREPANT_MATGROUP_HPP
#define CREPANT_MATGROUP_HPP

#include "crepant/cycpoly.hpp"
#include "crepant/juniorenum.hpp"

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace crepant {

/** Square matrix of exact cyclotomic numbers, row major, one shared conductor. */
class MatrixOverCyc {
public:
    MatrixOverCyc() = default;
    /** Row-major entries, length n*n; embedded into the lcm of their conductors. */
    MatrixOverCyc(int n, std::vector<CycNum> entries);
    static MatrixOverCyc identity(int n);
    static MatrixOverCyc diagonal(const std::vector<CycNum>& diag);
    /** Permutation matrix from a one-line image array (0-based), conductor 1. */
    static MatrixOverCyc permutation(const std::vector<int>& images);

    int dim() const { return n_; }
    long conductor() const { return cond_; }
    const CycNum& at(int i, int j) const { return e_[static_cast<size_t>(i) * n_ + j]; }

    MatrixOverCyc operator*(const MatrixOverCyc& o) const;
    bool operator==(const MatrixOverCyc& o) const;
    MatrixOverCyc inverse() const;  // Gaussian elimination; throws if singular
    MatrixOverCyc conj() const;     // entry-wise complex conjugation
    /** Re-embed every entry into Q(zeta_m); cond must divide m. */
    MatrixOverCyc embedded(long m) const;

    CycNum trace() const;
    CycNum det() const;
    /** Characteristic polynomial det(X*I - M), by Faddeev-LeVerrier. */
    CycPoly charpoly() const;
    bool is_identity() const;
    /** dim ker(M - I), the multiplicity of eigenvalue 1. */
    int eigenvalue_one_multiplicity() const;

    /** Deterministic dedup key; equal matrices at the same conductor agree. */
    std::string key() const;

private:
    int n_ = 0;
    long cond_ = 1;
    std::vector<CycNum> e_;
};

/** Smallest k >= 1 with m^k = I; throws if none is found within cap. */
long element_order(const MatrixOverCyc& m, long cap = 10000);

/**
 * Exact ranked eigenvalue vector over d = element_order(m): exponents a_1 <=
 * ... <= a_n with eigenvalue multiset {zeta_d^{a_i}}, multiplicities computed
 * as kernel dimensions of m - zeta_d^a.  The gcd of the exponents with d is 1.
 */
RankedEigenvector ranked_eigenvalues(const MatrixOverCyc& m);

struct ConjClass {
    int representative = 0;
    std::vector<int> members;  // ascending element indices
};

struct GroupFingerprint {
    long order = 1;
    std::map<long, long> order_histogram;
    bool abelian = true;
    long center_order = 1;
    long derived_order = 1;
    long order2_count = 0;

    bool operator==(const GroupFingerprint&) const = default;
};

/**
 * A finite group of matrices, closed under product and inverse, element 0 the
 * identity.  Immutable after construction; the Cayley table and structural
 * caches are built lazily under a lock, so const instances are safe to share.
 */
class FiniteMatrixGroup {
public:
    int dim() const { return dim_; }
    long order() const { return static_cast<long>(elements_.size()); }
    const std::vector<MatrixOverCyc>& elements() const { return elements_; }
    const std::vector<MatrixOverCyc>& generators() const { return generators_; }
    /** Indices of the generators inside elements(). */
    const std::vector<int>& generator_indices() const { return gen_idx_; }

    /** Index of m in elements(), or -1. */
    int index_of(const MatrixOverCyc& m) const;
    /** Cayley product by index. */
    int mult(int i, int j) const;
    int inv(int i) const;
    long element_order_at(int i) const;
    const std::vector<ConjClass>& classes() const;
    /** Class index of element i. */
    int class_of(int i) const;

private:
    friend FiniteMatrixGroup close_group(std::vector<MatrixOverCyc>, long);
    friend FiniteMatrixGroup materialize(const FiniteMatrixGroup&, const std::vector<int>&);

    int dim_ = 0;
    std::vector<MatrixOverCyc> elements_;
    std::vector<MatrixOverCyc> generators_;
    std::vector<int> gen_idx_;
    std::map<std::string, int> index_;
    // parent_[i] = {p, k} with elements_[i] = elements_[p] * generators_[k],
    // p < i, so Cayley rows compose from index maps of the generators alone
    std::vector<std::pair<int, int>> parent_;

    struct Caches {
        std::mutex lock;
        std::vector<std::vector<int>> cayley;   // rows built on demand
        std::vector<std::vector<int>> genrows;  // j -> index(generators_[k] * elements_[j])
        std::vector<int> inv;
        std::vector<long> eorder;
        std::vector<ConjClass> classes;
        std::vector<int> class_of;
    };
    mutable std::unique_ptr<Caches> caches_ = std::make_unique<Caches>();

    const std::vector<int>& cayley_row(int i) const;
    const std::vector<int>& gen_row(int k) const;
    void need_inverses() const;
    void need_orders() const;
    void need_classes() const;
};

/**
 * Breadth-first product closure of the generators (deduplicated, applied in
 * sorted key order), deterministic element ordering.  Throws std::runtime_error
 * when the closure exceeds cap elements.
 */
FiniteMatrixGroup close_group(std::vector<MatrixOverCyc> gens, long cap = 1000000);

std::vector<ConjClass> conjugacy_classes(const FiniteMatrixGroup& g);

/** Sorted index set {i : i commutes with everything}. */
std::vector<int> center(const FiniteMatrixGroup& g);
/** Sorted index set of elements commuting with every index in s. */
std::vector<int> centralizer(const FiniteMatrixGroup& g, const std::vector<int>& s);
/** Sorted index set {x : x h x^-1 = h as a set}; h must be a subgroup. */
std::vector<int> normalizer(const FiniteMatrixGroup& g, const std::vector<int>& h);
/** Closure of the seed indices inside g (always contains the identity). */
std::vector<int> subgroup_closure(const FiniteMatrixGroup& g, std::vector<int> seed);
bool is_subgroup(const FiniteMatrixGroup& g, const std::vector<int>& h);

/**
 * A p-Sylow subgroup as a sorted index set, found by greedy extension of
 * p-subgroups through their normalizers; deterministic.  Trivial when p does
 * not divide |g|.
 */
std::vector<int> sylow_subgroup(const FiniteMatrixGroup& g, long p);

/** Stand-alone group on the elements of g indexed by the subgroup idx. */
FiniteMatrixGroup materialize(const FiniteMatrixGroup& g, const std::vector<int>& idx);

/** True iff the elements satisfying pred generate all of g. */
bool is_generated_by(const FiniteMatrixGroup& g,
                     const std::function<bool(const MatrixOverCyc&)>& pred);

/**
 * A minimal generating sequence, greedily chosen: repeatedly append the
 * element whose inclusion most enlarges the generated subgroup (smallest
 * index among ties).
 */
std::vector<int> minimal_generating_indices(const FiniteMatrixGroup& g);

/**
 * True iff Aut(g) contains an element of order k, by backtracking over
 * images of a minimal generating sequence (candidates filtered by element
 * order and conjugacy class size), validating multiplicativity against the
 * Cayley table; an automorphism of order divisible by k witnesses a power of
 * order exactly k.  Throws when |g| > cap.
 */
bool has_automorphism_of_order(const FiniteMatrixGroup& g, long k, long cap = 2048);

/** Every non-identity element has eigenvalue-1 multiplicity <= dim - c - 1. */
bool acts_freely_in_codim(const FiniteMatrixGroup& g, int c);

GroupFingerprint fingerprint(const FiniteMatrixGroup& g);

}  // namespace crepant

#endif
