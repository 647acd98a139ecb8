#ifndef CREPANT_SEARCH_HPP
#define CREPANT_SEARCH_HPP

#include "crepant/catalog.hpp"
#include "crepant/chartable.hpp"

namespace crepant {

/**
 * One predicate of a search specification.  The vocabulary is closed:
 *   order_divides(n), order_equals(n), element_order_absent(orders),
 *   element_order_present(orders), at_most_one_order2,
 *   sylow_isomorphic(p, shapes from {trivial, cyclic, Q8, Q16, noncyclic}),
 *   generated_by_order(orders), has_aut_of_order(k), max_char_degree(n),
 *   forbidden_char_values(values), conjugate_pair_degree(n),
 *   admits_fourfold_rep, flag_element_order(orders).
 * flag_element_order never filters; it records witnesses in the evidence.
 */
struct Predicate {
    std::string type;
    long n = 0;
    long p = 0;
    std::vector<long> orders;
    std::vector<std::string> shapes;
    std::vector<CycNum> values;

    std::string describe() const;
};

/** Conjunction of predicates; at least one, all parameters positive. */
struct SearchSpec {
    std::vector<Predicate> predicates;

    static SearchSpec from_json(const nlohmann::json& j);
};

struct PredicateOutcome {
    std::string predicate;
    bool passed = false;
    std::string witness;
};

/** Evidence for one catalog entry: all predicate outcomes, in spec order. */
struct SearchOutcome {
    std::string entry;
    bool matched = false;
    std::string error;  // nonempty when the closure failed (cap, order hint)
    std::vector<PredicateOutcome> outcomes;
    std::vector<std::string> flags;  // witnesses of non-filtering flag predicates
};

/**
 * Evaluate the spec on every entry; outcomes sorted by entry name, matched
 * set monotone in the predicate list.  Per-entry failures (closure cap,
 * character-table cap) are reported in the outcome, never fatal.
 */
std::vector<SearchOutcome> run_search(const std::vector<CatalogEntry>& catalog,
                                      const SearchSpec& spec, long cap = 1000000);

std::vector<std::string> matched_names(const std::vector<SearchOutcome>& outcomes);

nlohmann::json outcome_to_json(const SearchOutcome& o);

/**
 * True iff some character of degree 4 (a nonnegative integral combination of
 * irreducibles) restricts every non-identity element to a determinant-one
 * matrix with rational real characteristic polynomial, free in codimension 2
 * (hence also faithful).  The witness reports the character found, or the
 * number of candidates exhausted.
 */
bool admits_fourfold_rep(const FiniteMatrixGroup& g, std::string* witness = nullptr);

/** True iff the p-Sylow subgroup of g matches the shape label. */
bool sylow_matches(const FiniteMatrixGroup& g, long p, const std::string& shape);

}  // namespace crepant

#endif
