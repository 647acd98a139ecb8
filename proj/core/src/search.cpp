#include "crepant/search.hpp"

#include "crepant/cyclotomic.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace crepant {

namespace {

std::string join_longs(const std::vector<long>& v) {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
    return out;
}

std::string join_strings(const std::vector<std::string>& v) {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i];
    return out;
}

CycNum parse_cyc_value(const std::string& s) {
    if (s.rfind("zeta", 0) == 0) {
        size_t caret = s.find('^');
        long n = std::stol(s.substr(4, caret == std::string::npos ? std::string::npos : caret - 4));
        long k = caret == std::string::npos ? 1 : std::stol(s.substr(caret + 1));
        return CycNum::zeta(n, k);
    }
    if (s.rfind("-zeta", 0) == 0) return -parse_cyc_value(s.substr(1));
    return CycNum::from_rational(parse_rational(s));
}

std::string histogram_str(const std::map<long, long>& h) {
    std::string out;
    for (const auto& [k, v] : h) out += (out.empty() ? "" : " ") + std::to_string(k) + ":" +
                                        std::to_string(v);
    return out;
}

/** Per-class power structure for Fourier extraction of eigenvalue multiplicities. */
struct ClassPowers {
    long d = 1;                   // order of the class representative
    std::vector<int> pow_class;   // class index of rep^l, l in [0, d)
    std::vector<CycNum> zpow;     // zeta_d^a
};

long fourier_mult(const CharacterTable& ct, const ClassPowers& cp, size_t irrep, long a) {
    long d = cp.d;
    CycNum s;
    for (long l = 0; l < d; ++l)
        s = s + ct.chars[irrep][static_cast<size_t>(cp.pow_class[static_cast<size_t>(l)])] *
                    cp.zpow[static_cast<size_t>(((d - a % d) * l) % d)];
    Rational m = (s * CycNum::from_rational(Rational(1, d))).reduced().to_rational();
    if (denominator(m) != 1 || m < 0)
        throw std::logic_error("fourier_mult: non-integral eigenvalue multiplicity");
    return numerator(m).convert_to<long>();
}

/** Fourfold constraints on a summed multiplicity vector at one class. */
bool fourfold_ok_at_class(long d, const std::vector<long>& m) {
    // determinant one
    long detsum = 0;
    for (long a = 0; a < d; ++a) detsum += a * m[static_cast<size_t>(a)];
    if (detsum % d != 0) return false;
    // rational real characteristic polynomial: the conjugate-closed multiset
    // is invariant under the Galois action of (Z/d)*
    std::vector<long> closed(static_cast<size_t>(d));
    for (long a = 0; a < d; ++a)
        closed[static_cast<size_t>(a)] = m[static_cast<size_t>(a)] + m[static_cast<size_t>((d - a) % d)];
    for (long t = 2; t < d; ++t) {
        if (std::gcd(t, d) != 1) continue;
        for (long a = 0; a < d; ++a)
            if (closed[static_cast<size_t>(t * a % d)] != closed[static_cast<size_t>(a)]) return false;
    }
    // free in codimension 2 (covers faithfulness: all-one eigenvalues fail)
    RankedEigenvector v;
    v.d = d;
    for (long a = 0; a < d; ++a)
        for (long i = 0; i < m[static_cast<size_t>(a)]; ++i) v.exponents.push_back(a);
    return check_free_in_codim(v, 2);
}

}  // namespace

bool admits_fourfold_rep(const FiniteMatrixGroup& g, std::string* witness) {
    CharacterTable ct = character_table(g);
    int id_class = g.class_of(0);

    // only irreducibles of degree <= 4 can enter a degree-4 character
    std::vector<size_t> use;
    for (size_t i = 0; i < ct.chars.size(); ++i)
        if (ct.degrees[i] <= 4) use.push_back(i);
    size_t nu = use.size();

    std::vector<ClassPowers> cps;
    std::vector<size_t> cls;  // non-identity class indices
    for (size_t c = 0; c < ct.classes.size(); ++c) {
        if (static_cast<int>(c) == id_class) continue;
        ClassPowers cp;
        int rep = ct.classes[c].representative;
        cp.d = g.element_order_at(rep);
        int cur = 0;
        for (long l = 0; l < cp.d; ++l) {
            cp.pow_class.push_back(g.class_of(cur));
            cur = g.mult(cur, rep);
        }
        for (long a = 0; a < cp.d; ++a) cp.zpow.push_back(CycNum::zeta(cp.d, a));
        cls.push_back(c);
        cps.push_back(std::move(cp));
    }
    size_t nc = cps.size();

    // eigenvalue-1 multiplicities drive the pruning: freeness in codimension 2
    // caps them at 1, and they only grow along a combination
    std::vector<std::vector<long>> m1(nu, std::vector<long>(nc));
    for (size_t u = 0; u < nu; ++u)
        for (size_t c = 0; c < nc; ++c) m1[u][c] = fourier_mult(ct, cps[c], use[u], 0);

    // full multiplicity vectors, computed on demand per (irrep, class)
    std::vector<std::vector<std::vector<long>>> full(nu, std::vector<std::vector<long>>(nc));
    auto full_mult = [&](size_t u, size_t c) -> const std::vector<long>& {
        auto& v = full[u][c];
        if (v.empty()) {
            v.resize(static_cast<size_t>(cps[c].d));
            v[0] = m1[u][c];
            for (long a = 1; a < cps[c].d; ++a)
                v[static_cast<size_t>(a)] = fourier_mult(ct, cps[c], use[u], a);
        }
        return v;
    };

    std::vector<size_t> combo;  // indices into `use`
    std::vector<long> acc1(nc, 0);
    long candidates = 0;
    bool found = false;
    std::function<void(size_t, long)> dfs = [&](size_t from, long remaining) {
        if (found) return;
        if (remaining == 0) {
            ++candidates;
            for (size_t c = 0; c < nc; ++c) {
                std::vector<long> m(static_cast<size_t>(cps[c].d), 0);
                for (size_t u : combo) {
                    const auto& fm = full_mult(u, c);
                    for (long a = 0; a < cps[c].d; ++a) m[static_cast<size_t>(a)] += fm[static_cast<size_t>(a)];
                }
                if (!fourfold_ok_at_class(cps[c].d, m)) return;
            }
            found = true;
            if (witness) {
                std::string degs;
                for (size_t u : combo)
                    degs += (degs.empty() ? "" : "+") + std::to_string(ct.degrees[use[u]]);
                *witness = "degree-4 character found (irreducible degrees " + degs + ")";
            }
            return;
        }
        for (size_t u = from; u < nu && !found; ++u) {
            if (ct.degrees[use[u]] > remaining) continue;
            bool viable = true;
            for (size_t c = 0; c < nc; ++c) {
                acc1[c] += m1[u][c];
                if (acc1[c] > 1) viable = false;
            }
            combo.push_back(u);
            if (viable) dfs(u, remaining - ct.degrees[use[u]]);
            combo.pop_back();
            for (size_t c = 0; c < nc; ++c) acc1[c] -= m1[u][c];
        }
    };
    dfs(0, 4);
    if (!found && witness)
        *witness = "no appropriate four-dimensional character among " +
                   std::to_string(candidates) + " candidates";
    return found;
}

bool sylow_matches(const FiniteMatrixGroup& g, long p, const std::string& shape) {
    FiniteMatrixGroup s = materialize(g, sylow_subgroup(g, p));
    GroupFingerprint fp = fingerprint(s);
    bool cyclic = fp.order_histogram.count(fp.order) > 0;
    if (shape == "trivial") return fp.order == 1;
    if (shape == "cyclic") return cyclic;
    if (shape == "noncyclic") return fp.order > 1 && !cyclic;
    if (shape == "Q8")
        return fp.order == 8 && fp.order_histogram == std::map<long, long>{{1, 1}, {2, 1}, {4, 6}} &&
               fp.center_order == 2;
    if (shape == "Q16")
        return fp.order == 16 &&
               fp.order_histogram == std::map<long, long>{{1, 1}, {2, 1}, {4, 10}, {8, 4}} &&
               fp.center_order == 2;
    throw std::invalid_argument("sylow_matches: unknown shape '" + shape + "'");
}

std::string Predicate::describe() const {
    if (type == "order_divides" || type == "order_equals" || type == "max_char_degree" ||
        type == "conjugate_pair_degree")
        return type + "(" + std::to_string(n) + ")";
    if (type == "has_aut_of_order") return type + "(" + std::to_string(n) + ")";
    if (type == "sylow_isomorphic")
        return type + "(" + std::to_string(p) + ", {" + join_strings(shapes) + "})";
    if (type == "element_order_absent" || type == "element_order_present" ||
        type == "generated_by_order" || type == "flag_element_order")
        return type + "(" + join_longs(orders) + ")";
    if (type == "forbidden_char_values") {
        std::string vals;
        for (size_t i = 0; i < values.size(); ++i) vals += (i ? "," : "") + values[i].str();
        return type + "(" + vals + ")";
    }
    return type;
}

SearchSpec SearchSpec::from_json(const nlohmann::json& j) {
    SearchSpec spec;
    for (const auto& jp : j.at("predicates")) {
        Predicate p;
        p.type = jp.at("type").get<std::string>();
        if (jp.contains("n")) p.n = jp.at("n").get<long>();
        if (jp.contains("k")) p.n = jp.at("k").get<long>();
        if (jp.contains("p")) p.p = jp.at("p").get<long>();
        if (jp.contains("orders")) p.orders = jp.at("orders").get<std::vector<long>>();
        if (jp.contains("shapes")) p.shapes = jp.at("shapes").get<std::vector<std::string>>();
        if (jp.contains("values"))
            for (const auto& v : jp.at("values"))
                p.values.push_back(parse_cyc_value(v.get<std::string>()));
        for (long o : p.orders)
            if (o <= 0) throw std::invalid_argument("SearchSpec: parameters must be positive");
        bool needs_n = p.type == "order_divides" || p.type == "order_equals" ||
                       p.type == "has_aut_of_order" || p.type == "max_char_degree" ||
                       p.type == "conjugate_pair_degree";
        bool needs_orders = p.type == "element_order_absent" ||
                            p.type == "element_order_present" ||
                            p.type == "generated_by_order" || p.type == "flag_element_order";
        if (needs_n) {
            if (p.n <= 0) throw std::invalid_argument("SearchSpec: parameters must be positive");
        } else if (needs_orders) {
            if (p.orders.empty())
                throw std::invalid_argument("SearchSpec: " + p.type + " needs orders");
        } else if (p.type == "sylow_isomorphic") {
            if (p.p <= 0 || p.shapes.empty())
                throw std::invalid_argument("SearchSpec: sylow_isomorphic needs p and shapes");
        } else if (p.type == "forbidden_char_values") {
            if (p.values.empty())
                throw std::invalid_argument("SearchSpec: forbidden_char_values needs values");
        } else if (p.type != "at_most_one_order2" && p.type != "admits_fourfold_rep") {
            throw std::invalid_argument("SearchSpec: unknown predicate '" + p.type + "'");
        }
        spec.predicates.push_back(std::move(p));
    }
    if (spec.predicates.empty())
        throw std::invalid_argument("SearchSpec: at least one predicate required");
    return spec;
}

namespace {

PredicateOutcome evaluate(const Predicate& p, const FiniteMatrixGroup& g,
                          std::vector<std::string>& flags) {
    PredicateOutcome out;
    out.predicate = p.describe();
    auto orders_present = [&] {
        std::map<long, long> h;
        for (long i = 0; i < g.order(); ++i) ++h[g.element_order_at(static_cast<int>(i))];
        return h;
    };
    if (p.type == "order_divides") {
        out.passed = p.n % g.order() == 0;
        out.witness = "order " + std::to_string(g.order());
    } else if (p.type == "order_equals") {
        out.passed = g.order() == p.n;
        out.witness = "order " + std::to_string(g.order());
    } else if (p.type == "element_order_absent") {
        auto h = orders_present();
        std::vector<long> found;
        for (long k : p.orders)
            if (h.count(k)) found.push_back(k);
        out.passed = found.empty();
        out.witness = found.empty() ? "no element of order " + join_longs(p.orders)
                                    : "element of order " + join_longs(found) + " present";
    } else if (p.type == "element_order_present") {
        auto h = orders_present();
        std::vector<long> missing;
        for (long k : p.orders)
            if (!h.count(k)) missing.push_back(k);
        out.passed = missing.empty();
        out.witness = missing.empty() ? "all orders " + join_longs(p.orders) + " present"
                                      : "no element of order " + join_longs(missing);
    } else if (p.type == "at_most_one_order2") {
        long c = fingerprint(g).order2_count;
        out.passed = c <= 1;
        out.witness = std::to_string(c) + " element(s) of order 2";
    } else if (p.type == "sylow_isomorphic") {
        out.passed = std::any_of(p.shapes.begin(), p.shapes.end(),
                                 [&](const std::string& s) { return sylow_matches(g, p.p, s); });
        FiniteMatrixGroup s = materialize(g, sylow_subgroup(g, p.p));
        out.witness = std::to_string(p.p) + "-Sylow of order " + std::to_string(s.order()) +
                      ", order histogram " + histogram_str(fingerprint(s).order_histogram);
    } else if (p.type == "generated_by_order") {
        std::vector<int> seed;
        for (long i = 0; i < g.order(); ++i)
            if (std::find(p.orders.begin(), p.orders.end(),
                          g.element_order_at(static_cast<int>(i))) != p.orders.end())
                seed.push_back(static_cast<int>(i));
        auto sub = subgroup_closure(g, seed);
        out.passed = static_cast<long>(sub.size()) == g.order();
        out.witness = std::to_string(seed.size()) + " element(s) of order " +
                      join_longs(p.orders) + " generate a subgroup of order " +
                      std::to_string(sub.size());
    } else if (p.type == "has_aut_of_order") {
        out.passed = has_automorphism_of_order(g, p.n);
        out.witness = out.passed ? "automorphism of order " + std::to_string(p.n) + " found"
                                 : "no automorphism of order " + std::to_string(p.n);
    } else if (p.type == "max_char_degree") {
        CharacterTable ct = character_table(g);
        long mx = *std::max_element(ct.degrees.begin(), ct.degrees.end());
        out.passed = mx <= p.n;
        out.witness = "largest irreducible degree " + std::to_string(mx);
    } else if (p.type == "forbidden_char_values") {
        CharacterTable ct = character_table(g);
        out.passed = true;
        out.witness = "no forbidden character value";
        for (const auto& row : ct.chars)
            for (const auto& v : row)
                for (const auto& bad : p.values)
                    if (v == bad) {
                        out.passed = false;
                        out.witness = "character value " + bad.str() + " occurs";
                    }
    } else if (p.type == "conjugate_pair_degree") {
        CharacterTable ct = character_table(g);
        // degree-n irreducibles sending every central order-2 element to -identity
        std::vector<int> z;
        for (size_t c = 0; c < ct.classes.size(); ++c)
            if (ct.class_sizes[c] == 1 &&
                g.element_order_at(ct.classes[c].representative) == 2)
                z.push_back(static_cast<int>(c));
        std::vector<size_t> sel;
        for (size_t i = 0; i < ct.chars.size(); ++i) {
            if (ct.degrees[i] != p.n) continue;
            bool all = !z.empty();
            for (int c : z)
                if (ct.chars[i][static_cast<size_t>(c)] != CycNum::from_rational(Rational(-p.n)))
                    all = false;
            if (all) sel.push_back(i);
        }
        bool pair = sel.size() == 2;
        if (pair) {
            long cond = 1;
            for (const auto& row : ct.chars)
                for (const auto& v : row) cond = std::lcm(cond, v.reduced().conductor());
            bool related = false;
            for (long t = 2; t < cond && !related; ++t) {
                if (std::gcd(t, cond) != 1) continue;
                bool all = true;
                for (size_t c = 0; c < ct.classes.size() && all; ++c)
                    if (ct.chars[sel[0]][c].embedded(cond).galois(t) !=
                        ct.chars[sel[1]][c].embedded(cond))
                        all = false;
                related = all;
            }
            pair = related;
        }
        out.passed = pair;
        out.witness = std::to_string(sel.size()) + " degree-" + std::to_string(p.n) +
                      " character(s) send the central involution to -identity" +
                      (pair ? ", Galois-conjugate pair" : "");
    } else if (p.type == "admits_fourfold_rep") {
        out.passed = admits_fourfold_rep(g, &out.witness);
    } else if (p.type == "flag_element_order") {
        out.passed = true;
        auto h = orders_present();
        std::vector<long> found;
        for (long k : p.orders)
            if (h.count(k)) found.push_back(k);
        out.witness = found.empty() ? "no flagged element order"
                                    : "flagged: element of order " + join_longs(found) + " present";
        for (long k : found) flags.push_back("element of order " + std::to_string(k) + " present");
    } else {
        throw std::invalid_argument("run_search: unknown predicate '" + p.type + "'");
    }
    return out;
}

}  // namespace

std::vector<SearchOutcome> run_search(const std::vector<CatalogEntry>& catalog,
                                      const SearchSpec& spec, long cap) {
    std::vector<SearchOutcome> out;
    for (const auto& e : catalog) {
        SearchOutcome o;
        o.entry = e.name;
        try {
            const FiniteMatrixGroup& g = cached_closure(e, cap);
            o.matched = true;
            for (const auto& p : spec.predicates) {
                PredicateOutcome po;
                try {
                    po = evaluate(p, g, o.flags);
                } catch (const std::exception& ex) {
                    po.predicate = p.describe();
                    po.passed = false;
                    po.witness = std::string("evaluation failed: ") + ex.what();
                }
                if (!po.passed) o.matched = false;
                o.outcomes.push_back(std::move(po));
            }
        } catch (const std::exception& ex) {
            o.error = ex.what();
            o.matched = false;
        }
        out.push_back(std::move(o));
    }
    std::sort(out.begin(), out.end(),
              [](const SearchOutcome& a, const SearchOutcome& b) { return a.entry < b.entry; });
    return out;
}

std::vector<std::string> matched_names(const std::vector<SearchOutcome>& outcomes) {
    std::vector<std::string> names;
    for (const auto& o : outcomes)
        if (o.matched) names.push_back(o.entry);
    return names;
}

nlohmann::json outcome_to_json(const SearchOutcome& o) {
    nlohmann::json preds = nlohmann::json::array();
    for (const auto& p : o.outcomes)
        preds.push_back({{"predicate", p.predicate}, {"passed", p.passed}, {"witness", p.witness}});
    return {{"entry", o.entry}, {"matched", o.matched}, {"error", o.error},
            {"predicates", preds},  {"flags", o.flags}};
}

}  // namespace crepant
