#include "crepant/juniorenum.hpp"

#include "crepant/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace crepant {

int ExpMultiset::size() const {
    int n = 0;
    for (const auto& [a, m] : entries) n += m;
    return n;
}

void ExpMultiset::add(long a, int mult) {
    a %= d;
    if (a < 0) a += d;
    entries[a] += mult;
}

ExpMultiset negate_mod(const ExpMultiset& A) {
    ExpMultiset out;
    out.d = A.d;
    for (const auto& [a, m] : A.entries) out.add((A.d - a) % A.d, m);
    return out;
}

ExpMultiset multiset_union(const ExpMultiset& A, const ExpMultiset& B) {
    if (A.d != B.d) throw std::invalid_argument("multiset_union: mismatched moduli");
    ExpMultiset out = A;
    for (const auto& [a, m] : B.entries) out.add(a, m);
    return out;
}

ExpMultiset conjugate_closure(const ExpMultiset& A) {
    ExpMultiset out = A;
    for (const auto& [a, m] : A.entries) {
        long b = (A.d - a) % A.d;
        if (b != a) out.add(b, m);
    }
    return out;
}

Rational age(const RankedEigenvector& v) {
    Int sum = 0;
    for (long a : v.exponents) sum += a;
    return Rational(sum, Int(v.d));
}

bool is_junior(const RankedEigenvector& v) { return age(v) == Rational(1); }

RankedEigenvector inverse(const RankedEigenvector& v) {
    RankedEigenvector out;
    out.d = v.d;
    for (long a : v.exponents) out.exponents.push_back((v.d - a) % v.d);
    std::sort(out.exponents.begin(), out.exponents.end());
    return out;
}

std::vector<long> solve_phi_inequality() {
    // Bound prime-power factors: (p-1)^2 p^(a-2) <= 8 forces p in {2,3,5,7}
    // with exponents at most 4, 2, 1, 1; then filter by the inequality itself.
    std::vector<long> out;
    for (long a2 = 1; a2 <= 16; a2 *= 2)
        for (long a3 = 1; a3 <= 9; a3 *= 3)
            for (long a5 = 1; a5 <= 5; a5 *= 5)
                for (long a7 = 1; a7 <= 7; a7 *= 7) {
                    long u = a2 * a3 * a5 * a7;
                    if (u < 3) continue;
                    long p = euler_phi(u);
                    bool ok = (u % 2 == 1) ? (p * p <= 8 * u) : (p * p <= 4 * u);
                    if (ok) out.push_back(u);
                }
    std::sort(out.begin(), out.end());
    return out;
}

Rational s_value(const ExpMultiset& A, long d, long u) {
    if (u < 2 || d < 3 || d % u != 0 || A.d != d)
        throw std::invalid_argument("s_value: bad (A, d, u)");
    Rational s = 0;
    for (const auto& [a, m] : A.entries) {
        long g = std::gcd(a, d);
        if (a == 0 || d / g != u) throw std::invalid_argument("s_value: entry of wrong order");
        s += Rational(Int(a) * m, Int(u) * g);
    }
    return s;
}

namespace {

// All blocks for a fixed u (residues taken at the minimal modulus d = u),
// ordered by alpha then block lexicographically.
std::vector<BlockRow> blocks_for_u(long u) {
    std::vector<BlockRow> out;
    if (u == 2) {
        for (int alpha = 1; alpha <= 2; ++alpha) {
            BlockRow r;
            r.u = 2;
            r.alpha = alpha;
            r.block.assign(alpha, Rational(1, 2));
            r.s = Rational(alpha, 2);
            out.push_back(std::move(r));
        }
        return out;
    }
    std::vector<long> small;  // one representative per conjugate pair
    for (long l = 1; 2 * l < u; ++l)
        if (std::gcd(l, u) == 1) small.push_back(l);
    long sigma = std::accumulate(small.begin(), small.end(), 0L);
    for (int alpha = 1; (long)alpha * sigma <= u; ++alpha) {
        std::vector<BlockRow> rows;
        std::vector<int> pick(small.size());  // copies of the small residue per pair
        auto rec = [&](auto&& self, size_t i, long total) -> void {
            if (total > u) return;
            if (i == small.size()) {
                BlockRow r;
                r.u = u;
                r.alpha = alpha;
                for (size_t k = 0; k < small.size(); ++k) {
                    for (int t = 0; t < pick[k]; ++t) r.block.push_back(Rational(small[k], u));
                    for (int t = pick[k]; t < alpha; ++t) r.block.push_back(Rational(u - small[k], u));
                }
                std::sort(r.block.begin(), r.block.end());
                r.s = Rational(total, u);
                rows.push_back(std::move(r));
                return;
            }
            for (int j = alpha; j >= 0; --j) {
                pick[i] = j;
                self(self, i + 1, total + j * small[i] + (long)(alpha - j) * (u - small[i]));
            }
        };
        rec(rec, 0, 0);
        std::sort(rows.begin(), rows.end(), [](const BlockRow& a, const BlockRow& b) {
            return a.block < b.block;
        });
        out.insert(out.end(), rows.begin(), rows.end());
    }
    return out;
}

}  // namespace

std::vector<BlockRow> enumerate_blocks() {
    std::vector<long> us = {2};
    for (long u : solve_phi_inequality()) us.push_back(u);
    std::vector<BlockRow> out;
    for (long u : us) {
        auto rows = blocks_for_u(u);
        out.insert(out.end(), rows.begin(), rows.end());
    }
    return out;
}

namespace {

// Exponents of the realized eigenvector tail at d = lcm of denominators.
std::pair<long, std::vector<long>> realize_tail(const std::vector<BlockRow>& rows) {
    long d = 1;
    for (const auto& r : rows)
        for (const auto& f : r.block) d = std::lcm(d, (long)denominator(f).convert_to<long>());
    std::vector<long> tail;
    for (const auto& r : rows)
        for (const auto& f : r.block)
            tail.push_back((numerator(f) * (d / denominator(f).convert_to<long>())).convert_to<long>());
    std::sort(tail.begin(), tail.end());
    return {d, tail};
}

}  // namespace

bool check_free_in_codim(const RankedEigenvector& v, int c) {
    for (long l = 1; l < v.d; ++l) {
        int moved = 0;
        for (long a : v.exponents)
            if ((l * a) % v.d != 0) ++moved;
        if (moved < c + 1) return false;
    }
    return true;
}

std::vector<PartitionRow> enumerate_partitions() {
    std::vector<long> us = {2};
    for (long u : solve_phi_inequality()) us.push_back(u);
    std::vector<std::vector<BlockRow>> groups;
    for (long u : us) {
        auto rows = blocks_for_u(u);
        if (!rows.empty()) groups.push_back(std::move(rows));
    }
    std::vector<PartitionRow> out;
    std::vector<BlockRow> chosen;
    auto rec = [&](auto&& self, size_t i, Rational total) -> void {
        if (total == Rational(1) && !chosen.empty()) {
            PartitionRow p;
            p.rows = chosen;
            auto [d, tail] = realize_tail(chosen);
            p.free_codim2 = check_free_in_codim({d, tail}, 2);
            out.push_back(std::move(p));
            return;  // any extension overshoots S = 1
        }
        for (size_t g = i; g < groups.size(); ++g)
            for (const auto& r : groups[g]) {
                if (total + r.s > Rational(1)) continue;
                chosen.push_back(r);
                self(self, g + 1, total + r.s);
                chosen.pop_back();
            }
    };
    rec(rec, 0, Rational(0));
    std::sort(out.begin(), out.end(), [](const PartitionRow& a, const PartitionRow& b) {
        std::vector<long> ua, ub;
        std::vector<int> aa, ab;
        for (const auto& r : a.rows) ua.push_back(r.u), aa.push_back(r.alpha);
        for (const auto& r : b.rows) ub.push_back(r.u), ab.push_back(r.alpha);
        if (ua != ub) return ua < ub;
        if (aa != ab) return aa < ab;
        std::vector<std::vector<Rational>> ba, bb;
        for (const auto& r : a.rows) ba.push_back(r.block);
        for (const auto& r : b.rows) bb.push_back(r.block);
        return ba < bb;
    });
    return out;
}

std::vector<JuniorType> classify_junior_types(int n) {
    if (n < 1) throw std::invalid_argument("classify_junior_types: n must be positive");
    std::vector<JuniorType> out;
    for (const auto& p : enumerate_partitions()) {
        if (!p.free_codim2) continue;
        auto [d, tail] = realize_tail(p.rows);
        if (d < 3) continue;
        if ((int)tail.size() > n) continue;
        out.push_back({d, tail});
    }
    std::sort(out.begin(), out.end(), [](const JuniorType& a, const JuniorType& b) {
        if (a.d != b.d) return a.d < b.d;
        if (a.tail.size() != b.tail.size()) return a.tail.size() < b.tail.size();
        return a.tail < b.tail;
    });
    return out;
}

namespace {

// Candidate orders: lcm over multisets of u with phi(u) <= 8 summing to 8
// (the degree-8 real characteristic polynomial is a product of cyclotomics).
std::set<long> fourfold_candidate_orders() {
    const std::vector<long> us = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 14, 15, 16, 18, 20, 24, 30};
    std::set<long> out;
    auto rec = [&](auto&& self, size_t i, long deg, long l) -> void {
        if (deg == 8) {
            out.insert(l);
            return;
        }
        for (size_t k = i; k < us.size(); ++k) {
            long p = euler_phi(us[k]);
            if (deg + p <= 8) self(self, k, deg + p, std::lcm(l, us[k]));
        }
    };
    rec(rec, 0, 0, 1);
    return out;
}

// The real eigenvalue multiset {a_i, -a_i} is Galois-stable, i.e. the
// degree-8 characteristic polynomial over Q is a product of cyclotomics.
bool rational_real_charpoly(const std::vector<long>& a, long d) {
    std::vector<int> cnt(d, 0);
    for (long x : a) {
        ++cnt[x % d];
        ++cnt[(d - x % d) % d];
    }
    for (long k = 2; k < d; ++k) {
        if (std::gcd(k, d) != 1) continue;
        for (long x = 0; x < d; ++x)
            if (cnt[x] != 0 && cnt[(k * x) % d] != cnt[x]) return false;
    }
    return true;
}

const std::map<std::pair<long, std::vector<long>>, std::string>& fourfold_tags() {
    static const std::map<std::pair<long, std::vector<long>>, std::string> tags = {
        {{3, {0, 1, 1, 1}}, "ExEj3"},     {{6, {1, 1, 1, 3}}, "ExEj3"},
        {{9, {1, 4, 6, 7}}, "Ej4"},       {{18, {1, 7, 13, 15}}, "Ej4"},
        {{4, {1, 1, 1, 1}}, "Ei4"},       {{12, {1, 1, 5, 5}}, "Ei4"},
        {{20, {1, 9, 13, 17}}, "Ei4"},    {{7, {0, 1, 2, 4}}, "ExEu7_3"},
        {{14, {1, 7, 9, 11}}, "ExEu7_3"}, {{8, {1, 1, 3, 3}}, "Eu8_4"},
        {{24, {1, 11, 17, 19}}, "Eu8_4"}, {{15, {1, 2, 4, 8}}, "Eu15_4"},
        {{30, {1, 17, 19, 23}}, "Eu15_4"}, {{16, {1, 3, 5, 7}}, "Su16v16_2"},
        {{16, {1, 7, 11, 13}}, "Su16v16_2"}, {{20, {1, 3, 7, 9}}, "Eu20_4"},
        {{24, {1, 5, 7, 11}}, "Eu24_4"},
    };
    return tags;
}

}  // namespace

std::vector<FourfoldElementClass> classify_fourfold_elements() {
    std::vector<FourfoldElementClass> out;
    for (long d : fourfold_candidate_orders()) {
        std::set<std::vector<long>> reps;
        std::vector<long> a(4);
        for (a[0] = 0; a[0] < d; ++a[0])
            for (a[1] = a[0]; a[1] < d; ++a[1])
                for (a[2] = a[1]; a[2] < d; ++a[2])
                    for (a[3] = a[2]; a[3] < d; ++a[3]) {
                        if ((a[0] + a[1] + a[2] + a[3]) % d != 0) continue;
                        long order = 1;
                        for (long x : a) order = std::lcm(order, d / std::gcd(x, d));
                        if (order != d) continue;
                        if (!rational_real_charpoly(a, d)) continue;
                        if (!check_free_in_codim({d, a}, 2)) continue;
                        std::vector<long> b(4);
                        for (int i = 0; i < 4; ++i) b[i] = (d - a[i]) % d;
                        std::sort(b.begin(), b.end());
                        reps.insert(std::min(a, b));
                    }
        for (const auto& rep : reps) {
            FourfoldElementClass c;
            c.order = d;
            c.exponents = rep;
            long sum = rep[0] + rep[1] + rep[2] + rep[3];
            c.junior = (sum == d);
            std::vector<long> inv(4);
            for (int i = 0; i < 4; ++i) inv[i] = (d - rep[i]) % d;
            std::sort(inv.begin(), inv.end());
            if (inv == rep) {
                c.isogeny_tag = "arbitrary";
            } else {
                auto it = fourfold_tags().find({d, rep});
                if (it == fourfold_tags().end())
                    throw std::logic_error("classify_fourfold_elements: unclassified spectrum");
                c.isogeny_tag = it->second;
            }
            out.push_back(std::move(c));
        }
    }
    std::sort(out.begin(), out.end(), [](const FourfoldElementClass& x, const FourfoldElementClass& y) {
        if (x.order != y.order) return x.order < y.order;
        return x.exponents < y.exponents;
    });
    return out;
}

}  // namespace crepant
