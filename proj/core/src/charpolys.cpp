#include "crepant/charpolys.hpp"

#include "crepant/cyclotomic.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace crepant {

namespace {

struct FieldData {
    long f;                 // conductor of the quadratic field
    std::vector<long> fix;  // residues mod f fixing the generator
};

FieldData field_data(CoeffField field) {
    switch (field) {
        case CoeffField::Qj: return {3, {1}};
        case CoeffField::Qu7: return {7, {1, 2, 4}};
    }
    throw std::invalid_argument("admissible_charpolys: unsupported field");
}

struct Factor {
    long u;                  // common order of the roots
    std::vector<long> exps;  // exponents a of the roots zeta_u^a, sorted
    CycPoly poly;
};

// Galois orbits of primitive u-th roots of unity over the field, for every
// u whose orbits have size at most maxdeg.
std::vector<Factor> field_factors(const FieldData& fd, int maxdeg) {
    std::vector<Factor> out;
    out.push_back({1, {0}, CycPoly::x_minus(CycNum::from_rational(1))});
    for (long u = 2; u <= 100; ++u) {
        if (euler_phi(u) > 2L * maxdeg) continue;
        long L = std::lcm(u, fd.f);
        // image in (Z/u)* of the subgroup of (Z/L)* fixing the field
        std::set<long> ks;
        for (long k = 1; k < L; ++k) {
            if (std::gcd(k, L) != 1) continue;
            if (std::find(fd.fix.begin(), fd.fix.end(), k % fd.f) == fd.fix.end()) continue;
            ks.insert(k % u);
        }
        std::vector<bool> seen(u, false);
        for (long a = 1; a < u; ++a) {
            if (seen[a] || std::gcd(a, u) != 1) continue;
            std::vector<long> orbit;
            for (long k : ks) {
                long b = (a * k) % u;
                if (!seen[b]) {
                    seen[b] = true;
                    orbit.push_back(b);
                }
            }
            if ((int)orbit.size() > maxdeg) continue;
            std::sort(orbit.begin(), orbit.end());
            CycPoly p = CycPoly::constant(CycNum::from_rational(1));
            for (long b : orbit) p = p * CycPoly::x_minus(CycNum::zeta(u, b));
            out.push_back({u, orbit, std::move(p)});
        }
    }
    return out;
}

struct RootSet {
    std::vector<std::pair<long, long>> roots;  // (u, a) with multiplicity

    long order() const {
        long l = 1;
        for (const auto& [u, a] : roots) l = std::lcm(l, u);
        return l;
    }
    bool det_one() const {
        long D = order();
        long s = 0;
        for (const auto& [u, a] : roots) s = (s + a * (D / u)) % D;
        return s == 0;
    }
    int mult_of(long u, long a) const {
        int n = 0;
        for (const auto& r : roots)
            if (r.first == u && r.second == a % u) ++n;
        return n;
    }
};

// 1 in the spectrum, or the spectrum is a power of the field's junior tail.
bool eigenvalue_one_ok(const RootSet& rs, const FieldData& fd) {
    if (rs.mult_of(1, 0) > 0) return true;
    std::multiset<long> exps;
    for (const auto& [u, a] : rs.roots) {
        if (u != fd.f) return false;
        exps.insert(a);
    }
    std::multiset<long> tail = (fd.f == 7) ? std::multiset<long>{1, 2, 4}
                                           : std::multiset<long>{1, 1, 1};
    for (long k = 1; k < fd.f; ++k) {
        if (std::gcd(k, fd.f) != 1) continue;
        std::multiset<long> powed;
        for (long t : tail) powed.insert((t * k) % fd.f);
        if (powed == exps) return true;
    }
    return false;
}

}  // namespace

std::vector<CycPoly> admissible_charpolys(int m, CoeffField field,
                                          const CharpolyConstraints& constraints) {
    if (m < 1 || m > 8) throw std::invalid_argument("admissible_charpolys: bad dimension");
    FieldData fd = field_data(field);
    std::vector<Factor> factors = field_factors(fd, m);
    std::vector<std::pair<std::vector<size_t>, CycPoly>> found;
    std::vector<size_t> chosen;
    auto rec = [&](auto&& self, size_t i, int deg) -> void {
        if (deg == m) {
            RootSet rs;
            for (size_t idx : chosen)
                for (long a : factors[idx].exps) rs.roots.push_back({factors[idx].u, a});
            if (constraints.order && rs.order() != *constraints.order) return;
            if (constraints.det_one && !rs.det_one()) return;
            if (constraints.needs_eigenvalue_one) {
                if (!eigenvalue_one_ok(rs, fd)) return;
                if (field == CoeffField::Qj) {
                    // common-eigenspace constraint: an eigenvalue in
                    // {1, j, j^2} must have multiplicity at least two
                    if (rs.mult_of(1, 0) < 2 && rs.mult_of(3, 1) < 2 && rs.mult_of(3, 2) < 2)
                        return;
                }
            }
            CycPoly p = CycPoly::constant(CycNum::from_rational(1));
            for (size_t idx : chosen) p = p * factors[idx].poly;
            found.push_back({chosen, std::move(p)});
            return;
        }
        for (size_t k = i; k < factors.size(); ++k) {
            int fdeg = (int)factors[k].exps.size();
            if (deg + fdeg > m) continue;
            chosen.push_back(k);
            self(self, k, deg + fdeg);
            chosen.pop_back();
        }
    };
    rec(rec, 0, 0);
    std::sort(found.begin(), found.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<CycPoly> out;
    out.reserve(found.size());
    for (auto& [ids, p] : found) out.push_back(std::move(p));
    return out;
}

}  // namespace crepant
