#include "crepant/cyclotomic.hpp"

#include <mutex>
#include <stdexcept>

namespace crepant {

long euler_phi(long n) {
    if (n < 1) throw std::invalid_argument("euler_phi: n must be >= 1");
    long result = n;
    long m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

namespace {
std::map<long, IntPoly> g_cyclo_cache;
std::mutex g_cyclo_mutex;

IntPoly compute_cyclotomic(long n) {
    // Phi_n = (X^n - 1) / prod_{d | n, d < n} Phi_d
    std::vector<Int> xn(n + 1);
    xn[0] = -1;
    xn[n] = 1;
    IntPoly p{std::move(xn)};
    for (long d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        auto q = p.divide_exact(cyclotomic_poly(d));
        if (!q) throw std::logic_error("cyclotomic recursion: inexact division");
        p = *q;
    }
    return p;
}
}  // namespace

const IntPoly& cyclotomic_poly(long n) {
    if (n < 1) throw std::invalid_argument("cyclotomic_poly: n must be >= 1");
    {
        std::lock_guard<std::mutex> lock(g_cyclo_mutex);
        auto it = g_cyclo_cache.find(n);
        if (it != g_cyclo_cache.end()) return it->second;
    }
    IntPoly p = compute_cyclotomic(n);
    std::lock_guard<std::mutex> lock(g_cyclo_mutex);
    return g_cyclo_cache.emplace(n, std::move(p)).first->second;
}

std::optional<std::map<long, int>> factor_into_cyclotomics(const IntPoly& p) {
    if (p.is_zero() || !p.is_monic()) throw std::invalid_argument("factor_into_cyclotomics: polynomial must be monic");
    // phi(d) >= sqrt(d/2), so any cyclotomic factor of degree <= deg has d <= 2 deg^2.
    int deg = p.degree();
    std::vector<std::pair<long, long>> candidates;  // (phi(d), d)
    for (long d = 1; d <= 2L * deg * deg + 1; ++d) {
        long ph = euler_phi(d);
        if (ph <= deg) candidates.emplace_back(ph, d);
    }
    // Largest degree first; order does not affect the outcome (unique
    // factorization over Z[X]) but large factors shrink the problem fastest.
    std::sort(candidates.begin(), candidates.end(),
              [](const auto& a, const auto& b) { return a > b; });
    IntPoly rem = p;
    std::map<long, int> result;
    for (const auto& [ph, d] : candidates) {
        if (ph > rem.degree()) continue;
        const IntPoly& phi_d = cyclotomic_poly(d);
        while (true) {
            auto q = rem.divide_exact(phi_d);
            if (!q) break;
            rem = *q;
            result[d] += 1;
        }
    }
    if (rem.degree() != 0) return std::nullopt;
    return result;
}

}  // namespace crepant
