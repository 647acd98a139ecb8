#include "crepant/chartable.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace crepant {

namespace {

using i64 = long long;

i64 powmod(i64 b, i64 e, i64 p) {
    b %= p;
    if (b < 0) b += p;
    i64 r = 1;
    while (e > 0) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

i64 invmod(i64 a, i64 p) { return powmod(a, p - 2, p); }

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/** Smallest prime p = 1 (mod e) with p > bound. */
long dixon_prime(long e, long bound) {
    for (long p = e + 1;; p += e)
        if (p > bound && is_prime(p)) return p;
}

i64 primitive_root(i64 p) {
    std::vector<i64> primes;
    i64 m = p - 1;
    for (i64 d = 2; d * d <= m; ++d)
        if (m % d == 0) {
            primes.push_back(d);
            while (m % d == 0) m /= d;
        }
    if (m > 1) primes.push_back(m);
    for (i64 g = 2;; ++g) {
        bool ok = true;
        for (i64 q : primes)
            if (powmod(g, (p - 1) / q, p) == 1) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
}

/**
 * Null-space basis of the k x m matrix a over F_p (coefficient vectors in
 * F_p^m with a c = 0).
 */
std::vector<std::vector<i64>> nullspace(std::vector<std::vector<i64>> a, int m, i64 p) {
    int rows = static_cast<int>(a.size());
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < m && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (a[i][c] % p != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[r], a[piv]);
        i64 s = invmod(a[r][c], p);
        for (int j = c; j < m; ++j) a[r][j] = a[r][j] * s % p;
        for (int i = 0; i < rows; ++i) {
            if (i == r || a[i][c] % p == 0) continue;
            i64 f = a[i][c];
            for (int j = c; j < m; ++j) a[i][j] = ((a[i][j] - f * a[r][j]) % p + p) % p;
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<std::vector<i64>> basis;
    std::vector<bool> is_pivot(m, false);
    for (int c : pivot_col) is_pivot[c] = true;
    for (int c = 0; c < m; ++c) {
        if (is_pivot[c]) continue;
        std::vector<i64> v(m, 0);
        v[c] = 1;
        for (int i = 0; i < static_cast<int>(pivot_col.size()); ++i)
            v[pivot_col[i]] = (p - a[i][c] % p) % p;
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace

CharacterTable character_table(const FiniteMatrixGroup& g, long cap) {
    if (g.order() > cap) throw std::runtime_error("character_table: cap exceeded");
    long n = g.order();
    const auto& classes = g.classes();
    int k = static_cast<int>(classes.size());

    CharacterTable table;
    table.classes = classes;
    for (const auto& c : classes) table.class_sizes.push_back(static_cast<long>(c.members.size()));
    std::vector<int> reps(k);
    for (int r = 0; r < k; ++r) reps[r] = classes[r].representative;
    for (int r = 0; r < k; ++r) table.inverse_class.push_back(g.class_of(g.inv(reps[r])));
    int id_class = g.class_of(0);

    long e = 1;
    for (long i = 0; i < n; ++i) e = std::lcm(e, g.element_order_at(i));
    i64 p = dixon_prime(e, static_cast<long>(2.0 * std::sqrt(static_cast<double>(n))) + 1);
    i64 z = powmod(primitive_root(p), (p - 1) / e, p);  // primitive e-th root mod p

    // class-constant matrices: (M_r)_{st} = #{x in C_r : x^-1 z_t in C_s}
    std::vector<std::vector<std::vector<i64>>> M(
        k, std::vector<std::vector<i64>>(k, std::vector<i64>(k, 0)));
    for (int r = 0; r < k; ++r)
        for (int x : classes[r].members) {
            int xi = g.inv(x);
            for (int t = 0; t < k; ++t) ++M[r][g.class_of(g.mult(xi, reps[t]))][t];
        }

    // split F_p^k into the common eigenvectors of all M_r
    std::vector<std::vector<std::vector<i64>>> spaces;  // each: list of basis vectors in F_p^k
    {
        std::vector<std::vector<i64>> full;
        for (int i = 0; i < k; ++i) {
            std::vector<i64> v(k, 0);
            v[i] = 1;
            full.push_back(std::move(v));
        }
        spaces.push_back(std::move(full));
    }
    for (int r = 0; r < k; ++r) {
        bool all_split = true;
        for (const auto& s : spaces)
            if (s.size() > 1) all_split = false;
        if (all_split) break;
        std::vector<std::vector<std::vector<i64>>> next;
        for (auto& space : spaces) {
            int m = static_cast<int>(space.size());
            if (m == 1) {
                next.push_back(std::move(space));
                continue;
            }
            int found = 0;
            for (i64 lam = 0; lam < p && found < m; ++lam) {
                // kernel of (M_r - lam) restricted to the space
                std::vector<std::vector<i64>> a(k, std::vector<i64>(m, 0));
                for (int c = 0; c < m; ++c)
                    for (int i = 0; i < k; ++i) {
                        i64 s = 0;
                        for (int j = 0; j < k; ++j) s = (s + M[r][i][j] * space[c][j]) % p;
                        s = (s - lam * space[c][i]) % p;
                        a[i][c] = (s + p) % p;
                    }
                auto null = nullspace(std::move(a), m, p);
                if (null.empty()) continue;
                std::vector<std::vector<i64>> sub;
                for (const auto& coef : null) {
                    std::vector<i64> v(k, 0);
                    for (int c = 0; c < m; ++c)
                        for (int i = 0; i < k; ++i) v[i] = (v[i] + coef[c] * space[c][i]) % p;
                    sub.push_back(std::move(v));
                }
                found += static_cast<int>(sub.size());
                next.push_back(std::move(sub));
            }
            if (found != m) throw std::logic_error("character_table: class matrix not split");
        }
        spaces = std::move(next);
    }
    for (const auto& s : spaces)
        if (s.size() != 1) throw std::logic_error("character_table: common eigenvectors not found");

    // powers of each class representative, by class index
    std::vector<std::vector<int>> pow_class(k, std::vector<int>(e));
    for (int r = 0; r < k; ++r) {
        int x = 0;
        for (long l = 0; l < e; ++l) {
            pow_class[r][l] = g.class_of(x);
            x = g.mult(x, reps[r]);
        }
    }

    i64 inv_e = invmod(e % p, p);
    std::vector<std::pair<std::pair<long, std::vector<std::string>>, std::vector<CycNum>>> rows;
    long degree_square_sum = 0;
    for (const auto& space : spaces) {
        std::vector<i64> w = space[0];
        i64 norm = invmod(w[id_class], p);
        for (auto& x : w) x = x * norm % p;
        i64 s = 0;
        for (int r = 0; r < k; ++r)
            s = (s + w[r] * w[table.inverse_class[r]] % p * invmod(table.class_sizes[r] % p, p)) % p;
        i64 dsq = (n % p) * invmod(s, p) % p;
        long d = 0;
        for (long c = 1; c * c <= n; ++c)
            if (c * c % p == dsq) {
                d = c;
                break;
            }
        if (d == 0) throw std::logic_error("character_table: degree not recovered");
        degree_square_sum += d * d;

        std::vector<i64> chi(k);
        for (int r = 0; r < k; ++r)
            chi[r] = (d % p) * w[r] % p * invmod(table.class_sizes[r] % p, p) % p;

        // lift via eigenvalue multiplicities m_j of zeta_e^j
        std::vector<CycNum> values(k);
        for (int r = 0; r < k; ++r) {
            CycNum val;
            long total = 0;
            for (long j = 0; j < e; ++j) {
                i64 m = 0;
                for (long l = 0; l < e; ++l)
                    m = (m + chi[pow_class[r][l]] * powmod(z, (e - j * l % e) % e, p)) % p;
                m = m * inv_e % p;
                if (m == 0) continue;
                if (m > d) throw std::logic_error("character_table: lift out of range");
                total += m;
                val = val + CycNum::from_rational(Rational(static_cast<long>(m))) *
                                CycNum::zeta(e, j);
            }
            if (total != d) throw std::logic_error("character_table: lift multiplicities bad");
            values[r] = val.reduced();
        }
        std::vector<std::string> keys;
        for (const auto& v : values) keys.push_back(v.key());
        rows.push_back({{d, std::move(keys)}, std::move(values)});
    }
    if (degree_square_sum != n) throw std::logic_error("character_table: degree sum check failed");

    std::sort(rows.begin(), rows.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [kkey, vals] : rows) {
        table.degrees.push_back(kkey.first);
        table.chars.push_back(std::move(vals));
    }
    return table;
}

long splitting_coefficient(const FiniteMatrixGroup& g, const std::vector<CycNum>& phi) {
    const auto& classes = g.classes();
    if (phi.size() != classes.size())
        throw std::invalid_argument("splitting_coefficient: class function size mismatch");
    CycNum s;
    for (size_t r = 0; r < classes.size(); ++r) {
        CycNum h = CycNum::from_rational(Rational(static_cast<long>(classes[r].members.size())));
        s = s + h * phi[r] * phi[r].conj();
    }
    CycNum u = s * CycNum::from_rational(Rational(1, g.order()));
    u = u.reduced();
    if (!u.is_rational() || !is_integer(u.to_rational()))
        throw std::invalid_argument("splitting_coefficient: input is not a character");
    return u.to_rational().convert_to<long>();
}

}  // namespace crepant
