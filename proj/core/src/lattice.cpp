#include "crepant/lattice.hpp"

#include "crepant/cyclotomic.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace crepant {

namespace {

/** Power-basis coordinates of x in Q(zeta_n), length phi(n). */
std::vector<Rational> coords(const CycNum& x, long n) {
    auto c = x.reduced().embedded(n).coeffs();
    c.resize(static_cast<size_t>(euler_phi(n)), Rational(0));
    return c;
}

/**
 * Solve a * sol = rhs over Q for a full-column-rank matrix (rows x cols,
 * rows >= cols, one rhs per column of rhs).  Returns false when inconsistent.
 */
bool solve_rational(std::vector<std::vector<Rational>> a,
                    std::vector<std::vector<Rational>> rhs,
                    std::vector<std::vector<Rational>>& sol) {
    size_t rows = a.size(), cols = rows ? a[0].size() : 0, nrhs = rhs[0].size();
    std::vector<size_t> pivot_row(cols);
    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t p = rank;
        while (p < rows && a[p][col] == 0) ++p;
        if (p == rows) return false;  // rank deficient
        std::swap(a[p], a[rank]);
        std::swap(rhs[p], rhs[rank]);
        Rational inv = Rational(1) / a[rank][col];
        for (size_t j = col; j < cols; ++j) a[rank][j] *= inv;
        for (size_t j = 0; j < nrhs; ++j) rhs[rank][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == rank || a[i][col] == 0) continue;
            Rational f = a[i][col];
            for (size_t j = col; j < cols; ++j) a[i][j] -= f * a[rank][j];
            for (size_t j = 0; j < nrhs; ++j) rhs[i][j] -= f * rhs[rank][j];
        }
        pivot_row[col] = rank++;
    }
    if (rank < cols) return false;
    // consistency: the eliminated rows below the rank must have zero rhs
    for (size_t i = rank; i < rows; ++i)
        for (size_t j = 0; j < nrhs; ++j)
            if (rhs[i][j] != 0) return false;
    sol.assign(cols, std::vector<Rational>(nrhs));
    for (size_t col = 0; col < cols; ++col) sol[col] = rhs[pivot_row[col]];
    return true;
}

}  // namespace

LatticeModel ez_power_model(const CycNum& z, int copies) {
    LatticeModel l;
    l.m = copies;
    CycNum one = CycNum::from_rational(1);
    l.basis.assign(static_cast<size_t>(2 * copies), std::vector<CycNum>(copies, CycNum()));
    for (int c = 0; c < copies; ++c) {
        l.basis[static_cast<size_t>(2 * c)][c] = one;
        l.basis[static_cast<size_t>(2 * c + 1)][c] = z;
    }
    return l;
}

IntMat integer_realization(const LatticeModel& lattice, const MatrixOverCyc& action) {
    int m = lattice.m;
    if (action.dim() != m) throw std::invalid_argument("integer_realization: dimension mismatch");
    long n = 1;
    for (const auto& v : lattice.basis)
        for (const auto& x : v) n = lcm_long(n, x.reduced().conductor());
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) n = lcm_long(n, action.at(i, j).reduced().conductor());
    size_t phi = static_cast<size_t>(euler_phi(n));

    // columns of the linear system: the 2m lattice basis vectors
    std::vector<std::vector<Rational>> a(static_cast<size_t>(m) * phi,
                                         std::vector<Rational>(lattice.basis.size()));
    for (size_t t = 0; t < lattice.basis.size(); ++t)
        for (int c = 0; c < m; ++c) {
            auto cc = coords(lattice.basis[t][static_cast<size_t>(c)], n);
            for (size_t q = 0; q < phi; ++q) a[static_cast<size_t>(c) * phi + q][t] = cc[q];
        }
    // right-hand sides: the images of the basis vectors under the action
    std::vector<std::vector<Rational>> rhs(static_cast<size_t>(m) * phi,
                                           std::vector<Rational>(lattice.basis.size()));
    for (size_t t = 0; t < lattice.basis.size(); ++t)
        for (int i = 0; i < m; ++i) {
            CycNum w;
            for (int j = 0; j < m; ++j)
                w = w + action.at(i, j) * lattice.basis[t][static_cast<size_t>(j)];
            auto cc = coords(w, n);
            for (size_t q = 0; q < phi; ++q) rhs[static_cast<size_t>(i) * phi + q][t] = cc[q];
        }
    std::vector<std::vector<Rational>> sol;
    if (!solve_rational(std::move(a), std::move(rhs), sol))
        throw std::invalid_argument("integer_realization: action does not preserve the lattice span");
    int dim = static_cast<int>(lattice.basis.size());
    IntMat r(dim, dim);
    for (int s = 0; s < dim; ++s)
        for (int t = 0; t < dim; ++t) {
            const Rational& c = sol[static_cast<size_t>(s)][static_cast<size_t>(t)];
            if (boost::multiprecision::denominator(c) != 1)
                throw std::invalid_argument("integer_realization: action does not preserve the lattice");
            r.at(s, t) = boost::multiprecision::numerator(c);
        }
    return r;
}

const std::vector<LatticeRowSpec>& lattice_rows() {
    static const std::vector<LatticeRowSpec> rows = {
        {3, {1}, "E_j"},
        {4, {1}, "E_i"},
        {6, {1}, "E_j"},
        {7, {1, 2, 4}, "E_{u7}^3"},
        {8, {1, 3}, "E_{u8}^2"},
        {12, {1, 5}, "E_i^2"},
        {15, {1, 2, 4, 8}, "E_{u15}^4"},
        {16, {1, 3, 5, 7}, "S_{u16,v16}^2"},
        {20, {1, 3, 7, 9}, "E_{u20}^4"},
        {24, {1, 5, 7, 11}, "E_{u24}^4"},
    };
    return rows;
}

namespace {

struct CertResult {
    bool ok = false;
    std::string detail;
};

/**
 * Attempt the constructive certification of one row with period generator
 * alpha_raw: find a Z[alpha]-module basis of Z[zeta_k] among the powers of
 * zeta_k (unimodular over Z, certified by HNF) and an exact C-linear change of
 * coordinates onto the product lattice Z[(psi_1(alpha),...)]^r.
 */
CertResult certify_row(long k, const std::vector<long>& exps, const CycNum& alpha_raw) {
    auto fail = [](std::string why) { return CertResult{false, std::move(why)}; };

    size_t phi = static_cast<size_t>(euler_phi(k));
    size_t m = exps.size();
    if (2 * m != phi) return fail("exponent set is not half of (Z/k)^*");

    // the period and the degree D of its minimal polynomial over Q
    CycNum alpha = alpha_raw.embedded(k);
    std::vector<std::vector<Rational>> pow_coords;  // rows: coordinates of alpha^s
    CycNum p = CycNum::from_rational(1).embedded(k);
    size_t d_deg = 0;
    for (size_t s = 0; s <= phi; ++s) {
        pow_coords.push_back(coords(p, k));
        std::vector<std::vector<Rational>> probe = pow_coords;
        // rank via elimination: reuse solve_rational's pivoting by transposing
        size_t rank = 0;
        std::vector<std::vector<Rational>> mat;
        for (auto& row : probe) mat.push_back(row);
        size_t rows_n = mat.size(), cols_n = phi;
        for (size_t col = 0, rr = 0; col < cols_n && rr < rows_n; ++col) {
            size_t piv = rr;
            while (piv < rows_n && mat[piv][col] == 0) ++piv;
            if (piv == rows_n) continue;
            std::swap(mat[piv], mat[rr]);
            Rational inv = Rational(1) / mat[rr][col];
            for (size_t j = col; j < cols_n; ++j) mat[rr][j] *= inv;
            for (size_t i = 0; i < rows_n; ++i) {
                if (i == rr || mat[i][col] == 0) continue;
                Rational f = mat[i][col];
                for (size_t j = col; j < cols_n; ++j) mat[i][j] -= f * mat[rr][j];
            }
            ++rr;
            rank = rr;
        }
        if (rank < pow_coords.size()) {
            d_deg = pow_coords.size() - 1;  // alpha^{s} became dependent
            break;
        }
        p = p * alpha;
    }
    if (d_deg == 0 || d_deg % 2 != 0) return fail("minimal polynomial degree not even");
    size_t m_k = d_deg / 2;
    if (m % m_k != 0) return fail("degree does not divide the number of embeddings");
    size_t r_mult = m / m_k;

    // embedding values sigma_a(alpha), grouped by exact equality
    std::vector<CycNum> sigma(m);
    for (size_t a = 0; a < m; ++a) sigma[a] = alpha.galois(exps[a]);
    std::vector<CycNum> distinct;       // psi_j(alpha), in order of first appearance
    std::vector<size_t> value_of(m);    // index into distinct per embedding
    std::vector<size_t> mult;
    for (size_t a = 0; a < m; ++a) {
        size_t j = 0;
        while (j < distinct.size() && !(distinct[j] == sigma[a])) ++j;
        if (j == distinct.size()) {
            distinct.push_back(sigma[a]);
            mult.push_back(0);
        }
        value_of[a] = j;
        ++mult[j];
    }
    if (distinct.size() != m_k) return fail("wrong number of distinct embedding values");
    for (size_t x : mult)
        if (x != r_mult) return fail("embedding multiplicities are unbalanced");
    for (size_t i = 0; i < m_k; ++i) {
        if (distinct[i].conj() == distinct[i]) return fail("embedding value is real");
        for (size_t j = 0; j < m_k; ++j)
            if (i != j && distinct[i].conj() == distinct[j])
                return fail("two embedding values are complex conjugate");
    }

    // Z[alpha]-module basis of Z[zeta_k] among powers of zeta_k, certified by HNF
    std::vector<size_t> subset;
    std::vector<size_t> found;
    std::function<bool(size_t, size_t)> search = [&](size_t start, size_t need) {
        if (need == 0) {
            IntMat cand(static_cast<int>(phi), static_cast<int>(phi));
            int col = 0;
            for (size_t s = 0; s < d_deg; ++s)
                for (size_t t = 0; t < r_mult; ++t, ++col) {
                    CycNum e = alpha.pow(static_cast<long>(s)) *
                               CycNum::zeta(k, static_cast<long>(subset[t]));
                    auto cc = coords(e, k);
                    for (size_t q = 0; q < phi; ++q) {
                        if (boost::multiprecision::denominator(cc[q]) != 1) return false;
                        cand.at(static_cast<int>(q), col) = boost::multiprecision::numerator(cc[q]);
                    }
                }
            try {
                auto [h, u] = hermite_normal_form(cand);
                if (!(h == IntMat::identity(static_cast<int>(phi)))) return false;
            } catch (const std::exception&) {
                return false;
            }
            found = subset;
            return true;
        }
        for (size_t i = start; i + need <= phi; ++i) {
            subset.push_back(i);
            if (search(i + 1, need - 1)) return true;
            subset.pop_back();
        }
        return false;
    };
    if (!search(0, r_mult))
        return fail("no module basis among the powers of zeta_k");

    // source lattice columns in C^m: embeddings of alpha^s zeta_k^{i_t}
    auto source_col = [&](size_t s, size_t t) {
        std::vector<CycNum> col(m);
        for (size_t a = 0; a < m; ++a)
            col[a] = sigma[a].pow(static_cast<long>(s)) *
                     CycNum::zeta(k, (exps[a] * static_cast<long>(found[t])) % k);
        return col;
    };
    // target lattice columns: block t carries (psi_1(alpha)^s, ..., psi_mk(alpha)^s)
    auto target_col = [&](size_t s, size_t t) {
        std::vector<CycNum> col(m);
        for (size_t j = 0; j < m_k; ++j)
            col[t * m_k + j] = distinct[j].pow(static_cast<long>(s));
        return col;
    };

    // exact intertwiner from m independent source columns, verified on all 2m
    std::vector<std::pair<size_t, size_t>> pairs;
    for (size_t s = 0; s < d_deg; ++s)
        for (size_t t = 0; t < r_mult; ++t) pairs.emplace_back(s, t);
    // the s = 0 and s = 1 columns across all blocks are independent when m_k = 2,
    // and s = 0 columns when m_k = 1; select greedily with exact rank tests
    std::vector<size_t> chosen;
    {
        std::vector<std::vector<CycNum>> rowspace;  // eliminated columns as rows
        for (size_t idx = 0; idx < pairs.size() && chosen.size() < m; ++idx) {
            auto col = source_col(pairs[idx].first, pairs[idx].second);
            std::vector<std::vector<CycNum>> probe = rowspace;
            probe.push_back(col);
            // Gaussian elimination over the cyclotomic field
            size_t rank = 0;
            for (size_t cidx = 0; cidx < m && rank < probe.size(); ++cidx) {
                size_t piv = rank;
                while (piv < probe.size() && probe[piv][cidx].is_zero()) ++piv;
                if (piv == probe.size()) continue;
                std::swap(probe[piv], probe[rank]);
                CycNum inv = probe[rank][cidx].inverse();
                for (size_t j = 0; j < m; ++j) probe[rank][j] = probe[rank][j] * inv;
                for (size_t i = 0; i < probe.size(); ++i) {
                    if (i == rank) continue;
                    CycNum f = probe[i][cidx];
                    if (f.is_zero()) continue;
                    for (size_t j = 0; j < m; ++j)
                        probe[i][j] = probe[i][j] - f * probe[rank][j];
                }
                ++rank;
            }
            if (rank == probe.size()) {
                rowspace = std::move(probe);
                chosen.push_back(idx);
            }
        }
    }
    if (chosen.size() != m) return fail("source lattice does not span C^m");

    std::vector<CycNum> s_entries(m * m), t_entries(m * m);
    for (size_t c = 0; c < m; ++c) {
        auto sc = source_col(pairs[chosen[c]].first, pairs[chosen[c]].second);
        auto tc = target_col(pairs[chosen[c]].first, pairs[chosen[c]].second);
        for (size_t i = 0; i < m; ++i) {
            s_entries[i * m + c] = sc[i];
            t_entries[i * m + c] = tc[i];
        }
    }
    MatrixOverCyc s_mat(static_cast<int>(m), s_entries);
    MatrixOverCyc t_mat(static_cast<int>(m), t_entries);
    MatrixOverCyc inter = t_mat * s_mat.inverse();
    for (const auto& [s, t] : pairs) {
        auto sc = source_col(s, t);
        auto tc = target_col(s, t);
        for (size_t i = 0; i < m; ++i) {
            CycNum acc;
            for (size_t j = 0; j < m; ++j) acc = acc + inter.at(static_cast<int>(i),
                                                               static_cast<int>(j)) * sc[j];
            if (!(acc - tc[i]).is_zero())
                return fail("intertwiner fails on a lattice basis vector");
        }
    }

    std::ostringstream detail;
    detail << "module basis zeta^{";
    for (size_t t = 0; t < found.size(); ++t) detail << (t ? "," : "") << found[t];
    detail << "}, degree " << d_deg << ", multiplicity " << r_mult;
    return CertResult{true, detail.str()};
}

}  // namespace

CheckReport verify_lattice_row(long k, const std::vector<long>& exps) {
    auto it = std::find_if(lattice_rows().begin(), lattice_rows().end(),
                           [&](const LatticeRowSpec& r) { return r.k == k; });
    if (it == lattice_rows().end() || it->exps != exps)
        throw std::invalid_argument("verify_lattice_row: unsupported (k, exponent set)");

    CheckReport rep;
    rep.check_id = "lattice-k" + std::to_string(k);
    rep.claim_ref = "C^m / f(S_" + std::to_string(k) + ") is the product lattice " + it->target;
    rep.rhs = it->target;

    CertResult res = certify_row(k, exps, gauss_period(k, exps));
    if (res.ok) {
        rep.status = "pass";
        rep.lhs = res.detail;
        return rep;
    }
    rep.status = "fail";
    rep.lhs = res.detail;
    if (k == 16) {
        // Z[zeta16] is not free over the order Z[u16] (index 8 in the maximal
        // order), so no unimodular identification with Z[(u16,v16)]^2 exists.
        // The trace period b = zeta16 + zeta16^7 generates the maximal order
        // and the same certification succeeds for Z[(b,b')]^2.
        CertResult fixed = certify_row(k, exps, gauss_period(16, {1, 7}));
        if (fixed.ok)
            rep.lhs += "; with b = zeta16 + zeta16^7 instead of u16 the quotient certifies as "
                       "(C^2/Z[(b,b')])^2: " +
                       fixed.detail;
    }
    return rep;
}

}  // namespace crepant
