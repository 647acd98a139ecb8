#include "crepant/cycnum.hpp"

#include "crepant/cyclotomic.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace crepant {

namespace {

// Remainder of a rational-coefficient polynomial modulo the (monic, integer)
// cyclotomic polynomial Phi_n, returned with exactly phi(n) coefficients.
std::vector<Rational> reduce_mod_phi(std::vector<Rational> v, long n) {
    const IntPoly& phi = cyclotomic_poly(n);
    int d = phi.degree();
    for (int i = static_cast<int>(v.size()) - 1; i >= d; --i) {
        Rational q = v[i];
        if (q == 0) continue;
        v[i] = 0;
        for (int j = 0; j < d; ++j) v[i - d + j] -= q * Rational(phi.coeff(j));
    }
    v.resize(d);
    return v;
}

// Coefficient vector (length phi(n)) of zeta_n^k in the power basis.
std::vector<Rational> zeta_power(long n, long k) {
    k %= n;
    if (k < 0) k += n;
    std::vector<Rational> v(k + 1);
    v[k] = 1;
    return reduce_mod_phi(std::move(v), n);
}

// Solve the square rational system a x = b by Gaussian elimination.
// Returns empty vector when singular / inconsistent handling is the caller's.
std::vector<Rational> solve_square(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
    size_t n = a.size();
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) return {};
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        Rational inv = Rational(1) / a[col][col];
        for (size_t j = col; j < n; ++j) a[col][j] *= inv;
        b[col] *= inv;
        for (size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col] == 0) continue;
            Rational f = a[i][col];
            for (size_t j = col; j < n; ++j) a[i][j] -= f * a[col][j];
            b[i] -= f * b[col];
        }
    }
    return b;
}

}  // namespace

CycNum::CycNum() : n_(1), c_(1) {}

CycNum CycNum::from_rational(const Rational& r) {
    return CycNum(1, {r});
}

CycNum CycNum::zeta(long n, long power) {
    if (n < 1) throw std::invalid_argument("zeta: conductor must be >= 1");
    return CycNum(n, zeta_power(n, power)).reduced();
}

CycNum::CycNum(long conductor, std::vector<Rational> coeffs) : n_(conductor), c_(std::move(coeffs)) {
    if (static_cast<long>(c_.size()) != euler_phi(n_))
        throw std::invalid_argument("CycNum: coefficient vector length must be phi(conductor)");
}

CycNum CycNum::embedded(long m) const {
    if (m == n_) return *this;
    if (m % n_ != 0) throw std::invalid_argument("embedded: target conductor must be a multiple");
    long step = m / n_;
    std::vector<Rational> v(static_cast<size_t>(euler_phi(n_) - 1) * step + 1);
    for (size_t i = 0; i < c_.size(); ++i) v[i * step] = c_[i];
    return CycNum(m, reduce_mod_phi(std::move(v), m));
}

CycNum CycNum::operator+(const CycNum& o) const {
    long m = lcm_long(n_, o.n_);
    CycNum a = embedded(m), b = o.embedded(m);
    for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
    return a;
}

CycNum CycNum::operator-(const CycNum& o) const { return *this + (-o); }

CycNum CycNum::operator-() const {
    CycNum r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

CycNum CycNum::operator*(const CycNum& o) const {
    long m = lcm_long(n_, o.n_);
    CycNum a = embedded(m), b = o.embedded(m);
    std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j] == 0) continue;
            v[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return CycNum(m, reduce_mod_phi(std::move(v), m));
}

bool CycNum::operator==(const CycNum& o) const {
    long m = lcm_long(n_, o.n_);
    return embedded(m).c_ == o.embedded(m).c_;
}

bool CycNum::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

bool CycNum::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rational CycNum::to_rational() const {
    if (!is_rational()) throw std::domain_error("to_rational: value is not rational");
    return c_[0];
}

CycNum CycNum::galois(long k) const {
    k %= n_;
    if (k < 0) k += n_;
    if (gcd_long(k, n_) != 1) throw std::invalid_argument("galois: k must be coprime to the conductor");
    std::vector<Rational> v(static_cast<size_t>(euler_phi(n_)));
    CycNum acc(n_, v);
    std::vector<Rational> out(v.size());
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        auto zp = zeta_power(n_, static_cast<long>(i) * k);
        for (size_t j = 0; j < out.size(); ++j) out[j] += c_[i] * zp[j];
    }
    return CycNum(n_, std::move(out));
}

CycNum CycNum::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    size_t d = c_.size();
    // Columns of the multiplication-by-*this matrix in the power basis.
    std::vector<std::vector<Rational>> a(d, std::vector<Rational>(d));
    for (size_t j = 0; j < d; ++j) {
        CycNum col = *this * CycNum(n_, zeta_power(n_, static_cast<long>(j)));
        for (size_t i = 0; i < d; ++i) a[i][j] = col.c_[i];
    }
    std::vector<Rational> b(d);
    b[0] = 1;
    auto x = solve_square(std::move(a), std::move(b));
    if (x.empty()) throw std::logic_error("inverse: multiplication matrix singular on nonzero element");
    return CycNum(n_, std::move(x));
}

CycNum CycNum::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    CycNum acc = from_rational(1);
    CycNum base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

CycNum CycNum::reduced() const {
    for (long d = 1; d < n_; ++d) {
        if (n_ % d != 0) continue;
        // *this lies in Q(zeta_d) iff it is a rational combination of the
        // embedded basis zeta_d^0..zeta_d^{phi(d)-1}; solve in Q(zeta_n).
        long ph = euler_phi(d);
        size_t dim = c_.size();
        std::vector<std::vector<Rational>> cols;
        for (long j = 0; j < ph; ++j) {
            CycNum bj = CycNum(d, zeta_power(d, j)).embedded(n_);
            cols.push_back(bj.coeffs());
        }
        // Gaussian elimination on the (dim x ph) system cols * x = c_.
        std::vector<std::vector<Rational>> a(dim, std::vector<Rational>(ph));
        for (size_t i = 0; i < dim; ++i)
            for (long j = 0; j < ph; ++j) a[i][j] = cols[j][i];
        std::vector<Rational> rhs = c_;
        std::vector<long> pivot_col_of_row;
        size_t row = 0;
        std::vector<Rational> sol(ph);
        std::vector<long> pivots;
        bool consistent = true;
        for (long col = 0; col < ph && row < dim; ++col) {
            size_t piv = row;
            while (piv < dim && a[piv][col] == 0) ++piv;
            if (piv == dim) continue;
            std::swap(a[piv], a[row]);
            std::swap(rhs[piv], rhs[row]);
            Rational inv = Rational(1) / a[row][col];
            for (long j = col; j < ph; ++j) a[row][j] *= inv;
            rhs[row] *= inv;
            for (size_t i = 0; i < dim; ++i) {
                if (i == row || a[i][col] == 0) continue;
                Rational f = a[i][col];
                for (long j = col; j < ph; ++j) a[i][j] -= f * a[row][j];
                rhs[i] -= f * rhs[row];
            }
            pivots.push_back(col);
            ++row;
        }
        for (size_t i = row; i < dim; ++i)
            if (rhs[i] != 0) consistent = false;
        if (!consistent) continue;
        for (size_t r = 0; r < pivots.size(); ++r) sol[pivots[r]] = rhs[r];
        return CycNum(d, std::move(sol));
    }
    return *this;
}

std::complex<double> CycNum::eval_complex() const {
    std::complex<double> z = std::polar(1.0, 2.0 * std::numbers::pi / static_cast<double>(n_));
    std::complex<double> acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * z + std::complex<double>(static_cast<double>(numerator(*it)) / static_cast<double>(denominator(*it)));
    return acc;
}

std::string CycNum::key() const {
    std::ostringstream out;
    out << n_ << ":";
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) out << ",";
        out << rational_str(c_[i]);
    }
    return out.str();
}

std::string CycNum::str() const {
    if (is_rational()) return rational_str(c_[0]);
    std::ostringstream out;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        Rational mag = c_[i] < 0 ? Rational(-c_[i]) : c_[i];
        if (first) {
            if (c_[i] < 0) out << "-";
            first = false;
        } else {
            out << (c_[i] < 0 ? " - " : " + ");
        }
        if (i == 0 || mag != 1) out << rational_str(mag) << (i > 0 ? "*" : "");
        if (i > 0) {
            out << "z" << n_;
            if (i > 1) out << "^" << i;
        }
    }
    if (first) return "0";
    return out.str();
}

}  // namespace crepant
