#ifndef CREPANT_CYCNUM_HPP
#define CREPANT_CYCNUM_HPP

#include "crepant/rational.hpp"

#include <complex>
#include <string>
#include <vector>

namespace crepant {

/**
 * Exact element of the cyclotomic field Q(zeta_n), stored as a vector of
 * phi(n) rationals over the power basis 1, zeta_n, ..., zeta_n^{phi(n)-1},
 * reduced modulo Phi_n.  Binary operations embed both operands into
 * Q(zeta_lcm); reduction to the minimal conductor only happens through
 * reduced().
 */
class CycNum {
public:
    CycNum();  // zero at conductor 1
    static CycNum from_rational(const Rational& r);
    static CycNum zeta(long n, long power = 1);  // zeta_n^power
    /** From raw power-basis coefficients (length phi(n)). */
    CycNum(long conductor, std::vector<Rational> coeffs);

    long conductor() const { return n_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    CycNum operator+(const CycNum& o) const;
    CycNum operator-(const CycNum& o) const;
    CycNum operator-() const;
    CycNum operator*(const CycNum& o) const;
    bool operator==(const CycNum& o) const;
    bool operator!=(const CycNum& o) const { return !(*this == o); }

    bool is_zero() const;
    bool is_rational() const;
    Rational to_rational() const;  // throws if not rational

    /** Galois map zeta_n -> zeta_n^k, gcd(k, n) = 1. */
    CycNum galois(long k) const;
    CycNum conj() const { return galois(n_ == 1 ? 1 : n_ - 1); }
    /** Multiplicative inverse; throws on zero. */
    CycNum inverse() const;
    CycNum pow(long e) const;

    /** Embed into Q(zeta_m) for n | m. */
    CycNum embedded(long m) const;
    /** Rewrite over the smallest conductor containing this element. */
    CycNum reduced() const;

    /** Floating-point evaluation; diagnostics only, never used for decisions. */
    std::complex<double> eval_complex() const;

    /** Deterministic key for hashing/sorting ("n:c0,c1,..."). */
    std::string key() const;
    std::string str() const;  // human-readable

private:
    long n_;
    std::vector<Rational> c_;
};

inline CycNum cyc_add(const CycNum& a, const CycNum& b) { return a + b; }
inline CycNum cyc_mul(const CycNum& a, const CycNum& b) { return a * b; }
inline CycNum cyc_conj(const CycNum& a) { return a.conj(); }
inline std::complex<double> cyc_eval_complex(const CycNum& a) { return a.eval_complex(); }

}  // namespace crepant

#endif
