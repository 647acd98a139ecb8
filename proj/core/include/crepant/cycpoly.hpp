#ifndef CREPANT_CYCPOLY_HPP
#define CREPANT_CYCPOLY_HPP

#include "crepant/cycnum.hpp"
#include "crepant/intpoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace crepant {

/** Polynomial with CycNum coefficients, lowest degree first. */
class CycPoly {
public:
    CycPoly() = default;
    explicit CycPoly(std::vector<CycNum> coeffs);
    static CycPoly constant(const CycNum& c);
    static CycPoly from_intpoly(const IntPoly& p);
    /** Monic linear factor X - root. */
    static CycPoly x_minus(const CycNum& root);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<CycNum>& coeffs() const { return c_; }
    CycNum coeff(int i) const;

    CycPoly operator+(const CycPoly& o) const;
    CycPoly operator-(const CycPoly& o) const;
    CycPoly operator*(const CycPoly& o) const;
    bool operator==(const CycPoly& o) const;

    CycPoly conj() const;  // coefficient-wise complex conjugation
    CycNum eval(const CycNum& x) const;
    /** Conversion to IntPoly when every coefficient is a rational integer. */
    std::optional<IntPoly> to_intpoly() const;

    std::string str() const;

private:
    std::vector<CycNum> c_;
    void trim();
};

/**
 * The conjugate Gauss-cubic pair whose product is Phi_7, with coefficients
 * in the quadratic subfield generated by u7 = zeta7 + zeta7^2 + zeta7^4:
 * The first factor, X^3 - u7 X^2 + conj(u7) X - 1, has roots zeta7^{1,2,4};
 * the second is its conjugate with roots zeta7^{3,5,6}.
 */
std::pair<CycPoly, CycPoly> factor_phi7_over_Qu7();

}  // namespace crepant

#endif
