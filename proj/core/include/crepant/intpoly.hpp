#ifndef CREPANT_INTPOLY_HPP
#define CREPANT_INTPOLY_HPP

#include "crepant/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace crepant {

/**
 * Dense integer polynomial, coefficients lowest degree first.
 * The zero polynomial has an empty coefficient vector; otherwise the
 * leading coefficient is nonzero.
 */
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs);
    static IntPoly constant(Int c);
    static IntPoly monomial(int degree, Int c = 1);  // c * X^degree

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const std::vector<Int>& coeffs() const { return c_; }
    Int coeff(int i) const;
    Int leading() const;
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    bool operator==(const IntPoly& o) const { return c_ == o.c_; }

    /** Division by a monic divisor: returns (quotient, remainder). */
    std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& divisor) const;
    /** Exact division by a monic divisor; nullopt if the remainder is nonzero. */
    std::optional<IntPoly> divide_exact(const IntPoly& divisor) const;

    Int eval(const Int& x) const;
    std::string str() const;  // human-readable, e.g. "X^2 - X + 1"

private:
    std::vector<Int> c_;
    void trim();
};

}  // namespace crepant

#endif
