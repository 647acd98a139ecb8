#include "crepant/cycpoly.hpp"

#include <sstream>

namespace crepant {

CycPoly::CycPoly(std::vector<CycNum> coeffs) : c_(std::move(coeffs)) { trim(); }

void CycPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

CycPoly CycPoly::constant(const CycNum& c) { return CycPoly(std::vector<CycNum>{c}); }

CycPoly CycPoly::from_intpoly(const IntPoly& p) {
    std::vector<CycNum> v;
    v.reserve(p.coeffs().size());
    for (const auto& a : p.coeffs()) v.push_back(CycNum::from_rational(Rational(a)));
    return CycPoly(std::move(v));
}

CycPoly CycPoly::x_minus(const CycNum& root) {
    return CycPoly({-root, CycNum::from_rational(1)});
}

CycNum CycPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return CycNum();
    return c_[i];
}

CycPoly CycPoly::operator+(const CycPoly& o) const {
    std::vector<CycNum> v(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < v.size(); ++i) v[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
    return CycPoly(std::move(v));
}

CycPoly CycPoly::operator-(const CycPoly& o) const {
    std::vector<CycNum> v(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < v.size(); ++i) v[i] = coeff(static_cast<int>(i)) - o.coeff(static_cast<int>(i));
    return CycPoly(std::move(v));
}

CycPoly CycPoly::operator*(const CycPoly& o) const {
    if (c_.empty() || o.c_.empty()) return CycPoly();
    std::vector<CycNum> v(c_.size() + o.c_.size() - 1);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] = v[i + j] + c_[i] * o.c_[j];
    }
    return CycPoly(std::move(v));
}

bool CycPoly::operator==(const CycPoly& o) const {
    if (c_.size() != o.c_.size()) return false;
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != o.c_[i]) return false;
    return true;
}

CycPoly CycPoly::conj() const {
    std::vector<CycNum> v;
    v.reserve(c_.size());
    for (const auto& a : c_) v.push_back(a.conj());
    return CycPoly(std::move(v));
}

CycNum CycPoly::eval(const CycNum& x) const {
    CycNum acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::optional<IntPoly> CycPoly::to_intpoly() const {
    std::vector<Int> v;
    v.reserve(c_.size());
    for (const auto& a : c_) {
        if (!a.is_rational()) return std::nullopt;
        Rational r = a.to_rational();
        if (!is_integer(r)) return std::nullopt;
        v.push_back(numerator(r));
    }
    return IntPoly(std::move(v));
}

std::string CycPoly::str() const {
    if (c_.empty()) return "0";
    std::ostringstream out;
    for (int i = degree(); i >= 0; --i) {
        if (c_[i].is_zero() && degree() > 0) continue;
        if (i != degree()) out << " + ";
        out << "(" << c_[i].str() << ")";
        if (i > 0) {
            out << "X";
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

std::pair<CycPoly, CycPoly> factor_phi7_over_Qu7() {
    CycNum u7 = CycNum::zeta(7, 1) + CycNum::zeta(7, 2) + CycNum::zeta(7, 4);
    CycNum one = CycNum::from_rational(1);
    CycPoly first({-one, u7.conj(), -u7, one});   // roots zeta7^{1,2,4}
    CycPoly second({-one, u7, -u7.conj(), one});  // roots zeta7^{3,5,6}
    return {first, second};
}

}  // namespace crepant
