#include "crepant/intmat.hpp"

#include <stdexcept>

namespace crepant {

IntMat IntMat::identity(int n) {
    IntMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMat IntMat::operator*(const IntMat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("IntMat: dimension mismatch");
    IntMat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            if (at(i, k) == 0) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
        }
    return r;
}

IntMat IntMat::operator-(const IntMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("IntMat: dimension mismatch");
    IntMat r(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j) - o.at(i, j);
    return r;
}

Int IntMat::det() const {
    if (rows_ != cols_) throw std::invalid_argument("det: matrix must be square");
    int n = rows_;
    IntMat a = *this;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a.at(k, k) == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (a.at(i, k) != 0) { piv = i; break; }
            if (piv < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(piv, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
        prev = a.at(k, k);
    }
    return sign > 0 ? a.at(n - 1, n - 1) : Int(-a.at(n - 1, n - 1));
}

HnfResult hermite_normal_form(const IntMat& m) {
    int rows = m.rows(), cols = m.cols();
    IntMat h = m;
    IntMat u = IntMat::identity(rows);
    auto row_op = [&](auto&& fn) { fn(h); fn(u); };
    int pr = 0;  // pivot row
    for (int col = 0; col < cols && pr < rows; ++col) {
        // Clear below (pr) in this column with extended-gcd row combinations.
        for (int i = pr + 1; i < rows; ++i) {
            if (h.at(i, col) == 0) continue;
            Int a = h.at(pr, col), b = h.at(i, col);
            if (a == 0) {
                row_op([&](IntMat& x) {
                    for (int j = 0; j < x.cols(); ++j) std::swap(x.at(pr, j), x.at(i, j));
                });
                continue;
            }
            // g = s a + t b; rows (pr, i) <- (s*pr + t*i, -(b/g)*pr + (a/g)*i)
            Int s, t, g;
            {
                Int old_r = a, r = b, old_s = 1, ss = 0, old_t = 0, tt = 1;
                while (r != 0) {
                    Int q = old_r / r;
                    Int tmp = old_r - q * r; old_r = r; r = tmp;
                    tmp = old_s - q * ss; old_s = ss; ss = tmp;
                    tmp = old_t - q * tt; old_t = tt; tt = tmp;
                }
                g = old_r; s = old_s; t = old_t;
                if (g < 0) { g = -g; s = -s; t = -t; }
            }
            Int bf = b / g, af = a / g;
            row_op([&](IntMat& x) {
                for (int j = 0; j < x.cols(); ++j) {
                    Int rp = s * x.at(pr, j) + t * x.at(i, j);
                    Int ri = -bf * x.at(pr, j) + af * x.at(i, j);
                    x.at(pr, j) = rp;
                    x.at(i, j) = ri;
                }
            });
        }
        if (h.at(pr, col) == 0) continue;
        if (h.at(pr, col) < 0)
            row_op([&](IntMat& x) {
                for (int j = 0; j < x.cols(); ++j) x.at(pr, j) = -x.at(pr, j);
            });
        // Reduce entries above the pivot.
        for (int i = 0; i < pr; ++i) {
            Int q = h.at(i, col) / h.at(pr, col);
            if (h.at(i, col) - q * h.at(pr, col) < 0) q -= 1;  // floor division
            if (q == 0) continue;
            row_op([&](IntMat& x) {
                for (int j = 0; j < x.cols(); ++j) x.at(i, j) -= q * x.at(pr, j);
            });
        }
        ++pr;
    }
    if (pr < cols)
        throw std::invalid_argument("hermite_normal_form: rank-deficient input");
    return {h, u};
}

std::vector<Int> smith_diagonal(IntMat m) {
    int rows = m.rows(), cols = m.cols();
    int n = std::min(rows, cols);
    std::vector<Int> diag;
    int top = 0;
    while (top < n) {
        // Find a nonzero pivot in the submatrix starting at (top, top).
        int pi = -1, pj = -1;
        for (int i = top; i < rows && pi < 0; ++i)
            for (int j = top; j < cols; ++j)
                if (m.at(i, j) != 0) { pi = i; pj = j; break; }
        if (pi < 0) break;
        for (int j = 0; j < cols; ++j) std::swap(m.at(top, j), m.at(pi, j));
        for (int i = 0; i < rows; ++i) std::swap(m.at(i, top), m.at(i, pj));
        bool again = true;
        while (again) {
            again = false;
            for (int i = top + 1; i < rows; ++i) {
                while (m.at(i, top) != 0) {
                    Int q = m.at(i, top) / m.at(top, top);
                    for (int j = 0; j < cols; ++j) m.at(i, j) -= q * m.at(top, j);
                    if (m.at(i, top) != 0) {
                        for (int j = 0; j < cols; ++j) std::swap(m.at(top, j), m.at(i, j));
                    }
                }
            }
            for (int j = top + 1; j < cols; ++j) {
                while (m.at(top, j) != 0) {
                    Int q = m.at(top, j) / m.at(top, top);
                    for (int i = 0; i < rows; ++i) m.at(i, j) -= q * m.at(i, top);
                    if (m.at(top, j) != 0) {
                        for (int i = 0; i < rows; ++i) std::swap(m.at(i, top), m.at(i, j));
                        again = true;
                    }
                }
            }
        }
        diag.push_back(m.at(top, top) < 0 ? Int(-m.at(top, top)) : m.at(top, top));
        ++top;
    }
    // Enforce the divisibility chain d_i | d_{i+1}.
    for (size_t i = 0; i + 1 < diag.size(); ++i) {
        for (size_t j = i + 1; j < diag.size(); ++j) {
            if (diag[j] % diag[i] != 0) {
                Int g = gcd(diag[i], diag[j]);
                Int l = diag[i] / g * diag[j];
                diag[i] = g;
                diag[j] = l;
            }
        }
    }
    while (diag.size() < static_cast<size_t>(n)) diag.push_back(0);
    return diag;
}

}  // namespace crepant
