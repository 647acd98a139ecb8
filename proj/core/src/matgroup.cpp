#include "crepant/matgroup.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace crepant {

namespace {

const CycNum& cyc_one() {
    static const CycNum one = CycNum::from_rational(1);
    return one;
}

/** Rank of a dense CycNum matrix by Gaussian elimination. */
int rank_of(std::vector<std::vector<CycNum>> a) {
    if (a.empty()) return 0;
    int rows = static_cast<int>(a.size());
    int cols = static_cast<int>(a[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (!a[i][c].is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[r], a[piv]);
        CycNum scale = a[r][c].inverse();
        for (int j = c; j < cols; ++j) a[r][j] = a[r][j] * scale;
        for (int i = 0; i < rows; ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            CycNum f = a[i][c];
            for (int j = c; j < cols; ++j) a[i][j] = a[i][j] - f * a[r][j];
        }
        ++r;
    }
    return r;
}

}  // namespace

MatrixOverCyc::MatrixOverCyc(int n, std::vector<CycNum> entries) : n_(n), e_(std::move(entries)) {
    if (n_ < 1 || e_.size() != static_cast<size_t>(n_) * n_)
        throw std::invalid_argument("MatrixOverCyc: bad entry count");
    cond_ = 1;
    for (const auto& x : e_) cond_ = lcm_long(cond_, x.conductor());
    for (auto& x : e_)
        if (x.conductor() != cond_) x = x.embedded(cond_);
}

MatrixOverCyc MatrixOverCyc::identity(int n) {
    std::vector<CycNum> e(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i) e[static_cast<size_t>(i) * n + i] = cyc_one();
    return MatrixOverCyc(n, std::move(e));
}

MatrixOverCyc MatrixOverCyc::diagonal(const std::vector<CycNum>& diag) {
    int n = static_cast<int>(diag.size());
    std::vector<CycNum> e(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i) e[static_cast<size_t>(i) * n + i] = diag[i];
    return MatrixOverCyc(n, std::move(e));
}

MatrixOverCyc MatrixOverCyc::permutation(const std::vector<int>& images) {
    int n = static_cast<int>(images.size());
    std::vector<bool> seen(n, false);
    std::vector<CycNum> e(static_cast<size_t>(n) * n);
    for (int j = 0; j < n; ++j) {
        int i = images[j];
        if (i < 0 || i >= n || seen[i])
            throw std::invalid_argument("MatrixOverCyc::permutation: not a bijection");
        seen[i] = true;
        e[static_cast<size_t>(i) * n + j] = cyc_one();  // e_j -> e_{images[j]}
    }
    return MatrixOverCyc(n, std::move(e));
}

MatrixOverCyc MatrixOverCyc::operator*(const MatrixOverCyc& o) const {
    if (n_ != o.n_) throw std::invalid_argument("MatrixOverCyc: dimension mismatch");
    std::vector<CycNum> e(static_cast<size_t>(n_) * n_);
    for (int i = 0; i < n_; ++i)
        for (int k = 0; k < n_; ++k) {
            const CycNum& a = at(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < n_; ++j) {
                const CycNum& b = o.at(k, j);
                if (b.is_zero()) continue;
                e[static_cast<size_t>(i) * n_ + j] = e[static_cast<size_t>(i) * n_ + j] + a * b;
            }
        }
    return MatrixOverCyc(n_, std::move(e));
}

bool MatrixOverCyc::operator==(const MatrixOverCyc& o) const {
    if (n_ != o.n_) return false;
    for (size_t i = 0; i < e_.size(); ++i)
        if (e_[i] != o.e_[i]) return false;
    return true;
}

MatrixOverCyc MatrixOverCyc::inverse() const {
    std::vector<std::vector<CycNum>> a(n_, std::vector<CycNum>(2 * n_));
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) a[i][j] = at(i, j);
        a[i][n_ + i] = cyc_one();
    }
    for (int c = 0; c < n_; ++c) {
        int piv = -1;
        for (int i = c; i < n_; ++i)
            if (!a[i][c].is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) throw std::domain_error("MatrixOverCyc::inverse: singular matrix");
        std::swap(a[c], a[piv]);
        CycNum scale = a[c][c].inverse();
        for (int j = c; j < 2 * n_; ++j) a[c][j] = a[c][j] * scale;
        for (int i = 0; i < n_; ++i) {
            if (i == c || a[i][c].is_zero()) continue;
            CycNum f = a[i][c];
            for (int j = c; j < 2 * n_; ++j) a[i][j] = a[i][j] - f * a[c][j];
        }
    }
    std::vector<CycNum> e(static_cast<size_t>(n_) * n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) e[static_cast<size_t>(i) * n_ + j] = a[i][n_ + j];
    return MatrixOverCyc(n_, std::move(e));
}

MatrixOverCyc MatrixOverCyc::conj() const {
    std::vector<CycNum> e = e_;
    for (auto& x : e) x = x.conj();
    return MatrixOverCyc(n_, std::move(e));
}

MatrixOverCyc MatrixOverCyc::embedded(long m) const {
    std::vector<CycNum> e = e_;
    for (auto& x : e) x = x.embedded(m);
    return MatrixOverCyc(n_, std::move(e));
}

CycNum MatrixOverCyc::trace() const {
    CycNum t;
    for (int i = 0; i < n_; ++i) t = t + at(i, i);
    return t;
}

CycNum MatrixOverCyc::det() const {
    CycPoly p = charpoly();
    CycNum c0 = p.coeff(0);  // (-1)^n det
    return (n_ % 2 == 0) ? c0 : -c0;
}

CycPoly MatrixOverCyc::charpoly() const {
    // Faddeev-LeVerrier: coefficients c[n]=1, c[n-k] = -tr(M_k)/k with
    // M_k = A (M_{k-1} + c[n-k+1] I).
    std::vector<CycNum> c(n_ + 1);
    c[n_] = cyc_one();
    std::vector<CycNum> m(static_cast<size_t>(n_) * n_);  // M_0 = 0
    for (int k = 1; k <= n_; ++k) {
        for (int i = 0; i < n_; ++i)
            m[static_cast<size_t>(i) * n_ + i] = m[static_cast<size_t>(i) * n_ + i] + c[n_ - k + 1];
        std::vector<CycNum> prod(static_cast<size_t>(n_) * n_);
        for (int i = 0; i < n_; ++i)
            for (int t = 0; t < n_; ++t) {
                const CycNum& a = at(i, t);
                if (a.is_zero()) continue;
                for (int j = 0; j < n_; ++j)
                    prod[static_cast<size_t>(i) * n_ + j] =
                        prod[static_cast<size_t>(i) * n_ + j] + a * m[static_cast<size_t>(t) * n_ + j];
            }
        m = std::move(prod);
        CycNum tr;
        for (int i = 0; i < n_; ++i) tr = tr + m[static_cast<size_t>(i) * n_ + i];
        c[n_ - k] = -(tr * CycNum::from_rational(Rational(1, k)));
    }
    return CycPoly(std::move(c));
}

bool MatrixOverCyc::is_identity() const {
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            const CycNum& x = at(i, j);
            if (i == j ? x != cyc_one() : !x.is_zero()) return false;
        }
    return true;
}

int MatrixOverCyc::eigenvalue_one_multiplicity() const {
    std::vector<std::vector<CycNum>> a(n_, std::vector<CycNum>(n_));
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) a[i][j] = (i == j) ? at(i, j) - cyc_one() : at(i, j);
    return n_ - rank_of(std::move(a));
}

std::string MatrixOverCyc::key() const {
    std::string k = std::to_string(n_);
    for (const auto& x : e_) {
        k += "|";
        k += x.reduced().key();
    }
    return k;
}

long element_order(const MatrixOverCyc& m, long cap) {
    MatrixOverCyc p = m;
    long o = 1;
    while (!p.is_identity()) {
        p = p * m;
        if (++o > cap) throw std::runtime_error("element_order: cap exceeded (order > cap)");
    }
    return o;
}

RankedEigenvector ranked_eigenvalues(const MatrixOverCyc& m) {
    long d = element_order(m);
    int n = m.dim();
    RankedEigenvector v;
    v.d = d;
    int total = 0;
    for (long a = 0; a < d && total < n; ++a) {
        CycNum z = CycNum::zeta(d, a);
        std::vector<std::vector<CycNum>> mat(n, std::vector<CycNum>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) mat[i][j] = (i == j) ? m.at(i, j) - z : m.at(i, j);
        int mult = n - rank_of(std::move(mat));
        for (int t = 0; t < mult; ++t) v.exponents.push_back(a);
        total += mult;
    }
    if (total != n) throw std::logic_error("ranked_eigenvalues: matrix not diagonalizable");
    return v;
}

FiniteMatrixGroup close_group(std::vector<MatrixOverCyc> gens, long cap) {
    if (gens.empty()) throw std::invalid_argument("close_group: no generators");
    int n = gens[0].dim();
    for (const auto& g : gens) {
        if (g.dim() != n) throw std::invalid_argument("close_group: mixed dimensions");
        element_order(g, cap);  // verifies finiteness within cap
    }
    // deduplicate and sort generators for a deterministic closure order
    std::map<std::string, MatrixOverCyc> uniq;
    for (auto& g : gens)
        if (!g.is_identity()) uniq.emplace(g.key(), std::move(g));

    FiniteMatrixGroup grp;
    grp.dim_ = n;
    grp.elements_.push_back(MatrixOverCyc::identity(n));
    grp.index_.emplace(grp.elements_[0].key(), 0);
    grp.parent_.emplace_back(-1, -1);
    for (auto& [k, g] : uniq) grp.generators_.push_back(g);

    for (size_t i = 0; i < grp.elements_.size(); ++i)
        for (size_t gi = 0; gi < grp.generators_.size(); ++gi) {
            MatrixOverCyc p = grp.elements_[i] * grp.generators_[gi];
            std::string k = p.key();
            if (grp.index_.count(k)) continue;
            if (static_cast<long>(grp.elements_.size()) >= cap)
                throw std::runtime_error("close_group: cap exceeded");
            grp.index_.emplace(std::move(k), static_cast<int>(grp.elements_.size()));
            grp.elements_.push_back(std::move(p));
            grp.parent_.emplace_back(static_cast<int>(i), static_cast<int>(gi));
        }
    for (const auto& g : grp.generators_) grp.gen_idx_.push_back(grp.index_.at(g.key()));
    return grp;
}

int FiniteMatrixGroup::index_of(const MatrixOverCyc& m) const {
    auto it = index_.find(m.key());
    return it == index_.end() ? -1 : it->second;
}

const std::vector<int>& FiniteMatrixGroup::gen_row(int k) const {
    size_t n = elements_.size();
    if (caches_->genrows.empty()) caches_->genrows.resize(generators_.size());
    if (caches_->genrows[k].empty()) {
        std::vector<int> row(n);
        for (size_t j = 0; j < n; ++j)
            row[j] = index_.at((generators_[k] * elements_[j]).key());
        caches_->genrows[k] = std::move(row);
    }
    return caches_->genrows[k];
}

const std::vector<int>& FiniteMatrixGroup::cayley_row(int i) const {
    size_t n = elements_.size();
    if (caches_->cayley.empty()) caches_->cayley.resize(n);
    if (!caches_->cayley[i].empty()) return caches_->cayley[i];
    // elements_[x] = elements_[p] * generators_[k] gives row_x = row_p o gen_row(k);
    // walk the parent chain down to a cached row, then compose back up
    std::vector<int> chain;
    int cur = i;
    while (cur != 0 && caches_->cayley[cur].empty()) {
        chain.push_back(cur);
        cur = parent_[cur].first;
    }
    if (caches_->cayley[0].empty()) {
        std::vector<int> idrow(n);
        for (size_t j = 0; j < n; ++j) idrow[j] = static_cast<int>(j);
        caches_->cayley[0] = std::move(idrow);
    }
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
        int x = *it;
        const std::vector<int>& pr = caches_->cayley[parent_[x].first];
        const std::vector<int>& gr = gen_row(parent_[x].second);
        std::vector<int> row(n);
        for (size_t j = 0; j < n; ++j) row[j] = pr[gr[j]];
        caches_->cayley[x] = std::move(row);
    }
    return caches_->cayley[i];
}

int FiniteMatrixGroup::mult(int i, int j) const {
    std::lock_guard<std::mutex> hold(caches_->lock);
    return cayley_row(i)[j];
}

void FiniteMatrixGroup::need_inverses() const {
    if (!caches_->inv.empty()) return;
    size_t n = elements_.size();
    std::vector<int> inv(n);
    for (size_t i = 0; i < n; ++i) {
        const auto& row = cayley_row(static_cast<int>(i));
        inv[i] = static_cast<int>(std::find(row.begin(), row.end(), 0) - row.begin());
    }
    caches_->inv = std::move(inv);
}

int FiniteMatrixGroup::inv(int i) const {
    std::lock_guard<std::mutex> hold(caches_->lock);
    need_inverses();
    return caches_->inv[i];
}

void FiniteMatrixGroup::need_orders() const {
    if (!caches_->eorder.empty()) return;
    size_t n = elements_.size();
    std::vector<long> ord(n);
    for (size_t i = 0; i < n; ++i) {
        int x = static_cast<int>(i);
        long o = 1;
        while (x != 0) {
            x = cayley_row(x)[i];
            ++o;
        }
        ord[i] = o;
    }
    caches_->eorder = std::move(ord);
}

long FiniteMatrixGroup::element_order_at(int i) const {
    std::lock_guard<std::mutex> hold(caches_->lock);
    need_orders();
    return caches_->eorder[i];
}

void FiniteMatrixGroup::need_classes() const {
    if (!caches_->classes.empty()) return;
    need_inverses();
    int n = static_cast<int>(elements_.size());
    caches_->class_of.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        if (caches_->class_of[i] >= 0) continue;
        int cls = static_cast<int>(caches_->classes.size());
        std::set<int> members;
        for (int g = 0; g < n; ++g) members.insert(cayley_row(cayley_row(caches_->inv[g])[i])[g]);
        ConjClass c;
        c.representative = *members.begin();
        c.members.assign(members.begin(), members.end());
        for (int m : c.members) caches_->class_of[m] = cls;
        caches_->classes.push_back(std::move(c));
    }
}

const std::vector<ConjClass>& FiniteMatrixGroup::classes() const {
    std::lock_guard<std::mutex> hold(caches_->lock);
    need_classes();
    return caches_->classes;
}

int FiniteMatrixGroup::class_of(int i) const {
    std::lock_guard<std::mutex> hold(caches_->lock);
    need_classes();
    return caches_->class_of[i];
}

std::vector<ConjClass> conjugacy_classes(const FiniteMatrixGroup& g) { return g.classes(); }

std::vector<int> center(const FiniteMatrixGroup& g) {
    int n = static_cast<int>(g.order());
    std::vector<int> out;
    for (int i = 0; i < n; ++i) {
        bool central = true;
        for (int j = 0; j < n && central; ++j) central = g.mult(i, j) == g.mult(j, i);
        if (central) out.push_back(i);
    }
    return out;
}

std::vector<int> centralizer(const FiniteMatrixGroup& g, const std::vector<int>& s) {
    int n = static_cast<int>(g.order());
    std::vector<int> out;
    for (int i = 0; i < n; ++i) {
        bool ok = true;
        for (int x : s)
            if (g.mult(i, x) != g.mult(x, i)) {
                ok = false;
                break;
            }
        if (ok) out.push_back(i);
    }
    return out;
}

bool is_subgroup(const FiniteMatrixGroup& g, const std::vector<int>& h) {
    std::set<int> hs(h.begin(), h.end());
    if (!hs.count(0)) return false;
    for (int a : h)
        for (int b : h)
            if (!hs.count(g.mult(a, b))) return false;
    return true;
}

std::vector<int> normalizer(const FiniteMatrixGroup& g, const std::vector<int>& h) {
    if (!is_subgroup(g, h)) throw std::invalid_argument("normalizer: h is not a subgroup");
    std::set<int> hs(h.begin(), h.end());
    int n = static_cast<int>(g.order());
    std::vector<int> out;
    for (int x = 0; x < n; ++x) {
        int xi = g.inv(x);
        bool ok = true;
        for (int a : h)
            if (!hs.count(g.mult(g.mult(x, a), xi))) {
                ok = false;
                break;
            }
        if (ok) out.push_back(x);
    }
    return out;
}

std::vector<int> subgroup_closure(const FiniteMatrixGroup& g, std::vector<int> seed) {
    std::set<int> have{0};
    std::vector<int> order{0};
    std::sort(seed.begin(), seed.end());
    seed.erase(std::unique(seed.begin(), seed.end()), seed.end());
    for (size_t i = 0; i < order.size(); ++i)
        for (int s : seed) {
            int p = g.mult(order[i], s);
            if (have.insert(p).second) order.push_back(p);
        }
    return std::vector<int>(have.begin(), have.end());
}

std::vector<int> sylow_subgroup(const FiniteMatrixGroup& g, long p) {
    long target = 1;
    {
        long n = g.order();
        while (n % p == 0) {
            n /= p;
            target *= p;
        }
    }
    std::vector<int> h{0};
    while (static_cast<long>(h.size()) < target) {
        // any p-power-order element of N(h) \ h extends h to a larger p-group
        std::vector<int> nh = normalizer(g, h);
        std::set<int> hs(h.begin(), h.end());
        int pick = -1;
        for (int x : nh) {
            if (hs.count(x)) continue;
            long o = g.element_order_at(x);
            while (o % p == 0) o /= p;
            if (o == 1) {
                pick = x;
                break;
            }
        }
        if (pick < 0) throw std::logic_error("sylow_subgroup: extension step failed");
        std::vector<int> seed = h;
        seed.push_back(pick);
        h = subgroup_closure(g, seed);
    }
    return h;
}

FiniteMatrixGroup materialize(const FiniteMatrixGroup& g, const std::vector<int>& idx) {
    if (!is_subgroup(g, idx)) throw std::invalid_argument("materialize: not a subgroup");
    FiniteMatrixGroup sub;
    sub.dim_ = g.dim();
    for (int i : idx) {
        if (i == 0) continue;
        sub.generators_.push_back(g.elements()[i]);
    }
    sub.elements_.push_back(MatrixOverCyc::identity(g.dim()));
    sub.index_.emplace(sub.elements_[0].key(), 0);
    sub.parent_.emplace_back(-1, -1);
    for (int i : idx) {
        if (i == 0) continue;
        const MatrixOverCyc& m = g.elements()[i];
        sub.index_.emplace(m.key(), static_cast<int>(sub.elements_.size()));
        sub.elements_.push_back(m);
        // every element is its own generator: elements_[t] = identity * generators_[t-1]
        sub.parent_.emplace_back(0, static_cast<int>(sub.elements_.size()) - 2);
    }
    for (const auto& gen : sub.generators_) sub.gen_idx_.push_back(sub.index_.at(gen.key()));
    return sub;
}

bool is_generated_by(const FiniteMatrixGroup& g,
                     const std::function<bool(const MatrixOverCyc&)>& pred) {
    std::vector<int> seed;
    for (int i = 0; i < static_cast<int>(g.order()); ++i)
        if (pred(g.elements()[i])) seed.push_back(i);
    return static_cast<long>(subgroup_closure(g, std::move(seed)).size()) == g.order();
}

std::vector<int> minimal_generating_indices(const FiniteMatrixGroup& g) {
    long n = g.order();
    std::vector<int> gens;
    std::vector<int> cur{0};
    while (static_cast<long>(cur.size()) < n) {
        int best = -1;
        size_t best_size = cur.size();
        for (int i = 1; i < n; ++i) {
            std::vector<int> seed = cur;
            seed.push_back(i);
            size_t sz = subgroup_closure(g, std::move(seed)).size();
            if (sz > best_size) {
                best = i;
                best_size = sz;
            }
        }
        gens.push_back(best);
        std::vector<int> seed = cur;
        seed.push_back(best);
        cur = subgroup_closure(g, std::move(seed));
    }
    return gens;
}

bool has_automorphism_of_order(const FiniteMatrixGroup& g, long k, long cap) {
    if (k < 1) throw std::invalid_argument("has_automorphism_of_order: k must be positive");
    if (g.order() > cap) throw std::runtime_error("has_automorphism_of_order: cap exceeded");
    if (k == 1) return true;
    int n = static_cast<int>(g.order());
    if (n == 1) return false;

    std::vector<int> gens = minimal_generating_indices(g);
    int t = static_cast<int>(gens.size());

    // orders of the prefix subgroups <gens[0..i]>, for pruning
    std::vector<size_t> prefix(t);
    {
        std::vector<int> seed;
        for (int i = 0; i < t; ++i) {
            seed.push_back(gens[i]);
            prefix[i] = subgroup_closure(g, seed).size();
        }
    }

    // derivation of every element as (parent, generator) words over gens
    std::vector<int> parent(n, -1), via(n, -1), bfs{0};
    for (size_t i = 0; i < bfs.size(); ++i)
        for (int j = 0; j < t; ++j) {
            int p = g.mult(bfs[i], gens[j]);
            if (p != 0 && parent[p] < 0) {
                parent[p] = bfs[i];
                via[p] = j;
                bfs.push_back(p);
            }
        }

    // candidate images: matching element order and conjugacy class size
    auto invariant = [&](int i) {
        return std::pair<long, size_t>(g.element_order_at(i),
                                       g.classes()[g.class_of(i)].members.size());
    };
    std::vector<std::vector<int>> cand(t);
    for (int j = 0; j < t; ++j)
        for (int i = 1; i < n; ++i)
            if (invariant(i) == invariant(gens[j])) cand[j].push_back(i);

    std::vector<int> img(t);
    std::vector<int> phi(n);
    auto leaf = [&]() -> bool {
        phi[0] = 0;
        for (size_t i = 1; i < bfs.size(); ++i) {
            int e = bfs[i];
            phi[e] = g.mult(phi[parent[e]], img[via[e]]);
        }
        std::vector<bool> seen(n, false);
        for (int x : phi) {
            if (seen[x]) return false;
            seen[x] = true;
        }
        for (int x = 0; x < n; ++x)
            for (int j = 0; j < t; ++j)
                if (phi[g.mult(x, gens[j])] != g.mult(phi[x], img[j])) return false;
        // order of the induced permutation
        std::vector<bool> done(n, false);
        long order = 1;
        for (int s = 0; s < n; ++s) {
            if (done[s]) continue;
            long len = 0;
            for (int x = s; !done[x]; x = phi[x]) {
                done[x] = true;
                ++len;
            }
            order = std::lcm(order, len);
        }
        return order % k == 0;
    };
    auto rec = [&](auto&& self, int j) -> bool {
        if (j == t) return leaf();
        for (int c : cand[j]) {
            img[j] = c;
            std::vector<int> seed(img.begin(), img.begin() + j + 1);
            if (subgroup_closure(g, std::move(seed)).size() != prefix[j]) continue;
            if (self(self, j + 1)) return true;
        }
        return false;
    };
    return rec(rec, 0);
}

bool acts_freely_in_codim(const FiniteMatrixGroup& g, int c) {
    int n = g.dim();
    for (long i = 1; i < g.order(); ++i)
        if (g.elements()[i].eigenvalue_one_multiplicity() > n - c - 1) return false;
    return true;
}

GroupFingerprint fingerprint(const FiniteMatrixGroup& g) {
    GroupFingerprint fp;
    fp.order = g.order();
    int n = static_cast<int>(g.order());
    for (int i = 0; i < n; ++i) {
        long o = g.element_order_at(i);
        ++fp.order_histogram[o];
        if (o == 2) ++fp.order2_count;
    }
    fp.center_order = static_cast<long>(center(g).size());
    fp.abelian = fp.center_order == fp.order;
    std::vector<int> comms;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            comms.push_back(g.mult(g.mult(g.inv(x), g.inv(y)), g.mult(x, y)));
    fp.derived_order = static_cast<long>(subgroup_closure(g, std::move(comms)).size());
    return fp;
}

}  // namespace crepant
