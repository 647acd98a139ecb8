#include "crepant/catalog.hpp"

#include "crepant/serialize.hpp"

#include <cstdlib>
#include <fstream>
#include <numeric>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace crepant {

namespace {

CycNum rat(long n) { return CycNum::from_rational(Rational(n)); }
CycNum half(long n) { return CycNum::from_rational(Rational(n, 2)); }

MatrixOverCyc mat2(CycNum a, CycNum b, CycNum c, CycNum d) {
    return MatrixOverCyc(2, {std::move(a), std::move(b), std::move(c), std::move(d)});
}

/** Permutation of the 7 nonzero vectors of F_2^3 induced by a 0/1 matrix. */
std::vector<int> f2_action(const int m[3][3]) {
    std::vector<int> img(7);
    for (int v = 1; v <= 7; ++v) {
        int x[3] = {v & 1, (v >> 1) & 1, (v >> 2) & 1};
        int w[3];
        for (int r = 0; r < 3; ++r) w[r] = (m[r][0] * x[0] + m[r][1] * x[1] + m[r][2] * x[2]) % 2;
        img[v - 1] = (w[0] | (w[1] << 1) | (w[2] << 2)) - 1;
    }
    return img;
}

/** Permutation of the 8 nonzero vectors of F_3^2 induced by a matrix mod 3. */
std::vector<int> f3_action(const int m[2][2]) {
    auto idx = [](int a, int b) { return a * 3 + b - 1; };  // skip (0,0)
    std::vector<int> img(8);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            if (a == 0 && b == 0) continue;
            int wa = (m[0][0] * a + m[0][1] * b) % 3;
            int wb = (m[1][0] * a + m[1][1] * b) % 3;
            img[static_cast<size_t>(idx(a, b))] = idx(wa, wb);
        }
    return img;
}

/** Disjoint union of two one-line permutation arrays. */
std::vector<int> perm_union(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out = a;
    int off = static_cast<int>(a.size());
    for (int x : b) out.push_back(off + x);
    return out;
}

std::vector<int> perm_id(int n) {
    std::vector<int> out(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) out[static_cast<size_t>(i)] = i;
    return out;
}

long pow_mod(long b, long e, long n) {
    long r = 1 % n;
    b %= n;
    for (; e > 0; e >>= 1) {
        if (e & 1) r = r * b % n;
        b = b * b % n;
    }
    return r;
}

}  // namespace

FiniteMatrixGroup close_entry(const CatalogEntry& e, long cap) {
    FiniteMatrixGroup g;
    try {
        g = close_group(e.generators, cap);
    } catch (const std::exception& ex) {
        throw std::runtime_error("catalog entry '" + e.name + "': " + ex.what());
    }
    if (e.expected_order && g.order() != *e.expected_order)
        throw std::runtime_error("catalog entry '" + e.name + "': closure has order " +
                                 std::to_string(g.order()) + ", expected " +
                                 std::to_string(*e.expected_order));
    return g;
}

const FiniteMatrixGroup& cached_closure(const CatalogEntry& e, long cap) {
    static std::mutex lock;
    static std::map<std::string, FiniteMatrixGroup> cache;
    std::string key = e.name + "@" + std::to_string(cap);
    for (const auto& g : e.generators) key += "|" + g.key();
    std::lock_guard<std::mutex> guard(lock);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(std::move(key), close_entry(e, cap)).first;
    return it->second;
}

CatalogEntry build_cyclic(long n) {
    if (n < 1) throw std::invalid_argument("build_cyclic: n must be positive");
    CatalogEntry e;
    e.name = "Z" + std::to_string(n);
    e.generators = {MatrixOverCyc::diagonal({CycNum::zeta(n)})};
    e.expected_order = n;
    return e;
}

CatalogEntry build_direct(const CatalogEntry& a, const CatalogEntry& b) {
    int da = a.generators.empty() ? 0 : a.generators.front().dim();
    int db = b.generators.empty() ? 0 : b.generators.front().dim();
    int n = da + db;
    CatalogEntry e;
    e.name = a.name + "x" + b.name;
    auto pad = [&](const MatrixOverCyc& m, int off) {
        std::vector<CycNum> ent(static_cast<size_t>(n) * n);
        for (int i = 0; i < n; ++i) ent[static_cast<size_t>(i) * n + i] = rat(1);
        for (int i = 0; i < m.dim(); ++i)
            for (int j = 0; j < m.dim(); ++j)
                ent[static_cast<size_t>(off + i) * n + off + j] = m.at(i, j);
        return MatrixOverCyc(n, std::move(ent));
    };
    for (const auto& g : a.generators) e.generators.push_back(pad(g, 0));
    for (const auto& g : b.generators) e.generators.push_back(pad(g, da));
    if (a.expected_order && b.expected_order)
        e.expected_order = *a.expected_order * *b.expected_order;
    return e;
}

CatalogEntry build_semidirect_cyclic(long n, long k, long m) {
    if (n < 2 || k < 2 || m < 0) throw std::invalid_argument("build_semidirect_cyclic: bad sizes");
    m %= n;
    if (std::gcd(m, n) != 1 || pow_mod(m, k, n) != 1)
        throw std::invalid_argument(
            "build_semidirect_cyclic: invalid action (m must be a unit mod n with m^k = 1)");
    long e = 1, t = m;
    while (t != 1) {
        t = t * m % n;
        ++e;
    }
    if (e == 1) return build_direct(build_cyclic(n), build_cyclic(k));
    // representation induced from the abelian subgroup <a, t^e>
    CatalogEntry out;
    out.name = "Z" + std::to_string(n) + "sdZ" + std::to_string(k);
    std::vector<CycNum> adiag;
    long p = 1;
    for (long i = 0; i < e; ++i) {
        adiag.push_back(CycNum::zeta(n, p));
        p = p * m % n;
    }
    int dim = static_cast<int>(e);
    std::vector<CycNum> tmat(static_cast<size_t>(dim) * dim);
    for (int i = 1; i < dim; ++i) tmat[static_cast<size_t>(i) * dim + i - 1] = rat(1);
    tmat[static_cast<size_t>(dim) - 1] = CycNum::zeta(k, e);  // corner carries t^e
    out.generators = {MatrixOverCyc::diagonal(adiag), MatrixOverCyc(dim, std::move(tmat))};
    out.expected_order = n * k;
    return out;
}

CatalogEntry build_quaternion(long q) {
    if (q < 8 || (q & (q - 1)) != 0)
        throw std::invalid_argument("build_quaternion: order must be a power of two >= 8");
    CatalogEntry e;
    e.name = "Q" + std::to_string(q);
    e.generators = {MatrixOverCyc::diagonal({CycNum::zeta(q / 2), CycNum::zeta(q / 2, q / 2 - 1)}),
                    mat2(rat(0), rat(1), rat(-1), rat(0))};
    e.expected_order = q;
    return e;
}

CatalogEntry build_semidirect_quaternion(long n, long q, bool by_diagonal) {
    if (n < 3 || n % 2 == 0 || (q != 8 && q != 16))
        throw std::invalid_argument("build_semidirect_quaternion: need odd n >= 3 and q in {8,16}");
    CatalogEntry e;
    e.name = "Z" + std::to_string(n) + "sdQ" + std::to_string(q);
    if (!by_diagonal) {
        e.generators = {MatrixOverCyc::diagonal({CycNum::zeta(n), CycNum::zeta(n, n - 1)}),
                        MatrixOverCyc::diagonal({CycNum::zeta(q / 2), CycNum::zeta(q / 2, q / 2 - 1)}),
                        mat2(rat(0), rat(1), rat(-1), rat(0))};
    } else {
        if (q != 16)
            throw std::invalid_argument("build_semidirect_quaternion: by_diagonal needs q = 16");
        // induced from the centralizing index-2 subgroup Z_n x <A^2, B>
        CycNum i = CycNum::zeta(4), z = CycNum::zeta(n), zi = CycNum::zeta(n, n - 1);
        CycNum o = rat(0), l = rat(1);
        MatrixOverCyc a = MatrixOverCyc::diagonal({z, z, zi, zi});
        MatrixOverCyc A(4, {o, o, i, o,
                            o, o, o, -i,
                            l, o, o, o,
                            o, l, o, o});
        MatrixOverCyc B(4, {o, l, o, o,
                            -l, o, o, o,
                            o, o, o, -i,
                            o, o, -i, o});
        e.generators = {a, A, B};
    }
    e.expected_order = n * q;
    return e;
}

CatalogEntry build_sl23() {
    CycNum i = CycNum::zeta(4);
    CatalogEntry e;
    e.name = "SL23";
    // the quaternion group extended by the order-3 unit (-1+i+j+k)/2
    e.generators = {mat2(i, rat(0), rat(0), -i), mat2(rat(0), rat(1), rat(-1), rat(0)),
                    mat2(half(-1) + half(1) * i, half(1) + half(1) * i, half(-1) + half(1) * i,
                         half(-1) - half(1) * i)};
    e.expected_order = 24;
    return e;
}

CatalogEntry build_sl32() {
    // a transvection and a Singer cycle (companion matrix of X^3 + X + 1)
    const int t[3][3] = {{1, 1, 0}, {0, 1, 0}, {0, 0, 1}};
    const int c[3][3] = {{0, 0, 1}, {1, 0, 0}, {0, 1, 1}};
    CatalogEntry e;
    e.name = "SL32";
    e.generators = {MatrixOverCyc::permutation(f2_action(t)),
                    MatrixOverCyc::permutation(f2_action(c))};
    e.expected_order = 168;
    return e;
}

CatalogEntry build_q8_frobenius() {
    // fiber product of SL(2,3) (on the 8 nonzero vectors of F_3^2) and
    // Z7 x| Z3 (on 7 points) over their common Z3 quotients
    const int x[2][2] = {{0, 2}, {1, 0}};
    const int y[2][2] = {{1, 1}, {1, 2}};
    const int w[2][2] = {{1, 1}, {0, 1}};
    std::vector<int> t7(7), c7(7);
    for (int i = 0; i < 7; ++i) {
        t7[static_cast<size_t>(i)] = (i + 1) % 7;
        c7[static_cast<size_t>(i)] = 2 * i % 7;
    }
    CatalogEntry e;
    e.name = "Q8sd_Z7sdZ3";
    e.generators = {MatrixOverCyc::permutation(perm_union(f3_action(x), perm_id(7))),
                    MatrixOverCyc::permutation(perm_union(f3_action(y), perm_id(7))),
                    MatrixOverCyc::permutation(perm_union(f3_action(w), c7)),
                    MatrixOverCyc::permutation(perm_union(perm_id(8), t7))};
    e.expected_order = 168;
    return e;
}

const std::vector<CatalogEntry>& builtin_catalog() {
    static const std::vector<CatalogEntry> entries = [] {
        std::vector<CatalogEntry> out;
        out.push_back(build_cyclic(3));
        out.push_back(build_cyclic(7));
        out.push_back(build_cyclic(15));
        out.push_back(build_quaternion(8));
        out.push_back(build_quaternion(16));
        out.push_back(build_sl23());
        out.push_back(build_sl32());
        out.push_back(build_direct(build_cyclic(3), build_cyclic(3)));
        out.push_back(build_direct(build_cyclic(7), build_cyclic(7)));
        out.push_back(build_semidirect_cyclic(3, 8, 2));
        out.push_back(build_semidirect_cyclic(7, 3, 2));
        out.push_back(build_q8_frobenius());
        out.push_back(build_direct(build_cyclic(3), build_q8_frobenius()));
        auto tag = [](CatalogEntry e, const char* t) {
            e.tags.push_back(t);
            return e;
        };
        out.push_back(tag(build_direct(build_cyclic(5), build_quaternion(8)), "smallgroup(40,11)"));
        out.push_back(tag(build_semidirect_quaternion(5, 8), "smallgroup(40,4)"));
        out.push_back(tag(build_semidirect_quaternion(5, 16, true), "smallgroup(80,18)"));
        out.push_back(tag(build_semidirect_quaternion(3, 16), "smallgroup(48,8)"));
        out.push_back(tag(build_direct(build_cyclic(3), build_quaternion(16)), "smallgroup(48,27)"));
        return out;
    }();
    return entries;
}

nlohmann::json generators_to_json(const std::vector<MatrixOverCyc>& gens) {
    nlohmann::json data = nlohmann::json::array();
    for (const auto& g : gens) data.push_back(matrix_to_json(g));
    return {{"kind", "matrix"}, {"data", data}};
}

std::vector<CatalogEntry> load_catalog(const std::string& path, long cap) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_catalog: cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    if (text.find_first_not_of(" \t\r\n") == std::string::npos) return {};
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& ex) {
        throw std::runtime_error(std::string("load_catalog: ") + ex.what());
    }
    std::vector<CatalogEntry> out;
    for (const auto& je : doc.value("entries", nlohmann::json::array())) {
        CatalogEntry e;
        try {
            e.name = je.at("name").get<std::string>();
            const auto& gens = je.at("generators");
            std::string kind = gens.at("kind").get<std::string>();
            if (kind == "perm") {
                for (const auto& row : gens.at("data"))
                    e.generators.push_back(MatrixOverCyc::permutation(row.get<std::vector<int>>()));
            } else if (kind == "matrix") {
                for (const auto& jm : gens.at("data")) e.generators.push_back(matrix_from_json(jm));
            } else {
                throw std::runtime_error("unknown generator kind '" + kind + "'");
            }
            if (je.contains("expected_order")) e.expected_order = je.at("expected_order").get<long>();
            if (je.contains("tags")) e.tags = je.at("tags").get<std::vector<std::string>>();
        } catch (const std::exception& ex) {
            std::string name = je.is_object() ? je.value("name", "?") : "?";
            throw std::runtime_error("load_catalog: entry '" + name + "': " + ex.what());
        }
        close_entry(e, cap);  // validates closure and the order hint
        out.push_back(std::move(e));
    }
    return out;
}

long default_cap() {
    if (const char* env = std::getenv("CREPANT_CAP")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 1000000;
}

}  // namespace crepant
