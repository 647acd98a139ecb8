#include <doctest.h>

#include "crepant/charpolys.hpp"
#include "crepant/cyclotomic.hpp"
#include "crepant/cycpoly.hpp"
#include "crepant/juniorenum.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

using namespace crepant;

namespace {

std::vector<Rational> parse_block(const std::string& s) {
    std::vector<Rational> out;
    std::stringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) out.push_back(parse_rational(tok));
    return out;
}

RankedEigenvector vec(long d, std::vector<long> exps) {
    std::sort(exps.begin(), exps.end());
    return {d, std::move(exps)};
}

}  // namespace

TEST_CASE("age basics") {
    CHECK(age(vec(3, {0, 0, 0, 1, 1, 1})) == Rational(1));
    CHECK(age(vec(1, {0, 0, 0, 0})) == Rational(0));
    CHECK(age(vec(7, {0, 0, 0, 1, 2, 4})) == Rational(1));
    CHECK(is_junior(vec(7, {0, 0, 0, 1, 2, 4})));
    CHECK(!is_junior(vec(9, {1, 4, 6, 7})));
    CHECK(age(vec(9, {1, 4, 6, 7})) == Rational(2));
}

TEST_CASE("age plus age of inverse counts nonzero exponents") {
    for (long d = 2; d <= 30; ++d)
        for (long a = 0; a < d; ++a)
            for (long b = a; b < d; ++b)
                for (long c = b; c < d; c += 3) {
                    RankedEigenvector v = vec(d, {0, a, b, c});
                    int nonzero = (a != 0) + (b != 0) + (c != 0);
                    CHECK(age(v) + age(inverse(v)) == Rational(nonzero));
                }
}

TEST_CASE("solve_phi_inequality") {
    std::vector<long> expect = {3,  4,  5,  6,  7,  8,  9,  10, 12, 14,
                                15, 16, 18, 20, 21, 24, 30, 36, 42};
    auto got = solve_phi_inequality();
    CHECK(got == expect);
    CHECK(std::find(got.begin(), got.end(), 11) == got.end());
    CHECK(std::find(got.begin(), got.end(), 42) != got.end());
}

TEST_CASE("s_value") {
    ExpMultiset half;  // {d/2} at d = 4
    half.d = 4;
    half.add(2);
    CHECK(s_value(half, 4, 2) == Rational(1, 2));

    ExpMultiset seven;
    seven.d = 7;
    seven.add(1);
    seven.add(2);
    seven.add(4);
    CHECK(s_value(seven, 7, 7) == Rational(1));

    ExpMultiset empty;
    empty.d = 6;
    CHECK(s_value(empty, 6, 6) == Rational(0));

    ExpMultiset bad;  // entry of order 3, claimed order 6
    bad.d = 6;
    bad.add(2);
    CHECK_THROWS(s_value(bad, 6, 6));
    CHECK_THROWS(s_value(half, 4, 3));
}

namespace {

struct BlockPin {
    long u;
    int alpha;
    const char* block;
    const char* s;
};

// The S <= 1 classification, with the u = 4, alpha = 1 singleton pair read as
// {1/4}, {3/4} (the second printed {1/4} is a transcription slip; its printed
// S-value 3/4 identifies the intended block).
const BlockPin kBlocks[] = {
    {2, 1, "1/2", "1/2"},
    {2, 2, "1/2,1/2", "1"},
    {3, 1, "1/3", "1/3"},
    {3, 1, "2/3", "2/3"},
    {3, 2, "1/3,1/3", "2/3"},
    {3, 2, "1/3,2/3", "1"},
    {3, 3, "1/3,1/3,1/3", "1"},
    {4, 1, "1/4", "1/4"},
    {4, 1, "3/4", "3/4"},
    {4, 2, "1/4,1/4", "1/2"},
    {4, 2, "1/4,3/4", "1"},
    {4, 3, "1/4,1/4,1/4", "3/4"},
    {4, 4, "1/4,1/4,1/4,1/4", "1"},
    {5, 1, "1/5,2/5", "3/5"},
    {5, 1, "1/5,3/5", "4/5"},
    {6, 1, "1/6", "1/6"},
    {6, 1, "5/6", "5/6"},
    {6, 2, "1/6,1/6", "1/3"},
    {6, 2, "1/6,5/6", "1"},
    {6, 3, "1/6,1/6,1/6", "1/2"},
    {6, 4, "1/6,1/6,1/6,1/6", "2/3"},
    {6, 5, "1/6,1/6,1/6,1/6,1/6", "5/6"},
    {6, 6, "1/6,1/6,1/6,1/6,1/6,1/6", "1"},
    {7, 1, "1/7,2/7,3/7", "6/7"},
    {7, 1, "1/7,2/7,4/7", "1"},
    {8, 1, "1/8,3/8", "1/2"},
    {8, 1, "1/8,5/8", "3/4"},
    {8, 2, "1/8,1/8,3/8,3/8", "1"},
    {9, 1, "1/9,2/9,4/9", "7/9"},
    {9, 1, "1/9,2/9,5/9", "8/9"},
    {10, 1, "1/10,3/10", "2/5"},
    {10, 1, "1/10,7/10", "4/5"},
    {10, 2, "1/10,1/10,3/10,3/10", "4/5"},
    {12, 1, "1/12,5/12", "1/2"},
    {12, 1, "1/12,7/12", "2/3"},
    {12, 2, "1/12,1/12,5/12,5/12", "1"},
    {14, 1, "1/14,3/14,5/14", "9/14"},
    {14, 1, "1/14,3/14,9/14", "13/14"},
    {15, 1, "1/15,2/15,4/15,7/15", "14/15"},
    {15, 1, "1/15,2/15,4/15,8/15", "1"},
    {16, 1, "1/16,3/16,5/16,7/16", "1"},
    {18, 1, "1/18,5/18,7/18", "13/18"},
    {18, 1, "1/18,5/18,11/18", "17/18"},
    {20, 1, "1/20,3/20,7/20,9/20", "1"},
    {24, 1, "1/24,5/24,7/24,11/24", "1"},
};

}  // namespace

TEST_CASE("enumerate_blocks reproduces the S-value table") {
    auto rows = enumerate_blocks();
    REQUIRE(rows.size() == std::size(kBlocks));
    for (size_t i = 0; i < rows.size(); ++i) {
        CAPTURE(i);
        CHECK(rows[i].u == kBlocks[i].u);
        CHECK(rows[i].alpha == kBlocks[i].alpha);
        CHECK(rows[i].block == parse_block(kBlocks[i].block));
        CHECK(rows[i].s == parse_rational(kBlocks[i].s));
    }
}

TEST_CASE("block rows satisfy the defining multiset identity") {
    for (const auto& r : enumerate_blocks()) {
        ExpMultiset A;
        A.d = r.u;
        for (const auto& f : r.block) A.add(numerator(f).convert_to<long>());
        ExpMultiset expect;
        expect.d = r.u;
        for (long a = 1; a < r.u; ++a)
            if (std::gcd(a, r.u) == 1) expect.add(a, r.alpha);
        CHECK(conjugate_closure(A) == expect);
        // S is invariant under scaling A into Z/2u, which keeps d >= 3 for u = 2
        ExpMultiset A2;
        A2.d = 2 * r.u;
        for (const auto& [a, m] : A.entries) A2.add(2 * a, m);
        CHECK(s_value(A2, 2 * r.u, r.u) == r.s);
    }
}

namespace {

struct PartitionPin {
    const char* us;      // comma-separated u sequence
    const char* alphas;  // comma-separated alpha sequence
    const char* blocks;  // blocks joined by ';'
    bool free2;
};

// 33 printed rows plus the two combinations {1/3},{1/6},{1/8,3/8} and
// {1/3},{1/6},{1/12,5/12} (sums 1/3 + 1/6 + 1/2) that the printed table
// omits; both are not free in codimension 2.
const PartitionPin kPartitions[] = {
    {"2", "2", "1/2,1/2", false},
    {"2,3,6", "1,1,1", "1/2;1/3;1/6", false},
    {"2,4", "1,2", "1/2;1/4,1/4", false},
    {"2,6", "1,3", "1/2;1/6,1/6,1/6", true},
    {"2,8", "1,1", "1/2;1/8,3/8", false},
    {"2,12", "1,1", "1/2;1/12,5/12", false},
    {"3", "2", "1/3,2/3", false},
    {"3", "3", "1/3,1/3,1/3", true},
    {"3,4,6", "1,2,1", "1/3;1/4,1/4;1/6", false},
    {"3,6", "1,2", "2/3;1/6,1/6", false},
    {"3,6", "1,4", "1/3;1/6,1/6,1/6,1/6", true},
    {"3,6", "2,2", "1/3,1/3;1/6,1/6", false},
    {"3,6,8", "1,1,1", "1/3;1/6;1/8,3/8", false},
    {"3,6,12", "1,1,1", "1/3;1/6;1/12,5/12", false},
    {"3,12", "1,1", "1/3;1/12,7/12", false},
    {"4", "2", "1/4,3/4", false},
    {"4", "4", "1/4,1/4,1/4,1/4", true},
    {"4,6", "2,3", "1/4,1/4;1/6,1/6,1/6", false},
    {"4,8", "1,1", "1/4;1/8,5/8", false},
    {"4,8", "2,1", "1/4,1/4;1/8,3/8", false},
    {"4,12", "2,1", "1/4,1/4;1/12,5/12", false},
    {"5,10", "1,1", "1/5,2/5;1/10,3/10", false},
    {"6", "2", "1/6,5/6", false},
    {"6", "6", "1/6,1/6,1/6,1/6,1/6,1/6", true},
    {"6,8", "3,1", "1/6,1/6,1/6;1/8,3/8", false},
    {"6,12", "2,1", "1/6,1/6;1/12,7/12", false},
    {"6,12", "3,1", "1/6,1/6,1/6;1/12,5/12", false},
    {"7", "1", "1/7,2/7,4/7", true},
    {"8", "2", "1/8,1/8,3/8,3/8", true},
    {"8,12", "1,1", "1/8,3/8;1/12,5/12", false},
    {"12", "2", "1/12,1/12,5/12,5/12", true},
    {"15", "1", "1/15,2/15,4/15,8/15", true},
    {"16", "1", "1/16,3/16,5/16,7/16", true},
    {"20", "1", "1/20,3/20,7/20,9/20", true},
    {"24", "1", "1/24,5/24,7/24,11/24", true},
};

std::vector<long> parse_longs(const std::string& s) {
    std::vector<long> out;
    std::stringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) out.push_back(std::stol(tok));
    return out;
}

}  // namespace

TEST_CASE("enumerate_partitions reproduces the partition table") {
    auto rows = enumerate_partitions();
    REQUIRE(rows.size() == std::size(kPartitions));
    int free_count = 0;
    for (size_t i = 0; i < rows.size(); ++i) {
        CAPTURE(i);
        auto us = parse_longs(kPartitions[i].us);
        auto alphas = parse_longs(kPartitions[i].alphas);
        REQUIRE(rows[i].rows.size() == us.size());
        std::stringstream in(kPartitions[i].blocks);
        std::string tok;
        for (size_t k = 0; k < us.size(); ++k) {
            CHECK(rows[i].rows[k].u == us[k]);
            CHECK(rows[i].rows[k].alpha == alphas[k]);
            std::getline(in, tok, ';');
            CHECK(rows[i].rows[k].block == parse_block(tok));
        }
        CHECK(rows[i].free_codim2 == kPartitions[i].free2);
        if (rows[i].free_codim2) ++free_count;
    }
    CHECK(free_count == 12);
}

TEST_CASE("partition invariants") {
    for (const auto& p : enumerate_partitions()) {
        Rational total = 0;
        long prev = 0;
        for (const auto& r : p.rows) {
            CHECK(r.u > prev);  // distinct, increasing u
            prev = r.u;
            total += r.s;
        }
        CHECK(total == Rational(1));
    }
}

TEST_CASE("classify_junior_types") {
    const std::vector<JuniorType> expect6 = {
        {3, {1, 1, 1}},          {4, {1, 1, 1, 1}},    {6, {1, 1, 1, 3}},
        {6, {1, 1, 1, 1, 2}},    {6, {1, 1, 1, 1, 1, 1}}, {7, {1, 2, 4}},
        {8, {1, 1, 3, 3}},       {12, {1, 1, 5, 5}},   {15, {1, 2, 4, 8}},
        {16, {1, 3, 5, 7}},      {20, {1, 3, 7, 9}},   {24, {1, 5, 7, 11}},
    };
    auto got6 = classify_junior_types(6);
    CHECK(got6 == expect6);
    CHECK(classify_junior_types(8) == expect6);

    auto got4 = classify_junior_types(4);
    REQUIRE(got4.size() == 10);
    for (const auto& t : got4) CHECK(t.tail.size() <= 4);
    std::vector<JuniorType> expect4 = expect6;
    expect4.erase(std::remove_if(expect4.begin(), expect4.end(),
                                 [](const JuniorType& t) { return t.tail.size() > 4; }),
                  expect4.end());
    CHECK(got4 == expect4);
}

TEST_CASE("check_free_in_codim") {
    CHECK(check_free_in_codim(vec(3, {1, 1, 1}), 2));
    CHECK(!check_free_in_codim(vec(4, {0, 0, 1, 2}), 2));  // the square fixes codim 2
    CHECK(check_free_in_codim(vec(6, {0, 1, 1, 1, 3}), 2));
    // c = 0 holds whenever gcd(exponents, d) = 1 and d >= 2
    CHECK(check_free_in_codim(vec(6, {0, 2, 3, 4}), 0));
    // monotone in c
    for (long d = 2; d <= 16; ++d)
        for (long a = 0; a < d; ++a)
            for (long b = a; b < d; ++b) {
                RankedEigenvector v = vec(d, {1, a, b, (a + b) % d});
                for (int c = 3; c >= 1; --c)
                    if (check_free_in_codim(v, c)) CHECK(check_free_in_codim(v, c - 1));
            }
}

namespace {

struct FourfoldPin {
    long order;
    std::vector<long> exps;
    bool junior;
    const char* tag;
};

const std::vector<FourfoldPin> kFourfold = {
    {1, {0, 0, 0, 0}, false, "arbitrary"},
    {2, {1, 1, 1, 1}, false, "arbitrary"},
    {3, {0, 1, 1, 1}, true, "ExEj3"},
    {3, {1, 1, 2, 2}, false, "arbitrary"},
    {4, {1, 1, 1, 1}, true, "Ei4"},
    {4, {1, 1, 3, 3}, false, "arbitrary"},
    {5, {1, 2, 3, 4}, false, "arbitrary"},
    {6, {1, 1, 1, 3}, true, "ExEj3"},
    {6, {1, 1, 5, 5}, false, "arbitrary"},
    {7, {0, 1, 2, 4}, true, "ExEu7_3"},
    {8, {1, 1, 3, 3}, true, "Eu8_4"},
    {8, {1, 3, 5, 7}, false, "arbitrary"},
    {9, {1, 4, 6, 7}, false, "Ej4"},
    {10, {1, 3, 7, 9}, false, "arbitrary"},
    {12, {1, 1, 5, 5}, true, "Ei4"},
    {12, {1, 5, 7, 11}, false, "arbitrary"},
    {14, {1, 7, 9, 11}, false, "ExEu7_3"},
    {15, {1, 2, 4, 8}, true, "Eu15_4"},
    {16, {1, 3, 5, 7}, true, "Su16v16_2"},
    {16, {1, 7, 11, 13}, false, "Su16v16_2"},
    {18, {1, 7, 13, 15}, false, "Ej4"},
    {20, {1, 3, 7, 9}, true, "Eu20_4"},
    {20, {1, 9, 13, 17}, false, "Ei4"},
    {24, {1, 5, 7, 11}, true, "Eu24_4"},
    {24, {1, 11, 17, 19}, false, "Eu8_4"},
    {30, {1, 17, 19, 23}, false, "Eu15_4"},
};

}  // namespace

TEST_CASE("classify_fourfold_elements reproduces the fourfold table") {
    auto got = classify_fourfold_elements();
    REQUIRE(got.size() == kFourfold.size());
    for (size_t i = 0; i < got.size(); ++i) {
        CAPTURE(i);
        CHECK(got[i].order == kFourfold[i].order);
        CHECK(got[i].exponents == kFourfold[i].exps);
        CHECK(got[i].junior == kFourfold[i].junior);
        CHECK(got[i].isogeny_tag == kFourfold[i].tag);
    }
    std::set<long> orders;
    for (const auto& c : got) orders.insert(c.order);
    CHECK(orders == std::set<long>{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 14, 15, 16, 18, 20, 24, 30});
    CHECK(orders.count(32) == 0);
    CHECK(orders.count(40) == 0);
    CHECK(orders.count(60) == 0);
}

TEST_CASE("fourfold classes are closed under coprime powers") {
    auto got = classify_fourfold_elements();
    std::set<std::pair<long, std::vector<long>>> keyset;
    for (const auto& c : got) keyset.insert({c.order, c.exponents});
    for (const auto& c : got)
        for (long k = 1; k < c.order; ++k) {
            if (std::gcd(k, c.order) != 1) continue;
            std::vector<long> p(4), q(4);
            for (int i = 0; i < 4; ++i) p[i] = (k * c.exponents[i]) % c.order;
            std::sort(p.begin(), p.end());
            for (int i = 0; i < 4; ++i) q[i] = (c.order - p[i]) % c.order;
            std::sort(q.begin(), q.end());
            CHECK(keyset.count({c.order, std::min(p, q)}) == 1);
        }
    // the two order-16 classes generate the same cyclic group
    std::vector<long> cubed = {3, 9, 15, 21};
    for (auto& x : cubed) x %= 16;
    std::sort(cubed.begin(), cubed.end());
    CHECK(cubed == std::vector<long>{3, 5, 9, 15});  // inverse pair of {1,7,11,13}
}

TEST_CASE("junior types cross-validated by brute force in dimension 6") {
    // Independent oracle: all sorted degree-6 exponent vectors of exact order
    // d <= 30 with age 1, codim-2 freeness, and cyclotomic degree-12 real
    // characteristic polynomial.
    std::set<std::pair<long, std::vector<long>>> found;
    for (long d = 2; d <= 30; ++d) {
        std::vector<long> v(6);
        auto rec = [&](auto&& self, int i, long lo, long sum) -> void {
            if (sum > d) return;
            if (i == 6) {
                if (sum != d) return;
                long order = 1;
                for (long a : v) order = std::lcm(order, d / std::gcd(a, d));
                if (order != d) return;
                if (!check_free_in_codim({d, v}, 2)) return;
                CycPoly p = CycPoly::constant(CycNum::from_rational(1));
                for (long a : v) {
                    p = p * CycPoly::x_minus(CycNum::zeta(d, a));
                    p = p * CycPoly::x_minus(CycNum::zeta(d, (d - a) % d));
                }
                auto ip = p.to_intpoly();
                if (!ip || !factor_into_cyclotomics(*ip)) return;
                std::vector<long> tail;
                for (long a : v)
                    if (a != 0) tail.push_back(a);
                found.insert({d, tail});
                return;
            }
            for (long a = lo; a < d; ++a) {
                v[i] = a;
                self(self, i + 1, a, sum + a);
            }
        };
        rec(rec, 0, 0, 0);
    }
    std::set<std::pair<long, std::vector<long>>> expect;
    for (const auto& t : classify_junior_types(6)) expect.insert({t.d, t.tail});
    CHECK(found == expect);
}

namespace {

CycPoly ipoly(const IntPoly& p) { return CycPoly::from_intpoly(p); }

CycPoly phi(long n) { return ipoly(cyclotomic_poly(n)); }

bool contains(const std::vector<CycPoly>& v, const CycPoly& p) {
    return std::find(v.begin(), v.end(), p) != v.end();
}

}  // namespace

TEST_CASE("admissible_charpolys over Q(u7)") {
    auto [c124, c356] = factor_phi7_over_Qu7();
    CharpolyConstraints cs;
    cs.det_one = true;
    cs.needs_eigenvalue_one = true;

    auto m3 = admissible_charpolys(3, CoeffField::Qu7, cs);
    REQUIRE(m3.size() == 7);
    CHECK(contains(m3, phi(1) * phi(1) * phi(1)));
    CHECK(contains(m3, phi(1) * phi(2) * phi(2)));
    CHECK(contains(m3, phi(1) * phi(3)));
    CHECK(contains(m3, phi(1) * phi(4)));
    CHECK(contains(m3, phi(1) * phi(6)));
    CHECK(contains(m3, c124));
    CHECK(contains(m3, c356));

    auto m4 = admissible_charpolys(4, CoeffField::Qu7, cs);
    REQUIRE(m4.size() == 7);
    CHECK(contains(m4, phi(1) * phi(1) * phi(1) * phi(1)));
    CHECK(contains(m4, phi(1) * phi(1) * phi(2) * phi(2)));
    CHECK(contains(m4, phi(1) * phi(1) * phi(3)));
    CHECK(contains(m4, phi(1) * phi(1) * phi(4)));
    CHECK(contains(m4, phi(1) * phi(1) * phi(6)));
    CHECK(contains(m4, c124 * phi(1)));
    CHECK(contains(m4, c356 * phi(1)));
}

TEST_CASE("admissible_charpolys over Q(j)") {
    CycPoly xmj = CycPoly::x_minus(CycNum::zeta(3, 1));
    CycPoly xmj2 = CycPoly::x_minus(CycNum::zeta(3, 2));
    CharpolyConstraints cs;
    cs.det_one = true;
    cs.needs_eigenvalue_one = true;

    auto m4 = admissible_charpolys(4, CoeffField::Qj, cs);
    REQUIRE(m4.size() == 7);
    CHECK(contains(m4, phi(1) * phi(1) * phi(1) * phi(1)));
    CHECK(contains(m4, phi(1) * phi(1) * phi(2) * phi(2)));
    CHECK(contains(m4, phi(1) * phi(1) * phi(3)));
    CHECK(contains(m4, phi(1) * phi(1) * phi(4)));
    CHECK(contains(m4, phi(1) * phi(1) * phi(6)));
    CHECK(contains(m4, xmj * xmj * xmj * phi(1)));
    CHECK(contains(m4, xmj2 * xmj2 * xmj2 * phi(1)));

    CharpolyConstraints ord11;
    ord11.order = 11;
    CHECK(admissible_charpolys(3, CoeffField::Qj, ord11).empty());
}
