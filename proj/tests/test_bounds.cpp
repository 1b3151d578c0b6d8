#include <doctest.h>

#include <string>

#include "atomkit/bounds.hpp"

using namespace atomkit;

namespace {

// Frozen bound grid for n = 1..10, r = 0..5; -1 marks r > n.
const long kTable[6][10] = {
    {1, 3, 7, 15, 31, 63, 127, 255, 511, 1023},
    {1, 3, 10, 29, 76, 187, 442, 1017, 2296, 5111},
    {-1, 3, 10, 43, 141, 406, 1086, 2773, 6859, 16576},
    {-1, -1, 7, 29, 141, 501, 1548, 4425, 12043, 31681},
    {-1, -1, -1, 15, 76, 406, 1548, 5083, 15361, 44071},
    {-1, -1, -1, -1, 31, 187, 1086, 4425, 15361, 48733},
};

const long kMaxRow[10] = {1, 3, 10, 43, 141, 501, 1548, 5083, 15361, 48733};

} // namespace

TEST_CASE("binomial coefficients") {
    CHECK(binom(4, 2) == 6);
    CHECK(binom(0, 0) == 1);
    for (int n = 0; n <= 12; ++n)
        CHECK(binom(n, 0) == 1);
    CHECK(binom(5, -1) == 0);
    CHECK(binom(5, 6) == 0);
    CHECK_THROWS_AS(binom(-1, 0), std::invalid_argument);
    CHECK(binom(40, 20) == BigCount("137846528820"));
}

TEST_CASE("binomial convolution identity") {
    // sum_{h=k}^{n} C(n,h)*C(h,k) = 2^(n-k)*C(n,k)
    for (int n = 0; n <= 20; ++n)
        for (int k = 0; k <= n; ++k) {
            BigCount sum = 0;
            for (int h = k; h <= n; ++h)
                sum += binom(n, h) * binom(h, k);
            BigCount expected;
            mpz_ui_pow_ui(expected.get_mpz_t(), 2, static_cast<unsigned long>(n - k));
            CHECK(sum == expected * binom(n, k));
        }
}

TEST_CASE("bound grid reproduces the frozen values") {
    for (int r = 0; r <= 5; ++r)
        for (int n = 1; n <= 10; ++n) {
            if (kTable[r][n - 1] < 0)
                continue;
            CHECK(atom_bound(n, r) == kTable[r][n - 1]);
        }
    for (int n = 1; n <= 10; ++n)
        CHECK(max_bound(n).value == kMaxRow[n - 1]);
}

TEST_CASE("bound argument validation") {
    CHECK_THROWS_AS(atom_bound(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(atom_bound(3, -1), std::invalid_argument);
    CHECK_THROWS_AS(atom_bound(3, 4), std::invalid_argument);
    CHECK(atom_bound(1, 0) == 1);
    CHECK(atom_bound(1, 1) == 1);
    CHECK(atom_bound(10, 0) == 1023);
    CHECK(atom_bound(10, 10) == 1023);
}

TEST_CASE("closed forms agree with the double sum") {
    CHECK(atom_bound_closed(3, 1) == 10);
    CHECK(atom_bound_closed(4, 2) == 43);
    for (int n = 2; n <= 30; ++n)
        for (int r = 1; r <= 3 && r <= n - 1; ++r)
            CHECK(atom_bound_closed(n, r) == atom_bound(n, r));
    CHECK_THROWS_AS(atom_bound_closed(10, 4), std::invalid_argument);
    CHECK_THROWS_AS(atom_bound_closed(3, 3), std::invalid_argument);
}

TEST_CASE("symmetry and unimodality up to n = 40") {
    for (int n = 2; n <= 40; ++n) {
        CHECK(symmetry_check(n));
        for (int r = 1; r + 1 <= n / 2; ++r)
            CHECK(atom_bound(n, r + 1) > atom_bound(n, r));
    }
}

TEST_CASE("the maximum sits in the middle") {
    CHECK(max_bound(1).r == 0);
    CHECK(max_bound(1).value == 1);
    CHECK(max_bound(7).r == 3);
    CHECK(max_bound(7).value == 1548);
    CHECK(max_bound(9).r == 4);
    CHECK(max_bound(9).value == 15361);
    for (int n = 2; n <= 40; ++n) {
        BigCount best = 0;
        for (int r = 0; r <= n; ++r)
            best = std::max(best, atom_bound(n, r));
        CHECK(max_bound(n).value == best);
    }
}

TEST_CASE("growth ratio by exact long division") {
    CHECK(growth_ratio(2) == "3.000000");
    CHECK(growth_ratio(4).substr(0, 4) == "4.30");
    CHECK(growth_ratio(4) == "4.300000");
    std::string r100 = growth_ratio(100);
    CHECK(r100.substr(0, 6) == "3.0001"); // exact: 3.000165...
    CHECK(decimal_ratio(max_bound(100).value, max_bound(99).value, 4) == "3.0002");
    CHECK(decimal_ratio(141, 43, 2) == "3.28");
    CHECK(decimal_ratio(1, 3, 6) == "0.333333");
    CHECK(decimal_ratio(2, 3, 2) == "0.67"); // rounds half up
    CHECK_THROWS_AS(decimal_ratio(1, 0, 2), std::invalid_argument);
}

TEST_CASE("table rendering") {
    std::string text = render_bound_table(10, false);
    // thousands separators and max markers in text mode
    CHECK(text.find("1,548*") != std::string::npos);
    CHECK(text.find("48,733*") != std::string::npos);
    // the ratio row ends with the two largest columns
    auto pos = text.rfind("ratio");
    REQUIRE(pos != std::string::npos);
    std::string ratio_row = text.substr(pos);
    CHECK(ratio_row.find("3.02") != std::string::npos);
    CHECK(ratio_row.substr(ratio_row.size() - 5) == "3.17\n");

    std::string csv = render_bound_table(10, true);
    CHECK(csv.find("48733") != std::string::npos);
    CHECK(csv.find(",1548,") != std::string::npos); // no separators inside numbers
    CHECK(csv.find("*") == std::string::npos);
}
