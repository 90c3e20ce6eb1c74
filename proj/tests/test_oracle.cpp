#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support/oracle.hpp"

#include <vector>

namespace {

std::vector<mpz_class> digits_of(std::vector<long> poly_lowest_first, long lo,
                                 long hi, int terms) {
    std::vector<mpz_class> poly(poly_lowest_first.begin(), poly_lowest_first.end());
    return oracle::cf_digits(poly, mpq_class(lo), mpq_class(hi), terms);
}

std::vector<mpz_class> z(std::vector<long> v) {
    return std::vector<mpz_class>(v.begin(), v.end());
}

}  // namespace

TEST_CASE("oracle digits for classic quadratics") {
    CHECK(digits_of({-2, 0, 1}, 1, 2, 8) == z({1, 2, 2, 2, 2, 2, 2, 2}));
    CHECK(digits_of({-3, 0, 1}, 1, 2, 9) == z({1, 1, 2, 1, 2, 1, 2, 1, 2}));
    CHECK(digits_of({-1, -1, 1}, 1, 2, 30) == z(std::vector<long>(30, 1)));
}

TEST_CASE("oracle digits for cube roots") {
    CHECK(digits_of({-2, 0, 0, 1}, 1, 2, 20) ==
          z({1, 3, 1, 5, 1, 1, 4, 1, 1, 8, 1, 14, 1, 10, 2, 1, 4, 12, 2, 3}));
    CHECK(digits_of({-4, 0, 0, 1}, 1, 2, 20) ==
          z({1, 1, 1, 2, 2, 1, 3, 2, 3, 1, 3, 1, 30, 1, 4, 1, 2, 9, 6, 4}));
    CHECK(digits_of({-6, 0, 0, 1}, 1, 2, 12) ==
          z({1, 1, 4, 2, 7, 3, 508, 1, 5, 5, 1, 1}));
    CHECK(digits_of({-36, 0, 0, 1}, 3, 4, 12) ==
          z({3, 3, 3, 4, 1, 7, 1, 83, 1, 36, 15, 3}));
}

TEST_CASE("oracle precision retry keeps prefixes stable") {
    auto long_run = digits_of({-2, 0, 0, 1}, 1, 2, 400);
    REQUIRE(long_run.size() == 400);
    auto short_run = digits_of({-2, 0, 0, 1}, 1, 2, 20);
    CHECK(std::vector<mpz_class>(long_run.begin(), long_run.begin() + 20) == short_run);
    for (std::size_t i = 1; i < long_run.size(); ++i)
        CHECK(long_run[i] >= 1);
}

TEST_CASE("oracle rejects rational roots and bad brackets") {
    CHECK_THROWS(digits_of({-4, 0, 1}, 1, 3, 5));
    CHECK_THROWS(digits_of({-2, 0, 1}, 2, 3, 5));
}

TEST_CASE("convergent tables follow the standard recurrence") {
    auto conv = oracle::convergents_of(z({1, 3, 1, 5}));
    REQUIRE(conv.size() == 5);
    CHECK(conv[0] == std::make_pair(mpz_class(1), mpz_class(0)));
    CHECK(conv[1] == std::make_pair(mpz_class(1), mpz_class(1)));
    CHECK(conv[2] == std::make_pair(mpz_class(4), mpz_class(3)));
    CHECK(conv[3] == std::make_pair(mpz_class(5), mpz_class(4)));
    CHECK(conv[4] == std::make_pair(mpz_class(29), mpz_class(23)));
    for (std::size_t i = 1; i < conv.size(); ++i) {
        mpz_class det = conv[i].first * conv[i - 1].second -
                        conv[i - 1].first * conv[i].second;
        CHECK((det == 1 || det == -1));
    }
}

TEST_CASE("brute connection scan on the first cube root pair") {
    auto conv_xi = oracle::convergents_of(digits_of({-2, 0, 0, 1}, 1, 2, 8));
    auto conv_eta = oracle::convergents_of(digits_of({-4, 0, 0, 1}, 1, 2, 8));
    auto found = oracle::connections_brute(conv_xi, conv_eta, 2);
    std::vector<std::pair<int, int>> expected = {{1, 2}, {2, 3}, {3, 4},
                                                 {5, 6}, {6, 7}, {7, 8}};
    CHECK(found == expected);
}

TEST_CASE("brute connection scan on the golden pair") {
    auto phi = z(std::vector<long>(12, 1));
    std::vector<mpz_class> inv_phi = z({0});
    inv_phi.insert(inv_phi.end(), 11, mpz_class(1));
    auto found = oracle::connections_brute(oracle::convergents_of(phi),
                                           oracle::convergents_of(inv_phi), 1);
    REQUIRE(found.size() == 11);
    for (std::size_t i = 0; i < found.size(); ++i) {
        CHECK(found[i].first == static_cast<int>(i) + 1);
        CHECK(found[i].second == static_cast<int>(i) + 2);
    }
}
