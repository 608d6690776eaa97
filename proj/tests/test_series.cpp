#include <doctest.h>

#include <random>
#include <stdexcept>
#include <vector>

#include "eocong/series.hpp"

using namespace eocong;

namespace {

// Product of the factors (1 - q^{k n}) by plain polynomial multiplication, one
// factor at a time through a full Cauchy product.
std::vector<std::int64_t> eta_by_cauchy(std::size_t k, std::size_t order) {
    std::vector<std::int64_t> acc(order + 1, 0);
    acc[0] = 1;
    for (std::size_t s = k; s <= order; s += k) {
        std::vector<std::int64_t> factor(order + 1, 0), next(order + 1, 0);
        factor[0] = 1;
        factor[s] = -1;
        for (std::size_t i = 0; i <= order; ++i)
            for (std::size_t j = 0; i + j <= order; ++j) next[i + j] += acc[i] * factor[j];
        acc = next;
    }
    return acc;
}

// Unit series get coefficients in [-1, 1] so their inverses stay within 64 bits.
Series random_series(std::mt19937_64& rng, std::size_t order, bool unit_constant) {
    std::uniform_int_distribution<std::int64_t> dist(unit_constant ? -1 : -9, unit_constant ? 1 : 9);
    std::vector<std::int64_t> c(order + 1);
    for (auto& v : c) v = dist(rng);
    if (unit_constant) c[0] = (rng() & 1) ? 1 : -1;
    return Series(std::move(c));
}

}  // namespace

TEST_CASE("eta_factor") {
    CHECK(eta_factor(1, 7) == Series{1, -1, -1, 0, 0, 1, 0, 1});
    CHECK(eta_factor(2, 3) == Series{1, 0, -1, 0});
    CHECK(eta_factor(5, 4) == Series{1, 0, 0, 0, 0});
    CHECK(eta_factor(1, 0) == Series{1});
    for (std::size_t k : {1u, 2u, 3u, 4u}) {
        const Series e = eta_factor(k, 60);
        CHECK(std::vector<std::int64_t>(e.coeffs().begin(), e.coeffs().end()) == eta_by_cauchy(k, 60));
    }
    CHECK_THROWS_AS(eta_factor(0, 5), std::invalid_argument);
}

TEST_CASE("theta") {
    CHECK(theta(ThetaKind::square, 4) == Series{1, 2, 0, 0, 2});
    CHECK(theta(ThetaKind::square_alt, 4) == Series{1, -2, 0, 0, 2});
    CHECK(theta(ThetaKind::pent3_alt, 5) == Series{1, -1, -1, 0, 0, 1});
    // n = 0, 1, -1, 2, -2 give 0, 1, 2, 5, 7.
    CHECK(theta(ThetaKind::pent3, 7) == Series{1, 1, 1, 0, 0, 1, 0, 1});
    // n = 0, 1, -1, 2, -2 give 0, 2, 4, 10, 14.
    CHECK(theta(ThetaKind::octic, 14) == Series{1, 0, 1, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1});
    CHECK(theta(ThetaKind::octic_alt, 10) == Series{1, 0, -1, 0, -1, 0, 0, 0, 0, 0, 1});
    CHECK(theta(ThetaKind::square, 0) == Series{1});
}

TEST_CASE("mul truncates to the shorter operand") {
    CHECK(mul(Series{1, 1}, Series{1, -1}) == Series{1, 0});
    CHECK(mul(Series{1, 0, 0}, Series{0, 0, 1}) == Series{0, 0, 1});
    CHECK(mul(theta(ThetaKind::square, 4), Series{1, 0, 0, 0, 0}) == Series{1, 2, 0, 0, 2});
    CHECK(mul(Series{1, 2, 3, 4}, Series{1, 1}).order() == 1);
}

TEST_CASE("mul overflow is loud") {
    const std::int64_t big = std::int64_t{1} << 62;
    CHECK_THROWS_AS(mul(Series{big, 0}, Series{4, 0}), std::overflow_error);
    CHECK_THROWS_AS(mul(Series{big, big}, Series{1, 1}), std::overflow_error);
}

TEST_CASE("power") {
    CHECK(power(Series{1, 1}, 0) == Series{1, 0});
    CHECK(power(Series{1, 1, 0}, 2) == Series{1, 2, 1});
    const Series sq = power(eta_factor(1, 5), 2);
    CHECK(sq[0] == 1);
    CHECK(sq[1] == -2);
    CHECK(sq[2] == -1);
}

TEST_CASE("invert") {
    CHECK(invert(Series{1, -1, 0}) == Series{1, 1, 1});
    CHECK(invert(Series{-1, 0}) == Series{-1, 0});
    // 1/J_2^2: two-coloured partitions of n/2 on even n.
    CHECK(invert(power(eta_factor(2, 4), 2)) == Series{1, 0, 2, 0, 5});
    CHECK_THROWS_WITH_AS(invert(Series{2, 1}), "non-invertible series", std::domain_error);
    CHECK_THROWS_AS(invert(Series{0, 1}), std::domain_error);
}

TEST_CASE("divide agrees with mul by the inverse") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const Series num = random_series(rng, 15, false);
        const Series den = random_series(rng, 15, true);
        CHECK(divide(num, den) == mul(num, invert(den)));
    }
}

TEST_CASE("substitute") {
    CHECK(substitute(Series{1, 2, 3}, 2) == Series{1, 0, 2});
    const Series a{4, -1, 7, 0, 2};
    CHECK(substitute(a, 1) == a);
    CHECK(substitute(eta_factor(1, 12), 12) == eta_factor(12, 12));
    CHECK_THROWS_AS(substitute(a, 0), std::invalid_argument);
}

TEST_CASE("extract_progression") {
    CHECK(extract_progression(Series{0, 1, 2, 3, 4, 5}, 2, 12) == std::vector<std::int64_t>{2});
    CHECK(extract_progression(Series{7}, 0, 1) == std::vector<std::int64_t>{7});
    CHECK(extract_progression(Series{0, 1, 2, 3, 4, 5, 6}, 1, 3) == std::vector<std::int64_t>{1, 4});
    CHECK_THROWS_AS(extract_progression(Series{1, 2}, 3, 3), std::invalid_argument);
}

TEST_CASE("mod_reduce") {
    CHECK(mod_reduce(Series{-2, 5, 4}, 4) == Series{2, 1, 0});
    CHECK(mod_reduce(Series{0}, 2) == Series{0});
    CHECK(mod_reduce(theta(ThetaKind::square_alt, 4), 4) == Series{1, 2, 0, 0, 2});
    CHECK_THROWS_AS(mod_reduce(Series{1}, 1), std::invalid_argument);
}

TEST_CASE("triple product identities") {
    for (std::size_t n : {0u, 1u, 10u, 100u, 500u}) {
        CHECK(mul(theta(ThetaKind::square_alt, n), eta_factor(2, n)) == power(eta_factor(1, n), 2));
        CHECK(theta(ThetaKind::pent3_alt, n) == eta_factor(1, n));
    }
}

TEST_CASE("inverse is two-sided on random unit series") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 25; ++trial) {
        const Series a = random_series(rng, 20, true);
        const Series inv = invert(a);
        CHECK(mul(a, inv) == Series::one(20));
        CHECK(mul(inv, a) == Series::one(20));
    }
}

TEST_CASE("substitute is a ring map") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        const Series a = random_series(rng, 24, false), b = random_series(rng, 24, false);
        for (std::size_t m : {2u, 3u, 5u}) CHECK(substitute(mul(a, b), m) == mul(substitute(a, m), substitute(b, m)));
    }
}

TEST_CASE("mod_reduce commutes with mul and power") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        const Series a = random_series(rng, 18, false), b = random_series(rng, 18, false);
        for (std::uint64_t m : {2u, 4u, 7u}) {
            CHECK(mod_reduce(mul(a, b), m) == mod_reduce(mul(mod_reduce(a, m), mod_reduce(b, m)), m));
            CHECK(mod_reduce(power(a, 3), m) == mod_reduce(power(mod_reduce(a, m), 3), m));
        }
    }
}

TEST_CASE("ModSeries agrees with the exact path") {
    std::mt19937_64 rng(19);
    for (std::uint64_t m : {2u, 4u, 8u, 1'000'003u}) {
        const Series a = random_series(rng, 40, true), b = random_series(rng, 40, true);
        const ModSeries ma(a, m), mb(b, m);
        CHECK(mul(ma, mb) == ModSeries(mul(a, b), m));
        CHECK(power(ma, 3) == ModSeries(power(a, 3), m));
        CHECK(invert(ma) == ModSeries(invert(a), m));
        CHECK(divide(ma, mb) == ModSeries(divide(a, b), m));
        CHECK(substitute(ma, 3) == ModSeries(substitute(a, 3), m));
        CHECK(extract_progression(ma, 1, 4).size() == extract_progression(a, 1, 4).size());
    }
    for (std::size_t k : {1u, 2u, 4u}) CHECK(eta_factor_mod(k, 300, 4) == ModSeries(eta_factor(k, 300), 4));
    CHECK(theta_mod(ThetaKind::square_alt, 50, 4) == ModSeries(theta(ThetaKind::square_alt, 50), 4));
}

TEST_CASE("ModSeries inverse needs a unit constant term") {
    CHECK_THROWS_AS(invert(ModSeries(Series{2, 1}, 4)), std::domain_error);
    CHECK(invert(ModSeries(Series{3, 1}, 4)) == ModSeries(invert(Series{-1, 1}), 4));
    CHECK_THROWS_AS(ModSeries(Series{1}, 1), std::invalid_argument);
    CHECK_THROWS_AS(mul(ModSeries(Series{1}, 4), ModSeries(Series{1}, 8)), std::invalid_argument);
}
