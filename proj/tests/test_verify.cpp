#include <doctest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "eocong/partitions.hpp"
#include "eocong/verify.hpp"

using namespace eocong;

namespace {

bool has_family(const std::vector<CongruenceFamily>& fs, std::uint64_t modulus, std::uint64_t residue) {
    return std::any_of(fs.begin(), fs.end(),
                       [&](const CongruenceFamily& f) { return f.modulus == modulus && f.residue == residue; });
}

}  // namespace

TEST_CASE("family_from_theorem") {
    const std::array<std::uint64_t, 1> five = {5}, seven = {7};
    auto f = family_from_theorem(five, 1);
    CHECK(f.modulus == 25);
    CHECK(f.residue == 13);
    CHECK(f.provenance == Provenance::theorem);
    CHECK(family_from_theorem(five, 4).residue == 3);
    f = family_from_theorem(seven, 1);
    CHECK(f.modulus == 49);
    CHECK(f.residue == 23);
    CHECK(family_from_theorem(seven, 2).residue == 30);
    CHECK(family_from_theorem(seven, 4).residue == 44);
    CHECK_THROWS_AS(family_from_theorem(seven, 3), std::invalid_argument);
    CHECK_THROWS_AS(family_from_theorem(seven, 7), std::invalid_argument);
    CHECK_THROWS_AS(family_from_theorem(std::array<std::uint64_t, 1>{3}, 1), std::invalid_argument);
    CHECK_THROWS_AS(family_from_theorem(std::array<std::uint64_t, 1>{9}, 1), std::invalid_argument);

    const std::array<std::uint64_t, 2> five_five = {5, 5};
    f = family_from_theorem(five_five, 1);
    CHECK(f.modulus == 625);
    CHECK(f.residue == (25 * 5 * (3 + 5) - 1) / 3 % 625);
}

TEST_CASE("theorem_families") {
    const std::array<std::uint64_t, 2> ps = {5, 7};
    const auto k0 = theorem_families(ps, 1);
    CHECK(k0.size() == 7);
    for (auto [m, r] : {std::pair{25, 3}, {25, 13}, {25, 18}, {25, 23}, {49, 23}, {49, 30}, {49, 44}})
        CHECK(has_family(k0, m, r));
    CHECK(std::is_sorted(k0.begin(), k0.end(), [](const auto& a, const auto& b) {
        return std::tie(a.modulus, a.residue) < std::tie(b.modulus, b.residue);
    }));
    const auto k1 = theorem_families(ps, 2);
    CHECK(k1.size() > k0.size());
    CHECK(has_family(k1, 625, family_from_theorem(std::array<std::uint64_t, 2>{5, 5}, 1).residue));
    CHECK(has_family(k1, 25 * 49, family_from_theorem(std::array<std::uint64_t, 2>{5, 7}, 1).residue));
}

TEST_CASE("check_family") {
    const ModSeries eobar = eobar_residues_theta(20'000, 4);
    CongruenceFamily f;
    f.modulus = 25;
    f.residue = 3;
    CHECK(check_family(f, 500, eobar).passed);
    f.modulus = 49;
    f.residue = 30;
    CHECK(check_family(f, 200, eobar).passed);

    f.modulus = 25;
    f.residue = 1;  // EO-bar(1) = 0, EO-bar(26) is not
    const auto r = check_family(f, 10, eobar);
    CHECK_FALSE(r.passed);
    REQUIRE(r.counterexample);
    CHECK(r.counterexample->n == 1);

    f.residue = 3;
    CHECK_THROWS_AS(check_family(f, 1000, eobar), std::out_of_range);
    CHECK(check_family(f, 40).passed);
}

TEST_CASE("scan_congruences") {
    const ModSeries eobar = eobar_residues_theta(25 * 400 + 24, 4);
    const auto s25 = scan_congruences(25, 400, eobar);
    for (std::uint64_t r : {3u, 13u, 18u, 23u}) CHECK(has_family(s25, 25, r));
    CHECK(has_family(s25, 2, 1));
    for (const auto& f : s25) {
        CHECK(f.provenance == Provenance::scanned);
        CHECK(f.trivial == (f.modulus % 2 == 0 && f.residue % 2 == 1));
    }
    const auto s49 = scan_congruences(49, 200);
    for (std::uint64_t r : {23u, 30u, 44u}) CHECK(has_family(s49, 49, r));

    const auto s1 = scan_congruences(1, 10);
    CHECK(std::none_of(s1.begin(), s1.end(), [](const auto& f) { return !f.trivial; }));
}

TEST_CASE("Hecke relation at small n") {
    const ATable table(12 * 2000 + 2);
    // p = 5, n = 2: A(50) + (-6/5) A(2) + 0 = 6 A(2)
    CHECK(table(50) + 1 * table(2) == 6 * table(2));
    // p = 7, n = 2: (-6/7) = 1
    CHECK(table(98) + table(2) == 8 * table(2));
    CHECK(verify_hecke(5, 400, table).passed);
    CHECK(verify_hecke(13, 100, table).passed);
    CHECK(verify_prime_power_congruences(5, 30, table).passed);
    CHECK_THROWS_AS(verify_hecke(7, 1000, table), std::out_of_range);
}

TEST_CASE("small suites pass") {
    CHECK(verify_triple_product(300).passed);
    CHECK(verify_eobar_oracle(40).passed);
    CHECK(verify_r113_A(1000, ATable(1000)).passed);
    CHECK(verify_class_number_relation(500).passed);
    CHECK(verify_h6p(200).passed);
    const auto all = verify_h6p(200, H6pRange::coprime_to_6);
    CHECK_FALSE(all.passed);
    REQUIRE(all.counterexample);
    CHECK(all.counterexample->n == 17);
    CHECK(verify_genus(500).passed);
    CHECK(verify_classification(5000, ATable(5000)).passed);
    const auto eA = verify_eobar_equals_A(300);
    CHECK(eA.passed);
    CHECK_FALSE(eA.notes.empty());
    CHECK(verify_a_eq_b(300).passed);
    CHECK(verify_families(100, eobar_residues_theta(13 * 13 * 100 + 200, 4)).passed);
}

TEST_CASE("gamma_count") {
    const auto g = gamma_count(6, 1, 10);
    CHECK(g.count == 7);
    CHECK(g.predicted > 0);
    CHECK_THROWS_AS(gamma_count(4, 2, 10), std::invalid_argument);
    CHECK_THROWS_AS(gamma_count(3, 3, 10), std::invalid_argument);
    CHECK_THROWS_AS(gamma_count(3, 0, 10), std::invalid_argument);
}

TEST_CASE("density_report") {
    const std::array<std::uint64_t, 2> cps = {100, 1000};
    const auto rows = density_report(cps);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].N == 100);
    CHECK(rows[0].odd <= 24);
    CHECK(rows[0].odd_bound == doctest::Approx(std::sqrt(601.0)));
    CHECK(rows[0].odd_bound_holds);
    for (const auto& row : rows) {
        CHECK(row.odd + row.two_mod_four + row.zero_mod_four == row.N + 1);
        CHECK(row.ratio == doctest::Approx(static_cast<double>(row.zero_mod_four) / row.N));
    }

    // against the exact series
    const Series exact = eobar_series(1000);
    std::uint64_t odd = 0;
    for (std::uint64_t n = 0; n <= 1000; ++n) odd += exact[n] % 2 != 0;
    CHECK(rows[1].odd == odd);
}

TEST_CASE("suite registry") {
    const auto names = suite_names();
    CHECK(names.size() == 12);
    CHECK(std::is_sorted(names.begin(), names.end()));
    CHECK_THROWS_AS(run_suite("bogus", {}), std::invalid_argument);

    SuiteOptions o;
    o.limit = 30;
    o.order = 2000;
    const auto reports = run_all_suites(o);
    REQUIRE(reports.size() == names.size());
    for (std::size_t i = 0; i < names.size(); ++i) {
        CHECK(reports[i].suite == names[i]);
        CHECK_MESSAGE(reports[i].passed, reports[i].suite);
    }
}

TEST_CASE("worker_count honours PCL_THREADS") {
    ::setenv("PCL_THREADS", "3", 1);
    CHECK(worker_count() == 3);
    ::setenv("PCL_THREADS", "zero", 1);
    CHECK(worker_count() >= 1);
    ::unsetenv("PCL_THREADS");
}
