#pragma once

// Verification suites for the EO-bar mod 4 theory: each suite sweeps a range,
// stops at the first failure and attaches a reproducible counterexample.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "eocong/quadforms.hpp"
#include "eocong/series.hpp"

namespace eocong {

enum class Provenance { theorem, scanned };

/// The claim EO-bar(modulus * n + residue) = 0 (mod congruence_modulus) for all n >= 0.
struct CongruenceFamily {
    std::uint64_t modulus = 1;
    std::uint64_t residue = 0;
    std::uint64_t congruence_modulus = 4;
    Provenance provenance = Provenance::scanned;
    std::vector<std::uint64_t> primes;  ///< p_1..p_{k+1} for theorem families
    std::uint64_t j = 0;                ///< theorem families only
    bool trivial = false;               ///< every argument odd, where EO-bar vanishes
};

struct Counterexample {
    std::uint64_t n = 0;
    std::vector<std::pair<std::string, std::int64_t>> values;
    std::string detail;
};

struct VerificationReport {
    std::string suite;
    std::uint64_t range_lo = 0;
    std::uint64_t range_hi = 0;
    std::uint64_t cases = 0;  ///< individual assertions checked
    bool passed = true;
    std::optional<Counterexample> counterexample;
    std::vector<std::string> notes;

    void fail(Counterexample c) {
        passed = false;
        counterexample = std::move(c);
    }
};

/// Worker threads to use: PCL_THREADS if set and positive, else the hardware
/// concurrency (at least 1).
unsigned worker_count();

// --- Congruence families -----------------------------------------------------

/// The family of the mod 4 theorem for primes p_1..p_{k+1} >= 5 (repeats
/// allowed) and j not divisible by p_{k+1}. Either p_{k+1} is not 7 or 13 mod
/// 24, or (3j / p_{k+1}) = -1; otherwise std::invalid_argument names the
/// failing condition.
CongruenceFamily family_from_theorem(std::span<const std::uint64_t> primes, std::uint64_t j);

/// All admissible theorem families with p_i drawn from `primes`, at most
/// `max_primes` primes, j in [1, p_{k+1} - 1], sorted by (modulus, residue).
std::vector<CongruenceFamily> theorem_families(std::span<const std::uint64_t> primes, std::size_t max_primes);

/// Checks n = 0..n_max against `eobar` (EO-bar residues, modulus divisible by
/// the family's congruence modulus). Throws std::out_of_range if
/// modulus * n_max + residue exceeds eobar's order.
VerificationReport check_family(const CongruenceFamily& f, std::uint64_t n_max, const ModSeries& eobar);
VerificationReport check_family(const CongruenceFamily& f, std::uint64_t n_max);

/// Every (A, B), 1 <= A <= a_max, 0 <= B < A, such that EO-bar(An + B) = 0 mod 4
/// for n = 0..n_max. Families with A even and B odd are kept and flagged trivial.
std::vector<CongruenceFamily> scan_congruences(std::uint64_t a_max, std::uint64_t n_max, const ModSeries& eobar);
std::vector<CongruenceFamily> scan_congruences(std::uint64_t a_max, std::uint64_t n_max);

// --- Identity and theorem suites ---------------------------------------------

/// sum (-1)^n q^{n^2} = J_1^2/J_2 and sum (-1)^n q^{(3n^2-n)/2} = J_1, to `order`.
VerificationReport verify_triple_product(std::size_t order);

/// Enumeration against the generating function for n <= min(n_max, 60), plus
/// EO-bar <= EO and EO-bar(odd) = 0.
VerificationReport verify_eobar_oracle(std::uint64_t n_max);

/// 4 A(n) = r113(n) by lattice counts and the A table for n <= n_max.
VerificationReport verify_r113_A(std::uint64_t n_max, const ATable& table);

/// r113(n) = r133(3n) = 2 h(-3n) for squarefree n = 2 (mod 12), n <= n_max.
VerificationReport verify_class_number_relation(std::uint64_t n_max);

enum class H6pRange {
    coprime_to_6,  ///< every prime p >= 5
    one_mod_6,     ///< p = 1 (mod 6), i.e. 2p = 2 (mod 12)
};

/// h(-6p) = 4 (mod 8) iff p = 5, 7 (mod 8), else 0 (mod 8), primes 5 <= p <= p_max
/// in `range`. Primes outside the range where the dichotomy fails are listed in
/// the notes. On coprime_to_6 this fails first at p = 17 (h(-102) = 4).
VerificationReport verify_h6p(std::uint64_t p_max, H6pRange range = H6pRange::one_mod_6);

/// 2^{t-1} | h(-3n), t = number of primes of 3n, over the verify_class_number_relation range.
VerificationReport verify_genus(std::uint64_t n_max);

/// A(p^2 n) + (-3n/p) A(n) + p A(n/p^2) = (p+1) A(n) for n = 2 (mod 12),
/// gcd(p, 6n) = 1, n <= n_max.
VerificationReport verify_hecke(std::uint64_t p, std::uint64_t n_max, const ATable& table);

/// The mod 2 and mod 4 relations between A(n), A(p^2 n), A(p^3 n), A(p^4 n).
VerificationReport verify_prime_power_congruences(std::uint64_t p, std::uint64_t n_max, const ATable& table);

/// classify_mod4(n) against A(n) mod 4 for n = 2 (mod 12), n <= n_max.
VerificationReport verify_classification(std::uint64_t n_max, const ATable& table);

/// EO-bar(n) = A(6n + 2) (mod 4), n <= n_max.
VerificationReport verify_eobar_equals_A(std::uint64_t n_max);

/// a(n) = b(n) (mod 4), n <= n_max.
VerificationReport verify_a_eq_b(std::uint64_t n_max);

/// Every theorem family over {5, 7, 11, 13} with k <= 1 checked up to
/// min(limit, truncation), plus presence of the seven k = 0 example families.
VerificationReport verify_families(std::uint64_t limit, const ModSeries& eobar);

// --- Density -----------------------------------------------------------------

struct GammaCount {
    std::uint64_t count;
    double predicted;  ///< (pi^2/6) prod_{p | A} (1 + 1/p) N / log N
};

/// #{0 <= n <= N : An + B = m^2 p^{4a+1}, p prime, p not dividing m}.
/// Throws std::invalid_argument unless A > B >= 1 and gcd(A, B) = 1.
GammaCount gamma_count(std::uint64_t A, std::uint64_t B, std::uint64_t N);

struct DensityRow {
    std::uint64_t N;
    std::uint64_t odd;           ///< #{0 <= n <= N : EO-bar(n) odd}
    std::uint64_t two_mod_four;  ///< ... = 2 (mod 4)
    std::uint64_t zero_mod_four; ///< ... = 0 (mod 4)
    double ratio;                ///< zero_mod_four / N
    double odd_bound;            ///< sqrt(6N + 1)
    bool odd_bound_holds;
    double two_mod_four_scale;   ///< (pi^2/3) N / log N, reported only
};

/// One row per checkpoint, in the order given, from EO-bar mod 4 up to the
/// largest checkpoint.
std::vector<DensityRow> density_report(std::span<const std::uint64_t> checkpoints);
std::vector<DensityRow> density_report(std::span<const std::uint64_t> checkpoints, const ModSeries& eobar);

// --- Suite registry ----------------------------------------------------------

struct SuiteOptions {
    std::uint64_t limit = 100;
    /// Truncation of the series a suite works from: EO-bar residues for the
    /// families suite, f(q) (so A up to 12 * order + 2) for the A suites.
    std::uint64_t order = 50'000;
};

/// Suite names in alphabetical order.
std::span<const std::string_view> suite_names();

/// Runs one named suite; std::invalid_argument for an unknown name,
/// std::out_of_range when the truncation cannot cover the request.
VerificationReport run_suite(std::string_view name, const SuiteOptions& options);

/// All suites, concurrently on worker_count() threads, sorted by suite name.
std::vector<VerificationReport> run_all_suites(const SuiteOptions& options);

}  // namespace eocong
