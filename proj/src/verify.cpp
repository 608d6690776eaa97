#include "eocong/verify.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <functional>
#include <future>
#include <limits>
#include <numbers>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <tuple>

#include "eocong/arith.hpp"
#include "eocong/partitions.hpp"

namespace eocong {

namespace {

constexpr std::array<std::uint64_t, 4> kTheoremPrimes = {5, 7, 11, 13};

std::int64_t as_signed(std::uint64_t v) { return static_cast<std::int64_t>(v); }

std::uint64_t mod4(std::int64_t v) { return static_cast<std::uint64_t>(((v % 4) + 4) % 4); }

std::uint64_t checked_product(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("product exceeds 64 bits");
    return r;
}

void require_table(const ATable& table, std::uint64_t needed, const char* what) {
    if (needed > table.max_n())
        throw std::out_of_range(std::string(what) + " needs A up to " + std::to_string(needed) +
                                " but the table stops at " + std::to_string(table.max_n()) +
                                "; increase the order");
}

VerificationReport open_report(std::string suite, std::uint64_t lo, std::uint64_t hi) {
    VerificationReport r;
    r.suite = std::move(suite);
    r.range_lo = lo;
    r.range_hi = hi;
    return r;
}

// Pools several per-prime reports under one suite name; the first failure wins.
VerificationReport merge(std::string suite, const std::vector<VerificationReport>& parts) {
    VerificationReport out;
    out.suite = std::move(suite);
    if (!parts.empty()) {
        out.range_lo = parts.front().range_lo;
        out.range_hi = parts.front().range_hi;
    }
    for (const auto& r : parts) {
        out.range_lo = std::min(out.range_lo, r.range_lo);
        out.range_hi = std::max(out.range_hi, r.range_hi);
        out.cases += r.cases;
        out.notes.push_back(r.suite + ": " + std::to_string(r.cases) + " cases over [" +
                            std::to_string(r.range_lo) + ", " + std::to_string(r.range_hi) + "]");
        for (const auto& note : r.notes) out.notes.push_back(r.suite + ": " + note);
        if (!r.passed && out.passed) {
            out.passed = false;
            out.counterexample = r.counterexample;
            if (out.counterexample) out.counterexample->detail = r.suite + ": " + out.counterexample->detail;
        }
    }
    return out;
}

// Admissibility of (p_{k+1}, j) for the theorem; empty string when admissible.
// Condition (i) is tried first, (ii) only when (i) fails.
std::string theorem_condition_failure(std::uint64_t last, std::uint64_t j) {
    if (j % last == 0) return "j = " + std::to_string(j) + " is divisible by p_{k+1} = " + std::to_string(last);
    if (last % 24 != 7 && last % 24 != 13) return {};
    const int symbol = legendre(as_signed(3 * (j % last) % last), last);
    if (symbol == -1) return {};
    return "condition (i) fails (p_{k+1} = " + std::to_string(last) +
           " is 7 or 13 mod 24) and condition (ii) fails ((3j/p_{k+1}) = " + std::to_string(symbol) +
           " for j = " + std::to_string(j) + ")";
}

}  // namespace

unsigned worker_count() {
    if (const char* env = std::getenv("PCL_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

// --- Congruence families -----------------------------------------------------

CongruenceFamily family_from_theorem(std::span<const std::uint64_t> primes, std::uint64_t j) {
    if (primes.empty()) throw std::invalid_argument("family_from_theorem: at least one prime is required");
    for (std::uint64_t p : primes)
        if (p < 5 || !is_prime(p))
            throw std::invalid_argument("family_from_theorem: " + std::to_string(p) + " is not a prime >= 5");
    if (j == 0) throw std::invalid_argument("family_from_theorem: j must be positive");
    const std::uint64_t last = primes.back();
    if (auto why = theorem_condition_failure(last, j); !why.empty())
        throw std::invalid_argument("family_from_theorem: " + why);

    using u128 = unsigned __int128;
    u128 inner = 1;  // p_1^2 ... p_k^2
    for (std::size_t i = 0; i + 1 < primes.size(); ++i) inner *= u128{primes[i]} * primes[i];
    const u128 modulus = inner * last * last;
    if (modulus > u128{std::numeric_limits<std::uint64_t>::max()})
        throw std::overflow_error("family_from_theorem: modulus exceeds 64 bits");
    const u128 numerator = inner * last * (u128{3} * j + last) - 1;
    if (numerator % 3 != 0) throw std::logic_error("family_from_theorem: offset is not integral");
    const u128 offset = numerator / 3;

    CongruenceFamily f;
    f.modulus = static_cast<std::uint64_t>(modulus);
    f.residue = static_cast<std::uint64_t>(offset % modulus);
    f.provenance = Provenance::theorem;
    f.primes.assign(primes.begin(), primes.end());
    f.j = j;
    return f;
}

std::vector<CongruenceFamily> theorem_families(std::span<const std::uint64_t> primes, std::size_t max_primes) {
    std::vector<CongruenceFamily> out;
    std::vector<std::uint64_t> tuple;
    // p_1..p_k only enter through their product, so take them nondecreasing.
    std::function<void(std::size_t, std::size_t)> extend = [&](std::size_t start, std::size_t remaining) {
        for (std::uint64_t last : primes) {
            tuple.push_back(last);
            for (std::uint64_t j = 1; j < last; ++j)
                if (theorem_condition_failure(last, j).empty()) out.push_back(family_from_theorem(tuple, j));
            tuple.pop_back();
        }
        if (remaining == 0) return;
        for (std::size_t i = start; i < primes.size(); ++i) {
            tuple.push_back(primes[i]);
            extend(i, remaining - 1);
            tuple.pop_back();
        }
    };
    if (max_primes > 0) extend(0, max_primes - 1);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return std::tie(a.modulus, a.residue) < std::tie(b.modulus, b.residue);
    });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const auto& a, const auto& b) { return a.modulus == b.modulus && a.residue == b.residue; }),
              out.end());
    return out;
}

VerificationReport check_family(const CongruenceFamily& f, std::uint64_t n_max, const ModSeries& eobar) {
    if (eobar.modulus() % f.congruence_modulus != 0)
        throw std::invalid_argument("check_family: series modulus is not a multiple of the congruence modulus");
    const std::uint64_t top = checked_product(f.modulus, n_max) + f.residue;
    if (top > eobar.order())
        throw std::out_of_range("check_family: EO-bar(" + std::to_string(top) + ") needs order >= " +
                                std::to_string(top) + ", have " + std::to_string(eobar.order()));
    VerificationReport r;
    r.suite = "EO-bar(" + std::to_string(f.modulus) + "n+" + std::to_string(f.residue) + ") = 0 mod " +
              std::to_string(f.congruence_modulus);
    r.range_hi = n_max;
    for (std::uint64_t n = 0; n <= n_max; ++n) {
        const std::uint64_t arg = f.modulus * n + f.residue;
        const std::uint64_t v = eobar[arg] % f.congruence_modulus;
        ++r.cases;
        if (v != 0) {
            r.fail({n, {{"argument", as_signed(arg)}, {"eobar_mod", as_signed(v)}}, "EO-bar(argument) is not 0"});
            break;
        }
    }
    return r;
}

VerificationReport check_family(const CongruenceFamily& f, std::uint64_t n_max) {
    const std::uint64_t top = checked_product(f.modulus, n_max) + f.residue;
    return check_family(f, n_max, eobar_residues_theta(top, f.congruence_modulus));
}

std::vector<CongruenceFamily> scan_congruences(std::uint64_t a_max, std::uint64_t n_max, const ModSeries& eobar) {
    if (eobar.modulus() % 4 != 0) throw std::invalid_argument("scan_congruences: series must be reduced mod a multiple of 4");
    if (a_max == 0) return {};
    const std::uint64_t top = checked_product(a_max, n_max) + a_max - 1;
    if (top > eobar.order())
        throw std::out_of_range("scan_congruences: needs EO-bar up to " + std::to_string(top) + ", have order " +
                                std::to_string(eobar.order()));
    std::vector<CongruenceFamily> out;
    for (std::uint64_t A = 1; A <= a_max; ++A)
        for (std::uint64_t B = 0; B < A; ++B) {
            bool holds = true;
            for (std::uint64_t n = 0; n <= n_max && holds; ++n) holds = eobar[A * n + B] % 4 == 0;
            if (!holds) continue;
            CongruenceFamily f;
            f.modulus = A;
            f.residue = B;
            f.trivial = A % 2 == 0 && B % 2 == 1;
            out.push_back(f);
        }
    return out;
}

std::vector<CongruenceFamily> scan_congruences(std::uint64_t a_max, std::uint64_t n_max) {
    const std::uint64_t top = a_max == 0 ? 0 : checked_product(a_max, n_max) + a_max - 1;
    return scan_congruences(a_max, n_max, eobar_residues_theta(top, 4));
}

// --- Identity and theorem suites ---------------------------------------------

VerificationReport verify_triple_product(std::size_t order) {
    VerificationReport r = open_report("triple-product", 0, order);
    const Series j1 = eta_factor(1, order);
    const Series lhs1 = mul(theta(ThetaKind::square_alt, order), eta_factor(2, order));
    const Series rhs1 = power(j1, 2);
    const Series lhs2 = theta(ThetaKind::pent3_alt, order);
    for (std::size_t n = 0; n <= order; ++n) {
        r.cases += 2;
        if (lhs1[n] != rhs1[n]) {
            r.fail({n, {{"theta_square_alt_times_J2", lhs1[n]}, {"J1_squared", rhs1[n]}},
                    "sum (-1)^n q^{n^2} * J_2 != J_1^2"});
            break;
        }
        if (lhs2[n] != j1[n]) {
            r.fail({n, {{"theta_pent3_alt", lhs2[n]}, {"J1", j1[n]}}, "sum (-1)^n q^{(3n^2-n)/2} != J_1"});
            break;
        }
    }
    return r;
}

VerificationReport verify_eobar_oracle(std::uint64_t n_max) {
    constexpr std::uint64_t kOracleLimit = 60;
    const std::uint64_t top = std::min(n_max, kOracleLimit);
    VerificationReport r = open_report("eobar-oracle", 0, top);
    if (top < n_max) r.notes.push_back("enumeration capped at n = " + std::to_string(kOracleLimit));
    const Series gf = eobar_series(top);
    for (std::uint64_t n = 0; n <= top; ++n) {
        const auto bar = as_signed(eobar_count_enum(n));
        const auto eo = as_signed(eo_count(n));
        r.cases += 3;
        if (gf[n] != bar) {
            r.fail({n, {{"generating_function", gf[n]}, {"enumeration", bar}}, "J_4^3/J_2^2 disagrees with enumeration"});
            break;
        }
        if (bar > eo) {
            r.fail({n, {{"eobar", bar}, {"eo", eo}}, "EO-bar exceeds EO"});
            break;
        }
        if (n % 2 == 1 && bar != 0) {
            r.fail({n, {{"eobar", bar}}, "EO-bar of an odd number is nonzero"});
            break;
        }
    }
    return r;
}

VerificationReport verify_r113_A(std::uint64_t n_max, const ATable& table) {
    require_table(table, n_max, "r113-A");
    VerificationReport r = open_report("r113-A", 0, n_max);
    for (std::uint64_t n = 0; n <= n_max; ++n) {
        const auto direct = as_signed(A_coeff_direct(n));
        const auto series = as_signed(table(n));
        r.cases += 2;
        if (direct != series) {
            r.fail({n, {{"A_lattice", direct}, {"A_series", series}}, "lattice count and theta product disagree"});
            break;
        }
        if (n % 12 == 2) {
            const auto rep = as_signed(r113(n));
            if (4 * direct != rep) {
                r.fail({n, {{"A", direct}, {"r113", rep}}, "4 A(n) != r113(n)"});
                break;
            }
        } else if (direct != 0) {
            r.fail({n, {{"A", direct}}, "A(n) nonzero off 2 mod 12"});
            break;
        }
    }
    return r;
}

VerificationReport verify_class_number_relation(std::uint64_t n_max) {
    VerificationReport r = open_report("classnumber", 2, n_max);
    for (std::uint64_t n = 2; n <= n_max; n += 12) {
        if (!is_squarefree(n)) continue;
        const auto a = as_signed(r113(n));
        const auto b = as_signed(r133(3 * n));
        const auto h = as_signed(class_number(3 * n));
        ++r.cases;
        if (a != b || a != 2 * h) {
            r.fail({n, {{"r113(n)", a}, {"r133(3n)", b}, {"h(-3n)", h}}, "r113(n) = r133(3n) = 2h(-3n) fails"});
            break;
        }
    }
    return r;
}

VerificationReport verify_h6p(std::uint64_t p_max, H6pRange range) {
    VerificationReport r = open_report("h6p", 5, p_max);
    std::vector<std::uint64_t> outside;
    for (std::uint64_t p : primes_up_to(p_max)) {
        if (p < 5) continue;
        const auto h = as_signed(class_number(6 * p));
        const std::int64_t expected = (p % 8 == 5 || p % 8 == 7) ? 4 : 0;
        if (range == H6pRange::one_mod_6 && p % 6 != 1) {
            if (h % 8 != expected) outside.push_back(p);
            continue;
        }
        ++r.cases;
        if (h % 8 != expected) {
            r.fail({p, {{"p", as_signed(p)}, {"h(-6p)", h}, {"expected_mod_8", expected}},
                    "h(-6p) mod 8 dichotomy fails"});
            break;
        }
    }
    if (range == H6pRange::one_mod_6) {
        std::string note = "checked p = 1 (mod 6); the dichotomy fails for " + std::to_string(outside.size()) +
                           " primes p = 5 (mod 6)";
        for (std::size_t i = 0; i < outside.size() && i < 8; ++i) note += (i ? ", " : ": ") + std::to_string(outside[i]);
        if (outside.size() > 8) note += ", ...";
        r.notes.push_back(note);
    }
    return r;
}

VerificationReport verify_genus(std::uint64_t n_max) {
    VerificationReport r = open_report("genus", 2, n_max);
    for (std::uint64_t n = 2; n <= n_max; n += 12) {
        if (!is_squarefree(n)) continue;
        const auto h = class_number(3 * n);
        const auto t = factorize(3 * n).distinct_primes();
        const std::uint64_t genera = std::uint64_t{1} << (t - 1);
        ++r.cases;
        if (h % genera != 0) {
            r.fail({n, {{"h(-3n)", as_signed(h)}, {"t", as_signed(t)}}, "2^{t-1} does not divide h(-3n)"});
            break;
        }
    }
    return r;
}

VerificationReport verify_hecke(std::uint64_t p, std::uint64_t n_max, const ATable& table) {
    if (p < 5 || !is_prime(p)) throw std::invalid_argument("verify_hecke: p must be a prime >= 5");
    require_table(table, checked_product(p * p, n_max), "hecke");
    VerificationReport r = open_report("hecke p=" + std::to_string(p), 2, n_max);
    const auto ps = as_signed(p);
    for (std::uint64_t n = 2; n <= n_max; n += 12) {
        if (std::gcd(p, 6 * n) != 1) continue;
        const auto an = as_signed(table(n));
        const auto ap2n = as_signed(table(p * p * n));
        const std::int64_t below = n % (p * p) == 0 ? as_signed(table(n / (p * p))) : 0;
        const int symbol = legendre(-3 * as_signed(n), p);
        const std::int64_t lhs = ap2n + symbol * an + ps * below;
        ++r.cases;
        if (lhs != (ps + 1) * an) {
            r.fail({n, {{"A(p^2 n)", ap2n}, {"A(n)", an}, {"A(n/p^2)", below}, {"symbol", symbol}},
                    "A(p^2 n) + (-3n/p) A(n) + p A(n/p^2) != (p+1) A(n)"});
            break;
        }
    }
    return r;
}

VerificationReport verify_prime_power_congruences(std::uint64_t p, std::uint64_t n_max, const ATable& table) {
    if (p < 5 || !is_prime(p)) throw std::invalid_argument("verify_prime_power_congruences: p must be a prime >= 5");
    const std::uint64_t p2 = p * p, p3 = p2 * p, p4 = p3 * p;
    require_table(table, checked_product(p4, n_max), "lemmas33-35");
    VerificationReport r = open_report("lemmas p=" + std::to_string(p), 2, n_max);
    auto check = [&](std::uint64_t n, bool ok, const char* what, std::int64_t lhs, std::int64_t rhs) {
        ++r.cases;
        if (!ok && r.passed) r.fail({n, {{"lhs", lhs}, {"rhs", rhs}}, what});
        return ok;
    };
    for (std::uint64_t n = 2; n <= n_max && r.passed; n += 12) {
        const auto an = as_signed(table(n));
        const auto a2 = as_signed(table(p2 * n));
        const auto a3 = as_signed(table(p3 * n));
        const auto a4 = as_signed(table(p4 * n));
        const bool even = an % 2 == 0;
        if (std::gcd(p, 6 * n) == 1) {
            if (!check(n, (a2 - an) % 2 == 0, "A(p^2 n) = A(n) (mod 2)", a2, an)) break;
            if (!check(n, a3 % 2 == 0, "A(p^3 n) even", a3, 0)) break;
            if (even) {
                if (!check(n, (a2 - an) % 4 == 0, "A(p^2 n) = A(n) (mod 4) for even A(n)", a2, an)) break;
                if (!check(n, a3 % 4 == 0, "A(p^3 n) = 0 (mod 4) for even A(n)", a3, 0)) break;
            }
        }
        if (!check(n, (a4 - an) % 2 == 0, "A(p^4 n) = A(n) (mod 2)", a4, an)) break;
        if (even && !check(n, (a4 - an) % 4 == 0, "A(p^4 n) = A(n) (mod 4) for even A(n)", a4, an)) break;
    }
    return r;
}

VerificationReport verify_classification(std::uint64_t n_max, const ATable& table) {
    require_table(table, n_max, "classification");
    VerificationReport r = open_report("classification", 2, n_max);
    if (n_max < 2) return r;
    const std::uint64_t count = (n_max - 2) / 12 + 1;  // n = 2 + 12i, i < count
    const unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(worker_count(), count));

    struct Chunk {
        std::uint64_t cases = 0;
        std::optional<Counterexample> failure;
    };
    auto run = [&](std::uint64_t lo, std::uint64_t hi) {
        Chunk c;
        for (std::uint64_t i = lo; i < hi; ++i) {
            const std::uint64_t n = 2 + 12 * i;
            const auto cert = classify_mod4(n);
            const std::uint64_t a = table(n);
            const Mod4Class actual =
                a % 2 == 1 ? Mod4Class::odd : (a % 4 == 2 ? Mod4Class::two_mod_four : Mod4Class::zero_mod_four);
            ++c.cases;
            if (!cert.witness_holds() || cert.residue_class != actual) {
                c.failure = Counterexample{n,
                                           {{"A(n)", as_signed(a)},
                                            {"certificate_class", static_cast<std::int64_t>(cert.residue_class)}},
                                           std::string("certificate says ") + to_string(cert.residue_class) +
                                               ", A(n) mod 4 says " + to_string(actual)};
                break;
            }
        }
        return c;
    };
    std::vector<std::future<Chunk>> futures;
    for (unsigned w = 0; w < workers; ++w) {
        const std::uint64_t lo = count * w / workers, hi = count * (w + 1) / workers;
        futures.push_back(std::async(std::launch::async, run, lo, hi));
    }
    // Chunks are in ascending n, so the first failing chunk holds the smallest counterexample.
    for (auto& f : futures) {
        Chunk c = f.get();
        r.cases += c.cases;
        if (c.failure && r.passed) r.fail(*c.failure);
    }
    return r;
}

VerificationReport verify_eobar_equals_A(std::uint64_t n_max) {
    VerificationReport r = open_report("eobar-A", 0, n_max);
    const ModSeries eob = eobar_residues(n_max, 4);
    const ModSeries j2 = eta_factor_mod(2, n_max, 4), j4 = eta_factor_mod(4, n_max, 4);
    const ModSeries j2sq_j4 = mul(power(j2, 2), j4);
    const ModSeries j2cube_j4 = mul(power(j2, 3), j4);
    for (std::uint64_t n = 0; n <= n_max; ++n) {
        const auto e = as_signed(eob[n]);
        const auto a = as_signed(A_coeff_direct(6 * n + 2) % 4);
        const auto reference = as_signed(j2sq_j4[n]);
        r.cases += 2;
        if (e != reference) {
            r.fail({n, {{"eobar_mod_4", e}, {"J2^2 J4 mod 4", reference}}, "EO-bar != J_2^2 J_4 (mod 4)"});
            break;
        }
        if (e != a) {
            r.fail({n, {{"eobar_mod_4", e}, {"A(6n+2)_mod_4", a}}, "EO-bar(n) != A(6n+2) (mod 4)"});
            break;
        }
    }
    // The printed form J_2^3 J_4 of the substituted b-series is recorded, not assumed.
    std::optional<std::uint64_t> differs;
    for (std::uint64_t n = 0; n <= n_max && !differs; ++n)
        if (j2sq_j4[n] != j2cube_j4[n]) differs = n;
    r.notes.push_back(differs ? "J_2^3 J_4 and J_2^2 J_4 differ mod 4, first at n = " + std::to_string(*differs)
                              : "J_2^3 J_4 = J_2^2 J_4 mod 4 on the whole range");
    return r;
}

VerificationReport verify_a_eq_b(std::uint64_t n_max) {
    VerificationReport r = open_report("a-eq-b", 0, n_max);
    const Series b = b_series(n_max);
    for (std::uint64_t n = 0; n <= n_max; ++n) {
        const auto a = as_signed(A_coeff_direct(12 * n + 2));
        ++r.cases;
        if (mod4(a) != mod4(b[n])) {
            r.fail({n, {{"a(n)", a}, {"b(n)", b[n]}}, "a(n) != b(n) (mod 4)"});
            break;
        }
    }
    return r;
}

VerificationReport verify_families(std::uint64_t limit, const ModSeries& eobar) {
    VerificationReport r = open_report("families", 0, limit);
    const auto families = theorem_families(kTheoremPrimes, 2);
    std::uint64_t reached = 0;
    for (const auto& f : families) {
        if (f.residue > eobar.order()) {
            r.notes.push_back("skipped " + std::to_string(f.modulus) + "n+" + std::to_string(f.residue) +
                              ": residue beyond truncation");
            continue;
        }
        const std::uint64_t n_max = std::min(limit, (eobar.order() - f.residue) / f.modulus);
        reached = std::max(reached, n_max);
        auto one = check_family(f, n_max, eobar);
        r.cases += one.cases;
        if (!one.passed) {
            auto c = *one.counterexample;
            c.detail = one.suite + ": " + c.detail;
            r.fail(std::move(c));
            break;
        }
    }
    r.range_hi = reached;
    r.notes.push_back(std::to_string(families.size()) + " theorem families");

    constexpr std::array<std::pair<std::uint64_t, std::uint64_t>, 7> kExamples = {
        {{25, 3}, {25, 13}, {25, 18}, {25, 23}, {49, 23}, {49, 30}, {49, 44}}};
    for (const auto& [A, B] : kExamples) {
        ++r.cases;
        const bool present = std::any_of(families.begin(), families.end(), [&](const CongruenceFamily& f) {
            return f.modulus == A && f.residue == B && f.primes.size() == 1;
        });
        if (!present && r.passed) r.fail({A, {{"modulus", as_signed(A)}, {"residue", as_signed(B)}}, "example family missing"});
    }
    return r;
}

// --- Density -----------------------------------------------------------------

GammaCount gamma_count(std::uint64_t A, std::uint64_t B, std::uint64_t N) {
    if (B < 1 || A <= B) throw std::invalid_argument("gamma_count: need A > B >= 1");
    if (std::gcd(A, B) != 1) throw std::invalid_argument("gamma_count: gcd(A, B) must be 1");
    GammaCount g{0, 0.0};
    for (std::uint64_t n = 0; n <= N; ++n) {
        const std::uint64_t v = checked_product(A, n) + B;
        unsigned odd = 0, exponent = 0;
        for (const auto& pp : factorize(v).factors)
            if (pp.exponent % 2 == 1) {
                ++odd;
                exponent = pp.exponent;
            }
        if (odd == 1 && exponent % 4 == 1) ++g.count;
    }
    double product = 1.0;
    for (const auto& pp : factorize(A).factors) product *= 1.0 + 1.0 / static_cast<double>(pp.prime);
    if (N >= 2)
        g.predicted = std::numbers::pi * std::numbers::pi / 6.0 * product * static_cast<double>(N) /
                      std::log(static_cast<double>(N));
    return g;
}

std::vector<DensityRow> density_report(std::span<const std::uint64_t> checkpoints, const ModSeries& eobar) {
    if (eobar.modulus() != 4) throw std::invalid_argument("density_report: EO-bar residues must be mod 4");
    std::vector<DensityRow> rows;
    for (std::uint64_t N : checkpoints) {
        if (N == 0) throw std::invalid_argument("density_report: checkpoints must be positive");
        if (N > eobar.order())
            throw std::out_of_range("density_report: checkpoint " + std::to_string(N) + " beyond order " +
                                    std::to_string(eobar.order()));
        DensityRow row{};
        row.N = N;
        for (std::uint64_t n = 0; n <= N; ++n) {
            const std::uint64_t v = eobar[n];
            if (v % 2 == 1)
                ++row.odd;
            else if (v == 2)
                ++row.two_mod_four;
            else
                ++row.zero_mod_four;
        }
        const double Nd = static_cast<double>(N);
        row.ratio = static_cast<double>(row.zero_mod_four) / Nd;
        row.odd_bound = std::sqrt(6.0 * Nd + 1.0);
        row.odd_bound_holds = row.odd * row.odd <= 6 * N + 1;
        row.two_mod_four_scale = N >= 2 ? std::numbers::pi * std::numbers::pi / 3.0 * Nd / std::log(Nd) : 0.0;
        rows.push_back(row);
    }
    return rows;
}

std::vector<DensityRow> density_report(std::span<const std::uint64_t> checkpoints) {
    const std::uint64_t top = checkpoints.empty() ? 0 : *std::max_element(checkpoints.begin(), checkpoints.end());
    return density_report(checkpoints, eobar_residues_theta(top, 4));
}

// --- Suite registry ----------------------------------------------------------

namespace {

constexpr std::array<std::string_view, 12> kSuiteNames = {
    "a-eq-b", "classification", "classnumber", "eobar-A",     "eobar-oracle", "families",
    "genus",  "h6p",            "hecke",       "lemmas33-35", "r113-A",       "triple-product"};

std::uint64_t a_bound(const SuiteOptions& o) { return checked_product(12, o.order) + 2; }

}  // namespace

std::span<const std::string_view> suite_names() { return kSuiteNames; }

VerificationReport run_suite(std::string_view name, const SuiteOptions& o) {
    if (name == "a-eq-b") return verify_a_eq_b(o.limit);
    if (name == "classification") return verify_classification(o.limit, ATable(o.limit));
    if (name == "classnumber") return verify_class_number_relation(o.limit);
    if (name == "eobar-A") return verify_eobar_equals_A(o.limit);
    if (name == "eobar-oracle") return verify_eobar_oracle(o.limit);
    if (name == "families") return verify_families(o.limit, eobar_residues_theta(o.order, 4));
    if (name == "genus") return verify_genus(o.limit);
    if (name == "h6p") return verify_h6p(o.limit);
    if (name == "hecke" || name == "lemmas33-35") {
        const bool hecke = name == "hecke";
        const ATable table(a_bound(o));
        std::vector<VerificationReport> parts;
        for (std::uint64_t p : kTheoremPrimes) {
            const std::uint64_t scale = hecke ? p * p : p * p * p * p;
            const std::uint64_t n_max = std::min(o.limit, table.max_n() / scale);
            parts.push_back(hecke ? verify_hecke(p, n_max, table) : verify_prime_power_congruences(p, n_max, table));
        }
        return merge(std::string(name), parts);
    }
    if (name == "r113-A") return verify_r113_A(o.limit, ATable(o.limit));
    if (name == "triple-product") return verify_triple_product(o.limit);
    throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

std::vector<VerificationReport> run_all_suites(const SuiteOptions& options) {
    std::vector<VerificationReport> reports(kSuiteNames.size());
    std::vector<std::exception_ptr> errors(kSuiteNames.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < kSuiteNames.size(); i = next++) {
            try {
                reports[i] = run_suite(kSuiteNames[i], options);
                reports[i].suite = std::string(kSuiteNames[i]);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    {
        std::vector<std::jthread> pool;
        const unsigned n = std::min<unsigned>(worker_count(), static_cast<unsigned>(kSuiteNames.size()));
        for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return reports;
}

}  // namespace eocong
