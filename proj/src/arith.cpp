#include "eocong/arith.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace eocong {

namespace {

using u128 = unsigned __int128;

constexpr std::uint64_t kTrialLimit = 1'000'000;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

const std::vector<std::uint64_t>& trial_primes() {
    static const std::vector<std::uint64_t> primes = primes_up_to(kTrialLimit);
    return primes;
}

// Floyd cycle finding; n is composite, not a perfect square, and free of
// prime factors below the trial-division limit.
std::uint64_t pollard_rho(std::uint64_t n) {
    for (std::uint64_t c = 1;; ++c) {
        auto f = [&](std::uint64_t x) { return (mulmod(x, x, n) + c) % n; };
        std::uint64_t x = 2, y = 2, d = 1;
        while (d == 1) {
            x = f(x);
            y = f(f(y));
            d = std::gcd(x > y ? x - y : y - x, n);
        }
        if (d != n) return d;
    }
}

void factor_rest(std::uint64_t n, std::vector<std::uint64_t>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    if (auto r = square_root(n)) {
        factor_rest(*r, out);
        factor_rest(*r, out);
        return;
    }
    const std::uint64_t d = pollard_rho(n);
    factor_rest(d, out);
    factor_rest(n / d, out);
}

}  // namespace

std::uint64_t Factorization::product() const {
    std::uint64_t p = 1;
    for (const auto& [prime, e] : factors)
        for (unsigned i = 0; i < e; ++i)
            if (__builtin_mul_overflow(p, prime, &p)) throw std::overflow_error("factorization product overflow");
    return p;
}

std::uint64_t isqrt(std::uint64_t n) {
    // Newton from above; converges to floor(sqrt(n)) without floating point.
    if (n < 2) return n;
    std::uint64_t x = n, y = n / 2 + 1;
    while (y < x) {
        x = y;
        y = (x + n / x) / 2;
    }
    return x;
}

std::optional<std::uint64_t> square_root(std::uint64_t n) {
    const std::uint64_t r = isqrt(n);
    if (static_cast<u128>(r) * r == n) return r;
    return std::nullopt;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // These twelve bases are a proven witness set for every n < 3.3 * 10^24.
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
    std::vector<std::uint64_t> primes;
    if (limit < 2) return primes;
    std::vector<bool> composite(limit + 1, false);
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        primes.push_back(i);
        for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
    }
    return primes;
}

Factorization factorize(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("factorize: n must be positive");
    Factorization f{n, {}};
    std::uint64_t rest = n;
    for (std::uint64_t p : trial_primes()) {
        if (p * p > rest) break;
        if (rest % p != 0) continue;
        unsigned e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        f.factors.push_back({p, e});
    }
    if (rest == 1) return f;
    // No prime factor up to 10^6 remains, so anything below 10^12 is prime.
    if (rest < kTrialLimit * kTrialLimit || is_prime(rest)) {
        f.factors.push_back({rest, 1});
        return f;
    }
    std::vector<std::uint64_t> large;
    factor_rest(rest, large);
    std::sort(large.begin(), large.end());
    for (std::uint64_t p : large) {
        if (!f.factors.empty() && f.factors.back().prime == p)
            ++f.factors.back().exponent;
        else
            f.factors.push_back({p, 1});
    }
    return f;
}

int legendre(std::int64_t a, std::uint64_t p) {
    if (p == 2 || !is_prime(p))
        throw std::invalid_argument("legendre: " + std::to_string(p) + " is not an odd prime");
    const auto pp = static_cast<std::int64_t>(p);
    const auto r = static_cast<std::uint64_t>(((a % pp) + pp) % pp);
    if (r == 0) return 0;
    // Euler's criterion.
    return powmod(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

SquarefreeDecomposition squarefree_decompose(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("squarefree_decompose: n must be positive");
    SquarefreeDecomposition d{1, 1};
    for (const auto& [p, e] : factorize(n).factors) {
        if (e % 2 == 1) d.squarefree *= p;
        for (unsigned i = 0; i < e / 2; ++i) d.root *= p;
    }
    return d;
}

bool is_squarefree(std::uint64_t n) {
    if (n == 0) return false;
    const auto f = factorize(n);
    return std::all_of(f.factors.begin(), f.factors.end(), [](const PrimePower& pp) { return pp.exponent == 1; });
}

}  // namespace eocong
