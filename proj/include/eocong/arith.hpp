#pragma once

// Elementary number theory on unsigned 64-bit integers.

#include <cstdint>
#include <optional>
#include <vector>

namespace eocong {

struct PrimePower {
    std::uint64_t prime;
    unsigned exponent;

    bool operator==(const PrimePower&) const = default;
};

/// Prime factorization of n >= 1; factors sorted by prime, n = 1 has none.
struct Factorization {
    std::uint64_t n = 1;
    std::vector<PrimePower> factors;

    std::size_t distinct_primes() const noexcept { return factors.size(); }
    /// Recomputes the product of p^e (throws on overflow).
    std::uint64_t product() const;
};

std::uint64_t isqrt(std::uint64_t n);

/// Deterministic Miller-Rabin over the full 64-bit range.
bool is_prime(std::uint64_t n);

/// Trial division by primes up to 10^6, Pollard rho for what remains.
Factorization factorize(std::uint64_t n);

/// Legendre symbol (a/p) for an odd prime p; a may be negative.
/// Throws std::invalid_argument if p is not an odd prime.
int legendre(std::int64_t a, std::uint64_t p);

struct SquarefreeDecomposition {
    std::uint64_t squarefree;  ///< product of the primes with odd exponent
    std::uint64_t root;        ///< n = squarefree * root^2

    bool operator==(const SquarefreeDecomposition&) const = default;
};

SquarefreeDecomposition squarefree_decompose(std::uint64_t n);

bool is_squarefree(std::uint64_t n);

/// The integer square root when n is a perfect square.
std::optional<std::uint64_t> square_root(std::uint64_t n);

inline bool is_square(std::uint64_t n) { return square_root(n).has_value(); }

/// Primes p <= limit, ascending (plain sieve of Eratosthenes).
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

}  // namespace eocong
