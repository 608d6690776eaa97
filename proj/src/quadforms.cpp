#include "eocong/quadforms.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "eocong/arith.hpp"

namespace eocong {

namespace {

// Number of z in Z with weight * z^2 = rest.
unsigned solutions_of_scaled_square(std::uint64_t rest, std::uint64_t weight) {
    if (rest % weight != 0) return 0;
    const auto root = square_root(rest / weight);
    if (!root) return 0;
    return *root == 0 ? 1 : 2;
}

std::uint64_t gcd3(std::int64_t a, std::int64_t b, std::int64_t c) {
    return std::gcd(std::gcd(static_cast<std::uint64_t>(a < 0 ? -a : a), static_cast<std::uint64_t>(b < 0 ? -b : b)),
                    static_cast<std::uint64_t>(c < 0 ? -c : c));
}

std::uint64_t ipow(std::uint64_t base, unsigned e) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < e; ++i) r *= base;
    return r;
}

}  // namespace

std::uint64_t r113(std::uint64_t n) {
    std::uint64_t count = 0;
    for (std::uint64_t x = 0; x * x <= n; ++x) {
        const std::uint64_t wx = x == 0 ? 1 : 2;
        for (std::uint64_t y = 0; x * x + y * y <= n; ++y) {
            const std::uint64_t wy = y == 0 ? 1 : 2;
            count += wx * wy * solutions_of_scaled_square(n - x * x - y * y, 3);
        }
    }
    return count;
}

std::uint64_t r133(std::uint64_t n) {
    std::uint64_t count = 0;
    for (std::uint64_t y = 0; 3 * y * y <= n; ++y) {
        const std::uint64_t wy = y == 0 ? 1 : 2;
        for (std::uint64_t z = 0; 3 * (y * y + z * z) <= n; ++z) {
            const std::uint64_t wz = z == 0 ? 1 : 2;
            count += wy * wz * solutions_of_scaled_square(n - 3 * (y * y + z * z), 1);
        }
    }
    return count;
}

std::uint64_t A_coeff(std::uint64_t n) {
    if (n % 12 != 2) return 0;
    const std::uint64_t r = r113(n);
    if (r % 4 != 0) throw std::logic_error("r113(" + std::to_string(n) + ") is not divisible by 4");
    return r / 4;
}

std::uint64_t A_coeff_direct(std::uint64_t n) {
    // u = 6x + 1 runs over the integers = 1 (mod 6), of either sign.
    const auto bound = static_cast<std::int64_t>(isqrt(n));
    std::uint64_t count = 0;
    auto first = [&](std::int64_t lo) {
        std::int64_t r = ((1 - lo) % 6 + 6) % 6;
        return lo + r;
    };
    for (std::int64_t u = first(-bound); u <= bound; u += 6) {
        const auto uu = static_cast<std::uint64_t>(u * u);
        for (std::int64_t v = first(-bound); v <= bound; v += 6) {
            const auto vv = static_cast<std::uint64_t>(v * v);
            if (uu + vv > n) continue;
            count += solutions_of_scaled_square(n - uu - vv, 12);
        }
    }
    return count;
}

std::uint64_t a_coeff(std::uint64_t n) { return A_coeff(12 * n + 2); }

std::int64_t b_coeff(std::uint64_t n) { return b_series(n)[n]; }

Series a_series(std::size_t order) {
    const Series octic = theta(ThetaKind::octic, order);
    return mul(theta(ThetaKind::square, order), mul(octic, octic));
}

Series b_series(std::size_t order) {
    return mul(power(eta_factor(1, order), 2), eta_factor(2, order));
}

Series b_series_theta(std::size_t order) {
    const Series octic = theta(ThetaKind::octic_alt, order);
    return mul(theta(ThetaKind::square_alt, order), mul(octic, octic));
}

ATable::ATable(std::uint64_t max_n) : max_n_(max_n), a_(a_series(max_n < 2 ? 0 : (max_n - 2) / 12)) {}

std::uint64_t ATable::operator()(std::uint64_t n) const {
    if (n > max_n_)
        throw std::out_of_range("A(" + std::to_string(n) + ") lies beyond the table bound " + std::to_string(max_n_));
    if (n % 12 != 2) return 0;
    return static_cast<std::uint64_t>(a_[(n - 2) / 12]);
}

std::int64_t field_discriminant(std::uint64_t m) {
    if (!is_squarefree(m))
        throw std::invalid_argument("field discriminant needs a squarefree m, got " + std::to_string(m));
    const auto mm = static_cast<std::int64_t>(m);
    return m % 4 == 3 ? -mm : -4 * mm;
}

std::vector<ReducedForm> reduced_forms(std::int64_t d) {
    if (d >= 0 || (d % 4 != 0 && d % 4 != -3))
        throw std::invalid_argument("reduced_forms: discriminant must be negative and 0 or 1 mod 4");
    const auto abs_d = static_cast<std::uint64_t>(-d);
    std::vector<ReducedForm> forms;
    // a <= c and |b| <= a force 3a^2 <= |d|.
    for (std::int64_t a = 1; static_cast<std::uint64_t>(3 * a * a) <= abs_d; ++a) {
        for (std::int64_t b = -a; b <= a; ++b) {
            const std::int64_t num = b * b - d;  // 4ac
            if (num % (4 * a) != 0) continue;
            const std::int64_t c = num / (4 * a);
            if (c < a) continue;
            if (b < 0 && (-b == a || a == c)) continue;
            if (gcd3(a, b, c) != 1) continue;
            forms.push_back({a, b, c});
        }
    }
    return forms;
}

std::uint64_t class_number(std::uint64_t m) {
    if (m == 0) throw std::invalid_argument("class_number: m must be positive");
    if (!is_squarefree(m))
        throw std::invalid_argument("class_number: " + std::to_string(m) + " is not squarefree");
    return reduced_forms(field_discriminant(m)).size();
}

const char* to_string(Mod4Class c) {
    switch (c) {
        case Mod4Class::odd: return "odd";
        case Mod4Class::two_mod_four: return "two_mod_four";
        case Mod4Class::zero_mod_four: return "zero_mod_four";
    }
    return "?";
}

bool Mod4Certificate::witness_holds() const {
    switch (residue_class) {
        case Mod4Class::odd: {
            const auto* w = std::get_if<OddWitness>(&witness);
            return w && 2 * w->m * w->m == n && std::gcd(w->m, std::uint64_t{6}) == 1;
        }
        case Mod4Class::two_mod_four: {
            const auto* w = std::get_if<TwoModFourWitness>(&witness);
            if (!w || !is_prime(w->p) || (w->p % 8 != 5 && w->p % 8 != 7)) return false;
            if (std::gcd(w->m, 6 * w->p) != 1) return false;
            return 2 * ipow(w->p, 4 * w->alpha + 1) * w->m * w->m == n;
        }
        case Mod4Class::zero_mod_four: return std::holds_alternative<std::monostate>(witness);
    }
    return false;
}

Mod4Certificate classify_mod4(std::uint64_t n) {
    if (n % 12 != 2)
        throw std::invalid_argument("classify_mod4: " + std::to_string(n) + " is not 2 mod 12");
    const std::uint64_t half = n / 2;
    std::vector<PrimePower> odd_exponent;
    for (const auto& pp : factorize(half).factors)
        if (pp.exponent % 2 == 1) odd_exponent.push_back(pp);

    if (odd_exponent.empty()) return {n, Mod4Class::odd, OddWitness{isqrt(half)}};

    if (odd_exponent.size() == 1) {
        const auto [p, e] = odd_exponent.front();
        if (e % 4 == 1 && (p % 8 == 5 || p % 8 == 7)) {
            const std::uint64_t m = isqrt(half / ipow(p, e));
            return {n, Mod4Class::two_mod_four, TwoModFourWitness{p, (e - 1) / 4, m}};
        }
    }
    return {n, Mod4Class::zero_mod_four, std::monostate{}};
}

}  // namespace eocong
