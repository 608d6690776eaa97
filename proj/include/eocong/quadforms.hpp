#pragma once

// Representation numbers of x^2 + y^2 + 3z^2 and x^2 + 3y^2 + 3z^2, the
// coefficient families built on them, and class numbers of imaginary
// quadratic fields by counting reduced binary forms.
//
//   f(q) = sum a(n) q^n = (sum q^{n^2}) (sum q^{3n^2-n})^2
//   F(q) = sum A(n) q^n = q^2 f(q^12) = sum_{x,y,z} q^{(6x+1)^2 + (6y+1)^2 + 12z^2}
//   sum b(n) q^n = J_1^2 J_2
//
// A(n) vanishes off n = 2 (mod 12) and 4 A(n) = r_{1,1,3}(n) on it.

#include <cstdint>
#include <variant>
#include <vector>

#include "eocong/series.hpp"

namespace eocong {

/// #{(x,y,z) in Z^3 : x^2 + y^2 + 3z^2 = n}
std::uint64_t r113(std::uint64_t n);
/// #{(x,y,z) in Z^3 : x^2 + 3y^2 + 3z^2 = n}
std::uint64_t r133(std::uint64_t n);

/// A(n) as r113(n) / 4 on n = 2 (mod 12), 0 elsewhere.
std::uint64_t A_coeff(std::uint64_t n);
/// A(n) by counting (6x+1)^2 + (6y+1)^2 + 12z^2 = n directly.
std::uint64_t A_coeff_direct(std::uint64_t n);

/// a(n) = A(12n + 2).
std::uint64_t a_coeff(std::uint64_t n);
/// b(n), the n-th coefficient of J_1^2 J_2.
std::int64_t b_coeff(std::uint64_t n);

/// f(q) from its theta-product form.
Series a_series(std::size_t order);
/// J_1^2 J_2 from eta products.
Series b_series(std::size_t order);
/// (sum (-1)^n q^{n^2}) (sum (-1)^n q^{3n^2-n})^2, equal to b_series.
Series b_series_theta(std::size_t order);

/// A(0..max_n) backed by a_series; the workhorse for large sweeps.
class ATable {
public:
    explicit ATable(std::uint64_t max_n);

    std::uint64_t max_n() const noexcept { return max_n_; }
    /// Throws std::out_of_range past max_n.
    std::uint64_t operator()(std::uint64_t n) const;

private:
    std::uint64_t max_n_;
    Series a_;
};

/// Positive definite primitive form (a, b, c) with |b| <= a <= c, and b >= 0
/// when |b| = a or a = c.
struct ReducedForm {
    std::int64_t a, b, c;

    std::int64_t discriminant() const noexcept { return b * b - 4 * a * c; }
    bool operator==(const ReducedForm&) const = default;
};

/// Discriminant of Q(sqrt(-m)) for squarefree m: -m if m = 3 (mod 4), else -4m.
std::int64_t field_discriminant(std::uint64_t m);

/// All reduced primitive forms of discriminant d < 0, d = 0 or 1 (mod 4),
/// ordered by (a, b).
std::vector<ReducedForm> reduced_forms(std::int64_t d);

/// h(-m): the class number of Q(sqrt(-m)). m must be squarefree.
std::uint64_t class_number(std::uint64_t m);

enum class Mod4Class { odd, two_mod_four, zero_mod_four };

const char* to_string(Mod4Class c);

/// n = 2 m^2.
struct OddWitness {
    std::uint64_t m;
    bool operator==(const OddWitness&) const = default;
};

/// n = 2 p^{4 alpha + 1} m^2 with p = 5, 7 (mod 8) prime and gcd(m, 6p) = 1.
struct TwoModFourWitness {
    std::uint64_t p;
    unsigned alpha;
    std::uint64_t m;
    bool operator==(const TwoModFourWitness&) const = default;
};

struct Mod4Certificate {
    std::uint64_t n;
    Mod4Class residue_class;
    std::variant<std::monostate, OddWitness, TwoModFourWitness> witness;

    /// Rebuilds n from the witness and checks its side conditions.
    bool witness_holds() const;
};

/// The residue class of A(n) mod 4 read off the factorization of n / 2.
/// Throws std::invalid_argument unless n = 2 (mod 12).
Mod4Certificate classify_mod4(std::uint64_t n);

}  // namespace eocong
