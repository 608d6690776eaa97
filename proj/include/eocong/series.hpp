#pragma once

// Truncated formal power series with exact coefficients.
//
// Two coefficient domains are provided:
//   Series     exact signed 64-bit integers; every add/multiply is checked and
//              overflow throws std::overflow_error.
//   ModSeries  residues modulo a fixed m >= 2, for congruence-only work at
//              orders where exact coefficients would not fit.
//
// A series of order N knows the coefficients of q^0..q^N exactly and nothing
// beyond. Binary operations truncate to the smaller order of their operands.
//
// Products and quotients iterate over the nonzero coefficients of the sparser
// operand, so multiplying or dividing by an eta factor or a theta series of
// order N costs O(N sqrt N) rather than O(N^2).

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string_view>
#include <vector>

namespace eocong {

class Series {
public:
    /// Builds a series from its coefficients; order is coeffs.size() - 1.
    explicit Series(std::vector<std::int64_t> coeffs);
    Series(std::initializer_list<std::int64_t> coeffs);

    static Series zero(std::size_t order);
    static Series one(std::size_t order);

    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    std::int64_t operator[](std::size_t n) const { return coeffs_.at(n); }
    std::span<const std::int64_t> coeffs() const noexcept { return coeffs_; }

    /// Same coefficients, cut down to a smaller order.
    Series truncated(std::size_t order) const;

    bool operator==(const Series&) const = default;

private:
    std::vector<std::int64_t> coeffs_;
};

class ModSeries {
public:
    /// Coefficients are reduced into [0, modulus) on construction.
    ModSeries(std::vector<std::int64_t> coeffs, std::uint64_t modulus);
    ModSeries(const Series& exact, std::uint64_t modulus);

    static ModSeries zero(std::size_t order, std::uint64_t modulus);
    static ModSeries one(std::size_t order, std::uint64_t modulus);

    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    std::uint64_t modulus() const noexcept { return modulus_; }
    std::uint64_t operator[](std::size_t n) const { return coeffs_.at(n); }
    std::span<const std::uint64_t> coeffs() const noexcept { return coeffs_; }

    ModSeries truncated(std::size_t order) const;

    bool operator==(const ModSeries&) const = default;

private:
    struct Raw {};
    ModSeries(Raw, std::vector<std::uint64_t> residues, std::uint64_t modulus);

    std::vector<std::uint64_t> coeffs_;
    std::uint64_t modulus_;

    friend ModSeries mul(const ModSeries&, const ModSeries&);
    friend ModSeries divide(const ModSeries&, const ModSeries&);
    friend ModSeries substitute(const ModSeries&, std::size_t);
    friend ModSeries eta_factor_mod(std::size_t, std::size_t, std::uint64_t);
};

/// One-variable theta series, all summed over every integer n:
///   square      q^{n^2}             square_alt  (-1)^n q^{n^2}
///   pent3       q^{(3n^2-n)/2}      pent3_alt   (-1)^n q^{(3n^2-n)/2}
///   octic       q^{3n^2-n}          octic_alt   (-1)^n q^{3n^2-n}
enum class ThetaKind { square, square_alt, pent3, pent3_alt, octic, octic_alt };

std::string_view to_string(ThetaKind kind);

/// prod_{n>=1} (1 - q^{kn}) truncated at `order`, by direct multiplication of
/// the factors. Costs O(order^2 / k).
Series eta_factor(std::size_t k, std::size_t order);
ModSeries eta_factor_mod(std::size_t k, std::size_t order, std::uint64_t modulus);

Series theta(ThetaKind kind, std::size_t order);
ModSeries theta_mod(ThetaKind kind, std::size_t order, std::uint64_t modulus);

Series mul(const Series& a, const Series& b);
ModSeries mul(const ModSeries& a, const ModSeries& b);

/// a^e by repeated multiplication with a; e = 0 gives 1 at a's order.
Series power(const Series& a, unsigned e);
ModSeries power(const ModSeries& a, unsigned e);

/// Multiplicative inverse; the constant term must be +1 or -1 (a unit mod m
/// for ModSeries), otherwise std::domain_error("non-invertible series").
Series invert(const Series& a);
ModSeries invert(const ModSeries& a);

/// num / den, same unit condition on den's constant term as invert.
Series divide(const Series& num, const Series& den);
ModSeries divide(const ModSeries& num, const ModSeries& den);

/// q -> q^m. The order is kept; source coefficients past order/m drop out.
Series substitute(const Series& a, std::size_t m);
ModSeries substitute(const ModSeries& a, std::size_t m);

/// [c_r, c_{r+m}, c_{r+2m}, ...] through the truncation order.
std::vector<std::int64_t> extract_progression(const Series& a, std::size_t r, std::size_t m);
std::vector<std::uint64_t> extract_progression(const ModSeries& a, std::size_t r, std::size_t m);

/// Least nonnegative residues mod m, still as an exact Series.
Series mod_reduce(const Series& a, std::uint64_t m);

}  // namespace eocong
