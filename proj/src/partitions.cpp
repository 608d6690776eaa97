#include "eocong/partitions.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace eocong {

namespace {

void check_enumerable(std::uint64_t n) {
    if (n > kEnumerationLimit)
        throw std::invalid_argument("partition enumeration is limited to n <= " +
                                    std::to_string(kEnumerationLimit) + " (got " + std::to_string(n) +
                                    "); use the generating-function path instead");
}

// Descending distinct values, each with a multiplicity.
void enumerate(std::uint64_t remaining, std::uint64_t max_part, PartitionMultiset& current,
               const std::function<void(const PartitionMultiset&)>& visit,
               const std::function<bool(const PartitionMultiset&)>& keep_prefix) {
    if (remaining == 0) {
        visit(current);
        return;
    }
    for (std::uint64_t v = std::min(max_part, remaining); v >= 1; --v) {
        for (std::uint64_t k = 1; k * v <= remaining; ++k) {
            current.parts[v] = k;
            if (!keep_prefix || keep_prefix(current))
                enumerate(remaining - k * v, v - 1, current, visit, keep_prefix);
        }
        current.parts.erase(v);
    }
}

// Largest parts first, so an EO partition lists all odd parts before any even
// part; a prefix already showing an odd part after an even one cannot recover.
bool eo_prefix(const PartitionMultiset& p) {
    bool seen_even = false;
    for (const auto& [value, mult] : p.parts) {
        if (value % 2 == 0)
            seen_even = true;
        else if (seen_even)
            return false;
    }
    return true;
}

}  // namespace

std::uint64_t PartitionMultiset::total() const {
    std::uint64_t s = 0;
    for (const auto& [value, mult] : parts) s += value * mult;
    return s;
}

bool is_eo(const PartitionMultiset& p) {
    std::uint64_t max_even = 0, min_odd = 0;
    for (const auto& [value, mult] : p.parts) {
        if (value % 2 == 0)
            max_even = std::max(max_even, value);
        else if (min_odd == 0 || value < min_odd)
            min_odd = value;
    }
    return max_even == 0 || min_odd == 0 || max_even < min_odd;
}

bool is_eobar(const PartitionMultiset& p) {
    if (!is_eo(p)) return false;
    std::uint64_t largest_even = 0;
    for (const auto& [value, mult] : p.parts)
        if (value % 2 == 0) largest_even = std::max(largest_even, value);
    for (const auto& [value, mult] : p.parts) {
        const bool odd_mult = mult % 2 == 1;
        if (odd_mult != (value == largest_even)) return false;
    }
    return true;
}

void for_each_partition(std::uint64_t n, const std::function<void(const PartitionMultiset&)>& visit,
                        const std::function<bool(const PartitionMultiset&)>& keep_prefix) {
    PartitionMultiset current;
    enumerate(n, n, current, visit, keep_prefix);
}

std::vector<PartitionMultiset> eo_partitions(std::uint64_t n) {
    check_enumerable(n);
    std::vector<PartitionMultiset> out;
    for_each_partition(
        n, [&](const PartitionMultiset& p) {
            if (is_eo(p)) out.push_back(p);
        },
        eo_prefix);
    return out;
}

std::vector<PartitionMultiset> eobar_partitions(std::uint64_t n) {
    check_enumerable(n);
    std::vector<PartitionMultiset> out;
    for_each_partition(
        n, [&](const PartitionMultiset& p) {
            if (is_eobar(p)) out.push_back(p);
        },
        eo_prefix);
    return out;
}

std::uint64_t eo_count(std::uint64_t n) {
    check_enumerable(n);
    std::uint64_t count = 0;
    for_each_partition(
        n, [&](const PartitionMultiset& p) { count += is_eo(p); }, eo_prefix);
    return count;
}

std::uint64_t eobar_count_enum(std::uint64_t n) {
    check_enumerable(n);
    std::uint64_t count = 0;
    for_each_partition(
        n, [&](const PartitionMultiset& p) { count += is_eobar(p); }, eo_prefix);
    return count;
}

Series eobar_series(std::size_t order) {
    const Series j2 = eta_factor(2, order);
    const Series j4 = eta_factor(4, order);
    // Two divisions by the sparse J_2 keep every intermediate a genuine
    // quotient series, which delays overflow compared to inverting J_2^2.
    return divide(divide(power(j4, 3), j2), j2);
}

ModSeries eobar_residues(std::size_t order, std::uint64_t modulus) {
    const ModSeries j2 = eta_factor_mod(2, order, modulus);
    const ModSeries j4 = eta_factor_mod(4, order, modulus);
    return divide(power(j4, 3), power(j2, 2));
}

ModSeries eobar_residues_theta(std::size_t order, std::uint64_t modulus) {
    const std::size_t half = order / 2;
    const ModSeries j2 = substitute(theta_mod(ThetaKind::pent3_alt, half, modulus), 2);
    const ModSeries alt_square = theta_mod(ThetaKind::square_alt, half, modulus);
    const ModSeries g = divide(mul(j2, j2), alt_square);
    std::vector<std::int64_t> spread(order + 1, 0);
    for (std::size_t i = 0; i <= half; ++i) spread[2 * i] = static_cast<std::int64_t>(g[i]);
    return ModSeries(std::move(spread), modulus);
}

}  // namespace eocong
