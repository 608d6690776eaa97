#pragma once

// Partitions with even parts below odd parts.
//
// EO(n) counts partitions of n in which every even part is smaller than every
// odd part. EO-bar(n) keeps those EO partitions whose parts all occur an even
// number of times, except the largest even part, which (when an even part is
// present) must occur an odd number of times. The generating function of
// EO-bar is J_4^3 / J_2^2 with J_k = prod_{n>=1} (1 - q^{kn}).

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "eocong/series.hpp"

namespace eocong {

/// Brute-force enumeration refuses n above this bound.
inline constexpr std::uint64_t kEnumerationLimit = 120;

/// Part value -> multiplicity, largest part first.
struct PartitionMultiset {
    std::map<std::uint64_t, std::uint64_t, std::greater<>> parts;

    std::uint64_t total() const;
    bool operator==(const PartitionMultiset&) const = default;
};

bool is_eo(const PartitionMultiset& p);
bool is_eobar(const PartitionMultiset& p);

/// Visits every partition of n. `keep_prefix`, when given, must be closed
/// under taking prefixes (largest parts first); subtrees whose prefix it
/// rejects are skipped.
void for_each_partition(std::uint64_t n,
                        const std::function<void(const PartitionMultiset&)>& visit,
                        const std::function<bool(const PartitionMultiset&)>& keep_prefix = {});

std::vector<PartitionMultiset> eo_partitions(std::uint64_t n);
std::vector<PartitionMultiset> eobar_partitions(std::uint64_t n);

std::uint64_t eo_count(std::uint64_t n);
std::uint64_t eobar_count_enum(std::uint64_t n);

/// Exact EO-bar(0..order) as J_4^3 / J_2 / J_2. Intermediate coefficients
/// outgrow 64 bits past order 1381; std::overflow_error is thrown there.
Series eobar_series(std::size_t order);

/// EO-bar(0..order) mod m from the same eta quotient, using direct eta
/// products. O(order^2).
ModSeries eobar_residues(std::size_t order, std::uint64_t modulus);

/// EO-bar(0..order) mod m through theta series only:
///   J_4^3/J_2^2 = G(q^2),  G = J_2^3/J_1^2 = J_2^2 / (sum (-1)^n q^{n^2}),
///   J_2 = sum (-1)^n q^{2(3n^2-n)/2}.
/// Every operand is sparse, so the cost is O(order^1.5).
ModSeries eobar_residues_theta(std::size_t order, std::uint64_t modulus);

}  // namespace eocong
