#include "eocong/series.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace eocong {

namespace {

constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 31;

[[noreturn]] void overflow() { throw std::overflow_error("series coefficient overflow"); }

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) overflow();
    return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) overflow();
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) overflow();
    return r;
}

void check_modulus(std::uint64_t m) {
    if (m < 2 || m >= kMaxModulus)
        throw std::invalid_argument("series modulus must lie in [2, 2^31), got " + std::to_string(m));
}

template <class T>
std::vector<std::size_t> nonzero_positions(std::span<const T> c) {
    std::vector<std::size_t> nz;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i] != 0) nz.push_back(i);
    return nz;
}

// How many products bounded by (m-1)^2 can be added onto a value < m before a
// 64-bit accumulator might wrap.
std::uint64_t accumulation_budget(std::uint64_t m) {
    const std::uint64_t sq = (m - 1) * (m - 1);
    return (std::numeric_limits<std::uint64_t>::max() - m) / sq;
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m) {
    std::int64_t old_r = static_cast<std::int64_t>(a % m), r = static_cast<std::int64_t>(m);
    std::int64_t old_s = 1, s = 0;
    while (r != 0) {
        const std::int64_t q = old_r / r;
        old_r = std::exchange(r, old_r - q * r);
        old_s = std::exchange(s, old_s - q * s);
    }
    if (old_r != 1) throw std::domain_error("non-invertible series");
    const auto mm = static_cast<std::int64_t>(m);
    return static_cast<std::uint64_t>(((old_s % mm) + mm) % mm);
}

// Exponent of the n-th term of a theta series, n any integer.
std::int64_t theta_exponent(ThetaKind kind, std::int64_t n) {
    switch (kind) {
        case ThetaKind::square:
        case ThetaKind::square_alt: return n * n;
        case ThetaKind::pent3:
        case ThetaKind::pent3_alt: return (3 * n * n - n) / 2;
        case ThetaKind::octic:
        case ThetaKind::octic_alt: return 3 * n * n - n;
    }
    throw std::logic_error("unknown theta kind");
}

bool theta_alternating(ThetaKind kind) {
    return kind == ThetaKind::square_alt || kind == ThetaKind::pent3_alt ||
           kind == ThetaKind::octic_alt;
}

// Calls visit(exponent, sign) for every term with exponent <= order. Each kind's
// exponent is increasing in n on n >= 0 and on n <= 0, so both walks stop at
// the first exponent past the order.
template <class Visit>
void for_each_theta_term(ThetaKind kind, std::size_t order, Visit visit) {
    const auto limit = static_cast<std::int64_t>(order);
    const bool alt = theta_alternating(kind);
    for (std::int64_t n = 0;; ++n) {
        const std::int64_t e = theta_exponent(kind, n);
        if (e > limit) break;
        visit(static_cast<std::size_t>(e), (alt && (n & 1)) ? -1 : 1);
    }
    for (std::int64_t n = -1;; --n) {
        const std::int64_t e = theta_exponent(kind, n);
        if (e > limit) break;
        visit(static_cast<std::size_t>(e), (alt && (n & 1)) ? -1 : 1);
    }
}

}  // namespace

// ---------------------------------------------------------------------------
// Series

Series::Series(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("series needs at least one coefficient");
}

Series::Series(std::initializer_list<std::int64_t> coeffs)
    : Series(std::vector<std::int64_t>(coeffs)) {}

Series Series::zero(std::size_t order) { return Series(std::vector<std::int64_t>(order + 1, 0)); }

Series Series::one(std::size_t order) {
    std::vector<std::int64_t> c(order + 1, 0);
    c[0] = 1;
    return Series(std::move(c));
}

Series Series::truncated(std::size_t order) const {
    if (order > this->order()) throw std::out_of_range("cannot extend a truncated series");
    return Series(std::vector<std::int64_t>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

// ---------------------------------------------------------------------------
// ModSeries

ModSeries::ModSeries(Raw, std::vector<std::uint64_t> residues, std::uint64_t modulus)
    : coeffs_(std::move(residues)), modulus_(modulus) {}

ModSeries::ModSeries(std::vector<std::int64_t> coeffs, std::uint64_t modulus) : modulus_(modulus) {
    check_modulus(modulus);
    if (coeffs.empty()) throw std::invalid_argument("series needs at least one coefficient");
    const auto m = static_cast<std::int64_t>(modulus);
    coeffs_.reserve(coeffs.size());
    for (auto c : coeffs) coeffs_.push_back(static_cast<std::uint64_t>(((c % m) + m) % m));
}

ModSeries::ModSeries(const Series& exact, std::uint64_t modulus)
    : ModSeries(std::vector<std::int64_t>(exact.coeffs().begin(), exact.coeffs().end()), modulus) {}

ModSeries ModSeries::zero(std::size_t order, std::uint64_t modulus) {
    check_modulus(modulus);
    return ModSeries(Raw{}, std::vector<std::uint64_t>(order + 1, 0), modulus);
}

ModSeries ModSeries::one(std::size_t order, std::uint64_t modulus) {
    auto s = zero(order, modulus);
    s.coeffs_[0] = 1;
    return s;
}

ModSeries ModSeries::truncated(std::size_t order) const {
    if (order > this->order()) throw std::out_of_range("cannot extend a truncated series");
    return ModSeries(Raw{}, std::vector<std::uint64_t>(coeffs_.begin(), coeffs_.begin() + order + 1),
                     modulus_);
}

std::string_view to_string(ThetaKind kind) {
    switch (kind) {
        case ThetaKind::square: return "square";
        case ThetaKind::square_alt: return "square_alt";
        case ThetaKind::pent3: return "pent3";
        case ThetaKind::pent3_alt: return "pent3_alt";
        case ThetaKind::octic: return "octic";
        case ThetaKind::octic_alt: return "octic_alt";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Constructors of standard series

Series eta_factor(std::size_t k, std::size_t order) {
    if (k == 0) throw std::invalid_argument("eta_factor: k must be positive");
    std::vector<std::int64_t> c(order + 1, 0);
    c[0] = 1;
    // Multiply in (1 - q^s) for s = k, 2k, ...; top-down so c[i - s] is still
    // the coefficient of the previous partial product.
    for (std::size_t s = k; s <= order; s += k)
        for (std::size_t i = order; i >= s; --i) c[i] = checked_sub(c[i], c[i - s]);
    return Series(std::move(c));
}

ModSeries eta_factor_mod(std::size_t k, std::size_t order, std::uint64_t modulus) {
    if (k == 0) throw std::invalid_argument("eta_factor: k must be positive");
    auto out = ModSeries::one(order, modulus);
    auto& c = out.coeffs_;
    const std::uint64_t m = modulus;
    for (std::size_t s = k; s <= order; s += k)
        for (std::size_t i = order; i >= s; --i) {
            const std::uint64_t x = c[i], y = c[i - s];
            c[i] = x >= y ? x - y : x + m - y;
        }
    return out;
}

Series theta(ThetaKind kind, std::size_t order) {
    std::vector<std::int64_t> c(order + 1, 0);
    for_each_theta_term(kind, order, [&](std::size_t e, int sign) { c[e] = checked_add(c[e], sign); });
    return Series(std::move(c));
}

ModSeries theta_mod(ThetaKind kind, std::size_t order, std::uint64_t modulus) {
    return ModSeries(theta(kind, order), modulus);
}

// ---------------------------------------------------------------------------
// Arithmetic

Series mul(const Series& a, const Series& b) {
    const std::size_t n = std::min(a.order(), b.order());
    auto ca = a.coeffs().first(n + 1), cb = b.coeffs().first(n + 1);
    auto nza = nonzero_positions(ca), nzb = nonzero_positions(cb);
    if (nzb.size() < nza.size()) {
        std::swap(ca, cb);
        std::swap(nza, nzb);
    }
    std::vector<std::int64_t> r(n + 1, 0);
    for (std::size_t i : nza) {
        const std::int64_t x = ca[i];
        for (std::size_t j : nzb) {
            if (i + j > n) break;
            r[i + j] = checked_add(r[i + j], checked_mul(x, cb[j]));
        }
    }
    return Series(std::move(r));
}

ModSeries mul(const ModSeries& a, const ModSeries& b) {
    if (a.modulus() != b.modulus()) throw std::invalid_argument("mul: moduli differ");
    const std::uint64_t m = a.modulus();
    const std::size_t n = std::min(a.order(), b.order());
    auto ca = a.coeffs().first(n + 1), cb = b.coeffs().first(n + 1);
    auto nza = nonzero_positions(ca), nzb = nonzero_positions(cb);
    if (nzb.size() < nza.size()) {
        std::swap(ca, cb);
        std::swap(nza, nzb);
    }
    const std::uint64_t budget = accumulation_budget(m);
    std::vector<std::uint64_t> r(n + 1, 0);
    std::uint64_t pending = 0;
    for (std::size_t i : nza) {
        if (pending == budget) {
            for (auto& v : r) v %= m;
            pending = 0;
        }
        const std::uint64_t x = ca[i];
        std::uint64_t* dst = r.data() + i;
        const std::uint64_t* src = cb.data();
        const std::size_t len = n + 1 - i;
        for (std::size_t j = 0; j < len; ++j) dst[j] += x * src[j];
        ++pending;
    }
    for (auto& v : r) v %= m;
    return ModSeries(ModSeries::Raw{}, std::move(r), m);
}

Series power(const Series& a, unsigned e) {
    Series acc = Series::one(a.order());
    for (unsigned i = 0; i < e; ++i) acc = mul(acc, a);
    return acc;
}

ModSeries power(const ModSeries& a, unsigned e) {
    ModSeries acc = ModSeries::one(a.order(), a.modulus());
    for (unsigned i = 0; i < e; ++i) acc = mul(acc, a);
    return acc;
}

Series divide(const Series& num, const Series& den) {
    const std::int64_t lead = den[0];
    if (lead != 1 && lead != -1) throw std::domain_error("non-invertible series");
    const std::size_t n = std::min(num.order(), den.order());
    auto cd = den.coeffs().first(n + 1);
    std::vector<std::size_t> nz;
    for (std::size_t k = 1; k <= n; ++k)
        if (cd[k] != 0) nz.push_back(k);
    std::vector<std::int64_t> s(n + 1, 0);
    for (std::size_t i = 0; i <= n; ++i) {
        std::int64_t acc = num[i];
        for (std::size_t k : nz) {
            if (k > i) break;
            acc = checked_sub(acc, checked_mul(cd[k], s[i - k]));
        }
        s[i] = lead == 1 ? acc : checked_mul(acc, -1);
    }
    return Series(std::move(s));
}

ModSeries divide(const ModSeries& num, const ModSeries& den) {
    if (num.modulus() != den.modulus()) throw std::invalid_argument("divide: moduli differ");
    const std::uint64_t m = den.modulus();
    const std::uint64_t lead_inv = inverse_mod(den[0], m);
    const std::size_t n = std::min(num.order(), den.order());
    auto cd = den.coeffs().first(n + 1);
    std::vector<std::size_t> nz;
    for (std::size_t k = 1; k <= n; ++k)
        if (cd[k] != 0) nz.push_back(k);
    const std::uint64_t budget = accumulation_budget(m);
    std::vector<std::uint64_t> s(n + 1, 0);
    for (std::size_t i = 0; i <= n; ++i) {
        std::uint64_t acc = 0, pending = 0;
        for (std::size_t k : nz) {
            if (k > i) break;
            if (pending == budget) {
                acc %= m;
                pending = 0;
            }
            acc += cd[k] * s[i - k];
            ++pending;
        }
        acc %= m;
        const std::uint64_t diff = (num[i] + m - acc) % m;
        s[i] = diff * lead_inv % m;
    }
    return ModSeries(ModSeries::Raw{}, std::move(s), m);
}

Series invert(const Series& a) { return divide(Series::one(a.order()), a); }

ModSeries invert(const ModSeries& a) { return divide(ModSeries::one(a.order(), a.modulus()), a); }

Series substitute(const Series& a, std::size_t m) {
    if (m == 0) throw std::invalid_argument("substitute: m must be positive");
    const std::size_t n = a.order();
    std::vector<std::int64_t> r(n + 1, 0);
    for (std::size_t i = 0; i * m <= n; ++i) r[i * m] = a[i];
    return Series(std::move(r));
}

ModSeries substitute(const ModSeries& a, std::size_t m) {
    if (m == 0) throw std::invalid_argument("substitute: m must be positive");
    const std::size_t n = a.order();
    std::vector<std::uint64_t> r(n + 1, 0);
    for (std::size_t i = 0; i * m <= n; ++i) r[i * m] = a[i];
    return ModSeries(ModSeries::Raw{}, std::move(r), a.modulus());
}

namespace {

template <class S>
auto progression(const S& a, std::size_t r, std::size_t m) {
    if (m == 0 || r >= m)
        throw std::invalid_argument("extract_progression: need 0 <= r < m");
    std::vector<typename std::decay_t<decltype(a.coeffs())>::value_type> out;
    for (std::size_t i = r; i <= a.order(); i += m) out.push_back(a[i]);
    return out;
}

}  // namespace

std::vector<std::int64_t> extract_progression(const Series& a, std::size_t r, std::size_t m) {
    return progression(a, r, m);
}

std::vector<std::uint64_t> extract_progression(const ModSeries& a, std::size_t r, std::size_t m) {
    return progression(a, r, m);
}

Series mod_reduce(const Series& a, std::uint64_t m) {
    if (m < 2 || m > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
        throw std::invalid_argument("mod_reduce: modulus must be at least 2");
    const auto mm = static_cast<std::int64_t>(m);
    std::vector<std::int64_t> r;
    r.reserve(a.order() + 1);
    for (auto c : a.coeffs()) r.push_back(((c % mm) + mm) % mm);
    return Series(std::move(r));
}

}  // namespace eocong
