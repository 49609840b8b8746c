#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace reglab {

/// Exact rational scalar (GMP-backed). Coefficients over characteristic-0
/// fields and all symbolic polynomial arithmetic use this type.
using Rational = mpq_class;

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct parameter_error : error {
    using error::error;
};
struct composition_error : error {
    using error::error;
};
struct homogeneity_error : error {
    using error::error;
};
struct unsupported_ring_error : error {
    using error::error;
};
struct parse_error : error {
    using error::error;
};
struct insufficient_data_error : error {
    using error::error;
};

/// Coefficient field: characteristic 0 means the rationals, otherwise a
/// prime p <= 2^31 and arithmetic is carried out in GF(p).
struct FieldSpec {
    std::uint32_t characteristic = 0;

    FieldSpec() = default;
    explicit FieldSpec(std::uint32_t ch) : characteristic(ch) { validate(); }

    static FieldSpec rationals() { return FieldSpec(0); }
    static FieldSpec gf(std::uint32_t p) { return FieldSpec(p); }

    bool is_rational() const { return characteristic == 0; }

    void validate() const;

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

bool is_prime(std::uint32_t n);

namespace modarith {

inline std::uint32_t add(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    std::uint64_t s = std::uint64_t(a) + b;
    return std::uint32_t(s >= p ? s - p : s);
}
inline std::uint32_t sub(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return a >= b ? a - b : std::uint32_t(a + std::uint64_t(p) - b);
}
inline std::uint32_t mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return std::uint32_t((std::uint64_t(a) * b) % p);
}
std::uint32_t inverse(std::uint32_t a, std::uint32_t p);

/// Least non-negative residue of a signed 64-bit value.
inline std::uint32_t reduce(std::int64_t v, std::uint32_t p) {
    std::int64_t r = v % std::int64_t(p);
    if (r < 0) r += p;
    return std::uint32_t(r);
}

/// Image of an exact rational in GF(p); throws if the denominator
/// vanishes mod p.
std::uint32_t reduce(const Rational& v, std::uint32_t p);

}  // namespace modarith

}  // namespace reglab
