#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace mdim {

bool is_prime(std::uint64_t n);

struct PrimePower {
    std::uint32_t prime;
    std::uint32_t exponent;
};

/// Decomposes q = p^e; nullopt when q is not a prime power (q < 2 included).
std::optional<PrimePower> prime_power(std::uint64_t q);

/// Elements of GF(p^e) are encoded as integers 0..q-1 whose base-p digits are
/// the polynomial coefficients, constant term first. 0 and 1 are the field's
/// zero and one.
using FieldElement = std::uint32_t;

/// GF(p^e) with a fixed irreducible modulus. Immutable once built; arithmetic
/// goes through exp/log tables for a primitive element.
class FiniteField {
public:
    static constexpr std::uint32_t default_max_order = 1U << 16;

    std::uint32_t characteristic() const { return p_; }
    std::uint32_t degree() const { return e_; }
    std::uint32_t order() const { return q_; }

    /// Monic modulus coefficients, constant term first, length degree()+1.
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    FieldElement add(FieldElement a, FieldElement b) const;
    FieldElement sub(FieldElement a, FieldElement b) const;
    FieldElement neg(FieldElement a) const;
    FieldElement mul(FieldElement a, FieldElement b) const;
    /// Throws PreconditionError on a == 0.
    FieldElement inv(FieldElement a) const;

    /// A generator of the multiplicative group.
    FieldElement primitive() const { return exp_[1]; }
    bool is_square(FieldElement a) const;

    std::vector<std::uint32_t> coefficients(FieldElement a) const;
    FieldElement from_coefficients(const std::vector<std::uint32_t>& c) const;

    friend FiniteField make_field(std::uint32_t p, std::uint32_t e, std::uint32_t max_order);

private:
    FiniteField() = default;

    FieldElement poly_mul(FieldElement a, FieldElement b) const;

    std::uint32_t p_ = 0;
    std::uint32_t e_ = 0;
    std::uint32_t q_ = 0;
    std::vector<std::uint32_t> modulus_;
    std::vector<FieldElement> exp_; // exp_[i] = g^i, length q-1
    std::vector<std::uint32_t> log_; // log_[a] for a != 0
};

/// Builds GF(p^e). For e > 1 the modulus is the smallest monic irreducible of
/// degree e, where polynomials are ordered by their digit encoding.
FiniteField make_field(std::uint32_t p, std::uint32_t e,
                       std::uint32_t max_order = FiniteField::default_max_order);

/// make_field for a prime power q.
FiniteField make_field(std::uint32_t q);

} // namespace mdim
