#include "mdim/field.hpp"

#include "mdim/error.hpp"

#include <string>

namespace mdim {

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

std::optional<PrimePower> prime_power(std::uint64_t q)
{
    if (q < 2)
        return std::nullopt;
    std::uint64_t p = q;
    for (std::uint64_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    std::uint32_t e = 0;
    while (q % p == 0) {
        q /= p;
        ++e;
    }
    if (q != 1)
        return std::nullopt;
    return PrimePower{static_cast<std::uint32_t>(p), e};
}

namespace {

using Poly = std::vector<std::uint32_t>; // constant term first, no trailing zeros

void trim(Poly& a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

Poly decode(std::uint64_t code, std::uint32_t p)
{
    Poly out;
    while (code) {
        out.push_back(static_cast<std::uint32_t>(code % p));
        code /= p;
    }
    return out;
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p)
{
    std::uint64_t result = 1, base = a % p;
    for (std::uint32_t exp = p - 2; exp; exp >>= 1) {
        if (exp & 1)
            result = result * base % p;
        base = base * base % p;
    }
    return static_cast<std::uint32_t>(result);
}

// Remainder of a modulo b over GF(p); b nonzero.
Poly poly_rem(Poly a, const Poly& b, std::uint32_t p)
{
    const std::uint32_t lead_inv = inv_mod(b.back(), p);
    trim(a);
    while (a.size() >= b.size()) {
        const std::uint64_t factor = std::uint64_t{a.back()} * lead_inv % p;
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) {
            const std::uint64_t sub = factor * b[i] % p;
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
        }
        trim(a);
    }
    return a;
}

// Trial division by every monic polynomial of degree 1..deg/2.
bool irreducible(const Poly& f, std::uint32_t p)
{
    const std::size_t deg = f.size() - 1;
    for (std::size_t d = 1; 2 * d <= deg; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i)
            count *= p;
        for (std::uint64_t low = 0; low < count; ++low) {
            Poly g = decode(low, p);
            g.resize(d + 1, 0);
            g[d] = 1;
            if (poly_rem(f, g, p).empty())
                return false;
        }
    }
    return true;
}

} // namespace

FiniteField make_field(std::uint32_t p, std::uint32_t e, std::uint32_t max_order)
{
    if (!is_prime(p))
        throw PreconditionError(std::to_string(p) + " is not prime");
    if (e < 1)
        throw PreconditionError("field degree must be at least 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
        q *= p;
        if (q > max_order)
            throw PreconditionError("field order " + std::to_string(p) + "^" + std::to_string(e) +
                                    " exceeds maximum " + std::to_string(max_order));
    }

    FiniteField f;
    f.p_ = p;
    f.e_ = e;
    f.q_ = static_cast<std::uint32_t>(q);

    if (e == 1) {
        f.modulus_ = {0, 1};
    } else {
        for (std::uint64_t low = 0; low < q; ++low) {
            Poly cand = decode(low, p);
            cand.resize(e + 1, 0);
            cand[e] = 1;
            if (cand[0] != 0 && irreducible(cand, p)) {
                f.modulus_ = cand;
                break;
            }
        }
    }

    // Find a primitive element by walking powers.
    f.log_.assign(q, 0);
    for (FieldElement g = (q == 2 ? 1 : 2); g < q; ++g) {
        std::vector<FieldElement> powers;
        powers.reserve(q - 1);
        FieldElement x = 1;
        bool full = true;
        for (std::uint64_t i = 0; i + 1 < q; ++i) {
            if (i > 0 && x == 1) {
                full = false;
                break;
            }
            powers.push_back(x);
            x = f.poly_mul(x, g);
        }
        if (full && x == 1) {
            f.exp_ = std::move(powers);
            break;
        }
    }
    for (std::uint32_t i = 0; i < f.exp_.size(); ++i)
        f.log_[f.exp_[i]] = i;
    return f;
}

FiniteField make_field(std::uint32_t q)
{
    const auto pp = prime_power(q);
    if (!pp)
        throw PreconditionError(std::to_string(q) + " is not a prime power");
    return make_field(pp->prime, pp->exponent);
}

FieldElement FiniteField::poly_mul(FieldElement a, FieldElement b) const
{
    if (e_ == 1)
        return static_cast<FieldElement>(std::uint64_t{a} * b % p_);
    Poly x = decode(a, p_);
    Poly y = decode(b, p_);
    if (x.empty() || y.empty())
        return 0;
    Poly prod(x.size() + y.size() - 1, 0);
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j)
            prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{x[i]} * y[j]) % p_);
    return from_coefficients(poly_rem(prod, modulus_, p_));
}

FieldElement FiniteField::add(FieldElement a, FieldElement b) const
{
    if (e_ == 1)
        return (a + b) % p_;
    FieldElement out = 0, place = 1;
    for (std::uint32_t i = 0; i < e_; ++i) {
        out += ((a % p_ + b % p_) % p_) * place;
        a /= p_;
        b /= p_;
        place *= p_;
    }
    return out;
}

FieldElement FiniteField::neg(FieldElement a) const
{
    if (e_ == 1)
        return (p_ - a) % p_;
    FieldElement out = 0, place = 1;
    for (std::uint32_t i = 0; i < e_; ++i) {
        out += ((p_ - a % p_) % p_) * place;
        a /= p_;
        place *= p_;
    }
    return out;
}

FieldElement FiniteField::sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }

FieldElement FiniteField::mul(FieldElement a, FieldElement b) const
{
    if (a == 0 || b == 0)
        return 0;
    return exp_[(log_[a] + log_[b]) % (q_ - 1)];
}

FieldElement FiniteField::inv(FieldElement a) const
{
    if (a == 0)
        throw PreconditionError("zero has no multiplicative inverse");
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

bool FiniteField::is_square(FieldElement a) const
{
    if (a == 0)
        return true;
    if (p_ == 2)
        return true;
    return log_[a] % 2 == 0;
}

std::vector<std::uint32_t> FiniteField::coefficients(FieldElement a) const
{
    std::vector<std::uint32_t> out(e_, 0);
    for (std::uint32_t i = 0; i < e_; ++i) {
        out[i] = a % p_;
        a /= p_;
    }
    return out;
}

FieldElement FiniteField::from_coefficients(const std::vector<std::uint32_t>& c) const
{
    FieldElement out = 0, place = 1;
    for (std::size_t i = 0; i < c.size() && i < e_; ++i) {
        out += (c[i] % p_) * place;
        place *= p_;
    }
    return out;
}

} // namespace mdim
