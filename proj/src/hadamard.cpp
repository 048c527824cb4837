#include "mdim/hadamard.hpp"

#include "mdim/error.hpp"
#include "mdim/field.hpp"

#include <map>
#include <optional>

namespace mdim {

HadamardMatrix::HadamardMatrix(std::size_t order, std::vector<std::int8_t> entries)
    : order_(order), entries_(std::move(entries))
{
    if (entries_.size() != order_ * order_)
        throw PreconditionError("matrix entry count does not match order");
    for (auto x : entries_)
        if (x != 1 && x != -1)
            throw PreconditionError("matrix entries must be +1 or -1");
}

HadamardMatrix HadamardMatrix::normalized() const
{
    HadamardMatrix h = *this;
    const std::size_t n = order_;
    for (std::size_t i = 0; i < n; ++i)
        if (h.entries_[i * n] == -1)
            for (std::size_t j = 0; j < n; ++j)
                h.entries_[i * n + j] = static_cast<std::int8_t>(-h.entries_[i * n + j]);
    for (std::size_t j = 0; j < n; ++j)
        if (h.entries_[j] == -1)
            for (std::size_t i = 0; i < n; ++i)
                h.entries_[i * n + j] = static_cast<std::int8_t>(-h.entries_[i * n + j]);
    return h;
}

bool is_hadamard(const HadamardMatrix& h)
{
    const std::size_t n = h.order();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            long dot = 0;
            for (std::size_t c = 0; c < n; ++c)
                dot += h(i, c) * h(j, c);
            if (dot != (i == j ? static_cast<long>(n) : 0))
                return false;
        }
    }
    return true;
}

HadamardMatrix tensor(const HadamardMatrix& a, const HadamardMatrix& b)
{
    const std::size_t n = a.order() * b.order();
    std::vector<std::int8_t> e(n * n);
    for (std::size_t i = 0; i < a.order(); ++i)
        for (std::size_t j = 0; j < a.order(); ++j)
            for (std::size_t k = 0; k < b.order(); ++k)
                for (std::size_t l = 0; l < b.order(); ++l)
                    e[(i * b.order() + k) * n + j * b.order() + l] = static_cast<std::int8_t>(a(i, j) * b(k, l));
    HadamardMatrix h(n, std::move(e));
    h.set_construction(a.construction() + "x" + b.construction());
    return h;
}

HadamardMatrix paley_one(std::uint32_t q)
{
    if (!prime_power(q) || q % 4 != 3)
        throw PreconditionError("Paley I needs a prime power q = 3 mod 4, got " + std::to_string(q));
    const FiniteField f = make_field(q);
    const std::size_t n = q + 1;
    auto chi = [&](FieldElement a) -> int {
        if (a == 0)
            return 0;
        return f.is_square(a) ? 1 : -1;
    };
    // H = I + S with S = [[0, jᵀ], [-j, Q]], Q the Jacobsthal matrix.
    std::vector<std::int8_t> e(n * n, 0);
    for (std::size_t j = 1; j < n; ++j) {
        e[j] = 1;
        e[j * n] = -1;
    }
    for (std::uint32_t a = 0; a < q; ++a)
        for (std::uint32_t b = 0; b < q; ++b)
            e[(a + 1) * n + (b + 1)] = static_cast<std::int8_t>(chi(f.sub(a, b)));
    for (std::size_t i = 0; i < n; ++i)
        e[i * n + i] = static_cast<std::int8_t>(e[i * n + i] + 1);
    HadamardMatrix h(n, std::move(e));
    h.set_construction("paley-1(" + std::to_string(q) + ")");
    return h;
}

namespace {

HadamardMatrix base(std::size_t n)
{
    if (n == 1) {
        HadamardMatrix h(1, {1});
        h.set_construction("sylvester");
        return h;
    }
    HadamardMatrix h(2, {1, 1, 1, -1});
    h.set_construction("sylvester");
    return h;
}

bool power_of_two(std::size_t n) { return n && (n & (n - 1)) == 0; }

std::optional<HadamardMatrix> build(std::size_t n, std::map<std::size_t, std::optional<HadamardMatrix>>& memo)
{
    if (auto it = memo.find(n); it != memo.end())
        return it->second;
    std::optional<HadamardMatrix> out;
    if (n == 1 || n == 2) {
        out = base(n);
    } else if (n % 4 != 0) {
        out = std::nullopt;
    } else if (power_of_two(n)) {
        HadamardMatrix h = tensor(base(2), *build(n / 2, memo));
        h.set_construction("sylvester");
        out = h;
    } else if (n - 1 <= 0xFFFFFFFFULL && prime_power(n - 1) && (n - 1) % 4 == 3) {
        out = paley_one(static_cast<std::uint32_t>(n - 1));
    } else {
        // Smallest factor a first: a ⊗ H(n/a), which includes Sylvester doubling at a = 2.
        for (std::size_t a = 2; a * a <= n && !out; ++a) {
            if (n % a)
                continue;
            auto x = build(a, memo);
            if (!x)
                continue;
            auto y = build(n / a, memo);
            if (y)
                out = tensor(*x, *y);
        }
    }
    memo[n] = out;
    return out;
}

} // namespace

HadamardMatrix hadamard_matrix(std::size_t n)
{
    if (n == 0)
        throw PreconditionError("Hadamard order must be positive");
    std::map<std::size_t, std::optional<HadamardMatrix>> memo;
    auto h = build(n, memo);
    if (!h)
        throw PreconditionError("no Hadamard matrix of order " + std::to_string(n) +
                                " from implemented constructions (tried: sylvester doubling, paley-1 with q = n-1, "
                                "kronecker products of constructible orders)");
    return *h;
}

} // namespace mdim
