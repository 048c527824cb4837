#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace mdim {

/// Square ±1 matrix, row-major. Not guaranteed orthogonal unless produced by
/// hadamard_matrix(); use is_hadamard() to check.
class HadamardMatrix {
public:
    HadamardMatrix() = default;
    HadamardMatrix(std::size_t order, std::vector<std::int8_t> entries);

    std::size_t order() const { return order_; }
    int operator()(std::size_t i, std::size_t j) const { return entries_[i * order_ + j]; }
    const std::vector<std::int8_t>& entries() const { return entries_; }

    /// Name of the construction that produced the matrix ("sylvester", "paley-1", ...).
    const std::string& construction() const { return construction_; }
    void set_construction(std::string c) { construction_ = std::move(c); }

    /// Negates rows, then columns, whose first entry is -1.
    HadamardMatrix normalized() const;

    bool operator==(const HadamardMatrix& o) const { return order_ == o.order_ && entries_ == o.entries_; }

private:
    std::size_t order_ = 0;
    std::vector<std::int8_t> entries_;
    std::string construction_;
};

/// H·Hᵀ = n·I.
bool is_hadamard(const HadamardMatrix& h);

/// Kronecker product a ⊗ b.
HadamardMatrix tensor(const HadamardMatrix& a, const HadamardMatrix& b);

/// Paley type I matrix of order q+1 for a prime power q ≡ 3 (mod 4).
HadamardMatrix paley_one(std::uint32_t q);

/// Hadamard matrix of order n from Sylvester doubling, Paley I, and Kronecker
/// products of constructible orders. Throws PreconditionError listing the
/// constructions tried when none applies.
HadamardMatrix hadamard_matrix(std::size_t n);

} // namespace mdim
