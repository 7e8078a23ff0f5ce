#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace vres {

/// Prime field F_p, p < 2^31. Elements are canonical representatives in
/// [0, p).
class PrimeField {
public:
    explicit PrimeField(std::int64_t p);

    std::int64_t p() const { return p_; }

    std::int64_t reduce(std::int64_t a) const {
        std::int64_t r = a % p_;
        return r < 0 ? r + p_ : r;
    }
    std::int64_t add(std::int64_t a, std::int64_t b) const { return (a + b) % p_; }
    std::int64_t sub(std::int64_t a, std::int64_t b) const { return reduce(a - b); }
    std::int64_t mul(std::int64_t a, std::int64_t b) const { return (a * b) % p_; }
    std::int64_t neg(std::int64_t a) const { return a == 0 ? 0 : p_ - a; }
    std::int64_t inv(std::int64_t a) const;

private:
    std::int64_t p_;
};

bool is_prime(std::int64_t p);

/// Dense matrix over F_p. Row-major.
class FpMatrix {
public:
    FpMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::int64_t& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    std::int64_t at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::size_t rank(const PrimeField& F) const;

    /// Solve A x = b; returns false if inconsistent. Any solution is accepted.
    bool solve(const PrimeField& F, const std::vector<std::int64_t>& b,
               std::vector<std::int64_t>& x) const;

private:
    std::size_t rows_, cols_;
    std::vector<std::int64_t> data_;
};

}  // namespace vres
