#include "vres/modp.hpp"

namespace vres {

bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

PrimeField::PrimeField(std::int64_t p) : p_(p) {
    if (!is_prime(p)) throw std::invalid_argument("characteristic must be prime");
    if (p >= (std::int64_t(1) << 31)) throw std::invalid_argument("characteristic too large");
}

std::int64_t PrimeField::inv(std::int64_t a) const {
    a = reduce(a);
    if (a == 0) throw std::domain_error("inverse of zero");
    // extended euclid
    std::int64_t t = 0, newt = 1, r = p_, newr = a;
    while (newr != 0) {
        std::int64_t q = r / newr;
        std::int64_t tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    return reduce(t);
}

std::size_t FpMatrix::rank(const PrimeField& F) const {
    FpMatrix A = *this;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows_ && A.at(pivot, c) == 0) ++pivot;
        if (pivot == rows_) continue;
        for (std::size_t j = c; j < cols_; ++j) std::swap(A.at(rank, j), A.at(pivot, j));
        std::int64_t inv = F.inv(A.at(rank, c));
        for (std::size_t j = c; j < cols_; ++j) A.at(rank, j) = F.mul(A.at(rank, j), inv);
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == rank || A.at(r, c) == 0) continue;
            std::int64_t f = A.at(r, c);
            for (std::size_t j = c; j < cols_; ++j)
                A.at(r, j) = F.sub(A.at(r, j), F.mul(f, A.at(rank, j)));
        }
        ++rank;
    }
    return rank;
}

bool FpMatrix::solve(const PrimeField& F, const std::vector<std::int64_t>& b,
                     std::vector<std::int64_t>& x) const {
    if (b.size() != rows_) throw std::invalid_argument("solve: rhs size mismatch");
    FpMatrix A = *this;
    std::vector<std::int64_t> rhs = b;
    for (auto& v : rhs) v = F.reduce(v);

    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows_ && A.at(pivot, c) == 0) ++pivot;
        if (pivot == rows_) continue;
        for (std::size_t j = c; j < cols_; ++j) std::swap(A.at(rank, j), A.at(pivot, j));
        std::swap(rhs[rank], rhs[pivot]);
        std::int64_t inv = F.inv(A.at(rank, c));
        for (std::size_t j = c; j < cols_; ++j) A.at(rank, j) = F.mul(A.at(rank, j), inv);
        rhs[rank] = F.mul(rhs[rank], inv);
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == rank || A.at(r, c) == 0) continue;
            std::int64_t f = A.at(r, c);
            for (std::size_t j = c; j < cols_; ++j)
                A.at(r, j) = F.sub(A.at(r, j), F.mul(f, A.at(rank, j)));
            rhs[r] = F.sub(rhs[r], F.mul(f, rhs[rank]));
        }
        pivot_col.push_back(c);
        ++rank;
    }
    for (std::size_t r = rank; r < rows_; ++r)
        if (rhs[r] != 0) return false;
    x.assign(cols_, 0);
    for (std::size_t r = 0; r < rank; ++r) x[pivot_col[r]] = rhs[r];
    return true;
}

}  // namespace vres
