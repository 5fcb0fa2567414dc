#pragma once

#include <gmpxx.h>
#include <cstddef>
#include <vector>

namespace cgsig {

// Dense matrix over Z with arbitrary-precision entries. Row-major storage.
// 0x0 matrices are legal (empty Seifert matrix of the unknot) and have det 1.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols) {}

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<std::vector<mpz_class>>& rows);
    static IntMatrix block_diag(const IntMatrix& a, const IntMatrix& b);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    bool is_symmetric() const;

    mpz_class& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const mpz_class& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    IntMatrix transpose() const;
    IntMatrix operator+(const IntMatrix& o) const;
    IntMatrix operator-(const IntMatrix& o) const;
    IntMatrix operator*(const IntMatrix& o) const;
    IntMatrix operator-() const;
    bool operator==(const IntMatrix& o) const = default;

    // Fraction-free Bareiss elimination; exact.
    mpz_class det() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<mpz_class> e_;
};

} // namespace cgsig
