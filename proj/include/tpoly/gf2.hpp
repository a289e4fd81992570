#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace tpoly::gf2 {

enum class Kernel { Scalar, Avx2 };

bool avx2_supported();
/// Kernel used by xor_into / find_nonzero; AVX2 when the CPU has it.
Kernel active_kernel();
/// Forces a kernel; requesting AVX2 on a CPU without it throws.
void set_kernel(Kernel k);
const char* kernel_name(Kernel k);

/// dst ^= src over `words` 64-bit words.
void xor_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t words);
/// Index of the first nonzero word in [begin, words), or `words` if none.
std::size_t find_nonzero(const std::uint64_t* row, std::size_t begin, std::size_t words);

namespace detail {
void xor_scalar(std::uint64_t* dst, const std::uint64_t* src, std::size_t words);
std::size_t scan_scalar(const std::uint64_t* row, std::size_t begin, std::size_t words);
void xor_avx2(std::uint64_t* dst, const std::uint64_t* src, std::size_t words);
std::size_t scan_avx2(const std::uint64_t* row, std::size_t begin, std::size_t words);
}  // namespace detail

/// Dense bit matrix with rows padded to whole 64-bit words.
class BitMatrix {
public:
    BitMatrix(std::size_t rows, std::size_t cols);
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t words() const { return words_; }
    void flip(std::size_t r, std::size_t c) { row(r)[c / 64] ^= std::uint64_t{1} << (c % 64); }
    bool get(std::size_t r, std::size_t c) const { return (row(r)[c / 64] >> (c % 64)) & 1; }
    std::uint64_t* row(std::size_t r) { return data_.data() + r * words_; }
    const std::uint64_t* row(std::size_t r) const { return data_.data() + r * words_; }

private:
    std::size_t rows_, cols_, words_;
    std::vector<std::uint64_t> data_;
};

/// Rank over the two-element field; the matrix is consumed.
std::size_t rank(BitMatrix m);

}  // namespace tpoly::gf2
