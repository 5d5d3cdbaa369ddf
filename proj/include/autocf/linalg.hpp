#pragma once

// Dense bit vectors and incremental Gaussian elimination over F2.

#include <cstddef>
#include <cstdint>
#include <vector>

namespace autocf::linalg {

class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    std::size_t size() const { return size_; }
    bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
    void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
    void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }
    bool is_zero() const;
    // Lowest / highest set bit, or size() when zero.
    std::size_t lowest() const { return lowest_from(0); }
    std::size_t lowest_from(std::size_t start) const;
    std::size_t highest() const;
    std::size_t popcount() const;
    // this ^= other, touching only words from `first_word` on.
    void xor_from(const BitVec& other, std::size_t first_word);
    BitVec& operator^=(const BitVec& other) {
        xor_from(other, 0);
        return *this;
    }
    std::vector<std::size_t> ones() const;

    friend bool operator==(const BitVec&, const BitVec&) = default;

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

// Row space of a matrix with `columns` columns, fed one row at a time. Each stored
// row's pivot is its lowest set bit; pivots are distinct.
class EchelonBasis {
public:
    explicit EchelonBasis(std::size_t columns);

    // Reduces the row against the basis and keeps it if something is left.
    // Returns true when the rank grew.
    bool insert(BitVec row);

    std::size_t columns() const { return columns_; }
    std::size_t rank() const { return rows_.size(); }
    bool full_rank() const { return rows_.size() == columns_; }

    // Basis of {x : row . x = 0 for every inserted row}: one vector per free column f,
    // with highest set bit f and no other free column set. Sorted by f ascending, which
    // makes it the reduced echelon form with pivots at the highest index.
    std::vector<BitVec> nullspace() const;

private:
    std::size_t columns_;
    std::vector<BitVec> rows_;
    std::vector<std::size_t> pivot_row_;  // column -> row index, or npos
};

}  // namespace autocf::linalg
