#include "autocf/linalg.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace autocf::linalg {

namespace {
constexpr std::size_t kNone = static_cast<std::size_t>(-1);
}

bool BitVec::is_zero() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t BitVec::lowest_from(std::size_t start) const {
    std::size_t w = start / 64;
    if (w >= words_.size()) {
        return size_;
    }
    std::uint64_t bits = words_[w] & (~std::uint64_t{0} << (start % 64));
    while (bits == 0) {
        if (++w >= words_.size()) {
            return size_;
        }
        bits = words_[w];
    }
    return w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
}

std::size_t BitVec::highest() const {
    for (std::size_t w = words_.size(); w-- > 0;) {
        if (words_[w] != 0) {
            return w * 64 + 63 - static_cast<std::size_t>(std::countl_zero(words_[w]));
        }
    }
    return size_;
}

std::size_t BitVec::popcount() const {
    std::size_t n = 0;
    for (auto w : words_) {
        n += static_cast<std::size_t>(std::popcount(w));
    }
    return n;
}

void BitVec::xor_from(const BitVec& other, std::size_t first_word) {
    if (other.size_ != size_) {
        throw std::invalid_argument("BitVec size mismatch");
    }
    for (std::size_t w = first_word; w < words_.size(); ++w) {
        words_[w] ^= other.words_[w];
    }
}

std::vector<std::size_t> BitVec::ones() const {
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        std::uint64_t bits = words_[w];
        while (bits != 0) {
            out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
            bits &= bits - 1;
        }
    }
    return out;
}

EchelonBasis::EchelonBasis(std::size_t columns) : columns_(columns), pivot_row_(columns, kNone) {}

bool EchelonBasis::insert(BitVec row) {
    if (row.size() != columns_) {
        throw std::invalid_argument("row width does not match the basis");
    }
    std::size_t c = row.lowest();
    while (c < columns_) {
        const std::size_t r = pivot_row_[c];
        if (r == kNone) {
            pivot_row_[c] = rows_.size();
            rows_.push_back(std::move(row));
            return true;
        }
        row.xor_from(rows_[r], c / 64);
        c = row.lowest_from(c + 1);
    }
    return false;
}

std::vector<BitVec> EchelonBasis::nullspace() const {
    // Back-substitute so every pivot column is clear in all other rows.
    std::vector<BitVec> reduced = rows_;
    std::vector<std::size_t> pivots;
    for (std::size_t c = 0; c < columns_; ++c) {
        if (pivot_row_[c] != kNone) {
            pivots.push_back(c);
        }
    }
    for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
        const BitVec& prow = reduced[pivot_row_[*it]];
        for (auto other : pivots) {
            if (other >= *it) {
                break;
            }
            BitVec& target = reduced[pivot_row_[other]];
            if (target.test(*it)) {
                target.xor_from(prow, *it / 64);
            }
        }
    }
    std::vector<BitVec> basis;
    for (std::size_t f = 0; f < columns_; ++f) {
        if (pivot_row_[f] != kNone) {
            continue;
        }
        BitVec x(columns_);
        x.set(f);
        for (auto p : pivots) {
            if (p >= f) {
                break;
            }
            if (reduced[pivot_row_[p]].test(f)) {
                x.set(p);
            }
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

}  // namespace autocf::linalg
