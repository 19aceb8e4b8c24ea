#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace ig {

// packed bit vector; bit i lives in word i/64 at bit i%64
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    size_t size() const { return n_; }

    bool get(size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    void set(size_t i, bool v = true) {
        uint64_t mask = uint64_t{1} << (i & 63);
        if (v)
            w_[i >> 6] |= mask;
        else
            w_[i >> 6] &= ~mask;
    }

    void flip(size_t i) { w_[i >> 6] ^= uint64_t{1} << (i & 63); }

    size_t popcount() const {
        size_t c = 0;
        for (uint64_t w : w_) c += size_t(std::popcount(w));
        return c;
    }

    const std::vector<uint64_t>& words() const { return w_; }
    std::vector<uint64_t>& words() { return w_; }

    bool operator==(const BitVec& o) const { return n_ == o.n_ && w_ == o.w_; }

    friend size_t hamming(const BitVec& a, const BitVec& b) {
        if (a.n_ != b.n_) throw std::invalid_argument("bitvec length mismatch");
        size_t c = 0;
        for (size_t i = 0; i < a.w_.size(); ++i)
            c += size_t(std::popcount(a.w_[i] ^ b.w_[i]));
        return c;
    }

    friend BitVec operator^(const BitVec& a, const BitVec& b) {
        if (a.n_ != b.n_) throw std::invalid_argument("bitvec length mismatch");
        BitVec r(a.n_);
        for (size_t i = 0; i < a.w_.size(); ++i) r.w_[i] = a.w_[i] ^ b.w_[i];
        return r;
    }

private:
    size_t n_ = 0;
    std::vector<uint64_t> w_;
};

} // namespace ig
