#pragma once

#include <cstdint>
#include <cstring>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace ig {

using Bytes = std::vector<uint8_t>;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class ByteWriter {
public:
    Bytes take() { return std::move(buf_); }
    const Bytes& data() const { return buf_; }

    void u8(uint8_t v) { buf_.push_back(v); }

    void u32be(uint32_t v) {
        buf_.push_back(uint8_t(v >> 24));
        buf_.push_back(uint8_t(v >> 16));
        buf_.push_back(uint8_t(v >> 8));
        buf_.push_back(uint8_t(v));
    }

    void u64be(uint64_t v) {
        u32be(uint32_t(v >> 32));
        u32be(uint32_t(v));
    }

    void raw(const uint8_t* p, size_t n) { buf_.insert(buf_.end(), p, p + n); }
    void raw(const Bytes& b) { raw(b.data(), b.size()); }

    void blob(const Bytes& b) {
        u32be(uint32_t(b.size()));
        raw(b);
    }

    void str(const std::string& s) {
        u32be(uint32_t(s.size()));
        buf_.insert(buf_.end(), s.begin(), s.end());
    }

    // fixed-width big-endian, left padded with zeros; throws if it does not fit
    void mpz_fixed(const mpz_class& v, size_t width) {
        if (sgn(v) < 0) throw ParseError("mpz_fixed: negative value");
        size_t need = (mpz_sizeinbase(v.get_mpz_t(), 2) + 7) / 8;
        if (v == 0) need = 0;
        if (need > width) throw ParseError("mpz_fixed: value too wide");
        size_t off = buf_.size();
        buf_.resize(off + width, 0);
        if (need > 0) {
            size_t count = 0;
            mpz_export(buf_.data() + off + (width - need), &count, 1, 1, 1, 0,
                       v.get_mpz_t());
        }
    }

private:
    Bytes buf_;
};

class ByteReader {
public:
    ByteReader(const uint8_t* p, size_t n) : p_(p), n_(n) {}
    explicit ByteReader(const Bytes& b) : p_(b.data()), n_(b.size()) {}

    size_t remaining() const { return n_ - pos_; }
    bool done() const { return pos_ == n_; }

    uint8_t u8() {
        need(1);
        return p_[pos_++];
    }

    uint32_t u32be() {
        need(4);
        uint32_t v = (uint32_t(p_[pos_]) << 24) | (uint32_t(p_[pos_ + 1]) << 16) |
                     (uint32_t(p_[pos_ + 2]) << 8) | uint32_t(p_[pos_ + 3]);
        pos_ += 4;
        return v;
    }

    uint64_t u64be() {
        uint64_t hi = u32be();
        return (hi << 32) | u32be();
    }

    Bytes raw(size_t n) {
        need(n);
        Bytes out(p_ + pos_, p_ + pos_ + n);
        pos_ += n;
        return out;
    }

    Bytes blob() {
        uint32_t n = u32be();
        return raw(n);
    }

    std::string str() {
        uint32_t n = u32be();
        need(n);
        std::string out(reinterpret_cast<const char*>(p_ + pos_), n);
        pos_ += n;
        return out;
    }

    mpz_class mpz_fixed(size_t width) {
        need(width);
        mpz_class v;
        mpz_import(v.get_mpz_t(), width, 1, 1, 1, 0, p_ + pos_);
        pos_ += width;
        return v;
    }

private:
    void need(size_t n) const {
        if (pos_ + n > n_) throw ParseError("byte reader: truncated input");
    }
    const uint8_t* p_;
    size_t n_;
    size_t pos_ = 0;
};

inline std::string to_hex(const Bytes& b) {
    static const char* digits = "0123456789abcdef";
    std::string s;
    s.reserve(b.size() * 2);
    for (uint8_t c : b) {
        s.push_back(digits[c >> 4]);
        s.push_back(digits[c & 15]);
    }
    return s;
}

inline Bytes from_hex(const std::string& s) {
    if (s.size() % 2 != 0) throw ParseError("hex: odd length");
    auto nib = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        throw ParseError("hex: bad digit");
    };
    Bytes out(s.size() / 2);
    for (size_t i = 0; i < out.size(); ++i)
        out[i] = uint8_t(nib(s[2 * i]) << 4 | nib(s[2 * i + 1]));
    return out;
}

} // namespace ig
