#pragma once

#include <array>
#include <stdexcept>

#include <openssl/evp.h>

#include "ig/bytes.hpp"

namespace ig {

using Digest = std::array<uint8_t, 32>;

inline Digest sha256(const uint8_t* p, size_t n) {
    Digest out{};
    unsigned int len = 0;
    if (EVP_Digest(p, n, out.data(), &len, EVP_sha256(), nullptr) != 1 || len != 32)
        throw std::runtime_error("sha256 failed");
    return out;
}

inline Digest sha256(const Bytes& b) { return sha256(b.data(), b.size()); }

inline Digest sha256(const std::string& s) {
    return sha256(reinterpret_cast<const uint8_t*>(s.data()), s.size());
}

} // namespace ig
