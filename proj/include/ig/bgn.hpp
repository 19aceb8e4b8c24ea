#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

#include <gmpxx.h>

#include "ig/bytes.hpp"
#include "ig/rng.hpp"

namespace ig::bgn {

struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct ParamGenError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct OutOfRangeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Backend : uint8_t { real = 1, mock = 2 };

// ---- real backend element types ------------------------------------------

// affine point on y^2 = x^3 + x over F_p, or the point at infinity
struct CurvePoint {
    mpz_class x, y;
    bool inf = true;

    bool operator==(const CurvePoint& o) const {
        if (inf || o.inf) return inf == o.inf;
        return x == o.x && y == o.y;
    }
};

// element of F_{p^2} = F_p[i]/(i^2+1); target group lives here
struct Fp2 {
    mpz_class re, im;
    bool operator==(const Fp2& o) const { return re == o.re && im == o.im; }
};

// ---- mock backend element type -------------------------------------------

// exponent-vector emulation: level-1 element (a, b) stands for g^a h'^b where
// the group is Z_n x Z_n under addition, g = (1,0) and h = (0, q2).  The
// randomizer exponent r maps to b = r*q2 mod n, so h has order q1 exactly as
// in the real scheme.  The plaintext is in the open; the mock backend trades
// all security for speed and is meant for protocol-logic experiments only.
struct MockElem {
    mpz_class a, b;
    bool operator==(const MockElem& o) const { return a == o.a && b == o.b; }
};

struct CipherL1 {
    std::variant<MockElem, CurvePoint> e;
    bool operator==(const CipherL1& o) const { return e == o.e; }
};

struct CipherL2 {
    std::variant<MockElem, Fp2> e;
    bool operator==(const CipherL2& o) const { return e == o.e; }
};

// ---- keys ------------------------------------------------------------------

struct PublicParams {
    Backend backend = Backend::mock;
    mpz_class n;               // composite modulus q1*q2
    mpz_class plaintext_bound; // largest value decrypt is expected to handle
    size_t n_width = 0;        // serialized width of mod-n integers, bytes

    // real backend
    mpz_class p;      // field prime, p = cof*n - 1, p = 3 (mod 4)
    mpz_class cof;    // cofactor (p+1)/n
    size_t p_width = 0;
    CurvePoint g;     // order-n generator
    CurvePoint h;     // order-q1 element, h = g^{w_h}
    Fp2 gt;           // e(g,g), order n
    Fp2 ht;           // e(g,h), order q1
    mpz_class final_exp; // (p^2-1)/n

    // mock backend
    MockElem mg; // (1, 0)
    MockElem mh; // (0, q2)

    uint64_t gen_seed = 0; // recorded for the white-box setup disclosure
};

struct PrivateKey {
    mpz_class q1, q2;
    // discrete log of h base g; a multiple of q2, known to the key owner and
    // used by the prover to track target-group randomizers across pairings
    mpz_class w_h;
};

// ---- operations ------------------------------------------------------------

std::pair<PublicParams, PrivateKey> gen_params(unsigned bit_size,
                                               const mpz_class& plaintext_bound,
                                               uint64_t seed,
                                               Backend backend = Backend::mock);

// deterministic construction from fixed primes (tests, differential checks)
std::pair<PublicParams, PrivateKey> make_params(const mpz_class& q1,
                                                const mpz_class& q2,
                                                const mpz_class& plaintext_bound,
                                                uint64_t seed, Backend backend);

CipherL1 encrypt1(const PublicParams& pp, const mpz_class& x, const mpz_class& r);
CipherL1 encrypt1(const PublicParams& pp, const mpz_class& x, Rng& rng);

// level-2 encryption gt^v * ht^rho (verifier-side recomputation, simulators)
CipherL2 encrypt2(const PublicParams& pp, const mpz_class& v, const mpz_class& rho);

CipherL1 add_l1(const PublicParams& pp, const CipherL1& a, const CipherL1& b);
CipherL2 add_l2(const PublicParams& pp, const CipherL2& a, const CipherL2& b);

CipherL1 smul(const PublicParams& pp, const CipherL1& a, const mpz_class& k);
CipherL2 smul(const PublicParams& pp, const CipherL2& a, const mpz_class& k);

CipherL1 neg(const PublicParams& pp, const CipherL1& a);
CipherL2 neg(const PublicParams& pp, const CipherL2& a);

CipherL2 pair(const PublicParams& pp, const CipherL1& a, const CipherL1& b);

CipherL1 identity1(const PublicParams& pp);
CipherL2 identity2(const PublicParams& pp);

long decrypt(const PublicParams& pp, const PrivateKey& sk, const CipherL1& c,
             long bound);
long decrypt(const PublicParams& pp, const PrivateKey& sk, const CipherL2& c,
             long bound);

bool open_randomizer(const PublicParams& pp, const CipherL1& c,
                     const mpz_class& claimed_x, const mpz_class& claimed_r);

// true iff c = gt^0 * ht^rho for the claimed rho (level-2 zero opening)
bool open_zero_l2(const PublicParams& pp, const CipherL2& c, const mpz_class& rho);

// ---- serialization ---------------------------------------------------------

// tags: 0x01 real L1, 0x02 mock L1; level-2 sets the high bit (0x81, 0x82)
Bytes serialize(const PublicParams& pp, const CipherL1& c);
Bytes serialize(const PublicParams& pp, const CipherL2& c);
CipherL1 parse_l1(const PublicParams& pp, ByteReader& r);
CipherL2 parse_l2(const PublicParams& pp, ByteReader& r);

std::string params_to_text(const PublicParams& pp);
PublicParams params_from_text(const std::string& text);
std::string key_to_text(const PrivateKey& sk);
PrivateKey key_from_text(const std::string& text);

// sanity of a disclosed key against public parameters: q1, q2 prime,
// q1*q2 = n, h^{q1} = 1, g of order n, h = g^{w_h} with q2 | w_h
bool validate_key_disclosure(const PublicParams& pp, const PrivateKey& sk);

// ---- internal helpers exposed for tests and kernels ------------------------

CurvePoint ec_add(const mpz_class& p, const CurvePoint& a, const CurvePoint& b);
CurvePoint ec_mul(const mpz_class& p, const CurvePoint& a, const mpz_class& k);
bool ec_on_curve(const mpz_class& p, const CurvePoint& a);
Fp2 fp2_mul(const mpz_class& p, const Fp2& a, const Fp2& b);
Fp2 fp2_pow(const mpz_class& p, const Fp2& a, const mpz_class& e);
Fp2 fp2_inv(const mpz_class& p, const Fp2& a);
// reduced Tate pairing with distortion map (x,y) -> (-x, iy)
Fp2 tate_pairing(const PublicParams& pp, const CurvePoint& a, const CurvePoint& b);

} // namespace ig::bgn
