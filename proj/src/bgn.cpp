#include "ig/bgn.hpp"

#include <sstream>
#include <unordered_map>

namespace ig::bgn {

namespace {

mpz_class mod(const mpz_class& a, const mpz_class& m) {
    mpz_class r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

mpz_class invmod(const mpz_class& a, const mpz_class& m) {
    mpz_class r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw std::runtime_error("modular inverse does not exist");
    return r;
}

mpz_class powmod(const mpz_class& b, const mpz_class& e, const mpz_class& m) {
    mpz_class r;
    mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
    return r;
}

bool is_prime(const mpz_class& v) {
    return mpz_probab_prime_p(v.get_mpz_t(), 40) != 0;
}

void check_same_backend(const PublicParams& pp, bool a_mock, bool b_mock) {
    bool want = pp.backend == Backend::mock;
    if (a_mock != want || b_mock != want)
        throw InputError("ciphertext backend does not match parameters");
}

} // namespace

// ---- curve arithmetic over F_p, curve y^2 = x^3 + x ------------------------

bool ec_on_curve(const mpz_class& p, const CurvePoint& a) {
    if (a.inf) return true;
    mpz_class lhs = mod(a.y * a.y, p);
    mpz_class rhs = mod(a.x * a.x * a.x + a.x, p);
    return lhs == rhs;
}

CurvePoint ec_neg(const mpz_class& p, const CurvePoint& a) {
    if (a.inf) return a;
    return CurvePoint{a.x, a.y == 0 ? mpz_class(0) : mpz_class(p - a.y), false};
}

CurvePoint ec_add(const mpz_class& p, const CurvePoint& a, const CurvePoint& b) {
    if (a.inf) return b;
    if (b.inf) return a;
    mpz_class lambda;
    if (a.x == b.x) {
        if (mod(a.y + b.y, p) == 0) return CurvePoint{}; // inverse points
        // doubling; curve coefficient a = 1
        lambda = mod((3 * a.x * a.x + 1) * invmod(mod(2 * a.y, p), p), p);
    } else {
        lambda = mod((b.y - a.y) * invmod(mod(b.x - a.x, p), p), p);
    }
    mpz_class x3 = mod(lambda * lambda - a.x - b.x, p);
    mpz_class y3 = mod(lambda * (a.x - x3) - a.y, p);
    return CurvePoint{x3, y3, false};
}

CurvePoint ec_mul(const mpz_class& p, const CurvePoint& a, const mpz_class& k) {
    if (k == 0 || a.inf) return CurvePoint{};
    mpz_class e = k;
    CurvePoint base = a;
    if (sgn(e) < 0) {
        e = -e;
        base = ec_neg(p, base);
    }
    CurvePoint acc{};
    long bits = long(mpz_sizeinbase(e.get_mpz_t(), 2));
    for (long i = bits - 1; i >= 0; --i) {
        acc = ec_add(p, acc, acc);
        if (mpz_tstbit(e.get_mpz_t(), i)) acc = ec_add(p, acc, base);
    }
    return acc;
}

// ---- F_{p^2} arithmetic -----------------------------------------------------

Fp2 fp2_mul(const mpz_class& p, const Fp2& a, const Fp2& b) {
    // (a.re + a.im i)(b.re + b.im i), i^2 = -1
    mpz_class re = mod(a.re * b.re - a.im * b.im, p);
    mpz_class im = mod(a.re * b.im + a.im * b.re, p);
    return Fp2{re, im};
}

static Fp2 fp2_sqr(const mpz_class& p, const Fp2& a) {
    mpz_class re = mod((a.re + a.im) * (a.re - a.im), p);
    mpz_class im = mod(2 * a.re * a.im, p);
    return Fp2{re, im};
}

Fp2 fp2_inv(const mpz_class& p, const Fp2& a) {
    mpz_class norm = mod(a.re * a.re + a.im * a.im, p);
    mpz_class ninv = invmod(norm, p);
    return Fp2{mod(a.re * ninv, p), mod(-a.im * ninv, p)};
}

Fp2 fp2_pow(const mpz_class& p, const Fp2& a, const mpz_class& e) {
    if (e == 0) return Fp2{1, 0};
    mpz_class k = e;
    Fp2 base = a;
    if (sgn(k) < 0) {
        k = -k;
        base = fp2_inv(p, base);
    }
    Fp2 acc{1, 0};
    long bits = long(mpz_sizeinbase(k.get_mpz_t(), 2));
    for (long i = bits - 1; i >= 0; --i) {
        acc = fp2_sqr(p, acc);
        if (mpz_tstbit(k.get_mpz_t(), i)) acc = fp2_mul(p, acc, base);
    }
    return acc;
}

// ---- pairing ----------------------------------------------------------------

// Reduced Tate pairing e(a, phi(b)) with the distortion map
// phi(x, y) = (-x, iy).  With the distorted point the evaluated line
// numerator is (lambda*(x_b + x_T) - y_T) + i*y_b, whose imaginary part
// y_b is never zero for points of odd order, so the Miller loop cannot hit
// a zero.  Vertical-line denominators lie in F_p and die in the final
// exponentiation (p-1 divides (p^2-1)/n), so they are skipped entirely.
Fp2 tate_pairing(const PublicParams& pp, const CurvePoint& a, const CurvePoint& b) {
    if (a.inf || b.inf) return Fp2{1, 0};
    const mpz_class& p = pp.p;
    // distorted evaluation point (-x_b, i*y_b); the line through T with
    // slope lambda evaluates to  (lambda*(x_b + x_T) - y_T) + i*y_b
    const mpz_class& xb = b.x;
    const mpz_class& yb = b.y;

    Fp2 f{1, 0};
    CurvePoint t = a;
    long bits = long(mpz_sizeinbase(pp.n.get_mpz_t(), 2));
    for (long i = bits - 2; i >= 0; --i) {
        // doubling step
        {
            mpz_class lambda = mod((3 * t.x * t.x + 1) * invmod(mod(2 * t.y, p), p), p);
            Fp2 line{mod(lambda * (xb + t.x) - t.y, p), yb};
            f = fp2_mul(p, fp2_sqr(p, f), line);
            t = ec_add(p, t, t);
        }
        if (mpz_tstbit(pp.n.get_mpz_t(), i)) {
            if (t.x == a.x && mod(t.y + a.y, p) == 0) {
                // t + a = O: vertical line, contributes an F_p value only
                t = CurvePoint{};
            } else {
                mpz_class lambda = mod((a.y - t.y) * invmod(mod(a.x - t.x, p), p), p);
                Fp2 line{mod(lambda * (xb + t.x) - t.y, p), yb};
                f = fp2_mul(p, f, line);
                t = ec_add(p, t, a);
            }
        }
    }
    return fp2_pow(p, f, pp.final_exp);
}

// ---- parameter generation ---------------------------------------------------

namespace {

mpz_class random_prime(Rng& rng, unsigned bits, unsigned max_tries,
                       const mpz_class& avoid) {
    for (unsigned t = 0; t < max_tries; ++t) {
        mpz_class lo = mpz_class(1) << (bits - 1);
        mpz_class cand = lo + rng.mpz_below(lo);
        mpz_nextprime(cand.get_mpz_t(), cand.get_mpz_t());
        if (mpz_sizeinbase(cand.get_mpz_t(), 2) != bits) continue;
        if (cand == avoid) continue;
        return cand;
    }
    throw ParamGenError("prime search failed after bounded attempts");
}

// random point of order exactly n on y^2 = x^3 + x
CurvePoint find_order_n_point(const PublicParams& pp, const PrivateKey& sk, Rng& rng) {
    const mpz_class& p = pp.p;
    mpz_class sqrt_exp = (p + 1) / 4;
    for (int t = 0; t < 4096; ++t) {
        mpz_class x = rng.mpz_below(p);
        mpz_class rhs = mod(x * x * x + x, p);
        if (rhs == 0) continue;
        mpz_class y = powmod(rhs, sqrt_exp, p);
        if (mod(y * y, p) != rhs) continue;
        CurvePoint pt = ec_mul(p, CurvePoint{x, y, false}, pp.cof);
        if (pt.inf) continue;
        if (ec_mul(p, pt, sk.q1).inf) continue; // order divides q1
        if (ec_mul(p, pt, sk.q2).inf) continue; // order divides q2
        return pt;                              // order is exactly n
    }
    throw ParamGenError("could not find an order-n point");
}

} // namespace

std::pair<PublicParams, PrivateKey> make_params(const mpz_class& q1,
                                                const mpz_class& q2,
                                                const mpz_class& plaintext_bound,
                                                uint64_t seed, Backend backend) {
    if (!is_prime(q1) || !is_prime(q2) || q1 == q2)
        throw InputError("q1, q2 must be distinct primes");
    PublicParams pp;
    PrivateKey sk;
    pp.backend = backend;
    pp.n = q1 * q2;
    pp.plaintext_bound = plaintext_bound;
    pp.n_width = (mpz_sizeinbase(pp.n.get_mpz_t(), 2) + 7) / 8;
    pp.gen_seed = seed;
    sk.q1 = q1;
    sk.q2 = q2;

    if (backend == Backend::mock) {
        pp.mg = MockElem{1, 0};
        pp.mh = MockElem{0, mod(q2, pp.n)};
        sk.w_h = q2;
        return {pp, sk};
    }

    // real backend: find p = cof*n - 1 prime with 4 | cof (so p = 3 mod 4)
    Rng rng(seed ^ 0xb6c21f3a9d84e705ULL);
    mpz_class cof = 4;
    bool found = false;
    for (int i = 0; i < 65536; ++i, cof += 4) {
        mpz_class p = cof * pp.n - 1;
        if (is_prime(p)) {
            pp.p = p;
            pp.cof = cof;
            found = true;
            break;
        }
    }
    if (!found) throw ParamGenError("no suitable field prime found");
    pp.p_width = (mpz_sizeinbase(pp.p.get_mpz_t(), 2) + 7) / 8;
    pp.final_exp = (pp.p * pp.p - 1) / pp.n;

    for (int attempt = 0; attempt < 64; ++attempt) {
        pp.g = find_order_n_point(pp, sk, rng);
        // h = g^{w_h} with w_h = q2*w, gcd(w, q1) = 1: order exactly q1
        mpz_class w;
        do {
            w = rng.mpz_below(pp.n);
        } while (mpz_class(gcd(w, q1)) != 1);
        sk.w_h = mod(q2 * w, pp.n);
        pp.h = ec_mul(pp.p, pp.g, sk.w_h);
        pp.gt = tate_pairing(pp, pp.g, pp.g);
        pp.ht = tate_pairing(pp, pp.g, pp.h);
        // non-degeneracy of e(g,g) in both prime-order components
        if (fp2_pow(pp.p, pp.gt, pp.n / q1) == Fp2{1, 0}) continue;
        if (fp2_pow(pp.p, pp.gt, pp.n / q2) == Fp2{1, 0}) continue;
        return {pp, sk};
    }
    throw ParamGenError("could not find a non-degenerate generator");
}

std::pair<PublicParams, PrivateKey> gen_params(unsigned bit_size,
                                               const mpz_class& plaintext_bound,
                                               uint64_t seed, Backend backend) {
    if (bit_size < 16) throw InputError("bit_size must be at least 16");
    Rng rng(seed);
    unsigned half = bit_size / 2;
    mpz_class q1 = random_prime(rng, half, 256, 0);
    mpz_class q2 = random_prime(rng, half, 256, q1);
    return make_params(q1, q2, plaintext_bound, seed, backend);
}

// ---- encryption and homomorphisms ------------------------------------------

CipherL1 encrypt1(const PublicParams& pp, const mpz_class& x, const mpz_class& r) {
    if (sgn(x) < 0 || x >= pp.n) throw InputError("plaintext out of range");
    mpz_class rm = mod(r, pp.n);
    if (pp.backend == Backend::mock) {
        return CipherL1{MockElem{x, mod(rm * pp.mh.b, pp.n)}};
    }
    CurvePoint gx = ec_mul(pp.p, pp.g, x);
    CurvePoint hr = ec_mul(pp.p, pp.h, rm);
    return CipherL1{ec_add(pp.p, gx, hr)};
}

CipherL1 encrypt1(const PublicParams& pp, const mpz_class& x, Rng& rng) {
    return encrypt1(pp, x, rng.mpz_below(pp.n));
}

CipherL2 encrypt2(const PublicParams& pp, const mpz_class& v, const mpz_class& rho) {
    mpz_class vm = mod(v, pp.n);
    mpz_class rm = mod(rho, pp.n);
    if (pp.backend == Backend::mock) {
        return CipherL2{MockElem{vm, mod(rm * pp.mh.b, pp.n)}};
    }
    Fp2 a = fp2_pow(pp.p, pp.gt, vm);
    Fp2 b = fp2_pow(pp.p, pp.ht, rm);
    return CipherL2{fp2_mul(pp.p, a, b)};
}

CipherL1 add_l1(const PublicParams& pp, const CipherL1& a, const CipherL1& b) {
    check_same_backend(pp, std::holds_alternative<MockElem>(a.e),
                       std::holds_alternative<MockElem>(b.e));
    if (pp.backend == Backend::mock) {
        const auto& x = std::get<MockElem>(a.e);
        const auto& y = std::get<MockElem>(b.e);
        return CipherL1{MockElem{mod(x.a + y.a, pp.n), mod(x.b + y.b, pp.n)}};
    }
    return CipherL1{ec_add(pp.p, std::get<CurvePoint>(a.e), std::get<CurvePoint>(b.e))};
}

CipherL2 add_l2(const PublicParams& pp, const CipherL2& a, const CipherL2& b) {
    check_same_backend(pp, std::holds_alternative<MockElem>(a.e),
                       std::holds_alternative<MockElem>(b.e));
    if (pp.backend == Backend::mock) {
        const auto& x = std::get<MockElem>(a.e);
        const auto& y = std::get<MockElem>(b.e);
        return CipherL2{MockElem{mod(x.a + y.a, pp.n), mod(x.b + y.b, pp.n)}};
    }
    return CipherL2{fp2_mul(pp.p, std::get<Fp2>(a.e), std::get<Fp2>(b.e))};
}

CipherL1 smul(const PublicParams& pp, const CipherL1& a, const mpz_class& k) {
    if (pp.backend == Backend::mock) {
        const auto& x = std::get<MockElem>(a.e);
        return CipherL1{MockElem{mod(x.a * k, pp.n), mod(x.b * k, pp.n)}};
    }
    return CipherL1{ec_mul(pp.p, std::get<CurvePoint>(a.e), k)};
}

CipherL2 smul(const PublicParams& pp, const CipherL2& a, const mpz_class& k) {
    if (pp.backend == Backend::mock) {
        const auto& x = std::get<MockElem>(a.e);
        return CipherL2{MockElem{mod(x.a * k, pp.n), mod(x.b * k, pp.n)}};
    }
    return CipherL2{fp2_pow(pp.p, std::get<Fp2>(a.e), k)};
}

CipherL1 neg(const PublicParams& pp, const CipherL1& a) { return smul(pp, a, -1); }
CipherL2 neg(const PublicParams& pp, const CipherL2& a) { return smul(pp, a, -1); }

CipherL2 pair(const PublicParams& pp, const CipherL1& a, const CipherL1& b) {
    check_same_backend(pp, std::holds_alternative<MockElem>(a.e),
                       std::holds_alternative<MockElem>(b.e));
    if (pp.backend == Backend::mock) {
        const auto& x = std::get<MockElem>(a.e);
        const auto& y = std::get<MockElem>(b.e);
        // bilinear on exponent vectors; matches E'(xy, xs+yr+theta*rs)
        return CipherL2{MockElem{mod(x.a * y.a, pp.n),
                                 mod(x.a * y.b + y.a * x.b + x.b * y.b, pp.n)}};
    }
    return CipherL2{tate_pairing(pp, std::get<CurvePoint>(a.e),
                                 std::get<CurvePoint>(b.e))};
}

CipherL1 identity1(const PublicParams& pp) {
    if (pp.backend == Backend::mock) return CipherL1{MockElem{0, 0}};
    return CipherL1{CurvePoint{}};
}

CipherL2 identity2(const PublicParams& pp) {
    if (pp.backend == Backend::mock) return CipherL2{MockElem{0, 0}};
    return CipherL2{Fp2{1, 0}};
}

// ---- decryption -------------------------------------------------------------

namespace {

// baby-step/giant-step for target = base^x, x in [0, bound]
template <typename Elem, typename Op, typename Inv, typename Ser>
long bsgs(const Elem& base, const Elem& target, const Elem& one, long bound,
          Op op, Inv inv, Ser ser) {
    if (bound < 0) throw InputError("negative decryption bound");
    long m = 1;
    while (m * m < bound + 1) ++m; // ceil(sqrt(bound+1))
    std::unordered_map<std::string, long> table;
    table.reserve(size_t(m));
    Elem cur = one;
    for (long j = 0; j < m; ++j) {
        table.emplace(ser(cur), j);
        cur = op(cur, base);
    }
    // cur == base^m here; giant steps multiply by base^{-m}
    Elem factor = inv(cur);
    Elem walk = target;
    for (long i = 0; i * m <= bound; ++i) {
        auto it = table.find(ser(walk));
        if (it != table.end()) {
            long x = i * m + it->second;
            if (x <= bound) return x;
        }
        walk = op(walk, factor);
    }
    throw OutOfRangeError("no discrete log in range; wrong bound or ciphertext");
}

std::string ser_point(const CurvePoint& pt) {
    if (pt.inf) return "inf";
    return pt.x.get_str(16) + "," + pt.y.get_str(16);
}

std::string ser_fp2(const Fp2& v) { return v.re.get_str(16) + "," + v.im.get_str(16); }

std::string ser_mock(const MockElem& v) { return v.a.get_str(16) + "," + v.b.get_str(16); }

} // namespace

long decrypt(const PublicParams& pp, const PrivateKey& sk, const CipherL1& c,
             long bound) {
    if (mpz_class(bound) > pp.plaintext_bound)
        throw InputError("bound exceeds plaintext_bound");
    if (pp.backend == Backend::mock) {
        const auto& e = std::get<MockElem>(c.e);
        MockElem stripped{mod(e.a * sk.q1, pp.n), mod(e.b * sk.q1, pp.n)};
        MockElem base{mod(sk.q1, pp.n), 0};
        auto op = [&](const MockElem& x, const MockElem& y) {
            return MockElem{mod(x.a + y.a, pp.n), mod(x.b + y.b, pp.n)};
        };
        auto inv = [&](const MockElem& x) {
            return MockElem{mod(-x.a, pp.n), mod(-x.b, pp.n)};
        };
        return bsgs(base, stripped, MockElem{0, 0}, bound, op, inv, ser_mock);
    }
    CurvePoint stripped = ec_mul(pp.p, std::get<CurvePoint>(c.e), sk.q1);
    CurvePoint base = ec_mul(pp.p, pp.g, sk.q1);
    auto op = [&](const CurvePoint& x, const CurvePoint& y) { return ec_add(pp.p, x, y); };
    auto inv = [&](const CurvePoint& x) { return ec_neg(pp.p, x); };
    return bsgs(base, stripped, CurvePoint{}, bound, op, inv, ser_point);
}

long decrypt(const PublicParams& pp, const PrivateKey& sk, const CipherL2& c,
             long bound) {
    if (mpz_class(bound) > pp.plaintext_bound)
        throw InputError("bound exceeds plaintext_bound");
    if (pp.backend == Backend::mock) {
        const auto& e = std::get<MockElem>(c.e);
        MockElem stripped{mod(e.a * sk.q1, pp.n), mod(e.b * sk.q1, pp.n)};
        MockElem base{mod(sk.q1, pp.n), 0};
        auto op = [&](const MockElem& x, const MockElem& y) {
            return MockElem{mod(x.a + y.a, pp.n), mod(x.b + y.b, pp.n)};
        };
        auto inv = [&](const MockElem& x) {
            return MockElem{mod(-x.a, pp.n), mod(-x.b, pp.n)};
        };
        return bsgs(base, stripped, MockElem{0, 0}, bound, op, inv, ser_mock);
    }
    Fp2 stripped = fp2_pow(pp.p, std::get<Fp2>(c.e), sk.q1);
    Fp2 base = fp2_pow(pp.p, pp.gt, sk.q1);
    auto op = [&](const Fp2& x, const Fp2& y) { return fp2_mul(pp.p, x, y); };
    auto inv = [&](const Fp2& x) { return fp2_inv(pp.p, x); };
    return bsgs(base, stripped, Fp2{1, 0}, bound, op, inv, ser_fp2);
}

bool open_randomizer(const PublicParams& pp, const CipherL1& c,
                     const mpz_class& claimed_x, const mpz_class& claimed_r) {
    if (sgn(claimed_x) < 0 || claimed_x >= pp.n) return false;
    return encrypt1(pp, claimed_x, claimed_r) == c;
}

bool open_zero_l2(const PublicParams& pp, const CipherL2& c, const mpz_class& rho) {
    return encrypt2(pp, 0, rho) == c;
}

// ---- serialization ----------------------------------------------------------

Bytes serialize(const PublicParams& pp, const CipherL1& c) {
    ByteWriter w;
    if (pp.backend == Backend::mock) {
        const auto& e = std::get<MockElem>(c.e);
        w.u8(0x02);
        w.mpz_fixed(e.a, pp.n_width);
        w.mpz_fixed(e.b, pp.n_width);
    } else {
        const auto& e = std::get<CurvePoint>(c.e);
        w.u8(0x01);
        // infinity encoded as x = y = p (outside the field range)
        w.mpz_fixed(e.inf ? pp.p : e.x, pp.p_width);
        w.mpz_fixed(e.inf ? pp.p : e.y, pp.p_width);
    }
    return w.take();
}

Bytes serialize(const PublicParams& pp, const CipherL2& c) {
    ByteWriter w;
    if (pp.backend == Backend::mock) {
        const auto& e = std::get<MockElem>(c.e);
        w.u8(0x82);
        w.mpz_fixed(e.a, pp.n_width);
        w.mpz_fixed(e.b, pp.n_width);
    } else {
        const auto& e = std::get<Fp2>(c.e);
        w.u8(0x81);
        w.mpz_fixed(e.re, pp.p_width);
        w.mpz_fixed(e.im, pp.p_width);
    }
    return w.take();
}

CipherL1 parse_l1(const PublicParams& pp, ByteReader& r) {
    uint8_t tag = r.u8();
    if (tag == 0x02) {
        if (pp.backend != Backend::mock) throw ParseError("backend mismatch in ciphertext");
        mpz_class a = r.mpz_fixed(pp.n_width);
        mpz_class b = r.mpz_fixed(pp.n_width);
        if (a >= pp.n || b >= pp.n) throw ParseError("mock element out of range");
        return CipherL1{MockElem{a, b}};
    }
    if (tag == 0x01) {
        if (pp.backend != Backend::real) throw ParseError("backend mismatch in ciphertext");
        mpz_class x = r.mpz_fixed(pp.p_width);
        mpz_class y = r.mpz_fixed(pp.p_width);
        if (x == pp.p && y == pp.p) return CipherL1{CurvePoint{}};
        CurvePoint pt{x, y, false};
        if (!ec_on_curve(pp.p, pt)) throw ParseError("point not on curve");
        return CipherL1{pt};
    }
    throw ParseError("unknown level-1 ciphertext tag");
}

CipherL2 parse_l2(const PublicParams& pp, ByteReader& r) {
    uint8_t tag = r.u8();
    if (tag == 0x82) {
        if (pp.backend != Backend::mock) throw ParseError("backend mismatch in ciphertext");
        mpz_class a = r.mpz_fixed(pp.n_width);
        mpz_class b = r.mpz_fixed(pp.n_width);
        if (a >= pp.n || b >= pp.n) throw ParseError("mock element out of range");
        return CipherL2{MockElem{a, b}};
    }
    if (tag == 0x81) {
        if (pp.backend != Backend::real) throw ParseError("backend mismatch in ciphertext");
        mpz_class re = r.mpz_fixed(pp.p_width);
        mpz_class im = r.mpz_fixed(pp.p_width);
        if (re >= pp.p || im >= pp.p) throw ParseError("target element out of range");
        return CipherL2{Fp2{re, im}};
    }
    throw ParseError("unknown level-2 ciphertext tag");
}

// ---- parameter files --------------------------------------------------------

std::string params_to_text(const PublicParams& pp) {
    std::ostringstream os;
    os << "backend=" << (pp.backend == Backend::mock ? "mock" : "real") << "\n";
    os << "n=" << pp.n.get_str() << "\n";
    os << "plaintext_bound=" << pp.plaintext_bound.get_str() << "\n";
    os << "gen_seed=" << pp.gen_seed << "\n";
    if (pp.backend == Backend::mock) {
        os << "h_b=" << pp.mh.b.get_str() << "\n";
    } else {
        os << "p=" << pp.p.get_str() << "\n";
        os << "cof=" << pp.cof.get_str() << "\n";
        os << "gx=" << pp.g.x.get_str() << "\n";
        os << "gy=" << pp.g.y.get_str() << "\n";
        os << "hx=" << pp.h.x.get_str() << "\n";
        os << "hy=" << pp.h.y.get_str() << "\n";
    }
    return os.str();
}

namespace {
std::unordered_map<std::string, std::string> parse_kv(const std::string& text) {
    std::unordered_map<std::string, std::string> kv;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) throw ParseError("bad key=value line: " + line);
        kv[line.substr(0, eq)] = line.substr(eq + 1);
    }
    return kv;
}
} // namespace

PublicParams params_from_text(const std::string& text) {
    auto kv = parse_kv(text);
    PublicParams pp;
    auto get = [&](const std::string& k) -> const std::string& {
        auto it = kv.find(k);
        if (it == kv.end()) throw ParseError("missing parameter key: " + k);
        return it->second;
    };
    pp.backend = get("backend") == "mock" ? Backend::mock : Backend::real;
    pp.n = mpz_class(get("n"));
    pp.plaintext_bound = mpz_class(get("plaintext_bound"));
    pp.gen_seed = std::stoull(get("gen_seed"));
    pp.n_width = (mpz_sizeinbase(pp.n.get_mpz_t(), 2) + 7) / 8;
    if (pp.backend == Backend::mock) {
        pp.mg = MockElem{1, 0};
        pp.mh = MockElem{0, mpz_class(get("h_b"))};
    } else {
        pp.p = mpz_class(get("p"));
        pp.cof = mpz_class(get("cof"));
        pp.p_width = (mpz_sizeinbase(pp.p.get_mpz_t(), 2) + 7) / 8;
        pp.final_exp = (pp.p * pp.p - 1) / pp.n;
        pp.g = CurvePoint{mpz_class(get("gx")), mpz_class(get("gy")), false};
        pp.h = CurvePoint{mpz_class(get("hx")), mpz_class(get("hy")), false};
        if (!ec_on_curve(pp.p, pp.g) || !ec_on_curve(pp.p, pp.h))
            throw ParseError("generators not on curve");
        pp.gt = tate_pairing(pp, pp.g, pp.g);
        pp.ht = tate_pairing(pp, pp.g, pp.h);
    }
    return pp;
}

std::string key_to_text(const PrivateKey& sk) {
    std::ostringstream os;
    os << "q1=" << sk.q1.get_str() << "\n";
    os << "q2=" << sk.q2.get_str() << "\n";
    os << "w_h=" << sk.w_h.get_str() << "\n";
    return os.str();
}

PrivateKey key_from_text(const std::string& text) {
    auto kv = parse_kv(text);
    PrivateKey sk;
    auto get = [&](const std::string& k) -> const std::string& {
        auto it = kv.find(k);
        if (it == kv.end()) throw ParseError("missing key field: " + k);
        return it->second;
    };
    sk.q1 = mpz_class(get("q1"));
    sk.q2 = mpz_class(get("q2"));
    sk.w_h = mpz_class(get("w_h"));
    return sk;
}

bool validate_key_disclosure(const PublicParams& pp, const PrivateKey& sk) {
    if (!is_prime(sk.q1) || !is_prime(sk.q2)) return false;
    if (sk.q1 == sk.q2) return false;
    if (sk.q1 * sk.q2 != pp.n) return false;
    if (mod(sk.w_h, sk.q2) != 0) return false;
    if (pp.backend == Backend::mock) {
        return pp.mh.b == mod(sk.q2, pp.n) && pp.mg == MockElem{1, 0};
    }
    if (!ec_on_curve(pp.p, pp.g) || !ec_on_curve(pp.p, pp.h)) return false;
    if (pp.cof * pp.n != pp.p + 1) return false;
    // g of order exactly n, h = g^{w_h} of order q1
    if (!ec_mul(pp.p, pp.g, pp.n).inf) return false;
    if (ec_mul(pp.p, pp.g, sk.q1).inf || ec_mul(pp.p, pp.g, sk.q2).inf) return false;
    if (!(ec_mul(pp.p, pp.g, sk.w_h) == pp.h)) return false;
    if (!ec_mul(pp.p, pp.h, sk.q1).inf) return false;
    return true;
}

} // namespace ig::bgn
