#include "ntt.hpp"

#include <stdexcept>
#include <thread>

namespace goldbach::detail {

namespace {

// NTT-friendly primes: 15*2^27+1 and 7*2^26+1, with known primitive roots.
// Their product bounds the representable convolution values.
constexpr uint32_t kMod1 = 2013265921, kRoot1 = 31;
constexpr uint32_t kMod2 = 469762049, kRoot2 = 3;
constexpr unsigned kMaxLogSize = 26;

inline uint32_t add_mod(uint32_t a, uint32_t b, uint32_t p) {
    uint32_t s = a + b;
    return s >= p ? s - p : s;
}

inline uint32_t sub_mod(uint32_t a, uint32_t b, uint32_t p) {
    return a >= b ? a - b : a + p - b;
}

inline uint32_t mul_mod(uint32_t a, uint32_t b, uint32_t p) {
    return static_cast<uint32_t>(uint64_t{a} * b % p);
}

uint32_t pow_mod(uint32_t a, uint64_t e, uint32_t p) {
    uint32_t r = 1;
    while (e) {
        if (e & 1) r = mul_mod(r, a, p);
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    return r;
}

// Shoup multiplication by a fixed w < p with precomputed floor(w*2^32/p).
// Valid for any a < 2^32 when p < 2^31; result in [0, p).
inline uint32_t mul_shoup(uint32_t a, uint32_t w, uint32_t wpre, uint32_t p) {
    uint32_t q = static_cast<uint32_t>((uint64_t{a} * wpre) >> 32);
    uint32_t r = a * w - q * p; // mod 2^32; true value is in [0, 2p)
    return r >= p ? r - p : r;
}

inline uint32_t shoup_precompute(uint32_t w, uint32_t p) {
    return static_cast<uint32_t>((uint64_t{w} << 32) / p);
}

void bit_reverse(std::vector<uint32_t>& a) {
    const size_t n = a.size();
    for (size_t i = 1, j = 0; i < n; ++i) {
        size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
}

struct TwiddleTable {
    std::vector<uint32_t> w;    // w[j] = omega^j, j < n/2
    std::vector<uint32_t> wpre; // Shoup companions
};

TwiddleTable make_twiddles(size_t n, uint32_t omega, uint32_t p) {
    TwiddleTable t;
    t.w.resize(n / 2);
    t.wpre.resize(n / 2);
    uint32_t cur = 1;
    for (size_t j = 0; j < n / 2; ++j) {
        t.w[j] = cur;
        t.wpre[j] = shoup_precompute(cur, p);
        cur = mul_mod(cur, omega, p);
    }
    return t;
}

// In-place transform, decimation in time after a bit-reversal pass.
void transform(std::vector<uint32_t>& a, const TwiddleTable& tw, uint32_t p) {
    const size_t n = a.size();
    bit_reverse(a);
    for (size_t len = 2; len <= n; len <<= 1) {
        const size_t half = len >> 1;
        const size_t step = n / len;
        for (size_t start = 0; start < n; start += len) {
            for (size_t i = 0; i < half; ++i) {
                const uint32_t u = a[start + i];
                const uint32_t v =
                    mul_shoup(a[start + i + half], tw.w[i * step], tw.wpre[i * step], p);
                a[start + i] = add_mod(u, v, p);
                a[start + i + half] = sub_mod(u, v, p);
            }
        }
    }
}

// One modulus pipeline: residues of the self-convolution of v.
std::vector<uint32_t> square_mod(const std::vector<uint8_t>& v, size_t n, size_t out_len,
                                 uint32_t p, uint32_t g) {
    const uint32_t omega = pow_mod(g, (p - 1) / static_cast<uint32_t>(n), p);
    if (pow_mod(omega, n, p) != 1 || pow_mod(omega, n / 2, p) != p - 1)
        throw std::logic_error("ntt: root of unity sanity check failed");

    std::vector<uint32_t> a(n, 0);
    for (size_t i = 0; i < v.size(); ++i) a[i] = v[i];

    {
        const auto tw = make_twiddles(n, omega, p);
        transform(a, tw, p);
    }
    for (auto& x : a) x = mul_mod(x, x, p);
    {
        const auto tw = make_twiddles(n, pow_mod(omega, p - 2, p), p);
        transform(a, tw, p);
    }

    const uint32_t ninv = pow_mod(static_cast<uint32_t>(n % p), p - 2, p);
    const uint32_t ninv_pre = shoup_precompute(ninv, p);
    std::vector<uint32_t> out(out_len);
    for (size_t i = 0; i < out_len; ++i) out[i] = mul_shoup(a[i], ninv, ninv_pre, p);
    return out;
}

} // namespace

std::vector<uint64_t> convolve_square_01(const std::vector<uint8_t>& v, size_t out_len,
                                         unsigned threads) {
    if (v.empty() || out_len == 0) return {};
    const size_t conv_len = 2 * v.size() - 1;
    if (out_len > conv_len) out_len = conv_len;

    size_t n = 1;
    unsigned log_n = 0;
    while (n < conv_len) {
        n <<= 1;
        ++log_n;
    }
    if (log_n > kMaxLogSize)
        throw std::invalid_argument("convolve_square_01: input too long for transform moduli");

    std::vector<uint32_t> res1, res2;
    if (threads >= 2) {
        std::thread worker([&] { res1 = square_mod(v, n, out_len, kMod1, kRoot1); });
        res2 = square_mod(v, n, out_len, kMod2, kRoot2);
        worker.join();
    } else {
        res1 = square_mod(v, n, out_len, kMod1, kRoot1);
        res2 = square_mod(v, n, out_len, kMod2, kRoot2);
    }

    // x = r1 + M1 * ((r2 - r1) * M1^{-1} mod M2), the unique value below M1*M2.
    const uint32_t inv1 = pow_mod(kMod1 % kMod2, kMod2 - 2, kMod2);
    std::vector<uint64_t> out(out_len);
    for (size_t i = 0; i < out_len; ++i) {
        const uint32_t r1 = res1[i];
        const uint32_t d = sub_mod(res2[i], r1 % kMod2, kMod2);
        out[i] = r1 + uint64_t{kMod1} * mul_mod(d, inv1, kMod2);
    }
    return out;
}

} // namespace goldbach::detail
