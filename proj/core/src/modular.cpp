#include "vnlab/modular.hpp"

#include "vnlab/error.hpp"

#include <algorithm>

namespace vnlab {

namespace {

using u64 = std::uint64_t;
__extension__ using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 pow_mod(u64 a, u64 e, u64 p) {
    u64 r = 1 % p;
    a %= p;
    while (e > 0) {
        if (e & 1) r = mul_mod(r, a, p);
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    return r;
}

u64 splitmix(u64& state) {
    u64 z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::vector<u64> prime_factors(u64 n) {
    std::vector<u64> out;
    for (u64 q = 2; q * q <= n; ++q) {
        if (n % q) continue;
        out.push_back(q);
        while (n % q == 0) n /= q;
    }
    if (n > 1) out.push_back(n);
    return out;
}

u64 reduce(const Integer& z, u64 p) {
    return static_cast<u64>(mpz_fdiv_ui(z.get_mpz_t(), static_cast<unsigned long>(p)));
}

}  // namespace

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0) return n == q;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // Deterministic witness set for 64-bit integers.
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

u64 random_prime(u64& rng_state, u64 modulus_for_roots) {
    const u64 m = std::max<u64>(modulus_for_roots, 1);
    for (;;) {
        const u64 candidate = (splitmix(rng_state) >> 2) | (u64{1} << 61);  // in [2^61, 2^62)
        const u64 p = candidate - (candidate % m) + 1;
        if (p > (u64{1} << 61) && is_prime_u64(p)) return p;
    }
}

ModularImage::ModularImage(const FieldSpec& field, u64 prime) : p_(prime) {
    const u64 n = field.conductor();
    if ((p_ - 1) % n != 0) throw DomainError("ModularImage: prime must be 1 mod the conductor");
    u64 zeta = 1;
    if (n > 1) {
        const auto factors = prime_factors(n);
        u64 state = prime ^ n;
        for (;;) {
            const u64 x = 2 + splitmix(state) % (p_ - 3);
            const u64 w = pow_mod(x, (p_ - 1) / n, p_);
            const bool primitive = std::all_of(factors.begin(), factors.end(), [&](u64 q) { return pow_mod(w, n / q, p_) != 1; });
            if (primitive) {
                zeta = w;
                break;
            }
        }
    }
    zeta_powers_.resize(field.degree());
    u64 acc = 1;
    for (auto& z : zeta_powers_) {
        z = acc;
        acc = mul_mod(acc, zeta, p_);
    }
}

std::optional<u64> ModularImage::map(const CycloScalar& x) const {
    u64 out = 0;
    const auto coeffs = x.coefficients();
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0) continue;
        const u64 den = reduce(coeffs[i].get_den(), p_);
        if (den == 0) return std::nullopt;
        const u64 value = mul_mod(reduce(coeffs[i].get_num(), p_), pow_mod(den, p_ - 2, p_), p_);
        out = (out + mul_mod(value, zeta_powers_[i], p_)) % p_;
    }
    return out;
}

std::size_t rank_mod_p(std::vector<u64> a, std::size_t rows, std::size_t cols, u64 p) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a[piv * cols + c] == 0) ++piv;
        if (piv == rows) continue;
        if (piv != r) std::swap_ranges(a.begin() + static_cast<std::ptrdiff_t>(piv * cols),
                                       a.begin() + static_cast<std::ptrdiff_t>((piv + 1) * cols),
                                       a.begin() + static_cast<std::ptrdiff_t>(r * cols));
        const u64 inv = pow_mod(a[r * cols + c], p - 2, p);
        for (std::size_t j = c; j < cols; ++j) a[r * cols + j] = mul_mod(a[r * cols + j], inv, p);
        for (std::size_t i = r + 1; i < rows; ++i) {
            const u64 f = a[i * cols + c];
            if (f == 0) continue;
            for (std::size_t j = c; j < cols; ++j) {
                const u64 sub = mul_mod(f, a[r * cols + j], p);
                u64& v = a[i * cols + j];
                v = v >= sub ? v - sub : v + p - sub;
            }
        }
        ++r;
    }
    return r;
}

ModularRank modular_rank(const FieldMatrix& m, u64 seed, unsigned count) {
    ModularRank out;
    u64 state = seed;
    const u64 n = m.field().conductor();
    while (out.primes.size() < count) {
        const u64 p = random_prime(state, n);
        ModularImage image(m.field(), p);
        std::vector<u64> entries(m.rows() * m.cols());
        bool ok = true;
        for (std::size_t i = 0; i < m.rows() && ok; ++i)
            for (std::size_t j = 0; j < m.cols() && ok; ++j) {
                auto v = image.map(m(i, j));
                if (!v) ok = false;
                else entries[i * m.cols() + j] = *v;
            }
        if (!ok) continue;
        out.primes.push_back(p);
        out.ranks.push_back(rank_mod_p(std::move(entries), m.rows(), m.cols(), p));
        out.best = std::max(out.best, out.ranks.back());
    }
    return out;
}

}  // namespace vnlab
