#include "sboxlab/field.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace sboxlab {

namespace {

int poly_degree(std::uint64_t p) { return p == 0 ? -1 : std::bit_width(p) - 1; }

std::uint64_t poly_mod(std::uint64_t a, std::uint64_t m) {
    int dm = poly_degree(m);
    while (a != 0 && poly_degree(a) >= dm)
        a ^= m << (poly_degree(a) - dm);
    return a;
}

}  // namespace

bool is_irreducible(std::uint32_t p) {
    int n = poly_degree(p);
    if (n < 1) return false;
    if (n == 1) return true;
    if ((p & 1) == 0) return false;  // divisible by x
    for (std::uint32_t d = 3; poly_degree(d) <= n / 2; d += 2)
        if (poly_mod(p, d) == 0) return false;
    return true;
}

std::uint32_t default_reduction_poly(int n) {
    // Least p in [2^n, 2^(n+1)) irreducible over F_2; see the regeneration test.
    static const std::uint32_t table[17] = {
        0,      0x3,    0x7,    0xb,    0x13,   0x25,   0x43,   0x83,   0x11b,
        0x203,  0x409,  0x805,  0x1009, 0x201b, 0x4021, 0x8003, 0x1002b};
    if (n < 1 || n > 16)
        throw std::domain_error("default_reduction_poly: n must be in [1, 16]");
    return table[n];
}

FieldSpec::FieldSpec(int n_, std::uint32_t poly_) : n(n_), poly(poly_) {
    if (n < 1 || n > 16)
        throw std::domain_error("FieldSpec: n must be in [1, 16]");
    if (poly_degree(poly) != n)
        throw std::domain_error("FieldSpec: reduction polynomial must have degree exactly n");
    if (!is_irreducible(poly))
        throw std::domain_error("FieldSpec: reduction polynomial is reducible");
}

FieldSpec FieldSpec::with_default_poly(int n) {
    return FieldSpec(n, default_reduction_poly(n));
}

SubfieldSpec make_subfield(int k, const FieldSpec& spec) {
    if (k < 1 || spec.n % k != 0)
        throw std::domain_error("make_subfield: k must divide n");
    return SubfieldSpec{k, 1u << k, spec.n / k};
}

Felt gf_mul(Felt a, Felt b, const FieldSpec& spec) {
    std::uint32_t hi = 1u << spec.n;
    std::uint32_t r = 0;
    while (b) {
        if (b & 1) r ^= a;
        b >>= 1;
        a <<= 1;
        if (a & hi) a ^= spec.poly;
    }
    return r;
}

Felt gf_pow(Felt a, long long e, const FieldSpec& spec) {
    if (a == 0) {
        if (e < 0) throw std::domain_error("gf_pow: negative exponent of zero");
        return e == 0 ? 1 : 0;
    }
    long long m = spec.mult_order();
    std::uint64_t ee = m == 0 ? 0 : static_cast<std::uint64_t>(((e % m) + m) % m);
    Felt r = 1, base = a;
    while (ee) {
        if (ee & 1) r = gf_mul(r, base, spec);
        base = gf_mul(base, base, spec);
        ee >>= 1;
    }
    return r;
}

Felt gf_inv(Felt a, const FieldSpec& spec) {
    if (a == 0) throw std::domain_error("gf_inv: zero has no inverse");
    return gf_pow(a, static_cast<long long>(spec.mult_order()) - 1, spec);
}

Felt trace(Felt x, int r, const FieldSpec& spec) {
    if (r < 1 || spec.n % r != 0)
        throw std::domain_error("trace: r must divide n");
    Felt acc = 0, t = x;
    for (int i = 0; i < spec.n / r; ++i) {
        acc ^= t;
        for (int j = 0; j < r; ++j) t = gf_mul(t, t, spec);
    }
    return acc;
}

bool is_in_subfield(Felt x, const SubfieldSpec& sub, const FieldSpec& spec) {
    return gf_pow(x, sub.q, spec) == x;
}

std::vector<Felt> subfield_elements(const SubfieldSpec& sub, const FieldSpec& spec) {
    std::vector<Felt> out;
    out.reserve(sub.q);
    for (Felt x = 0; x < spec.order(); ++x)
        if (is_in_subfield(x, sub, spec)) out.push_back(x);
    return out;
}

std::uint32_t mult_order(Felt a, const FieldSpec& spec) {
    if (a == 0) throw std::domain_error("mult_order: zero");
    std::uint32_t ord = 1;
    Felt t = a;
    while (t != 1) {
        t = gf_mul(t, a, spec);
        ++ord;
    }
    return ord;
}

Felt find_primitive(const FieldSpec& spec) {
    std::uint32_t m = spec.mult_order();
    std::vector<std::uint32_t> primes;
    std::uint32_t t = m;
    for (std::uint32_t p = 2; p * p <= t; ++p)
        if (t % p == 0) {
            primes.push_back(p);
            while (t % p == 0) t /= p;
        }
    if (t > 1) primes.push_back(t);
    for (Felt g = 1; g < spec.order(); ++g) {
        bool ok = true;
        for (std::uint32_t p : primes)
            if (gf_pow(g, m / p, spec) == 1) { ok = false; break; }
        if (ok) return g;
    }
    throw std::logic_error("find_primitive: no generator found");
}

}  // namespace sboxlab
