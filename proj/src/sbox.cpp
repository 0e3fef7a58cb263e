#include "sboxlab/sbox.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <random>
#include <stdexcept>

namespace sboxlab {

SBox::SBox(FieldSpec s, std::vector<Felt> l) : spec(s), lut(std::move(l)) {
    if (lut.size() != spec.order())
        throw std::domain_error("SBox: LUT length must be 2^n");
    for (Felt v : lut)
        if (v >= spec.order())
            throw std::domain_error("SBox: LUT entry out of range");
}

UnivariatePoly::UnivariatePoly(FieldSpec s, std::vector<PolyTerm> raw) : spec(s) {
    std::uint32_t m = spec.mult_order();
    std::map<std::uint32_t, Felt> acc;
    for (const PolyTerm& t : raw) {
        if (t.coeff >= spec.order())
            throw std::domain_error("UnivariatePoly: coefficient out of range");
        std::uint32_t e = t.exp;
        if (e >= 1 && m > 0) e = 1 + (e - 1) % m;
        acc[e] ^= t.coeff;
    }
    for (auto& [e, c] : acc)
        if (c != 0) terms.push_back({c, e});
}

SBox identity_sbox(const FieldSpec& spec) {
    std::vector<Felt> lut(spec.order());
    for (Felt x = 0; x < spec.order(); ++x) lut[x] = x;
    return SBox(spec, std::move(lut));
}

SBox monomial_sbox(Felt coeff, long long exp, const FieldSpec& spec) {
    std::vector<Felt> lut(spec.order());
    for (Felt x = 0; x < spec.order(); ++x)
        lut[x] = gf_mul(coeff, gf_pow(x, exp, spec), spec);
    return SBox(spec, std::move(lut));
}

SBox evaluate_poly(const UnivariatePoly& p) {
    std::vector<Felt> lut(p.spec.order(), 0);
    for (Felt x = 0; x < p.spec.order(); ++x)
        for (const PolyTerm& t : p.terms)
            lut[x] ^= gf_mul(t.coeff, gf_pow(x, t.exp, p.spec), p.spec);
    return SBox(p.spec, std::move(lut));
}

UnivariatePoly interpolate_poly(const SBox& f) {
    const FieldSpec& fs = f.spec;
    std::uint32_t m = fs.mult_order();
    std::vector<PolyTerm> terms;
    Felt d0 = f.lut[0];
    if (d0) terms.push_back({d0, 0});
    if (m == 0) return UnivariatePoly(fs, std::move(terms));
    // delta_j = sum_{x!=0} F(x) x^{-j}; maintain x^{-j} incrementally per x.
    std::vector<Felt> delta(m, 0);  // index j in [0, m)
    for (Felt x = 1; x < fs.order(); ++x) {
        Felt xinv = gf_inv(x, fs);
        Felt p = 1;
        for (std::uint32_t j = 0; j < m; ++j) {
            delta[j] ^= gf_mul(f.lut[x], p, fs);
            p = gf_mul(p, xinv, fs);
        }
    }
    for (std::uint32_t j = 1; j < m; ++j)
        if (delta[j]) terms.push_back({delta[j], j});
    Felt dtop = delta[0] ^ d0;  // delta_{2^n-1}
    if (dtop) terms.push_back({dtop, m});
    return UnivariatePoly(fs, std::move(terms));
}

bool is_permutation(const SBox& f) {
    std::vector<bool> seen(f.size(), false);
    for (Felt v : f.lut) {
        if (seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

SBox inverse_sbox(const SBox& f) {
    if (!is_permutation(f))
        throw std::domain_error("inverse_sbox: input is not a permutation");
    std::vector<Felt> lut(f.size());
    for (Felt x = 0; x < f.size(); ++x) lut[f.lut[x]] = x;
    return SBox(f.spec, std::move(lut));
}

SBox derivative(const SBox& f, Felt a) {
    std::vector<Felt> lut(f.size());
    for (Felt x = 0; x < f.size(); ++x) lut[x] = f.lut[x ^ a] ^ f.lut[x];
    return SBox(f.spec, std::move(lut));
}

SBox second_derivative(const SBox& f, Felt a, Felt b) {
    std::vector<Felt> lut(f.size());
    for (Felt x = 0; x < f.size(); ++x)
        lut[x] = f.lut[x ^ a] ^ f.lut[x ^ b] ^ f.lut[x ^ a ^ b] ^ f.lut[x];
    return SBox(f.spec, std::move(lut));
}

int algebraic_degree(const SBox& f) {
    // Moebius transform applied to all n coordinates at once (entries are
    // n-bit words, XOR acts componentwise).
    std::vector<Felt> anf = f.lut;
    std::uint32_t sz = f.size();
    for (std::uint32_t step = 1; step < sz; step <<= 1)
        for (std::uint32_t x = 0; x < sz; ++x)
            if (x & step) anf[x] ^= anf[x ^ step];
    int deg = 0;
    for (std::uint32_t u = 1; u < sz; ++u)
        if (anf[u]) deg = std::max(deg, std::popcount(u));
    return deg;
}

namespace {

Felt apply_linear(const std::vector<std::uint32_t>& rows, Felt x) {
    Felt y = 0;
    for (std::size_t i = 0; i < rows.size(); ++i)
        y |= static_cast<Felt>(std::popcount(rows[i] & x) & 1) << i;
    return y;
}

bool nonsingular(std::vector<std::uint32_t> rows) {
    std::size_t rank = 0;
    for (int bit = static_cast<int>(rows.size()) - 1; bit >= 0; --bit) {
        std::size_t piv = rank;
        while (piv < rows.size() && !((rows[piv] >> bit) & 1)) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[rank], rows[piv]);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != rank && ((rows[i] >> bit) & 1)) rows[i] ^= rows[rank];
        ++rank;
    }
    return rank == rows.size();
}

}  // namespace

SBox random_affine_permutation(const FieldSpec& spec, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uint32_t mask = spec.order() - 1;
    std::vector<std::uint32_t> rows(spec.n);
    do {
        for (auto& r : rows) r = static_cast<std::uint32_t>(rng()) & mask;
    } while (!nonsingular(rows));
    Felt c = static_cast<Felt>(rng()) & mask;
    std::vector<Felt> lut(spec.order());
    for (Felt x = 0; x < spec.order(); ++x) lut[x] = apply_linear(rows, x) ^ c;
    return SBox(spec, std::move(lut));
}

SBox compose(const SBox& f, const SBox& g) {
    if (!(f.spec == g.spec))
        throw std::domain_error("compose: field mismatch");
    std::vector<Felt> lut(f.size());
    for (Felt x = 0; x < f.size(); ++x) lut[x] = f.lut[g.lut[x]];
    return SBox(f.spec, std::move(lut));
}

SBox sbox_sum(const SBox& f, const SBox& g) {
    if (!(f.spec == g.spec))
        throw std::domain_error("sbox_sum: field mismatch");
    std::vector<Felt> lut(f.size());
    for (Felt x = 0; x < f.size(); ++x) lut[x] = f.lut[x] ^ g.lut[x];
    return SBox(f.spec, std::move(lut));
}

}  // namespace sboxlab
