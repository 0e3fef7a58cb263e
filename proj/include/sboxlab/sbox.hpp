#pragma once

#include <cstdint>
#include <vector>

#include "sboxlab/field.hpp"

namespace sboxlab {

// An (n,n)-function stored as a full lookup table over GF(2^n).
struct SBox {
    FieldSpec spec;
    std::vector<Felt> lut;  // size 2^n, lut[x] = F(x)

    SBox(FieldSpec s, std::vector<Felt> l);
    std::uint32_t size() const { return spec.order(); }
    Felt operator()(Felt x) const { return lut[x]; }
    bool operator==(const SBox&) const = default;
};

struct PolyTerm {
    Felt coeff;
    std::uint32_t exp;
};

// Sparse univariate polynomial over GF(2^n). Exponents are normalized to
// [0, 2^n-1] (e >= 1 reduced mod 2^n-1 into [1, 2^n-1], exponent 0 kept as
// the constant term); duplicate exponents merge by XOR, zero coefficients drop.
struct UnivariatePoly {
    FieldSpec spec;
    std::vector<PolyTerm> terms;  // ascending by exponent after normalization

    UnivariatePoly(FieldSpec s, std::vector<PolyTerm> raw);
};

SBox identity_sbox(const FieldSpec& spec);
SBox monomial_sbox(Felt coeff, long long exp, const FieldSpec& spec);

// lut[x] = sum of coeff * x^exp, with 0^0 = 1 for the constant term.
SBox evaluate_poly(const UnivariatePoly& p);

// Unique interpolating polynomial of degree <= 2^n-1 (Mattson-Solomon style
// coefficient recovery: delta_j = sum_{x!=0} F(x) x^{-j} for 1 <= j <= 2^n-2,
// delta_0 = F(0), delta_{2^n-1} = sum_{x!=0} F(x) + F(0)).
UnivariatePoly interpolate_poly(const SBox& f);

bool is_permutation(const SBox& f);

SBox inverse_sbox(const SBox& f);

// D_a F: x -> F(x+a) + F(x)
SBox derivative(const SBox& f, Felt a);

// D_a D_b F: x -> F(x+a) + F(x+b) + F(x+a+b) + F(x)
SBox second_derivative(const SBox& f, Felt a, Felt b);

// Max ANF-monomial degree over the n coordinate functions (Moebius transform
// on the LUT). Constant functions have degree 0.
int algebraic_degree(const SBox& f);

// Random invertible F_2-linear map plus random constant; deterministic per seed.
SBox random_affine_permutation(const FieldSpec& spec, std::uint64_t seed);

// lut[x] = f(g(x))
SBox compose(const SBox& f, const SBox& g);

// Pointwise XOR of two LUTs over the same field.
SBox sbox_sum(const SBox& f, const SBox& g);

}  // namespace sboxlab
