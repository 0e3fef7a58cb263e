#pragma once

#include <cstdint>
#include <vector>

namespace sboxlab {

// Field element of GF(2^n) in polynomial-basis representation: bit i is the
// coefficient of x^i.
using Felt = std::uint32_t;

// GF(2^n) together with its reduction polynomial.
struct FieldSpec {
    int n;
    std::uint32_t poly;  // bitmask, bit n set, irreducible over F_2

    FieldSpec(int n, std::uint32_t poly);
    static FieldSpec with_default_poly(int n);

    std::uint32_t order() const { return 1u << n; }
    std::uint32_t mult_order() const { return (1u << n) - 1; }

    bool operator==(const FieldSpec&) const = default;
};

// The subfield F_q of GF(2^n), q = 2^k with k | n, m = n/k.
struct SubfieldSpec {
    int k;
    std::uint32_t q;
    int m;
};

SubfieldSpec make_subfield(int k, const FieldSpec& spec);

inline Felt gf_add(Felt a, Felt b) { return a ^ b; }

Felt gf_mul(Felt a, Felt b, const FieldSpec& spec);

// a^e with e reduced mod 2^n-1 for a != 0. Conventions: 0^0 = 1, 0^e = 0 for
// e > 0. Negative e requires a != 0.
Felt gf_pow(Felt a, long long e, const FieldSpec& spec);

Felt gf_inv(Felt a, const FieldSpec& spec);

// Tr^n_r(x) = sum_{i=0}^{n/r-1} x^{2^(ir)}, an element of the subfield of
// size 2^r. Requires r | n.
Felt trace(Felt x, int r, const FieldSpec& spec);

bool is_in_subfield(Felt x, const SubfieldSpec& sub, const FieldSpec& spec);

// The q elements fixed by x -> x^q, ascending by value.
std::vector<Felt> subfield_elements(const SubfieldSpec& sub, const FieldSpec& spec);

// Least element (by value) of multiplicative order 2^n-1.
Felt find_primitive(const FieldSpec& spec);

// Multiplicative order of a != 0.
std::uint32_t mult_order(Felt a, const FieldSpec& spec);

// True iff p, viewed as a polynomial over F_2 of degree >= 1, is irreducible.
bool is_irreducible(std::uint32_t p);

// Lexicographically least irreducible polynomial of degree n, 1 <= n <= 16.
// Hard-coded table; a test regenerates it from is_irreducible.
std::uint32_t default_reduction_poly(int n);

}  // namespace sboxlab
