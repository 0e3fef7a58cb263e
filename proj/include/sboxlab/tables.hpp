#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sboxlab/sbox.hpp"

namespace sboxlab {

// 2^n x 2^n table of counts, used as a DDT or a BCT.
struct CountTable {
    int n;
    std::vector<std::uint32_t> counts;  // row-major, index (a << n) | b

    explicit CountTable(int n_)
        : n(n_), counts(std::size_t(1) << (2 * n_), 0) {}

    std::uint32_t at(Felt a, Felt b) const { return counts[(std::size_t(a) << n) | b]; }
    std::uint32_t& at(Felt a, Felt b) { return counts[(std::size_t(a) << n) | b]; }
    std::uint32_t size() const { return 1u << n; }

    bool operator==(const CountTable&) const = default;
};

// counts[a][b] = #{x : F(x+a) + F(x) = b}
CountTable ddt(const SBox& f);

// max DDT entry over a != 0, b != 0
int differential_uniformity(const SBox& f);

// counts[a][b] = #{x : F^-1(F(x)+b) + F^-1(F(x+a)+b) = a}, via the inverse LUT.
// Permutations only.
CountTable bct_definition(const SBox& f);

// BCT via the pair-counting reformulation: for each gamma != 0 bucket x by
// D_gamma F(x) = b, then each ordered pair (x, x') in a bucket contributes to
// counts[x^x'][b]. Works for non-permutations too. The b = 0 column is set to
// 2^n, the table convention for ab = 0.
CountTable bct_paircount(const SBox& f);

// BCT via DDT(a,b) + sum over gamma not in {0,b} of
// #(U^{F^-1}_{gamma,a} intersect (b + U^{F^-1}_{gamma,a})). Permutations only.
CountTable bct_boura_canteaut(const SBox& f);

// max BCT entry over a != 0, b != 0 (paircount method). Permutations only.
int boomerang_uniformity(const SBox& f);

// U_{gamma,b} = {x : D_gamma F(x) = b}, ascending.
std::vector<Felt> u_set(const SBox& f, Felt gamma, Felt b);

struct SumTriple {
    std::uint64_t bct_sum;
    std::uint64_t second_derivative_zeros;
    std::uint64_t ddt_square_sum;  // sum of DDT^2 over c != 0, minus 2^n

    bool consistent() const {
        return bct_sum == second_derivative_zeros && bct_sum == ddt_square_sum;
    }
};

// Row identity: (sum_{c!=0} BCT(a,c), sum_{c!=0} #{x : D_a D_c F(x) = 0},
// sum_{c!=0} DDT(a,c)^2 - 2^n). Requires a permutation and a != 0.
SumTriple bct_row_sum_identity(const SBox& f, Felt a);

// Column identity, with the second component counting zeros of D_b D_c F^-1.
SumTriple bct_column_sum_identity(const SBox& f, Felt b);

// CSV: header row `a\b,0,1,...`, one row per a, decimal counts.
std::string count_table_csv(const CountTable& t);

}  // namespace sboxlab
