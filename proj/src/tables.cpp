#include "sboxlab/tables.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sboxlab {

CountTable ddt(const SBox& f) {
    CountTable t(f.spec.n);
    std::uint32_t sz = f.size();
    for (Felt a = 0; a < sz; ++a)
        for (Felt x = 0; x < sz; ++x)
            ++t.at(a, f.lut[x ^ a] ^ f.lut[x]);
    return t;
}

int differential_uniformity(const SBox& f) {
    CountTable t = ddt(f);
    std::uint32_t best = 0;
    for (Felt a = 1; a < t.size(); ++a)
        for (Felt b = 1; b < t.size(); ++b)
            best = std::max(best, t.at(a, b));
    return static_cast<int>(best);
}

CountTable bct_definition(const SBox& f) {
    SBox inv = inverse_sbox(f);
    CountTable t(f.spec.n);
    std::uint32_t sz = f.size();
    const Felt* F = f.lut.data();
    const Felt* G = inv.lut.data();
    for (Felt a = 0; a < sz; ++a)
        for (Felt b = 0; b < sz; ++b) {
            std::uint32_t c = 0;
            for (Felt x = 0; x < sz; ++x)
                if ((G[F[x] ^ b] ^ G[F[x ^ a] ^ b]) == a) ++c;
            t.at(a, b) = c;
        }
    return t;
}

namespace {

// Shared core of the two reformulations: for each gamma != 0, bucket x by
// D_gamma F(x); every ordered pair (x, x') in a bucket with value v
// contributes one count at (x^x', v). skip_gamma_eq_diff drops the gamma =
// x^x' terms, which the Boura-Canteaut sum accounts for via the DDT instead.
void paircount_accumulate(const SBox& f, CountTable& t, bool skip_gamma_eq_diff) {
    std::uint32_t sz = f.size();
    std::vector<std::vector<Felt>> buckets(sz);
    for (Felt gamma = 1; gamma < sz; ++gamma) {
        for (auto& b : buckets) b.clear();
        for (Felt x = 0; x < sz; ++x)
            buckets[f.lut[x ^ gamma] ^ f.lut[x]].push_back(x);
        for (Felt v = 0; v < sz; ++v) {
            const auto& bk = buckets[v];
            for (Felt x : bk)
                for (Felt y : bk) {
                    if (skip_gamma_eq_diff && gamma == (x ^ y)) continue;
                    ++t.at(x ^ y, v);
                }
        }
    }
}

}  // namespace

CountTable bct_paircount(const SBox& f) {
    CountTable t(f.spec.n);
    paircount_accumulate(f, t, false);
    for (Felt a = 0; a < t.size(); ++a) t.at(a, 0) = f.size();
    return t;
}

CountTable bct_boura_canteaut(const SBox& f) {
    SBox inv = inverse_sbox(f);
    std::uint32_t sz = f.size();
    // Pair counts on F^-1 with gamma = b excluded land at (a, b) transposed:
    // a bucket of D_gamma F^-1 with value a contributes at (b, a) of BCT_F.
    CountTable acc(f.spec.n);
    paircount_accumulate(inv, acc, true);
    CountTable t = ddt(f);
    for (Felt a = 1; a < sz; ++a)
        for (Felt b = 1; b < sz; ++b)
            t.at(a, b) += acc.at(b, a);
    for (Felt a = 0; a < sz; ++a) { t.at(a, 0) = sz; t.at(0, a) = sz; }
    return t;
}

int boomerang_uniformity(const SBox& f) {
    if (!is_permutation(f))
        throw std::domain_error("boomerang_uniformity: input is not a permutation");
    CountTable t = bct_paircount(f);
    std::uint32_t best = 0;
    for (Felt a = 1; a < t.size(); ++a)
        for (Felt b = 1; b < t.size(); ++b)
            best = std::max(best, t.at(a, b));
    return static_cast<int>(best);
}

std::vector<Felt> u_set(const SBox& f, Felt gamma, Felt b) {
    std::vector<Felt> out;
    for (Felt x = 0; x < f.size(); ++x)
        if ((f.lut[x ^ gamma] ^ f.lut[x]) == b) out.push_back(x);
    return out;
}

namespace {

SumTriple sum_identity(const SBox& f, const SBox& finv, Felt a) {
    // Row identity for f at row a; the second-derivative count uses finv when
    // called from the column variant.
    std::uint32_t sz = f.size();
    CountTable bct = bct_paircount(f);
    CountTable dt = ddt(f);
    SumTriple r{0, 0, 0};
    for (Felt c = 1; c < sz; ++c) {
        r.bct_sum += bct.at(a, c);
        r.ddt_square_sum += std::uint64_t(dt.at(a, c)) * dt.at(a, c);
    }
    r.ddt_square_sum -= sz;
    for (Felt c = 1; c < sz; ++c) {
        SBox dd = second_derivative(finv, a, c);
        for (Felt x = 0; x < sz; ++x)
            if (dd.lut[x] == 0) ++r.second_derivative_zeros;
    }
    return r;
}

}  // namespace

SumTriple bct_row_sum_identity(const SBox& f, Felt a) {
    if (a == 0) throw std::domain_error("bct_row_sum_identity: a must be nonzero");
    if (!is_permutation(f))
        throw std::domain_error("bct_row_sum_identity: input is not a permutation");
    return sum_identity(f, f, a);
}

SumTriple bct_column_sum_identity(const SBox& f, Felt b) {
    if (b == 0) throw std::domain_error("bct_column_sum_identity: b must be nonzero");
    SBox inv = inverse_sbox(f);
    // BCT_F(c,b) = BCT_{F^-1}(b,c) and DDT_F(c,b) = DDT_{F^-1}(b,c): the
    // column identity for F is the row identity for F^-1, with the
    // second-derivative zeros taken on F^-1 itself.
    return sum_identity(inv, inv, b);
}

std::string count_table_csv(const CountTable& t) {
    std::ostringstream os;
    os << "a\\b";
    for (Felt b = 0; b < t.size(); ++b) os << ',' << b;
    os << '\n';
    for (Felt a = 0; a < t.size(); ++a) {
        os << a;
        for (Felt b = 0; b < t.size(); ++b) os << ',' << t.at(a, b);
        os << '\n';
    }
    return os.str();
}

}  // namespace sboxlab
