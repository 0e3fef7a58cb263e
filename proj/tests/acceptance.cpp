// Acceptance suite: one pass/fail line per criterion, exit 0 only if all pass.
#include <algorithm>
#include <cstdint>
#include <iostream>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "sboxlab/quadratic.hpp"
#include "sboxlab/search.hpp"
#include "sboxlab/tables.hpp"

using namespace sboxlab;

namespace {

int failures = 0;

void report(int idx, const std::string& name, bool ok, const std::string& extra = "") {
    std::cout << "criterion " << idx << " (" << name << "): "
              << (ok ? "PASS" : "FAIL");
    if (!extra.empty()) std::cout << " [" << extra << "]";
    std::cout << "\n" << std::flush;
    if (!ok) ++failures;
}

SBox random_permutation(const FieldSpec& fs, std::uint64_t seed) {
    std::vector<Felt> lut(fs.order());
    std::iota(lut.begin(), lut.end(), 0u);
    std::mt19937_64 rng(seed);
    for (std::size_t i = lut.size() - 1; i > 0; --i)
        std::swap(lut[i], lut[rng() % (i + 1)]);
    return SBox(fs, std::move(lut));
}

// sum over c != 0 of #{x : D_a D_c F(x) = 0}, for each a
std::vector<std::uint64_t> second_deriv_zero_rowsums(const SBox& f) {
    std::uint32_t sz = f.size();
    const Felt* l = f.lut.data();
    std::vector<std::uint64_t> out(sz, 0);
    for (Felt a = 1; a < sz; ++a) {
        std::uint64_t acc = 0;
        for (Felt c = 1; c < sz; ++c)
            for (Felt x = 0; x < sz; ++x)
                if ((l[x ^ a] ^ l[x ^ c] ^ l[x ^ a ^ c] ^ l[x]) == 0) ++acc;
        out[a] = acc;
    }
    return out;
}

struct CorpusVerdict {
    bool cross_method = true;   // criterion 5
    bool sum_identities = true; // criterion 6
    bool bound_and_duality = true;  // criterion 7 (corpus part)
};

CorpusVerdict run_corpus() {
    CorpusVerdict v;
    for (int n = 3; n <= 8; ++n) {
        FieldSpec fs = FieldSpec::with_default_poly(n);
        std::uint32_t sz = fs.order();
        for (int seed = 0; seed < 200; ++seed) {
            SBox f = random_permutation(fs, 10000ull * n + seed);
            SBox finv = inverse_sbox(f);
            CountTable bdef = bct_definition(f);
            CountTable bp = bct_paircount(f);
            CountTable bbc = bct_boura_canteaut(f);
            if (!(bdef == bp) || !(bdef == bbc)) v.cross_method = false;

            CountTable dt = ddt(f);
            CountTable bp_inv = bct_paircount(finv);
            CountTable dt_inv = ddt(finv);
            auto zrows_f = second_deriv_zero_rowsums(f);
            auto zrows_inv = second_deriv_zero_rowsums(finv);
            // row identity on F covers all a; row identity on F^-1 is the
            // column identity on F for all b
            for (Felt a = 1; a < sz; ++a) {
                std::uint64_t s1 = 0, s3 = 0, t1 = 0, t3 = 0;
                for (Felt c = 1; c < sz; ++c) {
                    s1 += bp.at(a, c);
                    s3 += std::uint64_t(dt.at(a, c)) * dt.at(a, c);
                    t1 += bp_inv.at(a, c);
                    t3 += std::uint64_t(dt_inv.at(a, c)) * dt_inv.at(a, c);
                }
                if (s1 != zrows_f[a] || s1 != s3 - sz) v.sum_identities = false;
                if (t1 != zrows_inv[a] || t1 != t3 - sz) v.sum_identities = false;
            }

            // beta >= delta; BCT(F)[a][b] = BCT(F^-1)[b][a] entrywise
            std::uint32_t delta = 0, beta = 0;
            for (Felt a = 1; a < sz; ++a)
                for (Felt b = 1; b < sz; ++b) {
                    delta = std::max(delta, dt.at(a, b));
                    beta = std::max(beta, bp.at(a, b));
                    if (bp.at(a, b) != bp_inv.at(b, a)) v.bound_and_duality = false;
                }
            if (beta < delta) v.bound_and_duality = false;
        }
    }
    return v;
}

bool check_family(const FieldSpec& fs, const SBox& f) {
    return is_permutation(f) && differential_uniformity(f) == 4 &&
           boomerang_uniformity(f) == 4;
}

}  // namespace

int main() {
    // 1. Table 1 reproduction
    SearchConfig cfg;
    SearchResult res = search_abc(cfg);
    res.classified = classify_witnesses(res);
    report(1, "search abc n=6 s=2 count",
           res.total_candidates == 262144 && res.permutation_count == 960 &&
               res.all_delta_4 && res.all_beta_4,
           "permutation_count=" + std::to_string(res.permutation_count));

    // 2. Gold instance
    FieldSpec f6 = FieldSpec::with_default_poly(6);
    report(2, "gold(6,2) delta=beta=4", check_family(f6, construct_gold(6, 2)));

    // 3. Li instances
    auto lambdas = find_li_lambdas(6);
    bool li_ok = !lambdas.empty();
    for (Felt l : lambdas)
        if (!check_family(f6, construct_li(6, l))) li_ok = false;
    std::uint64_t linear_term_only = 0;  // witnesses (A,0,0) with A != 0
    for (const auto& w : res.witnesses)
        if (w[1] == 0 && w[2] == 0 && w[0] != 0) ++linear_term_only;
    report(3, "li instances delta=beta=4", li_ok,
           "lambda_count=" + std::to_string(lambdas.size()) +
               " table-value=15 search(A,0,0,A!=0)=" +
               std::to_string(linear_term_only));

    // 4. Bracken-Tan-Tan / Corollary
    report(4, "btt(k=2,s=4) delta=beta=4", check_family(f6, construct_btt(2, 4)));

    // 5-7. Corpus of 200 seeded permutations per n in 3..8
    CorpusVerdict v = run_corpus();
    report(5, "cross-method BCT equality on corpus", v.cross_method);
    report(6, "row/column sum identities on corpus", v.sum_identities);
    bool apn_ok = true;
    for (int n : {3, 5, 7}) {
        SBox cube = monomial_sbox(1, 3, FieldSpec::with_default_poly(n));
        if (differential_uniformity(cube) != 2 || boomerang_uniformity(cube) != 2)
            apn_ok = false;
    }
    report(7, "beta>=delta, APN x^3, inversion duality",
           v.bound_and_duality && apn_ok);

    // 8. Theorem machinery on x^5 as q=4, m=3 form
    QForm Q(f6, make_subfield(2, f6), {{{0, 1}, 1}});
    QFormReport qr = check_qform_theorem(Q);
    report(8, "x^5 qform theorem, gboom identity, unique gamma",
           qr.all_ok() && qr.gboom_checked && qr.delta == 4 && qr.beta == 4);

    // 9. Affine invariance at n=6
    {
        SBox g = construct_gold(6, 2);
        int beta = boomerang_uniformity(g);
        bool ok = true;
        for (std::uint64_t seed = 0; seed < 50; ++seed) {
            SBox a1 = random_affine_permutation(f6, 2 * seed + 1);
            SBox a2 = random_affine_permutation(f6, 2 * seed + 2);
            if (boomerang_uniformity(compose(a2, compose(g, a1))) != beta) ok = false;
        }
        report(9, "affine invariance of beta", ok);
    }

    // 10. Field-choice robustness: second irreducible polynomial at n=6
    {
        FieldSpec alt(6, 0x49);
        SearchConfig cfg2;
        cfg2.poly = 0x49;
        SearchResult res2 = search_abc(cfg2);
        bool ok = res2.permutation_count == res.permutation_count &&
                  res2.all_delta_4 && res2.all_beta_4;
        ok = ok && check_family(alt, construct_gold(alt, 2));
        auto lambdas2 = find_li_lambdas(alt);
        ok = ok && lambdas2.size() == lambdas.size();
        for (Felt l : lambdas2)
            if (!check_family(alt, construct_li(alt, l))) ok = false;
        ok = ok && check_family(alt, construct_btt(2, 4, std::nullopt, alt));
        report(10, "criteria 1-4 under poly 0x49", ok);
    }

    std::cout << (failures == 0 ? "ACCEPTANCE: all criteria passed\n"
                                : "ACCEPTANCE: " + std::to_string(failures) +
                                      " criteria FAILED\n");
    return failures == 0 ? 0 : 1;
}
