#include "sboxlab/quadratic.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "sboxlab/tables.hpp"

namespace sboxlab {

namespace {

long long qform_exponent(const SubfieldSpec& sub, int i, int j) {
    return (1ll << (sub.k * i)) + (1ll << (sub.k * j));
}

std::uint32_t normalize_exp(long long e, const FieldSpec& spec) {
    std::uint32_t m = spec.mult_order();
    if (e == 0 || m == 0) return static_cast<std::uint32_t>(e);
    return 1 + static_cast<std::uint32_t>((e - 1) % m);
}

}  // namespace

QForm::QForm(FieldSpec s, SubfieldSpec sub_, std::map<std::pair<int, int>, Felt> coeffs_)
    : spec(s), sub(sub_) {
    if (sub.k < 1 || spec.n % sub.k != 0)
        throw std::domain_error("QForm: subfield degree must divide n");
    for (const auto& [ij, c] : coeffs_) {
        auto [i, j] = ij;
        if (i < 0 || i > j || j > sub.m - 1)
            throw std::domain_error("QForm: indices must satisfy 0 <= i <= j <= m-1");
        if (c >= spec.order())
            throw std::domain_error("QForm: coefficient out of range");
        if (c != 0) coeffs[ij] = c;
    }
    if (algebraic_degree(qform_to_sbox(*this)) > 2)
        throw std::logic_error("QForm: induced function has degree > 2");
}

SBox qform_to_sbox(const QForm& Q) {
    std::vector<PolyTerm> terms;
    for (const auto& [ij, c] : Q.coeffs)
        terms.push_back({c, normalize_exp(qform_exponent(Q.sub, ij.first, ij.second), Q.spec)});
    return evaluate_poly(UnivariatePoly(Q.spec, std::move(terms)));
}

SBox h_gamma(const QForm& Q, Felt gamma) {
    if (gamma == 0) throw std::domain_error("h_gamma: gamma must be nonzero");
    SBox f = qform_to_sbox(Q);
    Felt fg = f.lut[gamma];
    std::vector<Felt> lut(f.size());
    for (Felt x = 0; x < f.size(); ++x)
        lut[x] = f.lut[x ^ gamma] ^ f.lut[x] ^ fg;
    return SBox(Q.spec, std::move(lut));
}

std::vector<Felt> kernel_K(const QForm& Q, Felt gamma) {
    SBox h = h_gamma(Q, gamma);
    std::vector<Felt> out;
    for (Felt x = 0; x < h.size(); ++x)
        if (h.lut[x] == 0) out.push_back(x);
    return out;
}

std::vector<Felt> image_H(const QForm& Q, Felt a) {
    SBox h = h_gamma(Q, a);
    std::vector<Felt> out = h.lut;
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

QFormReport check_qform_theorem(const QForm& Q) {
    SBox f = qform_to_sbox(Q);
    QFormReport r{};
    r.q = static_cast<int>(Q.sub.q);
    r.delta = differential_uniformity(f);
    r.delta_at_least_q = r.delta >= r.q;
    r.permutation = is_permutation(f);
    r.delta_equals_q = r.delta == r.q;
    r.gboom_checked = false;
    r.gboom_identity_ok = false;
    r.at_most_one_gamma_ok = false;
    r.beta = -1;
    r.beta_equals_q = false;
    if (!r.permutation || !r.delta_equals_q) return r;

    CountTable dt = ddt(f);
    CountTable bct = bct_paircount(f);
    std::vector<Felt> fq_star;
    for (Felt c : subfield_elements(Q.sub, Q.spec))
        if (c != 0) fq_star.push_back(c);

    r.gboom_checked = true;
    r.gboom_identity_ok = true;
    r.at_most_one_gamma_ok = true;
    std::uint32_t sz = f.size();
    std::uint32_t beta = 0;
    for (Felt a = 1; a < sz; ++a)
        for (Felt b = 1; b < sz; ++b) {
            std::uint64_t sum = 0;
            int contributing = 0;
            for (Felt g : fq_star) {
                std::uint32_t v = dt.at(gf_mul(a, g, Q.spec), b);
                sum += v;
                if (v != 0) ++contributing;
            }
            if (bct.at(a, b) != sum) r.gboom_identity_ok = false;
            if (contributing > 1) r.at_most_one_gamma_ok = false;
            beta = std::max(beta, bct.at(a, b));
        }
    r.beta = static_cast<int>(beta);
    r.beta_equals_q = r.beta == r.q;
    return r;
}

std::pair<SBox, SBox> decompose_f_phi(const UnivariatePoly& p, const SubfieldSpec& sub) {
    std::vector<PolyTerm> f_terms, phi_terms;
    for (const PolyTerm& t : p.terms) {
        bool placed = false;
        for (int i = 0; i < sub.m && !placed; ++i)
            for (int j = i; j < sub.m && !placed; ++j)
                if (normalize_exp(qform_exponent(sub, i, j), p.spec) == t.exp) {
                    (i < j ? f_terms : phi_terms).push_back(t);
                    placed = true;
                }
        if (!placed)
            throw std::domain_error("decompose_f_phi: exponent is not of the form q^i + q^j");
    }
    return {evaluate_poly(UnivariatePoly(p.spec, std::move(f_terms))),
            evaluate_poly(UnivariatePoly(p.spec, std::move(phi_terms)))};
}

std::optional<QForm> qform_from_sbox(const SBox& f, const SubfieldSpec& sub) {
    UnivariatePoly p = interpolate_poly(f);
    std::map<std::pair<int, int>, Felt> coeffs;
    for (const PolyTerm& t : p.terms) {
        bool placed = false;
        for (int i = 0; i < sub.m && !placed; ++i)
            for (int j = i; j < sub.m && !placed; ++j)
                if (normalize_exp(qform_exponent(sub, i, j), f.spec) == t.exp) {
                    coeffs[{i, j}] ^= t.coeff;
                    placed = true;
                }
        if (!placed) return std::nullopt;
    }
    QForm Q(f.spec, sub, std::move(coeffs));
    // Guard against exponent collisions between distinct (i,j): the recovered
    // form must reproduce the LUT exactly.
    if (!(qform_to_sbox(Q) == f)) return std::nullopt;
    return Q;
}

SBox construct_gold(const FieldSpec& spec, int t) {
    if (spec.n % 4 != 2)
        throw std::domain_error("construct_gold: n = 2 (mod 4) required");
    if (t % 2 != 0)
        throw std::domain_error("construct_gold: t must be even");
    if (std::gcd(t, spec.n) != 2)
        throw std::domain_error("construct_gold: gcd(t, n) = 2 required");
    return monomial_sbox(1, (1ll << t) + 1, spec);
}

SBox construct_gold(int n, int t) {
    return construct_gold(FieldSpec::with_default_poly(n), t);
}

SBox construct_li(const FieldSpec& spec, Felt lambda) {
    int n = spec.n;
    if (n % 2 != 0 || (n / 2) % 2 != 1)
        throw std::domain_error("construct_li: n = 2m with m odd required");
    int m = n / 2;
    if (lambda == 0 || mult_order(gf_pow(lambda, (1ll << m) - 1, spec), spec) != 3)
        throw std::domain_error("construct_li: lambda^(2^m-1) must have order 3");
    return evaluate_poly(UnivariatePoly(
        spec, {{1, static_cast<std::uint32_t>((1u << m) + 2)}, {lambda, 1}}));
}

SBox construct_li(int n, Felt lambda) {
    return construct_li(FieldSpec::with_default_poly(n), lambda);
}

std::vector<Felt> find_li_lambdas(const FieldSpec& spec) {
    int n = spec.n;
    if (n % 2 != 0 || (n / 2) % 2 != 1)
        throw std::domain_error("find_li_lambdas: n = 2m with m odd required");
    int m = n / 2;
    std::vector<Felt> out;
    for (Felt lambda = 1; lambda < spec.order(); ++lambda)
        if (mult_order(gf_pow(lambda, (1ll << m) - 1, spec), spec) == 3)
            out.push_back(lambda);
    return out;
}

std::vector<Felt> find_li_lambdas(int n) {
    return find_li_lambdas(FieldSpec::with_default_poly(n));
}

SBox construct_btt(int k, int s, std::optional<Felt> beta, std::optional<FieldSpec> spec_opt) {
    int n = 3 * k;
    if (k % 4 != 2)
        throw std::domain_error("construct_btt: k = 2 (mod 4) required");
    if (k % 3 == 0)
        throw std::domain_error("construct_btt: 3 must not divide k");
    if (std::gcd(n, s) != 2)
        throw std::domain_error("construct_btt: gcd(n, s) = 2 required");
    if ((k + s) % 3 != 0)
        throw std::domain_error("construct_btt: 3 | k+s required");
    FieldSpec spec = spec_opt ? *spec_opt : FieldSpec::with_default_poly(n);
    if (spec.n != n)
        throw std::domain_error("construct_btt: field degree must be 3k");
    Felt b = beta ? *beta : find_primitive(spec);
    if (b == 0 || mult_order(b, spec) != spec.mult_order())
        throw std::domain_error("construct_btt: beta must be primitive");
    // 2^-k = 2^(n-k) mod 2^n-1; at n = 6 both exponents land on 17 and the
    // binomial collapses to a single monomial, which is fine.
    std::uint32_t e1 = (1u << s) + 1;
    std::uint32_t e2 = (1u << (n - k)) + (1u << (k + s));
    return evaluate_poly(UnivariatePoly(
        spec, {{b, e1}, {gf_pow(b, 1ll << k, spec), e2}}));
}

SBox construct_abc(const FieldSpec& spec, int s, Felt A, Felt B, Felt C) {
    if (spec.n % 4 != 2)
        throw std::domain_error("construct_abc: n = 2 (mod 4) required");
    if (std::gcd(spec.n, s) != 2)
        throw std::domain_error("construct_abc: gcd(n, s) = 2 required");
    std::uint32_t e = (1u << (s + 1)) + 2;
    return evaluate_poly(UnivariatePoly(spec, {{1, e}, {A, 1}, {B, 4}, {C, 16}}));
}

SBox construct_abc(int n, int s, Felt A, Felt B, Felt C) {
    return construct_abc(FieldSpec::with_default_poly(n), s, A, B, C);
}

}  // namespace sboxlab
