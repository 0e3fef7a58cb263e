#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "sboxlab/sbox.hpp"

namespace sboxlab {

// Quadratic form F(x) = sum_{0 <= i <= j <= m-1} c_ij x^(q^i + q^j) over
// F_{q^m} = GF(2^n). The subfield (q, m) is explicit: the same LUT can be a
// valid form for several q, and the theorem's strength depends on which q is
// claimed.
struct QForm {
    FieldSpec spec;
    SubfieldSpec sub;
    std::map<std::pair<int, int>, Felt> coeffs;  // (i,j) with i <= j, nonzero

    QForm(FieldSpec s, SubfieldSpec sub_,
          std::map<std::pair<int, int>, Felt> coeffs_);
};

SBox qform_to_sbox(const QForm& Q);

// H_gamma(x) = F(x+gamma) + F(x) + F(gamma); F_2-linear in x, H_gamma(0) = 0.
SBox h_gamma(const QForm& Q, Felt gamma);

// Zero set of H_gamma; an F_q-vector space containing gamma*F_q. Ascending.
std::vector<Felt> kernel_K(const QForm& Q, Felt gamma);

// Image {H_a(x)}; an F_q-vector space with |image| * |kernel| = 2^n. Ascending.
std::vector<Felt> image_H(const QForm& Q, Felt a);

struct QFormReport {
    int q;
    int delta;
    bool delta_at_least_q;
    bool permutation;
    bool delta_equals_q;
    bool gboom_checked;        // (iii) run only when permutation && delta == q
    bool gboom_identity_ok;    // BCT(a,b) = sum_{gamma in F_q^*} DDT(a*gamma, b)
    bool at_most_one_gamma_ok; // per (a,b), at most one contributing gamma
    int beta;                  // -1 when not a permutation
    bool beta_equals_q;

    bool all_ok() const {
        if (!delta_at_least_q) return false;
        if (!gboom_checked) return true;  // nothing further to assert
        return gboom_identity_ok && at_most_one_gamma_ok && beta_equals_q;
    }
};

QFormReport check_qform_theorem(const QForm& Q);

// Split F = f + phi where f collects the i < j monomials and phi the i = j
// (linear) ones. Input terms must all be of exponent q^i + q^j.
std::pair<SBox, SBox> decompose_f_phi(const UnivariatePoly& p, const SubfieldSpec& sub);

// Recover the quadratic-form coefficients of an SBox for a claimed (q, m), or
// nullopt if the LUT is not of that shape.
std::optional<QForm> qform_from_sbox(const SBox& f, const SubfieldSpec& sub);

// Gold map x^(2^t+1); requires n = 2 mod 4, t even, gcd(t,n) = 2.
SBox construct_gold(const FieldSpec& spec, int t);
SBox construct_gold(int n, int t);

// x^(2^m+2) + lambda*x with n = 2m, m odd and ord(lambda^(2^m-1)) = 3.
SBox construct_li(const FieldSpec& spec, Felt lambda);
SBox construct_li(int n, Felt lambda);

// All lambda in GF(2^n)^* with lambda^(2^m-1) of order exactly 3, ascending.
std::vector<Felt> find_li_lambdas(const FieldSpec& spec);
std::vector<Felt> find_li_lambdas(int n);

// Bracken-Tan-Tan binomial beta*x^(2^s+1) + beta^(2^k)*x^(2^-k + 2^(k+s)) on
// GF(2^(3k)); beta defaults to the canonical primitive element.
SBox construct_btt(int k, int s, std::optional<Felt> beta = std::nullopt,
                   std::optional<FieldSpec> spec = std::nullopt);

// x^(2^(s+1)+2) + A*x + B*x^4 + C*x^16; n = 2 mod 4, gcd(n,s) = 2.
SBox construct_abc(const FieldSpec& spec, int s, Felt A, Felt B, Felt C);
SBox construct_abc(int n, int s, Felt A, Felt B, Felt C);

}  // namespace sboxlab
