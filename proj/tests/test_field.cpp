#include <doctest.h>

#include <stdexcept>

#include <set>

#include "oracles.hpp"
#include "sboxlab/field.hpp"

using namespace sboxlab;

TEST_CASE("gf_add basics") {
    FieldSpec fs(3, 0b1011);
    for (Felt a = 0; a < 8; ++a) {
        CHECK(gf_add(a, 0) == a);
        CHECK(gf_add(a, a) == 0);
    }
    CHECK(gf_add(0b011, 0b101) == 0b110);
}

TEST_CASE("gf_mul against schoolbook oracle") {
    FieldSpec fs(3, 0b1011);
    CHECK(gf_mul(0b010, 0b110, fs) == 0b111);
    for (int n : {2, 3, 4, 6}) {
        FieldSpec f = FieldSpec::with_default_poly(n);
        for (Felt a = 0; a < f.order(); ++a)
            for (Felt b = 0; b < f.order(); ++b)
                CHECK(gf_mul(a, b, f) == oracles::slow_gf_mul(a, b, f));
    }
}

TEST_CASE("gf_mul identities") {
    FieldSpec fs = FieldSpec::with_default_poly(5);
    for (Felt a = 0; a < fs.order(); ++a) {
        CHECK(gf_mul(a, 1, fs) == a);
        CHECK(gf_mul(a, 0, fs) == 0);
    }
    // commutativity + distributivity, exhaustive at n=5
    for (Felt a = 0; a < fs.order(); ++a)
        for (Felt b = 0; b < fs.order(); ++b) {
            CHECK(gf_mul(a, b, fs) == gf_mul(b, a, fs));
            for (Felt c = 0; c < fs.order(); c += 7)
                CHECK(gf_mul(a, gf_add(b, c), fs) ==
                      gf_add(gf_mul(a, b, fs), gf_mul(a, c, fs)));
        }
}

TEST_CASE("Frobenius is additive") {
    FieldSpec fs = FieldSpec::with_default_poly(6);
    for (Felt a = 0; a < fs.order(); ++a)
        for (Felt b = 0; b < fs.order(); ++b)
            CHECK(gf_mul(a ^ b, a ^ b, fs) == (gf_mul(a, a, fs) ^ gf_mul(b, b, fs)));
}

TEST_CASE("gf_pow") {
    FieldSpec fs(3, 0b1011);
    CHECK(gf_pow(0b010, 3, fs) == 0b011);
    for (Felt a = 1; a < 8; ++a) {
        CHECK(gf_pow(a, 1, fs) == a);
        CHECK(gf_pow(a, 7, fs) == 1);
        CHECK(gf_pow(a, 0, fs) == 1);
    }
    CHECK(gf_pow(0, 0, fs) == 1);
    CHECK(gf_pow(0, 5, fs) == 0);
    CHECK_THROWS_AS(gf_pow(0, -1, fs), std::domain_error);
    // exponent addition law
    for (Felt a = 1; a < 8; ++a)
        for (long long e1 = -3; e1 < 9; ++e1)
            for (long long e2 = 0; e2 < 9; ++e2)
                CHECK(gf_pow(a, e1 + e2, fs) ==
                      gf_mul(gf_pow(a, e1, fs), gf_pow(a, e2, fs), fs));
}

TEST_CASE("gf_inv") {
    FieldSpec fs(3, 0b1011);
    CHECK(gf_inv(1, fs) == 1);
    CHECK(gf_inv(0b010, fs) == 0b101);
    CHECK_THROWS_AS(gf_inv(0, fs), std::domain_error);
    for (Felt a = 1; a < 8; ++a) {
        CHECK(gf_mul(a, gf_inv(a, fs), fs) == 1);
        CHECK(gf_inv(gf_inv(a, fs), fs) == a);
    }
}

TEST_CASE("trace") {
    FieldSpec f4(2, 0b111);
    CHECK(trace(0b10, 1, f4) == 1);
    CHECK(trace(0, 1, f4) == 0);

    FieldSpec fs = FieldSpec::with_default_poly(6);
    CHECK_THROWS_AS(trace(1, 4, fs), std::domain_error);
    for (int r : {1, 2, 3, 6}) {
        for (Felt x = 0; x < fs.order(); ++x) {
            Felt t = trace(x, r, fs);
            // subfield membership: t^(2^r) = t
            CHECK(gf_pow(t, 1u << r, fs) == t);
            // linearity
            for (Felt y = 0; y < fs.order(); y += 5)
                CHECK(trace(x ^ y, r, fs) == (t ^ trace(y, r, fs)));
            // transitivity through the intermediate field: Tr_1^r on F_{2^r}
            // is the r-fold Frobenius sum, not trace(.,1,fs)
            Felt sub_tr = 0, frob = t;
            for (int i = 0; i < r; ++i) {
                sub_tr ^= frob;
                frob = gf_mul(frob, frob, fs);
            }
            CHECK(trace(x, 1, fs) == sub_tr);
        }
    }
}

TEST_CASE("subfields") {
    FieldSpec fs = FieldSpec::with_default_poly(6);
    CHECK(is_in_subfield(0, make_subfield(2, fs), fs));
    CHECK(is_in_subfield(1, make_subfield(2, fs), fs));
    for (int k : {1, 2, 3, 6}) {
        SubfieldSpec sub = make_subfield(k, fs);
        auto elems = subfield_elements(sub, fs);
        CHECK(elems.size() == sub.q);
        CHECK(std::is_sorted(elems.begin(), elems.end()));
        // closed under add and mul
        for (Felt a : elems)
            for (Felt b : elems) {
                std::set<Felt> s(elems.begin(), elems.end());
                CHECK(s.count(a ^ b) == 1);
                CHECK(s.count(gf_mul(a, b, fs)) == 1);
            }
    }
    CHECK(subfield_elements(make_subfield(1, fs), fs) == std::vector<Felt>{0, 1});
    CHECK(subfield_elements(make_subfield(6, fs), fs).size() == 64);
    CHECK_THROWS_AS(make_subfield(4, fs), std::domain_error);
}

TEST_CASE("find_primitive") {
    CHECK(find_primitive(FieldSpec::with_default_poly(1)) == 1);
    FieldSpec fs(3, 0b1011);
    Felt g = find_primitive(fs);
    CHECK(g == 0b010);
    std::set<Felt> powers;
    Felt t = 1;
    for (int i = 0; i < 7; ++i) {
        powers.insert(t);
        t = gf_mul(t, g, fs);
    }
    CHECK(powers.size() == 7);
    for (int n = 1; n <= 10; ++n) {
        FieldSpec f = FieldSpec::with_default_poly(n);
        CHECK(mult_order(find_primitive(f), f) == f.mult_order());
    }
}

TEST_CASE("default_reduction_poly regeneration") {
    CHECK(default_reduction_poly(1) == 0b11);
    CHECK(default_reduction_poly(2) == 0b111);
    CHECK(default_reduction_poly(3) == 0b1011);
    CHECK_THROWS_AS(default_reduction_poly(0), std::domain_error);
    CHECK_THROWS_AS(default_reduction_poly(17), std::domain_error);
    // regenerate: least irreducible of each degree, constant term forced so
    // that degree 1 yields x+1 rather than x
    for (int n = 1; n <= 16; ++n) {
        std::uint32_t least = 0;
        for (std::uint32_t p = (1u << n) | 1; p < (2u << n); p += 2)
            if (is_irreducible(p)) { least = p; break; }
        CHECK(default_reduction_poly(n) == least);
    }
}

TEST_CASE("FieldSpec validation") {
    CHECK_THROWS_AS(FieldSpec(3, 0b1001), std::domain_error);  // reducible
    CHECK_THROWS_AS(FieldSpec(3, 0b111), std::domain_error);   // wrong degree
    CHECK_NOTHROW(FieldSpec(6, 0x49));  // second irreducible at n=6
}
