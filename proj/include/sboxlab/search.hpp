#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sboxlab/field.hpp"

namespace sboxlab {

struct SearchConfig {
    int n = 6;
    int s = 2;
    bool verify_bct = true;
    int jobs = 1;
    std::optional<std::uint32_t> poly;  // reduction polynomial override

    FieldSpec field() const;
};

struct SearchResult {
    SearchConfig cfg;
    std::uint64_t total_candidates = 0;  // 2^(3n)
    std::uint64_t permutation_count = 0;
    bool verified = false;  // whether delta/beta were checked at all
    bool all_delta_4 = false;
    bool all_beta_4 = false;
    std::vector<std::array<Felt, 3>> witnesses;  // (A,B,C), lexicographic
    bool truncated = false;
    std::map<std::string, std::uint64_t> classified;
};

// In-memory witness cap; beyond it the result is marked truncated.
inline constexpr std::size_t kWitnessCap = 4096;

// Enumerate all (A,B,C) in GF(2^n)^3 for F = x^(2^(s+1)+2) + Ax + Bx^4 + Cx^16,
// count permutations and (optionally) verify delta = beta = 4 for each.
// Deterministic, independent of cfg.jobs.
SearchResult search_abc(const SearchConfig& cfg);

// Buckets: "gold-case" (A=B=C=0), "li-case" (B=C=0, A a valid Li lambda),
// "other". Counts sum to permutation_count. Requires untruncated witnesses.
std::map<std::string, std::uint64_t> classify_witnesses(const SearchResult& result);

void search_report_write(const SearchResult& result, std::ostream& os);

// Parse a report back; recovers config, counts, buckets and the listed
// witnesses (at most the 32 the report shows).
SearchResult search_report_read(std::istream& is);

}  // namespace sboxlab
