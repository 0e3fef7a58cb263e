#include "sboxlab/search.hpp"

#include <algorithm>
#include <iomanip>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "sboxlab/quadratic.hpp"
#include "sboxlab/sbox.hpp"
#include "sboxlab/tables.hpp"

namespace sboxlab {

FieldSpec SearchConfig::field() const {
    return poly ? FieldSpec(n, *poly) : FieldSpec::with_default_poly(n);
}

namespace {

struct Shard {
    std::uint64_t permutation_count = 0;
    std::vector<std::array<Felt, 3>> witnesses;
    bool truncated = false;
};

// Enumerate B,C for A in [a_lo, a_hi) against precomputed monomial columns.
void run_shard(const FieldSpec& fs, const std::vector<Felt>& base,
               const std::vector<Felt>& pow4, const std::vector<Felt>& pow16,
               const std::vector<std::vector<Felt>>& mul, Felt a_lo, Felt a_hi,
               Shard& out) {
    std::uint32_t sz = fs.order();
    std::size_t words = (sz + 63) / 64;
    std::vector<std::uint64_t> seen(words);
    std::vector<Felt> colA(sz), colAB(sz);
    for (Felt A = a_lo; A < a_hi; ++A) {
        for (Felt x = 0; x < sz; ++x) colA[x] = base[x] ^ mul[A][x];
        for (Felt B = 0; B < sz; ++B) {
            for (Felt x = 0; x < sz; ++x) colAB[x] = colA[x] ^ mul[B][pow4[x]];
            for (Felt C = 0; C < sz; ++C) {
                std::fill(seen.begin(), seen.end(), 0);
                bool perm = true;
                for (Felt x = 0; x < sz; ++x) {
                    Felt v = colAB[x] ^ mul[C][pow16[x]];
                    std::uint64_t bit = 1ull << (v & 63);
                    if (seen[v >> 6] & bit) { perm = false; break; }
                    seen[v >> 6] |= bit;
                }
                if (perm) {
                    ++out.permutation_count;
                    if (out.witnesses.size() < kWitnessCap)
                        out.witnesses.push_back({A, B, C});
                    else
                        out.truncated = true;
                }
            }
        }
    }
}

}  // namespace

SearchResult search_abc(const SearchConfig& cfg) {
    if (cfg.n % 4 != 2)
        throw std::domain_error("search_abc: n = 2 (mod 4) required");
    if (std::gcd(cfg.n, cfg.s) != 2)
        throw std::domain_error("search_abc: gcd(n, s) = 2 required");
    if (cfg.jobs < 1)
        throw std::domain_error("search_abc: jobs must be positive");
    FieldSpec fs = cfg.field();
    std::uint32_t sz = fs.order();

    std::vector<Felt> base(sz), pow4(sz), pow16(sz);
    for (Felt x = 0; x < sz; ++x) {
        base[x] = gf_pow(x, (1ll << (cfg.s + 1)) + 2, fs);
        pow4[x] = gf_pow(x, 4, fs);
        pow16[x] = gf_pow(x, 16, fs);
    }
    std::vector<std::vector<Felt>> mul(sz, std::vector<Felt>(sz));
    for (Felt a = 0; a < sz; ++a)
        for (Felt x = 0; x < sz; ++x) mul[a][x] = gf_mul(a, x, fs);

    int jobs = std::min<int>(cfg.jobs, sz);
    std::vector<Shard> shards(jobs);
    std::vector<std::thread> threads;
    for (int j = 0; j < jobs; ++j) {
        Felt lo = static_cast<Felt>(std::uint64_t(sz) * j / jobs);
        Felt hi = static_cast<Felt>(std::uint64_t(sz) * (j + 1) / jobs);
        threads.emplace_back(run_shard, std::cref(fs), std::cref(base),
                             std::cref(pow4), std::cref(pow16), std::cref(mul),
                             lo, hi, std::ref(shards[j]));
    }
    for (auto& t : threads) t.join();

    SearchResult res;
    res.cfg = cfg;
    res.total_candidates = std::uint64_t(sz) * sz * sz;
    for (Shard& sh : shards) {  // shards are A-ordered, so merge keeps lex order
        res.permutation_count += sh.permutation_count;
        res.truncated = res.truncated || sh.truncated;
        for (const auto& w : sh.witnesses) {
            if (res.witnesses.size() < kWitnessCap) res.witnesses.push_back(w);
            else res.truncated = true;
        }
    }

    res.verified = cfg.verify_bct;
    if (cfg.verify_bct) {
        res.all_delta_4 = true;
        res.all_beta_4 = true;
        for (const auto& [A, B, C] : res.witnesses) {
            SBox f = construct_abc(fs, cfg.s, A, B, C);
            if (differential_uniformity(f) != 4) res.all_delta_4 = false;
            if (boomerang_uniformity(f) != 4) res.all_beta_4 = false;
        }
    }
    return res;
}

std::map<std::string, std::uint64_t> classify_witnesses(const SearchResult& result) {
    if (result.truncated)
        throw std::domain_error("classify_witnesses: witness list is truncated");
    FieldSpec fs = result.cfg.field();
    // The Li family x^(2^m+2) + lambda*x sits inside this family exactly when
    // the leading exponents coincide, i.e. s + 1 = m.
    std::vector<Felt> lambdas;
    int m = fs.n / 2;
    if (m % 2 == 1 && result.cfg.s + 1 == m) lambdas = find_li_lambdas(fs);
    std::map<std::string, std::uint64_t> buckets{
        {"gold-case", 0}, {"li-case", 0}, {"other", 0}};
    for (const auto& [A, B, C] : result.witnesses) {
        if (A == 0 && B == 0 && C == 0)
            ++buckets["gold-case"];
        else if (B == 0 && C == 0 &&
                 std::binary_search(lambdas.begin(), lambdas.end(), A))
            ++buckets["li-case"];
        else
            ++buckets["other"];
    }
    return buckets;
}

void search_report_write(const SearchResult& result, std::ostream& os) {
    FieldSpec fs = result.cfg.field();
    os << "abc search report\n";
    os << "n=" << result.cfg.n << " s=" << result.cfg.s << " poly=0x" << std::hex
       << fs.poly << std::dec << " verify_bct=" << (result.cfg.verify_bct ? 1 : 0)
       << "\n";
    os << "total_candidates=" << result.total_candidates << "\n";
    os << "permutation_count=" << result.permutation_count << "\n";
    os << "verified=" << (result.verified ? 1 : 0) << "\n";
    os << "all_delta_4=" << (result.all_delta_4 ? 1 : 0) << "\n";
    os << "all_beta_4=" << (result.all_beta_4 ? 1 : 0) << "\n";
    for (const auto& [label, count] : result.classified)
        os << "bucket " << label << " " << count << "\n";
    std::size_t shown = std::min<std::size_t>(result.witnesses.size(), 32);
    os << "witnesses_shown=" << shown << "\n";
    for (std::size_t i = 0; i < shown; ++i) {
        const auto& w = result.witnesses[i];
        os << std::hex << std::setfill('0') << std::setw(2) << w[0] << " "
           << std::setw(2) << w[1] << " " << std::setw(2) << w[2] << std::dec
           << "\n";
    }
}

SearchResult search_report_read(std::istream& is) {
    SearchResult res;
    std::string line;
    if (!std::getline(is, line) || line != "abc search report")
        throw std::runtime_error("search_report_read: bad header");
    if (!std::getline(is, line))
        throw std::runtime_error("search_report_read: missing config line");
    {
        std::istringstream ls(line);
        std::string tok;
        std::uint32_t poly = 0;
        int vb = 1;
        while (ls >> tok) {
            if (tok.rfind("n=", 0) == 0) res.cfg.n = std::stoi(tok.substr(2));
            else if (tok.rfind("s=", 0) == 0) res.cfg.s = std::stoi(tok.substr(2));
            else if (tok.rfind("poly=0x", 0) == 0)
                poly = static_cast<std::uint32_t>(std::stoul(tok.substr(7), nullptr, 16));
            else if (tok.rfind("verify_bct=", 0) == 0) vb = std::stoi(tok.substr(11));
        }
        res.cfg.verify_bct = vb != 0;
        if (poly) res.cfg.poly = poly;
    }
    std::size_t shown = 0;
    while (std::getline(is, line)) {
        if (line.rfind("total_candidates=", 0) == 0)
            res.total_candidates = std::stoull(line.substr(17));
        else if (line.rfind("permutation_count=", 0) == 0)
            res.permutation_count = std::stoull(line.substr(18));
        else if (line.rfind("verified=", 0) == 0)
            res.verified = std::stoi(line.substr(9)) != 0;
        else if (line.rfind("all_delta_4=", 0) == 0)
            res.all_delta_4 = std::stoi(line.substr(12)) != 0;
        else if (line.rfind("all_beta_4=", 0) == 0)
            res.all_beta_4 = std::stoi(line.substr(11)) != 0;
        else if (line.rfind("bucket ", 0) == 0) {
            std::istringstream ls(line.substr(7));
            std::string label;
            std::uint64_t count;
            ls >> label >> count;
            res.classified[label] = count;
        } else if (line.rfind("witnesses_shown=", 0) == 0) {
            shown = std::stoull(line.substr(16));
        } else if (!line.empty()) {
            std::istringstream ls(line);
            std::array<Felt, 3> w{};
            std::string a, b, c;
            if (ls >> a >> b >> c) {
                w[0] = static_cast<Felt>(std::stoul(a, nullptr, 16));
                w[1] = static_cast<Felt>(std::stoul(b, nullptr, 16));
                w[2] = static_cast<Felt>(std::stoul(c, nullptr, 16));
                res.witnesses.push_back(w);
            }
        }
    }
    if (res.witnesses.size() != shown)
        throw std::runtime_error("search_report_read: witness count mismatch");
    return res;
}

}  // namespace sboxlab
