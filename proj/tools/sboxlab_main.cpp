#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "sboxlab/io.hpp"
#include "sboxlab/quadratic.hpp"
#include "sboxlab/search.hpp"
#include "sboxlab/tables.hpp"

using namespace sboxlab;

namespace {

int default_jobs() {
    if (const char* env = std::getenv("SBOXLAB_JOBS")) {
        int j = std::atoi(env);
        if (j >= 1) return j;
    }
    return 1;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) throw FormatError("cannot open " + out_path + " for writing");
        out << text;
    }
}

std::optional<std::uint32_t> parse_poly_flag(const std::string& s) {
    if (s.empty()) return std::nullopt;
    return static_cast<std::uint32_t>(std::stoul(s, nullptr, 16));
}

int cmd_analyze(const std::string& file) {
    SBox f = read_sbox_file(file);
    bool perm = is_permutation(f);
    std::cout << "n=" << f.spec.n << " permutation=" << (perm ? "true" : "false")
              << " degree=" << algebraic_degree(f)
              << " delta=" << differential_uniformity(f);
    if (perm) std::cout << " beta=" << boomerang_uniformity(f);
    std::cout << "\n";
    return 0;
}

int cmd_uniformity(const std::string& file) {
    SBox f = read_sbox_file(file);
    std::cout << "delta=" << differential_uniformity(f);
    if (is_permutation(f)) std::cout << " beta=" << boomerang_uniformity(f);
    std::cout << "\n";
    return 0;
}

int cmd_ddt(const std::string& file, const std::string& out) {
    emit(count_table_csv(ddt(read_sbox_file(file))), out);
    return 0;
}

int cmd_bct(const std::string& file, const std::string& method, const std::string& out) {
    SBox f = read_sbox_file(file);
    CountTable t = method == "def"   ? bct_definition(f)
                   : method == "bc"  ? bct_boura_canteaut(f)
                                     : bct_paircount(f);
    emit(count_table_csv(t), out);
    return 0;
}

int cmd_invert(const std::string& file, const std::string& out) {
    SBox f = read_sbox_file(file);
    emit(write_sbox_text(inverse_sbox(f), "inverse of " + file), out);
    return 0;
}

int cmd_verify_qform(const std::string& file, int q) {
    SBox f = read_sbox_file(file);
    int k = 0;
    while ((1 << k) < q) ++k;
    if ((1 << k) != q || k < 1 || f.spec.n % k != 0) {
        std::cerr << "q must be 2^k with k | n\n";
        return 2;
    }
    auto Q = qform_from_sbox(f, make_subfield(k, f.spec));
    if (!Q) {
        std::cerr << "not a quadratic form over F_" << q << "\n";
        return 1;
    }
    QFormReport r = check_qform_theorem(*Q);
    std::cout << "q=" << r.q << " delta=" << r.delta
              << " delta_at_least_q=" << r.delta_at_least_q
              << " permutation=" << r.permutation
              << " delta_equals_q=" << r.delta_equals_q << "\n";
    if (r.gboom_checked) {
        std::cout << "gboom_identity=" << r.gboom_identity_ok
                  << " at_most_one_gamma=" << r.at_most_one_gamma_ok
                  << " beta=" << r.beta << " beta_equals_q=" << r.beta_equals_q
                  << "\n";
    } else {
        std::cout << "gboom check skipped (not a permutation with delta=q)\n";
    }
    return r.all_ok() ? 0 : 1;
}

int cmd_verify_sums(const std::string& file) {
    SBox f = read_sbox_file(file);
    bool ok = true;
    for (Felt a = 1; a < f.size(); ++a) {
        if (!bct_row_sum_identity(f, a).consistent()) {
            std::cout << "row a=" << a << " mismatch\n";
            ok = false;
        }
        if (!bct_column_sum_identity(f, a).consistent()) {
            std::cout << "column b=" << a << " mismatch\n";
            ok = false;
        }
    }
    std::cout << (ok ? "all row/column sum identities hold\n"
                     : "sum identity verification FAILED\n");
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"DDT/BCT toolkit for Sboxes over GF(2^n)"};
    app.require_subcommand(1);

    std::string file, out, method = "pairs", poly_flag;

    auto* analyze = app.add_subcommand("analyze", "print n, permutation, degree, delta, beta");
    analyze->add_option("file", file)->required();

    auto* uniformity = app.add_subcommand("uniformity", "print delta and beta");
    uniformity->add_option("file", file)->required();

    auto* ddt_cmd = app.add_subcommand("ddt", "emit DDT as CSV");
    ddt_cmd->add_option("file", file)->required();
    ddt_cmd->add_option("--out", out);

    auto* bct_cmd = app.add_subcommand("bct", "emit BCT as CSV");
    bct_cmd->add_option("file", file)->required();
    bct_cmd->add_option("--method", method)->check(CLI::IsMember({"def", "pairs", "bc"}));
    bct_cmd->add_option("--out", out);

    auto* invert = app.add_subcommand("invert", "write the compositional inverse");
    invert->add_option("file", file)->required();
    invert->add_option("--out", out);

    auto* vq = app.add_subcommand("verify-qform", "check the quadratic-form BCT theorem");
    int q = 4;
    vq->add_option("file", file)->required();
    vq->add_option("--q", q, "claimed subfield size")->required();

    auto* vs = app.add_subcommand("verify-sums", "check BCT row/column sum identities");
    vs->add_option("file", file)->required();

    auto* construct = app.add_subcommand("construct", "build a known quadratic permutation");
    construct->require_subcommand(1);
    int n = 6, t = 2, s = 2, k = 2;
    std::string lambda_s, beta_s, A_s = "0", B_s = "0", C_s = "0";
    auto* gold = construct->add_subcommand("gold", "x^(2^t+1)");
    gold->add_option("--n", n)->required();
    gold->add_option("--t", t)->required();
    gold->add_option("--poly", poly_flag, "reduction polynomial (hex)");
    gold->add_option("--out", out);
    auto* li = construct->add_subcommand("li", "x^(2^m+2) + lambda*x");
    li->add_option("--n", n)->required();
    li->add_option("--lambda", lambda_s, "lambda (hex)")->required();
    li->add_option("--poly", poly_flag);
    li->add_option("--out", out);
    auto* btt = construct->add_subcommand("btt", "Bracken-Tan-Tan binomial on GF(2^3k)");
    btt->add_option("--k", k)->required();
    btt->add_option("--s", s)->required();
    btt->add_option("--beta", beta_s, "primitive element (hex)");
    btt->add_option("--poly", poly_flag);
    btt->add_option("--out", out);
    auto* abc = construct->add_subcommand("abc", "x^(2^(s+1)+2) + Ax + Bx^4 + Cx^16");
    abc->add_option("--n", n)->required();
    abc->add_option("--s", s)->required();
    abc->add_option("--A", A_s);
    abc->add_option("--B", B_s);
    abc->add_option("--C", C_s);
    abc->add_option("--poly", poly_flag);
    abc->add_option("--out", out);

    auto* search = app.add_subcommand("search", "exhaustive family search");
    search->require_subcommand(1);
    auto* search_abc_cmd = search->add_subcommand("abc", "search (A,B,C) space of the quartic family");
    SearchConfig cfg;
    cfg.jobs = default_jobs();
    bool no_verify = false;
    search_abc_cmd->add_option("--n", cfg.n);
    search_abc_cmd->add_option("--s", cfg.s);
    search_abc_cmd->add_option("--jobs", cfg.jobs);
    search_abc_cmd->add_flag("--no-verify-bct", no_verify);
    search_abc_cmd->add_option("--poly", poly_flag);
    search_abc_cmd->add_option("--out", out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*analyze) return cmd_analyze(file);
        if (*uniformity) return cmd_uniformity(file);
        if (*ddt_cmd) return cmd_ddt(file, out);
        if (*bct_cmd) return cmd_bct(file, method, out);
        if (*invert) return cmd_invert(file, out);
        if (*vq) return cmd_verify_qform(file, q);
        if (*vs) return cmd_verify_sums(file);
        if (*construct) {
            auto spec_for = [&](int nn) {
                auto p = parse_poly_flag(poly_flag);
                return p ? FieldSpec(nn, *p) : FieldSpec::with_default_poly(nn);
            };
            if (*gold) {
                emit(write_sbox_text(construct_gold(spec_for(n), t),
                                     "gold n=" + std::to_string(n) + " t=" + std::to_string(t)),
                     out);
                return 0;
            }
            if (*li) {
                Felt lambda = static_cast<Felt>(std::stoul(lambda_s, nullptr, 16));
                emit(write_sbox_text(construct_li(spec_for(n), lambda),
                                     "li n=" + std::to_string(n) + " lambda=0x" + lambda_s),
                     out);
                return 0;
            }
            if (*btt) {
                std::optional<Felt> beta;
                if (!beta_s.empty())
                    beta = static_cast<Felt>(std::stoul(beta_s, nullptr, 16));
                std::optional<FieldSpec> fspec;
                if (auto p = parse_poly_flag(poly_flag)) fspec = FieldSpec(3 * k, *p);
                emit(write_sbox_text(construct_btt(k, s, beta, fspec),
                                     "btt k=" + std::to_string(k) + " s=" + std::to_string(s)),
                     out);
                return 0;
            }
            if (*abc) {
                Felt A = static_cast<Felt>(std::stoul(A_s, nullptr, 16));
                Felt B = static_cast<Felt>(std::stoul(B_s, nullptr, 16));
                Felt C = static_cast<Felt>(std::stoul(C_s, nullptr, 16));
                emit(write_sbox_text(construct_abc(spec_for(n), s, A, B, C),
                                     "abc n=" + std::to_string(n) + " s=" + std::to_string(s) +
                                         " A=" + A_s + " B=" + B_s + " C=" + C_s),
                     out);
                return 0;
            }
        }
        if (*search_abc_cmd) {
            cfg.verify_bct = !no_verify;
            cfg.poly = parse_poly_flag(poly_flag);
            SearchResult res = search_abc(cfg);
            if (!res.truncated) res.classified = classify_witnesses(res);
            if (out.empty()) {
                search_report_write(res, std::cout);
            } else {
                std::ofstream ofs(out);
                if (!ofs) throw FormatError("cannot open " + out + " for writing");
                search_report_write(res, ofs);
            }
            bool ok = !cfg.verify_bct || (res.all_delta_4 && res.all_beta_4);
            return ok ? 0 : 1;
        }
    } catch (const FormatError& e) {
        std::cerr << "format error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
