#include "sboxlab/io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

namespace sboxlab {

namespace {

[[noreturn]] void fail(int lineno, const std::string& what) {
    throw FormatError("line " + std::to_string(lineno) + ": " + what);
}

}  // namespace

SBox parse_sbox_text(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    int lineno = 0;

    int n = -1;
    std::uint32_t poly = 0;
    bool have_poly = false;
    // Header: first non-comment, non-blank line.
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) {
            if (tok.rfind("n=", 0) == 0) {
                try { n = std::stoi(tok.substr(2)); }
                catch (const std::exception&) { fail(lineno, "bad n value"); }
            } else if (tok.rfind("poly=0x", 0) == 0 || tok.rfind("poly=0X", 0) == 0) {
                try {
                    poly = static_cast<std::uint32_t>(std::stoul(tok.substr(7), nullptr, 16));
                    have_poly = true;
                } catch (const std::exception&) { fail(lineno, "bad poly value"); }
            } else {
                fail(lineno, "unexpected header token '" + tok + "'");
            }
        }
        break;
    }
    if (n < 1 || n > 16) fail(lineno, "header must give n in [1, 16]");
    if (!have_poly) poly = default_reduction_poly(n);

    FieldSpec spec = [&] {
        try { return FieldSpec(n, poly); }
        catch (const std::domain_error& e) { fail(lineno, e.what()); }
    }();

    std::vector<Felt> lut;
    std::uint32_t sz = spec.order();
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) {
            std::uint32_t v;
            std::size_t used = 0;
            try { v = static_cast<std::uint32_t>(std::stoul(tok, &used, 16)); }
            catch (const std::exception&) { fail(lineno, "bad hex value '" + tok + "'"); }
            if (used != tok.size()) fail(lineno, "bad hex value '" + tok + "'");
            if (v >= sz) fail(lineno, "value '" + tok + "' out of range for n=" + std::to_string(n));
            if (lut.size() == sz) fail(lineno, "more than 2^n values");
            lut.push_back(v);
        }
    }
    if (lut.size() != sz)
        throw FormatError("expected " + std::to_string(sz) + " values, got " +
                          std::to_string(lut.size()));
    return SBox(spec, std::move(lut));
}

std::string write_sbox_text(const SBox& f, const std::string& comment) {
    std::ostringstream os;
    if (!comment.empty()) os << "# " << comment << "\n";
    os << "n=" << f.spec.n << " poly=0x" << std::hex << f.spec.poly << "\n";
    for (std::uint32_t i = 0; i < f.size(); ++i) {
        os << std::hex << f.lut[i];
        os << ((i % 16 == 15 || i + 1 == f.size()) ? '\n' : ' ');
    }
    return os.str();
}

SBox read_sbox_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_sbox_text(ss.str());
}

void write_sbox_file(const SBox& f, const std::string& path, const std::string& comment) {
    std::ofstream out(path);
    if (!out) throw FormatError("cannot open " + path + " for writing");
    out << write_sbox_text(f, comment);
}

}  // namespace sboxlab
