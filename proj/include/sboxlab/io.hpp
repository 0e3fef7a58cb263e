#pragma once

#include <stdexcept>
#include <string>

#include "sboxlab/sbox.hpp"

namespace sboxlab {

// Malformed Sbox file; message names the offending line.
struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Format: optional '#' comment lines anywhere; header `n=<int> poly=0x<hex>`
// (poly optional, defaulting per n); then 2^n whitespace-separated hex values
// in LUT order. Writer emits 16 lowercase values per line.
SBox parse_sbox_text(const std::string& text);
std::string write_sbox_text(const SBox& f, const std::string& comment = "");

SBox read_sbox_file(const std::string& path);
void write_sbox_file(const SBox& f, const std::string& path,
                     const std::string& comment = "");

}  // namespace sboxlab
