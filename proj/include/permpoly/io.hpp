#pragma once
// Text encodings shared by the CLI and the report writers: lowercase 0x-hex
// for field elements and moduli, and the "EXP:COEF[,EXP:COEF...]" sparse
// polynomial format (exponents decimal, coefficients hex). The zero
// polynomial prints and parses as "0".

#include <cstdint>
#include <string>

#include "permpoly/field.hpp"
#include "permpoly/poly.hpp"

namespace permpoly {

std::string hex_str(uint64_t v);

// Accepts an optional 0x/0X prefix; whole string must be hex digits.
uint64_t parse_hex_u64(const std::string& s);

// parse_hex_u64 plus a range check against the field size.
FieldElement parse_element(const std::string& s, const FieldSpec& f);

// Descending-exponent print of a canonical polynomial; inverse of parse.
std::string poly_spec_string(const SparsePoly& p);
SparsePoly parse_poly_spec(const std::string& s, const FieldSpec& f);

}  // namespace permpoly
