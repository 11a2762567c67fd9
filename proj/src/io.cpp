#include "permpoly/io.hpp"

#include <charconv>
#include <stdexcept>

namespace permpoly {

std::string hex_str(uint64_t v) {
  char buf[18];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v, 16);
  (void)ec;
  return "0x" + std::string(buf, end);
}

uint64_t parse_hex_u64(const std::string& s) {
  size_t off = 0;
  if (s.size() >= 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) off = 2;
  if (off >= s.size()) throw std::invalid_argument("empty hex value: " + s);
  uint64_t v = 0;
  auto [ptr, ec] =
      std::from_chars(s.data() + off, s.data() + s.size(), v, 16);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw std::invalid_argument("bad hex value: " + s);
  return v;
}

FieldElement parse_element(const std::string& s, const FieldSpec& f) {
  uint64_t v = parse_hex_u64(s);
  if (v >= f.order)
    throw std::invalid_argument("element " + s + " outside the field");
  return (FieldElement)v;
}

std::string poly_spec_string(const SparsePoly& p) {
  if (p.terms.empty()) return "0";
  std::string out;
  for (auto it = p.terms.rbegin(); it != p.terms.rend(); ++it) {
    if (!out.empty()) out += ',';
    out += std::to_string(it->first);
    out += ':';
    out += hex_str(it->second).substr(2);  // coefficient without the 0x
  }
  return out;
}

SparsePoly parse_poly_spec(const std::string& s, const FieldSpec& f) {
  if (s == "0") return {};
  std::vector<std::pair<uint64_t, FieldElement>> raw;
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t comma = s.find(',', pos);
    if (comma == std::string::npos) comma = s.size();
    std::string term = s.substr(pos, comma - pos);
    size_t colon = term.find(':');
    if (term.empty() || colon == std::string::npos || colon == 0)
      throw std::invalid_argument("bad polynomial term: '" + term + "'");
    uint64_t e = 0;
    auto [ptr, ec] = std::from_chars(term.data(), term.data() + colon, e, 10);
    if (ec != std::errc() || ptr != term.data() + colon)
      throw std::invalid_argument("bad exponent in term: '" + term + "'");
    raw.emplace_back(e, parse_element(term.substr(colon + 1), f));
    pos = comma + 1;
  }
  return canonicalize(raw, f);
}

}  // namespace permpoly
