#include "umbral/poly.hpp"

#include <algorithm>

namespace umbral {

BiPoly embed_x(const Poly& p) {
  std::vector<Poly> v;
  v.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) v.emplace_back(c);
  return BiPoly(std::move(v));
}

BiPoly embed_y(const Poly& p) { return BiPoly(p); }

RationalFunction coeff_xy(const BiPoly& p, std::size_t i, std::size_t j) { return p.coeff(i).coeff(j); }

Poly at_y_zero(const BiPoly& p) {
  std::vector<RationalFunction> v;
  v.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) v.push_back(c.coeff(0));
  return Poly(std::move(v));
}

std::vector<std::string> coefficient_strings(const Poly& p) {
  std::vector<std::string> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(c.to_string());
  return out;
}

std::vector<std::vector<std::string>> coefficient_table(const BiPoly& p) {
  std::size_t width = 0;
  for (const auto& row : p.coeffs()) width = std::max(width, row.coeffs().size());
  std::vector<std::vector<std::string>> out;
  for (const auto& row : p.coeffs()) {
    std::vector<std::string> r;
    for (std::size_t j = 0; j < width; ++j) r.push_back(row.coeff(j).to_string());
    out.push_back(std::move(r));
  }
  return out;
}

std::string to_string(const Poly& p, char var) {
  if (p.is_zero_poly()) return "0";
  // a coefficient needs parentheses unless it is a single signed term
  auto simple = [](const std::string& s) {
    return s.find_first_of("+-()", 1) == std::string::npos;
  };
  std::string out;
  for (std::size_t k = p.coeffs().size(); k-- > 0;) {
    const RationalFunction& c = p.coeffs()[k];
    if (c.is_zero()) continue;
    std::string s = c.to_string();
    bool negative = false;
    if (simple(s) && s[0] == '-') {
      negative = true;
      s.erase(0, 1);
    }
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const std::string mono = k == 0 ? "" : std::string(1, var) + (k > 1 ? "^" + std::to_string(k) : "");
    const std::string coef = simple(s) ? s : "(" + s + ")";
    if (k == 0) {
      out += coef;
    } else if (s == "1") {
      out += mono;
    } else {
      out += coef + "*" + mono;
    }
  }
  return out;
}

}  // namespace umbral
