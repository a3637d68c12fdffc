#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "umbral/plane.hpp"
#include "umbral/sequences.hpp"
#include "umbral/su2q.hpp"

using namespace umbral;
using json = nlohmann::ordered_json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string psi = "qgauss";
  std::size_t big_n = 8;
  std::size_t n = 3;
  std::string j = "1/2";
  std::string q;
  std::string alpha = "-1";
  std::string format = "text";
  double tolerance = 1e-10;
  std::string suite = "all";
  std::string delta = "d";
  std::string a = "1";
  std::string s = "one-minus-d";
  std::string method = "solve";
  std::string op = "q-scaling";
};

// ---------------------------------------------------------------- parsing

PsiSequence load_psi(const std::string& source, std::size_t needed) {
  const auto& names = PsiSequence::builtin_names();
  if (std::find(names.begin(), names.end(), source) != names.end())
    return PsiSequence::builtin(source, std::max(PsiSequence::kDefaultMax, needed));
  std::string listing;
  for (const auto& n : names) listing += (listing.empty() ? "" : ", ") + n;
  if (!std::filesystem::is_regular_file(source))
    throw UsageError("unknown psi '" + source + "' (built-ins: " + listing + "; or a JSON file of values)");
  try {
    std::ifstream in(source);
    const json doc = json::parse(in);
    const json& values = doc.is_object() ? doc.at("values") : doc;
    if (!values.is_array()) throw std::invalid_argument("expected an array of strings");
    std::vector<RationalFunction> v;
    for (const auto& e : values) {
      if (!e.is_string()) throw std::invalid_argument("entries must be strings");
      v.push_back(parse_rational_function(e.get<std::string>()));
    }
    std::string name = doc.is_object() && doc.contains("name") ? doc.at("name").get<std::string>()
                                                               : std::filesystem::path(source).stem().string();
    auto psi = PsiSequence::custom(std::move(name), std::move(v));
    if (psi.n_max() < needed)
      throw std::invalid_argument("needs psi_0 .. psi_" + std::to_string(needed) + ", file has " +
                                  std::to_string(psi.n_max() + 1) + " values");
    return psi;
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception& e) {
    throw UsageError("malformed psi file '" + source + "': " + e.what());
  }
}

std::optional<Complex> parse_q(const std::string& text) {
  if (text.empty() || text == "none") return std::nullopt;
  try {
    std::size_t used = 0;
    const auto comma = text.find(',');
    const double re = std::stod(text.substr(0, comma), &used);
    if (used != (comma == std::string::npos ? text.size() : comma)) throw std::invalid_argument("");
    double im = 0.0;
    if (comma != std::string::npos) {
      const std::string rest = text.substr(comma + 1);
      im = std::stod(rest, &used);
      if (used != rest.size()) throw std::invalid_argument("");
    }
    return Complex(re, im);
  } catch (const std::logic_error&) {
    throw UsageError("invalid --q '" + text + "': expected re or re,im");
  }
}

BigRational parse_rational(const std::string& text, const char* flag) {
  try {
    BigRational r(text);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw UsageError(std::string("invalid ") + flag + " '" + text + "': expected an integer or fraction");
  }
}

RationalFunction parse_scalar(const std::string& text, const char* flag) {
  try {
    return parse_rational_function(text);
  } catch (const std::exception& e) {
    throw UsageError(std::string("invalid ") + flag + " '" + text + "': " + e.what());
  }
}

DeltaOperator make_delta(const Options& o, const PsiSequence& psi, std::size_t order) {
  if (o.delta == "d") return delta::partial(order);
  if (o.delta == "laguerre") return delta::laguerre(order);
  if (o.delta == "d-plus-d2") return delta::partial_plus_square(order);
  return delta::abel(psi, parse_scalar(o.a, "--a"), order);
}

std::string delta_label(const Options& o) {
  if (o.delta == "d") return "D";
  if (o.delta == "laguerre") return "D/(D-1)";
  if (o.delta == "d-plus-d2") return "D(1+D)";
  return "D E^a(D), a = " + o.a;
}

OperatorSeries make_s(const Options& o, const PsiSequence& psi, std::size_t order) {
  if (o.s == "one") return OperatorSeries::identity(order);
  if (o.s == "one-minus-d") return laguerre_order_S(0, order);
  if (o.s == "exp-d2") return exp_psi_square(psi, order);
  return laguerre_order_S(parse_rational(o.alpha, "--alpha"), order);
}

// --------------------------------------------------------------- rendering

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void csv_row(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) out << (i ? "," : "") << csv_field(fields[i]);
  out << "\n";
}

json series_json(const OperatorSeries& s) {
  json a = json::array();
  for (const auto& c : s.coeffs()) a.push_back(c.to_string());
  return a;
}

json poly_json(const Poly& p) {
  json a = json::array();
  for (const auto& c : coefficient_strings(p)) a.push_back(c);
  return a;
}

json table_json(const BiPoly& p) {
  json a = json::array();
  for (const auto& row : coefficient_table(p)) a.push_back(row);
  return a;
}

json matrix_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.dim(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.dim(); ++c) row.push_back(json::array({m(r, c).real(), m(r, c).imag()}));
    rows.push_back(row);
  }
  return rows;
}

json report_json(const CheckReport& r) {
  json out;
  out["check"] = r.check;
  out["params"] = r.params;
  out["residuals"] = r.residuals;
  out["convention"] = r.convention;
  out["pass"] = r.pass;
  return out;
}

std::string fmt_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

void print_report_text(std::ostream& out, const CheckReport& r) {
  out << (r.pass ? "PASS " : "FAIL ") << r.check;
  for (const auto& [k, v] : r.params) out << " " << k << "=" << v;
  out << "\n";
  for (const auto& [k, v] : r.residuals) out << "  residual " << k << ": " << fmt_double(v) << "\n";
  for (const auto& [k, v] : r.convention) out << "  convention " << k << ": " << v << "\n";
}

void print_bivariate_text(std::ostream& out, const std::string& label, const BiPoly& p) {
  out << label << " (rows: x-degree, columns: y-degree)\n";
  const auto table = coefficient_table(p);
  if (table.empty()) out << "  0\n";
  for (std::size_t i = 0; i < table.size(); ++i) {
    out << "  x^" << i << ":";
    for (const auto& c : table[i]) out << " " << c;
    out << "\n";
  }
}

void print_polys(std::ostream& out, const Options& o, json header, const std::vector<Poly>& polys, char name) {
  if (o.format == "json") {
    json list = json::array();
    for (const auto& p : polys) list.push_back(poly_json(p));
    header["polys"] = list;
    out << header.dump(2) << "\n";
  } else if (o.format == "csv") {
    csv_row(out, {"n", "k", "coefficient"});
    for (std::size_t n = 0; n < polys.size(); ++n) {
      const auto c = coefficient_strings(polys[n]);
      for (std::size_t k = 0; k < c.size(); ++k) csv_row(out, {std::to_string(n), std::to_string(k), c[k]});
    }
  } else {
    for (const auto& [k, v] : header.items()) out << "# " << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    for (std::size_t n = 0; n < polys.size(); ++n) out << name << "_" << n << "(x) = " << to_string(polys[n]) << "\n";
  }
}

// ---------------------------------------------------------------- commands

int cmd_table(const Options& o, std::ostream& out) {
  const auto psi = load_psi(o.psi, o.big_n);
  if (o.format == "json") {
    json rows = json::array();
    for (std::size_t n = 0; n <= o.big_n; ++n)
      rows.push_back({{"n", n}, {"n_psi", psi.number(n).to_string()}, {"n_psi_fact", psi.factorial(n).to_string()}});
    out << json({{"psi", psi.name()}, {"rows", rows}}).dump(2) << "\n";
  } else if (o.format == "csv") {
    csv_row(out, {"n", "n_psi", "n_psi_fact"});
    for (std::size_t n = 0; n <= o.big_n; ++n)
      csv_row(out, {std::to_string(n), psi.number(n).to_string(), psi.factorial(n).to_string()});
  } else {
    out << "# psi: " << psi.name() << "\n";
    for (std::size_t n = 0; n <= o.big_n; ++n)
      out << "n=" << n << "  n_psi=" << psi.number(n).to_string() << "  n_psi!=" << psi.factorial(n).to_string() << "\n";
  }
  return 0;
}

std::size_t order_for(const Options& o) { return o.big_n + 1; }

int cmd_basic(const Options& o, std::ostream& out) {
  const auto psi = load_psi(o.psi, o.big_n + 1);
  const auto method = parse_basic_method(o.method);
  const auto dq = make_delta(o, psi, order_for(o));
  const auto b = basic_sequence(psi, dq, o.big_n, method);
  json header = {{"psi", psi.name()}, {"Q", series_json(dq.series())}};
  if (o.format == "text") header = {{"psi", psi.name()}, {"Q", delta_label(o)}, {"method", std::string(to_string(method))}};
  print_polys(out, o, header, b.polys, 'p');
  return 0;
}

int cmd_sheffer(const Options& o, std::ostream& out) {
  const auto psi = load_psi(o.psi, o.big_n + 1);
  const auto dq = make_delta(o, psi, order_for(o));
  const auto s = make_s(o, psi, o.big_n);
  const auto sh = sheffer_sequence(psi, dq, s, o.big_n);
  json header = {{"psi", psi.name()}, {"Q", series_json(dq.series())}, {"S", series_json(s)}};
  if (o.format == "text") header = {{"psi", psi.name()}, {"Q", delta_label(o)}, {"S", o.s}};
  print_polys(out, o, header, sh.polys, 's');
  return 0;
}

int cmd_laguerre(const Options& o, std::ostream& out) {
  const auto psi = load_psi(o.psi, o.n + 1);
  const BigRational alpha = parse_rational(o.alpha, "--alpha");
  const auto dq = delta::laguerre(o.n + 1);
  const auto s = laguerre_order_S(alpha, o.n);
  const auto polys = sheffer_sequence(psi, dq, s, o.n).polys;
  int code = 0;
  json header = {{"psi", psi.name()}, {"Q", series_json(dq.series())}, {"S", series_json(s)}, {"alpha", alpha.get_str()}};
  if (alpha == -1) {
    const Poly closed = laguerre_closed(psi, o.n);
    header["closed_form"] = poly_json(closed);
    const bool match = closed == polys.back();
    header["closed_form_matches"] = match;
    if (!match) code = 1;
  }
  if (o.format == "text") {
    header.erase("Q");
    header.erase("S");
    header["Q"] = "D/(D-1)";
    header["S"] = "(1-D)^(alpha+1)";
    if (header.contains("closed_form")) header["closed_form"] = to_string(laguerre_closed(psi, o.n));
  }
  print_polys(out, o, header, polys, 'L');
  return code;
}

int cmd_expand(const Options& o, std::ostream& out) {
  const auto psi = load_psi(o.psi, o.big_n + 1);
  const auto dq = make_delta(o, psi, order_for(o));
  std::function<Poly(const Poly&)> action;
  if (o.op == "identity") {
    action = [](const Poly& p) { return p; };
  } else if (o.op == "q-scaling") {
    action = [](const Poly& p) {
      std::vector<RationalFunction> c(p.coeffs().begin(), p.coeffs().end());
      for (std::size_t k = 0; k < c.size(); ++k) c[k] *= RationalFunction::q().pow(static_cast<long>(k));
      return Poly(std::move(c));
    };
  } else {
    action = [&](const Poly& p) { return apply_partial_psi(psi, p).shifted(1); };
  }
  const auto t = OperatorMatrix::from_action(o.big_n, action);
  const auto e = expand_operator(psi, t, dq);
  const bool exact = reconstruct_operator(psi, e, dq, o.big_n) == t;
  if (o.format == "json") {
    json coeffs = json::array();
    for (const auto& c : e.coeffs) coeffs.push_back(poly_json(c));
    out << json({{"psi", psi.name()},
                 {"Q", series_json(dq.series())},
                 {"operator", o.op},
                 {"N", o.big_n},
                 {"coeffs", coeffs},
                 {"reconstruction_exact", exact}})
               .dump(2)
        << "\n";
  } else if (o.format == "csv") {
    csv_row(out, {"n", "k", "coefficient"});
    for (std::size_t n = 0; n < e.coeffs.size(); ++n) {
      const auto c = coefficient_strings(e.coeffs[n]);
      for (std::size_t k = 0; k < c.size(); ++k) csv_row(out, {std::to_string(n), std::to_string(k), c[k]});
    }
  } else {
    out << "# psi: " << psi.name() << "\n# Q: " << delta_label(o) << "\n# operator: " << o.op << "\n";
    out << "# T = sum_n q_n(xhat_Q) Q^n on degrees <= " << o.big_n << "\n";
    for (std::size_t n = 0; n < e.coeffs.size(); ++n) out << "q_" << n << "(t) = " << to_string(e.coeffs[n], 't') << "\n";
    out << "reconstruction: " << (exact ? "exact" : "MISMATCH") << "\n";
  }
  return exact ? 0 : 1;
}

int cmd_nogo(const Options& o, std::ostream& out) {
  const auto psi = load_psi(o.psi, o.n + 1);
  const auto r = binomial_nogo(psi, o.n);
  const bool q_case = psi.name() == "qgauss";
  std::string verdict = r.holds() ? "PASS" : (q_case ? "FAIL" : "WITNESS");
  const std::string convention = "b_0 = 1 (empty product; the printed b_0 = 0 would force b = 0)";
  if (o.format == "json") {
    out << json({{"check", "binomial_nogo"},
                 {"psi", psi.name()},
                 {"n", o.n},
                 {"lhs", table_json(r.lhs)},
                 {"rhs", table_json(r.rhs)},
                 {"residual", table_json(r.residual)},
                 {"convention", {{"b", convention}, {"tables", "rows: x-degree, columns: y-degree"}}},
                 {"verdict", verdict}})
               .dump(2)
        << "\n";
  } else {
    out << "# psi: " << psi.name() << ", n = " << o.n << "\n# convention: " << convention << "\n";
    print_bivariate_text(out, "lhs (A+B)^n 1", r.lhs);
    print_bivariate_text(out, "rhs sum_k C(n,k)_psi A^k B^(n-k) 1", r.rhs);
    print_bivariate_text(out, "residual", r.residual);
    out << "verdict: " << verdict << "\n";
  }
  return verdict == "FAIL" ? 1 : 0;
}

int cmd_spin(const Options& o, std::ostream& out) {
  Spin j = Spin::from_twice(1);
  try {
    j = Spin::parse(o.j);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const auto q = parse_q(o.q);
  SpinRep rep = [&] {
    try {
      return su2_build(j, q);
    } catch (const std::domain_error& e) {
      throw UsageError(std::string("invalid --q: ") + e.what());
    }
  }();
  std::vector<CheckReport> reports = {su2_report(rep, o.tolerance)};
  std::string skipped;
  try {
    reports.push_back(polar_report(rep, polar_decompose(rep), o.tolerance));
  } catch (const std::domain_error& e) {
    skipped = e.what();
  }
  const bool pass = std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.pass; });
  if (o.format == "json") {
    json rs = json::array();
    for (const auto& r : reports) rs.push_back(report_json(r));
    json doc = {{"j", j.to_string()},
                {"q", q ? json::array({q->real(), q->imag()}) : json(nullptr)},
                {"J3", matrix_json(rep.j3)},
                {"Jplus", matrix_json(rep.jplus)},
                {"Jminus", matrix_json(rep.jminus)},
                {"reports", rs}};
    if (!skipped.empty()) doc["skipped"] = json::array({{{"check", "polar_decomposition"}, {"reason", skipped}}});
    out << doc.dump(2) << "\n";
  } else {
    for (const auto& r : reports) print_report_text(out, r);
    if (!skipped.empty()) out << "SKIP polar_decomposition: " << skipped << "\n";
  }
  return pass ? 0 : 1;
}

int cmd_weyl(const Options& o, std::ostream& out) {
  if (o.n < 2) throw UsageError("weyl needs --n >= 2");
  const auto w = weyl_build(o.n);
  const auto report = weyl_report(w, weyl_check(w), o.tolerance);
  if (o.format == "json") {
    out << json({{"n", o.n},
                 {"sigma1", matrix_json(w.sigma1)},
                 {"sigma2", matrix_json(w.sigma2)},
                 {"S", matrix_json(w.smat)},
                 {"P", matrix_json(w.pmat)},
                 {"report", report_json(report)}})
               .dump(2)
        << "\n";
  } else {
    print_report_text(out, report);
  }
  return report.pass ? 0 : 1;
}

// ------------------------------------------------------------------ verify

struct Skip {
  std::string check;
  std::map<std::string, std::string> params;
  std::string reason;
};

struct Verifier {
  std::vector<CheckReport> reports;
  std::vector<Skip> skipped;

  void exact(std::string check, std::map<std::string, std::string> params, std::size_t nonzero) {
    reports.push_back({std::move(check), std::move(params), {{"nonzero residuals", static_cast<double>(nonzero)}}, {}, nonzero == 0});
  }
};

const char* kGrid[] = {"classic", "qgauss", "fibonacci", "square"};
const char* kDeltas[] = {"d", "laguerre", "d-plus-d2", "abel"};

template <class Report>
std::size_t count_nonzero(const Report& r) {
  std::size_t k = 0;
  for (const auto& x : r.residuals) k += !x.is_zero_poly();
  return k;
}

void verify_sequences(Verifier& v, std::size_t n_top) {
  for (const char* name : kGrid) {
    const auto psi = PsiSequence::builtin(name, std::max(PsiSequence::kDefaultMax, n_top + 1));
    for (const char* d : kDeltas) {
      Options o;
      o.delta = d;
      const auto dq = make_delta(o, psi, n_top + 1);
      const std::map<std::string, std::string> params = {{"psi", name}, {"Q", delta_label(o)}, {"N", std::to_string(n_top)}};
      const auto reference = basic_sequence(psi, dq, n_top, BasicMethod::solve);
      std::size_t bad = 0;
      for (BasicMethod m : kAllBasicMethods) bad += basic_sequence(psi, dq, n_top, m).polys != reference.polys;
      v.exact("basic_methods_agree", params, bad);
      v.exact("binomial_type", params, count_nonzero(binomial_type_check(psi, reference)));
      v.exact("mutator", params, count_nonzero(qmutator_check(psi, dq, n_top)));
      for (const char* s : {"one-minus-d", "exp-d2", "laguerre"}) {
        Options so;
        so.s = s;
        so.alpha = "1";
        auto sp = params;
        sp["S"] = std::string(s) == "laguerre" ? "(1-D)^2" : s;
        v.exact("sheffer_binomial", sp, count_nonzero(sheffer_binomial_check(psi, dq, make_s(so, psi, n_top), n_top)));
      }
      for (const char* op : {"identity", "q-scaling", "x-d"}) {
        Options eo;
        eo.op = op;
        eo.big_n = n_top;
        eo.delta = d;
        std::ostringstream sink;
        eo.format = "json";
        eo.psi = name;
        auto ep = params;
        ep["operator"] = op;
        v.exact("expansion_roundtrip", ep, cmd_expand(eo, sink) == 0 ? 0 : 1);
      }
    }
  }
}

void verify_laguerre(Verifier& v, std::size_t n_top) {
  for (const char* name : {"classic", "qgauss", "fibonacci"}) {
    const auto psi = PsiSequence::builtin(name, std::max(PsiSequence::kDefaultMax, n_top));
    const auto solved = basic_sequence(psi, delta::laguerre(n_top), n_top);
    std::size_t bad = 0;
    for (std::size_t n = 0; n <= n_top; ++n) bad += laguerre_closed(psi, n) != solved.polys[n];
    v.exact("laguerre_closed_form", {{"psi", name}, {"N", std::to_string(n_top)}}, bad);
  }
}

void verify_pincherle(Verifier& v, std::size_t n_top) {
  for (const char* name : kGrid) {
    const auto psi = PsiSequence::builtin(name, std::max(PsiSequence::kDefaultMax, n_top + 2));
    const std::size_t order = n_top + 1;
    const std::vector<std::pair<std::string, OperatorSeries>> fs = {
        {"D", OperatorSeries::derivative(order)},
        {"D^2", OperatorSeries::derivative(order) * OperatorSeries::derivative(order)},
        {"D/(D-1)", delta::laguerre(order).series()},
        {"exp(D^2)", exp_psi_square(psi, order)},
        {"E^q(D)", translation_series(psi, RationalFunction::q(), order)}};
    for (const auto& [label, f] : fs)
      v.exact("pincherle", {{"psi", name}, {"f", label}, {"N", std::to_string(n_top)}},
              series_matrix(psi, f.pincherle(), n_top) == pincherle_matrix(psi, f, n_top) ? 0 : 1);
  }
}

void verify_plane(Verifier& v, std::size_t n_top) {
  for (const char* name : kGrid) {
    const auto psi = PsiSequence::builtin(name, std::max(PsiSequence::kDefaultMax, n_top + 1));
    v.exact("plane_commutation", {{"psi", name}, {"N", std::to_string(n_top)}}, count_nonzero(commutation_check(psi, n_top)));
  }
  const auto qg = PsiSequence::qgauss(std::max(PsiSequence::kDefaultMax, n_top + 1));
  std::size_t bad = 0;
  for (std::size_t n = 0; n <= n_top; ++n) {
    const auto r = binomial_nogo(qg, n);
    bad += !r.holds() || r.lhs != translation_apply(qg, Poly::monomial(RationalFunction(1), n));
  }
  v.exact("plane_q_binomial", {{"psi", "qgauss"}, {"N", std::to_string(n_top)}}, bad);
  for (const char* name : {"fibonacci", "square"}) {
    const auto w = first_nogo_witness(PsiSequence::builtin(name), 4);
    CheckReport r{"plane_nogo_witness", {{"psi", name}, {"n_limit", "4"}}, {}, {{"witness n", w ? std::to_string(*w) : "none"}}, w.has_value()};
    v.reports.push_back(std::move(r));
  }
}

void verify_su2(Verifier& v, double tol) {
  const std::vector<std::pair<std::string, std::optional<Complex>>> qs = {
      {"0.5", Complex(0.5)},
      {"1.5", Complex(1.5)},
      {"2", Complex(2.0)},
      {"exp(i pi/7)", std::polar(1.0, std::numbers::pi / 7)},
      {"exp(i pi/12)", std::polar(1.0, std::numbers::pi / 12)},
      {"undeformed", std::nullopt}};
  for (int twice = 1; twice <= 12; ++twice)
    for (const auto& [label, q] : qs) {
      const auto rep = su2_build(Spin::from_twice(twice), q);
      v.reports.push_back(su2_report(rep, tol));
      try {
        v.reports.push_back(polar_report(rep, polar_decompose(rep), tol));
      } catch (const std::domain_error& e) {
        v.skipped.push_back({"polar_decomposition", {{"j", rep.j.to_string()}, {"q", label}}, e.what()});
      }
    }
}

void verify_weyl(Verifier& v, double tol) {
  for (std::size_t n = 2; n <= 24; ++n) {
    const auto w = weyl_build(n);
    v.reports.push_back(weyl_report(w, weyl_check(w), tol));
  }
}

int cmd_verify(const Options& o, std::ostream& out) {
  Verifier v;
  const bool all = o.suite == "all";
  if (all || o.suite == "sequences") verify_sequences(v, o.big_n);
  if (all || o.suite == "laguerre") verify_laguerre(v, o.big_n);
  if (all || o.suite == "pincherle") verify_pincherle(v, o.big_n);
  if (all || o.suite == "plane") verify_plane(v, o.big_n);
  if (all || o.suite == "su2") verify_su2(v, o.tolerance);
  if (all || o.suite == "weyl") verify_weyl(v, o.tolerance);

  const auto failed = std::count_if(v.reports.begin(), v.reports.end(), [](const CheckReport& r) { return !r.pass; });
  if (o.format == "json") {
    json rs = json::array();
    for (const auto& r : v.reports) rs.push_back(report_json(r));
    json sk = json::array();
    for (const auto& s : v.skipped) sk.push_back({{"check", s.check}, {"params", s.params}, {"reason", s.reason}});
    out << json({{"suite", o.suite}, {"N", o.big_n}, {"results", rs}, {"skipped", sk}, {"pass", failed == 0}}).dump(2) << "\n";
  } else if (o.format == "csv") {
    csv_row(out, {"status", "check", "params", "detail"});
    for (const auto& r : v.reports) {
      std::string params, detail;
      for (const auto& [k, val] : r.params) params += (params.empty() ? "" : " ") + k + "=" + val;
      for (const auto& [k, val] : r.residuals) detail += (detail.empty() ? "" : " ") + k + "=" + fmt_double(val);
      csv_row(out, {r.pass ? "PASS" : "FAIL", r.check, params, detail});
    }
    for (const auto& s : v.skipped) {
      std::string params;
      for (const auto& [k, val] : s.params) params += (params.empty() ? "" : " ") + k + "=" + val;
      csv_row(out, {"SKIP", s.check, params, s.reason});
    }
  } else {
    for (const auto& r : v.reports) {
      out << (r.pass ? "PASS " : "FAIL ") << r.check;
      for (const auto& [k, val] : r.params) out << " " << k << "=" << val;
      if (!r.pass)
        for (const auto& [k, val] : r.residuals) out << " [" << k << " " << fmt_double(val) << "]";
      out << "\n";
    }
    for (const auto& s : v.skipped) {
      out << "SKIP " << s.check;
      for (const auto& [k, val] : s.params) out << " " << k << "=" << val;
      out << ": " << s.reason << "\n";
    }
    out << "verify " << o.suite << ": " << v.reports.size() - static_cast<std::size_t>(failed) << " passed, " << failed
        << " failed, " << v.skipped.size() << " skipped\n";
  }
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Operator calculus over psi-deformed derivatives, q-plane checks and su_q(2) numerics"};
  app.require_subcommand(1);
  Options o;

  auto fmt = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  };
  auto psi_opt = [&](CLI::App* sub) {
    sub->add_option("--psi", o.psi, "Built-in psi (classic, qgauss, fibonacci, square) or JSON file of values");
  };
  auto delta_opts = [&](CLI::App* sub) {
    sub->add_option("--delta", o.delta, "Delta operator")->check(CLI::IsMember({"d", "laguerre", "d-plus-d2", "abel"}));
    sub->add_option("--a", o.a, "Parameter a for --delta abel");
  };
  auto bign = [&](CLI::App* sub) { sub->add_option("--N", o.big_n, "Top degree")->check(CLI::Range(0, 24)); };

  auto* table = app.add_subcommand("table", "Deformed numbers and factorials");
  psi_opt(table), bign(table), fmt(table);

  auto* basic = app.add_subcommand("basic", "Basic polynomial sequence of a delta operator");
  psi_opt(basic), bign(basic), fmt(basic), delta_opts(basic);
  basic->add_option("--method", o.method, "Construction method")
      ->check(CLI::IsMember({"lagrange1", "lagrange2", "rodrigues3", "rodrigues4", "solve"}));

  auto* sheffer = app.add_subcommand("sheffer", "Sheffer sequence s_n = S^-1 p_n");
  psi_opt(sheffer), bign(sheffer), fmt(sheffer), delta_opts(sheffer);
  sheffer->add_option("--S", o.s, "Invertible series S")->check(CLI::IsMember({"one", "one-minus-d", "exp-d2", "laguerre"}));
  sheffer->add_option("--alpha", o.alpha, "Order alpha for --S laguerre, S = (1-D)^(alpha+1)");

  auto* laguerre = app.add_subcommand("laguerre", "Laguerre-type sequence of D/(D-1) with S = (1-D)^(alpha+1)");
  psi_opt(laguerre), fmt(laguerre);
  laguerre->add_option("--n", o.n, "Top index")->check(CLI::Range(0, 24));
  laguerre->add_option("--alpha", o.alpha, "Order alpha (default -1: the basic sequence)");

  auto* expand = app.add_subcommand("expand", "Expand an operator as sum q_n(xhat_Q) Q^n");
  psi_opt(expand), bign(expand), fmt(expand), delta_opts(expand);
  expand->add_option("--operator", o.op, "Operator to expand")->check(CLI::IsMember({"identity", "q-scaling", "x-d"}));

  auto* nogo = app.add_subcommand("nogo", "psi-binomial identity for the plane pair A = x, B = y Qhat");
  psi_opt(nogo), fmt(nogo);
  nogo->add_option("--n", o.n, "Power n")->check(CLI::Range(0, 24));

  auto* spin = app.add_subcommand("spin", "su_q(2) representation, commutators and polar decomposition");
  spin->add_option("--j", o.j, "Spin j, e.g. 1/2, 1, 3/2");
  spin->add_option("--q", o.q, "Deformation re[,im]; omit for undeformed");
  spin->add_option("--tolerance", o.tolerance, "Residual tolerance");
  fmt(spin);

  auto* weyl = app.add_subcommand("weyl", "Generalized Pauli pair and Sylvester matrix");
  weyl->add_option("--n", o.n, "Dimension n >= 2")->check(CLI::Range(2, 256));
  weyl->add_option("--tolerance", o.tolerance, "Residual tolerance");
  fmt(weyl);

  auto* verify = app.add_subcommand("verify", "Run identity suites");
  verify->add_option("--suite", o.suite, "Suite")
      ->check(CLI::IsMember({"all", "sequences", "laguerre", "pincherle", "plane", "su2", "weyl"}));
  bign(verify), fmt(verify);
  verify->add_option("--tolerance", o.tolerance, "Residual tolerance for numeric checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    auto* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    if (name == "table") return cmd_table(o, std::cout);
    if (name == "basic") return cmd_basic(o, std::cout);
    if (name == "sheffer") return cmd_sheffer(o, std::cout);
    if (name == "laguerre") return cmd_laguerre(o, std::cout);
    if (name == "expand") return cmd_expand(o, std::cout);
    if (name == "nogo") return cmd_nogo(o, std::cout);
    if (name == "spin") return cmd_spin(o, std::cout);
    if (name == "weyl") return cmd_weyl(o, std::cout);
    return cmd_verify(o, std::cout);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
