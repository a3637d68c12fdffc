#include <doctest.h>
#include <json.hpp>

#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "umbral/sequences.hpp"

using json = nlohmann::json;

namespace {

struct Result {
  int status = -1;
  std::string out;
};

Result cli(const std::string& args, bool with_stderr = false) {
  const std::string command = std::string(UMBRAL_CLI) + " " + args + (with_stderr ? " 2>&1" : " 2>/dev/null");
  Result r;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST_CASE("laguerre json matches the library") {
  const auto r = cli("laguerre --n 3 --format json");
  REQUIRE(r.status == 0);
  const auto doc = json::parse(r.out);
  const auto expected = umbral::coefficient_strings(umbral::q_laguerre_closed(3));
  CHECK(doc.at("polys").back().get<std::vector<std::string>>() == expected);
  CHECK(doc.at("closed_form").get<std::vector<std::string>>() == expected);
  CHECK(doc.at("closed_form_matches").get<bool>());
  CHECK(doc.at("psi") == "qgauss");
}

TEST_CASE("basic sequence json schema") {
  const auto r = cli("basic --psi fibonacci --delta laguerre --N 4 --format json");
  REQUIRE(r.status == 0);
  const auto doc = json::parse(r.out);
  CHECK(doc.at("psi") == "fibonacci");
  CHECK(doc.at("Q").size() == 6);
  CHECK(doc.at("polys").size() == 5);
  const auto psi = umbral::PsiSequence::fibonacci();
  const auto b = umbral::basic_sequence(psi, umbral::delta::laguerre(5), 4);
  for (std::size_t n = 0; n <= 4; ++n)
    CHECK(doc.at("polys")[n].get<std::vector<std::string>>() == umbral::coefficient_strings(b.polys[n]));
}

TEST_CASE("table csv") {
  const auto r = cli("table --psi qgauss --N 3 --format csv");
  CHECK(r.status == 0);
  CHECK(r.out == "n,n_psi,n_psi_fact\n0,0,1\n1,1,1\n2,1+q,1+q\n3,1+q+q^2,1+2*q+2*q^2+q^3\n");
}

TEST_CASE("csv fields with commas are quoted") {
  const auto r = cli("verify --suite su2 --format csv");
  CHECK(r.status == 0);
  CHECK(r.out.find("\"j=1/2 q=0.5,0 tolerance=1e-10\"") != std::string::npos);
  CHECK(r.out.find("SKIP,polar_decomposition") != std::string::npos);
}

TEST_CASE("nogo verdicts") {
  const auto w = cli("nogo --psi fibonacci --n 3");
  CHECK(w.status == 0);
  CHECK(w.out.find("verdict: WITNESS") != std::string::npos);
  CHECK(w.out.find("b_0 = 1") != std::string::npos);
  const auto p = cli("nogo --psi qgauss --n 2 --format json");
  CHECK(p.status == 0);
  const auto doc = json::parse(p.out);
  CHECK(doc.at("verdict") == "PASS");
  CHECK(doc.at("lhs") == doc.at("rhs"));
  CHECK(doc.at("lhs")[1][1] == "1+q");
}

TEST_CASE("expand reports exact reconstruction") {
  const auto r = cli("expand --psi qgauss --operator q-scaling --N 6 --format json");
  REQUIRE(r.status == 0);
  const auto doc = json::parse(r.out);
  CHECK(doc.at("reconstruction_exact").get<bool>());
  CHECK(doc.at("coeffs")[1] == json::array({"0", "-1+q"}));
  const auto x = cli("expand --operator x-d --N 5 --format json");
  CHECK(json::parse(x.out).at("coeffs")[1] == json::array({"0", "1"}));
}

TEST_CASE("numeric commands") {
  const auto s = cli("spin --j 1 --q 2 --format json");
  REQUIRE(s.status == 0);
  const auto doc = json::parse(s.out);
  CHECK(doc.at("reports").size() == 2);
  CHECK(doc.at("reports")[0].at("pass").get<bool>());
  CHECK(doc.at("reports")[1].at("convention").contains("U"));
  CHECK(doc.at("Jplus")[0][1][0].get<double>() == doctest::Approx(std::sqrt(2.0 + 0.5)));
  const auto u = cli("spin --j 3/2");
  CHECK(u.status == 0);
  const auto w = cli("weyl --n 4 --format json");
  REQUIRE(w.status == 0);
  const auto wd = json::parse(w.out);
  CHECK(wd.at("report").at("pass").get<bool>());
  CHECK(wd.at("report").at("residuals").contains("info: P diag - printed 0"));
  CHECK(cli("spin --j 6 --q 0.9009688679024191,0.4338837391175581").out.find("SKIP polar_decomposition: degenerate representation") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  CHECK(cli("table --psi nope").status == 2);
  CHECK(cli("table --psi nope", true).out.find("classic, qgauss, fibonacci, square") != std::string::npos);
  CHECK(cli("").status == 2);
  CHECK(cli("table --format xml").status == 2);
  CHECK(cli("weyl --n 1").status == 2);
  CHECK(cli("spin --j 0").status == 2);
  CHECK(cli("spin --j 1 --q 1").status == 2);
  CHECK(cli("spin --j 1 --q abc").status == 2);
  CHECK(cli("sheffer --S laguerre --alpha x").status == 2);
  CHECK(cli("basic --delta abel --a 1/0").status == 2);
  CHECK(cli("--help").status == 0);
}

TEST_CASE("custom psi files") {
  const auto good = temp_file("umbral_psi_good.json", R"j({"name": "halves", "values": ["1", "1/2", "1/8", "1/48", "1/384"]})j");
  const auto r = cli("table --psi " + good.string() + " --N 4 --format csv");
  CHECK(r.status == 0);
  CHECK(r.out.find("2,4,8") != std::string::npos);
  const auto arr = temp_file("umbral_psi_array.json", R"j(["1", "1/(1+q)"])j");
  CHECK(cli("table --psi " + arr.string() + " --N 1").status == 0);
  CHECK(cli("table --psi " + arr.string() + " --N 3").status == 2);
  const auto bad = temp_file("umbral_psi_bad.json", R"j(["2", "1"])j");
  CHECK(cli("table --psi " + bad.string() + " --N 1").status == 2);
  const auto junk = temp_file("umbral_psi_junk.json", "{not json");
  CHECK(cli("table --psi " + junk.string()).status == 2);
  const auto zero = temp_file("umbral_psi_zero.json", R"j(["1", "q-q"])j");
  CHECK(cli("table --psi " + zero.string() + " --N 1").status == 2);
}

TEST_CASE("output is deterministic") {
  for (const char* args : {"verify --suite plane --N 6 --format json", "basic --psi square --delta abel --N 5",
                           "sheffer --S exp-d2 --N 6 --format csv"}) {
    const auto a = cli(args);
    const auto b = cli(args);
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("verify suite passes") {
  const auto r = cli("verify --suite all --N 8");
  CHECK(r.status == 0);
  CHECK(r.out.find("0 failed") != std::string::npos);
  CHECK(r.out.find("SKIP polar_decomposition j=6 q=exp(i pi/7): degenerate representation") != std::string::npos);
}
