#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "gfr/io.hpp"

using namespace gfr;

namespace {
  Params const& desk = desk_params();

  struct Run {
    int         status = 0;
    std::string out;
  };

  Run cli(std::string const& args) {
    std::string cmd = std::string(GFR_CLI) + " " + args + " 2>/dev/null";
    Run         r;
    FILE*       f = popen(cmd.c_str(), "r");
    std::array<char, 4096> buf{};
    while (auto n = fread(buf.data(), 1, buf.size(), f)) {
      r.out.append(buf.data(), n);
    }
    r.status = WEXITSTATUS(pclose(f));
    return r;
  }

  std::filesystem::path scratch(std::string const& name) {
    auto dir = std::filesystem::temp_directory_path() / "gfr_io_test";
    std::filesystem::create_directories(dir);
    return dir / name;
  }

  void write(std::filesystem::path const& p, std::string const& text) {
    std::ofstream(p) << text;
  }

  std::string slurp(std::filesystem::path const& p) {
    std::ifstream in(p);
    return {std::istreambuf_iterator<char>(in), {}};
  }
}  // namespace

TEST(Tokens, abbreviations) {
  EXPECT_EQ(parse_tokens("v", desk), desk.v());
  EXPECT_EQ(parse_tokens("V", desk), invert(desk.v()));
  EXPECT_EQ(parse_tokens("z v W", desk), multiply(multiply(desk.parse("z"), desk.v()), desk.parse("TZ")));
  EXPECT_EQ(parse_tokens("1", desk), Word{});
  EXPECT_EQ(parse_tokens("vV", desk), Word{});
  EXPECT_THROW(parse_tokens("q", desk), DomainError);
}

TEST(ElementFile, round_trip_and_sorted) {
  RingElement e{desk.v(), Word{}, desk.parse("zt"), desk.parse("xY")};
  Json        j = element_to_json(e, desk);
  EXPECT_TRUE(std::is_sorted(j.begin(), j.end()));
  EXPECT_EQ(element_from_json(j, desk), e);
  EXPECT_EQ(element_from_json(Json::parse(j.dump()), desk), e);
  // duplicates cancel
  EXPECT_EQ(element_from_json(Json::array({"x", "x", "y"}), desk), RingElement{desk.parse("y")});
}

TEST(CertificateFile, round_trip) {
  Certificate c{{{Word{}, Word{}}, {invert(desk.v()), desk.v()}}};
  EXPECT_EQ(certificate_from_json(certificate_to_json(c, desk), desk), c);
  EXPECT_THROW(certificate_from_json(Json::array({"x"}), desk), DomainError);
}

TEST(ChartJson, v_has_one_member_of_full_measure) {
  Json j = chart_to_json(desk.v(), desk);
  ASSERT_EQ(j["members"].size(), 1u);
  EXPECT_EQ(j["members"][0]["measure"], "100/100");
  EXPECT_EQ(j["cover"]["n_min"], 1);
  EXPECT_EQ(j["cover"]["k_tau"], 1);
}

TEST(ParamsJson, desk_constants) {
  Json j = params_to_json(desk);
  EXPECT_EQ(j["epsilon"], "1/100");
  EXPECT_EQ(j["tau"], "10/100");
  EXPECT_EQ(j["v_length"], 5550);
}

TEST(DiagramJson, round_trip) {
  auto  out = multiply_mod_I(desk.parse("zx"), desk.parse("Xy"), desk);
  Json  j   = diagram_to_json(out.diagram, desk);
  auto  d   = diagram_from_json(j, desk);
  EXPECT_EQ(diagram_to_json(d, desk), j);
  std::string dot = diagram_to_dot(d, desk);
  EXPECT_NE(dot.find("doublecircle"), std::string::npos);
}

TEST(Cli, params_and_usage_errors) {
  auto r = cli("params");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(Json::parse(r.out)["lambda"], "2/3");
  EXPECT_EQ(cli("").status, 2);
  EXPECT_EQ(cli("frobnicate").status, 2);
  EXPECT_EQ(cli("reduce /nonexistent.json").status, 2);
}

TEST(Cli, chart_of_v) {
  auto r = cli("chart v");
  ASSERT_EQ(r.status, 0);
  auto j = Json::parse(r.out);
  EXPECT_EQ(j["members"].size(), 1u);
  EXPECT_EQ(j["members"][0]["measure"], "100/100");
}

TEST(Cli, domain_errors_exit_one) {
  EXPECT_EQ(cli("measure q").status, 1);
  EXPECT_EQ(cli("measure xyxyxyzz").status, 1);
  EXPECT_EQ(cli("multiply V 1").status, 1);
  auto cfg = scratch("bad.cfg");
  write(cfg, "alpha = 0\n");
  EXPECT_EQ(cli("--config " + cfg.string() + " params").status, 1);
}

TEST(Cli, reduce_inverse_v_and_verify) {
  auto in   = scratch("inv.json");
  auto out  = scratch("inv.out.json");
  auto cert = scratch("inv.cert.json");
  write(in, R"(["V"])");
  auto r = cli("--out " + out.string() + " reduce " + in.string() + " --cert " + cert.string());
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(Json::parse(slurp(out)), Json::array({"", "zt"}));
  // the certificate is for input + output
  auto sum = scratch("inv.sum.json");
  write(sum, R"(["V", "", "zt"])");
  auto v = cli("verify " + sum.string() + " " + cert.string());
  EXPECT_EQ(v.status, 0);
  EXPECT_EQ(v.out, "PASS\n");
  // determinism
  auto again = scratch("inv.again.json");
  cli("--out " + again.string() + " reduce " + in.string());
  EXPECT_EQ(slurp(again), slurp(out));
  // round trip
  EXPECT_EQ(element_from_json(Json::parse(slurp(out)), desk), (RingElement{Word{}, desk.w()}));
}

TEST(Cli, verify_generator) {
  auto e = scratch("gen.json");
  auto c = scratch("gen.cert.json");
  write(e, R"(["1", "v", "vw"])");
  write(c, R"([["", ""]])");
  auto r = cli("verify " + e.string() + " " + c.string());
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "PASS\n");
  write(c, R"([["", "z"]])");
  r = cli("verify " + e.string() + " " + c.string());
  EXPECT_EQ(r.status, 1);
  EXPECT_EQ(r.out, "FAIL\n");
}

TEST(Cli, multiply_and_diagram) {
  auto cert = scratch("mul.cert.json");
  auto dia  = scratch("mul.diagram.json");
  auto r    = cli("multiply vw 1 --cert " + cert.string() + " --diagram " + dia.string());
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(element_from_json(Json::parse(r.out), desk),
            RingElement{multiply(desk.v(), desk.w())});
  auto dot = cli("diagram " + dia.string());
  EXPECT_EQ(dot.status, 0);
  EXPECT_EQ(dot.out.rfind("digraph", 0), 0u);
}

TEST(Cli, derived_stream) {
  auto r = cli("derived xyzt");
  ASSERT_EQ(r.status, 0);
  auto f = f_char(desk.parse("xyzt"), desk);
  EXPECT_EQ(r.out, "f=(" + std::to_string(f.n) + "," + std::to_string(f.k) + ") depth=0 xyzt\n");
}
