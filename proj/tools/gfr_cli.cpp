#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "gfr/io.hpp"

using namespace gfr;

namespace {
  // Missing or unreadable files are usage errors.
  struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
  };

  Json read_json(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw UsageError("cannot read " + path);
    }
    try {
      return Json::parse(in);
    } catch (Json::parse_error const& e) {
      throw DomainError(path + ": " + e.what());
    }
  }

  void write_text(std::string const& path, std::string const& text) {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream out(path);
    if (!out) {
      throw UsageError("cannot write " + path);
    }
    out << text;
  }

  std::string dump(Json const& j) {
    return j.dump(2) + "\n";
  }

  struct Options {
    std::string config;
    std::string out;
    std::string cert;
    std::string diagram;
    std::string mode = "eq23";
    std::string emit = "json";
    long long   bound = -1;
    std::size_t budget = 200;
    int         depth  = 3;

    std::string u1, u2, element, certificate;
  };

  Params load_params(Options const& o) {
    RawParams raw = desk_params().raw();
    if (!o.config.empty()) {
      std::ifstream in(o.config);
      if (!in) {
        throw UsageError("cannot read " + o.config);
      }
      raw = read_config(in, raw);
    }
    if (o.bound >= 0) {
      raw.w_exponent_bound = o.bound;
    }
    return Params::validate(raw);
  }
}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rewriting in Z₂F/⟨1+v+vw⟩"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--config", o.config, "key=value parameter file");
  app.add_option("--out", o.out, "output file (default: stdout)");
  app.add_option("--bound", o.bound, "override w_exponent_bound")->check(CLI::NonNegativeNumber);
  app.add_option("--emit", o.emit, "diagram format")->check(CLI::IsMember({"dot", "json"}));

  auto* params  = app.add_subcommand("params", "print the validated constants");
  auto* chart   = app.add_subcommand("chart", "chart, cover statistics and f of a word");
  auto* measure = app.add_subcommand("measure", "Λ of a word read as one GFP");
  auto* red     = app.add_subcommand("reduce", "λ-semicanonical form of an element file");
  auto* mul     = app.add_subcommand("multiply", "product of two S̃_λ words");
  auto* verify  = app.add_subcommand("verify", "check a certificate for an element");
  auto* derived = app.add_subcommand("derived", "derived monomials with f tags");
  auto* diagram = app.add_subcommand("diagram", "render a stored diagram");

  chart->add_option("word", o.u1, "word (v, V, w, W abbreviate)")->required();
  measure->add_option("word", o.u1)->required();
  red->add_option("element", o.element, "element file")->required();
  red->add_option("--cert", o.cert, "certificate output file");
  red->add_option("--mode", o.mode, "multi-turn family")->check(CLI::IsMember({"safe", "eq23"}));
  mul->add_option("u1", o.u1)->required();
  mul->add_option("u2", o.u2)->required();
  mul->add_option("--cert", o.cert, "certificate output file");
  mul->add_option("--diagram", o.diagram, "diagram output file");
  verify->add_option("element", o.element)->required();
  verify->add_option("certificate", o.certificate)->required();
  derived->add_option("word", o.u1)->required();
  derived->add_option("--budget", o.budget, "explored-node budget");
  derived->add_option("--depth", o.depth, "maximum derivation depth");
  diagram->add_option("file", o.diagram, "diagram JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    Params const p = load_params(o);

    if (params->parsed()) {
      write_text(o.out, dump(params_to_json(p)));
    } else if (chart->parsed()) {
      write_text(o.out, dump(chart_to_json(parse_tokens(o.u1, p), p)));
    } else if (measure->parsed()) {
      auto path = parse_gfp(parse_tokens(o.u1, p), p);
      if (!path) {
        throw DomainError("word is not a generalized fractional power");
      }
      write_text(o.out, p.format_measure(lambda_measure(*path, p)) + "\n");
    } else if (red->parsed()) {
      auto e = element_from_json(read_json(o.element), p);
      auto r = semicanonical_reduce(e, p, o.mode == "safe" ? ReduceMode::safe : ReduceMode::direct);
      write_text(o.out, dump(element_to_json(r.element, p)));
      if (!o.cert.empty()) {
        write_text(o.cert, dump(certificate_to_json(r.certificate, p)));
      }
    } else if (mul->parsed()) {
      auto r = multiply_mod_I(parse_tokens(o.u1, p), parse_tokens(o.u2, p), p);
      write_text(o.out, dump(element_to_json(r.element, p)));
      if (!o.cert.empty()) {
        write_text(o.cert, dump(certificate_to_json(r.certificate, p)));
      }
      if (!o.diagram.empty()) {
        write_text(o.diagram, o.emit == "dot" ? diagram_to_dot(r.diagram, p)
                                              : dump(diagram_to_json(r.diagram, p)));
      }
    } else if (verify->parsed()) {
      auto e  = element_from_json(read_json(o.element), p);
      auto c  = certificate_from_json(read_json(o.certificate), p);
      bool ok = check_certificate(e, c, p);
      write_text(o.out, ok ? "PASS\n" : "FAIL\n");
      return ok ? 0 : 1;
    } else if (derived->parsed()) {
      auto               s = derived_monomials(parse_tokens(o.u1, p), p, {o.budget, o.depth});
      std::ostringstream text;
      for (auto const& d : s.words) {
        text << "f=(" << d.f.n << "," << d.f.k << ") depth=" << d.depth << " "
             << (d.word.empty() ? "1" : p.format(d.word)) << "\n";
      }
      if (s.truncated) {
        text << "... truncated at " << o.budget << " nodes\n";
      }
      write_text(o.out, text.str());
    } else if (diagram->parsed()) {
      auto d = diagram_from_json(read_json(o.diagram), p);
      write_text(o.out, o.emit == "json" && app.count("--emit") != 0
                            ? dump(diagram_to_json(d, p))
                            : diagram_to_dot(d, p));
    }
  } catch (UsageError const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (DomainError const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
