#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "scg/harish_chandra.hpp"
#include "scg/omega.hpp"
#include "scg/parser.hpp"
#include "scg/pbw.hpp"
#include "scg/scasimir.hpp"
#include "scg/serialize.hpp"
#include "scg/verify.hpp"

namespace {

enum class Format { Text, Json, Latex };

struct Output {
  std::ostringstream buffer;
  std::string path;

  // Emits everything at once, to --out if given.
  void flush() {
    if (path.empty()) {
      std::cout << buffer.str() << std::flush;
      return;
    }
    std::ofstream file(path);
    if (!file) throw scg::Error("cannot write " + path);
    file << buffer.str();
  }
};

struct Usage : scg::Error {
  using scg::Error::Error;
};

int cmd_coeffs(int n, const std::string& route, Format fmt, Output& out) {
  if (n < 1) throw Usage("--n must be at least 1");
  std::vector<scg::CoeffTable> tables;
  if (route == "all") {
    for (auto r : {scg::CoeffRoute::RecursionA, scg::CoeffRoute::RecursionB, scg::CoeffRoute::Series})
      tables.push_back(scg::coeffs(n, r));
  } else {
    tables.push_back(scg::coeffs(n, scg::route_from_string(route)));
  }
  bool agree = true;
  for (const auto& t : tables) agree = agree && t.x == tables.front().x && t.y == tables.front().y;

  if (fmt == Format::Json) {
    scg::Json j = scg::Json::array();
    for (const auto& t : tables) j.push_back(scg::to_json(t));
    out.buffer << scg::Json{{"tables", j}, {"agree", agree}}.dump(2) << "\n";
  } else if (fmt == Format::Latex) {
    std::vector<std::string> eqs;
    for (const auto& t : tables) eqs.push_back(scg::to_latex(t));
    out.buffer << scg::latex_document(eqs);
  } else {
    for (const auto& t : tables) out.buffer << scg::to_text(t);
    if (tables.size() > 1) out.buffer << (agree ? "routes agree\n" : "ROUTES DISAGREE\n");
  }
  return agree ? 0 : 1;
}

int cmd_scasimir(int n, bool pbw, Format fmt, Output& out) {
  if (n < 1) throw Usage("--n must be at least 1");
  scg::OmegaElement sc = scg::scasimir(n);
  if (!pbw) {
    if (fmt == Format::Json) out.buffer << scg::to_json(sc).dump(2) << "\n";
    else if (fmt == Format::Latex) out.buffer << scg::latex_document({"\\mathrm{Sc} = " + scg::to_latex(sc)});
    else out.buffer << scg::to_text(sc) << "\n";
    return 0;
  }
  scg::OmegaSpace space(n);
  scg::Element x = space.expand(sc);
  if (fmt == Format::Json) out.buffer << scg::to_json(x).dump(2) << "\n";
  else if (fmt == Format::Latex) out.buffer << scg::latex_document({"\\mathrm{Sc} = " + scg::to_latex(x)});
  else out.buffer << scg::render(x) << "\n";
  return 0;
}

int cmd_normal_order(int n, const std::string& order, const std::string& expr, Format fmt, Output& out) {
  if (n < 1) throw Usage("--n must be at least 1");
  scg::Element x = scg::parse(expr, n);
  scg::Element y = scg::normal_order(x, scg::GeneratorOrder::by_name(n, order));
  if (fmt == Format::Json) out.buffer << scg::to_json(y).dump(2) << "\n";
  else if (fmt == Format::Latex) out.buffer << scg::latex_document({scg::to_latex(y)});
  else out.buffer << scg::render(y) << "\n";
  return 0;
}

int cmd_hwv(int n, Format fmt, Output& out) {
  if (n < 1) throw Usage("--n must be at least 1");
  scg::OmegaSpace space(n);
  auto vs = space.highest_weight_vectors();
  std::vector<std::size_t> dims;
  for (const auto& v : vs) dims.push_back(space.submodule_dimension(v.vector));
  if (fmt == Format::Json) {
    scg::Json j = scg::Json::array();
    for (std::size_t i = 0; i < vs.size(); ++i) {
      scg::Json e = scg::to_json(vs[i]);
      e["dimension"] = dims[i];
      j.push_back(e);
    }
    out.buffer << j.dump(2) << "\n";
  } else if (fmt == Format::Latex) {
    std::vector<std::string> eqs;
    for (std::size_t i = 0; i < vs.size(); ++i) eqs.push_back("v_{" + std::to_string(i) + "} = " + scg::to_latex(vs[i].vector));
    out.buffer << scg::latex_document(eqs);
  } else {
    for (std::size_t i = 0; i < vs.size(); ++i) {
      out.buffer << "weight (";
      for (std::size_t k = 0; k < vs[i].weight.size(); ++k) out.buffer << (k ? "," : "") << scg::to_string(vs[i].weight[k]);
      out.buffer << ")  dim " << dims[i] << "  " << scg::to_text(vs[i].vector) << "\n";
    }
  }
  return 0;
}

int cmd_hc(int n, const std::string& order, bool square, const std::string& expr, Format fmt, Output& out) {
  if (n < 1) throw Usage("--n must be at least 1");
  auto ord = scg::GeneratorOrder::by_name(n, order);
  if (ord.name() == "standard") throw Usage("hc needs a Borel order");
  scg::Element x(n);
  if (!expr.empty()) {
    x = scg::parse(expr, n);
  } else {
    scg::OmegaSpace space(n);
    x = square ? scg::scasimir_square(space) : scg::scasimir_pbw(space);
  }
  scg::CartanPolynomial h = scg::hc_project(x, ord);
  scg::CartanPolynomial g = scg::gamma_shift(h, scg::ShiftDirection::Inverse);
  if (fmt == Format::Json) {
    out.buffer << scg::Json{{"h", scg::to_json(h)}, {"gamma_inverse_h", scg::to_json(g)}}.dump(2) << "\n";
  } else if (fmt == Format::Latex) {
    out.buffer << scg::latex_document({"h = " + scg::to_latex(h), "\\gamma^{-1}(h) = " + scg::to_latex(g)});
  } else {
    out.buffer << "h = " << scg::to_string(h) << "\ngamma^-1(h) = " << scg::to_string(g) << "\n";
  }
  return 0;
}

int cmd_verify(const std::string& name, const scg::VerifyOptions& options, Format fmt, Output& out) {
  const auto& names = scg::verify_names();
  if (name != "all" && name != "coeffs" && std::find(names.begin(), names.end(), name) == names.end()) {
    throw Usage("unknown check '" + name + "'");
  }
  auto reports = scg::run_verify(name, options);
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.passed;
  if (fmt == Format::Json) {
    scg::Json j = scg::Json::array();
    for (const auto& r : reports) j.push_back(scg::to_json(r));
    out.buffer << scg::Json{{"status", ok ? "pass" : "fail"}, {"reports", j}}.dump(2) << "\n";
  } else if (fmt == Format::Latex) {
    std::vector<std::string> paras;
    for (const auto& r : reports) paras.push_back(scg::to_latex(r));
    out.buffer << scg::latex_text_document(paras);
  } else {
    for (const auto& r : reports) out.buffer << scg::to_text(r);
    out.buffer << (ok ? "all checks passed\n" : "SOME CHECKS FAILED\n");
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in U(osp(1|2n)): Scasimir, bracket space, Harish-Chandra images"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  Output out;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "latex"}));
  app.add_option("--out", out.path, "Write output to a file");

  int n = 1;
  std::string route = "series", order = "standard", hc_order = "borel", expr, check;
  bool pbw = false, square = false;
  scg::VerifyOptions vopt;

  auto* coeffs = app.add_subcommand("coeffs", "Scasimir coefficients x_k, y_k");
  coeffs->add_option("--n", n, "Rank")->required();
  coeffs->add_option("--route", route, "a | b | series | all")
      ->check(CLI::IsMember({"a", "b", "recursion-a", "recursion-b", "series", "all"}));

  auto* sc = app.add_subcommand("scasimir", "The Scasimir in bracket form");
  sc->add_option("--n", n, "Rank")->required();
  sc->add_flag("--pbw", pbw, "Expand into standard PBW form");

  auto* no = app.add_subcommand("normal-order", "Normal-order an expression");
  no->add_option("--n", n, "Rank")->required();
  no->add_option("--order", order, "standard | borel | borel-alt")
      ->check(CLI::IsMember({"standard", "borel", "borel-alt"}));
  no->add_option("expression", expr, "e.g. \"s(1)*s(3) - s(1,3)\"")->required();

  auto* hwv = app.add_subcommand("hwv", "Highest weight vectors in the bracket space");
  hwv->add_option("--n", n, "Rank")->required();

  auto* hc = app.add_subcommand("hc", "Harish-Chandra projection (of the Scasimir by default)");
  hc->add_option("--n", n, "Rank")->required();
  hc->add_option("--order", hc_order, "borel | borel-alt")->check(CLI::IsMember({"borel", "borel-alt"}));
  hc->add_flag("--square", square, "Project the square of the Scasimir");
  hc->add_option("expression", expr, "Project this expression instead");

  auto* verify = app.add_subcommand("verify", "Run a named check");
  std::vector<std::string> choices = scg::verify_names();
  choices.push_back("all");
  verify->add_option("check", check, "Check name")->required()->check(CLI::IsMember(choices));
  verify->add_option("--n", vopt.n, "Rank")->check(CLI::PositiveNumber);
  verify->add_option("--seed", vopt.seed, "Random seed");
  verify->add_option("--samples", vopt.samples, "Random samples")->check(CLI::NonNegativeNumber);
  verify->add_flag("--extended", vopt.extended, "Include the slow checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (const char* env = std::getenv("SCG_EXTENDED"); env && std::string(env) == "1") vopt.extended = true;

  const Format fmt = format == "json" ? Format::Json : format == "latex" ? Format::Latex : Format::Text;
  try {
    int code = 0;
    if (*coeffs) code = cmd_coeffs(n, route, fmt, out);
    else if (*sc) code = cmd_scasimir(n, pbw, fmt, out);
    else if (*no) code = cmd_normal_order(n, order, expr, fmt, out);
    else if (*hwv) code = cmd_hwv(n, fmt, out);
    else if (*hc) code = cmd_hc(n, hc_order, square, expr, fmt, out);
    else if (*verify) code = cmd_verify(check, vopt, fmt, out);
    out.flush();
    return code;
  } catch (const scg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
