// Command-line front end for the qsuper engine.  Talks to the engine purely
// through the C API in qsuper.h.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qsuper.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitParse = 3;

struct EngineDeleter {
  void operator()(qsuper_engine* e) const { qsuper_engine_free(e); }
};
using EnginePtr = std::unique_ptr<qsuper_engine, EngineDeleter>;

struct StringDeleter {
  void operator()(char* s) const { qsuper_string_free(s); }
};
using CString = std::unique_ptr<char, StringDeleter>;

struct Options {
  int n = 2;
  std::string parity = "01";
  std::string mode = "uni";
  std::string phi = "symbolic";
  std::string order = "row-major";
  int depth = 0;
  int degree = 0;
  bool json = false;
};

EnginePtr make_engine(const Options& opt) {
  std::string phi_arg = opt.phi;
  if (phi_arg != "symbolic") {
    std::ifstream in(phi_arg);
    if (!in) {
      std::cerr << "cannot open phi file: " << phi_arg << "\n";
      return nullptr;
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    phi_arg = ss.str();
  }
  qsuper_engine* raw = nullptr;
  int rc = qsuper_engine_new(opt.n, opt.parity.c_str(), opt.mode.c_str(),
                             phi_arg.c_str(), &raw);
  if (rc != QSUPER_OK) {
    std::cerr << "invalid engine configuration (n/parity/mode/phi)\n";
    return nullptr;
  }
  return EnginePtr(raw);
}

int report_error(qsuper_engine* eng, int rc) {
  const char* msg = qsuper_last_error(eng);
  std::cerr << "error: " << (msg && *msg ? msg : "operation failed") << "\n";
  return rc == QSUPER_ERR_PARSE ? kExitParse : kExitUsage;
}

int print_result(qsuper_engine* eng, int rc, const CString& out) {
  if (rc != QSUPER_OK) return report_error(eng, rc);
  std::cout << out.get() << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qsuper — exact computations in quantum general linear supergroups"};
  app.require_subcommand(1);
  // global flags may come after the subcommand, e.g. `verify j-orth --n 2`
  app.fallthrough();

  Options opt;
  app.add_option("--n", opt.n, "rank n >= 2")->capture_default_str();
  app.add_option("--parity", opt.parity, "parity bitstring of length n, e.g. 01")
      ->capture_default_str();
  app.add_option("--mode", opt.mode, "uni | multi")
      ->check(CLI::IsMember({"uni", "multi"}))
      ->capture_default_str();
  app.add_option("--phi", opt.phi,
                 "symbolic | path to a JSON n x n rational antisymmetric matrix")
      ->capture_default_str();
  app.add_option("--order", opt.order, "generator order (row-major only)")
      ->check(CLI::IsMember({"row-major"}))
      ->capture_default_str();
  app.add_option("--depth", opt.depth, "suite depth D");
  app.add_option("--degree", opt.degree, "basis/suite degree m");
  app.add_flag("--json", opt.json, "emit JSON");

  std::string arg_a, arg_b, suite;

  auto* basis = app.add_subcommand("basis", "PBW monomials of a given degree");
  auto* nf = app.add_subcommand("nf", "PBW normal form of an element");
  nf->add_option("element", arg_a, "function-side element")->required();
  auto* mul = app.add_subcommand("mul", "product of two elements");
  mul->add_option("a", arg_a)->required();
  mul->add_option("b", arg_b)->required();
  auto* coprod = app.add_subcommand("coprod", "coproduct of an element");
  coprod->add_option("element", arg_a)->required();
  auto* pair = app.add_subcommand("pair", "Hopf pairing <f, u>");
  pair->add_option("f", arg_a, "function-side element")->required();
  pair->add_option("u", arg_b, "enveloping-side element")->required();
  auto* poisson = app.add_subcommand("poisson", "semiclassical Poisson bracket");
  poisson->add_option("a", arg_a)->required();
  poisson->add_option("b", arg_b)->required();
  auto* dmul = app.add_subcommand("deform-mul", "2-cocycle deformed product");
  dmul->add_option("a", arg_a)->required();
  dmul->add_option("b", arg_b)->required();
  auto* rep = app.add_subcommand("rep", "matrix representation of a U-side word");
  rep->add_option("u-word", arg_a)->required();
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify
      ->add_option("suite", suite,
                   "r-orth | j-orth | j-coideal | skew | mp-relations | cocycle | "
                   "rep-kills-ideal | pairing-rank | all")
      ->required()
      ->check(CLI::IsMember({"r-orth", "j-orth", "j-coideal", "skew", "mp-relations",
                             "cocycle", "rep-kills-ideal", "pairing-rank", "all"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  EnginePtr eng = make_engine(opt);
  if (!eng) return kExitUsage;

  char* raw = nullptr;
  int rc = QSUPER_OK;
  if (basis->parsed()) {
    rc = qsuper_basis(eng.get(), opt.degree, &raw);
    CString out(raw);
    return print_result(eng.get(), rc, out);
  }
  if (nf->parsed()) {
    rc = qsuper_normal_form(eng.get(), arg_a.c_str(), opt.json, &raw);
    CString out(raw);
    return print_result(eng.get(), rc, out);
  }
  if (mul->parsed()) {
    rc = qsuper_multiply(eng.get(), arg_a.c_str(), arg_b.c_str(), opt.json, &raw);
    CString out(raw);
    return print_result(eng.get(), rc, out);
  }
  if (coprod->parsed()) {
    rc = qsuper_coproduct(eng.get(), arg_a.c_str(), opt.json, &raw);
    CString out(raw);
    return print_result(eng.get(), rc, out);
  }
  if (pair->parsed()) {
    rc = qsuper_pair(eng.get(), arg_a.c_str(), arg_b.c_str(), opt.json, &raw);
    CString out(raw);
    return print_result(eng.get(), rc, out);
  }
  if (poisson->parsed()) {
    rc = qsuper_poisson(eng.get(), arg_a.c_str(), arg_b.c_str(), opt.json, &raw);
    CString out(raw);
    return print_result(eng.get(), rc, out);
  }
  if (dmul->parsed()) {
    rc = qsuper_deformed_multiply(eng.get(), arg_a.c_str(), arg_b.c_str(), opt.json,
                                  &raw);
    CString out(raw);
    return print_result(eng.get(), rc, out);
  }
  if (rep->parsed()) {
    rc = qsuper_matrix_rep(eng.get(), arg_a.c_str(), &raw);
    CString out(raw);
    return print_result(eng.get(), rc, out);
  }
  if (verify->parsed()) {
    rc = qsuper_verify(eng.get(), suite.c_str(), opt.depth, opt.degree, &raw);
    CString out(raw);
    if (rc == QSUPER_OK || rc == QSUPER_ERR_VERIFY) {
      if (opt.json || rc == QSUPER_ERR_VERIFY) std::cout << out.get() << "\n";
      if (rc == QSUPER_OK && !opt.json) std::cout << "all checks passed\n";
      return rc == QSUPER_OK ? kExitOk : kExitVerifyFail;
    }
    return report_error(eng.get(), rc);
  }
  return kExitUsage;
}
