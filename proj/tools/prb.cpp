// Command-line front end; talks to the engine exclusively through the C API.
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "poisrb.h"

namespace {

// exit codes: 0 pass, 1 check failure, 2 usage/parse/domain, 3 internal/fuel
int exit_code(prb_status st) {
  switch (st) {
    case PRB_OK:
      return 0;
    case PRB_EPARSE:
    case PRB_EDOMAIN:
    case PRB_ERESOURCE:
    case PRB_EUSAGE:
      return 2;
    case PRB_EFUEL:
    case PRB_EINTERNAL:
      return 3;
  }
  return 3;
}

struct EngineHandle {
  prb_engine* e = nullptr;
  ~EngineHandle() { prb_engine_free(e); }
};

struct Str {
  char* p = nullptr;
  ~Str() { prb_string_free(p); }
};

int fail(prb_status st, const prb_engine* e, const char* what) {
  std::cerr << "error (" << what << "): "
            << (e ? prb_engine_last_error(e) : "") << "\n";
  return exit_code(st);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

uint64_t fuel_from_env() {
  const char* v = std::getenv("PRB_FUEL");
  if (!v) return 0;
  return std::strtoull(v, nullptr, 10);
}

EngineHandle make_engine(bool ns, const std::string& weight,
                         const std::string& gens) {
  EngineHandle h;
  h.e = prb_engine_new(ns ? "ns" : "rb",
                       ns || weight.empty() ? nullptr : weight.c_str(),
                       gens.empty() ? nullptr : gens.c_str());
  if (h.e && fuel_from_env() > 0) prb_engine_set_fuel(h.e, fuel_from_env());
  return h;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"free Poisson Rota-Baxter / Nijenhuis algebra engine"};
  app.require_subcommand(1);

  std::string weight, gens, expr, suite, model_file, word;
  bool ns = false, json = false, multilinear = false, count_only = false;
  int strategy = 0, xdeg = 3, rdeg = 2, count = 50, ngens = 2, rdeg_cap = 4;
  std::uint64_t seed = 1;

  auto add_mode = [&](CLI::App* cmd) {
    cmd->add_option("--weight", weight, "Rota-Baxter weight as p/q");
    cmd->add_flag("--ns", ns, "use the Nijenhuis engine (no weight)");
    cmd->add_option("--gens", gens, "comma-separated ranked generators");
    cmd->add_flag("--json", json, "machine-readable output");
  };

  auto* cnorm = app.add_subcommand("normalize", "canonical form of an expression");
  cnorm->add_option("expr", expr, "expression")->required();
  cnorm->add_option("--strategy", strategy, "0 left-first, 1 right-first")
      ->check(CLI::Range(0, 1));
  add_mode(cnorm);

  auto* ccheck = app.add_subcommand("check", "run an invariant suite");
  ccheck->add_option("suite", suite, "rbcom|poisrb|nspois|models|confluence")
      ->required();
  ccheck->add_option("--seed", seed, "fuzz seed");
  ccheck->add_option("--xdeg", xdeg, "generator-degree bound");
  ccheck->add_option("--rdeg", rdeg, "operator-degree bound");
  ccheck->add_option("--count", count, "samples per property");
  ccheck->add_option("--model", model_file, "model JSON file (models suite)");
  ccheck->add_flag("--json", json, "print the JSON report");

  auto* cenum = app.add_subcommand("enumerate", "basis words within bounds");
  cenum->add_option("--xdeg", xdeg, "max generator degree")->required();
  cenum->add_option("--rdeg", rdeg, "max operator degree")->required();
  cenum->add_flag("--multilinear", multilinear,
                  "each generator exactly once");
  cenum->add_flag("--count-only", count_only, "print only the count");
  add_mode(cenum);

  auto* cexpr = app.add_subcommand("expressible",
                                   "expressibility witness of an operator letter");
  cexpr->add_option("word", word, "operator-letter word")->required();
  add_mode(cexpr);

  auto* cmodel = app.add_subcommand("model-check", "validate a model JSON file");
  cmodel->add_option("file", model_file, "model JSON file")->required();
  cmodel->add_flag("--json", json, "print the JSON report");

  auto* cspan = app.add_subcommand("span-dim",
                                   "rank of the multilinear span of R(a)b and [R(a),b]");
  cspan->add_option("-n,--ngens", ngens, "number of generators")->required();
  cspan->add_option("--rdeg-cap", rdeg_cap, "resource cap on operator degree");
  add_mode(cspan);

  CLI11_PARSE(app, argc, argv);

  if (ns && !weight.empty()) {
    std::cerr << "error: --ns engines take no --weight\n";
    return 2;
  }

  if (cnorm->parsed()) {
    auto h = make_engine(ns, weight, gens.empty() ? "x,y,z,t" : gens);
    prb_comb* c = nullptr;
    prb_status st = prb_eval(h.e, expr.c_str(), strategy, &c);
    if (st != PRB_OK) return fail(st, h.e, "normalize");
    Str text, js;
    prb_comb_text(h.e, c, &text.p);
    prb_comb_json(h.e, c, &js.p);
    std::cout << (json ? js.p : text.p) << "\n";
    prb_comb_free(c);
    return 0;
  }

  if (ccheck->parsed()) {
    std::string model_json;
    if (!model_file.empty()) {
      try {
        model_json = read_file(model_file);
      } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
      }
    }
    Str rep;
    int pass = 0;
    prb_status st =
        prb_check(suite.c_str(), seed, xdeg, rdeg, count,
                  model_json.empty() ? nullptr : model_json.c_str(), &rep.p,
                  &pass);
    if (st != PRB_OK) {
      std::cerr << "error (check): " << (rep.p ? rep.p : "") << "\n";
      return exit_code(st);
    }
    std::cout << rep.p << "\n";
    return pass ? 0 : 1;
  }

  if (cenum->parsed()) {
    auto h = make_engine(ns, weight, gens.empty() ? "x,y" : gens);
    Str out;
    prb_status st = prb_enumerate(h.e, xdeg, rdeg, multilinear ? 1 : 0,
                                  count_only ? 1 : 0, &out.p);
    if (st != PRB_OK) return fail(st, h.e, "enumerate");
    std::cout << out.p << "\n";
    return 0;
  }

  if (cexpr->parsed()) {
    auto h = make_engine(ns, weight, gens.empty() ? "x,y,z,t" : gens);
    Str out;
    prb_status st = prb_expressible(h.e, word.c_str(), &out.p);
    if (st != PRB_OK) return fail(st, h.e, "expressible");
    std::cout << out.p << "\n";
    return 0;
  }

  if (cmodel->parsed()) {
    std::string model_json;
    try {
      model_json = read_file(model_file);
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    }
    Str rep;
    int pass = 0;
    prb_status st = prb_model_check(model_json.c_str(), &rep.p, &pass);
    if (st != PRB_OK) {
      std::cerr << "error (model-check): " << (rep.p ? rep.p : "") << "\n";
      return exit_code(st);
    }
    std::cout << rep.p << "\n";
    return pass ? 0 : 1;
  }

  if (cspan->parsed()) {
    std::string g;
    for (int i = 0; i < ngens; ++i)
      g += (i ? ",x" : "x") + std::to_string(i + 1);
    auto h = make_engine(ns, weight, g);
    int dim = 0;
    prb_status st = prb_span_dim(h.e, ngens, rdeg_cap, &dim);
    if (st != PRB_OK) return fail(st, h.e, "span-dim");
    std::cout << dim << "\n";
    return 0;
  }

  return 2;
}
