#include "poisrb.h"

#include <cctype>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <sstream>

#include "checks.hpp"
#include "engine.hpp"
#include "json.hpp"
#include "models.hpp"
#include "parser.hpp"

using namespace prb;

struct prb_engine {
  std::unique_ptr<Engine> eng;
  prb_status ctor_status = PRB_OK;
  std::string last_error;
};

struct prb_comb {
  LinComb value;
};

namespace {

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p) std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

prb_status classify(const std::exception& e) {
  if (dynamic_cast<const parse_error*>(&e)) return PRB_EPARSE;
  if (dynamic_cast<const fuel_error*>(&e)) return PRB_EFUEL;
  if (dynamic_cast<const resource_error*>(&e)) return PRB_ERESOURCE;
  if (dynamic_cast<const domain_error*>(&e)) return PRB_EDOMAIN;
  return PRB_EINTERNAL;
}

template <class F>
prb_status guarded(prb_engine* e, F&& f) {
  if (!e) return PRB_EUSAGE;
  if (e->ctor_status != PRB_OK) return e->ctor_status;
  try {
    e->eng->reset_fuel();
    return f();
  } catch (const std::exception& ex) {
    e->last_error = ex.what();
    return classify(ex);
  }
}

// normalize an expression expected to denote a single basis word
prb_status single_word(prb_engine* e, const char* expr, WordPtr& out) {
  ExprPtr ast = parse_expr(expr ? expr : "");
  LinComb c = evaluate(*e->eng, *ast);
  if (c.size() != 1 || c.leading().second != 1) {
    e->last_error = "expression does not denote a single basis word";
    return PRB_EDOMAIN;
  }
  out = c.leading().first;
  return PRB_OK;
}

}  // namespace

extern "C" {

prb_engine* prb_engine_new(const char* mode, const char* weight,
                           const char* generators) {
  auto* h = new (std::nothrow) prb_engine;
  if (!h) return nullptr;
  try {
    OpLaw law;
    std::string m = mode ? mode : "rb";
    if (m == "rb") {
      law.kind = OpKind::RotaBaxter;
      law.weight = weight ? rational_from_string(weight) : Rational(0);
    } else if (m == "ns") {
      law.kind = OpKind::Nijenhuis;
      if (weight) throw domain_error("the Nijenhuis engine takes no weight");
    } else {
      throw domain_error("mode must be \"rb\" or \"ns\"");
    }
    Engine::Config cfg;
    cfg.law = law;
    std::string gens = generators ? generators : "x,y";
    std::string cur;
    for (char ch : gens + ",") {
      if (ch == ',') {
        if (!cur.empty()) cfg.generators.push_back(cur);
        cur.clear();
      } else if (!std::isspace(static_cast<unsigned char>(ch))) {
        cur += ch;
      }
    }
    if (cfg.generators.empty())
      throw domain_error("generator set must be nonempty");
    h->eng = std::make_unique<Engine>(std::move(cfg));
  } catch (const std::exception& ex) {
    h->last_error = ex.what();
    h->ctor_status = classify(ex);
  }
  return h;
}

void prb_engine_free(prb_engine* e) { delete e; }

prb_status prb_engine_ok(const prb_engine* e) {
  return e ? e->ctor_status : PRB_EUSAGE;
}

const char* prb_engine_last_error(const prb_engine* e) {
  return e ? e->last_error.c_str() : "null engine";
}

void prb_engine_set_fuel(prb_engine* e, uint64_t cap) {
  if (e && e->eng) e->eng->set_fuel_cap(cap);
}

prb_status prb_eval(prb_engine* e, const char* expr, int strategy,
                    prb_comb** out) {
  if (!out) return PRB_EUSAGE;
  *out = nullptr;
  return guarded(e, [&]() -> prb_status {
    e->eng->set_strategy(strategy == 1 ? Strategy::RightFirst
                                       : Strategy::LeftFirst);
    ExprPtr ast = parse_expr(expr ? expr : "");
    auto* c = new prb_comb{evaluate(*e->eng, *ast)};
    *out = c;
    return PRB_OK;
  });
}

void prb_comb_free(prb_comb* c) { delete c; }

prb_status prb_comb_text(const prb_engine* e, const prb_comb* c, char** out) {
  if (!e || !c || !out || !e->eng) return PRB_EUSAGE;
  *out = dup_string(e->eng->to_text(c->value));
  return *out ? PRB_OK : PRB_EINTERNAL;
}

prb_status prb_comb_json(const prb_engine* e, const prb_comb* c, char** out) {
  if (!e || !c || !out || !e->eng) return PRB_EUSAGE;
  *out = dup_string(e->eng->to_json(c->value));
  return *out ? PRB_OK : PRB_EINTERNAL;
}

int prb_comb_equal(const prb_comb* a, const prb_comb* b) {
  if (!a || !b) return 0;
  return a->value == b->value ? 1 : 0;
}

int64_t prb_comb_term_count(const prb_comb* c) {
  return c ? static_cast<int64_t>(c->value.size()) : -1;
}

prb_status prb_expressible(prb_engine* e, const char* word_expr, char** out) {
  if (!out) return PRB_EUSAGE;
  *out = nullptr;
  return guarded(e, [&]() -> prb_status {
    WordPtr w;
    if (prb_status st = single_word(e, word_expr, w); st != PRB_OK) return st;
    if (w->factors.size() != 1 || w->factors[0]->kind != AtomKind::Op) {
      e->last_error = "expressibility applies to operator letters only";
      return PRB_EDOMAIN;
    }
    nlohmann::json j;
    const ExpressWitness* wit = e->eng->witness(w->factors[0]);
    j["expressible"] = wit != nullptr;
    if (wit) {
      j["k"] = wit->k;
      j["a"] = word_to_text(wit->a, e->eng->opsym());
      j["b"] = word_to_text(wit->b, e->eng->opsym());
      j["residual"] = e->eng->to_text(wit->residual);
    }
    *out = dup_string(j.dump());
    return *out ? PRB_OK : PRB_EINTERNAL;
  });
}

prb_status prb_enumerate(prb_engine* e, int max_xdeg, int max_rdeg,
                         int multilinear, int count_only, char** out) {
  if (!out) return PRB_EUSAGE;
  *out = nullptr;
  return guarded(e, [&]() -> prb_status {
    auto words = e->eng->enumerate_basis(max_xdeg, max_rdeg, multilinear != 0);
    nlohmann::json j;
    j["count"] = words.size();
    if (!count_only) {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& w : words)
        arr.push_back(word_to_text(w, e->eng->opsym()));
      j["words"] = arr;
    }
    *out = dup_string(j.dump());
    return *out ? PRB_OK : PRB_EINTERNAL;
  });
}

prb_status prb_span_dim(prb_engine* e, int ngens, int rdeg_cap, int* out) {
  if (!out) return PRB_EUSAGE;
  return guarded(e, [&]() -> prb_status {
    *out = e->eng->pre_post_span_dim(ngens, rdeg_cap);
    return PRB_OK;
  });
}

prb_status prb_stratum(prb_engine* e, const char* word_expr, int* out) {
  if (!out) return PRB_EUSAGE;
  return guarded(e, [&]() -> prb_status {
    WordPtr w;
    if (prb_status st = single_word(e, word_expr, w); st != PRB_OK) return st;
    *out = e->eng->stratum(w);
    return PRB_OK;
  });
}

prb_status prb_check(const char* suite, uint64_t seed, int xdeg, int rdeg,
                     int count, const char* model_json, char** out_report,
                     int* out_pass) {
  if (!suite || !out_report || !out_pass) return PRB_EUSAGE;
  *out_report = nullptr;
  try {
    checks::Bounds b;
    b.seed = seed;
    if (xdeg > 0) b.xdeg = xdeg;
    if (rdeg >= 0) b.rdeg = rdeg;
    if (count > 0) b.count = count;
    checks::Report rep =
        checks::run_suite(suite, b, model_json ? model_json : "");
    *out_pass = rep.all_pass() ? 1 : 0;
    *out_report = dup_string(rep.to_json());
    return *out_report ? PRB_OK : PRB_EINTERNAL;
  } catch (const std::exception& ex) {
    *out_report = dup_string(ex.what());
    return classify(ex);
  }
}

prb_status prb_model_check(const char* model_json, char** out_report,
                           int* out_pass) {
  if (!model_json || !out_report || !out_pass) return PRB_EUSAGE;
  return prb_check("models", 1, 0, -1, 0, model_json, out_report, out_pass);
}

const char* prb_version(void) { return "poisrb 1.0.0"; }

void prb_string_free(char* s) { std::free(s); }

}  // extern "C"
