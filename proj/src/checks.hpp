#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "engine.hpp"

namespace prb::checks {

struct Case {
  std::string id;
  bool pass = true;
  std::string detail;
};

struct Report {
  std::vector<Case> cases;

  void add(std::string id, bool pass, std::string detail = "");
  bool all_pass() const;
  std::size_t failed() const;
  void sort_by_id();
  std::string to_text() const;
  std::string to_json() const;
};

struct Bounds {
  std::uint64_t seed = 1;
  int xdeg = 3;
  int rdeg = 2;
  int count = 50;  // samples per property
};

// Random normalized element within the degree budget; at most `terms` words.
LinComb random_element(Engine& eng, std::mt19937_64& rng, int xdeg_cap,
                       int rdeg_cap, int terms = 2);

Report run_rbcom_suite(const Bounds& b);
Report run_poisrb_suite(const Bounds& b);      // weights 0, 1, -1
Report run_nspois_suite(const Bounds& b);
Report run_models_suite(const std::string& model_json_text = "");
Report run_confluence_suite(const Bounds& b);

Report run_suite(const std::string& name, const Bounds& b,
                 const std::string& model_json_text = "");

}  // namespace prb::checks
