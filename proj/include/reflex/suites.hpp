#pragma once

// Catalog of axiom families and the suite runner.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "reflex/kernels.hpp"
#include "reflex/model.hpp"

namespace reflex {

enum class Status { Holds, Fails, Inconclusive, NoCounterexample };

/// "holds", "fails", "inconclusive", "no-counterexample".
std::string to_string(Status s);

struct EquationResult {
  std::string id;
  std::string lhs;
  std::string rhs;
  Verdict verdict;
};

struct Summary {
  Status status = Status::Holds;
  std::vector<std::string> ids;  // failing or inconclusive equations
  std::string note;
};

struct SuiteReport {
  std::string model;
  std::string suite;
  Fuel fuel;
  std::uint64_t seed = 0;
  std::vector<EquationResult> equations;
  Summary summary;
};

struct SuiteOptions {
  Fuel fuel;
  std::uint64_t seed = 0;
  Exec exec = Exec::Parallel;
  std::size_t beta_pairs = 50;     // per abstraction mode
  std::size_t probe_trials = 32;
};

/// Every selectable suite id, "all" last.
const std::vector<std::string>& suite_ids();

/// The equations of a fixed suite (not beta, ccm, meyer-scott-probe,
/// lambda-from-acm, all).
/// Throws UnknownSuite.
std::vector<Equation> suite_equations(std::string_view suite);

/// Seeded beta-lemma equations; generators the model lacks become fresh
/// indeterminates.
std::vector<Equation> beta_equations(const PreModel& model, std::uint64_t seed, std::size_t per_mode);

SuiteReport run_suite(const ModelPtr& model, std::string_view suite, const SuiteOptions& options = {});

/// Fails if any verdict is NotEqual, else inconclusive if any is Unknown.
Summary summarize(const std::vector<EquationResult>& results);

/// Constants e2 k, e3 s and the derived i = s k k, e = s (k i) over them.
ModelPtr lambda_from_acm(ModelPtr base);

}  // namespace reflex
