#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "signhom/constructions.hpp"
#include "signhom/signed_graph.hpp"

namespace signhom::verify {

enum class Status { kPass, kFail, kSkipped };

const char* to_string(Status s);

/// Source of catalog gadgets. Tests swap it to inject faults.
using GadgetSource = std::function<LabeledTarget(GadgetId)>;

struct Options {
  bool heavy = false;
  std::uint64_t seed = 1;
  /// Worker threads; 0 reads SIGNHOM_WORKERS, then hardware concurrency.
  int workers = 0;
  /// Where witness graphs of failing claims are written; empty disables.
  std::string witness_dir;
  GadgetSource gadgets = build_gadget;
  /// Restrict to these acceptance criteria (empty means all).
  std::vector<int> criteria;
};

struct Outcome {
  bool pass = false;
  nlohmann::json detail = nlohmann::json::object();
  /// Counterexample graph, saved next to the report when the claim fails.
  std::optional<SignedGraph> witness;
};

struct Claim {
  std::string id;
  /// Plain statement of what is checked.
  std::string statement;
  int criterion = 0;
  bool heavy = false;
  /// Wall-clock limit; exceeding it turns a pass into a failure.
  double budget_s = 0;
  std::function<Outcome(const Options&)> run;
};

struct ClaimResult {
  std::string id;
  std::string statement;
  int criterion = 0;
  Status status = Status::kSkipped;
  double elapsed_s = 0;
  nlohmann::json detail = nlohmann::json::object();
  std::string witness_path;
};

/// The full acceptance suite, in id order.
std::vector<Claim> acceptance_claims();

/// Runs claims on a worker pool. Results are sorted by id, so the output
/// does not depend on scheduling. Heavy claims are skipped unless enabled.
std::vector<ClaimResult> run_claims(const std::vector<Claim>& claims,
                                    const Options& options);

/// One report line. `elapsed_s` is the only schedule-dependent field.
nlohmann::json to_json(const ClaimResult& r);

/// Human-readable table of claim statuses followed by the bounds tables.
std::string summary_table(const std::vector<ClaimResult>& results);

int resolve_workers(int requested);

}  // namespace signhom::verify
