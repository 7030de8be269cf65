#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <sstream>
#include <thread>

#include "signhom/bounds.hpp"
#include "signhom/io.hpp"
#include "signhom/verify/claims.hpp"

namespace signhom::verify {

const char* to_string(Status s) {
  switch (s) {
    case Status::kPass: return "PASS";
    case Status::kFail: return "FAIL";
    case Status::kSkipped: return "SKIPPED";
  }
  return "?";
}

int resolve_workers(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("SIGNHOM_WORKERS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

bool selected(const Claim& c, const Options& o) {
  return o.criteria.empty() ||
         std::find(o.criteria.begin(), o.criteria.end(), c.criterion) !=
             o.criteria.end();
}

ClaimResult run_one(const Claim& claim, const Options& options) {
  ClaimResult r{claim.id, claim.statement, claim.criterion, Status::kSkipped, 0,
                nlohmann::json::object(), {}};
  if (claim.heavy && !options.heavy) {
    r.detail["reason"] = "heavy";
    return r;
  }
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = claim.run(options);
  } catch (const std::exception& e) {
    out.pass = false;
    out.detail["error"] = e.what();
  }
  r.elapsed_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  r.detail = std::move(out.detail);
  r.status = out.pass ? Status::kPass : Status::kFail;
  if (out.pass && claim.budget_s > 0 && r.elapsed_s > claim.budget_s) {
    r.status = Status::kFail;
    r.detail["over_budget_s"] = claim.budget_s;
  }
  if (r.status == Status::kFail && out.witness && !options.witness_dir.empty()) {
    std::filesystem::create_directories(options.witness_dir);
    const auto path =
        std::filesystem::path(options.witness_dir) / (claim.id + ".sg");
    save_sg(path, *out.witness);
    r.witness_path = path.string();
  }
  return r;
}

}  // namespace

std::vector<ClaimResult> run_claims(const std::vector<Claim>& claims,
                                    const Options& options) {
  std::vector<const Claim*> todo;
  for (const auto& c : claims) {
    if (selected(c, options)) todo.push_back(&c);
  }
  std::vector<ClaimResult> results(todo.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < todo.size(); i = next++) {
      results[i] = run_one(*todo[i], options);
    }
  };
  const int workers =
      std::min<int>(resolve_workers(options.workers), std::max<std::size_t>(todo.size(), 1));
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  std::sort(results.begin(), results.end(),
            [](const ClaimResult& a, const ClaimResult& b) { return a.id < b.id; });
  return results;
}

nlohmann::json to_json(const ClaimResult& r) {
  nlohmann::json j = {{"id", r.id},
                      {"criterion", r.criterion},
                      {"statement", r.statement},
                      {"status", to_string(r.status)},
                      {"elapsed_s", r.elapsed_s},
                      {"detail", r.detail}};
  if (!r.witness_path.empty()) j["witness"] = r.witness_path;
  return j;
}

std::string summary_table(const std::vector<ClaimResult>& results) {
  std::ostringstream out;
  char line[256];
  std::snprintf(line, sizeof line, "%-46s %4s  %-7s %9s\n", "claim", "crit",
                "status", "seconds");
  out << line;
  for (const auto& r : results) {
    std::snprintf(line, sizeof line, "%-46s %4d  %-7s %9.3f\n", r.id.c_str(),
                  r.criterion, to_string(r.status), r.elapsed_s);
    out << line;
  }
  out << "\nbounds on chromatic numbers of maximum-degree-k classes\n";
  for (int k = 1; k <= 12; ++k) {
    const BoundsRow row = bounds_table(k);
    std::snprintf(line, sizeof line, "k=%-3d %-34s %-34s\n", k,
                  row.chi2.to_string().c_str(),
                  row.chi2_connected.to_string().c_str());
    out << line;
    std::snprintf(line, sizeof line, "      %-34s %-34s\n",
                  row.chis.to_string().c_str(),
                  row.chis_connected.to_string().c_str());
    out << line;
  }
  return out.str();
}

}  // namespace signhom::verify
