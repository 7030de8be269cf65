// signhom: command-line front end for the signhom library.
//
// Exit codes: 0 = holds / found, 1 = fails / none, 2 = error.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "signhom/bounds.hpp"
#include "signhom/chromatic.hpp"
#include "signhom/coloring.hpp"
#include "signhom/constructions.hpp"
#include "signhom/hom.hpp"
#include "signhom/io.hpp"
#include "signhom/isomorphism.hpp"
#include "signhom/properties.hpp"
#include "signhom/switching.hpp"
#include "signhom/verify/claims.hpp"

namespace {

using nlohmann::json;
using namespace signhom;

constexpr int kHolds = 0;
constexpr int kFails = 1;

HomMode parse_mode(const std::string& s) {
  if (s == "2ec") return HomMode::k2ec;
  if (s == "signed") return HomMode::kSigned;
  throw Error("unknown mode '" + s + "' (expected 2ec or signed)");
}

void emit(const json& j) { std::cout << j.dump() << '\n'; }

json hom_json(const Homomorphism& h, const SignedGraph& target) {
  json j = {{"mode", to_string(h.mode)}, {"map", h.map}};
  if (h.mode == HomMode::kSigned) {
    j["switch_set"] = std::vector<int>(h.switch_witness.members().begin(),
                                       h.switch_witness.members().end());
  }
  j["target_sg"] = write_sg(target);
  return j;
}

json report_json(const PropertyReport& r) {
  json j = {{"kind", r.kind}, {"holds", r.holds}};
  if (r.k) j["k"] = r.k;
  if (r.k || r.n) j["n"] = r.n;
  if (!r.tuple.empty()) {
    j["tuple"] = r.tuple;
    std::string s;
    for (Sign x : r.signs) s += to_char(x);
    j["signs"] = s;
    j["count"] = r.count;
  }
  if (r.pair) j["pair"] = {r.pair->first, r.pair->second};
  if (!r.detail.empty()) j["detail"] = r.detail;
  return j;
}

void write_output(const SignedGraph& g, const std::string& out,
                  const std::string& dot) {
  if (out.empty()) {
    std::cout << write_sg(g);
  } else {
    save_sg(out, g);
  }
  if (!dot.empty()) {
    std::ofstream f(dot);
    if (!f) throw Error("cannot write " + dot);
    f << export_dot(g);
  }
  std::cerr << g.name() << ": order " << g.order() << ", edges " << g.size()
            << " (+" << g.count_edges(Sign::kPositive) << " -"
            << g.count_edges(Sign::kNegative) << ")\n";
}

// ---------------------------------------------------------------------------

struct ConstructArgs {
  int q = 9;
  int k = 3;
  int x = 0;
  int y = 1;
  std::string input;
  std::string name;
  std::string out;
  std::string dot;
};

void add_construct(CLI::App& app, int& status) {
  auto* cmd = app.add_subcommand("construct", "Build a catalog graph");
  cmd->require_subcommand(1);
  auto args = std::make_shared<ConstructArgs>();
  auto common = [args](CLI::App* sub) {
    sub->add_option("-o,--out", args->out, "Output .sg path (default stdout)");
    sub->add_option("--dot", args->dot, "Also write Graphviz DOT here");
  };
  auto done = [args, &status](SignedGraph g) {
    write_output(g, args->out, args->dot);
    status = kHolds;
  };

  auto* sp = cmd->add_subcommand("sp", "Signed Paley graph SP_q");
  sp->add_option("--q", args->q, "Prime power, 1 mod 4")->required();
  common(sp);
  sp->callback([args, done] { done(build_sp(args->q).graph); });

  auto* rho = cmd->add_subcommand("rho", "Antitwinned double of a graph");
  rho->add_option("-i,--input", args->input)->required();
  common(rho);
  rho->callback([args, done] { done(build_rho(load_sg(args->input)).graph); });

  auto* tr = cmd->add_subcommand("tr", "Tromp-Paley graph TR(SP_q)");
  tr->add_option("--q", args->q)->required();
  common(tr);
  tr->callback([args, done] { done(build_tr(args->q).graph); });

  auto* plus2 = cmd->add_subcommand("plus2", "Add copies x', y' of a positive edge xy");
  plus2->add_option("-i,--input", args->input)->required();
  plus2->add_option("--x", args->x)->required();
  plus2->add_option("--y", args->y)->required();
  common(plus2);
  plus2->callback([args, done] {
    const SignedGraph g = load_sg(args->input);
    LabeledTarget t{g, {}};
    for (int v = 0; v < g.order(); ++v) t.labels.push_back(std::to_string(v));
    done(build_plus2(t, args->x, args->y).graph);
  });

  auto* c2 = cmd->add_subcommand("clique2ec", "k-regular 2-edge-colored clique");
  c2->add_option("--k", args->k)->required();
  common(c2);
  c2->callback([args, done] { done(build_2ec_clique(args->k)); });

  auto* cs = cmd->add_subcommand("cliquesigned", "k-regular signed clique");
  cs->add_option("--k", args->k)->required();
  common(cs);
  cs->callback([args, done] { done(build_signed_clique(args->k)); });

  auto* gadget = cmd->add_subcommand("gadget", "Named gadget from the catalog");
  gadget->add_option("--name", args->name, "SB, PATH4, CANDIDATE5, TARGET6, "
                     "SIGNED_T, K4S_PLUS, K4S_MINUS, CLIQUE6, SP9_STAR, SP9_DAGGER")
      ->required();
  common(gadget);
  gadget->callback([args, done] { done(build_gadget(parse_gadget(args->name)).graph); });
}

// ---------------------------------------------------------------------------

struct CheckArgs {
  std::string input;
  int k = 1;
  int n = 0;
  bool max = false;
};

void add_check(CLI::App& app, int& status) {
  auto* cmd = app.add_subcommand("check", "Check a structural property");
  cmd->require_subcommand(1);
  auto args = std::make_shared<CheckArgs>();
  auto input = [args](CLI::App* sub) {
    sub->add_option("-i,--input", args->input)->required();
  };
  auto finish = [&status](const PropertyReport& r) {
    emit(report_json(r));
    status = r.holds ? kHolds : kFails;
  };

  auto* prop = cmd->add_subcommand("property", "Property P_{k,n}");
  input(prop);
  prop->add_option("--k", args->k)->required();
  prop->add_option("--n", args->n);
  prop->add_flag("--max", args->max, "Report the largest n instead");
  prop->callback([args, finish, &status] {
    const SignedGraph g = load_sg(args->input);
    if (args->max) {
      const auto n = max_p_n(g, args->k);
      emit({{"kind", "max_P_k_n"}, {"k", args->k},
            {"n", n ? json(*n) : json(nullptr)}});
      status = kHolds;
      return;
    }
    finish(check_p_kn(g, args->k, args->n));
  });

  auto* star = cmd->add_subcommand("p22star", "Property P*_{2,2}");
  input(star);
  star->callback([args, finish] { finish(check_p22_star(load_sg(args->input))); });

  auto* c2 = cmd->add_subcommand("clique2ec", "2-edge-colored clique test");
  input(c2);
  c2->callback([args, finish] { finish(is_2ec_clique(load_sg(args->input))); });

  auto* cs = cmd->add_subcommand("cliquesigned", "Signed clique test");
  input(cs);
  cs->callback([args, finish] { finish(is_signed_clique(load_sg(args->input))); });

  auto* tr = cmd->add_subcommand("transitive", "Transitivity on sign-typed n-cliques");
  input(tr);
  tr->add_option("--n", args->n, "1 = vertices, 2 = edges, 3 = triangles")->required();
  tr->callback([args, finish] { finish(is_kn_transitive(load_sg(args->input), args->n)); });

  auto* anti = cmd->add_subcommand("antiautomorphic", "Isomorphic to its negation");
  input(anti);
  anti->callback([args, finish] { finish(is_antiautomorphic(load_sg(args->input))); });
}

// ---------------------------------------------------------------------------

void add_hom(CLI::App& app, int& status) {
  auto* cmd = app.add_subcommand("hom", "Search for a homomorphism");
  auto g = std::make_shared<std::string>();
  auto t = std::make_shared<std::string>();
  auto mode = std::make_shared<std::string>("2ec");
  cmd->add_option("-g,--graph", *g)->required();
  cmd->add_option("-t,--target", *t)->required();
  auto all = std::make_shared<bool>(false);
  cmd->add_option("--mode", *mode)->check(CLI::IsMember({"2ec", "signed"}));
  cmd->add_flag("--all", *all, "Print every homomorphism, one per line");
  cmd->callback([=, &status] {
    const SignedGraph src = load_sg(*g);
    const SignedGraph dst = load_sg(*t);
    if (*all) {
      const bool is_signed = parse_mode(*mode) == HomMode::kSigned;
      // Signed maps are enumerated as maps into rho(target).
      const SignedGraph search_target = is_signed ? build_rho(dst).graph : dst;
      const int m = dst.order();
      const auto count = for_each_hom_2ec(src, search_target, [&](const std::vector<int>& map) {
        Homomorphism h{is_signed ? HomMode::kSigned : HomMode::k2ec, map, {}};
        if (is_signed) {
          std::vector<int> switched;
          for (int v = 0; v < src.order(); ++v) {
            if (map[v] >= m) switched.push_back(v);
            h.map[v] = map[v] % m;
          }
          h.switch_witness = SwitchSet(std::move(switched));
        }
        json j = {{"mode", to_string(h.mode)}, {"map", h.map}};
        if (is_signed) {
          j["switch_set"] = std::vector<int>(h.switch_witness.members().begin(),
                                             h.switch_witness.members().end());
        }
        emit(j);
        return true;
      });
      emit({{"count", count}});
      status = count > 0 ? kHolds : kFails;
      return;
    }
    const auto hom = parse_mode(*mode) == HomMode::k2ec ? find_hom_2ec(src, dst)
                                                        : find_hom_signed(src, dst);
    json j = {{"found", hom.has_value()}};
    if (hom) j["hom"] = hom_json(*hom, dst);
    emit(j);
    status = hom ? kHolds : kFails;
  });
}

void add_chromatic(CLI::App& app, int& status) {
  auto* cmd = app.add_subcommand("chromatic", "Exact chromatic number");
  auto in = std::make_shared<std::string>();
  auto mode = std::make_shared<std::string>("2ec");
  auto max = std::make_shared<int>(kMaxChromaticOrder);
  cmd->add_option("-i,--input", *in)->required();
  cmd->add_option("--mode", *mode)->check(CLI::IsMember({"2ec", "signed"}));
  cmd->add_option("--max", *max, "Largest target order tried (<= 6)");
  cmd->callback([=, &status] {
    const SignedGraph g = load_sg(*in);
    const auto r = parse_mode(*mode) == HomMode::k2ec ? chromatic_2ec(g, *max)
                                                      : chromatic_signed(g, *max);
    json log = json::array();
    for (const auto& e : r.per_order_log) {
      log.push_back({{"order", e.order}, {"targets_tested", e.targets_tested},
                     {"found", e.found}});
    }
    json j = {{"value", r.value ? json(*r.value) : json(nullptr)}, {"log", log}};
    if (r.value && *r.value > 0) j["hom"] = hom_json(r.hom, r.target);
    emit(j);
    status = r.value ? kHolds : kFails;
  });
}

void add_switch(CLI::App& app, int& status) {
  auto* cmd = app.add_subcommand("switch", "Switching operations");
  auto in = std::make_shared<std::string>();
  auto set = std::make_shared<std::vector<int>>();
  auto other = std::make_shared<std::string>();
  auto out = std::make_shared<std::string>();
  auto canonical = std::make_shared<bool>(false);
  cmd->add_option("-i,--input", *in)->required();
  cmd->add_option("--set", *set, "Vertices to switch")->delimiter(',');
  cmd->add_option("--equiv", *other, "Test switching equivalence with this graph");
  cmd->add_flag("--canonical", *canonical, "Print the canonical switch form");
  cmd->add_option("-o,--out", *out, "Where to write the switched graph");
  cmd->callback([=, &status] {
    const SignedGraph g = load_sg(*in);
    if (!other->empty()) {
      const auto w = switch_equivalent(g, load_sg(*other));
      json j = {{"equivalent", w.has_value()}};
      if (w) j["switch_set"] = std::vector<int>(w->members().begin(), w->members().end());
      emit(j);
      status = w ? kHolds : kFails;
      return;
    }
    if (*canonical) {
      const auto f = canonical_switch_form(g);
      json cotree = json::array();
      for (const Edge& e : f.cotree) cotree.push_back({e.u, e.v, std::string(1, to_char(e.sign))});
      emit({{"order", f.order}, {"roots", f.component_roots}, {"cotree", cotree}});
      status = kHolds;
      return;
    }
    const SwitchSet s(*set);
    s.check_against(g.order());
    const SignedGraph h = switch_vertices(g, s);
    if (out->empty()) {
      std::cout << write_sg(h);
    } else {
      save_sg(*out, h);
    }
    status = kHolds;
  });
}

void add_color(CLI::App& app, int& status) {
  auto* cmd = app.add_subcommand("color", "Constructive colorings");
  auto in = std::make_shared<std::string>();
  auto algo = std::make_shared<std::string>("auto");
  auto mode = std::make_shared<std::string>("2ec");
  auto target = std::make_shared<std::string>();
  auto k = std::make_shared<int>(3);
  cmd->add_option("-i,--input", *in)->required();
  cmd->add_option("--algo", *algo, "maxdeg2, maxdeg3, greedy or auto")
      ->check(CLI::IsMember({"auto", "maxdeg2", "maxdeg3", "greedy"}));
  cmd->add_option("--mode", *mode, "For maxdeg2")->check(CLI::IsMember({"2ec", "signed"}));
  cmd->add_option("--target", *target, "Target .sg for greedy");
  cmd->add_option("--k", *k, "Degree bound for greedy");
  cmd->callback([=, &status] {
    const SignedGraph g = load_sg(*in);
    std::string a = *algo;
    if (a == "auto") a = g.max_degree() <= 2 ? "maxdeg2" : "maxdeg3";
    json j = {{"algorithm", a}};
    if (a == "maxdeg2") {
      const auto r = color_maxdeg2(g, parse_mode(*mode));
      j["target"] = r.target_name;
      j["hom"] = hom_json(r.hom, r.target);
      j["verified"] = verify_hom(g, r.target, r.hom);
    } else if (a == "maxdeg3") {
      const auto r = color_maxdeg3(g);
      const SignedGraph star = build_gadget(GadgetId::kSP9Star).graph;
      json routes = json::array();
      for (auto x : r.routes) routes.push_back(to_string(x));
      j["target"] = "SP9_STAR";
      j["routes"] = routes;
      j["hom"] = hom_json(r.hom, star);
      j["verified"] = verify_hom(g, star, r.hom);
    } else {
      if (target->empty()) throw Error("greedy needs --target");
      const SignedGraph t = load_sg(*target);
      const auto r = greedy_degenerate_color(g, t, *k, true);
      j["found"] = r.has_value();
      if (r) j["hom"] = hom_json(*r, t);
      emit(j);
      status = r ? kHolds : kFails;
      return;
    }
    emit(j);
    status = j["verified"].get<bool>() ? kHolds : kFails;
  });
}

void add_verify(CLI::App& app, int& status) {
  auto* cmd = app.add_subcommand("verify", "Run the acceptance suite");
  cmd->alias("verify-paper");
  auto opts = std::make_shared<verify::Options>();
  auto out = std::make_shared<std::string>();
  cmd->add_flag("--heavy", opts->heavy, "Include the long-running checks");
  cmd->add_option("--seed", opts->seed, "Seed for randomized sampling");
  cmd->add_option("--out", *out, "JSON-lines report path (default stdout)");
  cmd->add_option("--witness-dir", opts->witness_dir, "Where failing witnesses go");
  cmd->add_option("--workers", opts->workers, "Worker threads (default SIGNHOM_WORKERS)");
  cmd->add_option("--criterion", opts->criteria, "Only these criteria")->delimiter(',');
  cmd->callback([=, &status] {
    const auto results = verify::run_claims(verify::acceptance_claims(), *opts);
    std::ostringstream lines;
    bool failed = false;
    for (const auto& r : results) {
      lines << verify::to_json(r).dump() << '\n';
      failed = failed || r.status == verify::Status::kFail;
    }
    if (out->empty()) {
      std::cout << lines.str() << '\n';
    } else {
      std::ofstream f(*out);
      if (!f) throw Error("cannot write " + *out);
      f << lines.str();
    }
    std::cout << verify::summary_table(results);
    status = failed ? kFails : kHolds;
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Homomorphisms of signed and 2-edge-colored graphs"};
  app.require_subcommand(1);
  int status = kHolds;
  add_construct(app, status);
  add_check(app, status);
  add_hom(app, status);
  add_chromatic(app, status);
  add_switch(app, status);
  add_color(app, status);
  add_verify(app, status);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return status;
}
