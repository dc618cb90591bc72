#include "tkit/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tkit/batch.hpp"
#include "tkit/codec.hpp"
#include "tkit/enumerator.hpp"
#include "tkit/error.hpp"
#include "tkit/meta_nf.hpp"
#include "tkit/normalize.hpp"
#include "tkit/reducibility.hpp"
#include "tkit/stdlib.hpp"

namespace tkit {

namespace {

using nlohmann::json;

// shared per-invocation state
struct Session {
  bool json_output = false;
  Budget budget;
  std::ostream* out;
  EvalStats last_stats;
  double wall_ms = 0.0;

  void emit_ok(const std::string& command, const json& payload,
               const std::string& text) {
    if (json_output) {
      json doc;
      doc["status"] = "ok";
      doc["command"] = command;
      doc["payload"] = payload;
      doc["metrics"] = {{"steps", last_stats.steps},
                        {"nodes", last_stats.nodes},
                        {"delta_hits", last_stats.delta_hits},
                        {"wall_ms", wall_ms}};
      *out << doc.dump(2) << "\n";
    } else {
      *out << text;
    }
  }
};

NameResolver combinator_resolver() {
  return [](const std::string& name) -> TermPtr {
    const Combinator* c = find_combinator(name);
    return c ? c->term : nullptr;
  };
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// term input via -e EXPR, positional FILE, or --combinator NAME
struct TermInput {
  std::vector<std::string> exprs;
  std::vector<std::string> files;
  std::string combinator;

  void attach(CLI::App* cmd, int max_terms = 1) {
    cmd->add_option("-e,--expr", exprs, "term expression")
        ->expected(0, max_terms);
    cmd->add_option("file", files, "file containing a term")
        ->expected(0, max_terms);
    cmd->add_option("--combinator", combinator,
                    "library combinator name (Add, Mult, P0, ...)");
  }

  std::vector<TermPtr> terms(size_t want) const {
    std::vector<TermPtr> out;
    for (const std::string& e : exprs)
      out.push_back(parse_term(e, {}, combinator_resolver()));
    for (const std::string& f : files)
      out.push_back(parse_term(read_file(f), {}, combinator_resolver()));
    if (!combinator.empty()) {
      const Combinator* c = find_combinator(combinator);
      if (!c) throw InputError("unknown combinator: " + combinator);
      out.push_back(c->term);
    }
    if (out.size() != want)
      throw InputError("expected " + std::to_string(want) +
                       " term(s), got " + std::to_string(out.size()));
    return out;
  }
};

ReducibilityWitness witness_from(const std::string& witness_file,
                                 const TypePtr& tau) {
  if (witness_file.empty()) {
    if (!type_equal(tau, tree_type()))
      throw InputError(
          "only the identity witness at the tree type is built in; pass "
          "--witness FILE for type " +
          print_type(tau));
    return identity_witness();
  }
  TermPtr m = parse_term(read_file(witness_file), {}, combinator_resolver());
  return make_witness(tau, m);
}

struct Timer {
  std::chrono::steady_clock::time_point start =
      std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start)
        .count();
  }
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"System T kernel and metaprogramming toolkit"};
  app.require_subcommand(1);

  Session session;
  session.out = &out;

  uint64_t budget_steps = 0, budget_nodes = 0;
  bool no_accel = false;
  app.add_option("--budget-steps", budget_steps, "max reduction steps");
  app.add_option("--budget-nodes", budget_nodes, "max materialized nodes");
  app.add_flag("--no-accel", no_accel,
               "disable accelerated arithmetic combinators");
  app.add_flag("--json", session.json_output, "machine-readable output");

  // --- check ---------------------------------------------------------------
  auto* c_check = app.add_subcommand("check", "typecheck a term");
  TermInput check_in;
  check_in.attach(c_check);

  // --- normalize -------------------------------------------------------------
  auto* c_norm = app.add_subcommand("normalize", "compute the normal form");
  TermInput norm_in;
  norm_in.attach(c_norm);

  // --- eq --------------------------------------------------------------------
  auto* c_eq = app.add_subcommand("eq", "decide provable equality");
  TermInput eq_in;
  eq_in.attach(c_eq, 2);

  // --- encode ------------------------------------------------------------------
  auto* c_encode =
      app.add_subcommand("encode", "Godel code of a pure closed normal form");
  TermInput encode_in;
  encode_in.attach(c_encode);

  // --- enum-nf ----------------------------------------------------------------
  auto* c_enum = app.add_subcommand(
      "enum-nf", "census of pure closed normal forms of a type");
  std::string enum_type;
  uint32_t enum_size = 8;
  c_enum->add_option("--type", enum_type, "the type")->required();
  c_enum->add_option("--max-size", enum_size, "node-count bound");

  // --- build-enumerator ---------------------------------------------------------
  auto* c_build = app.add_subcommand("build-enumerator",
                                     "synthesize the enumerator for a type");
  std::string build_type, build_emit;
  c_build->add_option("--type", build_type, "the type")->required();
  c_build->add_option("--emit", build_emit, "write the enumerator term here");

  // --- roundtrip ---------------------------------------------------------------
  auto* c_round = app.add_subcommand(
      "roundtrip", "decode the code of every census term and compare");
  std::string round_type;
  std::string round_max_code = "2000";
  uint32_t round_census = 12;
  int round_threads = 0;
  c_round->add_option("--type", round_type, "the type")->required();
  c_round->add_option("--max-code", round_max_code, "code bound");
  c_round->add_option("--max-size", round_census, "census node-count bound");
  c_round->add_option("--threads", round_threads,
                      "worker count (1 = serial reference)");

  // --- tree-code ------------------------------------------------------------------
  auto* c_tree = app.add_subcommand(
      "tree-code", "binary tree and numeral of a normal form");
  TermInput tree_in;
  tree_in.attach(c_tree);

  // --- encode-u / decode-v -----------------------------------------------------
  auto* c_encu = app.add_subcommand("encode-u", "U-encoding of a functional");
  std::string encu_sigma, encu_tau, encu_witness, encu_emit;
  TermInput encu_in;
  encu_in.attach(c_encu);
  c_encu->add_option("--sigma", encu_sigma, "domain type")->required();
  c_encu->add_option("--tau", encu_tau, "codomain type")->required();
  c_encu->add_option("--witness", encu_witness, "witness term file");
  c_encu->add_option("--emit", encu_emit, "write the encoding here");

  auto* c_decv = app.add_subcommand("decode-v", "V-decoding of an integer map");
  std::string decv_sigma, decv_tau, decv_witness, decv_emit;
  TermInput decv_in;
  decv_in.attach(c_decv);
  c_decv->add_option("--sigma", decv_sigma, "domain type")->required();
  c_decv->add_option("--tau", decv_tau, "codomain type")->required();
  c_decv->add_option("--witness", decv_witness, "witness term file");
  c_decv->add_option("--emit", decv_emit, "write the decoding here");

  // --- lemma-a -------------------------------------------------------------------
  auto* c_lemma = app.add_subcommand(
      "lemma-a", "check A (i+j) j = A i 0 over a range");
  std::string lemma_type;
  uint64_t lemma_max = 4;
  c_lemma->add_option("--type", lemma_type, "the type")->required();
  c_lemma->add_option("--max", lemma_max, "check all i, j up to this bound");

  // global flags may follow the subcommand name
  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      // --help and friends
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  if (budget_steps > 0) session.budget.max_steps = budget_steps;
  if (budget_nodes > 0) session.budget.max_nodes = budget_nodes;
  session.budget.accel = !no_accel;

  Timer timer;
  try {
    if (*c_check) {
      TermPtr t = check_in.terms(1)[0];
      TypePtr ty = infer_type(t);
      session.wall_ms = timer.ms();
      session.emit_ok("check",
                      {{"term", print_term(t)}, {"type", print_type(ty)}},
                      print_type(ty) + "\n");
    } else if (*c_norm) {
      TermPtr t = norm_in.terms(1)[0];
      NormalForm nf = normalize(t, session.budget, {}, &session.last_stats);
      session.wall_ms = timer.ms();
      session.emit_ok(
          "normalize",
          {{"term", print_term(nf.term)}, {"type", print_type(nf.type)}},
          print_term(nf.term) + "\n-- steps: " +
              std::to_string(session.last_stats.steps) +
              ", delta: " + std::to_string(session.last_stats.delta_hits) +
              "\n");
    } else if (*c_eq) {
      std::vector<TermPtr> ts = eq_in.terms(2);
      bool equal = equal_terms(ts[0], ts[1], session.budget);
      session.wall_ms = timer.ms();
      session.emit_ok("eq", {{"equal", equal}},
                      std::string(equal ? "equal" : "not equal") + "\n");
    } else if (*c_encode) {
      TermPtr t = encode_in.terms(1)[0];
      Nat code = encode_oslash(t);
      std::string notation = oslash_notation(t);
      session.wall_ms = timer.ms();
      session.emit_ok("encode",
                      {{"code", code.to_string()}, {"notation", notation}},
                      notation + "\n" + code.to_string() + "\n");
    } else if (*c_enum) {
      TypePtr tau = parse_type(enum_type);
      std::vector<TermPtr> census = enumerate_pure_closed_nf(tau, enum_size);
      session.wall_ms = timer.ms();
      json names = json::array();
      std::string text;
      for (const TermPtr& t : census) {
        std::string line = print_term(t, {}, true);
        names.push_back(line);
        text += line + "\n";
      }
      session.emit_ok("enum-nf",
                      {{"type", print_type(tau)},
                       {"max_size", enum_size},
                       {"census", names}},
                      text);
    } else if (*c_build) {
      TypePtr tau = parse_type(build_type);
      EnumeratorBundle bundle = build_bundle(tau);
      std::string e_text = print_term(bundle.e_term.term, {}, true);
      if (!build_emit.empty()) {
        std::ofstream file(build_emit);
        if (!file) throw InputError("cannot write file: " + build_emit);
        file << e_text << "\n";
      }
      session.wall_ms = timer.ms();
      json degenerate = json::array();
      for (size_t j = 0; j < bundle.j_degenerate.size(); ++j)
        for (size_t i = 0; i < bundle.j_degenerate[j].size(); ++i)
          if (bundle.j_degenerate[j][i])
            degenerate.push_back({{"j", j}, {"i", i + 1}});
      json subs = json::array();
      for (const TypePtr& s : bundle.subs) subs.push_back(print_type(s));
      std::string text = "E : " + print_type(bundle.e_term.type) + "\n";
      if (build_emit.empty())
        text += e_text + "\n";
      else
        text += "written to " + build_emit + "\n";
      session.emit_ok("build-enumerator",
                      {{"type", print_type(tau)},
                       {"subtypes", subs},
                       {"degenerate", degenerate},
                       {"emitted", build_emit}},
                      text);
    } else if (*c_round) {
      TypePtr tau = parse_type(round_type);
      Nat max_code = Nat::from_string(round_max_code);
      Budget budget = session.budget;
      if (budget_steps == 0) budget.max_steps = Budget::for_enumerator().max_steps;
      RoundtripReport report =
          roundtrip_suite(tau, max_code, round_census, budget, round_threads);
      session.wall_ms = timer.ms();
      json rows = json::array();
      std::string text;
      for (const RoundtripRow& row : report.rows) {
        if (!row.in_range) {
          text += "skip  code " + row.code.to_string() + "  " + row.term +
                  "  (over bound)\n";
          continue;
        }
        rows.push_back({{"code", row.code.to_string()},
                        {"term", row.term},
                        {"ok", row.ok},
                        {"steps", row.steps},
                        {"delta_hits", row.delta_hits}});
        text += std::string(row.ok ? "pass" : "FAIL") + "  code " +
                row.code.to_string() + "  " + row.term + "  steps " +
                std::to_string(row.steps) + "\n";
        if (!row.error.empty()) text += "      error: " + row.error + "\n";
      }
      text += std::to_string(report.passed) + "/" +
              std::to_string(report.checked) + " passed\n";
      session.emit_ok("roundtrip",
                      {{"type", report.type_text},
                       {"rows", rows},
                       {"checked", report.checked},
                       {"passed", report.passed}},
                      text);
      if (!report.all_ok) return 1;
    } else if (*c_tree) {
      TermPtr t = tree_in.terms(1)[0];
      TreePtr tree = tree_of_nf(t);
      Nat numeral = tree_numeral(tree);
      session.wall_ms = timer.ms();
      session.emit_ok("tree-code",
                      {{"tree", print_tree(tree)},
                       {"numeral", numeral.to_string()},
                       {"term", print_term(t, {}, true)}},
                      print_tree(tree) + "\n" + numeral.to_string() + "\n");
    } else if (*c_encu) {
      TypePtr sigma = parse_type(encu_sigma);
      TypePtr tau = parse_type(encu_tau);
      TermPtr f = encu_in.terms(1)[0];
      ReducibilityWitness wit = witness_from(encu_witness, tau);
      EnumeratorBundle bundle = build_bundle(sigma);
      TermPtr u = encode_U(f, sigma, tau, wit, bundle);
      std::string u_text = print_term(u, {}, true);
      if (!encu_emit.empty()) {
        std::ofstream file(encu_emit);
        if (!file) throw InputError("cannot write file: " + encu_emit);
        file << u_text << "\n";
      }
      session.wall_ms = timer.ms();
      session.emit_ok("encode-u", {{"term", u_text}},
                      encu_emit.empty() ? u_text + "\n"
                                        : "written to " + encu_emit + "\n");
    } else if (*c_decv) {
      TypePtr sigma = parse_type(decv_sigma);
      TypePtr tau = parse_type(decv_tau);
      TermPtr g = decv_in.terms(1)[0];
      ReducibilityWitness wit = witness_from(decv_witness, sigma);
      EnumeratorBundle bundle = build_bundle(tau);
      TermPtr v = decode_V(g, sigma, tau, wit, bundle);
      std::string v_text = print_term(v, {}, true);
      if (!decv_emit.empty()) {
        std::ofstream file(decv_emit);
        if (!file) throw InputError("cannot write file: " + decv_emit);
        file << v_text << "\n";
      }
      session.wall_ms = timer.ms();
      session.emit_ok("decode-v", {{"term", v_text}},
                      decv_emit.empty() ? v_text + "\n"
                                        : "written to " + decv_emit + "\n");
    } else if (*c_lemma) {
      TypePtr tau = parse_type(lemma_type);
      EnumeratorBundle bundle = build_bundle(tau);
      Budget budget = session.budget;
      if (budget_steps == 0) budget.max_steps = Budget::for_enumerator().max_steps;
      json rows = json::array();
      std::string text;
      bool all_ok = true;
      for (uint64_t i = 0; i <= lemma_max; ++i) {
        for (uint64_t j = 0; j <= lemma_max; ++j) {
          bool ok = check_lemma_a(bundle, i, j, budget);
          all_ok = all_ok && ok;
          rows.push_back({{"i", i}, {"j", j}, {"ok", ok}});
          text += std::string(ok ? "pass" : "FAIL") + "  i=" +
                  std::to_string(i) + " j=" + std::to_string(j) + "\n";
        }
      }
      session.wall_ms = timer.ms();
      session.emit_ok("lemma-a",
                      {{"type", print_type(tau)}, {"rows", rows},
                       {"all_ok", all_ok}},
                      text);
      if (!all_ok) return 1;
    }
  } catch (const Error& e) {
    if (session.json_output) {
      json doc;
      doc["status"] = "error";
      doc["error"] = {{"category", e.category}, {"message", e.what()}};
      out << doc.dump(2) << "\n";
    } else {
      err << e.category << " error: " << e.what() << "\n";
    }
    return 1;
  }
  return 0;
}

}  // namespace tkit
