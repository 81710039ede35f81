// Command-line front end. All computation happens behind the C API in
// libmil; this binary parses arguments, renders tables, and maps statuses to
// exit codes.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "mil.h"

namespace {

using Json = nlohmann::ordered_json;

struct ProblemHandle {
  mil_problem* p = nullptr;
  ~ProblemHandle() { mil_problem_free(p); }
};

[[noreturn]] void die(mil_status st) {
  std::cerr << "error: " << mil_last_error() << "\n";
  std::exit(static_cast<int>(st));
}

// The library itself honors MIL_PAIR_BUDGET when loading.
ProblemHandle open_problem(const std::string& path) {
  ProblemHandle h;
  mil_status st = mil_problem_from_file(path.c_str(), &h.p);
  if (st != MIL_OK) die(st);
  return h;
}

Json take_json(char* text) {
  Json doc = Json::parse(text);
  mil_string_free(text);
  return doc;
}

void maybe_write_json(const Json& doc, const std::string& path) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) {
    std::cerr << "error: cannot write " << path << "\n";
    std::exit(2);
  }
  out << doc.dump(2) << "\n";
}

std::string cell(const Json& v) {
  if (v.is_null()) return "-";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void print_classify(const Json& doc) {
  const Json& g = doc["group"];
  std::printf("problem %s: group of order %ld\n", doc["problem"].get<std::string>().c_str(),
              g["order"].get<long>());
  std::printf("  in SL: %s   pseudoreflections: %s   transvections: %s\n",
              g["in_sl"].get<bool>() ? "yes" : "no",
              g["has_pseudoreflection"].get<bool>() ? "yes" : "no",
              g["has_transvection"].get<bool>() ? "yes" : "no");
  std::printf("  modular: %s   cyclic: %s\n", g["modular"].get<bool>() ? "yes" : "no",
              g["cyclic"].get<bool>() ? "yes" : "no");
  std::printf("  %-6s %-6s %-10s %-16s %s\n", "index", "order", "det", "rank(g - 1)", "type");
  for (const Json& e : g["elements"]) {
    const char* type = e["transvection"].get<bool>() ? "transvection"
                       : e["pseudoreflection"].get<bool>() ? "pseudoreflection"
                                                          : "";
    std::printf("  %-6d %-6d %-10s %-16d %s\n", e["index"].get<int>(), e["order"].get<int>(),
                e["det"].get<std::string>().c_str(), e["rank_one_minus_g"].get<int>(), type);
  }
}

void print_invariants(const Json& doc) {
  std::printf("problem %s: invariants up to degree %d\n",
              doc["problem"].get<std::string>().c_str(), doc["max_degree"].get<int>());
  std::printf("  hilbert:");
  for (const Json& h : doc["hilbert"]) std::printf(" %d", h.get<int>());
  std::printf("\n  generators:\n");
  for (const Json& g : doc["generators"])
    std::printf("    deg %d: %s\n", g["degree"].get<int>(), g["poly"].get<std::string>().c_str());
  if (doc.contains("relations_hold")) {
    std::printf("  declared relations hold:");
    for (const Json& r : doc["relations_hold"]) std::printf(" %s", r.get<bool>() ? "yes" : "NO");
    std::printf("\n");
  }
}

void print_lc(const Json& doc) {
  std::printf("problem %s: strand table (sigma = %d)\n",
              doc["problem"].get<std::string>().c_str(), doc["sigma"].get<int>());
  std::printf("  %-6s %-6s %-8s %-11s %s\n", "k", "dimV", "rank_H", "rank_fixed", "power");
  for (const Json& r : doc["rows"])
    std::printf("  %-6d %-6d %-8s %-11d %d\n", r["k"].get<int>(), r["dim_v"].get<int>(),
                cell(r["rank_h"]).c_str(), r["rank_fixed"].get<int>(), r["power"].get<int>());
  std::printf("  a-invariant: %s\n", cell(doc["a_invariant"]).c_str());
  if (doc.contains("markers"))
    for (const Json& m : doc["markers"]) std::printf("  marker: %s\n", m.get<std::string>().c_str());
  if (doc.contains("notes"))
    for (const Json& n : doc["notes"]) std::printf("  note: %s\n", n.get<std::string>().c_str());
}

void print_a(const Json& doc) {
  std::printf("problem %s: a-invariant %d (%s route)\n",
              doc["problem"].get<std::string>().c_str(), doc["a_invariant"].get<int>(),
              doc["route"].get<std::string>().c_str());
  if (doc.contains("equals_ambient"))
    std::printf("  equals the ambient a-invariant -n: %s\n",
                doc["equals_ambient"].get<bool>() ? "yes" : "no");
  if (doc.contains("notes"))
    for (const Json& n : doc["notes"]) std::printf("  note: %s\n", n.get<std::string>().c_str());
}

void print_checks(const Json& doc) {
  for (const Json& c : doc["checks"]) {
    std::string line = c["status"].get<std::string>();
    for (auto& ch : line) ch = static_cast<char>(std::toupper(ch));
    std::printf("  [%s] %s", line.c_str(), c["name"].get<std::string>().c_str());
    if (c.contains("expected") && c["status"].get<std::string>() == "fail")
      std::printf("  expected %s, got %s", c["expected"].dump().c_str(), c["actual"].dump().c_str());
    if (c.contains("detail")) std::printf("  (%s)", c["detail"].get<std::string>().c_str());
    std::printf("\n");
  }
  std::printf("%s: %d passed, %d failed", doc["status"].get<std::string>().c_str(),
              doc["passed"].get<int>(), doc["failed"].get<int>());
  if (doc.contains("skipped")) std::printf(", %d skipped", doc["skipped"].get<int>());
  std::printf("\n");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"invariant rings of finite matrix groups and their top local cohomology"};
  app.require_subcommand(1);

  std::string file, json_path, example_id;
  int max_degree = 0;
  std::optional<int> k_from, k_to, floor;

  auto add_json_opt = [&](CLI::App* cmd) { cmd->add_option("--json", json_path, "write the JSON report to a file"); };

  CLI::App* classify = app.add_subcommand("classify", "group order and element classification");
  classify->add_option("file", file, "problem file")->required();
  add_json_opt(classify);

  CLI::App* invariants = app.add_subcommand("invariants", "invariant Hilbert function and generators");
  invariants->add_option("file", file, "problem file")->required();
  invariants->add_option("--max-degree", max_degree, "generator scan bound");
  add_json_opt(invariants);

  CLI::App* lc = app.add_subcommand("lc", "graded strands of top local cohomology");
  lc->add_option("file", file, "problem file")->required();
  lc->add_option("--from", [&](auto& vals) { k_from = std::stoi(vals[0]); return true; }, "lowest degree");
  lc->add_option("--to", [&](auto& vals) { k_to = std::stoi(vals[0]); return true; }, "highest degree");
  add_json_opt(lc);

  CLI::App* ainv = app.add_subcommand("a-invariant", "top nonvanishing degree of local cohomology");
  ainv->add_option("file", file, "problem file")->required();
  ainv->add_option("--floor", [&](auto& vals) { floor = std::stoi(vals[0]); return true; }, "search floor");
  add_json_opt(ainv);

  CLI::App* verify = app.add_subcommand("verify", "run the property cross-checks");
  verify->add_option("file", file, "problem file")->required();
  add_json_opt(verify);

  CLI::App* reproduce = app.add_subcommand("reproduce", "re-run a bundled example");
  reproduce->add_option("example", example_id, std::string("one of: ") + mil_bundled_ids())->required();
  add_json_opt(reproduce);

  CLI11_PARSE(app, argc, argv);

  char* text = nullptr;
  mil_status st = MIL_OK;
  Json doc;

  if (classify->parsed()) {
    auto h = open_problem(file);
    st = mil_classify(h.p, &text);
    if (st != MIL_OK) die(st);
    doc = take_json(text);
    print_classify(doc);
  } else if (invariants->parsed()) {
    auto h = open_problem(file);
    st = mil_invariants(h.p, max_degree, &text);
    if (st != MIL_OK) die(st);
    doc = take_json(text);
    print_invariants(doc);
  } else if (lc->parsed()) {
    auto h = open_problem(file);
    st = mil_local_cohomology(h.p, k_from.value_or(0), k_to.value_or(0),
                              (k_from || k_to) ? 0 : 1, &text);
    if (st != MIL_OK) die(st);
    doc = take_json(text);
    print_lc(doc);
  } else if (ainv->parsed()) {
    auto h = open_problem(file);
    int floor_value = floor.value_or(0);
    st = mil_a_invariant(h.p, floor ? &floor_value : nullptr, &text);
    if (st != MIL_OK) die(st);
    doc = take_json(text);
    print_a(doc);
  } else if (verify->parsed()) {
    auto h = open_problem(file);
    st = mil_verify(h.p, &text);
    if (st != MIL_OK && !text) die(st);
    doc = take_json(text);
    std::printf("verify %s\n", file.c_str());
    print_checks(doc);
  } else if (reproduce->parsed()) {
    st = mil_reproduce(example_id.c_str(), &text);
    if (st != MIL_OK && !text) die(st);
    doc = take_json(text);
    std::printf("reproduce %s\n", example_id.c_str());
    print_checks(doc);
  }

  maybe_write_json(doc, json_path);
  return static_cast<int>(st);
}
