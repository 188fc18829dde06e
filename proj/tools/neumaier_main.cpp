// Command-line front end. Talks to the library only through the C API.
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "neumaier/neumaier.h"

namespace {

enum Exit { kOk = 0, kFail = 1, kInput = 2, kEmpty = 3 };

using nlohmann::json;

struct Globals {
  bool json_out = false;
  bool quiet = false;
};

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct StatusError : std::runtime_error {
  nm_status status;
  StatusError(nm_status s, const std::string& what) : std::runtime_error(what), status(s) {}
};

void ok(nm_status s) {
  if (s != NM_OK) throw StatusError(s, std::string(nm_status_name(s)) + ": " + nm_last_error());
}

struct GroupDeleter {
  void operator()(nm_group* g) const { nm_group_free(g); }
};
struct SetDeleter {
  void operator()(nm_connection_set* s) const { nm_set_free(s); }
};
using GroupPtr = std::unique_ptr<nm_group, GroupDeleter>;
using SetPtr = std::unique_ptr<nm_connection_set, SetDeleter>;

// Takes ownership of a library string.
json take_json(char* text) {
  std::string s(text);
  nm_string_free(text);
  return json::parse(s);
}

// A value starting with '{' or '[' is inline JSON, anything else a file path.
std::string read_source(const std::string& value) {
  if (!value.empty() && (value.front() == '{' || value.front() == '[')) return value;
  std::ifstream in(value);
  if (!in) throw InputError("cannot read " + value);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

GroupPtr load_group(const std::string& source) {
  nm_group* g = nullptr;
  ok(nm_group_from_json(read_source(source).c_str(), &g));
  return GroupPtr(g);
}

SetPtr load_set(const nm_group* g, const std::string& source) {
  nm_connection_set* s = nullptr;
  ok(nm_set_from_json(g, read_source(source).c_str(), &s));
  return SetPtr(s);
}

std::string join(const json& arr, const char* sep = ", ") {
  std::string out;
  for (const auto& x : arr) {
    if (!out.empty()) out += sep;
    out += x.is_string() ? x.get<std::string>() : x.dump();
  }
  return out;
}

void emit(const Globals& g, const json& report, const std::function<void()>& table) {
  if (g.quiet) return;
  if (g.json_out)
    std::cout << report.dump(2) << "\n";
  else
    table();
}

int cmd_check(const Globals& glob, const std::string& group, const std::string& set) {
  auto g = load_group(group);
  auto s = load_set(g.get(), set);
  int neumaier = 0;
  char* text = nullptr;
  ok(nm_check(s.get(), &neumaier, &text));
  json r = take_json(text);
  emit(glob, r, [&] {
    std::cout << "group       " << r["group"].get<std::string>() << " (order " << r["order"] << ")\n";
    std::cout << "set         {" << join(r["connection_set"]) << "}\n";
    std::cout << "kind        " << r["kind"].get<std::string>() << "\n";
    if (r.contains("diameter")) std::cout << "diameter    " << r["diameter"] << "\n";
    if (r.contains("parameters") && !r["parameters"].is_null())
      std::cout << "parameters  " << r["parameters"]["tuple"].get<std::string>() << "\n";
    if (r.contains("witness") && !r["witness"].empty()) std::cout << "clique      {" << join(r["witness"]) << "}\n";
    if (r.contains("regular_cliques")) std::cout << "cliques     " << r["regular_cliques"].size() << " through e\n";
  });
  return neumaier ? kOk : kFail;
}

int cmd_algebra(const Globals& glob, const std::string& group, const std::string& set,
                const std::vector<std::string>& clique) {
  auto g = load_group(group);
  auto s = load_set(g.get(), set);
  std::vector<const char*> words;
  for (const auto& w : clique) words.push_back(w.c_str());
  char* text = nullptr;
  ok(nm_algebra_report(s.get(), words.empty() ? nullptr : words.data(), words.size(), &text));
  json r = take_json(text);
  emit(glob, r, [&] {
    std::cout << "clique  {" << join(r["clique"]) << "}\n";
    for (const auto& id : r["identities"]) {
      std::cout << (id["pass"].get<bool>() ? "PASS  " : "FAIL  ") << id["name"].get<std::string>();
      for (const char* key : {"a", "lambda", "mu"})
        if (id.contains(key) && !id[key].is_null()) std::cout << "  " << key << "=" << id[key];
      std::cout << "\n";
    }
  });
  if (!clique.empty() && !r["clique_is_regular"].get<bool>()) return kFail;
  return kOk;
}

int cmd_feasible(const Globals& glob, long long k, long long max_n) {
  char* text = nullptr;
  ok(nm_feasible(k, max_n, &text));
  json r = take_json(text);
  emit(glob, r, [&] {
    std::cout << "k = " << r["k"] << ", vertex bound " << r["vertex_bound"] << ", " << r["survivors"]
              << " surviving\n";
    for (const auto& v : r["verdicts"]) {
      std::string mu = v["mu"].is_null() ? "-" : v["mu"].dump();
      std::string why = v["eliminated_by"].is_null() ? "" : v["eliminated_by"].get<std::string>();
      std::printf("%-18s %-21s mu=%-3s %s", v["tuple"].get<std::string>().c_str(), v["status"].get<std::string>().c_str(),
                  mu.c_str(), why.c_str());
      for (const char* key : {"family", "resolution"})
        if (!v[key].get<std::string>().empty()) std::printf(" [%s]", v[key].get<std::string>().c_str());
      if (!v["claim"]["text"].get<std::string>().empty()) std::printf(" %s", v["claim"]["text"].get<std::string>().c_str());
      std::printf("\n");
    }
  });
  return kOk;
}

nm_params parse_params(const std::string& text) {
  std::vector<long long> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InputError("--params expects integers n,k,lambda,a,c[,mu]");
    }
  }
  if (v.size() != 5 && v.size() != 6) throw InputError("--params expects n,k,lambda,a,c[,mu]");
  nm_params p{v[0], v[1], v[2], v[3], v[4], v.size() == 6, v.size() == 6 ? v[5] : 0};
  return p;
}

int cmd_search(const Globals& glob, const std::string& group, const std::string& params, bool all, bool anchor,
               unsigned threads, unsigned long long cap) {
  auto g = load_group(group);
  nm_params p = parse_params(params);
  nm_search_options opt;
  nm_search_options_default(&opt);
  opt.all = all;
  opt.anchor_clique = anchor;
  opt.threads = threads;
  opt.cap = cap;
  std::size_t found = 0;
  char* text = nullptr;
  ok(nm_search(g.get(), &p, &opt, &found, &text));
  json r = take_json(text);
  for (const auto& w : r["warnings"])
    if (!glob.quiet) std::cerr << "warning: " << w.get<std::string>() << "\n";
  emit(glob, r, [&] {
    const auto& st = r["stats"];
    std::cout << "target      " << r["target"]["tuple"].get<std::string>() << " over " << r["group"].get<std::string>()
              << "\n";
    std::cout << "candidates  " << st["candidates"] << " (disconnected " << st["disconnected"] << ", lambda "
              << st["lambda_rejected"] << ", clique " << st["clique_rejected"] << ", mu " << st["mu_rejected"] << ")\n";
    if (r["anchors"].get<int>() > 0) std::cout << "anchors     " << r["anchors"] << " subgroups of order c\n";
    if (found == 0)
      std::cout << "result      proven empty: no connection set has these parameters\n";
    for (const auto& s : r["sets"]) std::cout << "match       {" << join(s) << "}\n";
  });
  return found ? kOk : kEmpty;
}

void print_report(const json& r) {
  std::cout << (r["pass"].get<bool>() ? "PASS  " : "FAIL  ") << r["name"].get<std::string>();
  if (r.contains("parameters") && !r["parameters"].is_null())
    std::cout << "  " << r["kind"].get<std::string>() << " " << r["parameters"]["tuple"].get<std::string>();
  std::cout << "\n";
  if (!r["error"].get<std::string>().empty()) std::cout << "      error: " << r["error"].get<std::string>() << "\n";
  for (const auto& c : r["checks"])
    if (!c["pass"].get<bool>()) std::cout << "      " << c["name"].get<std::string>() << ": " << c["detail"].get<std::string>() << "\n";
}

int cmd_catalog_list(const Globals& glob) {
  char* text = nullptr;
  ok(nm_catalog_list(&text));
  json r = take_json(text);
  emit(glob, r, [&] {
    for (const auto& e : r)
      std::printf("%-22s %-26s %s\n", e["name"].get<std::string>().c_str(),
                  e["expected"]["tuple"].get<std::string>().c_str(), e["description"].get<std::string>().c_str());
  });
  return kOk;
}

int cmd_catalog_verify(const Globals& glob, const std::string& name) {
  int pass = 0;
  char* text = nullptr;
  ok(nm_catalog_verify(name.c_str(), &pass, &text));
  json r = take_json(text);
  emit(glob, r, [&] {
    print_report(r);
    for (const auto& c : r["checks"])
      std::cout << "      " << (c["applicable"].get<bool>() ? (c["pass"].get<bool>() ? "pass " : "FAIL ") : "n/a  ")
                << c["name"].get<std::string>() << (c["detail"].get<std::string>().empty() ? "" : "  ")
                << c["detail"].get<std::string>() << "\n";
  });
  return pass ? kOk : kFail;
}

int cmd_catalog_verify_all(const Globals& glob, unsigned threads) {
  std::size_t failures = 0;
  char* text = nullptr;
  ok(nm_catalog_verify_all(threads, &failures, &text));
  json r = take_json(text);
  emit(glob, r, [&] {
    for (const auto& rep : r["reports"]) print_report(rep);
    std::cout << r["passed"] << " passed, " << r["failed"] << " failed\n";
  });
  return failures ? kFail : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Neumaier Cayley graphs: classification, feasibility, search and catalog"};
  app.require_subcommand(1);
  Globals glob;
  app.add_flag("--json", glob.json_out, "Print the JSON report");
  app.add_flag("--quiet", glob.quiet, "Print nothing; rely on the exit code");
  app.set_version_flag("--version", nm_version());

  std::string group, set, params;
  std::vector<std::string> clique;
  long long k = 0, max_n = 0;
  bool all = false, anchor = false;
  unsigned threads = 1;
  unsigned long long cap = 100000000ULL;
  std::string entry;

  auto* check = app.add_subcommand("check", "Classify Cay(G,S)");
  check->add_option("--group", group, "Group JSON file or inline JSON")->required();
  check->add_option("--set", set, "Connection set JSON file or inline JSON")->required();

  auto* algebra = app.add_subcommand("algebra", "Check the group-ring identities");
  algebra->add_option("--group", group, "Group JSON file or inline JSON")->required();
  algebra->add_option("--set", set, "Connection set JSON file or inline JSON")->required();
  algebra->add_option("--clique", clique, "Clique elements containing e (default: first regular clique)");

  auto* feasible = app.add_subcommand("feasible", "Parameter feasibility sweep for one valency");
  feasible->add_option("--k", k, "Valency")->required()->check(CLI::Range(2, 20));
  feasible->add_option("--max-n", max_n, "Skip tuples with more vertices")->check(CLI::PositiveNumber);

  auto* search = app.add_subcommand("search", "Exhaustive connection-set search");
  search->add_option("--group", group, "Group JSON file or inline JSON")->required();
  search->add_option("--params", params, "n,k,lambda,a,c[,mu]")->required();
  search->add_flag("--all", all, "Report every match instead of the first");
  search->add_flag("--anchor-clique", anchor, "Force a subgroup of order c into S");
  search->add_option("--threads", threads, "Worker threads")->check(CLI::Range(1u, 256u));
  search->add_option("--cap", cap, "Refuse larger candidate spaces");

  auto* catalog = app.add_subcommand("catalog", "Built-in examples");
  catalog->require_subcommand(1);
  auto* list = catalog->add_subcommand("list", "List entries");
  auto* verify = catalog->add_subcommand("verify", "Verify one entry");
  verify->add_option("name", entry, "Entry name")->required();
  auto* verify_all = catalog->add_subcommand("verify-all", "Verify every entry");
  unsigned catalog_threads = 0;
  verify_all->add_option("--threads", catalog_threads, "Worker threads (0: all cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInput;
  }

  try {
    if (*check) return cmd_check(glob, group, set);
    if (*algebra) return cmd_algebra(glob, group, set, clique);
    if (*feasible) return cmd_feasible(glob, k, max_n);
    if (*search) return cmd_search(glob, group, params, all, anchor, threads, cap);
    if (*list) return cmd_catalog_list(glob);
    if (*verify) return cmd_catalog_verify(glob, entry);
    if (*verify_all) return cmd_catalog_verify_all(glob, catalog_threads);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const StatusError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.status == NM_ERR_INTERNAL ? kFail : kInput;
  } catch (const json::exception& e) {
    std::cerr << "error: malformed report: " << e.what() << "\n";
    return kFail;
  }
  return kInput;
}
