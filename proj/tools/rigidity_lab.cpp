#include "rigidity/campaign.hpp"
#include "rigidity/catalog.hpp"
#include "rigidity/error.hpp"
#include "rigidity/fourier.hpp"
#include "rigidity/io.hpp"
#include "rigidity/monodromy.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace rigidity;

enum Exit : int { kOk = 0, kFailed = 1, kInput = 2, kNonRealizable = 3, kHypothesis = 4 };

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonRealizable: return kNonRealizable;
    case ErrorKind::HypothesisViolated: return kHypothesis;
    case ErrorKind::Generation:
    case ErrorKind::Internal: return kFailed;
    default: return kInput;
  }
}

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot open input file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

MonodromyTuple load_tuple(const std::string& path) {
  MonodromyTuple t = tuple_from_json(read_input(path));
  validate(t);
  return t;
}

void emit(const std::string& text) {
  std::cout << text;
  if (text.empty() || text.back() != '\n') std::cout << '\n';
}

// Rewrites "trials=500" style tokens into "--trials 500".
std::vector<std::string> normalize_args(int argc, char** argv) {
  static const std::map<std::string, std::string> keys = {
      {"trials", "--trials"},         {"max_rank", "--max-rank"}, {"max-rank", "--max-rank"},
      {"max_points", "--max-points"}, {"max-points", "--max-points"}, {"seed", "--seed"},
      {"threads", "--threads"}};
  std::vector<std::string> out;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    const auto eq = a.find('=');
    if (!a.starts_with("-") && eq != std::string::npos) {
      if (auto it = keys.find(a.substr(0, eq)); it != keys.end()) {
        out.push_back(it->second);
        out.push_back(a.substr(eq + 1));
        continue;
      }
    }
    out.push_back(std::move(a));
  }
  std::reverse(out.begin(), out.end());  // CLI11 consumes the vector from the back
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rigidity index and Fourier transform of regular local systems on the projective line", "rigidity_lab"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name = "json";
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();

  std::string input;
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("--input,input", input, "Tuple JSON file ('-' or omitted reads stdin)");
  };

  auto* rig = app.add_subcommand("rig", "Rigidity index of a monodromy tuple");
  add_input(rig);
  auto* fourier = app.add_subcommand("fourier", "Local data of the Fourier transform by stationary phase");
  add_input(fourier);

  auto* verify = app.add_subcommand("verify", "Check that the Fourier transform preserves the rigidity index");
  add_input(verify);
  bool random = false;
  bool force = false;
  CampaignConfig config;
  verify->add_flag("--random", random, "Run a seeded random campaign instead of a single tuple");
  verify->add_flag("--force", force, "Run on reducible input anyway");
  verify->add_option("--trials", config.trials, "Campaign trials")->capture_default_str();
  verify->add_option("--max-rank", config.max_rank, "Largest rank drawn")->capture_default_str();
  verify->add_option("--max-points", config.max_points, "Largest number of finite points")->capture_default_str();
  verify->add_option("--seed", config.seed, "Campaign seed")->capture_default_str();
  verify->add_option("--threads", config.threads, "Worker threads (0 = hardware)")->capture_default_str();

  auto* catalog = app.add_subcommand("catalog", "Shipped example tuples");
  auto* list = catalog->add_subcommand("list", "List entries with expected values");
  auto* show = catalog->add_subcommand("show", "Print the tuple JSON of an entry");
  std::string entry_name;
  show->add_option("name", entry_name, "Entry name")->required();
  catalog->require_subcommand(1);
  catalog->fallthrough();

  try {
    auto args = normalize_args(argc, argv);
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  const Format format = format_name == "text" ? Format::Text : Format::Json;

  try {
    if (rig->parsed()) {
      emit(render(rigidity_report(load_tuple(input)), format));
      return kOk;
    }
    if (fourier->parsed()) {
      emit(render(stationary_phase(load_tuple(input)), format));
      return kOk;
    }
    if (verify->parsed()) {
      if (random) {
        const CampaignSummary s = run_campaign(config);
        emit(render(s, format));
        return s.all_equal && s.corollary_failures == 0 ? kOk : kFailed;
      }
      const PreservationReport r = verify_preservation(load_tuple(input), VerifyOptions{force});
      emit(render(r, format));
      if (!r.hypothesis_satisfied) return kOk;
      return r.equal && identities_hold(r) ? kOk : kFailed;
    }
    if (catalog->parsed()) {
      const auto entries = load_catalog();
      if (list->parsed()) {
        emit(render_catalog_list(entries, format));
        return kOk;
      }
      if (show->parsed()) {
        const CatalogEntry* e = find_entry(entries, entry_name);
        if (e == nullptr) throw Error(ErrorKind::Validation, "unknown catalog entry: " + entry_name);
        emit(tuple_to_json(e->tuple));
        return kOk;
      }
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailed;
  }
  return kFailed;
}
