#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "asymvar/report.hpp"

namespace fs = std::filesystem;
using namespace asymvar;

namespace {

struct Flags {
  bool json = false;
  int tower_limit = -1;
  int iter_cap = -1;
  bool no_oracle = false;
  bool keep_going = false;
};

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw InputError("cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_atomic(const fs::path& p, const std::string& text) {
  fs::path tmp = p;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    out << text;
  }
  fs::rename(tmp, p);
}

InputSpec load(const fs::path& file, const Flags& flags) {
  InputSpec spec = parse_input(read_file(file));
  if (flags.tower_limit >= 0) spec.options.engine.tower_limit = flags.tower_limit;
  if (flags.iter_cap >= 0) spec.options.engine.iteration_cap = flags.iter_cap;
  if (flags.no_oracle) spec.options.oracle = false;
  if (flags.keep_going) spec.options.keep_going = true;
  return spec;
}

std::pair<AnalysisReport, double> run(const InputSpec& spec) {
  auto t0 = std::chrono::steady_clock::now();
  AnalysisReport rep = analyze(spec.map, spec.options);
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return {rep, s};
}

int report_command(const fs::path& file, const Flags& flags, Section sections) {
  auto [rep, seconds] = run(load(file, flags));
  if (flags.json)
    std::cout << to_json(rep, sections, seconds).dump(2) << "\n";
  else
    std::cout << format_text(rep, sections, seconds);
  return rep.errors.empty() ? 0 : 1;
}

// First differing line of two reports, for mismatch messages.
std::string first_difference(const std::string& want, const std::string& got) {
  std::istringstream a(want), b(got);
  std::string la, lb;
  int line = 0;
  while (true) {
    ++line;
    bool ha = static_cast<bool>(std::getline(a, la)), hb = static_cast<bool>(std::getline(b, lb));
    if (!ha && !hb) return "";
    if (!ha) la = "<end of file>";
    if (!hb) lb = "<end of file>";
    if (la != lb) return "  line " + std::to_string(line) + "\n  - " + la + "\n  + " + lb + "\n";
  }
}

int corpus_command(const fs::path& dir, const Flags& flags, bool update) {
  if (!fs::is_directory(dir)) {
    std::cerr << "error: " << dir << " is not a directory\n";
    return 1;
  }
  std::vector<fs::path> inputs;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.path().extension() == ".map") inputs.push_back(e.path());
  std::sort(inputs.begin(), inputs.end());
  if (inputs.empty()) {
    std::cerr << "warning: no .map files in " << dir << "\n";
    std::cout << "corpus: 0 inputs, 0 mismatches\n";
    return 0;
  }
  int mismatches = 0, errors = 0;
  for (const auto& in : inputs) {
    fs::path expected = in;
    expected.replace_extension(".expected");
    std::string got;
    double seconds = 0;
    try {
      auto [rep, s] = run(load(in, flags));
      seconds = s;
      got = format_text(rep);
      if (!rep.errors.empty()) ++errors;
    } catch (const std::exception& e) {
      std::cout << "ERROR " << in.filename().string() << ": " << e.what() << "\n";
      ++errors;
      continue;
    }
    if (update) {
      write_atomic(expected, got);
      std::cout << "updated " << expected.filename().string() << "\n";
      continue;
    }
    if (!fs::exists(expected)) {
      std::cout << "MISMATCH " << in.filename().string() << ": no expected report\n";
      ++mismatches;
      continue;
    }
    std::string want = canonical_section(read_file(expected));
    if (want != canonical_section(got)) {
      std::cout << "MISMATCH " << in.filename().string() << "\n" << first_difference(want, canonical_section(got));
      ++mismatches;
    } else {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.3f", seconds);
      std::cout << "ok " << in.filename().string() << " (" << buf << " s)\n";
    }
  }
  std::cout << "corpus: " << inputs.size() << " inputs, " << mismatches << " mismatches, " << errors << " errors\n";
  return mismatches == 0 && errors == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Asymptotic variety, geometric basis and phantom curves of plane polynomial maps"};
  app.require_subcommand(1);
  Flags flags;
  std::string file;
  bool update = false;

  struct Command {
    const char* name;
    const char* help;
    Section sections;
  };
  const Command commands[] = {
      {"analyze", "full report", Section::All},
      {"basis", "normalization, engine leaves and geometric basis", Section::Input | Section::Basis},
      {"phantom", "implicit components and phantom curves", Section::Input | Section::Phantom},
      {"certify", "surjectivity certificate", Section::Input | Section::Certificate | Section::Verdicts},
      {"picard", "Picard candidates and bounds", Section::Input | Section::Picard},
      {"oracle", "resultant non-properness oracle and reconciliation", Section::Input | Section::Oracle},
  };
  std::vector<std::pair<CLI::App*, Section>> subs;
  for (const auto& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("file", file, "input file")->required();
    sub->add_flag("--json", flags.json, "JSON output");
    sub->add_option("--tower-limit", flags.tower_limit, "maximum tower height");
    sub->add_option("--iter-cap", flags.iter_cap, "maximum branch depth");
    sub->add_flag("--no-oracle", flags.no_oracle, "skip the resultant oracle");
    sub->add_flag("--keep-going", flags.keep_going, "emit partial reports on per-entry failures");
    subs.emplace_back(sub, c.sections);
  }
  CLI::App* corpus = app.add_subcommand("corpus", "compare a directory of .map inputs against .expected reports");
  corpus->add_option("dir", file, "corpus directory")->required();
  corpus->add_flag("--update", update, "rewrite the expected reports");
  corpus->add_option("--tower-limit", flags.tower_limit, "maximum tower height");
  corpus->add_option("--iter-cap", flags.iter_cap, "maximum branch depth");

  CLI11_PARSE(app, argc, argv);
  try {
    if (corpus->parsed()) return corpus_command(file, flags, update);
    for (const auto& [sub, sections] : subs)
      if (sub->parsed()) return report_command(file, flags, sections);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
