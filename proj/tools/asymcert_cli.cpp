// Command-line front end for the asymcert shared library. Talks to the
// library exclusively through the C API in asymcert.h; JSON reports are
// rendered to text here when requested.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "asymcert.h"

namespace {

using Json = nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInputError = 2;
constexpr int kExitAuditFailure = 3;

// Owns a char* produced by the library.
struct LibString {
  char* ptr = nullptr;
  ~LibString() { ac_string_free(ptr); }
  std::string str() const { return ptr ? ptr : ""; }
};

struct SystemHandle {
  ac_system* ptr = nullptr;
  ~SystemHandle() { ac_system_free(ptr); }
};

int fail(ac_status status, const LibString& err) {
  std::cerr << "error (" << ac_status_name(status) << ")";
  if (err.ptr) std::cerr << ": " << err.ptr;
  std::cerr << "\n";
  return kExitInputError;
}

bool read_input(const std::string& path, std::string& out) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    out = buf.str();
    return true;
  }
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open '" << path << "'\n";
    return false;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  out = buf.str();
  return true;
}

int load_system(const std::string& path, SystemHandle& handle) {
  std::string text;
  if (!read_input(path, text)) return kExitInputError;
  auto first = text.find_first_not_of(" \t\r\n");
  bool looks_json = first != std::string::npos && text[first] == '{';
  LibString err;
  ac_status status = looks_json ? ac_system_parse_json(text.c_str(), &handle.ptr, &err.ptr)
                                : ac_system_parse_text(text.c_str(), &handle.ptr, &err.ptr);
  if (status != AC_OK) return fail(status, err);
  return kExitOk;
}

void print_feasibility(const Json& j, const std::string& label) {
  std::cout << label << ": " << (j.at("feasible").get<bool>() ? "feasible" : "infeasible")
            << " (pivots " << j.at("pivots").get<long>() << ", threshold "
            << j.at("threshold").get<std::string>() << ")\n";
  if (j.contains("witness"))
    for (const auto& [name, value] : j.at("witness").items())
      std::cout << "  " << name << " = " << value.get<std::string>() << "\n";
}

int emit(const std::string& json_text, const std::string& format,
         void (*render)(const Json&)) {
  if (format == "json") {
    std::cout << json_text << "\n";
  } else {
    render(Json::parse(json_text));
  }
  return kExitOk;
}

void render_certify(const Json& j) {
  std::cout << "n = " << j.at("n").get<size_t>() << "\n"
            << "numerator   = " << j.at("numerator").get<std::string>() << "\n"
            << "denominator = " << j.at("denominator").get<std::string>() << "\n";
  std::cout << "B coefficients (B0..):";
  for (const auto& b : j.at("b_coeffs")) std::cout << " " << b.get<std::string>();
  std::cout << "\ngamma = " << j.at("gamma").get<std::string>() << "\n"
            << "trivial = " << (j.at("trivial").get<bool>() ? "true" : "false") << "\n";
}

void render_omega(const Json& j) {
  for (const auto& level : j.at("levels")) {
    std::cout << "level " << level.at("level").get<int>() << " (dim "
              << level.at("dim").get<int>() << "):\n";
    for (const auto& row : level.at("entries")) {
      std::cout << " ";
      for (const auto& cell : row) std::cout << " " << cell.get<std::string>();
      std::cout << "\n";
    }
  }
  std::cout << "terminal = " << j.at("terminal").get<std::string>() << "\n"
            << "determinant = " << j.at("determinant").get<std::string>() << "\n";
}

void render_solve(const Json& j) {
  print_feasibility(j, "asymptotic system");
  const auto& oracle = j.at("oracle");
  std::cout << "oracle at K=" << oracle.at("k0").get<std::string>() << ": "
            << (oracle.at("feasible").get<bool>() ? "feasible" : "infeasible")
            << (oracle.at("agree").get<bool>() ? " (agrees)" : " (DISAGREES)") << "\n";
}

void render_decide(const Json& j) {
  std::cout << "part 1 (feasible): " << (j.at("part1_feasible").get<bool>() ? "YES" : "NO")
            << "\n";
  if (j.at("part2_nontrivial").is_null()) {
    std::cout << "part 2 (subset non-trivial): not applicable\n";
  } else {
    std::cout << "part 2 (subset non-trivial): "
              << (j.at("part2_nontrivial").get<bool>() ? "YES" : "NO") << "\n";
    print_feasibility(j.at("branch_positive"), "positive branch");
    print_feasibility(j.at("branch_negative"), "negative branch");
  }
  for (const auto& s : j.at("oracle_samples"))
    std::cout << "oracle " << s.at("stage").get<std::string>() << " at K="
              << s.at("k0").get<std::string>() << ": "
              << (s.at("agree").get<bool>() ? "agrees" : "DISAGREES") << "\n";
  if (j.contains("audit")) {
    const auto& audit = j.at("audit");
    std::cout << "audit: " << (audit.at("passed").get<bool>() ? "passed" : "FAILED") << "\n";
    for (const auto& f : audit.at("findings"))
      std::cout << "  [" << f.at("stage").get<std::string>() << "] "
                << f.at("detail").get<std::string>() << "\n";
  }
}

void render_selftest(const Json& j) {
  for (const auto& s : j.at("suites"))
    std::cout << s.at("suite").get<std::string>() << ": " << s.at("passed").get<int>()
              << " passed, " << s.at("failed").get<int>() << " failed\n";
  std::cout << "overall: " << (j.at("passed").get<bool>() ? "passed" : "FAILED") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact feasibility and subset-non-triviality decisions for linear systems"};
  app.require_subcommand(1);

  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  ac_options options;
  ac_options_init(&options);
  app.add_option("--pivot-limit", options.pivot_limit, "Simplex pivot ceiling (0 = default)");

  std::vector<std::string> scalars;
  auto* certify = app.add_subcommand("certify", "Certificate data for rational scalars");
  certify->add_option("scalars", scalars, "Scalars as p or p/q")->required();

  int omega_n = 0;
  auto* omega = app.add_subcommand("omega", "Coefficient-matrix reduction chain");
  omega->add_option("--n", omega_n, "Matrix dimension (>= 2)")->required();

  std::string input_path;
  auto* solve = app.add_subcommand("solve-asym", "Eventual feasibility of a system");
  solve->add_option("input", input_path, "System file (text or JSON), - for stdin")->required();

  std::vector<std::string> subset;
  auto* decide = app.add_subcommand("decide", "Two-part decision with audit");
  decide->add_option("input", input_path, "System file (text or JSON), - for stdin")->required();
  decide->add_option("--subset", subset, "Variable subset to test for non-triviality")
      ->required();

  auto* audit = app.add_subcommand("audit", "Run the decision and report only the audit");
  audit->add_option("input", input_path, "System file (text or JSON), - for stdin")->required();
  audit->add_option("--subset", subset, "Variable subset to test for non-triviality")->required();

  auto* selftest = app.add_subcommand("selftest", "Randomized property suites");
  selftest->add_option("--seed", options.seed, "RNG seed");
  selftest->add_option("--samples", options.selftest_trials, "Trials per suite (>= 1)")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  LibString out, err;

  if (certify->parsed()) {
    std::vector<const char*> ptrs;
    for (const auto& s : scalars) ptrs.push_back(s.c_str());
    ac_status status = ac_certify(ptrs.data(), ptrs.size(), &out.ptr, &err.ptr);
    if (status != AC_OK) return fail(status, err);
    return emit(out.str(), format, render_certify);
  }

  if (omega->parsed()) {
    ac_status status = ac_omega_chain(omega_n, &out.ptr, &err.ptr);
    if (status != AC_OK) return fail(status, err);
    return emit(out.str(), format, render_omega);
  }

  if (solve->parsed()) {
    SystemHandle sys;
    if (int code = load_system(input_path, sys); code != kExitOk) return code;
    ac_status status = ac_solve_asym(sys.ptr, &options, &out.ptr, &err.ptr);
    if (status != AC_OK) return fail(status, err);
    return emit(out.str(), format, render_solve);
  }

  if (decide->parsed() || audit->parsed()) {
    SystemHandle sys;
    if (int code = load_system(input_path, sys); code != kExitOk) return code;
    std::vector<const char*> ptrs;
    for (const auto& s : subset) ptrs.push_back(s.c_str());
    ac_status status =
        ac_decide(sys.ptr, ptrs.data(), ptrs.size(), &options, 1, &out.ptr, &err.ptr);
    if (status != AC_OK) return fail(status, err);
    Json j = Json::parse(out.str());
    bool audit_passed = j.at("audit").at("passed").get<bool>();
    if (audit->parsed()) {
      if (format == "json")
        std::cout << j.at("audit").dump() << "\n";
      else
        render_decide(j);
    } else {
      emit(out.str(), format, render_decide);
    }
    return audit_passed ? kExitOk : kExitAuditFailure;
  }

  if (selftest->parsed()) {
    ac_status status = ac_selftest(&options, &out.ptr, &err.ptr);
    if (status != AC_OK) return fail(status, err);
    emit(out.str(), format, render_selftest);
    return Json::parse(out.str()).at("passed").get<bool>() ? kExitOk : kExitAuditFailure;
  }

  return kExitInputError;
}
