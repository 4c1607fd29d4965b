// Command-line front end; talks to the library only through the C API.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "semistar/semistar_c.h"

namespace {

int exit_code(ss_status s) {
  switch (s) {
    case SS_OK: return 0;
    case SS_FAIL: return 1;
    case SS_ERR_PARSE:
    case SS_ERR_SEMANTIC:
    case SS_ERR_ARG: return 2;
    default: return 3;
  }
}

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path);
  if (!in) return false;
  std::stringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"semistar: semistar operations on representable domains"};
  std::string domain_file, expr, scenario, format = "text", report;
  uint64_t seed = 0;
  int samples = 200, bound = 4;
  bool list = false;
  app.add_option("--domain", domain_file, "domain spec file (key=value pairs)");
  app.add_option("--expr", expr, "ideal expression to evaluate against --domain");
  app.add_option("--scenario", scenario, "scenario name, comma-separated names, or all");
  app.add_option("--seed", seed, "sampling seed");
  app.add_option("--samples", samples, "sampled cases per check")->check(CLI::PositiveNumber);
  app.add_option("--bound", bound, "max generators per sampled ideal")->check(CLI::PositiveNumber);
  app.add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--report", report, "write the output here instead of stdout");
  app.add_flag("--list", list, "list shipped scenarios");
  CLI11_PARSE(app, argc, argv);

  ss_format fmt = format == "json" ? SS_FORMAT_JSON : SS_FORMAT_TEXT;
  char* out = nullptr;
  ss_status st;
  if (list) {
    st = ss_scenario_names(&out);
  } else if (!scenario.empty()) {
    if (!expr.empty() || !domain_file.empty()) {
      std::cerr << "error: --scenario cannot be combined with --domain/--expr\n";
      return 2;
    }
    st = ss_run_scenarios(scenario.c_str(), seed, samples, bound, fmt, &out);
  } else if (!expr.empty()) {
    if (domain_file.empty()) {
      std::cerr << "error: --expr needs --domain\n";
      return 2;
    }
    std::string text;
    if (!read_file(domain_file, text)) {
      std::cerr << "error: cannot read " << domain_file << "\n";
      return 2;
    }
    ss_domain* d = nullptr;
    st = ss_domain_parse(text.c_str(), &d);
    if (st == SS_OK) {
      st = ss_eval(d, expr.c_str(), fmt, &out);
      ss_domain_free(d);
    }
  } else {
    std::cerr << app.help();
    return 2;
  }

  if (out) {
    if (report.empty()) {
      std::fputs(out, stdout);
    } else {
      std::ofstream f(report, std::ios::binary);
      f << out;
      if (!f) {
        ss_string_free(out);
        std::cerr << "error: cannot write " << report << "\n";
        return 3;
      }
    }
    ss_string_free(out);
  }
  if (st != SS_OK) std::cerr << "error (" << ss_status_name(st) << "): " << ss_last_error() << "\n";
  return exit_code(st);
}
