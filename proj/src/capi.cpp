#include "semistar/semistar_c.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "semistar/cli.hpp"

struct ss_domain {
  semistar::Domain domain;
  std::string text;
};

namespace {

thread_local std::string last_error;

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

ss_status fail(ss_status s, const std::string& what) {
  last_error = what;
  return s;
}

ss_status from_kind(semistar::cli::ErrorKind k) {
  using semistar::cli::ErrorKind;
  switch (k) {
    case ErrorKind::Parse: return SS_ERR_PARSE;
    case ErrorKind::Semantic: return SS_ERR_SEMANTIC;
    case ErrorKind::Unsupported: return SS_ERR_UNSUPPORTED;
    case ErrorKind::Zero: return SS_ERR_ZERO;
    case ErrorKind::Internal: return SS_ERR_INTERNAL;
  }
  return SS_ERR_INTERNAL;
}

template <class F>
ss_status guarded(F&& f) {
  try {
    return f();
  } catch (const semistar::cli::CliError& e) {
    return fail(from_kind(e.kind()), e.what());
  } catch (const semistar::ZeroModuleError& e) {
    return fail(SS_ERR_ZERO, e.what());
  } catch (const semistar::UnsupportedOperation& e) {
    return fail(SS_ERR_UNSUPPORTED, e.what());
  } catch (const semistar::ConsistencyError& e) {
    return fail(SS_ERR_INTERNAL, e.what());
  } catch (const semistar::Error& e) {
    return fail(SS_ERR_SEMANTIC, e.what());
  } catch (const std::exception& e) {
    return fail(SS_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(SS_ERR_INTERNAL, "unknown exception");
  }
}

ss_status hand_out(const std::string& s, char** out) {
  *out = dup(s);
  if (!*out) return fail(SS_ERR_INTERNAL, "out of memory");
  return SS_OK;
}

}  // namespace

extern "C" {

const char* ss_version(void) { return "0.1.0"; }

const char* ss_status_name(ss_status s) {
  switch (s) {
    case SS_OK: return "ok";
    case SS_ERR_PARSE: return "parse error";
    case SS_ERR_SEMANTIC: return "semantic error";
    case SS_ERR_UNSUPPORTED: return "unsupported";
    case SS_ERR_ZERO: return "zero module";
    case SS_ERR_INTERNAL: return "internal error";
    case SS_ERR_ARG: return "bad argument";
    case SS_FAIL: return "assertion failed";
  }
  return "unknown status";
}

ss_status ss_domain_parse(const char* text, ss_domain** out) {
  if (!text || !out) return fail(SS_ERR_ARG, "null argument");
  *out = nullptr;
  return guarded([&] {
    auto d = semistar::cli::parse_domain(text);
    *out = new ss_domain{d, text};
    return SS_OK;
  });
}

void ss_domain_free(ss_domain* d) { delete d; }

ss_status ss_domain_describe(const ss_domain* d, char** out) {
  if (!d || !out) return fail(SS_ERR_ARG, "null argument");
  return guarded([&] { return hand_out(d->domain->describe(), out); });
}

ss_status ss_eval(const ss_domain* d, const char* expr, ss_format format, char** out) {
  if (!d || !expr || !out) return fail(SS_ERR_ARG, "null argument");
  *out = nullptr;
  return guarded([&] {
    std::string s = format == SS_FORMAT_JSON ? semistar::cli::eval_json(d->text, expr)
                                             : semistar::cli::eval_text(d->text, expr);
    return hand_out(s, out);
  });
}

ss_status ss_run_scenarios(const char* names, uint64_t seed, int samples, int bound, ss_format format, char** out) {
  if (!names || !out) return fail(SS_ERR_ARG, "null argument");
  if (samples <= 0 || bound <= 0) return fail(SS_ERR_ARG, "samples and bound must be positive");
  *out = nullptr;
  return guarded([&] {
    std::vector<std::string> list;
    std::string all = names;
    size_t b = 0;
    while (b <= all.size()) {
      size_t e = all.find(',', b);
      if (e == std::string::npos) e = all.size();
      if (e > b) list.push_back(all.substr(b, e - b));
      b = e + 1;
    }
    if (list.empty()) return fail(SS_ERR_ARG, "no scenario named");
    semistar::SampleSpec spec;
    spec.seed = seed;
    spec.count = samples;
    spec.generator_bound = bound;
    auto r = semistar::cli::run_scenarios(list, spec);
    std::string s = format == SS_FORMAT_JSON ? semistar::cli::report_json(r) : semistar::cli::report_text(r);
    ss_status st = hand_out(s, out);
    if (st != SS_OK) return st;
    if (r.failed() > 0) return fail(SS_FAIL, std::to_string(r.failed()) + " assertion(s) failed");
    return SS_OK;
  });
}

ss_status ss_scenario_names(char** out) {
  if (!out) return fail(SS_ERR_ARG, "null argument");
  return guarded([&] {
    std::string s;
    for (const auto& n : semistar::cli::scenario_names()) s += n + "\n";
    return hand_out(s, out);
  });
}

const char* ss_last_error(void) { return last_error.c_str(); }

void ss_string_free(char* s) { std::free(s); }

}  // extern "C"
