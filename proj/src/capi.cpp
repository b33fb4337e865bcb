#include "asymcert.h"

#include <cstring>
#include <new>
#include <string>

#include "report.hpp"
#include "selftest.hpp"
#include "simplex.hpp"

namespace {

using namespace asymcert;

char* dup_string(const std::string& s) {
  char* out = new (std::nothrow) char[s.size() + 1];
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void set_error(char** err_msg, const std::string& msg) {
  if (err_msg) *err_msg = dup_string(msg);
}

// Runs fn, mapping C++ exceptions onto status codes at the boundary.
template <class Fn>
ac_status guarded(char** err_msg, Fn&& fn) {
  try {
    return fn();
  } catch (const ParseError& e) {
    set_error(err_msg, e.what());
    return AC_ERR_PARSE;
  } catch (const PivotLimitError& e) {
    set_error(err_msg, e.what());
    return AC_ERR_LIMIT;
  } catch (const std::invalid_argument& e) {
    set_error(err_msg, e.what());
    return AC_ERR_INVALID_ARGUMENT;
  } catch (const std::domain_error& e) {
    set_error(err_msg, e.what());
    return AC_ERR_ARITHMETIC;
  } catch (const Json::exception& e) {
    set_error(err_msg, e.what());
    return AC_ERR_PARSE;
  } catch (const std::exception& e) {
    set_error(err_msg, e.what());
    return AC_ERR_INTERNAL;
  }
}

ac_options effective(const ac_options* options) {
  ac_options out;
  ac_options_init(&out);
  if (options) out = *options;
  if (out.selftest_trials <= 0) out.selftest_trials = 50;
  return out;
}

}  // namespace

struct ac_system {
  asymcert::LinearSystem sys;
};

extern "C" {

void ac_options_init(ac_options* options) {
  if (!options) return;
  options->pivot_limit = 0;
  options->seed = 0;
  options->selftest_trials = 50;
}

const char* ac_status_name(ac_status status) {
  switch (status) {
    case AC_OK: return "ok";
    case AC_ERR_INVALID_ARGUMENT: return "invalid argument";
    case AC_ERR_PARSE: return "parse error";
    case AC_ERR_ARITHMETIC: return "arithmetic error";
    case AC_ERR_LIMIT: return "pivot limit exceeded";
    case AC_ERR_INTERNAL: return "internal error";
  }
  return "unknown";
}

void ac_string_free(char* s) { delete[] s; }

ac_status ac_system_parse_text(const char* text, ac_system** out, char** err_msg) {
  if (!text || !out) {
    set_error(err_msg, "null argument");
    return AC_ERR_INVALID_ARGUMENT;
  }
  *out = nullptr;
  return guarded(err_msg, [&] {
    auto sys = parse_system(text);
    *out = new ac_system{std::move(sys)};
    return AC_OK;
  });
}

ac_status ac_system_parse_json(const char* json_text, ac_system** out, char** err_msg) {
  if (!json_text || !out) {
    set_error(err_msg, "null argument");
    return AC_ERR_INVALID_ARGUMENT;
  }
  *out = nullptr;
  return guarded(err_msg, [&] {
    auto sys = system_from_json(Json::parse(json_text));
    *out = new ac_system{std::move(sys)};
    return AC_OK;
  });
}

ac_status ac_system_to_json(const ac_system* sys, char** json_out) {
  if (!sys || !json_out) return AC_ERR_INVALID_ARGUMENT;
  return guarded(nullptr, [&] {
    *json_out = dup_string(system_to_json(sys->sys).dump());
    return *json_out ? AC_OK : AC_ERR_INTERNAL;
  });
}

void ac_system_free(ac_system* sys) { delete sys; }

ac_status ac_certify(const char* const* scalars, size_t count, char** json_out, char** err_msg) {
  if (!scalars || count == 0 || !json_out) {
    set_error(err_msg, "need at least one scalar");
    return AC_ERR_INVALID_ARGUMENT;
  }
  return guarded(err_msg, [&] {
    std::vector<Rat> x;
    x.reserve(count);
    for (size_t i = 0; i < count; ++i) {
      if (!scalars[i]) throw std::invalid_argument("null scalar string");
      x.push_back(rat_from_string(scalars[i]));
    }
    *json_out = dup_string(certify_report(x).dump());
    return *json_out ? AC_OK : AC_ERR_INTERNAL;
  });
}

ac_status ac_omega_chain(int n, char** json_out, char** err_msg) {
  if (!json_out) return AC_ERR_INVALID_ARGUMENT;
  return guarded(err_msg, [&] {
    *json_out = dup_string(omega_report(n).dump());
    return *json_out ? AC_OK : AC_ERR_INTERNAL;
  });
}

ac_status ac_solve_asym(const ac_system* sys, const ac_options* options, char** json_out,
                        char** err_msg) {
  if (!sys || !json_out) {
    set_error(err_msg, "null argument");
    return AC_ERR_INVALID_ARGUMENT;
  }
  return guarded(err_msg, [&] {
    ac_options opt = effective(options);
    *json_out = dup_string(solve_asym_report(sys->sys, opt.pivot_limit).dump());
    return *json_out ? AC_OK : AC_ERR_INTERNAL;
  });
}

ac_status ac_decide(const ac_system* sys, const char* const* subset, size_t subset_len,
                    const ac_options* options, int with_audit, char** json_out, char** err_msg) {
  if (!sys || !subset || subset_len == 0 || !json_out) {
    set_error(err_msg, "null argument or empty subset");
    return AC_ERR_INVALID_ARGUMENT;
  }
  return guarded(err_msg, [&] {
    SubsetQuery query;
    for (size_t i = 0; i < subset_len; ++i) {
      if (!subset[i]) throw std::invalid_argument("null subset name");
      query.names.emplace_back(subset[i]);
    }
    ac_options opt = effective(options);
    AsymDecision decision = decide_plinear(sys->sys, query, opt.pivot_limit);
    Json j = decision_report(sys->sys, query, decision);
    if (with_audit)
      j["audit"] = audit_report_json(verify_decision(sys->sys, query, decision, opt.pivot_limit));
    *json_out = dup_string(j.dump());
    return *json_out ? AC_OK : AC_ERR_INTERNAL;
  });
}

ac_status ac_selftest(const ac_options* options, char** json_out, char** err_msg) {
  if (!json_out) return AC_ERR_INVALID_ARGUMENT;
  return guarded(err_msg, [&] {
    ac_options opt = effective(options);
    *json_out = dup_string(run_selftest(opt.seed, opt.selftest_trials).dump());
    return *json_out ? AC_OK : AC_ERR_INTERNAL;
  });
}

}  // extern "C"
