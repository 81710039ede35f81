#include "mil.h"

#include <cstring>
#include <string>

#include "mil/report.hpp"

using mil::Errc;
using mil::Error;
using mil::Json;

struct mil_problem {
  mil::Problem problem;
};

namespace {

thread_local std::string g_last_error;

mil_status status_from_exit_code(int code) {
  switch (code) {
    case 2: return MIL_ERROR_PARSE;
    case 3: return MIL_ERROR_REFUSED;
    case 4: return MIL_ERROR_MISMATCH;
    case 5: return MIL_ERROR_BUDGET;
    default: return MIL_ERROR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
mil_status guarded(Fn&& fn) {
  try {
    g_last_error.clear();
    return fn();
  } catch (const Error& e) {
    g_last_error = std::string(mil::errc_name(e.code())) + ": " + e.what();
    return status_from_exit_code(mil::errc_exit_code(e.code()));
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return MIL_ERROR_INTERNAL;
  }
}

mil_status emit(const Json& doc, char** json_out) {
  if (json_out) *json_out = dup_string(doc.dump(2));
  return MIL_OK;
}

}  // namespace

extern "C" {

const char* mil_version(void) { return "0.1.0"; }
int mil_api_version(void) { return MIL_API_VERSION; }
const char* mil_last_error(void) { return g_last_error.c_str(); }

void mil_string_free(char* s) { std::free(s); }

mil_status mil_problem_from_file(const char* path, mil_problem** out) {
  if (!path || !out) {
    g_last_error = "null argument";
    return MIL_ERROR_PARSE;
  }
  return guarded([&] {
    *out = new mil_problem{mil::load_problem_file(path)};
    return MIL_OK;
  });
}

mil_status mil_problem_from_json(const char* text, mil_problem** out) {
  if (!text || !out) {
    g_last_error = "null argument";
    return MIL_ERROR_PARSE;
  }
  return guarded([&] {
    *out = new mil_problem{mil::load_problem_text(text)};
    return MIL_OK;
  });
}

void mil_problem_free(mil_problem* p) { delete p; }

mil_status mil_problem_set_pair_budget(mil_problem* p, long budget) {
  if (!p || budget < 1) {
    g_last_error = "invalid pair budget";
    return MIL_ERROR_PARSE;
  }
  p->problem.set_pair_budget(budget);
  return MIL_OK;
}

mil_status mil_classify(mil_problem* p, char** json_out) {
  return guarded([&] { return emit(mil::cmd_classify(p->problem), json_out); });
}

mil_status mil_invariants(mil_problem* p, int max_degree, char** json_out) {
  return guarded([&] {
    std::optional<int> d;
    if (max_degree > 0) d = max_degree;
    return emit(mil::cmd_invariants(p->problem, d), json_out);
  });
}

mil_status mil_local_cohomology(mil_problem* p, int k_from, int k_to, int use_window,
                                char** json_out) {
  return guarded([&] {
    std::optional<int> from, to;
    if (!use_window) {
      from = k_from;
      to = k_to;
    }
    return emit(mil::cmd_lc(p->problem, from, to), json_out);
  });
}

mil_status mil_a_invariant(mil_problem* p, const int* search_floor, char** json_out) {
  return guarded([&] {
    std::optional<int> floor;
    if (search_floor) floor = *search_floor;
    return emit(mil::cmd_a_invariant(p->problem, floor), json_out);
  });
}

mil_status mil_verify(mil_problem* p, char** json_out) {
  return guarded([&] {
    Json report = mil::cmd_verify(p->problem);
    emit(report, json_out);
    if (!mil::report_ok(report)) {
      g_last_error = "verification checks failed";
      return MIL_ERROR_MISMATCH;
    }
    return MIL_OK;
  });
}

mil_status mil_reproduce(const char* example_id, char** json_out) {
  if (!example_id) {
    g_last_error = "null example id";
    return MIL_ERROR_PARSE;
  }
  return guarded([&] {
    Json report = mil::cmd_reproduce(example_id);
    emit(report, json_out);
    if (!mil::report_ok(report)) {
      g_last_error = "reproduced values do not match";
      return MIL_ERROR_MISMATCH;
    }
    return MIL_OK;
  });
}

const char* mil_bundled_ids(void) {
  static const std::string ids = [] {
    std::string out;
    for (const auto& id : mil::reproduce_ids()) {
      if (!out.empty()) out += ",";
      out += id;
    }
    return out;
  }();
  return ids.c_str();
}

mil_status mil_bundled_problem_json(const char* example_id, char** json_out) {
  if (!example_id || !json_out) {
    g_last_error = "null argument";
    return MIL_ERROR_PARSE;
  }
  return guarded([&] {
    *json_out = dup_string(mil::bundled_problem_text(example_id));
    return MIL_OK;
  });
}

}  // extern "C"
