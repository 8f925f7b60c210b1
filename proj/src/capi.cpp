#include "feq/feq.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "feq/amalgamation.hpp"
#include "feq/equivariance.hpp"
#include "feq/error.hpp"
#include "feq/function.hpp"
#include "feq/nfe_term.hpp"
#include "feq/serialize.hpp"
#include "feq/simplicial.hpp"

struct feq_function {
  feq::ListFunction fn;
};

struct feq_report {
  feq::Report report;
};

namespace {

thread_local std::string g_last_error;

feq_status status_of(feq::ErrorCode code) {
  using feq::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument: return FEQ_ERR_INVALID_ARGUMENT;
    case ErrorCode::EmptyList: return FEQ_ERR_EMPTY_LIST;
    case ErrorCode::OutOfScope: return FEQ_ERR_OUT_OF_SCOPE;
    case ErrorCode::InvalidScope: return FEQ_ERR_INVALID_SCOPE;
    case ErrorCode::InvalidBlock: return FEQ_ERR_INVALID_BLOCK;
    case ErrorCode::InvalidInclusion: return FEQ_ERR_INVALID_INCLUSION;
    case ErrorCode::InvalidPermutation: return FEQ_ERR_INVALID_PERMUTATION;
    case ErrorCode::NotAnNfe: return FEQ_ERR_NOT_AN_NFE;
    case ErrorCode::UniverseTooSmall: return FEQ_ERR_UNIVERSE_TOO_SMALL;
    case ErrorCode::Parse: return FEQ_ERR_PARSE;
  }
  return FEQ_ERR_INTERNAL;
}

feq_status status_of(feq::AmalgamationFailure failure) {
  using feq::AmalgamationFailure;
  switch (failure) {
    case AmalgamationFailure::None: return FEQ_OK;
    case AmalgamationFailure::NoUniqueHead: return FEQ_ERR_NO_UNIQUE_HEAD;
    case AmalgamationFailure::Inconsistent: return FEQ_ERR_INCONSISTENT;
    case AmalgamationFailure::UniverseTooSmall: return FEQ_ERR_UNIVERSE_TOO_SMALL;
    case AmalgamationFailure::MissingSublist: return FEQ_ERR_MISSING_SUBLIST;
    case AmalgamationFailure::InvalidExample: return FEQ_ERR_INVALID_EXAMPLE;
  }
  return FEQ_ERR_INTERNAL;
}

feq_status fail(feq_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

template <typename Body>
feq_status guarded(Body&& body) {
  g_last_error.clear();
  try {
    return body();
  } catch (const feq::Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(FEQ_ERR_PARSE, e.what());
  } catch (const std::bad_alloc&) {
    return fail(FEQ_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(FEQ_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(FEQ_ERR_INTERNAL, "unknown error");
  }
}

feq_status null_argument() { return fail(FEQ_ERR_INVALID_ARGUMENT, "null argument"); }

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

feq::ListValue to_list(const uint32_t* xs, size_t len) {
  if (len && !xs) throw feq::Error(feq::ErrorCode::InvalidArgument, "null list with nonzero length");
  return feq::ListValue(xs, xs + len);
}

void emit_list(const feq::ListValue& xs, feq_list* out) {
  out->items = nullptr;
  out->len = xs.size();
  if (xs.empty()) return;
  out->items = static_cast<uint32_t*>(std::malloc(xs.size() * sizeof(uint32_t)));
  if (!out->items) throw std::bad_alloc();
  std::memcpy(out->items, xs.data(), xs.size() * sizeof(uint32_t));
}

feq_status emit_outcome(const feq::AmalgamationOutcome& outcome, feq_list* out) {
  if (!outcome.ok()) {
    return fail(status_of(outcome.failure),
                std::string(feq::failure_name(outcome.failure)) + ": " + outcome.detail);
  }
  emit_list(outcome.result, out);
  return FEQ_OK;
}

feq::Scope to_scope(feq_scope s) { return feq::Scope{s.alphabet_size, s.max_len}; }

feq::Law to_law(feq_law law) {
  switch (law) {
    case FEQ_LAW_MAP: return feq::Law::Map;
    case FEQ_LAW_FILTER: return feq::Law::Filter;
    case FEQ_LAW_TAIL: return feq::Law::Tail;
    case FEQ_LAW_NO_NEW_VALUES: return feq::Law::NoNewValues;
    case FEQ_LAW_NFE_COUNTS: return feq::Law::NfeCounts;
    case FEQ_LAW_MULTISET_PROFILE: return feq::Law::MultisetProfile;
  }
  throw feq::Error(feq::ErrorCode::InvalidArgument, "unknown law");
}

feq_status new_function(feq::ListFunction fn, feq_function** out) {
  *out = new feq_function{std::move(fn)};
  return FEQ_OK;
}

}  // namespace

extern "C" {

const char* feq_version(void) { return "1.0.0"; }

const char* feq_last_error(void) { return g_last_error.c_str(); }

const char* feq_status_name(feq_status status) {
  switch (status) {
    case FEQ_OK: return "OK";
    case FEQ_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case FEQ_ERR_PARSE: return "Parse";
    case FEQ_ERR_EMPTY_LIST: return "EmptyList";
    case FEQ_ERR_OUT_OF_SCOPE: return "OutOfScope";
    case FEQ_ERR_INVALID_SCOPE: return "InvalidScope";
    case FEQ_ERR_INVALID_BLOCK: return "InvalidBlock";
    case FEQ_ERR_INVALID_INCLUSION: return "InvalidInclusion";
    case FEQ_ERR_INVALID_PERMUTATION: return "InvalidPermutation";
    case FEQ_ERR_NOT_AN_NFE: return "NotAnNfe";
    case FEQ_ERR_UNIVERSE_TOO_SMALL: return "UniverseTooSmall";
    case FEQ_ERR_NO_UNIQUE_HEAD: return "NoUniqueHead";
    case FEQ_ERR_INCONSISTENT: return "Inconsistent";
    case FEQ_ERR_MISSING_SUBLIST: return "MissingSublist";
    case FEQ_ERR_INVALID_EXAMPLE: return "InvalidExample";
    case FEQ_ERR_INTERNAL: return "Internal";
  }
  return "Unknown";
}

void feq_list_free(feq_list* list) {
  if (!list) return;
  std::free(list->items);
  list->items = nullptr;
  list->len = 0;
}

void feq_string_free(char* str) { std::free(str); }

feq_status feq_list_parse(const char* text, feq_list* out) {
  if (!text || !out) return null_argument();
  return guarded([&] {
    emit_list(feq::parse_list(text), out);
    return FEQ_OK;
  });
}

feq_status feq_function_parse(const char* json, feq_function** out) {
  if (!json || !out) return null_argument();
  *out = nullptr;
  return guarded([&] { return new_function(feq::function_from_json(feq::Json::parse(json)), out); });
}

feq_status feq_function_builtin(const char* name, feq_function** out) {
  if (!name || !out) return null_argument();
  *out = nullptr;
  return guarded(
      [&] { return new_function(feq::ListFunction::builtin(feq::builtin_from_name(name)), out); });
}

feq_status feq_function_compose(const feq_function* outer, const feq_function* inner,
                                feq_function** out) {
  if (!outer || !inner || !out) return null_argument();
  *out = nullptr;
  return guarded([&] { return new_function(feq::compose(outer->fn, inner->fn), out); });
}

feq_status feq_function_concat(const feq_function* left, const feq_function* right,
                               feq_function** out) {
  if (!left || !right || !out) return null_argument();
  *out = nullptr;
  return guarded([&] { return new_function(feq::pointwise_concat(left->fn, right->fn), out); });
}

void feq_function_free(feq_function* fn) { delete fn; }

feq_status feq_function_to_json(const feq_function* fn, char** out) {
  if (!fn || !out) return null_argument();
  return guarded([&] {
    *out = copy_string(feq::to_json(fn->fn).dump());
    return FEQ_OK;
  });
}

feq_status feq_function_describe(const feq_function* fn, char** out) {
  if (!fn || !out) return null_argument();
  return guarded([&] {
    *out = copy_string(fn->fn.describe());
    return FEQ_OK;
  });
}

feq_status feq_function_apply(const feq_function* fn, const uint32_t* xs, size_t len,
                              feq_list* out) {
  if (!fn || !out) return null_argument();
  return guarded([&] {
    emit_list(fn->fn(to_list(xs, len)), out);
    return FEQ_OK;
  });
}

feq_status feq_functions_equal(const feq_function* f, const feq_function* g, feq_scope scope,
                               int* equal) {
  if (!f || !g || !equal) return null_argument();
  return guarded([&] {
    *equal = feq::functions_equal_at_scope(f->fn, g->fn, to_scope(scope)) ? 1 : 0;
    return FEQ_OK;
  });
}

feq_status feq_check(const feq_function* fn, feq_law law, feq_scope scope, feq_report** out) {
  if (!fn || !out) return null_argument();
  *out = nullptr;
  return guarded([&] {
    *out = new feq_report{feq::check_law(fn->fn, to_law(law), to_scope(scope))};
    return FEQ_OK;
  });
}

feq_status feq_law_parse(const char* name, feq_law* out) {
  if (!name || !out) return null_argument();
  return guarded([&] {
    switch (feq::law_from_name(name)) {
      case feq::Law::Map: *out = FEQ_LAW_MAP; break;
      case feq::Law::Filter: *out = FEQ_LAW_FILTER; break;
      case feq::Law::Tail: *out = FEQ_LAW_TAIL; break;
      case feq::Law::NoNewValues: *out = FEQ_LAW_NO_NEW_VALUES; break;
      case feq::Law::NfeCounts: *out = FEQ_LAW_NFE_COUNTS; break;
      case feq::Law::MultisetProfile: *out = FEQ_LAW_MULTISET_PROFILE; break;
    }
    return FEQ_OK;
  });
}

feq_verdict feq_report_verdict(const feq_report* report) {
  if (!report) return FEQ_VERDICT_FAIL;
  switch (report->report.verdict) {
    case feq::Verdict::Pass: return FEQ_VERDICT_PASS;
    case feq::Verdict::Fail: return FEQ_VERDICT_FAIL;
    case feq::Verdict::PreconditionFailed: return FEQ_VERDICT_PRECONDITION_FAILED;
  }
  return FEQ_VERDICT_FAIL;
}

size_t feq_report_witness_count(const feq_report* report) {
  return report ? report->report.witnesses.size() : 0;
}

feq_status feq_report_to_json(const feq_report* report, char** out) {
  if (!report || !out) return null_argument();
  return guarded([&] {
    *out = copy_string(feq::to_json(report->report).dump());
    return FEQ_OK;
  });
}

feq_status feq_report_to_text(const feq_report* report, char** out) {
  if (!report || !out) return null_argument();
  return guarded([&] {
    *out = copy_string(feq::format_report_text(report->report));
    return FEQ_OK;
  });
}

void feq_report_free(feq_report* report) { delete report; }

feq_status feq_nfe_count(uint32_t k, uint64_t* out) {
  if (!out) return null_argument();
  if (k > 40) return fail(FEQ_ERR_INVALID_ARGUMENT, "k too large");
  *out = feq::count_k_nfes(k);
  g_last_error.clear();
  return FEQ_OK;
}

feq_status feq_nfe_enumerate(uint32_t k, char** out) {
  if (!out) return null_argument();
  return guarded([&] {
    feq::Json arr = feq::Json::array();
    for (const auto& term : feq::enumerate_k_nfes(k)) arr.push_back(feq::to_json(term));
    *out = copy_string(arr.dump());
    return FEQ_OK;
  });
}

feq_status feq_nfe_constructors(const char* term_json, char** out) {
  if (!term_json || !out) return null_argument();
  return guarded([&] {
    *out = copy_string(feq::nfe_from_json(feq::Json::parse(term_json)).to_string());
    return FEQ_OK;
  });
}

feq_status feq_family_of_function(const feq_function* fn, uint32_t k, uint32_t bound,
                                  char** out) {
  if (!fn || !out) return null_argument();
  return guarded([&] {
    *out = copy_string(feq::to_json(feq::family_of_function(fn->fn, k, bound)).dump());
    return FEQ_OK;
  });
}

feq_status feq_check_cone(const char* family_json, int* passed, char** report_json) {
  if (!family_json || !passed) return null_argument();
  return guarded([&] {
    const feq::ConeReport report =
        feq::check_cone(feq::family_from_json(feq::Json::parse(family_json)));
    *passed = report.passed() ? 1 : 0;
    if (report_json) *report_json = copy_string(feq::to_json(report).dump());
    return FEQ_OK;
  });
}

feq_status feq_decompose(const uint32_t* xs, size_t len, char** out) {
  if (!out) return null_argument();
  return guarded([&] {
    *out = copy_string(feq::to_json(feq::decompose_pi(to_list(xs, len))).dump());
    return FEQ_OK;
  });
}

feq_status feq_amal(const char* collection_json, feq_list* out) {
  if (!collection_json || !out) return null_argument();
  return guarded([&] {
    return emit_outcome(feq::amal(feq::collection_from_json(feq::Json::parse(collection_json))),
                        out);
  });
}

feq_status feq_extrapolate_fe(const char* table_json, const uint32_t* xs, size_t len,
                              feq_list* out) {
  if (!table_json || !out) return null_argument();
  return guarded([&] {
    const feq::ListValue input = to_list(xs, len);
    const feq::SublistTable table =
        feq::sublist_table_from_json(feq::Json::parse(table_json), input);
    return emit_outcome(feq::extrapolate_fe(table, input), out);
  });
}

feq_status feq_extrapolate_nfe(const uint32_t* example_in, size_t in_len,
                               const uint32_t* example_out, size_t out_len, const uint32_t* xs,
                               size_t len, feq_list* out) {
  if (!out) return null_argument();
  return guarded([&] {
    return emit_outcome(
        feq::extrapolate_nfe_from_doubleton(to_list(example_in, in_len),
                                            to_list(example_out, out_len), to_list(xs, len)),
        out);
  });
}

feq_status feq_extrapolate_nfe_json(const char* example_json, const uint32_t* xs, size_t len,
                                    feq_list* out) {
  if (!example_json || !out) return null_argument();
  return guarded([&] {
    const auto [in, ex_out] = feq::doubleton_from_json(feq::Json::parse(example_json));
    return emit_outcome(feq::extrapolate_nfe_from_doubleton(in, ex_out, to_list(xs, len)), out);
  });
}

feq_status feq_sublist_outputs(const feq_function* fn, const uint32_t* xs, size_t len,
                               char** out) {
  if (!fn || !out) return null_argument();
  return guarded([&] {
    *out = copy_string(feq::to_json(feq::sublist_outputs(fn->fn, to_list(xs, len))).dump());
    return FEQ_OK;
  });
}

}  // extern "C"
