// Command-line front end. Talks to the library only through feq.h.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "feq/feq.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitChecked = 1;
constexpr int kExitUsage = 2;

using Json = nlohmann::json;

struct FunctionDeleter {
  void operator()(feq_function* f) const { feq_function_free(f); }
};
struct ReportDeleter {
  void operator()(feq_report* r) const { feq_report_free(r); }
};
struct StringDeleter {
  void operator()(char* s) const { feq_string_free(s); }
};
using FunctionPtr = std::unique_ptr<feq_function, FunctionDeleter>;
using ReportPtr = std::unique_ptr<feq_report, ReportDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

// Owns a feq_list handed out by the library.
class OwnedList {
 public:
  OwnedList() = default;
  OwnedList(const OwnedList&) = delete;
  OwnedList& operator=(const OwnedList&) = delete;
  ~OwnedList() { feq_list_free(&list_); }

  feq_list* out() { return &list_; }
  std::vector<uint32_t> values() const {
    return list_.len ? std::vector<uint32_t>(list_.items, list_.items + list_.len)
                     : std::vector<uint32_t>{};
  }

 private:
  feq_list list_{nullptr, 0};
};

// A failed library call, carrying the exit code it maps to.
struct CliFailure {
  int exit_code;
  std::string message;
};

[[noreturn]] void raise(feq_status status, const std::string& context) {
  const bool checked = status == FEQ_ERR_NO_UNIQUE_HEAD || status == FEQ_ERR_INCONSISTENT ||
                       status == FEQ_ERR_MISSING_SUBLIST || status == FEQ_ERR_INVALID_EXAMPLE ||
                       status == FEQ_ERR_UNIVERSE_TOO_SMALL ||
                       status == FEQ_ERR_NOT_AN_NFE;
  throw CliFailure{checked ? kExitChecked : kExitUsage,
                   context + ": " + feq_status_name(status) + ": " + feq_last_error()};
}

void check_status(feq_status status, const std::string& context) {
  if (status != FEQ_OK) raise(status, context);
}

std::string take(char* s) { return StringPtr(s).get(); }

std::string list_text(const std::vector<uint32_t>& xs) {
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
  return out + "]";
}

std::string read_source(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path);
  if (!in) throw CliFailure{kExitUsage, "cannot open '" + path + "'"};
  return std::string(std::istreambuf_iterator<char>(in), {});
}

std::vector<uint32_t> parse_list_arg(const std::string& arg) {
  const std::string text = arg == "-" ? read_source("-") : arg;
  OwnedList list;
  check_status(feq_list_parse(text.c_str(), list.out()), "--input");
  return list.values();
}

feq_scope parse_scope(const std::string& arg) {
  const auto comma = arg.find(',');
  try {
    if (comma == std::string::npos) throw std::invalid_argument("no comma");
    const unsigned long a = std::stoul(arg.substr(0, comma));
    const unsigned long l = std::stoul(arg.substr(comma + 1));
    if (a == 0 || a > 64 || l > 64) throw std::out_of_range("bounds");
    return feq_scope{static_cast<uint32_t>(a), static_cast<uint32_t>(l)};
  } catch (const std::exception&) {
    throw CliFailure{kExitUsage, "--scope expects A,L with 1 <= A and small bounds, got '" + arg + "'"};
  }
}

FunctionPtr parse_function(const std::string& arg) {
  const std::string json = !arg.empty() && arg[0] == '@' ? read_source(arg.substr(1)) : arg;
  feq_function* fn = nullptr;
  check_status(feq_function_parse(json.c_str(), &fn), "--fn");
  return FunctionPtr(fn);
}

struct Options {
  std::string fn;
  std::string law = "filter";
  std::string scope = "3,5";
  unsigned k = 0;
  std::string examples;
  std::string input;
  std::string mode = "fe";
  std::string format = "text";
};

int cmd_check(const Options& opt) {
  FunctionPtr fn = parse_function(opt.fn);
  feq_law law{};
  check_status(feq_law_parse(opt.law.c_str(), &law), "--law");
  feq_report* raw = nullptr;
  check_status(feq_check(fn.get(), law, parse_scope(opt.scope), &raw), "check");
  ReportPtr report(raw);
  char* text = nullptr;
  if (opt.format == "json") {
    check_status(feq_report_to_json(report.get(), &text), "report");
    std::cout << take(text) << '\n';
  } else {
    check_status(feq_report_to_text(report.get(), &text), "report");
    std::cout << take(text);
  }
  return feq_report_verdict(report.get()) == FEQ_VERDICT_PASS ? kExitOk : kExitChecked;
}

int cmd_enumerate(const Options& opt) {
  char* raw = nullptr;
  check_status(feq_nfe_enumerate(opt.k, &raw), "enumerate");
  const Json terms = Json::parse(take(raw));
  uint64_t count = 0;
  check_status(feq_nfe_count(opt.k, &count), "count");
  if (opt.format == "json") {
    std::cout << Json{{"k", opt.k}, {"count", count}, {"terms", terms}}.dump() << '\n';
    return kExitOk;
  }
  for (const auto& term : terms) {
    char* ctor = nullptr;
    check_status(feq_nfe_constructors(term.dump().c_str(), &ctor), "enumerate");
    std::cout << take(ctor) << "    " << term["blocks"].dump() << '\n';
  }
  std::cout << "count: " << terms.size() << " (closed form " << count << ")\n";
  return kExitOk;
}

void print_result(const Options& opt, const std::vector<uint32_t>& result) {
  if (opt.format == "json") {
    std::cout << Json{{"ok", true}, {"result", result}}.dump() << '\n';
  } else {
    std::cout << list_text(result) << '\n';
  }
}

int cmd_extrapolate(const Options& opt) {
  const std::vector<uint32_t> xs = parse_list_arg(opt.input);
  const std::string examples = read_source(opt.examples);
  OwnedList out;
  if (opt.mode == "nfe") {
    check_status(feq_extrapolate_nfe_json(examples.c_str(), xs.data(), xs.size(), out.out()),
                 "extrapolate");
  } else {
    check_status(feq_extrapolate_fe(examples.c_str(), xs.data(), xs.size(), out.out()),
                 "extrapolate");
  }
  print_result(opt, out.values());
  return kExitOk;
}

int cmd_amal(const Options& opt) {
  std::string collection;
  if (!opt.input.empty()) {
    const std::vector<uint32_t> xs = parse_list_arg(opt.input);
    char* raw = nullptr;
    check_status(feq_decompose(xs.data(), xs.size(), &raw), "amal");
    collection = take(raw);
    if (opt.format != "json") std::cout << "collection: " << collection << '\n';
  } else {
    collection = read_source(opt.examples);
  }
  OwnedList out;
  check_status(feq_amal(collection.c_str(), out.out()), "amal");
  print_result(opt, out.values());
  return kExitOk;
}

// ---- demo ----

class Demo {
 public:
  void expect(const std::string& label, const std::vector<uint32_t>& got,
              const std::vector<uint32_t>& want) {
    record(label + " = " + list_text(got), got == want);
  }

  void record(const std::string& label, bool ok) {
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << label << '\n';
    ok ? ++passed_ : ++failed_;
  }

  int finish() const {
    std::cout << "\n" << passed_ << " passed, " << failed_ << " failed\n";
    return failed_ == 0 ? kExitOk : kExitChecked;
  }

 private:
  int passed_ = 0;
  int failed_ = 0;
};

std::vector<uint32_t> run(const feq_function* fn, const std::vector<uint32_t>& xs) {
  OwnedList out;
  check_status(feq_function_apply(fn, xs.data(), xs.size(), out.out()), "apply");
  return out.values();
}

std::vector<uint32_t> nfe_from_doubleton(const std::vector<uint32_t>& in,
                                         const std::vector<uint32_t>& example,
                                         const std::vector<uint32_t>& xs) {
  OwnedList out;
  check_status(feq_extrapolate_nfe(in.data(), in.size(), example.data(), example.size(),
                                   xs.data(), xs.size(), out.out()),
               "extrapolate");
  return out.values();
}

int cmd_demo() {
  Demo demo;

  std::cout << "== NFE extrapolation from one doubleton ==\n";
  demo.expect("f [1,2] = [2,1]  =>  f [0,1,2,3]", nfe_from_doubleton({1, 2}, {2, 1}, {0, 1, 2, 3}),
              {3, 2, 1, 0});
  demo.expect("f [1,2] = [2,1,2,1]  =>  f [5,6,7]",
              nfe_from_doubleton({1, 2}, {2, 1, 2, 1}, {5, 6, 7}), {7, 6, 5, 7, 6, 5});
  demo.expect("f [1,2] = [2,1,2,1]  =>  f [3,3,1]",
              nfe_from_doubleton({1, 2}, {2, 1, 2, 1}, {3, 3, 1}), {1, 3, 3, 1, 3, 3});

  std::cout << "\n== FE extrapolation from two-value sublists ==\n";
  const std::string sort_examples =
      R"([{"input":[2,1,2],"output":[1,2,2]},{"input":[3,2,2],"output":[2,2,3]},)"
      R"({"input":[3,1],"output":[1,3]}])";
  {
    const std::vector<uint32_t> xs{3, 2, 1, 2};
    OwnedList out;
    check_status(feq_extrapolate_fe(sort_examples.c_str(), xs.data(), xs.size(), out.out()),
                 "extrapolate");
    demo.expect("f [2,1,2]=[1,2,2], f [3,2,2]=[2,2,3], f [3,1]=[1,3]  =>  f [3,2,1,2]",
                out.values(), {1, 2, 2, 3});
  }
  {
    feq_function* raw = nullptr;
    check_status(feq_function_builtin("reverse", &raw), "builtin");
    FunctionPtr rev(raw);
    const std::vector<uint32_t> xs{4, 0, 3, 1, 2};
    char* table = nullptr;
    check_status(feq_sublist_outputs(rev.get(), xs.data(), xs.size(), &table), "sublists");
    const std::string table_json = take(table);
    OwnedList out;
    check_status(feq_extrapolate_fe(table_json.c_str(), xs.data(), xs.size(), out.out()),
                 "extrapolate");
    demo.expect("reverse from its pair sublists  =>  f [4,0,3,1,2]", out.values(),
                run(rev.get(), xs));
  }

  std::cout << "\n== Square-multiplicity counterexample ==\n";
  {
    feq_function* raw = nullptr;
    check_status(feq_function_builtin("square_multiplicity", &raw), "builtin");
    FunctionPtr sq(raw);
    for (const auto& pair : std::vector<std::vector<uint32_t>>{{1, 2}, {2, 1}, {4, 7}, {0, 3}})
      demo.expect("f " + list_text(pair), run(sq.get(), pair), pair);
    const std::vector<uint32_t> xs{4, 7, 4, 7, 8};
    const auto got = run(sq.get(), xs);
    demo.expect("f [4,7,4,7,8]", got, {4, 4, 4, 4, 7, 7, 7, 7, 8});
    demo.record("f [4,7,4,7,8] differs from identity", got != xs);
    feq_report* rep = nullptr;
    check_status(feq_check(sq.get(), FEQ_LAW_FILTER, feq_scope{3, 5}, &rep), "check");
    ReportPtr report(rep);
    demo.record("filter-equivariant at scope A=3 L=5",
                feq_report_verdict(report.get()) == FEQ_VERDICT_PASS);
  }

  std::cout << "\n== Counting k-NFEs ==\n";
  for (uint32_t k = 1; k <= 4; ++k) {
    char* raw = nullptr;
    check_status(feq_nfe_enumerate(k, &raw), "enumerate");
    const std::size_t listed = Json::parse(take(raw)).size();
    uint64_t formula = 0;
    check_status(feq_nfe_count(k, &formula), "count");
    demo.record("k=" + std::to_string(k) + ": " + std::to_string(listed) + " terms, 2*3^(k-1) = " +
                    std::to_string(formula),
                listed == formula);
  }
  return demo.finish();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Filter-equivariant list functions: checks, enumeration and extrapolation"};
  app.require_subcommand(1);
  Options opt;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  };

  auto* check = app.add_subcommand("check", "Check an equivariance law at a finite scope");
  check->add_option("--fn", opt.fn, "Function as JSON, or @FILE")->required();
  check->add_option("--law", opt.law, "map | filter | tail | no_new_values | nfe_counts | multiset_profile");
  check->add_option("--scope", opt.scope, "Alphabet size and max length, A,L");
  add_format(check);

  auto* enumerate = app.add_subcommand("enumerate", "List every k-NFE");
  enumerate->add_option("--k", opt.k, "Inflation factor")->required();
  add_format(enumerate);

  auto* extrapolate = app.add_subcommand("extrapolate", "Extrapolate f xs from small examples");
  extrapolate->add_option("--examples", opt.examples, "Examples JSON file, or - for stdin")->required();
  extrapolate->add_option("--input", opt.input, "Input list, e.g. [3,2,1,2], or - for stdin")->required();
  extrapolate->add_option("--mode", opt.mode, "fe: pair sublists; nfe: one doubleton")
      ->check(CLI::IsMember({"fe", "nfe"}));
  add_format(extrapolate);

  auto* amal = app.add_subcommand("amal", "Amalgamate a collection of filtered lists");
  auto* amal_source = amal->add_option_group("source");
  amal_source->add_option("--examples", opt.examples, "Collection JSON file, or -");
  amal_source->add_option("--input", opt.input, "Decompose this list and amalgamate it back");
  amal_source->require_option(1);
  add_format(amal);

  auto* demo = app.add_subcommand("demo", "Run the headline examples end to end");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (check->parsed()) return cmd_check(opt);
    if (enumerate->parsed()) return cmd_enumerate(opt);
    if (extrapolate->parsed()) return cmd_extrapolate(opt);
    if (amal->parsed()) return cmd_amal(opt);
    if (demo->parsed()) return cmd_demo();
  } catch (const CliFailure& f) {
    std::cerr << "error: " << f.message << '\n';
    return f.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
