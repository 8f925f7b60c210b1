#include "feq/serialize.hpp"

#include <cctype>
#include <limits>
#include <sstream>

#include "feq/error.hpp"

namespace feq {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorCode::Parse, what); }

const Json& field(const Json& j, const char* name) {
  if (!j.is_object()) parse_error(std::string("expected an object with field '") + name + "'");
  auto it = j.find(name);
  if (it == j.end()) parse_error(std::string("missing field '") + name + "'");
  return *it;
}

unsigned natural(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0 ||
      j.get<long long>() > std::numeric_limits<Elem>::max())
    parse_error(std::string(what) + " must be a non-negative integer");
  return j.get<unsigned>();
}

Json transform_json(const Transform& t) {
  switch (t.kind) {
    case Transform::Kind::None: return nullptr;
    case Transform::Kind::Map: return Json{{"map", to_json(t.data)}};
    case Transform::Kind::Filter: return Json{{"keep", to_json(t.data)}};
    case Transform::Kind::Tail: return "tail";
    case Transform::Kind::Alpha:
      return Json{{"element", *t.element}, {"keep", to_json(t.data)}};
  }
  return nullptr;
}

Transform transform_from_json(const Json& j) {
  if (j.is_null()) return Transform::none();
  if (j.is_string()) {
    if (j.get<std::string>() == "tail") return Transform::tail();
    parse_error("unknown transform");
  }
  if (j.contains("element"))
    return Transform::alpha(natural(j["element"], "element"), list_from_json(field(j, "keep")));
  if (j.contains("map")) return Transform::map(list_from_json(j["map"]));
  if (j.contains("keep")) return Transform::filter(list_from_json(j["keep"]));
  parse_error("unknown transform");
}

Verdict verdict_from_name(const std::string& s) {
  if (s == "pass") return Verdict::Pass;
  if (s == "fail") return Verdict::Fail;
  if (s == "precondition_failed") return Verdict::PreconditionFailed;
  parse_error("unknown verdict '" + s + "'");
}

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

Json to_json(const ListValue& xs) {
  Json j = Json::array();
  for (Elem x : xs) j.push_back(x);
  return j;
}

ListValue list_from_json(const Json& j) {
  if (!j.is_array()) parse_error("expected a list of non-negative integers");
  ListValue out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(natural(e, "list element"));
  return out;
}

ListValue parse_list(std::string_view text) {
  std::string s(text);
  auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  if (s[first] == '[') {
    try {
      return list_from_json(Json::parse(s));
    } catch (const Json::exception& e) {
      parse_error(std::string("bad list: ") + e.what());
    }
  }
  ListValue out;
  std::istringstream is(s);
  std::string item;
  while (std::getline(is, item, ',')) {
    auto b = item.find_first_not_of(" \t\r\n");
    auto e = item.find_last_not_of(" \t\r\n");
    if (b == std::string::npos) parse_error("empty list item");
    item = item.substr(b, e - b + 1);
    if (item.empty() || item.size() > 10 ||
        !std::all_of(item.begin(), item.end(), [](unsigned char c) { return std::isdigit(c); }))
      parse_error("bad list item '" + item + "'");
    unsigned long long v = std::stoull(item);
    if (v > std::numeric_limits<Elem>::max()) parse_error("list item too large");
    out.push_back(static_cast<Elem>(v));
  }
  return out;
}

Json to_json(const Scope& scope) {
  return {{"alphabet", scope.alphabet_size}, {"max_len", scope.max_len}};
}

Scope scope_from_json(const Json& j) {
  return Scope{natural(field(j, "alphabet"), "alphabet"), natural(field(j, "max_len"), "max_len")};
}

Json to_json(const NfeTerm& term) {
  Json blocks = Json::array();
  for (const Block& b : term.blocks())
    blocks.push_back(Json::array({b.sign == Sign::Pos ? "P" : "N", b.size}));
  return {{"blocks", blocks}};
}

NfeTerm nfe_from_json(const Json& j) {
  const Json& blocks = field(j, "blocks");
  if (!blocks.is_array()) parse_error("'blocks' must be an array");
  std::vector<Block> out;
  for (const auto& b : blocks) {
    if (!b.is_array() || b.size() != 2 || !b[0].is_string())
      parse_error("each block must be [\"P\"|\"N\", size]");
    const std::string sign = b[0].get<std::string>();
    if (sign != "P" && sign != "N") parse_error("block sign must be \"P\" or \"N\"");
    out.push_back({sign == "P" ? Sign::Pos : Sign::Neg, natural(b[1], "block size")});
  }
  return blocks_to_nfe(std::move(out));
}

Json to_json(const ListFunction& f) {
  return std::visit(
      Overloaded{
          [](const fn::Builtin& b) -> Json {
            return {{"kind", "builtin"}, {"name", builtin_name(b.kind)}};
          },
          [](const fn::Inflate& i) -> Json { return {{"kind", "inflate"}, {"n", i.n}}; },
          [](const fn::FilterBy& p) -> Json {
            return {{"kind", "filter"}, {"keep", to_json(p.phi.keep())}};
          },
          [](const fn::MapBy& m) -> Json {
            return {{"kind", "map"}, {"table", to_json(m.psi.table())}};
          },
          [](const fn::Nfe& n) -> Json {
            Json j = to_json(n.term);
            j["kind"] = "nfe";
            return j;
          },
          [](const fn::FoldrAlpha& a) -> Json {
            Json alpha{{"step", alpha_name(a.alpha.kind)}};
            if (a.alpha.kind == AlphaKind::ConditionalCons) alpha["keep"] = to_json(a.alpha.keep.keep());
            return {{"kind", "foldr"}, {"alpha", alpha}};
          },
          [](const fn::Table& t) -> Json {
            Json entries = Json::array();
            for (const auto& [in, out] : t.table->entries)
              entries.push_back({{"input", to_json(in)}, {"output", to_json(out)}});
            return {{"kind", "table"}, {"scope", to_json(t.table->scope)}, {"entries", entries}};
          },
          [](const fn::Compose& c) -> Json {
            return {{"kind", "compose"}, {"outer", to_json(c.outer)}, {"inner", to_json(c.inner)}};
          },
          [](const fn::PointwiseConcat& p) -> Json {
            return {{"kind", "concat"}, {"left", to_json(p.left)}, {"right", to_json(p.right)}};
          },
      },
      f.node().value);
}

ListFunction function_from_json(const Json& j) {
  const Json& kind_j = field(j, "kind");
  if (!kind_j.is_string()) parse_error("'kind' must be a string");
  const std::string kind = kind_j.get<std::string>();
  if (kind == "builtin") {
    const Json& name = field(j, "name");
    if (!name.is_string()) parse_error("'name' must be a string");
    return ListFunction::builtin(builtin_from_name(name.get<std::string>()));
  }
  if (kind == "inflate") return ListFunction::inflate(natural(field(j, "n"), "n"));
  if (kind == "filter") return ListFunction::filter_by(Predicate(list_from_json(field(j, "keep"))));
  if (kind == "map") return ListFunction::map_by(EndoMap(list_from_json(field(j, "table"))));
  if (kind == "nfe") return ListFunction::nfe(nfe_from_json(j));
  if (kind == "foldr") {
    const Json& alpha = field(j, "alpha");
    const Json& step = field(alpha, "step");
    if (!step.is_string()) parse_error("'step' must be a string");
    AlphaStep a{alpha_from_name(step.get<std::string>()), {}};
    if (a.kind == AlphaKind::ConditionalCons) a.keep = Predicate(list_from_json(field(alpha, "keep")));
    return ListFunction::foldr_alpha(std::move(a));
  }
  if (kind == "table") {
    FunctionTable t{scope_from_json(field(j, "scope")), {}};
    const Json& entries = field(j, "entries");
    if (!entries.is_array()) parse_error("'entries' must be an array");
    for (const auto& e : entries)
      t.entries[list_from_json(field(e, "input"))] = list_from_json(field(e, "output"));
    return ListFunction::table(std::move(t));
  }
  if (kind == "compose")
    return ListFunction::compose(function_from_json(field(j, "outer")),
                                 function_from_json(field(j, "inner")));
  if (kind == "concat")
    return ListFunction::pointwise_concat(function_from_json(field(j, "left")),
                                          function_from_json(field(j, "right")));
  parse_error("unknown function kind '" + kind + "'");
}

Json to_json(const Report& report) {
  Json witnesses = Json::array();
  for (const auto& w : report.witnesses)
    witnesses.push_back({{"input", to_json(w.input)},
                         {"transform", transform_json(w.transform)},
                         {"lhs", to_json(w.lhs)},
                         {"rhs", to_json(w.rhs)}});
  Json j{{"law", report.law},
         {"verdict", verdict_name(report.verdict)},
         {"scope", to_json(report.scope)},
         {"witness_count", report.witnesses.size()},
         {"witnesses", witnesses}};
  if (!report.note.empty()) j["note"] = report.note;
  return j;
}

Report report_from_json(const Json& j) {
  Report r;
  const Json& law = field(j, "law");
  const Json& verdict = field(j, "verdict");
  if (!law.is_string() || !verdict.is_string()) parse_error("'law' and 'verdict' must be strings");
  r.law = law.get<std::string>();
  r.verdict = verdict_from_name(verdict.get<std::string>());
  r.scope = scope_from_json(field(j, "scope"));
  const Json& ws = field(j, "witnesses");
  if (!ws.is_array()) parse_error("'witnesses' must be an array");
  for (const auto& w : ws)
    r.witnesses.push_back({list_from_json(field(w, "input")), transform_from_json(field(w, "transform")),
                           list_from_json(field(w, "lhs")), list_from_json(field(w, "rhs"))});
  if (j.contains("note") && j["note"].is_string()) r.note = j["note"].get<std::string>();
  return r;
}

Json to_json(const PermFamily& family) {
  Json members = Json::array();
  for (const auto& p : family.members) members.push_back(p.image());
  return {{"k", family.k}, {"members", members}};
}

PermFamily family_from_json(const Json& j) {
  PermFamily family{natural(field(j, "k"), "k"), {}};
  const Json& members = field(j, "members");
  if (!members.is_array()) parse_error("'members' must be an array");
  for (const auto& m : members) {
    ListValue image = list_from_json(m);
    family.members.emplace_back(std::vector<std::size_t>(image.begin(), image.end()));
  }
  family.validate();
  return family;
}

Json to_json(const ConeReport& report) {
  Json violations = Json::array();
  for (const auto& v : report.violations)
    violations.push_back({{"n", v.n},
                          {"m", v.m},
                          {"inclusion", v.inclusion},
                          {"expected", v.expected.image()},
                          {"restricted", v.restricted.image()}});
  return {{"verdict", report.passed() ? "pass" : "fail"}, {"violations", violations}};
}

Json to_json(const Collection& chi) {
  Json entries = Json::array();
  for (const auto& [key, list] : chi.lists)
    entries.push_back({{"key", to_json(key.elements())}, {"list", to_json(list)}});
  return {{"kind", chi.kind == KeyKind::Removed ? "removed" : "kept"},
          {"universe", to_json(chi.universe)},
          {"entries", entries}};
}

Collection collection_from_json(const Json& j) {
  Collection chi;
  const Json& kind = field(j, "kind");
  if (kind == "removed") {
    chi.kind = KeyKind::Removed;
  } else if (kind == "kept") {
    chi.kind = KeyKind::Kept;
  } else {
    parse_error("collection kind must be \"removed\" or \"kept\"");
  }
  chi.universe = list_from_json(field(j, "universe"));
  const Json& entries = field(j, "entries");
  if (!entries.is_array()) parse_error("'entries' must be an array");
  for (const auto& e : entries) {
    ListValue key = list_from_json(field(e, "key"));
    CollectionKey k = key.size() == 1   ? CollectionKey::single(key[0])
                      : key.size() == 2 ? CollectionKey::pair(key[0], key[1])
                                        : (parse_error("collection keys have one or two values"),
                                           CollectionKey::single(0));
    if (!chi.lists.emplace(k, list_from_json(field(e, "list"))).second)
      parse_error("duplicate collection key " + k.to_string());
  }
  return chi;
}

Json to_json(const SublistTable& table) {
  Json out = Json::array();
  for (const auto& [key, list] : table)
    out.push_back({{"keep", to_json(key.elements())}, {"output", to_json(list)}});
  return out;
}

SublistTable sublist_table_from_json(const Json& j, const ListValue& xs) {
  const Json& entries = j.is_object() ? field(j, "examples") : j;
  if (!entries.is_array()) parse_error("examples must be an array");
  SublistTable table;
  std::vector<std::pair<ListValue, ListValue>> by_input;
  for (const auto& e : entries) {
    ListValue output = list_from_json(field(e, "output"));
    if (e.contains("keep")) {
      ListValue keep = list_from_json(e["keep"]);
      CollectionKey key = keep.size() == 1   ? CollectionKey::single(keep[0])
                          : keep.size() == 2 ? CollectionKey::pair(keep[0], keep[1])
                                             : (parse_error("'keep' must list one or two values"),
                                                CollectionKey::single(0));
      table.emplace(key, std::move(output));
    } else {
      by_input.emplace_back(list_from_json(field(e, "input")), std::move(output));
    }
  }
  for (auto& [key, out] : resolve_examples(by_input, xs)) table.emplace(key, std::move(out));
  return table;
}

std::pair<ListValue, ListValue> doubleton_from_json(const Json& j) {
  const Json* e = &j;
  if (j.is_array()) {
    if (j.size() != 1) parse_error("NFE mode takes exactly one example");
    e = &j[0];
  } else if (j.is_object() && j.contains("examples")) {
    const Json& ex = j["examples"];
    if (!ex.is_array() || ex.size() != 1) parse_error("NFE mode takes exactly one example");
    e = &ex[0];
  }
  return {list_from_json(field(*e, "input")), list_from_json(field(*e, "output"))};
}

Json to_json(const AmalgamationOutcome& outcome) {
  if (outcome.ok()) return {{"ok", true}, {"result", to_json(outcome.result)}};
  return {{"ok", false}, {"failure", failure_name(outcome.failure)}, {"detail", outcome.detail}};
}

std::string format_report_text(const Report& report) {
  std::ostringstream os;
  os << report.law << ": " << verdict_name(report.verdict) << " at scope A="
     << report.scope.alphabet_size << " L=" << report.scope.max_len;
  if (!report.witnesses.empty()) os << " (" << report.witnesses.size() << " witnesses)";
  os << '\n';
  if (!report.note.empty()) os << "  note: " << report.note << '\n';
  constexpr std::size_t kShown = 5;
  for (std::size_t i = 0; i < report.witnesses.size() && i < kShown; ++i) {
    const Witness& w = report.witnesses[i];
    os << "  xs=" << to_string(w.input) << " " << w.transform.describe()
       << ": lhs=" << to_string(w.lhs) << " rhs=" << to_string(w.rhs) << '\n';
  }
  if (report.witnesses.size() > kShown)
    os << "  ... " << report.witnesses.size() - kShown << " more\n";
  return os.str();
}

}  // namespace feq
