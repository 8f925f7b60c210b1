#ifndef FEQ_SERIALIZE_HPP
#define FEQ_SERIALIZE_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "feq/amalgamation.hpp"
#include "feq/function.hpp"
#include "feq/nfe_term.hpp"
#include "feq/scope.hpp"
#include "feq/simplicial.hpp"

namespace feq {

using Json = nlohmann::json;

// All *_from_json functions throw Error(Parse) on schema violations and pass
// through construction errors (InvalidBlock, InvalidArgument, ...).

Json to_json(const ListValue& xs);
ListValue list_from_json(const Json& j);

/// Accepts a JSON array ("[1,2,3]") or bare comma-separated integers ("1,2,3").
ListValue parse_list(std::string_view text);

Json to_json(const Scope& scope);
Scope scope_from_json(const Json& j);

/// {"blocks":[["P",2],["N",1]]}
Json to_json(const NfeTerm& term);
NfeTerm nfe_from_json(const Json& j);

/// Tagged by "kind": builtin, inflate, filter, map, nfe, foldr, table,
/// compose, concat.
Json to_json(const ListFunction& f);
ListFunction function_from_json(const Json& j);

Json to_json(const Report& report);
Report report_from_json(const Json& j);

/// {"k":k,"members":[[...],...]}
Json to_json(const PermFamily& family);
PermFamily family_from_json(const Json& j);
Json to_json(const ConeReport& report);

/// {"kind":"removed"|"kept","universe":[...],"entries":[{"key":[...],"list":[...]}]}
Json to_json(const Collection& chi);
Collection collection_from_json(const Json& j);

/// [{"keep":[x,y],"output":[...]}, ...]
Json to_json(const SublistTable& table);

/// Reads a sublist-output table for input xs. Entries are either
/// {"keep":[x,y],"output":[...]} or {"input":[...],"output":[...]}; input
/// entries are matched against the sublists of xs. A top-level object with an
/// "examples" array is accepted as well.
SublistTable sublist_table_from_json(const Json& j, const ListValue& xs);

/// A single doubleton example: {"input":[x,y],"output":[...]}, optionally
/// wrapped in a one-element array.
std::pair<ListValue, ListValue> doubleton_from_json(const Json& j);

Json to_json(const AmalgamationOutcome& outcome);

std::string format_report_text(const Report& report);

}  // namespace feq

#endif  // FEQ_SERIALIZE_HPP
