#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "amalgam/normal.hpp"

namespace pmlat {

using Json = nlohmann::ordered_json;

// One envelope per file: {"kind": ..., "version": "1", "payload": ...}.
enum class DocKind { poset, semilattice, measured_poset, diagram, run_report };

struct Document {
  DocKind kind = DocKind::poset;
  std::optional<Poset> poset;
  std::optional<SemilatticePtr> semilattice;
  std::optional<MeasuredPoset> measured;
  std::optional<MeasuredDiagram> diagram;
  std::optional<Json> report;  // run reports stay structured
};

std::string doc_kind_name(DocKind k);

Json elem_to_json(const Elem& e);
Elem elem_from_json(const Json& j);

Json poset_payload(const Poset& p);
Poset poset_from_payload(const Json& j);

Json semilattice_payload(const Semilattice& s);
SemilatticePtr semilattice_from_payload(const Json& j);

Json measured_payload(const MeasuredPoset& m);
MeasuredPoset measured_from_payload(const Json& j);

Json diagram_payload(const MeasuredDiagram& d);
MeasuredDiagram diagram_from_payload(const Json& j);

std::string serialize_document(const Document& d);
Document parse_document(const std::string& text);

Document make_doc(Poset p);
Document make_doc(SemilatticePtr s);
Document make_doc(MeasuredPoset m);
Document make_doc(MeasuredDiagram d);
Document make_report_doc(Json payload);

}  // namespace pmlat
