#include "pmlat.h"

#include <cstring>
#include <fstream>
#include <sstream>

#include "core/common.hpp"
#include "io/driver.hpp"
#include "io/serialize.hpp"

using namespace pmlat;

struct pmlat_doc {
  std::string text;  // canonical serialized form
  std::string kind;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void set_err(char** err, const std::string& msg) {
  if (err) *err = dup_string(msg);
}

pmlat_doc* wrap_text(const std::string& text) {
  Document d = parse_document(text);  // validates
  auto* doc = new pmlat_doc;
  doc->text = text;
  doc->kind = doc_kind_name(d.kind);
  return doc;
}

pmlat_status run_driver(const DriverResult& r, pmlat_doc** out, char** err) {
  if (r.status == 2 || r.status == 3) {
    set_err(err, r.error);
    return static_cast<pmlat_status>(r.status);
  }
  if (out) *out = wrap_text(r.output);
  return static_cast<pmlat_status>(r.status);
}

}  // namespace

extern "C" {

const char* pmlat_version(void) { return "pmlat 1.0.0"; }

void pmlat_string_free(char* s) { std::free(s); }

void pmlat_doc_free(pmlat_doc* doc) { delete doc; }

pmlat_status pmlat_doc_parse(const char* text, pmlat_doc** out, char** err) {
  if (!text || !out) {
    set_err(err, "null argument");
    return PMLAT_BAD_INPUT;
  }
  try {
    *out = wrap_text(text);
    return PMLAT_OK;
  } catch (const std::exception& e) {
    set_err(err, e.what());
    return PMLAT_BAD_INPUT;
  }
}

pmlat_status pmlat_doc_read_file(const char* path, pmlat_doc** out, char** err) {
  if (!path || !out) {
    set_err(err, "null argument");
    return PMLAT_BAD_INPUT;
  }
  std::ifstream in(path);
  if (!in) {
    set_err(err, cat("cannot read '", path, "'"));
    return PMLAT_BAD_INPUT;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return pmlat_doc_parse(buf.str().c_str(), out, err);
}

const char* pmlat_doc_kind(const pmlat_doc* doc) {
  return doc ? doc->kind.c_str() : "";
}

pmlat_status pmlat_doc_serialize(const pmlat_doc* doc, char** out, char** err) {
  if (!doc || !out) {
    set_err(err, "null argument");
    return PMLAT_BAD_INPUT;
  }
  *out = dup_string(doc->text);
  return PMLAT_OK;
}

pmlat_status pmlat_represent(const pmlat_doc* input, long budget,
                             pmlat_doc** out, char** err) {
  if (!input) {
    set_err(err, "null argument");
    return PMLAT_BAD_INPUT;
  }
  long b = budget < 0 ? 20000 : budget;
  return run_driver(drv_represent(input->text, b), out, err);
}

pmlat_status pmlat_verify(const pmlat_doc* measured, const pmlat_doc* semilattice,
                          int p2_all_pairs, pmlat_doc** report, char** err) {
  if (!measured || !semilattice) {
    set_err(err, "null argument");
    return PMLAT_BAD_INPUT;
  }
  return run_driver(drv_verify(measured->text, semilattice->text, p2_all_pairs != 0),
                    report, err);
}

pmlat_status pmlat_amalgam(const pmlat_doc* diagram, const char* top,
                           pmlat_doc** out, char** err) {
  if (!diagram || !top) {
    set_err(err, "null argument");
    return PMLAT_BAD_INPUT;
  }
  return run_driver(drv_amalgam(diagram->text, top), out, err);
}

pmlat_status pmlat_counterexample_cube(pmlat_doc** report, char** err) {
  return run_driver(drv_counterexample_cube(), report, err);
}

pmlat_status pmlat_counterexample_int_compose(int max_size, pmlat_doc** report,
                                              char** err) {
  return run_driver(drv_counterexample_int_compose(max_size), report, err);
}

pmlat_status pmlat_oracle_simplebvd(const pmlat_doc* diagram, const char* top,
                                    int chain_bound, pmlat_doc** report,
                                    char** err) {
  if (!diagram || !top) {
    set_err(err, "null argument");
    return PMLAT_BAD_INPUT;
  }
  return run_driver(drv_oracle_simplebvd(diagram->text, top, chain_bound), report,
                    err);
}

pmlat_status pmlat_oracle_enumerate(const pmlat_doc* poset,
                                    const pmlat_doc* semilattice, long list_limit,
                                    pmlat_doc** report, char** err) {
  if (!poset || !semilattice) {
    set_err(err, "null argument");
    return PMLAT_BAD_INPUT;
  }
  return run_driver(drv_oracle_enumerate(poset->text, semilattice->text, list_limit),
                    report, err);
}

pmlat_status pmlat_emit_dot(const pmlat_doc* doc, char** dot_text, char** err) {
  if (!doc || !dot_text) {
    set_err(err, "null argument");
    return PMLAT_BAD_INPUT;
  }
  DriverResult r = drv_dot(doc->text);
  if (r.status != 0) {
    set_err(err, r.error);
    return static_cast<pmlat_status>(r.status);
  }
  *dot_text = dup_string(r.output);
  return PMLAT_OK;
}

}  // extern "C"
