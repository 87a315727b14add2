// Command-line front end. Everything mathematical happens behind the C API
// of the shared library; this file only parses flags and moves text around.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "pmlat.h"

namespace {

struct DocHandle {
  pmlat_doc* doc = nullptr;
  ~DocHandle() { pmlat_doc_free(doc); }
};

struct StrHandle {
  char* s = nullptr;
  ~StrHandle() { pmlat_string_free(s); }
};

int fail_input(const char* err) {
  std::cerr << "error: " << (err ? err : "unknown") << "\n";
  return 2;
}

int read_doc(const std::string& path, DocHandle& h) {
  StrHandle err;
  pmlat_status st = pmlat_doc_read_file(path.c_str(), &h.doc, &err.s);
  if (st != PMLAT_OK) return fail_input(err.s);
  return 0;
}

int emit(pmlat_doc* doc, const std::string& out_path) {
  StrHandle text;
  StrHandle err;
  if (pmlat_doc_serialize(doc, &text.s, &err.s) != PMLAT_OK)
    return fail_input(err.s);
  if (out_path.empty() || out_path == "-") {
    std::cout << text.s;
  } else {
    std::ofstream out(out_path);
    if (!out) return fail_input(("cannot write '" + out_path + "'").c_str());
    out << text.s;
  }
  return 0;
}

long default_budget() {
  if (const char* env = std::getenv("PMLAT_BUDGET")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
    std::cerr << "warning: ignoring malformed PMLAT_BUDGET\n";
  }
  return 20000;
}

int finish(pmlat_status st, pmlat_doc* report, const char* err,
           const std::string& out_path = "") {
  DocHandle owned;
  owned.doc = report;
  if (st == PMLAT_BAD_INPUT || st == PMLAT_BUDGET) {
    std::cerr << "error: " << (err ? err : "unknown") << "\n";
    return static_cast<int>(st);
  }
  if (report) {
    int w = emit(report, out_path);
    if (w != 0) return w;
  }
  return static_cast<int>(st);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"p-measured poset representations of finite distributive "
               "join-semilattices"};
  app.require_subcommand(1);

  // represent
  std::string rep_in, rep_out, rep_dot;
  long rep_budget = default_budget();
  auto* rep = app.add_subcommand(
      "represent", "construct the measured-poset representation");
  rep->add_option("input", rep_in, "semilattice or diagram document")->required();
  rep->add_option("--out", rep_out, "write the result here (default stdout)");
  rep->add_option("--dot", rep_dot, "also write a Hasse diagram in DOT");
  rep->add_option("--budget", rep_budget, "element cap per constructed level");

  // verify
  std::string ver_in, ver_sl, ver_mode = "all";
  auto* ver = app.add_subcommand("verify", "check the p-measure axioms and (P1)-(P3)");
  ver->add_option("measured", ver_in, "measured-poset document")->required();
  ver->add_option("--semilattice", ver_sl, "the target semilattice document")
      ->required();
  ver->add_option("--p2-mode", ver_mode, "all | bounded (default all)")
      ->check(CLI::IsMember({"all", "bounded"}));

  // amalgam
  std::string am_in, am_top;
  auto* am = app.add_subcommand("amalgam",
                                "strong amalgam measured into a chosen top");
  am->add_option("diagram", am_in, "measured diagram document")->required();
  am->add_option("--top", am_top, "label of the top index element")->required();

  // counterexample
  auto* cx = app.add_subcommand("counterexample",
                                "reproduce the desk-scale obstructions");
  cx->require_subcommand(1);
  auto* cx_cube = cx->add_subcommand("cube", "the cube diagram with no "
                                             "common measure extension");
  int cx_max = 6;
  auto* cx_int = cx->add_subcommand(
      "int-compose", "interval extensions that do not compose");
  cx_int->add_option("--max", cx_max, "largest poset size to search");

  // oracle
  auto* orc = app.add_subcommand("oracle", "independent brute-force checks");
  orc->require_subcommand(1);
  std::string sb_in, sb_top;
  int sb_bound = 5;
  auto* sb = orc->add_subcommand("simplebvd",
                                 "chain-form cross-check of amalgam values");
  sb->add_option("diagram", sb_in, "measured diagram document")->required();
  sb->add_option("--top", sb_top, "label of the top index element")->required();
  sb->add_option("--chain-bound", sb_bound, "chain length bound (default 5)");
  std::string en_poset, en_sl;
  long en_limit = 100;
  auto* en = orc->add_subcommand("enumerate", "list all p-measures on a poset");
  en->add_option("poset", en_poset, "poset document")->required();
  en->add_option("semilattice", en_sl, "target semilattice document")->required();
  en->add_option("--limit", en_limit, "how many tables to embed in the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (rep->parsed()) {
    DocHandle in;
    if (int rc = read_doc(rep_in, in)) return rc;
    DocHandle out;
    StrHandle err;
    pmlat_status st = pmlat_represent(in.doc, rep_budget, &out.doc, &err.s);
    if (st == PMLAT_BAD_INPUT || st == PMLAT_BUDGET) {
      std::cerr << "error: " << (err.s ? err.s : "unknown") << "\n";
      return static_cast<int>(st);
    }
    if (!rep_dot.empty() &&
        std::string(pmlat_doc_kind(out.doc)) == "measured-poset") {
      StrHandle dot, derr;
      if (pmlat_emit_dot(out.doc, &dot.s, &derr.s) != PMLAT_OK)
        return fail_input(derr.s);
      std::ofstream df(rep_dot);
      if (!df) return fail_input(("cannot write '" + rep_dot + "'").c_str());
      df << dot.s;
    }
    if (int rc = emit(out.doc, rep_out)) return rc;
    return static_cast<int>(st);
  }

  if (ver->parsed()) {
    DocHandle m, s;
    if (int rc = read_doc(ver_in, m)) return rc;
    if (int rc = read_doc(ver_sl, s)) return rc;
    pmlat_doc* report = nullptr;
    StrHandle err;
    pmlat_status st =
        pmlat_verify(m.doc, s.doc, ver_mode == "all" ? 1 : 0, &report, &err.s);
    return finish(st, report, err.s);
  }

  if (am->parsed()) {
    DocHandle d;
    if (int rc = read_doc(am_in, d)) return rc;
    pmlat_doc* out = nullptr;
    StrHandle err;
    pmlat_status st = pmlat_amalgam(d.doc, am_top.c_str(), &out, &err.s);
    return finish(st, out, err.s);
  }

  if (cx_cube->parsed()) {
    pmlat_doc* report = nullptr;
    StrHandle err;
    pmlat_status st = pmlat_counterexample_cube(&report, &err.s);
    return finish(st, report, err.s);
  }

  if (cx_int->parsed()) {
    pmlat_doc* report = nullptr;
    StrHandle err;
    pmlat_status st = pmlat_counterexample_int_compose(cx_max, &report, &err.s);
    return finish(st, report, err.s);
  }

  if (sb->parsed()) {
    DocHandle d;
    if (int rc = read_doc(sb_in, d)) return rc;
    pmlat_doc* report = nullptr;
    StrHandle err;
    pmlat_status st =
        pmlat_oracle_simplebvd(d.doc, sb_top.c_str(), sb_bound, &report, &err.s);
    return finish(st, report, err.s);
  }

  if (en->parsed()) {
    DocHandle p, s;
    if (int rc = read_doc(en_poset, p)) return rc;
    if (int rc = read_doc(en_sl, s)) return rc;
    pmlat_doc* report = nullptr;
    StrHandle err;
    pmlat_status st = pmlat_oracle_enumerate(p.doc, s.doc, en_limit, &report, &err.s);
    return finish(st, report, err.s);
  }

  return 2;
}
