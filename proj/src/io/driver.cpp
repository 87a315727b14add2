#include "io/driver.hpp"

#include "core/common.hpp"
#include "io/dot.hpp"
#include "io/serialize.hpp"
#include "lab/cube.hpp"
#include "lab/enumerate.hpp"
#include "lab/search.hpp"

namespace pmlat {

namespace {

template <typename F>
DriverResult guarded(F&& body) {
  DriverResult r;
  try {
    body(r);
  } catch (const budget_exceeded& e) {
    r.status = 3;
    r.error = e.what();
  } catch (const bad_input& e) {
    r.status = 2;
    r.error = e.what();
  } catch (const std::exception& e) {
    r.status = 2;
    r.error = cat("internal error: ", e.what());
  }
  return r;
}

Json report_lines(const VerifyReport& rep) {
  Json checks = Json::array();
  for (const auto& l : rep.lines) {
    Json c;
    c["name"] = l.name;
    c["ok"] = l.ok;
    if (!l.detail.empty()) c["detail"] = l.detail;
    checks.push_back(std::move(c));
  }
  return checks;
}

int find_index_by_label(const IndexLattice& ix, const std::string& label) {
  for (int i = 0; i < ix.size(); ++i)
    if (ix.elem(i).label() == label) return i;
  throw bad_input(cat("no index named '", label, "' in the diagram"));
}

}  // namespace

DriverResult drv_represent(const std::string& input_text, long budget,
                           unsigned shuffle_seed) {
  return guarded([&](DriverResult& r) {
    Document in = parse_document(input_text);
    RepresentOptions opt;
    opt.budget = budget;
    opt.shuffle_seed = shuffle_seed;

    if (in.kind == DocKind::semilattice) {
      SemilatticeRepresentation rep = represent_semilattice(*in.semilattice, opt);
      if (!rep.bundle.all_green) {
        Json j;
        j["summary"] = "representation failed verification";
        j["all-green"] = false;
        j["checks"] = report_lines(rep.bundle);
        r.status = 1;
        r.output = serialize_document(make_report_doc(std::move(j)));
        return;
      }
      r.output = serialize_document(make_doc(std::move(rep.rep)));
      return;
    }
    if (in.kind == DocKind::diagram) {
      const MeasuredDiagram& md = *in.diagram;
      for (const auto& b : md.blocks)
        if (b) throw bad_input("represent expects a diagram without blocks");
      ConstructionRun run = represent_diagram(md.base, opt);
      VerifyReport rep = verify_run(run);
      Json j;
      j["summary"] = rep.all_green ? "all checks green" : "verification failed";
      j["all-green"] = rep.all_green;
      j["zero-separating"] = run.zero_separating;
      j["prepended-root"] = run.prepended;
      Json levels = Json::array();
      for (int ell : run.process_order) {
        Json l;
        l["index"] = run.output.base.index.elem(ell).label();
        l["size"] = run.output.block(ell).poset.size();
        auto it = run.levels.find(ell);
        if (it != run.levels.end()) {
          l["amalgam-size"] = it->second.amalgam.carrier.size();
          l["gadget-count"] = static_cast<long>(it->second.gadgets.size());
        }
        levels.push_back(std::move(l));
      }
      j["levels"] = std::move(levels);
      j["checks"] = report_lines(rep);
      j["result"] = diagram_payload(run.output);
      r.status = rep.all_green ? 0 : 1;
      r.output = serialize_document(make_report_doc(std::move(j)));
      return;
    }
    throw bad_input("represent expects a semilattice or a diagram document");
  });
}

DriverResult drv_verify(const std::string& measured_text,
                        const std::string& semilattice_text, bool p2_all_pairs) {
  return guarded([&](DriverResult& r) {
    Document md = parse_document(measured_text);
    if (md.kind != DocKind::measured_poset)
      throw bad_input("verify expects a measured-poset document");
    Document sd = parse_document(semilattice_text);
    if (sd.kind != DocKind::semilattice)
      throw bad_input("verify expects a semilattice document");
    const MeasuredPoset& m = *md.measured;
    if (*m.target != **sd.semilattice)
      throw bad_input("embedded target disagrees with the given semilattice");

    VerifyReport rep;
    MeasureVerdict mv = validate_pmeasure(m);
    rep.add("pmeasure", mv.ok, mv.message);
    if (mv.ok) {
      P1Verdict p1 = check_P1(m);
      rep.add("P1", p1.ok, p1.message);
      P2Verdict p2 =
          check_P2(m, p2_all_pairs ? P2Mode::all_pairs : P2Mode::bounded_pairs);
      rep.add("P2", p2.ok, p2.message);
      P3Verdict p3 = check_P3(m);
      rep.add("P3", p3.ok, p3.message);
    }
    Json j;
    j["summary"] = rep.all_green ? "all checks green" : "verification failed";
    j["all-green"] = rep.all_green;
    j["checks"] = report_lines(rep);
    r.status = rep.all_green ? 0 : 1;
    r.output = serialize_document(make_report_doc(std::move(j)));
  });
}

DriverResult drv_amalgam(const std::string& diagram_text,
                         const std::string& top_label) {
  return guarded([&](DriverResult& r) {
    Document in = parse_document(diagram_text);
    if (in.kind != DocKind::diagram)
      throw bad_input("amalgam expects a diagram document");
    const MeasuredDiagram& md = *in.diagram;
    int ell = find_index_by_label(md.base.index, top_label);
    // mathematical rejections carry a report and exit 1
    try {
      StrongAmalgam a = measured_amalgam(md, ell);
      r.output = serialize_document(make_doc(a.measure));
    } catch (const bad_input& e) {
      Json j;
      j["summary"] = "diagram rejected";
      j["all-green"] = false;
      j["reason"] = e.what();
      r.status = 1;
      r.output = serialize_document(make_report_doc(std::move(j)));
    }
  });
}

DriverResult drv_counterexample_cube() {
  return guarded([&](DriverResult& r) {
    CubeFixture f = build_cube();
    CubeObstruction ob = cube_obstruction(f);
    Json j;
    j["summary"] = ob.summary;
    j["all-green"] = true;
    j["forced"] = {{"x0-x1", ob.v01}, {"x1-x2", ob.v12}, {"x0-x2", ob.v02}};
    j["triangle-violated"] = ob.triangle_violated;
    j["extension-count"] = ob.extension_count;
    Json uniq = Json::array();
    for (long u : f.uniqueness) uniq.push_back(u);
    j["block-measure-counts"] = std::move(uniq);
    j["gate"] = report_lines(f.gate);
    r.output = serialize_document(make_report_doc(std::move(j)));
  });
}

DriverResult drv_counterexample_int_compose(int max_size) {
  return guarded([&](DriverResult& r) {
    auto t = find_noncomposing_interval_triple(max_size);
    Json j;
    if (!t) {
      j["summary"] = cat("no non-composing interval triple with at most ",
                         max_size, " elements");
      j["found"] = false;
    } else {
      j["summary"] = cat("interval extensions do not compose: witness with |R| = ",
                         t->r.size());
      j["found"] = true;
      j["p"] = poset_payload(t->p);
      j["q"] = poset_payload(t->q);
      j["r"] = poset_payload(t->r);
    }
    r.output = serialize_document(make_report_doc(std::move(j)));
  });
}

DriverResult drv_oracle_simplebvd(const std::string& diagram_text,
                                  const std::string& top_label, int chain_bound) {
  return guarded([&](DriverResult& r) {
    Document in = parse_document(diagram_text);
    if (in.kind != DocKind::diagram)
      throw bad_input("simplebvd oracle expects a diagram document");
    int ell = find_index_by_label(in.diagram->base.index, top_label);
    try {
      StrongAmalgam a = measured_amalgam(*in.diagram, ell);
      SimpleBvdVerdict v = check_simplebvd(a, chain_bound);
      Json j;
      j["summary"] = v.ok ? "chain meets agree with the amalgam measure"
                          : v.message;
      j["all-green"] = v.ok;
      j["chain-bound"] = chain_bound;
      j["amalgam-size"] = a.carrier.size();
      r.status = v.ok ? 0 : 1;
      r.output = serialize_document(make_report_doc(std::move(j)));
    } catch (const bad_input& e) {
      Json j;
      j["summary"] = "diagram rejected";
      j["all-green"] = false;
      j["reason"] = e.what();
      r.status = 1;
      r.output = serialize_document(make_report_doc(std::move(j)));
    }
  });
}

DriverResult drv_oracle_enumerate(const std::string& poset_text,
                                  const std::string& semilattice_text,
                                  long list_limit) {
  return guarded([&](DriverResult& r) {
    Document pd = parse_document(poset_text);
    if (pd.kind != DocKind::poset)
      throw bad_input("enumerate oracle expects a poset document");
    Document sd = parse_document(semilattice_text);
    if (sd.kind != DocKind::semilattice)
      throw bad_input("enumerate oracle expects a semilattice document");

    Json listed = Json::array();
    long shown = 0;
    long count = enumerate_pmeasures(
        *pd.poset, *sd.semilattice, {},
        [&](const MeasuredPoset& m) {
          if (shown < list_limit) {
            listed.push_back(measured_payload(m)["mu"]);
            ++shown;
          }
          return true;
        },
        {});
    Json j;
    j["summary"] = cat(count, " p-measure(s)");
    j["count"] = count;
    j["listed"] = std::move(listed);
    r.output = serialize_document(make_report_doc(std::move(j)));
  });
}

DriverResult drv_dot(const std::string& doc_text) {
  return guarded([&](DriverResult& r) {
    Document d = parse_document(doc_text);
    if (d.kind == DocKind::poset)
      r.output = emit_dot(*d.poset);
    else if (d.kind == DocKind::measured_poset)
      r.output = emit_dot(*d.measured);
    else if (d.kind == DocKind::semilattice)
      r.output = emit_dot((**d.semilattice).poset());
    else
      throw bad_input("DOT emission needs a poset, semilattice, or measured-poset");
  });
}

}  // namespace pmlat
