#include "io/serialize.hpp"

#include <algorithm>

#include "core/common.hpp"

namespace pmlat {

namespace {

constexpr const char* kVersion = "1";

[[noreturn]] void fail(const std::string& what) { throw bad_input(what); }

const Json& need(const Json& j, const char* key) {
  if (!j.contains(key)) fail(cat("missing field '", key, "'"));
  return j.at(key);
}

}  // namespace

std::string doc_kind_name(DocKind k) {
  switch (k) {
    case DocKind::poset: return "poset";
    case DocKind::semilattice: return "semilattice";
    case DocKind::measured_poset: return "measured-poset";
    case DocKind::diagram: return "diagram";
    case DocKind::run_report: return "run-report";
  }
  return "?";
}

Json elem_to_json(const Elem& e) {
  if (e.is_base()) return Json{{"base", e.name()}};
  Json g;
  g["level"] = e.level();
  switch (e.point()) {
    case Elem::Point::lower_copy: g["point"] = "lower"; break;
    case Elem::Point::upper_copy: g["point"] = "upper"; break;
    case Elem::Point::filler: g["point"] = "filler"; break;
  }
  g["bits"] = e.bits();
  g["lower"] = elem_to_json(e.lower());
  g["upper"] = elem_to_json(e.upper());
  return Json{{"gadget", g}};
}

Elem elem_from_json(const Json& j) {
  if (j.is_string()) return Elem::base(j.get<std::string>());
  if (j.contains("base")) return Elem::base(need(j, "base").get<std::string>());
  if (!j.contains("gadget")) fail("element must be a base name or a gadget");
  const Json& g = j.at("gadget");
  std::string pt = need(g, "point").get<std::string>();
  Elem::Point point;
  if (pt == "lower")
    point = Elem::Point::lower_copy;
  else if (pt == "upper")
    point = Elem::Point::upper_copy;
  else if (pt == "filler")
    point = Elem::Point::filler;
  else
    fail(cat("unknown gadget point '", pt, "'"));
  std::vector<std::string> bits;
  for (const auto& b : need(g, "bits")) bits.push_back(b.get<std::string>());
  return Elem::gadget(need(g, "level").get<std::string>(),
                      elem_from_json(need(g, "lower")),
                      elem_from_json(need(g, "upper")), point, std::move(bits));
}

Json poset_payload(const Poset& p) {
  Json out;
  Json elems = Json::array();
  for (int i = 0; i < p.size(); ++i) elems.push_back(elem_to_json(p.elem(i)));
  out["elements"] = std::move(elems);
  Json le = Json::array();
  for (int a = 0; a < p.size(); ++a)
    for (int b = 0; b < p.size(); ++b)
      if (p.lt(a, b)) le.push_back(Json::array({a, b}));
  out["le"] = std::move(le);
  return out;
}

Poset poset_from_payload(const Json& j) {
  std::vector<Elem> elems;
  for (const auto& e : need(j, "elements")) elems.push_back(elem_from_json(e));
  const int n = static_cast<int>(elems.size());
  std::vector<uint8_t> le(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) le[static_cast<size_t>(i) * n + i] = 1;
  for (const auto& pr : need(j, "le")) {
    if (!pr.is_array() || pr.size() != 2) fail("le entries must be index pairs");
    int a = pr[0].get<int>(), b = pr[1].get<int>();
    if (a < 0 || b < 0 || a >= n || b >= n) fail("le pair index out of range");
    le[static_cast<size_t>(a) * n + b] = 1;
  }
  return Poset::make(std::move(elems), std::move(le));
}

Json semilattice_payload(const Semilattice& s) {
  Json out;
  Json elems = Json::array();
  for (int i = 0; i < s.size(); ++i) {
    if (!s.elem(i).is_base())
      fail("semilattice elements must be plain named points");
    elems.push_back(s.elem(i).name());
  }
  out["elements"] = std::move(elems);
  Json le = Json::array();
  for (int a = 0; a < s.size(); ++a)
    for (int b = 0; b < s.size(); ++b)
      if (s.poset().lt(a, b)) le.push_back(Json::array({a, b}));
  out["le"] = std::move(le);
  out["zero"] = s.elem(s.zero()).name();
  if (s.unit_declared()) out["unit"] = s.elem(s.top()).name();
  return out;
}

SemilatticePtr semilattice_from_payload(const Json& j) {
  std::vector<Elem> elems;
  for (const auto& e : need(j, "elements"))
    elems.push_back(Elem::base(e.get<std::string>()));
  const int n = static_cast<int>(elems.size());

  Semilattice built = [&]() {
    if (j.contains("join")) {
      std::vector<int> join(static_cast<size_t>(n) * n, -1);
      for (const auto& t : j.at("join")) {
        if (!t.is_array() || t.size() != 3) fail("join entries must be index triples");
        int a = t[0].get<int>(), b = t[1].get<int>(), c = t[2].get<int>();
        if (a < 0 || b < 0 || c < 0 || a >= n || b >= n || c >= n)
          fail("join triple index out of range");
        join[static_cast<size_t>(a) * n + b] = c;
      }
      for (int v : join)
        if (v < 0) fail("join table incomplete");
      return Semilattice::from_join_table(std::move(elems), std::move(join),
                                          j.contains("unit"));
    }
    std::vector<uint8_t> le(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) le[static_cast<size_t>(i) * n + i] = 1;
    for (const auto& pr : need(j, "le")) {
      if (!pr.is_array() || pr.size() != 2) fail("le entries must be index pairs");
      int a = pr[0].get<int>(), b = pr[1].get<int>();
      if (a < 0 || b < 0 || a >= n || b >= n) fail("le pair index out of range");
      le[static_cast<size_t>(a) * n + b] = 1;
    }
    return Semilattice::from_poset(Poset::make(std::move(elems), std::move(le)),
                                   j.contains("unit"));
  }();

  if (j.contains("zero")) {
    auto z = built.find_name(j.at("zero").get<std::string>());
    if (!z || *z != built.zero()) fail("declared zero is not the least element");
  }
  if (j.contains("unit")) {
    auto u = built.find_name(j.at("unit").get<std::string>());
    if (!u || *u != built.top()) fail("declared unit is not the top element");
  }
  return std::make_shared<Semilattice>(std::move(built));
}

namespace {

Json mu_payload(const MeasuredPoset& m) {
  Json mu = Json::array();
  for (int x = 0; x < m.poset.size(); ++x)
    for (int y = 0; y < m.poset.size(); ++y)
      if (m.val(x, y) != m.target->zero())
        mu.push_back(Json::array({x, y, m.target->elem(m.val(x, y)).name()}));
  return mu;
}

std::vector<int> mu_from_payload(const Json& j, const Poset& p,
                                 const Semilattice& s) {
  const int n = p.size();
  std::vector<int> mu(static_cast<size_t>(n) * n, s.zero());
  if (!j.contains("mu")) fail("missing field 'mu'");
  for (const auto& t : j.at("mu")) {
    if (!t.is_array() || t.size() != 3) fail("mu entries must be [x, y, value]");
    int x = t[0].get<int>(), y = t[1].get<int>();
    if (x < 0 || y < 0 || x >= n || y >= n) fail("mu index out of range");
    auto v = s.find_name(t[2].get<std::string>());
    if (!v)
      fail(cat("mu value '", t[2].get<std::string>(),
               "' is not an element of the target semilattice"));
    mu[static_cast<size_t>(x) * n + y] = *v;
  }
  return mu;
}

}  // namespace

Json measured_payload(const MeasuredPoset& m) {
  Json out;
  out["poset"] = poset_payload(m.poset);
  out["target"] = semilattice_payload(*m.target);
  out["mu"] = mu_payload(m);
  return out;
}

MeasuredPoset measured_from_payload(const Json& j) {
  MeasuredPoset m;
  m.poset = poset_from_payload(need(j, "poset"));
  m.target = semilattice_from_payload(need(j, "target"));
  m.mu = mu_from_payload(j, m.poset, *m.target);
  return m;
}

Json diagram_payload(const MeasuredDiagram& d) {
  Json out;
  out["index"] = poset_payload(d.base.index.poset());
  Json objs = Json::array();
  for (const auto& o : d.base.objects) objs.push_back(semilattice_payload(*o));
  out["objects"] = std::move(objs);
  Json trans = Json::array();
  for (const auto& [key, map] : d.base.transitions) {
    Json t;
    t["from"] = key.first;
    t["to"] = key.second;
    Json names = Json::array();
    for (int v : map) names.push_back(d.base.objects[key.second]->elem(v).name());
    t["map"] = std::move(names);
    trans.push_back(std::move(t));
  }
  out["transitions"] = std::move(trans);
  Json blocks = Json::array();
  for (size_t i = 0; i < d.blocks.size(); ++i) {
    if (!d.blocks[i]) {
      blocks.push_back(nullptr);
      continue;
    }
    Json b;
    b["poset"] = poset_payload(d.blocks[i]->poset);
    b["mu"] = mu_payload(*d.blocks[i]);
    blocks.push_back(std::move(b));
  }
  out["blocks"] = std::move(blocks);
  return out;
}

MeasuredDiagram diagram_from_payload(const Json& j) {
  MeasuredDiagram d;
  Poset ixp = poset_from_payload(need(j, "index"));
  d.base.index = IndexLattice::make(std::move(ixp));
  const int n = d.base.index.size();
  for (const auto& o : need(j, "objects"))
    d.base.objects.push_back(semilattice_from_payload(o));
  if (static_cast<int>(d.base.objects.size()) != n)
    fail("object count does not match the index size");

  for (const auto& t : need(j, "transitions")) {
    int from = need(t, "from").get<int>();
    int to = need(t, "to").get<int>();
    if (from < 0 || to < 0 || from >= n || to >= n)
      fail("transition endpoint out of range");
    if (!d.base.index.le(from, to))
      fail("transition endpoints are not a comparable index pair");
    std::vector<int> map;
    for (const auto& name : need(t, "map")) {
      auto v = d.base.objects[to]->find_name(name.get<std::string>());
      if (!v)
        fail(cat("transition value '", name.get<std::string>(),
                 "' is not an element of the target object"));
      map.push_back(*v);
    }
    if (static_cast<int>(map.size()) != d.base.objects[from]->size())
      fail("transition map length does not match its source object");
    d.base.transitions[{from, to}] = std::move(map);
  }
  for (int i = 0; i < n; ++i)
    if (!d.base.transitions.count({i, i}))
      d.base.transitions[{i, i}] = identity_hom(d.base.objects[i]).map;
  // derive missing composites along cover chains; functoriality is checked
  // separately by diagram validation
  bool grew = true;
  while (grew) {
    grew = false;
    for (int i = 0; i < n; ++i)
      for (int j2 = 0; j2 < n; ++j2) {
        if (!d.base.index.le(i, j2) || d.base.transitions.count({i, j2})) continue;
        for (int k = 0; k < n; ++k) {
          if (k == i || k == j2 || !d.base.index.le(i, k) ||
              !d.base.index.le(k, j2))
            continue;
          auto f = d.base.transitions.find({i, k});
          auto g = d.base.transitions.find({k, j2});
          if (f == d.base.transitions.end() || g == d.base.transitions.end())
            continue;
          std::vector<int> comp(f->second.size());
          for (size_t x = 0; x < comp.size(); ++x)
            comp[x] = g->second[f->second[x]];
          d.base.transitions[{i, j2}] = std::move(comp);
          grew = true;
          break;
        }
      }
  }
  for (int i = 0; i < n; ++i)
    for (int j2 = 0; j2 < n; ++j2)
      if (d.base.index.le(i, j2) && !d.base.transitions.count({i, j2}))
        fail(cat("missing transition map ('", d.base.index.elem(i).label(),
                 "' -> '", d.base.index.elem(j2).label(),
                 "') and no composite derives it"));

  const Json& blocks = need(j, "blocks");
  if (static_cast<int>(blocks.size()) != n)
    fail("block count does not match the index size");
  for (int i = 0; i < n; ++i) {
    if (blocks[i].is_null()) {
      d.blocks.push_back(std::nullopt);
      continue;
    }
    MeasuredPoset m;
    m.poset = poset_from_payload(need(blocks[i], "poset"));
    m.target = d.base.objects[i];
    m.mu = mu_from_payload(blocks[i], m.poset, *m.target);
    d.blocks.push_back(std::move(m));
  }
  return d;
}

std::string serialize_document(const Document& d) {
  Json out;
  out["kind"] = doc_kind_name(d.kind);
  out["version"] = kVersion;
  switch (d.kind) {
    case DocKind::poset: out["payload"] = poset_payload(*d.poset); break;
    case DocKind::semilattice:
      out["payload"] = semilattice_payload(**d.semilattice);
      break;
    case DocKind::measured_poset:
      out["payload"] = measured_payload(*d.measured);
      break;
    case DocKind::diagram: out["payload"] = diagram_payload(*d.diagram); break;
    case DocKind::run_report: out["payload"] = *d.report; break;
  }
  return out.dump(2) + "\n";
}

Document parse_document(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const std::exception& e) {
    fail(cat("not valid JSON: ", e.what()));
  }
  std::string version = need(j, "version").get<std::string>();
  if (version != kVersion)
    fail(cat("unsupported format version '", version, "'"));
  std::string kind = need(j, "kind").get<std::string>();
  const Json& payload = need(j, "payload");
  Document d;
  if (kind == "poset") {
    d.kind = DocKind::poset;
    d.poset = poset_from_payload(payload);
  } else if (kind == "semilattice") {
    d.kind = DocKind::semilattice;
    d.semilattice = semilattice_from_payload(payload);
  } else if (kind == "measured-poset") {
    d.kind = DocKind::measured_poset;
    d.measured = measured_from_payload(payload);
  } else if (kind == "diagram") {
    d.kind = DocKind::diagram;
    d.diagram = diagram_from_payload(payload);
  } else if (kind == "run-report") {
    d.kind = DocKind::run_report;
    d.report = payload;
  } else {
    fail(cat("unknown document kind '", kind, "'"));
  }
  return d;
}

Document make_doc(Poset p) {
  Document d;
  d.kind = DocKind::poset;
  d.poset = std::move(p);
  return d;
}

Document make_doc(SemilatticePtr s) {
  Document d;
  d.kind = DocKind::semilattice;
  d.semilattice = std::move(s);
  return d;
}

Document make_doc(MeasuredPoset m) {
  Document d;
  d.kind = DocKind::measured_poset;
  d.measured = std::move(m);
  return d;
}

Document make_doc(MeasuredDiagram dg) {
  Document d;
  d.kind = DocKind::diagram;
  d.diagram = std::move(dg);
  return d;
}

Document make_report_doc(Json payload) {
  Document d;
  d.kind = DocKind::run_report;
  d.report = std::move(payload);
  return d;
}

}  // namespace pmlat
