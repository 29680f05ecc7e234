#include "povswb/wbcli/commands.hpp"

#include <map>
#include <set>

#include "povswb/maps/linear_map.hpp"
#include "povswb/order/analysis.hpp"
#include "povswb/order/quotient.hpp"
#include "povswb/wbcli/document.hpp"

namespace povswb::wbcli {

namespace {

using order::PreOrderedSpace;

const char* const kOutOfScope[] = {
    "Nakayama's example (alpha = 2, lambda = 3) lives in an infinite-dimensional space and is not reproduced.",
    "lambda values for l_inf/c00 and c0/c00 are not reproduced; sequence spaces are checked at witness level only.",
};

Json fraction(const Rational& r) { return exact::to_fraction_string(r); }

Json vec(const Vector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(fraction(x));
  return a;
}

Json mat(const Matrix& m) {
  Json a = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) a.push_back(vec(m.row(r)));
  return a;
}

Json basis(const exact::Subspace& s) {
  Json a = Json::array();
  for (const auto& v : s.basis()) a.push_back(vec(v));
  return a;
}

Json opt_count(const std::optional<std::size_t>& n) { return n ? Json(*n) : Json(nullptr); }

// Collects problems while a command runs; the worst one sets the exit code.
struct Status {
  std::vector<std::string> violations;
  std::vector<std::string> capacity;

  int exit_code() const {
    if (!violations.empty()) return kPropertyViolation;
    if (!capacity.empty()) return kCapacityError;
    return kOk;
  }
};

bool is_capacity(const std::exception& e) {
  return dynamic_cast<const order::cap_exceeded*>(&e) != nullptr ||
         dynamic_cast<const semilin::capacity_error*>(&e) != nullptr ||
         dynamic_cast<const maps::size_cap_refused*>(&e) != nullptr ||
         dynamic_cast<const seq::crossover_too_large*>(&e) != nullptr;
}

// Runs body; capacity errors and violated postconditions are recorded
// under `context` instead of escaping.
template <class F>
bool guarded(Status& st, const std::string& context, F&& body) {
  try {
    body();
    return true;
  } catch (const order::internal_check_failure& e) {
    st.violations.push_back(context + ": " + e.what());
  } catch (const std::exception& e) {
    if (!is_capacity(e)) throw;
    st.capacity.push_back(context + ": " + e.what());
  }
  return false;
}

Json analysis_json(const order::AnalysisReport& r) {
  Json j;
  j["wedge"] = r.is_wedge;
  if (r.additivity_witness) j["additivity_witness"] = {vec(r.additivity_witness->first), vec(r.additivity_witness->second)};
  if (!r.is_wedge) return j;
  j["cone"] = r.is_cone;
  j["majorizing"] = r.is_majorizing;
  j["almost_archimedean"] = r.is_almost_archimedean;
  j["archimedean"] = r.is_archimedean;
  j["ru_closed"] = r.is_ru_closed;
  j["alpha"] = opt_count(r.alpha_type);
  j["lambda"] = opt_count(r.lambda_type);
  j["lineality_dim"] = r.lineality_dim;
  j["regulator"] = vec(r.regulator);
  if (r.archimedean_witness) j["archimedean_witness"] = vec(*r.archimedean_witness);
  if (r.ideals.size() > 1) j["infinitesimal_ideal"] = basis(r.ideals[1]);
  return j;
}

Json trace_json(const order::ClosureTrace& t) {
  Json j;
  Json steps = Json::array();
  for (const auto& s : t.iterates) steps.push_back(to_dsl(s));
  j["iterates"] = std::move(steps);
  j["steps"] = t.steps;
  j["closure"] = to_dsl(t.closure);
  return j;
}

Json sequence_json(const SeqDecl& d, Status& st) {
  Json j;
  j["name"] = d.name;
  j["value"] = d.value.to_string();
  const seq::SeqClass cls = seq::classify(d.value);
  j["class"] = seq::to_string(cls);
  const seq::SeqClass ambient = d.ambient.value_or(cls == seq::SeqClass::linf ? seq::SeqClass::linf : seq::SeqClass::c0);
  j["ambient"] = seq::to_string(ambient);
  if (ambient == seq::SeqClass::c0 && cls == seq::SeqClass::linf) {
    st.violations.push_back(d.name + ": not an element of c0");
    j["infinitesimal"] = nullptr;
    return j;
  }
  guarded(st, d.name, [&] {
    const auto w = seq::is_infinitesimal_mod_c00(d.value, ambient);
    j["infinitesimal"] = w.has_value();
    if (w) {
      Json wj;
      wj["regulator"] = w->regulator.to_string();
      wj["dominance"] = w->dominance;
      Json th = Json::array();
      for (const auto& [n, k] : w->thresholds) th.push_back({{"n", n}, {"from", k}});
      wj["thresholds"] = std::move(th);
      j["witness"] = std::move(wj);
    }
    const auto b = seq::order_unit_bound(d.value);
    j["unit_bound"] = {{"multiple", fraction(b.multiple)}, {"from", b.from}};
  });
  return j;
}

std::string value_string(const Json& v) {
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_unsigned()) return std::to_string(v.get<std::uint64_t>());
  if (v.is_number_integer()) return std::to_string(v.get<std::int64_t>());
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "null";
  return v.dump();
}

// ---- commands over a parsed file ----

Json cmd_check(const WorkbenchFile& f, const Options& o, Status& st) {
  Json res;
  std::map<std::string, Json> subjects;
  std::map<std::string, bool> wedge_expected;
  for (const auto& e : f.expectations)
    if (e.property == "wedge") wedge_expected[e.subject] = true;

  Json spaces = Json::array();
  for (const auto& s : f.spaces) {
    Json j;
    j["name"] = s.name;
    j["dim"] = s.dim;
    j["wedge_expr"] = to_dsl(s.wedge);
    guarded(st, s.name, [&] {
      const order::AnalysisReport r = order::analyze(PreOrderedSpace(s.wedge), o.cap);
      j.update(analysis_json(r));
      if (!r.is_wedge && !wedge_expected.count(s.name)) st.violations.push_back(s.name + ": positive set is not a wedge");
      if (r.is_wedge && !r.alpha_type) st.capacity.push_back(s.name + ": ru-closure did not stabilize within the cap");
      if (r.is_wedge && !r.lambda_type) st.capacity.push_back(s.name + ": ideal tower did not stabilize within the cap");
    });
    subjects[s.name] = j;
    spaces.push_back(std::move(j));
  }
  res["spaces"] = std::move(spaces);

  Json vectors = Json::array();
  for (const auto& v : f.vectors) {
    const PreOrderedSpace sp = f.space(v.space);
    Json j{{"name", v.name}, {"space", v.space}, {"value", vec(v.value)}};
    const bool pos = sp.positive().contains(v.value);
    j["positive"] = pos;
    guarded(st, v.name, [&] { j["order_unit"] = pos && order::has_order_unit(sp, v.value); });
    subjects[v.name] = j;
    vectors.push_back(std::move(j));
  }
  res["vectors"] = std::move(vectors);

  Json sets = Json::array();
  std::map<std::string, bool> closed;
  for (const auto& s : f.sets) {
    Json j{{"name", s.name}, {"space", s.space}, {"set", to_dsl(s.set)}};
    guarded(st, s.name, [&] {
      closed[s.name] = order::is_ru_closed(f.space(s.space), s.set);
      j["ru_closed"] = closed[s.name];
    });
    subjects[s.name] = j;
    sets.push_back(std::move(j));
  }
  res["sets"] = std::move(sets);

  Json maps_j = Json::array();
  for (const auto& m : f.maps) {
    Json j{{"name", m.name}, {"domain", m.domain}, {"codomain", m.codomain}, {"matrix", mat(m.matrix)}};
    const maps::LinearMap t(m.matrix, f.space(m.domain), f.space(m.codomain));
    guarded(st, m.name, [&] {
      const bool positive = maps::is_positive(t);
      j["positive"] = positive;
      try {
        j["order_bounded"] = maps::is_order_bounded(t);
      } catch (const maps::size_cap_refused& e) {
        j["order_bounded"] = nullptr;
        j["order_bounded_refused"] = e.what();
      }
      Json cont = Json::array();
      for (const auto& s : f.sets) {
        if (s.space != m.codomain || !closed[s.name]) continue;
        cont.push_back({{"set", s.name}, {"ru_continuous", maps::check_ru_continuity(t, s.set)}});
        if (positive && !cont.back()["ru_continuous"].get<bool>())
          st.violations.push_back(m.name + ": preimage of ru-closed " + s.name + " is not ru-closed");
      }
      j["continuity"] = std::move(cont);
    });
    subjects[m.name] = j;
    maps_j.push_back(std::move(j));
  }
  res["maps"] = std::move(maps_j);

  Json seqs = Json::array();
  for (const auto& s : f.sequences) {
    Json j = sequence_json(s, st);
    subjects[s.name] = j;
    seqs.push_back(std::move(j));
  }
  res["sequences"] = std::move(seqs);

  Json exp = Json::array();
  for (const auto& e : f.expectations) {
    const Json& subj = subjects[e.subject];
    const bool known = subj.is_object() && subj.contains(e.property);
    const std::string actual = known ? value_string(subj[e.property]) : "unknown property";
    const bool ok = known && actual == e.value;
    exp.push_back({{"line", e.line}, {"subject", e.subject}, {"property", e.property}, {"expected", e.value},
                   {"actual", actual}, {"ok", ok}});
    if (!ok)
      st.violations.push_back("line " + std::to_string(e.line) + ": expected " + e.subject + " " + e.property + " = " +
                              e.value + ", got " + actual);
  }
  res["expectations"] = std::move(exp);
  return res;
}

Json cmd_closure(const WorkbenchFile& f, const Options& o, Status& st) {
  Json res;
  Json spaces = Json::array();
  for (const auto& s : f.spaces) {
    Json j{{"name", s.name}, {"dim", s.dim}};
    guarded(st, s.name, [&] {
      const PreOrderedSpace sp(s.wedge);
      j.update(trace_json(order::ru_closure(sp, sp.positive(), o.cap)));
    });
    spaces.push_back(std::move(j));
  }
  res["spaces"] = std::move(spaces);
  Json sets = Json::array();
  for (const auto& s : f.sets) {
    Json j{{"name", s.name}, {"space", s.space}};
    guarded(st, s.name, [&] { j.update(trace_json(order::ru_closure(f.space(s.space), s.set, o.cap))); });
    sets.push_back(std::move(j));
  }
  res["sets"] = std::move(sets);
  return res;
}

std::string unique_name(std::set<std::string>& used, const std::string& base) {
  std::string name = base;
  for (int i = 2; used.count(name); ++i) name = base + std::to_string(i);
  used.insert(name);
  return name;
}

Json cmd_archimedeanize(const WorkbenchFile& f, const Options& o, Status& st, std::string& document) {
  Json res = Json::array();
  std::set<std::string> used;
  for (const auto& s : f.spaces) used.insert(s.name);
  document = "# povs-wb " POVSWB_VERSION " archimedeanize\n";
  for (const auto& line : [&] {
         std::vector<std::string> lines;
         std::string cur;
         for (char c : o.file_text) {
           if (c == '\n') {
             lines.push_back(cur);
             cur.clear();
           } else {
             cur += c;
           }
         }
         if (!cur.empty()) lines.push_back(cur);
         return lines;
       }())
    document += "# | " + line + "\n";
  for (const auto& s : f.spaces) {
    Json j{{"name", s.name}, {"dim", s.dim}};
    guarded(st, s.name, [&] {
      const PreOrderedSpace sp(s.wedge);
      if (!order::validate_wedge(sp).valid) {
        st.violations.push_back(s.name + ": positive set is not a wedge");
        return;
      }
      const order::QuotientPresentation q = order::archimedeanization(sp, o.cap);
      const std::string qn = unique_name(used, s.name + "_arch");
      const std::string pn = unique_name(used, s.name + "_pi");
      const std::string sn = unique_name(used, s.name + "_sigma");
      j["quotient"] = qn;
      j["kernel"] = basis(q.kernel);
      j["projection"] = mat(q.projection);
      j["section"] = mat(q.section);
      j["quotient_dim"] = q.quotient.dim();
      j["quotient_wedge"] = to_dsl(q.quotient.positive());
      j["cone"] = order::is_cone(q.quotient);
      j["archimedean"] = order::is_archimedean(q.quotient);
      document += "\nspace " + s.name + " dim " + std::to_string(s.dim) + "\n";
      document += "wedge " + s.name + ".pos := " + to_dsl(s.wedge) + "\n";
      document += "space " + qn + " dim " + std::to_string(q.quotient.dim()) + "\n";
      document += "wedge " + qn + ".pos := " + to_dsl(q.quotient.positive()) + "\n";
      document += "map " + pn + " : " + s.name + " -> " + qn + " matrix " + to_dsl(q.projection) + "\n";
      document += "map " + sn + " : " + qn + " -> " + s.name + " matrix " + to_dsl(q.section) + "\n";
      document += "expect " + qn + " cone = true\n";
      document += "expect " + qn + " archimedean = true\n";
      document += "expect " + pn + " positive = true\n";
    });
    res.push_back(std::move(j));
  }
  return res;
}

Json cmd_ideals(const WorkbenchFile& f, const Options& o, Status& st) {
  Json res = Json::array();
  for (const auto& s : f.spaces) {
    Json j{{"name", s.name}, {"dim", s.dim}};
    guarded(st, s.name, [&] {
      const order::IdealTower t = order::ideal_tower(PreOrderedSpace(s.wedge), o.cap);
      Json tower = Json::array();
      for (const auto& i : t.ideals) tower.push_back({{"dim", i.dimension()}, {"basis", basis(i)}});
      j["tower"] = std::move(tower);
      j["lambda"] = t.lambda;
    });
    res.push_back(std::move(j));
  }
  return res;
}

Json cmd_types(const WorkbenchFile& f, const Options& o, Status& st) {
  Json res = Json::array();
  for (const auto& s : f.spaces) {
    Json j{{"name", s.name}, {"dim", s.dim}};
    guarded(st, s.name, [&] {
      const PreOrderedSpace sp(s.wedge);
      j["alpha"] = order::alpha_type(sp, o.cap);
      j["lambda"] = order::ideal_tower(sp, o.cap).lambda;
    });
    res.push_back(std::move(j));
  }
  return res;
}

Json cmd_factor(const WorkbenchFile& f, const Options& o, Status& st) {
  const MapDecl* m = f.find_map(o.map);
  if (m == nullptr) throw std::invalid_argument("unknown map '" + o.map + "' (use --map NAME)");
  Json j{{"name", m->name}, {"domain", m->domain}, {"codomain", m->codomain}, {"matrix", mat(m->matrix)}};
  const maps::LinearMap phi(m->matrix, f.space(m->domain), f.space(m->codomain));
  guarded(st, m->name, [&] {
    try {
      const maps::Factorization fz = maps::factor_through_archimedeanization(phi, o.cap);
      j["kernel"] = basis(fz.presentation.kernel);
      j["projection"] = mat(fz.presentation.projection);
      j["quotient_wedge"] = to_dsl(fz.presentation.quotient.positive());
      j["factor"] = mat(fz.factor.matrix());
      j["identity_holds"] = fz.factor.matrix() * fz.quotient_map.matrix() == m->matrix;
      j["factor_positive"] = maps::is_positive(fz.factor);
    } catch (const std::invalid_argument& e) {
      j["error"] = e.what();
      st.violations.push_back(m->name + ": " + e.what());
    }
  });
  return j;
}

Json cmd_seq(const WorkbenchFile& f, Status& st) {
  Json res;
  Json seqs = Json::array();
  std::size_t c0 = 0, witnessed = 0;
  for (const auto& s : f.sequences) {
    Json j = sequence_json(s, st);
    if (j["ambient"] == "c0") {
      ++c0;
      if (j.contains("infinitesimal") && j["infinitesimal"] == true) ++witnessed;
    }
    seqs.push_back(std::move(j));
  }
  res["sequences"] = std::move(seqs);
  res["c0_elements"] = c0;
  res["c0_infinitesimal_mod_c00"] = witnessed;
  if (witnessed != c0) st.violations.push_back("some c0 element has no regulator witnessing I(c0/c00) = c0/c00");
  return res;
}

// ---- search ----

std::string case_document(std::size_t index, const PreOrderedSpace& sp) {
  const std::string name = "W" + std::to_string(index);
  return "space " + name + " dim " + std::to_string(sp.dim()) + "\nwedge " + name + ".pos := " + to_dsl(sp.positive()) +
         "\n";
}

Json cmd_search(const Options& o, Status& st) {
  if (o.dim == 0 || o.dim > kSearchDimCap)
    throw order::cap_exceeded("search dimension must lie in 1.." + std::to_string(kSearchDimCap));
  order::WedgeGenerator gen(o.seed);
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> table;
  Json cases = Json::array(), capped = Json::array(), violations = Json::array();
  struct Counter {
    Json indices = Json::array();
    Json documents = Json::array();
  };
  std::map<std::string, Counter> counter;
  const std::string plus_one = "lambda = alpha + 1", equal = "lambda = alpha";
  counter[plus_one];
  counter[equal];

  for (std::size_t i = 0; i < o.cases; ++i) {
    const PreOrderedSpace sp = gen.next(o.dim);
    Json c{{"index", i}, {"wedge", to_dsl(sp.positive())}};
    std::vector<std::string> bad;
    try {
      const order::AnalysisReport r = order::analyze(sp, o.cap);
      auto require = [&](bool ok, const std::string& what) {
        if (!ok) bad.push_back(what);
      };
      require(r.is_wedge, "generated set is a wedge");
      require(r.is_archimedean == r.is_ru_closed, "archimedean iff positive set ru-closed");
      if (!r.alpha_type || !r.lambda_type) throw order::cap_exceeded("type iteration hit the cap");
      const std::size_t a = *r.alpha_type, l = *r.lambda_type;
      c["alpha"] = a;
      c["lambda"] = l;
      require((a == 0) == r.is_archimedean, "alpha = 0 iff archimedean");
      require((l == 0) == r.is_almost_archimedean, "lambda = 0 iff almost archimedean");
      require(!r.is_almost_archimedean || a <= 1, "almost archimedean implies alpha <= 1");
      require(!r.is_almost_archimedean || r.is_cone, "almost archimedean implies cone");
      require(r.ideals.size() > 1 && r.ideals[1].is_trivial() == r.is_almost_archimedean,
              "I(X) = {0} iff almost archimedean");
      const order::QuotientPresentation q = order::archimedeanization(sp, o.cap);
      require(order::is_cone(q.quotient), "archimedeanization is a cone");
      require(order::is_archimedean(q.quotient), "archimedeanization is archimedean");
      require(order::is_majorizing(q.quotient) == r.is_majorizing, "quotient majorizing iff X+ majorizing");
      ++table[{a, l}];
      if (l != a + 1) {
        counter[plus_one].indices.push_back(i);
        if (counter[plus_one].documents.size() < 3) counter[plus_one].documents.push_back(case_document(i, sp));
      }
      if (l != a) {
        counter[equal].indices.push_back(i);
        if (counter[equal].documents.size() < 3) counter[equal].documents.push_back(case_document(i, sp));
      }
    } catch (const order::internal_check_failure& e) {
      bad.push_back(e.what());
    } catch (const std::exception& e) {
      if (!is_capacity(e)) throw;
      capped.push_back({{"index", i}, {"reason", e.what()}, {"document", case_document(i, sp)}});
      c["capped"] = true;
    }
    if (!bad.empty()) {
      Json b = Json::array();
      for (const auto& s : bad) b.push_back(s);
      c["violations"] = b;
      violations.push_back({{"index", i}, {"failed", b}, {"document", case_document(i, sp)}});
      for (const auto& s : bad) st.violations.push_back("case " + std::to_string(i) + ": " + s);
    }
    cases.push_back(std::move(c));
  }

  Json res;
  Json t = Json::array();
  for (const auto& [k, n] : table) t.push_back({{"alpha", k.first}, {"lambda", k.second}, {"count", n}});
  res["table"] = std::move(t);
  Json ce;
  for (const auto& name : {plus_one, equal}) {
    ce[name] = {{"count", counter[name].indices.size()},
                {"cases", counter[name].indices},
                {"documents", counter[name].documents}};
  }
  res["counterexamples"] = std::move(ce);
  res["invariant_violations"] = std::move(violations);
  res["capped"] = std::move(capped);
  res["rejected_candidates"] = gen.rejected();
  res["cases"] = std::move(cases);
  return res;
}

std::string render(const Json& report, const Options& o, const std::string& document) {
  if (o.format == "json") return report.dump(2) + "\n";
  if (o.command == "archimedeanize" && !document.empty() && report.value("exit_code", 0) != kUsageError)
    return document;
  return render_text(report);
}

}  // namespace

Outcome run(const Options& o) {
  Outcome out;
  Json& rep = out.report;
  rep["tool"] = "povs-wb";
  rep["version"] = POVSWB_VERSION;
  rep["command"] = o.command;
  Json opts;
  if (o.command == "search") {
    opts = {{"dim", o.dim}, {"cases", o.cases}, {"seed", o.seed}, {"cap", o.cap}};
  } else {
    opts = {{"cap", o.cap}};
    if (o.command == "factor") opts["map"] = o.map;
  }
  rep["options"] = std::move(opts);
  if (o.command != "search") rep["input"] = {{"path", o.file_path}, {"text", o.file_text}};

  Status st;
  std::string document;
  int code = kOk;
  try {
    if (o.format != "json" && o.format != "text") throw std::invalid_argument("format must be json or text");
    if (o.command == "search") {
      rep["results"] = cmd_search(o, st);
    } else {
      const WorkbenchFile f = parse(o.file_text);
      if (o.command == "check") {
        rep["results"] = cmd_check(f, o, st);
      } else if (o.command == "closure") {
        rep["results"] = cmd_closure(f, o, st);
      } else if (o.command == "archimedeanize") {
        rep["results"] = cmd_archimedeanize(f, o, st, document);
      } else if (o.command == "ideals") {
        rep["results"] = cmd_ideals(f, o, st);
      } else if (o.command == "types") {
        rep["results"] = cmd_types(f, o, st);
      } else if (o.command == "factor") {
        rep["results"] = cmd_factor(f, o, st);
      } else if (o.command == "seq") {
        rep["results"] = cmd_seq(f, st);
      } else {
        throw std::invalid_argument("unknown command '" + o.command + "'");
      }
    }
    code = st.exit_code();
  } catch (const ParseError& e) {
    rep["error"] = {{"kind", "parse"}, {"line", e.line()}, {"column", e.column()}, {"message", e.message()}};
    code = kUsageError;
  } catch (const std::exception& e) {
    if (is_capacity(e)) {
      st.capacity.push_back(e.what());
      code = kCapacityError;
    } else {
      rep["error"] = {{"kind", "input"}, {"message", e.what()}};
      code = kUsageError;
    }
  }
  Json notes = Json::array();
  for (const char* n : kOutOfScope) notes.push_back(n);
  rep["out_of_scope"] = std::move(notes);
  rep["violations"] = st.violations;
  rep["capacity_errors"] = st.capacity;
  rep["exit_code"] = code;
  out.exit_code = code;
  out.rendered = render(rep, o, document);
  return out;
}

namespace {

void render_value(const Json& v, const std::string& indent, std::string& out);

bool is_scalar(const Json& v) { return !v.is_object() && !v.is_array(); }

std::string scalar(const Json& v) { return value_string(v); }

bool flat_array(const Json& v) {
  if (!v.is_array()) return false;
  for (const auto& x : v) {
    if (x.is_string() && x.get<std::string>().find(' ') != std::string::npos) return false;
    if (!is_scalar(x) && !flat_array(x)) return false;
  }
  return true;
}

std::string inline_array(const Json& v) {
  std::string s = "[";
  bool first = true;
  for (const auto& x : v) {
    if (!first) s += ", ";
    first = false;
    s += x.is_array() ? inline_array(x) : scalar(x);
  }
  return s + "]";
}

void render_entry(const std::string& key, const Json& v, const std::string& indent, std::string& out) {
  const std::string lead = key == "-" ? "- " : key + ": ";
  if (v.is_string() && v.get<std::string>().find('\n') != std::string::npos) {
    out += indent + key + ":\n";
    std::string line;
    for (char c : v.get<std::string>()) {
      if (c == '\n') {
        out += indent + "  | " + line + "\n";
        line.clear();
      } else {
        line += c;
      }
    }
    if (!line.empty()) out += indent + "  | " + line + "\n";
  } else if (is_scalar(v)) {
    out += indent + lead + scalar(v) + "\n";
  } else if (flat_array(v)) {
    out += indent + lead + inline_array(v) + "\n";
  } else {
    out += indent + key + ":\n";
    render_value(v, indent + "  ", out);
  }
}

void render_value(const Json& v, const std::string& indent, std::string& out) {
  if (v.is_object()) {
    for (const auto& [k, x] : v.items()) render_entry(k, x, indent, out);
  } else if (v.is_array()) {
    for (const auto& x : v) {
      if (x.is_object()) {
        out += indent + "-\n";
        render_value(x, indent + "  ", out);
      } else {
        render_entry("-", x, indent, out);
      }
    }
  } else {
    out += indent + scalar(v) + "\n";
  }
}

}  // namespace

std::string render_text(const Json& report) {
  std::string out;
  render_value(report, "", out);
  return out;
}

}  // namespace povswb::wbcli
