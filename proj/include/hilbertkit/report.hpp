#pragma once

#include <cstdint>
#include <cstdio>
#include <sstream>
#include <string>
#include <type_traits>
#include <vector>

#include "json.hpp"

#include "hilbertkit/analyze.hpp"
#include "hilbertkit/corpus.hpp"

namespace hk {

inline constexpr const char* kVersion = "0.3.0";

using Json = nlohmann::json;  // std::map keys: serialisation is key-sorted

struct RunMeta {
  std::string command;
  std::uint64_t seed = 1;
  std::uint32_t characteristic = 32003;
  std::size_t trials = 5;
  unsigned r_max = 30;
};

inline Json to_json(const RunMeta& m) {
  return {{"command", m.command},     {"seed", m.seed},   {"characteristic", m.characteristic},
          {"trials", m.trials},       {"r_max", m.r_max}, {"version", kVersion}};
}

inline const char* to_string(Error::Kind k) {
  switch (k) {
    case Error::Kind::Structural: return "structural";
    case Error::Kind::Parse: return "parse";
    case Error::Kind::NotMPrimary: return "not-m-primary";
    case Error::Kind::CapExceeded: return "cap-exceeded";
    case Error::Kind::Precondition: return "precondition";
  }
  return "?";
}

namespace detail {

inline Json poly_list(const std::vector<Polynomial>& ps) {
  Json a = Json::array();
  for (const auto& p : ps) a.push_back(p.to_string());
  return a;
}

inline Json bound_json(const DepthBound& b) {
  return {{"value", b.value}, {"criterion", to_string(b.tag)}, {"detail", b.detail}};
}

inline Json analysis_json(const std::string& label, const ReductionAnalysis& a) {
  Json j{{"label", label},
         {"generators", poly_list(a.rd.J.gens())},
         {"r", a.rd.r},
         {"length_table", a.rd.length_table},
         {"e1_deficit", a.deficits.e1_deficit},
         {"e2_deficit", a.deficits.e2_deficit ? Json(*a.deficits.e2_deficit) : Json()}};
  j["valabrega_valla"] = a.vv ? Json(*a.vv) : Json();
  if (a.b) j["b_sequence"] = {{"values", a.b->values}, {"sum", a.b->sum()}, {"weighted_sum", a.b->weighted_sum()}};
  if (a.guerrieri) j["guerrieri_sum"] = {{"terms", a.guerrieri->terms}, {"total", a.guerrieri->total()}};
  return j;
}

inline Json hilbert_json(const HilbertData& hd) {
  return {{"e", hd.coefficients}, {"table", hd.table}, {"postulation", hd.postulation}};
}

}  // namespace detail

inline Json to_json(const IdealReport& rep) {
  Json j;
  j["name"] = rep.name;
  j["ring"] = {{"characteristic", rep.ideal.ring()->characteristic()}, {"vars", rep.ideal.base()->names()}};
  j["generators"] = detail::poly_list(rep.ideal.gens());
  j["dimension"] = rep.d;
  j["m_primary"] = rep.m_primary;
  if (rep.hilbert) {
    j["colength"] = rep.colength;
    j["hilbert"] = detail::hilbert_json(*rep.hilbert);
  }
  if (rep.independence) {
    const auto& ind = *rep.independence;
    Json samples = Json::array();
    for (const auto& s : ind.samples)
      samples.push_back({{"label", s.label}, {"r", s.r ? Json(*s.r) : Json()}, {"failure", s.failure}});
    j["independence"] = {
        {"verdict", ind.verdict == IndependenceReport::Verdict::NotIndependent ? "NOT-independent"
                                                                               : "independent-up-to-sampling"},
        {"samples", samples},
        {"r_values", ind.observed_r_values},
        {"witness", ind.witness ? Json{ind.samples[ind.witness->first].label, ind.samples[ind.witness->second].label}
                                : Json()}};
  }
  Json as = Json::array();
  for (std::size_t k = 0; k < rep.analyses.size(); ++k)
    as.push_back(detail::analysis_json(rep.analysis_labels[k], rep.analyses[k]));
  j["reductions"] = as;
  if (rep.northcott)
    j["northcott"] = {{"holds", rep.northcott->northcott_holds},
                      {"boundary", rep.northcott->boundary},
                      {"i2_equals_ji", rep.northcott->i2_equals_ji}};
  if (rep.reduced) {
    const auto& r = *rep.reduced;
    Json rj{{"elements", detail::poly_list(r.reduction.elements)}, {"hilbert", detail::hilbert_json(r.reduction.after)}};
    if (r.analysis) rj["analysis"] = detail::analysis_json("image", *r.analysis);
    j["dimension_reduction"] = rj;
  }
  if (rep.depth)
    j["depth"] = {{"lower", detail::bound_json(rep.depth->lower)},
                  {"upper", detail::bound_json(rep.depth->upper)},
                  {"exact", rep.depth->exact()},
                  {"evidence", rep.depth->evidence}};
  if (rep.closure) {
    const auto& c = *rep.closure;
    j["closure"] = {{"verdict", to_string(c.verdict)},
                    {"method", to_string(c.method)},
                    {"witness", c.witness ? Json(c.witness->to_string()) : Json()},
                    {"witness_r", c.witness_r ? Json(*c.witness_r) : Json()},
                    {"note", c.note},
                    {"ratliff_rush_closed", rep.rr_closed ? Json(*rep.rr_closed) : Json()}};
  }
  Json cs = Json::array();
  for (const auto& c : rep.claims) {
    Json h = Json::array();
    for (const auto& [name, v] : c.hypotheses) h.push_back({{"hypothesis", name}, {"value", v}});
    cs.push_back({{"id", to_string(c.id)},
                  {"status", to_string(c.status)},
                  {"applicable", c.applicable},
                  {"hypotheses", h},
                  {"detail", c.detail}});
  }
  j["claims"] = cs;
  Json es = Json::array();
  for (const auto& e : rep.errors) es.push_back({{"stage", e.stage}, {"kind", to_string(e.kind)}, {"message", e.message}});
  j["errors"] = es;
  return j;
}

inline Json to_json(const std::vector<CheckRow>& rows) {
  Json a = Json::array();
  for (const auto& r : rows)
    a.push_back({{"field", r.field}, {"expected", r.expected}, {"got", r.got}, {"pass", r.pass}});
  return a;
}

inline Json to_json(const SearchSummary& s) {
  Json t = Json::array();
  for (const auto& c : s.tallies)
    t.push_back({{"claim", to_string(c.id)},
                 {"applicable", c.applicable},
                 {"verified", c.verified},
                 {"vacuous", c.vacuous},
                 {"violated", c.violated},
                 {"undetermined", c.undetermined},
                 {"hypotheses_unverifiable", c.unverifiable}});
  Json v = Json::array();
  for (const auto& x : s.violations)
    v.push_back({{"sample", x.index}, {"claim", to_string(x.result.id)}, {"generators", x.ideal.gens},
                 {"detail", x.result.detail}});
  Json e = Json::array();
  for (const auto& [k, msg] : s.errors) e.push_back({{"sample", k}, {"message", msg}});
  return {{"samples", s.samples}, {"claims", t}, {"violations", v}, {"errors", e}};
}

/// Pretty JSON with sorted keys and a trailing newline.
inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------------------
// Table rendering

namespace detail {

template <class T>
std::string join(const std::vector<T>& v, const char* sep = ",") {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) {
    os << (i ? sep : "");
    if constexpr (std::is_same_v<T, Polynomial>)
      os << v[i].to_string();
    else
      os << v[i];
  }
  return os.str();
}

inline std::string bound_text(const DepthBound& b) {
  return std::to_string(b.value) + " [" + to_string(b.tag) + "]" + (b.detail.empty() ? "" : " " + b.detail);
}

inline void analysis_lines(std::ostringstream& os, const std::string& label, const ReductionAnalysis& a) {
  os << "  J " << label << ": r=" << a.rd.r << " lengths=" << join(a.rd.length_table)
     << " e1_deficit=" << a.deficits.e1_deficit
     << " e2_deficit=" << (a.deficits.e2_deficit ? std::to_string(*a.deficits.e2_deficit) : "-");
  if (a.vv) os << " vv=" << (*a.vv ? "yes" : "no");
  if (a.b) os << " B=" << join(a.b->values) << " sumB=" << a.b->sum() << " wsumB=" << a.b->weighted_sum();
  if (a.guerrieri) os << " guerrieri=" << a.guerrieri->total();
  os << "\n";
}

}  // namespace detail

inline std::string render_table(const IdealReport& rep) {
  std::ostringstream os;
  os << "ideal " << rep.name << " = " << rep.ideal.to_string() << "\n";
  os << "  ring: char " << rep.ideal.ring()->characteristic() << ", vars " << detail::join(rep.ideal.base()->names())
     << ", d=" << rep.d << "\n";
  os << "  m-primary: " << (rep.m_primary ? "yes" : "no") << "\n";
  if (rep.hilbert) {
    const auto& hd = *rep.hilbert;
    os << "  ";
    for (std::size_t i = 0; i < hd.coefficients.size(); ++i) os << (i ? " " : "") << "e" << i << "=" << hd.e(i);
    os << "\n  colength=" << rep.colength << " postulation=" << hd.postulation
       << " hilbert_function=" << detail::join(hd.table) << "\n";
  }
  if (rep.independence) {
    const auto& ind = *rep.independence;
    for (const auto& s : ind.samples)
      if (!s.r) os << "  J " << s.label << ": " << s.failure << "\n";
  }
  for (std::size_t k = 0; k < rep.analyses.size(); ++k)
    detail::analysis_lines(os, rep.analysis_labels[k], rep.analyses[k]);
  if (rep.independence) {
    const auto& ind = *rep.independence;
    os << "  independence: "
       << (ind.verdict == IndependenceReport::Verdict::NotIndependent ? "NOT-independent" : "independent-up-to-sampling");
    if (ind.witness)
      os << " (" << ind.samples[ind.witness->first].label << " vs " << ind.samples[ind.witness->second].label << ")";
    os << " r values " << detail::join(ind.observed_r_values) << "\n";
  }
  if (rep.northcott)
    os << "  northcott: e1 >= e0 - colength " << (rep.northcott->northcott_holds ? "holds" : "FAILS")
       << ", equality " << (rep.northcott->boundary ? "yes" : "no") << ", I^2 = JI "
       << (rep.northcott->i2_equals_ji ? "yes" : "no") << "\n";
  if (rep.reduced) {
    const auto& r = *rep.reduced;
    os << "  reduced to dimension 2 modulo " << detail::join(r.reduction.elements) << ": ";
    for (std::size_t i = 0; i < r.reduction.after.coefficients.size(); ++i)
      os << (i ? " " : "") << "e" << i << "=" << r.reduction.after.e(i);
    os << "\n";
    if (r.analysis) detail::analysis_lines(os, "image", *r.analysis);
  }
  if (rep.depth) {
    os << "  depth G(I): lower " << detail::bound_text(rep.depth->lower) << "; upper "
       << detail::bound_text(rep.depth->upper) << (rep.depth->exact() ? " (exact)" : "") << "\n";
    for (const auto& e : rep.depth->evidence) os << "    evidence: " << e << "\n";
  }
  if (rep.closure) {
    const auto& c = *rep.closure;
    os << "  integrally closed: " << to_string(c.verdict) << " via " << to_string(c.method);
    if (c.witness) os << ", witness " << c.witness->to_string();
    if (!c.note.empty()) os << " (" << c.note << ")";
    os << "\n";
  }
  for (const auto& c : rep.claims)
    os << "  claim " << to_string(c.id) << ": " << to_string(c.status) << (c.detail.empty() ? "" : " " + c.detail)
       << "\n";
  for (const auto& e : rep.errors) os << "  error in " << e.stage << " [" << to_string(e.kind) << "]: " << e.message << "\n";
  return os.str();
}

inline std::string render_table(const SearchSummary& s) {
  std::ostringstream os;
  os << "samples: " << s.samples << "\n";
  os << "  claim         applicable verified vacuous violated undetermined unverifiable\n";
  for (const auto& c : s.tallies) {
    char line[160];
    std::snprintf(line, sizeof line, "  %-13s %10zu %8zu %7zu %8zu %12zu %12zu\n", to_string(c.id), c.applicable,
                  c.verified, c.vacuous, c.violated, c.undetermined, c.unverifiable);
    os << line;
  }
  for (const auto& v : s.violations)
    os << "  VIOLATION sample " << v.index << " " << to_string(v.result.id) << ": " << detail::join(v.ideal.gens, ", ")
       << " (" << v.result.detail << ")\n";
  for (const auto& [k, msg] : s.errors) os << "  sample " << k << " error: " << msg << "\n";
  return os.str();
}

}  // namespace hk
