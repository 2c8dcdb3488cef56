#include "asymvar/report.hpp"

#include <cstdio>
#include <sstream>

#include "asymvar/parser.hpp"

namespace asymvar {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool parse_switch(const std::string& key, const std::string& v) {
  if (v == "on" || v == "true" || v == "1") return true;
  if (v == "off" || v == "false" || v == "0") return false;
  throw InputError("option " + key + " expects on/off, got '" + v + "'");
}

int parse_int(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    int n = std::stoi(v, &used);
    if (used != v.size() || n < 0) throw std::invalid_argument(v);
    return n;
  } catch (const std::exception&) {
    throw InputError("option " + key + " expects a nonnegative integer, got '" + v + "'");
  }
}

void set_option(AnalysisOptions& o, const std::string& key, const std::string& value) {
  if (key == "tower_limit")
    o.engine.tower_limit = parse_int(key, value);
  else if (key == "iter_cap")
    o.engine.iteration_cap = parse_int(key, value);
  else if (key == "normalization_bound")
    o.normalization_bound = parse_int(key, value);
  else if (key == "oracle")
    o.oracle = parse_switch(key, value);
  else if (key == "keep_going")
    o.keep_going = parse_switch(key, value);
  else
    throw InputError("unknown option '" + key + "'");
}

BiPoly parse_coordinate(const std::string& name, const std::string& text) {
  BiPoly p = parse_polynomial(text);
  if (p.is_zero()) throw InputError(name + " is the zero polynomial");
  return p;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string uv(const BiPoly& p) { return p.to_string("U", "V"); }

std::string pair_string(const BiPoly& a, const BiPoly& b) { return "(" + a.to_string() + ", " + b.to_string() + ")"; }

std::string value_string(const TowerValue& v) {
  std::string s;
  if (v.coords.size() == 1) {
    s = v.coords[0];
  } else {
    s = "(";
    for (std::size_t i = 0; i < v.coords.size(); ++i) s += (i ? ", " : "") + v.coords[i];
    s += ")";
  }
  s += " [multiplicity " + std::to_string(v.multiplicity) + "]";
  if (!v.tower.empty()) {
    s += " over ";
    for (std::size_t i = 0; i < v.tower.size(); ++i) s += (i ? "; " : "") + v.tower[i];
  }
  return s;
}

nlohmann::json value_json(const TowerValue& v) {
  return {{"coords", v.coords}, {"multiplicity", v.multiplicity}, {"tower", v.tower}};
}

std::string kind_string(LeafKind k) { return k == LeafKind::Asymptotic ? "ASYMPTOTIC" : "DEAD"; }

std::vector<std::string> entry_tower(const EntryReport& e) {
  return describe_tower(common_node(e.entry.node(), e.phantom.s.node()));
}

}  // namespace

InputSpec parse_input(const std::string& text) {
  InputSpec spec;
  const std::string t = trim(text);
  if (!t.empty() && t.front() == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(t);
    } catch (const nlohmann::json::exception& e) {
      throw InputError(std::string("malformed JSON input: ") + e.what());
    }
    if (!j.contains("P") || !j.contains("Q") || !j["P"].is_string() || !j["Q"].is_string())
      throw InputError("JSON input needs string fields P and Q");
    spec.map = {parse_coordinate("P", j["P"]), parse_coordinate("Q", j["Q"])};
    if (j.contains("options")) {
      for (const auto& [key, value] : j["options"].items()) {
        std::string v = value.is_string() ? value.get<std::string>() : value.is_boolean() ? (value.get<bool>() ? "on" : "off") : value.dump();
        set_option(spec.options, key, v);
      }
    }
    return spec;
  }
  bool have_p = false, have_q = false;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.rfind("P:", 0) == 0) {
      spec.map.p = parse_coordinate("P", line.substr(2));
      have_p = true;
    } else if (line.rfind("Q:", 0) == 0) {
      spec.map.q = parse_coordinate("Q", line.substr(2));
      have_q = true;
    } else if (auto eq = line.find('='); eq != std::string::npos) {
      set_option(spec.options, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    } else {
      throw InputError("line " + std::to_string(lineno) + ": expected 'P:', 'Q:' or key=value");
    }
  }
  if (!have_p || !have_q) throw InputError("input needs both P: and Q: lines");
  return spec;
}

std::string format_text(const AnalysisReport& rep, Section sections, double seconds) {
  std::ostringstream out;
  const auto& o = rep.options;
  if (has(sections, Section::Input)) {
    out << "input\n";
    out << "  P = " << rep.input.p.to_string() << "\n";
    out << "  Q = " << rep.input.q.to_string() << "\n";
    out << "  det J = " << (rep.jacobian.is_zero() ? "0" : rep.jacobian.to_string()) << "\n";
    out << "  keller: " << yes_no(rep.keller) << "\n";
    out << "options\n";
    out << "  tower_limit = " << o.engine.tower_limit << "\n";
    out << "  iter_cap = " << o.engine.iteration_cap << "\n";
    out << "  oracle = " << (o.oracle ? "on" : "off") << "\n";
  }
  if (has(sections, Section::Basis)) {
    out << "normalization\n";
    out << "  N = " << rep.normalized.n << "\n";
    out << "  m = " << rep.normalized.m.to_string() << "\n";
    out << "  l = " << rep.normalized.l.to_string() << "\n";
    out << "  g = " << pair_string(rep.normalized.g.p, rep.normalized.g.q) << "\n";
    out << "engine\n";
    out << "  branch points: " << rep.engine.trace.size() << "\n";
    for (std::size_t i = 0; i < rep.engine.leaves.size(); ++i) {
      const Leaf& leaf = rep.engine.leaves[i];
      out << "  leaf " << i + 1 << ": " << kind_string(leaf.kind) << " depth " << leaf.state.chain.size();
      auto tower = describe_tower(leaf.state.node());
      for (std::size_t k = 0; k < tower.size(); ++k) out << (k ? "; " : " over ") << tower[k];
      out << "\n";
    }
  }
  const bool per_entry = has(sections, Section::Basis) || has(sections, Section::Phantom) ||
                         has(sections, Section::Verdicts) || has(sections, Section::Picard);
  if (per_entry) {
    out << "basis: " << rep.entries.size() << " entr" << (rep.entries.size() == 1 ? "y" : "ies") << "\n";
    for (std::size_t i = 0; i < rep.entries.size(); ++i) {
      const EntryReport& e = rep.entries[i];
      const ChartR& ch = e.entry.chart;
      out << "entry " << i + 1 << "\n";
      auto tower = entry_tower(e);
      for (const auto& t : tower) out << "  tower " << t << "\n";
      out << "  alpha = " << ch.alpha << "\n";
      out << "  beta = " << ch.beta << "\n";
      out << "  Phi = " << to_string(ch.phi, "X") << "\n";
      out << "  l = " << ch.l.to_string() << "\n";
      out << "  G = " << pair_string(e.entry.dual[0], e.entry.dual[1]) << "\n";
      out << "  G(0, Y) = (" << to_string(e.entry.param[0], "Y") << ", " << to_string(e.entry.param[1], "Y") << ")\n";
      out << "  H = " << uv(e.component.h) << "\n";
      if (has(sections, Section::Phantom) || has(sections, Section::Verdicts)) {
        out << "  gamma = " << e.phantom.gamma << "\n";
        out << "  S = " << e.phantom.s.to_string() << "\n";
        out << "  S(0, Y) = " << to_string(e.phantom.s.at_x0(), "Y") << "\n";
        out << "  roots of S(0, Y):" << (e.roots.roots.empty() ? " none" : "") << "\n";
        for (std::size_t k = 0; k < e.roots.roots.size(); ++k)
          out << "    Y = " << value_string(e.roots.roots[k]) << ", dS/dX = " << e.roots.dsdx_values[k]
              << ", dS/dY = 0: " << yes_no(e.roots.dsdy_zero[k]) << "\n";
        if (e.criterion.h6) out << "  h6 = " << e.criterion.h6->to_string() << "\n";
      }
      if (has(sections, Section::Verdicts)) {
        out << "  verdicts\n";
        for (const auto& v : e.verdicts) out << "    " << v.name << ": " << to_string(v.verdict) << " (" << v.witness << ")\n";
        out << "  singular points of H = 0:";
        if (!e.singular_points)
          out << " undecided\n";
        else if (e.singular_points->empty())
          out << " none\n";
        else
          out << "\n";
        if (e.singular_points)
          for (const auto& p : *e.singular_points) out << "    " << value_string(p) << "\n";
      }
      if (has(sections, Section::Picard)) {
        out << "  picard points:" << (e.picard_points.empty() ? " none" : "") << "\n";
        for (std::size_t k = 0; k < e.picard_points.size(); ++k)
          out << "    " << value_string(e.picard_points[k])
              << (e.picard_on_sing[k] ? ", on sing(H = 0)" : ", off sing(H = 0)") << "\n";
      }
      for (const auto& n : e.notes) out << "  note: " << n << "\n";
    }
  }
  if (has(sections, Section::Certificate)) out << "certificate: " << to_string(rep.certificate) << "\n";
  if (has(sections, Section::Picard)) {
    out << "picard\n";
    out << "  applicable: " << (rep.picard.applicable ? "yes" : "NOT-APPLICABLE (input not Keller)") << "\n";
    out << "  points:" << (rep.picard.points.empty() ? " none" : "") << "\n";
    for (const auto& p : rep.picard.points) out << "    " << value_string(p) << "\n";
    out << "  refined bound = " << rep.picard.refined_bound << "\n";
    out << "  cubic bound = " << rep.picard.cubic_bound << "\n";
  }
  if (has(sections, Section::Oracle)) {
    out << "oracle\n";
    if (!rep.oracle.computed) {
      out << "  not computed\n";
    } else {
      out << "  lc Res_Y = " << uv(rep.oracle.lc_res_y) << "\n";
      out << "  lc Res_X = " << uv(rep.oracle.lc_res_x) << "\n";
      out << "  factors:" << (rep.oracle.factors.empty() ? " none" : "") << "\n";
      for (const auto& f : rep.oracle.factors)
        out << "    " << uv(f.h) << ": " << (f.matched ? "matched" : "UNMATCHED") << "\n";
      for (std::size_t i = 0; i < rep.oracle.component_divides.size(); ++i)
        out << "  entry " << i + 1 << " divides oracle: " << yes_no(rep.oracle.component_divides[i]) << "\n";
      out << "  reconciled: " << yes_no(rep.oracle.reconciled) << "\n";
    }
  }
  out << "errors:" << (rep.errors.empty() ? " none" : "") << "\n";
  for (const auto& e : rep.errors) out << "  " << e << "\n";
  if (seconds >= 0) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "timing: %.3f s\n", seconds);
    out << buf;
  }
  return out.str();
}

nlohmann::json to_json(const AnalysisReport& rep, Section sections, double seconds) {
  using nlohmann::json;
  json j;
  if (has(sections, Section::Input)) {
    j["input"] = {{"P", rep.input.p.to_string()},
                  {"Q", rep.input.q.to_string()},
                  {"jacobian", rep.jacobian.to_string()},
                  {"keller", rep.keller}};
    j["options"] = {{"tower_limit", rep.options.engine.tower_limit},
                    {"iter_cap", rep.options.engine.iteration_cap},
                    {"oracle", rep.options.oracle},
                    {"keep_going", rep.options.keep_going}};
  }
  if (has(sections, Section::Basis)) {
    j["normalization"] = {{"N", rep.normalized.n},
                          {"m", rep.normalized.m.to_string()},
                          {"l", rep.normalized.l.to_string()},
                          {"g", {rep.normalized.g.p.to_string(), rep.normalized.g.q.to_string()}}};
    json leaves = json::array();
    for (const auto& leaf : rep.engine.leaves)
      leaves.push_back({{"kind", kind_string(leaf.kind)},
                        {"depth", leaf.state.chain.size()},
                        {"tower", describe_tower(leaf.state.node())}});
    j["engine"] = {{"branch_points", rep.engine.trace.size()}, {"leaves", leaves}};
  }
  json entries = json::array();
  for (const auto& e : rep.entries) {
    const ChartR& ch = e.entry.chart;
    json je = {{"tower", entry_tower(e)},
               {"alpha", ch.alpha},
               {"beta", ch.beta},
               {"phi", to_string(ch.phi, "X")},
               {"l", ch.l.to_string()},
               {"G", {e.entry.dual[0].to_string(), e.entry.dual[1].to_string()}},
               {"param", {to_string(e.entry.param[0], "Y"), to_string(e.entry.param[1], "Y")}},
               {"H", uv(e.component.h)}};
    if (has(sections, Section::Phantom) || has(sections, Section::Verdicts)) {
      je["gamma"] = e.phantom.gamma;
      je["S"] = e.phantom.s.to_string();
      json roots = json::array();
      for (std::size_t k = 0; k < e.roots.roots.size(); ++k) {
        json r = value_json(e.roots.roots[k]);
        r["epsilon"] = e.roots.epsilon[k];
        r["dSdX"] = e.roots.dsdx_values[k];
        r["dSdY_zero"] = static_cast<bool>(e.roots.dsdy_zero[k]);
        roots.push_back(r);
      }
      je["roots"] = roots;
      je["h6"] = e.criterion.h6 ? json(e.criterion.h6->to_string()) : json(nullptr);
    }
    if (has(sections, Section::Verdicts)) {
      json vs = json::array();
      for (const auto& v : e.verdicts) vs.push_back({{"name", v.name}, {"verdict", to_string(v.verdict)}, {"witness", v.witness}});
      je["verdicts"] = vs;
      if (e.singular_points) {
        json pts = json::array();
        for (const auto& p : *e.singular_points) pts.push_back(value_json(p));
        je["singular_points"] = pts;
      } else {
        je["singular_points"] = nullptr;
      }
    }
    if (has(sections, Section::Picard)) {
      json pts = json::array();
      for (std::size_t k = 0; k < e.picard_points.size(); ++k) {
        json p = value_json(e.picard_points[k]);
        p["on_singular_locus"] = static_cast<bool>(e.picard_on_sing[k]);
        pts.push_back(p);
      }
      je["picard_points"] = pts;
    }
    je["notes"] = e.notes;
    entries.push_back(je);
  }
  j["entries"] = entries;
  if (has(sections, Section::Certificate)) j["certificate"] = to_string(rep.certificate);
  if (has(sections, Section::Picard)) {
    json pts = json::array();
    for (const auto& p : rep.picard.points) pts.push_back(value_json(p));
    j["picard"] = {{"applicable", rep.picard.applicable},
                   {"points", pts},
                   {"refined_bound", rep.picard.refined_bound},
                   {"cubic_bound", rep.picard.cubic_bound}};
  }
  if (has(sections, Section::Oracle)) {
    if (!rep.oracle.computed) {
      j["oracle"] = nullptr;
    } else {
      json factors = json::array();
      for (const auto& f : rep.oracle.factors) factors.push_back({{"h", uv(f.h)}, {"matched", f.matched}});
      j["oracle"] = {{"lc_res_y", uv(rep.oracle.lc_res_y)},
                     {"lc_res_x", uv(rep.oracle.lc_res_x)},
                     {"factors", factors},
                     {"component_divides", rep.oracle.component_divides},
                     {"reconciled", rep.oracle.reconciled}};
    }
  }
  j["errors"] = rep.errors;
  if (seconds >= 0) j["timing_seconds"] = seconds;
  return j;
}

std::string canonical_section(const std::string& report) {
  std::istringstream in(report);
  std::string line, out;
  while (std::getline(in, line))
    if (line.rfind("timing:", 0) != 0 && line.find("\"timing_seconds\"") == std::string::npos) out += line + "\n";
  return out;
}

}  // namespace asymvar
