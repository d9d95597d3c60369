#include "localelab/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace localelab {

using nlohmann::json;

namespace {

json parse_or_fail(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(Errc::bad_input, origin + ": " + e.what());  // carries byte/line position
  }
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::bad_input, path + ": cannot open");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

FramePtr parse_frame_text(const std::string& text, const std::string& origin) {
  json j = parse_or_fail(text, origin);
  if (!j.is_object() || !j.contains("elements") || !j.contains("leq"))
    fail(Errc::bad_input, origin + ": expected fields 'elements' and 'leq'");
  if (!j["elements"].is_array()) fail(Errc::bad_input, origin + ": 'elements' must be an array");
  std::vector<std::string> names;
  for (const auto& e : j["elements"]) {
    if (!e.is_string()) fail(Errc::bad_input, origin + ": element names must be strings");
    names.push_back(e.get<std::string>());
  }
  const int n = static_cast<int>(names.size());
  if (n == 0) fail(Errc::bad_input, origin + ": need at least one element");
  std::vector<std::uint8_t> leq(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) leq[static_cast<std::size_t>(i) * n + i] = 1;
  if (!j["leq"].is_array()) fail(Errc::bad_input, origin + ": 'leq' must be an array of pairs");
  int row = 0;
  for (const auto& p : j["leq"]) {
    ++row;
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_integer())
      fail(Errc::bad_input, origin + ": leq entry " + std::to_string(row) + " is not a pair [i,j]");
    int a = p[0].get<int>(), b = p[1].get<int>();
    if (a < 0 || b < 0 || a >= n || b >= n)
      fail(Errc::bad_input,
           origin + ": leq entry " + std::to_string(row) + " is out of range [" +
               std::to_string(a) + "," + std::to_string(b) + "]");
    leq[static_cast<std::size_t>(a) * n + b] = 1;
  }
  // Reflexive-transitive closure; antisymmetry failures surface in validation.
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (leq[static_cast<std::size_t>(i) * n + k])
        for (int jj = 0; jj < n; ++jj)
          if (leq[static_cast<std::size_t>(k) * n + jj]) leq[static_cast<std::size_t>(i) * n + jj] = 1;
  std::string label = j.value("label", origin);
  return build_frame(n, leq, std::move(names), label);
}

FramePtr parse_frame_file(const std::string& path) { return parse_frame_text(slurp(path), path); }

FiniteSpace parse_space_text(const std::string& text, const std::string& origin) {
  json j = parse_or_fail(text, origin);
  if (!j.is_object() || !j.contains("points") || !j.contains("opens"))
    fail(Errc::bad_input, origin + ": expected fields 'points' and 'opens'");
  if (!j["points"].is_number_integer()) fail(Errc::bad_input, origin + ": 'points' must be an integer");
  const int n = j["points"].get<int>();
  if (n < 0 || n > 16) fail(Errc::bad_input, origin + ": 'points' out of range 0..16");
  if (!j["opens"].is_array()) fail(Errc::bad_input, origin + ": 'opens' must be an array");
  std::vector<Mask> opens;
  int row = 0;
  for (const auto& o : j["opens"]) {
    ++row;
    if (!o.is_array())
      fail(Errc::bad_input, origin + ": opens entry " + std::to_string(row) + " is not an array");
    Mask m = 0;
    for (const auto& p : o) {
      if (!p.is_number_integer() || p.get<int>() < 0 || p.get<int>() >= n)
        fail(Errc::bad_input, origin + ": opens entry " + std::to_string(row) +
                                  " has an out-of-range point");
      m |= elem_bit(p.get<int>());
    }
    opens.push_back(m);
  }
  return FiniteSpace(n, std::move(opens), j.value("label", origin));
}

FiniteSpace parse_space_file(const std::string& path) { return parse_space_text(slurp(path), path); }

std::string frame_to_json(const FiniteFrame& f) {
  json j;
  j["label"] = f.label();
  j["elements"] = json::array();
  for (Elem a = 0; a < f.size(); ++a) j["elements"].push_back(f.name(a));
  j["leq"] = json::array();
  for (Elem a = 0; a < f.size(); ++a)
    for (Elem b = 0; b < f.size(); ++b)
      if (a != b && f.leq(a, b)) j["leq"].push_back(json::array({a, b}));
  return j.dump();
}

std::vector<Elem> sorted_members(const Sublocale& s) {
  std::vector<Elem> out;
  for (Elem a : bits(s.members())) out.push_back(a);
  return out;  // bits() yields in increasing order
}

namespace {

json report_json(const CheckReport& r) {
  json j;
  j["id"] = r.id;
  j["anchor"] = r.anchor;
  j["instances"] = r.instances;
  j["hypothesisSatisfied"] = r.hypothesis_satisfied;
  j["failures"] = json::array();
  for (const Counterexample& ce : r.failures)
    j["failures"].push_back({{"instance", ce.instance}, {"witness", ce.witness}});
  j["elapsedMs"] = r.elapsed_ms;
  return j;
}

CheckReport report_of_json(const json& j, const std::string& origin) {
  if (!j.is_object()) fail(Errc::bad_input, origin + ": report must be an object");
  CheckReport r;
  r.id = j.at("id").get<std::string>();
  r.anchor = j.at("anchor").get<std::string>();
  r.instances = j.at("instances").get<std::int64_t>();
  r.hypothesis_satisfied = j.at("hypothesisSatisfied").get<std::int64_t>();
  r.elapsed_ms = j.at("elapsedMs").get<std::int64_t>();
  for (const auto& ce : j.at("failures"))
    r.failures.push_back({ce.at("instance").get<std::string>(), ce.at("witness").get<std::string>()});
  return r;
}

}  // namespace

std::string report_to_json(const CheckReport& r) { return report_json(r).dump(2); }

std::string reports_to_json(const std::vector<CheckReport>& rs) {
  json j = json::array();
  for (const CheckReport& r : rs) j.push_back(report_json(r));
  return j.dump(2);
}

CheckReport report_from_json(const std::string& text) {
  return report_of_json(parse_or_fail(text, "<report>"), "<report>");
}

std::vector<CheckReport> reports_from_json(const std::string& text) {
  json j = parse_or_fail(text, "<report>");
  std::vector<CheckReport> out;
  if (j.is_object()) {
    out.push_back(report_of_json(j, "<report>"));
    return out;
  }
  if (!j.is_array()) fail(Errc::bad_input, "<report>: expected an object or an array");
  for (const auto& e : j) out.push_back(report_of_json(e, "<report>"));
  return out;
}

std::string report_to_text(const CheckReport& r) {
  std::ostringstream ss;
  ss << (r.passed() ? "PASS" : "FAIL") << "  " << r.id << "  instances=" << r.instances
     << " hypothesis=" << r.hypothesis_satisfied << " failures=" << r.failures.size() << " ("
     << r.elapsed_ms << " ms)";
  for (const Counterexample& ce : r.failures)
    ss << "\n      at " << ce.instance << "\n         " << ce.witness;
  return ss.str();
}

std::string classification_to_json(const Classification& c, const Universe& u,
                                   const Sublocale& subject) {
  json j;
  j["frame"] = u.frame()->label();
  j["sublocale"] = sorted_members(subject);
  json flags = json::object();
  for (const auto& [k, v] : c.flags) flags[k] = v;
  j["flags"] = flags;
  json wit = json::object();
  for (const auto& [k, v] : c.witnesses) wit[k] = v;
  j["witnesses"] = wit;
  return j.dump(2);
}

std::string classification_to_text(const Classification& c, const Universe& u,
                                   const Sublocale& subject) {
  std::ostringstream ss;
  ss << "frame " << u.frame()->label() << ", sublocale " << u.sub_name(subject.members()) << "\n";
  for (const auto& [k, v] : c.flags) ss << "  " << k << ": " << (v ? "true" : "false") << "\n";
  for (const auto& [k, v] : c.witnesses) ss << "  " << k << " = " << v << "\n";
  return ss.str();
}

}  // namespace localelab
