#pragma once

// JSON, CSV and text renderings of results, plus the parsers needed to
// read emitted tables back.

#include <iomanip>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "braidcover/enumerate.hpp"
#include "braidcover/groups.hpp"
#include "braidcover/surface.hpp"
#include "json.hpp"

namespace braidcover {

using Json = nlohmann::ordered_json;

inline Json to_json(const GroupFingerprint& fp) {
  Json hist = Json::array();
  for (auto [order, count] : fp.order_histogram) hist.push_back({order, count});
  return Json{{"order", fp.order},
              {"transitive", fp.transitive},
              {"abelian", fp.abelian},
              {"order_histogram", hist},
              {"name", fp.name}};
}

inline GroupFingerprint fingerprint_from_json(const Json& j) {
  GroupFingerprint fp;
  fp.order = j.at("order").get<long long>();
  fp.transitive = j.at("transitive").get<bool>();
  fp.abelian = j.at("abelian").get<bool>();
  for (const auto& pair : j.at("order_histogram")) fp.order_histogram[pair.at(0).get<long long>()] = pair.at(1).get<long long>();
  fp.name = j.at("name").get<std::string>();
  return fp;
}

inline Json to_json(const SurfaceInvariants& s) {
  return Json{{"n", s.n},           {"chi", s.chi},        {"K2", s.K2},
              {"c2", s.c2},         {"pa_Z", s.pa_Z},      {"Gamma2", s.Gamma2},
              {"Z2", s.Z2},         {"GammaZ", s.GammaZ},  {"R2", s.R2},
              {"RZ", s.RZ},         {"RR0", s.RR0},        {"R0sq", s.R0sq},
              {"GammaR0", s.GammaR0}, {"general_type", s.general_type},
              {"z_reducible_forced", s.z_reducible_forced}};
}

// Elapsed time is deliberately absent so that repeated runs render identically.
inline Json to_json(const EnumerationResult& r) {
  Json j{{"n", r.n}, {"fixed_count", r.fixed_count}, {"transpositions", r.transpositions}, {"total_count", r.total_count}};
  j["orbit_count"] = r.orbit_count ? Json(*r.orbit_count) : Json(nullptr);
  Json sizes = Json::array();
  for (auto [size, count] : r.orbit_size_histogram) sizes.push_back({size, count});
  j["orbit_size_histogram"] = sizes;
  Json images = Json::array();
  for (const auto& [fp, count] : r.image_fingerprint_histogram) {
    Json e = to_json(fp);
    e["count"] = count;
    images.push_back(e);
  }
  j["image_fingerprints"] = images;
  return j;
}

inline Json to_json(const SolutionTuple& t, const std::optional<GroupFingerprint>& image = std::nullopt) {
  Json j{{"n", t.degree()},
         {"sigma", t[Generator::Sigma].to_string()},
         {"a1", t[Generator::A1].to_string()},
         {"a2", t[Generator::A2].to_string()},
         {"b1", t[Generator::B1].to_string()},
         {"b2", t[Generator::B2].to_string()}};
  if (image) j["image"] = to_json(*image);
  return j;
}

inline SolutionTuple solution_from_json(const Json& j) {
  const int n = j.at("n").get<int>();
  auto p = [&](const char* key) { return Permutation::parse(j.at(key).get<std::string>(), n); };
  return SolutionTuple(p("sigma"), p("a1"), p("a2"), p("b1"), p("b2"));
}

// One row of the summary table.
struct TableRow {
  int n = 0;
  long long fixed_count = 0;
  long long transpositions = 0;
  long long total = 0;
  std::optional<long long> orbit_count;
  long long K2 = 0;
  long long chi = 0;
  long long c2 = 0;
  std::string image_names;  // "name=count" pairs joined by ';', empty when not computed

  friend bool operator==(const TableRow&, const TableRow&) = default;
};

inline std::string image_names(const EnumerationResult& r) {
  std::map<std::string, long long> by_name;
  for (const auto& [fp, count] : r.image_fingerprint_histogram) {
    by_name[fp.name == "other" ? "other(order " + std::to_string(fp.order) + ")" : fp.name] += count;
  }
  std::string out;
  for (const auto& [name, count] : by_name) {
    if (!out.empty()) out += ';';
    out += name + "=" + std::to_string(count);
  }
  return out;
}

inline TableRow make_row(const EnumerationResult& r) {
  const auto inv = invariants_for(r.n);
  return TableRow{r.n, r.fixed_count, r.transpositions, r.total_count, r.orbit_count,
                  inv.K2, inv.chi, inv.c2, image_names(r)};
}

inline const char* kTableCsvHeader = "n,fixed_count,transpositions,total,orbit_count,K2,chi,c2,image_names";

inline std::string render_csv(const std::vector<TableRow>& rows) {
  std::ostringstream os;
  os << kTableCsvHeader << '\n';
  for (const auto& r : rows) {
    os << r.n << ',' << r.fixed_count << ',' << r.transpositions << ',' << r.total << ',';
    if (r.orbit_count) os << *r.orbit_count;
    os << ',' << r.K2 << ',' << r.chi << ',' << r.c2 << ',' << r.image_names << '\n';
  }
  return os.str();
}

inline std::vector<TableRow> parse_csv(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line) || line != kTableCsvHeader) throw std::invalid_argument("unexpected CSV header");
  std::vector<TableRow> rows;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) f.push_back(cell);
    if (!line.empty() && line.back() == ',') f.emplace_back();
    if (f.size() != 9) throw std::invalid_argument("expected 9 CSV fields: " + line);
    TableRow r;
    r.n = std::stoi(f[0]);
    r.fixed_count = std::stoll(f[1]);
    r.transpositions = std::stoll(f[2]);
    r.total = std::stoll(f[3]);
    if (!f[4].empty()) r.orbit_count = std::stoll(f[4]);
    r.K2 = std::stoll(f[5]);
    r.chi = std::stoll(f[6]);
    r.c2 = std::stoll(f[7]);
    r.image_names = f[8];
    rows.push_back(std::move(r));
  }
  return rows;
}

inline Json to_json(const TableRow& r) {
  return Json{{"n", r.n},
              {"fixed_count", r.fixed_count},
              {"transpositions", r.transpositions},
              {"total", r.total},
              {"orbit_count", r.orbit_count ? Json(*r.orbit_count) : Json(nullptr)},
              {"K2", r.K2},
              {"chi", r.chi},
              {"c2", r.c2},
              {"image_names", r.image_names}};
}

inline std::string render_json(const std::vector<TableRow>& rows) {
  Json arr = Json::array();
  for (const auto& r : rows) arr.push_back(to_json(r));
  return arr.dump(2) + "\n";
}

inline std::vector<TableRow> parse_json(const std::string& text) {
  std::vector<TableRow> rows;
  for (const auto& j : Json::parse(text)) {
    TableRow r;
    r.n = j.at("n").get<int>();
    r.fixed_count = j.at("fixed_count").get<long long>();
    r.transpositions = j.at("transpositions").get<long long>();
    r.total = j.at("total").get<long long>();
    if (!j.at("orbit_count").is_null()) r.orbit_count = j.at("orbit_count").get<long long>();
    r.K2 = j.at("K2").get<long long>();
    r.chi = j.at("chi").get<long long>();
    r.c2 = j.at("c2").get<long long>();
    r.image_names = j.at("image_names").get<std::string>();
    rows.push_back(std::move(r));
  }
  return rows;
}

inline std::string render_text(const std::vector<TableRow>& rows) {
  std::ostringstream os;
  os << std::left << std::setw(4) << "n" << std::right << std::setw(12) << "fixed" << std::setw(8) << "transp"
     << std::setw(12) << "total" << std::setw(9) << "orbits" << std::setw(5) << "K2" << std::setw(5) << "chi"
     << std::setw(5) << "c2" << "  images\n";
  for (const auto& r : rows) {
    os << std::left << std::setw(4) << r.n << std::right << std::setw(12) << r.fixed_count << std::setw(8)
       << r.transpositions << std::setw(12) << r.total << std::setw(9)
       << (r.orbit_count ? std::to_string(*r.orbit_count) : std::string("-")) << std::setw(5) << r.K2 << std::setw(5)
       << r.chi << std::setw(5) << r.c2 << "  " << (r.image_names.empty() ? "-" : r.image_names) << '\n';
  }
  return os.str();
}

}  // namespace braidcover
