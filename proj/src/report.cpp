#include "hts/report.hpp"

#include <fstream>
#include <sstream>

namespace hts {
namespace {

json bidegree_json(Bidegree bd) { return json{{"sigma", bd.sigma}, {"d", bd.d}}; }

json report_body(const InvariantReport& r) {
  json body;
  body["bidegree"] = bidegree_json(r.bidegree);
  body["ambient_dim"] = r.ambient_dim;
  body["invariant_dim"] = r.invariant_dim;
  json basis_list = json::array();
  for (const auto& p : r.invariant_basis) basis_list.push_back(p.str());
  body["invariant_basis"] = std::move(basis_list);
  return body;
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

json invariants_json(const InvariantReport& report, double elapsed_ms) {
  json out;
  out["schema"] = 1;
  out["command"] = "invariants";
  out.update(report_body(report));
  out["elapsed_ms"] = elapsed_ms;
  return out;
}

json scan_json(const std::vector<InvariantReport>& reports, double elapsed_ms) {
  json out;
  out["schema"] = 1;
  out["command"] = "scan";
  json rows = json::array();
  for (const auto& r : reports) rows.push_back(report_body(r));
  out["results"] = std::move(rows);
  out["elapsed_ms"] = elapsed_ms;
  return out;
}

json compare_json(const CompareVerdict& verdict, double elapsed_ms) {
  json out;
  out["schema"] = 1;
  out["command"] = "limit-compare";
  out["bidegree"] = bidegree_json(verdict.bidegree);
  out["ring_dim"] = verdict.ring_dim;
  out["limit_dim"] = verdict.limit_dim;
  out["sites"] = verdict.site_ns;
  out["well_defined"] = verdict.well_defined;
  out["injective"] = verdict.injective;
  out["surjective"] = verdict.surjective;
  out["verdict"] = verdict.iso() ? "iso" : "mismatch";
  out["elapsed_ms"] = elapsed_ms;
  return out;
}

std::string scan_csv(const std::vector<InvariantReport>& reports) {
  std::ostringstream out;
  out << "sigma,d,ambient_dim,invariant_dim,invariant_basis\n";
  for (const auto& r : reports) {
    std::string joined;
    for (const auto& p : r.invariant_basis) {
      if (!joined.empty()) joined += ';';
      joined += p.str();
    }
    out << r.bidegree.sigma << ',' << r.bidegree.d << ',' << r.ambient_dim << ','
        << r.invariant_dim << ',' << csv_quote(joined) << '\n';
  }
  return out.str();
}

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

ReportCache::ReportCache(std::string path) : path_(std::move(path)), entries_(json::object()) {
  std::ifstream in(path_);
  if (!in) return;
  json file = json::parse(in, nullptr, /*allow_exceptions=*/false);
  if (!file.is_object() || file.value("schema", 0) != 1) return;
  auto it = file.find("entries");
  if (it == file.end() || !it->is_object()) return;
  entries_ = *it;
}

std::optional<json> ReportCache::lookup(const std::string& key) const {
  auto it = entries_.find(key);
  if (it == entries_.end() || !it->is_object()) return std::nullopt;
  auto cs = it->find("checksum");
  auto rep = it->find("report");
  if (cs == it->end() || rep == it->end() || !cs->is_string()) return std::nullopt;
  if (*cs != std::to_string(fnv1a64(rep->dump()))) return std::nullopt;
  return *rep;
}

void ReportCache::store(const std::string& key, const json& payload) {
  json entry;
  entry["checksum"] = std::to_string(fnv1a64(payload.dump()));
  entry["report"] = payload;
  entries_[key] = std::move(entry);
}

bool ReportCache::flush() const {
  json file;
  file["schema"] = 1;
  file["entries"] = entries_;
  std::ofstream out(path_);
  if (!out) return false;
  out << file.dump(2) << '\n';
  return bool(out);
}

std::string cache_key(const std::string& what, Bidegree bd, const Limits& lim) {
  std::ostringstream key;
  key << what << ':' << bd.sigma << ':' << bd.d << ":L" << lim.max_d << ':' << lim.max_ambient
      << ':' << lim.max_generators;
  return key.str();
}

}  // namespace hts
