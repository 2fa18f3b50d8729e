#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hts/base.hpp"
#include "hts/invariants.hpp"
#include "hts/limit.hpp"

namespace hts {

using json = nlohmann::ordered_json;

// Field order is fixed: schema, command, then payload, then elapsed_ms.
// elapsed_ms is passed in by the caller so cached and fresh runs serialize
// identically apart from it.
json invariants_json(const InvariantReport& report, double elapsed_ms);
json scan_json(const std::vector<InvariantReport>& reports, double elapsed_ms);
json compare_json(const CompareVerdict& verdict, double elapsed_ms);

std::string scan_csv(const std::vector<InvariantReport>& reports);

// Single-file JSON cache keyed by command + bidegree + limits. Entries store
// an FNV-1a checksum of the payload; anything malformed or stale reads as a
// miss rather than an error.
class ReportCache {
 public:
  explicit ReportCache(std::string path);

  std::optional<json> lookup(const std::string& key) const;
  void store(const std::string& key, const json& payload);
  bool flush() const;  // false when the file cannot be written

  std::size_t size() const { return entries_.size(); }

 private:
  std::string path_;
  json entries_;
};

std::string cache_key(const std::string& what, Bidegree bd, const Limits& lim);
std::uint64_t fnv1a64(std::string_view data);

}  // namespace hts
