#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace mla {

std::uint64_t fnv1a64(const std::string& bytes);
std::string hex64(std::uint64_t v);

// File-backed, content-addressed store of computed result documents keyed by
// a canonical parameter string. Writes are atomic (temp file + rename);
// reads verify the stored content hash.
struct CatalogEntry {
  std::string params;
  std::string result;   // canonical document text
  std::string version;
  long long timestamp = 0;  // unix seconds
  std::uint64_t content_hash = 0;
};

std::string catalog_entry_path(const std::string& dir, const std::string& params);
void catalog_put(const std::string& dir, const CatalogEntry& entry);
std::optional<CatalogEntry> catalog_get(const std::string& dir, const std::string& params);

inline constexpr const char* kToolVersion = "mla-kit 1.0.0";

}  // namespace mla
