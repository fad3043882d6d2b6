#include "mla/catalog.hpp"

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "mla/diagnostics.hpp"

namespace mla {

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

std::string catalog_entry_path(const std::string& dir, const std::string& params) {
  return dir + "/" + hex64(fnv1a64(params)) + ".entry";
}

void catalog_put(const std::string& dir, const CatalogEntry& entry) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create catalog directory " + dir + ": " + ec.message());

  std::ostringstream os;
  os << "mla-kit v1\n";
  os << "kind catalog-entry\n";
  os << "params " << entry.params << '\n';
  os << "hash " << hex64(fnv1a64(entry.result)) << '\n';
  os << "version " << entry.version << '\n';
  os << "timestamp " << entry.timestamp << '\n';
  os << "result\n";
  os << entry.result;

  std::string final_path = catalog_entry_path(dir, entry.params);
  std::string tmp_path = final_path + ".tmp" + std::to_string(::getpid());
  {
    std::ofstream out(tmp_path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + tmp_path);
    out << os.str();
  }
  fs::rename(tmp_path, final_path, ec);
  if (ec) throw IoError("cannot rename " + tmp_path + " to " + final_path + ": " + ec.message());
}

std::optional<CatalogEntry> catalog_get(const std::string& dir, const std::string& params) {
  std::string path = catalog_entry_path(dir, params);
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::stringstream ss;
  ss << in.rdbuf();
  std::string text = ss.str();

  CatalogEntry entry;
  std::size_t pos = 0;
  auto next_line = [&]() -> std::string {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string::npos) throw IoError("truncated catalog entry " + path);
    std::string line = text.substr(pos, nl - pos);
    pos = nl + 1;
    return line;
  };
  if (next_line() != "mla-kit v1" || next_line() != "kind catalog-entry")
    throw IoError("malformed catalog entry " + path);
  std::string p = next_line();
  if (p.rfind("params ", 0) != 0) throw IoError("malformed catalog entry " + path);
  entry.params = p.substr(7);
  std::string h = next_line();
  if (h.rfind("hash ", 0) != 0) throw IoError("malformed catalog entry " + path);
  std::string stored_hash = h.substr(5);
  std::string v = next_line();
  if (v.rfind("version ", 0) != 0) throw IoError("malformed catalog entry " + path);
  entry.version = v.substr(8);
  std::string ts = next_line();
  if (ts.rfind("timestamp ", 0) != 0) throw IoError("malformed catalog entry " + path);
  entry.timestamp = std::stoll(ts.substr(10));
  if (next_line() != "result") throw IoError("malformed catalog entry " + path);
  entry.result = text.substr(pos);
  entry.content_hash = fnv1a64(entry.result);
  if (hex64(entry.content_hash) != stored_hash)
    throw IoError("catalog entry " + path + " failed its content hash");
  if (entry.params != params)
    throw IoError("catalog entry " + path + " holds different parameters (hash collision)");
  return entry;
}

}  // namespace mla
