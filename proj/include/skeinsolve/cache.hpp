#pragma once

// On-disk cache of serialized Ψ vectors, one file per (geometry, N, schema).
//
// Directory: $SKEINSOLVE_CACHE_DIR, else $XDG_CACHE_HOME/skeinsolve, else
// $HOME/.cache/skeinsolve.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <system_error>

#include "serialize.hpp"
#include "solver.hpp"

namespace skein {

inline std::filesystem::path default_cache_directory() {
  namespace fs = std::filesystem;
  if (const char* d = std::getenv("SKEINSOLVE_CACHE_DIR"); d && *d) return fs::path(d);
  if (const char* x = std::getenv("XDG_CACHE_HOME"); x && *x) return fs::path(x) / "skeinsolve";
  if (const char* h = std::getenv("HOME"); h && *h) return fs::path(h) / ".cache" / "skeinsolve";
  return fs::temp_directory_path() / "skeinsolve";
}

class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path dir = default_cache_directory())
      : dir_(std::move(dir)) {}

  const std::filesystem::path& directory() const { return dir_; }

  std::filesystem::path path_for(GeometryTag tag, int N) const {
    return dir_ / ("psi-" + to_string(tag) + "-N" + std::to_string(N) + "-v" +
                   std::to_string(kSchemaVersion) + ".jsonl");
  }

  /// The cached document bytes, if present and readable.
  std::optional<std::string> load(GeometryTag tag, int N) const {
    std::ifstream in(path_for(tag, N), std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }

  /// Writes through a temporary file and renames it into place, so readers
  /// never see a partial document. Failures are reported, not thrown.
  bool store(GeometryTag tag, int N, const std::string& bytes) const {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(dir_, ec);
    if (ec) return false;
    const fs::path target = path_for(tag, N);
    fs::path tmp = target;
    tmp += ".tmp";
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      if (!out) return false;
      out << bytes;
      if (!out.flush()) return false;
    }
    fs::rename(tmp, target, ec);
    if (ec) {
      fs::remove(tmp, ec);
      return false;
    }
    return true;
  }

 private:
  std::filesystem::path dir_;
};

}  // namespace skein
