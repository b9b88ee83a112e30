#pragma once

// On-disk cache of expensive tables. Every file is a JSON document carrying
// its own "format" and "version"; a file whose version does not match the
// running code is ignored (and eventually overwritten), never migrated.

#include <filesystem>
#include <memory>
#include <optional>
#include <string>

#include "hecke_lab/character.hpp"
#include "hecke_lab/csf.hpp"
#include "hecke_lab/kl.hpp"
#include "hecke_lab/serialize.hpp"

namespace hecke_lab {

class DiskCache {
 public:
  /// An empty path disables the cache.
  explicit DiskCache(std::filesystem::path dir = {}) : dir_(std::move(dir)) {}

  bool enabled() const { return !dir_.empty(); }
  const std::filesystem::path& directory() const { return dir_; }

  /// The document stored under `name`, if present, parseable and of the
  /// expected format and version.
  std::optional<Json> load(const std::string& name, const std::string& format, int version) const;
  /// Writes atomically (temporary file, then rename). Failures to write are
  /// silently ignored: the cache is an optimisation.
  void store(const std::string& name, const Json& doc) const;

 private:
  std::filesystem::path dir_;
};

/// The KL row of w, from the cache when possible. Only the row of w itself is
/// persisted.
std::shared_ptr<const KLTable> cached_kl_row(const DiskCache& cache, const Permutation& w);
/// Character tables are persisted for n <= 7.
std::shared_ptr<const CharacterTable> cached_character_table(const DiskCache& cache, int n);
std::shared_ptr<const CsfBatch> cached_csf_batch(const DiskCache& cache, int n, int threads = 1);

}  // namespace hecke_lab
