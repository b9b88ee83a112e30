#include "hecke_lab/cache.hpp"

#include <fstream>
#include <random>

namespace hecke_lab {

namespace fs = std::filesystem;

std::optional<Json> DiskCache::load(const std::string& name, const std::string& format, int version) const {
  if (!enabled()) return std::nullopt;
  std::ifstream in(dir_ / name);
  if (!in) return std::nullopt;
  Json doc = Json::parse(in, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded() || !doc.is_object()) return std::nullopt;
  if (doc.value("format", "") != format || doc.value("version", -1) != version) return std::nullopt;
  return doc;
}

void DiskCache::store(const std::string& name, const Json& doc) const {
  if (!enabled()) return;
  std::error_code ec;
  fs::create_directories(dir_, ec);
  if (ec) return;
  std::random_device rd;
  const fs::path tmp = dir_ / (name + ".tmp" + std::to_string(rd()));
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << doc.dump() << '\n';
    if (!out) {
      fs::remove(tmp, ec);
      return;
    }
  }
  fs::rename(tmp, dir_ / name, ec);
  if (ec) fs::remove(tmp, ec);
}

namespace {

std::string file_key(const Permutation& w) {
  std::string s = w.to_string();
  std::replace(s.begin(), s.end(), ',', '-');
  return s;
}

}  // namespace

std::shared_ptr<const KLTable> cached_kl_row(const DiskCache& cache, const Permutation& w) {
  const std::string name = "kl-" + file_key(w) + ".json";
  if (auto doc = cache.load(name, KLTable::kFormat, KLTable::kFormatVersion)) {
    try {
      auto t = std::make_shared<const KLTable>(KLTable::from_json(*doc));
      if (t->top() == w && t->has_row(w)) {
        kl_table_register(t);
        return t;
      }
    } catch (const Error&) {
      // fall through and recompute
    } catch (const Json::exception&) {
    }
  }
  auto t = kl_table_cached(w);
  cache.store(name, t->row_to_json(w));
  return t;
}

std::shared_ptr<const CharacterTable> cached_character_table(const DiskCache& cache, int n) {
  const std::string name = "chars-" + std::to_string(n) + ".json";
  if (n <= 7) {
    if (auto doc = cache.load(name, CharacterTable::kFormat, CharacterTable::kFormatVersion)) {
      try {
        auto t = std::make_shared<const CharacterTable>(CharacterTable::from_json(*doc));
        if (t->rank() == n) {
          character_table_register(t);
          return t;
        }
      } catch (const Error&) {
      } catch (const Json::exception&) {
      }
    }
  }
  auto t = character_table(n);
  if (n <= 7) cache.store(name, t->to_json());
  return t;
}

std::shared_ptr<const CsfBatch> cached_csf_batch(const DiskCache& cache, int n, int threads) {
  const std::string name = "csf-" + std::to_string(n) + ".json";
  if (auto doc = cache.load(name, CsfBatch::kFormat, CsfBatch::kFormatVersion)) {
    try {
      auto b = std::make_shared<const CsfBatch>(CsfBatch::from_json(*doc));
      if (b->degree() == n) return b;
    } catch (const Error&) {
    } catch (const Json::exception&) {
    }
  }
  auto b = std::make_shared<const CsfBatch>(CsfBatch::compute(n, threads));
  cache.store(name, b->to_json());
  return b;
}

}  // namespace hecke_lab
