#include "asmtree/cli/cache.hpp"

#include <cstdlib>
#include <fstream>

namespace asmtree::cli {

namespace {
constexpr const char* kHeader = "# asmtree-cache ";
}

CountCache::CountCache(std::filesystem::path dir, std::string version)
    : dir_(std::move(dir)), file_(dir_ / "counts.tsv"), version_(std::move(version)) {
  load();
}

void CountCache::load() {
  std::ifstream in(file_);
  if (!in) return;
  std::string line;
  if (!std::getline(in, line) || line != kHeader + version_) return;  // stale or foreign
  while (std::getline(in, line)) {
    const auto tab = line.find('\t');
    if (tab == std::string::npos) continue;
    entries_[line.substr(0, tab)] = line.substr(tab + 1);
  }
}

void CountCache::save() const {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  const auto tmp = file_.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) return;
    out << kHeader << version_ << '\n';
    for (const auto& [k, v] : entries_) out << k << '\t' << v << '\n';
  }
  std::filesystem::rename(tmp, file_, ec);
}

std::optional<std::string> CountCache::get(const std::string& key) const {
  std::lock_guard lock(mutex_);
  if (auto it = entries_.find(key); it != entries_.end()) return it->second;
  return std::nullopt;
}

void CountCache::put(const std::string& key, const std::string& value) {
  std::lock_guard lock(mutex_);
  entries_[key] = value;
  save();
}

void CountCache::clear() {
  std::lock_guard lock(mutex_);
  entries_.clear();
  std::error_code ec;
  std::filesystem::remove(file_, ec);
}

std::optional<std::filesystem::path> default_cache_dir() {
  if (const char* dir = std::getenv("ASMTREE_CACHE_DIR"); dir && *dir) return std::filesystem::path(dir);
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) {
    return std::filesystem::path(xdg) / "asmtree";
  }
  if (const char* home = std::getenv("HOME"); home && *home) {
    return std::filesystem::path(home) / ".cache" / "asmtree";
  }
  return std::nullopt;
}

}  // namespace asmtree::cli
