#pragma once

#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>

namespace asmtree::cli {

/// Count cache: one text file of "key<TAB>value" lines under a header
/// naming the tool version. A header for another version discards the
/// whole file. Safe for concurrent use within one process.
class CountCache {
public:
  CountCache(std::filesystem::path dir, std::string version);

  std::optional<std::string> get(const std::string& key) const;
  void put(const std::string& key, const std::string& value);
  void clear();
  const std::filesystem::path& file() const { return file_; }

private:
  void load();
  void save() const;

  std::filesystem::path dir_;
  std::filesystem::path file_;
  std::string version_;
  mutable std::mutex mutex_;
  std::map<std::string, std::string> entries_;
};

/// ASMTREE_CACHE_DIR, else $XDG_CACHE_HOME/asmtree, else $HOME/.cache/asmtree.
std::optional<std::filesystem::path> default_cache_dir();

}  // namespace asmtree::cli
