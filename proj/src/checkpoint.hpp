#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace wpc::detail {

struct ShardRecord {
  std::uint64_t scanned = 0;
  std::vector<std::string> witnesses;
};

/// One JSON file per finished (size stratum, shard) of an f(n) search.
class CheckpointStore {
 public:
  explicit CheckpointStore(std::filesystem::path dir);

  std::optional<ShardRecord> load(int n, int size, std::size_t shard, std::size_t shard_count) const;
  void save(int n, int size, std::size_t shard, std::size_t shard_count, const ShardRecord& rec) const;

 private:
  std::filesystem::path file_for(int n, int size, std::size_t shard, std::size_t shard_count) const;
  std::filesystem::path dir_;
};

}  // namespace wpc::detail
