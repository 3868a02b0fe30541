#include "checkpoint.hpp"

#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace wpc::detail {

using nlohmann::json;

CheckpointStore::CheckpointStore(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::filesystem::create_directories(dir_);
}

std::filesystem::path CheckpointStore::file_for(int n, int size, std::size_t shard,
                                                std::size_t shard_count) const {
  return dir_ / ("f-n" + std::to_string(n) + "-m" + std::to_string(size) + "-s" + std::to_string(shard) +
                 "-of" + std::to_string(shard_count) + ".json");
}

std::optional<ShardRecord> CheckpointStore::load(int n, int size, std::size_t shard,
                                                 std::size_t shard_count) const {
  const auto path = file_for(n, size, shard, shard_count);
  std::ifstream in(path);
  if (!in) return std::nullopt;
  json j;
  try {
    in >> j;
  } catch (const json::parse_error&) {
    return std::nullopt;  // torn write from an interrupted run; redo the shard
  }
  if (j.value("n", -1) != n || j.value("size", -1) != size) {
    throw std::runtime_error("checkpoint " + path.string() + " does not match the requested search");
  }
  ShardRecord rec;
  rec.scanned = j.at("scanned").get<std::uint64_t>();
  rec.witnesses = j.at("witnesses").get<std::vector<std::string>>();
  return rec;
}

void CheckpointStore::save(int n, int size, std::size_t shard, std::size_t shard_count,
                           const ShardRecord& rec) const {
  const auto path = file_for(n, size, shard, shard_count);
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    out << json{{"n", n}, {"size", size}, {"shard", shard}, {"shard_count", shard_count},
                {"scanned", rec.scanned}, {"witnesses", rec.witnesses}}
               .dump()
        << '\n';
    if (!out) throw std::runtime_error("cannot write checkpoint " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace wpc::detail
