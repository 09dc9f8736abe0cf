#include "satake/oracle_cache.hpp"

#include "satake/lattice_oracle.hpp"

#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>
#include <tuple>

namespace satake {

namespace {

std::string join(const Coweight& x) {
  std::ostringstream os;
  for (std::size_t i = 0; i < x.size(); ++i) os << (i ? "_" : "") << x[i];
  return os.str();
}

std::optional<std::map<Coweight, Int>> read_file(const std::filesystem::path& path, const std::string& group,
                                                 int q, const Coweight& mu, const Coweight& lambda) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  try {
    const auto j = nlohmann::json::parse(in);
    if (j.at("cache_version").get<int>() != kOracleCacheVersion || j.at("group").get<std::string>() != group ||
        j.at("q").get<int>() != q || j.at("mu").get<Coweight>() != mu || j.at("lambda").get<Coweight>() != lambda)
      return std::nullopt;
    std::map<Coweight, Int> out;
    for (const auto& e : j.at("counts")) out[e.at("nu").get<Coweight>()] = e.at("count").get<Int>();
    return out;
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;
  }
}

void write_file(const std::filesystem::path& path, const std::string& group, int q, const Coweight& mu,
                const Coweight& lambda, const std::map<Coweight, Int>& counts) {
  nlohmann::json j;
  j["cache_version"] = kOracleCacheVersion;
  j["group"] = group;
  j["q"] = q;
  j["mu"] = mu;
  j["lambda"] = lambda;
  j["counts"] = nlohmann::json::array();
  for (const auto& [nu, c] : counts) j["counts"].push_back({{"nu", nu}, {"count", c}});
  std::error_code ec;
  std::filesystem::create_directories(path.parent_path(), ec);
  // write then rename, so concurrent readers never see a partial file
  auto tmp = path;
  tmp += ".tmp" + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id()));
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << j.dump(1) << "\n";
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) std::filesystem::remove(tmp, ec);
}

}  // namespace

std::optional<std::filesystem::path> oracle_cache_dir() {
  const char* env = std::getenv("SATAKE_CACHE_DIR");
  if (env == nullptr || *env == '\0') return std::nullopt;
  return std::filesystem::path(env);
}

std::map<Coweight, Int> cached_convolution_counts(const RootDatum& g, int q, const Coweight& mu,
                                                  const Coweight& lambda) {
  using Key = std::tuple<std::string, int, Coweight, Coweight>;
  static std::mutex mutex;
  static std::map<Key, std::map<Coweight, Int>> memory;
  const Key key{g.name(), q, mu, lambda};
  {
    std::lock_guard lock(mutex);
    if (auto it = memory.find(key); it != memory.end()) return it->second;
  }
  const auto dir = oracle_cache_dir();
  std::optional<std::filesystem::path> path;
  if (dir)
    path = *dir / ("conv-" + g.name() + "-q" + std::to_string(q) + "-mu" + join(mu) + "-lambda" + join(lambda) + ".json");
  std::optional<std::map<Coweight, Int>> counts;
  if (path) counts = read_file(*path, g.name(), q, mu, lambda);
  if (!counts) {
    counts = LatticeOracle(g, q).convolution_counts(mu, lambda);
    if (path) write_file(*path, g.name(), q, mu, lambda, *counts);
  }
  std::lock_guard lock(mutex);
  memory.emplace(key, *counts);
  return *counts;
}

}  // namespace satake
