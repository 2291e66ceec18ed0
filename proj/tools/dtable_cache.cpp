#include "dtable_cache.hpp"

#include <fstream>
#include <string>

#include "dpc/error.hpp"

namespace dpc::cli {

DTableCache::DTableCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::filesystem::path DTableCache::path_for(const CongruenceClass& cls) const {
  return dir_ / ("dtable-r" + std::to_string(cls.r()) + "-t" + std::to_string(cls.t()) + ".txt");
}

std::optional<std::vector<mpz_class>> DTableCache::load(const CongruenceClass& cls, std::size_t N) const {
  std::ifstream in(path_for(cls));
  if (!in) return std::nullopt;
  std::string magic;
  int version = 0;
  long r = 0;
  long t = 0;
  std::size_t stored = 0;
  if (!(in >> magic >> version >> r >> t >> stored)) return std::nullopt;
  if (magic != "dpc-dtable" || version != kCacheVersion || r != cls.r() || t != cls.t() || stored < N) {
    return std::nullopt;
  }
  std::vector<mpz_class> table(N + 1);
  std::string row;
  for (std::size_t n = 0; n <= N; ++n) {
    if (!(in >> row) || table[n].set_str(row, 10) != 0) return std::nullopt;
  }
  return table;
}

void DTableCache::store(const CongruenceClass& cls, const std::vector<mpz_class>& table) const {
  if (table.empty()) throw InvalidArgument("cannot cache an empty table");
  std::filesystem::create_directories(dir_);
  const std::filesystem::path target = path_for(cls);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    out << "dpc-dtable " << kCacheVersion << ' ' << cls.r() << ' ' << cls.t() << ' ' << table.size() - 1 << '\n';
    for (const mpz_class& v : table) out << v.get_str() << '\n';
    if (!out) throw Error("failed to write cache file " + tmp.string());
  }
  std::filesystem::rename(tmp, target);
}

}  // namespace dpc::cli
