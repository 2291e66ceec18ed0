#pragma once

// On-disk snapshots of D_{r,t}(0..N). One text file per class:
//
//     dpc-dtable <version> <r> <t> <N>
//     D(0)
//     ...
//     D(N)
//
// A snapshot with a different version, a mismatched header, or too few rows
// is treated as absent.

#include <filesystem>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "dpc/series.hpp"

namespace dpc::cli {

inline constexpr int kCacheVersion = 1;

class DTableCache {
 public:
  explicit DTableCache(std::filesystem::path dir);

  /// D values for 0..N if a valid snapshot covering N exists.
  [[nodiscard]] std::optional<std::vector<mpz_class>> load(const CongruenceClass& cls, std::size_t N) const;
  /// Writes through a temporary file and renames it into place.
  void store(const CongruenceClass& cls, const std::vector<mpz_class>& table) const;

  [[nodiscard]] std::filesystem::path path_for(const CongruenceClass& cls) const;

 private:
  std::filesystem::path dir_;
};

}  // namespace dpc::cli
