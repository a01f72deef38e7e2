#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace bpeel {

/// How a downloaded file is turned into an edge list.
enum class ArchiveFormat { Plain, Gzip, TarBz2 };

struct DatasetSpec {
  std::string name;
  std::string url;
  /// Expected sha256 of the download, lowercase hex. Empty means the first
  /// successful fetch records it and later downloads must match.
  std::string sha256;
  ArchiveFormat format = ArchiveFormat::Plain;
  /// Path of the edge file inside a tar archive.
  std::string member;
  std::string description;
};

std::vector<DatasetSpec> builtin_registry();

/// Reads a JSON array of objects with keys name, url, and optionally sha256,
/// format ("plain", "gzip", "tar.bz2"), member and description.
/// Throws FetchError on malformed input.
std::vector<DatasetSpec> load_registry(const std::filesystem::path& path);

/// Entries of `extra` replace built-in entries of the same name.
std::vector<DatasetSpec> merge_registries(std::vector<DatasetSpec> base,
                                          const std::vector<DatasetSpec>& extra);

struct FetchResult {
  std::filesystem::path edges;
  bool cache_hit = false;
  std::string source_sha256;
};

/// Returns <cache_dir>/<name>.edges, downloading and normalizing it first if
/// it is missing or fails its recorded checksum. Unknown names, network
/// failures and checksum mismatches throw FetchError; partial files are
/// removed.
FetchResult fetch_dataset(const std::string& name, const std::vector<DatasetSpec>& registry,
                          const std::filesystem::path& cache_dir);

/// Default cache: $BPEEL_CACHE, else $XDG_CACHE_HOME/bpeel, else
/// ~/.cache/bpeel.
std::filesystem::path default_cache_dir();

std::string sha256_file(const std::filesystem::path& path);

/// Keeps the first two columns of every data line. Lines starting with '%'
/// or '#' and blank lines are dropped. Returns the number of edges written.
std::size_t normalize_edge_list(std::istream& in, std::ostream& out);

}  // namespace bpeel
