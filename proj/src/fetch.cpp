#include "bpeel/fetch.hpp"

#include <curl/curl.h>
#include <fcntl.h>
#include <openssl/evp.h>
#include <spawn.h>
#include <sys/wait.h>
#include <zlib.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <memory>
#include "json.hpp"
#include <ostream>
#include <sstream>

#include "bpeel/errors.hpp"

extern char** environ;

namespace bpeel {

namespace fs = std::filesystem;
using nlohmann::json;

std::vector<DatasetSpec> builtin_registry() {
  return {
      {"condmat", "http://konect.cc/files/download.tsv.opsahl-collaboration.tar.bz2", "",
       ArchiveFormat::TarBz2, "opsahl-collaboration/out.opsahl-collaboration",
       "arXiv cond-mat author-paper network (KONECT opsahl-collaboration)"},
  };
}

namespace {

ArchiveFormat parse_format(const std::string& s) {
  if (s == "plain") return ArchiveFormat::Plain;
  if (s == "gzip") return ArchiveFormat::Gzip;
  if (s == "tar.bz2") return ArchiveFormat::TarBz2;
  throw FetchError("unknown archive format '" + s + "'");
}

}  // namespace

std::vector<DatasetSpec> load_registry(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw FetchError("cannot open registry " + path.string());
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw FetchError("malformed registry " + path.string() + ": " + e.what());
  }
  if (!doc.is_array()) throw FetchError("registry must be a JSON array");
  std::vector<DatasetSpec> out;
  for (const auto& item : doc) {
    try {
      DatasetSpec spec;
      spec.name = item.at("name").get<std::string>();
      spec.url = item.at("url").get<std::string>();
      spec.sha256 = item.value("sha256", "");
      spec.format = parse_format(item.value("format", "plain"));
      spec.member = item.value("member", "");
      spec.description = item.value("description", "");
      if (spec.format == ArchiveFormat::TarBz2 && spec.member.empty()) {
        throw FetchError("dataset '" + spec.name + "' needs a member path");
      }
      out.push_back(std::move(spec));
    } catch (const json::exception& e) {
      throw FetchError("bad registry entry: " + std::string(e.what()));
    }
  }
  return out;
}

std::vector<DatasetSpec> merge_registries(std::vector<DatasetSpec> base,
                                          const std::vector<DatasetSpec>& extra) {
  for (const auto& spec : extra) {
    auto it = std::find_if(base.begin(), base.end(),
                           [&](const DatasetSpec& b) { return b.name == spec.name; });
    if (it != base.end()) {
      *it = spec;
    } else {
      base.push_back(spec);
    }
  }
  return base;
}

fs::path default_cache_dir() {
  if (const char* dir = std::getenv("BPEEL_CACHE"); dir && *dir) return dir;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return fs::path(xdg) / "bpeel";
  if (const char* home = std::getenv("HOME"); home && *home) {
    return fs::path(home) / ".cache" / "bpeel";
  }
  return fs::path(".bpeel-cache");
}

std::string sha256_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FetchError("cannot read " + path.string());
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1) {
    throw FetchError("sha256 unavailable");
  }
  std::array<char, 1 << 16> buf;
  while (in) {
    in.read(buf.data(), buf.size());
    if (in.gcount() > 0) EVP_DigestUpdate(ctx.get(), buf.data(), static_cast<std::size_t>(in.gcount()));
  }
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_DigestFinal_ex(ctx.get(), digest, &len);
  std::string hex;
  char part[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(part, sizeof part, "%02x", digest[i]);
    hex += part;
  }
  return hex;
}

std::size_t normalize_edge_list(std::istream& in, std::ostream& out) {
  std::size_t edges = 0;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::string a, b;
    if (!(fields >> a) || a[0] == '%' || a[0] == '#') continue;
    if (!(fields >> b)) continue;
    out << a << ' ' << b << '\n';
    ++edges;
  }
  return edges;
}

namespace {

/// Removes the file on scope exit unless released.
class TempFile {
 public:
  explicit TempFile(fs::path p) : path_(std::move(p)) {}
  ~TempFile() {
    std::error_code ec;
    if (!path_.empty()) fs::remove_all(path_, ec);
  }
  TempFile(const TempFile&) = delete;
  TempFile& operator=(const TempFile&) = delete;
  const fs::path& path() const { return path_; }
  void release() { path_.clear(); }

 private:
  fs::path path_;
};

std::size_t write_to_file(char* data, std::size_t size, std::size_t n, void* user) {
  auto* out = static_cast<std::ofstream*>(user);
  out->write(data, static_cast<std::streamsize>(size * n));
  return *out ? size * n : 0;
}

void download(const std::string& url, const fs::path& dest) {
  std::ofstream out(dest, std::ios::binary | std::ios::trunc);
  if (!out) throw FetchError("cannot write " + dest.string());
  std::unique_ptr<CURL, decltype(&curl_easy_cleanup)> curl(curl_easy_init(), curl_easy_cleanup);
  if (!curl) throw FetchError("curl initialization failed");
  char error[CURL_ERROR_SIZE] = {0};
  curl_easy_setopt(curl.get(), CURLOPT_URL, url.c_str());
  curl_easy_setopt(curl.get(), CURLOPT_FOLLOWLOCATION, 1L);
  curl_easy_setopt(curl.get(), CURLOPT_FAILONERROR, 1L);
  curl_easy_setopt(curl.get(), CURLOPT_WRITEFUNCTION, write_to_file);
  curl_easy_setopt(curl.get(), CURLOPT_WRITEDATA, &out);
  curl_easy_setopt(curl.get(), CURLOPT_ERRORBUFFER, error);
  curl_easy_setopt(curl.get(), CURLOPT_CONNECTTIMEOUT, 30L);
  const CURLcode rc = curl_easy_perform(curl.get());
  out.close();
  if (rc != CURLE_OK) {
    throw FetchError("download of " + url + " failed: " +
                     (error[0] ? std::string(error) : curl_easy_strerror(rc)));
  }
  if (!out) throw FetchError("write failed for " + dest.string());
}

void gunzip(const fs::path& src, const fs::path& dest) {
  gzFile in = gzopen(src.c_str(), "rb");
  if (!in) throw FetchError("cannot open " + src.string());
  std::ofstream out(dest, std::ios::binary | std::ios::trunc);
  std::array<char, 1 << 16> buf;
  int n = 0;
  while ((n = gzread(in, buf.data(), static_cast<unsigned>(buf.size()))) > 0) {
    out.write(buf.data(), n);
  }
  int errnum = 0;
  const std::string msg = n < 0 ? gzerror(in, &errnum) : "";
  gzclose(in);
  if (n < 0) throw FetchError("corrupt gzip data in " + src.string() + ": " + msg);
  if (!out) throw FetchError("write failed for " + dest.string());
}

void untar_member(const fs::path& archive, const fs::path& dir, const std::string& member) {
  std::vector<std::string> args{"tar", "-xjf", archive.string(), "-C", dir.string(), member};
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  argv.push_back(nullptr);
  posix_spawn_file_actions_t actions;
  posix_spawn_file_actions_init(&actions);
  posix_spawn_file_actions_addopen(&actions, 2, "/dev/null", O_WRONLY, 0);
  pid_t pid = 0;
  const int rc = posix_spawnp(&pid, "tar", &actions, nullptr, argv.data(), environ);
  posix_spawn_file_actions_destroy(&actions);
  if (rc != 0) throw FetchError("cannot run tar");
  int status = 0;
  if (waitpid(pid, &status, 0) < 0 || !WIFEXITED(status) || WEXITSTATUS(status) != 0) {
    throw FetchError("tar could not extract " + member + " from " + archive.string());
  }
}

template <class Fill>
void write_atomically(const fs::path& path, Fill&& fill) {
  TempFile tmp(path.string() + ".part");
  {
    std::ofstream out(tmp.path(), std::ios::binary | std::ios::trunc);
    if (!out) throw FetchError("cannot write " + tmp.path().string());
    fill(out);
    out.flush();
    if (!out) throw FetchError("write failed for " + tmp.path().string());
  }
  std::error_code ec;
  fs::rename(tmp.path(), path, ec);
  if (ec) throw FetchError("cannot move into " + path.string());
  tmp.release();
}

json read_meta(const fs::path& path) {
  std::ifstream in(path);
  if (!in) return json::object();
  try {
    json meta;
    in >> meta;
    return meta.is_object() ? meta : json::object();
  } catch (const json::exception&) {
    return json::object();
  }
}

}  // namespace

FetchResult fetch_dataset(const std::string& name, const std::vector<DatasetSpec>& registry,
                          const fs::path& cache_dir) {
  const auto it = std::find_if(registry.begin(), registry.end(),
                               [&](const DatasetSpec& s) { return s.name == name; });
  if (it == registry.end()) {
    std::string known;
    for (const auto& s : registry) known += (known.empty() ? "" : ", ") + s.name;
    throw UnknownDatasetError("unknown dataset '" + name + "'; known datasets: " + known);
  }
  const DatasetSpec& spec = *it;

  std::error_code ec;
  fs::create_directories(cache_dir, ec);
  if (!fs::is_directory(cache_dir)) throw FetchError("cannot create cache " + cache_dir.string());
  const fs::path edges = cache_dir / (name + ".edges");
  const fs::path meta_path = cache_dir / (name + ".meta.json");

  json meta = read_meta(meta_path);
  if (fs::exists(edges) && meta.contains("edges_sha256") &&
      meta["edges_sha256"] == sha256_file(edges)) {
    return {edges, true, meta.value("source_sha256", "")};
  }

  TempFile raw(cache_dir / (name + ".download.part"));
  download(spec.url, raw.path());
  const std::string got = sha256_file(raw.path());
  const std::string expected = !spec.sha256.empty() ? spec.sha256 : meta.value("source_sha256", "");
  if (!expected.empty() && got != expected) {
    throw FetchError("checksum mismatch for " + name + ": expected " + expected + ", got " + got);
  }

  TempFile work(cache_dir / (name + ".extract.part"));
  fs::path text = raw.path();
  switch (spec.format) {
    case ArchiveFormat::Plain: break;
    case ArchiveFormat::Gzip:
      text = work.path();
      gunzip(raw.path(), text);
      break;
    case ArchiveFormat::TarBz2:
      fs::create_directories(work.path());
      untar_member(raw.path(), work.path(), spec.member);
      text = work.path() / spec.member;
      break;
  }

  std::size_t count = 0;
  write_atomically(edges, [&](std::ostream& out) {
    std::ifstream in(text);
    if (!in) throw FetchError("cannot read extracted data for " + name);
    count = normalize_edge_list(in, out);
  });
  if (count == 0) {
    fs::remove(edges, ec);
    throw FetchError("dataset " + name + " contains no edges");
  }

  const json fresh = {{"name", name},
                      {"url", spec.url},
                      {"source_sha256", got},
                      {"edges_sha256", sha256_file(edges)},
                      {"edges", count}};
  write_atomically(meta_path, [&](std::ostream& out) { out << fresh.dump(2) << '\n'; });
  return {edges, false, got};
}

}  // namespace bpeel
