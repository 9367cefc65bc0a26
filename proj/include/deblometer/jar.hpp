// jar.hpp -- JAR (ZIP) container reading and writing. Writes are
// deterministic: entries sorted by path, fixed 1980-01-01 timestamps, no
// extra fields, STORED by default. DEFLATE is supported behind a flag for
// interoperability with external tools.
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <zlib.h>

#include "deblometer/bytes.hpp"

namespace deblometer {

enum class ArchiveErrorKind {
  CorruptArchive,
  DuplicateEntry,
  UnsupportedCompression,
  InvariantViolation,
};

class ArchiveError : public std::runtime_error {
public:
  ArchiveError(ArchiveErrorKind kind, const std::string& what_arg)
      : std::runtime_error(what_arg), kind(kind) {}
  ArchiveErrorKind kind;
};

inline constexpr const char* kManifestPath = "META-INF/MANIFEST.MF";

/// Manifest main section, insertion-ordered. Values of benchmark JARs carry
/// the Main-Class entry point.
class Manifest {
public:
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }

  void set(const std::string& key, const std::string& value) {
    for (auto& [k, v] : entries_)
      if (k == key) {
        v = value;
        return;
      }
    entries_.emplace_back(key, value);
  }

  std::optional<std::string> get(const std::string& key) const {
    for (const auto& [k, v] : entries_)
      if (k == key) return v;
    return std::nullopt;
  }

  std::optional<std::string> main_class() const { return get("Main-Class"); }

  const std::vector<std::pair<std::string, std::string>>& entries() const {
    return entries_;
  }

  bool operator==(const Manifest&) const = default;

  /// "Key: Value" lines, folded so no line exceeds 72 bytes, CRLF endings,
  /// trailing blank line per the JAR format.
  std::string to_text() const {
    std::string out;
    for (const auto& [key, value] : entries_) {
      std::string line = key + ": " + value;
      std::size_t pos = 0;
      bool first = true;
      while (pos < line.size()) {
        std::size_t limit = first ? 70 : 69;  // room for CRLF (+ lead space)
        std::string chunk = line.substr(pos, limit);
        if (!first) out += ' ';
        out += chunk;
        out += "\r\n";
        pos += chunk.size();
        first = false;
      }
    }
    out += "\r\n";
    return out;
  }

  static Manifest from_text(const std::string& text) {
    Manifest m;
    std::vector<std::string> logical;
    std::size_t pos = 0;
    while (pos < text.size()) {
      std::size_t eol = text.find('\n', pos);
      std::string line = text.substr(
          pos, eol == std::string::npos ? std::string::npos : eol - pos);
      if (!line.empty() && line.back() == '\r') line.pop_back();
      pos = eol == std::string::npos ? text.size() : eol + 1;
      if (!line.empty() && line.front() == ' ') {
        if (!logical.empty()) logical.back() += line.substr(1);
      } else {
        logical.push_back(std::move(line));
      }
    }
    for (const auto& line : logical) {
      if (line.empty()) continue;
      std::size_t colon = line.find(':');
      if (colon == std::string::npos) continue;
      std::string key = line.substr(0, colon);
      std::string value = line.substr(colon + 1);
      if (!value.empty() && value.front() == ' ') value.erase(0, 1);
      m.set(key, value);
    }
    return m;
  }

private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

/// In-memory JAR: ordered entry map plus the parsed manifest. The manifest
/// is kept out of the entry map and regenerated on write.
struct JarArchive {
  std::map<std::string, Bytes> entries;
  Manifest manifest;

  bool operator==(const JarArchive&) const = default;

  void add(const std::string& path, Bytes data) {
    if (entries.count(path))
      throw ArchiveError(ArchiveErrorKind::DuplicateEntry,
                         "duplicate archive entry: " + path);
    entries.emplace(path, std::move(data));
  }

  std::vector<std::string> class_entry_paths() const {
    std::vector<std::string> out;
    for (const auto& [path, bytes] : entries)
      if (path.size() > 6 && path.rfind(".class") == path.size() - 6)
        out.push_back(path);
    return out;
  }
};

namespace detail {

inline u4 crc32_of(std::span<const u1> data) {
  static const std::array<u4, 256> table = [] {
    std::array<u4, 256> t{};
    for (u4 i = 0; i < 256; ++i) {
      u4 c = i;
      for (int k = 0; k < 8; ++k) c = (c & 1) ? 0xEDB88320u ^ (c >> 1) : c >> 1;
      t[i] = c;
    }
    return t;
  }();
  u4 crc = 0xFFFFFFFFu;
  for (u1 b : data) crc = table[(crc ^ b) & 0xFF] ^ (crc >> 8);
  return crc ^ 0xFFFFFFFFu;
}

inline Bytes deflate_raw(std::span<const u1> data) {
  z_stream zs{};
  if (deflateInit2(&zs, Z_BEST_COMPRESSION, Z_DEFLATED, -MAX_WBITS, 8,
                   Z_DEFAULT_STRATEGY) != Z_OK)
    throw ArchiveError(ArchiveErrorKind::InvariantViolation,
                       "deflate initialization failed");
  Bytes out(deflateBound(&zs, static_cast<uLong>(data.size())));
  zs.next_in = const_cast<Bytef*>(data.data());
  zs.avail_in = static_cast<uInt>(data.size());
  zs.next_out = out.data();
  zs.avail_out = static_cast<uInt>(out.size());
  int rc = deflate(&zs, Z_FINISH);
  deflateEnd(&zs);
  if (rc != Z_STREAM_END)
    throw ArchiveError(ArchiveErrorKind::InvariantViolation,
                       "deflate failed");
  out.resize(zs.total_out);
  return out;
}

inline Bytes inflate_raw(std::span<const u1> data, std::size_t expected_size) {
  z_stream zs{};
  if (inflateInit2(&zs, -MAX_WBITS) != Z_OK)
    throw ArchiveError(ArchiveErrorKind::CorruptArchive,
                       "inflate initialization failed");
  Bytes out(expected_size);
  zs.next_in = const_cast<Bytef*>(data.data());
  zs.avail_in = static_cast<uInt>(data.size());
  zs.next_out = out.data();
  zs.avail_out = static_cast<uInt>(out.size());
  int rc = inflate(&zs, Z_FINISH);
  inflateEnd(&zs);
  if (rc != Z_STREAM_END || zs.total_out != expected_size)
    throw ArchiveError(ArchiveErrorKind::CorruptArchive,
                       "compressed entry does not decompress to its declared size");
  return out;
}

// ZIP epoch: 1980-01-01 00:00:00.
inline constexpr u2 kDosTime = 0;
inline constexpr u2 kDosDate = (0 << 9) | (1 << 5) | 1;

}  // namespace detail

struct JarWriteOptions {
  bool compress = false;  // STORED by default; DEFLATE when set
};

/// Serializes the archive. Same archive (and options) always produces
/// identical bytes.
inline Bytes write_jar(const JarArchive& jar,
                       const JarWriteOptions& options = {}) {
  struct CentralEntry {
    std::string path;
    u4 crc, comp_size, uncomp_size, offset;
    u2 method;
  };
  ByteWriter out;
  std::vector<CentralEntry> central;

  auto put_entry = [&](const std::string& path, const Bytes& data) {
    if (path.empty() || path.find('\\') != std::string::npos)
      throw ArchiveError(ArchiveErrorKind::InvariantViolation,
                         "invalid entry path: " + path);
    u4 crc = detail::crc32_of(data);
    Bytes stored;
    u2 method = 0;
    if (options.compress) {
      stored = detail::deflate_raw(data);
      method = 8;
    }
    const Bytes& payload = options.compress ? stored : data;
    CentralEntry ce{path, crc, static_cast<u4>(payload.size()),
                    static_cast<u4>(data.size()),
                    static_cast<u4>(out.size()), method};
    out.write_u4le(0x04034b50);
    out.write_u2le(20);  // version needed
    out.write_u2le(0);   // flags
    out.write_u2le(method);
    out.write_u2le(detail::kDosTime);
    out.write_u2le(detail::kDosDate);
    out.write_u4le(crc);
    out.write_u4le(ce.comp_size);
    out.write_u4le(ce.uncomp_size);
    out.write_u2le(static_cast<u2>(path.size()));
    out.write_u2le(0);  // extra length
    out.write_string(path);
    out.write_bytes(payload);
    central.push_back(std::move(ce));
  };

  if (!jar.manifest.empty()) {
    std::string text = jar.manifest.to_text();
    put_entry(kManifestPath, Bytes(text.begin(), text.end()));
  }
  for (const auto& [path, data] : jar.entries) {
    if (path == kManifestPath)
      throw ArchiveError(ArchiveErrorKind::InvariantViolation,
                         "manifest must be set via JarArchive::manifest");
    put_entry(path, data);
  }

  u4 cd_offset = static_cast<u4>(out.size());
  for (const auto& ce : central) {
    out.write_u4le(0x02014b50);
    out.write_u2le(20);  // version made by
    out.write_u2le(20);  // version needed
    out.write_u2le(0);
    out.write_u2le(ce.method);
    out.write_u2le(detail::kDosTime);
    out.write_u2le(detail::kDosDate);
    out.write_u4le(ce.crc);
    out.write_u4le(ce.comp_size);
    out.write_u4le(ce.uncomp_size);
    out.write_u2le(static_cast<u2>(ce.path.size()));
    out.write_u2le(0);  // extra
    out.write_u2le(0);  // comment
    out.write_u2le(0);  // disk number
    out.write_u2le(0);  // internal attrs
    out.write_u4le(0);  // external attrs
    out.write_u4le(ce.offset);
    out.write_string(ce.path);
  }
  u4 cd_size = static_cast<u4>(out.size()) - cd_offset;
  out.write_u4le(0x06054b50);
  out.write_u2le(0);
  out.write_u2le(0);
  out.write_u2le(static_cast<u2>(central.size()));
  out.write_u2le(static_cast<u2>(central.size()));
  out.write_u4le(cd_size);
  out.write_u4le(cd_offset);
  out.write_u2le(0);
  return out.take();
}

/// Loads an archive. A missing manifest is not an error (debloated outputs
/// may drop it); duplicate paths and structural damage are.
inline JarArchive read_jar(std::span<const u1> bytes) {
  if (bytes.size() < 22)
    throw ArchiveError(ArchiveErrorKind::CorruptArchive,
                       "input too small to be a ZIP archive");
  // Locate the end-of-central-directory record (scan backward over a
  // possible trailing comment).
  std::size_t eocd = std::string::npos;
  std::size_t scan_limit = bytes.size() >= 22 + 0xFFFF ? bytes.size() - 22 - 0xFFFF : 0;
  for (std::size_t i = bytes.size() - 22 + 1; i-- > scan_limit;) {
    if (read_u4le(bytes, i) == 0x06054b50) {
      eocd = i;
      break;
    }
  }
  if (eocd == std::string::npos)
    throw ArchiveError(ArchiveErrorKind::CorruptArchive,
                       "no end-of-central-directory record found");
  u2 entry_count = read_u2le(bytes, eocd + 10);
  u4 cd_size = read_u4le(bytes, eocd + 12);
  u4 cd_offset = read_u4le(bytes, eocd + 16);
  if (static_cast<std::size_t>(cd_offset) + cd_size > bytes.size())
    throw ArchiveError(ArchiveErrorKind::CorruptArchive,
                       "central directory extends past end of archive");

  JarArchive jar;
  std::size_t pos = cd_offset;
  for (u2 i = 0; i < entry_count; ++i) {
    if (pos + 46 > bytes.size() || read_u4le(bytes, pos) != 0x02014b50)
      throw ArchiveError(ArchiveErrorKind::CorruptArchive,
                         "central directory entry " + std::to_string(i) +
                             " is damaged");
    u2 method = read_u2le(bytes, pos + 10);
    u4 crc = read_u4le(bytes, pos + 16);
    u4 comp_size = read_u4le(bytes, pos + 20);
    u4 uncomp_size = read_u4le(bytes, pos + 24);
    u2 name_len = read_u2le(bytes, pos + 28);
    u2 extra_len = read_u2le(bytes, pos + 30);
    u2 comment_len = read_u2le(bytes, pos + 32);
    u4 local_offset = read_u4le(bytes, pos + 42);
    if (pos + 46 + name_len > bytes.size())
      throw ArchiveError(ArchiveErrorKind::CorruptArchive,
                         "entry name extends past end of archive");
    std::string path(reinterpret_cast<const char*>(bytes.data() + pos + 46),
                     name_len);
    pos += 46 + name_len + extra_len + comment_len;

    // Local header: skip its (possibly different) name/extra lengths.
    if (static_cast<std::size_t>(local_offset) + 30 > bytes.size() ||
        read_u4le(bytes, local_offset) != 0x04034b50)
      throw ArchiveError(ArchiveErrorKind::CorruptArchive,
                         "local header for " + path + " is damaged");
    u2 local_name = read_u2le(bytes, local_offset + 26);
    u2 local_extra = read_u2le(bytes, local_offset + 28);
    std::size_t data_off = local_offset + 30 + local_name + local_extra;
    if (data_off + comp_size > bytes.size())
      throw ArchiveError(ArchiveErrorKind::CorruptArchive,
                         "entry data for " + path + " extends past end of archive");
    std::span<const u1> raw = bytes.subspan(data_off, comp_size);
    Bytes data;
    if (method == 0) {
      if (comp_size != uncomp_size)
        throw ArchiveError(ArchiveErrorKind::CorruptArchive,
                           "stored entry " + path + " has inconsistent sizes");
      data.assign(raw.begin(), raw.end());
    } else if (method == 8) {
      data = detail::inflate_raw(raw, uncomp_size);
    } else {
      throw ArchiveError(ArchiveErrorKind::UnsupportedCompression,
                         "entry " + path + " uses unsupported compression method " +
                             std::to_string(method));
    }
    if (detail::crc32_of(data) != crc)
      throw ArchiveError(ArchiveErrorKind::CorruptArchive,
                         "CRC mismatch for entry " + path);
    if (path.empty() || path.back() == '/') continue;  // directory marker
    if (path == kManifestPath) {
      jar.manifest =
          Manifest::from_text(std::string(data.begin(), data.end()));
      continue;
    }
    jar.add(path, std::move(data));
  }
  return jar;
}

}  // namespace deblometer
