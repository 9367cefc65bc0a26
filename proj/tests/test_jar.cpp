#include "doctest.h"

#include "deblometer/assembler.hpp"
#include "deblometer/jar.hpp"

using namespace deblometer;

namespace {

JarArchive sample_jar() {
  JarArchive jar;
  jar.manifest.set("Manifest-Version", "1.0");
  jar.manifest.set("Main-Class", "demo.Main");
  jar.add("demo/Main.class", emit_class(ClassBuilder("demo/Main").build()));
  jar.add("demo/data.txt", Bytes{'h', 'i'});
  return jar;
}

}  // namespace

TEST_CASE("archive with one class entry loads back") {
  JarArchive jar;
  jar.add("A.class", emit_class(ClassBuilder("A").build()));
  Bytes bytes = write_jar(jar);
  JarArchive back = read_jar(bytes);
  CHECK(back.entries.size() == 1);
  CHECK(back.manifest.empty());
  CHECK(back == jar);
}

TEST_CASE("write is deterministic and read is its inverse") {
  JarArchive jar = sample_jar();
  Bytes a = write_jar(jar);
  Bytes b = write_jar(jar);
  CHECK(a == b);
  JarArchive back = read_jar(a);
  CHECK(back == jar);
  CHECK(back.manifest.main_class() == std::string("demo.Main"));
  // In-memory entry insertion order never affects bytes on disk.
  JarArchive reordered;
  reordered.manifest = jar.manifest;
  reordered.add("demo/data.txt", Bytes{'h', 'i'});
  reordered.add("demo/Main.class", jar.entries.at("demo/Main.class"));
  CHECK(write_jar(reordered) == a);
}

TEST_CASE("empty archive is a valid zero-entry ZIP") {
  JarArchive jar;
  Bytes bytes = write_jar(jar);
  CHECK(bytes.size() == 22);  // bare end-of-central-directory record
  JarArchive back = read_jar(bytes);
  CHECK(back.entries.empty());
  CHECK(back.manifest.empty());
}

TEST_CASE("missing manifest is not an error") {
  JarArchive jar;
  jar.add("x/Y.class", emit_class(ClassBuilder("x/Y").build()));
  JarArchive back = read_jar(write_jar(jar));
  CHECK(back.manifest.empty());
  CHECK(back.entries.count("x/Y.class") == 1);
}

TEST_CASE("compressed entries round-trip when the flag is set") {
  JarArchive jar = sample_jar();
  Bytes big(4096, 0x41);
  jar.add("big.bin", big);
  Bytes bytes = write_jar(jar, {.compress = true});
  CHECK(bytes.size() < write_jar(jar).size());
  JarArchive back = read_jar(bytes);
  CHECK(back == jar);
}

TEST_CASE("corrupt archives are rejected with diagnoses") {
  SUBCASE("garbage") {
    Bytes junk(64, 0x5A);
    CHECK_THROWS_AS(read_jar(junk), ArchiveError);
  }
  SUBCASE("data truncated behind the central directory") {
    JarArchive jar = sample_jar();
    Bytes bytes = write_jar(jar);
    // Corrupt the stored payload of the first entry (manifest data starts
    // after its 30-byte local header and 20-byte name): CRC must catch it.
    bytes[55] ^= 0xFF;
    CHECK_THROWS_AS(read_jar(bytes), ArchiveError);
  }
  SUBCASE("duplicate entries") {
    JarArchive jar;
    jar.add("a.txt", Bytes{'x'});
    CHECK_THROWS_AS(jar.add("a.txt", Bytes{'y'}), ArchiveError);
    try {
      jar.add("a.txt", Bytes{'y'});
    } catch (const ArchiveError& e) {
      CHECK(e.kind == ArchiveErrorKind::DuplicateEntry);
    }
  }
}

TEST_CASE("manifest text folds long values and unfolds on parse") {
  Manifest m;
  m.set("Manifest-Version", "1.0");
  m.set("Main-Class",
        "some.extremely.long.package.path.that.exceeds.the.fold."
        "limit.for.manifest.lines.Main");
  std::string text = m.to_text();
  for (std::size_t pos = 0; pos < text.size();) {
    std::size_t eol = text.find("\r\n", pos);
    REQUIRE(eol != std::string::npos);
    CHECK(eol - pos <= 70);
    pos = eol + 2;
  }
  Manifest back = Manifest::from_text(text);
  CHECK(back == m);
}
