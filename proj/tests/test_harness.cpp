#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <string>

#include "piblocks/errors.hpp"
#include "piblocks/report.hpp"

using namespace piblocks;

namespace {

namespace fs = std::filesystem;

struct TempCorpus {
  fs::path dir;
  TempCorpus() {
    dir = fs::temp_directory_path() /
          fs::path("piblocks_test_" + std::to_string(::getpid()) + "_" +
                   std::to_string(counter()++));
    fs::create_directories(dir);
  }
  ~TempCorpus() { fs::remove_all(dir); }
  void write(const std::string& name, const std::string& text) const {
    std::ofstream out(dir / name);
    out << text;
  }
  static int& counter() {
    static int c = 0;
    return c;
  }
};

const char* kS3 = "name S3\ndegree 3\ngen (1 2)\ngen (1 2 3)\norder 6\n";

}  // namespace

TEST_SUITE("harness") {

TEST_CASE("group file parsing") {
  CorpusEntry s3 = parse_group_file(kS3);
  CHECK(s3.name == "S3");
  CHECK(s3.group->order() == 6);

  CorpusEntry c1 = parse_group_file("name C1\ndegree 1\n");
  CHECK(c1.group->order() == 1);

  CorpusEntry commas = parse_group_file("name V4\ndegree 4\ngen (1,2)(3,4)\ngen (1 3)(2 4)\n");
  CHECK(commas.group->order() == 4);

  CorpusEntry commented = parse_group_file(
      "# a cyclic group\nname C6   # inline comment\n\ndegree 6\ngen (1 2 3 4 5 6)\n");
  CHECK(commented.name == "C6");
  CHECK(commented.group->order() == 6);
}

TEST_CASE("parse errors carry line numbers") {
  auto expect_error = [](const std::string& text, const std::string& fragment) {
    try {
      parse_group_file(text);
      FAIL("expected InputError for: ", text);
    } catch (const InputError& e) {
      CHECK(std::string(e.what()).find(fragment) != std::string::npos);
    }
  };
  expect_error("name X\ndegree 3\ngen (1 2(3\n", "line 3");
  expect_error("name X\ndegree 3\ngen (1 2\n", "line 3");
  expect_error("name X\ndegree 3\ngen (1 9)\n", "line 3");
  expect_error("name X\ndegree 3\nwibble 4\n", "wibble");
  expect_error("degree 3\n", "name");
  expect_error("name X\n", "degree");
  expect_error("name X\ndegree 3\ngen (1 2 3)\norder 5\n", "order 5");
  expect_error("name X\ndegree -1\n", "degree");
}

TEST_CASE("analyze S3") {
  Workspace ws;
  CorpusEntry s3 = parse_group_file(kS3);

  CHECK(analyze_entry(ws, s3, PrimeSet({2, 3})) ==
        "group=S3 order=6 degree=3 classes=3 exponent=6 pi={2,3} separable=true\n"
        "block=1 k=3 degrees=1,1,2 defect_order=6 defect_iso=S3 thmB=pass\n");

  CHECK(analyze_entry(ws, s3, PrimeSet({5})) ==
        "group=S3 order=6 degree=3 classes=3 exponent=6 pi={5} separable=true\n"
        "block=1 k=1 degrees=1 defect_order=1 defect_iso=C1 thmB=pass\n"
        "block=2 k=1 degrees=1 defect_order=1 defect_iso=C1 thmB=pass\n"
        "block=3 k=1 degrees=2 defect_order=1 defect_iso=C1 thmB=pass\n");

  CHECK(analyze_entry(ws, s3, PrimeSet({2})) ==
        "group=S3 order=6 degree=3 classes=3 exponent=6 pi={2} separable=true\n"
        "block=1 k=2 degrees=1,1 defect_order=2 defect_iso=C2 thmB=pass\n"
        "block=2 k=1 degrees=2 defect_order=1 defect_iso=C1 thmB=pass\n");
}

TEST_CASE("analyze a non-separable pair reports blocks only") {
  Workspace ws;
  CorpusEntry a5 =
      parse_group_file("name A5\ndegree 5\ngen (1 2 3)\ngen (1 2 3 4 5)\norder 60\n");
  std::string out = analyze_entry(ws, a5, PrimeSet({2, 3}));
  CHECK(out.find("separable=false") != std::string::npos);
  CHECK(out.find("defect_order") == std::string::npos);
  CHECK(out.find("block=1") != std::string::npos);
}

TEST_CASE("pi=all yields the Landau block") {
  Workspace ws;
  CorpusEntry s4 =
      parse_group_file("name S4\ndegree 4\ngen (1 2)\ngen (1 2 3 4)\norder 24\n");
  PrimeSet all = PrimeSet::primes_of(s4.group->order());
  CHECK(analyze_entry(ws, s4, all) ==
        "group=S4 order=24 degree=4 classes=5 exponent=12 pi={2,3} separable=true\n"
        "block=1 k=5 degrees=1,1,2,3,3 defect_order=24 defect_iso=order24-unidentified\n");
}

TEST_CASE("table dump") {
  Workspace ws;
  CorpusEntry s3 = parse_group_file(kS3);
  CHECK(table_dump(ws, s3) ==
        "# group=S3 order=6 classes=3 exponent=6 conductor=6\n"
        "# class sizes: 1 3 2\n"
        "# class orders: 1 2 3\n"
        "# class reps: () (2 3) (1 2 3)\n"
        "1 (1,0) (1,0) (1,0)\n"
        "1 (1,0) (-1,0) (1,0)\n"
        "2 (2,0) (0,0) (-1,0)\n");
}

TEST_CASE("pi subset enumeration") {
  auto subsets = pi_subsets_for_order(6);
  REQUIRE(subsets.size() == 8);
  CHECK(subsets[0].to_string() == "{}");
  CHECK(subsets[1].to_string() == "{2}");
  CHECK(subsets[2].to_string() == "{2,3}");
  CHECK(subsets[3].to_string() == "{2,3,5}");
  CHECK(subsets[4].to_string() == "{2,5}");
  CHECK(subsets[5].to_string() == "{3}");
  CHECK(subsets[6].to_string() == "{3,5}");
  CHECK(subsets[7].to_string() == "{5}");
  CHECK(pi_subsets_for_order(1).size() == 2);  // {} and {2}
}

TEST_CASE("verify on a miniature corpus") {
  TempCorpus corpus;
  corpus.write("c1.grp", "name C1\ndegree 1\n");
  corpus.write("s3.grp", kS3);
  corpus.write("c6.grp", "name C6\ndegree 6\ngen (1 2 3 4 5 6)\norder 6\n");

  auto entries = load_corpus_dir(corpus.dir);
  REQUIRE(entries.size() == 3);
  CHECK(entries[0].name == "C1");  // file order

  VerifySummary summary = verify_corpus(entries, 120);
  CHECK(summary.entries == 3);
  CHECK(summary.failures == 0);
  CHECK(summary.exit_code() == 0);
  CHECK(summary.report.find("status=pass") != std::string::npos);
  CHECK(summary.report.find("entry=S3 order=6 pi={2,3}") != std::string::npos);
  CHECK(summary.report.find("category=theorem_b") != std::string::npos);

  // order filter
  VerifySummary filtered = verify_corpus(entries, 5);
  CHECK(filtered.entries == 1);

  // byte-identical reruns
  CHECK(verify_corpus(entries, 120).report == summary.report);
}

TEST_CASE("verify with a non-separable control") {
  TempCorpus corpus;
  corpus.write("a5.grp", "name A5\ndegree 5\ngen (1 2 3)\ngen (1 2 3 4 5)\norder 60\n");
  auto entries = load_corpus_dir(corpus.dir);
  VerifySummary summary = verify_corpus(entries, 120);
  CHECK(summary.failures == 0);
  CHECK(summary.report.find("pi={2,3} separable=false") != std::string::npos);
  CHECK(summary.report.find("pi={7} separable=true") != std::string::npos);
}

TEST_CASE("verify error and empty cases") {
  TempCorpus empty;
  auto no_entries = load_corpus_dir(empty.dir);
  VerifySummary summary = verify_corpus(no_entries, 120);
  CHECK(summary.exit_code() == 0);
  CHECK(summary.checks == 0);
  CHECK(summary.report.find("warning") != std::string::npos);

  TempCorpus broken;
  broken.write("bad.grp", "name X\ndegree 3\ngen (1 2(3\n");
  try {
    load_corpus_dir(broken.dir);
    FAIL("expected InputError");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("bad.grp") != std::string::npos);
  }

  CHECK_THROWS_AS(load_corpus_dir(empty.dir / "missing"), InputError);
}

}  // TEST_SUITE
