#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <string>

#include "twistdec/io.hpp"

using namespace twistdec;
namespace fs = std::filesystem;

namespace {

const fs::path kData = TWISTDEC_DATA_DIR;

struct TempDir {
  fs::path path;
  TempDir() {
    static int counter = 0;
    path = fs::temp_directory_path() /
           ("twistdec_io_" + std::to_string(++counter));
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

}  // namespace

TEST_CASE("text file round trip") {
  TempDir tmp;
  auto f = tmp.path / "note.txt";
  write_text_file(f, "hello\nworld\n");
  CHECK(read_text_file(f) == "hello\nworld\n");
  CHECK_THROWS_WITH_AS(read_text_file(tmp.path / "absent.txt"),
                       doctest::Contains("cannot open"), ParseError);
}

TEST_CASE("group files round trip and tolerate comments") {
  TempDir tmp;
  std::vector<Permutation> gens{Permutation::parse("(1,2)", 4),
                                Permutation::parse("(1,2,3,4)", 4)};
  auto text = format_group_file("S4", 4, gens);
  auto f = tmp.path / "s4.grp";
  write_text_file(f, "# a comment\n\n" + text);
  auto g = parse_group_file(f);
  CHECK(g.name() == "S4");
  CHECK(g.degree() == 4);
  CHECK(g.generators() == gens);
  CHECK(g.order() == 24);
}

TEST_CASE("shipped group fixture parses") {
  auto g = parse_group_file(kData / "groups/pgl27.grp");
  CHECK(g.name() == "PGL27");
  CHECK(g.degree() == 8);
  CHECK(g.generators().size() == 3);
  CHECK(g.order() == 336);
}

TEST_CASE("malformed group files are rejected") {
  TempDir tmp;
  auto reject = [&](const char* fname, const std::string& content,
                    const char* needle) {
    auto f = tmp.path / fname;
    write_text_file(f, content);
    CHECK_THROWS_WITH_AS(parse_group_file(f), doctest::Contains(needle),
                         ParseError);
  };
  reject("a.grp", "name X\ngen (1,2)\n", "gen before degree");
  reject("b.grp", "degree 3\nname X\n", "no generators");
  reject("c.grp", "degree 3\ngen (1,2)\n", "missing name");
  reject("d.grp", "degree 0\nname X\ngen ()\n", "degree must be >= 1");
  reject("e.grp", "degree 3\nname X\nfrobnicate\n", "unknown directive");
  reject("f.grp", "degree 3\nname X Y\ngen (1,2)\n", "single token");
}

TEST_CASE("ubb files round trip") {
  TempDir tmp;
  Ubb u{"PGL27", 2, {{1, 2, 3}, {4, 5, 6}, {2, 3, 7}, {1, 7, 8}}};
  auto f = tmp.path / "u.ubb";
  write_text_file(f, format_ubb_file(u));
  auto back = parse_ubb_file(f);
  CHECK(back.group_name == u.group_name);
  CHECK(back.strength == u.strength);
  CHECK(back.bases == u.bases);

  write_text_file(f, "ubb X 2\n1 2\n");
  CHECK_THROWS_WITH_AS(parse_ubb_file(f), doctest::Contains("header"),
                       ParseError);
  write_text_file(f, "ubb X strength 2\n");
  CHECK_THROWS_WITH_AS(parse_ubb_file(f), doctest::Contains("no bases"),
                       ParseError);
}

TEST_CASE("shipped ubb fixture parses") {
  auto u = parse_ubb_file(kData / "ubbs/asl32.ubb");
  CHECK(u.strength == 2);
  REQUIRE(u.bases.size() == 6);
  CHECK(u.bases[0] == std::vector<int>{1, 2, 3, 5});
  CHECK(u.bases[5] == std::vector<int>{2, 3, 7, 8});
}

TEST_CASE("cover files round trip and self-validate") {
  TempDir tmp;
  CoveringDesign d;
  d.n = 4;
  d.block_size = 3;
  d.strength = 2;
  d.blocks = {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}};
  auto f = tmp.path / "c.cover";
  write_text_file(f, format_cover_file(d));
  auto back = parse_cover_file(f);
  CHECK(back.n == 4);
  CHECK(back.block_size == 3);
  CHECK(back.strength == 2);
  CHECK(back.blocks == d.blocks);

  // a hole: {3,4} lies in no block
  write_text_file(f, "cover 4 2 2\n1 2\n1 3\n1 4\n2 3\n2 4\n");
  CHECK_THROWS_WITH_AS(parse_cover_file(f),
                       doctest::Contains("not a covering design"), ParseError);
  auto lax = parse_cover_file(f, false);
  CHECK(lax.blocks.size() == 5);

  write_text_file(f, "cover 4 2 2\n1 2 3\n");
  CHECK_THROWS_WITH_AS(parse_cover_file(f), doctest::Contains("block on line"),
                       ParseError);
  write_text_file(f, "cover 4 2 2\n1 1\n");
  CHECK_THROWS_WITH_AS(parse_cover_file(f), doctest::Contains("repeated"),
                       ParseError);
  write_text_file(f, "cover 4 2 2\n1 5\n");
  CHECK_THROWS_WITH_AS(parse_cover_file(f), doctest::Contains("out of range"),
                       ParseError);
}

TEST_CASE("shipped tuple fixture parses with identity bijections") {
  auto code = parse_tuple_file(kData / "tuples/asl32.tuple");
  CHECK(code.name() == "asl32");
  CHECK(code.lambda() == 2);
  CHECK(code.degree() == 8);
  CHECK(code.psi(1).is_identity());
  CHECK(code.size() == 1344);
}

TEST_CASE("tuple files carry explicit point bijections") {
  TempDir tmp;
  write_text_file(tmp.path / "r1.grp",
                  format_group_file("S3", 3,
                                    {Permutation::parse("(1,2)", 3),
                                     Permutation::parse("(1,2,3)", 3)}));
  write_text_file(tmp.path / "r2.grp",
                  format_group_file("S3c", 3,
                                    {Permutation::parse("(2,3)", 3),
                                     Permutation::parse("(1,2,3)", 3)}));
  write_text_file(tmp.path / "t.tuple",
                  "tuple s3conj\nlambda 2\ncomponent r1.grp\ncomponent "
                  "r2.grp\nmap 2\n(2,3)\n(1,2,3)\nendmap\npsi 2 (1,2,3)\n");
  auto code = parse_tuple_file(tmp.path / "t.tuple");
  CHECK(code.lambda() == 2);
  CHECK(code.psi(1) == Permutation::parse("(1,2,3)", 3));
  CHECK(code.size() == 6);
  CHECK(code.check_component_iso(1).ok);
}

TEST_CASE("tuple files cross-check their component files") {
  TempDir tmp;
  write_text_file(tmp.path / "r1.grp",
                  format_group_file("S3", 3,
                                    {Permutation::parse("(1,2)", 3),
                                     Permutation::parse("(1,2,3)", 3)}));
  // generator list disagrees with the map block
  write_text_file(tmp.path / "r2.grp",
                  format_group_file("S3c", 3,
                                    {Permutation::parse("(1,3)", 3),
                                     Permutation::parse("(1,2,3)", 3)}));
  write_text_file(tmp.path / "t.tuple",
                  "tuple x\nlambda 2\ncomponent r1.grp\ncomponent r2.grp\n"
                  "map 2\n(2,3)\n(1,2,3)\nendmap\n");
  CHECK_THROWS_WITH_AS(parse_tuple_file(tmp.path / "t.tuple"),
                       doctest::Contains("do not match"), ParseError);

  write_text_file(tmp.path / "t2.tuple",
                  "tuple x\nlambda 2\ncomponent r1.grp\ncomponent r2.grp\n"
                  "map 2\n(2,3)\n");
  CHECK_THROWS_WITH_AS(parse_tuple_file(tmp.path / "t2.tuple"),
                       doctest::Contains("without endmap"), ParseError);

  write_text_file(tmp.path / "t3.tuple",
                  "tuple x\nlambda 2\ncomponent r1.grp\n"
                  "map 2\n(2,3)\n(1,2,3)\nendmap\n");
  CHECK_THROWS_WITH_AS(parse_tuple_file(tmp.path / "t3.tuple"),
                       doctest::Contains("component lines"), ParseError);

  write_text_file(tmp.path / "t4.tuple", "tuple x\nlambda 1\n");
  CHECK_THROWS_WITH_AS(parse_tuple_file(tmp.path / "t4.tuple"),
                       doctest::Contains("lambda must be >= 2"), ParseError);
}
