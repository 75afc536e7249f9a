#include <catch2/catch_amalgamated.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "cubedom/io.hpp"
#include "cubedom/table.hpp"

using namespace cubedom;

namespace {

struct CapGuard {
  int saved;
  explicit CapGuard(int cap) : saved(max_explicit_dimension()) {
    set_max_explicit_dimension(cap);
  }
  ~CapGuard() { set_max_explicit_dimension(saved); }
};

std::string message_of(const ParseError& e) { return e.what(); }

}  // namespace

TEST_CASE("format_vertex prints coordinate n leftmost") {
  CHECK(format_vertex(6, 3) == "110");
  CHECK(format_vertex(6, 4) == "0110");
  CHECK(format_vertex(0, 5) == "00000");
  CHECK(format_vertex(1, 3) == "001");
  CHECK_THROWS_AS(format_vertex(8, 3), std::invalid_argument);
}

TEST_CASE("parse_vertex round-trips and rejects junk") {
  CHECK(parse_vertex("110", 3) == 6);
  CHECK(parse_vertex("001", 3) == 1);
  for (int n : {1, 4, 9})
    for (Vertex v = 0; v < universe_size(n); v += 3)
      CHECK(parse_vertex(format_vertex(v, n), n) == v);
  CHECK_THROWS_AS(parse_vertex("10", 3), ParseError);
  CHECK_THROWS_AS(parse_vertex("1100", 3), ParseError);
  CHECK_THROWS_AS(parse_vertex("1x0", 3), ParseError);
  CHECK_THROWS_AS(parse_vertex("", 1), ParseError);
}

TEST_CASE("set files round-trip") {
  VertexSet s(4);
  for (Vertex v : {0u, 3u, 9u, 15u}) s.insert(v);
  std::ostringstream out;
  write_set_file(out, s);
  CHECK(out.str() == "0000\n0011\n1001\n1111\n");
  std::istringstream in(out.str());
  CHECK(read_set_file(in, 4) == s);

  // CRLF input parses the same.
  std::istringstream crlf("0000\r\n0011\r\n1001\r\n1111\r\n");
  CHECK(read_set_file(crlf, 4) == s);
}

TEST_CASE("set file parse errors carry line numbers") {
  std::istringstream bad("0000\n0x11\n");
  try {
    read_set_file(bad, 4);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(message_of(e).find("line 2") != std::string::npos);
  }
  std::istringstream short_line("0000\n011\n");
  CHECK_THROWS_AS(read_set_file(short_line, 4), ParseError);
}

TEST_CASE("tree files round-trip") {
  SpanningTree t = gray_code_path(3);
  std::ostringstream out;
  write_tree_file(out, t);
  const std::string text = out.str();
  CHECK(text.rfind("n=3\n", 0) == 0);
  CHECK(text.find("000 001\n") != std::string::npos);

  std::istringstream in(text);
  SpanningTree back = read_tree_file(in);
  CHECK(back.n == 3);
  CHECK(back.edges == t.edges);
  CHECK(back.leaf_count == t.leaf_count);
  CHECK(verify_tree(back).valid);
}

TEST_CASE("tree file parse errors") {
  SECTION("missing header") {
    std::istringstream in("000 001\n");
    CHECK_THROWS_AS(read_tree_file(in), ParseError);
  }
  SECTION("malformed header") {
    std::istringstream in("n=3x\n");
    CHECK_THROWS_AS(read_tree_file(in), ParseError);
  }
  SECTION("too few edge lines") {
    std::istringstream in("n=2\n00 01\n00 10\n");
    try {
      read_tree_file(in);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(message_of(e).find("2 edge lines") != std::string::npos);
    }
  }
  SECTION("too many edge lines") {
    std::istringstream in("n=1\n0 1\n0 1\n");
    CHECK_THROWS_AS(read_tree_file(in), ParseError);
  }
  SECTION("malformed edge line") {
    std::istringstream in("n=2\n00 01\n00  10\n01 11\n");
    try {
      read_tree_file(in);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(message_of(e).find("line 3") != std::string::npos);
    }
  }
  SECTION("vertex of the wrong width") {
    std::istringstream in("n=2\n00 01\n000 010\n01 11\n");
    CHECK_THROWS_AS(read_tree_file(in), ParseError);
  }
}

TEST_CASE("table rows wrap the automatic construction") {
  TableRow row = table_row(6);
  CHECK(row.n == 6);
  CHECK(row.method == "expansion");
  CHECK(row.cds_size == 18);
  CHECK(row.ds_size == 16);  // doubled-Hamming dominating set for Q_6 itself
  CHECK(row.leaf_count == 46);
  CHECK(row.gamma_lower == 10);
  CHECK(row.gamma_c_lower == 13);
  CHECK(row.explicit_build);
}

TEST_CASE("ratio columns") {
  // ratio_gamma compares the doubled-Hamming dominating set against
  // 2^n/(n+1); it returns to exactly 1 at Hamming dimensions.
  CHECK(table_row(3).ratio_gamma == 1.0);
  CHECK(table_row(7).ratio_gamma == 1.0);
  CHECK(table_row(4).ratio_gamma == Catch::Approx(4.0 * 5.0 / 16.0));
  CHECK(table_row(6).ratio_gamma == Catch::Approx(16.0 * 7.0 / 64.0));

  std::vector<TableRow> rows = build_table(2, 20);
  for (const TableRow& row : rows) {
    INFO("n=" << row.n);
    CHECK(row.ratio_gamma <= 2.0);
    if (row.n >= 3) {
      CHECK(row.ratio_gamma_c > 1.0);
      CHECK(row.ratio_gamma_c < 2.0);
    }
  }
  // Sawtooth: the gamma ratio resets after each Hamming dimension.
  CHECK(rows[std::size_t(7 - 2)].ratio_gamma == 1.0);
  CHECK(rows[std::size_t(8 - 2)].ratio_gamma < rows[std::size_t(7 - 2) + 5].ratio_gamma);
}

TEST_CASE("build_table range handling") {
  CHECK_THROWS_AS(build_table(1, 5), std::invalid_argument);
  CHECK_THROWS_AS(build_table(5, 4), std::invalid_argument);
  CHECK(build_table(2, 2).size() == 1);

  CapGuard guard(8);
  // Above the cap: refused without the formula flag, served with it.
  CHECK_THROWS_AS(build_table(2, 10), std::invalid_argument);
  std::vector<TableRow> rows = build_table(2, 10, true);
  CHECK(rows.size() == 9);
  CHECK(rows.back().explicit_build == false);
  CHECK(rows.back().cds_size == 158);  // formula bound for n = 10
  CHECK(rows[std::size_t(8 - 2)].explicit_build);
}

TEST_CASE("formatted tables are deterministic") {
  std::vector<TableRow> rows = build_table(2, 8);
  const std::string a = format_table(rows, TableFormat::csv);
  const std::string b = format_table(build_table(2, 8), TableFormat::csv);
  CHECK(a == b);

  CHECK(a.rfind("n,method,N,j,k,ds_size,cds_size,leaf_count,"
                "gamma_lower,gamma_c_lower,ratio_gamma,ratio_gamma_c\n",
                0) == 0);
  // 1 header line + 7 rows, every line with 11 separators.
  std::size_t lines = 0;
  for (char c : a)
    if (c == '\n') ++lines;
  CHECK(lines == 8);
  CHECK(a.find("3,hamming,3,0,2,2,4,4,2,3,1,1.5\n") != std::string::npos);

  const std::string tsv = format_table(rows, TableFormat::tsv);
  CHECK(tsv.find("3\thamming") != std::string::npos);

  const std::string md = format_table(rows, TableFormat::markdown);
  CHECK(md.rfind("| n | method |", 0) == 0);
  CHECK(md.find("| --- |") != std::string::npos);
  CHECK(md.find("| 3 | hamming | 3 | 0 | 2 | 2 | 4 | 4 | 2 | 3 | 1 | 1.5 |\n") !=
        std::string::npos);
}
