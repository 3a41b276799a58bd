#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "figure_transcriptions.hpp"
#include "permstat/tables.hpp"
#include "permstat/verify.hpp"

using namespace permstat;

namespace {

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    std::vector<std::string> row;
    std::string cell;
    for (char c : line) {
      if (c == ',') {
        row.push_back(cell);
        cell.clear();
      } else {
        cell.push_back(c);
      }
    }
    row.push_back(cell);
    rows.push_back(row);
  }
  return rows;
}

// Compares a regenerated table against a transcription, expecting exactly
// the listed errata cells to differ (with the computed replacement).
void compare_against_transcription(const Table& table, const std::string& csv,
                                   const std::vector<testdata::Erratum>& errata) {
  const auto expected = parse_csv(csv);
  REQUIRE(expected.size() == table.rows.size() + 1);
  for (size_t c = 0; c < table.columns.size(); ++c)
    CHECK(expected[0][c] == table.columns[c]);
  for (size_t r = 0; r < table.rows.size(); ++r) {
    for (size_t c = 0; c < table.columns.size(); ++c) {
      const std::string& got = table.rows[r][c];
      const std::string& want = expected[r + 1][c];
      bool is_erratum = false;
      for (const auto& e : errata) {
        if (table.rows[r][0] == e.sigma && table.columns[c] == e.column) {
          is_erratum = true;
          INFO("erratum cell " << e.sigma << "/" << e.column);
          CHECK(want == e.published);
          CHECK(got == e.computed);
        }
      }
      if (!is_erratum) {
        INFO("row " << table.rows[r][0] << " column " << table.columns[c]);
        CHECK(got == want);
      }
    }
  }
}

}  // namespace

TEST_CASE("check registry rejects unknown ids and out-of-range sizes") {
  CHECK_THROWS_AS(verify("no-such-check", 3), UnknownCheckIdError);
  CHECK_THROWS_AS(verify("a-expansion", 0), BoundExceededError);
  CHECK_THROWS_AS(verify("a-expansion", 100), BoundExceededError);
}

TEST_CASE("every check passes at small sizes") {
  for (const CheckInfo& info : check_registry()) {
    const int hi = std::min(info.max_n, info.min_n + 3);
    for (int n = info.min_n; n <= hi; ++n) {
      const VerificationReport rep = verify(info.id, n);
      INFO(info.id << " at n=" << n << ": " << rep.witness);
      CHECK(rep.pass);
    }
  }
}

TEST_CASE("spot checks with known values") {
  CHECK(verify("a-divisibility", 5).pass);
  CHECK(verify("a-equals-b", 5).pass);
  CHECK(verify("tangent-evaluation", 5).pass);
  CHECK(verify("secant-evaluation", 4).pass);
  CHECK(verify("involution-gamma", 3).witness.find("gamma=[1, 0]") != std::string::npos);
}

TEST_CASE("figure tables match the transcriptions up to proven typos") {
  compare_against_transcription(make_table("figure-1"), testdata::kFigure1Csv,
                                testdata::figure1_errata());
  compare_against_transcription(make_table("figure-2"), testdata::kFigure2Csv,
                                testdata::figure2_errata());
}

TEST_CASE("published figure-2 typos violate the table's own constraints") {
  // Row 3421: the classification counts must satisfy da* + dd* + 2 valley*
  // = n - 1 = 3. The printed row reads 1, 2, 1.
  CHECK(1 + 2 + 2 * 1 != 3);
  const LinearCounts lin = linear_counts(parse_permutation("3421"), BoundaryConvention::ZeroZero);
  CHECK(lin.da + lin.dd + 2 * lin.valley == 3);
  CHECK(lin.valley == 0);

  // Row 3142: the printed image 3124 also appears as the image of 4312 and
  // fails the transfer its own header states; the regenerated image 4132
  // satisfies it.
  const PatternCounts pat = pattern_counts(parse_permutation("3142"));
  const StarCounts printed = star_counts(parse_permutation("3124"));
  const StarCounts computed = star_counts(parse_permutation("4132"));
  CHECK(pat.res != printed.nest);
  CHECK(pat.res == computed.nest);
  CHECK(psi(parse_permutation("4312")).to_string() == "3124");
  CHECK(psi(parse_permutation("3142")).to_string() == "4132");
}

TEST_CASE("table generation is deterministic") {
  for (const std::string name : {"appendix-a", "appendix-c", "figure-1", "figure-2"}) {
    const std::string once = render_table_csv(make_table(name));
    const std::string twice = render_table_csv(make_table(name));
    CHECK(once == twice);
  }
}
