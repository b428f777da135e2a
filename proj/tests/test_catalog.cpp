// Embedded catalog rows, the catalog text parser, the classifier diff, and
// table emission with its pinned cell formats.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "doctest.h"
#include "tsg/catalog.hpp"
#include "tsg/classify.hpp"
#include "tsg/errors.hpp"

using namespace tsg;

TEST_CASE("catalog covers n = 2..20 and the worked example") {
  std::vector<std::int64_t> expected;
  for (std::int64_t n = 2; n <= 20; ++n) expected.push_back(n);
  expected.push_back(140);
  CHECK(catalog_ns() == expected);
  CHECK(catalog_has(7));
  CHECK(catalog_has(140));
  CHECK_FALSE(catalog_has(21));
  CHECK_FALSE(catalog_has(1));
}

TEST_CASE("published rows") {
  CHECK(known_groups(2).groups == std::vector<GroupDescriptor>{cyclic(2)});
  CHECK(known_groups(3).groups ==
        std::vector<GroupDescriptor>{cyclic(3), dihedral(3)});
  CHECK(known_groups(6).groups.size() == 12);
  CHECK(known_groups(2).source == CatalogSource::PublishedTable);
  CHECK(known_groups(20).source == CatalogSource::PublishedTable);
  CHECK(known_groups(140).source == CatalogSource::WorkedExample);
  CHECK_THROWS_AS(known_groups(21), NotFoundError);
  CHECK_THROWS_AS(known_groups(139), NotFoundError);
  CHECK_THROWS_AS(known_groups(1), NotFoundError);
}

TEST_CASE("worked-example row has the documented shape") {
  const CatalogEntry big = known_groups(140);
  REQUIRE(big.groups.size() == 38);
  std::int64_t poly = 0, cyc = 0, dih = 0, prod = 0;
  for (const GroupDescriptor& g : big.groups) {
    switch (g.family) {
      case Family::Polyhedral: ++poly; break;
      case Family::Cyclic: ++cyc; break;
      case Family::Dihedral: ++dih; break;
      default: ++prod; break;
    }
  }
  CHECK(poly == 3);
  CHECK(cyc == 16);
  CHECK(dih == 16);
  CHECK(prod == 3);
  CHECK(std::count(big.groups.begin(), big.groups.end(), zxd(5, 7)) == 1);
  CHECK(std::count(big.groups.begin(), big.groups.end(), zxd(7, 5)) == 1);
  CHECK(std::count(big.groups.begin(), big.groups.end(), dxd(5, 7)) == 1);
}

TEST_CASE("rows are canonical and strictly sorted") {
  for (const std::int64_t n : catalog_ns()) {
    const CatalogEntry entry = known_groups(n);
    for (std::size_t i = 0; i < entry.groups.size(); ++i) {
      CHECK(is_canonical(entry.groups[i]));
      if (i > 0) CHECK(descriptor_less(entry.groups[i - 1], entry.groups[i]));
    }
  }
}

TEST_CASE("classifier reproduces every catalog row above the boundary") {
  for (const std::int64_t n : catalog_ns()) {
    if (n <= 6) continue;
    const DiffReport diff = verify_against_catalog(n);
    CAPTURE(n);
    CHECK(diff.empty());
    CHECK(diff.missing.empty());
    CHECK(diff.extra.empty());
  }
  CHECK_THROWS_AS(verify_against_catalog(6), DomainError);
  CHECK_THROWS_AS(verify_against_catalog(999), NotFoundError);
}

TEST_CASE("catalog text parser accepts comments, blanks, and none-rows") {
  const auto rows = parse_catalog(
      "# leading comment\n"
      "\n"
      "K7: Z2, Z3  # trailing comment\n"
      "K9: none\n"
      "K21: Z2\n");
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].n == 7);
  CHECK(rows[0].groups == std::vector<GroupDescriptor>{cyclic(2), cyclic(3)});
  CHECK(rows[1].n == 9);
  CHECK(rows[1].groups.empty());
  CHECK(rows[2].source == CatalogSource::WorkedExample);
  CHECK(rows[0].source == CatalogSource::PublishedTable);
}

TEST_CASE("catalog text parser rejects malformed rows") {
  CHECK_THROWS_AS(parse_catalog("K7: Z9xZ3\n"), DomainError);  // not canonical
  CHECK_THROWS_AS(parse_catalog("K7: Z2\nK7: Z3\n"), DomainError);  // dup n
  CHECK_THROWS_AS(parse_catalog("K7: Z3, Z2\n"), DomainError);  // unsorted
  CHECK_THROWS_AS(parse_catalog("K7: Z2, Z2\n"), DomainError);  // repeated
  CHECK_THROWS_AS(parse_catalog("Q7: Z2\n"), DomainError);      // bad prefix
  CHECK_THROWS_AS(parse_catalog("K1: Z2\n"), DomainError);      // n < 2
  CHECK_THROWS_AS(parse_catalog("K7 Z2\n"), DomainError);       // no colon
  CHECK_THROWS_AS(parse_catalog("K7: Q9\n"), DomainError);      // bad name
  try {
    parse_catalog("K7: Z2\nK8: Z3, Z2\n");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("embedded text parses to the served rows") {
  const auto rows = parse_catalog(catalog_text());
  REQUIRE(rows.size() == catalog_ns().size());
  for (const CatalogEntry& row : rows)
    CHECK(known_groups(row.n).groups == row.groups);
}

TEST_CASE("markdown table emission") {
  const std::string table = emit_table(7, 7, TableFormat::Markdown);
  CHECK(table ==
        "| Graph | Polyhedral Groups | Zm and Dm | ZrxZs and (ZrxZs):Z2 | "
        "ZrxDs and DrxDs |\n"
        "|---|---|---|---|---|\n"
        "| K_7 | None | Z2, Z3, Z5, Z7, D3, D5, D7 | None | None |\n");
  const std::string t18 = emit_table(18, 18, TableFormat::Markdown);
  CHECK(t18.find("| K_18 | None | Z2, Z3, Z5, Z6, Z9, Z15, Z17, Z18, D2, D3, "
                 "D5, D6, D9, D15, D17, D18 | Z3xZ3, (Z3xZ3):Z2 | Z3xD3, "
                 "D3xD3 |") != std::string::npos);
}

TEST_CASE("csv table emission") {
  const std::string table = emit_table(9, 9, TableFormat::Csv);
  CHECK(table ==
        "n,polyhedral,cyclic_dihedral,zxz_family,product_dihedral\n"
        "9,None,Z2;Z3;Z7;Z9;D2;D3;D7;D9,Z3xZ3;(Z3xZ3):Z2,None\n");
}

TEST_CASE("json table emission") {
  const std::string line = emit_table(2, 2, TableFormat::Json);
  CHECK(line ==
        "{\"n\":2,\"groups\":[{\"name\":\"Z2\",\"family\":\"cyclic\","
        "\"order\":2,\"clause\":\"Catalog\"}]}\n");
  const std::string range = emit_table(7, 9, TableFormat::Json);
  CHECK(std::count(range.begin(), range.end(), '\n') == 3);
}

TEST_CASE("pretty markdown uses the Unicode grammar") {
  const std::string table = emit_table(9, 9, TableFormat::Markdown, false, true);
  CHECK(table.find("ℤ" "3 × ℤ" "3") != std::string::npos);
  CHECK(table.find("⋊") != std::string::npos);
  // csv stays ASCII even when pretty is requested.
  const std::string csv = emit_table(9, 9, TableFormat::Csv, false, true);
  CHECK(csv.find("ℤ") == std::string::npos);
}

TEST_CASE("include_trivial adds a Z1 cell") {
  const std::string table = emit_table(7, 7, TableFormat::Markdown, true);
  CHECK(table.find("| K_7 | None | Z1, Z2, Z3, Z5, Z7, D3, D5, D7 | None | "
                   "None |") != std::string::npos);
}

TEST_CASE("table range validation and determinism") {
  CHECK_THROWS_AS(emit_table(1, 5, TableFormat::Markdown), DomainError);
  CHECK_THROWS_AS(emit_table(9, 7, TableFormat::Markdown), DomainError);
  CHECK(emit_table(7, 20, TableFormat::Json) ==
        emit_table(7, 20, TableFormat::Json));
}
