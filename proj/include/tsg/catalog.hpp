// Embedded ground-truth catalog: the known symmetry-group lists for K_2..K_20
// plus the fully worked K_140 row. The data lives in data/catalog.txt (one
// auditable line per n, in the ASCII group grammar) and is compiled into the
// library. The diffing entry point pits the classifier against the catalog;
// emit_table renders either source as markdown, csv, or JSON lines.
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "tsg/group.hpp"

namespace tsg {

enum class CatalogSource { PublishedTable, WorkedExample };

struct CatalogEntry {
  std::int64_t n = 0;
  std::vector<GroupDescriptor> groups;  // canonical, sorted, duplicate-free
  CatalogSource source = CatalogSource::PublishedTable;
};

// Parses catalog text: '#' comments, blank lines, and rows of the form
// "K<n>: <name>(,<name>)*" or "K<n>: none". Every name must be canonical and
// rows must be strictly sorted; violations throw DomainError with the line
// number.
std::vector<CatalogEntry> parse_catalog(std::string_view text);

std::string_view catalog_text();          // the embedded file, verbatim
const std::vector<std::int64_t>& catalog_ns();
bool catalog_has(std::int64_t n);
CatalogEntry known_groups(std::int64_t n);  // NotFoundError when absent

struct DiffReport {
  std::int64_t n = 0;
  std::vector<GroupDescriptor> missing;  // cataloged but not produced
  std::vector<GroupDescriptor> extra;    // produced but not cataloged

  bool empty() const { return missing.empty() && extra.empty(); }
};

// Compares enumerate(n) against the catalog row. Requires a cataloged n > 6;
// the n <= 6 rows are the classifier's own source, so diffing them is
// vacuous and throws DomainError.
DiffReport verify_against_catalog(std::int64_t n);

enum class TableFormat { Markdown, Csv, Json };

// One row per n in [n_from, n_to], grouped into the four table columns
// (polyhedral / cyclic and dihedral / ZxZ family / ZxD and DxD), with "None"
// for empty cells. Json emits one {"n", "groups"} object per line instead.
std::string emit_table(std::int64_t n_from, std::int64_t n_to,
                       TableFormat format, bool include_trivial = false,
                       bool pretty = false);

}  // namespace tsg
