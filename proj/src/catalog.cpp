#include "tsg/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <iterator>
#include <map>
#include <sstream>

#include "json.hpp"
#include "tsg/classify.hpp"

namespace tsg {

namespace detail {
extern const char* embedded_catalog_text;  // generated from data/catalog.txt
}

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

bool ieq(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::tolower(static_cast<unsigned char>(a[i])) !=
        std::tolower(static_cast<unsigned char>(b[i])))
      return false;
  return true;
}

[[noreturn]] void line_fail(int lineno, const std::string& msg) {
  throw DomainError("catalog line " + std::to_string(lineno) + ": " + msg);
}

const std::map<std::int64_t, CatalogEntry>& catalog_map() {
  static const std::map<std::int64_t, CatalogEntry> rows = [] {
    std::map<std::int64_t, CatalogEntry> m;
    for (CatalogEntry& e : parse_catalog(detail::embedded_catalog_text)) {
      const std::int64_t n = e.n;
      m.emplace(n, std::move(e));
    }
    return m;
  }();
  return rows;
}

}  // namespace

std::vector<CatalogEntry> parse_catalog(std::string_view text) {
  std::vector<CatalogEntry> out;
  std::map<std::int64_t, bool> seen;
  int lineno = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t nl = text.find('\n', start);
    std::string_view raw = text.substr(
        start, nl == std::string_view::npos ? text.size() - start : nl - start);
    start = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++lineno;

    if (const std::size_t hash = raw.find('#'); hash != std::string_view::npos)
      raw = raw.substr(0, hash);
    const std::string line = trim(raw);
    if (line.empty()) continue;

    if (line[0] != 'K') line_fail(lineno, "rows must start with 'K'");
    std::size_t p = 1;
    std::int64_t n = 0;
    if (p >= line.size() || !std::isdigit(static_cast<unsigned char>(line[p])))
      line_fail(lineno, "expected a number after 'K'");
    while (p < line.size() && std::isdigit(static_cast<unsigned char>(line[p])))
      n = n * 10 + (line[p++] - '0');
    if (p >= line.size() || line[p] != ':')
      line_fail(lineno, "expected ':' after the row label");
    ++p;
    if (n < 2) line_fail(lineno, "rows need n >= 2");
    if (seen[n]) line_fail(lineno, "duplicate row for n = " + std::to_string(n));
    seen[n] = true;

    CatalogEntry entry;
    entry.n = n;
    entry.source =
        n <= 20 ? CatalogSource::PublishedTable : CatalogSource::WorkedExample;

    const std::string rest = trim(line.substr(p));
    if (!ieq(rest, "none")) {
      std::size_t tok_start = 0;
      while (tok_start <= rest.size()) {
        const std::size_t comma = rest.find(',', tok_start);
        const std::string token =
            trim(rest.substr(tok_start, comma == std::string::npos
                                            ? rest.size() - tok_start
                                            : comma - tok_start));
        tok_start = comma == std::string::npos ? rest.size() + 1 : comma + 1;
        if (token.empty()) line_fail(lineno, "empty group name");
        GroupDescriptor g;
        try {
          g = parse_group(token);
        } catch (const std::exception& e) {
          line_fail(lineno, std::string("bad group name '") + token +
                                "': " + e.what());
        }
        if (display_name(g) != token)
          line_fail(lineno, "name '" + token + "' is not canonical (use '" +
                                display_name(g) + "')");
        entry.groups.push_back(g);
      }
    }
    for (std::size_t i = 1; i < entry.groups.size(); ++i)
      if (!descriptor_less(entry.groups[i - 1], entry.groups[i]))
        line_fail(lineno, "groups are not in sorted order at '" +
                              display_name(entry.groups[i]) + "'");
    out.push_back(std::move(entry));
  }
  return out;
}

std::string_view catalog_text() { return detail::embedded_catalog_text; }

const std::vector<std::int64_t>& catalog_ns() {
  static const std::vector<std::int64_t> ns = [] {
    std::vector<std::int64_t> v;
    for (const auto& [n, entry] : catalog_map()) v.push_back(n);
    return v;
  }();
  return ns;
}

bool catalog_has(std::int64_t n) { return catalog_map().count(n) > 0; }

CatalogEntry known_groups(std::int64_t n) {
  const auto it = catalog_map().find(n);
  if (it == catalog_map().end())
    throw NotFoundError("no catalog row for n = " + std::to_string(n) +
                        "; the catalog covers n = 2..20 and 140");
  return it->second;
}

DiffReport verify_against_catalog(std::int64_t n) {
  const CatalogEntry entry = known_groups(n);
  if (n <= 6)
    throw DomainError("catalog rows with n <= 6 are the classifier's own "
                      "source; diffing them is vacuous");
  const GroupList produced = enumerate(n);
  DiffReport report;
  report.n = n;
  std::set_difference(entry.groups.begin(), entry.groups.end(),
                      produced.groups.begin(), produced.groups.end(),
                      std::back_inserter(report.missing), descriptor_less);
  std::set_difference(produced.groups.begin(), produced.groups.end(),
                      entry.groups.begin(), entry.groups.end(),
                      std::back_inserter(report.extra), descriptor_less);
  return report;
}

namespace {

// Table-1 style column buckets.
enum Column { kPoly = 0, kCyclicDihedral = 1, kZxZ = 2, kProduct = 3 };

Column column_of(Family f) {
  switch (f) {
    case Family::Polyhedral:
      return kPoly;
    case Family::Trivial:
    case Family::Cyclic:
    case Family::Dihedral:
      return kCyclicDihedral;
    case Family::ZxZ:
    case Family::ZxZSemiZ2:
      return kZxZ;
    case Family::ZxD:
    case Family::DxD:
      return kProduct;
  }
  throw ContractError("unhandled family in column_of");
}

std::string join(const std::vector<std::string>& parts,
                 const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace

std::string emit_table(std::int64_t n_from, std::int64_t n_to,
                       TableFormat format, bool include_trivial, bool pretty) {
  if (n_from < 2)
    throw DomainError("table range starts at n >= 2, got " +
                      std::to_string(n_from));
  if (n_to < n_from)
    throw DomainError("empty table range: " + std::to_string(n_from) + ".." +
                      std::to_string(n_to));

  std::ostringstream out;
  if (format == TableFormat::Markdown) {
    if (pretty)
      out << "| Graph | Polyhedral Groups | ℤm and Dm | ℤr × "
             "ℤs and (ℤr × ℤs) ⋊ ℤ2 | ℤr "
             "× Ds and Dr × Ds |\n";
    else
      out << "| Graph | Polyhedral Groups | Zm and Dm | ZrxZs and (ZrxZs):Z2 "
             "| ZrxDs and DrxDs |\n";
    out << "|---|---|---|---|---|\n";
  } else if (format == TableFormat::Csv) {
    out << "n,polyhedral,cyclic_dihedral,zxz_family,product_dihedral\n";
  }

  for (std::int64_t n = n_from; n <= n_to; ++n) {
    const std::vector<ClassificationResult> results =
        enumerate_results(n, include_trivial);
    if (format == TableFormat::Json) {
      nlohmann::ordered_json row;
      row["n"] = n;
      row["groups"] = nlohmann::ordered_json::array();
      for (const ClassificationResult& r : results) {
        nlohmann::ordered_json item;
        item["name"] = display_name(r.group);
        item["family"] = family_string(r.group.family);
        item["order"] = group_order(r.group);
        item["clause"] = clause_string(r.clause);
        row["groups"].push_back(std::move(item));
      }
      out << row.dump() << "\n";
      continue;
    }

    std::vector<std::vector<std::string>> cells(4);
    for (const ClassificationResult& r : results)
      cells[column_of(r.group.family)].push_back(
          pretty && format == TableFormat::Markdown ? pretty_name(r.group)
                                                    : display_name(r.group));
    if (format == TableFormat::Markdown) {
      out << "| K_" << n;
      for (const auto& cell : cells)
        out << " | " << (cell.empty() ? "None" : join(cell, ", "));
      out << " |\n";
    } else {
      out << n;
      for (const auto& cell : cells)
        out << "," << (cell.empty() ? "None" : join(cell, ";"));
      out << "\n";
    }
  }
  return out.str();
}

}  // namespace tsg
