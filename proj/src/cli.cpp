// CLI surface. Verbs: classify, check, auto, table, selftest. Exit code 1
// encodes a negative mathematical answer for check/auto so scripts can branch
// on it; 2 is reserved for usage and domain errors.
#include "tsg/cli.hpp"

#include <charconv>
#include <cstdint>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tsg/automorphism.hpp"
#include "tsg/catalog.hpp"
#include "tsg/classify.hpp"
#include "tsg/errors.hpp"
#include "tsg/group.hpp"
#include "tsg/selftest.hpp"

namespace tsg {

namespace {

TableFormat table_format(const std::string& name) {
  if (name == "md") return TableFormat::Markdown;
  if (name == "csv") return TableFormat::Csv;
  return TableFormat::Json;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (const char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

std::vector<std::int64_t> parse_image_list(const std::string& text) {
  std::vector<std::int64_t> images;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    std::size_t lo = pos, hi = comma;
    while (lo < hi && text[lo] == ' ') ++lo;
    while (hi > lo && text[hi - 1] == ' ') --hi;
    std::int64_t value = 0;
    const auto res = std::from_chars(text.data() + lo, text.data() + hi, value);
    if (lo == hi || res.ec != std::errc{} || res.ptr != text.data() + hi)
      throw ParseError("expected a comma-separated list of vertex images", lo);
    images.push_back(value);
    pos = comma + 1;
  }
  return images;
}

int emit_check(const ClassificationResult& res, const std::string& format,
               bool pretty, std::ostream& out) {
  if (format == "json") {
    nlohmann::ordered_json j;
    j["n"] = res.n;
    j["group"] = display_name(res.group);
    j["family"] = family_string(res.group.family);
    j["order"] = group_order(res.group);
    j["realizable"] = res.realizable;
    j["clause"] = clause_string(res.clause);
    j["note"] = res.note;
    out << j.dump() << "\n";
  } else if (format == "csv") {
    out << "n,group,family,order,realizable,clause,note\n";
    out << res.n << "," << csv_field(display_name(res.group)) << ","
        << family_string(res.group.family) << "," << group_order(res.group)
        << "," << (res.realizable ? "true" : "false") << ","
        << clause_string(res.clause) << "," << csv_field(res.note) << "\n";
  } else {
    const std::string name =
        pretty ? pretty_name(res.group) : display_name(res.group);
    out << "K_" << res.n << ": " << name << " is "
        << (res.realizable ? "realizable" : "not realizable") << " ("
        << clause_string(res.clause) << ": " << res.note << ")\n";
  }
  return res.realizable ? 0 : 1;
}

int emit_auto(std::int64_t n, std::int64_t m, const CycleType& ct,
              const AutomorphismResult& res, const std::string& format,
              std::ostream& out) {
  if (format == "json") {
    nlohmann::ordered_json j;
    j["n"] = n;
    j["m"] = m;
    j["cycle_type"] = display_cycle_type(ct);
    j["realizable"] = res.realizable;
    j["part"] = res.part;
    j["note"] = res.note;
    out << j.dump() << "\n";
  } else if (format == "csv") {
    out << "n,m,cycle_type,realizable,part,note\n";
    out << n << "," << m << "," << csv_field(display_cycle_type(ct)) << ","
        << (res.realizable ? "true" : "false") << "," << res.part << ","
        << csv_field(res.note) << "\n";
  } else {
    if (!res.realizable)
      out << "not realizable (" << res.note << ")\n";
    else if (res.part > 0)
      out << "realizable, part (" << res.part << ")\n";
    else
      out << "realizable (" << res.note << ")\n";
  }
  return res.realizable ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{
      "Orientation-preserving topological symmetry groups of embeddings "
      "of the complete graph K_n in the 3-sphere"};
  app.require_subcommand(1);
  const auto format_check = CLI::IsMember({"md", "csv", "json"});

  std::int64_t classify_n = 0;
  std::string classify_format = "json";
  bool classify_trivial = false, classify_pretty = false;
  CLI::App* classify = app.add_subcommand(
      "classify", "List every realizable symmetry group of K_n");
  classify->add_option("n", classify_n, "vertex count (n >= 2)")->required();
  classify->add_option("--format", classify_format, "md, csv, or json")
      ->check(format_check);
  classify->add_flag("--include-trivial", classify_trivial,
                     "also list the trivial group");
  classify->add_flag("--pretty", classify_pretty,
                     "Unicode group names (markdown only)");

  std::int64_t check_n = 0;
  std::string check_group;
  std::string check_format = "json";
  bool check_pretty = false;
  CLI::App* check_cmd = app.add_subcommand(
      "check", "Decide whether one group is realizable for K_n");
  check_cmd->add_option("n", check_n, "vertex count (n >= 2)")->required();
  check_cmd->add_option("group", check_group, "group name, e.g. \"(Z3xZ3):Z2\"")
      ->required();
  check_cmd->add_option("--format", check_format, "md, csv, or json")
      ->check(format_check);
  check_cmd->add_flag("--pretty", check_pretty,
                      "Unicode group names (markdown only)");

  std::int64_t auto_n = 0, auto_m = 0;
  std::string auto_spec;
  std::string auto_format = "md";
  CLI::App* auto_cmd = app.add_subcommand(
      "auto",
      "Decide whether an order-m automorphism of K_n is induced by a "
      "homeomorphism for some embedding");
  auto_cmd->add_option("n", auto_n, "vertex count (n > 6)")->required();
  auto_cmd
      ->add_option("automorphism", auto_spec,
                   "cycle type \"[9,3]+f0\" or 0-indexed image list \"1,2,0\"")
      ->required();
  auto_cmd->add_option("m", auto_m, "order of the automorphism")->required();
  auto_cmd->add_option("--format", auto_format, "md, csv, or json")
      ->check(format_check);

  std::int64_t table_from = 0, table_to = 0;
  std::string table_format_name = "md";
  bool table_trivial = false, table_pretty = false;
  CLI::App* table = app.add_subcommand(
      "table", "Emit the classification table for a range of n");
  table->add_option("from", table_from, "first n")->required();
  table->add_option("to", table_to, "last n")->required();
  table->add_option("--format", table_format_name, "md, csv, or json")
      ->check(format_check);
  table->add_flag("--include-trivial", table_trivial,
                  "also list the trivial group");
  table->add_flag("--pretty", table_pretty,
                  "Unicode group names (markdown only)");

  CLI::App* selftest = app.add_subcommand(
      "selftest", "Run the built-in catalog regression and property suites");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (app.got_subcommand(classify)) {
      out << emit_table(classify_n, classify_n, table_format(classify_format),
                        classify_trivial, classify_pretty);
      return 0;
    }
    if (app.got_subcommand(check_cmd)) {
      const GroupDescriptor g = parse_group(check_group);
      return emit_check(check(check_n, g), check_format, check_pretty, out);
    }
    if (app.got_subcommand(auto_cmd)) {
      CycleType ct;
      if (!auto_spec.empty() && auto_spec.front() == '[')
        ct = parse_cycle_type(auto_spec);
      else
        ct = cycle_type_of(parse_image_list(auto_spec));
      if (ct.n != auto_n)
        throw DomainError("automorphism acts on " + std::to_string(ct.n) +
                          " vertices but n = " + std::to_string(auto_n));
      return emit_auto(auto_n, auto_m, ct, is_realizable(ct, auto_m),
                       auto_format, out);
    }
    if (app.got_subcommand(table)) {
      out << emit_table(table_from, table_to, table_format(table_format_name),
                        table_trivial, table_pretty);
      return 0;
    }
    if (app.got_subcommand(selftest))
      return run_selftest(out) == 0 ? 0 : 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace tsg
