#include "tsg/selftest.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "tsg/automorphism.hpp"
#include "tsg/catalog.hpp"
#include "tsg/classify.hpp"

namespace tsg {

namespace {

struct Suite {
  std::string name;
  std::function<bool(std::string&)> run;  // detail message on failure
};

std::string num(std::int64_t v) { return std::to_string(v); }

bool contains(const GroupList& list, const GroupDescriptor& g) {
  return std::binary_search(list.groups.begin(), list.groups.end(), g,
                            descriptor_less);
}

bool catalog_regression(std::string& detail) {
  for (const std::int64_t n : catalog_ns()) {
    if (n <= 6) continue;
    const DiffReport diff = verify_against_catalog(n);
    if (!diff.empty()) {
      detail = "diff at n = " + num(n) + ": " +
               num(static_cast<std::int64_t>(diff.missing.size())) +
               " missing, " +
               num(static_cast<std::int64_t>(diff.extra.size())) + " extra";
      return false;
    }
  }
  return true;
}

bool catalog_integrity(std::string& detail) {
  const std::vector<std::int64_t>& ns = catalog_ns();
  std::vector<std::int64_t> expected;
  for (std::int64_t n = 2; n <= 20; ++n) expected.push_back(n);
  expected.push_back(140);
  if (ns != expected) {
    detail = "catalog does not cover exactly n = 2..20 and 140";
    return false;
  }
  for (const std::int64_t n : ns) {
    const CatalogEntry entry = known_groups(n);
    for (std::size_t i = 0; i < entry.groups.size(); ++i) {
      const GroupDescriptor& g = entry.groups[i];
      if (!is_canonical(g) || !(parse_group(display_name(g)) == g)) {
        detail = "row K" + num(n) + " has a non-canonical name";
        return false;
      }
      if (i > 0 && !descriptor_less(entry.groups[i - 1], g)) {
        detail = "row K" + num(n) + " is not strictly sorted";
        return false;
      }
    }
  }
  // The worked-example row: 3 polyhedral + 16 cyclic + 16 dihedral + 3
  // products = 38 groups.
  const CatalogEntry big = known_groups(140);
  std::int64_t poly = 0, cyc = 0, dih = 0, prod = 0;
  for (const GroupDescriptor& g : big.groups) {
    switch (g.family) {
      case Family::Polyhedral: ++poly; break;
      case Family::Cyclic: ++cyc; break;
      case Family::Dihedral: ++dih; break;
      default: ++prod; break;
    }
  }
  if (poly != 3 || cyc != 16 || dih != 16 || prod != 3 ||
      big.groups.size() != 38) {
    detail = "K140 row breakdown is not 3/16/16/3";
    return false;
  }
  return true;
}

bool universe_membership(std::string& detail) {
  for (std::int64_t n = 7; n <= 500; ++n) {
    for (const GroupDescriptor& g : enumerate(n).groups) {
      const bool named_family =
          g.family == Family::Polyhedral || g.family == Family::Cyclic ||
          g.family == Family::Dihedral || g.family == Family::ZxZ ||
          g.family == Family::ZxZSemiZ2 || g.family == Family::ZxD ||
          g.family == Family::DxD;
      if (!named_family) {
        detail = "unexpected family in enumerate(" + num(n) + ")";
        return false;
      }
      const bool four_divides =
          (g.family == Family::Cyclic || g.family == Family::Dihedral) &&
          g.a % 4 == 0;
      if (g.family != Family::Polyhedral && !four_divides &&
          !in_dmdm_universe(g)) {
        detail = display_name(g) + " in enumerate(" + num(n) +
                 ") is outside the D_m x D_m universe";
        return false;
      }
    }
  }
  return true;
}

bool no_d2_exclusion(std::string& detail) {
  for (std::int64_t n = 7; n <= 1000; n += 4) {
    // n = 7, 11, 15, ... are exactly the n = 3 (mod 4) values.
    if (contains(enumerate(n), dihedral(2))) {
      detail = "D2 listed for n = " + num(n);
      return false;
    }
  }
  return true;
}

bool ubiquity(std::string& detail) {
  for (std::int64_t n = 7; n <= 500; ++n) {
    const GroupList list = enumerate(n);
    for (const GroupDescriptor& g :
         {cyclic(2), cyclic(3), dihedral(3)}) {
      if (!contains(list, g)) {
        detail = display_name(g) + " missing from enumerate(" + num(n) + ")";
        return false;
      }
    }
  }
  return true;
}

bool divisor_closure(std::string& detail) {
  for (std::int64_t n = 7; n <= 500; ++n) {
    const GroupList list = enumerate(n);
    for (const GroupDescriptor& g : list.groups) {
      if (g.family != Family::Dihedral) continue;
      if (!contains(list, cyclic(g.a))) {
        detail = "Z" + num(g.a) + " missing although D" + num(g.a) +
                 " is listed for n = " + num(n);
        return false;
      }
      for (std::int64_t d = 3; d <= g.a; ++d) {
        if (g.a % d != 0) continue;
        if (!contains(list, dihedral(d))) {
          detail = "D" + num(d) + " missing although D" + num(g.a) +
                   " is listed for n = " + num(n);
          return false;
        }
      }
    }
  }
  return true;
}

bool product_closure(std::string& detail) {
  for (std::int64_t n = 7; n <= 500; ++n) {
    const GroupList list = enumerate(n);
    for (const GroupDescriptor& g : list.groups) {
      std::vector<GroupDescriptor> subs;
      if (g.family == Family::DxD)
        subs = {canonicalize(zxd(g.a, g.b)), canonicalize(zxd(g.b, g.a)),
                canonicalize(zxz_semi_z2(g.a, g.b))};
      else if (g.family == Family::ZxZSemiZ2)
        subs = {canonicalize(zxz(g.a, g.b))};
      else if (g.family == Family::ZxD)
        subs = {canonicalize(zxz(g.a, g.b))};
      for (const GroupDescriptor& s : subs) {
        if (s.family == Family::Trivial) continue;
        if (!contains(list, s)) {
          detail = display_name(s) + " missing although " + display_name(g) +
                   " is listed for n = " + num(n);
          return false;
        }
      }
    }
  }
  return true;
}

bool parity_refinements(std::string& detail) {
  for (const std::int64_t n : {15, 33, 51}) {
    const GroupList list = enumerate(n);
    if (!contains(list, zxz(3, 3)) || contains(list, zxz_semi_z2(3, 3))) {
      detail = "Z3xZ3 / (Z3xZ3):Z2 parity wrong at n = " + num(n);
      return false;
    }
  }
  for (const std::int64_t n : {24, 60, 96}) {
    const GroupList list = enumerate(n);
    if (!contains(list, zxd(3, 3)) || contains(list, dxd(3, 3))) {
      detail = "Z3xD3 / D3xD3 parity wrong at n = " + num(n);
      return false;
    }
  }
  return true;
}

bool name_round_trip(std::string& detail) {
  for (std::int64_t n = 7; n <= 500; ++n) {
    for (const GroupDescriptor& g : enumerate(n).groups) {
      if (!(parse_group(display_name(g)) == g)) {
        detail = "round trip failed for " + display_name(g);
        return false;
      }
    }
  }
  return true;
}

bool random_descriptor_laws(std::string& detail) {
  std::mt19937_64 rng(20250817);
  std::uniform_int_distribution<int> family_pick(0, 7);
  std::uniform_int_distribution<std::int64_t> param(1, 99);
  const auto odd_param = [&]() { return param(rng) | 1; };

  for (int i = 0; i < 1000; ++i) {
    GroupDescriptor g;
    switch (family_pick(rng)) {
      case 0: g = trivial_group(); break;
      case 1: g = polyhedral(static_cast<PolyKind>(i % 3)); break;
      case 2: g = cyclic(param(rng)); break;
      case 3: g = dihedral(param(rng)); break;
      case 4: g = zxz(odd_param(), odd_param()); break;
      case 5: g = zxz_semi_z2(odd_param(), odd_param()); break;
      case 6: g = zxd(odd_param(), odd_param()); break;
      default: g = dxd(odd_param(), odd_param()); break;
    }
    const GroupDescriptor c = canonicalize(g);
    if (!(canonicalize(c) == c)) {
      detail = "canonicalize not idempotent on " + display_name(g);
      return false;
    }
    if (!is_canonical(c)) {
      detail = "canonicalize(" + display_name(g) + ") is not canonical";
      return false;
    }
    if (group_order(c) != group_order(g)) {
      detail = "order changed canonicalizing " + display_name(g);
      return false;
    }
    if (!(parse_group(display_name(c)) == c)) {
      detail = "round trip failed for " + display_name(c);
      return false;
    }
  }
  return true;
}

void partitions_rec(std::int64_t remaining, std::int64_t max_part,
                    std::vector<std::int64_t>& cur,
                    const std::function<void(const std::vector<std::int64_t>&)>& emit) {
  if (remaining == 0) {
    emit(cur);
    return;
  }
  for (std::int64_t p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, cur, emit);
    cur.pop_back();
  }
}

bool cycle_type_cross_check(std::string& detail) {
  // The direct solver must agree with filtering every cycle type of S_n
  // through is_realizable.
  for (std::int64_t n = 7; n <= 12; ++n) {
    std::map<std::int64_t, std::set<std::string>> filtered;
    std::vector<std::int64_t> cur;
    partitions_rec(n, n, cur, [&](const std::vector<std::int64_t>& parts) {
      std::vector<std::int64_t> cycles;
      std::int64_t fixed = 0;
      for (const std::int64_t p : parts)
        if (p == 1)
          ++fixed;
        else
          cycles.push_back(p);
      const CycleType ct = make_cycle_type(cycles, fixed);
      const std::int64_t m = cycle_type_order(ct);
      if (m >= 2 && is_realizable(ct, m).realizable)
        filtered[m].insert(display_cycle_type(ct));
    });
    for (std::int64_t m = 2; m <= n; ++m) {
      std::set<std::string> solved;
      for (const CycleType& ct : realizable_cycle_types(n, m)) {
        if (cycle_type_order(ct) != m) {
          detail = "solver emitted a wrong-order type for n = " + num(n);
          return false;
        }
        solved.insert(display_cycle_type(ct));
      }
      const auto it = filtered.find(m);
      const std::set<std::string> expect =
          it == filtered.end() ? std::set<std::string>{} : it->second;
      if (solved != expect) {
        detail = "solver/filter mismatch at n = " + num(n) +
                 ", m = " + num(m);
        return false;
      }
    }
  }
  return true;
}

bool determinism(std::string& detail) {
  const std::string a = emit_table(7, 60, TableFormat::Json);
  const std::string b = emit_table(7, 60, TableFormat::Json);
  if (a != b) {
    detail = "emit_table(7, 60, json) is not reproducible";
    return false;
  }
  for (const std::int64_t n : {7, 20, 140}) {
    if (!(enumerate(n).groups == enumerate(n).groups)) {
      detail = "enumerate(" + num(n) + ") is not reproducible";
      return false;
    }
  }
  return true;
}

}  // namespace

int run_selftest(std::ostream& out) {
  const std::vector<Suite> suites = {
      {"catalog regression (n = 7..20, 140)", catalog_regression},
      {"catalog integrity", catalog_integrity},
      {"universe membership (7 <= n <= 500)", universe_membership},
      {"No-D2 exclusion (n = 3 mod 4, 7 <= n <= 1000)", no_d2_exclusion},
      {"Z2/Z3/D3 ubiquity (7 <= n <= 500)", ubiquity},
      {"divisor closure (7 <= n <= 500)", divisor_closure},
      {"product closure (7 <= n <= 500)", product_closure},
      {"parity refinements (n = 15,33,51,24,60,96)", parity_refinements},
      {"name round trip over enumerate (7 <= n <= 500)", name_round_trip},
      {"canonicalize laws on 1000 random descriptors", random_descriptor_laws},
      {"cycle-type solver vs filter (7 <= n <= 12)", cycle_type_cross_check},
      {"deterministic output", determinism},
  };

  int failures = 0;
  for (const Suite& suite : suites) {
    std::string detail;
    bool ok = false;
    try {
      ok = suite.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    if (ok) {
      out << "PASS " << suite.name << "\n";
    } else {
      ++failures;
      out << "FAIL " << suite.name << ": " << detail << "\n";
    }
  }
  out << (failures == 0 ? "all suites passed" : "suites failed") << "\n";
  return failures;
}

}  // namespace tsg
