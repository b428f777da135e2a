#include "tsg/classify.hpp"

#include <algorithm>
#include <array>

#include "tsg/catalog.hpp"

namespace tsg {

namespace {

std::string num(std::int64_t v) { return std::to_string(v); }

ClassificationResult make_result(std::int64_t n, GroupDescriptor g,
                                 bool realizable, Theorem t, int part,
                                 std::string note) {
  return {n, std::move(g), realizable, ClauseRef{t, part}, std::move(note)};
}

void require_large_n(std::int64_t n) {
  if (n <= 6)
    throw DomainError("the n > 6 decision procedures do not apply to n = " +
                      num(n) + "; use the catalog rows instead");
}

struct ResidueRule {
  std::int64_t modulus;
  std::vector<std::int64_t> residues;
  Theorem theorem;
};

const ResidueRule& polyhedral_rule(PolyKind kind) {
  static const std::array<ResidueRule, 3> rules = {{
      {12, {0, 1, 4, 5, 8}, Theorem::A4Thm},
      {24, {0, 4, 8, 12, 20}, Theorem::S4Thm},
      {60, {0, 1, 5, 20}, Theorem::A5Thm},
  }};
  return rules[static_cast<std::size_t>(kind)];
}

std::string residue_set_string(const std::vector<std::int64_t>& rs) {
  std::string out = "{";
  for (std::size_t i = 0; i < rs.size(); ++i) {
    if (i) out += ",";
    out += num(rs[i]);
  }
  return out + "}";
}

}  // namespace

std::string clause_string(const ClauseRef& c) {
  std::string base;
  switch (c.theorem) {
    case Theorem::CyclicDihedral: base = "Thm1"; break;
    case Theorem::ZxZ: base = "Thm2"; break;
    case Theorem::ProductDihedral: base = "Thm3"; break;
    case Theorem::A4Thm: return "A4Thm";
    case Theorem::S4Thm: return "S4Thm";
    case Theorem::A5Thm: return "A5Thm";
    case Theorem::NoD2Lemma: return "NoD2";
    case Theorem::Lemma4_1: return "Lemma4.1";
    case Theorem::Lemma5_5: return "Lemma5.5";
    case Theorem::SubgroupLemma: return "Subgroup";
    case Theorem::Catalog: return "Catalog";
  }
  if (c.part > 0) base += "(" + std::to_string(c.part) + ")";
  return base;
}

ClassificationResult check_polyhedral(std::int64_t n, PolyKind kind) {
  if (n < 4)
    throw DomainError("polyhedral realizability needs n >= 4, got " + num(n));
  const ResidueRule& rule = polyhedral_rule(kind);
  const std::int64_t r = n % rule.modulus;
  const bool hit =
      std::find(rule.residues.begin(), rule.residues.end(), r) !=
      rule.residues.end();
  const std::string set = residue_set_string(rule.residues);
  std::string note = num(n) + " mod " + num(rule.modulus) + " = " + num(r) +
                     (hit ? " is in " : " is not in ") + set;
  return make_result(n, polyhedral(kind), hit, rule.theorem, 0,
                     std::move(note));
}

ClassificationResult check_cyclic_dihedral(std::int64_t n, std::int64_t m,
                                           Family kind) {
  require_large_n(n);
  if (m < 2) throw DomainError("m >= 2 required, got " + num(m));
  if (kind != Family::Cyclic && kind != Family::Dihedral)
    throw ContractError("check_cyclic_dihedral expects a cyclic or dihedral kind");
  const GroupDescriptor g = kind == Family::Cyclic ? cyclic(m) : dihedral(m);

  if (m >= 4 && m % 2 == 0) {
    if (n % m == 0)
      return make_result(n, g, true, Theorem::CyclicDihedral, 1,
                         "m = " + num(m) + " is even and divides n = " + num(n));
    return make_result(n, g, false, Theorem::CyclicDihedral, 0,
                       "m = " + num(m) + " is even but does not divide n = " +
                           num(n));
  }
  if (m % 2 != 0) {  // m odd >= 3
    const std::int64_t r = n % m;
    if (r <= 3)
      return make_result(n, g, true, Theorem::CyclicDihedral, 2,
                         num(n) + " mod " + num(m) + " = " + num(r) +
                             " is at most 3");
    return make_result(n, g, false, Theorem::CyclicDihedral, 0,
                       num(n) + " mod " + num(m) + " = " + num(r) +
                           " exceeds 3");
  }
  // m == 2
  if (kind == Family::Cyclic)
    return make_result(n, g, true, Theorem::CyclicDihedral, 4,
                       "Z2 occurs for every n > 6");
  if (n % 4 <= 2)
    return make_result(n, g, true, Theorem::CyclicDihedral, 3,
                       num(n) + " mod 4 = " + num(n % 4) + " is at most 2");
  return make_result(n, g, false, Theorem::NoD2Lemma, 0,
                     "n = " + num(n) +
                         " has the form 4r+3, which excludes D2");
}

ClassificationResult check_zxz(std::int64_t n, const GroupDescriptor& g) {
  require_large_n(n);
  if (g.family != Family::ZxZ && g.family != Family::ZxZSemiZ2)
    throw ContractError("check_zxz expects a ZxZ-family descriptor, got " +
                        display_name(g));
  if (!is_canonical(g))
    throw ContractError("check_zxz expects a canonical descriptor, got " +
                        display_name(g) +
                        " (canonicalize collapses gcd = 1 inputs first)");
  const std::int64_t r = g.a;  // r = gcd(r, s) > 1 in canonical form
  const std::int64_t rs = r * g.b;
  const bool semi = g.family == Family::ZxZSemiZ2;
  const bool is33 = r == 3 && g.b == 3;

  if (n % rs == 0)
    return make_result(n, g, true, Theorem::ZxZ, 1,
                       "rs = " + num(rs) + " divides n = " + num(n));
  if (r == 3 && (n - 3) % rs == 0)
    return make_result(n, g, true, Theorem::ZxZ, 2,
                       "gcd(r,s) = 3 and rs = " + num(rs) +
                           " divides n-3 = " + num(n - 3));
  if (is33 && !semi && (n - 6) % 9 == 0)
    return make_result(n, g, true, Theorem::ZxZ, 3,
                       "9 divides n-6 = " + num(n - 6));
  if (is33 && semi && (n - 6) % 18 == 0)
    return make_result(n, g, true, Theorem::ZxZ, 4,
                       "18 divides n-6 = " + num(n - 6));

  std::string note = "rs = " + num(rs) + " divides neither n = " + num(n) +
                     " nor n-3 = " + num(n - 3);
  if (is33 && semi && (n - 6) % 9 == 0)
    return make_result(n, g, false, Theorem::Lemma4_1, 0,
                       "9 divides n-6 = " + num(n - 6) +
                           " but 18 does not, which excludes (Z3xZ3):Z2");
  if (is33)
    note += semi ? "; 18 does not divide n-6 = " + num(n - 6)
                 : "; 9 does not divide n-6 = " + num(n - 6);
  return make_result(n, g, false, Theorem::ZxZ, 0, std::move(note));
}

ClassificationResult check_product_dihedral(std::int64_t n,
                                            const GroupDescriptor& g) {
  require_large_n(n);
  if (g.family != Family::ZxD && g.family != Family::DxD)
    throw ContractError(
        "check_product_dihedral expects a ZxD or DxD descriptor, got " +
        display_name(g));
  if (!is_canonical(g))
    throw ContractError(
        "check_product_dihedral expects a canonical descriptor, got " +
        display_name(g));
  const std::int64_t rs2 = 2 * g.a * g.b;
  const bool dxd_family = g.family == Family::DxD;
  const bool is33 = g.a == 3 && g.b == 3;

  if (n % rs2 == 0)
    return make_result(n, g, true, Theorem::ProductDihedral, 1,
                       "2rs = " + num(rs2) + " divides n = " + num(n));
  if (is33 && !dxd_family && (n - 6) % 18 == 0)
    return make_result(n, g, true, Theorem::ProductDihedral, 2,
                       "18 divides n-6 = " + num(n - 6));
  if (is33 && dxd_family && (n - 6) % 36 == 0)
    return make_result(n, g, true, Theorem::ProductDihedral, 3,
                       "36 divides n-6 = " + num(n - 6));

  if (is33 && dxd_family && (n - 6) % 18 == 0)
    return make_result(n, g, false, Theorem::Lemma5_5, 0,
                       "18 divides n-6 = " + num(n - 6) +
                           " but 36 does not, which excludes D3xD3");
  std::string note = "2rs = " + num(rs2) + " does not divide n = " + num(n);
  if (is33)
    note += dxd_family ? "; 36 does not divide n-6 = " + num(n - 6)
                       : "; 18 does not divide n-6 = " + num(n - 6);
  return make_result(n, g, false, Theorem::ProductDihedral, 0,
                     std::move(note));
}

ClassificationResult check(std::int64_t n, const GroupDescriptor& g0) {
  if (n < 2) throw DomainError("n >= 2 required, got " + num(n));
  const GroupDescriptor g = canonicalize(g0);
  std::string prefix;
  if (!(g == g0))
    prefix = display_name(g0) + " is isomorphic to " + display_name(g) + "; ";

  ClassificationResult res;
  if (n <= 6) {
    const CatalogEntry row = known_groups(n);
    const bool member =
        std::find(row.groups.begin(), row.groups.end(), g) != row.groups.end();
    res = make_result(n, g, member, Theorem::Catalog, 0,
                      member ? "listed in the K" + num(n) + " catalog row"
                             : "absent from the K" + num(n) + " catalog row");
  } else {
    switch (g.family) {
      case Family::Trivial:
        res = make_result(
            n, g, true, Theorem::SubgroupLemma, 0,
            "the trivial group is a subgroup of every realizable group");
        break;
      case Family::Polyhedral:
        res = check_polyhedral(n, g.poly);
        break;
      case Family::Cyclic:
      case Family::Dihedral:
        res = check_cyclic_dihedral(n, g.a, g.family);
        break;
      case Family::ZxZ:
      case Family::ZxZSemiZ2:
        res = check_zxz(n, g);
        break;
      case Family::ZxD:
      case Family::DxD:
        res = check_product_dihedral(n, g);
        break;
    }
  }
  res.note = prefix + res.note;
  return res;
}

std::vector<ClassificationResult> enumerate_results(std::int64_t n,
                                                    bool include_trivial) {
  if (n < 2) throw DomainError("n >= 2 required, got " + num(n));
  std::vector<ClassificationResult> out;
  auto consider = [&out](ClassificationResult r) {
    if (r.realizable) out.push_back(std::move(r));
  };

  if (n <= 6) {
    for (const GroupDescriptor& g : known_groups(n).groups)
      out.push_back(make_result(n, g, true, Theorem::Catalog, 0,
                                "listed in the K" + num(n) + " catalog row"));
    if (include_trivial) consider(check(n, trivial_group()));
  } else {
    if (include_trivial) consider(check(n, trivial_group()));
    consider(check_polyhedral(n, PolyKind::A4));
    consider(check_polyhedral(n, PolyKind::S4));
    consider(check_polyhedral(n, PolyKind::A5));
    // m > n cannot satisfy any clause: an even m would have to divide n and
    // an odd m would need n mod m = n <= 3, impossible for n > 6.
    for (std::int64_t m = 2; m <= n; ++m) {
      consider(check_cyclic_dihedral(n, m, Family::Cyclic));
      consider(check_cyclic_dihedral(n, m, Family::Dihedral));
    }
    // Canonical ZxZ-family pairs (r, s): r | s, both odd, r >= 3. Every
    // clause needs rs to divide one of n, n-3, n-6, so rs <= n suffices.
    for (std::int64_t r = 3; r * r <= n; r += 2) {
      for (std::int64_t s = r; r * s <= n; s += 2 * r) {
        consider(check_zxz(n, zxz(r, s)));
        consider(check_zxz(n, zxz_semi_z2(r, s)));
      }
    }
    // ZxD / DxD pairs with 2rs <= n, plus the (3,3) pair whose n-6 clauses
    // are checked even below that bound.
    for (std::int64_t r = 3; 2 * r * 3 <= n; r += 2) {
      for (std::int64_t s = 3; 2 * r * s <= n; s += 2) {
        consider(check_product_dihedral(n, zxd(r, s)));
        if (r <= s) consider(check_product_dihedral(n, dxd(r, s)));
      }
    }
    if (n < 18) {
      consider(check_product_dihedral(n, zxd(3, 3)));
      consider(check_product_dihedral(n, dxd(3, 3)));
    }
  }

  std::sort(out.begin(), out.end(),
            [](const ClassificationResult& x, const ClassificationResult& y) {
              return descriptor_less(x.group, y.group);
            });
  return out;
}

GroupList enumerate(std::int64_t n, bool include_trivial) {
  GroupList list{n, {}};
  for (const ClassificationResult& r : enumerate_results(n, include_trivial))
    list.groups.push_back(r.group);
  return list;
}

}  // namespace tsg
