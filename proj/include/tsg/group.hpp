// Group descriptors for the symmetry groups that can occur for embedded
// complete graphs: cyclic, dihedral, the polyhedral groups A4/S4/A5, and the
// four odd-parameter product families arising as subgroups of D_m x D_m.
// Descriptors are plain values; canonicalize() maps every well-formed
// descriptor to the unique representative of its isomorphism class. The enum
// order of Family doubles as the sort order used for emitted lists.
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "tsg/errors.hpp"

namespace tsg {

enum class Family {
  Trivial,
  Polyhedral,
  Cyclic,
  Dihedral,
  ZxZ,        // Z_r x Z_s, r and s odd
  ZxZSemiZ2,  // (Z_r x Z_s) : Z_2, the Z_2 inverting both factors
  ZxD,        // Z_r x D_s, r and s odd
  DxD,        // D_r x D_s, r and s odd
};

enum class PolyKind { A4, S4, A5 };

// `a` holds m for Cyclic/Dihedral; `a`,`b` hold (r, s) for the product
// families. Unused fields stay at fixed defaults so default equality works.
struct GroupDescriptor {
  Family family = Family::Trivial;
  PolyKind poly = PolyKind::A4;
  std::int64_t a = 0;
  std::int64_t b = 0;

  friend bool operator==(const GroupDescriptor&, const GroupDescriptor&) = default;
};

GroupDescriptor trivial_group();
GroupDescriptor cyclic(std::int64_t m);
GroupDescriptor dihedral(std::int64_t m);
GroupDescriptor polyhedral(PolyKind kind);
GroupDescriptor zxz(std::int64_t r, std::int64_t s);
GroupDescriptor zxz_semi_z2(std::int64_t r, std::int64_t s);
GroupDescriptor zxd(std::int64_t r, std::int64_t s);
GroupDescriptor dxd(std::int64_t r, std::int64_t s);

// Well-formedness: every parameter >= 1, and the four product families only
// take odd parameters (even ones fall outside the D_m x D_m universe).
// Throws DomainError.
void validate_shape(const GroupDescriptor& g);

// Unique representative of the isomorphism class. Z_r x Z_s pairs are
// rewritten to (gcd, lcm); gcd = 1 collapses the ZxZ family to cyclic or
// dihedral groups; D_r x D_s is sorted r <= s; parameter-1 factors resolve
// through Z_1 x G = G, D_1 = Z_2 and Z_2 x D_s = D_2s. Idempotent.
GroupDescriptor canonicalize(const GroupDescriptor& g);

bool is_canonical(const GroupDescriptor& g);

// Number of elements. Accepts any well-formed descriptor and is invariant
// under canonicalize.
std::int64_t group_order(const GroupDescriptor& g);

// True when the group embeds in D_m x D_m for some odd m >= 3: everything
// here except the polyhedral kinds and Cyclic/Dihedral(m) with 4 | m.
bool in_dmdm_universe(const GroupDescriptor& g);

// Total order behind every emitted list: Trivial, then A4 < S4 < A5, cyclic
// by m, dihedral by m, then each product family by (r, s).
bool descriptor_less(const GroupDescriptor& lhs, const GroupDescriptor& rhs);

// ASCII names: "Z12", "D7", "A5", "Z3xZ3", "(Z3xZ3):Z2", "Z5xD7", "D5xD7".
// parse_group accepts the grammar case-insensitively and canonicalizes, so
// display_name(parse_group(s)) == s exactly for canonical names. The pretty
// renderer swaps in the blackboard-bold typography for human-facing tables.
GroupDescriptor parse_group(std::string_view text);
std::string display_name(const GroupDescriptor& g);
std::string pretty_name(const GroupDescriptor& g);

// Lowercase family tag used in structured output.
std::string family_string(Family f);

// n together with a sorted, duplicate-free list of groups.
struct GroupList {
  std::int64_t n = 0;
  std::vector<GroupDescriptor> groups;
};

}  // namespace tsg
