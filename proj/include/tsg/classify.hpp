// Realizability decisions: which finite groups occur as the group of
// orientation-preserving symmetries realized by some embedding of K_n in the
// 3-sphere. For n > 6 every decision is modular arithmetic on the group
// parameters; n <= 6 is answered from the embedded catalog. Each verdict
// carries the clause that decided it plus a short human-readable note.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tsg/group.hpp"

namespace tsg {

enum class Theorem {
  CyclicDihedral,   // Z_m / D_m conditions, parts 1-4
  ZxZ,              // Z_r x Z_s family conditions, parts 1-4
  ProductDihedral,  // Z_r x D_s / D_r x D_s conditions, parts 1-3
  A4Thm,
  S4Thm,
  A5Thm,
  NoD2Lemma,      // n = 4r+3 admits no D2
  Lemma4_1,       // 9 | n-6 without 18 | n-6 excludes (Z3xZ3):Z2
  Lemma5_5,       // 18 | n-6 without 36 | n-6 excludes D3xD3
  SubgroupLemma,  // realizable groups are closed under subgroups (n > 6)
  Catalog,        // answered from the embedded rows
};

struct ClauseRef {
  Theorem theorem = Theorem::Catalog;
  int part = 0;  // 0 = no numbered part

  friend bool operator==(const ClauseRef&, const ClauseRef&) = default;
};

// "Thm1(2)", "Thm2(3)", "NoD2", "Lemma4.1", "Subgroup", "Catalog", ...
std::string clause_string(const ClauseRef& c);

struct ClassificationResult {
  std::int64_t n = 0;
  GroupDescriptor group;  // canonical
  bool realizable = false;
  ClauseRef clause;
  std::string note;
};

// Family-specific checkers. All require n > 6 (check_polyhedral: n >= 4) and
// throw DomainError otherwise; the product checkers additionally require a
// canonical descriptor of their own family and throw ContractError otherwise.
ClassificationResult check_polyhedral(std::int64_t n, PolyKind kind);
ClassificationResult check_cyclic_dihedral(std::int64_t n, std::int64_t m,
                                           Family kind);
ClassificationResult check_zxz(std::int64_t n, const GroupDescriptor& g);
ClassificationResult check_product_dihedral(std::int64_t n,
                                            const GroupDescriptor& g);

// Any group, any n >= 2: canonicalizes g (recording a collapse in the note),
// answers n <= 6 by catalog membership, and dispatches otherwise.
ClassificationResult check(std::int64_t n, const GroupDescriptor& g);

// Every realizable group for K_n with its deciding clause, sorted in the
// group order. The trivial group is listed only when include_trivial is set
// and check(n, Trivial) holds.
std::vector<ClassificationResult> enumerate_results(std::int64_t n,
                                                    bool include_trivial = false);
GroupList enumerate(std::int64_t n, bool include_trivial = false);

}  // namespace tsg
