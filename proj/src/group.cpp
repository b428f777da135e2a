#include "tsg/group.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <tuple>

namespace tsg {

namespace {

std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(x, y, &out))
    throw DomainError("group parameter product overflows 64-bit range");
  return out;
}

bool odd(std::int64_t v) { return v % 2 != 0; }

}  // namespace

GroupDescriptor trivial_group() { return {}; }

GroupDescriptor cyclic(std::int64_t m) {
  return {Family::Cyclic, PolyKind::A4, m, 0};
}

GroupDescriptor dihedral(std::int64_t m) {
  return {Family::Dihedral, PolyKind::A4, m, 0};
}

GroupDescriptor polyhedral(PolyKind kind) {
  return {Family::Polyhedral, kind, 0, 0};
}

GroupDescriptor zxz(std::int64_t r, std::int64_t s) {
  return {Family::ZxZ, PolyKind::A4, r, s};
}

GroupDescriptor zxz_semi_z2(std::int64_t r, std::int64_t s) {
  return {Family::ZxZSemiZ2, PolyKind::A4, r, s};
}

GroupDescriptor zxd(std::int64_t r, std::int64_t s) {
  return {Family::ZxD, PolyKind::A4, r, s};
}

GroupDescriptor dxd(std::int64_t r, std::int64_t s) {
  return {Family::DxD, PolyKind::A4, r, s};
}

void validate_shape(const GroupDescriptor& g) {
  switch (g.family) {
    case Family::Trivial:
    case Family::Polyhedral:
      return;
    case Family::Cyclic:
    case Family::Dihedral:
      if (g.a < 1)
        throw DomainError("group parameter must be >= 1, got " +
                          std::to_string(g.a));
      return;
    default:
      if (g.a < 1 || g.b < 1)
        throw DomainError("product family parameters must be >= 1, got (" +
                          std::to_string(g.a) + ", " + std::to_string(g.b) +
                          ")");
      if (!odd(g.a) || !odd(g.b))
        throw DomainError("even parameter in " + display_name(g) +
                          ": product families exist only for odd parameters");
      return;
  }
}

GroupDescriptor canonicalize(const GroupDescriptor& g) {
  validate_shape(g);
  switch (g.family) {
    case Family::Trivial:
    case Family::Polyhedral:
      return g;
    case Family::Cyclic:
      return g.a == 1 ? trivial_group() : g;
    case Family::Dihedral:
      return g.a == 1 ? cyclic(2) : g;
    case Family::ZxZ: {
      if (g.a == 1) return canonicalize(cyclic(g.b));
      if (g.b == 1) return canonicalize(cyclic(g.a));
      const std::int64_t d = std::gcd(g.a, g.b);
      if (d == 1) return cyclic(checked_mul(g.a, g.b));
      return zxz(d, checked_mul(g.a / d, g.b));
    }
    case Family::ZxZSemiZ2: {
      // The Z_2 acts by inversion, so the group depends only on the
      // isomorphism class of the abelian part; gcd = 1 gives a dihedral group.
      if (g.a == 1) return canonicalize(dihedral(g.b));
      if (g.b == 1) return canonicalize(dihedral(g.a));
      const std::int64_t d = std::gcd(g.a, g.b);
      if (d == 1) return dihedral(checked_mul(g.a, g.b));
      return zxz_semi_z2(d, checked_mul(g.a / d, g.b));
    }
    case Family::ZxD: {
      if (g.b == 1) return canonicalize(cyclic(checked_mul(2, g.a)));
      if (g.a == 1) return canonicalize(dihedral(g.b));
      return g;
    }
    case Family::DxD: {
      const std::int64_t r = std::min(g.a, g.b);
      const std::int64_t s = std::max(g.a, g.b);
      if (s == 1) return dihedral(2);  // D_1 x D_1 = Z_2 x Z_2
      if (r == 1) return dihedral(checked_mul(2, s));  // Z_2 x D_s, s odd
      return dxd(r, s);
    }
  }
  throw ContractError("unhandled family in canonicalize");
}

bool is_canonical(const GroupDescriptor& g) {
  switch (g.family) {
    case Family::Trivial:
    case Family::Polyhedral:
      return g.a == 0 && g.b == 0;
    case Family::Cyclic:
    case Family::Dihedral:
      return g.a >= 2 && g.b == 0;
    case Family::ZxZ:
    case Family::ZxZSemiZ2:
      // (gcd, lcm) form: first factor divides the second, both odd >= 3.
      return g.a >= 3 && odd(g.a) && odd(g.b) && g.b % g.a == 0;
    case Family::ZxD:
      return g.a >= 3 && g.b >= 3 && odd(g.a) && odd(g.b);
    case Family::DxD:
      return g.a >= 3 && g.a <= g.b && odd(g.a) && odd(g.b);
  }
  return false;
}

std::int64_t group_order(const GroupDescriptor& g) {
  validate_shape(g);
  switch (g.family) {
    case Family::Trivial:
      return 1;
    case Family::Polyhedral:
      switch (g.poly) {
        case PolyKind::A4: return 12;
        case PolyKind::S4: return 24;
        case PolyKind::A5: return 60;
      }
      break;
    case Family::Cyclic:
      return g.a;
    case Family::Dihedral:
      return checked_mul(2, g.a);
    case Family::ZxZ:
      return checked_mul(g.a, g.b);
    case Family::ZxZSemiZ2:
    case Family::ZxD:
      return checked_mul(2, checked_mul(g.a, g.b));
    case Family::DxD:
      return checked_mul(4, checked_mul(g.a, g.b));
  }
  throw ContractError("unhandled family in group_order");
}

bool in_dmdm_universe(const GroupDescriptor& g0) {
  const GroupDescriptor g = canonicalize(g0);
  switch (g.family) {
    case Family::Trivial:
      return true;
    case Family::Polyhedral:
      return false;
    case Family::Cyclic:
    case Family::Dihedral:
      // m odd, m = 2, and m = 2r with r odd all occur; 4 | m does not.
      return g.a % 4 != 0;
    default:
      return true;
  }
}

bool descriptor_less(const GroupDescriptor& lhs, const GroupDescriptor& rhs) {
  auto key = [](const GroupDescriptor& g) {
    const auto rank = static_cast<int>(g.family);
    if (g.family == Family::Polyhedral)
      return std::tuple<int, std::int64_t, std::int64_t>(
          rank, static_cast<std::int64_t>(g.poly), 0);
    return std::tuple<int, std::int64_t, std::int64_t>(rank, g.a, g.b);
  };
  return key(lhs) < key(rhs);
}

namespace {

// Recursive-descent reader for the ASCII group grammar. Positions are byte
// offsets into the original input (including any leading whitespace).
struct Reader {
  std::string_view text;
  std::size_t pos = 0;
  std::size_t end = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, pos);
  }

  bool done() const { return pos >= end; }

  char peek() const { return done() ? '\0' : text[pos]; }

  char peek_lower() const {
    return static_cast<char>(
        std::tolower(static_cast<unsigned char>(peek())));
  }

  void expect(char want, const char* what) {
    if (peek_lower() != want) fail(std::string("expected ") + what);
    ++pos;
  }

  std::int64_t integer() {
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      fail("expected a number");
    std::int64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      const int digit = peek() - '0';
      if (v > (INT64_MAX - digit) / 10) fail("number is too large");
      v = v * 10 + digit;
      ++pos;
    }
    return v;
  }

  GroupDescriptor group() {
    switch (peek_lower()) {
      case '(':
        return semi();
      case 'a': {
        ++pos;
        if (peek() == '4') { ++pos; return polyhedral(PolyKind::A4); }
        if (peek() == '5') { ++pos; return polyhedral(PolyKind::A5); }
        fail("expected A4 or A5");
      }
      case 's': {
        ++pos;
        if (peek() == '4') { ++pos; return polyhedral(PolyKind::S4); }
        fail("expected S4");
      }
      case 'z': {
        ++pos;
        const std::int64_t r = integer();
        if (peek_lower() != 'x') return cyclic(r);
        ++pos;
        if (peek_lower() == 'z') { ++pos; return zxz(r, integer()); }
        if (peek_lower() == 'd') { ++pos; return zxd(r, integer()); }
        fail("expected Z or D after 'x'");
      }
      case 'd': {
        ++pos;
        const std::int64_t r = integer();
        if (peek_lower() != 'x') return dihedral(r);
        ++pos;
        if (peek_lower() == 'd') { ++pos; return dxd(r, integer()); }
        fail("expected D after 'x' (write mixed products as Z<r>xD<s>)");
      }
      default:
        fail("expected a group name");
    }
  }

  GroupDescriptor semi() {
    expect('(', "'('");
    expect('z', "Z");
    const std::int64_t r = integer();
    expect('x', "'x'");
    expect('z', "Z");
    const std::int64_t s = integer();
    expect(')', "')'");
    expect(':', "':'");
    expect('z', "Z");
    if (integer() != 2) fail("the acting factor must be Z2");
    return zxz_semi_z2(r, s);
  }
};

bool ascii_space(char c) {
  return std::isspace(static_cast<unsigned char>(c)) != 0;
}

}  // namespace

GroupDescriptor parse_group(std::string_view text) {
  std::size_t begin = 0;
  std::size_t end = text.size();
  while (begin < end && ascii_space(text[begin])) ++begin;
  while (end > begin && ascii_space(text[end - 1])) --end;
  Reader reader{text, begin, end};
  if (reader.done()) reader.fail("empty group name");
  const GroupDescriptor g = reader.group();
  if (!reader.done()) reader.fail("unexpected trailing characters");
  return canonicalize(g);
}

std::string display_name(const GroupDescriptor& g) {
  switch (g.family) {
    case Family::Trivial:
      return "Z1";
    case Family::Polyhedral:
      switch (g.poly) {
        case PolyKind::A4: return "A4";
        case PolyKind::S4: return "S4";
        case PolyKind::A5: return "A5";
      }
      break;
    case Family::Cyclic:
      return "Z" + std::to_string(g.a);
    case Family::Dihedral:
      return "D" + std::to_string(g.a);
    case Family::ZxZ:
      return "Z" + std::to_string(g.a) + "xZ" + std::to_string(g.b);
    case Family::ZxZSemiZ2:
      return "(Z" + std::to_string(g.a) + "xZ" + std::to_string(g.b) + "):Z2";
    case Family::ZxD:
      return "Z" + std::to_string(g.a) + "xD" + std::to_string(g.b);
    case Family::DxD:
      return "D" + std::to_string(g.a) + "xD" + std::to_string(g.b);
  }
  throw ContractError("unhandled family in display_name");
}

std::string pretty_name(const GroupDescriptor& g) {
  const std::string z = "ℤ";       // blackboard-bold Z
  const std::string times = " × ";  // multiplication sign
  const std::string semi = " ⋊ ";   // right normal factor semidirect
  switch (g.family) {
    case Family::Trivial:
      return z + "1";
    case Family::Polyhedral:
      return display_name(g);
    case Family::Cyclic:
      return z + std::to_string(g.a);
    case Family::Dihedral:
      return "D" + std::to_string(g.a);
    case Family::ZxZ:
      return z + std::to_string(g.a) + times + z + std::to_string(g.b);
    case Family::ZxZSemiZ2:
      return "(" + z + std::to_string(g.a) + times + z + std::to_string(g.b) +
             ")" + semi + z + "2";
    case Family::ZxD:
      return z + std::to_string(g.a) + times + "D" + std::to_string(g.b);
    case Family::DxD:
      return "D" + std::to_string(g.a) + times + "D" + std::to_string(g.b);
  }
  throw ContractError("unhandled family in pretty_name");
}

std::string family_string(Family f) {
  switch (f) {
    case Family::Trivial: return "trivial";
    case Family::Polyhedral: return "polyhedral";
    case Family::Cyclic: return "cyclic";
    case Family::Dihedral: return "dihedral";
    case Family::ZxZ: return "zxz";
    case Family::ZxZSemiZ2: return "zxz_semi_z2";
    case Family::ZxD: return "zxd";
    case Family::DxD: return "dxd";
  }
  throw ContractError("unhandled family in family_string");
}

}  // namespace tsg
