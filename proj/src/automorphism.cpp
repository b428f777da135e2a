#include "tsg/automorphism.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <tuple>

namespace tsg {

namespace {

std::string num(std::int64_t v) { return std::to_string(v); }

}  // namespace

CycleType make_cycle_type(std::vector<std::int64_t> cycles,
                          std::int64_t fixed) {
  if (fixed < 0)
    throw DomainError("fixed-vertex count must be >= 0, got " + num(fixed));
  std::int64_t n = fixed;
  for (const std::int64_t len : cycles) {
    if (len < 2)
      throw DomainError("cycle lengths must be >= 2, got " + num(len) +
                        " (fixed vertices are counted separately)");
    n += len;
  }
  std::sort(cycles.begin(), cycles.end(), std::greater<>());
  return {n, std::move(cycles), fixed};
}

CycleType cycle_type_of(std::span<const std::int64_t> image) {
  const std::int64_t n = static_cast<std::int64_t>(image.size());
  std::vector<std::int64_t> seen_at(image.size(), -1);
  for (std::int64_t i = 0; i < n; ++i) {
    const std::int64_t v = image[static_cast<std::size_t>(i)];
    if (v < 0 || v >= n)
      throw DomainError("image " + num(v) + " at position " + num(i) +
                        " is out of range for n = " + num(n));
    if (seen_at[static_cast<std::size_t>(v)] >= 0)
      throw DomainError("not a permutation: image " + num(v) +
                        " appears at positions " +
                        num(seen_at[static_cast<std::size_t>(v)]) + " and " +
                        num(i));
    seen_at[static_cast<std::size_t>(v)] = i;
  }

  std::vector<bool> visited(image.size(), false);
  std::vector<std::int64_t> cycles;
  std::int64_t fixed = 0;
  for (std::int64_t i = 0; i < n; ++i) {
    if (visited[static_cast<std::size_t>(i)]) continue;
    std::int64_t len = 0;
    std::int64_t j = i;
    do {
      visited[static_cast<std::size_t>(j)] = true;
      j = image[static_cast<std::size_t>(j)];
      ++len;
    } while (j != i);
    if (len == 1)
      ++fixed;
    else
      cycles.push_back(len);
  }
  return make_cycle_type(std::move(cycles), fixed);
}

std::int64_t cycle_type_order(const CycleType& ct) {
  std::int64_t m = 1;
  for (const std::int64_t len : ct.cycles) m = std::lcm(m, len);
  return m;
}

CycleType parse_cycle_type(std::string_view text) {
  std::size_t pos = 0;
  const auto fail = [&](const std::string& msg) -> void {
    throw ParseError(msg, pos);
  };
  const auto peek = [&]() -> char {
    return pos < text.size() ? text[pos] : '\0';
  };
  const auto integer = [&]() -> std::int64_t {
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
  };

  if (peek() != '[') fail("expected '['");
  ++pos;
  std::vector<std::int64_t> cycles;
  if (peek() != ']') {
    cycles.push_back(integer());
    while (peek() == ',') {
      ++pos;
      cycles.push_back(integer());
    }
  }
  if (peek() != ']') fail("expected ']'");
  ++pos;
  if (peek() != '+') fail("expected '+'");
  ++pos;
  if (peek() != 'f') fail("expected 'f'");
  ++pos;
  const std::int64_t fixed = integer();
  if (pos != text.size()) fail("unexpected trailing characters");
  return make_cycle_type(std::move(cycles), fixed);
}

std::string display_cycle_type(const CycleType& ct) {
  std::string out = "[";
  for (std::size_t i = 0; i < ct.cycles.size(); ++i) {
    if (i) out += ",";
    out += num(ct.cycles[i]);
  }
  out += "]+f" + num(ct.fixed);
  return out;
}

AutomorphismResult is_realizable(const CycleType& ct, std::int64_t m) {
  if (ct.n <= 6)
    throw DomainError(
        "cycle-type realizability is decided only for n > 6, got n = " +
        num(ct.n));
  if (m < 1) throw DomainError("order must be >= 1, got " + num(m));
  const std::int64_t actual = cycle_type_order(ct);
  if (actual != m)
    throw DomainError("m = " + num(m) + " is not the order of " +
                      display_cycle_type(ct) + " (lcm of cycle lengths is " +
                      num(actual) + ")");

  if (m == 1) return {true, 0, "identity automorphism"};

  const bool all_m = std::all_of(ct.cycles.begin(), ct.cycles.end(),
                                 [m](std::int64_t len) { return len == m; });
  if (m % 2 == 0 && m > 2 && all_m && ct.fixed == 0)
    return {true, 1,
            "every cycle has length m = " + num(m) + " and no vertex is fixed"};
  if (m == 2 && all_m && ct.fixed <= 2)
    return {true, 2,
            "every cycle is a transposition and " + num(ct.fixed) +
                " <= 2 vertices are fixed"};
  if (m % 2 != 0 && all_m && ct.fixed <= 3)
    return {true, 3,
            "every cycle has length m = " + num(m) + " and " + num(ct.fixed) +
                " <= 3 vertices are fixed"};
  if (m % 2 != 0 && m % 3 == 0 && m > 3 && ct.fixed == 0) {
    const auto threes = std::count(ct.cycles.begin(), ct.cycles.end(), 3);
    const auto ms =
        std::count(ct.cycles.begin(), ct.cycles.end(), m);
    if (threes == 1 &&
        ms == static_cast<std::int64_t>(ct.cycles.size()) - 1)
      return {true, 4,
              "one 3-cycle, every other cycle of length m = " + num(m) +
                  ", no fixed vertices"};
  }
  return {false, 0, "no realizability condition matches " +
                        display_cycle_type(ct) + " for m = " + num(m)};
}

std::vector<CycleType> realizable_cycle_types(std::int64_t n, std::int64_t m) {
  if (n <= 6)
    throw DomainError(
        "cycle-type realizability is decided only for n > 6, got n = " +
        num(n));
  if (m < 2) throw DomainError("order m >= 2 required, got " + num(m));

  std::vector<CycleType> out;
  const auto add_uniform = [&](std::int64_t fixed) {
    // k cycles of length m plus `fixed` fixed vertices.
    const std::int64_t rest = n - fixed;
    if (rest <= 0 || rest % m != 0) return;
    out.push_back(make_cycle_type(
        std::vector<std::int64_t>(static_cast<std::size_t>(rest / m), m),
        fixed));
  };

  if (m == 2) {
    for (std::int64_t f = 0; f <= 2; ++f) add_uniform(f);
  } else if (m % 2 == 0) {
    add_uniform(0);
  } else {
    for (std::int64_t f = 0; f <= 3; ++f) add_uniform(f);
    if (m % 3 == 0 && m > 3 && (n - 3) > 0 && (n - 3) % m == 0) {
      std::vector<std::int64_t> cycles(
          static_cast<std::size_t>((n - 3) / m), m);
      cycles.push_back(3);
      out.push_back(make_cycle_type(std::move(cycles), 0));
    }
  }

  std::sort(out.begin(), out.end(), [](const CycleType& x, const CycleType& y) {
    return std::tie(x.fixed, x.cycles) < std::tie(y.fixed, y.cycles);
  });
  return out;
}

}  // namespace tsg
