#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ttd {

// Error hierarchy.  Domain errors signal misuse of an operation (bad
// arguments, violated preconditions), parse errors carry input positions,
// and internal errors mean a self-check that should never fire did fire.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DomainError : Error {
  explicit DomainError(const std::string& msg) : Error(msg) {}
};

struct ParseError : Error {
  int line = 0;               // 1-based, 0 when not applicable
  std::string field;          // JSON field or token, may be empty
  ParseError(const std::string& msg, int line_ = 0, std::string field_ = {})
      : Error(msg), line(line_), field(std::move(field_)) {}
};

struct InternalError : Error {
  explicit InternalError(const std::string& msg) : Error(msg) {}
};

// Vertex sets are bitmasks over at most 63 vertices.
using VSet = std::uint64_t;

inline int popcount(VSet s) { return __builtin_popcountll(s); }
inline bool subset(VSet a, VSet b) { return (a & ~b) == 0; }
inline int lowest_bit(VSet s) { return __builtin_ctzll(s); }

inline VSet full_set(int n) {
  return n == 0 ? 0 : (n >= 64 ? ~0ull : ((1ull << n) - 1));
}

inline std::vector<int> set_to_vertices(VSet s) {
  std::vector<int> out;
  while (s) {
    out.push_back(lowest_bit(s));
    s &= s - 1;
  }
  return out;
}

inline VSet vertices_to_set(const std::vector<int>& vs) {
  VSet s = 0;
  for (int v : vs) s |= 1ull << v;
  return s;
}

}  // namespace ttd
