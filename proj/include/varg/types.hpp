#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace varg {

// Vertex sets are bitmasks, so everything downstream (solver states, embeddings,
// canonical forms) fits in a machine word. Hard cap; the runtime limit below can
// only tighten it.
inline constexpr int kMaxVertices = 16;

using VertexSet = std::uint32_t;  // only the low kMaxVertices bits are used

constexpr VertexSet vbit(int v) { return VertexSet{1} << v; }

// Runtime vertex limit, 1..kMaxVertices, default kMaxVertices.
int vertex_limit();
void set_vertex_limit(int n);

enum class Decision : std::uint8_t { accepted = 0, rejected = 1 };

enum class ErrorKind {
  parse,     // malformed input (graph text, set system, orderings)
  limit,     // size limit exceeded
  budget,    // search node budget exhausted
  argument,  // invalid parameter to an operation
  internal,  // broken internal invariant
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

}  // namespace varg
