#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace polyrecon {

/// Sorted, duplicate-free list of vertex (or node) ids.
using VertexSet = std::vector<int>;

/// Undirected edge stored as an endpoint pair with first < second.
using Edge = std::pair<int, int>;

/// Sorted list of canonical edges.
using EdgeSet = std::vector<Edge>;

/// Input that violates a documented precondition (bad file, malformed spec).
class InvalidInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by the orientation enumerator when an instance exceeds its guard.
class ResourceLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A reconstruction pipeline could not recognize its input.
class NotRecognized : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A self-check inside a pipeline failed. Always a bug or an unexpected input.
class InternalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Edge make_edge(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

inline VertexSet intersect(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

/// True iff a is a subset of b.
inline bool is_subset(const VertexSet& a, const VertexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline bool is_proper_subset(const VertexSet& a, const VertexSet& b) {
  return a.size() < b.size() && is_subset(a, b);
}

inline bool disjoint(const VertexSet& a, const VertexSet& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return false;
    if (*i < *j) ++i; else ++j;
  }
  return true;
}

inline VertexSet normalized(VertexSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

std::string to_string(const VertexSet& s);

}  // namespace polyrecon
