#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ssg/graph.hpp"
#include "ssg/trace.hpp"

namespace ssg {

// Element of the free commutative monoid on the vertex generators, as a
// multiplicity vector.
using MonoidElement = std::vector<int>;

int total_degree(const MonoidElement& x);
std::string element_to_string(const MonoidElement& x,
                              const std::vector<std::string>& generators);

// One generator per vertex; one relation a_v = sum of a_{d(e)} over the
// in-edges of v, for every receiving vertex.
struct MonoidPresentation {
  std::vector<std::string> generators;
  // (generator index, right-hand side vector)
  std::vector<std::pair<int, MonoidElement>> relations;
};

MonoidPresentation monoid_of(const Graph& g);

enum class EqAnswer { Yes, Unknown };

// Bidirectional BFS over single-relation rewrites in both directions,
// restricted to total degree <= bound. Sound for Yes; Unknown on
// exhaustion. Throws BoundTooSmallError if the bound cannot even hold the
// queried elements.
EqAnswer elements_equal(const MonoidPresentation& p, const MonoidElement& x,
                        const MonoidElement& y, int bound,
                        std::size_t node_cap = 2000000);

struct GroupTestVerdict {
  enum class Value { Group, NotGroup, Unknown };
  Value verdict = Value::Unknown;
  std::optional<MonoidElement> identity;        // Group
  std::vector<MonoidElement> inverses;          // Group, per generator
  std::optional<std::vector<Rational>> functional;  // NotGroup certificate
  int bound_used = 0;  // degree bound the congruence was actually built at
  std::string note;
};

// Is the monoid minus zero a group?
//   (i)  a nonzero additive functional respecting the relations certifies
//        NotGroup (any identity would be killed by it);
//   (ii) otherwise search for an identity candidate of total degree
//        <= identity_bound and per-generator inverses of degree <= bound;
//   (iii) Unknown when the bounded search exhausts.
GroupTestVerdict is_group_nonzero(const MonoidPresentation& p,
                                  int identity_bound = 6, int bound = 24);

// Exact recheck of a NotGroup functional against the presentation.
bool verify_functional(const MonoidPresentation& p,
                       const std::vector<Rational>& t);

}  // namespace ssg
