#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace ssg {

using GroupElem = int;

// Finite group given by element list and full multiplication table.
// Construction only derives inverses; the group axioms are checked
// exhaustively by validate() so that violations can be reported tuple by
// tuple instead of throwing here.
class FinGroup {
 public:
  FinGroup(std::vector<std::string> names, GroupElem identity,
           std::vector<std::vector<GroupElem>> table);

  static FinGroup trivial();
  static FinGroup cyclic(int n);  // Z/n written additively, elements "0".."n-1"

  int order() const { return static_cast<int>(names_.size()); }
  GroupElem identity() const { return identity_; }
  GroupElem mul(GroupElem g, GroupElem h) const { return table_[g][h]; }
  // -1 when no inverse exists (caught by validation)
  GroupElem inv(GroupElem g) const { return inv_[g]; }

  const std::string& name(GroupElem g) const { return names_[g]; }
  std::optional<GroupElem> index(const std::string& name) const;

 private:
  std::vector<std::string> names_;
  GroupElem identity_;
  std::vector<std::vector<GroupElem>> table_;
  std::vector<GroupElem> inv_;
  std::unordered_map<std::string, GroupElem> index_;
};

}  // namespace ssg
