#include "ssg/group.hpp"

#include <stdexcept>

namespace ssg {

FinGroup::FinGroup(std::vector<std::string> names, GroupElem identity,
                   std::vector<std::vector<GroupElem>> table)
    : names_(std::move(names)), identity_(identity), table_(std::move(table)) {
  const int n = order();
  if (identity_ < 0 || identity_ >= n)
    throw std::invalid_argument("group identity out of range");
  if (static_cast<int>(table_.size()) != n)
    throw std::invalid_argument("multiplication table is not total");
  for (const auto& row : table_) {
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("multiplication table is not total");
    for (GroupElem x : row)
      if (x < 0 || x >= n)
        throw std::invalid_argument("multiplication table entry out of range");
  }
  for (int i = 0; i < n; ++i) {
    if (index_.count(names_[i]))
      throw std::invalid_argument("duplicate group element id: " + names_[i]);
    index_.emplace(names_[i], i);
  }
  inv_.assign(n, -1);
  for (GroupElem g = 0; g < n; ++g)
    for (GroupElem h = 0; h < n; ++h)
      if (table_[g][h] == identity_ && table_[h][g] == identity_) {
        inv_[g] = h;
        break;
      }
}

FinGroup FinGroup::trivial() { return cyclic(1); }

FinGroup FinGroup::cyclic(int n) {
  std::vector<std::string> names;
  std::vector<std::vector<GroupElem>> table(n, std::vector<GroupElem>(n));
  for (int i = 0; i < n; ++i) {
    names.push_back(std::to_string(i));
    for (int j = 0; j < n; ++j) table[i][j] = (i + j) % n;
  }
  return FinGroup(std::move(names), 0, std::move(table));
}

std::optional<GroupElem> FinGroup::index(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

}  // namespace ssg
