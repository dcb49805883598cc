#pragma once

#include "nafaba/error.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace nafaba {

/// Immutable bijection between names and dense ids. Ids are assigned in
/// ascending name order, so comparing ids compares names.
template <class Id>
class SymbolTable {
public:
  SymbolTable() = default;

  explicit SymbolTable(std::vector<std::string> names) : names_(std::move(names)) {
    std::sort(names_.begin(), names_.end());
    names_.erase(std::unique(names_.begin(), names_.end()), names_.end());
    index_.reserve(names_.size());
    for (std::size_t i = 0; i < names_.size(); ++i)
      index_.emplace(names_[i], Id(i));
  }

  std::size_t size() const noexcept { return names_.size(); }
  bool empty() const noexcept { return names_.empty(); }

  const std::string& name(Id id) const { return names_.at(id_index(id)); }
  const std::vector<std::string>& names() const noexcept { return names_; }

  std::optional<Id> find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end())
      return std::nullopt;
    return it->second;
  }

  Id at(std::string_view name) const {
    if (auto id = find(name))
      return *id;
    throw DomainError("unknown symbol '" + std::string(name) + "'");
  }

  friend bool operator==(const SymbolTable& a, const SymbolTable& b) { return a.names_ == b.names_; }

private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, Id> index_;
};

} // namespace nafaba
