#pragma once

#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

namespace fmzv {

/// Multi-index s = (s_1, ..., s_r) in Z^r. Depth 0 is allowed.
class Index {
 public:
  Index() = default;
  Index(std::initializer_list<int> entries) : entries_(entries) {}
  explicit Index(std::vector<int> entries) : entries_(std::move(entries)) {}

  std::size_t depth() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  int operator[](std::size_t i) const { return entries_.at(i); }
  const std::vector<int>& entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  bool all_positive() const {
    for (int s : entries_)
      if (s < 1) return false;
    return true;
  }

  /// (1, ..., 1, s_1, ..., s_r) with `count` leading ones.
  Index with_leading_ones(std::size_t count) const {
    std::vector<int> e(count, 1);
    e.insert(e.end(), entries_.begin(), entries_.end());
    return Index(std::move(e));
  }

  /// (s_1 + delta, s_2, ..., s_r).
  Index with_first_shifted(int delta) const {
    Index r = *this;
    if (!r.entries_.empty()) r.entries_[0] += delta;
    return r;
  }

  Index negated() const {
    Index r = *this;
    for (int& s : r.entries_) s = -s;
    return r;
  }

  Index prefix(std::size_t len) const {
    return Index(std::vector<int>(entries_.begin(), entries_.begin() + static_cast<std::ptrdiff_t>(len)));
  }
  Index suffix_from(std::size_t pos) const {
    return Index(std::vector<int>(entries_.begin() + static_cast<std::ptrdiff_t>(pos), entries_.end()));
  }

  auto operator<=>(const Index&) const = default;

  std::string str() const { return "(" + csv() + ")"; }

  /// Entries joined by commas, without brackets.
  std::string csv() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < entries_.size(); ++i) os << (i ? "," : "") << entries_[i];
    return os.str();
  }

 private:
  std::vector<int> entries_;
};

}  // namespace fmzv
