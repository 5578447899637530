#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <mutex>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "elset/errors.hpp"

namespace elset {

inline bool valid_atom_name(std::string_view s) {
  if (s.empty() || s[0] < 'a' || s[0] > 'z') return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
  });
}

// A propositional atom. Names are interned process-wide, so equal names are
// the identical atom and equality is a pointer comparison. Ordering is
// lexicographic by name.
class Atom {
 public:
  static Atom make(std::string_view name) {
    if (!valid_atom_name(name)) {
      throw InvalidAtomName("invalid atom name '" + std::string(name) + "'");
    }
    static std::mutex mutex;
    static std::unordered_set<std::string> table;  // node-based: stable addresses
    std::scoped_lock lock(mutex);
    auto [it, inserted] = table.emplace(name);
    (void)inserted;
    return Atom(&*it);
  }

  const std::string& name() const { return *name_; }

  friend bool operator==(Atom a, Atom b) { return a.name_ == b.name_; }
  friend bool operator!=(Atom a, Atom b) { return a.name_ != b.name_; }
  friend bool operator<(Atom a, Atom b) { return *a.name_ < *b.name_; }
  friend bool operator>(Atom a, Atom b) { return b < a; }
  friend bool operator<=(Atom a, Atom b) { return !(b < a); }
  friend bool operator>=(Atom a, Atom b) { return !(a < b); }

 private:
  explicit Atom(const std::string* name) : name_(name) {}
  const std::string* name_;

  friend struct std::hash<Atom>;
};

}  // namespace elset

template <>
struct std::hash<elset::Atom> {
  std::size_t operator()(elset::Atom a) const noexcept {
    return std::hash<const std::string*>()(a.name_);
  }
};

namespace elset {

// A canonical (sorted, duplicate-free) set of atoms. Iteration order is
// lexicographic by atom name.
class AtomSet {
 public:
  AtomSet() = default;

  explicit AtomSet(std::vector<Atom> atoms) : members_(std::move(atoms)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  }

  AtomSet(std::initializer_list<Atom> atoms) : AtomSet(std::vector<Atom>(atoms)) {}

  bool empty() const { return members_.empty(); }
  std::size_t size() const { return members_.size(); }
  const std::vector<Atom>& members() const { return members_; }

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  bool contains(Atom a) const {
    return std::binary_search(members_.begin(), members_.end(), a);
  }

  bool subset_of(const AtomSet& other) const {
    return std::includes(other.members_.begin(), other.members_.end(), members_.begin(),
                         members_.end());
  }

  bool proper_subset_of(const AtomSet& other) const {
    return size() < other.size() && subset_of(other);
  }

  bool intersects(const AtomSet& other) const {
    auto i = members_.begin();
    auto j = other.members_.begin();
    while (i != members_.end() && j != other.members_.end()) {
      if (*i == *j) return true;
      if (*i < *j) {
        ++i;
      } else {
        ++j;
      }
    }
    return false;
  }

  friend bool operator==(const AtomSet& a, const AtomSet& b) { return a.members_ == b.members_; }
  friend bool operator!=(const AtomSet& a, const AtomSet& b) { return !(a == b); }

 private:
  std::vector<Atom> members_;
};

inline AtomSet set_union(const AtomSet& a, const AtomSet& b) {
  std::vector<Atom> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return AtomSet(std::move(out));
}

inline AtomSet set_intersection(const AtomSet& a, const AtomSet& b) {
  std::vector<Atom> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return AtomSet(std::move(out));
}

inline AtomSet set_difference(const AtomSet& a, const AtomSet& b) {
  std::vector<Atom> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return AtomSet(std::move(out));
}

inline AtomSet without_atom(const AtomSet& a, Atom gone) {
  std::vector<Atom> out;
  out.reserve(a.size());
  for (Atom m : a) {
    if (m != gone) out.push_back(m);
  }
  return AtomSet(std::move(out));
}

// Canonical output order for collections of sets: by size first, then
// lexicographically by member names.
struct CanonicalSetOrder {
  bool operator()(const AtomSet& a, const AtomSet& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }
};

namespace detail {

// Enumerates nonempty subsets of `base` in canonical order (increasing size,
// lexicographic within a size). `fn` returns false to stop early; the
// function returns false iff stopped. With `proper_only`, `base` itself is
// skipped.
template <typename F>
bool for_each_nonempty_subset(const AtomSet& base, F&& fn, bool proper_only = false) {
  const auto& atoms = base.members();
  const std::size_t n = atoms.size();
  const std::size_t max_k = proper_only ? (n == 0 ? 0 : n - 1) : n;
  std::vector<Atom> buffer;
  for (std::size_t k = 1; k <= max_k; ++k) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      buffer.clear();
      for (std::size_t i : idx) buffer.push_back(atoms[i]);
      if (!fn(AtomSet(std::vector<Atom>(buffer)))) return false;
      // advance to next k-combination in lexicographic index order
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return true;
}

template <typename F>
bool for_each_nonempty_proper_subset(const AtomSet& base, F&& fn) {
  return for_each_nonempty_subset(base, std::forward<F>(fn), /*proper_only=*/true);
}

// All subsets including the empty one, canonical order.
template <typename F>
bool for_each_subset(const AtomSet& base, F&& fn) {
  if (!fn(AtomSet{})) return false;
  return for_each_nonempty_subset(base, std::forward<F>(fn));
}

}  // namespace detail

}  // namespace elset
