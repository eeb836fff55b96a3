#include "redprod/index_set.hpp"

#include <algorithm>

#include "redprod/errors.hpp"

namespace redprod {

IndexSet::IndexSet(int universe) : universe_(universe), bits_(universe, false) {
  if (universe < 0) throw InputError("index-set universe must be nonnegative");
}

IndexSet::IndexSet(int universe, std::initializer_list<int> elems) : IndexSet(universe) {
  for (int e : elems) insert(e);
}

IndexSet IndexSet::full(int universe) {
  IndexSet s(universe);
  std::fill(s.bits_.begin(), s.bits_.end(), true);
  return s;
}

IndexSet IndexSet::of(int universe, const std::vector<int>& elems) {
  IndexSet s(universe);
  for (int e : elems) s.insert(e);
  return s;
}

int IndexSet::count() const {
  return static_cast<int>(std::count(bits_.begin(), bits_.end(), true));
}

bool IndexSet::contains(int i) const {
  return i >= 0 && i < universe_ && bits_[i];
}

void IndexSet::insert(int i) {
  if (i < 0 || i >= universe_) throw InputError("index out of range");
  bits_[i] = true;
}

void IndexSet::erase(int i) {
  if (i < 0 || i >= universe_) throw InputError("index out of range");
  bits_[i] = false;
}

void IndexSet::check_universe(const IndexSet& other) const {
  if (universe_ != other.universe_)
    throw InputError("index sets over different universes");
}

bool IndexSet::subset_of(const IndexSet& other) const {
  check_universe(other);
  for (int i = 0; i < universe_; ++i)
    if (bits_[i] && !other.bits_[i]) return false;
  return true;
}

IndexSet IndexSet::intersect(const IndexSet& other) const {
  check_universe(other);
  IndexSet r(universe_);
  for (int i = 0; i < universe_; ++i) r.bits_[i] = bits_[i] && other.bits_[i];
  return r;
}

IndexSet IndexSet::unite(const IndexSet& other) const {
  check_universe(other);
  IndexSet r(universe_);
  for (int i = 0; i < universe_; ++i) r.bits_[i] = bits_[i] || other.bits_[i];
  return r;
}

IndexSet IndexSet::difference(const IndexSet& other) const {
  check_universe(other);
  IndexSet r(universe_);
  for (int i = 0; i < universe_; ++i) r.bits_[i] = bits_[i] && !other.bits_[i];
  return r;
}

IndexSet IndexSet::complement() const {
  IndexSet r(universe_);
  for (int i = 0; i < universe_; ++i) r.bits_[i] = !bits_[i];
  return r;
}

std::vector<int> IndexSet::elements() const {
  std::vector<int> out;
  for (int i = 0; i < universe_; ++i)
    if (bits_[i]) out.push_back(i);
  return out;
}

}  // namespace redprod
