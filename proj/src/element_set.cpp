// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "randgreedi/element_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace randgreedi {

namespace {

void Canonicalize(std::vector<ElementId>& ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  if (!ids.empty() && ids.front() < 0) {
    throw std::invalid_argument("ElementSet: negative element id");
  }
}

}  // namespace

ElementSet::ElementSet(std::vector<ElementId> ids) : ids_(std::move(ids)) {
  Canonicalize(ids_);
}

ElementSet::ElementSet(std::initializer_list<ElementId> ids) : ids_(ids) {
  Canonicalize(ids_);
}

ElementSet ElementSet::Range(int n) {
  ElementSet s;
  s.ids_.resize(n > 0 ? n : 0);
  for (int i = 0; i < n; ++i) s.ids_[i] = i;
  return s;
}

bool ElementSet::Contains(ElementId e) const {
  return std::binary_search(ids_.begin(), ids_.end(), e);
}

ElementSet ElementSet::With(ElementId e) const {
  if (e < 0) throw std::invalid_argument("ElementSet: negative element id");
  ElementSet out;
  out.ids_.reserve(ids_.size() + 1);
  auto it = std::lower_bound(ids_.begin(), ids_.end(), e);
  if (it != ids_.end() && *it == e) return *this;
  out.ids_.assign(ids_.begin(), it);
  out.ids_.push_back(e);
  out.ids_.insert(out.ids_.end(), it, ids_.end());
  return out;
}

ElementSet ElementSet::Without(ElementId e) const {
  ElementSet out = *this;
  auto it = std::lower_bound(out.ids_.begin(), out.ids_.end(), e);
  if (it != out.ids_.end() && *it == e) out.ids_.erase(it);
  return out;
}

ElementSet ElementSet::UnionOf(const ElementSet& a, const ElementSet& b) {
  ElementSet out;
  out.ids_.reserve(a.ids_.size() + b.ids_.size());
  std::set_union(a.ids_.begin(), a.ids_.end(), b.ids_.begin(), b.ids_.end(),
                 std::back_inserter(out.ids_));
  return out;
}

ElementSet ElementSet::IntersectionOf(const ElementSet& a,
                                      const ElementSet& b) {
  ElementSet out;
  std::set_intersection(a.ids_.begin(), a.ids_.end(), b.ids_.begin(),
                        b.ids_.end(), std::back_inserter(out.ids_));
  return out;
}

ElementSet ElementSet::DifferenceOf(const ElementSet& a, const ElementSet& b) {
  ElementSet out;
  std::set_difference(a.ids_.begin(), a.ids_.end(), b.ids_.begin(),
                      b.ids_.end(), std::back_inserter(out.ids_));
  return out;
}

}  // namespace randgreedi
