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

#ifndef RANDGREEDI_ELEMENT_SET_H_
#define RANDGREEDI_ELEMENT_SET_H_

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace randgreedi {

// Dense non-negative index into a ground set.
using ElementId = int;

// A set of ground-set elements kept in canonical form: ascending ids, no
// duplicates. Constructing from any permutation with duplicates yields the
// same representation, so sets compare with operator==.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::vector<ElementId> ids);
  ElementSet(std::initializer_list<ElementId> ids);

  // {0, 1, ..., n-1}.
  static ElementSet Range(int n);

  bool Contains(ElementId e) const;
  ElementSet With(ElementId e) const;
  ElementSet Without(ElementId e) const;

  static ElementSet UnionOf(const ElementSet& a, const ElementSet& b);
  static ElementSet IntersectionOf(const ElementSet& a, const ElementSet& b);
  static ElementSet DifferenceOf(const ElementSet& a, const ElementSet& b);

  int size() const { return static_cast<int>(ids_.size()); }
  bool empty() const { return ids_.empty(); }
  const std::vector<ElementId>& ids() const { return ids_; }
  ElementId operator[](std::size_t i) const { return ids_[i]; }

  std::vector<ElementId>::const_iterator begin() const { return ids_.begin(); }
  std::vector<ElementId>::const_iterator end() const { return ids_.end(); }

  bool operator==(const ElementSet&) const = default;

 private:
  std::vector<ElementId> ids_;
};

}  // namespace randgreedi

#endif  // RANDGREEDI_ELEMENT_SET_H_
