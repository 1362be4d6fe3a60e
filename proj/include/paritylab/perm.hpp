// Copyright 2026 The ParityLab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <vector>

#include "paritylab/partition.hpp"

namespace paritylab {

/// Bijection of {1..n}. Points are 1-based in the text format and the
/// cycle structure; storage and image0() are 0-based.
class Permutation {
  public:
    Permutation() = default;
    /// Identity of the given degree.
    explicit Permutation(int n);
    /// From 0-based images: img[i] is the image of point i.
    static Permutation from_images0(std::vector<int> img);

    int degree() const { return (int)img_.size(); }
    int image0(int i) const { return img_[i]; }
    const std::vector<int> &images0() const { return img_; }

    bool is_identity() const;
    Permutation inverse() const;
    int sign() const;
    Partition cycle_type() const;
    /// Disjoint cycles, each rotated to start at its minimal point, sorted by
    /// minimal point (0-based points). Fixed points included iff requested.
    std::vector<std::vector<int>> cycles0(bool include_fixed = false) const;

    bool operator==(const Permutation &o) const { return img_ == o.img_; }
    bool operator!=(const Permutation &o) const { return img_ != o.img_; }
    bool operator<(const Permutation &o) const { return img_ < o.img_; }

    /// Cycle notation with 1-based points, fixed points omitted, "e" for the
    /// identity: "(1,2,3)(4,5)".
    std::string str() const;
    static Permutation parse(const std::string &text, int n);

  private:
    std::vector<int> img_;
};

/// result(k) = outer(inner(k)): inner is applied first.
Permutation compose(const Permutation &outer, const Permutation &inner);
/// h * p * h^{-1}
Permutation conjugate(const Permutation &p, const Permutation &h);

enum class GroupKind { S, A };

/// Number of elements with the given cycle type.
unsigned long long class_size(const Partition &lambda);

unsigned long long factorial(int n);

/// Default cap on full group enumeration; override with the
/// PARITYLAB_ENUM_BOUND environment variable.
int enumeration_bound();

/// All of S_n or A_n in lexicographic order of image sequences.
std::vector<Permutation> enumerate_group(int n, GroupKind which);

/// Permutation with index `rank` in the lexicographic order of S_n
/// (factorial number system decoding).
Permutation unrank_permutation(int n, unsigned long long rank);

}  // namespace paritylab
