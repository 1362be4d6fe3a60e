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

namespace paritylab {

/// Integer partition: weakly decreasing positive parts.
class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    int n() const { return n_; }
    int length() const { return (int)parts_.size(); }
    int part(int i) const { return parts_[i]; }
    const std::vector<int> &parts() const { return parts_; }

    Partition transpose() const;
    bool self_conjugate() const { return parts_ == transpose().parts_; }

    /// +1 for even cycle types, -1 for odd ones.
    int parity_sign() const;

    bool operator==(const Partition &o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition &o) const { return parts_ != o.parts_; }
    bool operator<(const Partition &o) const { return parts_ < o.parts_; }

    /// Comma-separated parts, e.g. "3,1,1".
    std::string str() const;
    static Partition parse(const std::string &text);

  private:
    std::vector<int> parts_;
    int n_ = 0;
};

/// All partitions of n with at most max_length parts, in reverse-lexicographic
/// order ([n] first, [1^n] last).
std::vector<Partition> partitions_of(int n, int max_length);
inline std::vector<Partition> partitions_of(int n) { return partitions_of(n, n); }

/// Hook length of every box, in diagram layout.
std::vector<std::vector<int>> hook_lengths(const Partition &lambda);

/// Dimension of the symmetric-group irrep (hook-length formula).
unsigned long long dim_sn(const Partition &lambda);

/// Dimension of the SU(d) irrep (Weyl formula); 0 when the diagram has more
/// than d rows.
unsigned long long dim_sud(const Partition &lambda, int d);

/// Hook lengths of the diagonal boxes of a self-conjugate diagram: a
/// partition of n into distinct odd parts. Throws unless lambda is
/// self-conjugate.
Partition diagonal_hooks(const Partition &lambda);

}  // namespace paritylab
