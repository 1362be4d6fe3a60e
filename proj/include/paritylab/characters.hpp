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

#include "paritylab/cyclotomic.hpp"
#include "paritylab/perm.hpp"

namespace paritylab {

enum class SplitTag { None, A, B };

std::string split_tag_str(SplitTag t);

/// Conjugacy class label: cycle type plus, for alternating-group classes that
/// separate in two, an a/b tag.
struct ClassLabel {
    Partition cycle_type;
    SplitTag split = SplitTag::None;

    bool operator==(const ClassLabel &o) const { return cycle_type == o.cycle_type && split == o.split; }
    std::string str() const;
};

/// Irrep label: partition plus a/b tag for the two halves of a self-conjugate
/// irrep restricted to the alternating group.
struct IrrepLabel {
    Partition partition;
    SplitTag split = SplitTag::None;

    bool operator==(const IrrepLabel &o) const { return partition == o.partition && split == o.split; }
    std::string str() const;
};

struct CharacterTable {
    GroupKind group;
    int n = 0;
    std::vector<ClassLabel> classes;
    std::vector<unsigned long long> sizes;
    std::vector<IrrepLabel> irreps;
    /// values[i][c] = character of irreps[i] on classes[c].
    std::vector<std::vector<Cyclo>> values;

    unsigned long long group_order() const;
    int class_index(const ClassLabel &c) const;
    int irrep_index(const IrrepLabel &l) const;
    const Cyclo &value(const IrrepLabel &l, const ClassLabel &c) const;

    /// Layout with a Class header row and a Size row, one row per character.
    std::string render_text() const;
};

/// Character of the S_n irrep lambda on the class of cycle type mu
/// (border-strip recursion). Both must be partitions of the same n.
long long mn_character(const Partition &lambda, const Partition &mu);

/// True when the class of this cycle type separates into two A_n classes
/// (all parts odd and pairwise distinct).
bool class_splits_in_an(const Partition &cycle_type);

/// Which half of a separated A_n class the (even) permutation lies in. The
/// "a" half is the one containing the canonical permutation that fills the
/// cycle lengths with consecutive points.
SplitTag an_class_half(const Permutation &sigma);

CharacterTable sn_table(int n);

std::vector<std::pair<ClassLabel, unsigned long long>> an_classes(int n);

CharacterTable an_table(int n);

/// Character of an A_n irrep evaluated on an explicit even permutation.
/// Needed per-element because split-irrep values depend on the class half.
Cyclo an_character(const IrrepLabel &label, const Permutation &sigma);

struct OrthogonalityReport {
    bool ok = true;
    std::vector<std::pair<int, int>> row_failures;
    std::vector<std::pair<int, int>> col_failures;
};

/// Exact check of the weighted row relation and the dual column relation.
OrthogonalityReport verify_orthogonality(const CharacterTable &t);

}  // namespace paritylab
