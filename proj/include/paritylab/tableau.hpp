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

#include <optional>
#include <string>
#include <vector>

#include "paritylab/partition.hpp"

namespace paritylab {

/// Filling of a Young diagram with 1..n, strictly increasing along rows and
/// down columns.
class StandardTableau {
  public:
    StandardTableau(Partition shape, std::vector<std::vector<int>> rows);

    const Partition &shape() const { return shape_; }
    const std::vector<std::vector<int>> &rows() const { return rows_; }
    int n() const { return shape_.n(); }

    /// 0-based row index of the box holding entry v (1-based entry).
    int row_of(int v) const;

    /// Tableau with the box holding the largest entry removed.
    StandardTableau removed_largest() const;

    /// Rows joined by '/', e.g. "123/4".
    std::string str() const;
    static StandardTableau parse(const std::string &text);

    bool operator==(const StandardTableau &o) const { return rows_ == o.rows_; }

  private:
    Partition shape_;
    std::vector<std::vector<int>> rows_;
};

/// Filling with values in {0..d-1}, weakly increasing along rows and strictly
/// increasing down columns.
class SemiStandardTableau {
  public:
    SemiStandardTableau(Partition shape, std::vector<std::vector<int>> rows);

    const Partition &shape() const { return shape_; }
    const std::vector<std::vector<int>> &rows() const { return rows_; }

    /// Multiplicity of each value in the filling (index = value).
    std::vector<int> content(int d) const;

    std::string str() const;

    bool operator==(const SemiStandardTableau &o) const { return rows_ == o.rows_; }

  private:
    Partition shape_;
    std::vector<std::vector<int>> rows_;
};

/// All standard tableaux of the given shape, ordered lexicographically by
/// row-reading word. Count equals dim_sn(shape).
std::vector<StandardTableau> enumerate_syt(const Partition &shape);

/// All semistandard tableaux over {0..d-1}, optionally restricted to a given
/// content (multiplicity per value). Unrestricted count equals dim_sud.
std::vector<SemiStandardTableau> enumerate_ssyt(const Partition &shape, int d,
                                                const std::optional<std::vector<int>> &content = std::nullopt);

}  // namespace paritylab
