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

#include <map>
#include <string>

#include "paritylab/characters.hpp"
#include "paritylab/cyclotomic.hpp"
#include "paritylab/perm.hpp"
#include "paritylab/tableau.hpp"

namespace paritylab {

/// Formal sum of degree-n permutations with cyclotomic coefficients.
/// Terms with zero coefficient are never stored.
class AlgebraElement {
  public:
    explicit AlgebraElement(int n) : n_(n) {}
    static AlgebraElement identity(int n);
    static AlgebraElement basis(const Permutation &p, const Cyclo &coeff = Cyclo(1));

    int degree() const { return n_; }
    const std::map<Permutation, Cyclo> &terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    Cyclo coeff(const Permutation &p) const;

    void add_term(const Permutation &p, const Cyclo &c);

    friend AlgebraElement operator+(const AlgebraElement &a, const AlgebraElement &b);
    friend AlgebraElement operator-(const AlgebraElement &a, const AlgebraElement &b);
    /// Convolution product: (a*b) applies b first.
    friend AlgebraElement operator*(const AlgebraElement &a, const AlgebraElement &b);
    AlgebraElement scaled(const Cyclo &c) const;

    /// sigma -> sigma^{-1} with conjugated coefficients.
    AlgebraElement adjoint() const;
    /// h (.) h^{-1} applied to every term.
    AlgebraElement conjugated_by(const Permutation &h) const;
    /// Same element viewed in a larger degree (points appended as fixed).
    AlgebraElement lifted(int n) const;

    bool operator==(const AlgebraElement &o) const { return n_ == o.n_ && terms_ == o.terms_; }
    bool operator!=(const AlgebraElement &o) const { return !(*this == o); }

    /// One "coefficient * cycles" line per term, in permutation order.
    std::string dump() const;

  private:
    int n_;
    std::map<Permutation, Cyclo> terms_;
};

/// Sum over the subgroup permuting entries within each row of T.
AlgebraElement row_sum(const StandardTableau &T);
/// Signed sum over the subgroup permuting entries within each column of T.
AlgebraElement col_sum(const StandardTableau &T);

/// Normalized symmetrizer (dim/n!) * row_sum * col_sum; idempotent.
AlgebraElement young_symmetrizer(const StandardTableau &T);

/// Hermitian variant built by the remove-largest-entry recursion; the family
/// over all standard tableaux of all shapes at fixed n is a complete set of
/// mutually orthogonal idempotents.
AlgebraElement generalized_symmetrizer(const StandardTableau &T);

/// Character projector as an algebra element, for S_n or A_n irrep labels.
/// Split labels require a self-conjugate partition and group A.
AlgebraElement projector_element(const IrrepLabel &label, GroupKind group, int n);

}  // namespace paritylab
