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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "paritylab/cyclotomic.hpp"
#include "paritylab/errors.hpp"
#include "paritylab/rng.hpp"

using namespace paritylab;

namespace {

Cyclo random_cyclo(SplitMix64 &rng) {
    static const long conds[] = {1, 3, 4, 5, 8};
    Cyclo v(0);
    int terms = 1 + (int)rng.below(3);
    for (int t = 0; t < terms; ++t) {
        long n = conds[rng.below(5)];
        long num = (long)rng.below(7) - 3;
        v += Cyclo(mpq_class(num, 1 + (long)rng.below(3))) * Cyclo::zeta(n, rng.below(n));
    }
    return v;
}

}  // namespace

TEST_CASE("primitive root identities") {
    Cyclo z3 = Cyclo::zeta(3);
    CHECK(z3 + z3 * z3 == Cyclo(-1));
    CHECK(Cyclo::zeta(8) * Cyclo::zeta(8) == Cyclo::zeta(4));
    CHECK(z3.conj() == Cyclo::zeta(3, 2));
    CHECK(Cyclo::zeta(6) == -Cyclo::zeta(3, 2));
    CHECK(Cyclo::zeta(2) == Cyclo(-1));
}

TEST_CASE("square roots embed as positive branches") {
    Cyclo r5 = Cyclo::from_sqrt_rational(5);
    CHECK(r5 * r5 == Cyclo(5));
    CHECK(r5.embed().real() == doctest::Approx(std::sqrt(5.0)).epsilon(1e-12));
    CHECK(std::abs(r5.embed().imag()) < 1e-12);
    CHECK(Cyclo::from_sqrt_rational(1) == Cyclo(1));
    CHECK(r5 == Cyclo::zeta(5, 1) - Cyclo::zeta(5, 2) - Cyclo::zeta(5, 3) + Cyclo::zeta(5, 4));
    Cyclo golden = (Cyclo(1) + r5) * Cyclo(mpq_class(1, 2));
    CHECK(golden.embed().real() == doctest::Approx(1.6180339887).epsilon(1e-10));
    CHECK(golden.str() == "(1+sqrt(5))/2");
    for (long k : {2L, 3L, 6L, 7L, 10L}) {
        Cyclo r = Cyclo::from_sqrt_rational(k);
        CHECK(r * r == Cyclo(k));
        CHECK(r.embed().real() == doctest::Approx(std::sqrt((double)k)).epsilon(1e-12));
    }
    CHECK_THROWS_AS(Cyclo::from_sqrt_rational(4), DomainError);
    CHECK_THROWS_AS(Cyclo::from_sqrt_rational(12), DomainError);
    // Negative radicands take the +i branch; handled internally for split
    // character values.
    CHECK((Cyclo(-1) + Cyclo::sqrt_integer(-3)) * Cyclo(mpq_class(1, 2)) == Cyclo::zeta(3));
}

TEST_CASE("numerical embedding") {
    CHECK(std::abs(Cyclo::zeta(4).embed() - std::complex<double>(0, 1)) < 1e-15);
    CHECK(std::abs((Cyclo::zeta(3) + Cyclo::zeta(3, 2)).embed() + 1.0) < 1e-15);
    SplitMix64 rng(3);
    for (int i = 0; i < 200; ++i) {
        Cyclo a = random_cyclo(rng), b = random_cyclo(rng);
        CHECK(std::abs((a * b).embed() - a.embed() * b.embed()) < 1e-10);
        CHECK(std::abs((a + b).embed() - (a.embed() + b.embed())) < 1e-10);
    }
}

TEST_CASE("conductor merging lands at minimal conductors") {
    Cyclo mixed = Cyclo::zeta(3) * Cyclo::zeta(4);
    CHECK(mixed.conductor() == 12);
    CHECK(mixed * Cyclo::zeta(12, 5) == Cyclo(1));  // z12^7 * z12^5 = z12^12
    CHECK((Cyclo::zeta(5) * Cyclo::zeta(5, 4)).conductor() == 1);
    CHECK((Cyclo::zeta(8) + Cyclo(1) - Cyclo::zeta(8)).conductor() == 1);
}

TEST_CASE("field axioms on random values") {
    SplitMix64 rng(9);
    for (int i = 0; i < 100; ++i) {
        Cyclo a = random_cyclo(rng);
        CHECK(a.conj().conj() == a);
        std::complex<double> ae = a.embed();
        CHECK(std::abs(a.conj().embed() - std::conj(ae)) < 1e-10);
        if (!a.is_zero()) CHECK(a * a.inverse() == Cyclo(1));
        Cyclo b = random_cyclo(rng), c = random_cyclo(rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("canonical form decides equality") {
    CHECK(Cyclo(mpq_class(2, 4)) == Cyclo(mpq_class(1, 2)));
    // Same value along two different construction routes.
    Cyclo via_gauss = Cyclo::sqrt_integer(-3);
    Cyclo via_roots = Cyclo::zeta(3) - Cyclo::zeta(3, 2);
    CHECK(via_gauss == via_roots);
    CHECK_FALSE(Cyclo::zeta(5) == Cyclo::zeta(7));
}

TEST_CASE("pretty printer picks recognizable forms") {
    CHECK(Cyclo(-1).str() == "-1");
    CHECK(Cyclo::zeta(3).str() == "z3");
    CHECK(Cyclo::zeta(3, 2).str() == "z3^2");
    CHECK((Cyclo(2) * Cyclo::zeta(4)).str() == "2*z4");
    CHECK(Cyclo(mpq_class(5, 3)).str() == "5/3");
    CHECK(((Cyclo(1) - Cyclo::from_sqrt_rational(5)) * Cyclo(mpq_class(1, 2))).str() == "(1-sqrt(5))/2");
}
