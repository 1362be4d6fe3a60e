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

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "paritylab/json_io.hpp"
#include "support/golden_states.hpp"

using namespace paritylab;

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run_cli(const std::string &args) {
    std::string cmd = std::string(PARITYLAB_BIN) + " " + args + " 2>&1";
    FILE *pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("cyclotomic JSON round-trip") {
    for (const Cyclo &c : {Cyclo(mpq_class(-7, 3)), Cyclo::zeta(5, 2), Cyclo::sqrt_integer(2),
                           (Cyclo(1) + Cyclo::from_sqrt_rational(5)) * Cyclo(mpq_class(1, 2))}) {
        json j = cyclo_to_json(c);
        CHECK(cyclo_from_json(j) == c);
    }
    json j = cyclo_to_json(Cyclo::zeta(3));
    CHECK(j["conductor"] == 3);
    CHECK(j["coeffs"][1][0] == "1");
    CHECK(j["coeffs"][1][1] == "1");
}

TEST_CASE("state JSON round-trip in both modes") {
    StateVector exact = golden::five_qutrit_state();
    CHECK(state_from_json(state_to_json(exact)) == exact);
    StateVector flt = golden::m4_state().normalized();
    StateVector back = state_from_json(state_to_json(flt));
    CHECK(back == flt);
    json j = state_to_json(exact);
    CHECK(j["mode"] == "exact");
    CHECK(j["amplitudes"][0]["ket"] == "00012");
}

TEST_CASE("recipe JSON round-trip") {
    ParityRecipe r{5, 3, BuildMethod::SelfConjugate, Partition({3, 1, 1}), SplitTag::A,
                   Ket::parse("00012", 3), {}};
    ParityRecipe back = recipe_from_json(recipe_to_json(r));
    CHECK(back.n == 5);
    CHECK(back.lambda == r.lambda);
    CHECK(back.branch == SplitTag::A);
    CHECK(back.seed_ket->code == r.seed_ket->code);

    ParityRecipe p{4, 3, BuildMethod::ConjugatePair, Partition({3, 1}), SplitTag::None, std::nullopt,
                   {cdouble(1, 0), cdouble(0, -2)}};
    ParityRecipe pback = recipe_from_json(recipe_to_json(p));
    CHECK(pback.method == BuildMethod::ConjugatePair);
    REQUIRE(pback.coefficients.size() == 2);
    CHECK(pback.coefficients[1] == cdouble(0, -2));
}

TEST_CASE("tableau lists serialize") {
    json syt = tableaux_to_json(enumerate_syt(Partition({3, 1})));
    REQUIRE(syt.size() == 3);
    CHECK(syt[0]["rows"] == "123/4");
    CHECK(syt[0]["shape"] == "3,1");
    json ssyt = tableaux_to_json(enumerate_ssyt(Partition({2, 1}), 2));
    CHECK(ssyt.size() == 2);
}

TEST_CASE("table JSON carries the layout and the convention note") {
    json j = table_to_json(an_table(4));
    CHECK(j["group"] == "A");
    CHECK(j["classes"].size() == 4);
    CHECK(j["irreps"].size() == 4);
    CHECK(j["values"].size() == 4);
    CHECK(j.contains("split_convention"));
    json s = table_to_json(sn_table(3));
    CHECK_FALSE(s.contains("split_convention"));
}

TEST_CASE("cli: chartab renders the reference layout") {
    RunResult text = run_cli("chartab --group A --n 5");
    CHECK(text.exit_code == 0);
    CHECK(text.output.find("X[3,1^2]a") != std::string::npos);
    CHECK(text.output.find("(1+sqrt(5))/2") != std::string::npos);
    RunResult js = run_cli("chartab --group S --n 4 --format json");
    CHECK(js.exit_code == 0);
    json parsed = json::parse(js.output);
    CHECK(parsed["n"] == 4);
    CHECK(parsed["values"].size() == 5);
    RunResult bad = run_cli("chartab --group A --n 0");
    CHECK(bad.exit_code == 2);
}

TEST_CASE("cli: dims prints balance lines") {
    RunResult r = run_cli("dims --n 5 --d 3");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("243 = 21+96+75+36+15") != std::string::npos);
    RunResult r2 = run_cli("dims --n 4 --d 2 --rank");
    CHECK(r2.output.find("16 = 5+9+2") != std::string::npos);
    CHECK(r2.output.find("projector ranks match") != std::string::npos);
    RunResult r3 = run_cli("dims --n 1 --d 1");
    CHECK(r3.output.find("1 = 1") != std::string::npos);
}

TEST_CASE("cli: enumeration bound honors the environment override") {
    RunResult r = run_cli("chartab --group S --n 6");
    CHECK(r.exit_code == 0);
    std::string cmd = "env PARITYLAB_ENUM_BOUND=5 " + std::string(PARITYLAB_BIN) + " chartab --group S --n 6";
    FILE *pipe = popen((cmd + " >/dev/null 2>&1; echo $?").c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[16] = {0};
    REQUIRE(fgets(buf, sizeof buf, pipe) != nullptr);
    pclose(pipe);
    CHECK(std::stoi(buf) == 4);
}

TEST_CASE("cli: state, verify, simulate pipeline") {
    std::string dir = std::string(PARITYLAB_TMP);
    std::string state_path = dir + "/cli_state.json";
    RunResult build = run_cli("state --n 4 --d 2 --method self-conjugate --lambda 2,2 --branch a "
                              "--seed-ket 0011 --format json --out " +
                              state_path);
    REQUIRE(build.exit_code == 0);
    std::ifstream f(state_path);
    REQUIRE(f.good());
    json parsed;
    f >> parsed;
    StateVector loaded = state_from_json(parsed);
    CHECK(proportional_exact(loaded, golden::m4_state()).has_value());

    RunResult verify = run_cli("verify --state " + state_path + " --format json");
    CHECK(verify.exit_code == 0);
    json vj = json::parse(verify.output);
    CHECK(vj["valid"] == true);

    RunResult sim = run_cli("simulate --state " + state_path + " --trials 200 --seed 9 --format json");
    CHECK(sim.exit_code == 0);
    json sj = json::parse(sim.output);
    CHECK(sj["empirical_Ps"] == 1.0);
    CHECK(sj["trials"] == 200);

    RunResult sim2 = run_cli("simulate --state " + state_path + " --trials 200 --seed 9 --format json");
    CHECK(sim2.output == sim.output);  // byte-identical under a fixed seed

    RunResult annihilated = run_cli("state --n 4 --d 2 --lambda 2,2 --branch a --seed-ket 0000");
    CHECK(annihilated.exit_code == 3);

    RunResult too_big = run_cli("chartab --group S --n 12");
    CHECK(too_big.exit_code == 4);
}

TEST_CASE("cli: gme on the three-qubit subspace") {
    RunResult r = run_cli("gme --n 3 --d 2 --lambda 2,1 --branch a --restarts 16 --seed 4 --format json");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.output);
    CHECK(std::abs(j["E"].get<double>() - 5.0 / 9) < 1e-9);
    CHECK(j["converged"] == true);
    CHECK(j["witness"].size() == 3);
    // restart-parallel runs reduce deterministically
    RunResult again = run_cli("gme --n 3 --d 2 --lambda 2,1 --branch a --restarts 16 --seed 4 --format json");
    CHECK(again.output == r.output);
}

TEST_CASE("cli: chartab JSON values parse back into exact numbers") {
    RunResult r = run_cli("chartab --group A --n 5 --format json");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.output);
    CharacterTable t = an_table(5);
    REQUIRE(j["values"].size() == t.irreps.size());
    for (size_t i = 0; i < t.irreps.size(); ++i)
        for (size_t c = 0; c < t.classes.size(); ++c)
            CHECK(cyclo_from_json(j["values"][i][c]) == t.values[i][c]);
}
