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

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "paritylab/errors.hpp"
#include "paritylab/json_io.hpp"

namespace pl = paritylab;

namespace {

struct GlobalOpts {
    std::string format = "text";
    std::uint64_t seed = 0;
    std::string out;
};

void emit(const GlobalOpts &g, const std::string &text) {
    if (g.out.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream f(g.out);
    if (!f) throw pl::DomainError("cannot open output file " + g.out);
    f << text;
    if (!text.empty() && text.back() != '\n') f << "\n";
}

void emit_json(const GlobalOpts &g, const pl::json &j) { emit(g, j.dump(2)); }

pl::StateVector load_state(const std::string &path) {
    std::ifstream f(path);
    if (!f) throw pl::DomainError("cannot open state file " + path);
    pl::json j;
    f >> j;
    return pl::state_from_json(j);
}

std::vector<pl::cdouble> parse_coeffs(const std::string &text) {
    std::vector<pl::cdouble> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        size_t colon = tok.find(':');
        if (colon == std::string::npos)
            out.push_back(pl::cdouble(std::stod(tok), 0));
        else
            out.push_back(pl::cdouble(std::stod(tok.substr(0, colon)), std::stod(tok.substr(colon + 1))));
    }
    return out;
}

std::string state_text(const pl::StateVector &s) {
    std::ostringstream os;
    os << "n=" << s.n() << " d=" << s.d() << " mode=" << (s.mode() == pl::AmpMode::Exact ? "exact" : "float")
       << " terms=" << s.term_count() << "\n";
    if (s.mode() == pl::AmpMode::Exact) {
        for (const auto &[code, amp] : s.exact_amps())
            os << "  |" << pl::Ket{s.n(), s.d(), code}.str() << ">  " << amp.str() << "\n";
    } else {
        for (const auto &[code, amp] : s.float_amps())
            os << "  |" << pl::Ket{s.n(), s.d(), code}.str() << ">  (" << amp.real() << ", " << amp.imag()
               << ")\n";
    }
    return os.str();
}

pl::SplitTag parse_branch(const std::string &b) {
    if (b == "a") return pl::SplitTag::A;
    if (b == "b") return pl::SplitTag::B;
    throw CLI::ValidationError("--branch", "must be 'a' or 'b'");
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"parity-detecting states of permuted qudits: tables, builders, checks"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOpts g;
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", g.seed, "Seed for randomized commands");
    app.add_option("--out", g.out, "Write output to a file instead of stdout");

    // chartab
    std::string ct_group = "S";
    int ct_n = 4;
    auto *chartab = app.add_subcommand("chartab", "Character table of S_n or A_n");
    chartab->add_option("--group", ct_group, "S or A")->check(CLI::IsMember({"S", "A"}));
    chartab->add_option("--n", ct_n, "Degree")->required()->check(CLI::PositiveNumber);

    // dims
    int dm_n = 4, dm_d = 2;
    bool dm_rank = false;
    auto *dims = app.add_subcommand("dims", "Dimension bookkeeping of the two group actions");
    dims->add_option("--n", dm_n, "Number of qudits")->required()->check(CLI::PositiveNumber);
    dims->add_option("--d", dm_d, "Local dimension")->required()->check(CLI::PositiveNumber);
    dims->add_flag("--rank", dm_rank, "Also measure projector ranks numerically");

    // mechanisms
    int mech_n = 4, mech_d = 2;
    auto *mech = app.add_subcommand("mechanisms", "Classify admissible diagrams at (n, d)");
    mech->add_option("--n", mech_n, "Number of qudits")->required()->check(CLI::PositiveNumber);
    mech->add_option("--d", mech_d, "Local dimension")->required()->check(CLI::PositiveNumber);

    // state
    int st_n = 0, st_d = 0;
    std::string st_method = "self-conjugate", st_lambda, st_branch = "a", st_seed_ket, st_coeffs;
    auto *state = app.add_subcommand("state", "Build a parity-detecting state");
    state->add_option("--n", st_n, "Number of qudits")->required()->check(CLI::PositiveNumber);
    state->add_option("--d", st_d, "Local dimension")->required()->check(CLI::PositiveNumber);
    state->add_option("--method", st_method, "Construction method")
        ->check(CLI::IsMember({"self-conjugate", "conjugate-pair"}));
    state->add_option("--lambda", st_lambda, "Diagram, comma-separated parts")->required();
    state->add_option("--branch", st_branch, "a or b (self-conjugate)")->check(CLI::IsMember({"a", "b"}));
    state->add_option("--seed-ket", st_seed_ket, "Seed ket digits (self-conjugate)");
    state->add_option("--coeffs", st_coeffs, "Comma-separated coefficients, re or re:im (conjugate-pair)");

    // verify
    std::string vf_state;
    auto *verify = app.add_subcommand("verify", "Check the even/odd orbit orthogonality of a state");
    verify->add_option("--state", vf_state, "State JSON file")->required();

    // simulate
    std::string sm_state;
    std::uint64_t sm_trials = 1000;
    bool sm_allow_invalid = false, sm_log = false;
    auto *sim = app.add_subcommand("simulate", "Sample the discrimination protocol");
    sim->add_option("--state", sm_state, "State JSON file")->required();
    sim->add_option("--trials", sm_trials, "Number of trials");
    sim->add_flag("--allow-invalid", sm_allow_invalid, "Simulate even if the parity check fails");
    sim->add_flag("--log", sm_log, "Include the per-trial log in JSON output");

    // gme
    std::string gm_state, gm_lambda, gm_branch = "a";
    int gm_n = 0, gm_d = 0, gm_restarts = 64, gm_sweeps = 500;
    double gm_tol = 1e-12;
    bool gm_fix_first = false;
    auto *gme = app.add_subcommand("gme", "Entanglement floor of a detecting subspace or state");
    gme->add_option("--state", gm_state, "State JSON file (pure-state mode)");
    gme->add_option("--n", gm_n, "Number of qudits (projector mode)");
    gme->add_option("--d", gm_d, "Local dimension (projector mode)");
    gme->add_option("--lambda", gm_lambda, "Self-conjugate diagram (projector mode)");
    gme->add_option("--branch", gm_branch, "a or b")->check(CLI::IsMember({"a", "b"}));
    gme->add_option("--restarts", gm_restarts, "Random restarts")->check(CLI::PositiveNumber);
    gme->add_option("--max-sweeps", gm_sweeps, "Sweep cap per restart")->check(CLI::PositiveNumber);
    gme->add_option("--tol", gm_tol, "Convergence tolerance on the objective");
    gme->add_flag("--fix-first-site", gm_fix_first, "Pin the first site to |0>");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        if (*chartab) {
            pl::CharacterTable t =
                ct_group == "S" ? pl::sn_table(ct_n) : pl::an_table(ct_n);
            if (g.format == "json")
                emit_json(g, pl::table_to_json(t));
            else
                emit(g, t.render_text());
        } else if (*dims) {
            pl::SchurWeylAudit a = pl::schur_weyl_audit(dm_n, dm_d, dm_rank);
            if (g.format == "json") {
                emit_json(g, pl::audit_to_json(a));
            } else {
                std::ostringstream os;
                os << a.balance_line() << "\n";
                if (dm_rank)
                    os << (a.ranks_match ? "projector ranks match" : "projector ranks MISMATCH") << "\n";
                emit(g, os.str());
            }
            if (!a.balanced) return 3;
        } else if (*mech) {
            emit_json(g, pl::mechanisms_to_json(pl::feasible_mechanisms(mech_n, mech_d)));
        } else if (*state) {
            pl::ParityRecipe recipe;
            recipe.n = st_n;
            recipe.d = st_d;
            recipe.lambda = pl::Partition::parse(st_lambda);
            pl::StateVector built(1, 1, pl::AmpMode::Exact);
            if (st_method == "self-conjugate") {
                recipe.method = pl::BuildMethod::SelfConjugate;
                recipe.branch = parse_branch(st_branch);
                if (!st_seed_ket.empty()) recipe.seed_ket = pl::Ket::parse(st_seed_ket, st_d);
                built = pl::build_self_conjugate(recipe);
            } else {
                recipe.method = pl::BuildMethod::ConjugatePair;
                recipe.coefficients = st_coeffs.empty() ? std::vector<pl::cdouble>{pl::cdouble(1, 0)}
                                                        : parse_coeffs(st_coeffs);
                built = pl::build_conjugate_pair(recipe);
            }
            if (g.format == "json") {
                pl::json out = pl::state_to_json(built);
                out["recipe"] = pl::recipe_to_json(recipe);
                emit_json(g, out);
            } else {
                emit(g, state_text(built));
            }
        } else if (*verify) {
            pl::StateVector s = load_state(vf_state);
            pl::ParityCheck c = pl::verify_parity(s);
            if (g.format == "json") {
                pl::json out = pl::parity_check_to_json(c);
                out["state_file"] = vf_state;
                out["tolerance"] = 1e-10;
                emit_json(g, out);
            } else {
                std::ostringstream os;
                os << (c.valid ? "valid" : "INVALID") << "  max cross overlap " << c.max_cross_overlap
                   << "  (" << c.n_even << " even, " << c.n_odd << " odd)\n";
                emit(g, os.str());
            }
        } else if (*sim) {
            pl::StateVector s = load_state(sm_state);
            pl::SimulationReport r = pl::simulate(s, sm_trials, g.seed, sm_allow_invalid);
            if (g.format == "json") {
                pl::json out = pl::simulation_to_json(r, sm_log);
                out["state_file"] = sm_state;
                emit_json(g, out);
            } else {
                std::ostringstream os;
                os << "trials " << r.trials << "  successes " << r.successes << "  empirical_Ps "
                   << r.empirical_ps << "  seed " << r.seed << "\n";
                emit(g, os.str());
            }
        } else if (*gme) {
            pl::SeesawOptions opts;
            opts.restarts = gm_restarts;
            opts.max_sweeps = gm_sweeps;
            opts.tol = gm_tol;
            opts.seed = g.seed;
            opts.fix_first_site = gm_fix_first;
            pl::GmeResult r;
            pl::json provenance;
            if (!gm_state.empty()) {
                pl::StateVector s = load_state(gm_state);
                r = pl::gme_of_pure_state(s, opts);
                provenance["state_file"] = gm_state;
            } else {
                if (gm_n <= 0 || gm_d <= 0 || gm_lambda.empty())
                    throw CLI::ValidationError("gme", "need --state or the full --n/--d/--lambda triple");
                pl::Partition lambda = pl::Partition::parse(gm_lambda);
                pl::AlgebraElement proj =
                    pl::projector_element({lambda, parse_branch(gm_branch)}, pl::GroupKind::A, gm_n);
                r = pl::seesaw(pl::algebra_matrix(proj, gm_d), gm_n, gm_d, opts);
                provenance = pl::json{{"n", gm_n}, {"d", gm_d}, {"lambda", gm_lambda}, {"branch", gm_branch}};
            }
            if (g.format == "json") {
                pl::json out = pl::gme_to_json(r, g.seed);
                out["tol"] = gm_tol;
                out["provenance"] = provenance;
                emit_json(g, out);
            } else {
                std::ostringstream os;
                os << "E " << r.entanglement << "  max_overlap " << r.max_overlap << "  converged "
                   << (r.converged ? "yes" : "no") << "  restarts " << r.restarts_used << "  sweeps "
                   << r.sweeps << "\n";
                emit(g, os.str());
            }
        }
    } catch (const CLI::ValidationError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const pl::BoundError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const pl::DomainError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
