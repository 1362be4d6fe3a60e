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

#include "paritylab/json_io.hpp"

#include "paritylab/errors.hpp"

namespace paritylab {

json cyclo_to_json(const Cyclo &c) {
    json coeffs = json::array();
    for (const auto &q : c.coeffs())
        coeffs.push_back(json::array({q.get_num().get_str(), q.get_den().get_str()}));
    return json{{"conductor", c.conductor()}, {"coeffs", coeffs}};
}

Cyclo cyclo_from_json(const json &j) {
    long cond = j.at("conductor").get<long>();
    const json &coeffs = j.at("coeffs");
    Cyclo out(0);
    long k = 0;
    for (const auto &pair : coeffs) {
        mpq_class q(mpz_class(pair.at(0).get<std::string>()), mpz_class(pair.at(1).get<std::string>()));
        q.canonicalize();
        out += Cyclo(q) * Cyclo::zeta(cond, k);
        ++k;
    }
    return out;
}

json state_to_json(const StateVector &s) {
    json amps = json::array();
    if (s.mode() == AmpMode::Exact) {
        for (const auto &[code, amp] : s.exact_amps())
            amps.push_back(json{{"ket", Ket{s.n(), s.d(), code}.str()}, {"value", cyclo_to_json(amp)}});
    } else {
        for (const auto &[code, amp] : s.float_amps())
            amps.push_back(json{{"ket", Ket{s.n(), s.d(), code}.str()},
                                {"value", json::array({amp.real(), amp.imag()})}});
    }
    return json{{"n", s.n()},
                {"d", s.d()},
                {"mode", s.mode() == AmpMode::Exact ? "exact" : "float"},
                {"amplitudes", amps}};
}

StateVector state_from_json(const json &j) {
    int n = j.at("n").get<int>();
    int d = j.at("d").get<int>();
    std::string mode = j.at("mode").get<std::string>();
    if (mode != "exact" && mode != "float") throw DomainError("state JSON: unknown mode " + mode);
    StateVector s(n, d, mode == "exact" ? AmpMode::Exact : AmpMode::Float);
    for (const auto &entry : j.at("amplitudes")) {
        Ket k = Ket::parse(entry.at("ket").get<std::string>(), d);
        if (k.n != n) throw DomainError("state JSON: ket length mismatch");
        if (mode == "exact")
            s.add(k.code, cyclo_from_json(entry.at("value")));
        else
            s.add(k.code, cdouble(entry.at("value").at(0).get<double>(), entry.at("value").at(1).get<double>()));
    }
    return s;
}

json table_to_json(const CharacterTable &t) {
    json classes = json::array();
    for (size_t c = 0; c < t.classes.size(); ++c)
        classes.push_back(json{{"cycle_type", t.classes[c].cycle_type.str()},
                               {"split", split_tag_str(t.classes[c].split)},
                               {"size", t.sizes[c]}});
    json irreps = json::array();
    for (const auto &l : t.irreps)
        irreps.push_back(json{{"partition", l.partition.str()}, {"split", split_tag_str(l.split)}});
    json values = json::array();
    for (const auto &row : t.values) {
        json jrow = json::array();
        for (const auto &v : row) jrow.push_back(cyclo_to_json(v));
        values.push_back(jrow);
    }
    json out{{"group", t.group == GroupKind::S ? "S" : "A"},
             {"n", t.n},
             {"classes", classes},
             {"irreps", irreps},
             {"values", values}};
    if (t.group == GroupKind::A)
        out["split_convention"] =
            "class a holds the canonical consecutive-cycle element (degree-5 five-cycles pinned opposite); "
            "branch a carries the +sqrt value on class a";
    return out;
}

json tableaux_to_json(const std::vector<StandardTableau> &ts) {
    json out = json::array();
    for (const auto &t : ts) out.push_back(json{{"shape", t.shape().str()}, {"rows", t.str()}});
    return out;
}

json tableaux_to_json(const std::vector<SemiStandardTableau> &ts) {
    json out = json::array();
    for (const auto &t : ts) out.push_back(json{{"shape", t.shape().str()}, {"rows", t.str()}});
    return out;
}

namespace {

json complex_to_json(cdouble v) { return json::array({v.real(), v.imag()}); }

}  // namespace

json recipe_to_json(const ParityRecipe &r) {
    json out{{"n", r.n},
             {"d", r.d},
             {"method", r.method == BuildMethod::SelfConjugate ? "self-conjugate" : "conjugate-pair"},
             {"lambda", r.lambda.str()}};
    if (r.method == BuildMethod::SelfConjugate) {
        out["branch"] = split_tag_str(r.branch);
        if (r.seed_ket) out["seed_ket"] = r.seed_ket->str();
    } else {
        json cs = json::array();
        for (const auto &c : r.coefficients) cs.push_back(complex_to_json(c));
        out["coefficients"] = cs;
    }
    return out;
}

ParityRecipe recipe_from_json(const json &j) {
    ParityRecipe r;
    r.n = j.at("n").get<int>();
    r.d = j.at("d").get<int>();
    std::string method = j.at("method").get<std::string>();
    if (method == "self-conjugate")
        r.method = BuildMethod::SelfConjugate;
    else if (method == "conjugate-pair")
        r.method = BuildMethod::ConjugatePair;
    else
        throw DomainError("recipe JSON: unknown method " + method);
    r.lambda = Partition::parse(j.at("lambda").get<std::string>());
    if (j.contains("branch")) {
        std::string b = j.at("branch").get<std::string>();
        if (b == "a")
            r.branch = SplitTag::A;
        else if (b == "b")
            r.branch = SplitTag::B;
        else
            throw DomainError("recipe JSON: unknown branch " + b);
    }
    if (j.contains("seed_ket")) r.seed_ket = Ket::parse(j.at("seed_ket").get<std::string>(), r.d);
    if (j.contains("coefficients"))
        for (const auto &c : j.at("coefficients"))
            r.coefficients.push_back(cdouble(c.at(0).get<double>(), c.at(1).get<double>()));
    return r;
}

json parity_check_to_json(const ParityCheck &c) {
    return json{{"valid", c.valid},
                {"max_cross_overlap", c.max_cross_overlap},
                {"n_even", c.n_even},
                {"n_odd", c.n_odd},
                {"exact_zeros", c.exact_zeros}};
}

json simulation_to_json(const SimulationReport &r, bool include_log) {
    json out{{"trials", r.trials},
             {"successes", r.successes},
             {"empirical_Ps", r.empirical_ps},
             {"seed", r.seed}};
    if (include_log) {
        json log = json::array();
        for (const auto &t : r.log)
            log.push_back(json{{"perm_rank", t.perm_rank},
                               {"parity", t.parity},
                               {"guessed_even", t.guessed_even},
                               {"success", t.success}});
        out["log"] = log;
    }
    return out;
}

json gme_to_json(const GmeResult &r, std::uint64_t seed) {
    json witness = json::array();
    for (const auto &local : r.witness.locals) {
        json site = json::array();
        for (const auto &v : local) site.push_back(complex_to_json(v));
        witness.push_back(site);
    }
    return json{{"E", r.entanglement},
                {"max_overlap", r.max_overlap},
                {"converged", r.converged},
                {"restarts", r.restarts_used},
                {"sweeps", r.sweeps},
                {"seed", seed},
                {"witness", witness}};
}

json audit_to_json(const SchurWeylAudit &a) {
    json lines = json::array();
    for (const auto &l : a.lines) {
        json line{{"lambda", l.lambda.str()},
                  {"dim_sn", l.dim_sym},
                  {"dim_sud", l.mult},
                  {"product", l.product}};
        if (l.measured_rank) line["measured_rank"] = *l.measured_rank;
        lines.push_back(line);
    }
    return json{{"n", a.n},
                {"d", a.d},
                {"total", a.total},
                {"balanced", a.balanced},
                {"ranks_match", a.ranks_match},
                {"balance", a.balance_line()},
                {"lines", lines}};
}

json mechanisms_to_json(const MechanismReport &m) {
    auto plist = [](const std::vector<Partition> &ps) {
        json out = json::array();
        for (const auto &p : ps) out.push_back(p.str());
        return out;
    };
    return json{{"n", m.n},
                {"d", m.d},
                {"dmin", dmin(m.n)},
                {"feasible", m.feasible},
                {"self_conjugate", plist(m.self_conjugate)},
                {"conjugate_pair", plist(m.conjugate_pair)},
                {"blind", plist(m.blind)}};
}

}  // namespace paritylab
