#include "projkit/json_io.hpp"

namespace projkit {

namespace {
Json series_json(const Series& s) {
    Json out = Json::array();
    for (const auto& x : s) out.push_back(x.str());
    return out;
}
}  // namespace

Json ledger_to_json(const DegreeLedger& l) {
    Json j;
    j["n"] = l.params.n;
    j["alpha"] = l.params.alpha;
    j["beta"] = l.params.beta;
    j["gamma"] = l.params.gamma;
    j["zetas"] = l.zetas;
    j["hbar1"] = l.hbar1;
    j["hbar2"] = l.hbar2;
    j["epsilon1"] = l.epsilon1;
    j["epsilon2"] = l.epsilon2;
    j["g_degrees"] = l.g_degrees;
    if (!l.epsilons_p4.empty()) j["epsilons_p4"] = l.epsilons_p4;
    j["strong_bound"] = l.strong_bound;
    return j;
}

Json chern_to_json(const ChernData& e) {
    return {{"ambient_dim", e.ambient_dim}, {"rank", e.rank}, {"total", series_json(e.total)},
            {"polynomial", chern_polynomial_string(e)}};
}

Json invariant_report_to_json(const InvariantReport& r) {
    Json j;
    j["construction"] = r.construction;
    Json params = Json::object();
    for (const auto& [k, v] : r.parameters) params[k] = v;
    j["parameters"] = params;
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        Json cj{{"quantity", c.quantity}, {"chain", c.chain.str()}};
        if (c.closed_form) {
            cj["closed_form"] = c.closed_form->str();
            cj["agrees"] = c.agrees();
            if (!c.agrees()) cj["discrepancy"] = c.discrepancy().str();
        } else {
            cj["closed_form"] = nullptr;
        }
        checks.push_back(cj);
    }
    j["checks"] = checks;
    Json facts = Json::object();
    for (const auto& [k, v] : r.facts) facts[k] = v;
    j["facts"] = facts;
    j["all_agree"] = r.all_agree();
    return j;
}

Json certificate_to_json(const ZeroCertificate& c) {
    Json j{{"prime", c.prime}, {"points_total", c.points_total}, {"points_scanned", c.points_scanned},
           {"empty", c.empty()}};
    j["witness"] = c.witness ? Json(*c.witness) : Json(nullptr);
    return j;
}

Json kpr_report_to_json(const KprReport& r, bool include_matrices) {
    Json j;
    j["construction"] = r.construction;
    Json params = Json::object();
    for (const auto& [k, v] : r.parameters) params[k] = v;
    j["parameters"] = params;
    j["seed"] = r.seed;
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        Json cj{{"name", c.name}, {"passed", c.passed}};
        if (!c.detail.empty()) cj["detail"] = c.detail;
        checks.push_back(cj);
    }
    j["checks"] = checks;
    Json certs = Json::array();
    for (const auto& c : r.certificates) {
        Json per = Json::array();
        for (const auto& z : c.per_prime) per.push_back(certificate_to_json(z));
        certs.push_back({{"entry_set", c.entry_set}, {"projective_dim", c.num_vars - 1}, {"empty", c.empty()},
                         {"per_prime", per}});
    }
    j["zero_locus_certificates"] = {{"scope", r.certificate_scope},
                                    {"meaning", "finite-characteristic evidence; a witness is a counterexample candidate only"},
                                    {"entries", certs}};
    if (include_matrices) {
        Json ex = Json::object();
        for (const auto& [name, m] : r.extracted) ex[name] = graded_to_json(m);
        j["matrices"] = ex;
    }
    if (r.invariants) j["chern_invariants"] = invariant_report_to_json(*r.invariants);
    if (!r.notes.empty()) {
        Json notes = Json::object();
        for (const auto& [k, v] : r.notes) notes[k] = v;
        j["notes"] = notes;
    }
    j["verdict"] = r.verdict();
    return j;
}

Json monad_report_to_json(const MonadReport& r) {
    Json j;
    j["composition_zero"] = r.composition_zero;
    j["composition_residue"] = r.composition_residue;
    Json deg = Json::array();
    for (const auto& v : r.degree_failures)
        deg.push_back({{"row", v.row}, {"expected", v.expected}, {"actual", v.actual}});
    j["degree_failures"] = deg;
    j["f_antisymmetric"] = r.f_antisymmetric;
    j["f_nondegenerate"] = r.f_nondegenerate;
    j["quotient_rank"] = r.quotient_rank;
    j["null_correlation_rank"] = r.null_correlation_rank;
    j["failures"] = r.failures;
    j["ok"] = r.ok();
    return j;
}

}  // namespace projkit
