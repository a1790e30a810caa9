#pragma once

#include <json.hpp>

#include "projkit/chern.hpp"
#include "projkit/graded.hpp"
#include "projkit/kpr.hpp"
#include "projkit/monad.hpp"
#include "projkit/weights.hpp"

namespace projkit {

using Json = nlohmann::ordered_json;

template <class K>
Json form_to_json(const Form<K>& f, int nvars) {
    Json terms = Json::array();
    // highest monomial first, as printed
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it)
        terms.push_back({{"exp", it->first}, {"coef", ScalarOps<K>::str(it->second)}});
    return {{"vars", f.context_free() ? nvars : f.num_vars()}, {"deg", f.degree()}, {"terms", terms}};
}

// Throws MalformedInput, plus whatever Form::from_terms raises.
template <class K>
Form<K> form_from_json(const Json& j, const FieldSpec& field) {
    try {
        const int vars = j.at("vars").get<int>();
        const int deg = j.at("deg").get<int>();
        if (vars < 1) throw Error(ErrorKind::MalformedInput, "vars must be positive");
        std::vector<std::pair<Exponent, K>> terms;
        for (const auto& t : j.at("terms")) {
            const auto& c = t.at("coef");
            const std::string cs = c.is_string() ? c.get<std::string>() : c.dump();
            terms.emplace_back(t.at("exp").get<Exponent>(), ScalarOps<K>::parse(cs, field));
        }
        return Form<K>::from_terms(vars, deg, terms);
    } catch (const Json::exception& e) {
        throw Error(ErrorKind::MalformedInput, std::string("form literal: ") + e.what());
    }
}

template <class K>
Json graded_to_json(const GradedMatrix<K>& m) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            row.push_back(m(i, j).is_zero() ? Json(nullptr) : form_to_json(m(i, j), m.num_vars));
        rows.push_back(row);
    }
    return {{"vars", m.num_vars}, {"source", m.source}, {"target", m.target}, {"entries", rows}};
}

// "vars" is optional when some entry is non-null.
template <class K>
GradedMatrix<K> graded_from_json(const Json& j, const FieldSpec& field) {
    try {
        const Twists source = j.at("source").get<Twists>();
        const Twists target = j.at("target").get<Twists>();
        const auto& rows = j.at("entries");
        if (rows.size() != target.size()) throw Error(ErrorKind::MalformedInput, "entries must have one row per target twist");
        int vars = j.contains("vars") ? j.at("vars").get<int>() : 0;
        std::vector<std::vector<std::optional<Form<K>>>> parsed;
        for (const auto& row : rows) {
            if (row.size() != source.size())
                throw Error(ErrorKind::MalformedInput, "each row needs one entry per source twist");
            auto& out = parsed.emplace_back();
            for (const auto& e : row) {
                if (e.is_null()) {
                    out.emplace_back();
                    continue;
                }
                Form<K> f = form_from_json<K>(e, field);
                if (vars == 0) vars = f.num_vars();
                if (f.num_vars() != vars) throw Error(ErrorKind::ArityMismatch, "entries use different numbers of variables");
                out.emplace_back(std::move(f));
            }
        }
        if (vars < 1) throw Error(ErrorKind::MalformedInput, "cannot infer the number of variables");
        GradedMatrix<K> m(source, target, vars);
        for (std::size_t i = 0; i < parsed.size(); ++i)
            for (std::size_t j2 = 0; j2 < parsed[i].size(); ++j2)
                if (parsed[i][j2] && !parsed[i][j2]->is_zero())
                    m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j2)) = *parsed[i][j2];
        return m;
    } catch (const Json::exception& e) {
        throw Error(ErrorKind::MalformedInput, std::string("graded matrix literal: ") + e.what());
    }
}

Json ledger_to_json(const DegreeLedger& l);
Json chern_to_json(const ChernData& e);
Json invariant_report_to_json(const InvariantReport& r);
Json certificate_to_json(const ZeroCertificate& c);
Json kpr_report_to_json(const KprReport& r, bool include_matrices = true);
Json monad_report_to_json(const MonadReport& r);

}  // namespace projkit
