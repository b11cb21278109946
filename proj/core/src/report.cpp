#include "inexp/report.hpp"

#include "inexp/version.hpp"

namespace inexp {

Json to_json(const Exponent& e) {
    Json a = Json::array();
    for (std::size_t i = 0; i < e.dim(); ++i) a.push_back(e[i]);
    return a;
}

Json to_json(const Rational& q) { return q.get_str(); }
Json to_json(const Count& n) { return n.get_str(); }

Json to_json(const Polynomial& p) {
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms())
        terms.push_back(Json{{"exponent", to_json(e)}, {"coeff", c.get_str()}});
    return terms;
}

Json to_json(const Diagram& n) {
    Json a = Json::array();
    for (const auto& v : n.vertices()) a.push_back(to_json(v));
    return a;
}

Json to_json(const UnivariatePolynomial& p) {
    Json a = Json::array();
    for (const auto& c : p.coefficients()) a.push_back(c.get_str());
    return a;
}

Json to_json(const RationalMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.size(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.size(); ++j) row.push_back(m.at(i, j).get_str());
        rows.push_back(row);
    }
    return rows;
}

Json to_json(const Level& l) {
    Json members = Json::array();
    for (const auto& e : l.members) members.push_back(to_json(e));
    return Json{{"a", to_json(l.a)}, {"members", members}, {"delta", l.members.size()}};
}

Json to_json(const RegularSequenceCertificate& c) {
    Json axes = Json::array();
    for (const auto& v : c.axis_vertices) axes.push_back(to_json(v));
    return Json{{"certified", c.certified},
                {"k", c.k},
                {"matrix", to_json(c.matrix)},
                {"diagram_vertices", to_json(c.normalized_diagram)},
                {"axis_vertices", axes},
                {"attempts", c.attempts},
                {"seed", c.seed}};
}

Json to_json(const Mu0Breakdown& b) {
    return Json{{"l0", b.l0}, {"l1", b.l1}, {"l2", b.l2}, {"mu0", b.mu0}};
}

Json to_json(const HilbertSamuelTable& t) {
    Json values = Json::array();
    for (const auto& [eta, h] : t.values) values.push_back(Json::array({eta, h.get_str()}));
    return Json{{"values", values},
                {"polynomial", to_json(t.eventual)},
                {"stable_from", t.stable_from},
                {"fitted_at", t.fitted_at},
                {"d", t.dimension},
                {"e", t.multiplicity.get_str()}};
}

Json to_json(const JetSweepReport& r) {
    Json records = Json::array();
    for (const auto& rec : r.records) {
        Json row{{"mu", rec.mu}, {"degenerate", rec.degenerate}};
        if (!rec.degenerate) {
            Json verts = Json::array();
            for (const auto& v : rec.vertices) verts.push_back(to_json(v));
            row["vertices"] = verts;
            row["equal_to_target"] = rec.equal_to_target;
            row["truncated_equal_up_to"] =
                rec.truncated_equal_up_to ? Json(*rec.truncated_equal_up_to) : Json(nullptr);
            row["subset_ok"] = rec.subset_ok ? Json(*rec.subset_ok) : Json(nullptr);
            row["truncated_ok"] = rec.truncated_ok ? Json(*rec.truncated_ok) : Json(nullptr);
        }
        records.push_back(row);
    }
    Json out{{"certified", r.certified},
             {"change_matrix", to_json(r.change)},
             {"target_vertices", to_json(r.target)},
             {"l0", r.l0},
             {"l1", r.l1},
             {"records", records},
             {"lemma_checks_ok", r.lemma_checks_ok}};
    out["k"] = r.k ? Json(*r.k) : Json(nullptr);
    out["evaluated_bound"] = r.evaluated_bound ? to_json(*r.evaluated_bound) : Json(nullptr);
    out["certified_mu0"] = r.certified_mu0 ? Json(*r.certified_mu0) : Json(nullptr);
    out["stabilized_at"] = r.stabilized_at ? Json(*r.stabilized_at) : Json(nullptr);
    return out;
}

Json to_json(const PerturbationReport& r) {
    Json trials = Json::array();
    for (const auto& t : r.trials) {
        Json tails = Json::array();
        for (const auto& tail : t.tails) tails.push_back(to_json(tail));
        trials.push_back(Json{{"trial", t.trial},
                              {"tails", tails},
                              {"regular_ok", t.regular_ok},
                              {"diagram_ok", t.diagram_ok},
                              {"evaluated_ok", t.evaluated_ok},
                              {"hs_ok", t.hs_ok},
                              {"pass", t.pass}});
    }
    return Json{{"certificate", to_json(r.bound.certificate)},
                {"l0_full", r.bound.l0_full},
                {"evaluated_bound", to_json(r.bound.evaluated)},
                {"certified_mu0", r.bound.mu0},
                {"mu", r.mu},
                {"eta_max", r.eta_max},
                {"trials", trials},
                {"all_pass", r.all_pass},
                {"note", "sampled evidence: random tails cannot prove universality"}};
}

Json to_json(const MultiplicityReport& r) {
    return Json{{"certificate", to_json(r.certificate)},
                {"table", to_json(r.table)},
                {"e_from_table", r.from_table.get_str()},
                {"e_from_generic_level", r.from_generic_level.get_str()},
                {"e_from_evaluation", r.from_evaluation.get_str()},
                {"consistent", r.consistent}};
}

Json make_report(const std::string& command, const std::string& input_sha256,
                 std::uint64_t seed, Json result, double elapsed_ms) {
    return Json{{"command", command},
                {"input_sha256", input_sha256},
                {"seed", seed},
                {"result", std::move(result)},
                {"timings", Json{{"total_ms", elapsed_ms}}},
                {"version", kVersion}};
}

} // namespace inexp
