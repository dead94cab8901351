#include "effap/json_io.hpp"

namespace effap {

Json interval_json(const Interval& v) {
    return Json{{"lo", rat_string(v.lo())}, {"hi", rat_string(v.hi())}, {"bits", v.bits()},
                {"approx", v.str_decimal(12)}};
}

Json intpoly_json(const IntPoly& p) {
    Json terms = Json::object();
    for (size_t i = 0; i < p.coeffs().size(); ++i)
        if (p[i] != 0) terms[std::to_string(i)] = p[i].get_str();
    return terms;
}

Json bipoly_json(const BiPoly& p) {
    Json terms = Json::object();
    for (const auto& [k, v] : p.terms())
        terms[std::to_string(k.first) + "," + std::to_string(k.second)] = v.get_str();
    return terms;
}

Json box_json(const Box& b) {
    return Json{{"re", interval_json(b.re)}, {"im", interval_json(b.im)}};
}

Json ledger_json(const std::vector<LedgerEntry>& ledger) {
    Json arr = Json::array();
    for (const auto& le : ledger)
        arr.push_back(Json{{"name", le.name}, {"lhs", le.lhs}, {"rhs", le.rhs}, {"pass", le.pass}});
    return arr;
}

Json aux_json(const AuxPoly& aux) {
    return Json{{"P", bipoly_json(aux.P)},
                {"k", aux.k},
                {"e", aux.e},
                {"D", aux.D},
                {"epsilon", aux.eps.str()},
                {"size", aux.P.size().get_str()},
                {"size_bound", interval_json(aux.size_bound)},
                {"c1", interval_json(aux.c1)},
                {"vanishing_hash", aux.vanishing_hash}};
}

Json measure_outcome_json(const MeasureOutcome& out) {
    if (std::holds_alternative<NotApplicable>(out)) {
        const auto& na = std::get<NotApplicable>(out);
        return Json{{"applicable", false}, {"log2_Lambda", interval_json(na.log2_Lambda)}};
    }
    const auto& r = std::get<MeasureResult>(out);
    return Json{{"applicable", true},
                {"kappa", interval_json(r.kappa)},
                {"kappa_upper", rat_string(r.kappa_upper())},
                {"log2_C", interval_json(r.log2_C)},
                {"log2_C_upper", rat_string(r.log2_C_upper())},
                {"log2_c_tilde", interval_json(r.log2_c_tilde)},
                {"log2_Lambda", interval_json(r.anchor.log2_Lambda)},
                {"log2_c", interval_json(r.anchor.log2_c)},
                {"gap", interval_json(r.anchor.gap)},
                {"p0", r.anchor.p0.get_str()},
                {"q0", r.anchor.q0.get_str()}};
}

Json worksheet_json(const Worksheet& w) {
    Json j{{"d", w.d},
           {"d0", w.d0},
           {"eta", rat_string(w.eta)},
           {"d_hat", rat_string(w.d_hat)},
           {"f_d", interval_json(w.f_d)},
           {"lambda", interval_json(w.lambda)},
           {"kappa_hat", interval_json(w.kappa_hat)},
           {"kappa", interval_json(w.kappa)},
           {"kappa_inf", interval_json(w.kappa_inf)},
           {"epsilon0_d", interval_json(w.epsilon0_d)},
           {"c1_thm", interval_json(w.c1_thm)},
           {"c2_thm", interval_json(w.c2_thm)},
           {"R", interval_json(w.R)},
           {"R_prime", interval_json(w.R_prime)},
           {"abs_xi", interval_json(w.abs_xi)},
           {"log2_Lambda0", interval_json(w.log2_Lambda0)},
           {"log2_a0", interval_json(w.log2_a0)},
           {"log2_C", interval_json(w.log2_C)},
           {"ledger", ledger_json(w.ledger)},
           {"chain_all_pass", w.chain_all_pass},
           {"kappa_claim_certified", w.kappa_claim_certified},
           {"below_a0", w.below_a0}};
    j["kappa_a"] = w.kappa_a ? interval_json(*w.kappa_a) : Json(nullptr);
    return j;
}

Json corollary_json(const CorollaryConstants& c) {
    return Json{{"variant", c.variant == CorollaryVariant::Bombieri ? "bombieri" : "circular"},
                {"d", c.d},
                {"eta", rat_string(c.eta)},
                {"kappa_hat", interval_json(c.kappa_hat)},
                {"kappa", interval_json(c.kappa)},
                {"kappa_hat_below_22.94", c.kappa_hat_below_2294},
                {"log2_a0", interval_json(c.log2_a0)},
                {"C_exponent_of_2", rat_string(c.C_exp_two)},
                {"C_exponent_of_a", rat_string(c.C_exp_a)}};
}

Json validation_json(const ConvergentValidation& v) {
    Json convs = Json::array();
    for (const auto& c : v.convergents)
        convs.push_back(Json{{"p", c.p.get_str()}, {"q", c.q.get_str()},
                             {"log2_slack", interval_json(c.log2_slack)}});
    Json j{{"convergents", convs},
           {"min_slack_log2", interval_json(v.min_slack_log2)},
           {"min_slack_ge_1", v.min_slack_ge_1}};
    j["min_slack"] = v.min_slack ? interval_json(*v.min_slack) : Json(nullptr);
    return j;
}

Json rootboxes_json(const std::vector<RootBox>& roots) {
    Json arr = Json::array();
    for (const auto& rb : roots)
        arr.push_back(Json{{"box", box_json(rb.box)}, {"multiplicity", rb.multiplicity},
                           {"real", rb.is_real}});
    return arr;
}

Json portrait_json(const RootPortrait& p) {
    return Json{{"small_roots", rootboxes_json(p.small_roots)},
                {"xi", interval_json(p.xi_box)},
                {"xi_height", interval_json(p.xi_height)},
                {"gap", interval_json(p.gap)},
                {"height_sandwich_lo", interval_json(p.sandwich_lo)},
                {"height_sandwich_hi", interval_json(p.sandwich_hi)}};
}

Json solution_bound_json(const SolutionBound& b) {
    return Json{{"branch", b.branch == SolutionBound::Branch::LargeA ? "large_a" : "small_a"},
                {"log2_bound", interval_json(b.log2_bound)}};
}

Json solutions_json(const std::vector<Solution>& sols) {
    Json arr = Json::array();
    for (const auto& [x, y] : sols) arr.push_back(Json::array({x.get_str(), y.get_str()}));
    return arr;
}

Json count_ledger_json(const CountLedger& c) {
    return Json{{"d", c.d},
                {"a", c.a.get_str()},
                {"hypothesis_ok", c.hypothesis_ok},
                {"bound", c.bound},
                {"arithmetic_certified", c.arithmetic_certified},
                {"ledger", ledger_json(c.ledger)}};
}

Json upper_estimate_json(const UpperEstimateReport& r) {
    return Json{{"lhs", interval_json(r.lhs)},
                {"rhs", interval_json(r.rhs)},
                {"c3", interval_json(r.c3)},
                {"holds", r.holds},
                {"k", r.k},
                {"lhs_exponent", r.mode == LhsExponentMode::FloorDeltaK ? "floor_delta_k" : "real_delta_k"}};
}

IntPoly poly_from_json(const Json& j) {
    if (j.is_string()) return IntPoly::parse(j.get<std::string>());
    if (j.is_array()) {
        std::vector<BigInt> v;
        for (const auto& c : j) {
            if (c.is_string())
                v.push_back(parse_bigint(c.get<std::string>()));
            else
                v.push_back(BigInt(c.get<long>()));
        }
        return IntPoly(std::move(v));
    }
    throw ParameterViolation("polynomial must be a string or a coefficient list (constant first)");
}

FamilySpec family_from_json(const Json& j, const RunConfig& cfg) {
    if (j.contains("abc")) {
        const Json& abc = j.at("abc");
        std::vector<BigInt> shifts;
        for (const auto& s : abc.value("shifts", Json::array()))
            shifts.push_back(s.is_string() ? parse_bigint(s.get<std::string>()) : BigInt(s.get<long>()));
        std::vector<std::pair<BigInt, BigInt>> quads;
        for (const auto& q : abc.value("quadratics", Json::array()))
            quads.emplace_back(q.at(0).is_string() ? parse_bigint(q.at(0).get<std::string>())
                                                   : BigInt(q.at(0).get<long>()),
                               q.at(1).is_string() ? parse_bigint(q.at(1).get<std::string>())
                                                   : BigInt(q.at(1).get<long>()));
        int sign = abc.value("sign", 1);
        BigInt a = j.at("a").is_string() ? parse_bigint(j.at("a").get<std::string>())
                                         : BigInt(j.at("a").get<long>());
        return abc_family(a, shifts, quads, sign);
    }
    IntPoly P = poly_from_json(j.at("P"));
    IntPoly Q = poly_from_json(j.at("Q"));
    BigInt a = j.at("a").is_string() ? parse_bigint(j.at("a").get<std::string>())
                                     : BigInt(j.at("a").get<long>());
    return make_family(P, Q, a, cfg);
}

}  // namespace effap
