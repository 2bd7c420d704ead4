#include "cofill/json_io.hpp"

namespace cofill {

namespace {

json rat_to_json(const Rat& r) { return r.str(); }

json mpq_to_json(const mpq_class& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

json min_verdict_brief(const PagodaMinVerdict& v) {
    return json{{"minimal", v.minimal}, {"method", v.exact ? "exact" : "necessary-only"}};
}

}  // namespace

json cochain_to_json(const Cochain& c) {
    json j{{"n", c.n()}, {"arity", c.arity()}};
    if (c.card() <= 10000) {
        j["sets"] = json::array();
        for (const auto& s : c.members()) j["sets"].push_back(s);
    } else {
        j["bits_hex"] = c.bits().to_hex();
    }
    return j;
}

Cochain cochain_from_json(const json& j) {
    int n = j.at("n").get<int>();
    int arity = j.at("arity").get<int>();
    if (j.contains("sets")) {
        std::vector<std::vector<int>> sets = j.at("sets").get<std::vector<std::vector<int>>>();
        for (auto& s : sets) std::sort(s.begin(), s.end());
        return Cochain::from_sets(n, arity, sets);
    }
    if (j.contains("bits_hex")) {
        Cochain c(n, arity);
        c.bits() = BitVec::from_hex(c.num_ranks(), j.at("bits_hex").get<std::string>());
        return c;
    }
    throw std::invalid_argument("cochain JSON needs \"sets\" or \"bits_hex\"");
}

json verdict_to_json(const MinimalityVerdict& v) {
    json j{{"minimal", v.minimal},
           {"method", v.method == MinimalityVerdict::Method::exact ? "exact" : "necessary-only"},
           {"coset_rank", v.coset_rank}};
    j["witness"] = v.witness ? cochain_to_json(*v.witness) : json(nullptr);
    return j;
}

json necessary_report_to_json(const NecessaryReport& r) {
    return json{{"pass", r.pass},
                {"half_size_ok", r.half_size_ok},
                {"degree_violations", r.degree_violations}};
}

json pagoda_to_json(const Pagoda& p) {
    json j{{"n", p.n}};
    for (int i = 0; i < 4; ++i)
        j["V" + std::to_string(i + 1)] = cochain_to_json(p.V[static_cast<std::size_t>(i)]);
    for (int t = 0; t < 6; ++t)
        j["E" + std::to_string(kPagodaPairs[t][0] + 1) + std::to_string(kPagodaPairs[t][1] + 1)] =
            cochain_to_json(p.E[static_cast<std::size_t>(t)]);
    for (int u = 0; u < 4; ++u)
        j["F" + std::to_string(kPagodaTriples[u][0] + 1) + std::to_string(kPagodaTriples[u][1] + 1) +
          std::to_string(kPagodaTriples[u][2] + 1)] = cochain_to_json(p.F[static_cast<std::size_t>(u)]);
    j["G"] = cochain_to_json(p.G);
    return j;
}

Pagoda pagoda_from_json(const json& j) {
    Pagoda p(j.at("n").get<int>());
    for (int i = 0; i < 4; ++i)
        p.V[static_cast<std::size_t>(i)] = cochain_from_json(j.at("V" + std::to_string(i + 1)));
    for (int t = 0; t < 6; ++t)
        p.E[static_cast<std::size_t>(t)] = cochain_from_json(
            j.at("E" + std::to_string(kPagodaPairs[t][0] + 1) + std::to_string(kPagodaPairs[t][1] + 1)));
    for (int u = 0; u < 4; ++u)
        p.F[static_cast<std::size_t>(u)] = cochain_from_json(
            j.at("F" + std::to_string(kPagodaTriples[u][0] + 1) +
                 std::to_string(kPagodaTriples[u][1] + 1) + std::to_string(kPagodaTriples[u][2] + 1)));
    p.G = cochain_from_json(j.at("G"));
    return p;
}

json pagoda_report_to_json(const PagodaReport& r) {
    json j;
    j["residual_partition"] = rat_to_json(r.residual_partition);
    j["residual_dV"] = json::array();
    for (const Rat& x : r.residual_dV) j["residual_dV"].push_back(rat_to_json(x));
    j["residual_dE"] = json::array();
    for (const Rat& x : r.residual_dE) j["residual_dE"].push_back(rat_to_json(x));
    j["residual_dF"] = json::array();
    for (const Rat& x : r.residual_dF) j["residual_dF"].push_back(rat_to_json(x));
    j["min_V"] = json::array();
    for (const auto& v : r.min_V) j["min_V"].push_back(min_verdict_brief(v));
    j["min_E"] = json::array();
    for (const auto& v : r.min_E) j["min_E"].push_back(min_verdict_brief(v));
    j["min_F"] = json::array();
    for (const auto& v : r.min_F) j["min_F"].push_back(min_verdict_brief(v));
    j["G_norm"] = rat_to_json(r.G_norm);
    j["G_norm_value"] = r.G_norm.to_double();
    j["max_residual"] = rat_to_json(r.max_residual);
    j["relations_ok"] = r.relations_ok;
    j["minimality_ok"] = r.minimality_ok;
    j["minimality_all_exact"] = r.minimality_all_exact;
    j["pass"] = r.pass;
    return j;
}

json lobo2_report_to_json(const Lobo2Report& r) {
    return json{{"alpha", r.alpha},
                {"sum_deg_sq", r.sum_deg_sq},
                {"bound", r.bound},
                {"slack", r.slack},
                {"degree_cap_ok", r.degree_cap_ok}};
}

json highdeg_certificate_to_json(const HighDegCertificate& c) {
    return json{{"n", c.n},
                {"d", c.d},
                {"r", c.r},
                {"beta", c.beta.str()},
                {"E_size", c.E_size},
                {"E_hi_size", c.E_hi_size},
                {"F_hi_size", c.F_hi_size},
                {"link_sizes", c.link_sizes},
                {"exact_rhs", c.exact_rhs},
                {"exact_holds", c.exact_holds},
                {"asymptotic_slack", c.asymptotic_slack},
                {"minimality_exact", c.minimality_exact},
                {"hypotheses_ok", c.hypotheses_ok}};
}

json low3_certificate_to_json(const Low3Certificate& c) {
    return json{{"n", c.n},
                {"tau", c.tau.str()},
                {"sigma", c.sigma.str()},
                {"E_size", c.E_size},
                {"delta_size", c.delta_size},
                {"sum_light_sq", c.sum_light_sq},
                {"sum_heavy_sq", c.sum_heavy_sq},
                {"E_counts", {c.E_counts[0], c.E_counts[1], c.E_counts[2], c.E_counts[3]}},
                {"pair_cap_ok", c.pair_cap_ok},
                {"light_ok", c.light_ok},
                {"heavy_ok", c.heavy_ok},
                {"e23_ok", c.e23_ok},
                {"truncated_pie_ok", c.truncated_pie_ok},
                {"conclusion_ok", c.conclusion_ok},
                {"all_ok", c.all_ok}};
}

json pointconfig_to_json(const PointConfig& p) {
    json pts = json::array();
    for (const Pt& q : p.points) {
        pts.push_back({q.x.get_num().get_str(), q.x.get_den().get_str(),
                       q.y.get_num().get_str(), q.y.get_den().get_str()});
    }
    return json{{"points", pts}};
}

namespace {

mpq_class mpq_from_json_pair(const json& num, const json& den) {
    auto one = [](const json& v) {
        return v.is_string() ? mpz_class(v.get<std::string>())
                             : mpz_class(static_cast<long>(v.get<long long>()));
    };
    mpq_class q(one(num), one(den));
    q.canonicalize();
    return q;
}

}  // namespace

PointConfig pointconfig_from_json(const json& j) {
    PointConfig p;
    for (const json& row : j.at("points")) {
        if (row.size() != 4)
            throw std::invalid_argument("point entry must be [xnum,xden,ynum,yden]");
        p.points.push_back({mpq_from_json_pair(row[0], row[1]), mpq_from_json_pair(row[2], row[3])});
    }
    return p;
}

json depth_result_to_json(const DepthResult& r) {
    return json{{"depth", r.depth},
                {"witness", {mpq_to_json(r.witness.x), mpq_to_json(r.witness.y)}},
                {"witness_cochain", cochain_to_json(r.witness_cochain)},
                {"candidates_examined", r.candidates_examined}};
}

}  // namespace cofill
