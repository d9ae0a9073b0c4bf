#include <algorithm>
#include <set>
#include <sstream>

#include "gcm3/search.hpp"
#include "json.hpp"

namespace gcm3 {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json vec_to_json(const IntVec3& v) {
    ordered_json j = ordered_json::array();
    for (int i = 0; i < 3; ++i) {
        const Int& c = v[i];
        if (mpz_fits_slong_p(c.get_mpz_t()))
            j.push_back(c.get_si());
        else
            j.push_back(c.get_str());
    }
    return j;
}

std::optional<Int> int_from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) return Int(j.get<long>());
    if (j.is_string()) {
        try {
            return Int(j.get<std::string>());
        } catch (const std::invalid_argument&) {
            return std::nullopt;
        }
    }
    return std::nullopt;
}

std::optional<IntVec3> vec_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 3) return std::nullopt;
    IntVec3 v;
    for (int i = 0; i < 3; ++i) {
        auto c = int_from_json(j[i]);
        if (!c) return std::nullopt;
        v[i] = *c;
    }
    return v;
}

const char* wall_name(int wall) { return wall == 0 ? "a" : (wall == 1 ? "b" : "c"); }

ordered_json candidate_json(const PolygonCandidate& c) {
    ordered_json j;
    j["delta2"] = wall_name(c.wall);
    j["deltas"] = ordered_json::array();
    for (const Root& r : c.deltas) j["deltas"].push_back(vec_to_json(r.coords()));
    j["lambdas"] = ordered_json::array();
    for (const Int& l : c.lambdas) j["lambdas"].push_back(l.get_si());
    j["weyl"] = {{"coords", ordered_json::array()}, {"norm", to_string(c.weyl.norm)}};
    for (int i = 0; i < 3; ++i) j["weyl"]["coords"].push_back(to_string(c.weyl.coords[i]));
    j["status"] = to_string(c.status);
    if (c.status == PolygonStatus::Failed) {
        j["reason"] = to_string(c.reason);
        if (!c.detail.empty()) j["detail"] = c.detail;
    }
    if (c.realization) {
        ordered_json r;
        r["n"] = c.realization->n;
        r["lambdas"] = ordered_json::array();
        for (const Int& l : c.realization->lambdas) r["lambdas"].push_back(l.get_si());
        r["gram_rows"] = ordered_json::array();
        for (const auto& row : c.realization->gram_rows) {
            ordered_json jr = ordered_json::array();
            for (const Int& v : row) jr.push_back(v.get_si());
            r["gram_rows"].push_back(jr);
        }
        j["realization"] = r;
    }
    return j;
}

std::optional<PolygonCandidate> candidate_from(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("deltas") || !j.contains("lambdas")) return std::nullopt;
    PolygonCandidate c;
    if (j.contains("delta2") && j["delta2"].is_string())
        c.wall = std::max(0, wall_index(j["delta2"].get<std::string>()));
    try {
        for (const auto& jv : j["deltas"]) {
            auto v = vec_from_json(jv);
            if (!v) return std::nullopt;
            c.deltas.emplace_back(*v);
        }
    } catch (const Error&) {
        return std::nullopt;
    }
    for (const auto& jl : j["lambdas"]) {
        auto l = int_from_json(jl);
        if (!l) return std::nullopt;
        c.lambdas.push_back(*l);
    }
    if (j.contains("weyl")) {
        const auto& w = j["weyl"];
        if (!w.contains("coords") || w["coords"].size() != 3) return std::nullopt;
        RatVec3 coords;
        for (int i = 0; i < 3; ++i) {
            auto r = parse_rat(w["coords"][i].get<std::string>());
            if (!r) return std::nullopt;
            (i == 0 ? coords.x : (i == 1 ? coords.y : coords.z)) = *r;
        }
        auto norm = parse_rat(w["norm"].get<std::string>());
        if (!norm) return std::nullopt;
        c.weyl = WeylVector{coords, *norm};
    }
    std::string status = j.value("status", "open");
    if (status == "closed")
        c.status = PolygonStatus::Closed;
    else if (status == "failed")
        c.status = PolygonStatus::Failed;
    else
        c.status = PolygonStatus::Open;
    if (c.status == PolygonStatus::Failed) {
        std::string reason = j.value("reason", "");
        for (FailReason r : {FailReason::WeylNormNonNegative, FailReason::NoAdmissibleRoot,
                             FailReason::CoeffBoundExhausted, FailReason::LambdaCapExceeded,
                             FailReason::ClosureInvalid})
            if (to_string(r) == reason) c.reason = r;
        c.detail = j.value("detail", "");
    }
    if (j.contains("realization")) {
        auto r = realization_from_json(j["realization"].dump());
        if (r) c.realization = *r;
    }
    return c;
}

}  // namespace

std::string candidate_to_json(const PolygonCandidate& c) { return candidate_json(c).dump(2); }

std::optional<PolygonCandidate> candidate_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded()) return std::nullopt;
    return candidate_from(j);
}

std::string result_to_json(const PipelineResult& r, const PipelineConfig& config) {
    ordered_json j;
    j["config"] = {{"cross_bound", config.cross_bound.get_si()},
                   {"lambda_cap", config.lambda_cap.get_si()},
                   {"coeff_bound", config.coeff_bound},
                   {"max_sides", config.max_sides}};
    j["stats"] = {
        {"triples", {{"a", r.stats.triples_per_wall[0]},
                     {"b", r.stats.triples_per_wall[1]},
                     {"c", r.stats.triples_per_wall[2]},
                     {"total", r.stats.triples_total}}},
        {"seeds", r.stats.seeds_total},
        {"closed", r.stats.closed},
        {"closed_after_dedup", r.stats.closed_after_dedup},
        {"open", r.stats.open},
        {"failed", r.stats.failed},
        {"max_lambda_closed", r.stats.max_lambda_closed.get_si()},
        {"all_lambda_le6", r.stats.all_lambda_le6},
        {"all_lambda_le12", r.stats.all_lambda_le12},
    };
    j["candidates"] = ordered_json::array();
    for (const auto& c : r.candidates) j["candidates"].push_back(candidate_json(c));
    return j.dump(2);
}

std::string candidates_to_csv(const std::vector<PolygonCandidate>& cs) {
    std::ostringstream out;
    out << "delta2,status,reason,n,lambdas,max_lambda,weyl_norm,deltas\n";
    for (const auto& c : cs) {
        out << wall_name(c.wall) << "," << to_string(c.status) << ","
            << (c.status == PolygonStatus::Failed ? to_string(c.reason) : "") << ","
            << c.deltas.size() << ",";
        for (size_t i = 0; i < c.lambdas.size(); ++i)
            out << (i ? "|" : "") << c.lambdas[i].get_str();
        out << "," << c.max_lambda().get_str() << "," << to_string(c.weyl.norm) << ",";
        for (size_t i = 0; i < c.deltas.size(); ++i)
            out << (i ? "|" : "") << to_abc_string(c.deltas[i].coords());
        out << "\n";
    }
    return out.str();
}

std::string summary_text(const PipelineResult& r, const PipelineConfig& config) {
    std::ostringstream out;
    out << "pipeline summary\n";
    out << "  cross_bound=" << to_string(config.cross_bound)
        << " lambda_cap=" << to_string(config.lambda_cap)
        << " coeff_bound=" << config.coeff_bound << " max_sides=" << config.max_sides << "\n";
    out << "  triples: a=" << r.stats.triples_per_wall[0]
        << " b=" << r.stats.triples_per_wall[1] << " c=" << r.stats.triples_per_wall[2]
        << " total=" << r.stats.triples_total << "\n";
    out << "  seeds (triple x twist): " << r.stats.seeds_total << "\n";
    out << "  closed: " << r.stats.closed << " (unique up to rotation/reversal: "
        << r.stats.closed_after_dedup << ")\n";
    out << "  open: " << r.stats.open << "  failed: " << r.stats.failed << "\n";
    out << "  max lambda among closed: " << r.stats.max_lambda_closed.get_str() << "\n";
    out << "  all closed lambdas <= 12: " << (r.stats.all_lambda_le12 ? "yes" : "no") << "\n";
    out << "  all closed lambdas <= 6: " << (r.stats.all_lambda_le6 ? "yes" : "no") << "\n";
    return out.str();
}

std::string triples_to_csv(const std::vector<ChamberTriple>& ts) {
    std::ostringstream out;
    out << "delta2,delta1,delta3,g12,g13,g23\n";
    for (const auto& t : ts)
        out << wall_name(t.wall) << "," << to_abc_string(t.delta1.coords()) << ","
            << to_abc_string(t.delta3.coords()) << "," << t.g12.get_str() << ","
            << t.g13.get_str() << "," << t.g23.get_str() << "\n";
    return out.str();
}

std::string triples_to_json(const std::vector<ChamberTriple>& ts) {
    ordered_json j = ordered_json::array();
    for (const auto& t : ts) {
        ordered_json e;
        e["delta2"] = wall_name(t.wall);
        e["delta1"] = vec_to_json(t.delta1.coords());
        e["delta3"] = vec_to_json(t.delta3.coords());
        e["gram"] = {t.g12.get_si(), t.g13.get_si(), t.g23.get_si()};
        j.push_back(e);
    }
    return j.dump(2);
}

std::string triples_to_text(const std::vector<ChamberTriple>& ts) {
    std::ostringstream out;
    for (const auto& t : ts)
        out << to_abc_string(t.delta1.coords()) << ", " << to_abc_string(t.delta3.coords())
            << "\n";
    return out.str();
}

std::optional<ListFixture> fixture_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.is_object() || !j.contains("lists")) return std::nullopt;
    ListFixture f;
    f.stated_total = j.value("stated_total", 0L);
    const char* names[3] = {"a", "b", "c"};
    for (int w = 0; w < 3; ++w) {
        if (!j["lists"].contains(names[w])) continue;
        for (const auto& pair : j["lists"][names[w]]) {
            if (!pair.is_array() || pair.size() != 2) return std::nullopt;
            auto d1 = vec_from_json(pair[0]);
            auto d3 = vec_from_json(pair[1]);
            if (!d1 || !d3) return std::nullopt;
            f.lists[w].push_back(TriplePair{*d1, *d3});
        }
    }
    return f;
}

ListDiff diff_triples(const std::vector<ChamberTriple>& computed,
                      const std::vector<TriplePair>& fixture) {
    std::set<TriplePair> have, want;
    for (const auto& t : computed) have.insert(TriplePair{t.delta1.coords(), t.delta3.coords()});
    for (const auto& p : fixture) want.insert(p);
    ListDiff d;
    for (const auto& p : have)
        if (!want.count(p)) d.computed_only.push_back(p);
    for (const auto& p : want)
        if (!have.count(p)) d.fixture_only.push_back(p);
    return d;
}

}  // namespace gcm3
