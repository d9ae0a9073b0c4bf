#include <fstream>
#include <sstream>

#include "doctest.h"
#include "gcm3/search.hpp"

using namespace gcm3;

namespace {

TwistVector tw(std::initializer_list<long> ls) {
    std::vector<Int> v;
    for (long l : ls) v.emplace_back(l);
    return TwistVector(std::move(v));
}

ChamberTriple make_triple(const char* d1, const char* d2, const char* d3) {
    const GramForm& g = GramForm::triangle();
    IntVec3 v1 = *parse_abc(d1), v2 = *parse_abc(d2), v3 = *parse_abc(d3);
    int wall = wall_index(d2);
    return ChamberTriple{Root(v1), Root(v2), Root(v3), -g.inner(v1, v2), -g.inner(v1, v3),
                         -g.inner(v2, v3), wall < 0 ? 0 : wall};
}

}  // namespace

TEST_CASE("abc parsing and printing round trip") {
    for (const char* s : {"a", "b", "c", "b+2c", "2a+9b+6c", "-3b-2c", "15a+14b+15c", "0"}) {
        auto v = parse_abc(s);
        REQUIRE(v.has_value());
        CHECK(to_abc_string(*v) == s);
    }
    CHECK(*parse_abc("0,1,2") == IntVec3{0, 1, 2});
    CHECK(*parse_abc(" b + 2c ") == IntVec3{0, 1, 2});
    CHECK(!parse_abc("2x+c").has_value());
    CHECK(!parse_abc("").has_value());
    CHECK(!parse_abc("1,2").has_value());
}

TEST_CASE("candidate JSON round trips byte-identically") {
    auto closed = extend_polygon(make_seed(make_triple("a", "b", "c"), tw({1, 1, 1})));
    auto failed = extend_polygon(make_seed(make_triple("a", "b", "c"), tw({1, 1, 1})), 20, 40, 0);
    for (const auto& c : {closed, failed}) {
        std::string j1 = candidate_to_json(c);
        auto back = candidate_from_json(j1);
        REQUIRE(back.has_value());
        std::string j2 = candidate_to_json(*back);
        CHECK(j1 == j2);
    }
    CHECK(!candidate_from_json("not json").has_value());
    CHECK(!candidate_from_json("{\"deltas\": 3}").has_value());
}

TEST_CASE("deserialized candidates carry the exact rational weyl data") {
    auto c = extend_polygon(make_seed(make_triple("c", "a", "b"), tw({1, 1, 1})));
    auto back = candidate_from_json(candidate_to_json(c));
    REQUIRE(back.has_value());
    CHECK(back->weyl.coords == RatVec3(Rat(2), make_rat(9, 2), Rat(5)));
    CHECK(back->weyl.norm == make_rat(-23, 2));
    CHECK(back->lambdas == c.lambdas);
    REQUIRE(back->realization.has_value());
    CHECK(*back->realization == *c.realization);
}

TEST_CASE("csv output carries one line per candidate plus a header") {
    auto c = extend_polygon(make_seed(make_triple("a", "b", "c"), tw({1, 1, 1})));
    std::string csv = candidates_to_csv({c, c});
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    CHECK(line == "delta2,status,reason,n,lambdas,max_lambda,weyl_norm,deltas");
    int rows = 0;
    while (std::getline(in, line)) {
        ++rows;
        CHECK(line.find("closed") != std::string::npos);
        CHECK(line.find("a|b|c") != std::string::npos);
    }
    CHECK(rows == 2);
}

TEST_CASE("cycle keys are invariant under rotation and reversal") {
    auto c = extend_polygon(make_seed(make_triple("a+2b+4c", "a", "b"), tw({1, 2, 1})));
    REQUIRE(c.status == PolygonStatus::Closed);
    const size_t n = c.deltas.size();
    std::string base = canonical_cycle_key(c.deltas, c.lambdas);
    for (size_t rot = 0; rot < n; ++rot) {
        std::vector<Root> ds;
        std::vector<Int> ls;
        for (size_t i = 0; i < n; ++i) {
            ds.push_back(c.deltas[(i + rot) % n]);
            ls.push_back(c.lambdas[(i + rot) % n]);
        }
        CHECK(canonical_cycle_key(ds, ls) == base);
        std::vector<Root> rds(ds.rbegin(), ds.rend());
        std::vector<Int> rls(ls.rbegin(), ls.rend());
        CHECK(canonical_cycle_key(rds, rls) == base);
    }
    // a different twist assignment is a different polygon
    auto other = extend_polygon(make_seed(make_triple("c", "a", "b"), tw({1, 1, 2})));
    REQUIRE(other.status == PolygonStatus::Closed);
    CHECK(canonical_cycle_key(other.deltas, other.lambdas) != base);
}

TEST_CASE("fixture files parse with their stated totals") {
    std::ifstream f(std::string(GCM3_FIXTURE_DIR) + "/paper_lists.json");
    REQUIRE(f);
    std::ostringstream s;
    s << f.rdbuf();
    auto fixture = fixture_from_json(s.str());
    REQUIRE(fixture.has_value());
    CHECK(fixture->stated_total == 115);
    CHECK(fixture->lists[0].size() + fixture->lists[1].size() + fixture->lists[2].size() ==
          117);
    CHECK(!fixture_from_json("{}").has_value());
}

TEST_CASE("pipeline json embeds config, stats and candidates") {
    PipelineConfig cfg;
    cfg.cross_bound = 3;  // tiny sweep
    cfg.threads = 1;
    PipelineResult r = run_pipeline(cfg);
    std::string j = result_to_json(r, cfg);
    CHECK(j.find("\"config\"") != std::string::npos);
    CHECK(j.find("\"stats\"") != std::string::npos);
    CHECK(j.find("\"candidates\"") != std::string::npos);
    CHECK(summary_text(r, cfg).find("pipeline summary") == 0);
}
