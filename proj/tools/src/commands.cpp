#include "commands.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include "gcm3/render.hpp"
#include "gcm3/search.hpp"

namespace gcm3::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitBadFlags = 2;
constexpr int kExitDiff = 3;
constexpr int kExitUnbounded = 4;
constexpr int kExitSingular = 5;
constexpr int kExitBoundExhausted = 6;
constexpr int kExitNoSolution = 7;
constexpr int kExitDegenerate = 8;

int write_output(const Config& cfg, const std::string& data) {
    if (cfg.out.empty()) {
        std::cout << data;
        return kExitOk;
    }
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) {
        std::cerr << "cannot open " << cfg.out << " for writing\n";
        return kExitBadFlags;
    }
    f << data;
    return kExitOk;
}

std::optional<std::string> read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) return std::nullopt;
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string tok;
    std::istringstream in(s);
    while (std::getline(in, tok, sep)) out.push_back(tok);
    return out;
}

std::optional<ChamberTriple> parse_triple(const std::string& triple) {
    auto parts = split(triple, ',');
    if (parts.size() != 3) return std::nullopt;
    std::vector<IntVec3> vs;
    for (const auto& p : parts) {
        auto v = parse_abc(p);
        if (!v) return std::nullopt;
        vs.push_back(*v);
    }
    const GramForm& g = GramForm::triangle();
    try {
        int wall = wall_index(to_abc_string(vs[1]));
        ChamberTriple t{Root(vs[0]), Root(vs[1]), Root(vs[2]),
                        -g.inner(vs[0], vs[1]), -g.inner(vs[0], vs[2]),
                        -g.inner(vs[1], vs[2]), wall < 0 ? 0 : wall};
        return t;
    } catch (const Error&) {
        return std::nullopt;
    }
}

std::optional<TwistVector> parse_lambda(const std::string& lambda) {
    auto parts = split(lambda, ',');
    if (parts.empty()) return std::nullopt;
    std::vector<Int> ls;
    for (const auto& p : parts) {
        try {
            ls.emplace_back(p);
        } catch (const std::invalid_argument&) {
            return std::nullopt;
        }
    }
    try {
        return TwistVector(std::move(ls));
    } catch (const Error&) {
        return std::nullopt;
    }
}

std::string format_triples(const Config& cfg, const std::vector<ChamberTriple>& ts) {
    if (cfg.format == "csv") return triples_to_csv(ts);
    if (cfg.format == "json") return triples_to_json(ts);
    return triples_to_text(ts);
}

std::string diff_report(int wall, const ListDiff& d) {
    std::ostringstream out;
    const char* name = wall == 0 ? "a" : (wall == 1 ? "b" : "c");
    for (const auto& p : d.computed_only)
        out << "delta2=" << name << " computed but not in fixture: "
            << to_abc_string(p.delta1) << ", " << to_abc_string(p.delta3) << "\n";
    for (const auto& p : d.fixture_only)
        out << "delta2=" << name << " in fixture but not computed: "
            << to_abc_string(p.delta1) << ", " << to_abc_string(p.delta3) << "\n";
    return out.str();
}

}  // namespace

std::string weyl_line(const std::string& coords_abc, const std::string& norm) {
    return "rho = " + coords_abc + "; (rho,rho) = " + norm;
}

namespace {

// "2*a + 9/2*b + 5*c" with signs folded into the joins
std::string star_form(const RatVec3& v) {
    static const char* names[3] = {"a", "b", "c"};
    std::string out;
    for (int i = 0; i < 3; ++i) {
        Rat coeff = v[i];
        if (coeff == 0) continue;
        if (out.empty()) {
            if (coeff < 0) out += "-";
        } else {
            out += coeff < 0 ? " - " : " + ";
        }
        out += to_string(Rat(abs(coeff))) + "*" + names[i];
    }
    return out.empty() ? "0" : out;
}

}  // namespace

int cmd_enumerate(const Config& cfg, const std::string& delta2, const std::string& diff_path) {
    std::vector<int> walls;
    if (delta2 == "all") {
        walls = {0, 1, 2};
    } else {
        int w = wall_index(delta2);
        if (w < 0) {
            std::cerr << "--delta2 must be one of a, b, c, all\n";
            return kExitBadFlags;
        }
        walls = {w};
    }
    if (cfg.cross_bound < 1 || cfg.format.empty()) return kExitBadFlags;

    std::vector<ChamberTriple> all;
    std::array<std::vector<ChamberTriple>, 3> per_wall;
    for (int w : walls) {
        per_wall[w] = enumerate_triples(w, Int(cfg.cross_bound));
        all.insert(all.end(), per_wall[w].begin(), per_wall[w].end());
    }

    std::ostringstream data;
    data << format_triples(cfg, all);
    if (cfg.format == "text") {
        for (int w : walls)
            data << "delta2=" << (w == 0 ? "a" : w == 1 ? "b" : "c") << ": "
                 << per_wall[w].size() << " triples\n";
        data << "total: " << all.size() << "\n";
    }

    int rc = kExitOk;
    if (!diff_path.empty()) {
        auto text = read_file(diff_path);
        if (!text) {
            std::cerr << "cannot read fixture " << diff_path << "\n";
            return kExitBadFlags;
        }
        auto fixture = fixture_from_json(*text);
        if (!fixture) {
            std::cerr << "fixture " << diff_path << " is not a valid list file\n";
            return kExitBadFlags;
        }
        bool any = false;
        std::ostringstream report;
        for (int w : walls) {
            ListDiff d = diff_triples(per_wall[w], fixture->lists[w]);
            if (!d.empty()) any = true;
            report << diff_report(w, d);
        }
        if (fixture->stated_total != 0)
            report << "fixture stated total: " << fixture->stated_total
                   << "; computed total: " << all.size() << "\n";
        data << report.str();
        if (any) rc = kExitDiff;
    }

    int wrc = write_output(cfg, data.str());
    return wrc != kExitOk ? wrc : rc;
}

int cmd_twists(const Config& cfg, const std::string& gram, std::optional<long> cap) {
    auto parts = split(gram, ',');
    if (parts.size() != 3) {
        std::cerr << "--gram expects g12,g13,g23\n";
        return kExitBadFlags;
    }
    Int g12, g13, g23;
    try {
        g12 = Int(parts[0]);
        g13 = Int(parts[1]);
        g23 = Int(parts[2]);
    } catch (const std::invalid_argument&) {
        return kExitBadFlags;
    }
    if (g12 < 0 || g13 < 0 || g23 < 0) {
        std::cerr << "--gram entries must be nonnegative\n";
        return kExitBadFlags;
    }
    std::vector<TwistVector> sols;
    try {
        std::optional<Int> c;
        if (cap) c = Int(*cap);
        sols = solve_twists(g12, g13, g23, c);
    } catch (const UnboundedSearchError& e) {
        std::cerr << e.what() << "\n";
        return kExitUnbounded;
    }

    std::ostringstream out;
    if (cfg.format == "json") {
        out << "[";
        for (size_t i = 0; i < sols.size(); ++i) {
            out << (i ? "," : "") << "[" << sols[i].at(0).get_str() << ","
                << sols[i].at(1).get_str() << "," << sols[i].at(2).get_str() << "]";
        }
        out << "]\n";
    } else if (cfg.format == "csv") {
        out << "lambda1,lambda2,lambda3\n";
        for (const auto& s : sols)
            out << s.at(0).get_str() << "," << s.at(1).get_str() << "," << s.at(2).get_str()
                << "\n";
    } else {
        for (const auto& s : sols)
            out << s.at(0).get_str() << ", " << s.at(1).get_str() << ", " << s.at(2).get_str()
                << "\n";
        out << "Number of solutions " << sols.size() << "\n";
    }
    return write_output(cfg, out.str());
}

int cmd_weyl(const Config& cfg, const std::string& triple, const std::string& lambda) {
    auto t = parse_triple(triple);
    auto l = parse_lambda(lambda);
    if (!t || !l || l->size() != 3) {
        std::cerr << "weyl expects --triple d1,d2,d3 and --lambda l1,l2,l3\n";
        return kExitBadFlags;
    }
    WeylVector w;
    try {
        w = solve_weyl(*t, *l);
    } catch (const SingularMatrixError& e) {
        std::cerr << e.what() << "\n";
        return kExitSingular;
    }
    std::ostringstream out;
    out << weyl_line(star_form(w.coords), to_string(w.norm)) << "\n";
    return write_output(cfg, out.str());
}

int cmd_extend(const Config& cfg, const std::string& triple, const std::string& lambda,
               const std::string& in_path) {
    PolygonCandidate seed;
    if (!in_path.empty()) {
        auto text = read_file(in_path);
        if (!text) {
            std::cerr << "cannot read " << in_path << "\n";
            return kExitBadFlags;
        }
        auto c = candidate_from_json(*text);
        if (!c) {
            std::cerr << in_path << " is not a candidate file\n";
            return kExitBadFlags;
        }
        seed = *c;
    } else {
        auto t = parse_triple(triple);
        auto l = parse_lambda(lambda);
        if (!t || !l || l->size() != 3) {
            std::cerr << "extend expects --triple and --lambda, or --in file\n";
            return kExitBadFlags;
        }
        try {
            seed = make_seed(*t, *l);
        } catch (const SingularMatrixError& e) {
            std::cerr << e.what() << "\n";
            return kExitSingular;
        }
    }

    PolygonCandidate result =
        extend_polygon(std::move(seed), cfg.max_sides, cfg.coeff_bound, Int(cfg.lambda_cap));

    std::ostringstream out;
    if (cfg.format == "json") {
        out << candidate_to_json(result) << "\n";
    } else {
        out << "status: " << to_string(result.status);
        if (result.status == PolygonStatus::Failed) out << " (" << to_string(result.reason) << ")";
        out << "\n";
        out << "n: " << result.deltas.size() << "\n";
        out << "deltas:";
        for (const auto& r : result.deltas) out << " " << to_abc_string(r.coords());
        out << "\nlambdas:";
        for (const auto& l : result.lambdas) out << " " << l.get_str();
        out << "\n" << weyl_line(star_form(result.weyl.coords), to_string(result.weyl.norm))
            << "\n";
        if (result.realization) out << to_text(*result.realization);
    }
    int wrc = write_output(cfg, out.str());
    if (wrc != kExitOk) return wrc;
    if (result.status == PolygonStatus::Failed) {
        std::cerr << to_string(result.reason)
                  << (result.detail.empty() ? "" : ": " + result.detail) << "\n";
        if (result.reason == FailReason::CoeffBoundExhausted) return kExitBoundExhausted;
        if (result.reason == FailReason::LambdaCapExceeded) return kExitBoundExhausted;
        return kExitNoSolution;
    }
    return kExitOk;
}

int cmd_pipeline(const Config& cfg) {
    PipelineConfig pc;
    pc.cross_bound = cfg.cross_bound;
    pc.lambda_cap = cfg.lambda_cap;
    pc.coeff_bound = cfg.coeff_bound;
    pc.max_sides = cfg.max_sides;
    PipelineResult r = run_pipeline(pc);

    if (!cfg.out.empty()) {
        namespace fs = std::filesystem;
        std::error_code ec;
        fs::create_directories(cfg.out, ec);
        if (ec) {
            std::cerr << "cannot create output directory " << cfg.out << "\n";
            return kExitBadFlags;
        }
        auto write = [&](const std::string& name, const std::string& data) {
            std::ofstream f(fs::path(cfg.out) / name, std::ios::binary);
            f << data;
            return static_cast<bool>(f);
        };
        if (!write("candidates.json", result_to_json(r, pc)) ||
            !write("candidates.csv", candidates_to_csv(r.candidates)) ||
            !write("summary.txt", summary_text(r, pc))) {
            std::cerr << "write failed in " << cfg.out << "\n";
            return kExitBadFlags;
        }
        std::cout << summary_text(r, pc);
        return kExitOk;
    }

    if (cfg.format == "json") {
        std::cout << result_to_json(r, pc) << "\n";
    } else if (cfg.format == "csv") {
        std::cout << candidates_to_csv(r.candidates);
    } else {
        std::cout << summary_text(r, pc);
    }
    return kExitOk;
}

int cmd_render(const Config& cfg, const std::string& in_path) {
    auto text = read_file(in_path);
    if (!text) {
        std::cerr << "cannot read " << in_path << "\n";
        return kExitBadFlags;
    }
    auto c = candidate_from_json(*text);
    if (!c) {
        std::cerr << in_path << " is not a candidate file\n";
        return kExitBadFlags;
    }
    std::string svg;
    try {
        svg = render_klein_svg(*c);
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return kExitDegenerate;
    }
    return write_output(cfg, svg);
}

}  // namespace gcm3::cli
