#include <atomic>
#include <cstdlib>
#include <map>
#include <sstream>
#include <thread>

#include "gcm3/search.hpp"

namespace gcm3 {

namespace {

int resolve_threads(int configured) {
    if (configured > 0) return configured;
    if (const char* env = std::getenv("GCM3_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace

std::string canonical_cycle_key(const std::vector<Root>& deltas,
                                const std::vector<Int>& lambdas) {
    const size_t n = deltas.size();
    auto serialize = [&](size_t start, bool reversed) {
        std::ostringstream s;
        for (size_t i = 0; i < n; ++i) {
            size_t idx = reversed ? (start + n - i) % n : (start + i) % n;
            const IntVec3& v = deltas[idx].coords();
            s << v.x << "," << v.y << "," << v.z << ":" << lambdas[idx] << ";";
        }
        return s.str();
    };
    std::string best;
    for (size_t start = 0; start < n; ++start)
        for (bool rev : {false, true}) {
            std::string k = serialize(start, rev);
            if (best.empty() || k < best) best = std::move(k);
        }
    return best;
}

PipelineResult run_pipeline(const PipelineConfig& config) {
    PipelineResult result;

    struct Task {
        ChamberTriple triple;
        TwistVector lam;
    };
    std::vector<Task> tasks;
    for (int wall = 0; wall < 3; ++wall) {
        auto triples = enumerate_triples(wall, config.cross_bound);
        result.stats.triples_per_wall[wall] = static_cast<long>(triples.size());
        result.stats.triples_total += static_cast<long>(triples.size());
        for (const auto& t : triples) {
            // incident pairs never leave both Gram entries of a coefficient
            // zero here, so the solver is always bounded
            auto twists = solve_twists(t.g12, t.g13, t.g23);
            for (const auto& lam : twists) tasks.push_back(Task{t, lam});
        }
    }
    result.stats.seeds_total = static_cast<long>(tasks.size());

    std::vector<PolygonCandidate> produced(tasks.size());
    const int threads = std::min<int>(resolve_threads(config.threads),
                                      std::max<size_t>(tasks.size(), 1));
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            produced[i] = extend_polygon(make_seed(tasks[i].triple, tasks[i].lam),
                                         config.max_sides, config.coeff_bound,
                                         config.lambda_cap);
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    std::map<std::string, size_t> seen_closed;
    for (auto& c : produced) {
        switch (c.status) {
            case PolygonStatus::Closed: {
                ++result.stats.closed;
                Int ml = c.max_lambda();
                result.stats.max_lambda_closed = std::max(result.stats.max_lambda_closed, ml);
                if (ml > 6) result.stats.all_lambda_le6 = false;
                if (ml > 12) result.stats.all_lambda_le12 = false;
                auto key = canonical_cycle_key(c.deltas, c.lambdas);
                if (seen_closed.emplace(key, 1).second) {
                    ++result.stats.closed_after_dedup;
                    result.candidates.push_back(std::move(c));
                }
                break;
            }
            case PolygonStatus::Open:
                ++result.stats.open;
                result.candidates.push_back(std::move(c));
                break;
            case PolygonStatus::Failed:
                ++result.stats.failed;
                result.candidates.push_back(std::move(c));
                break;
        }
    }
    return result;
}

}  // namespace gcm3
