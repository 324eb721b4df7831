#include "tilekit/search.hpp"

#include "tilekit/rng.hpp"

#include <algorithm>
#include <omp.h>
#include <stdexcept>

namespace tilekit {

namespace {

int resolve_threads(int threads) { return threads <= 0 ? omp_get_max_threads() : threads; }

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
    return Rng::derive(seed, stream, index).next();
}

// Stream tags for the independent random uses inside one search.
constexpr std::uint64_t kStreamDraw = 0xD4A3;
constexpr std::uint64_t kStreamCoarse = 0xC0A5;
constexpr std::uint64_t kStreamFine = 0xF13E;
constexpr std::uint64_t kStreamVerify = 0x7AB1;

struct RankedEntry {
    SearchEntry entry;
    std::uint64_t cand_index = 0;
};

bool ranked_order(const RankedEntry& a, const RankedEntry& b) {
    if (entry_order(a.entry, b.entry))
        return true;
    if (entry_order(b.entry, a.entry))
        return false;
    return a.cand_index < b.cand_index; // equal tiles: keep the earliest draw
}

SearchEntry evaluate(const Tile& x_tile, const StabilizerCode& code, int k, std::uint64_t trials,
                     std::uint64_t trial_seed, bool pair_sums) {
    EstimateOptions eo;
    eo.trials = trials;
    eo.seed = trial_seed;
    eo.pair_sums = pair_sums;
    const DistanceResult est = estimate_distance_serial(code, Side::Min, eo);
    SearchEntry entry;
    entry.x_tile = x_tile;
    entry.n = code.n();
    entry.k = k;
    entry.d_hat = est.value;
    entry.eff_num = static_cast<std::uint64_t>(k) * est.value * est.value;
    entry.eff_den = static_cast<std::uint64_t>(code.n());
    entry.trimmed = code.trim.qubits_trimmed > 0;
    return entry;
}

} // namespace

bool entry_order(const SearchEntry& a, const SearchEntry& b) {
    const auto lhs = static_cast<unsigned __int128>(a.eff_num) * b.eff_den;
    const auto rhs = static_cast<unsigned __int128>(b.eff_num) * a.eff_den;
    if (lhs != rhs)
        return lhs > rhs;
    if (a.d_hat != b.d_hat)
        return a.d_hat > b.d_hat;
    return a.x_tile < b.x_tile;
}

SearchReport run_search(const SearchConfig& cfg) {
    if (cfg.mode == SearchMode::Random && cfg.samples < 1)
        throw std::invalid_argument("run_search: random mode needs at least one sample");
    if (cfg.top_count < 1)
        throw std::invalid_argument("run_search: top_count must be positive");
    if (cfg.layout.box_w != cfg.box_w || cfg.layout.box_h != cfg.box_h)
        throw std::invalid_argument("run_search: layout box does not match the search box");
    if (auto res = validate_layout(cfg.layout); !res)
        throw std::invalid_argument("run_search: invalid layout: " + res.message);

    const std::uint64_t space = TileEnumerator(cfg.box_w, cfg.box_h, cfg.weight).count();
    const std::uint64_t total = cfg.mode == SearchMode::Exhaustive ? space : cfg.samples;
    const int threads = resolve_threads(cfg.threads);

    std::vector<std::vector<RankedEntry>> tops(threads);
    std::vector<std::uint64_t> passed(threads, 0);

#pragma omp parallel num_threads(threads)
    {
        const int tid = omp_get_thread_num();
        const int nt = omp_get_num_threads();
        const std::uint64_t lo = total * tid / nt;
        const std::uint64_t hi = total * (tid + 1) / nt;
        TileEnumerator en(cfg.box_w, cfg.box_h, cfg.weight);
        auto& local = tops[tid];

        for (std::uint64_t i = lo; i < hi; ++i) {
            if (cfg.mode == SearchMode::Exhaustive) {
                if (i == lo)
                    en.seek(lo);
            } else {
                en.seek(Rng::derive(cfg.seed, kStreamDraw, i).below(space));
            }
            en.advance();
            const Tile x_tile = en.current();
            const TilePair pair = TilePair::from_x_tile(x_tile);
            const StabilizerCode code = build_code(pair, cfg.layout, false, false);
            const int k = compute_k(code);
            if (k < cfg.k_min)
                continue;
            ++passed[tid];
            RankedEntry cand{evaluate(x_tile, code, k, cfg.coarse_trials,
                                      derive_seed(cfg.seed, kStreamCoarse, i), cfg.pair_sums),
                             i};
            // Per-partition top list; the global coarse top-k is a subset of
            // the union, so the refine set is thread-count independent.
            const auto pos = std::lower_bound(local.begin(), local.end(), cand, ranked_order);
            if (local.size() < cfg.top_count || pos != local.end()) {
                local.insert(pos, std::move(cand));
                if (local.size() > cfg.top_count)
                    local.pop_back();
            }
        }
    }

    SearchReport report;
    report.config = cfg;
    report.candidates_examined = total;
    for (const auto& p : passed)
        report.passed_k += p;

    std::vector<RankedEntry> merged;
    for (auto& t : tops)
        merged.insert(merged.end(), std::make_move_iterator(t.begin()),
                      std::make_move_iterator(t.end()));
    std::sort(merged.begin(), merged.end(), ranked_order);
    merged.erase(std::unique(merged.begin(), merged.end(),
                             [](const RankedEntry& a, const RankedEntry& b) {
                                 return a.entry.x_tile == b.entry.x_tile;
                             }),
                 merged.end());
    if (merged.size() > cfg.top_count)
        merged.resize(cfg.top_count);

    // Fine re-estimate for the survivors, then the final ranking.
    std::vector<SearchEntry> refined(merged.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (long long i = 0; i < static_cast<long long>(merged.size()); ++i) {
        const auto& m = merged[static_cast<std::size_t>(i)];
        const TilePair pair = TilePair::from_x_tile(m.entry.x_tile);
        const StabilizerCode code = build_code(pair, cfg.layout, false, false);
        refined[static_cast<std::size_t>(i)] =
            evaluate(m.entry.x_tile, code, m.entry.k, cfg.fine_trials,
                     derive_seed(cfg.seed, kStreamFine, m.cand_index), cfg.pair_sums);
    }
    std::sort(refined.begin(), refined.end(), entry_order);
    report.entries = std::move(refined);
    return report;
}

std::vector<VerifyOutcome> verify_table(const std::vector<TableEntry>& entries,
                                        const Layout& layout, std::uint64_t trials,
                                        std::uint64_t seed, int threads) {
    if (auto res = validate_layout(layout); !res)
        throw std::invalid_argument("verify_table: invalid layout: " + res.message);
    std::vector<VerifyOutcome> out(entries.size());
    const int nt = resolve_threads(threads);
#pragma omp parallel for schedule(dynamic, 1) num_threads(nt)
    for (long long i = 0; i < static_cast<long long>(entries.size()); ++i) {
        const auto& e = entries[static_cast<std::size_t>(i)];
        VerifyOutcome& o = out[static_cast<std::size_t>(i)];
        o.entry = e;
        const StabilizerCode code =
            build_code(TilePair::from_x_tile(e.x_tile), layout, false, false);
        o.n = code.n();
        o.k = compute_k(code);
        if (o.n == e.n && o.k == e.k && o.k >= 1) {
            EstimateOptions eo;
            eo.trials = trials;
            eo.seed = derive_seed(seed, kStreamVerify, static_cast<std::uint64_t>(i));
            const DistanceResult est = estimate_distance_serial(code, Side::Min, eo);
            o.d_hat = est.value;
            o.pass = est.value == e.d;
        }
    }
    return out;
}

} // namespace tilekit
