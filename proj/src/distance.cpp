#include "tilekit/distance.hpp"

#include "tilekit/rng.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstring>
#include <numeric>
#include <omp.h>
#include <tuple>

namespace tilekit {

std::string to_string(Side s) {
    switch (s) {
    case Side::X: return "X";
    case Side::Z: return "Z";
    case Side::Min: return "min";
    }
    return "?";
}

namespace {

constexpr int kInfWeight = std::numeric_limits<int>::max();

// Logical operators of the given side live in ker(kernel_of) outside
// rowspace(stab).
struct SideDef {
    const BinaryMatrix* kernel_of;
    const BinaryMatrix* stab;
};

SideDef side_def(const StabilizerCode& code, Side s) {
    return s == Side::X ? SideDef{&code.h_z, &code.h_x} : SideDef{&code.h_x, &code.h_z};
}

std::uint64_t side_stream(Side s) { return s == Side::X ? 0x58 : 0x5A; }

int resolve_threads(int threads) { return threads <= 0 ? omp_get_max_threads() : threads; }

// Best operator seen, ordered by (weight, enumeration key). The key makes the
// min-reduction independent of processing order, hence of the thread count.
struct Candidate {
    int weight = kInfWeight;
    std::uint64_t key_hi = ~std::uint64_t{0};
    std::uint64_t key_lo = ~std::uint64_t{0};
    BitVec vec;

    bool found() const { return weight != kInfWeight; }
    bool better_than(const Candidate& o) const {
        return std::tie(weight, key_hi, key_lo) < std::tie(o.weight, o.key_hi, o.key_lo);
    }
};

BinaryMatrix kernel_matrix(const SideDef& def, std::size_t n) {
    const auto basis = def.kernel_of->nullspace_basis();
    return BinaryMatrix::from_rows(basis, n);
}

// ---------------------------------------------------------------------------
// Randomized information-set estimator
// ---------------------------------------------------------------------------

void estimator_trial(const BinaryMatrix& kernel, const ReducedBasis& stab, std::uint64_t seed,
                     std::uint64_t stream, std::uint64_t trial, bool pair_sums, Candidate& best) {
    Rng rng = Rng::derive(seed, stream, trial);
    const std::size_t n = kernel.cols();
    const std::size_t k = kernel.rows();

    BinaryMatrix work = kernel;
    for (std::size_t i = 0; i < k; ++i) {
        if (!rng.coin())
            continue;
        const std::size_t j = rng.below(k);
        if (j != i)
            work.xor_row_into(j, i);
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    rng.shuffle(order.data(), n);
    work.rref_ordered(order);

    const auto consider = [&](int w, std::uint64_t idx, auto&& make_vec) {
        Candidate cand;
        cand.weight = w;
        cand.key_hi = trial;
        cand.key_lo = idx;
        if (!cand.better_than(best))
            return;
        BitVec v = make_vec();
        if (stab.contains(v))
            return;
        cand.vec = std::move(v);
        best = std::move(cand);
    };

    for (std::size_t r = 0; r < k; ++r) {
        const int w = static_cast<int>(work.row_weight(r));
        consider(w, r, [&] { return work.row(r); });
    }
    if (!pair_sums)
        return;
    std::uint64_t pair_idx = k;
    for (std::size_t i = 0; i + 1 < k; ++i) {
        const auto wi = work.row_words(i);
        for (std::size_t j = i + 1; j < k; ++j, ++pair_idx) {
            const auto wj = work.row_words(j);
            int w = 0;
            for (std::size_t t = 0; t < wi.size(); ++t)
                w += std::popcount(wi[t] ^ wj[t]);
            consider(w, pair_idx, [&] {
                BitVec v = work.row(i);
                v ^= work.row(j);
                return v;
            });
        }
    }
}

Candidate estimate_one_side(const StabilizerCode& code, Side side, const EstimateOptions& opts,
                            bool parallel, std::uint64_t& nodes) {
    const SideDef def = side_def(code, side);
    const BinaryMatrix kernel = kernel_matrix(def, code.qubits.size());
    const ReducedBasis stab(*def.stab);
    const std::uint64_t stream = side_stream(side);
    const std::size_t k = kernel.rows();
    nodes += opts.trials * (k + (opts.pair_sums ? k * (k - 1) / 2 : 0));

    Candidate best;
    if (!parallel) {
        for (std::uint64_t t = 0; t < opts.trials; ++t)
            estimator_trial(kernel, stab, opts.seed, stream, t, opts.pair_sums, best);
        return best;
    }
    const int threads = resolve_threads(opts.threads);
#pragma omp parallel num_threads(threads)
    {
        Candidate local;
#pragma omp for schedule(dynamic, 4) nowait
        for (long long t = 0; t < static_cast<long long>(opts.trials); ++t)
            estimator_trial(kernel, stab, opts.seed, stream, static_cast<std::uint64_t>(t),
                            opts.pair_sums, local);
#pragma omp critical(tilekit_estimate_merge)
        {
            if (local.better_than(best))
                best = std::move(local);
        }
    }
    return best;
}

DistanceResult estimate_impl(const StabilizerCode& code, Side side, const EstimateOptions& opts,
                             bool parallel) {
    if (opts.trials < 1)
        throw std::invalid_argument("estimate_distance: trials must be positive");
    if (compute_k(code) < 1)
        throw std::invalid_argument("estimate_distance: no logical qubits");

    DistanceResult res;
    res.side = side;
    res.seed = opts.seed;
    res.certainty = DistanceCertainty::UpperBound;
    if (side == Side::Min) {
        Candidate bx = estimate_one_side(code, Side::X, opts, parallel, res.nodes_explored);
        Candidate bz = estimate_one_side(code, Side::Z, opts, parallel, res.nodes_explored);
        Candidate& best = bz.weight < bx.weight ? bz : bx;
        res.value = best.weight;
        res.witness = std::move(best.vec);
        res.trials_used = 2 * opts.trials;
    } else {
        Candidate best = estimate_one_side(code, side, opts, parallel, res.nodes_explored);
        res.value = best.weight;
        res.witness = std::move(best.vec);
        res.trials_used = opts.trials;
    }
    return res;
}

// ---------------------------------------------------------------------------
// Exact search (growing weight threshold over disjoint information sets)
// ---------------------------------------------------------------------------

// One systematic view of the kernel: `sys` rows form an identity on this
// matrix's information set; `defect` rows vanish there. Every codeword whose
// restriction to the information set has weight r is (r rows of sys) xor
// (some defect combination), so enumerating rounds r = 0, 1, ... with the
// full 2^defect expansion covers the code with certainty.
struct InfoMatrix {
    BinaryMatrix sys;
    BinaryMatrix defect;
    int round_done = 0; // all messages of weight <= round_done enumerated

    std::size_t k() const { return sys.rows(); }
    std::size_t delta() const { return defect.rows(); }
    bool exhausted() const { return round_done >= static_cast<int>(k()); }

    std::uint64_t round_cost(int r) const {
        const std::uint64_t combos = binomial(static_cast<unsigned>(k()), static_cast<unsigned>(r));
        const unsigned d = static_cast<unsigned>(delta());
        if (d >= 64 || combos > (~std::uint64_t{0} >> d))
            return ~std::uint64_t{0};
        return combos << d;
    }
};

std::vector<InfoMatrix> build_chain(const BinaryMatrix& kernel, int max_defect_bits) {
    const std::size_t n = kernel.cols();
    const std::size_t k = kernel.rows();
    std::vector<char> used(n, 0);
    std::vector<InfoMatrix> mats;
    while (true) {
        std::vector<std::size_t> order;
        order.reserve(n);
        for (std::size_t c = 0; c < n; ++c)
            if (!used[c])
                order.push_back(c);
        const std::size_t unused = order.size();
        if (unused == 0)
            break;
        for (std::size_t c = 0; c < n; ++c)
            if (used[c])
                order.push_back(c);

        BinaryMatrix work = kernel;
        const auto pivots = work.rref_ordered(order);
        std::size_t k_i = 0;
        for (std::size_t p : pivots) {
            if (used[p])
                break; // pivots on fresh columns come first in processing order
            ++k_i;
        }
        if (k_i == 0)
            break;
        if (k - k_i > static_cast<std::size_t>(max_defect_bits))
            break; // every round of this matrix would cost a 2^defect factor

        InfoMatrix m;
        m.sys = BinaryMatrix(k_i, n);
        m.defect = BinaryMatrix(k - k_i, n);
        for (std::size_t r = 0; r < k_i; ++r)
            m.sys.set_row(r, work.row(r));
        for (std::size_t r = k_i; r < k; ++r)
            m.defect.set_row(r - k_i, work.row(r));
        for (std::size_t i = 0; i < k_i; ++i)
            used[pivots[i]] = 1;
        mats.push_back(std::move(m));
    }
    return mats;
}

std::uint64_t comb_rank(const unsigned* idx, int r, std::size_t k) {
    std::uint64_t rank = 0;
    unsigned prev = 0;
    for (int i = 0; i < r; ++i) {
        for (unsigned v = prev; v < idx[i]; ++v)
            rank += binomial(static_cast<unsigned>(k) - 1 - v, static_cast<unsigned>(r - 1 - i));
        prev = idx[i] + 1;
    }
    return rank;
}

// Enumeration context for one (matrix, round, defect-vector) slice.
struct SliceCtx {
    const std::uint64_t* rows; // systematic rows, contiguous
    std::size_t k;
    std::size_t stride;
    std::size_t bits;
    int r;
    int cap; // record strictly below this weight (round-start upper bound)
    const ReducedBasis* stab;
    std::uint64_t u_key;
    Candidate* local;
    std::uint64_t* scratch; // (r+1) prefix buffers of `stride` words
    unsigned* idx;

    void handle(std::size_t j, int w, const std::uint64_t* prefix) const {
        if (w > local->weight)
            return;
        idx[r - 1] = static_cast<unsigned>(j);
        Candidate cand;
        cand.weight = w;
        cand.key_hi = u_key;
        cand.key_lo = comb_rank(idx, r, k);
        if (!cand.better_than(*local))
            return;
        BitVec v(bits);
        const std::uint64_t* row = rows + j * stride;
        for (std::size_t t = 0; t < stride; ++t)
            v.words()[t] = prefix[t] ^ row[t];
        if (stab->contains(v))
            return;
        cand.vec = std::move(v);
        *local = std::move(cand);
    }
};

template <int STRIDE>
void enum_level(const SliceCtx& ctx, int level, std::size_t start, const std::uint64_t* prefix) {
    const std::size_t stride = STRIDE > 0 ? static_cast<std::size_t>(STRIDE) : ctx.stride;
    if (level == ctx.r - 1) {
        int thr = std::min(ctx.cap - 1, ctx.local->weight);
        for (std::size_t j = start; j < ctx.k; ++j) {
            const std::uint64_t* row = ctx.rows + j * stride;
            int w = 0;
            for (std::size_t t = 0; t < stride; ++t)
                w += std::popcount(prefix[t] ^ row[t]);
            if (w <= thr) {
                ctx.handle(j, w, prefix);
                thr = std::min(ctx.cap - 1, ctx.local->weight);
            }
        }
        return;
    }
    std::uint64_t* next = ctx.scratch + (level + 1) * stride;
    for (std::size_t j = start; j + (ctx.r - 1 - level) < ctx.k; ++j) {
        const std::uint64_t* row = ctx.rows + j * stride;
        for (std::size_t t = 0; t < stride; ++t)
            next[t] = prefix[t] ^ row[t];
        ctx.idx[level] = static_cast<unsigned>(j);
        enum_level<STRIDE>(ctx, level + 1, j + 1, next);
    }
}

template <int STRIDE>
void enum_slice(SliceCtx& ctx, const std::uint64_t* base) {
    std::uint64_t* prefix = ctx.scratch;
    std::copy_n(base, ctx.stride, prefix);
    enum_level<STRIDE>(ctx, 0, 0, prefix);
}

void enum_slice_dispatch(SliceCtx& ctx, const std::uint64_t* base) {
    switch (ctx.stride) {
    case 1: enum_slice<1>(ctx, base); break;
    case 2: enum_slice<2>(ctx, base); break;
    case 3: enum_slice<3>(ctx, base); break;
    case 4: enum_slice<4>(ctx, base); break;
    case 5: enum_slice<5>(ctx, base); break;
    case 6: enum_slice<6>(ctx, base); break;
    case 7: enum_slice<7>(ctx, base); break;
    case 8: enum_slice<8>(ctx, base); break;
    default: enum_slice<0>(ctx, base); break;
    }
}

// Combinations with a fixed first element (used when the parallel split runs
// over the first index instead of the defect space).
template <int STRIDE>
void enum_first_fixed(SliceCtx& ctx, std::size_t c1, const std::uint64_t* zero) {
    const std::size_t stride = STRIDE > 0 ? static_cast<std::size_t>(STRIDE) : ctx.stride;
    std::uint64_t* prefix = ctx.scratch;
    const std::uint64_t* row = ctx.rows + c1 * stride;
    if (ctx.r == 1) {
        int w = 0;
        for (std::size_t t = 0; t < stride; ++t)
            w += std::popcount(row[t]);
        if (w < ctx.cap)
            ctx.handle(c1, w, zero);
        return;
    }
    std::copy_n(row, stride, prefix);
    ctx.idx[0] = static_cast<unsigned>(c1);
    enum_level<STRIDE>(ctx, 1, c1 + 1, prefix);
}

void enum_first_fixed_dispatch(SliceCtx& ctx, std::size_t c1, const std::uint64_t* zero) {
    switch (ctx.stride) {
    case 1: enum_first_fixed<1>(ctx, c1, zero); break;
    case 2: enum_first_fixed<2>(ctx, c1, zero); break;
    case 3: enum_first_fixed<3>(ctx, c1, zero); break;
    case 4: enum_first_fixed<4>(ctx, c1, zero); break;
    case 5: enum_first_fixed<5>(ctx, c1, zero); break;
    case 6: enum_first_fixed<6>(ctx, c1, zero); break;
    case 7: enum_first_fixed<7>(ctx, c1, zero); break;
    case 8: enum_first_fixed<8>(ctx, c1, zero); break;
    default: enum_first_fixed<0>(ctx, c1, zero); break;
    }
}

struct SideSearch {
    std::vector<InfoMatrix> mats;
    ReducedBasis stab;
    std::size_t bits = 0;
    Candidate best;
    int ub = kInfWeight;
    bool complete = false; // lb caught up with ub, or fully enumerated

    int lb() const {
        if (complete)
            return ub;
        int s = 0;
        for (const auto& m : mats)
            s += m.round_done + 1;
        return s;
    }
    bool done() const { return complete || lb() >= ub; }
};

void absorb_round_result(SideSearch& s, Candidate&& cand) {
    if (cand.found() && cand.weight < s.ub) {
        s.best = std::move(cand);
        s.ub = s.best.weight;
    }
}

// Defect-vector expansion of `u` against the defect rows; `out` has stride
// words.
void defect_base(const InfoMatrix& m, std::uint64_t u, std::uint64_t* out) {
    const std::size_t stride = m.sys.word_stride();
    std::fill_n(out, stride, 0);
    while (u) {
        const unsigned b = static_cast<unsigned>(std::countr_zero(u));
        const auto row = m.defect.row_words(b);
        for (std::size_t t = 0; t < stride; ++t)
            out[t] ^= row[t];
        u &= u - 1;
    }
}

// Runs one full round (messages of weight exactly r, all defect vectors) and
// merges the per-thread winners deterministically.
void run_round(SideSearch& s, std::size_t mat_idx, int r, int threads) {
    InfoMatrix& m = s.mats[mat_idx];
    const std::size_t k = m.k();
    const std::size_t stride = m.sys.word_stride();
    const std::uint64_t n_defect = std::uint64_t{1} << m.delta();
    const int cap = s.ub;
    const std::uint64_t* rows = k ? m.sys.row_words(0).data() : nullptr;

    Candidate round_best;
    const bool split_defect = n_defect >= 2;
#pragma omp parallel num_threads(threads)
    {
        Candidate local;
        std::vector<std::uint64_t> scratch((static_cast<std::size_t>(r) + 1) * stride);
        std::vector<std::uint64_t> base(stride, 0);
        std::vector<unsigned> idx(static_cast<std::size_t>(r));
        SliceCtx ctx{rows, k, stride, s.bits, r, cap, &s.stab, 0, &local, scratch.data(),
                     idx.data()};

        if (split_defect) {
#pragma omp for schedule(dynamic, 16) nowait
            for (long long u = 0; u < static_cast<long long>(n_defect); ++u) {
                defect_base(m, static_cast<std::uint64_t>(u), base.data());
                ctx.u_key = static_cast<std::uint64_t>(u);
                enum_slice_dispatch(ctx, base.data());
            }
        } else {
            // Split on the first combination element instead. The scratch
            // buffer carries r+1 prefix levels plus a zero block at the end.
            ctx.u_key = 0;
            const std::uint64_t* zero = base.data();
            const long long c1_end = static_cast<long long>(k) - r + 1;
#pragma omp for schedule(dynamic, 1) nowait
            for (long long c1 = 0; c1 < c1_end; ++c1)
                enum_first_fixed_dispatch(ctx, static_cast<std::size_t>(c1), zero);
        }
#pragma omp critical(tilekit_exact_merge)
        {
            if (local.better_than(round_best))
                round_best = std::move(local);
        }
    }
    absorb_round_result(s, std::move(round_best));
    m.round_done = r;
}

// Round 0 of a defect-carrying matrix: the defect space itself.
void run_defect_round0(SideSearch& s, std::size_t mat_idx, int threads) {
    InfoMatrix& m = s.mats[mat_idx];
    if (m.delta() == 0)
        return;
    const std::size_t stride = m.sys.word_stride();
    const std::uint64_t n_defect = std::uint64_t{1} << m.delta();
    const int cap = s.ub;

    Candidate round_best;
#pragma omp parallel num_threads(threads)
    {
        Candidate local;
        std::vector<std::uint64_t> base(stride, 0);
#pragma omp for schedule(dynamic, 64) nowait
        for (long long u = 1; u < static_cast<long long>(n_defect); ++u) {
            defect_base(m, static_cast<std::uint64_t>(u), base.data());
            int w = 0;
            for (std::size_t t = 0; t < stride; ++t)
                w += std::popcount(base[t]);
            Candidate cand;
            cand.weight = w;
            cand.key_hi = static_cast<std::uint64_t>(u);
            cand.key_lo = 0;
            if (w < cap && cand.better_than(local)) {
                BitVec v(s.bits);
                std::copy_n(base.data(), stride, v.words().data());
                if (!s.stab.contains(v)) {
                    cand.vec = std::move(v);
                    local = std::move(cand);
                }
            }
        }
#pragma omp critical(tilekit_exact_merge0)
        {
            if (local.better_than(round_best))
                round_best = std::move(local);
        }
    }
    absorb_round_result(s, std::move(round_best));
}

SideSearch make_side_search(const StabilizerCode& code, Side side, const ExactOptions& opts,
                            int threads, std::uint64_t& nodes) {
    const SideDef def = side_def(code, side);
    SideSearch s;
    s.bits = code.qubits.size();
    s.stab = ReducedBasis(*def.stab);
    if (opts.initial_upper_bound)
        s.ub = *opts.initial_upper_bound;
    const BinaryMatrix kernel = kernel_matrix(def, s.bits);
    s.mats = build_chain(kernel, opts.max_defect_bits);
    for (std::size_t i = 0; i < s.mats.size(); ++i) {
        run_defect_round0(s, i, threads);
        nodes += (std::uint64_t{1} << s.mats[i].delta()) - 1;
    }
    return s;
}

// Cheapest next round of a side, honoring the remaining node budget.
// Returns (matrix index, cost) or nullopt when nothing is affordable.
std::optional<std::pair<std::size_t, std::uint64_t>> pick_round(const SideSearch& s,
                                                                std::uint64_t budget_left) {
    std::optional<std::pair<std::size_t, std::uint64_t>> pick;
    for (std::size_t i = 0; i < s.mats.size(); ++i) {
        const InfoMatrix& m = s.mats[i];
        if (m.exhausted())
            continue;
        const std::uint64_t cost = m.round_cost(m.round_done + 1);
        if (!pick || cost < pick->second)
            pick = {{i, cost}};
    }
    if (pick && pick->second > budget_left)
        return std::nullopt;
    return pick;
}

DistanceResult finish_exact(SideSearch* sx, SideSearch* sz, Side side, std::uint64_t nodes) {
    const auto side_floor = [](const SideSearch& s) { return s.done() ? s.ub : s.lb(); };
    int ub = kInfWeight;
    int lb = kInfWeight;
    const Candidate* wit = nullptr;
    for (SideSearch* s : {sx, sz}) {
        if (!s)
            continue;
        lb = std::min(lb, side_floor(*s));
        if (s->ub < ub) {
            ub = s->ub;
            wit = s->best.found() ? &s->best : nullptr;
        }
    }
    DistanceResult res;
    res.side = side;
    res.nodes_explored = nodes;
    if (ub == kInfWeight) {
        res.value = lb;
        res.certainty = DistanceCertainty::LowerBound;
        res.lower_bound = lb;
        return res;
    }
    res.value = ub;
    res.lower_bound = std::min(lb, ub);
    res.certainty = lb >= ub ? DistanceCertainty::Exact : DistanceCertainty::UpperBound;
    if (wit)
        res.witness = wit->vec;
    return res;
}

} // namespace

DistanceResult estimate_distance(const StabilizerCode& code, Side side,
                                 const EstimateOptions& opts) {
    return estimate_impl(code, side, opts, true);
}

DistanceResult estimate_distance_serial(const StabilizerCode& code, Side side,
                                        const EstimateOptions& opts) {
    return estimate_impl(code, side, opts, false);
}

DistanceResult exact_distance(const StabilizerCode& code, Side side, const ExactOptions& opts) {
    if (compute_k(code) < 1)
        throw std::invalid_argument("exact_distance: no logical qubits");
    const int threads = resolve_threads(opts.threads);
    const auto t0 = std::chrono::steady_clock::now();
    const auto out_of_time = [&] {
        if (opts.time_limit_s <= 0)
            return false;
        const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
        return dt.count() >= opts.time_limit_s;
    };

    std::uint64_t nodes = 0;
    SideSearch sx, sz;
    SideSearch* searches[2] = {nullptr, nullptr};
    if (side != Side::Z) {
        sx = make_side_search(code, Side::X, opts, threads, nodes);
        searches[0] = &sx;
    }
    if (side != Side::X) {
        sz = make_side_search(code, Side::Z, opts, threads, nodes);
        searches[1] = &sz;
    }

    while (true) {
        int overall_ub = kInfWeight;
        for (SideSearch* s : searches)
            if (s)
                overall_ub = std::min(overall_ub, s->ub);
        // Work on the side with the weakest floor; exact overall once every
        // floor reaches the best witness.
        SideSearch* target = nullptr;
        for (SideSearch* s : searches) {
            if (!s || s->done())
                continue;
            if (s->lb() >= overall_ub)
                continue; // proven floor already at the best witness; irrelevant to the min
            if (!target || s->lb() < target->lb())
                target = s;
        }
        if (!target)
            break;
        if (out_of_time())
            break;
        const auto pick = pick_round(*target, opts.max_nodes - std::min(opts.max_nodes, nodes));
        if (!pick)
            break;
        run_round(*target, pick->first, target->mats[pick->first].round_done + 1, threads);
        nodes += pick->second;
        if (target->mats[pick->first].exhausted() || target->lb() >= target->ub)
            target->complete = true;
    }
    return finish_exact(searches[0], searches[1], side, nodes);
}

CodeParameters code_distance(const StabilizerCode& code, std::uint64_t trials, std::uint64_t seed,
                             const ExactOptions& exact_opts) {
    CodeParameters params;
    params.n = code.n();
    params.k = compute_k(code);
    if (params.k < 1)
        throw std::invalid_argument("code_distance: no logical qubits");

    int value = kInfWeight;
    bool all_exact = true;
    for (Side side : {Side::X, Side::Z}) {
        std::optional<int> ub;
        if (trials > 0) {
            EstimateOptions eo;
            eo.trials = trials;
            eo.seed = seed;
            ub = estimate_distance(code, side, eo).value;
        }
        ExactOptions xo = exact_opts;
        xo.initial_upper_bound = ub;
        const DistanceResult ex = exact_distance(code, side, xo);
        const int side_value = ex.value == -1 ? kInfWeight : ex.value;
        value = std::min(value, ub ? std::min(*ub, side_value) : side_value);
        all_exact = all_exact && ex.certainty == DistanceCertainty::Exact;
    }
    params.d = {{value, all_exact ? DistanceCertainty::Exact : DistanceCertainty::UpperBound}};
    return params;
}

} // namespace tilekit
