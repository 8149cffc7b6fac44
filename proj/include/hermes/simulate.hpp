#pragma once

// Monte Carlo channel simulation: random message, exactly t symbol errors at
// distinct random positions, list decoding, success iff the sent message is
// on the list.
//
// Randomness: trial t draws from std::mt19937_64 seeded with
// splitmix64(seed + t * 0x9E3779B97F4A7C15).  Bounded integers use rejection
// sampling on the raw 64-bit outputs, so reports depend only on (seed,
// config) and not on the standard library or on how trials are scheduled.
// Per trial the draws are: k message symbols (canonical element indices),
// then for each of the t errors a position among the not-yet-chosen ones
// (partial Fisher-Yates over 0..n-1) and a wrong symbol among the q^2 - 1
// values differing from the sent one.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "hermes/bounds.hpp"
#include "hermes/code.hpp"
#include "hermes/decode.hpp"
#include "hermes/errors.hpp"

namespace hermes {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

class TrialRng {
public:
    TrialRng(std::uint64_t seed, std::uint64_t trial) : gen_(splitmix64(seed + trial * 0x9E3779B97F4A7C15ULL)) {}

    // Uniform in [0, bound), bound >= 1.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % bound + 1) % bound;
        std::uint64_t x = gen_();
        while (x > limit) x = gen_();
        return x % bound;
    }

private:
    std::mt19937_64 gen_;
};

struct SimConfig {
    int q = 2;
    int u = 4;
    int m = 2;
    std::optional<int> l;  // taken from choose_params when absent
    int errors = 0;
    int trials = 1;
    std::uint64_t seed = 0;
    bool stats = false;
    int threads = 1;
};

struct SimReport {
    int trials = 0;
    int successes = 0;
    int failures = 0;
    double success_rate = 0.0;
    double mean_list_size = 0.0;
    double mean_mult_count = 0.0;  // filled when stats are on
    int l = 0;
    int tau = 0;
};

struct TrialOutcome {
    bool success = false;
    std::size_t list_size = 0;
    std::uint64_t mults = 0;
};

inline TrialOutcome run_trial(const HermitianCode& code, int m, int l, int errors, std::uint64_t seed, std::uint64_t trial) {
    const GaloisField& f = code.field();
    TrialRng rng(seed, trial);
    Vec message(static_cast<std::size_t>(code.k()));
    for (Elem& e : message) e = f.element_at(static_cast<int>(rng.below(static_cast<std::uint64_t>(f.order()))));
    const Vec sent = code.encode(message).codeword;

    Vec received = sent;
    std::vector<int> pos(static_cast<std::size_t>(code.n()));
    for (int i = 0; i < code.n(); ++i) pos[static_cast<std::size_t>(i)] = i;
    for (int e = 0; e < errors; ++e) {
        const auto pick = static_cast<std::size_t>(e) + static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(code.n() - e)));
        std::swap(pos[static_cast<std::size_t>(e)], pos[pick]);
        const auto at = static_cast<std::size_t>(pos[static_cast<std::size_t>(e)]);
        const int orig = f.index_of(sent[at]);
        int r = static_cast<int>(rng.below(static_cast<std::uint64_t>(f.order() - 1)));
        if (r >= orig) ++r;
        received[at] = f.element_at(r);
    }

    const DecodeResult res = list_decode(code, received, m, l);
    return TrialOutcome{res.contains(message), res.entries.size(), res.counter.mult_count};
}

inline SimReport run_simulation(const SimConfig& cfg) {
    if (cfg.trials < 1) throw ParameterError("trials must be at least 1");
    if (cfg.errors < 0) throw ParameterError("error weight must be nonnegative");
    if (cfg.threads < 1) throw ParameterError("threads must be at least 1");
    const HermitianCode code = HermitianCode::make(cfg.q, cfg.u);
    if (cfg.errors > code.n()) throw ParameterError("error weight exceeds n=" + std::to_string(code.n()));
    const DecoderParams params = choose_params(code, cfg.m);
    const int l = cfg.l.value_or(std::max(params.l, cfg.m));
    if (l < cfg.m) throw ParameterError("list size l must be at least m");

    std::vector<TrialOutcome> outcomes(static_cast<std::size_t>(cfg.trials));
    auto work = [&](int begin, int end) {
        for (int t = begin; t < end; ++t) {
            outcomes[static_cast<std::size_t>(t)] = run_trial(code, cfg.m, l, cfg.errors, cfg.seed, static_cast<std::uint64_t>(t));
        }
    };
    const int workers = std::min(cfg.threads, cfg.trials);
    if (workers == 1) {
        work(0, cfg.trials);
    } else {
        std::vector<std::thread> pool;
        const int chunk = (cfg.trials + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            const int b = w * chunk;
            const int e = std::min(cfg.trials, b + chunk);
            if (b < e) pool.emplace_back(work, b, e);
        }
        for (auto& th : pool) th.join();
    }

    SimReport rep;
    rep.trials = cfg.trials;
    rep.l = l;
    rep.tau = params.tau;
    double lists = 0.0;
    double mults = 0.0;
    for (const TrialOutcome& o : outcomes) {
        rep.successes += o.success ? 1 : 0;
        lists += static_cast<double>(o.list_size);
        mults += static_cast<double>(o.mults);
    }
    rep.failures = rep.trials - rep.successes;
    rep.success_rate = static_cast<double>(rep.successes) / rep.trials;
    rep.mean_list_size = lists / rep.trials;
    if (cfg.stats) rep.mean_mult_count = mults / rep.trials;
    return rep;
}

}  // namespace hermes
