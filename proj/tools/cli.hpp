#pragma once

// Command-line front end: params, encode, decode, interpolate, simulate.
// Kept in a header so the tests can drive it in-process.

#include <cstdint>
#include <cstdlib>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hermes/hermes.hpp"
#include "json.hpp"

namespace hermes::cli {

using json = nlohmann::json;

struct CodeArgs {
    int q = 2;
    int u = 4;
};

inline std::string format_basis(const HermitianCode& code) {
    std::string out;
    for (const Monomial& mono : code.basis()) {
        if (!out.empty()) out += ',';
        out += format_ring(code.field(), code.ring().monomial(code.field().one(), mono.r, mono.j));
    }
    return out;
}

inline std::string format_radius(const Radius& r) {
    long long a = r.num < 0 ? -r.num : r.num;
    long long b = r.den;
    while (b) {
        const long long t = a % b;
        a = b;
        b = t;
    }
    const long long g = a == 0 ? 1 : a;
    const long long num = r.num / g;
    const long long den = r.den / g;
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

inline int resolve_l(const HermitianCode& code, int m, std::optional<int> l) {
    if (l) return *l;
    return std::max(choose_params(code, m).l, m);
}

inline std::optional<std::uint64_t> env_seed() {
    const char* s = std::getenv("HERMES_SEED");
    if (s == nullptr || *s == '\0') return std::nullopt;
    try {
        std::size_t used = 0;
        const auto v = std::stoull(s, &used, 0);
        if (used != std::string(s).size()) throw ParameterError("bad HERMES_SEED");
        return v;
    } catch (const std::exception&) {
        throw ParameterError("HERMES_SEED is not an unsigned integer: '" + std::string(s) + "'");
    }
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"List decoding of Hermitian codes"};
    app.require_subcommand(1);

    CodeArgs code_args;
    int m = 1;
    std::optional<int> l;
    std::string message_text;
    std::string received_text;
    bool as_json = false;
    bool stats = false;
    int errors = 0;
    int trials = 1;
    std::optional<std::uint64_t> seed;
    int threads = 1;

    auto add_code = [&](CLI::App* sub) {
        sub->add_option("--q", code_args.q, "field size is q^2")->required();
        sub->add_option("--u", code_args.u, "code parameter, 0 < u < q^3")->required();
        sub->add_flag("--json", as_json, "machine-readable output");
    };

    auto* params = app.add_subcommand("params", "code and decoder parameters");
    add_code(params);
    std::optional<int> params_m;
    params->add_option("--m", params_m, "multiplicity");

    auto* encode = app.add_subcommand("encode", "encode a message");
    add_code(encode);
    encode->add_option("--message", message_text, "k comma-separated field elements")->required();

    auto* decode = app.add_subcommand("decode", "list-decode a received word");
    add_code(decode);
    decode->add_option("--m", m, "multiplicity")->required();
    decode->add_option("--l", l, "list size (default from the parameter bounds)");
    decode->add_option("--received", received_text, "n comma-separated field elements")->required();
    decode->add_flag("--stats", stats, "print the interpolation multiplication count");

    auto* interp = app.add_subcommand("interpolate", "compute the Q-polynomial");
    add_code(interp);
    interp->add_option("--m", m, "multiplicity")->required();
    interp->add_option("--l", l, "list size (default from the parameter bounds)");
    interp->add_option("--received", received_text, "n comma-separated field elements")->required();
    interp->add_flag("--stats", stats, "print the interpolation multiplication count");

    auto* simulate = app.add_subcommand("simulate", "Monte Carlo decoding experiment");
    add_code(simulate);
    simulate->add_option("--m", m, "multiplicity")->required();
    simulate->add_option("--l", l, "list size (default from the parameter bounds)");
    simulate->add_option("--errors", errors, "number of symbol errors per trial")->required();
    simulate->add_option("--trials", trials, "number of trials");
    simulate->add_option("--seed", seed, "RNG seed (overrides HERMES_SEED)");
    simulate->add_option("--threads", threads, "worker threads");
    simulate->add_flag("--stats", stats, "report the mean multiplication count");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (*params) {
            const HermitianCode code = HermitianCode::make(code_args.q, code_args.u);
            json j = {{"q", code.q()}, {"u", code.u()}, {"n", code.n()}, {"k", code.k()}, {"g", code.genus()},
                      {"basis", format_basis(code)}};
            std::ostringstream line;
            line << "n=" << code.n() << " k=" << code.k() << " g=" << code.genus();
            if (params_m) {
                const DecoderParams p = choose_params(code, *params_m);
                line << " N=" << p.N << " w=" << p.w << " l=" << p.l << " tau=" << p.tau;
                j["m"] = p.m;
                j["N"] = p.N;
                j["w"] = p.w;
                j["l"] = p.l;
                j["tau"] = p.tau;
            }
            if (as_json) {
                out << j.dump() << '\n';
            } else {
                out << line.str() << '\n' << "basis=" << format_basis(code) << '\n';
            }
            return 0;
        }

        if (*encode) {
            const HermitianCode code = HermitianCode::make(code_args.q, code_args.u);
            const Vec msg = parse_vector(code.field(), message_text);
            const auto enc = code.encode(msg);
            if (as_json) {
                out << json{{"codeword", format_vector(code.field(), enc.codeword)},
                            {"message_function", format_ring(code.field(), enc.mu)}}
                           .dump()
                    << '\n';
            } else {
                out << format_vector(code.field(), enc.codeword) << '\n';
            }
            return 0;
        }

        if (*decode) {
            const HermitianCode code = HermitianCode::make(code_args.q, code_args.u);
            const GaloisField& f = code.field();
            const Vec v = parse_vector(f, received_text);
            const DecodeResult res = list_decode(code, v, m, resolve_l(code, m, l));
            if (as_json) {
                json entries = json::array();
                for (const DecodeEntry& e : res.entries) {
                    entries.push_back({{"message", format_vector(f, e.message)},
                                       {"codeword", format_vector(f, e.codeword)},
                                       {"distance", e.distance}});
                }
                json j = {{"Q", format_poly(f, res.Q)}, {"entries", entries}, {"radius", format_radius(res.guarantee_radius)}};
                if (stats) j["mult_count"] = res.counter.mult_count;
                out << j.dump() << '\n';
            } else {
                out << "Q = " << format_poly(f, res.Q) << '\n';
                for (const DecodeEntry& e : res.entries) {
                    out << format_vector(f, e.message) << " | " << format_vector(f, e.codeword) << " | " << e.distance << '\n';
                }
                out << "radius=" << format_radius(res.guarantee_radius) << '\n';
                if (stats) out << "mult_count=" << res.counter.mult_count << " bound=" << res.counter_bound << '\n';
            }
            return 0;
        }

        if (*interp) {
            const HermitianCode code = HermitianCode::make(code_args.q, code_args.u);
            const GaloisField& f = code.field();
            const Vec v = parse_vector(f, received_text);
            const InterpResult res = interpolate(code, v, m, resolve_l(code, m, l));
            if (as_json) {
                json j = {{"Q", format_poly(f, res.Q)}, {"deg_u", code.ring().deg_u(res.Q)}};
                if (stats) {
                    j["mult_count"] = res.counter.mult_count;
                    j["bound"] = res.counter_bound;
                    j["updates"] = res.updates;
                }
                out << j.dump() << '\n';
            } else {
                out << "Q = " << format_poly(f, res.Q) << '\n';
                if (stats) {
                    out << "mult_count=" << res.counter.mult_count << " bound=" << res.counter_bound
                        << " updates=" << res.updates << '\n';
                }
            }
            return 0;
        }

        if (*simulate) {
            SimConfig cfg;
            cfg.q = code_args.q;
            cfg.u = code_args.u;
            cfg.m = m;
            cfg.l = l;
            cfg.errors = errors;
            cfg.trials = trials;
            cfg.seed = seed ? *seed : env_seed().value_or(0);
            cfg.stats = stats;
            cfg.threads = threads;
            const SimReport rep = run_simulation(cfg);
            if (as_json) {
                json j = {{"trials", rep.trials},         {"successes", rep.successes},
                          {"failures", rep.failures},     {"success_rate", rep.success_rate},
                          {"mean_list_size", rep.mean_list_size}, {"l", rep.l},
                          {"tau", rep.tau},               {"seed", cfg.seed}};
                if (stats) j["mean_mult_count"] = rep.mean_mult_count;
                out << j.dump() << '\n';
            } else {
                out << "trials=" << rep.trials << " successes=" << rep.successes << " failures=" << rep.failures
                    << " success_rate=" << std::fixed << std::setprecision(4) << rep.success_rate
                    << " mean_list_size=" << rep.mean_list_size << " l=" << rep.l << " tau=" << rep.tau
                    << " seed=" << cfg.seed;
                if (stats) out << " mean_mult_count=" << std::setprecision(1) << rep.mean_mult_count;
                out << '\n';
            }
            return 0;
        }
    } catch (const ParameterError& e) {
        err << "error: " << e.what() << '\n' << app.help();
        return 2;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 1;
}

}  // namespace hermes::cli
