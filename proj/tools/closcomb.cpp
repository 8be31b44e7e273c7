// closcomb: counting, uniform generation and evaluation of de Bruijn λ-terms,
// closures and environments.
//
// Exit codes: 0 ok; 1 usage or unsatisfiable parameters; 2 fuel exhausted;
// 3 parse error; 4 internal invariant breach / verification mismatch.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "closcomb/counting.hpp"
#include "closcomb/enumerate.hpp"
#include "closcomb/errors.hpp"
#include "closcomb/gfun.hpp"
#include "closcomb/machine.hpp"
#include "closcomb/sampler.hpp"
#include "closcomb/syntax.hpp"

using json = nlohmann::ordered_json;
using namespace closcomb;

namespace {

// fixed default seed so bare invocations are reproducible
constexpr std::uint64_t kDefaultSeed = 271828182845904523ULL;

void emit(const json& j, bool pretty) {
    if (pretty)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << j.dump() << "\n";
}

std::string dec(const BigInt& v) { return v.get_str(); }

const BigInt& count_of(Counter& counter, const std::string& cls, std::uint64_t n,
                       std::uint64_t m, std::uint64_t h) {
    if (cls == "plain-terms") return counter.plain_terms(n);
    if (cls == "m-open-terms") return counter.open_terms(m, n);
    if (cls == "shallow-terms") return counter.shallow_terms(h, m, n);
    if (cls == "plain-environments") return counter.plain_environments(n);
    if (cls == "plain-closures") return counter.plain_closures(n);
    if (cls == "closed-closures") return counter.open_closures(m, n);
    throw CLI::ValidationError("--class", "unknown class " + cls);
}

std::string render_uenv(const UEnv& e);

std::string render_uop(const UOpNode& op) {
    std::string a = op.is_shift ? "^" : "<" + render_term(op.term) + ", " + render_uenv(op.env) + ">";
    return "(" + a + ", " + std::to_string(op.lifts) + ")";
}

std::string render_uenv(const UEnv& e) {
    std::string out = "[";
    bool first = true;
    for (const UEnvNode* p = e.get(); p; p = p->tail.get()) {
        if (!first) out += ", ";
        first = false;
        out += render_uop(*p->head);
    }
    return out + "]";
}

std::string render_ustate(const UState& s) {
    std::string out = "[";
    bool first = true;
    for (const UStateNode* p = s.get(); p; p = p->tail.get()) {
        if (!first) out += ", ";
        first = false;
        out += "<" + render_term(p->head.term) + ", " + render_uenv(p->head.env) + ">";
    }
    return out + "]";
}

std::string render_kstate(const KrivineState& s) { return render_env(s); }

int run_count(Counter& counter, const std::string& cls, std::uint64_t size, std::uint64_t m,
              std::uint64_t h, bool upto, bool pretty) {
    json out;
    out["class"] = cls;
    if (cls == "m-open-terms" || cls == "shallow-terms" || cls == "closed-closures")
        out["m"] = m;
    if (cls == "shallow-terms") out["h"] = h;
    if (upto) {
        out["upto"] = size;
        json counts = json::array();
        for (std::uint64_t n = 0; n <= size; ++n)
            counts.push_back(dec(count_of(counter, cls, n, m, h)));
        out["counts"] = counts;
    } else {
        out["size"] = size;
        out["count"] = dec(count_of(counter, cls, size, m, h));
    }
    emit(out, pretty);
    return 0;
}

int run_sample(Counter& counter, const std::string& cls, std::uint64_t size, std::uint64_t m,
               std::uint64_t num, std::uint64_t seed, const std::string& method,
               const std::string& window, bool pretty) {
    RandomSource rng(seed);
    Sampler sampler(counter);
    double mean_acc = 0.0;

    std::uint64_t lo = 0, hi = boltzmann_no_limit;
    BoltzmannParams params{};
    if (method == "boltzmann") {
        if (cls != "plain-closures" && cls != "plain-environments")
            throw CLI::ValidationError("--method",
                                       "no Boltzmann sampler for class " + cls);
        if (!window.empty()) {
            auto colon = window.find(':');
            if (colon == std::string::npos)
                throw CLI::ValidationError("--window", "expected lo:hi");
            lo = std::stoull(window.substr(0, colon));
            hi = std::stoull(window.substr(colon + 1));
            if (lo > hi) throw CLI::ValidationError("--window", "needs lo <= hi");
        } else {
            lo = static_cast<std::uint64_t>(0.9 * static_cast<double>(size));
            hi = static_cast<std::uint64_t>(1.1 * static_cast<double>(size) + 0.999999);
        }
        params = calibrate(static_cast<double>(size < 1 ? 1 : size));
    }

    for (std::uint64_t i = 0; i < num; ++i) {
        json line;
        std::uint64_t got = 0;
        if (method == "recursive") {
            if (cls == "plain-terms") {
                Term t = sampler.plain_term(size, rng);
                line["object"] = render_term(t);
                got = term_size(t);
            } else if (cls == "m-open-terms") {
                Term t = sampler.open_term(m, size, rng);
                line["object"] = render_term(t);
                got = term_size(t);
            } else if (cls == "plain-closures") {
                Closure c = sampler.plain_closure(size, rng);
                line["object"] = render_closure(c);
                got = closure_size(c);
            } else if (cls == "plain-environments") {
                Env e = sampler.plain_environment(size, rng);
                line["object"] = render_env(e);
                got = env_size(e);
            } else if (cls == "closed-closures") {
                Closure c = sampler.closed_closure(size, rng, m);
                line["object"] = render_closure(c);
                got = closure_size(c);
            } else {
                throw CLI::ValidationError("--class", "no sampler for class " + cls);
            }
        } else {
            if (cls == "plain-closures") {
                Closure c = boltzmann_closure(params, rng, lo, hi);
                line["object"] = render_closure(c);
                got = closure_size(c);
            } else {
                Env e = boltzmann_environment(params, rng, lo, hi);
                line["object"] = render_env(e);
                got = env_size(e);
            }
        }
        line["size"] = got;
        mean_acc += static_cast<double>(got);
        emit(line, pretty);
    }
    json summary;
    summary["summary"] = {{"class", cls},    {"num", num},   {"seed", seed},
                          {"method", method}, {"size", size},
                          {"mean-size", num ? mean_acc / static_cast<double>(num) : 0.0}};
    if (method == "boltzmann") {
        summary["summary"]["x"] = params.x;
        summary["summary"]["window"] = std::to_string(lo) + ":" + std::to_string(hi);
    }
    emit(summary, pretty);
    return 0;
}

int run_eval(const std::string& machine, const std::string& input, bool strong,
             std::uint64_t max_steps, bool trace, bool pretty) {
    json out;
    out["machine"] = machine;

    // the input is a closure when it looks like one, a term otherwise
    std::optional<Closure> closure;
    std::optional<Term> term;
    std::string trimmed = input;
    auto first = trimmed.find_first_not_of(" \t\n");
    if (first != std::string::npos && trimmed[first] == '<')
        closure = parse_closure(input);
    else
        term = parse_term(input);

    auto finish = [&](const std::string& result, std::uint64_t steps, bool exhausted) {
        out["result"] = result;
        out["steps"] = steps;
        out["status"] = exhausted ? "fuel-exhausted" : "normal";
        emit(out, pretty);
        return exhausted ? 2 : 0;
    };

    if (machine == "subst" || machine == "upsilon") {
        if (!term) {
            if (closure_openness(*closure) != 0)
                throw eval_domain_error(machine + " evaluation needs a term or a closed closure");
            term = decode_closure(*closure);
        }
        EvalResult r = machine == "upsilon" ? upsilon_normalize(*term, max_steps)
                       : strong             ? beta_normalize(*term, max_steps)
                                            : beta_whnf(*term, max_steps);
        if (trace && machine == "subst") {
            Term cur = *term;
            std::uint64_t i = 0;
            json steps = json::array();
            while (i < r.steps) {
                auto n = beta_step(cur);
                if (!n) break;
                cur = *n;
                steps.push_back(render_term(cur));
                ++i;
            }
            out["trace"] = steps;
        }
        return finish(r.term ? render_term(r.term) : "", r.steps, r.exhausted);
    }

    if (machine == "krivine" || machine == "krivine-fetch") {
        bool fetch = machine == "krivine-fetch";
        Closure start = closure ? *closure : mk_closure(*term, nullptr);
        KrivineState s0 = env_cons(start, nullptr);
        if (trace) {
            json steps = json::array();
            KrivineState s = s0;
            std::uint64_t i = 0;
            while (i < max_steps) {
                auto n = krivine_step(s, fetch);
                if (!n) break;
                s = *n;
                steps.push_back(render_kstate(s));
                ++i;
            }
            out["trace"] = steps;
        }
        KrivineResult r = krivine_run(s0, max_steps, fetch);
        if (strong && !r.exhausted) {
            Term decoded = decode_closure(r.state->head);
            EvalResult nf = beta_normalize(decoded, max_steps);
            return finish(render_term(nf.term), r.steps + nf.steps, nf.exhausted);
        }
        return finish(render_kstate(r.state), r.steps, r.exhausted);
    }

    if (machine == "u") {
        UClosure start = closure ? u_embed(*closure) : UClosure{*term, nullptr};
        if (strong) {
            EvalResult r = u_nf(start, max_steps);
            return finish(r.term ? render_term(r.term) : "", r.steps, r.exhausted);
        }
        UState s0 = u_state_cons(start, nullptr);
        if (trace) {
            json steps = json::array();
            UState s = s0;
            std::uint64_t i = 0;
            while (i < max_steps) {
                auto n = u_step(s);
                if (!n) break;
                s = *n;
                steps.push_back(render_ustate(s));
                ++i;
            }
            out["trace"] = steps;
        }
        URunResult r = u_run(s0, max_steps);
        return finish(render_ustate(r.state), r.steps, r.exhausted);
    }

    throw CLI::ValidationError("--machine", "unknown machine " + machine);
}

int run_analyze(unsigned precision, std::uint64_t shallow_h, bool pretty) {
    AsymptoticConstants k = constants(precision);
    unsigned d = precision;
    json out;
    out["digits"] = d;
    out["rho_plain"] = k.rho_plain.to_string(d);
    out["rho_terms"] = k.rho_terms.to_string(d);
    out["C_e"] = k.C_e.to_string(d);
    out["C_c"] = k.C_c.to_string(d);
    out["C_terms"] = k.C_terms.to_string(d);
    out["a_E_infinity"] = k.a_E.to_string(d);
    out["b_E_infinity"] = k.b_E.to_string(d);
    out["a_C_infinity"] = k.a_C.to_string(d);
    out["b_C_infinity"] = k.b_C.to_string(d);
    out["C0_interval"] = {k.C0_lower.to_string(12), k.C0_upper.to_string(12)};
    if (shallow_h > 0) {
        GrowthBounds g = growth_bounds_closed(shallow_h, precision);
        json sh;
        sh["h"] = shallow_h;
        sh["L0_at_rho_terms"] = g.shallow_at_rho_terms.to_string(d);
        sh["conclusive"] = g.conclusive;
        if (g.conclusive) {
            sh["rho_lower"] = g.rho_lower.to_string(d);
            sh["rho_upper"] = g.rho_upper.to_string(d);
        }
        out["growth-bounds"] = sh;
    }
    emit(out, pretty);
    return 0;
}

int run_verify(std::uint64_t upto, std::uint64_t rec_upto, bool pretty) {
    Counter counter;
    json out;
    CrosscheckReport cc = oracle_crosscheck(counter, upto, std::max<std::uint64_t>(upto, 12));
    json mismatches = json::array();
    for (const auto& e : cc.entries) {
        if (e.ok) continue;
        mismatches.push_back({{"class", e.cls}, {"m", e.m}, {"h", e.h}, {"n", e.n},
                              {"counted", dec(e.counted)}, {"enumerated", dec(e.enumerated)}});
    }
    out["oracle"] = {{"upto", upto}, {"ok", cc.ok}, {"checked", cc.entries.size()},
                     {"mismatches", mismatches}};
    RecurrenceReport rr = check_e_recurrence(counter, rec_upto);
    out["recurrence"] = {{"upto", rec_upto}, {"ok", rr.ok}};
    if (!rr.ok) out["recurrence"]["detail"] = rr.detail;
    emit(out, pretty);
    return cc.ok && rr.ok ? 0 : 4;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"counting, uniform random generation and abstract-machine evaluation\n"
                 "of de Bruijn λ-terms, closures and environments"};
    app.require_subcommand(1);
    bool pretty = false;
    app.add_flag("--pretty", pretty, "indent JSON output");

    std::string cls, method = "recursive", window, machine = "krivine", input;
    std::uint64_t size = 0, m = 0, h = 1, num = 1, seed = kDefaultSeed;
    std::uint64_t max_steps = 100000, upto = 8, rec_upto = 100, shallow_h = 0;
    unsigned precision = 50;
    bool upto_flag = false, strong = false, trace = false;

    auto* count = app.add_subcommand("count", "exact counts as decimal strings");
    count->add_option("--class", cls,
                      "plain-terms | m-open-terms | shallow-terms | plain-environments | "
                      "plain-closures | closed-closures")
        ->required();
    count->add_option("--size", size)->required();
    count->add_option("--m", m, "openness (m-open-terms, shallow-terms, closed-closures)");
    count->add_option("--shallow-h", h, "shallow bound (shallow-terms)");
    count->add_flag("--upto", upto_flag, "emit the whole table 0..size");

    auto* sample = app.add_subcommand("sample", "uniform random objects, one JSON line each");
    sample->add_option("--class", cls)->required();
    sample->add_option("--size", size)->required();
    sample->add_option("--m", m);
    sample->add_option("--num", num);
    sample->add_option("--seed", seed);
    sample->add_option("--method", method, "recursive | boltzmann");
    sample->add_option("--window", window, "lo:hi rejection window (boltzmann)");

    auto* eval = app.add_subcommand("eval", "evaluate a term or closure");
    eval->add_option("--machine", machine, "krivine | krivine-fetch | u | upsilon | subst");
    eval->add_option("--input", input)->required();
    eval->add_flag("--strong", strong, "strong normalization / readback");
    eval->add_option("--max-steps", max_steps);
    eval->add_flag("--trace", trace, "include step-by-step trace");

    auto* analyze = app.add_subcommand("analyze", "singularity constants as decimal strings");
    analyze->add_option("--precision", precision, "decimal digits (default 50)");
    analyze->add_option("--shallow-h", shallow_h, "include h-shallow growth bounds");

    auto* verify = app.add_subcommand("verify", "recurrence and enumeration cross-checks");
    verify->add_option("--upto", upto, "oracle crosscheck bound (default 8)");
    verify->add_option("--recurrence-upto", rec_upto, "recurrence check bound (default 100)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (*count || *sample) {
            CLI::App* cmd = *count ? count : sample;
            if (cls == "m-open-terms" && !cmd->count("--m"))
                throw CLI::ValidationError("--m", "m-open-terms needs an explicit --m");
            if (cls == "shallow-terms" && !cmd->count("--shallow-h"))
                throw CLI::ValidationError("--shallow-h", "shallow-terms needs --shallow-h");
            Counter counter;
            if (*count) return run_count(counter, cls, size, m, h, upto_flag, pretty);
            return run_sample(counter, cls, size, m, num, seed, method, window, pretty);
        }
        if (*eval) return run_eval(machine, input, strong, max_steps, trace, pretty);
        if (*analyze) return run_analyze(precision, shallow_h, pretty);
        if (*verify) return run_verify(upto, rec_upto, pretty);
    } catch (const parse_error& e) {
        json err{{"error", e.what()}, {"line", e.line}, {"column", e.column}};
        std::cerr << err.dump() << "\n";
        return 3;
    } catch (const CLI::ValidationError& e) {
        std::cerr << json{{"error", e.what()}}.dump() << "\n";
        return 1;
    } catch (const empty_class_error& e) {
        std::cerr << json{{"error", e.what()}}.dump() << "\n";
        return 1;
    } catch (const eval_domain_error& e) {
        std::cerr << json{{"error", e.what()}}.dump() << "\n";
        return 1;
    } catch (const oracle_limit_error& e) {
        std::cerr << json{{"error", e.what()}}.dump() << "\n";
        return 1;
    } catch (const retry_limit_error& e) {
        std::cerr << json{{"error", e.what()}}.dump() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << json{{"error", e.what()}}.dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << json{{"error", std::string("internal: ") + e.what()}}.dump() << "\n";
        return 4;
    }
    return 0;
}
