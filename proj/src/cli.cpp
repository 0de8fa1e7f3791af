#include "qwa/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "qwa/suite.hpp"

namespace qwa {

namespace {

struct Config {
    std::string p;
    int trunc = kDefaultTrunc;
    std::uint64_t seed = 1;
    int degree_cap = kDefaultDegreeCap;
    std::string json_arg;
    std::string out;
    std::string mode = "p2-explicit";
    std::string mutate;
};

class UsageError : public std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

std::vector<int> parse_primes(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            const int v = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            out.push_back(Prime(v).value());
        } catch (const InputError&) {
            throw;
        } catch (const std::exception&) {
            throw UsageError("--p expects a comma-separated list of primes, got \"" + text + "\"");
        }
    }
    if (out.empty()) throw UsageError("--p is empty");
    return out;
}

int single_prime(const Config& cfg) {
    if (cfg.p.empty()) throw UsageError("--p is required");
    const auto ps = parse_primes(cfg.p);
    if (ps.size() != 1) throw UsageError("this command takes a single prime");
    return ps.front();
}

json read_input(const Config& cfg) {
    std::string text;
    if (cfg.json_arg.empty()) {
        std::stringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else if (cfg.json_arg.front() == '@') {
        std::ifstream f(cfg.json_arg.substr(1));
        if (!f) throw UsageError("cannot read " + cfg.json_arg.substr(1));
        std::stringstream ss;
        ss << f.rdbuf();
        text = ss.str();
    } else {
        text = cfg.json_arg;
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
}

json element_json(const QWeylElement& e) {
    json j = to_json(e);
    j["pretty"] = e.to_string();
    return j;
}

json status_field(bool ok) { return ok ? "pass" : "fail"; }

int code_of(const json& result) {
    if (!result.is_object() || !result.contains("status")) return 0;
    const auto s = result["status"].get<std::string>();
    return s == "pass" ? 0 : (s == "inconclusive" ? 3 : 1);
}

// ---------------------------------------------------------------- commands

json cmd_normalize(const Config& cfg) {
    const json in = read_input(cfg);
    if (in.is_object() && in.contains("factors")) {
        const int p = prime_field(in);
        QWeylElement acc = QWeylElement::one(p);
        if (!in["factors"].is_array()) throw InputError("\"factors\" must be an array");
        for (const auto& f : in["factors"]) {
            json g = f;
            if (!g.contains("p")) g["p"] = p;
            acc = weyl_mul(acc, weyl_from_json(g), cfg.degree_cap);
        }
        return element_json(acc);
    }
    return element_json(weyl_from_json(in));
}

json cmd_commute(const Config& cfg) {
    const json in = read_input(cfg);
    if (!in.is_object() || !in.contains("a") || !in.contains("b")) throw InputError("expected {\"a\": element, \"b\": element}");
    const auto a = weyl_from_json(in["a"]);
    const auto b = weyl_from_json(in["b"]);
    return element_json(weyl_mul(a, b, cfg.degree_cap) - weyl_mul(b, a, cfg.degree_cap));
}

json cmd_center_check(const Config& cfg) {
    const auto e = weyl_from_json(read_input(cfg));
    const bool z = is_central(e), zs = has_central_exponents(e);
    const bool c = is_centralizing_Rx(e), cs = has_centralizing_exponents(e);
    return {{"check", "center_check"},
            {"status", status_field(z == zs && c == cs)},
            {"central", z},
            {"central_by_exponents", zs},
            {"centralizes_Rx", c},
            {"centralizes_Rx_by_exponents", cs}};
}

json cmd_reduce_modp(const Config& cfg) {
    const auto r = reduce_mod_p(weyl_from_json(read_input(cfg)));
    json j = to_json(r);
    j["pretty"] = r.to_string();
    return j;
}

json cmd_split_verify(const Config& cfg) {
    const Prime p(single_prime(cfg));
    const bool rel = verify_weyl_relation(p, cfg.trunc);
    json mod_i = to_json(verify_mod_I_isomorphism(p));
    const bool ok = rel && mod_i["status"] == "pass";
    return {{"check", "split_verify"},
            {"status", status_field(ok)},
            {"p", p.value()},
            {"N", cfg.trunc},
            {"verify_weyl_relation", status_field(rel)},
            {"D", to_json(build_D(p, cfg.trunc))},
            {"X", to_json(build_X(p, cfg.trunc))},
            {"mod_I", mod_i}};
}

json cmd_lift_verify(const Config& cfg) { return to_json(verify_surjectivity_trunc(Prime(single_prime(cfg)), cfg.trunc)); }

json cmd_phi(const Config& cfg) {
    const Prime p(single_prime(cfg));
    json j = to_json(phi_on_center(p, cfg.trunc));
    if (!cfg.json_arg.empty()) {
        const auto e = weyl_from_json(read_input(cfg));
        if (e.p() != p.value()) throw InputError("element prime differs from --p");
        json comps = json::array();
        for (const auto& c : phi_of(e, cfg.trunc).comps) comps.push_back(to_json(c));
        j["phi_of_input"] = comps;
    }
    return j;
}

json cmd_verify_azumaya(const Config& cfg) {
    if (cfg.mode == "p2-explicit") {
        if (!cfg.p.empty() && single_prime(cfg) != 2) throw UsageError("p2-explicit mode requires --p 2");
        return to_json(verify_p2_neutralization());
    }
    if (cfg.mode == "mod-p") return to_json(verify_kaneda_mod_J(Prime(single_prime(cfg))));
    throw UsageError("--mode must be p2-explicit or mod-p");
}

std::string hash_hex(const std::string& s) {
    std::ostringstream os;
    os << std::hex << std::hash<std::string>{}(s);
    return os.str();
}

json cmd_higgs_to_sigma(const Config& cfg) {
    const HiggsModule h = higgs_from_json(read_input(cfg));
    const SigmaModule s = higgs_to_sigma(h);
    const SigmaToHiggs back = sigma_to_higgs(s);
    const json back_json = to_json(back.higgs);
    return {{"module", to_json(s)},
            {"roundtrip", {{"recovered", back.higgs.theta() == h.theta()}, {"hash", hash_hex(back_json.dump())}}}};
}

json cmd_sigma_to_higgs(const Config& cfg) {
    const SigmaModule s = sigma_from_json(read_input(cfg));
    const SigmaToHiggs r = sigma_to_higgs(s);
    const SigmaModule again = higgs_to_sigma(r.higgs);
    const bool same = again.x_act() == s.x_act() && again.d_act() == s.d_act();
    return {{"module", to_json(r.higgs)},
            {"N", r.trunc},
            {"projector", element_json(r.projector)},
            {"normalization", r.normalization},
            {"roundtrip", {{"recovered", same}, {"hash", hash_hex(to_json(again).dump())}}}};
}

json cmd_roundtrip_check(const Config& cfg) {
    std::vector<HiggsModule> modules;
    if (!cfg.json_arg.empty()) modules.push_back(higgs_from_json(read_input(cfg)));
    else modules = jordan_corpus(single_prime(cfg), 3);
    json runs = json::array();
    bool all = true;
    for (const auto& h : modules) {
        const auto rc = roundtrip_check(h);
        all = all && rc.passed;
        runs.push_back(to_json(rc));
    }
    return {{"check", "roundtrip_check"}, {"status", status_field(all)}, {"modules", runs}};
}

json cmd_verify_all(const Config& cfg) {
    SuiteOptions o;
    if (!cfg.p.empty()) o.primes = parse_primes(cfg.p);
    o.seed = cfg.seed;
    o.mutate = cfg.mutate;
    if (!o.mutate.empty() && o.mutate != "split-d" && o.mutate != "kill-delta" && o.mutate != "p2-inner")
        throw UsageError("unknown mutation " + o.mutate);
    return run_suite(o);
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact computations in the quantum Weyl algebra at a p-th root of unity"};
    app.name("qwa");
    app.require_subcommand(1);
    app.fallthrough();

    Config cfg;
    app.add_option("--p", cfg.p, "prime, or comma-separated primes for verify-all");
    app.add_option("--trunc", cfg.trunc, "truncation order N (xi^{N+1} = 0)")->check(CLI::Range(1, 64));
    app.add_option("--seed", cfg.seed, "seed for randomized checks");
    app.add_option("--degree-cap", cfg.degree_cap, "maximum total degree of products")->check(CLI::PositiveNumber);
    app.add_option("--json", cfg.json_arg, "input JSON, inline or @file (stdin when absent)");
    app.add_option("--out", cfg.out, "write the result here instead of stdout");

    using Handler = std::function<json(const Config&)>;
    std::vector<std::pair<CLI::App*, Handler>> commands;
    auto add = [&](const char* name, const char* help, Handler h) {
        CLI::App* sub = app.add_subcommand(name, help);
        commands.emplace_back(sub, std::move(h));
        return sub;
    };
    add("normalize", "PBW normal form of an element or of a product of factors", cmd_normalize);
    add("commute", "commutator [a, b]", cmd_commute);
    add("center-check", "membership in the center and in the centralizer of R[x]", cmd_center_check);
    add("reduce-modp", "image in the classical Weyl algebra over F_p", cmd_reduce_modp);
    add("split-verify", "splitting matrices, their relation and the mod-I determinant", cmd_split_verify);
    add("lift-verify", "preimages of all matrix units modulo xi^{N+1}", cmd_lift_verify);
    add("phi", "the endomorphism Phi of the completed center", cmd_phi);
    auto* az = add("verify-azumaya", "explicit p = 2 identities or mod-p surjectivity", cmd_verify_azumaya);
    az->add_option("--mode", cfg.mode, "p2-explicit or mod-p");
    add("higgs-to-sigma", "Higgs module to sigma-module", cmd_higgs_to_sigma);
    add("sigma-to-higgs", "sigma-module to Higgs module", cmd_sigma_to_higgs);
    add("roundtrip-check", "roundtrip a Higgs module, or the Jordan corpus for --p", cmd_roundtrip_check);
    auto* all = add("verify-all", "run every check for the given primes", cmd_verify_all);
    all->add_option("--mutate", cfg.mutate)->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "qwa: " << e.what() << "\n";
        return 2;
    }

    try {
        json result;
        for (auto& [sub, handler] : commands)
            if (sub->parsed()) result = handler(cfg);
        const std::string text = result.dump(2) + "\n";
        if (cfg.out.empty()) out << text;
        else {
            std::ofstream f(cfg.out);
            if (!f) throw UsageError("cannot write " + cfg.out);
            f << text;
        }
        return code_of(result);
    } catch (const UsageError& e) {
        err << "qwa: usage: " << e.what() << "\n";
    } catch (const InputError& e) {
        err << "qwa: invalid input: " << e.what() << "\n";
    } catch (const DegreeCapError& e) {
        err << "qwa: degree cap exceeded: " << e.what() << "\n";
    } catch (const StructuralError& e) {
        err << "qwa: invalid input: " << e.what() << "\n";
    } catch (const json::exception& e) {
        err << "qwa: invalid input: " << e.what() << "\n";
    } catch (const VerificationFailure& e) {
        err << "qwa: verification failed: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

} // namespace qwa
