// Command-line front end: expansions, strip classification and the
// cross-validation suite, with stable text and JSON output.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "plethysm/json_io.hpp"
#include "plethysm/plethysm.hpp"

namespace {

using nlohmann::json;
using namespace plethysm;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

std::string signed_str(const BigInt& v) {
    if (v.signum() > 0) return "+" + v.to_string();
    return v.to_string();  // "0" or "-..."
}

bool coeff_negative(const BigInt& c) { return c.signum() < 0; }
bool coeff_negative(const Rational& c) { return c.numerator().signum() < 0; }
std::string coeff_abs(const BigInt& c) { return c.abs().to_string(); }
std::string coeff_abs(const Rational& c) {
    return c.numerator().signum() < 0 ? (-c).to_string() : c.to_string();
}

// "+1·s[2] -1·s[1,1]"; terms come out of the map in reverse-lexicographic
// order already.
template <typename Coeff>
std::string render_terms(const Expansion<Coeff>& f, char basis) {
    if (f.empty()) return "0";
    std::string out;
    for (const auto& [key, c] : f.terms()) {
        if (!out.empty()) out += ' ';
        out += coeff_negative(c) ? '-' : '+';
        out += coeff_abs(c);
        out += "·";
        out += basis;
        out += key.to_string();
    }
    return out;
}

json make_document(const std::string& command, json inputs, json result) {
    return {{"format_version", kFormatVersion},
            {"command", command},
            {"inputs", std::move(inputs)},
            {"result", std::move(result)}};
}

void emit(const json& doc, const std::string& text, const std::string& format) {
    if (format == "json")
        std::cout << doc.dump() << "\n";
    else
        std::cout << text << "\n";
}

const char* kind_name(StripKind k) {
    switch (k) {
        case StripKind::Horizontal: return "Horizontal";
        case StripKind::NonHorizontal: return "NonHorizontal";
        default: return "NotWeightKStrip";
    }
}

int verify_ceiling() {
    if (const char* env = std::getenv("PLETHYSM_MAX_DEGREE")) {
        try {
            return std::stoi(env);
        } catch (const std::exception&) {
            throw std::invalid_argument("PLETHYSM_MAX_DEGREE is not an integer");
        }
    }
    return 12;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact plethystic Murnaghan-Nakayama expansions of symmetric functions"};
    app.require_subcommand(1);

    std::string format = "text";
    auto add_format = [&format](CLI::App* cmd) {
        cmd->add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"text", "json"}))
            ->capture_default_str();
    };

    int n = 0, k = 0, m = 0, max_degree = 8;
    unsigned long long seed = 0;
    std::string mu_text, lambda_text;
    bool show_chains = false;

    CLI::App* expand = app.add_subcommand("expand", "Schur expansion of (p_n o h_k) s_mu");
    expand->add_option("--n", n, "Plethysm modulus n of p_n o h_k")->required();
    expand->add_option("--k", k, "Weight k of p_n o h_k")->required();
    expand->add_option("--mu", mu_text, "Partition mu, e.g. \"3,1\"; empty for s_0 = 1");
    add_format(expand);

    CLI::App* plethysm_cmd = app.add_subcommand("plethysm", "Plethysm expansions");
    plethysm_cmd->require_subcommand(1);
    CLI::App* ph = plethysm_cmd->add_subcommand("ph", "Schur expansion of p_mu o h_m");
    ph->add_option("--mu", mu_text, "Partition mu")->required();
    ph->add_option("--m", m, "Inner degree m")->required();
    add_format(ph);
    CLI::App* hh = plethysm_cmd->add_subcommand("hh", "Schur expansion of h_n o h_m");
    hh->add_option("--n", n, "Outer degree n")->required();
    hh->add_option("--m", m, "Inner degree m")->required();
    add_format(hh);

    CLI::App* waring_cmd = app.add_subcommand("waring", "e-basis expansion of p_n o e_k");
    waring_cmd->add_option("--n", n, "Power n")->required();
    waring_cmd->add_option("--k", k, "Elementary degree k")->required();
    add_format(waring_cmd);

    CLI::App* classify_cmd =
        app.add_subcommand("classify", "Classify lambda/mu as an n-border strip of weight k");
    classify_cmd->add_option("--lambda", lambda_text, "Outer partition")->required();
    classify_cmd->add_option("--mu", mu_text, "Inner partition; empty by default");
    classify_cmd->add_option("--n", n, "Strip modulus")->required();
    classify_cmd->add_option("--k", k, "Strip weight")->required();
    classify_cmd->add_flag("--show-chains", show_chains, "List all chains with per-strip spins");
    add_format(classify_cmd);

    CLI::App* verify_cmd =
        app.add_subcommand("verify", "Run the cross-validation suite up to a degree bound");
    verify_cmd->add_option("--max-degree", max_degree, "Degree budget for all sweeps")
        ->capture_default_str();
    verify_cmd
        ->add_option("--seed", seed,
                     "Accepted for interface stability; sweeps are exhaustive and "
                     "deterministic, so the seed does not change the result")
        ->capture_default_str();
    add_format(verify_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (expand->parsed()) {
            if (n < 1 || k < 0) throw std::invalid_argument("expand requires n >= 1 and k >= 0");
            Partition mu = Partition::parse(mu_text);
            SchurExpansion result = pnhk_times_schur(n, k, mu);
            json doc = make_document(
                "expand", {{"n", n}, {"k", k}, {"mu", partition_to_json(mu)}},
                expansion_to_json(result, "s"));
            emit(doc, render_terms(result, 's'), format);
            return kExitOk;
        }

        if (ph->parsed()) {
            if (m < 1) throw std::invalid_argument("plethysm ph requires m >= 1");
            Partition mu = Partition::parse(mu_text);
            SchurExpansion result = b_coefficients(mu, m);
            json doc = make_document("plethysm ph", {{"mu", partition_to_json(mu)}, {"m", m}},
                                     expansion_to_json(result, "s"));
            emit(doc, render_terms(result, 's'), format);
            return kExitOk;
        }

        if (hh->parsed()) {
            if (n < 1 || m < 1) throw std::invalid_argument("plethysm hh requires n, m >= 1");
            SchurExpansion result = a_coefficients(n, m);
            json doc = make_document("plethysm hh", {{"n", n}, {"m", m}},
                                     expansion_to_json(result, "s"));
            emit(doc, render_terms(result, 's'), format);
            return kExitOk;
        }

        if (waring_cmd->parsed()) {
            if (n < 1 || k < 1) throw std::invalid_argument("waring requires n, k >= 1");
            EExpansion result = waring(n, k);
            json doc = make_document("waring", {{"n", n}, {"k", k}},
                                     expansion_to_json(result, "e"));
            emit(doc, render_terms(result, 'e'), format);
            return kExitOk;
        }

        if (classify_cmd->parsed()) {
            if (n < 1 || k < 1) throw std::invalid_argument("classify requires n, k >= 1");
            Partition lambda = Partition::parse(lambda_text);
            Partition mu = Partition::parse(mu_text);
            SkewShape skew{lambda, mu};
            StripClassification cls = classify(skew, n, k);
            BigInt d = det(build_M(lambda, mu, n));
            std::string text = std::string(kind_name(cls.kind)) + ", m=" +
                               std::to_string(cls.m_value) + ", sign=" +
                               signed_str(BigInt{cls.sign}) + ", det=" + signed_str(d);
            json result = {{"kind", kind_name(cls.kind)},
                           {"m", cls.m_value},
                           {"sign", cls.sign},
                           {"det_M", bigint_to_json(d)}};
            if (show_chains) {
                json chains = json::array();
                int index = 0;
                for (const StripChain& c : enumerate_chains(skew, n, false)) {
                    json entry = chain_to_json(c);
                    json spins = json::array();
                    std::string stages_text, spins_text;
                    for (size_t i = 1; i < c.stages.size(); ++i) {
                        int sp = spin(SkewShape{c.stages[i], c.stages[i - 1]});
                        spins.push_back(sp);
                        spins_text += (i > 1 ? "," : "") + std::to_string(sp);
                    }
                    for (size_t i = 0; i < c.stages.size(); ++i)
                        stages_text += (i ? " -> " : "") + c.stages[i].to_string();
                    std::string weights_text;
                    for (size_t i = 0; i < c.weights.size(); ++i)
                        weights_text += (i ? "," : "") + std::to_string(c.weights[i]);
                    bool horizontal = is_horizontal_chain(c, n);
                    entry["spins"] = spins;
                    entry["horizontal"] = horizontal;
                    chains.push_back(entry);
                    text += "\nchain " + std::to_string(++index) + ": " + stages_text +
                            " | weights=[" + weights_text + "] | spins=[" + spins_text +
                            "] | horizontal=" + (horizontal ? "yes" : "no");
                }
                result["chains"] = chains;
            }
            json doc = make_document("classify",
                                     {{"lambda", partition_to_json(lambda)},
                                      {"mu", partition_to_json(mu)},
                                      {"n", n},
                                      {"k", k}},
                                     result);
            emit(doc, text, format);
            return kExitOk;
        }

        if (verify_cmd->parsed()) {
            int ceiling = verify_ceiling();
            if (max_degree < 0 || max_degree > ceiling)
                throw std::invalid_argument("max-degree must be between 0 and " +
                                            std::to_string(ceiling) +
                                            " (override with PLETHYSM_MAX_DEGREE)");
            VerifySummary summary = run_all_checks(max_degree);
            json result = {{"passed", summary.ok}, {"cases", summary.cases}};
            std::string text;
            if (summary.ok) {
                text = "all checks passed (" + std::to_string(summary.cases) + " cases)";
            } else {
                result["failure"] = summary.failure;
                text = "verification failed: " + summary.failure;
            }
            json doc = make_document("verify",
                                     {{"max_degree", max_degree}, {"seed", seed}}, result);
            emit(doc, text, format);
            return summary.ok ? kExitOk : kExitVerifyFailed;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitVerifyFailed;
    }
    return kExitUsage;
}
