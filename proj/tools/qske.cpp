// qske: command-line front end for the protocol laboratory.
//
// Subcommands: table, run, analyze, demo. Output is deterministic for a
// fixed command line and seed. Exit codes: 0 success, 1 protocol or
// analysis failure, 2 usage error.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "qske/qske.hpp"

namespace {

void print(const std::string& text) { std::fputs(text.c_str(), stdout); }

std::uint64_t parse_group_element(const std::string& text) {
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
        throw std::invalid_argument("plaintext for kind 2 must be a non-negative integer");
    }
    return std::strtoull(text.c_str(), nullptr, 10);
}

int cmd_table(const std::string& format) {
    if (format == "json") {
        print(qske::dump_json(qske::render_table_json()));
    } else {
        print(qske::render_table_text());
    }
    return 0;
}

struct RunFlags {
    int kind = 0;
    std::string plaintext;
    std::string key;
    std::uint64_t q = 0, g = 0, s = 0;
    bool has_q = false, has_g = false, has_s = false;
    int t = 0;
    bool has_t = false;
    std::string mode = "sampled";
    int trials = 1;
    std::uint64_t seed = 0;
    std::string format = "text";
};

int cmd_run(const RunFlags& flags) {
    const qske::KindRecord record = qske::kind_record(flags.kind);
    if (record.existence == qske::Existence::NotExists) {
        std::cerr << "error: kind " << flags.kind
                  << " is in existence class N, no protocol can exist: " << record.rationale
                  << "\n";
        return 1;
    }

    qske::TrialOptions opts;
    opts.trials = flags.trials;
    opts.seed = flags.seed;
    if (!flags.plaintext.empty()) {
        if (flags.kind == 2) {
            opts.plaintext_value = parse_group_element(flags.plaintext);
        } else {
            opts.plaintext = qske::BitString::parse(flags.plaintext);
        }
    }
    if (!flags.key.empty()) opts.key = qske::BitString::parse(flags.key);
    if (flags.has_q) opts.q = flags.q;
    if (flags.has_g) opts.g = flags.g;
    if (flags.has_s) opts.s = flags.s;
    if (flags.has_t) opts.t = flags.t;
    opts.mode = flags.mode == "simulated" ? qske::Kind3Mode::Simulated : qske::Kind3Mode::Sampled;

    const qske::TrialReport report = qske::correctness_trial(flags.kind, opts);
    if (flags.format == "json") {
        print(qske::dump_json(qske::to_json(report)));
    } else {
        print(qske::render_trial_text(report));
    }
    return report.successes == report.trials ? 0 : 1;
}

int cmd_analyze(int kind, int samples, std::uint64_t seed, const std::string& format) {
    if (kind != 12 && kind != 28) {
        throw std::invalid_argument("analyze supports kinds 12 and 28 only");
    }
    if (samples < 1) throw std::invalid_argument("samples must be >= 1");

    qske::MixtureReport worst = qske::average_ciphertext(kind, 0);
    if (kind == 12) {
        const qske::MixtureReport other = qske::average_ciphertext(12, 1);
        if (other.distance_to_maximally_mixed > worst.distance_to_maximally_mixed) {
            worst = other;
        }
        worst.plaintext_descriptor = "classical bits 0 and 1, larger distance reported";
    } else {
        qske::RandomSource root(seed);
        for (int i = 0; i < samples; ++i) {
            qske::RandomSource rng = root.derive(static_cast<std::uint64_t>(i));
            qske::MixtureReport sample =
                qske::average_ciphertext(28, qske::random_qubit_density(rng));
            if (i == 0 || sample.distance_to_maximally_mixed > worst.distance_to_maximally_mixed) {
                worst = std::move(sample);
            }
        }
        worst.plaintext_descriptor = "seeded random 1-qubit density matrices, worst sample";
        worst.key_count_or_samples = samples;
    }

    if (format == "json") {
        print(qske::dump_json(qske::to_json(worst)));
    } else {
        print(qske::render_mixture_text(worst));
    }
    return worst.distance_to_maximally_mixed <= 1e-9 ? 0 : 1;
}

int cmd_demo(const std::string& name, int plaintext_bit, const std::string& format) {
    qske::FailureDemoReport report =
        name == "independent-key-failure" ? qske::independent_key_demo(plaintext_bit)
        : name == "entangled-key-contrast"
            ? qske::entangled_key_contrast(plaintext_bit)
            : throw std::invalid_argument("unknown demo: " + name +
                                          " (expected independent-key-failure or "
                                          "entangled-key-contrast)");
    if (format == "json") {
        qske::ordered_json j = qske::to_json(report);
        j["demo"] = name;
        print(qske::dump_json(j));
    } else {
        print(qske::render_demo_text(name, report));
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Laboratory for the 32 kinds of symmetric-key encryption whose plaintext, "
                 "ciphertext, key, and algorithms are each classical or quantum"};
    app.require_subcommand(1);

    const auto format_check = CLI::IsMember({"text", "json"});
    const auto mode_check = CLI::IsMember({"sampled", "simulated"});

    std::string table_format = "text";
    CLI::App* table = app.add_subcommand("table", "Print all 32 kinds with existence classes");
    table->add_option("--format", table_format, "text or json")->check(format_check);

    RunFlags run_flags;
    CLI::App* run = app.add_subcommand("run", "Run seeded encrypt/decrypt trials for one kind");
    run->add_option("--kind", run_flags.kind, "kind index 1..32")
        ->required()
        ->check(CLI::Range(1, 32));
    run->add_option("--plaintext", run_flags.plaintext,
                    "bit string, or a group element for kind 2");
    run->add_option("--key", run_flags.key, "bit-string key (random per trial when omitted)");
    run->add_option("--q", run_flags.q, "kind 2 prime modulus");
    run->add_option("--g", run_flags.g, "kind 2 group generator");
    run->add_option("--s", run_flags.s, "kind 2 secret exponent");
    run->add_option("--t", run_flags.t, "kind 3 share count")->check(CLI::Range(1, 32));
    run->add_option("--mode", run_flags.mode, "kind 3 mode: sampled or simulated")
        ->check(mode_check);
    run->add_option("--trials", run_flags.trials, "number of independent trials")
        ->check(CLI::Range(1, 1000000));
    run->add_option("--seed", run_flags.seed, "RNG seed")->envname("QSKE_SEED");
    run->add_option("--format", run_flags.format, "text or json")->check(format_check);

    int analyze_kind = 0;
    int analyze_samples = 50;
    std::uint64_t analyze_seed = 0;
    std::string analyze_format = "text";
    CLI::App* analyze =
        app.add_subcommand("analyze", "Key-averaged ciphertext mixture for kinds 12 and 28");
    analyze->add_option("--kind", analyze_kind, "12 or 28")->required();
    analyze->add_option("--samples", analyze_samples,
                        "random plaintext samples for kind 28")
        ->check(CLI::Range(1, 100000));
    analyze->add_option("--seed", analyze_seed, "RNG seed")->envname("QSKE_SEED");
    analyze->add_option("--format", analyze_format, "text or json")->check(format_check);

    std::string demo_name;
    int demo_plaintext = 0;
    std::string demo_format = "text";
    CLI::App* demo = app.add_subcommand(
        "demo", "Independent-key failure walkthrough and its entangled-key contrast");
    demo->add_option("name", demo_name,
                     "independent-key-failure or entangled-key-contrast")
        ->required();
    demo->add_option("--plaintext", demo_plaintext, "plaintext bit")->check(CLI::Range(0, 1));
    demo->add_option("--format", demo_format, "text or json")->check(format_check);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    run_flags.has_q = run->count("--q") > 0;
    run_flags.has_g = run->count("--g") > 0;
    run_flags.has_s = run->count("--s") > 0;
    run_flags.has_t = run->count("--t") > 0;

    try {
        if (table->parsed()) return cmd_table(table_format);
        if (run->parsed()) return cmd_run(run_flags);
        if (analyze->parsed()) {
            return cmd_analyze(analyze_kind, analyze_samples, analyze_seed, analyze_format);
        }
        if (demo->parsed()) return cmd_demo(demo_name, demo_plaintext, demo_format);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
