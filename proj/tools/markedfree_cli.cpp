// Command-line surface: machine-readable certificates in, certificates out.
// Exit codes: 0 success (verify: certificate holds), 1 I/O or validation
// failure (stage named on stderr), 2 verification found a violating word.

#include "markedfree/json_io.hpp"
#include "markedfree/report.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <string>
#include <vector>

namespace mf = markedfree;

namespace {

int run_stage(const std::string& stage, const std::function<int()>& body) {
    try {
        return body();
    } catch (const mf::WitnessError& e) {
        std::cerr << "error [" << stage << "/" << e.stage << "]: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error [" << stage << "]: " << e.what() << "\n";
        return 1;
    }
}

std::vector<mf::PLMap> load_tuple_or_bundle_marking(const std::string& path, mf::json* bundle_json) {
    const mf::json j = mf::load_json_file(path);
    const std::string format = j.value("format", "");
    if (format == "markedfree.bundle/1") {
        if (bundle_json) *bundle_json = j;
        mf::MarkingBundle b = mf::bundle_from_json(j);
        return {b.g, b.h};
    }
    if (format == "markedfree.tuple/1") return mf::tuple_from_json(j);
    throw std::invalid_argument(path + ": expected a bundle or tuple file");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"markedfree: exact free-ball markings of the real-line Thompson group"};
    app.require_subcommand(1);

    // build
    auto* build = app.add_subcommand("build", "construct a marking bundle (g_n, h_n)");
    int build_n = 1;
    std::uint64_t build_seed = 42;
    std::uint64_t build_budget = 256;
    std::string build_out = "bundle.json";
    build->add_option("--n", build_n, "marking index (free ball radius)")->check(CLI::PositiveNumber);
    build->add_option("--seed", build_seed, "search seed");
    build->add_option("--budget", build_budget, "candidate search budget");
    build->add_option("--out", build_out, "output bundle path");

    // verify
    auto* verify = app.add_subcommand("verify", "exhaustively verify a free ball");
    std::string verify_in;
    int verify_radius = -1;
    int verify_threads = 1;
    std::string verify_out;
    verify->add_option("--in", verify_in, "bundle or tuple file")->required();
    verify->add_option("--radius", verify_radius, "override radius (tuples require it)");
    verify->add_option("--threads", verify_threads, "worker threads");
    verify->add_option("--out", verify_out, "certificate path (default <in>.cert.json)");

    // witness
    auto* witness = app.add_subcommand("witness", "emit generation witnesses for p_n, q_n");
    std::string witness_in, witness_out;
    witness->add_option("--in", witness_in, "bundle file")->required();
    witness->add_option("--out", witness_out, "witness path (default <in>.witness.json)");

    // distance
    auto* distance = app.add_subcommand("distance", "distance to the free group marking");
    std::vector<std::string> distance_in;
    std::string distance_out;
    int distance_cutoff = 4;
    int distance_threads = 1;
    distance->add_option("--in", distance_in, "bundle or tuple file (repeat for a sequence report)")
        ->required();
    distance->add_option("--cutoff", distance_cutoff, "censoring cutoff")->check(CLI::PositiveNumber);
    distance->add_option("--threads", distance_threads, "worker threads");
    distance->add_option("--out", distance_out, "report path (default <first-in>.distance.json)");

    // express
    auto* express = app.add_subcommand("express", "solve the word problem for a PL map");
    std::string express_in, express_out;
    express->add_option("--in", express_in, "PLMap json file")->required();
    express->add_option("--out", express_out, "word file (default <in>.word.json)");

    // free-pair
    auto* pair = app.add_subcommand("free-pair", "certified free pair in the derived subgroup");
    int pair_n = 1;
    std::uint64_t pair_seed = 42;
    std::uint64_t pair_budget = 256;
    std::string pair_out = "pair.json";
    pair->add_option("--n", pair_n, "certified radius")->check(CLI::PositiveNumber);
    pair->add_option("--seed", pair_seed, "search seed");
    pair->add_option("--budget", pair_budget, "candidate search budget");
    pair->add_option("--out", pair_out, "output path");

    CLI11_PARSE(app, argc, argv);

    if (build->parsed()) {
        return run_stage("build", [&] {
            mf::RunReport report("build", {{"n", build_n}, {"seed", build_seed}, {"budget", build_budget}});
            mf::BuildOptions opts;
            opts.pair.candidate_budget = build_budget;
            const mf::MarkingBundle bundle = mf::build_marking(build_n, build_seed, opts);
            mf::save_json_file(build_out, mf::bundle_to_json(bundle));
            report.add_output(build_out);
            report.add_summary("m", bundle.m);
            report.add_summary("blocks", bundle.pair_cert.blocks.size());
            report.add_summary("pair_words_certified", bundle.pair_cert.checked_words);
            report.write(build_out + ".report.json");
            std::cout << "bundle written to " << build_out << " (m=" << bundle.m
                      << ", blocks=" << bundle.pair_cert.blocks.size() << ")\n";
            return 0;
        });
    }

    if (verify->parsed()) {
        return run_stage("verify", [&] {
            mf::RunReport report("verify", {{"in", verify_in}, {"radius", verify_radius},
                                            {"threads", verify_threads}});
            const std::string out = verify_out.empty() ? verify_in + ".cert.json" : verify_out;
            const mf::json j = mf::load_json_file(verify_in);
            mf::json cert;
            mf::CheckReport check;
            if (j.value("format", "") == "markedfree.bundle/1") {
                const mf::MarkingBundle bundle = mf::bundle_from_json(j);
                if (verify_radius >= 0) {
                    check = mf::check_no_relations({bundle.g, bundle.h}, 2 * verify_radius,
                                                   verify_threads);
                    cert = mf::check_report_to_json(check);
                } else {
                    const mf::BallCertificate ball = mf::verify_free_ball(bundle, verify_threads);
                    check = ball.report;
                    if (!ball.shadow_passed) throw std::runtime_error("middle-block shadow check failed");
                    cert = mf::ball_certificate_to_json(ball, bundle);
                }
            } else {
                const auto tuple = mf::tuple_from_json(j);
                if (verify_radius < 0)
                    throw std::invalid_argument("tuple verification requires --radius");
                check = mf::check_no_relations(tuple, 2 * verify_radius, verify_threads);
                cert = mf::check_report_to_json(check);
            }
            mf::save_json_file(out, cert);
            report.add_output(out);
            report.add_summary("checked_words", check.checked_words);
            report.write(out + ".report.json");
            if (check.violation) {
                std::cout << "violation: " << check.violation->str() << "\n";
                return 2;
            }
            std::cout << "verified: " << check.checked_words << " words, no relation\n";
            return 0;
        });
    }

    if (witness->parsed()) {
        return run_stage("witness", [&] {
            mf::RunReport report("witness", {{"in", witness_in}});
            const std::string out = witness_out.empty() ? witness_in + ".witness.json" : witness_out;
            const mf::MarkingBundle bundle = mf::bundle_from_json(mf::load_json_file(witness_in));
            const mf::GenerationWitness w = mf::generation_witness(bundle);
            // Re-verify exactness before writing anything.
            if (!(w.W_p.eval({bundle.g, bundle.h}) == bundle.p) ||
                !(w.W_q.eval({bundle.g, bundle.h}) == bundle.q))
                throw std::runtime_error("witness re-verification failed");
            mf::save_json_file(out, mf::witness_to_json(w, bundle));
            report.add_output(out);
            report.add_summary("s", w.s);
            report.add_summary("expanded_length_p", w.expanded_length_p.get_str());
            report.add_summary("expanded_length_q", w.expanded_length_q.get_str());
            report.write(out + ".report.json");
            std::cout << "witness written to " << out << " (expanded |W_p|=" << w.expanded_length_p.get_str()
                      << ", |W_q|=" << w.expanded_length_q.get_str() << ")\n";
            return 0;
        });
    }

    if (distance->parsed()) {
        return run_stage("distance", [&] {
            mf::RunReport report("distance", {{"in", distance_in}, {"cutoff", distance_cutoff},
                                              {"threads", distance_threads}});
            const std::string out =
                distance_out.empty() ? distance_in.front() + ".distance.json" : distance_out;
            if (distance_in.size() == 1) {
                const auto tuple = load_tuple_or_bundle_marking(distance_in.front(), nullptr);
                const mf::DistanceReport rep =
                    mf::distance_to_free(tuple, distance_cutoff, distance_threads);
                mf::save_json_file(out, mf::distance_report_to_json(rep));
                report.add_output(out);
                report.add_summary("n", rep.n);
                report.write(out + ".report.json");
                std::cout << "distance e^-" << rep.n << (rep.censored ? " (censored)" : " (exact)")
                          << "\n";
                return 0;
            }
            // Several inputs: aggregate the per-bundle distances into one
            // sequence report.
            mf::json entries = mf::json::array();
            for (const auto& path : distance_in) {
                const auto t0 = std::chrono::steady_clock::now();
                const auto tuple = load_tuple_or_bundle_marking(path, nullptr);
                const mf::DistanceReport rep =
                    mf::distance_to_free(tuple, distance_cutoff, distance_threads);
                const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                    std::chrono::steady_clock::now() - t0)
                                    .count();
                mf::json entry = mf::distance_report_to_json(rep);
                entry["source"] = path;
                entry["wall_clock_ms"] = ms;
                std::cout << path << ": e^-" << rep.n << (rep.censored ? " (censored)" : " (exact)")
                          << "\n";
                entries.push_back(std::move(entry));
            }
            mf::save_json_file(out, mf::json{{"format", "markedfree.distance_sequence/1"},
                                             {"cutoff", distance_cutoff},
                                             {"sequence", std::move(entries)}});
            report.add_output(out);
            report.write(out + ".report.json");
            return 0;
        });
    }

    if (express->parsed()) {
        return run_stage("express", [&] {
            mf::RunReport report("express", {{"in", express_in}});
            const std::string out = express_out.empty() ? express_in + ".word.json" : express_out;
            const mf::PLMap f = mf::plmap_from_json(mf::load_json_file(express_in));
            const mf::Word w = mf::express_word(f);
            if (!(mf::eval_word(w, {mf::generator_f1(), mf::generator_f2()}) == f))
                throw std::runtime_error("expressed word failed to re-evaluate");
            mf::save_json_file(out, mf::json{{"format", "markedfree.word/1"},
                                             {"word", w.str()},
                                             {"length", w.length()}});
            report.add_output(out);
            report.write(out + ".report.json");
            std::cout << "word: " << w.str() << "\n";
            return 0;
        });
    }

    if (pair->parsed()) {
        return run_stage("free-pair", [&] {
            mf::RunReport report("free-pair", {{"n", pair_n}, {"seed", pair_seed}, {"budget", pair_budget}});
            mf::FreePairOptions opts;
            opts.candidate_budget = pair_budget;
            const mf::FreePair fp = mf::free_pair(pair_n, pair_seed, opts);
            mf::save_json_file(pair_out, mf::free_pair_to_json(fp));
            report.add_output(pair_out);
            report.add_summary("blocks", fp.cert.blocks.size());
            report.write(pair_out + ".report.json");
            std::cout << "pair written to " << pair_out << " (certified radius " << fp.cert.radius
                      << ", " << fp.cert.checked_words << " words)\n";
            return 0;
        });
    }

    return 0;
}
