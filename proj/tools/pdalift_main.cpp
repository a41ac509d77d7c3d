// pdalift: construct, validate, lift and exercise placement delivery arrays.
//
// Exit codes: 0 success, 1 validation/verification failure, 2 usage error,
// 3 construction error.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pdalift/caching_sim.hpp"
#include "pdalift/chain.hpp"
#include "pdalift/pda.hpp"
#include "pdalift/randbc.hpp"
#include "pdalift/sweep.hpp"
#include "pdalift/validate.hpp"

namespace {

using nlohmann::ordered_json;

int classify(const pdalift::Error& e) {
    switch (e.code()) {
        case pdalift::Errc::not_a_pda:
        case pdalift::Errc::decode_failure:
            return 1;
        case pdalift::Errc::syntax_error:
        case pdalift::Errc::unknown_step:
        case pdalift::Errc::arity_error:
        case pdalift::Errc::bad_demand:
            return 2;
        default:
            return 3;
    }
}

ordered_json params_json(const pdalift::PdaParams& p) {
    ordered_json j;
    j["K"] = p.users;
    j["f"] = p.rows;
    j["Z"] = p.stars;
    j["S"] = p.symbol_count;
    if (p.gain)
        j["g"] = *p.gain;
    else
        j["g"] = nullptr;
    j["mem"] = {{"num", p.memory_ratio.num}, {"den", p.memory_ratio.den},
                {"value", p.memory_ratio.to_double()}};
    j["rate"] = {{"num", p.rate.num}, {"den", p.rate.den}, {"value", p.rate.to_double()}};
    return j;
}

// Pretty JSON by default; --json switches to single-line output.
void emit(std::ostream& out, const ordered_json& j, bool as_json) {
    out << (as_json ? j.dump() : j.dump(2)) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"placement delivery array toolkit"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable output");

    // build
    std::string chain_text, out_path;
    auto* build = app.add_subcommand("build", "construct a PDA from a chain");
    build->add_option("--chain", chain_text, "chain text, e.g. \"2pda(8,1) > bw2(4,2)\"")
        ->required();
    build->add_option("--out", out_path, "write the array as JSON to this path");

    // validate
    std::string in_path;
    auto* validate_cmd = app.add_subcommand("validate", "check an array against C1/C3");
    validate_cmd->add_option("--in", in_path, "PDA JSON file")->required();

    // verify
    std::string verify_path;
    long long files = 3, bytes = 0, trials = 20, seed = 1;
    auto* verify = app.add_subcommand("verify", "placement/delivery/decoding round trip");
    verify->add_option("--in", verify_path, "PDA JSON file")->required();
    verify->add_option("--files", files, "number of files (default 3)");
    verify->add_option("--bytes", bytes, "bytes per file (default 12*f)");
    verify->add_option("--trials", trials, "random demand vectors (default 20)");
    verify->add_option("--seed", seed, "demand RNG seed");

    // sweep
    long long users = 0;
    std::string csv_path;
    std::vector<std::string> families;
    std::string baseline;
    bool hull = false, minima = false;
    int budget = 4;
    auto* sweep_cmd = app.add_subcommand("sweep", "memory-rate tradeoff enumeration");
    sweep_cmd->add_option("--users", users, "number of users K")->required();
    sweep_cmd->add_option("--csv", csv_path, "output CSV path, or - for stdout")->required();
    sweep_cmd->add_option("--families", families, "restrict step families");
    sweep_cmd->add_option("--baseline", baseline, "append baseline rows (mn)");
    sweep_cmd->add_flag("--hull", hull, "mark lower convex hull vertices");
    sweep_cmd->add_flag("--minima", minima, "only per-gain minimum-memory points");
    sweep_cmd->add_option("--budget", budget, "lifting steps after the base (default 4)");

    // randbc
    pdalift::RandBcSpec spec;
    long long rb_seed = 0;
    std::string rb_out;
    auto* randbc = app.add_subcommand("randbc", "randomized compatible-family search");
    randbc->add_option("--b", spec.members, "number of members")->required();
    randbc->add_option("--r", spec.occurrences, "occurrences per symbol")->required();
    randbc->add_option("--e", spec.stars, "stars per column")->required();
    randbc->add_option("--alpha", spec.block_cols, "reference block columns (default 1)");
    randbc->add_option("--eta", spec.block_rows, "reference block rows (default 1)");
    randbc->add_option("--seed", rb_seed, "seed (default 0)");
    randbc->add_option("--attempts", spec.max_attempts, "max attempts (default 1)");
    randbc->add_option("--out", rb_out, "write members and reference as JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        if (*build) {
            const auto result = pdalift::run_chain(chain_text);
            if (!out_path.empty()) pdalift::save_json_file(result.pda, out_path);
            ordered_json j;
            j["chain"] = pdalift::render_chain(pdalift::parse_chain(chain_text));
            j["params"] = params_json(result.parameters);
            emit(std::cout, j, as_json);
            return 0;
        }
        if (*validate_cmd) {
            const auto p = pdalift::load_json_file(in_path);
            const auto rep = pdalift::validate(p);
            ordered_json j;
            j["valid"] = rep.valid;
            j["Z"] = rep.stars_per_column;
            ordered_json v = ordered_json::array();
            for (const auto& viol : rep.violations) {
                ordered_json one;
                one["kind"] = viol.kind == pdalift::ValidationReport::Kind::C1 ? "C1" : "C3";
                one["cells"] = viol.cells;
                one["detail"] = viol.detail;
                v.push_back(std::move(one));
            }
            j["violations"] = std::move(v);
            emit(std::cout, j, as_json);
            return rep.valid ? 0 : 1;
        }
        if (*verify) {
            const auto p = pdalift::load_json_file(verify_path);
            if (bytes == 0) bytes = 12LL * p.rows();
            const auto rep = pdalift::round_trip_verify(p, static_cast<int>(files), bytes,
                                                        static_cast<int>(trials),
                                                        static_cast<std::uint64_t>(seed));
            ordered_json j;
            j["decodedOk"] = rep.decoded_ok;
            j["trials"] = rep.trials;
            j["measuredRate"] = {{"num", rep.measured_rate.num},
                                 {"den", rep.measured_rate.den},
                                 {"value", rep.measured_rate.to_double()}};
            j["measuredMemoryRatio"] = {{"num", rep.measured_memory_ratio.num},
                                        {"den", rep.measured_memory_ratio.den},
                                        {"value", rep.measured_memory_ratio.to_double()}};
            if (!rep.failure.empty()) j["failure"] = rep.failure;
            emit(std::cout, j, as_json);
            return rep.decoded_ok ? 0 : 1;
        }
        if (*sweep_cmd) {
            pdalift::SweepOptions opts;
            opts.step_budget = budget;
            opts.families.insert(families.begin(), families.end());
            auto points = pdalift::sweep(users, opts);
            if (hull) pdalift::mark_hull(points);
            if (minima) {
                std::vector<pdalift::TradeoffPoint> filtered;
                for (auto& p : points)
                    if (p.min_for_gain) filtered.push_back(std::move(p));
                points = std::move(filtered);
            }
            const bool with_baseline = baseline == "mn";
            if (csv_path == "-") {
                pdalift::write_csv(std::cout, users, points, with_baseline, hull);
            } else {
                std::ofstream out(csv_path, std::ios::binary);
                if (!out) throw pdalift::Error(pdalift::Errc::bad_grid,
                                               "cannot write " + csv_path);
                pdalift::write_csv(out, users, points, with_baseline, hull);
            }
            return 0;
        }
        if (*randbc) {
            spec.seed = static_cast<std::uint64_t>(rb_seed);
            const auto outcome = pdalift::rand_bc(spec);
            ordered_json j;
            j["success"] = outcome.success;
            j["attemptsUsed"] = outcome.attempts_used;
            j["seedUsed"] = outcome.seed_used;
            if (!outcome.success) {
                j["failedSymbol"] = outcome.failed_symbol;
                emit(std::cout, j, as_json);
                return 3;
            }
            ordered_json members = ordered_json::array();
            for (const auto& m : outcome.member_arrays)
                members.push_back(ordered_json::parse(pdalift::to_json(m)));
            j["members"] = std::move(members);
            j["pstar"] = ordered_json::parse(pdalift::to_json(outcome.pstar));
            if (!rb_out.empty()) {
                std::ofstream out(rb_out, std::ios::binary);
                out << j.dump(2) << "\n";
            }
            emit(std::cout, j, as_json);
            return 0;
        }
    } catch (const pdalift::Error& e) {
        std::cerr << pdalift::errc_name(e.code()) << ": " << e.what() << "\n";
        return classify(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
