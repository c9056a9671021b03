// Command line front end: radius tables, Monte Carlo campaigns, single
// instance decoding, and instance generation.
//
// Exit codes: 0 success / recovered, 2 error cap judged exceeded,
// 3 decode failure, 64 usage error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "srfr/harness.hpp"

namespace {

using namespace srfr;

void write_text(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw UsageError("cannot open output file: " + path);
    out << text;
}

void print_functions(std::ostream& out, const RationalVector& rv) {
    for (size_t i = 0; i < rv.f.size(); ++i)
        out << "f_" << (i + 1) << " = " << rv.f[i].to_string() << "\n";
    out << "g = " << rv.g.to_string() << "\n";
}

void print_positions(std::ostream& out, const std::vector<size_t>& positions) {
    if (positions.empty()) {
        out << "none";
        return;
    }
    for (size_t i = 0; i < positions.size(); ++i) out << (i ? " " : "") << positions[i];
}

int cmd_radii(const std::string& config_path) {
    std::cout << radius_table(parse_config_file(config_path));
    return 0;
}

int cmd_campaign(const std::string& config_path, const std::string& out_path,
                 int64_t seed_override, int64_t trials_override) {
    CampaignConfig cfg = parse_config_file(config_path);
    if (seed_override >= 0) cfg.seed = static_cast<uint64_t>(seed_override);
    if (trials_override > 0) cfg.trials = static_cast<size_t>(trials_override);
    write_text(out_path, to_csv(run_campaign(cfg)));
    return 0;
}

int cmd_decode(const std::string& input_path) {
    InstanceFile inst = read_instance_file(input_path);
    ObservationMatrix obs = inst.observations();

    if (inst.d_A) {
        // System caps present: run the parameter-oblivious two-stage solver.
        ObliviousOutcome out = algorithm1(obs, inst.plswe_params());
        if (out.exceeded) {
            std::cerr << "error cap exceeded: no candidate within either degree cap stage\n";
            return 2;
        }
        if (out.candidate->psi.is_zero()) {
            std::cerr << "decode failed: candidates found but none has a usable denominator\n";
            return 3;
        }
        std::cerr << "stage " << out.stage << ", space dimension " << out.space_dim << "\n";
        print_functions(std::cout, reconstruct_fraction(*out.candidate));
        return 0;
    }

    SrfrDecodeResult res = decode_srfr(obs, inst.srfr_params());
    if (!res.ok()) {
        std::cerr << "decode failed: "
                  << (res.status == DecodeStatus::EmptySpace
                          ? "solution space is empty"
                          : "minimal candidate fails verification")
                  << "\n";
        return 3;
    }
    std::cerr << "space dimension " << res.space_dim << "\n";
    print_functions(std::cout, *res.value);
    return 0;
}

struct GenOptions {
    std::string mode = "srfr";
    uint64_t q = 0;
    int64_t n = 0;
    int64_t l = 1;
    int64_t deg_f = -1, deg_g = -1;
    int64_t d_f = -1, d_g = -1;
    int64_t deg_A = -1, deg_b = -1;
    int64_t d_A = -1, d_b = -1;
    int64_t errors = 0;
    int64_t eps = -1;
    uint64_t seed = 1;
    std::string variant = "n1";
    std::string output;
};

void require_gen(bool cond, const std::string& message) {
    if (!cond) throw UsageError(message);
}

int cmd_gen(GenOptions opt) {
    FieldParams fp;
    try {
        fp = FieldParams(opt.q);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("gen: ") + e.what());
    }
    require_gen(opt.n >= 1, "gen: need n >= 1");
    require_gen(static_cast<uint64_t>(opt.n) <= opt.q, "gen: need n <= q");
    require_gen(opt.l >= 1, "gen: need l >= 1");
    require_gen(opt.errors >= 0 && opt.errors < opt.n, "gen: errors must lie in [0, n)");
    if (opt.eps < 0) opt.eps = opt.errors;
    require_gen(opt.eps < opt.n, "gen: eps must lie in [0, n)");

    const size_t n = static_cast<size_t>(opt.n);
    const size_t l = static_cast<size_t>(opt.l);
    EvaluationGrid grid = default_grid(n, fp);
    Rng rng(opt.seed);

    InstanceFile inst;
    inst.q = opt.q;
    inst.n = n;
    inst.l = l;
    inst.eps = opt.eps;

    std::ostringstream truth;

    if (opt.mode == "srfr") {
        require_gen(opt.deg_f >= 0 && opt.deg_g >= 0, "gen: srfr needs --deg-f and --deg-g");
        if (opt.d_f < 0) opt.d_f = opt.deg_f;
        if (opt.d_g < 0) opt.d_g = opt.deg_g;
        require_gen(opt.d_f >= opt.deg_f && opt.d_g >= opt.deg_g,
                     "gen: caps must dominate the true degrees");
        require_gen(opt.d_f < opt.n && opt.d_g < opt.n, "gen: caps must stay below n");

        RationalVector rv = gen_random_rv(l, opt.deg_f, opt.deg_g, grid, rng);
        std::vector<size_t> positions =
            sample_error_positions(n, static_cast<size_t>(opt.errors), rng);
        ErrorPattern pattern;
        // The generator insists on |positions| <= eps; widen the cap for
        // generation only, so instances with more errors than the stored
        // cap (decode failure demos) stay expressible.
        SrfrParams params(n, l, opt.d_f, opt.d_g, std::max(opt.eps, opt.errors));
        ObservationMatrix obs = gen_random_instance(params, grid, rv, positions, rng, &pattern);

        inst.d_f = opt.d_f;
        inst.d_g = opt.d_g;
        for (const FieldElement& v : obs.y) inst.y.push_back(v.value());
        print_functions(truth, rv);
        truth << "corrupted columns: ";
        print_positions(truth, pattern.positions);
        truth << "\n";
    } else {
        require_gen(opt.deg_A >= 0 && opt.deg_b >= 0,
                     "gen: " + opt.mode + " needs --deg-A and --deg-b");
        if (opt.d_A < 0) opt.d_A = opt.deg_A;
        if (opt.d_b < 0) opt.d_b = opt.deg_b;
        require_gen(opt.d_A >= opt.deg_A && opt.d_b >= opt.deg_b,
                     "gen: caps must dominate the true degrees");

        std::optional<int64_t> want_f, want_g;
        if (opt.deg_f >= 0) want_f = opt.deg_f;
        if (opt.deg_g >= 0) want_g = opt.deg_g;
        auto [sys, rv] = gen_system(l, opt.deg_A, opt.deg_b, grid, rng, 2000, want_f, want_g);

        int64_t true_df = rv.numerator_degree();
        if (true_df < 0) true_df = 0;  // all-zero numerators
        int64_t true_dg = rv.g.degree();
        if (opt.d_f < 0) opt.d_f = true_df;
        if (opt.d_g < 0) opt.d_g = true_dg;
        require_gen(opt.d_f >= true_df && opt.d_g >= true_dg,
                     "gen: caps below the degrees of the sampled solution; rerun with larger "
                     "--d-f/--d-g or pin --deg-f/--deg-g");
        require_gen(opt.d_f < opt.n && opt.d_g < opt.n, "gen: caps must stay below n");

        std::vector<size_t> positions =
            sample_error_positions(n, static_cast<size_t>(opt.errors), rng);

        inst.d_f = opt.d_f;
        inst.d_g = opt.d_g;
        inst.d_A = opt.d_A;
        inst.d_b = opt.d_b;

        for (size_t i = 0; i < l; ++i)
            for (size_t j = 0; j < l; ++j)
                truth << "A[" << (i + 1) << "][" << (j + 1) << "] = " << sys.a(i, j).to_string()
                      << "\n";
        for (size_t i = 0; i < l; ++i)
            truth << "b[" << (i + 1) << "] = " << sys.b[i].to_string() << "\n";
        print_functions(truth, rv);

        if (opt.mode == "plswe") {
            ErrorPattern pattern;
            ObservationMatrix obs = blackbox(sys, grid, positions, rng, &pattern);
            for (const FieldElement& v : obs.y) inst.y.push_back(v.value());
            truth << "corrupted columns: ";
            print_positions(truth, pattern.positions);
            truth << "\n";
        } else {
            AdversarialVariant variant =
                opt.variant == "n2" ? AdversarialVariant::N2 : AdversarialVariant::N1;
            auto [obs, witness] = gen_adversarial_instance(sys, rv, grid, positions, variant);
            for (const FieldElement& v : obs.y) inst.y.push_back(v.value());
            truth << "variant: " << (variant == AdversarialVariant::N1 ? "N1" : "N2") << "\n";
            for (size_t i = 0; i < witness.groups.size(); ++i) {
                truth << "group " << (i + 1) << " columns: ";
                print_positions(truth, witness.groups[i]);
                truth << "\n";
            }
        }
    }

    for (const FieldElement& a : grid.points()) inst.alphas.push_back(a.value());
    write_text(opt.output, write_instance_text(inst));
    std::cerr << truth.str();
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Recovery of rational function vectors from erroneous evaluations"};
    app.require_subcommand(1);
    int rc = 0;

    std::string radii_config;
    CLI::App* radii = app.add_subcommand("radii", "Print the decoding radius table for a config");
    radii->add_option("-c,--config", radii_config, "campaign config file")->required();
    radii->callback([&] { rc = cmd_radii(radii_config); });

    std::string camp_config, camp_output;
    int64_t camp_seed = -1, camp_trials = 0;
    CLI::App* camp = app.add_subcommand("campaign", "Run a Monte Carlo campaign, emit CSV");
    camp->add_option("-c,--config", camp_config, "campaign config file")->required();
    camp->add_option("-o,--output", camp_output, "CSV output path (default: stdout)");
    camp->add_option("--seed", camp_seed, "override the config seed");
    camp->add_option("--trials", camp_trials, "override the config trial count");
    camp->callback([&] { rc = cmd_campaign(camp_config, camp_output, camp_seed, camp_trials); });

    std::string decode_input;
    CLI::App* dec = app.add_subcommand("decode", "Decode one instance file");
    dec->add_option("-i,--input", decode_input, "instance file")->required();
    dec->callback([&] { rc = cmd_decode(decode_input); });

    GenOptions opt;
    CLI::App* gen = app.add_subcommand("gen", "Generate an instance file (truth on stderr)");
    gen->add_option("--mode", opt.mode, "instance kind")
        ->check(CLI::IsMember({"srfr", "plswe", "adversarial"}))
        ->capture_default_str();
    gen->add_option("--q", opt.q, "field modulus, an odd prime")->required();
    gen->add_option("--n", opt.n, "number of evaluation points")->required();
    gen->add_option("--l", opt.l, "number of functions")->capture_default_str();
    gen->add_option("--deg-f", opt.deg_f, "true numerator degree (srfr) or target (others)");
    gen->add_option("--deg-g", opt.deg_g, "true denominator degree (srfr) or target (others)");
    gen->add_option("--d-f", opt.d_f, "numerator cap (default: true degree)");
    gen->add_option("--d-g", opt.d_g, "denominator cap (default: true degree)");
    gen->add_option("--deg-A", opt.deg_A, "system matrix degree (plswe/adversarial)");
    gen->add_option("--deg-b", opt.deg_b, "right-hand side degree (plswe/adversarial)");
    gen->add_option("--d-A", opt.d_A, "system matrix cap (default: --deg-A)");
    gen->add_option("--d-b", opt.d_b, "right-hand side cap (default: --deg-b)");
    gen->add_option("--errors", opt.errors, "number of corrupted columns")->capture_default_str();
    gen->add_option("--eps", opt.eps, "error cap stored in the instance (default: --errors)");
    gen->add_option("--seed", opt.seed, "generator seed")->capture_default_str();
    gen->add_option("--variant", opt.variant, "adversarial construction")
        ->check(CLI::IsMember({"n1", "n2"}))
        ->capture_default_str();
    gen->add_option("-o,--output", opt.output, "instance output path (default: stdout)");
    gen->callback([&] { rc = cmd_gen(opt); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 64;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 64;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 64;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}
