#include "srfr/harness.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace srfr {

const char* mode_name(CampaignConfig::Mode mode) {
    switch (mode) {
        case CampaignConfig::Mode::Srfr: return "srfr";
        case CampaignConfig::Mode::Plswe: return "plswe";
        case CampaignConfig::Mode::Oblivious: return "oblivious";
        case CampaignConfig::Mode::Adversarial: return "adversarial";
    }
    throw std::logic_error("unreachable");
}

namespace {

int64_t parse_int(const std::string& key, const std::string& value) {
    size_t used = 0;
    int64_t v;
    try {
        v = std::stoll(value, &used);
    } catch (const std::exception&) {
        throw UsageError("config: value of '" + key + "' is not an integer: " + value);
    }
    if (used != value.size())
        throw UsageError("config: trailing junk in value of '" + key + "': " + value);
    return v;
}

uint64_t parse_uint(const std::string& key, const std::string& value) {
    int64_t v = parse_int(key, value);
    if (v < 0) throw UsageError("config: '" + key + "' must be nonnegative");
    return static_cast<uint64_t>(v);
}

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

void require(bool cond, const std::string& message) {
    if (!cond) throw UsageError(message);
}

}  // namespace

CampaignConfig parse_config_text(const std::string& text) {
    CampaignConfig cfg;
    std::map<std::string, bool> seen;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::string stripped = trim(line.substr(0, line.find('#')));
        if (stripped.empty()) continue;
        size_t eq = stripped.find('=');
        require(eq != std::string::npos, "config: expected 'key = value', got: " + line);
        std::string key = trim(stripped.substr(0, eq));
        std::string value = trim(stripped.substr(eq + 1));
        require(!key.empty() && !value.empty(), "config: empty key or value in: " + line);
        require(!seen[key], "config: duplicate key '" + key + "'");
        seen[key] = true;

        if (key == "mode") {
            if (value == "srfr") cfg.mode = CampaignConfig::Mode::Srfr;
            else if (value == "plswe") cfg.mode = CampaignConfig::Mode::Plswe;
            else if (value == "oblivious") cfg.mode = CampaignConfig::Mode::Oblivious;
            else if (value == "adversarial") cfg.mode = CampaignConfig::Mode::Adversarial;
            else throw UsageError("config: unknown mode '" + value + "'");
        } else if (key == "q") {
            cfg.q = parse_uint(key, value);
        } else if (key == "n") {
            cfg.n = static_cast<size_t>(parse_uint(key, value));
        } else if (key == "l") {
            cfg.l = static_cast<size_t>(parse_uint(key, value));
        } else if (key == "deg_f") {
            cfg.deg_f = parse_int(key, value);
        } else if (key == "deg_g") {
            cfg.deg_g = parse_int(key, value);
        } else if (key == "d_f") {
            cfg.d_f = parse_int(key, value);
        } else if (key == "d_g") {
            cfg.d_g = parse_int(key, value);
        } else if (key == "deg_A") {
            cfg.deg_A = parse_int(key, value);
        } else if (key == "deg_b") {
            cfg.deg_b = parse_int(key, value);
        } else if (key == "d_A") {
            cfg.d_A = parse_int(key, value);
        } else if (key == "d_b") {
            cfg.d_b = parse_int(key, value);
        } else if (key == "error_counts") {
            std::istringstream vals(value);
            std::string tok;
            while (std::getline(vals, tok, ','))
                cfg.error_counts.push_back(parse_int(key, trim(tok)));
            require(!cfg.error_counts.empty(), "config: error_counts is empty");
        } else if (key == "trials") {
            cfg.trials = static_cast<size_t>(parse_uint(key, value));
        } else if (key == "seed") {
            cfg.seed = parse_uint(key, value);
        } else {
            throw UsageError("config: unknown key '" + key + "'");
        }
    }

    require(seen["mode"], "config: missing 'mode'");
    try {
        FieldParams fp(cfg.q);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("config: bad q: ") + e.what());
    }
    require(cfg.n >= 1, "config: need n >= 1");
    require(cfg.n <= cfg.q, "config: need n <= q (distinct evaluation points)");
    require(cfg.l >= 1, "config: need l >= 1");
    require(cfg.trials >= 1, "config: need trials >= 1");
    require(!cfg.error_counts.empty(), "config: missing 'error_counts'");
    const int64_t n = static_cast<int64_t>(cfg.n);
    for (int64_t e : cfg.error_counts)
        require(e >= 0 && e < n, "config: error counts must lie in [0, n)");
    require(cfg.deg_f >= 0 && cfg.deg_g >= 0, "config: missing deg_f/deg_g");
    require(cfg.d_f >= cfg.deg_f, "config: need d_f >= deg_f");
    require(cfg.d_g >= cfg.deg_g, "config: need d_g >= deg_g");
    require(cfg.d_f < n && cfg.d_g < n, "config: caps must stay below n");
    if (cfg.needs_system()) {
        require(cfg.deg_A >= 0 && cfg.deg_b >= 0, "config: missing deg_A/deg_b");
        require(cfg.d_A >= cfg.deg_A, "config: need d_A >= deg_A");
        require(cfg.d_b >= cfg.deg_b, "config: need d_b >= deg_b");
    }
    return cfg;
}

CampaignConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open config file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

EvaluationGrid default_grid(size_t n, const FieldParams& fp) {
    std::vector<FieldElement> pts;
    pts.reserve(n);
    for (size_t j = 0; j < n; ++j) pts.emplace_back(j, fp);
    return EvaluationGrid(std::move(pts), fp);
}

std::vector<size_t> sample_error_positions(size_t n, size_t count, Rng& rng) {
    if (count > n) throw std::invalid_argument("more error positions than points");
    std::vector<size_t> ids(n);
    for (size_t i = 0; i < n; ++i) ids[i] = i;
    for (size_t i = 0; i < count; ++i)
        std::swap(ids[i], ids[i + rng.below(n - i)]);
    ids.resize(count);
    std::sort(ids.begin(), ids.end());
    return ids;
}

RadiusReport radius_report(const CampaignConfig& cfg, int64_t eps) {
    const int64_t n = static_cast<int64_t>(cfg.n);
    const int64_t l = static_cast<int64_t>(cfg.l);
    RadiusReport rep;
    rep.eps_bk = radius_bk(n, cfg.d_f, cfg.d_g);
    rep.eps_glz = radius_glz(n, cfg.d_f, cfg.d_g, l);
    rep.dfge = d_fge(cfg.d_f, cfg.d_g, cfg.deg_f, cfg.deg_g, eps, eps);
    rep.eps_bk_primed = floordiv(n - std::max(cfg.deg_f + cfg.d_g, cfg.deg_g + cfg.d_f) - 1, 2);
    rep.eps_glz_primed = n - std::max(cfg.deg_f + cfg.d_g, cfg.d_f + cfg.deg_g) - ceildiv(eps, l) - 1;
    rep.n1 = n1_threshold(cfg.d_f + eps, cfg.d_g + eps, cfg.deg_f, cfg.deg_g, eps, l);
    rep.rho = rank_target(l, cfg.d_f + eps, cfg.d_g + eps, rep.dfge);
    if (cfg.d_A >= 0 && cfg.d_b >= 0) {
        rep.has_system = true;
        rep.eps_kps = radius_kps(n, cfg.d_A, cfg.d_f, cfg.d_b, cfg.d_g);
        rep.eps_glz2 = radius_glz2(n, cfg.d_A, cfg.d_f, cfg.d_b, cfg.d_g, l);
        PrimedRadii pr = primed_radii(n, l, eps, cfg.d_f, cfg.d_g, cfg.d_A, cfg.d_b,
                                      cfg.deg_f, cfg.deg_g);
        rep.eps_bk_primed = pr.bk;
        rep.eps_kps_primed = pr.kps;
        rep.eps_glz_primed = pr.glz;
        rep.eps_glz2_primed = pr.glz2;
        rep.n2 = n2_threshold(cfg.d_f + eps, cfg.d_g + eps, cfg.deg_A, cfg.deg_b, eps, l);
    }
    return rep;
}

std::string radius_table(const CampaignConfig& cfg) {
    bool system = cfg.d_A >= 0 && cfg.d_b >= 0;
    std::vector<std::vector<std::string>> rows;

    std::vector<std::string> head = {"eps", "eps_bk", "eps_glz"};
    if (system) head.insert(head.end(), {"eps_kps", "eps_glz2"});
    head.insert(head.end(), {"d_fgE", "bk'", "glz'"});
    if (system) head.insert(head.end(), {"kps'", "glz2'", "n2"});
    head.insert(head.end(), {"n1", "rank_target"});
    rows.push_back(std::move(head));

    for (int64_t eps : cfg.error_counts) {
        RadiusReport rep = radius_report(cfg, eps);
        std::vector<int64_t> vals = {eps, rep.eps_bk, rep.eps_glz};
        if (system) vals.insert(vals.end(), {rep.eps_kps, rep.eps_glz2});
        vals.insert(vals.end(), {rep.dfge, rep.eps_bk_primed, rep.eps_glz_primed});
        if (system) vals.insert(vals.end(), {rep.eps_kps_primed, rep.eps_glz2_primed, rep.n2});
        vals.insert(vals.end(), {rep.n1, rep.rho});
        std::vector<std::string> row;
        for (int64_t v : vals) row.push_back(std::to_string(v));
        rows.push_back(std::move(row));
    }

    std::vector<size_t> width(rows[0].size(), 0);
    for (const auto& row : rows)
        for (size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());

    std::ostringstream out;
    for (const auto& row : rows) {
        for (size_t c = 0; c < row.size(); ++c) {
            if (c) out << "  ";
            out << row[c];
            if (c + 1 < row.size())
                out << std::string(width[c] - row[c].size(), ' ');
        }
        out << '\n';
    }
    return out.str();
}

namespace {

struct TrialContext {
    const CampaignConfig& cfg;
    const EvaluationGrid& grid;
    int64_t eps;
    const RunOptions& opts;
};

TrialRecord run_srfr_trial(const TrialContext& ctx, size_t t, Rng& rng) {
    const CampaignConfig& cfg = ctx.cfg;
    TrialRecord rec;
    rec.trial = t;

    RationalVector rv = gen_random_rv(cfg.l, cfg.deg_f, cfg.deg_g, ctx.grid, rng);
    SrfrParams params(cfg.n, cfg.l, cfg.d_f, cfg.d_g, ctx.eps);
    std::vector<size_t> positions =
        sample_error_positions(cfg.n, static_cast<size_t>(ctx.eps), rng);
    ErrorPattern pattern;
    ObservationMatrix obs = gen_random_instance(params, ctx.grid, rv, positions, rng, &pattern);

    KeyEquationSpace space;
    SrfrDecodeResult dec = decode_srfr(obs, params, ctx.opts.span_checks ? &space : nullptr);
    std::vector<size_t> genuine = genuine_error_positions(pattern, cfg.l);
    rec.actual_errors = genuine.size();
    rec.space_dim = dec.space_dim;
    rec.expected_dfge = d_fge(cfg.d_f, cfg.d_g, rv.numerator_degree(), rv.g.degree(), ctx.eps,
                              static_cast<int64_t>(genuine.size()));

    if (dec.ok()) {
        rec.outcome = (*dec.value == rv) ? TrialOutcome::Recovered : TrialOutcome::Wrong;
        if (rec.outcome == TrialOutcome::Recovered && ctx.opts.span_checks) {
            Polynomial loc = error_locator(ctx.grid, genuine);
            rec.span_ok = verify_span_structure(space, rv, loc, rec.expected_dfge + 1);
        }
    } else {
        rec.outcome = TrialOutcome::Empty;
    }
    return rec;
}

TrialRecord run_plswe_trial(const TrialContext& ctx, size_t t, Rng& rng) {
    const CampaignConfig& cfg = ctx.cfg;
    TrialRecord rec;
    rec.trial = t;

    auto [sys, rv] = gen_system(cfg.l, cfg.deg_A, cfg.deg_b, ctx.grid, rng, 1000,
                                cfg.deg_f, cfg.deg_g);
    SrfrParams params(cfg.n, cfg.l, cfg.d_f, cfg.d_g, ctx.eps);
    std::vector<size_t> positions =
        sample_error_positions(cfg.n, static_cast<size_t>(ctx.eps), rng);
    ErrorPattern pattern;
    ObservationMatrix obs = blackbox(sys, ctx.grid, positions, rng, &pattern);

    SrfrDecodeResult dec = decode_srfr(obs, params);
    std::vector<size_t> genuine = genuine_error_positions(pattern, cfg.l);
    rec.actual_errors = genuine.size();
    rec.space_dim = dec.space_dim;
    rec.expected_dfge = d_fge(cfg.d_f, cfg.d_g, rv.numerator_degree(), rv.g.degree(), ctx.eps,
                              static_cast<int64_t>(genuine.size()));
    if (dec.ok())
        rec.outcome = (*dec.value == rv) ? TrialOutcome::Recovered : TrialOutcome::Wrong;
    else
        rec.outcome = TrialOutcome::Empty;
    return rec;
}

TrialRecord run_oblivious_trial(const TrialContext& ctx, size_t t, Rng& rng) {
    const CampaignConfig& cfg = ctx.cfg;
    TrialRecord rec;
    rec.trial = t;

    auto [sys, rv] = gen_system(cfg.l, cfg.deg_A, cfg.deg_b, ctx.grid, rng, 1000,
                                cfg.deg_f, cfg.deg_g);
    std::vector<size_t> positions =
        sample_error_positions(cfg.n, static_cast<size_t>(ctx.eps), rng);
    ErrorPattern pattern;
    ObservationMatrix obs = blackbox(sys, ctx.grid, positions, rng, &pattern);

    PlsweParams params(SrfrParams(cfg.n, cfg.l, cfg.d_f, cfg.d_g, ctx.eps), cfg.d_A, cfg.d_b);
    ObliviousOutcome out = algorithm1(obs, params);
    std::vector<size_t> genuine = genuine_error_positions(pattern, cfg.l);
    rec.actual_errors = genuine.size();
    rec.space_dim = out.space_dim;
    rec.expected_dfge = d_fge(cfg.d_f, cfg.d_g, rv.numerator_degree(), rv.g.degree(), ctx.eps,
                              static_cast<int64_t>(genuine.size()));

    if (out.exceeded) {
        rec.outcome = TrialOutcome::ExceededDetected;
        return rec;
    }
    Polynomial loc = error_locator(ctx.grid, genuine);
    CandidateSolution expect;
    for (const auto& fi : rv.f) expect.phis.push_back(loc * fi);
    expect.psi = loc * rv.g;
    rec.outcome = (out.candidate && *out.candidate == expect) ? TrialOutcome::Recovered
                                                              : TrialOutcome::Wrong;
    return rec;
}

TrialRecord run_adversarial_trial(const TrialContext& ctx, size_t t, Rng& rng) {
    const CampaignConfig& cfg = ctx.cfg;
    TrialRecord rec;
    rec.trial = t;

    auto [sys, rv] = gen_system(cfg.l, cfg.deg_A, cfg.deg_b, ctx.grid, rng, 1000,
                                cfg.deg_f, cfg.deg_g);
    std::vector<size_t> positions =
        sample_error_positions(cfg.n, static_cast<size_t>(ctx.eps), rng);
    AdversarialVariant variant = (t % 2 == 0) ? AdversarialVariant::N1 : AdversarialVariant::N2;
    auto [obs, wit] = gen_adversarial_instance(sys, rv, ctx.grid, positions, variant);

    DegreeBoundPair bounds{cfg.d_f + ctx.eps, cfg.d_g + ctx.eps};
    rec.actual_errors = positions.size();
    rec.expected_dfge = d_fge(bounds.Df, bounds.Dg, rv.numerator_degree(), rv.g.degree(), 0,
                              static_cast<int64_t>(positions.size()));
    int64_t target = rank_target(cfg.l, bounds.Df, bounds.Dg, rec.expected_dfge);
    FqMatrix m = build_matrix(obs, bounds);
    size_t r = rank(m);
    rec.space_dim = m.cols() - r;
    rec.outcome = (static_cast<int64_t>(r) == target) ? TrialOutcome::Recovered
                                                      : TrialOutcome::Wrong;
    return rec;
}

}  // namespace

CampaignResult run_campaign(const CampaignConfig& cfg, const RunOptions& opts) {
    const FieldParams fp(cfg.q);
    const EvaluationGrid grid = default_grid(cfg.n, fp);

    CampaignResult result;
    for (size_t s = 0; s < cfg.error_counts.size(); ++s) {
        const int64_t eps = cfg.error_counts[s];
        const RadiusReport rep = radius_report(cfg, eps);
        TrialContext ctx{cfg, grid, eps, opts};

        ScenarioRow row;
        row.scenario_id = std::string(mode_name(cfg.mode)) + "-" + std::to_string(s);
        row.mode = cfg.mode;
        row.q = cfg.q;
        row.l = cfg.l;
        row.n = cfg.n;
        row.deg_f = cfg.deg_f;
        row.deg_g = cfg.deg_g;
        row.d_f = cfg.d_f;
        row.d_g = cfg.d_g;
        row.deg_A = cfg.deg_A;
        row.deg_b = cfg.deg_b;
        row.d_A = cfg.d_A;
        row.d_b = cfg.d_b;
        row.eps = eps;
        row.trials = cfg.trials;

        switch (cfg.mode) {
            case CampaignConfig::Mode::Srfr:
                row.radius_name = "eps_glz";
                row.radius_value = rep.eps_glz;
                row.theoretical_bound = static_cast<double>(cfg.d_g + eps) / cfg.q;
                break;
            case CampaignConfig::Mode::Plswe:
                row.radius_name = "eps_glz2";
                row.radius_value = rep.eps_glz2;
                row.theoretical_bound = static_cast<double>(cfg.d_g + eps) / cfg.q;
                break;
            case CampaignConfig::Mode::Oblivious:
                if (rep.eps_glz2_primed > rep.eps_glz_primed) {
                    row.radius_name = "eps_glz2_primed";
                    row.radius_value = rep.eps_glz2_primed;
                } else {
                    row.radius_name = "eps_glz_primed";
                    row.radius_value = rep.eps_glz_primed;
                }
                row.theoretical_bound = 2.0 * static_cast<double>(cfg.d_g + eps) / cfg.q;
                break;
            case CampaignConfig::Mode::Adversarial:
                row.radius_name = "rank_target";
                row.radius_value = rep.rho;
                row.theoretical_bound = 0.0;
                break;
        }

        size_t min_actual = SIZE_MAX;
        for (size_t t = 0; t < cfg.trials; ++t) {
            Rng rng = Rng::derive(cfg.seed, s, t);
            TrialRecord rec;
            switch (cfg.mode) {
                case CampaignConfig::Mode::Srfr: rec = run_srfr_trial(ctx, t, rng); break;
                case CampaignConfig::Mode::Plswe: rec = run_plswe_trial(ctx, t, rng); break;
                case CampaignConfig::Mode::Oblivious: rec = run_oblivious_trial(ctx, t, rng); break;
                case CampaignConfig::Mode::Adversarial:
                    rec = run_adversarial_trial(ctx, t, rng);
                    break;
            }
            rec.radius_name = row.radius_name;
            rec.radius_value = row.radius_value;
            switch (rec.outcome) {
                case TrialOutcome::Recovered: ++row.recovered; break;
                case TrialOutcome::Wrong: ++row.wrong; break;
                case TrialOutcome::Empty: ++row.empty; break;
                case TrialOutcome::ExceededDetected: ++row.exceeded_detected; break;
            }
            if (!rec.span_ok) ++row.span_failures;
            min_actual = std::min(min_actual, rec.actual_errors);
            if (opts.collect_records) row.records.push_back(std::move(rec));
        }
        row.actual_errors = cfg.trials ? min_actual : 0;

        size_t failures;
        if (cfg.mode == CampaignConfig::Mode::Oblivious) {
            const bool within = eps <= std::max(rep.eps_glz_primed, rep.eps_glz2_primed);
            failures = cfg.trials - (within ? row.recovered : row.exceeded_detected);
        } else {
            failures = cfg.trials - row.recovered;
        }
        row.empirical_failure_rate = static_cast<double>(failures) / cfg.trials;
        result.rows.push_back(std::move(row));
    }
    return result;
}

namespace {

std::string format_rate(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

}  // namespace

std::string to_csv(const CampaignResult& result) {
    std::ostringstream out;
    out << "scenario_id,q,l,n,deg_f,deg_g,d_f,d_g,deg_A,deg_b,d_A,d_b,eps,actual_errors,"
           "radius_name,radius_value,trials,recovered,wrong,empty,exceeded_detected,"
           "empirical_failure_rate,theoretical_bound\n";
    for (const auto& row : result.rows) {
        out << row.scenario_id << ',' << row.q << ',' << row.l << ',' << row.n << ','
            << row.deg_f << ',' << row.deg_g << ',' << row.d_f << ',' << row.d_g << ','
            << row.deg_A << ',' << row.deg_b << ',' << row.d_A << ',' << row.d_b << ','
            << row.eps << ',' << row.actual_errors << ',' << row.radius_name << ','
            << row.radius_value << ',' << row.trials << ',' << row.recovered << ','
            << row.wrong << ',' << row.empty << ',' << row.exceeded_detected << ','
            << format_rate(row.empirical_failure_rate) << ','
            << format_rate(row.theoretical_bound) << '\n';
    }
    return out.str();
}

namespace {

std::vector<int64_t> line_of_ints(const std::string& line, const std::string& what) {
    std::istringstream in(line);
    std::vector<int64_t> out;
    std::string tok;
    while (in >> tok) out.push_back(parse_int(what, tok));
    return out;
}

}  // namespace

InstanceFile read_instance_text(const std::string& text) {
    std::istringstream in(text);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!trim(line).empty()) lines.push_back(line);
    }
    if (lines.size() < 3) throw UsageError("instance: expected at least 3 lines");

    std::vector<int64_t> head = line_of_ints(lines[0], "header");
    if (head.size() != 6 && head.size() != 8)
        throw UsageError("instance: header wants 'q n l d_f d_g eps [d_A d_b]'");

    InstanceFile inst;
    if (head[0] < 3) throw UsageError("instance: bad modulus");
    inst.q = static_cast<uint64_t>(head[0]);
    try {
        FieldParams fp(inst.q);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("instance: ") + e.what());
    }
    if (head[1] < 1 || head[2] < 1) throw UsageError("instance: need n >= 1 and l >= 1");
    inst.n = static_cast<size_t>(head[1]);
    inst.l = static_cast<size_t>(head[2]);
    inst.d_f = head[3];
    inst.d_g = head[4];
    inst.eps = head[5];
    if (head.size() == 8) {
        inst.d_A = head[6];
        inst.d_b = head[7];
        if (*inst.d_A < 0 || *inst.d_b < 0) throw UsageError("instance: negative system caps");
    }
    if (inst.n > inst.q) throw UsageError("instance: need n <= q");
    if (inst.d_f < 0 || inst.d_g < 0 || inst.eps < 0 ||
        inst.d_f >= static_cast<int64_t>(inst.n) || inst.d_g >= static_cast<int64_t>(inst.n) ||
        inst.eps >= static_cast<int64_t>(inst.n))
        throw UsageError("instance: caps must lie in [0, n)");

    if (lines.size() != 2 + inst.l)
        throw UsageError("instance: expected exactly " + std::to_string(2 + inst.l) + " lines");

    std::vector<int64_t> alphas = line_of_ints(lines[1], "grid");
    if (alphas.size() != inst.n) throw UsageError("instance: grid line wants n values");
    for (int64_t a : alphas) {
        if (a < 0 || static_cast<uint64_t>(a) >= inst.q)
            throw UsageError("instance: grid point out of range");
        inst.alphas.push_back(static_cast<uint64_t>(a));
    }
    for (size_t i = 0; i < inst.l; ++i) {
        std::vector<int64_t> row = line_of_ints(lines[2 + i], "observations");
        if (row.size() != inst.n) throw UsageError("instance: observation row wants n values");
        for (int64_t v : row) {
            if (v < 0 || static_cast<uint64_t>(v) >= inst.q)
                throw UsageError("instance: observation out of range");
            inst.y.push_back(static_cast<uint64_t>(v));
        }
    }

    try {
        inst.grid();  // validates distinctness
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("instance: ") + e.what());
    }
    return inst;
}

InstanceFile read_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open instance file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return read_instance_text(buf.str());
}

std::string write_instance_text(const InstanceFile& inst) {
    std::ostringstream out;
    out << inst.q << ' ' << inst.n << ' ' << inst.l << ' ' << inst.d_f << ' ' << inst.d_g << ' '
        << inst.eps;
    if (inst.d_A && inst.d_b) out << ' ' << *inst.d_A << ' ' << *inst.d_b;
    out << '\n';
    for (size_t j = 0; j < inst.n; ++j) out << inst.alphas[j] << (j + 1 == inst.n ? '\n' : ' ');
    for (size_t i = 0; i < inst.l; ++i)
        for (size_t j = 0; j < inst.n; ++j)
            out << inst.y[i * inst.n + j] << (j + 1 == inst.n ? '\n' : ' ');
    return out.str();
}

EvaluationGrid InstanceFile::grid() const {
    FieldParams fp(q);
    std::vector<FieldElement> pts;
    pts.reserve(n);
    for (uint64_t a : alphas) pts.emplace_back(a, fp);
    return EvaluationGrid(std::move(pts), fp);
}

ObservationMatrix InstanceFile::observations() const {
    FieldParams fp(q);
    std::vector<FieldElement> vals;
    vals.reserve(y.size());
    for (uint64_t v : y) vals.emplace_back(v, fp);
    return ObservationMatrix(l, grid(), std::move(vals));
}

PlsweParams InstanceFile::plswe_params() const {
    if (!d_A || !d_b) throw UsageError("instance has no system degree caps");
    return PlsweParams(srfr_params(), *d_A, *d_b);
}

}  // namespace srfr
