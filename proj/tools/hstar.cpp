// Command-line front end: batch verbs over ideal and parametrization files,
// deterministic JSON reports, seeds and budgets on every stochastic verb.

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "hstar/io.hpp"
#include "hstar/reproduce.hpp"
#include "hstar/zoo.hpp"

using json = nlohmann::ordered_json;
using namespace hstar;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitUnknown = 2;

struct CommonOpts {
    std::uint64_t seed = 0;
    std::uint64_t budget = 1'000'000;
    int trials = 3;
    std::int64_t height = 100;
    std::string cache_dir;
    std::string output = "json";
};

void add_common(CLI::App* cmd, CommonOpts& c) {
    cmd->add_option("--seed", c.seed, "random seed (deterministic replay)");
    cmd->add_option("--budget", c.budget, "step budget per basis computation");
    cmd->add_option("--trials", c.trials, "trials for dimension sampling");
    cmd->add_option("--height", c.height, "height bound for random rational draws");
    cmd->add_option("--cache-dir", c.cache_dir, "on-disk basis cache directory");
    cmd->add_option("--output", c.output, "json or text")
        ->check(CLI::IsMember({"json", "text"}));
}

GbOptions gb_options(const CommonOpts& c) {
    if (!c.cache_dir.empty()) {
        GbCache::instance().set_directory(std::filesystem::path(c.cache_dir));
    } else if (const char* env = std::getenv("HSTAR_CACHE_DIR")) {
        GbCache::instance().set_directory(std::filesystem::path(env));
    }
    GbOptions opt;
    opt.budget = c.budget;
    return opt;
}

void emit(const json& report, const CommonOpts& c) {
    if (c.output == "json") {
        std::cout << report.dump(2) << "\n";
        return;
    }
    // text mode: flat key/value lines
    for (auto it = report.begin(); it != report.end(); ++it)
        std::cout << it.key() << ": " << it.value().dump() << "\n";
}

json ideal_to_json(const Ideal& I) {
    json j;
    j["ring"] = static_cast<int>(I.ring->nvars()) - 1;
    json gens = json::array();
    for (const auto& g : I.gens) gens.push_back(to_string(g));
    j["generators"] = gens;
    return j;
}

json coord_to_json(const AlgNum& v) {
    if (v.rational_repr()) return rat_to_string(v.rational_value());
    json j;
    j["residue"] = v.residue().str();
    j["min_poly"] = v.field()->defining().str();
    CBox e = v.enclosure(Rat(1, 1 << 20));
    j["box"] = {{"re", {rat_to_string(e.re.lo), rat_to_string(e.re.hi)}},
                {"im", {rat_to_string(e.im.lo), rat_to_string(e.im.hi)}}};
    return j;
}

json point_to_json(const ProjPoint& p) {
    json arr = json::array();
    for (std::size_t i = 0; i < p.size(); ++i) arr.push_back(coord_to_json(p[i]));
    return arr;
}

json pattern_to_json(const ZeroPattern& pat) {
    json arr = json::array();
    for (const auto& f : pat.forced) {
        json fj = json::array();
        for (auto i : f) fj.push_back(i);
        arr.push_back(fj);
    }
    return arr;
}

json certificate_to_json(const RankCertificate& cert, const std::string& command) {
    json j;
    j["command"] = command;
    j["point"] = cert.point.str();
    j["verdict"] = verdict_name(cert.verdict);
    j["m"] = cert.m;
    json ws = json::array();
    for (const auto& w : cert.witnesses) ws.push_back(point_to_json(w));
    j["witnesses"] = ws;
    json pats = json::array();
    for (const auto& [m, certs] : cert.patterns_by_m)
        for (const auto& pc : certs) {
            json pj;
            pj["m"] = m;
            pj["pattern"] = pattern_to_json(pc.pattern);
            pj["resolved"] = pc.resolved;
            pj["unit_ideal"] = pc.unit_ideal;
            pj["steps"] = pc.steps;
            pats.push_back(pj);
        }
    j["infeasible_patterns"] = pats;
    if (cert.obstruction_coordinate >= 0)
        j["obstruction_coordinate"] = cert.obstruction_coordinate;
    else
        j["obstruction_coordinate"] = nullptr;
    j["seed"] = cert.seed;
    j["budget_spent"] = cert.budget_spent;
    return j;
}

/// Reconstructs the replayable part of a certificate from its JSON form.
/// Witness lists survive when every coordinate is rational (the CLI wire
/// format for points); algebraic coordinates are library-only.
RankCertificate certificate_from_json(const json& j) {
    std::string pt = j.at("point").get<std::string>();
    // point strings look like "(a:b:c)"
    if (pt.size() >= 2 && pt.front() == '(' && pt.back() == ')')
        pt = pt.substr(1, pt.size() - 2);
    RankCertificate cert(ProjPoint::parse(pt));
    std::string verdict = j.at("verdict").get<std::string>();
    if (verdict == "RankEquals") cert.verdict = RankVerdict::RankEquals;
    else if (verdict == "RankAtMost") cert.verdict = RankVerdict::RankAtMost;
    else if (verdict == "RankGreaterThan") cert.verdict = RankVerdict::RankGreaterThan;
    else if (verdict == "BorderRank") cert.verdict = RankVerdict::BorderRank;
    else if (verdict == "BorderGreaterThan") cert.verdict = RankVerdict::BorderGreaterThan;
    else if (verdict == "ProvablyInfinite") cert.verdict = RankVerdict::ProvablyInfinite;
    else cert.verdict = RankVerdict::Unknown;
    cert.m = j.at("m").get<int>();
    if (j.contains("obstruction_coordinate") && !j["obstruction_coordinate"].is_null())
        cert.obstruction_coordinate = j["obstruction_coordinate"].get<int>();
    for (const auto& wj : j.at("witnesses")) {
        std::vector<Rat> coords;
        bool rational = true;
        for (const auto& cj : wj) {
            if (!cj.is_string()) {
                rational = false;
                break;
            }
            std::string s = cj.get<std::string>();
            std::size_t slash = s.find('/');
            if (slash == std::string::npos)
                coords.push_back(Rat(Int(s)));
            else
                coords.push_back(make_rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1))));
        }
        if (!rational) throw IoError("algebraic witnesses are not replayable from JSON");
        cert.witnesses.push_back(ProjPoint::rational(std::move(coords)));
    }
    for (const auto& pj : j.at("infeasible_patterns")) {
        PatternCertificate pc;
        pc.resolved = pj.at("resolved").get<bool>();
        pc.unit_ideal = pj.at("unit_ideal").get<bool>();
        for (const auto& fj : pj.at("pattern")) {
            std::vector<std::size_t> f;
            for (const auto& ij : fj) f.push_back(ij.get<std::size_t>());
            pc.pattern.forced.push_back(std::move(f));
        }
        cert.patterns_by_m[pj.at("m").get<int>()].push_back(std::move(pc));
    }
    return cert;
}

int run_verify(const std::string& cert_path, const Ideal& I, const CommonOpts& common) {
    std::ifstream in(cert_path);
    if (!in) throw IoError("cannot open certificate: " + cert_path);
    json cj = json::parse(in);
    RankCertificate cert = certificate_from_json(cj);
    bool ok = replay_certificate(cert, I, gb_options(common));
    json out;
    out["command"] = "verify";
    out["certificate"] = cert_path;
    out["verified"] = ok;
    emit(out, common);
    return ok ? kExitOk : kExitUnknown;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for Hadamard products, powers and ranks of projective varieties"};
    app.require_subcommand(1);

    // ---- product / power / rank-locus --------------------------------------
    CommonOpts c_prod;
    std::string prod_a, prod_b, prod_out;
    auto* cmd_prod = app.add_subcommand("product", "Hadamard product of two varieties");
    cmd_prod->add_option("--ideal", prod_a, "first ideal file")->required();
    cmd_prod->add_option("--ideal2", prod_b, "second ideal file")->required();
    cmd_prod->add_option("--out", prod_out, "write the result as an ideal file");
    add_common(cmd_prod, c_prod);

    CommonOpts c_pow;
    std::string pow_in, pow_out;
    int pow_m = 1;
    auto* cmd_pow = app.add_subcommand("power", "Hadamard power of a variety");
    cmd_pow->add_option("--ideal", pow_in, "ideal file")->required();
    cmd_pow->add_option("--m", pow_m, "power")->required();
    cmd_pow->add_option("--out", pow_out, "write the result as an ideal file");
    add_common(cmd_pow, c_pow);

    CommonOpts c_locus;
    std::string locus_in, locus_out;
    int locus_m = 1;
    auto* cmd_locus = app.add_subcommand("rank-locus", "union of the first m powers");
    cmd_locus->add_option("--ideal", locus_in)->required();
    cmd_locus->add_option("--m", locus_m)->required();
    cmd_locus->add_option("--out", locus_out);
    add_common(cmd_locus, c_locus);

    // ---- member -------------------------------------------------------------
    CommonOpts c_member;
    std::string member_in, member_point;
    int member_m = 1;
    auto* cmd_member = app.add_subcommand("member", "border-style membership in a power");
    cmd_member->add_option("--ideal", member_in)->required();
    cmd_member->add_option("--point", member_point, "colon-separated rationals")->required();
    cmd_member->add_option("--m", member_m)->required();
    add_common(cmd_member, c_member);

    // ---- conciseness --------------------------------------------------------
    CommonOpts c_conc;
    std::string conc_in;
    auto* cmd_conc = app.add_subcommand("concise", "per-coordinate conciseness");
    cmd_conc->add_option("--ideal", conc_in)->required();
    add_common(cmd_conc, c_conc);

    CommonOpts c_sconc;
    std::string sconc_in;
    auto* cmd_sconc = app.add_subcommand("strongly-concise", "per-coordinate strong conciseness");
    cmd_sconc->add_option("--ideal", sconc_in)->required();
    add_common(cmd_sconc, c_sconc);

    CommonOpts c_bin;
    std::string bin_in;
    int bin_deg = 0;
    auto* cmd_bin = app.add_subcommand("binomial-search", "two-term members up to a degree bound");
    cmd_bin->add_option("--ideal", bin_in)->required();
    cmd_bin->add_option("--max-degree", bin_deg, "degree bound (default 2*max generator degree)");
    add_common(cmd_bin, c_bin);

    CommonOpts c_fin;
    std::string fin_in;
    int fin_deg = 0;
    bool fin_accept = false;
    auto* cmd_fin = app.add_subcommand("finiteness", "generic-rank finiteness trichotomy");
    cmd_fin->add_option("--ideal", fin_in)->required();
    cmd_fin->add_option("--max-degree", fin_deg);
    cmd_fin->add_flag("--accept-bound", fin_accept,
                      "treat a negative binomial search as conclusive");
    add_common(cmd_fin, c_fin);

    // ---- rank verbs ----------------------------------------------------------
    CommonOpts c_rank;
    std::string rank_in, rank_point, rank_verify;
    int rank_max = 4;
    bool rank_no_obstruction = false, rank_no_witness = false;
    auto* cmd_rank = app.add_subcommand("rank", "exact rank with certificates");
    cmd_rank->add_option("--ideal", rank_in)->required();
    cmd_rank->add_option("--point", rank_point);
    cmd_rank->add_option("--max-m", rank_max);
    cmd_rank->add_flag("--no-obstruction", rank_no_obstruction,
                       "skip the infinite-rank obstruction check");
    cmd_rank->add_flag("--no-witness", rank_no_witness, "skip witness extraction");
    cmd_rank->add_option("--verify", rank_verify, "replay a certificate instead of computing");
    add_common(cmd_rank, c_rank);

    CommonOpts c_border;
    std::string border_in, border_point, border_verify;
    int border_max = 4;
    auto* cmd_border = app.add_subcommand("border-rank", "least power containing the point");
    cmd_border->add_option("--ideal", border_in)->required();
    cmd_border->add_option("--point", border_point);
    cmd_border->add_option("--max-m", border_max);
    cmd_border->add_option("--verify", border_verify);
    add_common(cmd_border, c_border);

    CommonOpts c_dec;
    std::string dec_in, dec_point;
    int dec_m = 1;
    auto* cmd_dec = app.add_subcommand("decompose", "existence and witnesses at a fixed m");
    cmd_dec->add_option("--ideal", dec_in)->required();
    cmd_dec->add_option("--point", dec_point)->required();
    cmd_dec->add_option("--m", dec_m)->required();
    add_common(cmd_dec, c_dec);

    CommonOpts c_red;
    std::string red_in, red_point;
    auto* cmd_red = app.add_subcommand("reduce-zeros", "divide out the zero coordinates");
    cmd_red->add_option("--ideal", red_in)->required();
    cmd_red->add_option("--point", red_point)->required();
    add_common(cmd_red, c_red);

    // ---- numeric dimension verbs ---------------------------------------------
    CommonOpts c_dim;
    std::string dim_in;
    int dim_power = 1;
    auto* cmd_dim = app.add_subcommand("dim", "dimension of a power via exact Jacobian ranks");
    cmd_dim->add_option("--param", dim_in)->required();
    cmd_dim->add_option("--power", dim_power);
    add_common(cmd_dim, c_dim);

    CommonOpts c_grank;
    std::string grank_in;
    int grank_max = 4;
    auto* cmd_grank = app.add_subcommand("generic-rank", "least power filling the ambient space");
    cmd_grank->add_option("--param", grank_in)->required();
    cmd_grank->add_option("--max-m", grank_max);
    add_common(cmd_grank, c_grank);

    CommonOpts c_delta;
    std::string delta_in;
    int delta_k = -1;
    auto* cmd_delta = app.add_subcommand("check-delta", "certify avoidance of the two-zero locus");
    cmd_delta->add_option("--param", delta_in)->required();
    cmd_delta->add_option("--k", delta_k, "delta index (default N-2)");
    add_common(cmd_delta, c_delta);

    // ---- zoo -----------------------------------------------------------------
    CommonOpts c_zoo;
    std::string zoo_action, zoo_name, zoo_dir = ".";
    auto* cmd_zoo = app.add_subcommand("zoo", "list or emit the built-in varieties");
    cmd_zoo->add_option("action", zoo_action, "list | emit | verify")->required();
    cmd_zoo->add_option("name", zoo_name, "entry name for emit/verify");
    cmd_zoo->add_option("--dir", zoo_dir, "output directory for emit");
    add_common(cmd_zoo, c_zoo);

    // ---- reproduce -----------------------------------------------------------
    CommonOpts c_rep;
    bool rep_all = false;
    int rep_criterion = 0;
    auto* cmd_rep = app.add_subcommand("reproduce", "run the acceptance suite");
    cmd_rep->add_flag("--all", rep_all, "run every criterion");
    cmd_rep->add_option("--criterion", rep_criterion, "run a single criterion");
    add_common(cmd_rep, c_rep);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_name() == "CallForHelp" ? kExitOk : kExitUsage;
    }

    try {
        if (cmd_prod->parsed()) {
            auto opt = gb_options(c_prod);
            Ideal A = read_ideal_file(prod_a), B = read_ideal_file(prod_b);
            Ideal P = variety_product(A, B, opt);
            if (!prod_out.empty()) write_ideal_file(prod_out, P, {"hadamard product"});
            json j;
            j["command"] = "product";
            j["result"] = ideal_to_json(P);
            emit(j, c_prod);
            return kExitOk;
        }
        if (cmd_pow->parsed()) {
            auto opt = gb_options(c_pow);
            Ideal A = read_ideal_file(pow_in);
            Ideal P = variety_power(A, pow_m, opt);
            if (!pow_out.empty())
                write_ideal_file(pow_out, P,
                                 {"power " + std::to_string(pow_m) + " of " + A.hash_key()});
            json j;
            j["command"] = "power";
            j["m"] = pow_m;
            j["base_hash"] = A.hash_key();
            j["result"] = ideal_to_json(P);
            emit(j, c_pow);
            return kExitOk;
        }
        if (cmd_locus->parsed()) {
            auto opt = gb_options(c_locus);
            Ideal A = read_ideal_file(locus_in);
            Ideal P = rank_locus(A, locus_m, opt);
            if (!locus_out.empty())
                write_ideal_file(locus_out, P, {"rank locus m=" + std::to_string(locus_m)});
            json j;
            j["command"] = "rank-locus";
            j["m"] = locus_m;
            j["result"] = ideal_to_json(P);
            emit(j, c_locus);
            return kExitOk;
        }
        if (cmd_member->parsed()) {
            auto opt = gb_options(c_member);
            Ideal A = read_ideal_file(member_in);
            auto p = ProjPoint::parse(member_point);
            bool member = power_membership(p, A, member_m, opt);
            json j;
            j["command"] = "member";
            j["point"] = p.str();
            j["m"] = member_m;
            j["member"] = member;
            j["note"] = "membership in the Zariski closure of products (border-style)";
            emit(j, c_member);
            return kExitOk;
        }
        if (cmd_conc->parsed()) {
            auto opt = gb_options(c_conc);
            Ideal A = read_ideal_file(conc_in);
            auto verdicts = is_concise(A, opt);
            json j;
            j["command"] = "concise";
            j["per_coordinate"] = verdicts;
            bool all = true;
            for (bool b : verdicts) all = all && b;
            j["concise"] = all;
            j["replay"] = "radical membership of each variable";
            emit(j, c_conc);
            return kExitOk;
        }
        if (cmd_sconc->parsed()) {
            auto opt = gb_options(c_sconc);
            Ideal A = read_ideal_file(sconc_in);
            auto rep = is_strongly_concise(A, opt);
            json j;
            j["command"] = "strongly-concise";
            j["concise_per_coordinate"] = rep.concise;
            j["strongly_concise_per_coordinate"] = rep.strongly_concise;
            j["strongly_concise"] = rep.all_strongly_concise();
            j["failing_coordinates"] = rep.failing_strongly();
            emit(j, c_sconc);
            return kExitOk;
        }
        if (cmd_bin->parsed()) {
            auto opt = gb_options(c_bin);
            Ideal A = read_ideal_file(bin_in);
            int bound = bin_deg > 0 ? bin_deg : default_binomial_bound(A);
            auto found = binomial_search(A, bound, opt);
            json j;
            j["command"] = "binomial-search";
            j["max_degree"] = bound;
            j["found"] = found.has_value();
            j["binomial"] = found ? json(to_string(*found)) : json(nullptr);
            emit(j, c_bin);
            return kExitOk;
        }
        if (cmd_fin->parsed()) {
            auto opt = gb_options(c_fin);
            Ideal A = read_ideal_file(fin_in);
            int bound = fin_deg > 0 ? fin_deg : default_binomial_bound(A);
            auto v = generic_rank_finiteness(A, bound, fin_accept, opt);
            json j;
            j["command"] = "finiteness";
            switch (v.kind) {
                case Finiteness::GenericFinite: j["verdict"] = "GenericFinite"; break;
                case Finiteness::GenericInfiniteNotConcise:
                    j["verdict"] = "GenericInfinite";
                    j["reason"] = "NotConcise";
                    j["coordinate"] = v.coordinate;
                    break;
                case Finiteness::GenericInfiniteBinomial:
                    j["verdict"] = "GenericInfinite";
                    j["reason"] = "BinomialFound";
                    j["binomial"] = to_string(*v.binomial);
                    break;
                case Finiteness::Unknown:
                    j["verdict"] = "Unknown";
                    j["degree_bound_reached"] = v.degree_bound;
                    break;
            }
            emit(j, c_fin);
            return v.kind == Finiteness::Unknown ? kExitUnknown : kExitOk;
        }
        if (cmd_rank->parsed()) {
            auto opt = gb_options(c_rank);
            Ideal A = read_ideal_file(rank_in);
            if (!rank_verify.empty()) return run_verify(rank_verify, A, c_rank);
            if (rank_point.empty()) throw CLI::ValidationError("--point is required");
            auto p = ProjPoint::parse(rank_point);
            if (!rank_no_obstruction) {
                if (auto obs = infinite_rank_obstruction(p, A, opt)) {
                    RankCertificate cert(p);
                    cert.verdict = RankVerdict::ProvablyInfinite;
                    cert.obstruction_coordinate = static_cast<int>(*obs);
                    cert.seed = c_rank.seed;
                    emit(certificate_to_json(cert, "rank"), c_rank);
                    return kExitOk;
                }
            }
            Rng rng(c_rank.seed);
            auto cert = hadamard_rank(p, A, rank_max, rng, opt, !rank_no_witness);
            cert.seed = c_rank.seed;
            emit(certificate_to_json(cert, "rank"), c_rank);
            return cert.verdict == RankVerdict::Unknown ? kExitUnknown : kExitOk;
        }
        if (cmd_border->parsed()) {
            auto opt = gb_options(c_border);
            Ideal A = read_ideal_file(border_in);
            if (!border_verify.empty()) return run_verify(border_verify, A, c_border);
            if (border_point.empty()) throw CLI::ValidationError("--point is required");
            auto p = ProjPoint::parse(border_point);
            auto cert = border_rank(p, A, border_max, opt);
            cert.seed = c_border.seed;
            emit(certificate_to_json(cert, "border-rank"), c_border);
            return kExitOk;
        }
        if (cmd_dec->parsed()) {
            auto opt = gb_options(c_dec);
            Ideal A = read_ideal_file(dec_in);
            auto p = ProjPoint::parse(dec_point);
            auto check = decomposition_exists(p, A, dec_m, opt);
            json j;
            j["command"] = "decompose";
            j["point"] = p.str();
            j["m"] = dec_m;
            j["exists"] = check.verdict == DecompositionCheck::Verdict::Exists
                              ? "yes"
                              : (check.verdict == DecompositionCheck::Verdict::NotExists
                                     ? "no"
                                     : "unknown");
            json pats = json::array();
            for (const auto& pc : check.certificates) {
                json pj;
                pj["pattern"] = pattern_to_json(pc.pattern);
                pj["resolved"] = pc.resolved;
                pj["unit_ideal"] = pc.unit_ideal;
                pats.push_back(pj);
            }
            j["patterns"] = pats;
            if (check.verdict == DecompositionCheck::Verdict::Exists) {
                Rng rng(c_dec.seed);
                try {
                    auto ws = decomposition_witness(p, A, dec_m, rng, opt);
                    json wj = json::array();
                    for (const auto& w : ws) wj.push_back(point_to_json(w));
                    j["witnesses"] = wj;
                } catch (const WitnessNotFound& e) {
                    j["witnesses"] = nullptr;
                    j["witness_note"] = e.what();
                }
            }
            j["seed"] = c_dec.seed;
            emit(j, c_dec);
            return check.verdict == DecompositionCheck::Verdict::Unknown ? kExitUnknown : kExitOk;
        }
        if (cmd_red->parsed()) {
            auto opt = gb_options(c_red);
            Ideal A = read_ideal_file(red_in);
            auto p = ProjPoint::parse(red_point);
            Rng rng(c_red.seed);
            auto red = zero_pattern_reduce(p, A, rng, opt);
            json j;
            j["command"] = "reduce-zeros";
            j["point"] = p.str();
            j["zeros"] = red.zeros;
            j["reduced"] = red.reduced.str();
            json ws = json::array();
            for (const auto& w : red.witnesses) ws.push_back(w.str());
            j["witnesses"] = ws;
            j["bound"] = "rank(point) <= rank(reduced) + zeros";
            j["seed"] = c_red.seed;
            emit(j, c_red);
            return kExitOk;
        }
        if (cmd_dim->parsed()) {
            gb_options(c_dim);
            auto P = read_param_file(dim_in);
            Rng rng(c_dim.seed);
            int d = jacobian_dimension(dim_power == 1 ? power_param(P, 1)
                                                      : power_param(P, dim_power),
                                       rng, c_dim.trials, c_dim.height);
            json j;
            j["command"] = "dim";
            j["m"] = dim_power;
            j["dim"] = d;
            j["seed"] = c_dim.seed;
            j["trials"] = c_dim.trials;
            j["method"] = "exact-Jacobian-at-rational-point";
            emit(j, c_dim);
            return kExitOk;
        }
        if (cmd_grank->parsed()) {
            gb_options(c_grank);
            auto P = read_param_file(grank_in);
            Rng rng(c_grank.seed);
            auto g = generic_rank_estimate(P, grank_max, rng, c_grank.trials, c_grank.height);
            json j;
            j["command"] = "generic-rank";
            j["max_m"] = grank_max;
            j["generic_rank"] = g ? json(*g) : json("NotReached");
            j["seed"] = c_grank.seed;
            j["trials"] = c_grank.trials;
            emit(j, c_grank);
            return g ? kExitOk : kExitUnknown;
        }
        if (cmd_delta->parsed()) {
            gb_options(c_delta);
            auto P = read_param_file(delta_in);
            int k = delta_k >= 0 ? delta_k : P.ambient_N() - 2;
            auto cert = check_avoids_delta(P, k);
            json j;
            j["command"] = "check-delta";
            j["k"] = k;
            j["avoids"] = cert.avoids;
            json rs = json::array();
            for (const auto& [i, jdx, r] : cert.resultants) {
                json rj;
                rj["coordinates"] = {i, jdx};
                rj["resultant"] = rat_to_string(r);
                rs.push_back(rj);
            }
            j["resultants"] = rs;
            emit(j, c_delta);
            return kExitOk;
        }
        if (cmd_zoo->parsed()) {
            auto opt = gb_options(c_zoo);
            if (zoo_action == "list") {
                json j;
                j["command"] = "zoo";
                json entries = json::array();
                for (const auto& e : zoo_registry(opt)) {
                    json ej;
                    ej["name"] = e.name;
                    ej["summary"] = e.summary;
                    ej["has_ideal"] = e.ideal.has_value();
                    ej["has_param"] = e.param.has_value();
                    entries.push_back(ej);
                }
                j["entries"] = entries;
                emit(j, c_zoo);
                return kExitOk;
            }
            if (zoo_action != "emit" && zoo_action != "verify")
                throw CLI::ValidationError("zoo action must be list, emit or verify");
            if (zoo_name.empty()) throw CLI::ValidationError("zoo emit/verify needs a name");
            std::optional<ZooEntry> entry;
            for (const auto& e : zoo_registry(opt))
                if (e.name == zoo_name) entry = e;
            if (!entry) {
                // dynamic families: grassmannian-K-N, binomial-D-N,
                // tangential-D-N, chow-D-N, random-curve-N-D
                auto parts = std::vector<std::string>{};
                std::stringstream ss(zoo_name);
                std::string piece;
                while (std::getline(ss, piece, '-')) parts.push_back(piece);
                if (parts.size() == 3 && parts[0] == "grassmannian")
                    entry = grassmannian(std::stoi(parts[1]), std::stoi(parts[2]), opt);
                else if (parts.size() == 3 && parts[0] == "binomial")
                    entry = binomial_hypersurface(std::stoi(parts[1]), std::stoi(parts[2]), Rat(2));
                else if (parts.size() == 3 && parts[0] == "tangential") {
                    ZooEntry e;
                    e.name = zoo_name;
                    e.summary = "tangential variety of a Veronese embedding";
                    e.param = tangential_param(std::stoi(parts[1]), std::stoi(parts[2]));
                    entry = e;
                } else if (parts.size() == 3 && parts[0] == "chow") {
                    ZooEntry e;
                    e.name = zoo_name;
                    e.summary = "forms splitting into linear factors";
                    e.param = chow_param(std::stoi(parts[1]), std::stoi(parts[2]));
                    entry = e;
                } else if (parts.size() == 4 && parts[0] == "random" && parts[1] == "curve") {
                    Rng rng(c_zoo.seed);
                    auto curve = random_curve(std::stoi(parts[2]), std::stoi(parts[3]), rng,
                                              c_zoo.height);
                    ZooEntry e;
                    e.name = zoo_name;
                    e.summary = "random curve avoiding the two-zero locus";
                    e.param = curve.param;
                    entry = e;
                }
            }
            if (!entry) throw IoError("unknown zoo entry: " + zoo_name);
            if (zoo_action == "verify") {
                Rng rng(c_zoo.seed);
                auto facts = zoo_verify(*entry, rng, opt);
                json j;
                j["command"] = "zoo";
                j["name"] = entry->name;
                json fj = json::array();
                bool all = true;
                for (const auto& f : facts) {
                    json one;
                    one["fact"] = f.label;
                    one["basis"] = f.basis;
                    one["passed"] = f.passed;
                    all = all && f.passed;
                    fj.push_back(one);
                }
                j["facts"] = fj;
                j["all_passed"] = all;
                emit(j, c_zoo);
                return all ? kExitOk : kExitUnknown;
            }
            json j;
            j["command"] = "zoo";
            j["name"] = entry->name;
            json files = json::array();
            std::filesystem::create_directories(zoo_dir);
            if (entry->ideal) {
                auto path = (std::filesystem::path(zoo_dir) / (entry->name + ".ideal")).string();
                write_ideal_file(path, *entry->ideal, {entry->summary});
                files.push_back(path);
            }
            if (entry->param) {
                auto path = (std::filesystem::path(zoo_dir) / (entry->name + ".param")).string();
                write_param_file(path, *entry->param, {entry->summary});
                files.push_back(path);
            }
            j["files"] = files;
            emit(j, c_zoo);
            return kExitOk;
        }
        if (cmd_rep->parsed()) {
            auto opt = gb_options(c_rep);
            std::optional<int> only;
            if (rep_criterion > 0) only = rep_criterion;
            auto results = run_acceptance(only, opt);
            bool all = true;
            for (const auto& r : results) {
                std::cout << "[" << (r.passed ? "PASS" : "FAIL") << "] criterion "
                          << (r.id < 10 ? "0" : "") << r.id << ": " << r.title;
                if (!r.detail.empty()) std::cout << " -- " << r.detail;
                std::cout << "\n";
                if (!r.passed) all = false;
            }
            return all ? kExitOk : kExitUnknown;
        }
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget: " << e.what() << "\n";
        return kExitUnknown;
    } catch (const CLI::Error& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
