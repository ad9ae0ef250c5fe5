// cpmat: command-line driver for the co-prime matrix toolkit.
//
// Exit codes: 0 success, 1 a verification check failed, 2 usage or input error.

#include "cpmat/crt.hpp"
#include "cpmat/divisibility.hpp"
#include "cpmat/error.hpp"
#include "cpmat/exact_core.hpp"
#include "cpmat/family.hpp"
#include "cpmat/io.hpp"
#include "cpmat/lattice.hpp"
#include "cpmat/normal_forms.hpp"
#include "cpmat/sampling.hpp"
#include "cpmat/svg.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

using namespace cpmat;
using io::json;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2 };

struct Globals {
    std::string format = "text";
    bool oracle = false;
    std::optional<std::uint64_t> seed;
};

// Inline JSON if the argument starts with '{' or '[', "-" for stdin, else a path.
std::string slurp(const std::string& arg) {
    if (!arg.empty() && (arg[0] == '{' || arg[0] == '[')) return arg;
    if (arg == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(arg);
    if (!in) throw Error(ErrorKind::ParseError, "cannot open " + arg);
    return {std::istreambuf_iterator<char>(in), {}};
}

json load(const std::string& arg) { return io::parse_json(slurp(arg)); }

IntMatrix load_matrix(const std::string& arg) { return io::matrix_from_json(load(arg)); }

IntVector parse_vector(const std::string& text) {
    if (!text.empty() && text[0] == '[') return io::vector_from_json(io::parse_json(text));
    IntVector v;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) v.push_back(io::int_from_json(json(item), "vector"));
    return v;
}

std::vector<Int> parse_qs(const std::string& text) {
    const IntVector v = parse_vector(text);
    return {v.begin(), v.end()};
}

std::vector<Permutation> parse_perms(const std::string& text) {
    std::vector<Permutation> out;
    std::stringstream ss(text);
    for (std::string chunk; std::getline(ss, chunk, ';');) {
        Permutation p;
        for (const auto& x : parse_vector(chunk)) {
            if (x < 1 || !x.fits_ulong_p()) throw Error(ErrorKind::InvalidPermutation, "bad entry " + x.get_str());
            p.push_back(x.get_ui());
        }
        out.push_back(std::move(p));
    }
    return out;
}

FeasibleKind parse_kind(const std::string& kind) {
    if (kind == "cyclic") return FeasibleKind::Cyclic;
    if (kind == "toeplitz") return FeasibleKind::Toeplitz;
    if (kind == "explicit") return FeasibleKind::Explicit;
    throw Error(ErrorKind::InvalidArgument, "unknown feasible-set kind " + kind);
}

json rat_to_json(const Rat& r) { return r.get_den() == 1 ? io::int_to_json(r.get_num()) : json(r.get_str()); }

// Text rendering of the JSON report: one key per line, matrices row by row.
void print_text(std::ostream& os, const json& j, const std::string& indent = "") {
    for (auto it = j.begin(); it != j.end(); ++it) {
        const json& v = it.value();
        if (v.is_object() && v.contains("rows")) {
            os << indent << it.key() << ":\n";
            for (const auto& row : v["rows"]) os << indent << "  " << row.dump() << "\n";
        } else if (v.is_object()) {
            os << indent << it.key() << ":\n";
            print_text(os, v, indent + "  ");
        } else if (v.is_string()) {
            os << indent << it.key() << ": " << v.get<std::string>() << "\n";
        } else {
            os << indent << it.key() << ": " << v.dump() << "\n";
        }
    }
}

void emit(const Globals& g, const json& report) {
    if (g.format == "json") {
        std::cout << report.dump(2) << "\n";
    } else {
        print_text(std::cout, report);
    }
}

io::FamilyDocument build_family(std::size_t dim, const std::vector<Int>& qs, const std::string& kind,
                                const std::string& perms) {
    io::FamilyDocument doc;
    doc.dim = dim;
    doc.qs = qs;
    const auto pf = generate_feasible_set(dim, parse_kind(kind), perms.empty() ? std::vector<Permutation>{}
                                                                              : parse_perms(perms));
    doc.feasible_kind = kind;
    doc.feasible_perms = pf.perms();
    doc.members = construct_family(qs, pf);
    return doc;
}

// Scene files: {"amplitude":[re,im], "frequency":[...], "noise_sigma":s, "seed":n,
// "threshold":t, "family": <family document> | "construct": {"dim","qs","kind","perms"}}
struct SceneConfig {
    HarmonicScene scene;
    std::optional<double> threshold;
    std::vector<ConstructedMatrix> family;
};

SceneConfig load_scene(const json& j) {
    SceneConfig cfg;
    if (!j.is_object()) throw Error(ErrorKind::ParseError, "scene: expected an object");
    if (j.contains("amplitude")) {
        const auto& a = j["amplitude"];
        if (a.is_array() && a.size() == 2 && a[0].is_number() && a[1].is_number()) {
            cfg.scene.amplitude = Complex(a[0].get<double>(), a[1].get<double>());
        } else if (a.is_number()) {
            cfg.scene.amplitude = Complex(a.get<double>(), 0.0);
        } else {
            throw Error(ErrorKind::ParseError, "scene.amplitude: expected a number or [re, im]");
        }
    }
    if (!j.contains("frequency")) throw Error(ErrorKind::ParseError, "scene: missing key \"frequency\"");
    cfg.scene.frequency = io::vector_from_json(j["frequency"], "scene.frequency");
    if (j.contains("noise_sigma")) cfg.scene.noise_sigma = j["noise_sigma"].get<double>();
    if (j.contains("seed")) cfg.scene.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("threshold")) cfg.threshold = j["threshold"].get<double>();
    if (j.contains("family")) {
        cfg.family = io::family_from_json(j["family"]).members;
    } else if (j.contains("construct")) {
        const auto& c = j["construct"];
        const std::string perms = c.contains("perms") ? c["perms"].get<std::string>() : "";
        std::vector<Int> qs;
        for (const auto& q : c.at("qs")) qs.push_back(io::int_from_json(q, "scene.construct.qs"));
        cfg.family = build_family(c.at("dim").get<std::size_t>(), qs, c.value("kind", "cyclic"), perms).members;
    } else {
        throw Error(ErrorKind::ParseError, "scene: needs \"family\" or \"construct\"");
    }
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pairwise co-prime integer matrices: construction, divisibility, FPDs, MD-CRT, sampling"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    std::uint64_t seed_value = 0;
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_flag("--oracle", g.oracle, "Cross-check results with brute-force oracles");
    auto* seed_opt = app.add_option("--seed", seed_value, "Seed for noise generation");

    std::function<int()> run;

    // construct
    auto* construct = app.add_subcommand("construct", "Build a pairwise co-prime family");
    std::size_t c_dim = 0;
    std::string c_qs, c_kind = "cyclic", c_perms, c_out;
    construct->add_option("-d,--dim", c_dim, "Dimension D")->required()->check(CLI::PositiveNumber);
    construct->add_option("-q,--qs", c_qs, "Pairwise co-prime q list, e.g. 2,3,5")->required();
    construct->add_option("-k,--kind", c_kind, "cyclic | toeplitz | explicit")
        ->check(CLI::IsMember({"cyclic", "toeplitz", "explicit"}));
    construct->add_option("-p,--perms", c_perms, "Explicit permutations, e.g. \"1,2,3;2,3,1\"");
    construct->add_option("-o,--output", c_out, "Write the family file here instead of stdout");
    construct->callback([&] {
        run = [&] {
            const auto doc = build_family(c_dim, parse_qs(c_qs), c_kind, c_perms);
            const json j = io::family_to_json(doc);
            if (!c_out.empty()) {
                std::ofstream(c_out) << j.dump(2) << "\n";
                if (g.format == "text") std::cout << "wrote " << doc.members.size() << " matrices to " << c_out << "\n";
                return kOk;
            }
            if (g.format == "json") {
                std::cout << j.dump(2) << "\n";
            } else {
                for (const auto& m : doc.members) {
                    std::cout << "M_{" << m.i << "," << m.j << "}  q=" << m.q << "  perm=" << json(m.perm).dump()
                              << "\n";
                    for (std::size_t r = 0; r < m.matrix.rows(); ++r)
                        std::cout << "  " << io::vector_to_json(m.matrix.row(r)).dump() << "\n";
                }
            }
            return kOk;
        };
    });

    // coprime
    auto* coprime = app.add_subcommand("coprime", "Left-coprimality of two matrices");
    std::string cp_a, cp_b;
    coprime->add_option("a", cp_a, "Matrix file or inline JSON")->required();
    coprime->add_option("b", cp_b, "Matrix file or inline JSON")->required();
    coprime->callback([&] {
        run = [&] {
            const IntMatrix a = load_matrix(cp_a), b = load_matrix(cp_b);
            const bool verdict = is_left_coprime(a, b);
            json rep{{"left_coprime", verdict},
                     {"smith_form", io::matrix_to_json(smith_decompose(a.hstack(b)).S)},
                     {"determinants_coprime", determinants_coprime(a, b)}};
            int code = kOk;
            if (g.oracle) {
                const Int mg = stacked_minors_gcd(a, b);
                rep["minors_gcd"] = io::int_to_json(mg);
                if ((mg == 1) != verdict) code = kVerifyFailed;
            }
            emit(g, rep);
            return code;
        };
    });

    // lcrm
    auto* lcrm = app.add_subcommand("lcrm", "Least common right multiple of matrices");
    std::vector<std::string> l_files;
    lcrm->add_option("matrices", l_files, "Matrix files or inline JSON")->required();
    lcrm->callback([&] {
        run = [&] {
            std::vector<IntMatrix> ms;
            for (const auto& f : l_files) ms.push_back(load_matrix(f));
            json rep;
            IntMatrix r;
            if (ms.size() == 2) {
                const auto res = lcrm_pair(ms[0], ms[1]);
                rep["raw"] = io::matrix_to_json(res.raw);
                r = res.canonical;
            } else {
                r = lcrm_family(ms);
            }
            rep["lcrm"] = io::matrix_to_json(r);
            rep["det"] = io::int_to_json(determinant(r));
            int code = kOk;
            if (g.oracle) {
                bool crm = true;
                for (const auto& m : ms) crm = crm && left_divides(m, r);
                rep["common_multiple_check"] = crm;
                if (!crm) code = kVerifyFailed;
            }
            emit(g, rep);
            return code;
        };
    });

    // gcld
    auto* gcld_cmd = app.add_subcommand("gcld", "Greatest common left divisor of two matrices");
    std::string g_a, g_b;
    gcld_cmd->add_option("a", g_a)->required();
    gcld_cmd->add_option("b", g_b)->required();
    gcld_cmd->callback([&] {
        run = [&] {
            const IntMatrix a = load_matrix(g_a), b = load_matrix(g_b);
            const IntMatrix gm = gcld(a, b);
            json rep{{"gcld", io::matrix_to_json(gm)}, {"det", io::int_to_json(determinant(gm))}};
            int code = kOk;
            if (g.oracle) {
                const bool ok = abs(determinant(gm)) == stacked_minors_gcd(a, b);
                rep["minors_gcd_check"] = ok;
                if (!ok) code = kVerifyFailed;
            }
            emit(g, rep);
            return code;
        };
    });

    // fpd
    auto* fpd_cmd = app.add_subcommand("fpd", "Integer points of the fundamental parallelepiped");
    std::string f_m, f_svg;
    fpd_cmd->add_option("matrix", f_m)->required();
    fpd_cmd->add_option("--svg", f_svg, "Write an SVG drawing (2x2 only); '-' for stdout");
    fpd_cmd->callback([&] {
        run = [&] {
            const IntMatrix m = load_matrix(f_m);
            const Fpd fpd = fpd_enumerate(m);
            int code = kOk;
            json rep;
            if (g.oracle) {
                const bool ok = fpd_enumerate_bounding_box(m).points == fpd.points;
                rep["bounding_box_check"] = ok;
                if (!ok) code = kVerifyFailed;
            }
            if (!f_svg.empty()) {
                const std::string svg = render_fpd_svg(fpd);
                if (f_svg == "-") {
                    std::cout << svg;
                    return code;
                }
                std::ofstream(f_svg) << svg;
                rep["svg"] = f_svg;
            }
            rep["count"] = fpd.points.size();
            json pts = json::array();
            for (const auto& p : fpd.points) pts.push_back(io::vector_to_json(p));
            rep["points"] = std::move(pts);
            emit(g, rep);
            return code;
        };
    });

    // reduce
    auto* reduce = app.add_subcommand("reduce", "Write f = M n + r with r in FPD(M)");
    std::string r_v, r_m;
    reduce->add_option("vector", r_v, "Comma-separated or JSON array")->required();
    reduce->add_option("matrix", r_m)->required();
    reduce->callback([&] {
        run = [&] {
            const IntMatrix m = load_matrix(r_m);
            const IntVector f = parse_vector(r_v);
            const Reduction red = mod_reduce(f, m);
            emit(g, json{{"n", io::vector_to_json(red.n)},
                         {"r", io::vector_to_json(red.residue.r())},
                         {"residue", io::residue_to_json(red.residue)}});
            return kOk;
        };
    });

    // crt
    auto* crt = app.add_subcommand("crt", "Solve the MD-CRT from residue files");
    std::vector<std::string> crt_files;
    crt->add_option("residues", crt_files, "Residue files or inline JSON")->required();
    crt->callback([&] {
        run = [&] {
            std::vector<Residue> rs;
            for (const auto& f : crt_files) rs.push_back(io::residue_from_json(load(f)));
            const Residue sol = crt_solve(rs);
            json rep{{"n", io::vector_to_json(sol.r())},
                     {"lcrm", io::matrix_to_json(sol.modulus())},
                     {"dynamic_range", io::int_to_json(abs(determinant(sol.modulus())))}};
            int code = kOk;
            if (g.oracle) {
                const auto bf = crt_brute_force(rs, sol.modulus());
                const bool ok = bf && *bf == sol.r();
                rep["brute_force_check"] = ok;
                if (!ok) code = kVerifyFailed;
            }
            emit(g, rep);
            return code;
        };
    });

    // simulate
    auto* simulate = app.add_subcommand("simulate", "Sample, detect remainders and estimate f");
    std::string s_scene;
    simulate->add_option("scene", s_scene, "Scene file or inline JSON")->required();
    simulate->callback([&] {
        run = [&] {
            SceneConfig cfg = load_scene(load(s_scene));
            if (g.seed) cfg.scene.seed = *g.seed;
            const auto est = estimate_frequency(cfg.scene, cfg.family, cfg.threshold);
            json dets = json::array();
            for (std::size_t k = 0; k < est.detections.size(); ++k) {
                const auto& d = est.detections[k];
                dets.push_back(json{{"member", k},
                                    {"r", io::vector_to_json(d.residue.r())},
                                    {"peak", d.peak_magnitude},
                                    {"runner_up", d.runner_up_magnitude}});
            }
            const bool exact = est.f_hat == cfg.scene.frequency;
            json rep{{"f_hat", io::vector_to_json(est.f_hat)},
                     {"f_true", io::vector_to_json(cfg.scene.frequency)},
                     {"exact", exact},
                     {"out_of_range", est.out_of_range},
                     {"dynamic_range", io::int_to_json(est.dynamic_range)},
                     {"lcrm", io::matrix_to_json(est.lcrm)},
                     {"seed", cfg.scene.seed},
                     {"detections", dets}};
            emit(g, rep);
            // noiseless and in range must be exact
            const bool must_match = cfg.scene.noise_sigma == 0.0 && !est.out_of_range;
            return must_match && !exact ? kVerifyFailed : kOk;
        };
    });

    // verify-family
    auto* verify = app.add_subcommand("verify-family", "Check coprimality, determinants and the lcrm of a family");
    std::string v_file;
    verify->add_option("family", v_file, "Family file or inline JSON")->required();
    verify->callback([&] {
        run = [&] {
            const auto doc = io::family_from_json(load(v_file));
            const auto& fam = doc.members;
            std::size_t pairs = 0, coprime_pairs = 0, oracle_agree = 0;
            for (std::size_t a = 0; a < fam.size(); ++a)
                for (std::size_t b = a + 1; b < fam.size(); ++b) {
                    ++pairs;
                    const bool c = is_left_coprime(fam[a].matrix, fam[b].matrix);
                    coprime_pairs += c;
                    if (g.oracle) oracle_agree += c == (stacked_minors_gcd(fam[a].matrix, fam[b].matrix) == 1);
                }
            bool dets_ok = true;
            for (const auto& m : fam) {
                Int expect;
                mpz_pow_ui(expect.get_mpz_t(), m.q.get_mpz_t(), m.dim());
                dets_ok = dets_ok && abs(determinant(m.matrix)) == expect;
            }
            json rep;
            rep["members"] = fam.size();
            rep["pairwise_coprime"] = json{{"pairs", pairs}, {"coprime", coprime_pairs}};
            if (g.oracle) rep["pairwise_coprime"]["minors_oracle_agrees"] = oracle_agree == pairs;
            rep["determinants_q_pow_d"] = dets_ok;

            // the R_D checks need every member with the same feasible set
            bool lcrm_ok = true;
            if (!doc.qs.empty()) {
                const auto lr = verify_family_lcrm(fam);
                json ranges = json::array();
                for (const auto& x : lr.reduced_ranges) ranges.push_back(io::int_to_json(x));
                rep["lcrm"] = json{{"lcrm", io::matrix_to_json(lr.lcrm)},
                                   {"crm_integral", lr.crm_integral},
                                   {"equals_r_d", lr.equals_r_d},
                                   {"dynamic_range", io::int_to_json(lr.dynamic_range)},
                                   {"expected_range", io::int_to_json(lr.expected_range)},
                                   {"range_matches", lr.range_matches},
                                   {"minimal", lr.minimal},
                                   {"reduced_ranges", ranges}};
                lcrm_ok = lr.passed();
            }
            const bool ok = coprime_pairs == pairs && dets_ok && lcrm_ok && (!g.oracle || oracle_agree == pairs);
            rep["passed"] = ok;
            emit(g, rep);
            return ok ? kOk : kVerifyFailed;
        };
    });

    // spread
    auto* spread = app.add_subcommand("spread", "Peak-to-mean and peak-to-min ratios of a matrix");
    std::string sp_m;
    spread->add_option("matrix", sp_m)->required();
    spread->callback([&] {
        run = [&] {
            const auto s = spread_ratios(load_matrix(sp_m));
            emit(g, json{{"peak_over_mean", rat_to_json(s.peak_over_mean)},
                         {"peak_over_min_nonzero", rat_to_json(s.peak_over_min_nonzero)}});
            return kOk;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }
    if (*seed_opt) g.seed = seed_value;

    try {
        return run();
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
}
