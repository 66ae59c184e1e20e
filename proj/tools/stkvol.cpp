#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "staircase/kvol.hpp"
#include "staircase/saddle.hpp"
#include "staircase/veech.hpp"
#include "staircase/verify.hpp"

using namespace staircase;
using json = nlohmann::ordered_json;

namespace {

// Fixed 12-significant-digit formatting keeps CSV output byte-deterministic.
std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string rat_str(const BigRat& v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

void emit(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open output file: " + path);
    out << text;
}

// Coordinates arrive as strings so `p/q` input can stay exact end-to-end.
bool looks_rational(const std::string& text) { return text.find('/') != std::string::npos; }

BigRat parse_rational(const std::string& text) {
    Slope r = Slope::parse(text);
    if (r.is_infinite()) throw std::invalid_argument("coordinate must be finite: " + text);
    return BigRat(r.num(), r.den());
}

double parse_decimal(const std::string& text) {
    size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("cannot parse number '" + text + "'");
    }
    if (pos != text.size()) throw std::invalid_argument("cannot parse number '" + text + "'");
    return v;
}

double parse_coord(const std::string& text) {
    if (looks_rational(text)) {
        const BigRat v = parse_rational(text);
        return v.convert_to<double>();
    }
    return parse_decimal(text);
}

DiskPoint parse_point(const std::string& xs, const std::string& ys) {
    if (looks_rational(xs) && looks_rational(ys))
        return disk_point_exact(parse_rational(xs), parse_rational(ys));
    return disk_point(parse_coord(xs), parse_coord(ys));
}

const char* kind_str(WitnessKind k) {
    return k == WitnessKind::JTerm ? "j_term" : "geodesic_pair";
}

constexpr const char* kRowHeader = "x,y,kvol,witness_kind,r,rp,K\n";

// One CSV row of the shared x,y,kvol,witness schema.
std::string csv_row(double x, double y, const KVolResult& res) {
    std::string line = fmt(x) + "," + fmt(y) + "," + fmt(res.value) + "," +
                       kind_str(res.witness_kind);
    if (res.witness_kind == WitnessKind::GeodesicPair && !res.winners.empty()) {
        const GeodesicWitness& w = res.winners.front();
        line += "," + w.r.str() + "," + w.rp.str() + "," + fmt(w.k);
    } else {
        line += ",,,";
    }
    return line + "\n";
}

json witness_json(const GeodesicWitness& w) {
    return json{{"r", w.r.str()}, {"rp", w.rp.str()}, {"K", w.k}};
}

json result_json(const KVolResult& res) {
    json winners = json::array();
    for (const GeodesicWitness& w : res.winners) winners.push_back(witness_json(w));
    return json{{"kvol", res.value},
                {"j_plus", res.j_plus},
                {"j_minus", res.j_minus},
                {"k_star", res.k_star},
                {"witness_kind", kind_str(res.witness_kind)},
                {"winners", winners},
                {"reduced", json{{"x", res.reduced.x}, {"y", res.reduced.y}}},
                {"diagnostics",
                 json{{"candidates_examined", res.diagnostics.candidates_examined},
                      {"deepenings", res.diagnostics.deepenings},
                      {"endpoint_bound", res.diagnostics.final_endpoint_bound},
                      {"word_depth", res.diagnostics.final_word_depth}}}};
}

void add_format_option(CLI::App* cmd, std::string* format) {
    cmd->add_option("--format", *format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->envname("STKVOL_FORMAT");
}

void add_output_option(CLI::App* cmd, std::string* path) {
    cmd->add_option("-o,--output", *path, "write output to a file instead of stdout");
}

void add_search_options(CLI::App* cmd, CandidateConfig* cfg) {
    cmd->add_option("--bound", cfg->endpoint_bound, "initial geodesic endpoint bound")
        ->envname("STKVOL_BOUND");
    cmd->add_option("--depth", cfg->word_depth, "initial group word depth")
        ->envname("STKVOL_DEPTH");
    cmd->add_option("--rounds", cfg->stability_rounds, "quiet rounds required for stability")
        ->envname("STKVOL_ROUNDS");
    cmd->add_option("--tol", cfg->tolerance, "stability tolerance")->envname("STKVOL_TOL");
    cmd->add_option("--max-deepenings", cfg->max_deepenings, "cap on search widening rounds")
        ->envname("STKVOL_MAX_DEEPENINGS");
}

std::vector<Slope> slopes_up_to(int bound) {
    std::vector<Slope> out;
    out.push_back(Slope::infinity());
    for (long long q = 1; q <= bound; ++q)
        for (long long p = -bound; p <= bound; ++p)
            if (std::gcd(std::llabs(p), q) == 1) out.emplace_back(p, q);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"KVol on staircase translation surfaces and their Teichmuller disks"};
    app.require_subcommand(1);

    int rc = 0;

    // ---- at ----
    auto* at = app.add_subcommand("at", "evaluate KVol at one point of the upper half plane");
    struct {
        int s = 2;
        std::string x = "0", y = "1", format = "csv", output;
        CandidateConfig cfg;
    } at_opt;
    at->add_option("--s", at_opt.s, "number of staircase steps (surface has 2s-1 squares)")
        ->required();
    at->add_option("--x", at_opt.x, "real part, decimal or p/q")->required();
    at->add_option("--y", at_opt.y, "imaginary part, decimal or p/q")->required();
    add_format_option(at, &at_opt.format);
    add_output_option(at, &at_opt.output);
    add_search_options(at, &at_opt.cfg);
    at->callback([&] {
        const DiskPoint z = parse_point(at_opt.x, at_opt.y);
        const KVolResult res = kvol_at(at_opt.s, z, at_opt.cfg);
        if (at_opt.format == "csv") {
            emit(at_opt.output, kRowHeader + csv_row(z.x, z.y, res));
        } else {
            json doc = result_json(res);
            doc["s"] = at_opt.s;
            doc["x"] = z.x;
            doc["y"] = z.y;
            emit(at_opt.output, doc.dump(2) + "\n");
        }
    });

    // ---- scan ----
    auto* scan_cmd = app.add_subcommand("scan", "sweep KVol over a rectangular grid");
    struct {
        int s = 2;
        double x0 = -1.0, x1 = 1.0, y0 = 0.5, y1 = 2.0, step = 0.1;
        std::string format = "csv", output;
        CandidateConfig cfg;
    } scan_opt;
    scan_cmd->add_option("--s", scan_opt.s, "number of staircase steps")->required();
    scan_cmd->add_option("--x0", scan_opt.x0, "left edge")->required();
    scan_cmd->add_option("--x1", scan_opt.x1, "right edge")->required();
    scan_cmd->add_option("--y0", scan_opt.y0, "bottom edge")->required();
    scan_cmd->add_option("--y1", scan_opt.y1, "top edge")->required();
    scan_cmd->add_option("--step", scan_opt.step, "grid step")->required();
    add_format_option(scan_cmd, &scan_opt.format);
    add_output_option(scan_cmd, &scan_opt.output);
    add_search_options(scan_cmd, &scan_opt.cfg);
    scan_cmd->callback([&] {
        const std::vector<ScanRow> rows = scan(scan_opt.s, scan_opt.x0, scan_opt.x1, scan_opt.y0,
                                               scan_opt.y1, scan_opt.step, scan_opt.cfg);
        if (scan_opt.format == "csv") {
            std::string text = kRowHeader;
            for (const ScanRow& row : rows) {
                if (!row.error.empty()) {
                    // Failed samples keep the schema; the message goes to stderr.
                    text += fmt(row.x) + "," + fmt(row.y) + ",,error,,,\n";
                    std::cerr << "row (" << fmt(row.x) << ", " << fmt(row.y)
                              << ") failed: " << row.error << "\n";
                    continue;
                }
                std::string line = fmt(row.x) + "," + fmt(row.y) + "," + fmt(row.kvol) + "," +
                                   kind_str(row.witness_kind);
                if (row.witness)
                    line += "," + row.witness->r.str() + "," + row.witness->rp.str() + "," +
                            fmt(row.witness->k);
                else
                    line += ",,,";
                text += line + "\n";
            }
            emit(scan_opt.output, text);
        } else {
            json doc = json::array();
            for (const ScanRow& row : rows) {
                json rec{{"x", row.x}, {"y", row.y}};
                if (!row.error.empty()) {
                    rec["error"] = row.error;
                } else {
                    rec["kvol"] = row.kvol;
                    rec["witness_kind"] = kind_str(row.witness_kind);
                    if (row.witness) rec["witness"] = witness_json(*row.witness);
                }
                doc.push_back(rec);
            }
            emit(scan_opt.output, doc.dump(2) + "\n");
        }
    });

    // ---- saddles ----
    auto* saddles = app.add_subcommand(
        "saddles", "trace the saddle connections of one primitive direction");
    struct {
        int s = 2;
        long long p = 1, q = 1;
        std::string format = "csv", output;
    } sad_opt;
    saddles->add_option("--s", sad_opt.s, "number of staircase steps")->required();
    saddles->add_option("--p", sad_opt.p, "horizontal displacement")->required();
    saddles->add_option("--q", sad_opt.q, "vertical displacement")->required();
    add_format_option(saddles, &sad_opt.format);
    add_output_option(saddles, &sad_opt.output);
    saddles->callback([&] {
        if (std::gcd(std::llabs(sad_opt.p), std::llabs(sad_opt.q)) != 1)
            throw std::invalid_argument("direction (p, q) must be coprime");
        const StaircaseSurface sf = build_staircase(sad_opt.s);
        const Direction d = make_direction(sad_opt.p, sad_opt.q);
        const std::vector<SaddleConnection> conns = trace_direction(sf, d);
        const bool has_e_word = d.q != 0;
        const bool has_g_word = (d.p % 2 != 0) && (d.q % 2 != 0);
        auto word_of = [&](const SaddleConnection& conn, WordFamily family) {
            std::vector<std::string> out;
            for (const Label& l : crossing_word(sf, conn, family)) out.push_back(l.str());
            return out;
        };
        if (sad_opt.format == "csv") {
            std::string text = "start,homology,e_word,g_word\n";
            for (const SaddleConnection& conn : conns) {
                auto join = [](const std::vector<std::string>& ws) {
                    std::string s;
                    for (size_t i = 0; i < ws.size(); ++i) s += (i ? " " : "") + ws[i];
                    return s;
                };
                text += std::to_string(conn.start_square) + "," + conn.homology.str() + "," +
                        (has_e_word ? join(word_of(conn, WordFamily::EFamily)) : "") + "," +
                        (has_g_word ? join(word_of(conn, WordFamily::GFamily)) : "") + "\n";
            }
            emit(sad_opt.output, text);
        } else {
            json doc = json::array();
            for (const SaddleConnection& conn : conns) {
                json rec{{"direction", json{{"p", d.p}, {"q", d.q}}},
                         {"start_square", conn.start_square},
                         {"homology", conn.homology.str()},
                         {"eps", conn.homology.eps},
                         {"phi", conn.homology.phi}};
                json crossings = json::array();
                for (const Crossing& c : conn.crossings)
                    crossings.push_back(json{
                        {"edge", c.kind == EdgeKind::Right ? "right" : "top"},
                        {"square", c.square}});
                rec["crossings"] = crossings;
                if (has_e_word) rec["e_word"] = word_of(conn, WordFamily::EFamily);
                if (has_g_word) rec["g_word"] = word_of(conn, WordFamily::GFamily);
                doc.push_back(rec);
            }
            emit(sad_opt.output, doc.dump(2) + "\n");
        }
    });

    // ---- itable ----
    auto* itable = app.add_subcommand(
        "itable", "intersection-to-determinant ratios over slope pairs up to a height bound");
    struct {
        int s = 2;
        int bound = 7;
        std::string format = "csv", output;
    } it_opt;
    itable->add_option("--s", it_opt.s, "number of staircase steps");
    itable->add_option("--bound", it_opt.bound, "height bound on slopes")
        ->check(CLI::PositiveNumber);
    add_format_option(itable, &it_opt.format);
    add_output_option(itable, &it_opt.output);
    itable->callback([&] {
        const std::vector<Slope> slopes = slopes_up_to(it_opt.bound);
        std::string text = "r,rp,I,endz\n";
        json doc = json::array();
        for (size_t i = 0; i < slopes.size(); ++i) {
            for (size_t j = 0; j < slopes.size(); ++j) {
                if (!(slopes[i] < slopes[j])) continue;
                const BigRat value = intersection_ratio(it_opt.s, slopes[i], slopes[j]).value;
                const bool endz = is_end_of_Z_group(slopes[i], slopes[j]);
                if (it_opt.format == "csv") {
                    text += slopes[i].str() + "," + slopes[j].str() + "," + rat_str(value) +
                            "," + (endz ? "true" : "false") + "\n";
                } else {
                    doc.push_back(json{{"r", slopes[i].str()},
                                       {"rp", slopes[j].str()},
                                       {"I", rat_str(value)},
                                       {"I_float", value.convert_to<double>()},
                                       {"endz", endz}});
                }
            }
        }
        emit(it_opt.output, it_opt.format == "csv" ? text : doc.dump(2) + "\n");
    });

    // ---- endz ----
    auto* endz = app.add_subcommand(
        "endz", "test whether a slope pair bounds a geodesic of the distinguished family");
    struct {
        int s = 2;
        std::string r, rp, format = "csv", output;
    } ez_opt;
    endz->add_option("--s", ez_opt.s, "number of staircase steps for the trace route");
    endz->add_option("--r", ez_opt.r, "first slope, p/q or inf")->required();
    endz->add_option("--rp", ez_opt.rp, "second slope, p/q or inf")->required();
    add_format_option(endz, &ez_opt.format);
    add_output_option(endz, &ez_opt.output);
    endz->callback([&] {
        const Slope r = Slope::parse(ez_opt.r);
        const Slope rp = Slope::parse(ez_opt.rp);
        const bool group = is_end_of_Z_group(r, rp);
        const bool ratio = is_end_of_Z(ez_opt.s, r, rp);
        if (ez_opt.format == "csv") {
            std::string text = "r,rp,group,ratio\n";
            text += r.str() + "," + rp.str() + "," + (group ? "true" : "false") + "," +
                    (ratio ? "true" : "false") + "\n";
            emit(ez_opt.output, text);
        } else {
            emit(ez_opt.output, json{{"r", r.str()},
                                     {"rp", rp.str()},
                                     {"group", group},
                                     {"ratio", ratio}}
                                        .dump(2) +
                                    "\n");
        }
        if (group != ratio) {
            std::cerr << "route disagreement for (" << r.str() << ", " << rp.str() << ")\n";
            rc = 1;
        }
    });

    // ---- min ----
    auto* min_cmd = app.add_subcommand("min", "locate the minimum of KVol over the disk");
    struct {
        int s = 2;
        std::string format = "csv", output;
        CandidateConfig cfg;
    } min_opt;
    min_cmd->add_option("--s", min_opt.s, "number of staircase steps")->required();
    add_format_option(min_cmd, &min_opt.format);
    add_output_option(min_cmd, &min_opt.output);
    add_search_options(min_cmd, &min_opt.cfg);
    min_cmd->callback([&] {
        const MinimumResult res = find_minimum(min_opt.s, min_opt.cfg);
        if (min_opt.format == "csv") {
            emit(min_opt.output, kRowHeader + csv_row(res.point.x, res.point.y, res.detail));
        } else {
            json doc = result_json(res.detail);
            doc["s"] = min_opt.s;
            doc["x"] = res.point.x;
            doc["y"] = res.point.y;
            emit(min_opt.output, doc.dump(2) + "\n");
        }
    });

    // ---- cover ----
    auto* cover = app.add_subcommand(
        "cover", "exact covering check for the corner region of the fundamental domain");
    struct {
        double step = 0.01;
        int n_max = 12;
        std::string format = "csv", output;
    } cov_opt;
    cover->add_option("--step", cov_opt.step, "sampling step");
    cover->add_option("--n-max", cov_opt.n_max, "largest banana index used");
    add_format_option(cover, &cov_opt.format);
    add_output_option(cover, &cov_opt.output);
    cover->callback([&] {
        const CoverReport rep = verify_covering(cov_opt.step, cov_opt.n_max);
        if (cov_opt.format == "csv") {
            std::string text = "grid_step,n_max,y_cap,samples,covered,ok\n";
            text += fmt(rep.grid_step) + "," + std::to_string(rep.n_max) + "," +
                    fmt(rep.y_cap) + "," + std::to_string(rep.samples) + "," +
                    std::to_string(rep.covered) + "," + (rep.ok() ? "true" : "false") + "\n";
            emit(cov_opt.output, text);
        } else {
            json unc = json::array();
            for (const auto& [ux, uy] : rep.uncovered) unc.push_back(json{{"x", ux}, {"y", uy}});
            emit(cov_opt.output, json{{"grid_step", rep.grid_step},
                                      {"n_max", rep.n_max},
                                      {"y_cap", rep.y_cap},
                                      {"samples", rep.samples},
                                      {"covered", rep.covered},
                                      {"ok", rep.ok()},
                                      {"uncovered", unc}}
                                         .dump(2) +
                                     "\n");
        }
        if (!rep.ok()) rc = 1;
    });

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "run the acceptance battery");
    struct {
        std::string level = "full";
        bool inject = false;
    } ver_opt;
    verify->add_option("level", ver_opt.level, "quick or full")
        ->check(CLI::IsMember({"quick", "full"}));
    verify->add_flag("--inject-failure", ver_opt.inject,
                     "corrupt a pairing table to prove the battery notices");
    verify->callback([&] {
        const VerifyLevel level =
            ver_opt.level == "quick" ? VerifyLevel::Quick : VerifyLevel::Full;
        const std::vector<CriterionResult> results = run_acceptance(level, ver_opt.inject);
        int failures = 0;
        for (const CriterionResult& r : results) {
            if (!r.pass) ++failures;
            std::printf("[%s] criterion %d: %s (%.1fs)%s%s\n", r.pass ? "PASS" : "FAIL", r.id,
                        r.name.c_str(), r.seconds, r.details.empty() ? "" : " -- ",
                        r.details.c_str());
        }
        std::printf("%d/%zu criteria passed\n", static_cast<int>(results.size()) - failures,
                    results.size());
        rc = failures;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const SearchInstability& e) {
        std::cerr << "error: search instability: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
