// Command-line front end: check | analyze | gen | batch over matrix pair
// files or generated families. Exit codes: 0 holds / all-pass, 1 CS fails
// (check), 2 input error, 3 internal cross-method disagreement.

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cs/complementary.hpp"
#include "cs/criterion.hpp"
#include "cs/generators.hpp"
#include "cs/matrix_io.hpp"
#include "cs/spectral.hpp"

namespace {

using nlohmann::json;

constexpr unsigned kDefaultSeed = 12345;
constexpr std::size_t kIdentityLimit = 8;  // subset enumeration cutoff

struct SourceOpts {
    std::string pair_file;
    std::string a_file, b_file;
    std::string gen_family;
    std::string gamma = "1";
    std::size_t n = 4, k = 2;
    unsigned seed = kDefaultSeed;
    double density = 1.0;
};

struct MethodOpts {
    std::vector<std::string> methods{"rank", "direct", "identities"};
};

cs::MatrixPair realize_generator(const std::string& family,
                                 const std::map<std::string, std::string>& params) {
    auto get = [&](const std::string& key, const std::string& fallback) {
        auto it = params.find(key);
        return it == params.end() ? fallback : it->second;
    };
    unsigned seed = static_cast<unsigned>(std::stoul(get("seed", std::to_string(kDefaultSeed))));
    std::size_t n = std::stoul(get("n", "4"));
    std::mt19937 rng(seed);
    if (family == "example1") return cs::gen_example1(cs::Scalar::parse(get("gamma", "1")));
    if (family == "block-abzero") return cs::gen_block_abzero(n, std::stoul(get("k", "2")), rng);
    if (family == "nilpotent") return cs::gen_nilpotent(n, rng);
    if (family == "random") return cs::gen_random(n, rng, std::stod(get("density", "1")));
    if (family == "normal-commuting") return cs::gen_normal_commuting(n, rng);
    throw cs::ParseError("unknown generator family '" + family + "'");
}

cs::MatrixPair resolve_source(const SourceOpts& src) {
    if (!src.pair_file.empty()) return cs::load_pair(src.pair_file);
    if (!src.a_file.empty() || !src.b_file.empty()) {
        if (src.a_file.empty() || src.b_file.empty())
            throw cs::ParseError("both --a and --b are required");
        return cs::load_pair(src.a_file, src.b_file);
    }
    if (!src.gen_family.empty()) {
        std::map<std::string, std::string> params{
            {"gamma", src.gamma},
            {"n", std::to_string(src.n)},
            {"k", std::to_string(src.k)},
            {"seed", std::to_string(src.seed)},
            {"density", std::to_string(src.density)},
        };
        return realize_generator(src.gen_family, params);
    }
    throw cs::ParseError("no input: use --pair, --a/--b, or --gen");
}

std::string scalar_vec_str(const std::vector<cs::Scalar>& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += v[i].str();
    }
    return out + "]";
}

json scalar_vec_json(const std::vector<cs::Scalar>& v) {
    json arr = json::array();
    for (const auto& s : v) arr.push_back(s.str());
    return arr;
}

struct CheckOutcome {
    cs::CsVerdict verdict;
    std::map<std::string, std::string> method_results;  // holds / fails / skipped
    bool agree = true;
    bool any_ran = false;
};

CheckOutcome run_methods(const cs::MatrixPair& pair, const std::vector<std::string>& methods) {
    CheckOutcome out;
    std::optional<bool> consensus;
    auto record = [&](const std::string& name, bool holds) {
        out.method_results[name] = holds ? "holds" : "fails";
        if (consensus && *consensus != holds) out.agree = false;
        consensus = consensus ? (*consensus && holds) : holds;
        out.any_ran = true;
    };
    bool have_verdict = false;
    for (const std::string& m : methods) {
        if (m == "rank") {
            cs::CsVerdict v = cs::cs_rank_test(cs::coeff_grid_interp(pair.a, pair.b));
            record("rank", v.holds);
            if (!have_verdict) {
                out.verdict = v;
                have_verdict = true;
            }
        } else if (m == "direct") {
            cs::CsVerdict v = cs::cs_direct(pair.a, pair.b);
            record("direct", v.holds);
            out.verdict = v;  // richest report: exact factors plus witness
            have_verdict = true;
        } else if (m == "identities") {
            if (pair.a.rows() > kIdentityLimit) {
                out.method_results["identities"] = "skipped (n > 8)";
            } else {
                record("identities", cs::cs_identity_check(pair.a, pair.b).empty());
                if (!have_verdict) {
                    // identities-only run: carry the verdict on the minors grid
                    out.verdict = cs::cs_rank_test(cs::coeff_grid_minors(pair.a, pair.b));
                    have_verdict = true;
                }
            }
        } else {
            throw cs::ParseError("unknown method '" + m + "' (expected rank|direct|identities)");
        }
    }
    if (!out.any_ran)
        throw cs::ParseError("no runnable method (identities auto-skips for n > 8)");
    return out;
}

json verdict_json(const cs::CsVerdict& v) {
    json j{{"holds", v.holds}, {"rank_of_M", v.rank_of_m}};
    if (v.factor_k) j["factor_k"] = scalar_vec_json(*v.factor_k);
    if (v.factor_l) j["factor_l"] = scalar_vec_json(*v.factor_l);
    if (v.witness)
        j["witness"] = json{{"p", v.witness->p},
                            {"q", v.witness->q},
                            {"grid_value", v.witness->lhs.str()},
                            {"factored_value", v.witness->rhs.str()}};
    return j;
}

void print_verdict_text(std::ostream& os, const cs::CsVerdict& v,
                        const CheckOutcome& outcome) {
    os << "verdict: " << (v.holds ? "CS holds" : "CS fails") << "\n";
    os << "rank(M): " << v.rank_of_m << "\n";
    if (v.factor_k) os << "factor k (det(I-sA) coefficients): " << scalar_vec_str(*v.factor_k) << "\n";
    if (v.factor_l) os << "factor l (det(I-tB) coefficients): " << scalar_vec_str(*v.factor_l) << "\n";
    if (v.witness)
        os << "witness: (p,q)=(" << v.witness->p << "," << v.witness->q
           << ") grid=" << v.witness->lhs.str() << " factored=" << v.witness->rhs.str() << "\n";
    os << "methods:";
    for (const auto& [name, result] : outcome.method_results) os << " " << name << "=" << result;
    os << " agree=" << (outcome.agree ? "yes" : "NO") << "\n";
}

json flags_json(const std::map<std::string, cs::Flag>& flags) {
    json j = json::object();
    for (const auto& [name, flag] : flags) j[name] = cs::to_string(flag);
    return j;
}

json spectral_json(const cs::SpectralReport& rep) {
    json j{{"mult_zero_A", rep.mult_zero_a},
           {"mult_zero_B", rep.mult_zero_b},
           {"zero_eigenvalue_A", rep.zero_eigenvalue_a},
           {"zero_eigenvalue_B", rep.zero_eigenvalue_b},
           {"semisimple_zero_A", rep.semisimple_zero_a},
           {"semisimple_zero_B", rep.semisimple_zero_b},
           {"rank_A", rep.rank_a},
           {"rank_B", rep.rank_b},
           {"pairing_ok", rep.pairing_ok},
           {"sample_collision_warning", rep.sample_collision_warning}};
    if (rep.nu) j["nu"] = *rep.nu;
    return j;
}

std::vector<std::size_t> one_based(const cs::SubstitutionPattern& p) {
    std::vector<std::size_t> out;
    for (std::size_t i : p.indices) out.push_back(i + 1);
    return out;
}

json complementary_json(const cs::ComplementaryReport& rep) {
    json wit = json::array();
    for (const auto& w : rep.witnesses) wit.push_back(one_based(w));
    return json{{"r", rep.r},
                {"theta", rep.theta.str()},
                {"is_complementary", rep.is_complementary},
                {"witnesses", wit}};
}

json prop4_json(const cs::Prop4Report& rep) {
    auto dir = [](const cs::Prop4Direction& d) {
        json j{{"r", d.r},
               {"theta", d.theta.str()},
               {"complementary", d.complementary},
               {"flag", cs::to_string(d.flag)}};
        if (!d.unmet.empty()) j["unmet"] = d.unmet;
        return j;
    };
    return json{{"mult_zero_A", rep.mult_zero_a},
                {"mult_zero_B", rep.mult_zero_b},
                {"forward", dir(rep.forward)},
                {"mirror", dir(rep.mirror)}};
}

struct OutputSink {
    std::string path;
    void write(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream out(path);
        if (!out) throw cs::ParseError(path + ": cannot write file");
        out << text;
    }
};

int cmd_check(const SourceOpts& src, const MethodOpts& methods, const std::string& format,
              const OutputSink& sink) {
    cs::MatrixPair pair = resolve_source(src);
    CheckOutcome outcome = run_methods(pair, methods.methods);
    std::ostringstream os;
    if (format == "json") {
        json j{{"schema", 1},
               {"command", "check"},
               {"n", pair.a.rows()},
               {"verdict", verdict_json(outcome.verdict)},
               {"methods", outcome.method_results},
               {"agree", outcome.agree},
               {"seed", src.seed}};
        os << j.dump(2) << "\n";
    } else {
        os << "n: " << pair.a.rows() << "\n";
        print_verdict_text(os, outcome.verdict, outcome);
        os << "seed: " << src.seed << "\n";
    }
    sink.write(os.str());
    if (!outcome.agree) return 3;
    return outcome.verdict.holds ? 0 : 1;
}

int cmd_analyze(const SourceOpts& src, const MethodOpts& methods, bool spectral,
                std::optional<std::size_t> complementary_r, cs::SubstitutionAxis axis,
                const cs::Tolerances& tol, const std::string& format, const OutputSink& sink) {
    cs::MatrixPair pair = resolve_source(src);
    CheckOutcome outcome = run_methods(pair, methods.methods);

    std::optional<cs::SpectralReport> spec_rep;
    std::optional<cs::Prop4Report> prop4_rep;
    std::optional<cs::ComplementaryReport> comp_rep;
    if (spectral) {
        spec_rep = cs::spectral_report(pair.a, pair.b, tol, src.seed);
        prop4_rep = cs::check_prop4(pair.a, pair.b);
        spec_rep->prop_flags["prop4.conclusion"] = prop4_rep->forward.flag;
        spec_rep->prop_flags["prop4.mirror"] = prop4_rep->mirror.flag;
    }
    if (complementary_r) comp_rep = cs::is_r_complementary(pair.a, pair.b, *complementary_r, axis);

    std::ostringstream os;
    if (format == "json") {
        json j{{"schema", 1},
               {"command", "analyze"},
               {"n", pair.a.rows()},
               {"verdict", verdict_json(outcome.verdict)},
               {"methods", outcome.method_results},
               {"agree", outcome.agree},
               {"seed", src.seed},
               {"tolerances", json{{"cluster", tol.cluster}, {"rank", tol.rank}, {"match", tol.match}}}};
        if (spec_rep) {
            j["spectral"] = spectral_json(*spec_rep);
            j["flags"] = flags_json(spec_rep->prop_flags);
            j["prop4"] = prop4_json(*prop4_rep);
        }
        if (comp_rep) j["complementary"] = complementary_json(*comp_rep);
        os << j.dump(2) << "\n";
    } else {
        os << "n: " << pair.a.rows() << "\n";
        print_verdict_text(os, outcome.verdict, outcome);
        if (spec_rep) {
            os << "m_A(0)=" << spec_rep->mult_zero_a << " m_B(0)=" << spec_rep->mult_zero_b
               << " rank(A)=" << spec_rep->rank_a << " rank(B)=" << spec_rep->rank_b << "\n";
            os << "semisimple zero: A=" << (spec_rep->semisimple_zero_a ? "yes" : "no")
               << " B=" << (spec_rep->semisimple_zero_b ? "yes" : "no") << "\n";
            if (spec_rep->nu) os << "nu: " << *spec_rep->nu << "\n";
            os << "pairing: " << (spec_rep->pairing_ok ? "ok" : "FAILED");
            if (spec_rep->sample_collision_warning) os << " (sample collision accepted)";
            os << "\n";
            for (const auto& [name, flag] : spec_rep->prop_flags)
                os << "  " << name << ": " << cs::to_string(flag) << "\n";
        }
        if (comp_rep) {
            os << "complementary r=" << comp_rep->r << ": "
               << (comp_rep->is_complementary ? "yes" : "no") << " theta=" << comp_rep->theta.str()
               << " witnesses=" << comp_rep->witnesses.size() << "\n";
        }
        os << "seed: " << src.seed << "\n";
    }
    sink.write(os.str());
    if (!outcome.agree) return 3;
    return 0;
}

int cmd_gen(const std::string& family, const SourceOpts& src, const std::string& out_pair,
            const std::string& out_a, const std::string& out_b) {
    std::map<std::string, std::string> params{
        {"gamma", src.gamma},
        {"n", std::to_string(src.n)},
        {"k", std::to_string(src.k)},
        {"seed", std::to_string(src.seed)},
        {"density", std::to_string(src.density)},
    };
    cs::MatrixPair pair = realize_generator(family, params);
    if (!out_pair.empty()) {
        cs::save_pair(pair, out_pair);
    } else if (!out_a.empty() && !out_b.empty()) {
        cs::save_matrix(pair.a, out_a);
        cs::save_matrix(pair.b, out_b);
    } else {
        throw cs::ParseError("gen: give --out, or both --out-a and --out-b");
    }
    return 0;
}

struct BatchRow {
    std::size_t index = 0;
    std::string source;
    bool error = false;
    std::string message;
    bool holds = false;
    std::size_t rank_m = 0;
    std::size_t mult_zero_a = 0, mult_zero_b = 0;
    std::size_t rank_a = 0, rank_b = 0;
    bool agree = true;
};

cs::MatrixPair resolve_manifest_line(const std::string& line) {
    std::istringstream in(line);
    std::string kind;
    in >> kind;
    if (kind == "pair") {
        std::string f;
        in >> f;
        if (f.empty()) throw cs::ParseError("manifest: 'pair' needs a file");
        return cs::load_pair(f);
    }
    if (kind == "files") {
        std::string fa, fb;
        in >> fa >> fb;
        if (fa.empty() || fb.empty()) throw cs::ParseError("manifest: 'files' needs two files");
        return cs::load_pair(fa, fb);
    }
    if (kind == "gen") {
        std::string family;
        in >> family;
        std::map<std::string, std::string> params;
        std::string kv;
        while (in >> kv) {
            auto eq = kv.find('=');
            if (eq == std::string::npos)
                throw cs::ParseError("manifest: expected key=value, got '" + kv + "'");
            params[kv.substr(0, eq)] = kv.substr(eq + 1);
        }
        return realize_generator(family, params);
    }
    throw cs::ParseError("manifest: unknown entry '" + kind + "' (expected pair|files|gen)");
}

int cmd_batch(const std::string& manifest, const MethodOpts& methods, const std::string& format,
              const OutputSink& sink) {
    std::ifstream in(manifest);
    if (!in) throw cs::ParseError(manifest + ": cannot open manifest");
    std::vector<BatchRow> rows;
    std::string line;
    std::size_t index = 0;
    while (std::getline(in, line)) {
        std::string trimmed = line;
        trimmed.erase(0, trimmed.find_first_not_of(" \t"));
        if (trimmed.empty() || trimmed[0] == '#') continue;
        BatchRow row;
        row.index = ++index;
        row.source = trimmed;
        try {
            cs::MatrixPair pair = resolve_manifest_line(trimmed);
            CheckOutcome outcome = run_methods(pair, methods.methods);
            row.holds = outcome.verdict.holds;
            row.rank_m = outcome.verdict.rank_of_m;
            row.agree = outcome.agree;
            row.mult_zero_a = cs::mult_zero(pair.a);
            row.mult_zero_b = cs::mult_zero(pair.b);
            row.rank_a = cs::rank(pair.a);
            row.rank_b = cs::rank(pair.b);
        } catch (const std::exception& e) {
            row.error = true;
            row.message = e.what();
        }
        rows.push_back(std::move(row));
    }
    std::size_t holds_count = 0, fails_count = 0, error_count = 0;
    bool any_disagreement = false;
    for (const auto& r : rows) {
        if (r.error)
            ++error_count;
        else if (r.holds)
            ++holds_count;
        else
            ++fails_count;
        if (!r.error && !r.agree) any_disagreement = true;
    }
    std::ostringstream os;
    if (format == "json") {
        json jrows = json::array();
        for (const auto& r : rows) {
            json j{{"index", r.index}, {"source", r.source}};
            if (r.error) {
                j["error"] = r.message;
            } else {
                j["holds"] = r.holds;
                j["rank_of_M"] = r.rank_m;
                j["mult_zero_A"] = r.mult_zero_a;
                j["mult_zero_B"] = r.mult_zero_b;
                j["rank_A"] = r.rank_a;
                j["rank_B"] = r.rank_b;
                j["agree"] = r.agree;
            }
            jrows.push_back(std::move(j));
        }
        json j{{"schema", 1},
               {"command", "batch"},
               {"rows", jrows},
               {"counts", json{{"holds", holds_count}, {"fails", fails_count}, {"errors", error_count}}},
               {"disagreement", any_disagreement}};
        os << j.dump(2) << "\n";
    } else {
        os << "idx  verdict  rank(M)  mA(0)  mB(0)  rank(A)  rank(B)  agree  source\n";
        for (const auto& r : rows) {
            if (r.error) {
                os << r.index << "  ERROR: " << r.message << "  [" << r.source << "]\n";
            } else {
                os << r.index << "  " << (r.holds ? "holds " : "fails ") << "  " << r.rank_m
                   << "  " << r.mult_zero_a << "  " << r.mult_zero_b << "  " << r.rank_a << "  "
                   << r.rank_b << "  " << (r.agree ? "yes" : "NO") << "  " << r.source << "\n";
            }
        }
        os << "total: " << rows.size() << "  holds: " << holds_count << "  fails: " << fails_count
           << "  errors: " << error_count << "\n";
    }
    sink.write(os.str());
    return any_disagreement ? 3 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Craig-Sakamoto matrix pair analyzer"};
    app.require_subcommand(1);

    SourceOpts src;
    MethodOpts methods;
    cs::Tolerances tol;
    std::string format = "text";
    OutputSink sink;
    bool spectral = true;
    std::optional<std::size_t> complementary_r;
    long comp_r_raw = -1;

    auto add_source = [&](CLI::App* sub) {
        sub->add_option("--pair", src.pair_file, "pair file { \"A\": ..., \"B\": ... }");
        sub->add_option("--a", src.a_file, "matrix file for A");
        sub->add_option("--b", src.b_file, "matrix file for B");
        sub->add_option("--gen", src.gen_family,
                        "generator family: example1|block-abzero|nilpotent|random|normal-commuting");
        sub->add_option("--gamma", src.gamma, "example1 parameter (rational)");
        sub->add_option("--n", src.n, "generator dimension");
        sub->add_option("--k", src.k, "block-abzero block size");
        sub->add_option("--seed", src.seed, "seed for generated families and samples");
        sub->add_option("--density", src.density, "random family nonzero density");
    };
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--method", methods.methods, "methods: rank|direct|identities")
            ->delimiter(',');
        sub->add_option("--format", format, "text|json")
            ->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--output", sink.path, "write the report to a file");
    };
    auto add_tols = [&](CLI::App* sub) {
        sub->add_option("--tol-cluster", tol.cluster, "root clustering tolerance");
        sub->add_option("--tol-rank", tol.rank, "SVD rank threshold (relative)");
        sub->add_option("--tol-match", tol.match, "eigenvalue matching tolerance");
    };

    CLI::App* check = app.add_subcommand("check", "decide the CS property");
    add_source(check);
    add_common(check);

    CLI::App* analyze = app.add_subcommand("analyze", "full spectral / complementary report");
    add_source(analyze);
    add_common(analyze);
    add_tols(analyze);
    analyze->add_flag("--spectral,!--no-spectral", spectral, "include spectral diagnostics");
    analyze->add_option("--complementary-r", comp_r_raw, "run the r-complementary search");
    bool comp_columns = false;
    analyze->add_flag("--complementary-columns", comp_columns,
                      "substitute columns instead of rows in the search");

    CLI::App* gen = app.add_subcommand("gen", "write a generated pair to files");
    std::string family, out_pair, out_a, out_b;
    gen->add_option("--family", family, "family name")->required();
    gen->add_option("--gamma", src.gamma, "example1 parameter (rational)");
    gen->add_option("--n", src.n, "dimension");
    gen->add_option("--k", src.k, "block size");
    gen->add_option("--seed", src.seed, "seed");
    gen->add_option("--density", src.density, "density");
    gen->add_option("--out", out_pair, "pair file to write");
    gen->add_option("--out-a", out_a, "matrix file for A");
    gen->add_option("--out-b", out_b, "matrix file for B");

    CLI::App* batch = app.add_subcommand("batch", "run a manifest of pairs");
    std::string manifest;
    batch->add_option("--manifest", manifest, "newline-delimited pair specs")->required();
    add_common(batch);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (check->parsed()) return cmd_check(src, methods, format, sink);
        if (analyze->parsed()) {
            if (comp_r_raw >= 0) complementary_r = static_cast<std::size_t>(comp_r_raw);
            cs::SubstitutionAxis axis =
                comp_columns ? cs::SubstitutionAxis::Columns : cs::SubstitutionAxis::Rows;
            return cmd_analyze(src, methods, spectral, complementary_r, axis, tol, format, sink);
        }
        if (gen->parsed()) return cmd_gen(family, src, out_pair, out_a, out_b);
        if (batch->parsed()) return cmd_batch(manifest, methods, format, sink);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
