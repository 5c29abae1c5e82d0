// Command-line front end: transforms, decompositions, fusion, measures,
// belief-evolution revision, perturbation sweeps, random BPA generation and
// the fixture-driven table emitters.

#include <algorithm>
#include <bit>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bft/ben.hpp"
#include "bft/canonical.hpp"
#include "bft/fusion.hpp"
#include "bft/isopignistic.hpp"
#include "bft/json_io.hpp"
#include "bft/lattice.hpp"
#include "bft/measures.hpp"
#include "bft/random.hpp"
#include "bft/transforms.hpp"

namespace {

using bft::SubsetIndex;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw bft::ParseError("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        if (text.empty() || text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw bft::ParseError("cannot open output file: " + out_path);
    out << text;
    if (text.empty() || text.back() != '\n') out << '\n';
}

bft::MassFunction load_mass(const std::string& path) {
    return bft::mass_from_json(read_input(path));
}

// A path may hold one document or an array of them (as emitted by
// `random --count k`); '-' reads stdin.
std::vector<bft::MassFunction> load_mass_list(const std::vector<std::string>& paths) {
    std::vector<bft::MassFunction> out;
    for (const std::string& path : paths) {
        const std::string text = read_input(path);
        nlohmann::ordered_json doc;
        try {
            doc = nlohmann::ordered_json::parse(text);
        } catch (const nlohmann::json::exception& e) {
            throw bft::ParseError("invalid JSON in " + path + ": " + e.what());
        }
        if (doc.is_array()) {
            for (const auto& item : doc) {
                out.push_back(bft::mass_from_json(item.dump()));
            }
        } else {
            out.push_back(bft::mass_from_json(text));
        }
    }
    return out;
}

std::string csv_row(const std::vector<std::string>& cells) {
    std::string row;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) row += ',';
        row += cells[i];
    }
    row += '\n';
    return row;
}

std::string fmt(double v) { return bft::format_double(v); }

// ---------------------------------------------------------------------------
// fuse

// Row order of the rule tables: set-based rule, then its hyper-cautious
// counterpart, pairwise.
const std::vector<std::string>& all_rules() {
    static const std::vector<std::string> rules = {
        "ccr", "hprod", "dcr", "hprobsum", "cautious", "hmin", "bold", "hmax",
    };
    return rules;
}

bft::MassFunction run_rule(const std::string& rule, const std::vector<bft::MassFunction>& ms) {
    if (ms.size() < 2) throw bft::Error("fusion needs at least two inputs");
    if (rule == "hmin" || rule == "hprod" || rule == "hmax" || rule == "hprobsum") {
        bft::FusionOperator op = bft::FusionOperator::t_min;
        if (rule == "hprod") op = bft::FusionOperator::t_prod;
        if (rule == "hmax") op = bft::FusionOperator::s_max;
        if (rule == "hprobsum") op = bft::FusionOperator::s_probsum;
        return bft::hyper_cautious_k(ms, op);
    }
    // The classical rules are associative; fold left.
    bft::MassFunction acc = ms[0];
    for (std::size_t i = 1; i < ms.size(); ++i) {
        if (rule == "ccr") {
            acc = bft::conjunctive(acc, ms[i]);
        } else if (rule == "dcr") {
            acc = bft::disjunctive(acc, ms[i]);
        } else if (rule == "cautious") {
            acc = bft::cautious(acc, ms[i]);
        } else if (rule == "bold") {
            acc = bft::bold(acc, ms[i]);
        } else {
            throw bft::Error("unknown fusion rule: " + rule);
        }
    }
    return acc;
}

std::string fusion_table_csv(const std::vector<bft::MassFunction>& ms) {
    const SubsetIndex count = ms[0].subset_count();
    std::vector<std::string> header = {"rule"};
    for (SubsetIndex f = 0; f < count; ++f) header.push_back("m" + std::to_string(f));
    std::string csv = csv_row(header);
    for (const std::string& rule : all_rules()) {
        const bft::MassFunction fused = run_rule(rule, ms);
        std::vector<std::string> cells = {rule};
        for (SubsetIndex f = 0; f < count; ++f) cells.push_back(fmt(fused[f]));
        csv += csv_row(cells);
    }
    return csv;
}

// ---------------------------------------------------------------------------
// sweep

std::string sweep_csv(const std::string& kind, const bft::MassFunction& base,
                      SubsetIndex subset, double lo, double hi, int steps) {
    if (steps < 2) throw bft::Error("sweep needs at least 2 steps");
    if (subset >= base.subset_count()) throw bft::Error("sweep subset out of range");

    std::vector<std::string> header = {"value"};
    for (SubsetIndex f = 0; f < base.subset_count(); ++f) {
        header.push_back("m" + std::to_string(f));
    }
    header.push_back("valid");
    std::string csv = csv_row(header);

    const bool iso = kind == "iso_tau";
    const bool sigma = kind == "sigma";
    if ((iso || kind == "t") && bft::cardinality(subset) < 2) {
        throw bft::Error("sweep subset must have at least two elements for " + kind);
    }
    if (sigma && subset == base.frame().full_set()) {
        throw bft::Error("sigma is undefined on the full frame");
    }

    std::optional<bft::IsoDecomposition> base_iso;
    std::optional<bft::WeightFunction> base_sigma;
    std::optional<bft::TFunction> base_t;
    if (iso) {
        base_iso = bft::decompose(base, bft::CommitmentForm::tau);
    } else if (sigma) {
        base_sigma = bft::smets_sigma(base);
    } else {
        base_t = bft::pichon_t(base);
    }

    for (int s = 0; s < steps; ++s) {
        const double value = lo + (hi - lo) * s / (steps - 1);
        std::vector<double> raw;
        bool valid = true;
        try {
            if (iso) {
                bft::IsoDecomposition d = *base_iso;
                d.commitment.values[subset] = value;
                raw = bft::reconstruct_tau(d).masses();
            } else if (sigma) {
                bft::WeightFunction w = *base_sigma;
                w.values[subset] = value;
                raw = bft::invert_sigma_raw(w);
            } else {
                bft::TFunction t = *base_t;
                t.values[subset] = value;
                raw = bft::invert_t_raw(t);
            }
        } catch (const bft::Error&) {
            valid = false;
        }
        if (valid && !raw.empty()) {
            valid = !bft::check_mass_vector(raw).has_value();
        }
        std::vector<std::string> cells = {fmt(value)};
        if (raw.empty()) {
            cells.resize(1 + base.subset_count(), "");
        } else {
            for (double v : raw) cells.push_back(fmt(v));
        }
        cells.push_back(valid ? "true" : "false");
        csv += csv_row(cells);
    }
    return csv;
}

// ---------------------------------------------------------------------------
// tables

std::string order_string(const std::vector<double>& probs) {
    std::vector<int> order(probs.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return probs[a] > probs[b]; });
    std::string out;
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (i) out += '>';
        out += "w" + std::to_string(order[i] + 1);
    }
    return out;
}

std::string load_fixture_text(const std::filesystem::path& dir, const std::string& name) {
    return read_input((dir / name).string());
}

void emit_tables(const std::string& fixtures, const std::string& out_dir) {
    const std::filesystem::path fix(fixtures);
    const std::filesystem::path out(out_dir);
    std::filesystem::create_directories(out);

    // Example e1: transfer plan between the two fixtures.
    {
        const bft::MassFunction m1 = bft::mass_from_json(load_fixture_text(fix, "e1_m1.json"));
        const bft::MassFunction m2 = bft::mass_from_json(load_fixture_text(fix, "e1_m2.json"));
        const bft::IsoTransform it = bft::isotransform(m2, m1, 1e-3);
        std::string csv = csv_row({"subset", "tau", "zeta"});
        for (SubsetIndex f = 0; f < m1.subset_count(); ++f) {
            if (bft::cardinality(f) < 2) continue;
            csv += csv_row({std::to_string(f), fmt(it.tau.values[f]), fmt(it.zeta.values[f])});
        }
        write_output(csv, (out / "example1.csv").string());
    }

    // Example e3: reconstruction of the 4-element ratio map and its
    // canonical collapse.
    {
        const bft::IsoDecomposition pc =
            bft::decomposition_from_json(load_fixture_text(fix, "e3_pc.json"));
        const bft::MassFunction m = bft::reconstruct_tau(pc);
        const bft::IsoDecomposition canonical = bft::decompose(m, bft::CommitmentForm::tau);
        std::string csv = csv_row({"subset", "mass", "ratio"});
        for (SubsetIndex f = 0; f < m.subset_count(); ++f) {
            const double ratio = bft::cardinality(f) >= 2 ? canonical.commitment.values[f] : 0.0;
            csv += csv_row({std::to_string(f), fmt(m[f]), fmt(ratio)});
        }
        write_output(csv, (out / "example3.csv").string());
    }

    // Example e4: all four decompositions of one BPA.
    {
        const bft::MassFunction m = bft::mass_from_json(load_fixture_text(fix, "e4_m.json"));
        const bft::IsoDecomposition dz = bft::decompose(m, bft::CommitmentForm::zeta);
        const bft::IsoDecomposition dt = bft::decompose(m, bft::CommitmentForm::tau);
        const bft::WeightFunction sigma = bft::smets_sigma(m);
        const bft::TFunction t = bft::pichon_t(m);
        auto iso_entry = [&](const bft::IsoDecomposition& d, SubsetIndex f) {
            if (f == 0) return d.empty_mass;
            if (bft::cardinality(f) == 1) {
                int i = std::countr_zero(f);
                return d.propensity.poss[static_cast<std::size_t>(i)];
            }
            return d.commitment.values[f];
        };
        std::string csv = csv_row({"subset", "iso_zeta", "iso_tau", "t", "sigma"});
        for (SubsetIndex f = 0; f < m.subset_count(); ++f) {
            const std::string sigma_cell =
                f == m.frame().full_set() ? "" : fmt(sigma.values[f]);
            csv += csv_row({std::to_string(f), fmt(iso_entry(dz, f)), fmt(iso_entry(dt, f)),
                            fmt(t.values[f]), sigma_cell});
        }
        write_output(csv, (out / "example4.csv").string());
    }

    // Example e5: isopignistic vectors and the measure table.
    {
        std::string table1 = csv_row({"m", "F0", "F1", "F2", "F3", "F4", "F5", "F6", "F7"});
        std::string table2 = csv_row({"m", "betp_w1", "betp_w2", "betp_w3", "yager",
                                      "propensity_spec", "commitment_spec"});
        for (int i = 1; i <= 7; ++i) {
            const std::string name = "m" + std::to_string(i);
            const bft::MassFunction m =
                bft::mass_from_json(load_fixture_text(fix, "e5_" + name + ".json"));
            const bft::IsoDecomposition d = bft::decompose(m, bft::CommitmentForm::zeta);
            std::vector<std::string> cells = {name};
            for (SubsetIndex f = 0; f < m.subset_count(); ++f) {
                double value;
                if (f == 0) {
                    value = d.empty_mass;
                } else if (bft::cardinality(f) == 1) {
                    value = d.propensity.poss[static_cast<std::size_t>(std::countr_zero(f))];
                } else {
                    value = d.commitment.values[f];
                }
                cells.push_back(fmt(value));
            }
            table1 += csv_row(cells);

            const auto p = bft::betp(m, false);
            const auto report = bft::measure(m);
            table2 += csv_row({name, fmt(p.probs[0]), fmt(p.probs[1]), fmt(p.probs[2]),
                               fmt(report.yager), fmt(report.propensity_spec),
                               report.commitment_spec ? fmt(*report.commitment_spec)
                                                      : "undefined"});
        }
        write_output(table1, (out / "table1.csv").string());
        write_output(table2, (out / "table2.csv").string());
    }

    // Example e6: the eight fusion rules, their pignistic views and entropies.
    {
        const bft::MassFunction m1 = bft::mass_from_json(load_fixture_text(fix, "e6_m1.json"));
        const bft::MassFunction m2 = bft::mass_from_json(load_fixture_text(fix, "e6_m2.json"));
        const std::vector<bft::MassFunction> pair = {m1, m2};
        std::string table3 = fusion_table_csv(pair);
        std::string table4 =
            csv_row({"rule", "betp_w1", "betp_w2", "betp_w3", "order", "entropy_bits"});
        for (const std::string& rule : all_rules()) {
            const bft::MassFunction fused = run_rule(rule, pair);
            const auto p = bft::betp(fused, true);
            table4 += csv_row({rule, fmt(p.probs[0]), fmt(p.probs[1]), fmt(p.probs[2]),
                               order_string(p.probs), fmt(bft::shannon_entropy(p))});
        }
        write_output(table3, (out / "table3.csv").string());
        write_output(table4, (out / "table4.csv").string());
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dempster-Shafer belief-function engine"};
    app.require_subcommand(1);

    // transform
    std::string tr_kind = "q";
    std::string tr_input;
    std::string tr_out;
    CLI::App* transform = app.add_subcommand("transform", "set-function and pignistic views");
    transform->add_option("--kind", tr_kind, "bel|pl|b|q|betp|betpn")->required();
    transform->add_option("input", tr_input, "canonical mass JSON ('-' for stdin)")->required();
    transform->add_option("--out", tr_out, "output path (default stdout)");

    // decompose
    std::string de_form = "tau";
    std::string de_input;
    std::string de_out;
    CLI::App* decompose = app.add_subcommand("decompose", "canonical decompositions");
    decompose->add_option("--form", de_form, "tau|zeta|sigma|v|t")->required();
    decompose->add_option("input", de_input, "canonical mass JSON")->required();
    decompose->add_option("--out", de_out, "output path");

    // reconstruct
    std::string re_input;
    std::string re_out;
    CLI::App* reconstruct = app.add_subcommand(
        "reconstruct", "invert a decomposition document back to a mass function");
    reconstruct->add_option("input", re_input, "decomposition/weight/t JSON")->required();
    reconstruct->add_option("--out", re_out, "output path");

    // fuse
    std::string fu_rule = "ccr";
    bool fu_normalize = false;
    bool fu_table = false;
    std::vector<std::string> fu_inputs;
    std::string fu_out;
    CLI::App* fuse = app.add_subcommand("fuse", "combination rules");
    fuse->add_option("--rule", fu_rule, "ccr|dcr|cautious|bold|hmin|hprod|hmax|hprobsum");
    fuse->add_flag("--normalize", fu_normalize, "renormalize the nonempty part afterwards");
    fuse->add_flag("--table", fu_table, "emit a CSV across all eight rules instead");
    fuse->add_option("inputs", fu_inputs, "two or more mass JSON paths")->required();
    fuse->add_option("--out", fu_out, "output path");

    // measure
    std::string me_input;
    std::string me_out;
    CLI::App* measure = app.add_subcommand("measure", "specificity and entropy report");
    measure->add_option("input", me_input, "canonical mass JSON")->required();
    measure->add_option("--out", me_out, "output path");

    // ben
    std::string ben_net;
    std::string ben_input;
    std::string ben_out;
    CLI::App* ben = app.add_subcommand("ben", "belief-evolution revision");
    ben->add_option("--net", ben_net, "network JSON (default: pignistic network)");
    ben->add_option("input", ben_input, "canonical mass JSON")->required();
    ben->add_option("--out", ben_out, "output path");

    // sweep
    std::string sw_kind = "iso_tau";
    unsigned sw_subset = 0;
    double sw_lo = 0.0, sw_hi = 0.0;
    bool sw_lo_set = false, sw_hi_set = false;
    int sw_steps = 41;
    std::string sw_input;
    std::string sw_out;
    CLI::App* sweep = app.add_subcommand("sweep", "perturb one decomposition entry over a grid");
    sweep->add_option("--kind", sw_kind, "iso_tau|sigma|t")->required();
    sweep->add_option("--subset", sw_subset, "subset index to perturb")->required();
    sweep->add_option("--lo", sw_lo, "grid start")->each([&](const std::string&) { sw_lo_set = true; });
    sweep->add_option("--hi", sw_hi, "grid end")->each([&](const std::string&) { sw_hi_set = true; });
    sweep->add_option("--steps", sw_steps, "grid points (default 41)");
    sweep->add_option("input", sw_input, "canonical mass JSON")->required();
    sweep->add_option("--out", sw_out, "output path");

    // random
    std::uint64_t rnd_seed = 0;
    int rnd_n = 3;
    int rnd_count = 1;
    std::string rnd_kind = "any";
    std::string rnd_out;
    CLI::App* random_cmd = app.add_subcommand("random", "seeded random mass functions");
    random_cmd->add_option("--seed", rnd_seed, "PRNG seed")->required();
    random_cmd->add_option("--n", rnd_n, "frame size");
    random_cmd->add_option("--count", rnd_count, "number of draws");
    random_cmd->add_option("--kind", rnd_kind,
                           "any|normalized|consonant|bayesian|nondogmatic|subnormal");
    random_cmd->add_option("--out", rnd_out, "output path");

    // tables
    std::string tb_fixtures = "fixtures";
    std::string tb_out = ".";
    CLI::App* tables = app.add_subcommand("tables", "regenerate the fixture-driven CSV tables");
    tables->add_option("--fixtures", tb_fixtures, "fixture directory (default ./fixtures)");
    tables->add_option("--out", tb_out, "output directory (default .)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*transform) {
            const bft::MassFunction m = load_mass(tr_input);
            std::string text;
            if (tr_kind == "betp" || tr_kind == "betpn") {
                text = bft::to_json(bft::betp(m, tr_kind == "betpn"));
            } else {
                bft::SetFunctionKind kind;
                if (tr_kind == "bel") kind = bft::SetFunctionKind::belief;
                else if (tr_kind == "pl") kind = bft::SetFunctionKind::plausibility;
                else if (tr_kind == "b") kind = bft::SetFunctionKind::implicability;
                else if (tr_kind == "q") kind = bft::SetFunctionKind::commonality;
                else throw bft::Error("unknown transform kind: " + tr_kind);
                text = bft::to_json(bft::set_transform(m, kind));
            }
            write_output(text, tr_out);
        } else if (*decompose) {
            const bft::MassFunction m = load_mass(de_input);
            std::string text;
            if (de_form == "tau" || de_form == "zeta") {
                const auto form = de_form == "tau" ? bft::CommitmentForm::tau
                                                   : bft::CommitmentForm::zeta;
                text = bft::to_json(bft::decompose(m, form));
            } else if (de_form == "sigma") {
                text = bft::to_json(bft::smets_sigma(m));
            } else if (de_form == "v") {
                text = bft::to_json(bft::smets_v(m));
            } else if (de_form == "t") {
                text = bft::to_json(bft::pichon_t(m));
            } else {
                throw bft::Error("unknown decomposition form: " + de_form);
            }
            write_output(text, de_out);
        } else if (*reconstruct) {
            const std::string text = read_input(re_input);
            nlohmann::ordered_json doc;
            try {
                doc = nlohmann::ordered_json::parse(text);
            } catch (const nlohmann::json::exception& e) {
                throw bft::ParseError(std::string("invalid JSON: ") + e.what());
            }
            bft::MassFunction m = [&]() {
                if (doc.contains("form")) {
                    const bft::IsoDecomposition d = bft::decomposition_from_json(text);
                    return d.commitment.form == bft::CommitmentForm::tau
                               ? bft::reconstruct_tau(d)
                               : bft::reconstruct_zeta(d);
                }
                if (doc.contains("kind") && doc["kind"] == "t") {
                    return bft::mass_from_t(bft::t_from_json(text));
                }
                if (doc.contains("kind")) {
                    const bft::WeightFunction w = bft::weights_from_json(text);
                    return w.kind == bft::WeightKind::sigma ? bft::mass_from_sigma(w)
                                                            : bft::mass_from_v(w);
                }
                throw bft::ParseError("document is not a decomposition (no form/kind field)");
            }();
            write_output(bft::to_json(m), re_out);
        } else if (*fuse) {
            const std::vector<bft::MassFunction> ms = load_mass_list(fu_inputs);
            if (ms.size() < 2) throw bft::Error("fusion needs at least two inputs");
            if (fu_table) {
                write_output(fusion_table_csv(ms), fu_out);
            } else {
                bft::MassFunction fused = run_rule(fu_rule, ms);
                if (fu_normalize) fused = bft::normalized(fused);
                write_output(bft::to_json(fused), fu_out);
            }
        } else if (*measure) {
            write_output(bft::to_json(bft::measure(load_mass(me_input))), me_out);
        } else if (*ben) {
            const bft::MassFunction m = load_mass(ben_input);
            const bft::BeliefEvolutionNetwork net =
                ben_net.empty() ? bft::ppt_network(m.frame())
                                : bft::network_from_json(read_input(ben_net));
            write_output(bft::to_json(bft::revise(m, net)), ben_out);
        } else if (*sweep) {
            if (sw_kind != "iso_tau" && sw_kind != "sigma" && sw_kind != "t") {
                throw bft::Error("unknown sweep kind: " + sw_kind);
            }
            const double lo = sw_lo_set ? sw_lo : (sw_kind == "sigma" ? 0.0 : -1.0);
            const double hi = sw_hi_set ? sw_hi : (sw_kind == "sigma" ? 2.0 : 1.0);
            if (!(lo < hi)) throw bft::Error("sweep range must satisfy lo < hi");
            const bft::MassFunction base = load_mass(sw_input);
            write_output(sweep_csv(sw_kind, base, sw_subset, lo, hi, sw_steps), sw_out);
        } else if (*random_cmd) {
            bft::BpaSampler sampler(rnd_seed);
            const bft::Frame frame(rnd_n);
            const bft::BpaKind kind = bft::bpa_kind_from_string(rnd_kind);
            if (rnd_count < 1) throw bft::Error("count must be positive");
            if (rnd_count == 1) {
                write_output(bft::to_json(sampler.sample(frame, kind)), rnd_out);
            } else {
                std::string text = "[";
                for (int i = 0; i < rnd_count; ++i) {
                    if (i) text += ",";
                    text += bft::to_json(sampler.sample(frame, kind));
                }
                text += "]";
                write_output(text, rnd_out);
            }
        } else if (*tables) {
            emit_tables(tb_fixtures, tb_out);
        }
    } catch (const bft::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const bft::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
