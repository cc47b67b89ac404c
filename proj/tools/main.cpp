#include <CLI11.hpp>

#include "modrep/export.hpp"
#include "modrep/verify.hpp"

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace modrep;

namespace {

constexpr int kExitCheckFailed = 1;
constexpr int kExitBadP = 2;
constexpr int kExitBadShape = 3;
constexpr int kExitNoOutput = 4;

constexpr unsigned long long kDefaultSeed = 20240901ull;

struct BadShape : std::runtime_error {
    using std::runtime_error::runtime_error;
};

FieldCtx field_for(int p) {
    try {
        return make_field(p);
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid p: " << e.what() << "\n";
        std::exit(kExitBadP);
    }
}

Partition parse_shape(const std::string& text) {
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            parts.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw BadShape("cannot parse shape part '" + item + "'");
        }
    }
    if (parts.empty()) throw BadShape("empty shape");
    try {
        return Partition(parts);
    } catch (const std::invalid_argument& e) {
        throw BadShape(e.what());
    }
}

std::string flag(bool b) { return b ? "yes" : "no"; }

void run_list(const std::string& algebra, int p, int n) {
    FieldCtx F = field_for(p);
    auto shapes = partitions_of(n);
    if (algebra == "sym") {
        std::printf("%-16s %-9s %-4s %-11s %-6s %-7s\n", "shape", "p-regular", "chi",
                    "splittable", "dim", "radical");
        for (const auto& lam : shapes) {
            auto c = classify(lam, p);
            std::string dim = "-", rad = "-";
            if (n <= p && c.in_cp) {
                dim = std::to_string(dim_sym(lam, p));
                if (n == p) rad = std::to_string(radical_dim(lam, p));
            }
            std::printf("%-16s %-9s %-4d %-11s %-6s %-7s\n", lam.str().c_str(),
                        flag(c.p_regular).c_str(), c.chi, flag(c.in_cp).c_str(),
                        dim.c_str(), rad.c_str());
        }
    } else {
        std::printf("%-16s %-7s %-9s %-13s %-4s %-5s %-8s %-5s\n", "shape", "strict",
                    "p-strict", "p-restricted", "RP", "CPs", "dim", "type");
        for (const auto& lam : shapes) {
            auto c = classify(lam, p);
            std::string dim = "-", type = "-";
            if (n <= p && c.in_cps) {
                SergeevDim sd = dim_sergeev(lam, p);
                dim = std::to_string(sd.dim);
                type = to_string(sd.type);
            }
            std::printf("%-16s %-7s %-9s %-13s %-4s %-5s %-8s %-5s\n",
                        lam.str().c_str(), flag(c.strict).c_str(),
                        flag(c.p_strict).c_str(), flag(c.p_restricted).c_str(),
                        flag(c.in_rp).c_str(), flag(c.in_cps).c_str(), dim.c_str(),
                        type.c_str());
        }
    }
}

void run_dim(const std::string& algebra, int p, const Partition& shape) {
    field_for(p);
    if (algebra == "sym")
        std::printf("%llu\n", dim_sym(shape, p));
    else
        std::printf("%llu\n", dim_sergeev(shape, p).dim);
}

void run_build(const std::string& algebra, int p, const Partition& shape,
               const std::string& output) {
    FieldCtx F = field_for(p);
    std::string doc;
    if (algebra == "sym")
        doc = export_sym(build_sym(shape, F), F);
    else
        doc = export_sergeev(build_sergeev(shape, F), F);
    atomic_write(output, doc);
    std::printf("wrote %s\n", output.c_str());
}

void run_residues(const std::string& algebra, int p, const Partition& shape) {
    field_for(p);
    DiagramKind kind = algebra == "sym" ? DiagramKind::Straight : DiagramKind::Shifted;
    if (kind == DiagramKind::Shifted && !classify(shape, p).strict)
        throw BadShape("residues: shifted diagrams need a strict partition");
    for (int i = 1; i <= shape.length(); ++i) {
        std::string line;
        int cb = kind == DiagramKind::Shifted ? i : 1;
        for (int j = 1; j < cb; ++j) line += "  ";
        for (int j = cb; j <= cb + shape.part(i) - 1; ++j)
            line += std::to_string(residue(Node{i, j}, p, kind)) + " ";
        std::printf("%s\n", line.c_str());
    }
}

std::vector<CheckOutcome> verify_one(const std::string& algebra, const Partition& shape,
                                     const FieldCtx& F, int trials,
                                     unsigned long long seed, int cap) {
    std::vector<CheckOutcome> out;
    auto run_checks = [&](const auto& rep, CommutantResult expected) {
        ViolationReport rel = check_relations(rep, F);
        out.push_back({"relations", rel.empty(),
                       rel.empty() ? "" : rel.front().relation});
        ViolationReport jm = check_jm(rep, F);
        out.push_back({"jucys-murphy", jm.empty(),
                       jm.empty() ? "" : jm.front().relation});
        ModuleView view = view_of(rep);
        if (view.dim <= cap) {
            CommutantResult c = super_commutant_dim(view, F, cap);
            bool ok = c == expected;
            out.push_back({"commutant", ok,
                           "(" + std::to_string(c.even_dim) + "," +
                               std::to_string(c.odd_dim) + ")"});
        } else {
            out.push_back({"commutant", true, "skipped: dim > cap"});
        }
        auto witness = find_proper_graded_submodule(view, trials, seed, F);
        out.push_back({"submodule-search", !witness.has_value(),
                       witness ? "proper submodule found" : "none"});
    };
    if (algebra == "sym") {
        run_checks(build_sym(shape, F), CommutantResult{1, 0});
    } else {
        SergeevDim sd = dim_sergeev(shape, F.p());
        CommutantResult expected{1, sd.type == SuperType::Q ? 1 : 0};
        run_checks(build_sergeev(shape, F), expected);
    }
    return out;
}

int run_verify(const std::string& algebra, int p, const std::string& shape_text,
               int trials, unsigned long long seed, bool suite,
               const std::string& output) {
    FieldCtx F = field_for(p);
    std::vector<Partition> shapes;
    if (!shape_text.empty()) {
        shapes.push_back(parse_shape(shape_text));
    } else {
        for (const auto& lam : partitions_of(p)) {
            auto c = classify(lam, p);
            if (algebra == "sym" ? c.in_cp : c.in_cps) shapes.push_back(lam);
        }
    }
    bool all_pass = true;
    std::vector<std::pair<Partition, std::vector<CheckOutcome>>> results;
    for (const auto& shape : shapes) {
        auto checks = verify_one(algebra, shape, F, trials, seed, 128);
        for (const auto& c : checks) {
            std::printf("p=%d %s %s: %s %s%s%s\n", p, algebra.c_str(),
                        shape.str().c_str(), c.name.c_str(),
                        c.pass ? "PASS" : "FAIL", c.data.empty() ? "" : " ",
                        c.data.c_str());
            all_pass = all_pass && c.pass;
        }
        results.push_back({shape, std::move(checks)});
    }
    std::vector<CrossCheckRow> rows;
    if (suite) {
        rows = cross_check_suite({p}, 12);
        for (const auto& r : rows) {
            std::printf("p=%d n=%d %s: %s%s%s\n", r.p, r.n, r.check.c_str(),
                        r.pass ? "PASS" : "FAIL", r.data.empty() ? "" : " ",
                        r.data.c_str());
            all_pass = all_pass && r.pass;
        }
    }
    if (!output.empty()) atomic_write(output, export_report(p, algebra, results, rows));
    return all_pass ? 0 : kExitCheckFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact irreducible representations of symmetric groups and Sergeev "
                 "superalgebras in characteristic p"};
    app.require_subcommand(1);

    std::string algebra = "sym";
    int p = 0;
    int n_override = -1;
    std::string shape_text, output;
    int trials = 100;
    unsigned long long seed = kDefaultSeed;
    bool suite = false;

    auto add_common = [&](CLI::App* cmd, bool need_shape) {
        cmd->add_option("--algebra", algebra, "sym or sergeev")
            ->check(CLI::IsMember({"sym", "sergeev"}));
        cmd->add_option("--p", p, "odd prime characteristic")->required();
        auto* opt = cmd->add_option("--shape", shape_text,
                                    "partition as comma-separated parts, e.g. 4,1");
        if (need_shape) opt->required();
    };

    CLI::App* list = app.add_subcommand("list", "classification table for all shapes");
    add_common(list, false);
    list->add_option("--n", n_override, "list partitions of n (default p)");

    CLI::App* dim = app.add_subcommand("dim", "closed-form dimension");
    add_common(dim, true);

    CLI::App* build = app.add_subcommand("build", "construct and export a module");
    add_common(build, true);
    build->add_option("--output", output, "path for the export document");

    CLI::App* verify = app.add_subcommand("verify", "run the verification suite");
    add_common(verify, false);
    verify->add_option("--trials", trials, "submodule search trials (default 100)");
    verify->add_option("--seed", seed, "random seed (default fixed)");
    verify->add_flag("--suite", suite, "include the classification cross-checks");
    verify->add_option("--output", output, "path for the machine-readable report");

    CLI::App* residues =
        app.add_subcommand("residues", "print the residue-labelled diagram");
    add_common(residues, true);

    CLI11_PARSE(app, argc, argv);

    try {
        if (list->parsed()) {
            run_list(algebra, p, n_override > 0 ? n_override : p);
        } else if (dim->parsed()) {
            run_dim(algebra, p, parse_shape(shape_text));
        } else if (build->parsed()) {
            if (output.empty()) {
                std::cerr << "build: missing --output path\n";
                return kExitNoOutput;
            }
            run_build(algebra, p, parse_shape(shape_text), output);
        } else if (verify->parsed()) {
            return run_verify(algebra, p, shape_text, trials, seed, suite, output);
        } else if (residues->parsed()) {
            run_residues(algebra, p, parse_shape(shape_text));
        }
    } catch (const BadShape& e) {
        std::cerr << "illegal shape: " << e.what() << "\n";
        return kExitBadShape;
    } catch (const std::invalid_argument& e) {
        std::cerr << "illegal shape: " << e.what() << "\n";
        return kExitBadShape;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
    return 0;
}
