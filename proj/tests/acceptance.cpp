// Acceptance suite: one line per criterion, zero tolerance on every identity.
// An optional argv[1] names the CLI binary, used for the byte-determinism
// criterion; without it the export path is exercised in-process.

#include "modrep/export.hpp"
#include "modrep/verify.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace modrep;

namespace {

int failures = 0;

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    }
};

void report(int num, bool pass, const std::string& what, double secs) {
    std::printf("criterion %2d: %s  %s [%.2fs]\n", num, pass ? "PASS" : "FAIL",
                what.c_str(), secs);
    if (!pass) ++failures;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<Partition> sym_shapes(int p) {
    std::vector<Partition> out;
    for (const auto& lam : partitions_of(p))
        if (classify(lam, p).in_cp) out.push_back(lam);
    return out;
}

std::vector<Partition> sergeev_shapes(int p) {
    std::vector<Partition> out;
    for (const auto& xi : partitions_of(p, PartitionMode::Strict))
        if (classify(xi, p).in_cps) out.push_back(xi);
    return out;
}

} // namespace

int main(int argc, char** argv) {
    std::string cli = argc > 1 ? argv[1] : "";

    std::map<int, std::vector<SymRep>> sym_built;
    std::map<int, std::vector<SergeevRep>> ser_built;

    // 1. symmetric dimension tables
    {
        Timer t;
        bool ok = true;
        for (int p : {3, 5, 7}) {
            FieldCtx F = make_field(p);
            std::size_t legal = 0;
            for (const auto& lam : partitions_of(p)) {
                bool in_class = classify(lam, p).in_cp;
                if (!in_class) {
                    try {
                        build_sym(lam, F);
                        ok = false; // (1^p) must be rejected
                    } catch (const std::invalid_argument&) {
                    }
                    continue;
                }
                ++legal;
                SymRep rep = build_sym(lam, F);
                unsigned long long formula = dim_sym(lam, p);
                unsigned long long oracle =
                    p_standard_tableaux(lam, DiagramKind::Straight, p).size();
                if (static_cast<unsigned long long>(rep.dim) != formula) ok = false;
                if (oracle != formula) ok = false;
                sym_built[p].push_back(std::move(rep));
            }
            if (legal + 1 != partitions_of(p).size()) ok = false;
        }
        // p = 5 dimension multiset
        std::multiset<unsigned long long> dims;
        for (const auto& rep : sym_built[5])
            dims.insert(static_cast<unsigned long long>(rep.dim));
        if (dims != std::multiset<unsigned long long>{1, 3, 5, 5, 3, 1}) ok = false;
        ok = ok && t.seconds() < 10.0;
        report(1, ok, "symmetric dimension tables, p in {3,5,7}", t.seconds());
    }

    // 4. Sergeev dimension tables (built before 2 so the relation suite can
    //    cover both families)
    {
        Timer t;
        bool ok = true;
        for (int p : {3, 5, 7}) {
            FieldCtx F = make_field(p);
            std::set<std::vector<int>> legal;
            for (const auto& xi : sergeev_shapes(p)) legal.insert(xi.parts);
            // succeeds exactly on SP(p) minus (p)
            std::set<std::vector<int>> expected;
            for (const auto& xi : partitions_of(p, PartitionMode::Strict))
                if (!(xi.length() == 1)) expected.insert(xi.parts);
            if (legal != expected) ok = false;
            try {
                build_sergeev(Partition({p}), F);
                ok = false;
            } catch (const std::invalid_argument&) {
            }
            for (const auto& xi : sergeev_shapes(p)) {
                SergeevRep rep = build_sergeev(xi, F);
                SergeevDim cf = dim_sergeev(xi, p);
                if (static_cast<unsigned long long>(rep.dim) != cf.dim) ok = false;
                if (rep.type != cf.type) ok = false;
                ser_built[p].push_back(std::move(rep));
            }
        }
        auto dim_of = [&](int p, std::vector<int> parts) -> unsigned long long {
            for (const auto& rep : ser_built[p])
                if (rep.xi.parts == parts)
                    return static_cast<unsigned long long>(rep.dim);
            return 0;
        };
        if (dim_of(3, {2, 1}) != 4) ok = false;
        if (dim_of(5, {4, 1}) != 16) ok = false;
        if (dim_of(5, {3, 2}) != 32) ok = false;
        ok = ok && !ser_built[7].empty();
        report(4, ok, "Sergeev dimension tables, p in {3,5,7}", t.seconds());
    }

    // 2. relation suite over everything built in 1 and 4
    {
        Timer t;
        bool ok = true;
        for (int p : {3, 5, 7}) {
            FieldCtx F = make_field(p);
            for (const auto& rep : sym_built[p]) {
                if (!check_relations(rep, F).empty()) ok = false;
                if (!check_jm(rep, F).empty()) ok = false;
            }
            for (const auto& rep : ser_built[p]) {
                if (!check_relations(rep, F).empty()) ok = false;
                if (!check_jm(rep, F).empty()) ok = false;
            }
        }
        ok = ok && t.seconds() < 60.0;
        report(2, ok, "exact relation and Jucys-Murphy suite", t.seconds());
    }

    // 3. hook-formula oracle
    {
        Timer t;
        bool ok = true;
        for (int n = 1; n <= 8; ++n) {
            for (const auto& lam : partitions_of(n))
                if (standard_tableaux(lam, DiagramKind::Straight).size() !=
                    count_standard_hook(lam, DiagramKind::Straight))
                    ok = false;
            for (const auto& lam : partitions_of(n, PartitionMode::Strict))
                if (standard_tableaux(lam, DiagramKind::Shifted).size() !=
                    count_standard_hook(lam, DiagramKind::Shifted))
                    ok = false;
        }
        ok = ok && t.seconds() < 30.0;
        report(3, ok, "hook-length formula vs enumeration, n <= 8", t.seconds());
    }

    // 5. factoring through the finite quotient: x1 = 0 and L_k = x_k
    {
        Timer t;
        bool ok = true;
        for (int p : {3, 5, 7}) {
            FieldCtx F = make_field(p);
            for (const auto& rep : ser_built[p]) {
                if (!rep.X.front().is_zero()) ok = false;
                std::vector<Mat> L = jm_sergeev(rep, F);
                for (std::size_t k = 0; k < L.size(); ++k)
                    if (!(L[k] == rep.X[k])) ok = false;
            }
        }
        report(5, ok, "x1 = 0 and L_k = x_k on every Sergeev module", t.seconds());
    }

    // 6. type detection via the graded commutant
    {
        Timer t;
        bool ok = true;
        int checked = 0, type_q_seen = 0;
        for (int p : {5, 7}) {
            FieldCtx F = make_field(p);
            for (int n = 1; n <= p; ++n) {
                for (const auto& xi : partitions_of(n, PartitionMode::Strict)) {
                    if (!classify(xi, p).in_cps) continue;
                    SergeevDim cf = dim_sergeev(xi, p);
                    if (cf.dim > 128) continue;
                    SergeevRep rep = build_sergeev(xi, F);
                    CommutantResult expect{1, cf.type == SuperType::Q ? 1 : 0};
                    if (cf.type == SuperType::Q) ++type_q_seen;
                    CommutantResult got = super_commutant_dim(view_of(rep), F, 128);
                    if (!(got == expect)) ok = false;
                    ++checked;
                }
            }
        }
        ok = ok && checked > 0 && type_q_seen > 0 && t.seconds() < 600.0;
        report(6, ok,
               "commutant (1,0)/(1,1) matches the type rule, p in {5,7}, dim <= 128",
               t.seconds());
    }

    // 7. irreducibility evidence
    {
        Timer t;
        bool ok = true;
        for (int p : {3, 5, 7}) {
            FieldCtx F = make_field(p);
            for (const auto& rep : sym_built[p])
                if (find_proper_graded_submodule(view_of(rep), 100, 20240901, F))
                    ok = false;
            for (const auto& rep : ser_built[p])
                if (find_proper_graded_submodule(view_of(rep), 100, 20240901, F))
                    ok = false;
        }
        // reducible controls
        {
            FieldCtx F = make_field(5);
            SymRep srep = build_sym(Partition({3, 2}), F);
            OwnedModule ssum = direct_sum(view_of(srep), view_of(srep), F);
            if (!find_proper_graded_submodule(ssum.view(), 5, 20240901, F)) ok = false;
            SergeevRep vrep = build_sergeev(Partition({4, 1}), F);
            OwnedModule vsum = direct_sum(view_of(vrep), view_of(vrep), F);
            if (!find_proper_graded_submodule(vsum.view(), 5, 20240901, F)) ok = false;
        }
        report(7, ok, "randomized graded submodule search", t.seconds());
    }

    // 8. classification boundary
    {
        Timer t;
        auto rows = cross_check_suite({3, 5, 7}, 12);
        bool ok = !rows.empty();
        for (const auto& r : rows)
            if (!r.pass) ok = false;
        bool witnessed = false;
        for (const auto& r : rows)
            if (r.n > r.p && !r.data.empty()) witnessed = true;
        ok = ok && witnessed;
        report(8, ok, "classification boundary, p in {3,5,7}, n <= 12", t.seconds());
    }

    // 9. radical dimensions on hooks at n = p
    {
        Timer t;
        bool ok = true;
        for (int p : {3, 5, 7}) {
            for (int k = 2; k <= p; ++k) {
                std::vector<int> parts{k};
                for (int i = 0; i < p - k; ++i) parts.push_back(1);
                Partition lam(parts);
                unsigned long long rad = radical_dim(lam, p);
                if (rad != binomial(p - 2, k - 1)) ok = false;
                if (rad != count_standard_hook(lam, DiagramKind::Straight) -
                               dim_sym(lam, p))
                    ok = false;
            }
        }
        report(9, ok, "radical dimensions on hooks, p in {3,5,7}", t.seconds());
    }

    // 10. byte-identical build exports
    {
        Timer t;
        bool ok = true;
        if (!cli.empty()) {
            std::string out1 = "acceptance_det_1.json";
            std::string out2 = "acceptance_det_2.json";
            for (const std::string& args :
                 {std::string("build --algebra sym --p 5 --shape 3,2 --output "),
                  std::string("build --algebra sergeev --p 5 --shape 3,2 --output ")}) {
                std::string c1 = cli + " " + args + out1 + " > /dev/null";
                std::string c2 = cli + " " + args + out2 + " > /dev/null";
                if (std::system(c1.c_str()) != 0) ok = false;
                if (std::system(c2.c_str()) != 0) ok = false;
                std::string d1 = slurp(out1), d2 = slurp(out2);
                if (d1.empty() || d1 != d2) ok = false;
            }
            std::remove(out1.c_str());
            std::remove(out2.c_str());
        } else {
            FieldCtx F = make_field(5);
            std::string a = export_sergeev(build_sergeev(Partition({3, 2}), F), F);
            std::string b = export_sergeev(build_sergeev(Partition({3, 2}), F), F);
            ok = !a.empty() && a == b;
        }
        report(10, ok, "byte-identical exports across runs", t.seconds());
    }

    if (failures == 0)
        std::printf("acceptance: all criteria passed\n");
    else
        std::printf("acceptance: %d criteria FAILED\n", failures);
    return failures;
}
