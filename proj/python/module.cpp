#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "modrep/export.hpp"
#include "modrep/verify.hpp"

namespace py = pybind11;
using namespace modrep;

namespace {

Partition to_partition(const std::vector<int>& parts) { return Partition(parts); }

Tableau to_tableau(const std::vector<std::vector<int>>& rows, bool shifted) {
    Tableau t;
    std::vector<int> parts;
    for (const auto& r : rows) parts.push_back(static_cast<int>(r.size()));
    t.shape = Partition(parts);
    t.kind = shifted ? DiagramKind::Shifted : DiagramKind::Straight;
    t.rows = rows;
    return t;
}

py::dict classify_dict(const std::vector<int>& parts, int p) {
    auto c = classify(to_partition(parts), p);
    py::dict d;
    d["p_regular"] = c.p_regular;
    d["strict"] = c.strict;
    d["p_strict"] = c.p_strict;
    d["p_restricted"] = c.p_restricted;
    d["in_cp"] = c.in_cp;
    d["in_cps"] = c.in_cps;
    d["in_rp"] = c.in_rp;
    d["chi"] = c.chi;
    d["b"] = c.b;
    return d;
}

std::vector<std::vector<int>> tableau_rows(const Tableau& t) { return t.rows; }

py::dict verify_dict(const std::string& algebra, const std::vector<int>& parts, int p,
                     int trials, unsigned long long seed) {
    FieldCtx F = make_field(p);
    py::dict d;
    auto fill = [&](const auto& rep, CommutantResult expected) {
        d["relations_ok"] = check_relations(rep, F).empty();
        d["jm_ok"] = check_jm(rep, F).empty();
        ModuleView view = view_of(rep);
        d["dim"] = view.dim;
        if (view.dim <= 128) {
            CommutantResult c = super_commutant_dim(view, F);
            d["commutant"] = py::make_tuple(c.even_dim, c.odd_dim);
            d["commutant_ok"] = c == expected;
        }
        d["submodule_found"] =
            find_proper_graded_submodule(view, trials, seed, F).has_value();
    };
    if (algebra == "sym") {
        fill(build_sym(to_partition(parts), F), CommutantResult{1, 0});
    } else {
        SergeevDim sd = dim_sergeev(to_partition(parts), p);
        fill(build_sergeev(to_partition(parts), F),
             CommutantResult{1, sd.type == SuperType::Q ? 1 : 0});
    }
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact modular representations of symmetric groups and Sergeev "
              "superalgebras";

    m.def("field_info", [](int p) {
        FieldCtx F = make_field(p);
        return py::make_tuple(F.p(), F.delta());
    });

    m.def(
        "partitions",
        [](int n, bool strict) {
            std::vector<std::vector<int>> out;
            for (const auto& lam :
                 partitions_of(n, strict ? PartitionMode::Strict : PartitionMode::All))
                out.push_back(lam.parts);
            return out;
        },
        py::arg("n"), py::arg("strict") = false);

    m.def("classify", &classify_dict, py::arg("parts"), py::arg("p"));

    m.def("conjugate",
          [](const std::vector<int>& parts) { return conjugate(to_partition(parts)).parts; });

    m.def(
        "hook_length",
        [](const std::vector<int>& parts, int row, int col, bool shifted) {
            return hook_length(to_partition(parts), Node{row, col},
                               shifted ? DiagramKind::Shifted : DiagramKind::Straight);
        },
        py::arg("parts"), py::arg("row"), py::arg("col"), py::arg("shifted") = false);

    m.def(
        "count_standard",
        [](const std::vector<int>& parts, bool shifted) {
            return count_standard_hook(to_partition(parts), shifted
                                                                ? DiagramKind::Shifted
                                                                : DiagramKind::Straight);
        },
        py::arg("parts"), py::arg("shifted") = false);

    m.def(
        "standard_tableaux",
        [](const std::vector<int>& parts, bool shifted) {
            std::vector<std::vector<std::vector<int>>> out;
            for (const auto& t : standard_tableaux(
                     to_partition(parts),
                     shifted ? DiagramKind::Shifted : DiagramKind::Straight))
                out.push_back(tableau_rows(t));
            return out;
        },
        py::arg("parts"), py::arg("shifted") = false);

    m.def(
        "p_standard_tableaux",
        [](const std::vector<int>& parts, int p, bool shifted) {
            std::vector<std::vector<std::vector<int>>> out;
            for (const auto& t : p_standard_tableaux(
                     to_partition(parts),
                     shifted ? DiagramKind::Shifted : DiagramKind::Straight, p))
                out.push_back(tableau_rows(t));
            return out;
        },
        py::arg("parts"), py::arg("p"), py::arg("shifted") = false);

    m.def(
        "residue_table",
        [](const std::vector<int>& parts, int p, bool shifted) {
            Partition lam = to_partition(parts);
            DiagramKind kind = shifted ? DiagramKind::Shifted : DiagramKind::Straight;
            std::vector<std::vector<int>> out;
            for (int i = 1; i <= lam.length(); ++i) {
                std::vector<int> row;
                int cb = kind == DiagramKind::Shifted ? i : 1;
                for (int j = cb; j <= cb + lam.part(i) - 1; ++j)
                    row.push_back(residue(Node{i, j}, p, kind));
                out.push_back(std::move(row));
            }
            return out;
        },
        py::arg("parts"), py::arg("p"), py::arg("shifted") = false);

    m.def(
        "residue_sequence",
        [](const std::vector<std::vector<int>>& rows, int p, bool shifted) {
            return residue_sequence(to_tableau(rows, shifted), p);
        },
        py::arg("rows"), py::arg("p"), py::arg("shifted") = false);

    m.def("is_cs_weight", [](const std::vector<int>& w, int p) {
        return is_cs_weight(w, p);
    });

    m.def(
        "weight_orbit_json",
        [](const std::vector<int>& parts, int p) {
            Partition shape = to_partition(parts);
            Tableau seed = row_reading_tableau(shape, DiagramKind::Shifted);
            return export_orbit(shape, weight_orbit(seed, p));
        },
        py::arg("parts"), py::arg("p"));

    m.def("dim_sym", [](const std::vector<int>& parts, int p) {
        return dim_sym(to_partition(parts), p);
    });
    m.def("radical_dim", [](const std::vector<int>& parts, int p) {
        return radical_dim(to_partition(parts), p);
    });
    m.def("dim_sergeev", [](const std::vector<int>& parts, int p) {
        SergeevDim sd = dim_sergeev(to_partition(parts), p);
        return py::make_tuple(sd.dim, std::string(to_string(sd.type)));
    });

    m.def("build_sym_json", [](const std::vector<int>& parts, int p) {
        FieldCtx F = make_field(p);
        return export_sym(build_sym(to_partition(parts), F), F);
    });
    m.def("build_sergeev_json", [](const std::vector<int>& parts, int p) {
        FieldCtx F = make_field(p);
        return export_sergeev(build_sergeev(to_partition(parts), F), F);
    });

    m.def("verify_sym",
          [](const std::vector<int>& parts, int p, int trials, unsigned long long seed) {
              return verify_dict("sym", parts, p, trials, seed);
          },
          py::arg("parts"), py::arg("p"), py::arg("trials") = 100,
          py::arg("seed") = 20240901ull);
    m.def("verify_sergeev",
          [](const std::vector<int>& parts, int p, int trials, unsigned long long seed) {
              return verify_dict("sergeev", parts, p, trials, seed);
          },
          py::arg("parts"), py::arg("p"), py::arg("trials") = 100,
          py::arg("seed") = 20240901ull);

    m.def(
        "cross_check",
        [](const std::vector<int>& p_list, int n_max) {
            std::vector<py::dict> out;
            for (const auto& r : cross_check_suite(p_list, n_max)) {
                py::dict d;
                d["p"] = r.p;
                d["n"] = r.n;
                d["check"] = r.check;
                d["pass"] = r.pass;
                d["data"] = r.data;
                out.push_back(std::move(d));
            }
            return out;
        },
        py::arg("p_list"), py::arg("n_max") = 8);
}
