#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cochad/basis.hpp"
#include "cochad/cocycle.hpp"
#include "cochad/equations.hpp"
#include "cochad/error.hpp"
#include "cochad/hadamard.hpp"
#include "cochad/ideal.hpp"
#include "cochad/search.hpp"

namespace py = pybind11;
using namespace cochad;

namespace {

using Rows = std::vector<std::vector<int>>;

Rows to_rows(const SignMatrix& m) {
    Rows r(m.size(), std::vector<int>(m.size()));
    for (std::size_t i = 1; i <= m.size(); ++i)
        for (std::size_t j = 1; j <= m.size(); ++j) r[i - 1][j - 1] = m(i, j);
    return r;
}

SignMatrix from_rows(const Rows& rows) {
    SignMatrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.size()) throw InvalidParameter("matrix must be square");
        for (std::size_t j = 0; j < rows.size(); ++j) {
            if (rows[i][j] != 1 && rows[i][j] != -1) throw InvalidParameter("matrix entries must be +1 or -1");
            m.set(i + 1, j + 1, rows[i][j]);
        }
    }
    return m;
}

}  // namespace

PYBIND11_MODULE(_cochad, m) {
    m.doc() = "Cocyclic Hadamard matrices: enumeration, masked search, verification and ideal export";

    static py::exception<ResourceLimit> resource_exc(m, "ResourceLimitError");
    static py::exception<ParseError> parse_exc(m, "GroupParseError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const ResourceLimit& e) {
            resource_exc(e.what());
        } catch (const ParseError& e) {
            parse_exc(e.what());
        }
    });

    py::class_<GroupTable>(m, "GroupTable")
        .def_property_readonly("order", &GroupTable::order)
        .def_property_readonly("t", &GroupTable::t)
        .def_property_readonly("family", [](const GroupTable& g) { return std::string(family_name(g.family())); })
        .def("mul", &GroupTable::mul, py::arg("i"), py::arg("j"), "Product index of g_i g_j (1-based)")
        .def("inv", &GroupTable::inv, py::arg("i"))
        .def("is_commutative", &GroupTable::is_commutative)
        .def("to_text", [](const GroupTable& g) { return format_group_table(g); })
        .def("__eq__", [](const GroupTable& a, const GroupTable& b) { return a == b; });

    m.def("make_group", [](const std::string& family, int t) { return make_group(parse_family(family), t); },
          py::arg("family"), py::arg("t"));
    m.def("load_custom_group", [](const std::string& text) { return load_custom_group(text); }, py::arg("text"));

    py::class_<BasisDescriptor>(m, "BasisDescriptor")
        .def_readonly("cob_indices", &BasisDescriptor::cob_indices)
        .def_readonly("required_rows", &BasisDescriptor::required_rows)
        .def_readonly("k", &BasisDescriptor::k)
        .def_readonly("m", &BasisDescriptor::m)
        .def_property_readonly("num_vars", &BasisDescriptor::num_vars)
        .def_property_readonly("m_rho", [](const BasisDescriptor& b) { return to_rows(b.m_rho); })
        .def_property_readonly("group", [](const BasisDescriptor& b) { return b.group; });

    m.def("family_basis", [](const std::string& family, int t) { return family_basis(parse_family(family), t); },
          py::arg("family"), py::arg("t"));
    m.def("j_index",
          [](const std::string& family, int t, int s, int c) { return j_index(parse_family(family), t, s, c); },
          py::arg("family"), py::arg("t"), py::arg("s"), py::arg("c"));

    m.def("is_hadamard", [](const Rows& rows) { return is_hadamard(from_rows(rows)); }, py::arg("matrix"));
    m.def("row_sum_test", [](const Rows& rows, const std::vector<std::size_t>& which) {
        return row_sum_test(from_rows(rows), which);
    }, py::arg("matrix"), py::arg("rows"));
    m.def("is_cocycle", [](const GroupTable& g, const Rows& rows) { return is_cocycle(g, from_rows(rows)); },
          py::arg("group"), py::arg("matrix"));

    m.def("diagram_of", [](int t, const std::vector<int>& support) {
        const Diagram d = diagram_of(t, support);
        py::dict out;
        out["text"] = d.to_text();
        out["col"] = d.col;
        out["dist"] = std::vector<int>(d.dist.begin(), d.dist.end());
        out["parity"] = satisfies_column_parity(d);
        return out;
    }, py::arg("t"), py::arg("support"));

    m.def("cocycle_space_dim", [](const GroupTable& g) { return cocycle_space_basis(g).dim; }, py::arg("group"));

    m.def("enumerate_hadamard_cocycles", [](const GroupTable& g, bool count_only, unsigned threads, int budget_log2) {
        EnumerationOptions opts;
        opts.threads = threads;
        opts.budget_log2 = budget_log2;
        EnumerationResult r;
        {
            py::gil_scoped_release release;
            r = enumerate_hadamard_cocycles(g, count_only, opts);
        }
        py::dict out;
        out["count"] = r.count;
        out["dim"] = r.dim;
        py::list cocycles;
        for (const auto& c : r.cocycles) cocycles.append(to_rows(c.to_matrix()));
        out["cocycles"] = cocycles;
        return out;
    }, py::arg("group"), py::arg("count_only") = true, py::arg("threads") = 1u, py::arg("budget_log2") = 30);

    m.def("search", [](const std::string& family, int t, const std::string& fix, const std::vector<std::string>& filters,
                       std::optional<std::vector<int>> dist, std::optional<std::vector<int>> col, bool count_only,
                       unsigned threads) {
        const BasisDescriptor b = family_basis(parse_family(family), t);
        SearchFilters f;
        for (const auto& name : filters) {
            if (name == "symmetry") f.symmetry = true;
            else if (name == "parity") f.parity = true;
            else throw InvalidParameter("unknown filter '" + name + "'");
        }
        f.dist_target = std::move(dist);
        f.col_target = std::move(col);
        SearchOptions opts;
        opts.threads = threads;
        const FixMask mask = FixMask::parse(b, fix);
        SolutionSet r;
        {
            py::gil_scoped_release release;
            r = search(b, mask, f, count_only, opts);
        }
        py::dict out;
        out["count"] = r.count;
        py::list sols;
        for (const auto& x : r.solutions) sols.append(support_from_coordinates(b, x));
        out["solutions"] = sols;
        out["nodes"] = r.stats.nodes;
        return out;
    }, py::arg("family"), py::arg("t"), py::arg("fix") = "", py::arg("filters") = std::vector<std::string>{},
       py::arg("dist") = py::none(), py::arg("col") = py::none(), py::arg("count_only") = false,
       py::arg("threads") = 1u);

    m.def("verify_support", [](const std::string& family, int t, const std::vector<int>& cob) {
        const VerifyResult r = verify_support(parse_family(family), t, cob);
        return py::make_tuple(r.hadamard, to_rows(r.matrix));
    }, py::arg("family"), py::arg("t"), py::arg("cob"));

    m.def("emit_ideal", [](const std::string& kind, const std::string& family, int t, const std::string& syntax) {
        const Syntax s = parse_syntax(syntax);
        if (kind == "ig") return render(emit_IG(make_group(parse_family(family), t)), s, "IG");
        if (kind == "jg") {
            const BasisDescriptor b = family_basis(parse_family(family), t);
            return render(emit_JG(b, build_system(b)), s, "JG");
        }
        throw InvalidParameter("kind must be ig or jg");
    }, py::arg("kind"), py::arg("family"), py::arg("t"), py::arg("syntax") = "plain");

    m.def("eval_generators", [](const std::string& plain_text, const std::vector<long long>& point) {
        std::vector<Rational> p(point.begin(), point.end());
        const auto values = eval_generators(parse_plain(plain_text), p);
        py::object fraction = py::module_::import("fractions").attr("Fraction");
        py::list out;
        for (const auto& v : values) out.append(fraction(v.numerator(), v.denominator()));
        return out;
    }, py::arg("plain_text"), py::arg("point"));
}
