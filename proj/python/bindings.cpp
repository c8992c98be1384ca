#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cli.hpp"
#include "compstat/catalog.hpp"
#include "compstat/checks.hpp"
#include "compstat/engine.hpp"
#include "compstat/oracle.hpp"
#include "compstat/rational.hpp"

namespace py = pybind11;
using namespace compstat;

namespace {

py::int_ to_py(const BigInt& v) {
    std::string s = v.str();
    return py::reinterpret_steal<py::int_>(PyLong_FromString(s.c_str(), nullptr, 10));
}

BigInt from_py(const py::int_& v) { return BigInt(v.attr("__str__")().cast<std::string>()); }

CompositionClass class_arg(const std::string& name) {
    auto c = parse_class(name);
    if (!c) throw std::invalid_argument("unknown class: " + name);
    return *c;
}

Statistic stat_arg(const std::string& name) {
    auto s = parse_statistic(name);
    if (!s) throw std::invalid_argument("unknown statistic: " + name);
    return *s;
}

Substitution at_arg(const std::map<std::string, long long>& at) {
    Substitution sub;
    for (const auto& [k, v] : at) sub.set(parse_marker(k), v);
    return sub;
}

py::list to_py_list(const std::vector<BigInt>& v) {
    py::list out;
    for (const auto& c : v) out.append(to_py(c));
    return out;
}

// {(m, rises, levels, drops): count} for the x^n coefficient.
py::dict coefficient_table(const TruncatedSeries& s, int n) {
    py::dict out;
    for (const auto& [mono, c] : s.coeff(n).terms()) {
        py::tuple key = py::make_tuple(mono.exponent(Marker::Parts), mono.exponent(Marker::Rises),
                                       mono.exponent(Marker::Levels), mono.exponent(Marker::Drops));
        out[key] = to_py(c);
    }
    return out;
}

py::dict report_dict(const CheckReport& r) {
    py::list items;
    for (const auto& it : r.items) {
        py::dict d;
        d["name"] = it.name;
        d["ok"] = it.ok;
        d["expected"] = it.expected;
        d["observed"] = it.observed;
        d["detail"] = it.detail;
        items.append(d);
    }
    py::dict out;
    out["suite"] = r.suite;
    out["n_max"] = r.n_max;
    out["ok"] = r.ok();
    out["items"] = items;
    return out;
}

}  // namespace

PYBIND11_MODULE(_compstat, m) {
    m.doc() = "Rises, levels and drops in restricted compositions";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

    py::class_<TruncatedSeries>(m, "Series")
        .def_property_readonly("order", &TruncatedSeries::order)
        .def("coefficient", &coefficient_table, py::arg("n"))
        .def("scalar_coefficients",
             [](const TruncatedSeries& s) { return to_py_list(scalar_coefficients(s)); })
        .def("eval", [](const TruncatedSeries& s, const std::string& marker,
                        const py::int_& v) { return s.eval_marker(parse_marker(marker), from_py(v)); })
        .def("diff", [](const TruncatedSeries& s, const std::string& marker) {
            return s.diff_marker(parse_marker(marker));
        })
        .def("__add__", [](const TruncatedSeries& a, const TruncatedSeries& b) { return a + b; })
        .def("__sub__", [](const TruncatedSeries& a, const TruncatedSeries& b) { return a - b; })
        .def("__mul__", [](const TruncatedSeries& a, const TruncatedSeries& b) { return a * b; })
        .def("__eq__", [](const TruncatedSeries& a, const TruncatedSeries& b) { return a == b; })
        .def("__str__", &TruncatedSeries::to_string)
        .def("__repr__", [](const TruncatedSeries& s) {
            return "<Series order=" + std::to_string(s.order()) + ">";
        });

    m.def("parse_set", [](const std::string& spec) { return PartSet::parse(spec).spec(); },
          py::arg("spec"), "Canonical form of a set spec.");
    m.def("materialize", [](const std::string& spec, int n) { return materialize(parse_set(spec), n); },
          py::arg("spec"), py::arg("n"));

    m.def("class_gf",
          [](const std::string& cls, const std::string& set, int order,
             const std::map<std::string, long long>& at) {
              return class_gf(class_arg(cls), parse_set(set), order, at_arg(at));
          },
          py::arg("cls"), py::arg("set"), py::arg("order"),
          py::arg("at") = std::map<std::string, long long>{});
    m.def("joint_gf",
          [](const std::string& cls, const std::string& set, int order,
             const std::map<std::string, long long>& at) {
              return joint_gf(class_arg(cls), parse_set(set), order, at_arg(at));
          },
          py::arg("cls"), py::arg("set"), py::arg("order"),
          py::arg("at") = std::map<std::string, long long>{});
    m.def("via_system", [](const std::string& set, int order) {
        return comp_gf_via_system(parse_set(set), order);
    }, py::arg("set"), py::arg("order"));

    m.def("counts",
          [](const std::string& cls, const std::string& set, int order) {
              Substitution ones{{Marker::Parts, 1}, {Marker::Rises, 1}, {Marker::Levels, 1},
                                {Marker::Drops, 1}};
              return to_py_list(scalar_coefficients(class_gf(class_arg(cls), parse_set(set), order, ones)));
          },
          py::arg("cls"), py::arg("set"), py::arg("order"));
    m.def("totals",
          [](const std::string& cls, const std::string& set, const std::string& stat, int order) {
              return to_py_list(scalar_coefficients(
                  statistic_total(class_arg(cls), parse_set(set), stat_arg(stat), order)));
          },
          py::arg("cls"), py::arg("set"), py::arg("stat"), py::arg("order"));
    m.def("moments",
          [](const std::string& cls, const std::string& set, const std::string& stat, int order) {
              return to_py_list(scalar_coefficients(
                  moment_total(class_arg(cls), parse_set(set), stat_arg(stat), order)));
          },
          py::arg("cls"), py::arg("set"), py::arg("stat"), py::arg("order"));

    m.def("enumerate",
          [](const std::string& cls, const std::string& set, int n) {
              return oracle::enumerate_all(class_arg(cls), parse_set(set), n);
          },
          py::arg("cls"), py::arg("set"), py::arg("n"));
    m.def("oracle_joint",
          [](const std::string& cls, const std::string& set, int n) {
              py::dict out;
              for (const auto& [k, c] : oracle::joint_distribution(class_arg(cls), parse_set(set), n).counts)
                  out[py::make_tuple(k.parts, k.rises, k.levels, k.drops)] = c;
              return out;
          },
          py::arg("cls"), py::arg("set"), py::arg("n"));

    m.def("expand_rational",
          [](const std::vector<py::int_>& num, const std::vector<py::int_>& den, int order) {
              auto poly = [](const std::vector<py::int_>& v) {
                  std::vector<BigInt> c;
                  for (const auto& x : v) c.push_back(from_py(x));
                  return IntPoly(std::move(c));
              };
              return to_py_list(RationalGF(poly(num), poly(den)).expand(order));
          },
          py::arg("num"), py::arg("den"), py::arg("order"),
          "Coefficients of num/den, both given lowest degree first.");

    m.def("catalog_ids", [] {
        std::vector<std::string> ids;
        for (const auto& e : catalog()) ids.push_back(e.id);
        return ids;
    });
    m.def("verify_entry",
          [](const std::string& id, int order) {
              const CatalogEntry* e = find_entry(id);
              if (!e) throw std::invalid_argument("unknown catalog entry: " + id);
              Verdict v = verify_entry(*e, order);
              py::dict out;
              out["id"] = e->id;
              out["suspect"] = e->suspect;
              out["match"] = v.match;
              out["instance"] = v.instance;
              out["first_mismatch"] = v.first_mismatch;
              out["expected"] = to_py(v.expected);
              out["observed"] = to_py(v.observed);
              return out;
          },
          py::arg("id"), py::arg("order"));

    m.def("run_check", [](const std::string& suite, int n_max) {
        CheckReport r;
        {
            py::gil_scoped_release nogil;
            r = run_suite(suite, n_max);
        }
        return report_dict(r);
    }, py::arg("suite"), py::arg("n_max"));

    m.def("cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    }, py::arg("args"), "Runs the command-line tool; returns (exit_code, stdout, stderr).");
}
