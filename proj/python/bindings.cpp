#include "lowwafom/cli.hpp"
#include "lowwafom/genz.hpp"
#include "lowwafom/integrate.hpp"
#include "lowwafom/matrix_io.hpp"
#include "lowwafom/search.hpp"
#include "lowwafom/seqgen.hpp"
#include "lowwafom/wafom.hpp"

#include <pybind11/functional.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

namespace py = pybind11;
using namespace lowwafom;

namespace {

py::dict stage_dict(const StageRecord& r) {
    py::dict d;
    d["d"] = r.d;
    d["best_wafom"] = r.best_wafom;
    d["best_trial"] = r.best_trial;
    d["trials"] = r.trials;
    d["rejections"] = r.rejections;
    d["seconds"] = r.seconds;
    return d;
}

// Python callables take a list of floats; the GIL is needed around each call,
// so integration from Python runs on one thread.
Integrand wrap(const py::function& f) {
    return [f](std::span<const double> x) {
        py::list args(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) args[i] = x[i];
        return f(args).cast<double>();
    };
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Extensible low-WAFOM digital nets";
    m.attr("__version__") = kToolVersion;

    py::class_<GeneratingMatrixSet>(m, "GeneratingMatrixSet")
        .def(py::init<int, int, int>(), py::arg("digits"), py::arg("columns"), py::arg("dimension"))
        .def(py::init<int, int, int, std::vector<BitColumn>>(), py::arg("digits"), py::arg("columns"),
             py::arg("dimension"), py::arg("data"))
        .def_property_readonly("digits", &GeneratingMatrixSet::digits)
        .def_property_readonly("columns", &GeneratingMatrixSet::columns)
        .def_property_readonly("dimension", &GeneratingMatrixSet::dimension)
        .def("column", &GeneratingMatrixSet::column, py::arg("coord"), py::arg("col"))
        .def("set_column", &GeneratingMatrixSet::set_column, py::arg("coord"), py::arg("col"), py::arg("value"))
        .def("matrix",
             [](const GeneratingMatrixSet& g, int coord) {
                 if (coord < 0 || coord >= g.dimension()) throw py::index_error("coordinate out of range");
                 const auto s = g.matrix(coord);
                 return std::vector<BitColumn>(s.begin(), s.end());
             })
        .def("truncated", &GeneratingMatrixSet::truncated)
        .def("projection_regular", &GeneratingMatrixSet::projection_regular)
        .def("points",
             [](const GeneratingMatrixSet& g, int d) {
                 std::vector<std::vector<BitColumn>> out;
                 for (auto& x : enumerate_points_gray(g, d)) out.push_back(std::move(x.coords));
                 return out;
             },
             py::arg("d"), "Points of P_d in Gray-code order, as coordinate columns.")
        .def(py::self == py::self)
        .def("__repr__", [](const GeneratingMatrixSet& g) {
            std::ostringstream s;
            s << "GeneratingMatrixSet(digits=" << g.digits() << ", columns=" << g.columns()
              << ", dimension=" << g.dimension() << ")";
            return s.str();
        });

    m.def("read_matrices", py::overload_cast<const std::filesystem::path&>(&read_matrices), py::arg("path"));
    m.def("write_matrices",
          py::overload_cast<const std::filesystem::path&, const GeneratingMatrixSet&, const std::string&>(
              &write_matrices),
          py::arg("path"), py::arg("matrices"), py::arg("comment") = "");
    m.def("is_upper_square_regular",
          [](const std::vector<BitColumn>& cols, int digits) { return is_upper_square_regular(cols, digits); },
          py::arg("columns"), py::arg("digits"));

    m.def("wafom_naive",
          [](const GeneratingMatrixSet& g, int d, int threads) { return wafom_naive(g, d, threads).value; },
          py::arg("matrices"), py::arg("d"), py::arg("threads") = 1,
          py::call_guard<py::gil_scoped_release>());
    m.def("wafom_tabled",
          [](const GeneratingMatrixSet& g, int d, int segments, int threads) {
              return wafom_tabled(g, d, WafomTableSet(g.digits(), segments), threads).value;
          },
          py::arg("matrices"), py::arg("d"), py::arg("q") = 3, py::arg("threads") = 1,
          py::call_guard<py::gil_scoped_release>());

    m.def("search",
          [](int n, int columns, int s, std::uint64_t trials, int q, std::uint64_t seed, int threads) {
              SearchConfig cfg;
              cfg.digits = n;
              cfg.columns = columns;
              cfg.dimension = s;
              cfg.trials = trials;
              cfg.segments = q;
              cfg.seed = seed;
              cfg.threads = threads;
              SearchResult r;
              {
                  py::gil_scoped_release release;
                  r = search_extensible(cfg);
              }
              py::list trace;
              for (const auto& rec : r.trace) trace.append(stage_dict(rec));
              return py::make_tuple(r.matrices, trace);
          },
          py::arg("n") = 30, py::arg("m") = 25, py::arg("s") = 5, py::arg("trials") = 7000, py::arg("q") = 3,
          py::arg("seed") = 0, py::arg("threads") = 0,
          "Greedy extensible search. Returns (matrices, trace).");

    m.def("seqgen_search",
          [](int n, int s, int degree, std::uint64_t trials, int q, std::uint64_t seed, int threads) {
              SeqGenSearchConfig cfg{n, s, degree, trials, q, seed, threads};
              const SeqGenSearchResult r = [&] {
                  py::gil_scoped_release release;
                  return seqgen_search(cfg);
              }();
              return py::make_tuple(seqgen_as_digital_net(r.best, s), r.wafom);
          },
          py::arg("n") = 30, py::arg("s") = 5, py::arg("d") = 10, py::arg("trials") = 7000, py::arg("q") = 3,
          py::arg("seed") = 0, py::arg("threads") = 0,
          "Sequential-generator search. Returns (equivalent digital net, WAFOM).");

    py::class_<GenzInstance>(m, "GenzInstance")
        .def_property_readonly("family", [](const GenzInstance& i) { return std::string(family_name(i.family)); })
        .def_readonly("a", &GenzInstance::a)
        .def_readonly("u", &GenzInstance::u)
        .def_readonly("h", &GenzInstance::h)
        .def("__call__", [](const GenzInstance& i, const std::vector<double>& x) {
            if (static_cast<int>(x.size()) != i.dimension()) throw py::value_error("point has the wrong dimension");
            return genz_eval(i, x);
        })
        .def("exact_integral", &exact_integral);

    m.def("genz_instance",
          [](const std::string& family, std::vector<double> a, std::vector<double> u, double h) {
              return instance_from_params(parse_family(family), std::move(a), std::move(u), h);
          },
          py::arg("family"), py::arg("a"), py::arg("u"), py::arg("h") = 0.0);
    m.def("random_genz_instance",
          [](const std::string& family, int s, double h, std::uint64_t seed, int k) {
              return benchmark_instance(seed, parse_family(family), s, h, k);
          },
          py::arg("family"), py::arg("s"), py::arg("h"), py::arg("seed") = 0, py::arg("k") = 0);
    m.def("default_h", &default_h, py::arg("s"));

    m.def("qmc_integrate",
          [](const GeneratingMatrixSet& g, int d, const py::object& f, bool shift) {
              if (py::isinstance<GenzInstance>(f)) {
                  const auto inst = f.cast<GenzInstance>();
                  py::gil_scoped_release release;
                  return qmc_integrate(
                      g, d, [&inst](std::span<const double> x) { return genz_eval(inst, x); }, shift, 0);
              }
              return qmc_integrate(g, d, wrap(f.cast<py::function>()), shift, 1);
          },
          py::arg("matrices"), py::arg("d"), py::arg("f"), py::arg("shift") = true,
          "QMC mean of f over P_d; f is a GenzInstance or a callable taking a list of floats.");
    m.def("mc_integrate",
          [](const py::function& f, int s, std::uint64_t samples, std::uint64_t seed) {
              return mc_integrate(wrap(f), s, samples, seed, 1);
          },
          py::arg("f"), py::arg("s"), py::arg("samples"), py::arg("seed") = 0);

    py::register_exception<NonFiniteIntegrand>(m, "NonFiniteIntegrand", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    m.def("run_cli",
          [](const std::vector<std::string>& args) {
              std::ostringstream out;
              std::ostringstream err;
              int code;
              {
                  py::gil_scoped_release release;
                  code = run_cli(args, out, err);
              }
              return py::make_tuple(code, out.str(), err.str());
          },
          py::arg("args"), "Run a lowwafom subcommand in-process. Returns (exit_code, stdout, stderr).");
}
