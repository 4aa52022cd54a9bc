// Python bindings. Compound results cross the boundary as JSON text and are
// decoded by the crossout package.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "crossout/correspondence.hpp"
#include "crossout/errors.hpp"
#include "crossout/game.hpp"
#include "crossout/hermite.hpp"
#include "crossout/identity_suite.hpp"
#include "crossout/json_io.hpp"
#include "crossout/service.hpp"
#include "crossout/statistics.hpp"

namespace py = pybind11;
using namespace crossout;

namespace {

Permutation perm(const std::vector<int>& w) { return Permutation(w); }

std::vector<int> to_list(const Permutation& w) { return {w.values().begin(), w.values().end()}; }

std::pair<std::string, std::string> rational_parts(const Rational& r) {
  return {boost::multiprecision::numerator(r).str(), boost::multiprecision::denominator(r).str()};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "crossout engine core";

  auto validation = py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<ConstraintViolation>(m, "ConstraintViolation", validation.ptr());
  py::register_exception<GuardLimitError>(m, "GuardLimitError", PyExc_RuntimeError);
  py::register_exception<MoveError>(m, "MoveError", PyExc_ValueError);
  py::register_exception<StateError>(m, "StateError", PyExc_RuntimeError);

  m.attr("MAX_SWEEP_SIZE") = kMaxSweepSize;

  m.def("crossout_mark", [](const std::vector<int>& w) { return crossout_mark(perm(w)).to_string(); });
  m.def("mark_order", [](const std::vector<int>& w) { return crossout_mark(perm(w)).mark_order; });
  m.def("encode_json", [](const std::vector<int>& w) { return to_json(encode(perm(w))).dump(); });
  m.def("decode_json", [](const std::string& tuple) {
    json j;
    try {
      j = json::parse(tuple);
    } catch (const json::exception& e) {
      throw ValidationError(e.what());
    }
    return to_list(decode(tuple_from_json(j)));
  });

  m.def("heights", [](const std::string& path) {
    const Heights h = DyckPath::parse(path).heights();
    return std::make_pair(h.h, h.h_star);
  });
  m.def("down_steps", [](const std::string& path) { return DyckPath::parse(path).down_steps(); });
  m.def("enumerate_dyck", [](int length) {
    std::vector<std::string> out;
    for (const DyckPath& p : enumerate_dyck(length)) out.push_back(p.to_string());
    return out;
  });
  m.def("enumerate_hermite", [](const std::string& path, bool starred) {
    return enumerate_hermite(DyckPath::parse(path), starred);
  }, py::arg("path"), py::arg("starred") = false);

  m.def("hermite_to_matching", [](const std::string& path, const std::vector<int>& labels) {
    const Matching mt = hermite_to_matching(LabeledDyckPath{DyckPath::parse(path), labels});
    return std::vector<std::pair<int, int>>(mt.pairs().begin(), mt.pairs().end());
  });
  m.def("matching_to_hermite", [](const std::vector<std::pair<int, int>>& pairs) {
    const LabeledDyckPath h = matching_to_hermite(Matching(pairs));
    return std::make_pair(h.path.to_string(), h.labels);
  });

  m.def("alice_probability_parts", [](int n, const std::vector<int>& ranks) {
    return rational_parts(alice_probability(n, ranks));
  });

  m.def("stats_json", [](const std::vector<int>& w) {
    json j = to_json(stat_bundle(perm(w)));
    if (w.size() % 2 != 0) j.erase("z");
    return j.dump();
  });

  m.def("suite_names", &suite_names);
  m.def("canonical_suite", &canonical_suite);
  m.def("run_suite_json", [](const std::string& suite, int n, bool force) {
    std::vector<std::string> out;
    {
      py::gil_scoped_release release;
      run_suite(suite, n, SweepOptions{force}, [&](const IdentityReport& r) {
        out.push_back(to_json(r).dump());
      });
    }
    return out;
  }, py::arg("suite"), py::arg("n"), py::arg("force") = false);

  m.def("playout_optimal_json", [](const std::vector<int>& w) {
    return to_json(playout_optimal(perm(w))).dump();
  });
  m.def("random_permutation", [](int size, std::uint64_t seed) {
    return to_list(random_permutation(size, seed));
  });

  py::class_<GameService>(m, "GameService")
      .def(py::init<>())
      .def(py::init<const std::string&>(), py::arg("log_path"))
      .def("handle", [](GameService& s, const std::string& method, const std::string& path,
                        const std::map<std::string, std::string>& query, const std::string& body) {
        ServiceResponse r;
        {
          py::gil_scoped_release release;
          r = s.handle(ServiceRequest{method, path, query, body});
        }
        return py::make_tuple(r.status, r.body, r.content_type);
      }, py::arg("method"), py::arg("path"), py::arg("query") = std::map<std::string, std::string>{},
         py::arg("body") = "");
}
