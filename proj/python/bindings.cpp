#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lzeta/commands.hpp"

namespace py = pybind11;

namespace {

std::string call(const std::string& command, std::uint32_t p, unsigned n, std::optional<std::string> zeta,
                 std::optional<std::string> point, std::uint64_t seed) {
  lzeta::RunConfig cfg;
  cfg.command = command;
  cfg.p = p;
  cfg.n = n;
  cfg.zeta = std::move(zeta);
  cfg.point = std::move(point);
  cfg.seed = seed;
  py::gil_scoped_release release;
  return lzeta::run(cfg).text;
}

std::string dot(std::uint32_t p, unsigned n, std::optional<std::string> zeta) {
  lzeta::RunConfig cfg;
  cfg.command = "curve";
  cfg.p = p;
  cfg.n = n;
  cfg.zeta = std::move(zeta);
  cfg.format = lzeta::OutputFormat::Dot;
  return lzeta::run(cfg).text;
}

}  // namespace

PYBIND11_MODULE(_lzeta, m) {
  m.doc() = "JSON-level bindings for the lzeta commands";
  py::register_exception<lzeta::Error>(m, "LzetaError", PyExc_ValueError);
  m.def("run", &call, py::arg("command"), py::arg("p"), py::arg("n") = 1, py::arg("zeta") = py::none(),
        py::arg("point") = py::none(), py::arg("seed") = lzeta::kDefaultSeed);
  m.def("dot", &dot, py::arg("p"), py::arg("n") = 1, py::arg("zeta") = py::none());
  m.attr("DEFAULT_SEED") = lzeta::kDefaultSeed;
}
