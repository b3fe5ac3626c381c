#include <pybind11/pybind11.h>

#include <sstream>

#include "affsat/cli_core.hpp"

namespace py = pybind11;
using namespace affsat;

namespace {

RunConfig makeConfig(const std::string& type, long long depth, int vmin, int vmax, long long shells,
                     const std::string& q, unsigned long long seed) {
    RunConfig cfg;
    cfg.cartanType = type;
    cfg.depth = depth;
    cfg.vmin = vmin;
    cfg.vmax = vmax;
    cfg.shellBudget = shells;
    cfg.q = q;
    cfg.seed = seed;
    cfg.validate();
    return cfg;
}

std::string runToJson(int rc, const std::string& body) {
    Json doc = Json::parse(body);
    doc["exit"] = rc;
    return canonicalDump(doc);
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact Satake-image computations for untwisted simply-laced affine root systems";

    m.def(
        "satake",
        [](const std::string& type, const std::string& lambdaJson, long long depth, int vmin,
           int vmax, long long shells, const std::string& q, unsigned long long seed) {
            RunConfig cfg = makeConfig(type, depth, vmin, vmax, shells, q, seed);
            std::ostringstream out;
            int rc = cmdSatake(cfg, lambdaJson, out);
            return runToJson(rc, out.str());
        },
        py::arg("type"), py::arg("lambda_json"), py::arg("depth") = 4, py::arg("vmin") = 0,
        py::arg("vmax") = 8, py::arg("shells") = 30, py::arg("q") = "sym", py::arg("seed") = 12345,
        "Compute S(h_lambda) by both routes and report the structural diff.");

    m.def(
        "jfun",
        [](const std::string& type, const std::string& lambdaJson, const std::string& word,
           long long depth) {
            RunConfig cfg = makeConfig(type, depth, 0, 8, 30, "sym", 12345);
            std::ostringstream out;
            int rc = cmdJfun(cfg, lambdaJson, word, out);
            return runToJson(rc, out.str());
        },
        py::arg("type"), py::arg("lambda_json"), py::arg("word"), py::arg("depth") = 6,
        "Compute J_w(lambda) by the recursion and operator routes.");

    m.def(
        "identities",
        [](const std::string& type, const std::string& suite, long long depth, int vmax,
           long long shells, unsigned long long seed) {
            RunConfig cfg = makeConfig(type, depth, 0, vmax, shells, "sym", seed);
            std::ostringstream out;
            int rc = cmdIdentities(cfg, suite, out);
            return runToJson(rc, out.str());
        },
        py::arg("type"), py::arg("suite") = "all", py::arg("depth") = 4, py::arg("vmax") = 8,
        py::arg("shells") = 20, py::arg("seed") = 12345, "Run an identity suite.");

    m.def(
        "enumerate",
        [](const std::string& type, const std::string& what, long long bound,
           const std::string& xJson) {
            RunConfig cfg = makeConfig(type, 4, 0, 8, 20, "sym", 12345);
            std::ostringstream out;
            int rc = cmdEnumerate(cfg, what, bound, xJson, out);
            if (rc == kBudget) throw std::runtime_error("enumeration bound exceeds the budget");
            return runToJson(rc, out.str());
        },
        py::arg("type"), py::arg("what"), py::arg("bound") = 4, py::arg("x_json") = "",
        "Deterministic listings of Weyl shells, roots or affinized-root data.");

    m.def(
        "theta",
        [](const std::string& type, const std::string& muJson, long long samples,
           unsigned long long seed) {
            RunConfig cfg = makeConfig(type, 4, 0, 8, 20, "sym", seed);
            std::ostringstream out;
            int rc = cmdTheta(cfg, muJson, samples, out);
            return runToJson(rc, out.str());
        },
        py::arg("type"), py::arg("mu_json") = "", py::arg("samples") = 5, py::arg("seed") = 12345,
        "Run the commuting-family construction with both pivot policies.");

    m.def(
        "corpus_check",
        [](const std::string& dir) {
            std::ostringstream out;
            int rc = cmdCorpusCheck(dir, out);
            return runToJson(rc, out.str());
        },
        py::arg("directory"), "Recompute and byte-compare a directory of golden documents.");

    m.attr("__version__") = "0.1.0";
}
