// pybind11 surface: PLMap and Word as native classes, composite artifacts as
// JSON strings (exact rationals stay "num/den" strings end to end).

#include "markedfree/json_io.hpp"
#include "markedfree/report.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
namespace mf = markedfree;

namespace {

mf::Rational rat(const std::string& s) { return mf::Rational::parse(s); }

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact PL homeomorphisms and free-ball markings of Thompson's group";
    m.attr("__version__") = mf::kArtifactVersion;

    py::register_exception<mf::ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<mf::NonThompsonError>(m, "NonThompsonError", PyExc_ValueError);

    py::class_<mf::PLMap>(m, "PLMap")
        .def(py::init<>())
        .def_static("from_json",
                    [](const std::string& s) { return mf::plmap_from_json(mf::json::parse(s)); })
        .def("to_json", [](const mf::PLMap& f) { return mf::plmap_to_json(f).dump(); })
        .def("__call__",
             [](const mf::PLMap& f, const std::string& x) { return f(rat(x)).str(); })
        .def("preimage",
             [](const mf::PLMap& f, const std::string& y) { return f.preimage(rat(y)).str(); })
        .def("is_identity", &mf::PLMap::is_identity)
        .def("breakpoint_count", [](const mf::PLMap& f) { return f.breakpoints().size(); })
        .def("support",
             [](const mf::PLMap& f) { return mf::support_to_json(mf::support(f)).dump(); })
        .def("__eq__", [](const mf::PLMap& a, const mf::PLMap& b) { return a == b; })
        .def("__repr__", [](const mf::PLMap& f) {
            std::ostringstream out;
            out << "PLMap(breakpoints=" << f.breakpoints().size() << ")";
            return out.str();
        });

    py::class_<mf::Word>(m, "Word")
        .def(py::init([](const std::string& text, int rank) { return mf::Word::parse(text, rank); }),
             py::arg("text"), py::arg("rank") = 2)
        .def("__str__", &mf::Word::str)
        .def("__len__", [](const mf::Word& w) { return w.length(); })
        .def("inverse", &mf::Word::inverse)
        .def("__eq__", [](const mf::Word& a, const mf::Word& b) { return a == b; });

    m.def("f1", [] { return mf::generator_f1(); });
    m.def("f2", [] { return mf::generator_f2(); });
    m.def("compose", &mf::compose);
    m.def("invert", &mf::invert);
    m.def("conjugate", &mf::conjugate);
    m.def("commutator", &mf::commutator);
    m.def("is_thompson_element", &mf::is_thompson_element);
    m.def("is_special", [](const mf::PLMap& f, const std::string& r1, const std::string& r2) {
        return mf::is_special(f, rat(r1), rat(r2));
    });
    m.def("transport_to_unit", &mf::transport_to_unit);
    m.def("transport_from_unit", &mf::transport_from_unit);
    m.def("eval_word", [](const mf::Word& w, const std::vector<mf::PLMap>& maps) {
        return mf::eval_word(w, maps);
    });
    m.def("express_word", [](const mf::PLMap& f) { return mf::express_word(f); });

    m.def("build_marking_json", [](int n, std::uint64_t seed, std::uint64_t budget) {
        mf::BuildOptions opts;
        opts.pair.candidate_budget = budget;
        return mf::bundle_to_json(mf::build_marking(n, seed, opts)).dump();
    });
    m.def("verify_free_ball_json", [](const std::string& bundle, int threads) {
        const mf::MarkingBundle b = mf::bundle_from_json(mf::json::parse(bundle));
        return mf::ball_certificate_to_json(mf::verify_free_ball(b, threads), b).dump();
    });
    m.def("generation_witness_json", [](const std::string& bundle) {
        const mf::MarkingBundle b = mf::bundle_from_json(mf::json::parse(bundle));
        return mf::witness_to_json(mf::generation_witness(b), b).dump();
    });
    m.def("check_no_relations_json", [](const std::vector<mf::PLMap>& tuple, int radius, int threads) {
        return mf::check_report_to_json(mf::check_no_relations(tuple, radius, threads)).dump();
    });
    m.def("distance_to_free_json", [](const std::vector<mf::PLMap>& tuple, int cutoff, int threads) {
        return mf::distance_report_to_json(mf::distance_to_free(tuple, cutoff, threads)).dump();
    });
    m.def("free_pair_json", [](int n, std::uint64_t seed, std::uint64_t budget) {
        mf::FreePairOptions opts;
        opts.candidate_budget = budget;
        const mf::FreePair fp = mf::free_pair(n, seed, opts);
        return py::make_tuple(fp.a, fp.b, mf::certificate_to_json(fp.cert).dump());
    });
}
