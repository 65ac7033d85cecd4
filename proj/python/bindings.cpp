// Python bindings: thin wrappers over the C++ core for smoke testing and
// exploratory use.  Enclosures cross the boundary as (lo, hi) float pairs;
// exact inputs cross as strings (CF literals, rationals).

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <utility>

#include "sudler/continued_fraction.hpp"
#include "sudler/criterion.hpp"
#include "sudler/enclosure.hpp"
#include "sudler/limit_fn.hpp"
#include "sudler/period_verify.hpp"
#include "sudler/sudler_eval.hpp"
#include "sudler/surd.hpp"

namespace py = pybind11;
using namespace sudler;

namespace {

std::pair<double, double> pairof(const Enclosure& e) { return {e.lo_d(), e.hi_d()}; }

mpq_class rational(const std::string& s) {
    mpq_class v;
    if (v.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    v.canonicalize();
    return v;
}

}  // namespace

PYBIND11_MODULE(_sudler, m) {
    m.doc() = "Certified numerics for Sudler products at badly approximable numbers";

    m.def("set_precision", [](long bits) { Enclosure::set_default_precision(bits); });
    m.def("get_precision", [] { return static_cast<long>(Enclosure::default_precision()); });

    m.def(
        "sudler_product",
        [](const std::string& alpha, const std::string& N) {
            ContinuedFraction cf = ContinuedFraction::parse(alpha);
            mpz_class n(N);
            Enclosure v = cf.is_finite() ? ::sudler::sudler(rational_from_cf(cf), n)
                                         : ::sudler::sudler(value_of(cf), n);
            return pairof(v);
        },
        py::arg("alpha"), py::arg("N"), "P_N(alpha) as an (lo, hi) enclosure");

    m.def(
        "sudler_perturbed",
        [](const std::string& alpha, size_t n, const std::string& eps) {
            ContinuedFraction cf = ContinuedFraction::parse(alpha);
            return pairof(sudler_perturbed(cf, n, Enclosure(rational(eps))));
        },
        py::arg("alpha"), py::arg("n"), py::arg("eps"));

    m.def(
        "cf_value",
        [](const std::string& alpha) {
            ContinuedFraction cf = ContinuedFraction::parse(alpha);
            return pairof(value_of(cf).enclose());
        },
        py::arg("alpha"), "value of a CF literal as an (lo, hi) enclosure");

    m.def(
        "cf_str",
        [](const std::string& alpha) { return ContinuedFraction::parse(alpha).str(); },
        py::arg("alpha"));

    m.def(
        "ostrowski",
        [](const std::string& alpha, const std::string& N) {
            return ostrowski(ContinuedFraction::parse(alpha), mpz_class(N));
        },
        py::arg("alpha"), py::arg("N"));

    m.def(
        "convergent",
        [](const std::string& alpha, size_t k) {
            Convergents c = convergents(ContinuedFraction::parse(alpha), k);
            return std::make_pair(c.p[k].get_str(), c.q[k].get_str());
        },
        py::arg("alpha"), py::arg("k"), "(p_k, q_k) as decimal strings");

    m.def(
        "limit_constant",
        [](const std::string& alpha, long r) {
            return pairof(limit_constant(ContinuedFraction::parse(alpha), r).enclose());
        },
        py::arg("alpha"), py::arg("r"), "C(r) as an (lo, hi) enclosure");

    m.def(
        "G_enclosure",
        [](const std::string& alpha, long r, const std::string& eps, long T) {
            GEvaluator ev(ContinuedFraction::parse(alpha), r);
            return pairof(ev.G_enclosure(Enclosure(rational(eps)), T));
        },
        py::arg("alpha"), py::arg("r"), py::arg("eps"), py::arg("T"),
        "certified enclosure of G_r(alpha, eps)");

    m.def(
        "eps_prime",
        [](const std::string& alpha, long r, long k, const std::vector<long>& tail_period) {
            return pairof(
                eps_prime_periodic_exact(ContinuedFraction::parse(alpha), r, k, tail_period)
                    .enclose());
        },
        py::arg("alpha"), py::arg("r"), py::arg("k"), py::arg("tail_period"));

    m.def(
        "F_exact",
        [](long T, const std::string& x, const std::string& y) {
            return F_exact(T, rational(x), rational(y)).get_str();
        },
        py::arg("T"), py::arg("x"), py::arg("y"), "exact rational F(T,x,y) as a string");

    m.def(
        "decompose_check",
        [](const std::string& alpha, const std::string& N) {
            ContinuedFraction cf = ContinuedFraction::parse(alpha);
            mpz_class n(N);
            Decomposition d = decompose(cf, n);
            Enclosure full = d.top;
            for (const auto& k : d.kfactors) full *= k.value;
            Enclosure direct = ::sudler::sudler(value_of(cf), n);
            return py::make_tuple(pairof(full), pairof(direct), d.digits);
        },
        py::arg("alpha"), py::arg("N"),
        "(K-factor product enclosure, direct P_N enclosure, Ostrowski digits)");
}
