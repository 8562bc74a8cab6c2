#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "padicdyn/serialize.hpp"
#include "padicdyn/taskfile.hpp"

namespace py = pybind11;
using namespace padicdyn;

namespace {

Poly make_poly(const std::vector<std::string>& coeffs, const std::string& prime) {
    std::vector<BigRat> cs;
    cs.reserve(coeffs.size());
    for (const std::string& c : coeffs) cs.push_back(parse_rational(c));
    return Poly(BigInt(prime), std::move(cs));
}

UltraDisk make_disk(const std::string& prime, const std::string& center,
                    const std::string& radius_exp) {
    return UltraDisk(BigInt(prime), parse_rational(center),
                     NormExp::from_exp(parse_rational(radius_exp)));
}

std::string norm_exp_str(const NormExp& e) {
    return e.is_zero() ? std::string("-inf") : rational_to_string(e.exp);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "certified p-adic Green functions and Montel equicontinuity certificates";

    m.def("vp", [](const std::string& x, const std::string& p) -> py::object {
        auto v = vp(parse_rational(x), BigInt(p));
        if (!v) return py::none();
        return py::cast(v->str());
    }, py::arg("x"), py::arg("p"), "p-adic valuation of a rational, None for 0");

    m.def("big_norm_exp", [](const std::string& x, const std::string& p) {
        PadicScalar z = PadicScalar::embed(parse_rational(x), BigInt(p), 64);
        return rational_to_string(z.big_norm().exp);
    }, py::arg("x"), py::arg("p"), "exponent e with max(1,|x|) = p^e");

    m.def("chordal", [](const std::string& x, const std::string& y, const std::string& p) {
        BigInt prime(p);
        PadicScalar zx = PadicScalar::embed(parse_rational(x), prime, 64);
        PadicScalar zy = PadicScalar::embed(parse_rational(y), prime, 64);
        return norm_exp_str(chordal(zx, zy));
    }, py::arg("x"), py::arg("y"), py::arg("p"),
       "exponent of the chordal distance rho(x, y), \"-inf\" for 0");

    m.def("eval_poly", [](const std::vector<std::string>& coeffs, const std::string& p,
                          const std::string& x) {
        return rational_to_string(eval(make_poly(coeffs, p), parse_rational(x)));
    }, py::arg("coefficients"), py::arg("p"), py::arg("x"), "exact rational evaluation");

    m.def("escape_radius_exp", [](const std::vector<std::string>& coeffs, const std::string& p) {
        return rational_to_string(escape_radius(make_poly(coeffs, p)).exp);
    }, py::arg("coefficients"), py::arg("p"));

    m.def("image_disk", [](const std::vector<std::string>& coeffs, const std::string& p,
                           const std::string& center, const std::string& radius_exp) {
        return to_json(image_disk(make_poly(coeffs, p), make_disk(p, center, radius_exp))).dump();
    }, py::arg("coefficients"), py::arg("p"), py::arg("center"), py::arg("radius_exp"));

    m.def("orbit_disks", [](const std::vector<std::string>& coeffs, const std::string& p,
                            const std::string& center, const std::string& radius_exp,
                            long budget) {
        return to_json(orbit_disks(make_poly(coeffs, p), make_disk(p, center, radius_exp), budget))
            .dump();
    }, py::arg("coefficients"), py::arg("p"), py::arg("center"), py::arg("radius_exp"),
       py::arg("budget"));

    m.def("green_value", [](const std::vector<std::string>& coeffs, const std::string& p,
                            const std::string& point, const std::string& epsilon,
                            long precision) {
        GreenValue g = green_value(make_poly(coeffs, p), parse_rational(point),
                                   parse_rational(epsilon), precision);
        return to_json(g).dump();
    }, py::arg("coefficients"), py::arg("p"), py::arg("point"), py::arg("epsilon"),
       py::arg("precision") = 64);

    m.def("certify", [](const std::vector<std::string>& coeffs, const std::string& p,
                        const std::string& center, const std::string& radius_exp,
                        const std::string& alpha, long budget) {
        MontelCertificate cert = certify(make_poly(coeffs, p), make_disk(p, center, radius_exp),
                                         parse_rational(alpha), budget);
        return to_json(cert).dump();
    }, py::arg("coefficients"), py::arg("p"), py::arg("center"), py::arg("radius_exp"),
       py::arg("alpha"), py::arg("budget") = 256);

    m.def("verify_certificate", [](const std::string& cert_json,
                                   const std::vector<std::string>& coeffs, const std::string& p) {
        MontelCertificate cert = certificate_from_json(Json::parse(cert_json));
        return verify_certificate(cert, make_poly(coeffs, p));
    }, py::arg("certificate_json"), py::arg("coefficients"), py::arg("p"));

    m.def("run_tasks", [](const std::string& task_json, int jobs, bool retry_precision) {
        RunOptions opts;
        opts.jobs = jobs;
        opts.retry_precision = retry_precision;
        RunOutcome out = run_tasks(parse_task_file(task_json), opts);
        return py::make_tuple(out.document.dump(2), out.any_error);
    }, py::arg("task_json"), py::arg("jobs") = 1, py::arg("retry_precision") = false,
       "returns (result document string, any_error)");

    py::register_exception<PrecisionExhausted>(m, "PrecisionExhausted");
    py::register_exception<ParseError>(m, "TaskParseError");
}
