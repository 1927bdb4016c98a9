#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "awroots/bounds.hpp"
#include "awroots/iteration.hpp"
#include "awroots/kernel.hpp"
#include "awroots/oracle.hpp"
#include "awroots/parameters.hpp"

namespace py = pybind11;
using namespace awroots;

PYBIND11_MODULE(_awroots, m) {
  m.doc() =
      "Brackets, fixed-point approximations, contraction certificates, and "
      "independent verification for Askey-Wilson polynomial root angles.";

  py::class_<KernelParam>(m, "KernelParam")
      .def(py::init<>())
      .def(py::init([](std::complex<double> z) { return KernelParam::from_complex(z); }),
           py::arg("z"))
      .def_readwrite("modulus", &KernelParam::modulus)
      .def_readwrite("argument", &KernelParam::argument)
      .def("is_real", &KernelParam::is_real)
      .def("__complex__", &KernelParam::to_complex);

  py::class_<ParameterSet>(m, "ParameterSet")
      .def_readonly("q", &ParameterSet::q)
      .def_readonly("n", &ParameterSet::n)
      .def_property_readonly("a",
                             [](const ParameterSet& p) {
                               std::vector<std::complex<double>> out;
                               for (const auto& kp : p.a) out.push_back(kp.to_complex());
                               return out;
                             })
      .def("all_zero", &ParameterSet::all_zero)
      .def("max_modulus", &ParameterSet::max_modulus);

  m.def(
      "validate",
      [](const std::vector<std::complex<double>>& a, double q, int n) {
        if (a.size() != 4) throw std::invalid_argument("expected exactly four parameters");
        return validate({a[0], a[1], a[2], a[3]}, q, n);
      },
      py::arg("a"), py::arg("q"), py::arg("n"),
      "Check the admissibility hypotheses and build a ParameterSet.");

  // kernel functions
  m.def("reduce_angle", &reduce_angle, py::arg("theta"));
  m.def("u_kernel", &u_kernel, py::arg("eps"), py::arg("theta"));
  m.def("nu_kernel", &nu_kernel, py::arg("eps"), py::arg("theta"));
  m.def("nu_fourier", &nu_fourier, py::arg("eps"), py::arg("theta"), py::arg("terms"));
  m.def("v_kernel", &v_kernel, py::arg("eps"), py::arg("theta"));
  m.def(
      "nu_pair",
      [](std::complex<double> a, double theta) {
        return nu_pair(KernelParam::from_complex(a), theta);
      },
      py::arg("a"), py::arg("theta"),
      "Contribution nu_a + nu_conj(a) of a conjugate pair, in real arithmetic.");
  m.def("v_integral", &v_integral, py::arg("eps"), py::arg("theta"), py::arg("tol") = 1e-12);

  // bounds
  py::class_<BoundsResult>(m, "BoundsResult")
      .def_readonly("k_minus", &BoundsResult::k_minus)
      .def_readonly("k_plus", &BoundsResult::k_plus)
      .def_readonly("j_minus", &BoundsResult::j_minus)
      .def_readonly("j_plus", &BoundsResult::j_plus)
      .def_readonly("lower", &BoundsResult::lower)
      .def_readonly("upper", &BoundsResult::upper)
      .def_readonly("lower_boxed", &BoundsResult::lower_boxed)
      .def_readonly("upper_boxed", &BoundsResult::upper_boxed)
      .def_readonly("chebyshev_exact", &BoundsResult::chebyshev_exact);

  m.def("k_bounds", &k_bounds, py::arg("params"), "Returns (k_minus, k_plus).");
  m.def("crossover_indices", &crossover_indices, py::arg("params"),
        "Returns (j_minus, j_plus); raises ValueError when k_+ = k_-.");
  m.def("root_bounds", &root_bounds, py::arg("params"));
  m.def("bracket_gap", &bracket_gap, py::arg("bounds"));

  // iteration
  py::class_<IterationTrace>(m, "IterationTrace")
      .def_readonly("iterates", &IterationTrace::iterates)
      .def_readonly("step_deltas", &IterationTrace::step_deltas)
      .def_readonly("rho", &IterationTrace::rho)
      .def_readonly("certified", &IterationTrace::certified)
      .def_readonly("converged", &IterationTrace::converged)
      .def_readonly("bracket_gap", &IterationTrace::bracket_gap)
      .def_readonly("apriori_bounds", &IterationTrace::apriori_bounds)
      .def("last", &IterationTrace::last)
      .def("steps", &IterationTrace::steps);

  m.def("chebyshev_init", &chebyshev_init, py::arg("n"));
  m.def("fixed_point_map", &fixed_point_map, py::arg("params"), py::arg("theta"));
  m.def("rho", &rho, py::arg("params"));
  m.def("iterate", &iterate, py::arg("params"), py::arg("max_iters") = 200,
        py::arg("step_tol") = 1e-13);
  m.def("first_order_approx", &first_order_approx, py::arg("params"));
  m.def("error_certificate", &error_certificate, py::arg("trace"), py::arg("bounds"),
        py::arg("l"));

  // oracle
  m.def("system_residual", &system_residual, py::arg("params"), py::arg("theta"));
  m.def("jacobian", &jacobian, py::arg("params"), py::arg("theta"));
  m.def("newton_solve", &newton_solve, py::arg("params"), py::arg("tol") = 1e-12,
        py::arg("max_steps") = 100);
  m.def("product_residual", &product_residual, py::arg("params"), py::arg("theta"));
  m.def("morse_value", &morse_value, py::arg("params"), py::arg("theta"),
        py::arg("tol") = 1e-12);

  py::class_<SpectralCheck>(m, "SpectralCheck")
      .def_readonly("spectral_norm", &SpectralCheck::spectral_norm)
      .def_readonly("lambda_min", &SpectralCheck::lambda_min)
      .def_readonly("lambda_max", &SpectralCheck::lambda_max)
      .def_readonly("rho_n", &SpectralCheck::rho_n)
      .def_readonly("rho_bound_ok", &SpectralCheck::rho_bound_ok);
  m.def("spectral_norm_check", &spectral_norm_check, py::arg("params"), py::arg("theta"));

  py::class_<VerificationReport>(m, "VerificationReport")
      .def_readonly("system_residual", &VerificationReport::system_residual)
      .def_readonly("product_residual", &VerificationReport::product_residual)
      .def_readonly("in_bounds", &VerificationReport::in_bounds)
      .def_readonly("jacobian_symmetry_defect", &VerificationReport::jacobian_symmetry_defect)
      .def_readonly("spectral_norm", &VerificationReport::spectral_norm)
      .def_readonly("rho_bound_ok", &VerificationReport::rho_bound_ok);
  m.def("verify", &verify, py::arg("params"), py::arg("theta"), py::arg("bounds"));
}
