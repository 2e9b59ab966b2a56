#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "orbigraph/cheeger.hpp"
#include "orbigraph/enumerate.hpp"
#include "orbigraph/error.hpp"
#include "orbigraph/goodness.hpp"
#include "orbigraph/io.hpp"
#include "orbigraph/markov.hpp"
#include "orbigraph/partition.hpp"
#include "orbigraph/spectral.hpp"

namespace py = pybind11;
using namespace orbigraph;

namespace {

py::int_ to_py(const BigInt& x) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(x.str().c_str(), nullptr, 10));
}

py::object to_py(const Rational& x) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_py(boost::multiprecision::numerator(x)), to_py(boost::multiprecision::denominator(x)));
}

py::list to_py(const std::vector<BigInt>& xs) {
  py::list out;
  for (const auto& x : xs) out.append(to_py(x));
  return out;
}

py::list to_py(const RationalVector& xs) {
  py::list out;
  for (const auto& x : xs) out.append(to_py(x));
  return out;
}

py::list to_py(const RationalMatrix& m) {
  py::list out;
  for (const auto& row : m) out.append(to_py(row));
  return out;
}

BigInt from_py(const py::handle& h) { return BigInt(py::str(h).cast<std::string>()); }

py::dict cover_to_py(const CoverWitness& w) {
  py::list edges;
  for (const auto& e : w.cover.edges()) edges.append(py::make_tuple(e.u, e.v));
  py::dict d;
  d["vertices"] = w.cover.size();
  d["edges"] = edges;
  d["adjacency"] = w.cover.to_digraph().rows();
  d["partition"] = w.partition;
  d["balance"] = to_py(w.balance);
  d["scale"] = to_py(w.scale);
  return d;
}

const char* verdict_name(Verdict v) { return v == Verdict::Good ? "good" : "bad"; }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact analysis of orbigraphs: goodness, covers, spectra, Markov and Cheeger quantities.";

  // Messages read "Kind: detail"; the Python package exposes the kind.
  py::register_exception<OrbigraphError>(m, "OrbigraphError", PyExc_ValueError);

  py::class_<Orbigraph>(m, "Orbigraph")
      .def(py::init([](const IntMatrix& rows, std::optional<Weight> k, bool allow_disconnected) {
             return Orbigraph::validate(rows, k, allow_disconnected);
           }),
           py::arg("adjacency"), py::arg("k") = py::none(), py::arg("allow_disconnected") = false)
      .def_property_readonly("n", &Orbigraph::size)
      .def_property_readonly("k", &Orbigraph::degree)
      .def_property_readonly("connected", &Orbigraph::connected)
      .def_property_readonly("adjacency", &Orbigraph::rows)
      .def("__eq__", [](const Orbigraph& a, const Orbigraph& b) { return a == b; })
      .def("__repr__", [](const Orbigraph& g) {
        return "Orbigraph(n=" + std::to_string(g.size()) + ", k=" + std::to_string(g.degree()) + ")";
      });

  py::class_<VertexPartition>(m, "VertexPartition")
      .def(py::init<std::size_t, std::vector<std::vector<Vertex>>>(), py::arg("n"), py::arg("cells"))
      .def_property_readonly("cells", &VertexPartition::cells)
      .def_property_readonly("n", &VertexPartition::vertex_count)
      .def("__eq__", [](const VertexPartition& a, const VertexPartition& b) { return a == b; })
      .def("__repr__", [](const VertexPartition& p) { return "VertexPartition(" + serialize_partition(p) + ")"; });

  // core
  m.def("singular_vertices", &singular_vertices);
  m.def("local_model", [](const Orbigraph& g, Vertex v) { return local_model(g, v).weights(); });
  m.def("star_quotient_models", [](Weight k) {
    std::vector<std::vector<Weight>> out;
    for (const auto& w : star_quotient_models(k)) out.push_back(w.weights());
    return out;
  });
  m.def("is_simple_regular", &is_simple_regular);

  // partition
  m.def("is_equitable", [](const IntMatrix& g, const VertexPartition& p) { return is_equitable(Digraph::from_rows(g), p); });
  m.def("quotient", [](const IntMatrix& g, const VertexPartition& p) { return quotient(Digraph::from_rows(g), p); });
  m.def("orbit_partition", [](const IntMatrix& g, const std::vector<Permutation>& gens) {
    return orbit_partition(Digraph::from_rows(g), gens);
  });
  m.def("compose_partitions", [](const IntMatrix& g, const VertexPartition& p1, const VertexPartition& p2) {
    return compose_partitions(Digraph::from_rows(g), p1, p2);
  });
  m.def("coarsest_equitable_refinement", [](const IntMatrix& g, const VertexPartition& seed) {
    return coarsest_equitable_refinement(Digraph::from_rows(g), seed);
  });
  m.def("verify_cover", [](const IntMatrix& cover, const VertexPartition& p, const Orbigraph& target) {
    return verify_cover(Digraph::from_rows(cover), p, target).ok;
  });

  // markov
  m.def("transition_matrix", [](const Orbigraph& g) { return to_py(transition_matrix(g)); });
  m.def("stationary_distribution", [](const Orbigraph& g) { return to_py(stationary_distribution(g)); });
  m.def("stationary_min_bound", [](const Orbigraph& g) {
    const auto b = stationary_min_bound(g);
    return py::make_tuple(to_py(b.pi_min), to_py(b.bound), b.holds);
  });
  m.def("detailed_balance_holds", &detailed_balance_holds);
  m.def("quotient_stationary", [](const IntMatrix& cover, const VertexPartition& p) {
    return to_py(quotient_stationary(Digraph::from_rows(cover), p));
  });

  // goodness
  m.def("kolmogorov_certificate", [](const Orbigraph& g) {
    const auto cert = kolmogorov_certificate(g);
    py::dict d;
    d["verdict"] = verdict_name(cert.verdict);
    if (cert.bad) {
      d["cycle"] = cert.bad->cycle;
      d["forward_product"] = to_py(cert.bad->forward_product);
      d["reverse_product"] = to_py(cert.bad->reverse_product);
    }
    if (cert.good) d["cover"] = cover_to_py(*cert.good);
    return d;
  });
  m.def("goodness_verdict", [](const Orbigraph& g) { return verdict_name(goodness_verdict(g)); });
  m.def("balance_vector", [](const Orbigraph& g) { return to_py(balance_vector(g)); });
  m.def("build_cover", [](const Orbigraph& g) { return cover_to_py(build_cover(g)); });
  m.def("connected_cover", [](const Orbigraph& g) { return cover_to_py(connected_cover(g)); });

  // spectral
  m.def("char_poly", [](const Orbigraph& g) { return to_py(char_poly(g).coefficients()); },
        "Characteristic polynomial coefficients, lowest degree first.");
  m.def("eigenvalues", &eigenvalues, py::arg("g"), py::arg("tol") = 1e-9);
  m.def("count_real_roots", [](const py::list& coeffs) {
    std::vector<BigInt> c;
    for (const auto& x : coeffs) c.push_back(from_py(x));
    return count_real_roots(IntPolynomial(std::move(c)));
  });
  m.def("length_spectrum", [](const Orbigraph& g, std::size_t m_max) { return to_py(length_spectrum(g, m_max).traces()); });
  m.def("power_sums_to_char_poly", [](const py::list& sums, std::size_t degree) {
    std::vector<BigInt> w;
    for (const auto& x : sums) w.push_back(from_py(x));
    return to_py(power_sums_to_char_poly(w, degree).coefficients());
  });
  m.def("char_poly_to_power_sums", [](const py::list& coeffs, std::size_t m_max) {
    std::vector<BigInt> c;
    for (const auto& x : coeffs) c.push_back(from_py(x));
    return to_py(char_poly_to_power_sums(IntPolynomial(std::move(c)), m_max));
  });
  m.def("singular_bounds", [](const Orbigraph& g) {
    const auto b = singular_bounds(g);
    return py::make_tuple(to_py(b.lower), to_py(b.upper), b.actual);
  });
  m.def("spectral_regularity_test", &spectral_regularity_test);
  m.def("cospectral", &cospectral);
  m.def("spectrum_divides", [](const IntMatrix& cover, const Orbigraph& q) {
    return spectrum_divides(Digraph::from_rows(cover), q);
  });

  // cheeger
  m.def("circulation", [](const Orbigraph& g) {
    const auto c = circulation(g);
    return py::make_tuple(to_py(c.flow), to_py(c.vertex_mass));
  });
  m.def("cheeger_constant", [](const Orbigraph& g, std::size_t max_n) {
    const auto r = cheeger_constant(g, max_n);
    return py::make_tuple(to_py(r.h), r.argmin);
  }, py::arg("g"), py::arg("max_n") = kDefaultCheegerMaxVertices);
  m.def("cheeger_bound_check", [](const Orbigraph& g, std::size_t max_n) {
    const auto r = cheeger_bound_check(g, max_n);
    return py::make_tuple(to_py(r.h), to_py(r.bound), r.holds);
  }, py::arg("g"), py::arg("max_n") = kDefaultCheegerMaxVertices);

  // enumerate
  m.def("enumerate_orbigraphs", [](std::size_t n, Weight k, bool connected, bool up_to_iso) {
    return enumerate_orbigraphs(EnumerationSpec{n, k, connected, up_to_iso});
  }, py::arg("n"), py::arg("k"), py::arg("connected") = false, py::arg("up_to_iso") = false);
  m.def("canonical_form", &canonical_form);
  m.def("find_cospectral_classes", [](std::size_t n, Weight k, bool connected, bool up_to_iso) {
    py::list out;
    for (const auto& cls : find_cospectral_classes(EnumerationSpec{n, k, connected, up_to_iso})) {
      py::list members;
      for (const auto& mbr : cls.members)
        members.append(py::make_tuple(mbr.graph, mbr.verdict ? py::object(py::str(verdict_name(*mbr.verdict))) : py::object(py::none())));
      out.append(py::make_tuple(to_py(cls.poly.coefficients()), members));
    }
    return out;
  }, py::arg("n"), py::arg("k"), py::arg("connected") = false, py::arg("up_to_iso") = false);

  // io
  m.def("parse_orbigraph", [](const std::string& text, bool allow_disconnected) {
    return parse_orbigraph(text, allow_disconnected);
  }, py::arg("text"), py::arg("allow_disconnected") = false);
  m.def("serialize_orbigraph", &serialize_orbigraph);
  m.def("parse_partition", [](const std::string& text, std::size_t n) { return parse_partition(text, n); });
  m.def("serialize_partition", &serialize_partition);
  m.def("export_dot", [](const Orbigraph& g, bool suppress_unit_labels, bool highlight_singular) {
    return export_dot(g, {suppress_unit_labels, highlight_singular});
  }, py::arg("g"), py::arg("suppress_unit_labels") = true, py::arg("highlight_singular") = true);
}
