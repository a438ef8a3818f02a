#include "su3coh/descriptor.hpp"
#include "su3coh/geomverify.hpp"
#include "su3coh/serialize.hpp"

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace su3coh;

namespace {

py::dict circle_dict(const CircleSubgroup& c) {
    const auto t = c.triple();
    py::dict d;
    d["k"] = c.k;
    d["l"] = c.l;
    d["cls"] = std::string(to_string(c.cls));
    d["triple"] = py::make_tuple(t[0], t[1], t[2]);
    return d;
}

py::dict stabilizer_dict(const PrincipalStabilizer& ps) {
    py::dict d = circle_dict(ps.circle);
    d["h"] = ps.finite_part;
    return d;
}

VerifyGroup parse_group(const std::string& g) {
    if (g == "consim") return VerifyGroup::Consim;
    if (g == "grassmann") return VerifyGroup::Grassmann;
    if (g == "all") return VerifyGroup::All;
    throw ParseError("unknown verify group '" + g + "'");
}

StabilizerTag parse_tag(const std::string& t) {
    if (t == "SU2") return StabilizerTag::SU2;
    if (t == "SO3") return StabilizerTag::SO3;
    if (t == "U2") return StabilizerTag::U2;
    if (t == "T2") return StabilizerTag::T2;
    throw ParseError("unknown stabilizer tag '" + t + "'");
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "cohomogeneity-one SU(3) classification and verification kernels";

    const auto err = py::register_exception<Error>(m, "Error");
    py::register_exception<ParseError>(m, "ParseError", err);
    py::register_exception<RankUnstable>(m, "RankUnstable", err);
    py::register_exception<IncompatibleRegime>(m, "IncompatibleRegime", err);
    py::register_exception<FrameNotOrthonormal>(m, "FrameNotOrthonormal", err);

    // exact Cartan / circle calculus
    m.def("canonicalize",
          [](long long k, long long l) { return circle_dict(canonicalize(k, l)); },
          py::arg("k"), py::arg("l"),
          "canonical coprime representative of the circle subgroup (k,l)");
    m.def("normalizer_components", [](long long k, long long l) {
        const auto info = normalizer_components(canonicalize(k, l));
        py::dict d;
        d["identity_component"] =
            std::string(info.identity_component == NormalizerComponent::U2 ? "U2" : "Torus");
        d["component_count"] = info.component_count;
        return d;
    });
    m.def("normalizer_components_nonconnected", [](long long k, long long l, long long h) {
        return normalizer_components_nonconnected(canonicalize(k, l), h);
    });
    m.def("weight_canonical", &weight_canonical, py::arg("p"), py::arg("q"));
    m.def("perp_line_of_weight", [](long long p, long long q) {
        return circle_dict(perp_line_in_cartan(weight_vector(p, q)));
    });

    // slice representations
    m.def("enumerate_slice_reps", [](const std::string& tag, long long bound) {
        std::vector<std::string> out;
        for (const auto& r : enumerate_slice_reps(parse_tag(tag), bound))
            out.push_back(to_text(r));
        return out;
    });
    m.def("principal_stabilizer", [](const std::string& slice) {
        return stabilizer_dict(principal_stabilizer(parse_slice(slice)));
    });
    m.def("restrict_u2_to_torus", [](long long mm) {
        const auto w = restrict_u2_to_torus(mm);
        return py::make_tuple(w.p, w.q);
    });
    m.def("sphere_transitivity_check", [](const std::string& slice) {
        return sphere_transitivity_check(parse_slice(slice));
    });
    m.def("torus_weight_component_count", &torus_weight_component_count, py::arg("p"),
          py::arg("q"), py::arg("grid_per_unit") = 720);

    // classification
    m.def("count_diffeo_classes", [](const std::string& t1, const std::string& t2) {
        const auto gc = count_diffeo_classes(parse_tube(t1), parse_tube(t2));
        py::dict d;
        d["count"] = gc.count;
        d["reason"] = std::string(to_string(gc.reason));
        return d;
    });
    m.def("admissible_partners", [](const std::string& t, long long bound) {
        std::vector<std::pair<std::string, int>> out;
        for (const auto& [tube, gc] : admissible_partners(parse_tube(t), bound))
            out.push_back({to_text(tube), gc.count});
        return out;
    });
    m.def("classify_circle_base", [](long long k, long long l) {
        const auto r = classify_circle_base(k, l);
        py::dict d;
        d["trivial_bundle"] = r.trivial_bundle;
        d["nontrivial_bundle_exists"] = r.nontrivial_bundle_exists;
        return d;
    });
    m.def("emit_tables_json",
          [](long long bound) { return to_json(emit_tables(bound)).dump(); },
          py::arg("bound") = 5);
    m.def("emit_tables_delta_json",
          [](long long bound) { return to_json(emit_tables_delta(bound)).dump(); },
          py::arg("bound") = 5);

    // numeric layer on 3x3 complex matrices
    m.def("bracket", [](const Mat3& x, const Mat3& y) {
        return bracket(AlgebraElement::checked(x), AlgebraElement::checked(y)).m;
    });
    m.def("inner", [](const Mat3& x, const Mat3& y) {
        return inner(AlgebraElement::checked(x), AlgebraElement::checked(y));
    });
    m.def("expm", [](const Mat3& x) { return expm(AlgebraElement::checked(x)).m; });
    m.def("su3_basis", [] {
        std::vector<Mat3> out;
        for (const auto& b : su3_basis()) out.push_back(b.m);
        return out;
    });
    m.def("consim_act", [](const Mat3& a, const Mat3& b) {
        return consim_act(GroupMatrix::checked(a), GroupMatrix::checked(b)).m;
    });
    m.def("gamma", [](const Mat3& a) { return gamma(GroupMatrix::checked(a)).m; });
    m.def("geodesic_point", [](double t) { return geodesic_point(t).m; });
    m.def("consim_stabilizer_dim",
          [](const Mat3& b) { return consim_stabilizer_dim(GroupMatrix::checked(b)); });
    m.def("flow_line_stabilizer", [](double t) { return flow_line_stabilizer(t); });
    m.def("grassmann_f", [](const Mat3& x, const Mat3& y, const Mat3& z) {
        const std::array<AlgebraElement, 3> frame = {AlgebraElement::checked(x),
                                                     AlgebraElement::checked(y),
                                                     AlgebraElement::checked(z)};
        return grassmann_f(frame);
    });
    m.def("hypersurface_scan", [](int grid) {
        return hypersurface_torus_solutions(grid).cells;
    }, py::arg("grid") = 720);

    // verification suites (JSON-encoded reports)
    m.def("verify_suite_json",
          [](unsigned long long seed, long long samples, const std::string& group) {
              return to_json(verify_suite(seed, samples, Tolerances{}, parse_group(group)))
                  .dump();
          },
          py::arg("seed") = 42, py::arg("samples") = 1000, py::arg("group") = "all");
    m.def("verify_torus_lemma_json", [](long long bound) {
        return to_json(verify_torus_lemma(bound)).dump();
    }, py::arg("bound") = 5);
}
