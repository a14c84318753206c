#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dynsamp/constructors.hpp"
#include "dynsamp/recon.hpp"
#include "dynsamp/spark.hpp"

namespace py = pybind11;
using namespace dynsamp;

namespace {

Kernel make_kernel(const std::vector<int>& factors, const CVector& symbol) {
  return kernel_from_frequency(make_group(factors), symbol);
}

SamplingPlan make_plan(const std::vector<int>& factors, const std::vector<int>& omega,
                       const std::vector<int>& depths) {
  return SamplingPlan::make(make_group(factors), omega, depths);
}

py::dict report_dict(const FrameReport& r) {
  py::dict d;
  d["verdict"] = std::string(to_string(r.verdict));
  d["is_frame"] = r.is_frame();
  d["rank"] = r.rank;
  d["required_rank"] = r.required_rank;
  d["lower_frame_bound"] =
      r.lower_frame_bound ? py::object(py::float_(*r.lower_frame_bound)) : py::none();
  d["upper_frame_bound"] =
      r.upper_frame_bound ? py::object(py::float_(*r.upper_frame_bound)) : py::none();
  d["failing_class"] = r.failing_class ? py::object(py::int_(*r.failing_class)) : py::none();
  d["min_cardinality_bound"] = r.min_cardinality_bound;
  d["ambiguity"] = r.ambiguity;
  d["depth_insufficient"] = r.depth_insufficient;
  return d;
}

py::dict plan_dict(const SamplingPlan& plan) {
  py::dict d;
  d["factors"] = plan.group.factors();
  d["omega"] = plan.omega;
  d["depths"] = plan.depths;
  return d;
}

}  // namespace

PYBIND11_MODULE(_dynsamp, m) {
  m.doc() = "Spatiotemporal sampling plans for circular convolution evolution systems";

  m.def("fourier_matrix",
        [](const std::vector<int>& factors) -> CMatrix {
          return fourier_matrix(make_group(factors)).entries();
        },
        py::arg("factors"), "Normalized character matrix of Z_{d1} x ... x Z_{dn}");

  m.def("numerical_rank",
        [](const CMatrix& mat, double tol) { return numerical_rank(mat, tol); },
        py::arg("mat"), py::arg("tol") = kDefaultRankTol);

  m.def("level_partition",
        [](const std::vector<int>& factors, const CVector& symbol, double tol) {
          const LevelPartition p = level_partition(make_kernel(factors, symbol), tol);
          py::dict d;
          d["classes"] = p.classes;
          d["values"] = p.values;
          d["ambiguity"] = p.ambiguity;
          return d;
        },
        py::arg("factors"), py::arg("symbol"), py::arg("tol") = kDefaultGroupTol);

  m.def("min_sensor_bound",
        [](const std::vector<int>& factors, const CVector& symbol) {
          return min_sensor_bound(make_kernel(factors, symbol));
        },
        py::arg("factors"), py::arg("symbol"));

  m.def("annihilator_degree",
        [](const std::vector<int>& factors, const CVector& symbol, int index) {
          return annihilator_degree(make_kernel(factors, symbol), index);
        },
        py::arg("factors"), py::arg("symbol"), py::arg("index"));

  m.def("apply_operator",
        [](const std::vector<int>& factors, const CVector& symbol, const CVector& f,
           long power) -> CVector {
          return apply_operator(make_kernel(factors, symbol), f, power);
        },
        py::arg("factors"), py::arg("symbol"), py::arg("f"), py::arg("power") = 1);

  m.def("frame_test_direct",
        [](const std::vector<int>& factors, const CVector& symbol,
           const std::vector<int>& omega, const std::vector<int>& depths, double rank_tol,
           double group_tol) {
          return report_dict(frame_test_direct(make_kernel(factors, symbol),
                                               make_plan(factors, omega, depths), rank_tol,
                                               group_tol));
        },
        py::arg("factors"), py::arg("symbol"), py::arg("omega"), py::arg("depths"),
        py::arg("rank_tol") = kDefaultRankTol, py::arg("group_tol") = kDefaultGroupTol);

  m.def("frame_test_projection",
        [](const std::vector<int>& factors, const CVector& symbol,
           const std::vector<int>& omega, const std::vector<int>& depths, double rank_tol,
           double group_tol) {
          return report_dict(frame_test_projection(make_kernel(factors, symbol),
                                                   make_plan(factors, omega, depths), rank_tol,
                                                   group_tol));
        },
        py::arg("factors"), py::arg("symbol"), py::arg("omega"), py::arg("depths"),
        py::arg("rank_tol") = kDefaultRankTol, py::arg("group_tol") = kDefaultGroupTol);

  m.def("never_frame",
        [](const std::vector<int>& factors, const CVector& symbol,
           const std::vector<int>& omega) {
          return never_frame_test(make_kernel(factors, symbol), omega);
        },
        py::arg("factors"), py::arg("symbol"), py::arg("omega"));

  m.def("periodic_frame_test",
        [](int d, const CVector& symbol, int m, const std::vector<int>& W) {
          return report_dict(periodic_frame_test(make_kernel({d}, symbol),
                                                 make_periodic_plan(d, m, W)));
        },
        py::arg("d"), py::arg("symbol"), py::arg("m"), py::arg("W"));

  m.def("min_period_bound",
        [](int d, const CVector& symbol, int m) {
          return min_period_bound(make_kernel({d}, symbol), m);
        },
        py::arg("d"), py::arg("symbol"), py::arg("m"));

  m.def("spark",
        [](const CMatrix& mat, double tol) {
          const SparkResult r = spark_with_witness(mat, tol);
          return py::make_tuple(r.spark, r.full_spark, r.witness);
        },
        py::arg("mat"), py::arg("tol") = kDefaultRankTol,
        "Returns (spark, full_spark, witness_columns)");

  m.def("is_full_spark_rows",
        [](const std::vector<int>& factors, const std::vector<int>& rows) {
          return is_full_spark_rows(make_row_selection(make_group(factors), rows));
        },
        py::arg("factors"), py::arg("rows"));

  m.def("is_uniformly_distributed", &is_uniformly_distributed, py::arg("d"), py::arg("omega"));

  m.def("find_singular_witness",
        [](int d, const std::vector<std::array<int, 2>>& rows) -> py::object {
          const auto w = find_singular_witness(d, rows);
          if (!w) return py::none();
          return py::cast(*w);
        },
        py::arg("d"), py::arg("rows"));

  m.def("consecutive_set",
        [](int d, int L) {
          const PlanBlueprint bp = consecutive_set(d, L);
          return bp.omega;
        },
        py::arg("d"), py::arg("L"));

  m.def("gcd_pair_set",
        [](int d, int i1, int i2) { return gcd_pair_set(d, i1, i2).omega; }, py::arg("d"),
        py::arg("i1"), py::arg("i2"));

  m.def("periodic_W_set",
        [](int d, int m, const std::vector<int>& W) {
          const PeriodicPlan p = periodic_W_set(d, m, W);
          return plan_dict(p.induced());
        },
        py::arg("d"), py::arg("m"), py::arg("W"));

  m.def("sym2d_set",
        [](int d, const std::string& kind, int i1, int i2, int j1, int j2,
           bool column_variant) {
          const PlanBlueprint bp = sym2d_set(d, symmetry_from_string(kind),
                                             Sym2DParams{i1, i2, j1, j2, column_variant});
          py::dict out;
          out["omega"] = bp.omega;
          out["depth"] = *bp.claimed_depth;
          out["factors"] = bp.group.factors();
          return out;
        },
        py::arg("d"), py::arg("kind"), py::arg("i1") = 0, py::arg("i2") = 1,
        py::arg("j1") = 0, py::arg("j2") = 1, py::arg("column_variant") = false);

  m.def("sym2d_periodic_set",
        [](int d, int m, const std::string& kind, int i1, int i2, int j1, int j2,
           bool column_variant) {
          return plan_dict(sym2d_periodic_set(d, m, symmetry_from_string(kind),
                                              Sym2DParams{i1, i2, j1, j2, column_variant})
                               .induced());
        },
        py::arg("d"), py::arg("m"), py::arg("kind"), py::arg("i1") = 0, py::arg("i2") = 1,
        py::arg("j1") = 0, py::arg("j2") = 1, py::arg("column_variant") = false);

  m.def("orbits",
        [](int d, const std::string& kind) {
          return orbits(SymmetryClass{symmetry_from_string(kind), d});
        },
        py::arg("d"), py::arg("kind"));

  m.def("random_symmetric_kernel",
        [](int d, const std::string& kind, std::uint64_t seed) -> CVector {
          return random_symmetric_kernel(SymmetryClass{symmetry_from_string(kind), d}, seed)
              .symbol;
        },
        py::arg("d"), py::arg("kind"), py::arg("seed") = 0);

  m.def("monotone_symmetric_kernel",
        [](int d) -> CVector { return monotone_symmetric_kernel_1d(d).symbol; }, py::arg("d"));

  m.def("simulate_reconstruct",
        [](const std::vector<int>& factors, const CVector& symbol,
           const std::vector<int>& omega, const std::vector<int>& depths, const CVector& f,
           double noise_std, std::uint64_t seed) {
          const Kernel k = make_kernel(factors, symbol);
          const SamplingPlan plan = make_plan(factors, omega, depths);
          const auto samples = simulate_samples(k, f, plan, noise_std, seed);
          const ReconstructionResult r = reconstruct(k, plan, samples);
          py::dict d;
          d["estimate"] = r.estimate;
          d["residual_norm"] = r.residual_norm;
          d["condition_number"] = r.condition_number;
          d["exact"] = r.exact;
          d["rank"] = r.rank;
          d["required_rank"] = r.required_rank;
          return d;
        },
        py::arg("factors"), py::arg("symbol"), py::arg("omega"), py::arg("depths"),
        py::arg("f"), py::arg("noise_std") = 0.0, py::arg("seed") = 0);

  m.def("search_minimal",
        [](const std::vector<int>& factors, const CVector& symbol, int max_size) {
          return search_minimal(make_kernel(factors, symbol), max_size);
        },
        py::arg("factors"), py::arg("symbol"), py::arg("max_size"));

  m.attr("DEFAULT_RANK_TOL") = kDefaultRankTol;
  m.attr("DEFAULT_GROUP_TOL") = kDefaultGroupTol;
}
