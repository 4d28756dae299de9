#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cubeprod/exact_arith.hpp"
#include "cubeprod/identities.hpp"
#include "cubeprod/local_sieve.hpp"
#include "cubeprod/logio.hpp"
#include "cubeprod/oracle.hpp"
#include "cubeprod/pipeline.hpp"
#include "cubeprod/ternary_cubic.hpp"

namespace py = pybind11;
using namespace cubeprod;

namespace {

py::object to_py_int(const mpz_class& z) {
    return py::module_::import("builtins").attr("int")(z.get_str());
}

py::object to_py_fraction(const mpq_class& q) {
    return py::module_::import("fractions").attr("Fraction")(q.get_str());
}

mpz_class to_mpz(const py::object& n) {
    return mpz_class(py::str(n).cast<std::string>());
}

CoefficientVector make_vector(int k, int i, const std::vector<std::int64_t>& entries) {
    CoefficientVector v;
    v.k = k;
    v.i = i;
    v.entries = entries;
    return v;
}

py::dict certificate_to_dict(const Certificate& cert) {
    py::dict d;
    const nlohmann::json j = certificate_to_json(cert);
    for (const auto& [key, value] : j.items()) d[py::str(key)] = py::str(value.get<std::string>());
    return d;
}

py::dict solution_to_dict(const SolutionRecord& rec) {
    py::dict d;
    d["k"] = rec.k;
    d["i"] = rec.i;
    d["n"] = rec.n;
    d["d"] = rec.d;
    d["y"] = to_py_int(rec.y);
    d["vector"] = rec.vector.entries;
    py::list terms;
    for (const auto& t : rec.terms)
        terms.append(py::make_tuple(t.j, t.coefficient, to_py_int(t.cube_root)));
    d["terms"] = terms;
    return d;
}

py::dict stats_to_dict(const EnumerationStats& stats) {
    py::dict d;
    d["incomplete_nodes"] = stats.incomplete_nodes;
    d["complete_vectors"] = stats.complete_vectors;
    d["survivors"] = stats.survivors;
    return d;
}

std::vector<FilterKind> filters_from_names(const std::vector<std::string>& names) {
    std::vector<FilterKind> filters;
    for (const auto& name : names) {
        auto kind = filter_kind_from_string(name);
        if (!kind) throw std::invalid_argument("unknown filter: " + name);
        filters.push_back(*kind);
    }
    return filters;
}

}  // namespace

PYBIND11_MODULE(cubeprod, m) {
    m.doc() = "Cube certificates for products of arithmetic progressions with one term removed";

    m.def("cube_free_part",
          [](const py::object& n) { return to_py_int(cube_free_part(to_mpz(n))); },
          py::arg("n"), "Unique positive cube-free c with n = c * f^3");

    m.def("is_perfect_cube",
          [](const py::object& n) -> py::object {
              auto root = is_perfect_cube(to_mpz(n));
              return root ? to_py_int(*root) : py::none();
          },
          py::arg("n"), "Exact integer cube root, or None");

    m.def("factor_smooth_part",
          [](const py::object& n, long bound) {
              SmoothFactorization f = factor_smooth_part(to_mpz(n), bound);
              py::dict d;
              d["sign"] = f.sign;
              d["bound"] = f.bound;
              py::dict exponents;
              for (const auto& [p, e] : f.exponents) exponents[py::int_(p)] = e;
              d["exponents"] = exponents;
              d["cofactor"] = to_py_int(f.cofactor);
              return d;
          },
          py::arg("n"), py::arg("bound"));

    m.def("exponent_class",
          [](const py::object& n, long bound) {
              return exponent_class(factor_smooth_part(to_mpz(n), bound));
          },
          py::arg("n"), py::arg("bound"), "Exponent residues mod 3 over primes <= bound");

    m.def("admissible_entries", &admissible_entries, py::arg("k"));

    m.def("enumerate_vectors",
          [](int k, int i, int threads) {
              py::list vectors;
              EnumerationStats stats = enumerate_vectors(
                  k, i, [&](const CoefficientVector& v) { vectors.append(v.entries); }, threads);
              return py::make_tuple(vectors, stats_to_dict(stats));
          },
          py::arg("k"), py::arg("i"), py::arg("threads") = 1);

    m.def("enumerate_survivors",
          [](int k, int i, const std::vector<std::string>& filters, int threads) {
              FilterRunResult run = run_filters(k, i, filters_from_names(filters), threads);
              py::dict d;
              py::list survivors;
              for (const auto& v : run.survivors) survivors.append(v.entries);
              d["survivors"] = survivors;
              d["stats"] = stats_to_dict(run.stats);
              py::dict eliminated;
              for (const auto& [kind, count] : run.eliminated_counts)
                  eliminated[py::str(to_string(kind))] = count;
              d["eliminated"] = eliminated;
              return d;
          },
          py::arg("k"), py::arg("i"),
          py::arg("filters") = std::vector<std::string>{"rank-zero"}, py::arg("threads") = 1);

    m.def("filter_vector",
          [](int k, int i, const std::vector<std::int64_t>& entries,
             const std::vector<std::string>& filters) -> py::object {
              auto cert = apply_filters(make_vector(k, i, entries), filters_from_names(filters));
              return cert ? py::object(certificate_to_dict(*cert)) : py::none();
          },
          py::arg("k"), py::arg("i"), py::arg("entries"),
          py::arg("filters") = std::vector<std::string>{"rank-zero", "three-ones", "bennett",
                                                        "sieve"});

    m.def("selmer_invariant",
          [](const py::object& a, const py::object& b, const py::object& c) {
              return to_py_int(selmer_invariant({to_mpz(a), to_mpz(b), to_mpz(c), {}}));
          },
          py::arg("a"), py::arg("b"), py::arg("c"));

    m.def("rank_zero_table", [] { return rank_zero_list(); });

    m.def("sieve",
          [](int k, int i, const std::vector<std::int64_t>& entries, long modulus) {
              SieveReport report = sieve(make_vector(k, i, entries), modulus);
              py::dict d;
              d["modulus"] = report.modulus;
              d["feasible"] = report.feasible;
              d["surviving_residue_pairs"] = report.surviving_residue_pairs;
              return d;
          },
          py::arg("k"), py::arg("i"), py::arg("entries"), py::arg("modulus"));

    m.def("verify_solution",
          [](int k, int i, std::int64_t n, std::int64_t d) {
              return solution_to_dict(verify_solution(k, i, n, d));
          },
          py::arg("k"), py::arg("i"), py::arg("n"), py::arg("d"));

    m.def("involute",
          [](int k, int i, std::int64_t n, std::int64_t d) {
              return solution_to_dict(involute(verify_solution(k, i, n, d)));
          },
          py::arg("k"), py::arg("i"), py::arg("n"), py::arg("d"));

    m.def("theorem_table", [] {
        py::list records;
        for (const auto& rec : theorem_table()) records.append(solution_to_dict(rec));
        return records;
    });

    m.def("derive_theorem",
          [](int threads, int max_k) {
              py::list records;
              for (const auto& rec : derive_theorem(threads, max_k).all_records)
                  records.append(solution_to_dict(rec));
              return records;
          },
          py::arg("threads") = 1, py::arg("max_k") = 11);

    m.def("search_window",
          [](int k, int i, std::int64_t n_min, std::int64_t n_max, std::int64_t d_max) {
              py::list records;
              for (const auto& rec : search_window({n_min, n_max, d_max, k, i}))
                  records.append(solution_to_dict(rec));
              return records;
          },
          py::arg("k"), py::arg("i"), py::arg("n_min"), py::arg("n_max"), py::arg("d_max"));

    m.def("search_all_windows",
          [](std::int64_t n_min, std::int64_t n_max, std::int64_t d_max, int threads) {
              py::list records;
              for (const auto& rec : search_all_windows(n_min, n_max, d_max, threads))
                  records.append(solution_to_dict(rec));
              return records;
          },
          py::arg("n_min"), py::arg("n_max"), py::arg("d_max"), py::arg("threads") = 1);

    m.def("search_pair_cubics",
          [](std::int64_t height) {
              py::list quads;
              for (const auto& q : search_pair_cubics(height))
                  quads.append(py::make_tuple(q.x, q.y, q.z, q.w));
              return quads;
          },
          py::arg("height"));

    m.def("search_cubic_field_relation",
          [](std::int64_t height) {
              py::list hits;
              for (const auto& rel : search_cubic_field_relation(height)) {
                  py::dict d;
                  d["x"] = rel.x;
                  d["y"] = rel.y;
                  d["u"] = py::make_tuple(to_py_fraction(rel.u.c0), to_py_fraction(rel.u.c1),
                                          to_py_fraction(rel.u.c2));
                  hits.append(d);
              }
              return hits;
          },
          py::arg("height"));

    m.def("corollary_points",
          [](long height) {
              py::list points;
              for (const auto& p : corollary_points(height))
                  points.append(py::make_tuple(to_py_fraction(p.x), to_py_fraction(p.y)));
              return points;
          },
          py::arg("height"));

    m.def("run_identities", [] {
        py::list entries;
        for (const auto& entry : run_identity_suite().entries) {
            py::dict d;
            d["name"] = entry.name;
            d["value"] = entry.value;
            d["ok"] = entry.ok;
            entries.append(d);
        }
        return entries;
    });

    m.attr("__version__") = kVersion;
}
