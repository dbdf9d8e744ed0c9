#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "admperm/io.hpp"
#include "admperm/oracles.hpp"
#include "admperm/runs.hpp"

namespace py = pybind11;
using namespace admperm;

namespace {

std::vector<std::string> qvec_strs(const QVec& v) {
  std::vector<std::string> out;
  for (const Rat& x : v) out.push_back(x.str());
  return out;
}

QVec qvec_of_strs(const std::vector<std::string>& v) {
  QVec out;
  for (const std::string& s : v) out.push_back(Rat::parse(s));
  return out;
}

Coweight coweight_of(const RootDatum& d, const std::string& selector) {
  return make_coweight(d, parse_coweight_selector(d, selector));
}

py::dict report_dict(const EnumReport& r) {
  py::dict out;
  out["type"] = r.type_label;
  out["coweight"] = r.mu_desc;
  out["set"] = r.kind;
  out["cardinality"] = r.cardinality;
  out["wall_seconds"] = r.wall_seconds;
  out["workers"] = r.workers;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact computations with mu-admissible and mu-permissible sets "
            "of (extended) affine Weyl groups";

  py::register_exception<BudgetError>(m, "BudgetError");

  py::class_<RootDatum, std::shared_ptr<RootDatum>>(m, "RootDatum")
      .def_readonly("type", &RootDatum::type_label)
      .def_readonly("rank", &RootDatum::rank)
      .def_readonly("dim", &RootDatum::dim)
      .def_readonly("marks", &RootDatum::marks)
      .def_property_readonly("num_roots", &RootDatum::num_roots)
      .def_property_readonly(
          "weyl_order", [](const RootDatum& d) { return d.weyl_order(); })
      .def("root", [](const RootDatum& d, int i) { return qvec_strs(d.roots.at(i)); },
           py::arg("i"), "Coordinates of the i-th root (positives first)")
      .def("coroot",
           [](const RootDatum& d, int i) { return qvec_strs(d.coroots.at(i)); })
      .def("fundamental_coweight",
           [](const RootDatum& d, int i) {
             return qvec_strs(d.fundamental_coweights.at(i - 1));
           },
           py::arg("i"), "rho_i, 1-based")
      .def("alcove_vertices",
           [](const RootDatum& d) {
             std::vector<std::vector<std::string>> out;
             for (const QVec& v : alcove_vertices(d)) out.push_back(qvec_strs(v));
             return out;
           })
      .def("to_json", &root_datum_to_json)
      .def("__repr__", [](const RootDatum& d) {
        return "<RootDatum " + d.type_label + ", " + std::to_string(d.num_roots()) +
               " roots>";
      });

  m.def("build_root_datum",
        [](const std::string& label) {
          return std::make_shared<RootDatum>(build_root_datum(label));
        },
        py::arg("type"));

  m.def("weyl_length",
        [](const RootDatum& d, const std::vector<int>& word) {
          return length(d, from_word(d, word));
        },
        py::arg("datum"), py::arg("word"));

  m.def("reduced_word",
        [](const RootDatum& d, const std::vector<int>& word) {
          return reduced_word(d, from_word(d, word));
        },
        py::arg("datum"), py::arg("word"),
        "Canonical reduced word of the product of the given simple reflections");

  m.def("bruhat_le",
        [](const RootDatum& d, const std::vector<int>& u, const std::vector<int>& w) {
          return bruhat_le(d, from_word(d, u), from_word(d, w));
        },
        py::arg("datum"), py::arg("u_word"), py::arg("w_word"));

  m.def("min_coset_rep_word",
        [](const RootDatum& d, const std::vector<int>& word,
           const std::vector<int>& I) {
          return reduced_word(d, min_coset_rep(d, from_word(d, word), I,
                                               CosetSide::kLeft));
        },
        py::arg("datum"), py::arg("word"), py::arg("I"));

  m.def("orbit_size",
        [](const RootDatum& d, const std::string& coweight) {
          return orbit(d, coweight_of(d, coweight).vec).size();
        },
        py::arg("datum"), py::arg("coweight"));

  m.def("stabilizer_simple_indices",
        [](const RootDatum& d, const std::string& coweight) {
          return stabilizer_simple_indices(d, coweight_of(d, coweight).vec);
        });

  m.def("is_minuscule",
        [](const RootDatum& d, const std::string& coweight) {
          return is_minuscule(d, coweight_of(d, coweight));
        });

  m.def("translation_im_length",
        [](const RootDatum& d, const std::string& coweight) {
          return im_length(d, aff_translation(d, coweight_of(d, coweight).vec));
        });

  m.def("check_element",
        [](const RootDatum& d, const std::string& coweight,
           const std::vector<std::string>& lambda, const std::vector<int>& word) {
          Coweight mu = coweight_of(d, coweight);
          ExtAffElt x = aff_make(d, qvec_of_strs(lambda), from_word(d, word));
          PermResult perm = is_permissible(d, mu, x);
          py::dict out;
          out["permissible"] = perm.permissible;
          std::optional<HeLamPair> pair;
          bool adm;
          try {
            pair = helam_pair(d, mu, x);
            adm = pair->admissible;
          } catch (const std::invalid_argument&) {
            adm = is_admissible_direct(d, mu, x);
          }
          bool haines = haines_necessary(d, mu, x);
          out["admissible"] = adm;
          out["haines"] = haines;
          out["certificate_json"] = certificate_to_json(
              d, mu, x, perm, pair ? &*pair : nullptr, &haines);
          return out;
        },
        py::arg("datum"), py::arg("coweight"), py::arg("lambda"), py::arg("word"),
        "Permissibility/admissibility verdicts for x = t_lambda * w");

  m.def("check_pair_element",
        [](const RootDatum& d, const std::string& coweight,
           const std::vector<int>& left_word, const std::vector<int>& right_word) {
          Coweight mu = coweight_of(d, coweight);
          ExtAffElt x = aff_mul(
              d,
              aff_mul(d, aff_from_finite(d, from_word(d, left_word)),
                      aff_translation(d, mu.vec)),
              aff_from_finite(d, weyl_inverse(from_word(d, right_word))));
          py::dict out;
          out["permissible"] = is_permissible(d, mu, x).permissible;
          out["admissible"] = is_admissible_helam(d, mu, x);
          out["haines"] = haines_necessary(d, mu, x);
          return out;
        },
        py::arg("datum"), py::arg("coweight"), py::arg("w2_word"), py::arg("w1_word"),
        "Verdicts for x = w2 t_mu w1^{-1}");

  m.def("verify_counterexample",
        [](const std::string& which) {
          CounterexampleCase c;
          if (which == "e6" || which == "E6") {
            c = CounterexampleCase::kE6;
          } else if (which == "e7" || which == "E7") {
            c = CounterexampleCase::kE7;
          } else {
            throw std::invalid_argument("case must be e6 or e7");
          }
          CounterexampleReport r = verify_counterexample(c);
          py::dict out;
          out["case"] = r.case_label;
          out["all_pass"] = r.all_pass;
          py::list checks;
          for (const SubCheck& sc : r.checks) {
            py::dict e;
            e["name"] = sc.name;
            e["pass"] = sc.pass;
            e["detail"] = sc.detail;
            checks.append(e);
          }
          out["checks"] = checks;
          out["permissible"] = r.perm.permissible;
          out["admissible"] = r.pair.admissible;
          out["haines"] = r.haines;
          out["certificate_json"] = counterexample_report_to_json(r);
          return out;
        },
        py::arg("case"));

  m.def("enumerate_sets",
        [](const RootDatum& d, const std::string& coweight, const std::string& kind,
           int workers, const std::string& cache_dir) {
          Coweight mu = coweight_of(d, coweight);
          EnumOptions opt;
          opt.workers = workers;
          opt.cache_dir = cache_dir;
          KrEnumerator en(d, mu, opt);
          py::dict out;
          if (kind == "adm") {
            out["adm"] = report_dict(en.enumerate_adm());
          } else if (kind == "perm") {
            out["perm"] = report_dict(en.enumerate_perm());
          } else if (kind == "both") {
            BothReport b = en.enumerate_both();
            out["adm"] = report_dict(b.adm);
            out["perm"] = report_dict(b.perm);
            out["subset_ok"] = b.subset_ok;
            out["difference"] = b.difference;
          } else {
            throw std::invalid_argument("kind must be adm, perm or both");
          }
          return out;
        },
        py::arg("datum"), py::arg("coweight"), py::arg("kind") = "both",
        py::arg("workers") = 1, py::arg("cache_dir") = "");

  m.def("crosscheck",
        [](int max_rank) {
          CrosscheckOptions opt;
          opt.max_rank = max_rank;
          std::ostringstream text;
          bool ok = run_crosscheck_suites(opt, text);
          return py::make_tuple(ok, text.str());
        },
        py::arg("max_rank") = 3);

  m.def("recheck_certificate", [](const std::string& json_text) {
    RecheckResult r = recheck_certificate(json_text);
    return py::make_tuple(r.ok, r.detail);
  });

#ifdef VERSION_INFO
#define ADMPERM_STR(x) #x
#define ADMPERM_XSTR(x) ADMPERM_STR(x)
  m.attr("__version__") = ADMPERM_XSTR(VERSION_INFO);
#else
  m.attr("__version__") = "dev";
#endif
}
