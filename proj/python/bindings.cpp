#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "localelab/io.hpp"

namespace py = pybind11;
using namespace localelab;

namespace {

std::vector<Elem> members_list(Mask m) {
  std::vector<Elem> out;
  for (Elem a : bits(m)) out.push_back(a);
  return out;
}

Elem checked(const FiniteFrame& f, Elem a) {
  if (a < 0 || a >= f.size()) fail(Errc::bad_input, "element index out of range");
  return a;
}

Mask mask_of(const FramePtr& f, const std::vector<Elem>& members) {
  Mask m = 0;
  for (Elem a : members) {
    if (a < 0 || a >= f->size()) fail(Errc::bad_input, "element index out of range");
    m |= elem_bit(a);
  }
  return m;
}

py::dict report_dict(const CheckReport& r) {
  py::dict d;
  d["id"] = r.id;
  d["anchor"] = r.anchor;
  d["instances"] = r.instances;
  d["hypothesisSatisfied"] = r.hypothesis_satisfied;
  d["elapsedMs"] = r.elapsed_ms;
  py::list fails;
  for (const auto& ce : r.failures) {
    py::dict f;
    f["instance"] = ce.instance;
    f["witness"] = ce.witness;
    fails.append(f);
  }
  d["failures"] = fails;
  d["passed"] = r.passed();
  return d;
}

CorpusConfig config_of(int max_poset, int max_points, int max_map_size, int sublocale_cap,
                       int max_counterexamples, int jobs) {
  CorpusConfig cfg;
  cfg.max_poset = max_poset;
  cfg.max_points = max_points;
  cfg.max_map_size = max_map_size;
  cfg.sublocale_cap = sublocale_cap;
  cfg.max_counterexamples = max_counterexamples;
  cfg.jobs = jobs;
  return cfg;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "finite locale laboratory core";

  py::register_exception<Error>(m, "LocaleError");

  py::class_<FiniteFrame, std::shared_ptr<FiniteFrame>>(m, "Frame")
      .def_property_readonly("size", &FiniteFrame::size)
      .def_property_readonly("label", &FiniteFrame::label)
      .def_property_readonly("bottom", &FiniteFrame::bottom)
      .def_property_readonly("top", &FiniteFrame::top)
      .def("name", [](const FiniteFrame& f, Elem a) { return f.name(checked(f, a)); })
      .def("element", &FiniteFrame::element_by_name)
      .def("leq", [](const FiniteFrame& f, Elem a, Elem b) { return f.leq(checked(f, a), checked(f, b)); })
      .def("meet", [](const FiniteFrame& f, Elem a, Elem b) { return f.meet(checked(f, a), checked(f, b)); })
      .def("join", [](const FiniteFrame& f, Elem a, Elem b) { return f.join(checked(f, a), checked(f, b)); })
      .def("heyting",
           [](const FiniteFrame& f, Elem a, Elem b) { return f.heyting(checked(f, a), checked(f, b)); })
      .def("pseudocomplement",
           [](const FiniteFrame& f, Elem a) { return f.pseudocomplement(checked(f, a)); })
      .def("is_dense", [](const FiniteFrame& f, Elem a) { return f.is_dense(checked(f, a)); })
      .def("is_complemented",
           [](const FiniteFrame& f, Elem a) { return f.is_complemented(checked(f, a)); })
      .def("rather_below",
           [](const FiniteFrame& f, Elem a, Elem b) { return f.rather_below(checked(f, a), checked(f, b)); })
      .def("completely_below",
           [](const FiniteFrame& f, Elem a, Elem b) {
             return f.completely_below(checked(f, a), checked(f, b));
           })
      .def("is_point", [](const FiniteFrame& f, Elem a) { return f.is_point(checked(f, a)); })
      .def("is_boolean", &FiniteFrame::is_boolean)
      .def("is_completely_regular", &FiniteFrame::is_completely_regular)
      .def("dense_elements", [](const FiniteFrame& f) { return members_list(f.dense_elements()); })
      .def("__repr__",
           [](const FiniteFrame& f) {
             return "<Frame " + f.label() + " n=" + std::to_string(f.size()) + ">";
           });

  py::class_<Sublocale>(m, "Sublocale")
      .def_property_readonly("frame", &Sublocale::frame)
      .def_property_readonly("members", [](const Sublocale& s) { return members_list(s.members()); })
      .def_property_readonly("bottom", &Sublocale::bottom)
      .def("nucleus", [](const Sublocale& s, Elem a) { return s.nucleus(checked(*s.frame(), a)); })
      .def("is_void", &Sublocale::is_void)
      .def("is_dense", &Sublocale::is_dense)
      .def("__eq__", [](const Sublocale& a, const Sublocale& b) { return a == b; })
      .def("__repr__", [](const Sublocale& s) {
        std::string r = "<Sublocale {";
        bool first = true;
        for (Elem a : bits(s.members())) {
          if (!first) r += ",";
          r += s.frame()->name(a);
          first = false;
        }
        return r + "}>";
      });

  m.def("chain_frame", &chain_frame);
  m.def("boolean_frame", &boolean_frame);
  m.def("product_frame", &product_frame);
  m.def("downset_frame", [](int size, const std::vector<std::pair<int, int>>& covers) {
    return downset_frame(PosetSeed{size, covers});
  });
  m.def("build_frame",
        [](int n, const std::vector<std::pair<int, int>>& leq_pairs,
           const std::vector<std::string>& names) {
          return build_frame_from_pairs(n, leq_pairs, names);
        },
        py::arg("n"), py::arg("leq_pairs"), py::arg("names") = std::vector<std::string>{});
  m.def("all_frames_up_to", &all_frames_up_to, py::arg("max_elems"),
        py::arg("poset_cap") = kDefaultPosetCap);
  m.def("frames_from_posets_up_to", &frames_from_posets_up_to, py::arg("max_poset"),
        py::arg("poset_cap") = kDefaultPosetCap);
  m.def("frames_isomorphic",
        [](const FramePtr& a, const FramePtr& b) { return frames_isomorphic(*a, *b); });
  m.def("parse_frame", &parse_frame_text, py::arg("text"), py::arg("origin") = "<python>");
  m.def("frame_to_json", [](const FramePtr& f) { return frame_to_json(*f); });

  m.def("sublocale", [](const FramePtr& f, const std::vector<Elem>& members) {
    return Sublocale(f, mask_of(f, members) | elem_bit(f->top()));
  });
  m.def("sublocale_generated_by", [](const FramePtr& f, const std::vector<Elem>& seed) {
    return sublocale_generated_by(f, mask_of(f, seed));
  });
  m.def("void_sublocale", &void_sublocale);
  m.def("full_sublocale", &full_sublocale);
  m.def("closed_sublocale",
        [](const FramePtr& f, Elem a) { return closed_sublocale(f, checked(*f, a)); });
  m.def("open_sublocale", [](const FramePtr& f, Elem a) { return open_sublocale(f, checked(*f, a)); });
  m.def("booleanization", &booleanization);
  m.def("closure", &closure);
  m.def("interior", &interior);
  m.def("boundary", &boundary);
  m.def("join", [](const Sublocale& a, const Sublocale& b) { return join(a, b); });
  m.def("intersect", [](const Sublocale& a, const Sublocale& b) { return intersect(a, b); });
  m.def("supplement", [](const Sublocale& s, int cap) { return supplement(s, cap); },
        py::arg("s"), py::arg("cap") = kDefaultSublocaleCap);
  m.def("is_closed", &is_closed);
  m.def("is_open", &is_open);
  m.def("is_nowhere_dense", &is_nowhere_dense);
  m.def("is_nowhere_dense_in", &is_nowhere_dense_in);
  m.def("nd_sublocale", &nd_sublocale);
  m.def("enumerate_sublocales",
        [](const FramePtr& f, int cap) { return enumerate_sublocales(f, cap); }, py::arg("frame"),
        py::arg("cap") = kDefaultSublocaleCap);

  m.def("is_maximal_nwd", [](const Sublocale& n) {
    auto r = is_maximal_nwd(n);
    return py::make_tuple(r.value, r.witness ? py::cast(*r.witness) : py::none());
  });
  m.def("is_hmnd", &is_hmnd);
  m.def("is_weakly_hmnd", &is_weakly_hmnd);
  m.def("is_remote", &is_remote);

  py::class_<FiniteSpace>(m, "Space")
      .def(py::init([](int points, const std::vector<std::vector<int>>& opens,
                       const std::string& label) {
             std::vector<Mask> masks;
             for (const auto& o : opens) {
               Mask u = 0;
               for (int p : o) {
                 if (p < 0 || p >= points) fail(Errc::bad_input, "point index out of range");
                 u |= elem_bit(p);
               }
               masks.push_back(u);
             }
             return FiniteSpace(points, std::move(masks), label);
           }),
           py::arg("points"), py::arg("opens"), py::arg("label") = std::string{})
      .def_property_readonly("points", &FiniteSpace::points)
      .def_property_readonly("label", &FiniteSpace::label)
      .def_property_readonly("opens",
                             [](const FiniteSpace& x) {
                               std::vector<std::vector<Elem>> out;
                               for (Mask u : x.opens()) out.push_back(members_list(u));
                               return out;
                             })
      .def("__repr__", [](const FiniteSpace& x) {
        return "<Space " + x.label() + " points=" + std::to_string(x.points()) + ">";
      });
  m.def("parse_space", &parse_space_text, py::arg("text"), py::arg("origin") = "<python>");
  m.def("open_set_frame", &open_set_frame);
  m.def("induced_sublocale", [](const FiniteSpace& x, const std::vector<int>& points,
                                const FramePtr& frame) {
    Mask a = 0;
    for (int p : points) a |= elem_bit(p);
    return induced_sublocale(x, a, frame);
  });
  m.def("spatial_nwd", [](const FiniteSpace& x, const std::vector<int>& pts) {
    Mask a = 0;
    for (int p : pts) a |= elem_bit(p);
    return spatial_nwd(x, a);
  });
  m.def("spatial_maximal_nwd", [](const FiniteSpace& x, const std::vector<int>& pts) {
    Mask a = 0;
    for (int p : pts) a |= elem_bit(p);
    return spatial_maximal_nwd(x, a);
  });
  m.def("spatial_hmnd", [](const FiniteSpace& x, const std::vector<int>& pts) {
    Mask a = 0;
    for (int p : pts) a |= elem_bit(p);
    return spatial_hmnd(x, a);
  });
  m.def("spaces_up_to_homeo", &spaces_up_to_homeo);

  m.def("localic_maps", [](const FramePtr& l, const FramePtr& m2, int cap) {
    py::list out;
    for (const LocalicMap& f : enumerate_localic_maps(l, m2, cap)) {
      py::dict d;
      d["label"] = f.label;
      d["f"] = f.f;
      d["f_star"] = f.f_star;
      d["open"] = is_open_map(f);
      d["dense_to_dense"] = sends_dense_to_dense(f);
      d["star_dense_to_dense"] = star_sends_dense_to_dense(f);
      d["injective"] = is_injective(f);
      out.append(d);
    }
    return out;
  }, py::arg("source"), py::arg("target"), py::arg("cap") = kDefaultMapCap);

  m.def("classify",
        [](const FramePtr& f, const std::vector<Elem>& members, int cap) {
          Universe u = Universe::build(f, std::max(cap, f->size()));
          Sublocale s(f, mask_of(f, members) | elem_bit(f->top()));
          Classification c = classify_sublocale(u, s);
          py::dict flags, witnesses;
          for (const auto& [k, v] : c.flags) flags[py::cast(k)] = v;
          for (const auto& [k, v] : c.witnesses) witnesses[py::cast(k)] = v;
          py::dict out;
          out["flags"] = flags;
          out["witnesses"] = witnesses;
          return out;
        },
        py::arg("frame"), py::arg("members"), py::arg("cap") = 16);

  m.def("check_ids", [] {
    std::vector<std::string> ids;
    for (const auto& c : check_registry()) ids.push_back(c.id);
    return ids;
  });
  m.def("run_check",
        [](const std::string& id, int max_poset, int max_points, int max_map_size,
           int sublocale_cap, int max_counterexamples, int jobs) {
          return report_dict(run_check(
              id, config_of(max_poset, max_points, max_map_size, sublocale_cap,
                            max_counterexamples, jobs)));
        },
        py::arg("id"), py::arg("max_poset") = 4, py::arg("max_points") = 4,
        py::arg("max_map_size") = 6, py::arg("sublocale_cap") = 16,
        py::arg("max_counterexamples") = 5, py::arg("jobs") = 1);
  m.def("run_all",
        [](int max_poset, int max_points, int max_map_size, int sublocale_cap,
           int max_counterexamples, int jobs) {
          py::list out;
          for (const auto& r : run_all(config_of(max_poset, max_points, max_map_size,
                                                 sublocale_cap, max_counterexamples, jobs)))
            out.append(report_dict(r));
          return out;
        },
        py::arg("max_poset") = 4, py::arg("max_points") = 4, py::arg("max_map_size") = 6,
        py::arg("sublocale_cap") = 16, py::arg("max_counterexamples") = 5, py::arg("jobs") = 1);
}
