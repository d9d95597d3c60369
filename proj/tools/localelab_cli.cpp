#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "localelab/io.hpp"

using namespace localelab;

namespace {

// LOCALELAB_CAPS="poset=4,points=4,map=6,subloc=16,counterexamples=5" overrides
// the built-in defaults; explicit flags win over the environment.
void apply_env_caps(CorpusConfig& cfg) {
  const char* env = std::getenv("LOCALELAB_CAPS");
  if (!env) return;
  std::stringstream ss(env);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) continue;
    std::string key = item.substr(0, eq);
    int value = 0;
    try {
      value = std::stoi(item.substr(eq + 1));
    } catch (...) {
      continue;
    }
    if (key == "poset") cfg.max_poset = value;
    else if (key == "points") cfg.max_points = value;
    else if (key == "map") cfg.max_map_size = value;
    else if (key == "subloc") cfg.sublocale_cap = value;
    else if (key == "counterexamples") cfg.max_counterexamples = value;
  }
}

Sublocale parse_sublocale_arg(const FramePtr& frame, const std::string& arg) {
  Mask seed = 0;
  std::stringstream ss(arg);
  std::string name;
  while (std::getline(ss, name, ',')) {
    // trim
    auto b = name.find_first_not_of(" \t");
    auto e = name.find_last_not_of(" \t");
    if (b == std::string::npos) continue;
    name = name.substr(b, e - b + 1);
    Elem el = frame->element_by_name(name);
    if (el < 0) fail(Errc::bad_input, "no element named '" + name + "'");
    seed |= elem_bit(el);
  }
  Sublocale s = sublocale_generated_by(frame, seed);
  Mask added = s.members() & ~(seed | elem_bit(frame->top()));
  if (added != 0) {
    std::cerr << "note: input completed to a sublocale; added";
    for (Elem a : bits(added)) std::cerr << " " << frame->name(a);
    std::cerr << "\n";
  }
  return s;
}

int cmd_generate(const CorpusConfig& cfg, const std::string& format) {
  auto frames = frames_from_posets_up_to(cfg.max_poset, std::max(cfg.max_poset, kDefaultPosetCap));
  for (const auto& f : frames) {
    if (format == "json") {
      std::cout << frame_to_json(*f) << "\n";
    } else {
      std::cout << f->label() << ": " << f->size() << " elements, bottom=" << f->name(f->bottom())
                << ", top=" << f->name(f->top()) << (f->is_boolean() ? ", boolean" : "") << "\n";
    }
  }
  return 0;
}

int cmd_classify(const CorpusConfig& cfg, const std::string& frame_path,
                 const std::string& space_path, const std::string& sublocale_arg,
                 const std::string& format) {
  FramePtr frame;
  std::optional<FiniteSpace> space;
  if (!frame_path.empty() && !space_path.empty())
    fail(Errc::bad_input, "give either --frame or --space, not both");
  if (!frame_path.empty()) {
    frame = parse_frame_file(frame_path);
  } else if (!space_path.empty()) {
    space = parse_space_file(space_path);
    frame = open_set_frame(*space);
  } else {
    fail(Errc::bad_input, "classify needs --frame or --space");
  }

  Universe u = Universe::build(frame, std::max(cfg.sublocale_cap, frame->size()));

  Sublocale subject = full_sublocale(frame);
  if (!sublocale_arg.empty()) {
    if (space) {
      // Point subset; classification applies to the induced sublocale.
      Mask pts = 0;
      std::stringstream ss(sublocale_arg);
      std::string tok;
      while (std::getline(ss, tok, ',')) {
        int p = -1;
        try {
          p = std::stoi(tok);
        } catch (...) {
          fail(Errc::bad_input, "point subsets are given by indices, got '" + tok + "'");
        }
        if (p < 0 || p >= space->points()) fail(Errc::bad_input, "point index out of range");
        pts |= elem_bit(p);
      }
      subject = induced_sublocale(*space, pts, frame);
      std::cerr << "induced sublocale of " << space->subset_name(pts) << ": "
                << u.sub_name(subject.members()) << "\n";
      std::cerr << "spatial: nwd=" << spatial_nwd(*space, pts)
                << " maximal_nwd=" << spatial_maximal_nwd(*space, pts)
                << " hmnd=" << spatial_hmnd(*space, pts) << "\n";
    } else {
      subject = parse_sublocale_arg(frame, sublocale_arg);
    }
  }

  Classification c = classify_sublocale(u, subject);
  if (format == "json")
    std::cout << classification_to_json(c, u, subject) << "\n";
  else
    std::cout << classification_to_text(c, u, subject);
  return 0;
}

int cmd_check(const CorpusConfig& cfg, const std::string& id, bool all, const std::string& format) {
  std::vector<CheckReport> reports;
  if (all) {
    reports = run_all(cfg);
  } else if (!id.empty()) {
    reports.push_back(run_check(id, cfg));
  } else {
    fail(Errc::bad_input, "check needs --id <name> or --all");
  }
  bool ok = true;
  std::int64_t vacuous = 0;
  for (const CheckReport& r : reports) {
    ok = ok && r.passed();
    if (r.hypothesis_satisfied == 0) ++vacuous;
  }
  if (format == "json") {
    std::cout << reports_to_json(reports) << "\n";
  } else {
    for (const CheckReport& r : reports) std::cout << report_to_text(r) << "\n";
    std::cout << (ok ? "all checks passed" : "FAILURES PRESENT") << " (" << reports.size()
              << " checks";
    if (vacuous) std::cout << ", " << vacuous << " with empty hypothesis class";
    std::cout << ")\n";
  }
  return ok ? 0 : 1;
}

int cmd_report(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::bad_input, path + ": cannot open");
  std::ostringstream ss;
  ss << in.rdbuf();
  auto reports = reports_from_json(ss.str());
  bool ok = true;
  for (const CheckReport& r : reports) {
    std::cout << report_to_text(r) << "\n";
    ok = ok && r.passed();
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-locale laboratory: frames, sublocales, classification and checks"};
  app.require_subcommand(1);

  CorpusConfig cfg;
  apply_env_caps(cfg);
  std::string format = "text";

  auto add_caps = [&](CLI::App* sub) {
    sub->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--max-poset", cfg.max_poset, "poset size cap for the frame corpus");
    sub->add_option("--max-points", cfg.max_points, "point cap for the space corpus");
    sub->add_option("--max-map-size", cfg.max_map_size, "frame size cap for the map corpus");
    sub->add_option("--max-subloc", cfg.sublocale_cap, "sublocale enumeration cap");
    sub->add_option("--max-counterexamples", cfg.max_counterexamples,
                    "counterexamples retained per check");
    sub->add_option("--jobs", cfg.jobs, "parallel check workers");
  };

  auto* generate = app.add_subcommand("generate", "stream the frame corpus");
  add_caps(generate);

  auto* classify = app.add_subcommand("classify", "classify a sublocale of a frame or space");
  std::string frame_path, space_path, sublocale_arg, check_id;
  classify->add_option("--frame", frame_path, "frame description file");
  classify->add_option("--space", space_path, "space description file");
  classify->add_option("--sublocale", sublocale_arg,
                       "comma-separated element names (or point indices with --space)");
  add_caps(classify);

  auto* check = app.add_subcommand("check", "run registered checks");
  bool all = false;
  check->add_option("--id", check_id, "check id");
  check->add_flag("--all", all, "run the whole registry");
  add_caps(check);

  auto* report = app.add_subcommand("report", "render a JSON report file as text");
  std::string report_path;
  report->add_option("file", report_path, "report file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (generate->parsed()) return cmd_generate(cfg, format);
    if (classify->parsed()) return cmd_classify(cfg, frame_path, space_path, sublocale_arg, format);
    if (check->parsed()) return cmd_check(cfg, check_id, all, format);
    if (report->parsed()) return cmd_report(report_path);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == Errc::bad_input ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
