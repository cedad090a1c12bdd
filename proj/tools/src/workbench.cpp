#include "esgames/workbench.hpp"

#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>

#include "esgames/errors.hpp"
#include "esgames/fixtures.hpp"

namespace esgames::workbench {

namespace {

using json = nlohmann::ordered_json;

template <class O, class F>
O guarded(F&& f) {
  O o;
  try {
    f(o);
  } catch (const BoundExceeded& e) {
    o.code = bound_exceeded;
    o.err += std::string("bound exceeded: ") + e.what() + "\n";
  } catch (const InputError& e) {
    o.code = input_error;
    o.err += std::string("input error: ") + e.what() + "\n";
  } catch (const PreconditionError& e) {
    o.code = failure;
    o.err += std::string("precondition failed: ") + e.what() + "\n";
  } catch (const Error& e) {
    o.code = failure;
    o.err += std::string("error: ") + e.what() + "\n";
  }
  return o;
}

const Document& pick(const Bundle& b, const std::string& ref, std::initializer_list<DocKind> kinds) {
  if (!ref.empty()) {
    const Document& d = b.at(ref);
    for (DocKind k : kinds)
      if (d.kind == k) return d;
    throw InputError("'" + ref + "' is a " + std::string(to_string(d.kind)) + ", which this command cannot use");
  }
  const auto& docs = b.documents();
  for (auto it = docs.rbegin(); it != docs.rend(); ++it)
    for (DocKind k : kinds)
      if (it->kind == k) return *it;
  throw InputError("the bundle has no document of a suitable kind");
}

template <class T>
std::shared_ptr<const T> value(const Document& d) {
  return std::get<std::shared_ptr<const T>>(d.value);
}

}  // namespace

Outcome validate(const std::vector<std::string>& paths, std::optional<DocKind> kind, ReportFormat format) {
  return guarded<Outcome>([&](Outcome& o) {
    SuiteResult all;
    for (const auto& path : paths) {
      SuiteResult r = run_suite(load_bundle_file(path), kind);
      for (auto& c : r.checks) all.checks.push_back(std::move(c));
    }
    o.out = format == ReportFormat::json ? format_json(all) : format_text(all);
    o.code = all.ok() ? pass : failure;
  });
}

Outcome build(const BuildArgs& args) {
  return guarded<Outcome>([&](Outcome& o) {
    const Bundle in = load_bundle_file(args.input);
    auto ref = [&](std::size_t i) { return i < args.refs.size() ? args.refs[i] : std::string(); };
    Bundle out;
    const std::string& c = args.construction;
    if (c == "dual") {
      out.add(args.id, share(dual_game(*value<Game>(pick(in, ref(0), {DocKind::game})))));
    } else if (c == "par") {
      if (args.refs.size() != 2) throw InputError("par needs two --ref arguments");
      out.add(args.id, share(parallel_game(*in.get<Game>(args.refs[0]), *in.get<Game>(args.refs[1]))));
    } else if (c == "bang") {
      out.add(args.id, share(bang_game(*value<Game>(pick(in, ref(0), {DocKind::game})), args.copies)));
    } else if (c == "copycat") {
      Report log;
      const GamePtr g = value<Game>(pick(in, ref(0), {DocKind::game}));
      copycat_es(*g->es, &log);
      for (const auto& v : log.violations()) o.err += v.axiom + ": " + v.message + "\n";
      out.add(args.id, copycat_strategy(g));
    } else if (c == "uniform-copycat") {
      out.add(args.id, uniform_copycat(value<Game>(pick(in, ref(0), {DocKind::game}))));
    } else if (c == "lift" || c == "colift") {
      const auto doc = value<LiftDoc>(pick(in, ref(0), {DocKind::lift_witness}));
      out.add(args.id, c == "lift" ? uniform_lift(doc->witness) : uniform_colift(doc->witness));
    } else if (c == "tcg") {
      out.add(args.id, tcg_from_game(*value<Game>(pick(in, ref(0), {DocKind::game}))));
    } else {
      throw InputError("unknown construction '" + c + "'");
    }
    o.out = dump_bundle(out);
  });
}

SearchOutcome search_uniform(const SearchArgs& args) {
  return guarded<SearchOutcome>([&](SearchOutcome& o) {
    const Bundle in = load_bundle_file(args.input);
    const Document& d = pick(in, args.ref, {DocKind::strategy});
    Limits limits = Limits::defaults();
    if (args.bound) limits.max_search = *args.bound;
    const SearchResult r = search_uniform_structure(*value<Strategy>(d), limits);
    const SearchCertificate& c = r.certificate;
    json cert{{"schema_version", kSchemaVersion},
              {"strategy", d.id},
              {"result", r.uniform ? "found" : "none"},
              {"generators", c.generators},
              {"twisted", c.twisted},
              {"event_map_candidates", c.event_map_candidates},
              {"slice_candidates", c.slice_candidates},
              {"search_size", c.search_size},
              {"examined", c.examined},
              {"exhaustive", c.exhaustive}};
    o.certificate = cert.dump(2) + "\n";
    o.found = r.uniform.has_value();
    if (r.uniform) {
      Bundle out;
      out.add(d.id + "-uniform", *r.uniform);
      o.out = dump_bundle(out);
    } else {
      o.out = o.certificate;
    }
  });
}

Outcome export_dot(const std::string& input, const std::string& ref, DotView view) {
  return guarded<Outcome>([&](Outcome& o) {
    const Bundle in = load_bundle_file(input);
    const Document& d = ref.empty() ? in.documents().empty() ? throw InputError("empty bundle")
                                                             : in.documents().back()
                                    : in.at(ref);
    o.out = esgames::export_dot(d, view);
  });
}

Outcome write_catalog(const std::string& dir) {
  return guarded<Outcome>([&](Outcome& o) {
    std::filesystem::create_directories(dir);
    for (const auto& entry : fixture_catalog()) {
      const auto path = std::filesystem::path(dir) / (entry.name + ".json");
      std::ofstream f(path, std::ios::binary);
      if (!f) throw InputError("cannot write " + path.string());
      f << dump_bundle(entry.bundle);
      o.out += path.string() + "\n";
    }
  });
}

}  // namespace esgames::workbench
