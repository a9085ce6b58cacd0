#include "leraytk/cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <condition_variable>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "leraytk/checks.hpp"
#include "leraytk/errors.hpp"
#include "leraytk/helly.hpp"
#include "leraytk/homology.hpp"
#include "leraytk/icss.hpp"
#include "leraytk/io.hpp"
#include "leraytk/leray.hpp"
#include "leraytk/random.hpp"

namespace leraytk::cli {
namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kVersion = LERAYTK_VERSION;
constexpr const char* kWorkersEnv = "LERAYTK_WORKERS";

// Shared settings; each subcommand reads the fields it cares about.
struct Settings {
  std::vector<std::string> files;
  std::optional<std::uint64_t> seed;
  std::size_t count = 1;
  std::size_t workers = 0;  // 0: environment or 1
  bool no_timings = false;

  InstanceBounds bounds;
  std::string method = "links";
  std::size_t k = 0;  // 0: drawn from the seed
  std::size_t r = 2;
  std::size_t d = 2;
  std::optional<std::size_t> fr_r;  // --r for family files
  std::size_t members = 0;          // 0: drawn from the seed
  std::size_t extent = 12;

  LerayOptions leray;
  MultiPointOptions mpc;
  HellyOptions helly;
};

// One instance's contribution to the report stream.
struct Outcome {
  std::vector<Json> lines;
  std::vector<std::string> failures;  // human-readable, for stderr
  int exit_code = kExitOk;
  std::size_t skipped = 0;
};

enum class Status { kHolds, kFailed, kDisagreement, kSkipped };

Json simplex_json(const Simplex& s) { return Json(std::vector<VertexId>(s.begin(), s.end())); }

Json complex_json(const SimplicialComplex& x) { return Json::parse(write_complex(x)); }

std::string read_all(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

std::string read_source(const std::string& file, std::istream& in) {
  if (file.empty() || file == "-") return read_all(in);
  std::ifstream f(file, std::ios::binary);
  if (!f) throw FormatError("cannot open " + file);
  return read_all(f);
}

Json claim(const std::string& name, Json lhs, const std::string& relation, Json rhs, bool holds) {
  Json j;
  j["claim"] = name;
  j["lhs"] = std::move(lhs);
  j["relation"] = relation;
  j["rhs"] = std::move(rhs);
  j["holds"] = holds;
  return j;
}

void record(Outcome& o, Json line, Status status, const std::string& summary = {}) {
  switch (status) {
    case Status::kHolds:
      break;
    case Status::kFailed:
      o.exit_code = std::max(o.exit_code, kExitClaimFailed);
      o.failures.push_back(summary);
      break;
    case Status::kDisagreement:
      o.exit_code = kExitDisagreement;
      o.failures.push_back(summary);
      break;
    case Status::kSkipped:
      line["skipped"] = true;
      ++o.skipped;
      break;
  }
  o.lines.push_back(std::move(line));
}

void record_claim(Outcome& o, Json line) {
  const bool holds = line["holds"].get<bool>();
  std::string summary;
  if (!holds) {
    summary = line["claim"].get<std::string>() + ": " + line["lhs"].dump() + " " +
              line["relation"].get<std::string>() + " " + line["rhs"].dump() + " is false";
  }
  record(o, std::move(line), holds ? Status::kHolds : Status::kFailed, summary);
}

void record_skip(Outcome& o, const std::string& name, const std::string& reason) {
  Json line;
  line["claim"] = name;
  line["reason"] = reason;
  record(o, std::move(line), Status::kSkipped);
}

// ---- instance checks -------------------------------------------------------

void run_lproj(const PartitionedComplex& px, const Settings& s, Outcome& o) {
  const auto rep = check_projection_theorem(px, s.leray);
  Json line = claim("projection_leray_bound", rep.leray_image, "<=", rep.bound, rep.holds);
  line["tight"] = rep.tight;
  line["details"] = {{"leray_x", rep.leray_x},
                     {"fiber_bound", rep.fiber_bound},
                     {"fiber_witness", simplex_json(rep.fiber_witness)},
                     {"leray_image", rep.leray_image}};
  record_claim(o, std::move(line));
}

void run_hmps(std::span<const PartitionedComplex> factors, const Settings& s, Outcome& o) {
  const auto rep = check_mps_vanishing(factors, s.mpc, s.leray);
  const int top = rep.betti.top_nonzero_degree();
  Json line = claim("multiple_point_vanishing", top, "<", rep.threshold, rep.holds);
  line["details"] = {{"k", factors.size()},
                     {"leray_factors", rep.leray_factors},
                     {"reduced_betti", rep.betti.reduced},
                     {"violation_degree", rep.violation_degree}};
  record_claim(o, std::move(line));
}

void run_inter(std::span<const SimplicialComplex> xs, const Settings& s, Outcome& o) {
  const auto rep = check_intersection_bound(xs, s.leray);
  Json line =
      claim("intersection_leray_bound", rep.leray_intersection, "<=", rep.bound, rep.holds);
  line["tight"] = rep.tight;
  line["details"] = {{"leray_factors", rep.leray_factors}, {"vertex_count", xs[0].vertex_count()}};
  record_claim(o, std::move(line));
}

Json page_json(const E1Page& page) {
  return {{"r", page.r},
          {"columns", page.columns},
          {"column_r", page.column_r},
          {"image_betti", page.image_betti}};
}

void run_icss(const PartitionedComplex& px, const Settings& s, Outcome& o, bool with_page) {
  const E1Page page = e1_page(px, s.mpc.simplex_guard);
  const std::size_t leray_x = leray_number(px.complex(), s.leray);
  const std::string base = "image_spectral_sequence_consistency";

  std::size_t column_r_total = 0;
  for (std::size_t v : page.column_r) column_r_total += v;
  Json col = claim(base + ".column_r_vanishes", column_r_total, "==", 0, page.column_r_vanishes());
  if (with_page) col["page"] = page_json(page);
  record_claim(o, std::move(col));

  const auto euler = check_euler(page);
  record_claim(o, claim(base + ".euler_characteristic", euler.chi_image, "==", euler.page_sum,
                        euler.holds));

  const auto vanish = check_proof_vanishing(page, leray_x);
  Json v = claim(base + ".proof_region_vanishing", vanish.violations.size(), "==", 0,
                 vanish.holds);
  v["details"] = {{"leray_x", vanish.leray_x}, {"r", vanish.r}, {"threshold", vanish.threshold}};
  record_claim(o, std::move(v));

  for (std::size_t k = 2; k <= page.r; ++k) {
    const std::string name = base + ".alt_chain_iso";
    try {
      const MultiPointComplex m = multiple_point_complex(px, k, s.mpc);
      const auto iso = check_alt_chain_iso(m, s.mpc.simplex_guard);
      Json line = claim(name, iso.dims_double_point, "==", iso.dims_multiple_point,
                        iso.equal_dimensions && iso.bijective);
      line["details"] = {{"k", k}, {"bijective", iso.bijective}};
      record_claim(o, std::move(line));
    } catch (const GuardExceeded& e) {
      record_skip(o, name, "k = " + std::to_string(k) + ": " + e.what());
    }
  }
}

Json helly_details(const HellyReport& rep) {
  Json j = {{"witness", simplex_json(rep.witness)}, {"nerve_leray", rep.nerve_leray}};
  j["by_definition"] = rep.by_definition ? Json(*rep.by_definition) : Json(nullptr);
  j["routes_agree"] = rep.agree;
  return j;
}

void record_helly(Outcome& o, const HellyReport& rep) {
  Json line = claim("helly_leray_bound", rep.helly_number, "<=", rep.bound, rep.holds);
  line["tight"] = rep.helly_number == rep.bound;
  line["details"] = helly_details(rep);
  if (!rep.agree) {
    record(o, std::move(line), Status::kDisagreement,
           "Helly number routes disagree: " + std::to_string(rep.helly_number) + " vs " +
               std::to_string(*rep.by_definition));
    return;
  }
  record_claim(o, std::move(line));
}

void run_hl_boxes(const BoxFamily& family, const Settings& s, Outcome& o) {
  record_helly(o, helly_number(family, s.helly));
  // Boxes form a good cover, so the nerve is d-Leray.
  const std::size_t l = leray_number(nerve(family), s.leray);
  record_claim(o, claim("nerve_leray_within_dimension", l, "<=", family.dimension,
                        l <= family.dimension));
}

void run_amenta(const FrFamily& family, const Settings& s, Outcome& o) {
  const HellyReport helly = helly_number(family, s.helly);
  if (!helly.agree) {
    record_helly(o, helly);
    return;
  }
  const auto rep = check_amenta(family, s.helly);
  Json line = claim("topological_amenta", rep.helly, "<=", rep.bound, rep.holds);
  line["details"] = {{"d", rep.d},
                     {"r", rep.r},
                     {"members", family.size()},
                     {"pieces", family.pieces.size()}};
  record_claim(o, std::move(line));
  Json chain = claim("topological_amenta.proof_chain", rep.helly, "<=", rep.bound,
                     rep.chain_holds);
  chain["details"] = {{"helly_leray", rep.helly_leray},
                      {"image_matches_nerve", rep.image_matches},
                      {"projection_bound", rep.projection_bound},
                      {"fiber_within_r", rep.fiber_within_r},
                      {"pieces_leray_within_d", rep.pieces_leray_within_d},
                      {"fiber_bound", rep.fiber_bound},
                      {"leray_pieces", rep.leray_pieces},
                      {"leray_groups", rep.leray_groups}};
  record_claim(o, std::move(chain));
}

// ---- seeded instances ------------------------------------------------------

std::size_t draw_in(std::uint64_t seed, std::uint64_t stream, std::size_t lo, std::size_t hi) {
  CounterRng rng(seed, stream);
  return lo + static_cast<std::size_t>(rng.below(hi - lo + 1));
}

constexpr std::uint64_t kShapeStream = 1000;

std::vector<SimplicialComplex> random_shared_pair(const Settings& s, std::uint64_t seed,
                                                  std::size_t k) {
  CounterRng rng(seed, kShapeStream);
  const std::size_t max_n = std::max<std::size_t>(2, std::min<std::size_t>(9, s.bounds.max_vertices));
  const std::size_t n = 2 + static_cast<std::size_t>(rng.below(max_n - 1));
  const std::size_t dim = 1 + static_cast<std::size_t>(rng.below(s.bounds.max_dimension + 1));
  const double density = static_cast<double>(1 + rng.below(7)) / 8.0;
  std::vector<SimplicialComplex> xs;
  for (std::size_t j = 0; j < k; ++j) xs.push_back(random_complex(n, dim, density, seed, j + 1));
  return xs;
}

std::size_t family_size(const Settings& s, std::uint64_t seed) {
  return s.members != 0 ? s.members : draw_in(seed, kShapeStream, 2, 7);
}

// ---- harness ---------------------------------------------------------------

std::size_t worker_count(const Settings& s) {
  if (s.workers != 0) return s.workers;
  if (const char* env = std::getenv(kWorkersEnv)) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

using Job = std::function<void(Outcome&)>;

struct Instance {
  Json descriptor;
  Job job;
};

Outcome execute(const Instance& inst) {
  Outcome o;
  try {
    inst.job(o);
  } catch (const GuardExceeded& e) {
    record_skip(o, "instance", e.what());
  } catch (const std::exception& e) {
    o.lines.clear();
    Json line;
    line["error"] = e.what();
    o.lines.push_back(std::move(line));
    o.failures.push_back(std::string("error: ") + e.what());
    o.exit_code = kExitUsage;
  }
  return o;
}

int run_instances(const std::string& command, const std::vector<Instance>& instances,
                  const Settings& s, std::ostream& out, std::ostream& err) {
  const std::size_t n = instances.size();
  std::vector<std::optional<Outcome>> results(n);
  std::vector<double> elapsed(n, 0.0);
  std::mutex mu;
  std::condition_variable ready;
  std::atomic<std::size_t> next{0};

  auto work = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      const auto start = std::chrono::steady_clock::now();
      Outcome o = execute(instances[i]);
      const std::chrono::duration<double, std::milli> ms = std::chrono::steady_clock::now() - start;
      {
        std::lock_guard lock(mu);
        results[i] = std::move(o);
        elapsed[i] = ms.count();
      }
      ready.notify_all();
    }
  };
  const std::size_t workers = std::min(worker_count(s), std::max<std::size_t>(n, 1));
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);

  int exit_code = kExitOk;
  std::size_t claims = 0, failed = 0, skipped = 0;
  for (std::size_t i = 0; i < n; ++i) {
    Outcome o;
    double ms = 0;
    {
      std::unique_lock lock(mu);
      ready.wait(lock, [&] { return results[i].has_value(); });
      o = std::move(*results[i]);
      ms = elapsed[i];
    }
    for (Json& body : o.lines) {
      Json line;
      line["command"] = command;
      line["instance"] = instances[i].descriptor;
      for (auto& [key, value] : body.items()) line[key] = std::move(value);
      line["version"] = kVersion;
      if (!s.no_timings) line["elapsed_ms"] = std::round(ms * 1000.0) / 1000.0;
      out << line.dump() << '\n';
    }
    out.flush();
    claims += o.lines.size() - o.skipped;
    failed += o.failures.size();
    skipped += o.skipped;
    for (const auto& f : o.failures) err << "FAIL " << instances[i].descriptor.dump() << " " << f << '\n';
    exit_code = std::max(exit_code, o.exit_code);
  }
  for (auto& t : pool) t.join();
  err << command << ": " << n << (n == 1 ? " instance, " : " instances, ") << claims
      << " claims checked, " << failed << " failed, " << skipped << " skipped\n";
  return exit_code;
}

// File mode yields one instance; seeded mode yields `count` instances with
// seeds seed, seed + 1, ...
template <class FromFile, class FromSeed>
std::vector<Instance> instances_for(const Settings& s, std::istream& in, FromFile from_file,
                                    FromSeed from_seed) {
  std::vector<Instance> out;
  if (s.seed) {
    for (std::size_t i = 0; i < s.count; ++i) {
      const std::uint64_t seed = *s.seed + i;
      out.push_back({Json{{"seed", seed}}, [from_seed, seed](Outcome& o) { from_seed(seed, o); }});
    }
    return out;
  }
  const std::string file = s.files.empty() ? "-" : s.files.front();
  const std::string text = read_source(file, in);
  out.push_back({Json{{"file", file}}, from_file(text)});
  return out;
}

// ---- single-instance commands ---------------------------------------------

int cmd_homology(const Settings& s, std::istream& in, std::ostream& out) {
  const auto x = parse_complex(read_source(s.files.empty() ? "-" : s.files.front(), in));
  const auto b = reduced_betti(x, s.leray.simplex_guard);
  out << Json{{"reduced", b.reduced}, {"euler", b.euler}}.dump() << '\n';
  return kExitOk;
}

Json certificate_json(const LerayCertificate& c) {
  Json j = {{"value", c.value}, {"method", std::string(to_string(c.method))}};
  if (c.witness) {
    j["witness"] = {{"where", simplex_json(c.witness->where)}, {"degree", c.witness->degree}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

int cmd_leray(const Settings& s, std::istream& in, std::ostream& out, std::ostream& err) {
  const auto x = parse_complex(read_source(s.files.empty() ? "-" : s.files.front(), in));
  if (s.method == "definition") {
    out << certificate_json(leray_by_definition(x, s.leray)).dump() << '\n';
    return kExitOk;
  }
  if (s.method == "links") {
    out << certificate_json(leray_by_links(x, s.leray)).dump() << '\n';
    return kExitOk;
  }
  const auto a = leray_by_definition(x, s.leray);
  const auto b = leray_by_links(x, s.leray);
  const bool agree = a.value == b.value;
  out << Json{{"value", b.value},
              {"agree", agree},
              {"definition", certificate_json(a)},
              {"links", certificate_json(b)}}
             .dump()
      << '\n';
  if (!agree) {
    err << "leray: methods disagree (definition " << a.value << ", links " << b.value << ")\n";
    return kExitDisagreement;
  }
  err << "leray: " << b.value << " (definition and links agree)\n";
  return kExitOk;
}

int cmd_project(const Settings& s, std::istream& in, std::ostream& out) {
  const auto px = parse_partitioned(read_source(s.files.empty() ? "-" : s.files.front(), in));
  const auto fiber = fiber_bound(px);
  out << Json{{"image", complex_json(project(px))},
              {"fiber_bound", fiber.r},
              {"fiber_witness", simplex_json(fiber.witness)}}
             .dump()
      << '\n';
  return kExitOk;
}

int cmd_mps(const Settings& s, std::istream& in, std::ostream& out, std::ostream& err) {
  std::vector<PartitionedComplex> factors;
  const std::vector<std::string> files = s.files.empty() ? std::vector<std::string>{"-"} : s.files;
  for (const auto& f : files) factors.push_back(parse_partitioned(read_source(f, in)));
  if (factors.size() == 1) {
    const std::size_t k = s.k == 0 ? 2 : s.k;
    factors.assign(k, factors.front());
  } else if (s.k != 0 && s.k != factors.size()) {
    throw CLI::ValidationError("--k", "--k conflicts with the number of input files");
  }
  const auto m = generalized_mpc(factors, s.mpc);
  const auto b = reduced_betti(m.complex, s.mpc.simplex_guard);
  out << Json{{"k", m.k},
              {"complex", complex_json(m.complex)},
              {"reduced", b.reduced},
              {"euler", b.euler}}
             .dump()
      << '\n';
  err << "mps: k = " << m.k << ", " << m.complex.vertex_count() << " vertices, "
      << m.complex.facets().size() << " facets\n";
  return kExitOk;
}

// ---- command table ---------------------------------------------------------

void add_batch_options(CLI::App* app, Settings& s) {
  app->add_option("file", s.files, "Instance file (\"-\" or omitted: standard input)");
  app->add_option("--seed", s.seed, "First seed of a batch run (replaces the input file)");
  app->add_option("--count", s.count, "Number of seeded instances")->check(CLI::PositiveNumber);
  app->add_option("--workers", s.workers,
                  std::string("Worker threads (default: $") + kWorkersEnv + " or 1)");
  app->add_flag("--no-timings", s.no_timings, "Omit elapsed_ms so reports are byte-stable");
}

void add_instance_bounds(CLI::App* app, Settings& s) {
  app->add_option("--max-parts", s.bounds.max_parts, "Parts per random instance")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app->add_option("--max-part-size", s.bounds.max_part_size, "Vertices per part")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app->add_option("--max-dimension", s.bounds.max_dimension, "Dimension of random instances")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app->add_option("--max-vertices", s.bounds.max_vertices, "Vertices per random instance")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
}

void add_guards(CLI::App* app, Settings& s) {
  app->add_option("--simplex-guard", s.leray.simplex_guard, "Largest simplex count enumerated")
      ->capture_default_str();
  app->add_option("--definition-cap", s.leray.max_vertices,
                  "Largest vertex count for the Leray definition scan")
      ->capture_default_str();
  app->add_option("--vertex-guard", s.mpc.vertex_guard,
                  "Bound on sum |V_i|^k for multiple-point complexes")
      ->capture_default_str();
}

void add_family_options(CLI::App* app, Settings& s) {
  app->add_option("--d", s.d, "Ambient dimension of random families")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app->add_option("--members", s.members, "Members per random family (default: 2..7 by seed)");
  app->add_option("--extent", s.extent, "Random box coordinates lie in [0, extent]")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app->add_option("--max-members", s.helly.max_members, "Largest family for the Helly number")
      ->capture_default_str();
  app->add_option("--definition-scan-cap", s.helly.definition_cap,
                  "Largest family for the exhaustive Helly scan")
      ->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Settings s;
  CLI::App app{"Leray numbers, projections, multiple-point complexes and Helly numbers", "leraytk"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  auto* homology = app.add_subcommand("homology", "Reduced Betti numbers of a complex");
  homology->add_option("file", s.files, "Complex file");
  homology->add_option("--simplex-guard", s.leray.simplex_guard)->capture_default_str();

  auto* leray = app.add_subcommand("leray", "Leray number of a complex");
  leray->add_option("file", s.files, "Complex file");
  leray->add_option("--method", s.method, "definition, links or both (exit 3 on disagreement)")
      ->check(CLI::IsMember({"definition", "links", "both"}))
      ->capture_default_str();
  add_guards(leray, s);

  auto* project_cmd = app.add_subcommand("project", "Image pi(X) and fiber bound r(X, pi)");
  project_cmd->add_option("file", s.files, "Partitioned complex file");

  auto* mps = app.add_subcommand("mps", "Multiple-point complex M(X_1, ..., X_k)");
  mps->add_option("file", s.files, "Partitioned complex files (one file: M_k of it)");
  mps->add_option("--k", s.k, "Number of points (default 2)");
  add_guards(mps, s);

  auto* icss = app.add_subcommand("icss", "E1 page of the image computing spectral sequence");
  add_batch_options(icss, s);
  add_instance_bounds(icss, s);
  add_guards(icss, s);

  auto* helly = app.add_subcommand("helly", "Helly number of a box or atom family");
  add_batch_options(helly, s);
  add_family_options(helly, s);
  helly->add_option("--r", s.fr_r, "Pieces per member for random families (default 1)");

  auto* amenta = app.add_subcommand("amenta", "Helly number of an (F, r)-family against r(d + 1)");
  add_batch_options(amenta, s);
  add_family_options(amenta, s);
  amenta->add_option("--r", s.fr_r, "r of the family (default: smallest valid; 2 when seeded)");

  auto* example = app.add_subcommand("example", "Write the extremal projection example");
  example->add_option("--r", s.r, "Fiber bound")->capture_default_str()->check(CLI::PositiveNumber);
  example->add_option("--d", s.d, "Slice dimension")->capture_default_str()->check(CLI::PositiveNumber);

  auto* check = app.add_subcommand("check", "Batch verification of one claim family");
  check->require_subcommand(1);
  std::vector<std::pair<std::string, CLI::App*>> checks;
  for (const auto& [name, about] : std::vector<std::pair<std::string, std::string>>{
           {"lproj", "Leray number of a projection"},
           {"hmps", "Homology vanishing of multiple-point complexes"},
           {"inter", "Leray number of an intersection"},
           {"icss", "E1 page consistency"},
           {"hl", "Helly number against the nerve's Leray number"},
           {"amenta", "Helly number of (F, r)-families"}}) {
    auto* sub = check->add_subcommand(name, about);
    add_batch_options(sub, s);
    add_guards(sub, s);
    if (name == "hl" || name == "amenta") {
      add_family_options(sub, s);
      sub->add_option("--r", s.fr_r, "r of the family");
    } else {
      add_instance_bounds(sub, s);
    }
    if (name == "hmps" || name == "inter") sub->add_option("--k", s.k, "Number of factors");
    checks.emplace_back(name, sub);
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n' << "run with --help for usage\n";
    return kExitUsage;
  }

  try {
    if (homology->parsed()) return cmd_homology(s, in, out);
    if (leray->parsed()) return cmd_leray(s, in, out, err);
    if (project_cmd->parsed()) return cmd_project(s, in, out);
    if (mps->parsed()) return cmd_mps(s, in, out, err);
    if (example->parsed()) {
      out << write_partitioned(extremal_example(s.r, s.d));
      return kExitOk;
    }

    const auto partitioned_file = [&s](auto check_fn) {
      return [&s, check_fn](const std::string& text) -> Job {
        auto px = std::make_shared<PartitionedComplex>(parse_partitioned(text));
        return [&s, px, check_fn](Outcome& o) { check_fn(*px, s, o); };
      };
    };

    const auto lproj_seed = [&s](std::uint64_t seed, Outcome& o) {
      run_lproj(random_instance(s.bounds, seed), s, o);
    };
    const auto icss_seed = [&s](std::uint64_t seed, Outcome& o) {
      run_icss(random_instance(s.bounds, seed), s, o, false);
    };
    const auto hmps_seed = [&s](std::uint64_t seed, Outcome& o) {
      const std::size_t k = s.k != 0 ? s.k : draw_in(seed, kShapeStream, 2, 3);
      const auto factors = random_instance_family(s.bounds, seed, k);
      run_hmps(factors, s, o);
    };
    const auto inter_seed = [&s](std::uint64_t seed, Outcome& o) {
      run_inter(random_shared_pair(s, seed, s.k != 0 ? s.k : 2), s, o);
    };
    // Box families are the pieces of a random (F, 1)-family; with --r > 1
    // the Helly number of the grouped family is reported instead.
    const auto hl_seed = [&s](std::uint64_t seed, Outcome& o) {
      const std::size_t r = s.fr_r.value_or(1);
      const FrFamily fr = random_fr_family(s.d, family_size(s, seed), r, seed, s.extent);
      if (r == 1) {
        run_hl_boxes(fr.pieces, s, o);
      } else {
        record_helly(o, helly_number(fr, s.helly));
      }
    };
    const auto hl_file = [&s](const std::string& text) -> Job {
      if (is_atom_family(text)) {
        auto family = std::make_shared<AtomFamily>(parse_atom_family(text));
        return [&s, family](Outcome& o) { record_helly(o, helly_number(*family, s.helly)); };
      }
      auto groups = parse_box_groups(text);
      const bool plain = std::all_of(groups.members.begin(), groups.members.end(),
                                     [](const auto& m) { return m.size() == 1; });
      auto fr = std::make_shared<FrFamily>(to_fr_family(groups, s.fr_r));
      if (plain) {
        auto boxes = std::make_shared<BoxFamily>(fr->pieces);
        boxes->names = fr->names;
        return [&s, boxes](Outcome& o) { run_hl_boxes(*boxes, s, o); };
      }
      return [&s, fr](Outcome& o) { record_helly(o, helly_number(*fr, s.helly)); };
    };
    const auto amenta_seed = [&s](std::uint64_t seed, Outcome& o) {
      run_amenta(random_fr_family(s.d, family_size(s, seed), s.fr_r.value_or(2), seed, s.extent),
                 s, o);
    };
    const auto amenta_file = [&s](const std::string& text) -> Job {
      auto fr = std::make_shared<FrFamily>(to_fr_family(parse_box_groups(text), s.fr_r));
      return [&s, fr](Outcome& o) { run_amenta(*fr, s, o); };
    };
    const auto hmps_file = [&s](const std::string& text) -> Job {
      auto px = std::make_shared<PartitionedComplex>(parse_partitioned(text));
      return [&s, px](Outcome& o) {
        const std::vector<PartitionedComplex> factors(s.k != 0 ? s.k : 2, *px);
        run_hmps(factors, s, o);
      };
    };
    const auto inter_file = [&s](const std::string& text) -> Job {
      auto x = std::make_shared<SimplicialComplex>(parse_complex(text));
      return [&s, x](Outcome& o) {
        // A single file: X with itself, where the bound is never tight
        // unless L(X) = 0.
        const std::vector<SimplicialComplex> xs(s.k != 0 ? s.k : 2, *x);
        run_inter(xs, s, o);
      };
    };

    if (icss->parsed()) {
      auto inst = instances_for(s, in, partitioned_file([](const PartitionedComplex& px,
                                                           const Settings& st, Outcome& o) {
                                  run_icss(px, st, o, true);
                                }),
                                [&s](std::uint64_t seed, Outcome& o) {
                                  run_icss(random_instance(s.bounds, seed), s, o, true);
                                });
      return run_instances("icss", inst, s, out, err);
    }
    if (helly->parsed()) {
      return run_instances("helly", instances_for(s, in, hl_file, hl_seed), s, out, err);
    }
    if (amenta->parsed()) {
      return run_instances("amenta", instances_for(s, in, amenta_file, amenta_seed), s, out, err);
    }
    for (const auto& [name, sub] : checks) {
      if (!sub->parsed()) continue;
      const std::string command = "check " + name;
      std::vector<Instance> inst;
      if (name == "lproj") {
        inst = instances_for(s, in, partitioned_file(run_lproj), lproj_seed);
      } else if (name == "hmps") {
        inst = instances_for(s, in, hmps_file, hmps_seed);
      } else if (name == "inter") {
        inst = instances_for(s, in, inter_file, inter_seed);
      } else if (name == "icss") {
        inst = instances_for(s, in,
                             partitioned_file([](const PartitionedComplex& px, const Settings& st,
                                                 Outcome& o) { run_icss(px, st, o, false); }),
                             icss_seed);
      } else if (name == "hl") {
        inst = instances_for(s, in, hl_file, hl_seed);
      } else {
        inst = instances_for(s, in, amenta_file, amenta_seed);
      }
      return run_instances(command, inst, s, out, err);
    }
  } catch (const FormatError& e) {
    err << "format error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidArgument& e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitUsage;
  } catch (const GuardExceeded& e) {
    err << "guard exceeded: " << e.what() << " (raise the corresponding --*-guard)\n";
    return kExitUsage;
  } catch (const CLI::ValidationError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }
  err << "usage error: no command\n";
  return kExitUsage;
}

}  // namespace leraytk::cli
