// polynum: command-line front end.
//
//   polynum gen cube 3 [--out cube3.json]
//   polynum gen pyramid --base square.json
//   polynum triangulate --builtin cube:3
//   polynum partition --builtin cross:3 --seed 2
//   polynum sequence --builtin cube:3 --method h --n 5 [--interior]
//   polynum pipeline --builtin cube:3 --builtin cross:4 --n 12 [--summary]
//
// Exit status: 0 all claims pass, 1 a claim failed, 2 usage or input error.

#include <fstream>
#include <future>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "polynum/polynum.hpp"

namespace {

using namespace polynum;

constexpr int kPass = 0;
constexpr int kClaimFailure = 1;
constexpr int kUsageError = 2;
constexpr std::int64_t kMaxN = 10000;

struct Source {
  std::vector<std::string> builtins;
  std::vector<std::string> inputs;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--builtin", builtins, "builtin polytope, e.g. cube:3, cross:4, pyramid:square");
    cmd->add_option("--input", inputs, "polytope JSON file");
  }

  std::vector<PolytopeWithLattice> load() const {
    std::vector<PolytopeWithLattice> out;
    for (const auto& b : builtins) out.push_back(builtin(b));
    for (const auto& f : inputs) out.push_back(read_polytope_file(f));
    if (out.empty()) throw CLI::ValidationError("one of --builtin or --input is required");
    return out;
  }

  PolytopeWithLattice load_one() const {
    auto all = load();
    if (all.size() != 1) throw CLI::ValidationError("this command takes exactly one polytope");
    return std::move(all.front());
  }
};

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw GeometryError("cannot write " + out_path);
  out << text;
}

int run_gen(const std::string& family, const std::vector<std::string>& args, const std::string& base_path,
            const std::string& out_path) {
  PolytopeWithLattice pl;
  if (family == "pyramid" || family == "prism" || family == "bipyramid") {
    PolytopeWithLattice base;
    if (!base_path.empty()) base = read_polytope_file(base_path);
    else if (args.size() == 1) base = builtin(args[0]);
    else throw CLI::ValidationError(family + " needs --base file.json or a builtin base");
    pl = family == "pyramid" ? pyramid_over(base) : family == "prism" ? prism_over(base) : bipyramid_over(base);
  } else if (args.empty()) {
    pl = builtin(family);
  } else if (args.size() == 1) {
    pl = builtin(family + ":" + args[0]);
  } else {
    throw CLI::ValidationError("too many arguments to gen");
  }
  emit(polytope_to_json(pl).dump(2) + "\n", out_path);
  return kPass;
}

int run_triangulate(const Source& src, std::uint64_t seed, const std::string& profile, const std::string& out_path) {
  auto tri = triangulate(src.load_one(), seed);
  if (profile == "debug") {
    auto cert = verify_pointed(tri);
    if (!cert.ok) {
      std::cerr << "pointedness condition " << cert.failed_condition << " failed: " << cert.detail << "\n";
      return kClaimFailure;
    }
  }
  emit(triangulation_to_json(tri).dump() + "\n", out_path);
  return kPass;
}

int run_partition(const Source& src, std::uint64_t seed, const std::string& out_path) {
  auto tri = triangulate(src.load_one(), seed);
  auto g = generic_point(tri, seed);
  auto ext = exterior_partition(tri, g);
  auto in = interior_partition(tri, g);
  auto split = split_boundary_interior(tri);
  bool ok = verify_partition(ext, tri.complex()).ok && verify_partition(in, split.interior).ok;
  if (!ok) {
    std::cerr << "partition failed verification\n";
    return kClaimFailure;
  }
  auto h = h_from_partition(ext, tri.complex());
  auto k = k_from_partition(in, split.interior);
  emit(partition_to_json(ext, in, g, h, k).dump() + "\n", out_path);
  return kPass;
}

SequenceResult closed_form_sequence(const std::string& name, int d, std::int64_t n_max, bool interior) {
  SequenceResult r{{}, Method::closed_form, interior, std::nullopt};
  auto family = name.substr(0, name.find(':'));
  if (interior && family != "simplex") throw CLI::ValidationError("closed-form interior sequences exist only for simplex");
  for (std::int64_t n = 0; n <= n_max; ++n) {
    if (family == "simplex") r.values.push_back(interior ? simplex_interior(d, n) : simplex_number(d, n));
    else if (family == "cube") r.values.push_back(measure_number(d, n));
    else if (family == "cross") r.values.push_back(cross_number(d, n));
    else throw CLI::ValidationError("closed-form method needs a simplex, cube or cross builtin");
  }
  return r;
}

int run_sequence(const Source& src, const std::string& method_name, bool interior, std::int64_t n_max,
                 std::uint64_t seed, const std::string& out_path) {
  auto method = parse_method(method_name);
  if (!method) throw CLI::ValidationError("unknown method '" + method_name + "'");
  if (*method == Method::k_decomposition && !interior) throw CLI::ValidationError("--method k needs --interior");
  auto pl = src.load_one();
  auto tri = triangulate(pl, seed);
  const int d = tri.dim();
  auto h = h_from_f(f_vector(tri.complex(), d), d);
  Counts k;
  if (d >= 1) k = k_from_partition(interior_partition(tri, generic_point(tri, seed)), split_boundary_interior(tri).interior);

  SequenceResult r;
  switch (*method) {
    case Method::recursive: r = polytope_number_recursive(tri.lattice, tri.apexes, n_max, interior); break;
    case Method::simplex_sum: r = polytope_number_simplex_sum(tri, n_max, interior); break;
    case Method::h_decomposition: r = sequence_from_h(h, d, n_max, interior); break;
    case Method::k_decomposition:
      if (k.empty()) throw CLI::ValidationError("k-decomposition needs dimension >= 1");
      r = sequence_from_k(k, d, n_max);
      break;
    case Method::closed_form: r = closed_form_sequence(pl.polytope.name, d, n_max, interior); break;
  }
  emit(sequence_to_json(pl.polytope.name, r, h, k).dump() + "\n", out_path);
  return kPass;
}

int run_pipeline_cmd(const Source& src, std::uint64_t seed, std::int64_t n_max, bool summary,
                     const std::string& out_path) {
  auto polytopes = src.load();
  RunConfig cfg{seed, n_max, 3};
  std::vector<std::future<VerificationReport>> jobs;
  for (const auto& pl : polytopes)
    jobs.push_back(std::async(std::launch::async, [&pl, cfg] { return run_pipeline(pl, cfg); }));
  std::string text;
  bool ok = true;
  for (auto& j : jobs) {
    auto rep = j.get();
    ok = ok && rep.all_pass();
    text += summary ? rep.summary().dump() + "\n" : rep.ndjson();
  }
  emit(text, out_path);
  return ok ? kPass : kClaimFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pointed triangulations, visibility partitions and polytope numbers"};
  app.require_subcommand(1);

  std::string out_path;
  std::uint64_t seed = 0;
  std::int64_t n_max = 15;
  std::string profile = "debug";

  auto* gen = app.add_subcommand("gen", "write a builtin polytope as JSON");
  std::string family, base_path;
  std::vector<std::string> gen_args;
  gen->add_option("family", family, "simplex|cube|cross|pyramid|prism|bipyramid|square|triangle")->required();
  gen->add_option("args", gen_args, "dimension, or a builtin base for pyramid/prism/bipyramid");
  gen->add_option("--base", base_path, "base polytope JSON for pyramid/prism/bipyramid");
  gen->add_option("--out", out_path, "output file (default stdout)");

  Source tri_src, part_src, seq_src, pipe_src;

  auto* tri = app.add_subcommand("triangulate", "pointed triangulation as JSON");
  tri_src.add_to(tri);
  tri->add_option("--seed", seed, "seed for the generic functional fallback");
  tri->add_option("--profile", profile, "debug verifies pointedness; release-checks skips it")
      ->check(CLI::IsMember({"debug", "release-checks"}));
  tri->add_option("--out", out_path, "output file (default stdout)");

  auto* part = app.add_subcommand("partition", "exterior and interior visibility partitions as JSON");
  part_src.add_to(part);
  part->add_option("--seed", seed, "seed for the generic point search");
  part->add_option("--out", out_path, "output file (default stdout)");

  auto* seq = app.add_subcommand("sequence", "polytope number sequence as JSON");
  std::string method = "recursive";
  bool interior = false;
  seq_src.add_to(seq);
  seq->add_option("--method", method, "recursive|simplex-sum|h|k|closed-form");
  seq->add_flag("--interior", interior, "interior numbers P(n)^#");
  seq->add_option("--n", n_max, "last n")->check(CLI::Range(std::int64_t{0}, kMaxN));
  seq->add_option("--seed", seed, "seed for generic functional and point");
  seq->add_option("--out", out_path, "output file (default stdout)");

  auto* pipe = app.add_subcommand("pipeline", "run every verification claim; NDJSON report");
  bool summary = false;
  pipe_src.add_to(pipe);
  pipe->add_option("--n", n_max, "last n for sequence agreement")->check(CLI::Range(std::int64_t{0}, kMaxN));
  pipe->add_option("--seed", seed, "seed for generic functional and points");
  pipe->add_flag("--summary", summary, "one summary record per polytope");
  pipe->add_option("--out", out_path, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    if (*gen) return run_gen(family, gen_args, base_path, out_path);
    if (*tri) return run_triangulate(tri_src, seed, profile, out_path);
    if (*part) return run_partition(part_src, seed, out_path);
    if (*seq) return run_sequence(seq_src, method, interior, n_max, seed, out_path);
    if (*pipe) return run_pipeline_cmd(pipe_src, seed, n_max, summary, out_path);
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const GeometryError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}
