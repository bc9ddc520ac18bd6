// wha: verify weak Hopf specs, twist them, build the mixed algebroid.
//
// Exit codes: 0 every record passed, 1 a mathematical check failed,
// 2 bad input or usage.

#include "wha/algebroid.hpp"
#include "wha/groupoid.hpp"
#include "wha/io.hpp"
#include "wha/twist.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

namespace fs = std::filesystem;
using namespace wha;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct Output {
  std::string report_path;
  std::string format = "text";
  bool timings = false;

  int emit(const Report& r) const {
    std::string text = format == "json" ? r.to_json(timings) : r.to_text(timings);
    if (report_path.empty()) {
      std::cout << text;
    } else {
      io::write_file(report_path, text);
      std::cout << (r.all_passed() ? "PASS " : "FAIL ") << r.id() << " -> " << report_path << "\n";
    }
    return r.all_passed() ? kPass : kFail;
  }
};

struct TwistArgs {
  std::string u, v;
};

// The pair comes from --u/--v, else from a twist file.
std::optional<std::pair<Vec, Vec>> twist_pair(const io::Loaded& in, const TwistArgs& a, std::size_t n) {
  if (!a.u.empty() || !a.v.empty()) {
    if (a.u.empty() || a.v.empty()) throw io::ParseError("--u and --v must be given together");
    return std::make_pair(io::parse_vector(a.u, n), io::parse_vector(a.v, n));
  }
  if (in.u && in.v) return std::make_pair(*in.u, *in.v);
  return std::nullopt;
}

int cmd_verify(const std::string& file, const Output& out) {
  io::Loaded in = io::load(file);
  WeakHopfData d = analyze(std::move(in.spec));
  return out.emit(verify_weak_hopf(d));
}

int cmd_twist(const std::string& file, const TwistArgs& args, bool solve, const std::string& emit_path,
              const Output& out) {
  io::Loaded in = io::load(file);
  WeakHopfData d = analyze(std::move(in.spec));
  if (solve) {
    TwistSolutions s;
    Report r = solve_report(d, &s);
    if (!emit_path.empty() && !s.candidates.empty()) {
      // Prefer a candidate that actually deforms the coproduct.
      const TwistCandidate* pick = &s.candidates.front();
      for (const auto& c : s.candidates) {
        TwistPair p = check_twist_condition(d, c.u, c.v);
        if (twisted_spec(d, p).coproduct != d.spec.coproduct) {
          pick = &c;
          break;
        }
      }
      TwistPair p = check_twist_condition(d, pick->u, pick->v);
      io::write_file(emit_path, io::write_weak_hopf(twisted_spec(d, p)));
    }
    return out.emit(r);
  }
  auto uv = twist_pair(in, args, d.spec.dim());
  if (!uv) throw io::ParseError("twist needs --u and --v, --solve, or a twist file");
  std::optional<TwistedData> t;
  Report r = verify_twist(d, uv->first, uv->second, &t);
  if (!emit_path.empty() && t) io::write_file(emit_path, io::write_weak_hopf(t->primed.spec));
  return out.emit(r);
}

int cmd_algebroid(const std::string& file, const TwistArgs& args, const Output& out) {
  io::Loaded in = io::load(file);
  WeakHopfData d = analyze(std::move(in.spec));
  auto uv = twist_pair(in, args, d.spec.dim());
  if (!uv) throw io::ParseError("algebroid needs --u and --v or a twist file");
  return out.emit(algebroid_report(d, uv->first, uv->second));
}

// Generator-backed run: base suite, twist suite and algebroid suite per seed.
int cmd_selftest(std::uint64_t seed, std::size_t count, const Output& out) {
  Report all("selftest");
  for (std::uint64_t s = seed; s < seed + count; ++s) {
    RandomInstance ri = random_instance(s);
    std::string p = "seed" + std::to_string(s) + ".";
    all.append(verify_weak_hopf(ri.data), p + "base.");
    all.append(verify_twist(ri.data, ri.twist.u, ri.twist.v), p);
    all.append(algebroid_report(ri.data, ri.twist.u, ri.twist.v), p);
  }
  return out.emit(all);
}

std::size_t parse_size(const std::string& s, const std::string& what) {
  try {
    std::size_t pos = 0;
    unsigned long long k = std::stoull(s, &pos);
    if (pos == s.size()) return static_cast<std::size_t>(k);
  } catch (const std::exception&) {
  }
  throw io::ParseError("bad " + what + ": " + s);
}

int cmd_generate(const std::string& what, const std::string& out_path, const std::string& twist_out, bool groupoid) {
  auto colon = what.find(':');
  if (colon == std::string::npos) throw io::ParseError("generator must be pair:k, cyclic:m or random:seed");
  std::string kind = what.substr(0, colon), arg = what.substr(colon + 1);
  std::size_t k = parse_size(arg, kind + " argument");
  std::optional<FiniteGroupoid> g;
  std::optional<TwistElements> tw;
  if (kind == "pair") {
    if (k == 0) throw io::ParseError("pair:k needs k >= 1");
    g = FiniteGroupoid::pair(k);
  } else if (kind == "cyclic") {
    if (k == 0) throw io::ParseError("cyclic:m needs m >= 1");
    g = FiniteGroupoid::cyclic(k);
  } else if (kind == "random") {
    RandomInstance ri = random_instance(k);
    g = ri.groupoid;
    tw = ri.twist;
  } else {
    throw io::ParseError("unknown generator: " + kind);
  }
  WeakHopfSpec spec = groupoid_algebra(*g, what);
  std::string text = groupoid ? io::write_groupoid(*g) : io::write_weak_hopf(spec);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    io::write_file(out_path, text);
  }
  if (!twist_out.empty()) {
    if (!tw) throw io::ParseError("--twist-out needs a random:seed generator");
    if (out_path.empty()) {
      io::write_file(twist_out, io::write_twist(spec, tw->u, tw->v));
    } else {
      // Reference the spec relative to the twist file.
      fs::path base = fs::absolute(fs::path(twist_out)).parent_path();
      std::string ref = fs::relative(fs::absolute(out_path), base).generic_string();
      io::write_file(twist_out, io::write_twist(spec, tw->u, tw->v, ref));
    }
  }
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verifier for weak Hopf algebras, their twists and algebroids"};
  app.require_subcommand(1);
  Output out;
  app.add_option("--report", out.report_path, "write the report here instead of stdout");
  app.add_option("--format", out.format, "report format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--timings", out.timings, "include per-record timings (breaks byte-identity)");

  std::string file;
  TwistArgs targs;

  auto* verify = app.add_subcommand("verify", "run the weak Hopf suite on a spec")->fallthrough();
  verify->add_option("file", file, "spec file (weak-hopf, groupoid or twist)")->required();

  bool solve = false;
  std::string emit_path;
  auto* twist = app.add_subcommand("twist", "check a twist pair, or solve for twist pairs")->fallthrough();
  twist->add_option("file", file, "spec file, or a twist file carrying u and v")->required();
  auto* uopt = twist->add_option("--u", targs.u, "comma-separated coordinates of u");
  auto* vopt = twist->add_option("--v", targs.v, "comma-separated coordinates of v");
  auto* sopt = twist->add_flag("--solve", solve, "solve E(w⊗1)E = E and list candidate pairs");
  sopt->excludes(uopt)->excludes(vopt);
  twist->add_option("--emit", emit_path, "write the twisted spec here");

  auto* algebroid = app.add_subcommand("algebroid", "build and check the mixed algebroid of a twist")->fallthrough();
  algebroid->add_option("file", file, "spec file, or a twist file carrying u and v")->required();
  algebroid->add_option("--u", targs.u, "comma-separated coordinates of u");
  algebroid->add_option("--v", targs.v, "comma-separated coordinates of v");

  std::uint64_t seed = 0;
  std::size_t count = 1;
  auto* selftest = app.add_subcommand("selftest", "run every suite on seeded random instances")->fallthrough();
  selftest->add_option("--seed", seed, "first seed");
  selftest->add_option("--count", count, "number of seeds")->check(CLI::Range(std::size_t{1}, std::size_t{100000}));

  std::string what, out_path, twist_out;
  bool as_groupoid = false;
  auto* generate = app.add_subcommand("generate", "emit a groupoid-algebra spec");
  generate->add_option("what", what, "pair:k, cyclic:m or random:seed")->required();
  generate->add_option("--out", out_path, "spec output path (default stdout)");
  generate->add_option("--twist-out", twist_out, "also write the random diagonal twist (random:seed only)");
  generate->add_flag("--groupoid", as_groupoid, "write the groupoid tables instead of the weak Hopf spec");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kPass : kUsage;
  }

  try {
    if (*verify) return cmd_verify(file, out);
    if (*twist) return cmd_twist(file, targs, solve, emit_path, out);
    if (*algebroid) return cmd_algebroid(file, targs, out);
    if (*selftest) return cmd_selftest(seed, count, out);
    if (*generate) return cmd_generate(what, out_path, twist_out, as_groupoid);
  } catch (const io::ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kUsage;
  } catch (const StructureError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}
