#include "irrbase/cli.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "irrbase/chains.hpp"
#include "irrbase/realize.hpp"
#include "irrbase/report.hpp"
#include "irrbase/verify.hpp"

namespace irrbase::cli {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

unsigned order_bits(const BigInt& n) {
  return n <= 1 ? 0u : static_cast<unsigned>(boost::multiprecision::msb(n)) + 1;
}

ordered_json estimate_json(const SizeEstimate& e) {
  ordered_json j;
  if (order_bits(e.points) <= 64) j["points"] = e.points.str();
  j["points_bits"] = order_bits(e.points);
  j["order_bits"] = order_bits(e.order);
  return j;
}

void emit(std::ostream& out, const ordered_json& j) { out << j.dump(2) << "\n"; }

struct RealizeOptions {
  std::size_t min = 0;
  std::size_t max = 0;
  bool instantiate = false;
  std::string emit_spec;
  std::optional<std::uint64_t> explicit_f;
  bool timings = false;
};

struct AnalyzeOptions {
  std::string spec_path;
  bool lengths = false;
  bool min_base = false;
  bool max_irredundant = false;
  std::string chain;
  bool timings = false;
};

struct VerifyOptions {
  std::string level = "quick";
  bool json = false;
};

ordered_json analysis(const Instance& inst, std::optional<Timings> timings, const Clock::time_point t_built,
                      bool* matches) {
  const IntervalReport rep = achievable_lengths(inst.group);
  if (timings) timings->search_seconds = since(t_built);
  *matches = inst.spec.expected_lengths.empty() || rep.lengths == inst.spec.expected_lengths;
  return report_envelope(inst, rep, timings);
}

int do_realize(const RealizeOptions& o, std::ostream& out, std::ostream& err) {
  const GroupSpec spec = witness_spec({o.min, o.max}, o.explicit_f);
  const ordered_json spec_json = to_json(spec);
  if (!o.emit_spec.empty()) {
    std::ofstream f(o.emit_spec);
    if (!f || !(f << spec_json.dump(2) << "\n")) throw InputError("cannot write " + o.emit_spec);
  }
  const ResourceGuard guard = ResourceGuard::from_env();
  SizeEstimate est;
  try {
    est = check_guard(spec, guard);
  } catch (const GuardError& e) {
    emit(out, {{"spec", spec_json}, {"instantiated", false}, {"estimate", estimate_json(e.estimate())}});
    err << e.what() << "\n";
    return kGuardRefused;
  }
  if (!o.instantiate) {
    emit(out, {{"spec", spec_json}, {"instantiated", false}, {"estimate", estimate_json(est)}});
    return kOk;
  }
  const auto t0 = Clock::now();
  const Instance inst = instantiate(spec, guard);
  std::optional<Timings> timings;
  if (o.timings) timings = Timings{since(t0), 0};
  bool matches = false;
  emit(out, analysis(inst, timings, Clock::now(), &matches));
  if (!matches) err << "computed lengths differ from the expected interval\n";
  return matches ? kOk : kVerificationFailed;
}

BaseSequence parse_points(const std::string& text, const DomainPtr& domain) {
  json arr;
  try {
    arr = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("--chain expects a JSON array: ") + e.what());
  }
  if (!arr.is_array()) throw InputError("--chain expects a JSON array");
  BaseSequence seq{domain, {}};
  for (const auto& v : arr) {
    if (v.is_number_unsigned()) {
      const auto i = v.get<std::uint64_t>();
      if (i >= domain->size()) throw InputError("point " + std::to_string(i) + " outside the domain");
      seq.points.push_back(static_cast<Point>(i));
    } else if (v.is_string()) {
      const auto i = domain->index_of(v.get<std::string>());
      if (!i) throw InputError("unknown point label " + v.get<std::string>());
      seq.points.push_back(*i);
    } else {
      throw InputError("--chain entries must be indices or labels");
    }
  }
  return seq;
}

int do_analyze(const AnalyzeOptions& o, std::ostream& out, std::ostream& err) {
  std::ifstream f(o.spec_path);
  if (!f) throw InputError("cannot read " + o.spec_path);
  json j;
  try {
    j = json::parse(f);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("spec is not JSON: ") + e.what());
  }
  const GroupSpec spec = group_spec_from_json(j);
  const ResourceGuard guard = ResourceGuard::from_env();
  try {
    check_guard(spec, guard);
  } catch (const GuardError& e) {
    emit(out, {{"spec", to_json(spec)}, {"instantiated", false}, {"estimate", estimate_json(e.estimate())}});
    err << e.what() << "\n";
    return kGuardRefused;
  }
  const auto t0 = Clock::now();
  const Instance inst = instantiate(spec, guard);
  std::optional<Timings> timings;
  if (o.timings) timings = Timings{since(t0), 0};
  const auto t1 = Clock::now();

  auto header = [&] {
    return ordered_json{{"spec", to_json(inst.spec)},
                        {"domain_size", inst.domain->size()},
                        {"group_order", inst.group.order().str()}};
  };
  auto add_timings = [&](ordered_json& r) {
    if (!timings) return;
    timings->search_seconds = since(t1);
    r["timings"] = {{"build_seconds", timings->build_seconds}, {"search_seconds", timings->search_seconds}};
  };

  if (!o.chain.empty()) {
    const BaseSequence seq = parse_points(o.chain, inst.domain);
    ordered_json r = header();
    r["points"] = seq.labels();
    r["chain"] = to_json(chain_report(inst.group, seq));
    add_timings(r);
    emit(out, r);
    return kOk;
  }
  if (o.min_base || o.max_irredundant) {
    ordered_json r = header();
    if (o.min_base) {
      const auto b = min_base_length(inst.group);
      r["b"] = b.length;
      r["b_witness"] = b.witness.labels();
    }
    if (o.max_irredundant) {
      const auto m = max_irredundant_length(inst.group);
      r["I"] = m.length;
      r["I_witness"] = m.witness.labels();
    }
    add_timings(r);
    emit(out, r);
    return kOk;
  }
  bool matches = false;
  emit(out, analysis(inst, timings, t1, &matches));
  if (!matches) err << "computed lengths differ from expected_lengths\n";
  return matches ? kOk : kVerificationFailed;
}

int do_verify(const VerifyOptions& o, std::ostream& out) {
  const verify::Level level = o.level == "full" ? verify::Level::kFull : verify::Level::kQuick;
  ordered_json results = ordered_json::array();
  const auto all = verify::run_checks(level, [&](const verify::CheckResult& r) {
    if (!o.json) out << (r.passed ? "PASS " : "FAIL ") << r.id << "  " << r.title << "  [" << r.detail << "]\n" << std::flush;
  });
  bool ok = true;
  for (const auto& r : all) {
    ok = ok && r.passed;
    auto j = verify::to_json(r);
    j.erase("seconds");
    results.push_back(std::move(j));
  }
  if (o.json) emit(out, {{"level", o.level}, {"passed", ok}, {"checks", results}});
  return ok ? kOk : kVerificationFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Irredundant base lengths of permutation groups"};
  app.require_subcommand(1);

  RealizeOptions ro;
  auto* realize = app.add_subcommand("realize", "Witness group for the interval {min..max}");
  realize->add_option("--min", ro.min, "Smallest length")->required()->check(CLI::Range(std::size_t{2}, std::size_t{64}));
  realize->add_option("--max", ro.max, "Largest length")->required()->check(CLI::Range(std::size_t{2}, std::size_t{64}));
  realize->add_flag("--instantiate", ro.instantiate, "Build the group and compute its lengths");
  realize->add_option("--emit-spec", ro.emit_spec, "Write the GroupSpec JSON to this path");
  realize->add_option("--explicit-f", ro.explicit_f, "Use this squarefree f instead of a product of the first primes");
  realize->add_flag("--timings", ro.timings, "Include wall-clock timings");

  AnalyzeOptions ao;
  auto* analyze = app.add_subcommand("analyze", "Analyze a GroupSpec JSON file");
  analyze->add_option("--spec", ao.spec_path, "GroupSpec JSON file")->required();
  auto* mode = analyze->add_option_group("mode");
  mode->add_flag("--lengths", ao.lengths, "All irredundant base lengths (default)");
  mode->add_flag("--min-base", ao.min_base, "Minimum base length");
  mode->add_flag("--max-irredundant", ao.max_irredundant, "Maximum irredundant base length");
  mode->add_option("--chain", ao.chain, "Stabilizer chain along a JSON array of indices or labels");
  mode->require_option(0, 1);
  analyze->add_flag("--timings", ao.timings, "Include wall-clock timings");

  VerifyOptions vo;
  auto* verify = app.add_subcommand("verify-paper", "Run the built-in verification suite");
  verify->add_option("--level", vo.level, "quick or full")->check(CLI::IsMember({"quick", "full"}));
  verify->add_flag("--json", vo.json, "Emit one JSON document");

  try {
    std::vector<std::string> args;
    for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    std::ostringstream os;
    app.exit(e, os, os);
    err << os.str();
    return e.get_exit_code() == 0 ? kOk : kInvalidInput;
  }

  try {
    if (*realize) {
      if (ro.max < ro.min) throw InputError("--max must be at least --min");
      return do_realize(ro, out, err);
    }
    if (*analyze) return do_analyze(ao, out, err);
    return do_verify(vo, out);
  } catch (const GuardError& e) {
    err << e.what() << "\n";
    return kGuardRefused;
  } catch (const InputError& e) {
    err << "invalid input: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const DomainError& e) {
    err << "invalid input: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const UnsupportedIntervalError& e) {
    err << "invalid input: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const SpecMismatchError& e) {
    err << "invalid input: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kVerificationFailed;
  }
}

}  // namespace irrbase::cli
