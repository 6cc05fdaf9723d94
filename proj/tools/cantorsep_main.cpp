// Command-line surface: build exact construction geometry, compute
// certified content bounds, select gap sequences, build and validate
// separation certificates, and render construction stages as SVG.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "cantorsep/capacity_bounds.hpp"
#include "cantorsep/certificate.hpp"
#include "cantorsep/content_bounds.hpp"
#include "cantorsep/delta_selector.hpp"
#include "cantorsep/errors.hpp"
#include "cantorsep/json_io.hpp"
#include "cantorsep/stages.hpp"
#include "cantorsep/svg_render.hpp"

namespace {

using namespace cantorsep;

constexpr int kExitOk = 0;
constexpr int kExitVerdictFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr int kExitDomain = 4;
constexpr int kExitInconclusive = 5;

int default_precision() {
  if (const char* env = std::getenv("CANTORSEP_PRECISION")) {
    const int bits = std::atoi(env);
    if (bits >= 2) return bits;
  }
  return 128;
}

Rational require_rational(const std::string& text, const std::string& flag) {
  const auto value = parse_rational(text);
  if (!value) {
    throw CLI::ValidationError(flag, "expected a rational like 1/27, 3 or 0.25");
  }
  return *value;
}

std::vector<Rational> parse_rational_list(const std::string& text, const std::string& flag) {
  std::vector<Rational> out;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    out.push_back(require_rational(item, flag));
  }
  return out;
}

DeltaSequence parse_sequence_spec(const std::string& spec) {
  if (spec == "default") return DeltaSequence::default_render();
  if (spec.rfind("geometric:", 0) == 0) {
    const auto params = parse_rational_list(spec.substr(10), "--seq");
    if (params.size() != 2) {
      throw CLI::ValidationError("--seq", "geometric:A,R takes exactly two rationals");
    }
    return DeltaSequence::geometric(params[0], params[1]);
  }
  if (spec.rfind("explicit:", 0) == 0) {
    return DeltaSequence::explicit_list(parse_rational_list(spec.substr(9), "--seq"));
  }
  if (spec.rfind("file:", 0) == 0) {
    const std::string path = spec.substr(5);
    std::ifstream in(path);
    if (!in) throw std::ios_base::failure("cannot read sequence file: " + path);
    Json doc = Json::parse(in);
    if (doc.contains("sequence")) return sequence_from_json(doc["sequence"]);
    return sequence_from_json(doc);
  }
  throw CLI::ValidationError(
      "--seq", "expected default, geometric:A,R, explicit:w0,w1,... or file:PATH");
}

void write_text(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::ios_base::failure("cannot open output file: " + path);
  out << content;
  if (!out) throw std::ios_base::failure("write failed: " + path);
}

void write_json(const std::string& path, const Json& doc) {
  write_text(path, doc.dump(2) + "\n");
}

struct BuildArgs {
  int depth = 0;
  std::string seq = "default";
  std::string what = "fm";
  std::string output = "-";
};

int run_build(const BuildArgs& args) {
  const DeltaSequence seq = parse_sequence_spec(args.seq);
  if (args.what == "fm") {
    write_json(args.output, geometry_json(stage_region(seq, args.depth), "stage",
                                          args.depth, seq));
  } else if (args.what == "complement") {
    write_json(args.output, geometry_json(complement_region(seq, args.depth),
                                          "complement", args.depth, seq));
  } else if (args.what == "em") {
    RectRegion line;
    for (const auto& [lo, hi] : residual_intervals(seq, args.depth)) {
      line.add(Rect(lo, hi, Rational(0), Rational(0)));
    }
    write_json(args.output, geometry_json(line, "residual", args.depth, seq));
  } else if (args.what == "crosses") {
    RectRegion strips;
    for (const auto& cross : crosses(seq, args.depth)) {
      strips.add(cross.horizontal_strip);
      strips.add(cross.vertical_strip);
    }
    write_json(args.output, geometry_json(strips, "crosses", args.depth, seq));
  } else {
    throw CLI::ValidationError("--what", "expected fm, complement, em or crosses");
  }
  return kExitOk;
}

struct BoundArgs {
  bool lemma1 = false;
  bool lemma2 = false;
  bool oracle = false;
  std::string delta = "1/27";
  int n0 = 2;
  std::string seq = "default";
  std::string side;
  int depth = 1;
  std::string what = "complement";
  long long budget = 1'000'000;
  int precision = 128;
  std::string output = "-";
};

int run_bound(const BoundArgs& args) {
  const int modes = int(args.lemma1) + int(args.lemma2) + int(args.oracle);
  if (modes != 1) {
    throw CLI::ValidationError("bound", "choose exactly one of --lemma1, --lemma2, --oracle");
  }
  if (args.lemma1) {
    const Rational delta = require_rational(args.delta, "--delta");
    Json doc = content_bound_json(
        ContentBound{gap_square_content_bound(delta, args.n0, args.precision),
                     FormulaTag::lemma1, args.precision},
        "lemma1");
    doc["cover_sum"] = rational_pair(gap_square_cover_sum(delta, args.n0));
    doc["delta"] = rational_pair(delta);
    doc["n0"] = args.n0;
    write_json(args.output, doc);
    return kExitOk;
  }
  if (args.lemma2) {
    const DeltaSequence seq = parse_sequence_spec(args.seq);
    const SeriesBound series = gap_series_bound(seq, args.precision);
    Json doc;
    if (series.converged()) {
      doc = content_bound_json(
          ContentBound{*series.value, FormulaTag::lemma2_series, args.precision},
          "lemma2");
    } else {
      doc["schema"] = kContentBoundSchema;
      doc["method"] = "lemma2";
      doc["value"] = nullptr;
    }
    doc["series"] = series_bound_json(series);
    write_json(args.output, doc);
    return series.converged() ? kExitOk : kExitVerdictFail;
  }
  const DeltaSequence seq = parse_sequence_spec(args.seq);
  const RectRegion region = args.what == "fm" ? stage_region(seq, args.depth)
                                              : complement_region(seq, args.depth);
  const Rational side = require_rational(args.side, "--side");
  CoverPolicy policy;
  policy.budget = args.budget;
  ContentBound bound = region_content_upper(region, side, policy);
  write_json(args.output, content_bound_json(bound, "oracle"));
  return kExitOk;
}

struct SelectArgs {
  std::string eps;
  int precision = 128;
  std::string output = "-";
};

int run_select(const SelectArgs& args) {
  const Rational eps = require_rational(args.eps, "--eps");
  const DeltaSequence seq = select_geometric(eps, args.precision);
  const SequenceReport report = verify_sequence(seq, eps, args.precision);
  Json doc;
  doc["schema"] = "cantorsep/selection/v1";
  doc["epsilon"] = rational_pair(eps);
  doc["sequence"] = sequence_json(seq);
  doc["report"] = verify_report_json(report);
  write_json(args.output, doc);
  return report.pass() ? kExitOk : kExitVerdictFail;
}

struct CertifyArgs {
  int precision = 128;
  int refine = 0;
  std::string convention = "side";
  std::string output = "cert.json";
};

int run_certify(const CertifyArgs& args) {
  CertificateOptions options;
  options.precision_bits = args.precision;
  options.refine_steps = args.refine;
  if (args.convention == "side") {
    options.convention = ContentConvention::side;
  } else if (args.convention == "diameter") {
    options.convention = ContentConvention::diameter;
  } else {
    throw CLI::ValidationError("--convention", "expected side or diameter");
  }
  const CounterexampleCertificate cert = build_certificate(options);
  write_json(args.output, certificate_to_json(cert));
  std::cout << "certificate written to " << args.output << " (precision "
            << cert.precision_bits << " bits, target_eps "
            << to_fraction_string(cert.target_eps) << ")\n";
  return kExitOk;
}

struct ValidateArgs {
  std::string path;
  int precision = 0;  // 0: use stored precision
};

int run_validate(const ValidateArgs& args) {
  std::ifstream in(args.path);
  if (!in) throw std::ios_base::failure("cannot read certificate: " + args.path);
  Json doc = Json::parse(in);
  const auto result = validate_certificate(
      doc, args.precision > 0 ? std::optional<int>(args.precision) : std::nullopt);
  std::cout << result.audit_log;
  return result.pass ? kExitOk : kExitVerdictFail;
}

struct RenderArgs {
  int depth = 2;
  std::string seq = "default";
  int size = 640;
  int margin = 48;
  std::string output = "-";
};

int run_render(const RenderArgs& args) {
  RenderStyle style;
  style.canvas_px = args.size;
  style.margin_px = args.margin;
  const DeltaSequence seq = parse_sequence_spec(args.seq);
  write_text(args.output, render_stage_svg(seq, args.depth, style));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact middle-thirds cross construction with certified "
               "content/capacity separation"};
  app.require_subcommand(1);
  const int precision = default_precision();

  BuildArgs build_args;
  auto* build = app.add_subcommand("build", "emit construction geometry as JSON");
  build->add_option("--depth", build_args.depth, "construction depth m")->required();
  build->add_option("--seq", build_args.seq, "gap sequence spec");
  build->add_option("--what", build_args.what, "fm | complement | em | crosses");
  build->add_option("-o,--output", build_args.output, "output path or -");

  BoundArgs bound_args;
  bound_args.precision = precision;
  auto* bound = app.add_subcommand("bound", "compute a certified content bound");
  bound->add_flag("--lemma1", bound_args.lemma1, "single-scale gap-square bound");
  bound->add_flag("--lemma2", bound_args.lemma2, "gap-strip series bound");
  bound->add_flag("--oracle", bound_args.oracle, "brute-force covering bound");
  bound->add_option("--delta", bound_args.delta, "square side (with --lemma1)");
  bound->add_option("--n0", bound_args.n0, "deepest gap level (with --lemma1)");
  bound->add_option("--seq", bound_args.seq, "gap sequence spec");
  bound->add_option("--side", bound_args.side, "cover square side (with --oracle)");
  bound->add_option("--depth", bound_args.depth, "region depth (with --oracle)");
  bound->add_option("--what", bound_args.what, "complement | fm (with --oracle)");
  bound->add_option("--budget", bound_args.budget, "max cover squares");
  bound->add_option("--precision", bound_args.precision, "working precision bits");
  bound->add_option("-o,--output", bound_args.output, "output path or -");

  SelectArgs select_args;
  select_args.precision = precision;
  auto* select = app.add_subcommand("select", "choose a certified gap sequence");
  select->add_option("--eps", select_args.eps, "target bound")->required();
  select->add_option("--precision", select_args.precision, "working precision bits");
  select->add_option("-o,--output", select_args.output, "output path or -");

  CertifyArgs certify_args;
  certify_args.precision = precision;
  auto* certify = app.add_subcommand("certify", "build the separation certificate");
  certify->add_option("--precision", certify_args.precision, "working precision bits");
  certify->add_option("--refine", certify_args.refine, "potential refinement steps");
  certify->add_option("--convention", certify_args.convention, "side | diameter");
  certify->add_option("-o,--output", certify_args.output, "certificate path");

  ValidateArgs validate_args;
  auto* validate = app.add_subcommand("validate", "replay and audit a certificate");
  validate->add_option("certificate", validate_args.path, "certificate JSON path")
      ->required();
  validate->add_option("--precision", validate_args.precision,
                       "re-verification precision bits (default: stored)");

  RenderArgs render_args;
  auto* render = app.add_subcommand("render", "render a construction stage as SVG");
  render->add_option("--depth", render_args.depth, "construction depth m")->required();
  render->add_option("--seq", render_args.seq, "gap sequence spec");
  render->add_option("--size", render_args.size, "unit square size in px");
  render->add_option("--margin", render_args.margin, "margin in px");
  render->add_option("-o,--output", render_args.output, "output path or -");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (build->parsed()) return run_build(build_args);
    if (bound->parsed()) return run_bound(bound_args);
    if (select->parsed()) return run_select(select_args);
    if (certify->parsed()) return run_certify(certify_args);
    if (validate->parsed()) return run_validate(validate_args);
    if (render->parsed()) return run_render(render_args);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const Json::parse_error& e) {
    std::cerr << "error: malformed JSON: " << e.what() << "\n";
    return kExitIo;
  } catch (const InconclusiveError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInconclusive;
  } catch (const PrecisionMismatchError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInconclusive;
  } catch (const SchemaError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const CoverBudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}
