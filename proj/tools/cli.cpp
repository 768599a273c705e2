#include "fakeweather_cli/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <ostream>

#include "fakeweather/fakeweather.hpp"

namespace fakeweather::cli {
namespace {

struct GenMaskArgs {
  std::string kind;
  int width = 0;
  int height = 0;
  AttackConfig config;
  std::string out;
};

struct ApplyArgs {
  std::string mask;
  std::string in;
  std::string out;
  std::string format;
};

struct BatchArgs {
  std::string mask;
  std::string cifar_in;
  std::string cifar_out;
  std::size_t limit = 0;
  std::size_t offset = 0;
  CLI::Option* limit_opt = nullptr;
};

struct AugmentArgs {
  std::vector<std::string> kinds;
  std::vector<std::uint64_t> seeds;
  std::string cifar_in;
  std::string cifar_out;
  AttackConfig config;
};

struct ScoreArgs {
  std::string preds;
  std::string format = "table";
};

void add_density_flags(CLI::App& cmd, AttackConfig& c) {
  cmd.add_option("--p-agglomerate", c.p_agglomerate_below_v,
                 "rain: agglomerate probability per anchor below the V")
      ->capture_default_str();
  cmd.add_option("--p-patch", c.p_patch_above_v, "rain: patch probability per anchor above the V")
      ->capture_default_str();
  cmd.add_option("--p-line", c.p_line_above_v, "rain: line probability per anchor above the V")
      ->capture_default_str();
  cmd.add_option("--line-min", c.line_length.min, "rain: shortest line pattern")
      ->capture_default_str();
  cmd.add_option("--line-max", c.line_length.max, "rain: longest line pattern")
      ->capture_default_str();
  cmd.add_option("--stride", c.first_line_stride, "rain: spacing of the row-0 agglomerates")
      ->capture_default_str();
  cmd.add_option("--p-hail", c.p_hail, "hail: stone probability per anchor")
      ->capture_default_str();
}

WeatherKind require_kind(const std::string& text) {
  const auto kind = parse_weather_kind(text);
  if (!kind) throw InvalidArgument("unknown weather kind '" + text + "' (rain, snow or hail)");
  return *kind;
}

std::string fixed6(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

int run_gen_mask(const GenMaskArgs& a, std::ostream& out) {
  AttackConfig config = a.config;
  config.kind = require_kind(a.kind);
  const ImageDims dims{a.width, a.height};
  require_mask_dims(dims);
  config.validate();

  const Mask mask = generate_mask(dims, config);
  write_text_file(a.out, write_mask(mask));
  out << "kind=" << to_string(mask.kind()) << " size=" << to_string(dims)
      << " pixels=" << mask.size() << " perturbation_budget=" << fixed6(perturbation_budget(mask))
      << '\n';
  return kExitOk;
}

int run_apply(const ApplyArgs& a, std::ostream& out) {
  ImageFormat format = ImageFormat::Ppm;
  if (!a.format.empty()) {
    format = a.format == "png" ? ImageFormat::Png : ImageFormat::Ppm;
  } else if (const auto f = format_from_path(a.out)) {
    format = *f;
  } else {
    throw InvalidArgument("cannot infer the output format of '" + a.out +
                          "'; use a .ppm/.png extension or --format");
  }
  const Mask mask = read_mask(read_text_file(a.mask));
  const ImageBuffer image = decode_image(read_binary_file(a.in));
  const ImageBuffer perturbed = apply_mask(image, mask);
  write_binary_file(a.out, encode_image(perturbed, format));
  out << "wrote " << a.out << " (" << mask.size() << " pixels overwritten)\n";
  return kExitOk;
}

int run_batch(const BatchArgs& a, std::ostream& out) {
  RecordWindow window;
  window.offset = a.offset;
  if (a.limit_opt->count() > 0) window.count = a.limit;

  const Mask mask = read_mask(read_text_file(a.mask));
  const auto records = read_cifar_batch(read_binary_file(a.cifar_in));
  const auto perturbed = perturb_batch(records, mask, window);
  write_binary_file(a.cifar_out, write_cifar_batch(perturbed));

  const std::size_t begin = std::min(window.offset, records.size());
  const std::size_t touched =
      window.count ? std::min(*window.count, records.size() - begin) : records.size() - begin;
  out << "records=" << records.size() << " perturbed=" << touched << '\n';
  return kExitOk;
}

int run_augment(const AugmentArgs& a, std::ostream& out) {
  std::vector<WeatherKind> kinds;
  for (const auto& k : a.kinds) kinds.push_back(require_kind(k));
  if (kinds.empty()) throw InvalidArgument("--kinds needs at least one weather kind");
  if (a.seeds.empty()) throw InvalidArgument("--seeds needs at least one seed");
  a.config.validate();

  std::vector<Mask> masks;
  for (const auto kind : kinds) {
    for (const auto seed : a.seeds) {
      AttackConfig config = a.config;
      config.kind = kind;
      config.seed = seed;
      masks.push_back(generate_mask(kCifarDims, config));
    }
  }

  const auto records = read_cifar_batch(read_binary_file(a.cifar_in));
  std::vector<LabeledImage> augmented(records.begin(), records.end());
  augmented.reserve(records.size() * (masks.size() + 1));
  for (const auto& mask : masks) {
    auto copy = perturb_batch(records, mask);
    augmented.insert(augmented.end(), std::make_move_iterator(copy.begin()),
                     std::make_move_iterator(copy.end()));
  }
  write_binary_file(a.cifar_out, write_cifar_batch(augmented));
  out << "records_in=" << records.size() << " copies=" << masks.size()
      << " records_out=" << augmented.size() << '\n';
  return kExitOk;
}

int run_score(const ScoreArgs& a, std::ostream& out) {
  const auto records = parse_predictions(read_text_file(a.preds));
  if (records.empty()) throw FormatError("prediction file '" + a.preds + "' has no records");
  const EvalReport report = compute_report(records);
  out << (a.format == "kv" ? format_report_kv(report) : format_report_table(report));
  return kExitOk;
}

int exit_code_for(ErrorCategory category) {
  switch (category) {
    case ErrorCategory::InvalidArgument:
      return kExitUsage;
    case ErrorCategory::Format:
      return kExitFormat;
    case ErrorCategory::Io:
      return kExitIo;
  }
  return kExitInternal;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weather-effect adversarial masks: generate, apply, and score.", "fakeweather"};
  app.require_subcommand(1);

  GenMaskArgs gen;
  auto* gen_cmd = app.add_subcommand("gen-mask", "Generate a rain, snow or hail mask for an image size");
  gen_cmd->add_option("--kind", gen.kind, "rain, snow or hail")
      ->required()
      ->check(CLI::IsMember({"rain", "snow", "hail"}));
  gen_cmd->add_option("--width", gen.width, "image width in pixels (>= 4)")->required();
  gen_cmd->add_option("--height", gen.height, "image height in pixels (>= 4)")->required();
  gen_cmd->add_option("--seed", gen.config.seed, "seed for every random choice")
      ->capture_default_str();
  add_density_flags(*gen_cmd, gen.config);
  gen_cmd->add_option("--out", gen.out, "mask file to write")->required();

  ApplyArgs app_args;
  auto* apply_cmd = app.add_subcommand("apply", "Apply a mask to a PPM or PNG image");
  apply_cmd->add_option("--mask", app_args.mask, "mask file")->required();
  apply_cmd->add_option("--in", app_args.in, "input image (.ppm or .png)")->required();
  apply_cmd->add_option("--out", app_args.out, "output image")->required();
  apply_cmd->add_option("--format", app_args.format, "output format (default: from extension)")
      ->check(CLI::IsMember({"ppm", "png"}));

  BatchArgs bat;
  auto* batch_cmd = app.add_subcommand("batch", "Apply a 32x32 mask to a CIFAR-10 binary batch");
  batch_cmd->add_option("--mask", bat.mask, "mask file")->required();
  batch_cmd->add_option("--cifar-in", bat.cifar_in, "input batch")->required();
  batch_cmd->add_option("--cifar-out", bat.cifar_out, "output batch")->required();
  bat.limit_opt = batch_cmd->add_option("--limit", bat.limit, "number of records to perturb (default: all)");
  batch_cmd->add_option("--offset", bat.offset, "first record to perturb")->capture_default_str();

  AugmentArgs aug;
  auto* aug_cmd = app.add_subcommand(
      "augment", "Append one perturbed copy of a CIFAR-10 batch per (kind, seed) pair");
  aug_cmd->add_option("--kinds", aug.kinds, "comma-separated weather kinds")
      ->required()
      ->delimiter(',');
  aug_cmd->add_option("--seeds", aug.seeds, "comma-separated seeds")->required()->delimiter(',');
  aug_cmd->add_option("--cifar-in", aug.cifar_in, "input batch")->required();
  aug_cmd->add_option("--cifar-out", aug.cifar_out, "output batch")->required();
  add_density_flags(*aug_cmd, aug.config);

  ScoreArgs sc;
  auto* score_cmd = app.add_subcommand("score", "Score a prediction file");
  score_cmd->add_option("--preds", sc.preds, "prediction file (fakeweather-preds v1)")->required();
  score_cmd->add_option("--format", sc.format, "table or kv")
      ->capture_default_str()
      ->check(CLI::IsMember({"table", "kv"}));

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n";
    const auto* failing = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    err << failing->help();
    return kExitUsage;
  }

  try {
    if (gen_cmd->parsed()) return run_gen_mask(gen, out);
    if (apply_cmd->parsed()) return run_apply(app_args, out);
    if (batch_cmd->parsed()) return run_batch(bat, out);
    if (aug_cmd->parsed()) return run_augment(aug, out);
    if (score_cmd->parsed()) return run_score(sc, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    const int code = exit_code_for(e.category());
    if (code == kExitUsage) err << "run 'fakeweather --help' for usage\n";
    return code;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace fakeweather::cli
