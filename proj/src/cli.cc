//
// Copyright 2026 The Blockmix Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include "blockmix/cli.h"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <set>

#include "CLI11.hpp"
#include "blockmix/augment.h"
#include "blockmix/bench.h"
#include "blockmix/dataset_io.h"
#include "blockmix/error.h"
#include "blockmix/manifest.h"
#include "blockmix/mixer.h"
#include "blockmix/restore_bound.h"
#include "blockmix/ssim.h"

namespace blockmix {
namespace fs = std::filesystem;
namespace {

constexpr char kDefaultSize[] = "192x192";

struct MixArgs {
  std::string in, out, size = kDefaultSize;
  int block_len = 0, block_wid = 0;
  int rounds = kDefaultRounds, donors = kDefaultDonors, workers = 1;
  double prob = kDefaultReplaceProb;
  std::uint64_t seed = 0;
  bool audit = false;
  std::string shortage = "error", singleton = "error";
};

struct SsimArgs {
  std::string original, mixed, size = kDefaultSize, report;
  int workers = 1;
};

struct AttackArgs {
  std::int64_t blocks = 0;
  std::vector<std::int64_t> counts;
};

struct AugmentArgs {
  std::string in, out, size;
  bool flip = false, replace = false;
  std::optional<double> rotate, brighten;
};

struct BenchArgs {
  std::vector<int> sizes, blocks;
  std::string out, size = "256x256", grid = "strips";
  int workers = 1, reps = 3, donors = kDefaultDonors, labels = 2;
  std::uint64_t seed = 0;
  bool check_monotone = false, report_r2 = false;
};

std::string Fixed(double v, int digits = 10) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

std::optional<MixManifest> ManifestIfPresent(const fs::path& root) {
  const fs::path path = root / kManifestFileName;
  if (!fs::exists(path)) return std::nullopt;
  return ReadManifest(path);
}

int CmdMix(const MixArgs& a, std::ostream& out, std::ostream& err) {
  MixConfig config =
      MakeMixConfig(ParseImageSize(a.size), a.block_len, a.block_wid);
  config.rounds = a.rounds;
  config.donors_per_image = a.donors;
  config.replace_prob = a.prob;
  config.master_seed = a.seed;
  config.donor_shortage_policy = ParseDonorShortagePolicy(a.shortage);
  config.singleton_label_policy = ParseSingletonLabelPolicy(a.singleton);
  ValidateMixConfig(config);

  const Dataset dataset =
      LoadDataset(a.in, config.canonical_size(), a.workers);
  MixOptions options;
  options.workers = a.workers;
  options.record_provenance = a.audit;
  const MixRun run = MixDataset(dataset, config, options);
  for (const std::string& w : run.warnings) err << "warning: " << w << "\n";

  SaveDataset(run.images, a.out);
  const fs::path manifest_path = fs::path(a.out) / kManifestFileName;
  WriteManifest(run.manifest, manifest_path, a.audit);

  out << "images=" << run.images.size() << "\n"
      << "labels=" << run.manifest.census.size() << "\n"
      << "block_count=" << config.partition.block_count << "\n"
      << "manifest=" << manifest_path.string() << "\n";
  return kExitOk;
}

int CmdSsim(const SsimArgs& a, std::ostream& out, std::ostream& err) {
  const ImageSize size = ParseImageSize(a.size);
  Dataset originals = LoadDataset(a.original, size, a.workers);
  const Dataset mixed = LoadDataset(a.mixed, size, a.workers);
  // Mixed trees are written under OutputRelpaths names.
  const auto names = OutputRelpaths(originals);
  for (std::size_t i = 0; i < originals.size(); ++i) {
    originals[i].set_source_id(names[i]);
  }
  SsimReport report = DatasetSsim(originals, mixed, SsimParams{}, a.workers);
  if (const auto manifest = ManifestIfPresent(a.mixed);
      manifest && manifest->mix) {
    report.block_count = manifest->mix->partition.block_count;
    report.replace_prob = manifest->mix->replace_prob;
    report.rounds = manifest->mix->rounds;
  }
  const fs::path report_path =
      a.report.empty() ? fs::path(a.mixed) / "ssim_report.txt"
                       : fs::path(a.report);
  std::ofstream file(report_path, std::ios::trunc);
  WriteSsimReport(report, file);
  if (!file) {
    throw Error(ErrorCode::kIoError, "cannot write " + report_path.string());
  }
  WriteSsimReport(report, out);
  err << "mean SSIM " << Fixed(report.mean_ssim, 5) << " over "
      << report.per_image.size() << " pairs; report at "
      << report_path.string() << "\n";
  return kExitOk;
}

int CmdAttackProb(const AttackArgs& a, std::ostream& out, std::ostream&) {
  CategoryCensus census;
  census.block_count = a.blocks;
  for (std::size_t i = 0; i < a.counts.size(); ++i) {
    census.categories.push_back({"c" + std::to_string(i + 1), a.counts[i]});
  }
  const RestoreBound bound = RestoreLog10ProbTotal(census);
  out << "n_b=" << a.blocks << "\n";
  for (std::size_t i = 0; i < census.categories.size(); ++i) {
    out << "category\tlabel=" << census.categories[i].label
        << "\tcount=" << census.categories[i].count
        << "\tlog10_prob=" << Fixed(bound.log10_prob_per_category[i]) << "\n";
  }
  out << "total_log10_prob=" << Fixed(bound.log10_prob_total) << "\n";

  const bool tiny =
      a.blocks <= kMaxEnumerationBlocks &&
      std::all_of(a.counts.begin(), a.counts.end(), [](std::int64_t c) {
        return c <= kMaxEnumerationImages;
      });
  if (tiny) {
    std::set<std::int64_t> distinct(a.counts.begin(), a.counts.end());
    std::vector<ComparisonRow> rows;
    for (const ComparisonRow& row : FormulaOracleTable(
             static_cast<int>(a.blocks), kMaxEnumerationImages)) {
      if (row.block_count == a.blocks && distinct.count(row.image_count)) {
        rows.push_back(row);
      }
    }
    out << "# brute-force reassembly oracle vs closed form\n";
    WriteComparisonTable(rows, out);
  }
  return kExitOk;
}

int CmdAugment(const AugmentArgs& a, std::ostream& out, std::ostream& err) {
  std::optional<MixManifest> manifest = ManifestIfPresent(a.in);
  ImageSize size;
  if (!a.size.empty()) {
    size = ParseImageSize(a.size);
  } else if (manifest && manifest->mix) {
    size = manifest->mix->canonical_size();
  } else {
    throw Error(ErrorCode::kInvalidArgument,
                "input has no mix manifest; pass --size");
  }
  AugmentConfig config;
  config.flip_horizontal = a.flip;
  config.rotate = a.rotate.has_value();
  config.rotation_degrees = a.rotate.value_or(kDefaultRotationDegrees);
  config.brighten = a.brighten.has_value();
  config.brightness_factor = a.brighten.value_or(kDefaultBrightnessFactor);
  config.emit_all_variants = !a.replace;
  ValidateAugmentConfig(config);

  const Dataset dataset = LoadDataset(a.in, size);
  const Dataset augmented = AugmentDataset(dataset, config);
  SaveDataset(augmented, a.out);

  MixManifest result = manifest.value_or(MixManifest{});
  result.audit.reset();
  result.census = Census(augmented);
  result.augmentation = MakeAugmentRecord(
      config, static_cast<std::int64_t>(dataset.size()),
      static_cast<std::int64_t>(augmented.size()));
  const fs::path manifest_path = fs::path(a.out) / kManifestFileName;
  WriteManifest(result, manifest_path, false);
  if (config.enabled_count() == 0) {
    err << "note: no augmentation enabled; output copies the input\n";
  }
  out << "images_in=" << dataset.size() << "\n"
      << "images_out=" << augmented.size() << "\n"
      << "manifest=" << manifest_path.string() << "\n";
  return kExitOk;
}

int CmdBench(const BenchArgs& a, std::ostream& out, std::ostream& err) {
  BenchOptions options;
  options.sizes = a.sizes;
  options.blocks = a.blocks;
  options.canonical = ParseImageSize(a.size);
  options.grid = a.grid == "square" ? GridShape::kSquare : GridShape::kStrips;
  options.workers = a.workers;
  options.repetitions = a.reps;
  options.donors_per_image = a.donors;
  options.labels = a.labels;
  options.seed = a.seed;
  const BenchResult result = RunBench(options);

  std::ofstream csv(a.out, std::ios::trunc);
  WriteBenchCsv(result, csv);
  if (!csv) throw Error(ErrorCode::kIoError, "cannot write " + a.out);
  WriteBenchSummary(result, err);

  if (a.report_r2 && a.sizes.size() >= 2) {
    const std::vector<double> xs(a.sizes.begin(), a.sizes.end());
    for (const int n_b : a.blocks) {
      out << "r2\tn_b=" << n_b << "\tvalue="
          << Fixed(FitLine(xs, TimesForBlocks(result, n_b)).r_squared, 6)
          << "\n";
    }
  }
  if (a.check_monotone) {
    for (const int n_is : a.sizes) {
      out << "monotone_in_n_b\tn_is=" << n_is << "\tvalue="
          << (IsMonotoneNondecreasing(TimesForSize(result, n_is)) ? "yes"
                                                                  : "no")
          << "\n";
    }
  }
  out << "csv=" << a.out << "\n";
  return kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Label-based pixel block mixing for image datasets", "blockmix"};
  app.require_subcommand(1);

  MixArgs mix;
  auto* mix_cmd = app.add_subcommand("mix", "Mix a directory-per-label dataset");
  mix_cmd->add_option("--in", mix.in, "Input dataset root")->required();
  mix_cmd->add_option("--out", mix.out, "Output dataset root")->required();
  mix_cmd->add_option("--size", mix.size, "Canonical size LxW")
      ->capture_default_str();
  mix_cmd->add_option("--block-len", mix.block_len, "Block length (pixels)")
      ->required();
  mix_cmd->add_option("--block-wid", mix.block_wid, "Block width (pixels)")
      ->required();
  mix_cmd->add_option("--rounds", mix.rounds, "Mixing rounds N_t")
      ->capture_default_str();
  mix_cmd->add_option("--donors", mix.donors, "Donors per image N_s")
      ->capture_default_str();
  mix_cmd->add_option("--prob", mix.prob, "Block replacement probability")
      ->capture_default_str();
  mix_cmd->add_option("--seed", mix.seed, "Master seed")->capture_default_str();
  mix_cmd->add_flag("--audit-manifest", mix.audit,
                    "Write per-image donor provenance into the manifest");
  mix_cmd->add_option("--workers", mix.workers, "Worker threads")
      ->capture_default_str();
  mix_cmd->add_option("--donor-shortage", mix.shortage,
                      "error | sample_with_replacement")
      ->capture_default_str();
  mix_cmd->add_option("--singleton-label", mix.singleton,
                      "error | passthrough_with_warning")
      ->capture_default_str();

  SsimArgs ssim;
  auto* ssim_cmd = app.add_subcommand("ssim", "SSIM between paired trees");
  ssim_cmd->add_option("--original", ssim.original, "Original dataset root")
      ->required();
  ssim_cmd->add_option("--mixed", ssim.mixed, "Mixed dataset root")->required();
  ssim_cmd->add_option("--size", ssim.size, "Canonical size LxW")
      ->capture_default_str();
  ssim_cmd->add_option("--report", ssim.report,
                       "Report path (default <mixed>/ssim_report.txt)");
  ssim_cmd->add_option("--workers", ssim.workers, "Worker threads")
      ->capture_default_str();

  AttackArgs attack;
  auto* attack_cmd =
      app.add_subcommand("attack-prob", "Restore-attack probability bound");
  attack_cmd->add_option("--blocks", attack.blocks, "Blocks per image N_b")
      ->required();
  attack_cmd->add_option("--counts", attack.counts, "Images per category")
      ->required()
      ->delimiter(',');

  AugmentArgs augment;
  auto* augment_cmd = app.add_subcommand("augment", "Augment a mixed tree");
  augment_cmd->add_option("--in", augment.in, "Input dataset root")->required();
  augment_cmd->add_option("--out", augment.out, "Output dataset root")
      ->required();
  augment_cmd->add_flag("--flip", augment.flip, "Add a horizontal mirror");
  augment_cmd->add_option("--rotate", augment.rotate,
                          "Add a rotation by DEG degrees");
  augment_cmd->add_option("--brighten", augment.brighten,
                          "Add a brightness variant with factor F");
  augment_cmd->add_flag("--replace", augment.replace,
                        "Chain enabled augmentations instead of adding "
                        "variants");
  augment_cmd->add_option("--size", augment.size,
                          "Canonical size (default: from input manifest)");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Mixing throughput sweep");
  bench_cmd->add_option("--sizes", bench.sizes, "Dataset sizes N_IS")
      ->required()
      ->delimiter(',');
  bench_cmd->add_option("--blocks", bench.blocks, "Block counts N_b")
      ->required()
      ->delimiter(',');
  bench_cmd->add_option("--out", bench.out, "CSV output path")->required();
  bench_cmd->add_option("--size", bench.size, "Canonical size LxW")
      ->capture_default_str();
  bench_cmd->add_option("--grid", bench.grid, "Grid shape per N_b")
      ->check(CLI::IsMember({"strips", "square"}))
      ->capture_default_str();
  bench_cmd->add_option("--workers", bench.workers, "Worker threads")
      ->capture_default_str();
  bench_cmd->add_option("--reps", bench.reps, "Timed repetitions")
      ->capture_default_str();
  bench_cmd->add_option("--donors", bench.donors, "Donors per image N_s")
      ->capture_default_str();
  bench_cmd->add_option("--labels", bench.labels, "Synthetic label count")
      ->capture_default_str();
  bench_cmd->add_option("--seed", bench.seed, "Seed")->capture_default_str();
  bench_cmd->add_flag("--check-monotone", bench.check_monotone,
                      "Report whether time is nondecreasing in N_b");
  bench_cmd->add_flag("--report-r2", bench.report_r2,
                      "Report R^2 of time vs N_IS per N_b");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUserError;
  }

  try {
    if (*mix_cmd) return CmdMix(mix, out, err);
    if (*ssim_cmd) return CmdSsim(ssim, out, err);
    if (*attack_cmd) return CmdAttackProb(attack, out, err);
    if (*augment_cmd) return CmdAugment(augment, out, err);
    if (*bench_cmd) return CmdBench(bench, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUserError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternalError;
  }
  return kExitUserError;
}

}  // namespace blockmix
