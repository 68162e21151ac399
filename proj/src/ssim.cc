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

#include "blockmix/ssim.h"

#include <omp.h>

#include <cmath>
#include <cstdio>
#include <exception>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "blockmix/error.h"

namespace blockmix {
namespace {

// Valid-region separable filter of a width x height plane. Output is
// (width - k + 1) x (height - k + 1).
std::vector<double> FilterValid(const std::vector<double>& plane, int width,
                                int height, const std::vector<double>& taps) {
  const int k = static_cast<int>(taps.size());
  const int out_w = width - k + 1;
  const int out_h = height - k + 1;
  std::vector<double> horizontal(static_cast<std::size_t>(out_w) * height);
  for (int y = 0; y < height; ++y) {
    const double* row = plane.data() + static_cast<std::size_t>(y) * width;
    double* dst = horizontal.data() + static_cast<std::size_t>(y) * out_w;
    for (int x = 0; x < out_w; ++x) {
      double acc = 0.0;
      for (int t = 0; t < k; ++t) acc += taps[t] * row[x + t];
      dst[x] = acc;
    }
  }
  std::vector<double> out(static_cast<std::size_t>(out_w) * out_h);
  for (int y = 0; y < out_h; ++y) {
    double* dst = out.data() + static_cast<std::size_t>(y) * out_w;
    for (int x = 0; x < out_w; ++x) {
      double acc = 0.0;
      for (int t = 0; t < k; ++t) {
        acc += taps[t] * horizontal[static_cast<std::size_t>(y + t) * out_w + x];
      }
      dst[x] = acc;
    }
  }
  return out;
}

std::string FormatDouble(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12f", v);
  return buf;
}

}  // namespace

std::vector<double> Luminance(const LabeledImage& image) {
  const auto px = image.pixels();
  std::vector<double> y(image.size().pixel_count());
  for (std::size_t i = 0; i < y.size(); ++i) {
    y[i] = 0.299 * px[3 * i] + 0.587 * px[3 * i + 1] + 0.114 * px[3 * i + 2];
  }
  return y;
}

std::vector<double> GaussianTaps(int window, double sigma) {
  std::vector<double> taps(window);
  const double center = (window - 1) / 2.0;
  double sum = 0.0;
  for (int i = 0; i < window; ++i) {
    const double d = i - center;
    taps[i] = std::exp(-(d * d) / (2.0 * sigma * sigma));
    sum += taps[i];
  }
  for (double& t : taps) t /= sum;
  return taps;
}

double Ssim(const LabeledImage& a, const LabeledImage& b,
            const SsimParams& params) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::kShapeMismatch,
                FormatImageSize(a.size()) + " vs " + FormatImageSize(b.size()));
  }
  if (a.width() < params.window || a.height() < params.window) {
    throw Error(ErrorCode::kTooSmall,
                FormatImageSize(a.size()) + " is smaller than the " +
                    std::to_string(params.window) + "-pixel window");
  }
  const int w = a.width();
  const int h = a.height();
  const std::vector<double> la = Luminance(a);
  const std::vector<double> lb = Luminance(b);
  std::vector<double> aa(la.size()), bb(la.size()), ab(la.size());
  for (std::size_t i = 0; i < la.size(); ++i) {
    aa[i] = la[i] * la[i];
    bb[i] = lb[i] * lb[i];
    ab[i] = la[i] * lb[i];
  }
  const auto taps = GaussianTaps(params.window, params.sigma);
  const auto mu_a = FilterValid(la, w, h, taps);
  const auto mu_b = FilterValid(lb, w, h, taps);
  const auto e_aa = FilterValid(aa, w, h, taps);
  const auto e_bb = FilterValid(bb, w, h, taps);
  const auto e_ab = FilterValid(ab, w, h, taps);

  const double c1 = params.c1();
  const double c2 = params.c2();
  double total = 0.0;
  for (std::size_t i = 0; i < mu_a.size(); ++i) {
    const double ma = mu_a[i];
    const double mb = mu_b[i];
    const double var_a = e_aa[i] - ma * ma;
    const double var_b = e_bb[i] - mb * mb;
    const double cov = e_ab[i] - ma * mb;
    total += ((2.0 * ma * mb + c1) * (2.0 * cov + c2)) /
             ((ma * ma + mb * mb + c1) * (var_a + var_b + c2));
  }
  return total / static_cast<double>(mu_a.size());
}

SsimReport DatasetSsim(const Dataset& originals, const Dataset& mixed,
                       const SsimParams& params, int workers) {
  if (workers < 1) {
    throw Error(ErrorCode::kInvalidArgument, "workers must be >= 1");
  }
  if (originals.size() != mixed.size()) {
    throw Error(ErrorCode::kPairingMismatch,
                std::to_string(originals.size()) + " originals vs " +
                    std::to_string(mixed.size()) + " mixed images");
  }
  std::unordered_map<std::string, std::size_t> by_id;
  for (std::size_t i = 0; i < mixed.size(); ++i) {
    if (!by_id.emplace(mixed[i].source_id(), i).second) {
      throw Error(ErrorCode::kPairingMismatch,
                  "duplicate mixed id '" + mixed[i].source_id() + "'");
    }
  }
  std::vector<std::size_t> partner(originals.size());
  for (std::size_t i = 0; i < originals.size(); ++i) {
    auto it = by_id.find(originals[i].source_id());
    if (it == by_id.end()) {
      throw Error(ErrorCode::kPairingMismatch,
                  "no mixed image for '" + originals[i].source_id() + "'");
    }
    partner[i] = it->second;
  }

  SsimReport report;
  report.per_image.resize(originals.size());
  std::exception_ptr failure;
#pragma omp parallel for num_threads(workers) schedule(dynamic)
  for (std::int64_t ii = 0; ii < static_cast<std::int64_t>(originals.size());
       ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    try {
      report.per_image[i] = {originals[i].source_id(),
                             Ssim(originals[i], mixed[partner[i]], params)};
    } catch (...) {
#pragma omp critical(blockmix_ssim_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  double sum = 0.0;
  for (const SsimEntry& e : report.per_image) sum += e.ssim;
  report.mean_ssim =
      report.per_image.empty() ? 0.0 : sum / report.per_image.size();
  return report;
}

void WriteSsimReport(const SsimReport& report, std::ostream& out) {
  out << "# blockmix ssim report v1\n";
  for (const SsimEntry& e : report.per_image) {
    out << "image\tsource_id=" << e.source_id
        << "\tssim=" << FormatDouble(e.ssim) << "\n";
  }
  out << "summary\tcount=" << report.per_image.size()
      << "\tmean_ssim=" << FormatDouble(report.mean_ssim) << "\tn_b="
      << (report.block_count ? std::to_string(*report.block_count) : "NA")
      << "\tp="
      << (report.replace_prob ? FormatDouble(*report.replace_prob) : "NA")
      << "\tn_t=" << (report.rounds ? std::to_string(*report.rounds) : "NA")
      << "\n";
}

SsimReport ReadSsimReport(std::istream& in) {
  SsimReport report;
  bool have_summary = false;
  std::string line;
  auto fail = [](const std::string& why) -> Error {
    return Error(ErrorCode::kParseError, "ssim report: " + why);
  };
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, '\t')) fields.push_back(field);
    std::unordered_map<std::string, std::string> kv;
    for (std::size_t i = 1; i < fields.size(); ++i) {
      const auto eq = fields[i].find('=');
      if (eq == std::string::npos) throw fail("malformed field '" + fields[i] + "'");
      kv[fields[i].substr(0, eq)] = fields[i].substr(eq + 1);
    }
    try {
      if (fields[0] == "image") {
        report.per_image.push_back(
            {kv.at("source_id"), std::stod(kv.at("ssim"))});
      } else if (fields[0] == "summary") {
        have_summary = true;
        report.mean_ssim = std::stod(kv.at("mean_ssim"));
        if (std::stoul(kv.at("count")) != report.per_image.size()) {
          throw fail("count does not match records");
        }
        if (kv.at("n_b") != "NA") report.block_count = std::stoi(kv.at("n_b"));
        if (kv.at("p") != "NA") report.replace_prob = std::stod(kv.at("p"));
        if (kv.at("n_t") != "NA") report.rounds = std::stoi(kv.at("n_t"));
      } else {
        throw fail("unknown record '" + fields[0] + "'");
      }
    } catch (const std::out_of_range&) {
      throw fail("missing field in '" + line + "'");
    } catch (const std::invalid_argument&) {
      throw fail("bad number in '" + line + "'");
    }
  }
  if (!have_summary) throw fail("missing summary line");
  return report;
}

}  // namespace blockmix
