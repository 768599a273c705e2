#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fakeweather {

inline constexpr int kNumClasses = 10;

// One scored sample: its label and the classifier's argmax on the clean and
// on the perturbed image.
struct PredictionRecord {
  std::uint64_t index = 0;
  int true_label = 0;
  int clean_pred = 0;
  int adv_pred = 0;

  friend bool operator==(const PredictionRecord&, const PredictionRecord&) = default;
};

struct EvalReport {
  std::uint64_t n = 0;
  std::uint64_t adv_misclassified = 0;
  std::uint64_t clean_correct = 0;
  std::uint64_t flipped = 0;  // clean-correct samples that the attack turns wrong

  double asr = 0.0;
  double clean_accuracy = 0.0;
  double adv_accuracy = 0.0;
  double flip_rate = 0.0;
  bool flip_rate_degenerate = false;  // no clean-correct sample to flip

  // confusion[true_label][adv_pred]
  std::array<std::array<std::uint64_t, kNumClasses>, kNumClasses> confusion{};
};

/// Adversarial success rate: share of samples whose perturbed prediction
/// differs from the true label, whether or not the clean prediction was
/// already wrong. Throws InvalidArgument on empty input.
double compute_asr(std::span<const PredictionRecord> records);

/// Throws InvalidArgument on empty input, out-of-range labels or a repeated
/// sample index.
EvalReport compute_report(std::span<const PredictionRecord> records);

// Prediction file, version 1:
//   fakeweather-preds v1
//   <index>,<true_label>,<clean_pred>,<adv_pred>
//   ...
inline constexpr std::string_view kPredsMagic = "fakeweather-preds v1";

/// Throws FormatError with the 1-based line number on any malformed line,
/// out-of-range label or duplicate index.
std::vector<PredictionRecord> parse_predictions(std::string_view text);
std::string write_predictions(std::span<const PredictionRecord> records);

std::string format_report_table(const EvalReport& report);
std::string format_report_kv(const EvalReport& report);

}  // namespace fakeweather
