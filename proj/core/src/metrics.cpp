#include "fakeweather/metrics.hpp"

#include <cstdio>
#include <string>
#include <unordered_set>

#include "fakeweather/error.hpp"
#include "text_util.hpp"

namespace fakeweather {
namespace {

bool valid_label(int v) { return v >= 0 && v < kNumClasses; }

double ratio(std::uint64_t num, std::uint64_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

std::string percent(double fraction) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.1f%%", fraction * 100.0);
  return buf;
}

}  // namespace

double compute_asr(std::span<const PredictionRecord> records) {
  if (records.empty()) throw InvalidArgument("cannot compute ASR of zero records");
  std::uint64_t wrong = 0;
  for (const auto& r : records) wrong += r.adv_pred != r.true_label ? 1 : 0;
  return ratio(wrong, records.size());
}

EvalReport compute_report(std::span<const PredictionRecord> records) {
  if (records.empty()) throw InvalidArgument("cannot score zero records");
  EvalReport rep;
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(records.size());
  for (const auto& r : records) {
    if (!valid_label(r.true_label) || !valid_label(r.clean_pred) || !valid_label(r.adv_pred)) {
      throw InvalidArgument("record " + std::to_string(r.index) + " has a label outside 0..9");
    }
    if (!seen.insert(r.index).second) {
      throw InvalidArgument("duplicate sample index " + std::to_string(r.index));
    }
    const bool clean_ok = r.clean_pred == r.true_label;
    const bool adv_ok = r.adv_pred == r.true_label;
    ++rep.n;
    rep.adv_misclassified += adv_ok ? 0 : 1;
    rep.clean_correct += clean_ok ? 1 : 0;
    rep.flipped += (clean_ok && !adv_ok) ? 1 : 0;
    ++rep.confusion[static_cast<std::size_t>(r.true_label)][static_cast<std::size_t>(r.adv_pred)];
  }
  rep.asr = ratio(rep.adv_misclassified, rep.n);
  rep.clean_accuracy = ratio(rep.clean_correct, rep.n);
  rep.adv_accuracy = ratio(rep.n - rep.adv_misclassified, rep.n);
  rep.flip_rate = ratio(rep.flipped, rep.clean_correct);
  rep.flip_rate_degenerate = rep.clean_correct == 0;
  return rep;
}

std::vector<PredictionRecord> parse_predictions(std::string_view text) {
  const auto lines = detail::split_lines(text);
  if (lines.empty()) throw FormatError("prediction file is empty");
  if (lines[0] != kPredsMagic) {
    throw MalformedHeader("prediction file line 1: expected '" + std::string(kPredsMagic) + "'");
  }
  std::vector<PredictionRecord> records;
  records.reserve(lines.size() - 1);
  std::unordered_set<std::uint64_t> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto line_no = std::to_string(i + 1);
    if (lines[i].empty()) continue;
    const auto fields = detail::split(lines[i], ',');
    if (fields.size() != 4) {
      throw FormatError("prediction file line " + line_no +
                        ": expected 'index,true_label,clean_pred,adv_pred'");
    }
    const auto index = detail::parse_number<std::uint64_t>(fields[0]);
    if (!index) throw FormatError("prediction file line " + line_no + ": invalid index");
    PredictionRecord rec;
    rec.index = *index;
    int* targets[] = {&rec.true_label, &rec.clean_pred, &rec.adv_pred};
    for (std::size_t f = 0; f < 3; ++f) {
      const auto v = detail::parse_number<int>(fields[f + 1]);
      if (!v || !valid_label(*v)) {
        throw FormatError("prediction file line " + line_no + ": label '" +
                          std::string(fields[f + 1]) + "' is not a class in 0..9");
      }
      *targets[f] = *v;
    }
    if (!seen.insert(rec.index).second) {
      throw FormatError("prediction file line " + line_no + ": duplicate index " +
                        std::to_string(rec.index));
    }
    records.push_back(rec);
  }
  return records;
}

std::string write_predictions(std::span<const PredictionRecord> records) {
  std::string out(kPredsMagic);
  out += '\n';
  for (const auto& r : records) {
    out += std::to_string(r.index) + ',' + std::to_string(r.true_label) + ',' +
           std::to_string(r.clean_pred) + ',' + std::to_string(r.adv_pred) + '\n';
  }
  return out;
}

std::string format_report_table(const EvalReport& r) {
  std::string out;
  char line[128];
  std::snprintf(line, sizeof(line), "%-34s %llu\n", "samples",
                static_cast<unsigned long long>(r.n));
  out += line;
  const auto row = [&](const char* name, std::uint64_t num, std::uint64_t den, double value,
                       const char* note = "") {
    std::snprintf(line, sizeof(line), "%-34s %7s  (%llu/%llu)%s\n", name, percent(value).c_str(),
                  static_cast<unsigned long long>(num), static_cast<unsigned long long>(den), note);
    out += line;
  };
  row("adversarial success rate (ASR)", r.adv_misclassified, r.n, r.asr);
  row("clean accuracy", r.clean_correct, r.n, r.clean_accuracy);
  row("adversarial accuracy", r.n - r.adv_misclassified, r.n, r.adv_accuracy);
  row("flip rate (clean-correct -> wrong)", r.flipped, r.clean_correct, r.flip_rate,
      r.flip_rate_degenerate ? "  [degenerate: no clean-correct samples]" : "");

  out += "\nconfusion (rows: true label, columns: adversarial prediction)\n";
  out += "            ";
  for (int c = 0; c < kNumClasses; ++c) {
    std::snprintf(line, sizeof(line), "%6d", c);
    out += line;
  }
  out += '\n';
  static constexpr const char* kNames[kNumClasses] = {"airplane", "automobile", "bird", "cat",
                                                      "deer",     "dog",        "frog", "horse",
                                                      "ship",     "truck"};
  for (int t = 0; t < kNumClasses; ++t) {
    std::snprintf(line, sizeof(line), "%d %-10s", t, kNames[t]);
    out += line;
    for (int c = 0; c < kNumClasses; ++c) {
      std::snprintf(line, sizeof(line), "%6llu",
                    static_cast<unsigned long long>(r.confusion[static_cast<std::size_t>(t)]
                                                               [static_cast<std::size_t>(c)]));
      out += line;
    }
    out += '\n';
  }
  return out;
}

std::string format_report_kv(const EvalReport& r) {
  std::string out;
  const auto kv = [&](std::string_view key, const std::string& value) {
    out += key;
    out += '=';
    out += value;
    out += '\n';
  };
  kv("n", std::to_string(r.n));
  kv("adv_misclassified", std::to_string(r.adv_misclassified));
  kv("clean_correct", std::to_string(r.clean_correct));
  kv("flipped", std::to_string(r.flipped));
  kv("asr", detail::format_double(r.asr));
  kv("clean_accuracy", detail::format_double(r.clean_accuracy));
  kv("adv_accuracy", detail::format_double(r.adv_accuracy));
  kv("flip_rate", detail::format_double(r.flip_rate));
  kv("flip_rate_degenerate", r.flip_rate_degenerate ? "true" : "false");
  for (int t = 0; t < kNumClasses; ++t) {
    std::string row;
    for (int c = 0; c < kNumClasses; ++c) {
      if (c) row += ' ';
      row += std::to_string(r.confusion[static_cast<std::size_t>(t)][static_cast<std::size_t>(c)]);
    }
    kv("confusion_" + std::to_string(t), row);
  }
  return out;
}

}  // namespace fakeweather
