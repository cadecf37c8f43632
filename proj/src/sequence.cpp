#include "gcfhs/sequence.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace gcfhs {

FhsSequence::FhsSequence(std::uint32_t seq_index, FhsParams params,
                         std::vector<Symbol> symbols)
    : seq_index_(seq_index), params_(std::move(params)), symbols_(std::move(symbols)) {
  if (symbols_.size() != params_.nu()) {
    throw std::invalid_argument("FhsSequence: length must equal p^n");
  }
  const auto m = params_.m();
  if (std::any_of(symbols_.begin(), symbols_.end(), [m](Symbol s) { return s >= m; })) {
    throw std::invalid_argument("FhsSequence: symbol outside alphabet");
  }
}

FhsSequence FhsSequence::with_symbol(std::uint64_t t, Symbol f) const {
  if (t >= symbols_.size()) throw std::invalid_argument("with_symbol: position out of range");
  std::vector<Symbol> copy = symbols_;
  copy[t] = f;
  return FhsSequence(seq_index_, params_, std::move(copy));
}

FhsFamily::FhsFamily(std::vector<FhsSequence> sequences)
    : sequences_(std::move(sequences)) {
  if (sequences_.empty()) throw std::invalid_argument("FhsFamily: empty family");
  for (std::uint32_t i = 0; i < sequences_.size(); ++i) {
    if (sequences_[i].seq_index() != i) {
      throw std::invalid_argument("FhsFamily: sequence indices must be 0..M-1 in order");
    }
    if (!(sequences_[i].params() == sequences_.front().params())) {
      throw std::invalid_argument("FhsFamily: sequences must share params");
    }
  }
}

FhsFamily FhsFamily::with_sequence(FhsSequence replacement) const {
  std::vector<FhsSequence> copy = sequences_;
  const std::uint32_t i = replacement.seq_index();
  if (i >= copy.size()) throw std::invalid_argument("with_sequence: index out of range");
  copy[i] = std::move(replacement);
  return FhsFamily(std::move(copy));
}

namespace {

FhsSequence shifted(std::uint32_t i, const FhsParams& params,
                    const std::vector<std::uint8_t>& classes) {
  const std::uint32_t m = params.m();
  std::vector<Symbol> symbols(classes.size());
  for (std::size_t t = 0; t < classes.size(); ++t) {
    symbols[t] = static_cast<Symbol>((classes[t] + m - i) % m);
  }
  return FhsSequence(i, params, std::move(symbols));
}

}  // namespace

FhsSequence build_sequence(std::uint32_t i, const FhsParams& params) {
  if (i >= params.M()) throw std::invalid_argument("build_sequence: index out of range");
  return shifted(i, params, class_index_table(params));
}

FhsFamily build_family(const FhsParams& params) {
  const std::vector<std::uint8_t> classes = class_index_table(params);
  std::vector<FhsSequence> sequences;
  sequences.reserve(params.M());
  for (std::uint32_t i = 0; i < params.M(); ++i) {
    sequences.push_back(shifted(i, params, classes));
  }
  return FhsFamily(std::move(sequences));
}

std::vector<std::uint64_t> frequency_counts(const FhsSequence& x) {
  std::vector<std::uint64_t> counts(x.params().m(), 0);
  for (Symbol s : x.symbols()) ++counts[s];
  return counts;
}

UniformityReport is_uniformly_distributed(const FhsFamily& family) {
  UniformityReport report;
  report.totals.assign(family.params().m(), 0);
  for (const FhsSequence& x : family.sequences()) {
    const std::vector<std::uint64_t> counts = frequency_counts(x);
    for (std::size_t f = 0; f < counts.size(); ++f) report.totals[f] += counts[f];
  }
  report.uniform = std::all_of(report.totals.begin(), report.totals.end(),
                               [&](std::uint64_t v) { return v == report.totals.front(); });
  return report;
}

}  // namespace gcfhs
