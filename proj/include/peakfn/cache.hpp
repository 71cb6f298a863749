#pragma once

// On-disk cache of Av_n(P) peak-set histograms. Entries are advisory: a file
// whose degree or counts fail validation is ignored and rewritten.

#include "peakfn/pattern_peak.hpp"

#include <filesystem>
#include <optional>
#include <string>

namespace peakfn {

class HistogramCache {
 public:
  HistogramCache(std::filesystem::path dir, int jobs = 1);

  /// File that holds (n, P).
  std::filesystem::path entry_path(const PatternSet& patterns, int n) const;

  std::optional<PeakHistogram> load(const PatternSet& patterns, int n) const;
  void store(const PatternSet& patterns, int n, const PeakHistogram& h) const;

  /// Cached histogram, enumerating and storing on a miss.
  PeakHistogram get(const PatternSet& patterns, int n) const;

  HistogramSource source() const;

 private:
  std::filesystem::path dir_;
  int jobs_;
};

}  // namespace peakfn
