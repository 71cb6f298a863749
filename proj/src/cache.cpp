#include "peakfn/cache.hpp"

#include "peakfn/text.hpp"

#include <fstream>
#include <functional>
#include <thread>

namespace peakfn {

namespace {

std::string canonical_key(const PatternSet& patterns) {
  if (patterns.empty()) return "empty";
  std::string key;
  for (const auto& p : patterns) {
    if (!key.empty()) key += '_';
    for (std::size_t i = 0; i < p.word().size(); ++i) {
      if (i && p.size() > 9) key += '.';
      key += std::to_string(p.word()[i]);
    }
  }
  return key;
}

std::uint64_t total_count(const PeakHistogram& h) {
  std::uint64_t t = 0;
  for (const auto& [mask, c] : h) t += c;
  return t;
}

// FNV-1a of the entry content.
std::uint64_t checksum(int n, const std::string& patterns, const PeakHistogram& h) {
  std::uint64_t x = 14695981039346656037ull;
  auto mix = [&](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      x ^= (v >> (8 * i)) & 0xffu;
      x *= 1099511628211ull;
    }
  };
  mix(static_cast<std::uint64_t>(n));
  for (unsigned char c : patterns) mix(c);
  for (const auto& [mask, c] : h) {
    mix(mask);
    mix(c);
  }
  return x;
}

}  // namespace

HistogramCache::HistogramCache(std::filesystem::path dir, int jobs) : dir_(std::move(dir)), jobs_(jobs) {}

std::filesystem::path HistogramCache::entry_path(const PatternSet& patterns, int n) const {
  return dir_ / ("av_" + std::to_string(n) + "_" + canonical_key(patterns) + ".json");
}

std::optional<PeakHistogram> HistogramCache::load(const PatternSet& patterns, int n) const {
  std::ifstream in(entry_path(patterns, n));
  if (!in) return std::nullopt;
  try {
    const auto j = nlohmann::json::parse(in);
    if (j.at("degree").get<int>() != n) return std::nullopt;
    if (j.at("patterns").get<std::string>() != format_pattern_set(patterns)) return std::nullopt;
    PeakHistogram h;
    for (const auto& e : j.at("histogram")) {
      const auto mask = e.at(0).get<std::uint64_t>();
      const auto count = e.at(1).get<std::uint64_t>();
      const std::uint64_t limit = n >= 1 ? (std::uint64_t{1} << n) : 1;
      if (mask >= limit || peak_mask_of(mask) != mask || (mask & 1) || count == 0) return std::nullopt;
      h[mask] += count;
    }
    if (total_count(h) != j.at("count").get<std::uint64_t>()) return std::nullopt;
    if (j.at("checksum").get<std::string>() != std::to_string(checksum(n, format_pattern_set(patterns), h)))
      return std::nullopt;
    return h;
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;
  }
}

void HistogramCache::store(const PatternSet& patterns, int n, const PeakHistogram& h) const {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  nlohmann::ordered_json j;
  j["degree"] = n;
  j["patterns"] = format_pattern_set(patterns);
  j["count"] = total_count(h);
  j["histogram"] = nlohmann::ordered_json::array();
  for (const auto& [mask, c] : h) j["histogram"].push_back({mask, c});
  j["checksum"] = std::to_string(checksum(n, format_pattern_set(patterns), h));
  const auto path = entry_path(patterns, n);
  auto tmp = path;
  tmp += "." + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id())) + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << j.dump() << '\n';
  }
  std::filesystem::rename(tmp, path, ec);
}

PeakHistogram HistogramCache::get(const PatternSet& patterns, int n) const {
  if (auto h = load(patterns, n)) return *h;
  PeakHistogram h = peak_mask_histogram(n, patterns, jobs_);
  store(patterns, n, h);
  return h;
}

HistogramSource HistogramCache::source() const {
  return [self = *this](const PatternSet& p, int n) { return self.get(p, n); };
}

}  // namespace peakfn
