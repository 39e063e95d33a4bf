#include "sesam/rake.hpp"

#include <set>

#include "sesam/error.hpp"

namespace sesam::rake {

WordStats word_stats(const std::vector<textproc::CandidatePhrase>& candidates) {
  if (candidates.empty()) {
    raise(errc::empty_input, "word_stats: no candidate phrases");
  }
  WordStats stats;
  for (const auto& c : candidates) {
    const long long j = static_cast<long long>(c.length());
    stats.total_words += j;
    for (const auto& w : c.words) {
      stats.frequency[w] += 1;
      stats.degree[w] += j;
    }
  }
  return stats;
}

double word_weight(const std::string& word, const WordStats& stats) {
  auto fit = stats.frequency.find(word);
  if (fit == stats.frequency.end()) {
    raise(errc::unknown_word, "word_weight: untracked word '" + word + "'");
  }
  const long long f = fit->second;
  const long long deg = stats.degree.at(word);
  if (f > 1) return static_cast<double>(deg) / static_cast<double>(f);
  return static_cast<double>(deg) / static_cast<double>(stats.total_words);
}

double phrase_score(const textproc::CandidatePhrase& phrase, const WordStats& stats) {
  double sum = 0.0;
  for (const auto& w : phrase.words) sum += word_weight(w, stats);
  return sum / static_cast<double>(phrase.length());
}

std::vector<ScoredPhrase> score_phrases(const std::vector<textproc::CandidatePhrase>& candidates,
                                        const WordStats& stats) {
  std::vector<ScoredPhrase> out;
  std::set<textproc::CandidatePhrase> seen;
  for (const auto& c : candidates) {
    if (!seen.insert(c).second) continue;
    out.push_back({c, phrase_score(c, stats)});
  }
  return out;
}

}  // namespace sesam::rake
