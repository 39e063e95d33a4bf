#ifndef SESAM_RAKE_HPP
#define SESAM_RAKE_HPP

#include <map>
#include <string>
#include <vector>

#include "sesam/textproc.hpp"

namespace sesam::rake {

// Co-occurrence statistics over one document's candidate phrases.
// degree(m) sums the lengths of the candidate occurrences containing m,
// frequency(m) counts m's occurrences, total_words counts every word
// occurrence inside candidates.
struct WordStats {
  std::map<std::string, long long> degree;
  std::map<std::string, long long> frequency;
  long long total_words = 0;
};

WordStats word_stats(const std::vector<textproc::CandidatePhrase>& candidates);

// degree/frequency for repeated words; degree/total for hapax words, which
// damps the scores of phrases built from one-off vocabulary.
double word_weight(const std::string& word, const WordStats& stats);

struct ScoredPhrase {
  textproc::CandidatePhrase phrase;
  double score = 0.0;
};

// Mean of the member word weights, so short phrases compete on an equal
// footing with long ones.
double phrase_score(const textproc::CandidatePhrase& phrase, const WordStats& stats);

// Scores all candidates and deduplicates identical word sequences, keeping
// first-occurrence order.
std::vector<ScoredPhrase> score_phrases(const std::vector<textproc::CandidatePhrase>& candidates,
                                        const WordStats& stats);

}  // namespace sesam::rake

#endif
