#ifndef SESAM_PROFILES_HPP
#define SESAM_PROFILES_HPP

#include <map>
#include <string>
#include <vector>

#include "sesam/corpus.hpp"
#include "sesam/matrix.hpp"
#include "sesam/rake.hpp"
#include "sesam/textproc.hpp"

namespace sesam::profiles {

// Weighted keyword list for one scope (a session, or an article of a year).
struct KeywordList {
  std::string scope;
  std::map<std::string, double> entries;  // canonical phrase -> score
};

// Post-normalization, post-threshold keyword list; entries in (0, 1].
struct Profile {
  std::string scope;
  std::map<std::string, double> entries;

  bool empty() const { return entries.empty(); }
};

// Candidate extraction + scoring over one article body, deduplicated.
std::map<std::string, double> article_keywords(const corpus::Article& article,
                                               const textproc::Resources& res);

struct SessionLists {
  std::map<std::string, KeywordList> lists;
  std::map<std::string, int> doc_count;  // N per session
  // n per session: documents of the session containing the phrase
  std::map<std::string, std::map<std::string, int>> phrase_doc_count;
  // author keywords of member articles, canonicalized
  std::map<std::string, std::vector<std::string>> author_keywords;
};

// Union of member-article keyword scores per session, all years pooled;
// repeated phrases sum. Throws errc::missing_label on unlabeled articles.
SessionLists build_session_lists(const std::vector<corpus::Edition>& training,
                                 const textproc::Resources& res);

// TF-IDF style damping: score * ln(N / n).
KeywordList reweight(const KeywordList& list, int total_docs,
                     const std::map<std::string, int>& docs_with_phrase);

// Unit-norm then divide by the max entry, leaving scores in (0, 1] with the
// top entry at exactly 1. Throws errc::all_zero on a degenerate list.
KeywordList normalize(const KeywordList& list);

// Drops entries below the threshold, then injects author keywords at 1.0.
// Throws errc::empty_profile when nothing survives.
Profile finalize_profile(const KeywordList& normalized,
                         const std::vector<std::string>& author_keywords,
                         double threshold = 0.50);

// finalize_profile with the documented fallback: an empty result keeps the
// single highest-scored entry of the un-thresholded list.
Profile finalize_or_top1(const KeywordList& normalized,
                         const std::vector<std::string>& author_keywords,
                         double threshold = 0.50);

// Seeds used to bootstrap an unseen session's profile: the lemmatized name,
// plus its first and last word when multiword.
std::vector<std::string> session_name_seeds(const std::string& name,
                                            const textproc::Resources& res);

// Builds a profile for a session absent from training by harvesting phrases
// containing the name seeds from the trained profiles. Throws errc::no_match
// when no trained profile mentions any seed.
Profile synthesize_session_profile(const std::string& name,
                                   const std::map<std::string, Profile>& trained,
                                   const textproc::Resources& res);

// Cosine over the union vocabulary; 0 when either profile is empty.
double similarity(const Profile& a, const Profile& b);

struct SimiProConfig {
  double threshold = 0.50;
};

// Training phase: one profile per session.
std::map<std::string, Profile> train_session_profiles(
    const std::vector<corpus::Edition>& training, const textproc::Resources& res,
    const SimiProConfig& cfg = {});

// Test phase: article profiles for one edition (N = articles of the year),
// then cosine against the session inventory. Unseen sessions are synthesized;
// sessions with no usable profile score 0.
ScoreMatrix score_edition(const corpus::Edition& edition,
                          const std::vector<std::string>& inventory,
                          const std::map<std::string, Profile>& trained,
                          const textproc::Resources& res,
                          const SimiProConfig& cfg = {});

// Profile dump rows "scope<TAB>phrase<TAB>score" with 6-decimal scores.
void write_profiles(const std::map<std::string, Profile>& profiles,
                    const std::string& path);
std::map<std::string, Profile> read_profiles(const std::string& path);

}  // namespace sesam::profiles

#endif
