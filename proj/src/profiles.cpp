#include "sesam/profiles.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>

#include "sesam/error.hpp"

namespace sesam::profiles {

namespace {

std::vector<std::string> split_words(const std::string& phrase) {
  std::vector<std::string> words;
  std::string cur;
  for (char c : phrase) {
    if (c == ' ') {
      if (!cur.empty()) words.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) words.push_back(cur);
  return words;
}

bool contains_subsequence(const std::vector<std::string>& haystack,
                          const std::vector<std::string>& needle) {
  if (needle.empty() || needle.size() > haystack.size()) return false;
  for (std::size_t i = 0; i + needle.size() <= haystack.size(); ++i) {
    bool match = true;
    for (std::size_t k = 0; k < needle.size(); ++k) {
      if (haystack[i + k] != needle[k]) {
        match = false;
        break;
      }
    }
    if (match) return true;
  }
  return false;
}

std::vector<std::string> canonical_author_keywords(const corpus::Article& article,
                                                   const textproc::Resources& res) {
  std::vector<std::string> out;
  for (const auto& kw : article.keywords) {
    std::string canon = textproc::canonical_phrase(kw, res);
    if (!canon.empty()) out.push_back(std::move(canon));
  }
  return out;
}

std::string article_scope(const corpus::Article& a) {
  return std::to_string(a.year) + "/" + a.doc_id;
}

}  // namespace

std::map<std::string, double> article_keywords(const corpus::Article& article,
                                               const textproc::Resources& res) {
  auto tokens = textproc::tokenize(article.body, res);
  auto candidates = textproc::extract_candidates(tokens, res);
  std::map<std::string, double> out;
  if (candidates.empty()) return out;
  auto stats = rake::word_stats(candidates);
  for (const auto& sp : rake::score_phrases(candidates, stats)) {
    out[sp.phrase.joined()] = sp.score;
  }
  return out;
}

SessionLists build_session_lists(const std::vector<corpus::Edition>& training,
                                 const textproc::Resources& res) {
  SessionLists sl;
  for (const auto& edition : training) {
    for (const auto& article : edition.articles) {
      if (!article.session.has_value() || article.session->empty()) {
        raise(errc::missing_label,
              "training article without session label: " + article.doc_id);
      }
      const std::string& session = *article.session;
      sl.doc_count[session] += 1;
      auto kws = article_keywords(article, res);
      KeywordList& list = sl.lists[session];
      list.scope = session;
      for (const auto& [phrase, score] : kws) {
        list.entries[phrase] += score;
        sl.phrase_doc_count[session][phrase] += 1;
      }
      for (auto& canon : canonical_author_keywords(article, res)) {
        sl.author_keywords[session].push_back(std::move(canon));
      }
    }
  }
  return sl;
}

KeywordList reweight(const KeywordList& list, int total_docs,
                     const std::map<std::string, int>& docs_with_phrase) {
  if (total_docs < 1) {
    raise(errc::invalid_count, "reweight: document total must be >= 1");
  }
  KeywordList out;
  out.scope = list.scope;
  for (const auto& [phrase, score] : list.entries) {
    auto it = docs_with_phrase.find(phrase);
    int n = it == docs_with_phrase.end() ? 0 : it->second;
    if (n < 1 || n > total_docs) {
      raise(errc::invalid_count, "reweight: document count for '" + phrase +
                                     "' outside [1, N]");
    }
    out.entries[phrase] =
        score * std::log(static_cast<double>(total_docs) / static_cast<double>(n));
  }
  return out;
}

KeywordList normalize(const KeywordList& list) {
  double norm_sq = 0.0;
  for (const auto& [phrase, score] : list.entries) norm_sq += score * score;
  if (norm_sq <= 0.0) {
    raise(errc::all_zero, "normalize: every score is zero in scope " + list.scope);
  }
  const double norm = std::sqrt(norm_sq);
  KeywordList unit;
  unit.scope = list.scope;
  double max_entry = 0.0;
  for (const auto& [phrase, score] : list.entries) {
    double v = score / norm;
    unit.entries[phrase] = v;
    max_entry = std::max(max_entry, v);
  }
  KeywordList out;
  out.scope = list.scope;
  for (const auto& [phrase, v] : unit.entries) {
    out.entries[phrase] = v / max_entry;
  }
  return out;
}

Profile finalize_profile(const KeywordList& normalized,
                         const std::vector<std::string>& author_keywords,
                         double threshold) {
  Profile p;
  p.scope = normalized.scope;
  for (const auto& [phrase, v] : normalized.entries) {
    if (v >= threshold) p.entries[phrase] = v;
  }
  for (const auto& kw : author_keywords) {
    if (!kw.empty()) p.entries[kw] = 1.0;
  }
  if (p.entries.empty()) {
    raise(errc::empty_profile, "empty profile for scope " + normalized.scope);
  }
  return p;
}

Profile finalize_or_top1(const KeywordList& normalized,
                         const std::vector<std::string>& author_keywords,
                         double threshold) {
  try {
    return finalize_profile(normalized, author_keywords, threshold);
  } catch (const Error& e) {
    if (e.code() != errc::empty_profile) throw;
  }
  Profile p;
  p.scope = normalized.scope;
  const std::pair<const std::string, double>* best = nullptr;
  for (const auto& entry : normalized.entries) {
    if (best == nullptr || entry.second > best->second) best = &entry;
  }
  if (best != nullptr) {
    p.entries[best->first] = best->second;
    std::cerr << "profiles: scope " << normalized.scope
              << " kept only its top entry (threshold left nothing)\n";
  }
  return p;
}

std::vector<std::string> session_name_seeds(const std::string& name,
                                            const textproc::Resources& res) {
  std::string canon = textproc::canonical_phrase(name, res);
  std::vector<std::string> words = split_words(canon);
  std::vector<std::string> seeds;
  auto push_unique = [&](const std::string& s) {
    if (!s.empty() && std::find(seeds.begin(), seeds.end(), s) == seeds.end()) {
      seeds.push_back(s);
    }
  };
  push_unique(canon);
  if (words.size() > 1) {
    push_unique(words.front());
    push_unique(words.back());
  }
  return seeds;
}

Profile synthesize_session_profile(const std::string& name,
                                   const std::map<std::string, Profile>& trained,
                                   const textproc::Resources& res) {
  const std::vector<std::string> seeds = session_name_seeds(name, res);
  std::vector<std::vector<std::string>> seed_words;
  seed_words.reserve(seeds.size());
  for (const auto& s : seeds) seed_words.push_back(split_words(s));

  // A: sessions where a seed was found; B: phrases containing a seed.
  std::vector<const Profile*> matching_profiles;
  std::map<std::string, double> harvested;
  for (const auto& [session, profile] : trained) {
    bool found = false;
    for (const auto& [phrase, score] : profile.entries) {
      auto phrase_words = split_words(phrase);
      for (const auto& sw : seed_words) {
        if (contains_subsequence(phrase_words, sw)) {
          found = true;
          auto it = harvested.find(phrase);
          if (it == harvested.end() || score > it->second) harvested[phrase] = score;
          break;
        }
      }
    }
    if (found) matching_profiles.push_back(&profile);
  }
  if (matching_profiles.empty()) {
    raise(errc::no_match, "no trained profile mentions session '" + name + "'");
  }

  Profile p;
  p.scope = name;
  for (const auto& [phrase, score] : harvested) p.entries[phrase] = score;
  // phrases shared by more than one matching profile, at their best score
  if (matching_profiles.size() > 1) {
    std::map<std::string, int> occurrences;
    std::map<std::string, double> best;
    for (const Profile* prof : matching_profiles) {
      for (const auto& [phrase, score] : prof->entries) {
        occurrences[phrase] += 1;
        auto it = best.find(phrase);
        if (it == best.end() || score > it->second) best[phrase] = score;
      }
    }
    for (const auto& [phrase, count] : occurrences) {
      if (count > 1) {
        auto it = p.entries.find(phrase);
        if (it == p.entries.end() || best[phrase] > it->second) {
          p.entries[phrase] = best[phrase];
        }
      }
    }
  }
  for (const auto& seed : seeds) p.entries[seed] = 1.0;
  return p;
}

double similarity(const Profile& a, const Profile& b) {
  if (a.entries.empty() || b.entries.empty()) return 0.0;
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (const auto& [phrase, v] : a.entries) {
    na += v * v;
    auto it = b.entries.find(phrase);
    if (it != b.entries.end()) dot += v * it->second;
  }
  for (const auto& [phrase, v] : b.entries) nb += v * v;
  if (na <= 0.0 || nb <= 0.0) return 0.0;
  return dot / (std::sqrt(na) * std::sqrt(nb));
}

std::map<std::string, Profile> train_session_profiles(
    const std::vector<corpus::Edition>& training, const textproc::Resources& res,
    const SimiProConfig& cfg) {
  SessionLists sl = build_session_lists(training, res);
  std::map<std::string, Profile> profiles;
  for (const auto& [session, list] : sl.lists) {
    const auto& authors = sl.author_keywords[session];
    KeywordList weighted = reweight(list, sl.doc_count[session],
                                    sl.phrase_doc_count[session]);
    Profile p;
    try {
      p = finalize_or_top1(normalize(weighted), authors, cfg.threshold);
    } catch (const Error& e) {
      if (e.code() != errc::all_zero) throw;
      std::cerr << "profiles: session " << session
                << " has an all-zero keyword list; keeping author keywords only\n";
      p.scope = session;
      for (const auto& kw : authors) {
        if (!kw.empty()) p.entries[kw] = 1.0;
      }
    }
    p.scope = session;
    profiles[session] = std::move(p);
  }
  return profiles;
}

ScoreMatrix score_edition(const corpus::Edition& edition,
                          const std::vector<std::string>& inventory,
                          const std::map<std::string, Profile>& trained,
                          const textproc::Resources& res,
                          const SimiProConfig& cfg) {
  const int total_docs = static_cast<int>(edition.articles.size());

  // per-article raw keyword lists and the year's phrase document counts
  std::vector<std::map<std::string, double>> raw(edition.articles.size());
  std::map<std::string, int> year_doc_count;
  for (std::size_t i = 0; i < edition.articles.size(); ++i) {
    raw[i] = article_keywords(edition.articles[i], res);
    for (const auto& [phrase, score] : raw[i]) year_doc_count[phrase] += 1;
  }

  std::vector<Profile> article_profiles(edition.articles.size());
  for (std::size_t i = 0; i < edition.articles.size(); ++i) {
    const corpus::Article& article = edition.articles[i];
    KeywordList list;
    list.scope = article_scope(article);
    list.entries = raw[i];
    auto authors = canonical_author_keywords(article, res);
    Profile p;
    p.scope = list.scope;
    try {
      p = finalize_or_top1(normalize(reweight(list, total_docs, year_doc_count)),
                           authors, cfg.threshold);
    } catch (const Error& e) {
      if (e.code() != errc::all_zero && e.code() != errc::empty_input) throw;
      for (const auto& kw : authors) {
        if (!kw.empty()) p.entries[kw] = 1.0;
      }
      std::cerr << "profiles: article " << article.doc_id
                << " yielded no keyword scores; using author keywords only\n";
    }
    article_profiles[i] = std::move(p);
  }

  std::vector<Profile> session_profiles(inventory.size());
  for (std::size_t j = 0; j < inventory.size(); ++j) {
    auto it = trained.find(inventory[j]);
    if (it != trained.end()) {
      session_profiles[j] = it->second;
      continue;
    }
    try {
      session_profiles[j] = synthesize_session_profile(inventory[j], trained, res);
    } catch (const Error& e) {
      if (e.code() != errc::no_match) throw;
      std::cerr << "profiles: session " << inventory[j]
                << " has no trained equivalent and no seed match; it scores 0\n";
      session_profiles[j].scope = inventory[j];
    }
  }

  std::vector<std::string> article_ids;
  article_ids.reserve(edition.articles.size());
  for (const auto& a : edition.articles) article_ids.push_back(a.doc_id);
  ScoreMatrix m = ScoreMatrix::zeros(edition.year, article_ids, inventory);
  for (std::size_t i = 0; i < article_profiles.size(); ++i) {
    for (std::size_t j = 0; j < session_profiles.size(); ++j) {
      m.at(i, j) = similarity(article_profiles[i], session_profiles[j]);
    }
  }
  return m;
}

void write_profiles(const std::map<std::string, Profile>& profiles,
                    const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) raise(errc::io, "cannot write profile file " + path);
  char buf[64];
  for (const auto& [scope, profile] : profiles) {
    for (const auto& [phrase, score] : profile.entries) {
      std::snprintf(buf, sizeof(buf), "%.6f", score);
      f << scope << '\t' << phrase << '\t' << buf << '\n';
    }
  }
}

std::map<std::string, Profile> read_profiles(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(errc::io, "cannot open profile file " + path);
  std::map<std::string, Profile> profiles;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::size_t t1 = line.find('\t');
    std::size_t t2 = t1 == std::string::npos ? std::string::npos : line.find('\t', t1 + 1);
    if (t2 == std::string::npos) {
      raise(errc::parse, path + ":" + std::to_string(lineno) +
                             ": expected scope<TAB>phrase<TAB>score");
    }
    try {
      std::string scope = line.substr(0, t1);
      Profile& p = profiles[scope];
      p.scope = scope;
      p.entries[line.substr(t1 + 1, t2 - t1 - 1)] = std::stod(line.substr(t2 + 1));
    } catch (const std::exception&) {
      raise(errc::parse, path + ":" + std::to_string(lineno) + ": malformed profile row");
    }
  }
  return profiles;
}

}  // namespace sesam::profiles
