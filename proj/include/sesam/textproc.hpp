#ifndef SESAM_TEXTPROC_HPP
#define SESAM_TEXTPROC_HPP

#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace sesam::textproc {

enum class Tag {
  NOUN,
  VERB,
  ADV,
  ADJ,
  PROPN,
  NUM,
  CONJ,
  INTERJ,
  DATE,
  PUNCT,
  DET,
  PREP,
  OTHER,
};

const char* tag_name(Tag tag);

struct Token {
  std::string surface;
  std::string lemma;
  Tag tag = Tag::OTHER;

  bool operator==(const Token&) const = default;
};

class Lemmatizer {
 public:
  virtual ~Lemmatizer() = default;
  virtual std::string lemma(std::string_view surface) const = 0;
};

// Lowercases only; stands in when no lemmatizer is configured.
class IdentityLemmatizer final : public Lemmatizer {
 public:
  std::string lemma(std::string_view surface) const override;
};

// Lowercases and strips a final plural "s" from words of at least five
// letters. Deterministic replacement for a real morphological analyzer.
class FrenchLemmatizer final : public Lemmatizer {
 public:
  std::string lemma(std::string_view surface) const override;
};

class Tagger {
 public:
  virtual ~Tagger() = default;
  // `lower` is the lowercased surface; `sentence_initial` and `capitalized`
  // feed the proper-noun approximation.
  virtual Tag tag(const std::string& lower, bool sentence_initial,
                  bool capitalized) const = 0;
};

// Closed-class lexicon plus capitalization heuristic for proper nouns.
class RuleTagger final : public Tagger {
 public:
  Tag tag(const std::string& lower, bool sentence_initial,
          bool capitalized) const override;
};

// Reads "surface<TAB>tag" rows; unknown surfaces fall back to the rule tagger.
class LexiconTagger final : public Tagger {
 public:
  explicit LexiconTagger(const std::string& path);
  Tag tag(const std::string& lower, bool sentence_initial,
          bool capitalized) const override;

 private:
  std::map<std::string, Tag> table_;
  RuleTagger fallback_;
};

// Immutable bundle threaded through tokenization and candidate extraction.
struct Resources {
  std::shared_ptr<const Lemmatizer> lemmatizer;
  std::shared_ptr<const Tagger> tagger;
  std::shared_ptr<const std::set<std::string>> stopwords;

  static Resources defaults();
  static Resources with_identity_lemmatizer();
};

std::vector<Token> tokenize(std::string_view text, const Resources& res);

struct CandidatePhrase {
  std::vector<std::string> words;  // lemmas

  std::size_t length() const { return words.size(); }
  std::string joined() const;

  bool operator==(const CandidatePhrase&) const = default;
  auto operator<=>(const CandidatePhrase&) const = default;
};

// Splits the token stream at excluded POS classes and stopwords; "le" and
// "de" survive strictly inside a candidate. Candidates longer than four
// words are dropped; duplicates are preserved in textual order.
std::vector<CandidatePhrase> extract_candidates(const std::vector<Token>& tokens,
                                                const Resources& res);

// Lemmatizes a free-form phrase into its canonical space-joined form.
std::string canonical_phrase(std::string_view raw, const Resources& res);

const std::set<std::string>& default_stopwords();
std::set<std::string> load_stopwords(const std::string& path);

}  // namespace sesam::textproc

#endif
