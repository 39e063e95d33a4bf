#include "sesam/textproc.hpp"

#include <fstream>
#include <sstream>
#include <unordered_map>

#include "sesam/error.hpp"
#include "sesam/utf8.hpp"

namespace sesam::textproc {

extern const char* kEmbeddedStopwords;  // stopwords_data.cpp

namespace {

const std::unordered_map<std::string, Tag>& rule_lexicon() {
  static const std::unordered_map<std::string, Tag> lex = [] {
    std::unordered_map<std::string, Tag> m;
    auto add = [&](Tag tag, std::initializer_list<const char*> words) {
      for (const char* w : words) m.emplace(w, tag);
    };
    add(Tag::DET, {"le", "la", "les", "un", "une", "des", "du", "au", "aux",
                   "ce", "cet", "cette", "ces", "l'", "mon", "ma", "mes",
                   "ton", "ta", "tes", "son", "sa", "ses", "notre", "nos",
                   "votre", "vos", "leur", "leurs", "quel", "quelle", "quels",
                   "quelles", "chaque", "plusieurs", "certains", "certaines",
                   "tout", "toute", "tous", "toutes", "aucun", "aucune"});
    add(Tag::PREP, {"de", "à", "en", "dans", "par", "pour", "sur", "avec",
                    "sans", "sous", "vers", "entre", "chez", "depuis",
                    "pendant", "avant", "après", "contre", "dès", "d'",
                    "jusqu'", "parmi", "selon", "envers", "malgré", "outre",
                    "hormis", "moyennant", "concernant", "durant", "via"});
    add(Tag::CONJ, {"et", "ou", "mais", "donc", "or", "ni", "car", "que",
                    "qu'", "si", "comme", "quand", "lorsque", "lorsqu'",
                    "puisque", "puisqu'", "quoique", "quoiqu'", "sinon",
                    "cependant", "toutefois", "néanmoins", "tandis"});
    add(Tag::ADV, {"ne", "n'", "pas", "plus", "moins", "très", "bien", "mal",
                   "aussi", "encore", "toujours", "jamais", "souvent", "peu",
                   "beaucoup", "trop", "assez", "ainsi", "alors", "ensuite",
                   "enfin", "déjà", "ici", "là", "où", "autant", "davantage",
                   "notamment", "seulement", "également", "surtout",
                   "presque", "environ", "parfois", "aussitôt", "plutôt",
                   "ailleurs", "partout", "maintenant", "hier", "demain",
                   "aujourd'hui", "désormais", "y"});
    add(Tag::VERB,
        {"est",      "sont",      "être",     "était",    "étaient",
         "sera",     "seront",    "serait",   "seraient", "soit",
         "soient",   "étant",     "été",      "fut",      "furent",
         "a",        "ont",       "avoir",    "avait",    "avaient",
         "aura",     "auront",    "aurait",   "auraient", "ayant",
         "eu",       "fait",      "font",     "faire",    "faisait",
         "faisaient","fera",      "feront",   "faisant",  "peut",
         "peuvent",  "pouvait",   "pouvaient","pourra",   "pourront",
         "pourrait", "pourraient","pouvant",  "doit",     "doivent",
         "devait",   "devaient",  "devra",    "devront",  "devrait",
         "devraient","devant",    "permet",   "permettent","permettre",
         "permettant","utilise",  "utilisent","utiliser", "utilisant",
         "utilisé",  "utilisée",  "utilisés", "utilisées","présente",
         "présentent","présenter","présentons","propose", "proposent",
         "proposer", "proposons", "proposé",  "proposée", "montre",
         "montrent", "montrer",   "montrons", "obtient",  "obtiennent",
         "obtenir",  "obtenu",    "obtenus",  "obtenue",  "obtenues",
         "donne",    "donnent",   "donner",   "donné",    "donnée",
         "données",  "donnés",    "va",       "vont",     "aller",
         "vient",    "viennent",  "venir",    "prend",    "prennent",
         "prendre",  "pris",      "prise",    "met",      "mettent",
         "mettre",   "mis",       "mise",     "décrit",   "décrivent",
         "décrire",  "considère", "considèrent","considérer","constitue",
         "constituent","constituer","contient","contiennent","contenir",
         "existe",   "existent",  "exister",  "devient",  "deviennent",
         "devenir",  "semble",    "semblent", "sembler",  "reste",
         "restent",  "rester",    "trouve",   "trouvent", "trouver",
         "voit",     "voient",    "voir",     "sait",     "savent",
         "savoir",   "faut",      "falloir",  "s'agit",   "agit"});
    add(Tag::INTERJ, {"ah", "oh", "eh", "hélas", "voilà", "voici", "hé",
                      "hem", "hum", "ô"});
    add(Tag::DATE,
        {"janvier", "février", "mars", "avril", "mai", "juin", "juillet",
         "août", "septembre", "octobre", "novembre", "décembre", "lundi",
         "mardi", "mercredi", "jeudi", "vendredi", "samedi", "dimanche"});
    add(Tag::NUM, {"zéro", "deux", "trois", "quatre", "cinq", "six", "sept",
                   "huit", "neuf", "dix", "onze", "douze", "vingt", "trente",
                   "quarante", "cinquante", "soixante", "cent", "mille"});
    return m;
  }();
  return lex;
}

bool sentence_closing_punct(const std::string& surface) {
  for (char c : surface) {
    if (c == '.' || c == '!' || c == '?' || c == ':') return true;
  }
  return false;
}

std::set<std::string> parse_stopwords(std::istream& in) {
  std::set<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (!line.empty()) words.insert(utf8::to_lower_copy(line));
  }
  return words;
}

Tag parse_tag(const std::string& name) {
  static const std::map<std::string, Tag> names = {
      {"NOUN", Tag::NOUN},   {"VERB", Tag::VERB}, {"ADV", Tag::ADV},
      {"ADJ", Tag::ADJ},     {"PROPN", Tag::PROPN}, {"NUM", Tag::NUM},
      {"CONJ", Tag::CONJ},   {"INTERJ", Tag::INTERJ}, {"DATE", Tag::DATE},
      {"PUNCT", Tag::PUNCT}, {"DET", Tag::DET},   {"PREP", Tag::PREP},
      {"OTHER", Tag::OTHER}};
  auto it = names.find(name);
  if (it == names.end()) raise(errc::parse, "unknown tag name: " + name);
  return it->second;
}

bool is_word_char(char32_t cp) { return utf8::is_alpha(cp) || utf8::is_greek(cp); }

}  // namespace

const char* tag_name(Tag tag) {
  switch (tag) {
    case Tag::NOUN: return "NOUN";
    case Tag::VERB: return "VERB";
    case Tag::ADV: return "ADV";
    case Tag::ADJ: return "ADJ";
    case Tag::PROPN: return "PROPN";
    case Tag::NUM: return "NUM";
    case Tag::CONJ: return "CONJ";
    case Tag::INTERJ: return "INTERJ";
    case Tag::DATE: return "DATE";
    case Tag::PUNCT: return "PUNCT";
    case Tag::DET: return "DET";
    case Tag::PREP: return "PREP";
    case Tag::OTHER: return "OTHER";
  }
  return "OTHER";
}

std::string IdentityLemmatizer::lemma(std::string_view surface) const {
  return utf8::to_lower_copy(surface);
}

std::string FrenchLemmatizer::lemma(std::string_view surface) const {
  std::string low = utf8::to_lower_copy(surface);
  if (utf8::length(low) >= 5 && !low.empty() && low.back() == 's') {
    low.pop_back();
  }
  return low;
}

Tag RuleTagger::tag(const std::string& lower, bool sentence_initial,
                    bool capitalized) const {
  const auto& lex = rule_lexicon();
  auto it = lex.find(lower);
  if (it != lex.end()) return it->second;
  if (capitalized && !sentence_initial) return Tag::PROPN;
  return Tag::OTHER;
}

LexiconTagger::LexiconTagger(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(errc::io, "cannot open tagger lexicon " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::size_t tab = line.find('\t');
    if (tab == std::string::npos) {
      raise(errc::parse, path + ":" + std::to_string(lineno) + ": expected surface<TAB>tag");
    }
    table_[utf8::to_lower_copy(line.substr(0, tab))] = parse_tag(line.substr(tab + 1));
  }
}

Tag LexiconTagger::tag(const std::string& lower, bool sentence_initial,
                       bool capitalized) const {
  auto it = table_.find(lower);
  if (it != table_.end()) return it->second;
  return fallback_.tag(lower, sentence_initial, capitalized);
}

Resources Resources::defaults() {
  Resources r;
  r.lemmatizer = std::make_shared<FrenchLemmatizer>();
  r.tagger = std::make_shared<RuleTagger>();
  r.stopwords = std::make_shared<std::set<std::string>>(default_stopwords());
  return r;
}

Resources Resources::with_identity_lemmatizer() {
  Resources r = defaults();
  r.lemmatizer = std::make_shared<IdentityLemmatizer>();
  return r;
}

const std::set<std::string>& default_stopwords() {
  static const std::set<std::string> words = [] {
    std::istringstream in(kEmbeddedStopwords);
    return parse_stopwords(in);
  }();
  return words;
}

std::set<std::string> load_stopwords(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(errc::io, "cannot open stopword file " + path);
  return parse_stopwords(in);
}

std::vector<Token> tokenize(std::string_view text, const Resources& res) {
  std::vector<Token> tokens;
  const std::u32string s = utf8::decode_all(text);
  bool sentence_initial = true;
  std::size_t i = 0;
  auto push_word = [&](const std::u32string& surface32) {
    Token t;
    t.surface = utf8::encode_all(surface32);
    std::string lower = utf8::to_lower_copy(t.surface);
    t.lemma = res.lemmatizer ? res.lemmatizer->lemma(t.surface) : lower;
    bool capitalized = !surface32.empty() && utf8::is_upper(surface32[0]);
    t.tag = res.tagger ? res.tagger->tag(lower, sentence_initial, capitalized)
                       : Tag::OTHER;
    tokens.push_back(std::move(t));
    sentence_initial = false;
  };
  while (i < s.size()) {
    char32_t cp = s[i];
    if (utf8::is_space(cp)) {
      ++i;
      continue;
    }
    if (utf8::is_digit(cp)) {
      std::u32string num;
      while (i < s.size() &&
             (utf8::is_digit(s[i]) ||
              ((s[i] == U'.' || s[i] == U',') && i + 1 < s.size() &&
               utf8::is_digit(s[i + 1])))) {
        num.push_back(s[i]);
        ++i;
      }
      Token t;
      t.surface = utf8::encode_all(num);
      t.lemma = t.surface;
      t.tag = Tag::NUM;
      tokens.push_back(std::move(t));
      sentence_initial = false;
      continue;
    }
    if (is_word_char(cp)) {
      std::u32string word;
      while (i < s.size()) {
        if (is_word_char(s[i])) {
          word.push_back(s[i]);
          ++i;
        } else if (s[i] == U'-' && i + 1 < s.size() && is_word_char(s[i + 1]) &&
                   !word.empty()) {
          word.push_back(U'-');
          ++i;
        } else if (s[i] == U'\'' && !word.empty()) {
          // elision: close the token with its apostrophe ("l'", "d'", ...)
          word.push_back(U'\'');
          ++i;
          break;
        } else {
          break;
        }
      }
      push_word(word);
      continue;
    }
    // punctuation run of the same character
    std::u32string punct;
    char32_t first = s[i];
    while (i < s.size() && s[i] == first && !utf8::is_space(s[i]) &&
           !is_word_char(s[i]) && !utf8::is_digit(s[i])) {
      punct.push_back(s[i]);
      ++i;
    }
    Token t;
    t.surface = utf8::encode_all(punct);
    t.lemma = t.surface;
    t.tag = Tag::PUNCT;
    tokens.push_back(t);
    if (sentence_closing_punct(t.surface)) sentence_initial = true;
  }
  return tokens;
}

std::string CandidatePhrase::joined() const {
  std::string out;
  for (const auto& w : words) {
    if (!out.empty()) out.push_back(' ');
    out += w;
  }
  return out;
}

std::vector<CandidatePhrase> extract_candidates(const std::vector<Token>& tokens,
                                                const Resources& res) {
  static constexpr std::size_t kMaxWords = 4;
  const std::set<std::string>& stop =
      res.stopwords ? *res.stopwords : default_stopwords();

  auto soft = [](const std::string& lemma) {
    return lemma == "le" || lemma == "de";
  };
  auto breaks = [&](const Token& t) {
    switch (t.tag) {
      case Tag::VERB: case Tag::ADV: case Tag::PROPN: case Tag::NUM:
      case Tag::CONJ: case Tag::INTERJ: case Tag::DATE: case Tag::PUNCT:
        return true;
      default:
        break;
    }
    if (soft(t.lemma)) return false;
    if (t.tag == Tag::DET || t.tag == Tag::PREP) return true;
    return stop.count(t.lemma) > 0;
  };

  std::vector<CandidatePhrase> out;
  std::vector<std::string> segment;
  auto flush = [&]() {
    std::size_t lo = 0, hi = segment.size();
    while (lo < hi && soft(segment[lo])) ++lo;
    while (hi > lo && soft(segment[hi - 1])) --hi;
    std::size_t n = hi - lo;
    if (n >= 1 && n <= kMaxWords) {
      out.push_back(CandidatePhrase{
          std::vector<std::string>(segment.begin() + lo, segment.begin() + hi)});
    }
    segment.clear();
  };
  for (const Token& t : tokens) {
    if (breaks(t)) {
      flush();
    } else {
      segment.push_back(t.lemma);
    }
  }
  flush();
  return out;
}

std::string canonical_phrase(std::string_view raw, const Resources& res) {
  std::vector<Token> tokens = tokenize(raw, res);
  std::string out;
  for (const Token& t : tokens) {
    if (t.tag == Tag::PUNCT) continue;
    if (!out.empty()) out.push_back(' ');
    out += t.lemma;
  }
  return out;
}

}  // namespace sesam::textproc
