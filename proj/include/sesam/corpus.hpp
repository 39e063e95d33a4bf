#ifndef SESAM_CORPUS_HPP
#define SESAM_CORPUS_HPP

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sesam::corpus {

struct RawDocument {
  std::string doc_id;
  int year = 0;
  std::string text;
};

struct Article {
  std::string doc_id;
  int year = 0;
  std::optional<std::string> session;  // normalized (lowercase) label
  std::string title;
  std::string authors;
  std::string abstract;
  std::vector<std::string> keywords;
  std::string body;
  std::string biblio;

  bool operator==(const Article&) const = default;
};

struct SessionCapacity {
  std::string name;
  int capacity = 0;

  bool operator==(const SessionCapacity&) const = default;
};

struct Edition {
  int year = 0;
  std::vector<Article> articles;
  // Capacities come from the sidecar capacities file, not the corpus XML;
  // empty when unknown.
  std::vector<SessionCapacity> sessions;

  bool operator==(const Edition&) const = default;
};

// Cleans raw pdftotext output: accent mojibake, control characters,
// quote/hyphen variants, line rejoining, isolated symbol removal.
// Idempotent: repair(repair(t)) == repair(t).
std::string repair_text(std::string_view text);
RawDocument repair_text(const RawDocument& raw);

// Splits repaired text into the six canonical sections. Sections that
// cannot be located come back empty. Throws errc::sectionize_failure when
// no title line exists.
Article sectionize(const RawDocument& raw);

std::vector<Edition> read_corpus(const std::string& path);
void write_corpus(const std::vector<Edition>& editions, const std::string& path,
                  const std::string& corpus_type = "training");

// Capacities sidecar, rows "year<TAB>session<TAB>count".
std::map<int, std::vector<SessionCapacity>> read_capacities(const std::string& path);
void write_capacities(const std::map<int, std::vector<SessionCapacity>>& caps,
                      const std::string& path);

// First 4-digit run in a document id ("taln-2002-long-007" -> 2002), 0 if none.
int year_from_doc_id(std::string_view doc_id);

}  // namespace sesam::corpus

#endif
