#include "sesam/corpus.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <sstream>

#include "sesam/error.hpp"
#include "sesam/utf8.hpp"

namespace sesam::corpus {

namespace {

// --- repair passes ---------------------------------------------------------

// Combining marks displaced by pdftotext, mapped back to precomposed letters.
// The dotless-i entries also cover the trema rendered as a quote glyph.
struct MojibakeEntry {
  const char* broken;
  const char* fixed;
};

constexpr std::array<MojibakeEntry, 31> kMojibake = {{
    {"\xC4\xB1\xCC\x88", "\xC3\xAF"},  // dotless i + comb. diaeresis -> i"
    {"\xC4\xB1\xCC\x82", "\xC3\xAE"},  // dotless i + comb. circumflex
    {"\xC4\xB1\x22", "\xC3\xAF"},      // dotless i + straight quote
    {"\xC4\xB1\xE2\x80\x9D", "\xC3\xAF"},  // dotless i + curly quote
    {"e\xCC\x81", "\xC3\xA9"},
    {"e\xCC\x80", "\xC3\xA8"},
    {"e\xCC\x82", "\xC3\xAA"},
    {"e\xCC\x88", "\xC3\xAB"},
    {"a\xCC\x80", "\xC3\xA0"},
    {"a\xCC\x82", "\xC3\xA2"},
    {"i\xCC\x82", "\xC3\xAE"},
    {"i\xCC\x88", "\xC3\xAF"},
    {"o\xCC\x82", "\xC3\xB4"},
    {"u\xCC\x82", "\xC3\xBB"},
    {"u\xCC\x80", "\xC3\xB9"},
    {"u\xCC\x88", "\xC3\xBC"},
    {"c\xCC\xA7", "\xC3\xA7"},
    {"E\xCC\x81", "\xC3\x89"},
    {"E\xCC\x80", "\xC3\x88"},
    {"E\xCC\x82", "\xC3\x8A"},
    {"E\xCC\x88", "\xC3\x8B"},
    {"A\xCC\x80", "\xC3\x80"},
    {"A\xCC\x82", "\xC3\x82"},
    {"I\xCC\x82", "\xC3\x8E"},
    {"I\xCC\x88", "\xC3\x8F"},
    {"O\xCC\x82", "\xC3\x94"},
    {"U\xCC\x82", "\xC3\x9B"},
    {"U\xCC\x80", "\xC3\x99"},
    {"U\xCC\x88", "\xC3\x9C"},
    {"C\xCC\xA7", "\xC3\x87"},
    {"o\xCC\x88", "\xC3\xB6"},
}};

bool is_letter_byte(unsigned char b) {
  return std::isalpha(b) != 0 || b >= 0x80;
}

void replace_all(std::string& s, std::string_view from, std::string_view to) {
  std::size_t pos = 0;
  while ((pos = s.find(from, pos)) != std::string::npos) {
    s.replace(pos, from.size(), to);
    pos += to.size();
  }
}

std::string normalize_controls(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    std::size_t start = i;
    char32_t cp = utf8::decode(text, i);
    if (cp == U'\r') {
      if (i < text.size() && text[i] == '\n') ++i;
      out.push_back('\n');
    } else if (cp == U'\f' || cp == 0x0B) {
      out.push_back('\n');
    } else if (cp == U'\t') {
      out.push_back(' ');
    } else if (cp < 0x20 && cp != U'\n') {
      // drop
    } else if (cp == 0x7F || (cp >= 0x80 && cp <= 0x9F)) {
      // drop C1 controls
    } else {
      out.append(text.substr(start, i - start));
    }
  }
  return out;
}

std::string repair_mojibake(std::string_view text) {
  std::string s(text);
  for (const auto& e : kMojibake) {
    // A space wedged between the previous letter and the displaced cluster is
    // part of the same extraction artifact; swallow it.
    const std::string spaced = std::string(" ") + e.broken;
    std::size_t pos = 0;
    while ((pos = s.find(spaced, pos)) != std::string::npos) {
      if (pos > 0 && is_letter_byte(static_cast<unsigned char>(s[pos - 1]))) {
        s.replace(pos, spaced.size(), e.fixed);
      } else {
        ++pos;
      }
    }
    replace_all(s, e.broken, e.fixed);
  }
  return s;
}

std::string unify_quotes_hyphens(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    std::size_t start = i;
    char32_t cp = utf8::decode(text, i);
    switch (cp) {
      case 0x201C: case 0x201D: case 0x201E: case 0x201F:
      case 0x00AB: case 0x00BB: case 0x2039: case 0x203A: case 0x2033:
        out.push_back('"');
        break;
      case 0x2018: case 0x2019: case 0x201A: case 0x201B: case 0x2032:
      case 0x0060:
        out.push_back('\'');
        break;
      case 0x2010: case 0x2011: case 0x2012: case 0x2013: case 0x2014:
      case 0x2015: case 0x2212:
        out.push_back('-');
        break;
      case 0x00AD:  // soft hyphen: hyphenation leftover
        break;
      case 0x00A0: case 0x2009: case 0x202F:
        out.push_back(' ');
        break;
      default:
        out.append(text.substr(start, i - start));
    }
  }
  return out;
}

std::string rtrim(std::string s) {
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.pop_back();
  return s;
}

std::string ltrim(std::string s) {
  std::size_t i = 0;
  while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
  return s.substr(i);
}

std::string trim(std::string s) { return ltrim(rtrim(std::move(s))); }

bool starts_lowercase(std::string_view line) {
  std::size_t i = 0;
  if (i >= line.size()) return false;
  char32_t cp = utf8::decode(line, i);
  return utf8::is_lower(cp);
}

bool ends_sentence(std::string_view line) {
  if (line.empty()) return true;
  char c = line.back();
  return c == '.' || c == '!' || c == '?' || c == ':';
}

// A newline goes away when the previous line neither closes a sentence nor
// the next one opens a new one; a trailing hyphen glues the halves directly.
std::string rejoin_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char c : text) {
    if (c == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  lines.push_back(cur);

  std::string out;
  std::string pending;
  bool have_pending = false;
  auto flush = [&]() {
    if (have_pending) {
      out += pending;
      out.push_back('\n');
      pending.clear();
      have_pending = false;
    }
  };
  for (std::size_t li = 0; li < lines.size(); ++li) {
    std::string line = rtrim(lines[li]);
    if (!have_pending) {
      pending = line;
      have_pending = true;
      continue;
    }
    std::string stripped = ltrim(line);
    if (pending.empty() || stripped.empty()) {
      flush();
      pending = line;
      have_pending = true;
      continue;
    }
    if (pending.back() == '-') {
      pending.pop_back();
      pending += stripped;
    } else if (!ends_sentence(pending) && starts_lowercase(stripped)) {
      pending.push_back(' ');
      pending += stripped;
    } else {
      flush();
      pending = line;
      have_pending = true;
    }
  }
  if (have_pending) out += pending;
  return out;
}

bool keep_single_letter(char32_t cp) {
  char32_t low = utf8::to_lower(cp);
  return low == U'a' || low == U'y' || low == 0xE0 /* a grave */ ||
         low == 0xF4 /* o circumflex */;
}

bool strippable_single(char32_t cp) {
  if (utf8::is_greek(cp)) return true;
  return utf8::is_alpha(cp) && !keep_single_letter(cp);
}

bool boundary_before(const std::u32string& s, std::size_t idx) {
  return idx == 0 || utf8::is_space(s[idx - 1]);
}

bool boundary_after(const std::u32string& s, std::size_t idx) {
  if (idx >= s.size()) return true;
  char32_t cp = s[idx];
  if (utf8::is_space(cp)) return true;
  if (cp == U'.' || cp == U',' || cp == U';' || cp == U':' || cp == U'!' ||
      cp == U'?') {
    return idx + 1 >= s.size() || utf8::is_space(s[idx + 1]);
  }
  return false;
}

// Removes isolated Greek letters and single-letter math variables, keeping
// the genuine French one-letter words (a, à, y, ô).
std::string strip_isolated_symbols(std::string_view text) {
  std::u32string s = utf8::decode_all(text);
  std::u32string out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    char32_t cp = s[i];
    bool single = (utf8::is_alpha(cp) || utf8::is_greek(cp)) &&
                  boundary_before(s, i) && boundary_after(s, i + 1) &&
                  !(i + 1 < s.size() && utf8::is_alpha(s[i + 1]));
    if (single && strippable_single(cp)) {
      ++i;
      // eat one following plain space so "foo x bar" -> "foo bar"
      if (i < s.size() && s[i] == U' ') ++i;
      continue;
    }
    out.push_back(cp);
    ++i;
  }
  return utf8::encode_all(out);
}

// --- sectionizer ------------------------------------------------------------

enum class HeaderKind { none, abstract, keywords, biblio };

std::string strip_header_decoration(std::string s) {
  while (!s.empty()) {
    char c = s.back();
    if (c == ':' || c == '.' || c == ' ' || c == '-') {
      s.pop_back();
    } else {
      break;
    }
  }
  return s;
}

const std::vector<std::string>& abstract_headers() {
  static const std::vector<std::string> v = {"r\xC3\xA9sum\xC3\xA9", "resume",
                                             "abstract"};
  return v;
}

const std::vector<std::string>& keyword_headers() {
  static const std::vector<std::string> v = {
      "mots-cl\xC3\xA9s", "mots cl\xC3\xA9s", "mots-cles", "mots cles",
      "mots-clefs",       "mots clefs",       "keywords",  "key words"};
  return v;
}

const std::vector<std::string>& biblio_headers() {
  static const std::vector<std::string> v = {
      "r\xC3\xA9f\xC3\xA9rences", "references", "bibliographie",
      "bibliography"};
  return v;
}

HeaderKind header_kind(const std::string& line, std::string* inline_content) {
  std::string low = utf8::to_lower_copy(trim(line));
  std::string bare = strip_header_decoration(low);
  for (const auto& h : abstract_headers()) {
    if (bare == h) return HeaderKind::abstract;
  }
  for (const auto& h : biblio_headers()) {
    if (bare == h) return HeaderKind::biblio;
  }
  for (const auto& h : keyword_headers()) {
    if (low.rfind(h, 0) == 0) {
      if (inline_content) {
        std::string rest = trim(line).substr(h.size());
        std::size_t i = 0;
        while (i < rest.size() &&
               (rest[i] == ' ' || rest[i] == ':' || rest[i] == '.' ||
                rest[i] == '-')) {
          ++i;
        }
        *inline_content = rest.substr(i);
      }
      return HeaderKind::keywords;
    }
  }
  return HeaderKind::none;
}

std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char c : text) {
    if (c == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  lines.push_back(cur);
  return lines;
}

std::string join_block(const std::vector<std::string>& lines, std::size_t from,
                       std::size_t to) {
  std::size_t lo = from, hi = std::min(to, lines.size());
  while (lo < hi && trim(lines[lo]).empty()) ++lo;
  while (hi > lo && trim(lines[hi - 1]).empty()) --hi;
  std::string out;
  for (std::size_t i = lo; i < hi; ++i) {
    if (!out.empty()) out.push_back('\n');
    out += trim(lines[i]);
  }
  return out;
}

std::vector<std::string> split_keyword_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  auto flush = [&]() {
    std::string t = trim(cur);
    while (!t.empty() && t.back() == '.') t.pop_back();
    t = trim(t);
    if (!t.empty()) out.push_back(t);
    cur.clear();
  };
  for (char c : s) {
    if (c == ',' || c == ';') {
      flush();
    } else {
      cur.push_back(c);
    }
  }
  flush();
  return out;
}

// --- minimal XML ------------------------------------------------------------

struct XmlNode {
  std::string name;
  std::vector<std::pair<std::string, std::string>> attrs;
  std::vector<XmlNode> children;
  std::string text;  // concatenated CDATA, or raw character data when no CDATA
  bool has_cdata = false;

  const std::string* attr(const std::string& key) const {
    for (const auto& [k, v] : attrs) {
      if (k == key) return &v;
    }
    return nullptr;
  }
};

class XmlScanner {
 public:
  explicit XmlScanner(std::string_view src) : src_(src) {}

  XmlNode parse_document() {
    skip_misc();
    if (peek_starts("<?")) {
      skip_until("?>");
      skip_misc();
    }
    XmlNode root = parse_element();
    return root;
  }

 private:
  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;

  [[noreturn]] void fail(const std::string& what) {
    raise(errc::parse, "corpus parse error at line " + std::to_string(line_) +
                           ": " + what);
  }

  void advance(std::size_t n) {
    for (std::size_t k = 0; k < n && pos_ < src_.size(); ++k, ++pos_) {
      if (src_[pos_] == '\n') ++line_;
    }
  }

  bool peek_starts(std::string_view s) const {
    return src_.compare(pos_, s.size(), s) == 0;
  }

  void skip_until(std::string_view end) {
    std::size_t found = src_.find(end, pos_);
    if (found == std::string::npos) fail("unterminated construct");
    advance(found + end.size() - pos_);
  }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) {
      advance(1);
    }
  }

  void skip_misc() {
    for (;;) {
      skip_ws();
      if (peek_starts("<!--")) {
        skip_until("-->");
      } else if (peek_starts("<!DOCTYPE")) {
        skip_until(">");
      } else {
        return;
      }
    }
  }

  std::string read_name() {
    std::size_t start = pos_;
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' ||
          c == ':' || c == '.') {
        advance(1);
      } else {
        break;
      }
    }
    if (pos_ == start) fail("expected a name");
    return std::string(src_.substr(start, pos_ - start));
  }

  static std::string decode_entities(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    std::size_t i = 0;
    while (i < s.size()) {
      if (s[i] == '&') {
        if (s.compare(i, 5, "&amp;") == 0) { out.push_back('&'); i += 5; continue; }
        if (s.compare(i, 4, "&lt;") == 0) { out.push_back('<'); i += 4; continue; }
        if (s.compare(i, 4, "&gt;") == 0) { out.push_back('>'); i += 4; continue; }
        if (s.compare(i, 6, "&quot;") == 0) { out.push_back('"'); i += 6; continue; }
        if (s.compare(i, 6, "&apos;") == 0) { out.push_back('\''); i += 6; continue; }
      }
      out.push_back(s[i++]);
    }
    return out;
  }

  XmlNode parse_element() {
    if (pos_ >= src_.size() || src_[pos_] != '<') fail("expected '<'");
    advance(1);
    XmlNode node;
    node.name = read_name();
    for (;;) {
      skip_ws();
      if (pos_ >= src_.size()) fail("unterminated tag <" + node.name + ">");
      if (peek_starts("/>")) {
        advance(2);
        return node;
      }
      if (src_[pos_] == '>') {
        advance(1);
        break;
      }
      std::string key = read_name();
      skip_ws();
      if (pos_ >= src_.size() || src_[pos_] != '=') fail("expected '=' after attribute " + key);
      advance(1);
      skip_ws();
      if (pos_ >= src_.size() || (src_[pos_] != '"' && src_[pos_] != '\'')) {
        fail("expected quoted attribute value for " + key);
      }
      char quote = src_[pos_];
      advance(1);
      std::size_t vstart = pos_;
      std::size_t vend = src_.find(quote, vstart);
      if (vend == std::string::npos) fail("unterminated attribute value for " + key);
      std::string value = decode_entities(src_.substr(vstart, vend - vstart));
      advance(vend + 1 - pos_);
      node.attrs.emplace_back(std::move(key), std::move(value));
    }
    // content
    std::string raw_text;
    for (;;) {
      if (pos_ >= src_.size()) fail("unterminated element <" + node.name + ">");
      if (peek_starts("<![CDATA[")) {
        advance(9);
        std::size_t end = src_.find("]]>", pos_);
        if (end == std::string::npos) fail("unterminated CDATA in <" + node.name + ">");
        node.text.append(src_.substr(pos_, end - pos_));
        node.has_cdata = true;
        advance(end + 3 - pos_);
      } else if (peek_starts("<!--")) {
        skip_until("-->");
      } else if (peek_starts("</")) {
        advance(2);
        std::string close = read_name();
        if (close != node.name) {
          fail("mismatched close tag </" + close + "> for <" + node.name + ">");
        }
        skip_ws();
        if (pos_ >= src_.size() || src_[pos_] != '>') fail("expected '>'");
        advance(1);
        if (!node.has_cdata) node.text = decode_entities(raw_text);
        return node;
      } else if (src_[pos_] == '<') {
        node.children.push_back(parse_element());
      } else {
        raw_text.push_back(src_[pos_]);
        advance(1);
      }
    }
  }
};

std::string escape_attr(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string cdata(std::string_view s) {
  std::string body(s);
  replace_all(body, "]]>", "]]]]><![CDATA[>");
  return "<![CDATA[" + body + "]]>";
}

std::string join_keywords(const std::vector<std::string>& kws) {
  std::string out;
  for (const auto& k : kws) {
    if (!out.empty()) out += "; ";
    out += k;
  }
  return out;
}

Article article_from_node(const XmlNode& node, int year) {
  Article a;
  const std::string* id = node.attr("numArticle");
  if (id == nullptr || id->empty()) {
    raise(errc::parse, "article element without numArticle attribute");
  }
  a.doc_id = *id;
  a.year = year;
  if (const std::string* s = node.attr("normalisedSession");
      s != nullptr && !s->empty()) {
    a.session = utf8::to_lower_copy(*s);
  }
  for (const XmlNode& child : node.children) {
    if (child.name == "title") a.title = child.text;
    else if (child.name == "authors") a.authors = child.text;
    else if (child.name == "abstract") a.abstract = child.text;
    else if (child.name == "keywords") a.keywords = split_keyword_list(child.text);
    else if (child.name == "body") a.body = child.text;
    else if (child.name == "biblio") a.biblio = child.text;
  }
  return a;
}

}  // namespace

std::string repair_text(std::string_view text) {
  std::string s = normalize_controls(text);
  s = repair_mojibake(s);
  s = unify_quotes_hyphens(s);
  s = rejoin_lines(s);
  s = strip_isolated_symbols(s);
  return s;
}

RawDocument repair_text(const RawDocument& raw) {
  if (raw.text.empty()) raise(errc::empty_input, "repair_text: empty document " + raw.doc_id);
  RawDocument out = raw;
  out.text = repair_text(raw.text);
  return out;
}

Article sectionize(const RawDocument& raw) {
  const std::vector<std::string> lines = split_lines(raw.text);

  std::size_t title_idx = lines.size();
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (!trim(lines[i]).empty()) {
      title_idx = i;
      break;
    }
  }
  if (title_idx == lines.size()) {
    raise(errc::sectionize_failure, "no title line in document " + raw.doc_id);
  }

  std::size_t abstract_idx = lines.size();
  std::size_t kw_idx = lines.size();
  std::size_t bib_idx = lines.size();
  std::string kw_inline;
  for (std::size_t i = title_idx + 1; i < lines.size(); ++i) {
    std::string inline_content;
    switch (header_kind(lines[i], &inline_content)) {
      case HeaderKind::abstract:
        if (abstract_idx == lines.size()) abstract_idx = i;
        break;
      case HeaderKind::keywords:
        if (kw_idx == lines.size()) {
          kw_idx = i;
          kw_inline = inline_content;
        }
        break;
      case HeaderKind::biblio:
        bib_idx = i;  // keep the last standalone header
        break;
      case HeaderKind::none:
        break;
    }
  }

  Article a;
  a.doc_id = raw.doc_id;
  a.year = raw.year;
  a.title = trim(lines[title_idx]);

  std::size_t authors_end = std::min(abstract_idx, kw_idx);
  if (authors_end != lines.size()) {
    a.authors = join_block(lines, title_idx + 1, authors_end);
  }

  std::size_t abstract_end = lines.size();
  if (abstract_idx != lines.size()) {
    if (kw_idx != lines.size() && kw_idx > abstract_idx) {
      abstract_end = kw_idx;
    } else {
      abstract_end = abstract_idx + 1;
      bool seen_content = false;
      for (std::size_t i = abstract_idx + 1; i < std::min(bib_idx, lines.size()); ++i) {
        if (trim(lines[i]).empty()) {
          if (seen_content) {
            abstract_end = i;
            break;
          }
        } else {
          seen_content = true;
          abstract_end = i + 1;
        }
      }
    }
    a.abstract = join_block(lines, abstract_idx + 1, abstract_end);
  }

  std::size_t body_start;
  if (kw_idx != lines.size()) {
    std::string collected = kw_inline;
    std::size_t i = kw_idx + 1;
    for (; i < std::min(bib_idx, lines.size()); ++i) {
      std::string t = trim(lines[i]);
      if (t.empty() || header_kind(lines[i], nullptr) != HeaderKind::none) break;
      collected += ", " + t;
    }
    a.keywords = split_keyword_list(collected);
    body_start = i;
  } else if (abstract_idx != lines.size()) {
    body_start = abstract_end;
  } else {
    body_start = title_idx + 1;
  }

  a.body = join_block(lines, body_start, bib_idx);
  if (bib_idx != lines.size()) {
    a.biblio = join_block(lines, bib_idx + 1, lines.size());
  }
  return a;
}

std::vector<Edition> read_corpus(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(errc::io, "cannot open corpus file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string content = buf.str();

  XmlScanner scanner(content);
  XmlNode root = scanner.parse_document();
  if (root.name != "deftcorpus") {
    raise(errc::parse, "root element is <" + root.name + ">, expected <deftcorpus>");
  }
  std::vector<Edition> editions;
  for (const XmlNode& child : root.children) {
    const std::string prefix = "articles-";
    if (child.name.rfind(prefix, 0) != 0) {
      raise(errc::parse, "unexpected element <" + child.name + "> under <deftcorpus>");
    }
    const std::string year_str = child.name.substr(prefix.size());
    int year = 0;
    for (char c : year_str) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        raise(errc::parse, "bad edition element <" + child.name + ">");
      }
      year = year * 10 + (c - '0');
    }
    Edition ed;
    ed.year = year;
    for (const XmlNode& art : child.children) {
      if (art.name != "article") {
        raise(errc::parse, "unexpected element <" + art.name + "> under <" + child.name + ">");
      }
      ed.articles.push_back(article_from_node(art, year));
    }
    editions.push_back(std::move(ed));
  }
  return editions;
}

void write_corpus(const std::vector<Edition>& editions, const std::string& path,
                  const std::string& corpus_type) {
  int top_year = 0;
  for (const auto& ed : editions) top_year = std::max(top_year, ed.year);
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"yes\"?>\n";
  out << "<deftcorpus type=\"" << escape_attr(corpus_type) << "\" year=\""
      << top_year << "\">\n";
  for (const auto& ed : editions) {
    out << "<articles-" << ed.year << ">\n";
    for (const auto& a : ed.articles) {
      out << "  <article numArticle=\"" << escape_attr(a.doc_id) << "\"";
      if (a.session.has_value()) {
        out << " normalisedSession=\""
            << escape_attr(utf8::to_lower_copy(*a.session)) << "\"";
      }
      out << ">\n";
      out << "    <title>" << cdata(a.title) << "</title>\n";
      out << "    <authors>" << cdata(a.authors) << "</authors>\n";
      out << "    <abstract>" << cdata(a.abstract) << "</abstract>\n";
      out << "    <keywords>" << cdata(join_keywords(a.keywords)) << "</keywords>\n";
      out << "    <body>" << cdata(a.body) << "</body>\n";
      out << "    <biblio>" << cdata(a.biblio) << "</biblio>\n";
      out << "  </article>\n";
    }
    out << "</articles-" << ed.year << ">\n";
  }
  out << "</deftcorpus>\n";

  std::ofstream f(path, std::ios::binary);
  if (!f) raise(errc::io, "cannot write corpus file " + path);
  f << out.str();
}

std::map<int, std::vector<SessionCapacity>> read_capacities(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(errc::io, "cannot open capacities file " + path);
  std::map<int, std::vector<SessionCapacity>> caps;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    std::size_t t1 = line.find('\t');
    std::size_t t2 = t1 == std::string::npos ? std::string::npos : line.find('\t', t1 + 1);
    if (t2 == std::string::npos) {
      raise(errc::parse, path + ":" + std::to_string(lineno) + ": expected year<TAB>session<TAB>count");
    }
    try {
      int year = std::stoi(line.substr(0, t1));
      std::string session = line.substr(t1 + 1, t2 - t1 - 1);
      int count = std::stoi(line.substr(t2 + 1));
      if (session.empty() || count < 0) throw std::invalid_argument("bad row");
      caps[year].push_back({utf8::to_lower_copy(session), count});
    } catch (const std::exception&) {
      raise(errc::parse, path + ":" + std::to_string(lineno) + ": malformed capacities row");
    }
  }
  for (auto& [year, v] : caps) {
    std::sort(v.begin(), v.end(),
              [](const auto& a, const auto& b) { return a.name < b.name; });
  }
  return caps;
}

void write_capacities(const std::map<int, std::vector<SessionCapacity>>& caps,
                      const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) raise(errc::io, "cannot write capacities file " + path);
  for (const auto& [year, v] : caps) {
    auto sorted = v;
    std::sort(sorted.begin(), sorted.end(),
              [](const auto& a, const auto& b) { return a.name < b.name; });
    for (const auto& sc : sorted) {
      f << year << '\t' << sc.name << '\t' << sc.capacity << '\n';
    }
  }
}

int year_from_doc_id(std::string_view doc_id) {
  for (std::size_t i = 0; i + 4 <= doc_id.size(); ++i) {
    bool four = true;
    for (std::size_t k = 0; k < 4; ++k) {
      if (!std::isdigit(static_cast<unsigned char>(doc_id[i + k]))) {
        four = false;
        break;
      }
    }
    if (four && (i + 4 == doc_id.size() ||
                 !std::isdigit(static_cast<unsigned char>(doc_id[i + 4])))) {
      return (doc_id[i] - '0') * 1000 + (doc_id[i + 1] - '0') * 100 +
             (doc_id[i + 2] - '0') * 10 + (doc_id[i + 3] - '0');
    }
  }
  return 0;
}

}  // namespace sesam::corpus
