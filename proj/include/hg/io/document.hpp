#pragma once

#include <cctype>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "hg/construct/diagram.hpp"
#include "hg/core/hypergroup.hpp"
#include "hg/morph/morphism.hpp"

namespace hg {

/// Error while reading a document. `kind` is "syntax" for malformed text and
/// "semantic" for well-formed text describing an invalid object; semantic
/// axiom failures carry the verifier's report.
class parse_error : public error {
 public:
  parse_error(std::size_t line, std::size_t column, std::string kind, std::string message,
              CheckReport report = {})
      : error(std::to_string(line) + ":" + std::to_string(column) + ": " + kind + " error: " +
              message),
        line_(line), column_(column), kind_(std::move(kind)), message_(std::move(message)),
        report_(std::move(report)) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& kind() const noexcept { return kind_; }
  const std::string& message() const noexcept { return message_; }
  const CheckReport& report() const noexcept { return report_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string kind_;
  std::string message_;
  CheckReport report_;
};

struct HypergroupDoc {
  Table table;
  std::vector<std::string> names;
  std::optional<Hypergroup> object;  // set when the table passed verification
};

struct MorphismDoc {
  std::string dom;
  std::string cod;
  std::vector<std::string> dom_names;
  std::vector<std::string> cod_names;
  std::vector<Element> map;
  std::optional<Morphism> object;  // set when both ends and the map verified
};

struct DiagramDoc {
  struct Node {
    std::string id;
    std::string hypergroup;
  };
  struct Arrow {
    std::string from;
    std::string to;
    std::string morphism;
  };
  std::vector<Node> nodes;
  std::vector<Arrow> arrows;
  std::optional<DirectedDiagram> object;
};

enum class DocKind { hypergroup, morphism, diagram };

struct HgDocument {
  DocKind kind = DocKind::hypergroup;
  std::string name;
  std::variant<HypergroupDoc, MorphismDoc, DiagramDoc> body;

  const HypergroupDoc& hypergroup() const { return std::get<HypergroupDoc>(body); }
  const MorphismDoc& morphism() const { return std::get<MorphismDoc>(body); }
  const DiagramDoc& diagram() const { return std::get<DiagramDoc>(body); }
};

struct ParseOptions {
  // Verify hypergroups, morphisms and diagrams on load. When false only the
  // structure is read (dimensions, names, references), which lets invalid
  // tables be inspected and round-tripped.
  bool verify = true;
};

namespace detail {

inline bool is_keyword(std::string_view w) {
  return w == "hypergroup" || w == "morphism" || w == "diagram" || w == "elements" ||
         w == "inv" || w == "map" || w == "node" || w == "arrow" || w == "->";
}

inline bool is_separator(char c) { return c == ',' || c == '=' || c == ':'; }

/// Element and document names must be single tokens that survive the lexer.
inline bool valid_name(std::string_view w) {
  if (w.empty() || is_keyword(w)) return false;
  for (char c : w)
    if (std::isspace(static_cast<unsigned char>(c)) || is_separator(c) || c == '#') return false;
  return true;
}

struct Token {
  std::string text;
  std::size_t line;
  std::size_t column;
};

// Words are maximal runs without whitespace or separators; each separator is
// its own token; '#' starts a comment.
inline std::vector<std::vector<Token>> lex(std::string_view text) {
  std::vector<std::vector<Token>> lines;
  std::size_t line = 1;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::vector<Token> toks;
    std::size_t i = pos;
    while (i < end) {
      const char c = text[i];
      if (c == '#') break;
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
        continue;
      }
      const std::size_t col = i - pos + 1;
      if (is_separator(c)) {
        toks.push_back({std::string(1, c), line, col});
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < end && !std::isspace(static_cast<unsigned char>(text[j])) &&
             !is_separator(text[j]) && text[j] != '#')
        ++j;
      toks.push_back({std::string(text.substr(i, j - i)), line, col});
      i = j;
    }
    if (!toks.empty()) lines.push_back(std::move(toks));
    ++line;
    pos = end + 1;
  }
  return lines;
}

class Parser {
 public:
  Parser(std::string_view text, ParseOptions opt, const std::vector<HgDocument>* context)
      : lines_(lex(text)), opt_(opt), context_(context) {}

  std::vector<HgDocument> run() {
    std::vector<HgDocument> docs;
    if (lines_.empty()) throw parse_error(1, 1, "syntax", "expected 'hypergroup', 'morphism' or 'diagram'");
    while (at_ < lines_.size()) docs.push_back(document(docs));
    return docs;
  }

 private:
  [[noreturn]] static void syntax(const Token& t, const std::string& msg) {
    throw parse_error(t.line, t.column, "syntax", msg);
  }
  [[noreturn]] static void semantic(const Token& t, const std::string& msg, CheckReport rep = {}) {
    throw parse_error(t.line, t.column, "semantic", msg, std::move(rep));
  }
  static Token after(const std::vector<Token>& line) {
    const Token& last = line.back();
    return {"", last.line, last.column + last.text.size()};
  }
  static const Token& expect(const std::vector<Token>& line, std::size_t i, std::string_view what) {
    if (i >= line.size()) syntax(after(line), "expected " + std::string(what));
    return line[i];
  }
  static std::string expect_name(const std::vector<Token>& line, std::size_t i, std::string_view what) {
    const Token& t = expect(line, i, what);
    if (!valid_name(t.text)) syntax(t, "expected " + std::string(what) + ", got '" + t.text + "'");
    return t.text;
  }
  static void expect_end(const std::vector<Token>& line, std::size_t i) {
    if (i < line.size()) syntax(line[i], "unexpected '" + line[i].text + "'");
  }
  static void expect_word(const std::vector<Token>& line, std::size_t i, std::string_view w) {
    const Token& t = expect(line, i, "'" + std::string(w) + "'");
    if (t.text != w) syntax(t, "expected '" + std::string(w) + "', got '" + t.text + "'");
  }
  bool at_header() const {
    const std::string& w = lines_[at_].front().text;
    return w == "hypergroup" || w == "morphism" || w == "diagram";
  }

  const HgDocument* lookup(const std::vector<HgDocument>& docs, const std::string& name,
                           DocKind kind) const {
    for (auto it = docs.rbegin(); it != docs.rend(); ++it)
      if (it->name == name && it->kind == kind) return &*it;
    if (context_)
      for (auto it = context_->rbegin(); it != context_->rend(); ++it)
        if (it->name == name && it->kind == kind) return &*it;
    return nullptr;
  }

  HgDocument document(const std::vector<HgDocument>& docs) {
    const auto& head = lines_[at_];
    const std::string& w = head.front().text;
    if (w == "hypergroup") return hypergroup();
    if (w == "morphism") return morphism(docs);
    if (w == "diagram") return diagram(docs);
    syntax(head.front(), "expected 'hypergroup', 'morphism' or 'diagram', got '" + w + "'");
  }

  HgDocument hypergroup() {
    const auto& head = lines_[at_++];
    const Token& header = head.front();
    HgDocument doc{DocKind::hypergroup, expect_name(head, 1, "hypergroup name"), HypergroupDoc{}};
    expect_end(head, 2);

    if (at_ >= lines_.size()) syntax(after(head), "expected 'elements'");
    const auto& el = lines_[at_++];
    expect_word(el, 0, "elements");
    std::vector<std::string> names;
    std::map<std::string, Element> index;
    for (std::size_t i = 1; i < el.size(); ++i) {
      if (!valid_name(el[i].text)) syntax(el[i], "expected element name, got '" + el[i].text + "'");
      if (!index.emplace(el[i].text, names.size()).second)
        semantic(el[i], "duplicate element '" + el[i].text + "'");
      names.push_back(el[i].text);
    }
    if (names.empty()) syntax(after(el), "expected element name");
    if (names.size() > ElementSet::max_order) semantic(el[1], "more than 64 elements");
    const std::size_t n = names.size();
    auto element = [&](const Token& t) {
      auto it = index.find(t.text);
      if (it == index.end()) semantic(t, "unknown element '" + t.text + "'");
      return it->second;
    };

    if (at_ >= lines_.size()) syntax(after(el), "expected 'inv'");
    const auto& iv = lines_[at_++];
    expect_word(iv, 0, "inv");
    Table t(n);
    for (std::size_t i = 0; i < n; ++i) t.inv[i] = element(expect(iv, i + 1, "element name"));
    expect_end(iv, n + 1);

    t.set_identity_cells();
    std::vector<bool> seen(n * n, false);
    while (at_ < lines_.size() && !at_header()) {
      const auto& c = lines_[at_++];
      const Element x = element(c[0]);
      const Element y = element(expect(c, 1, "element name"));
      expect_word(c, 2, "=");
      if (seen[x * n + y]) semantic(c[0], "duplicate cell " + c[0].text + " " + c[1].text);
      seen[x * n + y] = true;
      ElementSet cell;
      std::size_t i = 3;
      while (true) {
        cell.insert(element(expect(c, i, "element name")));
        if (++i >= c.size()) break;
        expect_word(c, i++, ",");
      }
      t.at(x, y) = cell;
    }
    for (Element x = 1; x < n; ++x)
      for (Element y = 1; y < n; ++y)
        if (!seen[x * n + y])
          semantic(header, "missing cell " + names[x] + " " + names[y]);

    auto& body = std::get<HypergroupDoc>(doc.body);
    if (opt_.verify) {
      try {
        body.object = Hypergroup::from_table(t, names);
      } catch (const validation_error& e) {
        semantic(header, std::string(e.what()), e.report());
      }
    }
    body.table = std::move(t);
    body.names = std::move(names);
    return doc;
  }

  HgDocument morphism(const std::vector<HgDocument>& docs) {
    const auto& head = lines_[at_++];
    const Token& header = head.front();
    HgDocument doc{DocKind::morphism, expect_name(head, 1, "morphism name"), MorphismDoc{}};
    expect_word(head, 2, ":");
    auto& body = std::get<MorphismDoc>(doc.body);
    body.dom = expect_name(head, 3, "domain name");
    expect_word(head, 4, "->");
    body.cod = expect_name(head, 5, "codomain name");
    expect_end(head, 6);
    const HgDocument* dom = lookup(docs, body.dom, DocKind::hypergroup);
    if (!dom) semantic(head[3], "unknown hypergroup '" + body.dom + "'");
    const HgDocument* cod = lookup(docs, body.cod, DocKind::hypergroup);
    if (!cod) semantic(head[5], "unknown hypergroup '" + body.cod + "'");
    body.dom_names = dom->hypergroup().names;
    body.cod_names = cod->hypergroup().names;

    auto find = [](const std::vector<std::string>& names, const Token& t) {
      for (Element i = 0; i < names.size(); ++i)
        if (names[i] == t.text) return i;
      semantic(t, "unknown element '" + t.text + "'");
    };
    std::vector<std::optional<Element>> map(body.dom_names.size());
    while (at_ < lines_.size() && !at_header()) {
      const auto& m = lines_[at_++];
      expect_word(m, 0, "map");
      const Element x = find(body.dom_names, expect(m, 1, "element name"));
      expect_word(m, 2, "->");
      const Element y = find(body.cod_names, expect(m, 3, "element name"));
      expect_end(m, 4);
      if (map[x]) semantic(m[1], "element '" + m[1].text + "' mapped twice");
      map[x] = y;
    }
    for (Element x = 0; x < map.size(); ++x) {
      if (!map[x]) semantic(header, "map is not total: missing '" + body.dom_names[x] + "'");
      body.map.push_back(*map[x]);
    }
    if (opt_.verify) {
      const auto& g = dom->hypergroup().object;
      const auto& h = cod->hypergroup().object;
      if (!g || !h) semantic(header, "endpoint hypergroup was not verified");
      try {
        body.object = Morphism::create(*g, *h, body.map);
      } catch (const validation_error& e) {
        semantic(header, e.what(), e.report());
      }
    }
    return doc;
  }

  HgDocument diagram(const std::vector<HgDocument>& docs) {
    const auto& head = lines_[at_++];
    const Token& header = head.front();
    HgDocument doc{DocKind::diagram, expect_name(head, 1, "diagram name"), DiagramDoc{}};
    expect_end(head, 2);
    auto& body = std::get<DiagramDoc>(doc.body);
    std::map<std::string, std::size_t> node_index;
    std::vector<const HgDocument*> node_docs;
    std::vector<const HgDocument*> arrow_docs;
    std::vector<std::size_t> arrow_ends;
    while (at_ < lines_.size() && !at_header()) {
      const auto& l = lines_[at_++];
      if (l[0].text == "node") {
        const std::string id = expect_name(l, 1, "node id");
        const std::string hg_name = expect_name(l, 2, "hypergroup name");
        expect_end(l, 3);
        if (!node_index.emplace(id, body.nodes.size()).second)
          semantic(l[1], "duplicate node '" + id + "'");
        const HgDocument* g = lookup(docs, hg_name, DocKind::hypergroup);
        if (!g) semantic(l[2], "unknown hypergroup '" + hg_name + "'");
        body.nodes.push_back({id, hg_name});
        node_docs.push_back(g);
      } else if (l[0].text == "arrow") {
        const std::string from = expect_name(l, 1, "node id");
        const std::string to = expect_name(l, 2, "node id");
        const std::string mname = expect_name(l, 3, "morphism name");
        expect_end(l, 4);
        auto fi = node_index.find(from);
        if (fi == node_index.end()) semantic(l[1], "unknown node '" + from + "'");
        auto ti = node_index.find(to);
        if (ti == node_index.end()) semantic(l[2], "unknown node '" + to + "'");
        const HgDocument* m = lookup(docs, mname, DocKind::morphism);
        if (!m) semantic(l[3], "unknown morphism '" + mname + "'");
        if (m->morphism().dom != body.nodes[fi->second].hypergroup ||
            m->morphism().cod != body.nodes[ti->second].hypergroup)
          semantic(l[3], "morphism '" + mname + "' does not connect these nodes");
        body.arrows.push_back({from, to, mname});
        arrow_docs.push_back(m);
        arrow_ends.push_back(fi->second);
        arrow_ends.push_back(ti->second);
      } else {
        syntax(l[0], "expected 'node' or 'arrow', got '" + l[0].text + "'");
      }
    }
    if (body.nodes.empty()) syntax(after(head), "expected 'node'");
    if (opt_.verify) {
      std::vector<Hypergroup> objects;
      for (const auto* g : node_docs) {
        if (!g->hypergroup().object) semantic(header, "node hypergroup was not verified");
        objects.push_back(*g->hypergroup().object);
      }
      std::vector<DiagramArrow> arrows;
      for (std::size_t k = 0; k < arrow_docs.size(); ++k) {
        if (!arrow_docs[k]->morphism().object) semantic(header, "arrow morphism was not verified");
        arrows.push_back({arrow_ends[2 * k], arrow_ends[2 * k + 1], *arrow_docs[k]->morphism().object});
      }
      try {
        body.object = DirectedDiagram::create(std::move(objects), std::move(arrows));
      } catch (const validation_error& e) {
        semantic(header, e.what(), e.report());
      }
    }
    return doc;
  }

  std::vector<std::vector<Token>> lines_;
  std::size_t at_ = 0;
  ParseOptions opt_;
  const std::vector<HgDocument>* context_;
};

inline std::string join_set(ElementSet s, const std::vector<std::string>& names) {
  std::string out;
  for (Element z : s) {
    if (!out.empty()) out += ',';
    out += names[z];
  }
  return out;
}

inline void require_names(const std::vector<std::string>& names) {
  for (const auto& n : names)
    if (!valid_name(n)) throw domain_error("name '" + n + "' cannot be serialized");
}

}  // namespace detail

/// All documents in `text`, in order. Morphisms and diagrams may refer to
/// documents earlier in the same text or in `context`.
inline std::vector<HgDocument> parse_documents(std::string_view text, ParseOptions opt = {},
                                               const std::vector<HgDocument>* context = nullptr) {
  return detail::Parser(text, opt, context).run();
}

/// Exactly one document.
inline HgDocument parse(std::string_view text, ParseOptions opt = {}) {
  auto docs = parse_documents(text, opt);
  if (docs.size() != 1) {
    // Report the position of the second header.
    const auto lines = detail::lex(text);
    std::size_t headers = 0;
    for (const auto& l : lines) {
      const auto& w = l.front().text;
      if ((w == "hypergroup" || w == "morphism" || w == "diagram") && ++headers == 2)
        throw parse_error(l.front().line, l.front().column, "syntax", "expected a single document");
    }
  }
  return std::move(docs.front());
}

inline HgDocument make_document(const Hypergroup& g, std::string name) {
  return {DocKind::hypergroup, std::move(name), HypergroupDoc{g.table(), g.names(), g}};
}

inline HgDocument make_document(const Morphism& f, std::string name, std::string dom_name,
                                std::string cod_name) {
  return {DocKind::morphism, std::move(name),
          MorphismDoc{std::move(dom_name), std::move(cod_name), f.dom().names(), f.cod().names(),
                      f.map(), f}};
}

/// Canonical text: elements in index order (identity first), cells in
/// row-major order with ascending comma-separated sets. Identity row and
/// column cells are written only where they differ from the forced value.
inline std::string serialize(const HgDocument& doc) {
  if (!detail::valid_name(doc.name)) throw domain_error("document name '" + doc.name + "' cannot be serialized");
  std::string out;
  switch (doc.kind) {
    case DocKind::hypergroup: {
      const auto& b = doc.hypergroup();
      detail::require_names(b.names);
      const Table& t = b.table;
      out += "hypergroup " + doc.name + "\nelements";
      for (const auto& n : b.names) out += " " + n;
      out += "\ninv";
      for (Element x : t.inv) out += " " + b.names[x];
      out += "\n";
      for (Element x = 0; x < t.order; ++x)
        for (Element y = 0; y < t.order; ++y) {
          const bool forced = x == 0 || y == 0;
          if (forced && t.at(x, y) == ElementSet::singleton(x == 0 ? y : x)) continue;
          out += b.names[x] + " " + b.names[y] + " = " + detail::join_set(t.at(x, y), b.names) + "\n";
        }
      break;
    }
    case DocKind::morphism: {
      const auto& b = doc.morphism();
      detail::require_names(b.dom_names);
      detail::require_names(b.cod_names);
      out += "morphism " + doc.name + " : " + b.dom + " -> " + b.cod + "\n";
      for (Element x = 0; x < b.map.size(); ++x)
        out += "map " + b.dom_names[x] + " -> " + b.cod_names[b.map[x]] + "\n";
      break;
    }
    case DocKind::diagram: {
      const auto& b = doc.diagram();
      out += "diagram " + doc.name + "\n";
      for (const auto& n : b.nodes) out += "node " + n.id + " " + n.hypergroup + "\n";
      for (const auto& a : b.arrows) out += "arrow " + a.from + " " + a.to + " " + a.morphism + "\n";
      break;
    }
  }
  return out;
}

/// Documents separated by blank lines.
inline std::string serialize(const std::vector<HgDocument>& docs) {
  std::string out;
  for (std::size_t i = 0; i < docs.size(); ++i) {
    if (i) out += "\n";
    out += serialize(docs[i]);
  }
  return out;
}

}  // namespace hg
