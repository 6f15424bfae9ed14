#include <gtest/gtest.h>

#include <fstream>
#include <sstream>
#include <string>

#include "../support/fixtures.hpp"

using namespace hg;

namespace {

std::string golden(const std::string& file) {
  std::ifstream in(std::string(HG_GOLDEN_DIR) + "/" + file);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

parse_error parse_failure(const std::string& text, ParseOptions opt = {}) {
  try {
    parse_documents(text, opt);
  } catch (const parse_error& e) {
    return e;
  }
  ADD_FAILURE() << "no parse_error for:\n" << text;
  return parse_error(0, 0, "none", "");
}

const char* const k2_text = "hypergroup K2\nelements e g\ninv e g\ng g = e,g\n";

}  // namespace

TEST(Parse, K2) {
  const HgDocument d = parse(k2_text);
  EXPECT_EQ(d.kind, DocKind::hypergroup);
  EXPECT_EQ(d.name, "K2");
  ASSERT_TRUE(d.hypergroup().object.has_value());
  EXPECT_EQ(d.hypergroup().object->table(), fx::K2().table());
  EXPECT_EQ(d.hypergroup().names, (std::vector<std::string>{"e", "g"}));
}

TEST(Parse, CommentsAndSpacingAreIgnored) {
  const HgDocument d = parse("# K2\nhypergroup K2   # name\n\n elements e g\ninv e g\ng g=e , g\n");
  EXPECT_EQ(serialize(d), k2_text);
}

TEST(Parse, EmptyInputIsASyntaxErrorAtOrigin) {
  const parse_error e = parse_failure("");
  EXPECT_EQ(e.kind(), "syntax");
  EXPECT_EQ(e.line(), 1U);
  EXPECT_EQ(e.column(), 1U);
}

TEST(Parse, AxiomFailureIsSemanticWithReport) {
  const parse_error e = parse_failure("hypergroup B\nelements e g\ninv e g\ng g = g\n");
  EXPECT_EQ(e.kind(), "semantic");
  EXPECT_EQ(e.line(), 1U);
  EXPECT_FALSE(e.report().passed());
  EXPECT_EQ(e.report().first()->tag, "i");
  // Without verification the same text loads structurally.
  const HgDocument d = parse("hypergroup B\nelements e g\ninv e g\ng g = g\n", {.verify = false});
  EXPECT_FALSE(d.hypergroup().object.has_value());
  EXPECT_EQ(d.hypergroup().table.at(1, 1), ElementSet{1});
}

TEST(Parse, ErrorPositions) {
  const parse_error unknown = parse_failure("hypergroup X\nelements e g\ninv e g\ng h = e\n");
  EXPECT_EQ(unknown.kind(), "semantic");
  EXPECT_EQ(unknown.line(), 4U);
  EXPECT_EQ(unknown.column(), 3U);

  const parse_error missing = parse_failure("hypergroup X\nelements e g\ninv e g\n");
  EXPECT_EQ(missing.kind(), "semantic");

  const parse_error keyword = parse_failure("hypergrp X\n");
  EXPECT_EQ(keyword.kind(), "syntax");
  EXPECT_EQ(keyword.column(), 1U);

  const parse_error dup = parse_failure("hypergroup X\nelements e e\ninv e e\n");
  EXPECT_EQ(dup.kind(), "semantic");
  EXPECT_EQ(dup.column(), 12U);

  const parse_error eq = parse_failure("hypergroup X\nelements e g\ninv e g\ng g e\n");
  EXPECT_EQ(eq.kind(), "syntax");
  EXPECT_EQ(eq.line(), 4U);
  EXPECT_EQ(eq.column(), 5U);
}

TEST(Parse, SingleDocumentRequired) {
  const std::string two = std::string(k2_text) + "\n" + k2_text;
  EXPECT_EQ(parse_documents(two).size(), 2U);
  try {
    parse(two);
    FAIL();
  } catch (const parse_error& err) {
    EXPECT_EQ(err.line(), 6U);
  }
}

TEST(Serialize, TrivialIsThreeLines) {
  EXPECT_EQ(serialize(make_document(fx::T(), "T")), "hypergroup T\nelements e\ninv e\n");
}

TEST(Serialize, RoundTripIsByteStable) {
  for (const auto& g : {fx::V3(), fx::S3(), fx::K2(), fx::Z2(), product({fx::K2(), fx::V3()}).object}) {
    const std::string text = serialize(make_document(g, "G"));
    const HgDocument back = parse(text);
    EXPECT_EQ(back.hypergroup().object->table(), g.table());
    EXPECT_EQ(serialize(back), text);
  }
  EXPECT_THROW(serialize(make_document(fx::T(), "bad name")), domain_error);
}

TEST(Golden, FilesRoundTrip) {
  for (const char* f : {"t.hg", "z2.hg", "k2.hg", "v3.hg", "s3.hg", "k2_sum_k2.hg"}) {
    const std::string text = golden(f);
    ASSERT_FALSE(text.empty()) << f;
    EXPECT_EQ(serialize(parse_documents(text)), text) << f;
  }
}

TEST(Golden, LibraryObjectsMatchFiles) {
  EXPECT_EQ(parse(golden("s3.hg")).hypergroup().object->table(), fx::S3().table());
  EXPECT_EQ(parse(golden("v3.hg")).hypergroup().object->table(), fx::V3().table());
  const Hypergroup sum = *parse(golden("k2_sum_k2.hg")).hypergroup().object;
  EXPECT_EQ(sum.table(), direct_sum({fx::K2(), fx::K2()}).object.table());
}

TEST(Golden, CosetFileLoadsOnlyStructurally) {
  const std::string text = golden("s3_mod_12.hg");
  const parse_error e = parse_failure(text);
  EXPECT_EQ(e.kind(), "semantic");
  const HgDocument d = parse(text, {.verify = false});
  EXPECT_EQ(serialize(d), text);
  const auto s3 = fx::S3();
  EXPECT_EQ(d.hypergroup().table, coset_table(s3, fx::sub(s3, {0, 1})).table);
}

TEST(MorphismDocument, RoundTripAndContext) {
  const std::string v3 = serialize(make_document(fx::V3(), "V3"));
  const std::string k2 = serialize(make_document(fx::K2(), "K2"));
  const std::string f = serialize(make_document(fx::v3_to_k2(), "f", "V3", "K2"));
  EXPECT_EQ(f, "morphism f : V3 -> K2\nmap 0 -> e\nmap a -> e\nmap b -> g\n");
  const auto docs = parse_documents(v3 + "\n" + k2 + "\n" + f);
  ASSERT_EQ(docs.size(), 3U);
  EXPECT_EQ(*docs[2].morphism().object, fx::v3_to_k2());
  EXPECT_EQ(serialize(docs), v3 + "\n" + k2 + "\n" + f);

  const auto ends = parse_documents(v3 + "\n" + k2);
  EXPECT_EQ(parse_documents(f, {}, &ends).front().morphism().map, fx::v3_to_k2().map());
  EXPECT_EQ(parse_failure(f).kind(), "semantic");
}

TEST(MorphismDocument, RejectsPartialAndInvalidMaps) {
  const std::string ends = serialize(make_document(fx::Z2(), "Z2")) + serialize(make_document(fx::K2(), "K2"));
  EXPECT_EQ(parse_failure(ends + "morphism f : Z2 -> K2\nmap e -> e\n").kind(), "semantic");
  EXPECT_EQ(parse_failure(ends + "morphism f : Z2 -> K2\nmap e -> e\nmap e -> g\nmap g -> g\n").kind(), "semantic");
  // K2 -> Z2 identity on names is not a morphism: g*g = {e,g} has g going to g.
  const parse_error e = parse_failure(ends + "morphism f : K2 -> Z2\nmap e -> e\nmap g -> g\n");
  EXPECT_EQ(e.kind(), "semantic");
  EXPECT_FALSE(e.report().passed());
}

TEST(DiagramDocument, TwoNodeChain) {
  const std::string text = serialize(make_document(fx::V3(), "V3")) + "\n" +
                           serialize(make_document(fx::K2(), "K2")) + "\n" +
                           serialize(make_document(fx::v3_to_k2(), "f", "V3", "K2")) + "\n" +
                           "diagram D\nnode x V3\nnode y K2\narrow x y f\n";
  const auto docs = parse_documents(text);
  ASSERT_EQ(docs.size(), 4U);
  ASSERT_TRUE(docs[3].diagram().object.has_value());
  EXPECT_EQ(docs[3].diagram().object->size(), 2U);
  EXPECT_EQ(serialize(docs), text);

  const std::string wrong = text.substr(0, text.find("diagram")) + "diagram D\nnode x K2\nnode y V3\narrow x y f\n";
  EXPECT_EQ(parse_failure(wrong).kind(), "semantic");
}
