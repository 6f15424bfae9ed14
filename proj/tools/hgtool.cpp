// hgtool: command-line front end for the hg library.
//
// Exit codes: 0 success / check passed, 1 check failed (witness printed),
// 2 usage, parse or unsupported-input error.

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hg/hg.hpp"

namespace {

using json = nlohmann::ordered_json;

constexpr int exit_pass = 0;
constexpr int exit_fail = 1;
constexpr int exit_usage = 2;

// Thrown for bad command-line input detected after argument parsing.
struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Output {
  bool json_mode = false;
  std::string command;
  json result = json::object();
  std::vector<std::string> documents;
  std::optional<hg::CheckReport> report;
  std::string text;  // human-readable lines

  void line(const std::string& s) { text += s + "\n"; }

  int finish(int code) {
    if (json_mode) {
      json j;
      j["command"] = command;
      j["ok"] = code == exit_pass;
      j["exit_code"] = code;
      if (report) j["report"] = report_json(*report);
      if (!result.empty()) j["result"] = result;
      if (!documents.empty()) j["documents"] = documents;
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << text;
      for (std::size_t i = 0; i < documents.size(); ++i) {
        if (i || !text.empty()) std::cout << "\n";
        std::cout << documents[i];
      }
    }
    return code;
  }

  static json report_json(const hg::CheckReport& r) {
    json v = json::array();
    for (const auto& x : r.violations)
      v.push_back({{"tag", x.tag}, {"witness", x.witness}, {"detail", x.detail}});
    return {{"passed", r.passed()}, {"violations", v}};
  }
};

int error_exit(bool json_mode, const std::string& command, const std::string& kind,
               const std::string& message, std::optional<std::pair<std::size_t, std::size_t>> pos = {}) {
  if (json_mode) {
    json j;
    j["command"] = command;
    j["ok"] = false;
    j["exit_code"] = exit_usage;
    json e{{"kind", kind}, {"message", message}};
    if (pos) {
      e["line"] = pos->first;
      e["column"] = pos->second;
    }
    j["error"] = e;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cerr << "hgtool: " << message << "\n";
  }
  return exit_usage;
}

// ---------------------------------------------------------------------------
// Input helpers

std::string read_file(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw usage_error("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), {}};
}

// A parse error together with the file it came from.
struct file_parse_error : hg::parse_error {
  file_parse_error(const hg::parse_error& e, std::string path)
      : hg::parse_error(e), path(std::move(path)) {}
  std::string path;
};

struct Loaded {
  std::vector<hg::HgDocument> docs;
};

Loaded load(const std::vector<std::string>& paths, bool verify = true) {
  Loaded l;
  for (const auto& p : paths) {
    try {
      auto docs = hg::parse_documents(read_file(p), {.verify = verify}, &l.docs);
      l.docs.insert(l.docs.end(), docs.begin(), docs.end());
    } catch (const hg::parse_error& e) {
      throw file_parse_error(e, p);
    }
  }
  return l;
}

const hg::HgDocument& pick(const Loaded& l, hg::DocKind kind, const std::string& name) {
  const hg::HgDocument* found = nullptr;
  for (const auto& d : l.docs)
    if (d.kind == kind && (name.empty() || d.name == name)) found = &d;
  const char* what = kind == hg::DocKind::hypergroup ? "hypergroup"
                     : kind == hg::DocKind::morphism ? "morphism"
                                                     : "diagram";
  if (!found)
    throw usage_error(std::string("no ") + what + (name.empty() ? "" : " named '" + name + "'") +
                      " in input");
  return *found;
}

// The hypergroup `name`, or the first hypergroup when name is empty.
hg::Hypergroup first_hypergroup(const Loaded& l, const std::string& name) {
  for (const auto& d : l.docs)
    if (d.kind == hg::DocKind::hypergroup && (name.empty() || d.name == name))
      return *d.hypergroup().object;
  throw usage_error(name.empty() ? "no hypergroup in input" : "no hypergroup named '" + name + "'");
}

hg::Hypergroup load_one(const std::string& path, const std::string& name = {}) {
  return first_hypergroup(load({path}), name);
}

std::string doc_name(const std::string& path) {
  const Loaded l = load({path});
  for (const auto& d : l.docs)
    if (d.kind == hg::DocKind::hypergroup) return d.name;
  return "G";
}

// Elements given by name or index, comma separated.
hg::ElementSet parse_elements(const hg::Hypergroup& g, const std::string& list) {
  hg::ElementSet s;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    if (auto e = g.find(item)) {
      s.insert(*e);
      continue;
    }
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || v >= g.order()) throw usage_error("unknown element '" + item + "'");
    s.insert(v);
  }
  return s;
}

std::string set_text(const hg::Hypergroup& g, hg::ElementSet s) {
  std::string out = "{";
  bool first = true;
  for (hg::Element x : s) {
    out += (first ? "" : ",") + g.name(x);
    first = false;
  }
  return out + "}";
}

std::vector<std::string> names_of(const hg::Hypergroup& g, hg::ElementSet s) {
  std::vector<std::string> out;
  for (hg::Element x : s) out.push_back(g.name(x));
  return out;
}

std::size_t env_max_order() {
  std::size_t cap = 5;
  if (const char* v = std::getenv("HG_MAX_ORDER")) {
    try {
      cap = std::stoul(v);
    } catch (const std::exception&) {
      throw usage_error("HG_MAX_ORDER is not a number");
    }
  }
  return std::min<std::size_t>(std::max<std::size_t>(cap, 1), hg::enumeration_max_order);
}

std::vector<hg::Hypergroup> test_objects(std::size_t order) {
  if (order > env_max_order()) throw usage_error("test object order exceeds HG_MAX_ORDER");
  return hg::enumerate_up_to(order);
}

std::string map_text(const hg::Morphism& f) {
  std::string out;
  for (hg::Element x = 0; x < f.dom().order(); ++x)
    out += (x ? " " : "") + f.dom().name(x) + "->" + f.cod().name(f.at(x));
  return out;
}

void emit_hypergroup(Output& out, const hg::Hypergroup& g, const std::string& name) {
  out.documents.push_back(hg::serialize(hg::make_document(g, name)));
}

void emit_morphism(Output& out, const hg::Morphism& f, const std::string& name,
                   const std::string& dom, const std::string& cod) {
  out.documents.push_back(hg::serialize(hg::make_document(f, name, dom, cod)));
}

int report_exit(Output& out, const hg::CheckReport& r, const std::string& what) {
  out.report = r;
  out.line(what + ": " + r.summary());
  return r.passed() ? exit_pass : exit_fail;
}

// ---------------------------------------------------------------------------
// Commands

struct Args {
  std::vector<std::string> files;
  std::string name;
  std::string sub;
  std::string replay;
  std::size_t k = 1;
  std::size_t order = 1;
  std::size_t tests_order = 3;
  std::size_t max_order = 3;
  bool commutative_only = false;
  bool force_generated = false;
  bool raw = false;
  bool colimit = false;
  std::string arrows;
  std::string full;
  std::string mode;
  std::string kind;
  bool no_verify = false;
};

int cmd_format(const Args& a, Output& out) {
  const Loaded l = load(a.files, !a.no_verify);
  for (const auto& d : l.docs) out.documents.push_back(hg::serialize(d));
  return exit_pass;
}

int cmd_verify(const Args& a, Output& out) {
  const Loaded l = load(a.files, false);
  hg::CheckReport all;
  for (const auto& d : l.docs) {
    if (d.kind == hg::DocKind::hypergroup) {
      const auto& b = d.hypergroup();
      if (!a.replay.empty()) {
        const auto colon = a.replay.find(':');
        if (colon == std::string::npos) throw usage_error("--replay expects TAG:i,j,k");
        hg::Violation v{a.replay.substr(0, colon), {}, {}};
        std::stringstream ss(a.replay.substr(colon + 1));
        std::string item;
        while (std::getline(ss, item, ',')) v.witness.push_back(std::stoul(item));
        const bool fails = hg::violation_holds(b.table, v);
        out.result["replay"] = {{"tag", v.tag}, {"witness", v.witness}, {"fails", fails}};
        out.line(d.name + ": axiom " + v.tag + " instance " + (fails ? "fails" : "holds"));
        if (fails) all.fail(v.tag, v.witness, "replayed");
        continue;
      }
      hg::CheckReport r = hg::verify_axioms(b.table);
      if (r.passed()) {
        try {
          hg::Hypergroup::from_table(b.table);
        } catch (const hg::validation_error& e) {
          r = e.report();
        }
      }
      out.line(d.name + ": " + r.summary());
      all.merge(r);
    } else if (d.kind == hg::DocKind::morphism) {
      const auto& b = d.morphism();
      const auto* dom = &pick(l, hg::DocKind::hypergroup, b.dom);
      const auto* cod = &pick(l, hg::DocKind::hypergroup, b.cod);
      hg::CheckReport r;
      try {
        const auto g = hg::Hypergroup::from_table(dom->hypergroup().table, dom->hypergroup().names);
        const auto h = hg::Hypergroup::from_table(cod->hypergroup().table, cod->hypergroup().names);
        r = hg::is_morphism(g, h, b.map);
      } catch (const hg::validation_error& e) {
        r.fail("endpoint", {}, e.what());
      }
      out.line(d.name + ": " + r.summary());
      all.merge(r);
    } else {
      hg::CheckReport r;
      try {
        load(a.files, true);
      } catch (const hg::parse_error& e) {
        r = e.report();
        if (r.passed()) r.fail("diagram", {}, e.message());
      }
      out.line(d.name + ": " + r.summary());
      all.merge(r);
    }
  }
  out.report = all;
  return all.passed() ? exit_pass : exit_fail;
}

int cmd_commutative(const Args& a, Output& out) {
  const auto g = load_one(a.files.at(0), a.name);
  hg::Table t = g.table();
  t.claims_commutative = true;
  hg::CheckReport r;
  for (const auto& v : hg::verify_axioms(t).violations)
    if (v.tag == "iv") r.violations.push_back(v);
  out.result["commutative"] = g.commutative();
  return report_exit(out, r, "commutative");
}

int cmd_sip(const Args& a, Output& out) {
  const auto g = load_one(a.files.at(0), a.name);
  const auto s = hg::sip_check(g);
  out.result["is_group"] = s.is_group;
  hg::CheckReport r;
  if (!s.is_group) r.fail("sip", {s.witness}, "no unique b with a*b = {1}");
  return report_exit(out, r, "group");
}

int cmd_relational(const Args& a, Output& out) {
  const auto g = load_one(a.files.at(0), a.name);
  const auto rel = hg::to_relational(g);
  json triples = json::array();
  for (const auto& t : rel.pi) {
    triples.push_back({t[0], t[1], t[2]});
    out.line(g.name(t[0]) + " " + g.name(t[1]) + " " + g.name(t[2]));
  }
  out.result["triples"] = triples;
  return report_exit(out, hg::verify_relational(rel), "relational");
}

int cmd_generate(const Args& a, Output& out) {
  const auto g = load_one(a.files.at(0), a.name);
  const auto s = hg::generated(g, parse_elements(g, a.sub));
  out.result["members"] = names_of(g, s.members());
  out.result["full"] = hg::is_full_subcarrier(g, s);
  out.line("generated: " + set_text(g, s.members()));
  if (auto sub = hg::try_subhypergroup(g, s.members())) emit_hypergroup(out, sub->object, "S");
  return exit_pass;
}

int cmd_quotient(const Args& a, Output& out) {
  const auto g = load_one(a.files.at(0), a.name);
  const auto s = hg::SubCarrier::create(g, parse_elements(g, a.sub));
  const auto q = hg::quotient(g, s);
  out.result["subgroup"] = names_of(g, q.sub.members());
  out.result["generated_from_nonfull"] = q.generated_from_nonfull;
  emit_hypergroup(out, q.quotient, "Q");
  return exit_pass;
}

int cmd_coset_space(const Args& a, Output& out) {
  const auto g = load_one(a.files.at(0), a.name);
  const auto s = hg::SubCarrier::create(g, parse_elements(g, a.sub));
  auto ct = hg::coset_table(g, s);
  out.report = ct.axioms;
  if (!ct.axioms.passed() && !out.json_mode) std::cerr << "coset space: " << ct.axioms.summary() << "\n";
  if (ct.axioms.passed() || a.raw) {
    hg::HgDocument doc{hg::DocKind::hypergroup, "C", hg::HypergroupDoc{ct.table, ct.names, {}}};
    out.documents.push_back(hg::serialize(doc));
  }
  return ct.axioms.passed() ? exit_pass : exit_fail;
}

int cmd_chain(const Args& a, Output& out) {
  emit_hypergroup(out, hg::chain_hypergroup(a.k), "C" + std::to_string(a.k));
  return exit_pass;
}

int cmd_product(const Args& a, Output& out, bool sum) {
  std::vector<hg::Hypergroup> factors;
  for (const auto& f : a.files) factors.push_back(load_one(f));
  const auto p = sum ? hg::direct_sum(factors) : hg::product(factors);
  emit_hypergroup(out, p.object, "P");
  return exit_pass;
}

const hg::Morphism& load_morphism(const Args& a, Loaded& l) {
  l = load(a.files);
  return *pick(l, hg::DocKind::morphism, a.name).morphism().object;
}

int cmd_kernel(const Args& a, Output& out) {
  Loaded l;
  const auto& f = load_morphism(a, l);
  const auto k = hg::kernel(f);
  out.result["carrier"] = names_of(f.dom(), k.carrier.members());
  out.line("kernel: " + set_text(f.dom(), k.carrier.members()));
  emit_hypergroup(out, k.object, "K");
  return exit_pass;
}

int cmd_image(const Args& a, Output& out) {
  Loaded l;
  const auto& f = load_morphism(a, l);
  const auto im = hg::image(f);
  out.result["carrier"] = names_of(f.cod(), im.carrier.members());
  out.result["full_subcarrier"] = im.full_subcarrier;
  out.line("image: " + set_text(f.cod(), im.carrier.members()) +
           (im.full_subcarrier ? " (full)" : " (not full)"));
  if (im.sub) emit_hypergroup(out, im.sub->object, "I");
  return exit_pass;
}

int cmd_cokernel(const Args& a, Output& out) {
  Loaded l;
  const auto& f = load_morphism(a, l);
  const auto c = hg::cokernel(f, {.force_generated = a.force_generated});
  out.result["generated_from_nonfull"] = c.presentation.generated_from_nonfull;
  emit_hypergroup(out, c.object, "Q");
  return exit_pass;
}

int cmd_hom(const Args& a, Output& out) {
  if (a.files.size() != 2) throw usage_error("hom expects two files");
  const auto g = load_one(a.files[0]);
  const auto h = load_one(a.files[1]);
  const auto homs = hg::enumerate_hom(g, h);
  json maps = json::array();
  for (const auto& f : homs) {
    maps.push_back({{"map", f.map()}, {"full", f.full()}});
    out.line(map_text(f) + (f.full() ? "  full" : ""));
  }
  out.result["count"] = homs.size();
  out.result["morphisms"] = maps;
  return exit_pass;
}

int cmd_hom_table(const Args& a, Output& out) {
  if (a.files.size() != 2) throw usage_error("hom-table expects two files");
  const auto s = hg::hom_structure(load_one(a.files[0]), load_one(a.files[1]));
  json star = json::array();
  for (std::size_t f = 0; f < s.size(); ++f) {
    json row = json::array();
    std::string line = std::to_string(f) + ":";
    for (std::size_t g = 0; g < s.size(); ++g) {
      row.push_back(s.at(f, g).to_vector());
      line += " {";
      bool first = true;
      for (std::size_t h : s.at(f, g)) {
        line += (first ? "" : ",") + std::to_string(h);
        first = false;
      }
      line += "}";
    }
    star.push_back(row);
    out.line(line);
  }
  json elems = json::array();
  for (const auto& f : s.elements) elems.push_back(f.map());
  out.result["elements"] = elems;
  out.result["star"] = star;
  out.result["associative"] = s.associative;
  if (s.nonassociative) out.result["nonassociative"] = *s.nonassociative;
  out.line(std::string("associative: ") + (s.associative ? "yes" : "no"));
  return report_exit(out, s.report, "axioms");
}

int cmd_bilinearity(const Args& a, Output& out) {
  if (a.files.size() != 3) throw usage_error("bilinearity expects three files");
  return report_exit(out,
                     hg::bilinearity_check(load_one(a.files[0]), load_one(a.files[1]),
                                           load_one(a.files[2])),
                     "bilinearity");
}

int cmd_image_full(const Args& a, Output& out) {
  Loaded l;
  const auto& f = load_morphism(a, l);
  const bool ok = hg::check_image_full(f, {.force_generated = a.force_generated});
  out.result["image_full"] = ok;
  hg::CheckReport r;
  if (!ok) r.fail("image-full", {}, "Im f and Ker(Coker f) differ");
  return report_exit(out, r, "image full");
}

int cmd_universal(const Args& a, Output& out) {
  const auto tests = test_objects(a.tests_order);
  out.result["test_objects"] = tests.size();
  if (a.kind == "kernel" || a.kind == "cokernel") {
    Loaded l;
    const auto& f = load_morphism(a, l);
    if (a.kind == "kernel") return report_exit(out, hg::universal_kernel_check(f, tests), "kernel");
    return report_exit(out,
                       hg::universal_cokernel_check(f, tests, {.force_generated = a.force_generated}),
                       "cokernel");
  }
  if (a.kind == "biproduct") {
    if (a.files.size() != 2) throw usage_error("universal biproduct expects two files");
    return report_exit(out, hg::biproduct_check(load_one(a.files[0]), load_one(a.files[1]), tests),
                       "biproduct");
  }
  if (a.kind == "cone") {
    const Loaded l = load(a.files);
    const auto& d = *pick(l, hg::DocKind::diagram, a.name).diagram().object;
    if (a.colimit)
      return report_exit(out, hg::universal_colimit_check(d, hg::directed_colimit(d), tests), "colimit");
    return report_exit(out, hg::universal_limit_check(d, hg::filtered_limit(d), tests), "limit");
  }
  throw usage_error("universal expects kernel, cokernel, biproduct or cone");
}

std::vector<std::string> split_names(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

int cmd_exact(const Args& a, Output& out) {
  const Loaded l = load(a.files);
  std::vector<std::string> names = split_names(a.arrows);
  if (names.empty())
    for (const auto& d : l.docs)
      if (d.kind == hg::DocKind::morphism) names.push_back(d.name);
  const std::vector<std::string> full = split_names(a.full);
  hg::ExactSequence s;
  for (const auto& n : names) {
    const auto& f = *pick(l, hg::DocKind::morphism, n).morphism().object;
    if (s.objects.empty()) s.objects.push_back(f.dom());
    s.objects.push_back(f.cod());
    s.arrows.push_back(f);
    s.full.push_back(std::find(full.begin(), full.end(), n) != full.end());
  }
  return report_exit(out, hg::exactness_check(s), "exact");
}

int cmd_limit(const Args& a, Output& out, bool colimit) {
  const Loaded l = load(a.files);
  const auto& d = *pick(l, hg::DocKind::diagram, a.name).diagram().object;
  if (colimit)
    emit_hypergroup(out, hg::directed_colimit(d).object, "L");
  else
    emit_hypergroup(out, hg::filtered_limit(d).object, "L");
  return exit_pass;
}

int cmd_enumerate(const Args& a, Output& out) {
  if (a.order < 1 || a.order > env_max_order())
    throw usage_error("--order must be between 1 and " + std::to_string(env_max_order()) +
                      " (HG_MAX_ORDER)");
  const auto classes = hg::enumerate_hypergroups(a.order, a.commutative_only);
  out.result["count"] = classes.size();
  for (std::size_t i = 0; i < classes.size(); ++i)
    emit_hypergroup(out, classes[i], "H" + std::to_string(a.order) + "_" + std::to_string(i + 1));
  return exit_pass;
}

int cmd_canon(const Args& a, Output& out) {
  const auto c = hg::canonical_form(load_one(a.files.at(0), a.name));
  out.result["canonical_form"] = c.hex();
  out.line(c.hex());
  return exit_pass;
}

int cmd_iso(const Args& a, Output& out) {
  if (a.files.size() != 2) throw usage_error("iso expects two files");
  const auto g = load_one(a.files[0]);
  const auto h = load_one(a.files[1]);
  const auto f = hg::are_isomorphic(g, h);
  out.result["isomorphic"] = f.has_value();
  hg::CheckReport r;
  if (!f) {
    r.fail("iso", {}, "no isomorphism");
    return report_exit(out, r, "isomorphic");
  }
  out.line("isomorphic: " + map_text(*f));
  emit_morphism(out, *f, "iso", doc_name(a.files[0]), doc_name(a.files[1]));
  out.report = r;
  return exit_pass;
}

int cmd_search(const Args& a, Output& out) {
  hg::SearchReport rep;
  if (a.kind == "hom-nonassoc")
    rep = hg::search_hom_nonassociative(a.max_order);
  else if (a.kind == "nonfull-image")
    rep = hg::search_nonfull_image(a.max_order);
  else if (a.kind == "equalizer-gap")
    rep = hg::search_equalizer_kernel_gap(a.max_order);
  else
    throw usage_error("search expects hom-nonassoc, nonfull-image or equalizer-gap");
  out.result["space"] = rep.space;
  out.result["objects"] = rep.objects;
  out.result["instances"] = rep.instances;
  out.line("scanned: " + rep.space + "; " + std::to_string(rep.objects) + " object tuples, " +
           std::to_string(rep.instances) + " instances");
  if (!rep.witness) {
    out.result["found"] = false;
    out.line("no witness");
    return exit_pass;
  }
  const auto& w = *rep.witness;
  out.result["found"] = true;
  out.result["verdict"] = w.verdict;
  out.result["replays"] = hg::replay(w);
  json ms = json::array();
  for (const auto& m : w.morphisms) ms.push_back(m.map());
  out.result["morphisms"] = ms;
  out.line("witness (" + w.kind + "): " + w.verdict);
  std::vector<std::string> obj_names;
  for (std::size_t i = 0; i < w.objects.size(); ++i) {
    obj_names.push_back("X" + std::to_string(i + 1));
    emit_hypergroup(out, w.objects[i], obj_names.back());
  }
  auto ends = [&](const hg::Morphism& m) {
    std::pair<std::string, std::string> e;
    for (std::size_t i = 0; i < w.objects.size(); ++i) {
      if (m.dom() == w.objects[i] && e.first.empty()) e.first = obj_names[i];
      if (m.cod() == w.objects[i] && e.second.empty()) e.second = obj_names[i];
    }
    return e;
  };
  for (std::size_t i = 0; i < w.morphisms.size(); ++i) {
    const auto [d, c] = ends(w.morphisms[i]);
    emit_morphism(out, w.morphisms[i], "m" + std::to_string(i + 1), d, c);
  }
  return exit_pass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite hypergroups: verification, constructions, morphisms, enumeration"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json_mode = false;
  app.add_flag("--json", json_mode, "Machine-readable JSON output");

  Args a;
  std::function<int(Output&)> run;
  auto files = [&](CLI::App* c, const char* what = "Input document files ('-' for stdin)") {
    c->add_option("files", a.files, what)->required();
  };
  auto named = [&](CLI::App* c) {
    c->add_option("--name", a.name, "Document to use when a file holds several");
  };
  auto sub = [&](const char* name, const char* help, std::function<int(Output&)> fn) {
    CLI::App* c = app.add_subcommand(name, help);
    c->callback([&run, fn]() { run = fn; });
    return c;
  };

  auto* verify = sub("verify", "Check every document against the axioms", [&](Output& o) { return cmd_verify(a, o); });
  files(verify);
  verify->add_option("--replay", a.replay, "Re-evaluate one axiom instance TAG:i,j[,k]");
  auto* fmt = sub("format", "Reprint documents in canonical form", [&](Output& o) { return cmd_format(a, o); });
  files(fmt);
  fmt->add_flag("--no-verify", a.no_verify, "Only check structure, not the axioms");
  auto* comm = sub("commutative", "Check commutativity", [&](Output& o) { return cmd_commutative(a, o); });
  files(comm);
  named(comm);
  auto* sip = sub("sip", "Strong inversion property (is it a group)", [&](Output& o) { return cmd_sip(a, o); });
  files(sip);
  named(sip);
  auto* rel = sub("relational", "Print and check the relational form", [&](Output& o) { return cmd_relational(a, o); });
  files(rel);
  named(rel);
  auto* gen = sub("generate", "Subhypergroup generated by a set", [&](Output& o) { return cmd_generate(a, o); });
  files(gen);
  named(gen);
  gen->add_option("--set", a.sub, "Generators, comma separated")->required();
  auto* quot = sub("quotient", "Quotient by a subcarrier", [&](Output& o) { return cmd_quotient(a, o); });
  files(quot);
  named(quot);
  quot->add_option("--sub", a.sub, "Subcarrier members, comma separated")->required();
  auto* coset = sub("coset-space", "Coset structure of a group modulo a subgroup",
                    [&](Output& o) { return cmd_coset_space(a, o); });
  files(coset);
  named(coset);
  coset->add_option("--sub", a.sub, "Subgroup members, comma separated")->required();
  coset->add_flag("--raw", a.raw, "Print the table even when it is not a hypergroup");
  auto* chain = sub("chain", "Chain hypergroup on k nonzero elements", [&](Output& o) { return cmd_chain(a, o); });
  chain->add_option("--k", a.k, "Number of nonzero elements")->required()->check(CLI::Range(1, 63));
  auto* prod = sub("product", "Product of hypergroups", [&](Output& o) { return cmd_product(a, o, false); });
  files(prod);
  auto* dsum = sub("direct-sum", "Direct sum of abelian hypergroups", [&](Output& o) { return cmd_product(a, o, true); });
  files(dsum);
  auto* ker = sub("kernel", "Kernel of a morphism", [&](Output& o) { return cmd_kernel(a, o); });
  files(ker);
  named(ker);
  auto* img = sub("image", "Image of a morphism", [&](Output& o) { return cmd_image(a, o); });
  files(img);
  named(img);
  auto* cok = sub("cokernel", "Cokernel of a morphism", [&](Output& o) { return cmd_cokernel(a, o); });
  files(cok);
  named(cok);
  cok->add_flag("--force-generated", a.force_generated, "Quotient by the generated subhypergroup when f is not full");
  auto* hom = sub("hom", "List Hom(G,H)", [&](Output& o) { return cmd_hom(a, o); });
  files(hom);
  auto* homt = sub("hom-table", "Star table of Hom(G,H)", [&](Output& o) { return cmd_hom_table(a, o); });
  files(homt);
  auto* bil = sub("bilinearity", "Composition versus star for F, G, H", [&](Output& o) { return cmd_bilinearity(a, o); });
  files(bil);
  auto* imf = sub("image-full", "Im f = Ker(Coker f)", [&](Output& o) { return cmd_image_full(a, o); });
  files(imf);
  named(imf);
  imf->add_flag("--force-generated", a.force_generated, "Allow non-full f");
  auto* uni = sub("universal", "Universal property checks", [&](Output& o) { return cmd_universal(a, o); });
  uni->add_option("kind", a.kind, "kernel, cokernel, biproduct or cone")
      ->required()
      ->check(CLI::IsMember({"kernel", "cokernel", "biproduct", "cone"}));
  files(uni);
  named(uni);
  uni->add_option("--tests-order", a.tests_order, "Test objects: all classes up to this order");
  uni->add_flag("--colimit", a.colimit, "For cone: check the colimit instead of the limit");
  uni->add_flag("--force-generated", a.force_generated, "For cokernel: allow non-full f");
  auto* exact = sub("exact", "Exactness of a sequence of morphisms", [&](Output& o) { return cmd_exact(a, o); });
  files(exact);
  exact->add_option("--arrows", a.arrows, "Morphism names in order (default: file order)");
  exact->add_option("--full", a.full, "Morphisms required to be full");
  auto* lim = sub("limit", "Filtered limit of a diagram", [&](Output& o) { return cmd_limit(a, o, false); });
  files(lim);
  named(lim);
  auto* colim = sub("colimit", "Directed colimit of a diagram", [&](Output& o) { return cmd_limit(a, o, true); });
  files(colim);
  named(colim);
  auto* en = sub("enumerate", "All hypergroups of one order up to isomorphism",
                 [&](Output& o) { return cmd_enumerate(a, o); });
  en->add_option("--order", a.order, "Order")->required();
  en->add_flag("--commutative", a.commutative_only, "Only commutative classes");
  auto* canon = sub("canon", "Canonical form", [&](Output& o) { return cmd_canon(a, o); });
  files(canon);
  named(canon);
  auto* iso = sub("iso", "Find an isomorphism", [&](Output& o) { return cmd_iso(a, o); });
  files(iso);
  auto* search = sub("search", "Counterexample probes", [&](Output& o) { return cmd_search(a, o); });
  search->add_option("kind", a.kind, "hom-nonassoc, nonfull-image or equalizer-gap")
      ->required()
      ->check(CLI::IsMember({"hom-nonassoc", "nonfull-image", "equalizer-gap"}));
  search->add_option("--max-order", a.max_order, "Largest order scanned");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  Output out;
  out.json_mode = json_mode;
  out.command = command;
  try {
    return out.finish(run(out));
  } catch (const file_parse_error& e) {
    return error_exit(json_mode, command, e.kind(), e.path + ":" + e.what(),
                      std::pair{e.line(), e.column()});
  } catch (const hg::validation_error& e) {
    out.report = e.report();
    out.line(std::string("failed: ") + e.what());
    return out.finish(exit_fail);
  } catch (const usage_error& e) {
    return error_exit(json_mode, command, "usage", e.what());
  } catch (const hg::unsupported_error& e) {
    return error_exit(json_mode, command, "unsupported", e.what());
  } catch (const hg::domain_error& e) {
    return error_exit(json_mode, command, "domain", e.what());
  }
}
