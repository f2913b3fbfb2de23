// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdlib>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ordua/config.hpp"
#include "ordua/corpus.hpp"
#include "ordua/duality.hpp"
#include "ordua/error.hpp"
#include "ordua/filters.hpp"
#include "ordua/free.hpp"
#include "ordua/io.hpp"
#include "ordua/isomorphism.hpp"
#include "ordua/oracle.hpp"
#include "ordua/space.hpp"
#include "ordua/structure.hpp"

namespace ordua::cli {

enum Exit : int { ok = 0, checked_false = 1, input_error = 2, bound_exceeded = 3 };

enum class Format { text, json, dot };

struct RunConfig {
  Bounds bounds;
  std::uint64_t seed = 0;
  Format format = Format::text;
  std::string output;  // empty means stdout
};

/// What a command produced; rendered according to the requested format.
struct Report {
  int code = Exit::ok;
  std::vector<std::string> lines;
  nlohmann::json data = nlohmann::json::object();
  std::optional<std::string> dot;
  std::optional<std::string> document;  // json output replaced by a structure document

  void line(std::string s) { lines.push_back(std::move(s)); }
};

namespace detail {

using nlohmann::json;

inline std::string join(const std::vector<std::string>& xs, const std::string& sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i];
  return out;
}

inline std::vector<std::string> set_names(const SetFamily& f, const std::vector<std::string>& labels) {
  std::vector<std::string> out;
  for (Mask m : f) out.push_back(format_set(m, labels));
  return out;
}

inline json order_json(const std::vector<std::string>& labels, const Relation& r) {
  json arr = json::array();
  for (auto [a, b] : r.covers()) arr.push_back({labels[a], labels[b]});
  return arr;
}

inline std::string order_text(const std::vector<std::string>& labels, const Relation& r) {
  std::vector<std::string> parts;
  for (auto [a, b] : r.covers()) parts.push_back(labels[a] + " < " + labels[b]);
  if (parts.empty()) return "no strict pairs";
  return join(parts);
}

inline std::string order_shape(const Relation& r) {
  const std::size_t n = r.size();
  bool total = true;
  bool antichain = true;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b) continue;
      if (r.test(a, b)) antichain = false;
      if (!r.test(a, b) && !r.test(b, a)) total = false;
    }
  }
  if (n <= 1) return "trivial";
  if (total) return "chain";
  if (antichain) return "antichain";
  return "partial order";
}

inline DualityKind default_duality(const Structure& s) {
  if (s.at_least(Kind::distributive_lattice)) return DualityKind::dlat;
  if (s.at_least(Kind::dd_lattice)) return DualityKind::ddlat;
  if (s.at_least(Kind::meet_semilattice)) return DualityKind::msl;
  return DualityKind::coherent_poset;
}

inline DualityKind parse_duality(const std::string& v) {
  for (DualityKind k : {DualityKind::coherent_poset, DualityKind::msl, DualityKind::dlat, DualityKind::ddlat}) {
    if (duality_kind_name(k) == v) return k;
  }
  fail(Errc::invalid_argument, "unknown variant '" + v + "'");
}

inline FreeKind default_free_kind(const Structure& s) {
  if (s.at_least(Kind::distributive_lattice)) return FreeKind::dlat;
  if (s.at_least(Kind::dd_lattice)) return FreeKind::ddlat;
  if (s.at_least(Kind::meet_semilattice)) return FreeKind::msl;
  return FreeKind::poset_monotone;
}

inline FreeKind parse_free(const std::string& v) {
  auto k = parse_free_kind(v);
  if (!k) fail(Errc::invalid_argument, "unknown kind '" + v + "'");
  return *k;
}

/// A poset file read as an ordered space: discrete topology (finite Priestley spaces) or its
/// Alexandrov topology.
inline PreorderedSpace space_of(const Structure& s, const std::string& from) {
  if (from == "priestley") {
    std::vector<Mask> all;
    for (Mask m = 0; m <= full_mask(s.size()); ++m) all.push_back(m);
    return {FiniteSpace::trusted(s.labels(), SetFamily(s.size(), std::move(all))), s.base().leq()};
  }
  if (from == "alexandrov") return {alexandrov_space(s.base().leq(), s.labels()), s.base().leq()};
  fail(Errc::invalid_argument, "unknown space reading '" + from + "'");
}

inline void describe_structure(Report& r, const Structure& s, const std::string& name) {
  r.data["name"] = name;
  r.data["size"] = s.size();
  r.data["kind"] = std::string(kind_name(s.kind()));
  r.data["hasse"] = order_json(s.labels(), s.base().leq());
  if (s.top()) r.data["top"] = s.label(*s.top());
  if (s.bottom()) r.data["bottom"] = s.label(*s.bottom());
  r.line(name + ": " + std::to_string(s.size()) + " elements, kind " + std::string(kind_name(s.kind())));
  r.dot = export_dot(s, name);
}

inline void describe_space(Report& r, const DualityResult& d, const std::string& title) {
  const auto& ps = d.space;
  auto rep = priestley_check(ps);
  r.data["points"] = ps.space.labels();
  r.data["order"] = order_json(ps.space.labels(), ps.order);
  r.data["order-shape"] = order_shape(ps.order);
  r.data["discrete"] = ps.space.is_discrete();
  r.data["priestley"] = rep.separation_ok;
  r.data["clopen-uppers"] = set_names(rep.clopen_uppers, ps.space.labels());
  r.data["base-opens"] = set_names(d.base.opens(), d.base.labels());
  r.line(title + ": " + std::to_string(ps.size()) + " points, order " + order_shape(ps.order));
  r.line("points: " + join(ps.space.labels()));
  r.line("order: " + order_text(ps.space.labels(), ps.order));
  r.line(std::string("topology: ") + (ps.space.is_discrete() ? "discrete" : "not discrete") + ", " +
         std::to_string(ps.space.opens().size()) + " opens");
  r.line(std::string("priestley separation: ") + (rep.separation_ok ? "holds" : "fails"));
  r.line("clopen-upper lattice: size " + std::to_string(rep.clopen_uppers.size()));
  r.dot = export_dot(ps, title);
}

inline std::string map_text(const std::vector<std::string>& from, const std::vector<std::string>& to,
                            const std::vector<std::size_t>& m) {
  std::vector<std::string> parts;
  for (std::size_t i = 0; i < m.size(); ++i) parts.push_back(from[i] + " -> " + to[m[i]]);
  return join(parts);
}

// ---- commands ----

inline Report cmd_validate(const std::string& path) {
  Report r;
  Structure s = load_structure(path);
  r.data["valid"] = true;
  r.data["size"] = s.size();
  r.line("valid: " + document_name(path) + " (" + std::to_string(s.size()) + " elements)");
  r.document = export_document(s, document_name(path));
  r.dot = export_dot(s, document_name(path));
  return r;
}

inline Report cmd_classify(const std::string& path, const RunConfig& cfg) {
  Report r;
  Structure s = load_structure(path);
  describe_structure(r, s, document_name(path));
  SetFamily fs = filters(s, cfg.bounds);
  r.data["filters"] = set_names(fs, s.labels());
  r.line("filters: " + join(set_names(fs, s.labels())));
  if (s.at_least(Kind::dd_lattice)) {
    SetFamily dfs = disjunctive_filters(s);
    r.data["disjunctive-filters"] = set_names(dfs, s.labels());
    r.line("disjunctive filters: " + join(set_names(dfs, s.labels())));
  }
  if (s.at_least(Kind::distributive_lattice)) {
    SetFamily pf = prime_filters(s);
    r.data["prime-filters"] = set_names(pf, s.labels());
    r.line("prime filters: " + join(set_names(pf, s.labels())));
    Subset ind = indecomposable_elements(s);
    r.data["indecomposable"] = s.format(ind.members);
    r.line("indecomposable: " + s.format(ind.members));
  }
  return r;
}

inline Report cmd_spectrum(const std::string& path, const std::string& variant, const RunConfig& cfg) {
  Report r;
  Structure s = load_structure(path);
  DualityKind k = variant.empty() ? default_duality(s) : parse_duality(variant);
  DualityResult d = spectrum_for(s, k, cfg.bounds);
  r.data["variant"] = std::string(duality_kind_name(k));
  describe_space(r, d, document_name(path) + " spectrum (" + std::string(duality_kind_name(k)) + ")");
  return r;
}

inline Report cmd_priestley(const std::string& path) {
  Report r;
  Structure s = load_structure(path);
  describe_space(r, priestley_of_dlat(s), document_name(path) + " priestley space");
  return r;
}

inline Report cmd_dualize_back(const std::string& path, const std::string& from) {
  Report r;
  Structure s = load_structure(path);
  PreorderedSpace ps = space_of(s, from.empty() ? "priestley" : from);
  Structure d = dlat_of_priestley(ps);
  describe_structure(r, d, document_name(path) + " clopen uppers");
  r.document = export_document(d, document_name(path) + "-dual");
  return r;
}

inline Report cmd_free_bool(const std::string& path, const std::string& kind, const RunConfig& cfg) {
  Report r;
  Structure s = load_structure(path);
  FreeKind k = kind.empty() ? default_free_kind(s) : parse_free(kind);
  FreeResult fr = free_boolean(s, k, cfg.bounds);
  r.data["kind"] = std::string(free_kind_name(k));
  r.data["size"] = fr.size();
  r.data["points"] = fr.point_labels;
  r.data["atoms"] = fr.atoms.size();
  std::vector<std::string> unit;
  for (std::size_t x = 0; x < s.size(); ++x) unit.push_back(s.label(x) + " -> " + format_set(fr.unit_sets[x], fr.point_labels));
  r.data["unit"] = unit;
  r.line("free Boolean algebra (" + std::string(free_kind_name(k)) + "): " + std::to_string(fr.size()) +
         " elements, " + std::to_string(fr.atoms.size()) + " atoms over " + std::to_string(fr.points.size()) +
         " points");
  r.line("unit: " + join(unit));
  auto up = universal_property_check(fr, s, k, cfg.bounds);
  json counts = json::array();
  for (const auto& c : up.counts) {
    counts.push_back({{"atoms", c.atoms}, {"class-morphisms", c.class_morphisms}, {"boolean-homs", c.boolean_homs}});
    r.line("target 2^" + std::to_string(c.atoms) + ": " + std::to_string(c.class_morphisms) + " class morphisms, " +
           std::to_string(c.boolean_homs) + " Boolean homs");
  }
  r.data["universal-counts"] = counts;
  r.data["universal-property"] = up.ok;
  r.line(std::string("universal property: ") + (up.ok ? "holds" : "fails: " + up.counterexample));
  if (fr.structure) r.dot = export_dot(*fr.structure, "free");
  if (!up.ok) r.code = Exit::checked_false;
  return r;
}

inline Report cmd_free_dlat(const std::string& path, const std::string& from, const RunConfig& cfg) {
  Report r;
  Structure s = load_structure(path);
  std::string f = from.empty() ? (s.at_least(Kind::meet_semilattice) ? "msl" : "ddlat") : from;
  FreeResult fr;
  if (f == "msl") {
    fr = free_dlat_on_msl(s, cfg.bounds);
  } else if (f == "ddlat") {
    fr = free_dlat_on_ddlat(s);
  } else {
    fail(Errc::invalid_argument, "--from must be msl or ddlat");
  }
  const Structure& d = fr.require_structure();
  r.data["from"] = f;
  r.data["size"] = d.size();
  r.data["kind"] = std::string(kind_name(d.kind()));
  r.data["hasse"] = order_json(d.labels(), d.base().leq());
  r.data["self-check"] = fr.self_check;
  r.line(fr.construction + ": " + std::to_string(d.size()) + " elements, order " + order_shape(d.base().leq()));
  r.line("unit: " + map_text(s.labels(), d.labels(), fr.unit));
  r.line(std::string("recovery: ") + (fr.self_check ? "holds" : "fails: " + fr.self_check_detail));
  r.dot = export_dot(d, "free-dlat");
  if (!fr.self_check) r.code = Exit::checked_false;
  return r;
}

inline Report cmd_free_frame(const std::string& path) {
  Report r;
  Structure s = load_structure(path);
  FreeResult fr = free_frame_on_poset(s.base());
  const Structure& d = fr.require_structure();
  r.data["size"] = d.size();
  r.data["hasse"] = order_json(d.labels(), d.base().leq());
  r.data["self-check"] = fr.self_check;
  r.line(fr.construction + ": " + std::to_string(d.size()) + " lower sets");
  r.line("unit: " + map_text(s.labels(), d.labels(), fr.unit));
  r.line(std::string("supercompact recovery: ") + (fr.self_check ? "holds" : "fails: " + fr.self_check_detail));
  r.dot = export_dot(d, "free-frame");
  if (!fr.self_check) r.code = Exit::checked_false;
  return r;
}

/// Oracle algebra against the generated one, matching units under the isomorphism.
inline std::optional<std::vector<std::size_t>> oracle_isomorphism(const ClosureFamily& oc, const FreeResult& fr) {
  if (!fr.structure) return std::nullopt;
  return find_order_isomorphism(oc.structure.base().leq(), fr.structure->base().leq(),
                                [&](const std::vector<std::size_t>& phi) {
                                  for (std::size_t x = 0; x < oc.unit.size(); ++x) {
                                    if (phi[oc.unit[x]] != fr.unit[x]) return false;
                                  }
                                  return true;
                                });
}

inline Report cmd_oracle(const std::string& path, const RunConfig& cfg) {
  Report r;
  Structure s = load_structure(path);
  ClosureFamily oc = thm22_oracle(s, cfg.bounds);
  FreeResult fr = free_boolean(s, FreeKind::dlat, cfg.bounds);
  auto iso = oracle_isomorphism(oc, fr);
  r.data["oracle-size"] = oc.structure.size();
  r.data["generated-size"] = fr.size();
  r.data["isomorphic"] = iso.has_value();
  r.data["ground"] = oc.ground;
  if (iso) {
    r.line("oracle algebra ≅ generated algebra, size " + std::to_string(fr.size()));
  } else {
    r.line("oracle algebra (size " + std::to_string(oc.structure.size()) + ") differs from generated algebra (size " +
           std::to_string(fr.size()) + ")");
    r.code = Exit::checked_false;
  }
  r.line("closed families over " + std::to_string(oc.ground) + " subsets of the doubled carrier");
  r.dot = export_dot(oc.structure, "oracle");
  return r;
}

inline Report cmd_roundtrip(const std::string& path) {
  Report r;
  Structure s = load_structure(path);
  DualityResult d = priestley_of_dlat(s);
  Structure back = dlat_of_priestley(d.space);
  // Candidate isomorphism from the embedding, confirmed by the independent search.
  const SetFamily uppers = clopen_uppers(d.space);
  std::vector<std::size_t> phi;
  bool embedding_ok = true;
  for (Mask e : d.embedding) {
    if (!uppers.contains(e)) {
      embedding_ok = false;
      break;
    }
    phi.push_back(uppers.index_of(e));
  }
  bool iso = embedding_ok && is_order_isomorphism(s.base().leq(), back.base().leq(), phi);
  bool found = find_order_isomorphism(s.base(), back.base()).has_value();
  json table = json::object();
  if (embedding_ok) {
    for (std::size_t x = 0; x < s.size(); ++x) {
      table[s.label(x)] = back.label(phi[x]);
      r.line(s.label(x) + " -> " + back.label(phi[x]));
    }
  }
  r.data["isomorphism"] = table;
  r.data["roundtrip"] = iso && found;
  r.line(std::string("roundtrip: ") + ((iso && found) ? "isomorphic" : "not isomorphic"));
  r.dot = export_dot(back, "roundtrip");
  if (!(iso && found)) r.code = Exit::checked_false;
  return r;
}

inline Report cmd_recognize(const std::string& path, const std::string& kind) {
  Report r;
  StructureMorphism m = load_morphism(path);
  FreeKind k = kind.empty() ? FreeKind::dlat : parse_free(kind);
  Recognition rec = recognize_free_boolean(m, k);
  r.data["free"] = rec.free;
  r.data["image"] = m.target->format(rec.image);
  r.data["expected"] = m.target->format(rec.expected);
  r.data["trace-order-antisymmetric"] = rec.antisymmetric;
  r.line("image: " + m.target->format(rec.image));
  if (rec.antisymmetric) r.line("expected generators: " + m.target->format(rec.expected));
  else r.line("trace order on prime filters is not antisymmetric");
  r.line(std::string("free (") + std::string(free_kind_name(k)) + "): " + (rec.free ? "yes" : "no"));
  if (!rec.free) r.code = Exit::checked_false;
  return r;
}

inline Report cmd_extimage(const std::string& path, const std::string& variant, const std::string& from) {
  Report r;
  Structure s = load_structure(path);
  PreorderedSpace ps = space_of(s, from.empty() ? "priestley" : from);
  ExtImageVariant v = ExtImageVariant::coherent_poset;
  if (variant == "msl") v = ExtImageVariant::msl;
  else if (!variant.empty() && variant != "coherent-poset") fail(Errc::invalid_argument, "--variant must be coherent-poset or msl");
  ExtImageReport rep = extended_image_check(ps, v);
  const auto& labels = ps.space.labels();
  r.data["in-extended-image"] = rep.ok;
  r.data["weakly-indecomposable"] = set_names(rep.weakly_indecomposable, labels);
  r.line("weakly indecomposable clopen uppers: " + join(set_names(rep.weakly_indecomposable, labels)));
  if (rep.unseparated) {
    r.line("not separated: " + labels[rep.unseparated->first] + " not below " + labels[rep.unseparated->second]);
  }
  if (rep.top_missing) r.line("the whole space is not weakly indecomposable");
  if (rep.bad_intersection) {
    r.line("intersection of " + format_set(rep.bad_intersection->first, labels) + " and " +
           format_set(rep.bad_intersection->second, labels) + " is not weakly indecomposable");
  }
  r.line(std::string("extended image (") + (v == ExtImageVariant::msl ? "msl" : "coherent-poset") +
         "): " + (rep.ok ? "yes" : "no"));
  if (!rep.ok) r.code = Exit::checked_false;
  return r;
}

inline Report cmd_check_pullback(const std::string& path) {
  Report r;
  Structure s = load_structure(path);
  FiniteSpace x = alexandrov_space(s.base().leq(), s.labels());
  bool ok = check_frame_pullback(x);
  r.data["pullback"] = ok;
  r.line("space: Alexandrov topology, " + std::to_string(x.opens().size()) + " opens");
  r.line(std::string("frame pullback: ") + (ok ? "holds" : "fails"));
  r.dot = export_dot(x, "space");
  if (!ok) r.code = Exit::checked_false;
  return r;
}

/// Seeded battery over random posets and their lower-set lattices.
inline Report cmd_selftest(const RunConfig& cfg) {
  Report r;
  Rng rng(cfg.seed);
  std::size_t passed = 0;
  std::size_t total = 0;
  json results = json::array();
  auto record = [&](const std::string& id, const std::string& what, bool ok) {
    ++total;
    if (ok) ++passed;
    r.line(id + " " + what + ": " + (ok ? "pass" : "FAIL"));
    results.push_back({{"id", id}, {"check", what}, {"pass", ok}});
  };
  for (std::size_t i = 0; i < 24; ++i) {
    Poset p = random_poset(rng, 5);
    std::string id = "#" + std::to_string(i) + " n=" + std::to_string(p.size()) + " hasse=[" +
                     order_text(p.labels(), p.leq()) + "]";
    Structure d = lower_set_lattice(p);
    DualityResult pd = priestley_of_dlat(d);
    Structure back = dlat_of_priestley(pd.space);
    record(id, "roundtrip", find_order_isomorphism(d.base(), back.base()).has_value());
    record(id, "priestley-discrete", priestley_check(pd.space).separation_ok && pd.space.space.is_discrete());
    DualityResult ps = poset_spectrum(p, cfg.bounds);
    Structure rec = recovered_structure(ps.space);
    record(id, "poset-recovery", find_order_isomorphism(rec.base(), p).has_value());
    FreeResult frame = free_frame_on_poset(p);
    record(id, "frame-supercompacts", frame.self_check);
    record(id, "pullback", check_frame_pullback(stone_spectrum(d)));
    if (p.size() <= 3) {
      Structure ps_struct = classify(p);
      FreeResult fr = free_boolean(ps_struct, FreeKind::poset_monotone, cfg.bounds);
      Bounds small = cfg.bounds;
      small.hom_target = std::min<std::size_t>(small.hom_target, 2);
      record(id, "universal-monotone", universal_property_check(fr, ps_struct, FreeKind::poset_monotone, small).ok);
    }
  }
  r.line("selftest seed " + std::to_string(cfg.seed) + ": " + std::to_string(passed) + "/" + std::to_string(total) +
         " passed");
  r.data["seed"] = cfg.seed;
  r.data["passed"] = passed;
  r.data["total"] = total;
  r.data["results"] = results;
  if (passed != total) r.code = Exit::checked_false;
  return r;
}

inline int exit_code_for(Errc c) {
  return (c == Errc::carrier_too_large || c == Errc::oracle_bound_exceeded) ? Exit::bound_exceeded
                                                                            : Exit::input_error;
}

inline std::string render(const Report& r, Format f) {
  switch (f) {
    case Format::text: {
      std::string out;
      for (const auto& l : r.lines) out += l + "\n";
      return out;
    }
    case Format::json:
      if (r.document) return *r.document;
      return r.data.dump(2) + "\n";
    case Format::dot:
      if (!r.dot) fail(Errc::invalid_argument, "this command has no DOT output");
      return *r.dot;
  }
  return {};
}

}  // namespace detail

/// Parses and runs one command line (args excludes the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite Priestley-type dualities and free constructions", "ordua"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  if (const char* env = std::getenv("ORDUA_BOUND")) {
    try {
      cfg.bounds.enumeration = static_cast<std::size_t>(std::stoul(env));
    } catch (const std::exception&) {
      err << "ORDUA_BOUND must be a positive integer\n";
      return Exit::input_error;
    }
  }
  std::string format = "text";
  app.add_option("--bound", cfg.bounds.enumeration, "enumeration bound for filters and homs")
      ->check(CLI::PositiveNumber);
  app.add_option("--oracle-bound", cfg.bounds.oracle, "largest lattice accepted by the closure oracle")
      ->check(CLI::PositiveNumber);
  app.add_option("--hom-bound", cfg.bounds.hom_target, "atoms of the largest universal-property target")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "seed for randomized suites");
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json", "dot"}));
  app.add_option("-o", cfg.output, "write output to PATH");

  std::string file;
  std::string kind;
  std::string variant;
  std::string from;
  std::function<Report()> action;

  auto with_file = [&](const char* name, const char* help, auto make) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("file", file, "input file")->required();
    make(sub);
    return sub;
  };
  with_file("validate", "check a structure document", [&](CLI::App* s) {
    s->callback([&] { action = [&] { return detail::cmd_validate(file); }; });
  });
  with_file("classify", "kind, filters and distinguished elements", [&](CLI::App* s) {
    s->callback([&] { action = [&] { return detail::cmd_classify(file, cfg); }; });
  });
  with_file("spectrum", "spectrum of a structure", [&](CLI::App* s) {
    s->add_option("--variant", variant, "coherent-poset | msl | dlat | ddlat");
    s->callback([&] { action = [&] { return detail::cmd_spectrum(file, variant, cfg); }; });
  });
  with_file("priestley", "Priestley space of a distributive lattice", [&](CLI::App* s) {
    s->callback([&] { action = [&] { return detail::cmd_priestley(file); }; });
  });
  with_file("dualize-back", "lattice of clopen uppers of an ordered space", [&](CLI::App* s) {
    s->add_option("--from", from, "priestley (discrete) | alexandrov");
    s->callback([&] { action = [&] { return detail::cmd_dualize_back(file, from); }; });
  });
  with_file("free-bool", "free Boolean algebra with universal-property check", [&](CLI::App* s) {
    s->add_option("--kind", kind, "poset-monotone | poset-flat | msl | dlat | ddlat");
    s->callback([&] { action = [&] { return detail::cmd_free_bool(file, kind, cfg); }; });
  });
  with_file("free-dlat", "free distributive lattice on a meet-semilattice or dd-lattice", [&](CLI::App* s) {
    s->add_option("--from", from, "msl | ddlat");
    s->callback([&] { action = [&] { return detail::cmd_free_dlat(file, from, cfg); }; });
  });
  with_file("free-frame", "free frame on a poset", [&](CLI::App* s) {
    s->callback([&] { action = [&] { return detail::cmd_free_frame(file); }; });
  });
  with_file("oracle", "closure-rule oracle against the generated algebra", [&](CLI::App* s) {
    s->callback([&] { action = [&] { return detail::cmd_oracle(file, cfg); }; });
  });
  with_file("roundtrip", "lattice -> Priestley space -> lattice", [&](CLI::App* s) {
    s->callback([&] { action = [&] { return detail::cmd_roundtrip(file); }; });
  });
  with_file("recognize", "is a morphism into a Boolean algebra its free unit", [&](CLI::App* s) {
    s->add_option("--kind", kind, "msl | dlat | ddlat");
    s->callback([&] { action = [&] { return detail::cmd_recognize(file, kind); }; });
  });
  with_file("extimage", "extended-image test for an ordered space", [&](CLI::App* s) {
    s->add_option("--variant", variant, "coherent-poset | msl");
    s->add_option("--from", from, "priestley (discrete) | alexandrov");
    s->callback([&] { action = [&] { return detail::cmd_extimage(file, variant, from); }; });
  });
  with_file("check-pullback", "frame pullback identity for the Alexandrov space", [&](CLI::App* s) {
    s->callback([&] { action = [&] { return detail::cmd_check_pullback(file); }; });
  });
  CLI::App* self = app.add_subcommand("selftest", "seeded battery of round trips and recoveries");
  self->callback([&] { action = [&] { return detail::cmd_selftest(cfg); }; });

  std::vector<std::string> argv_store;
  argv_store.reserve(args.size() + 1);
  argv_store.push_back("ordua");
  for (const auto& a : args) argv_store.push_back(a);
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return Exit::input_error;
  }
  cfg.format = format == "json" ? Format::json : format == "dot" ? Format::dot : Format::text;
  try {
    Report rep = action();
    std::string text = detail::render(rep, cfg.format);
    if (cfg.output.empty()) {
      out << text;
    } else {
      write_file(cfg.output, text);
    }
    return rep.code;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return detail::exit_code_for(e.code());
  }
}

}  // namespace ordua::cli
