// knaster_main.cpp — command-line front end: one verb per library operation,
// deterministic JSON on stdout, stable error names on stderr.
// Exit codes: 0 success, 1 domain error, 2 usage error.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "knaster/amalgam.hpp"
#include "knaster/chain.hpp"
#include "knaster/enumerate.hpp"
#include "knaster/error.hpp"
#include "knaster/fraisse.hpp"
#include "knaster/json_io.hpp"
#include "knaster/lingraph.hpp"
#include "knaster/plmap.hpp"
#include "knaster/ramsey.hpp"
#include "knaster/rational.hpp"

namespace {

using knaster::AnnotatedObject;
using knaster::Category;
using knaster::Chain;
using knaster::ChainTower;
using knaster::Coloring;
using knaster::GenericSequence;
using knaster::Json;
using knaster::LinearGraph;
using knaster::Morphism;
using knaster::PLOpenMap;
using knaster::Rational;

struct Globals {
  std::uint64_t seed = 0;
  int jobs = 1;
  bool check = false;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) knaster::fail("FileRead", "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// "@path" pulls the real payload from a file; anything else is literal.
std::string resolve_at(const std::string& text) {
  if (!text.empty() && text[0] == '@') return slurp(text.substr(1));
  return text;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) knaster::fail("InvalidParams", "empty entry in integer list");
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(cur, &used);
    } catch (const std::exception&) {
      knaster::fail("InvalidParams", "not an integer: " + cur);
    }
    if (used != cur.size()) knaster::fail("InvalidParams", "not an integer: " + cur);
    out.push_back(v);
    cur.clear();
  };
  for (char ch : text) {
    if (ch == ',') {
      flush();
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      cur.push_back(ch);
    }
  }
  flush();
  return out;
}

// A morphism argument: comma-separated value string (with --cod), or @file
// holding either such a string or a {"dom","cod","values"} JSON object.
Morphism morphism_from_flags(const std::string& values_text, int cod) {
  std::string body = resolve_at(values_text);
  std::size_t first = body.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) knaster::fail("InvalidParams", "empty morphism argument");
  if (body[first] == '{') {
    Morphism m = knaster::morphism_from_json(knaster::parse_json_text(body));
    if (cod != 0 && cod != m.cod) {
      knaster::fail("InvalidParams", "--cod disagrees with the morphism file");
    }
    return m;
  }
  if (cod == 0) knaster::fail("InvalidParams", "--cod is required with a value string");
  return knaster::validate(cod, parse_int_list(body));
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

int default_ramsey_cap() {
  if (const char* env = std::getenv("KNASTER_RAMSEY_CAP")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      knaster::fail("InvalidParams", "KNASTER_RAMSEY_CAP must be an integer");
    }
  }
  return 10;
}

Category parse_category(const std::string& text) {
  if (text == "k" || text == "K") return Category::K;
  if (text == "kstar" || text == "Kstar" || text == "K*") return Category::Kstar;
  throw CLI::ValidationError("--category", "must be one of: k, kstar");
}

GenericSequence sequence_from_flag(const std::string& flag, int fallback_n) {
  if (!flag.empty()) {
    return knaster::sequence_from_json(knaster::parse_json_text(resolve_at(flag)));
  }
  GenericSequence s;
  s.objects.push_back(AnnotatedObject{LinearGraph{fallback_n}, 1});
  return s;
}

void add_validate(CLI::App& app) {
  auto* sub = app.add_subcommand(
      "validate", "Check a value string; print fold data on success");
  struct O {
    std::string values;
    int cod = 0;
    int dom = 0;
  };
  auto o = std::make_shared<O>();
  sub->add_option("--values", o->values, "comma-separated values or @file")->required();
  sub->add_option("--cod", o->cod, "codomain vertex count");
  sub->add_option("--dom", o->dom, "expected domain vertex count (optional check)");
  sub->callback([o] {
    Morphism m = morphism_from_flags(o->values, o->cod);
    if (o->dom != 0 && o->dom != m.dom) {
      knaster::fail("InvalidParams", "--dom disagrees with the value string length");
    }
    Json out;
    out["ok"] = true;
    out["dom"] = m.dom;
    out["cod"] = m.cod;
    out["degree"] = knaster::degree(m);
    out["turning_indices"] = knaster::fold_decomposition(m).turning_indices;
    emit(out);
  });
}

void add_compose(CLI::App& app) {
  auto* sub = app.add_subcommand(
      "compose", "Compose two epimorphisms (g is applied first)");
  struct O {
    std::string f, g;
    int f_cod = 0, g_cod = 0;
  };
  auto o = std::make_shared<O>();
  sub->add_option("--f", o->f, "outer morphism values or @file")->required();
  sub->add_option("--f-cod", o->f_cod, "outer codomain size");
  sub->add_option("--g", o->g, "inner morphism values or @file")->required();
  sub->add_option("--g-cod", o->g_cod, "inner codomain size");
  sub->callback([o] {
    Morphism f = morphism_from_flags(o->f, o->f_cod);
    Morphism g = morphism_from_flags(o->g, o->g_cod);
    Morphism c = knaster::compose(f, g);
    Json out;
    out["composite"] = knaster::morphism_to_json(c);
    out["degree"] = knaster::degree(c);
    emit(out);
  });
}

void add_enumerate(CLI::App& app, const std::shared_ptr<Globals>& g) {
  auto* sub = app.add_subcommand(
      "enumerate", "Count, list, or sample epimorphisms between two objects");
  struct O {
    int dom = 0, cod = 0, deg = 0, sample = 0;
    std::uint64_t limit = 0;
    bool count_only = false;
  };
  auto o = std::make_shared<O>();
  sub->add_option("--dom", o->dom, "domain vertex count")->required();
  sub->add_option("--cod", o->cod, "codomain vertex count")->required();
  sub->add_option("--degree", o->deg, "restrict to one degree");
  sub->add_option("--limit", o->limit, "list at most this many (lexicographic prefix)");
  sub->add_option("--sample", o->sample, "draw this many uniform samples instead");
  sub->add_flag("--count-only", o->count_only, "print the count without listing");
  sub->callback([o, g] {
    LinearGraph dom{o->dom}, cod{o->cod};
    Json out;
    out["dom"] = o->dom;
    out["cod"] = o->cod;
    if (o->deg > 0) out["degree"] = o->deg;
    if (o->sample > 0) {
      std::mt19937_64 rng(g->seed);
      Json list = Json::array();
      for (int i = 0; i < o->sample; ++i) {
        Morphism m = o->deg > 0
                         ? knaster::sample_epi_of_degree(dom, cod, o->deg, rng)
                         : knaster::sample_epi(dom, cod, rng);
        list.push_back(knaster::morphism_to_json(m));
      }
      out["samples"] = std::move(list);
      emit(out);
      return;
    }
    std::uint64_t count = o->deg > 0
                              ? knaster::count_epi_of_degree(dom, cod, o->deg)
                              : knaster::count_epi(dom, cod);
    out["count"] = count;
    if (!o->count_only) {
      std::size_t cap = o->limit > 0 ? static_cast<std::size_t>(o->limit)
                                     : static_cast<std::size_t>(-1);
      std::vector<Morphism> all =
          o->deg > 0
              ? knaster::enumerate_epi_of_degree_prefix(dom, cod, o->deg, cap)
              : knaster::enumerate_epi_prefix(dom, cod, cap);
      Json list = Json::array();
      for (const Morphism& m : all) list.push_back(knaster::morphism_to_json(m));
      out["morphisms"] = std::move(list);
    }
    emit(out);
  });
}

void add_amalgamate(CLI::App& app, const std::shared_ptr<Globals>& g) {
  auto* sub = app.add_subcommand(
      "amalgamate", "Projective amalgamation of two epimorphisms with common codomain");
  struct O {
    std::string f, g;
    int f_cod = 0, g_cod = 0;
  };
  auto o = std::make_shared<O>();
  sub->add_option("--f", o->f, "first morphism values or @file")->required();
  sub->add_option("--f-cod", o->f_cod, "first codomain size");
  sub->add_option("--g", o->g, "second morphism values or @file")->required();
  sub->add_option("--g-cod", o->g_cod, "second codomain size");
  sub->callback([o, g] {
    Morphism f = morphism_from_flags(o->f, o->f_cod);
    Morphism gm = morphism_from_flags(o->g, o->g_cod);
    knaster::AmalgamResult r = knaster::amalgamate(f, gm);
    Json out;
    out["f_prime"] = knaster::morphism_to_json(r.f_prime);
    out["g_prime"] = knaster::morphism_to_json(r.g_prime);
    out["plan"] = knaster::plan_to_json(r.plan);
    Morphism left = knaster::compose(f, r.f_prime);
    out["composite"] = knaster::morphism_to_json(left);
    if (g->check) {
      if (!(left == knaster::compose(gm, r.g_prime))) {
        knaster::fail("InternalError", "amalgamation replay mismatch");
      }
      out["checked"] = true;
    }
    emit(out);
  });
}

void add_joint_project(CLI::App& app) {
  auto* sub = app.add_subcommand("joint-project",
                                 "Common cover of two objects with projections");
  struct O {
    int a = 0, b = 0;
  };
  auto o = std::make_shared<O>();
  sub->add_option("--a", o->a, "first object size")->required();
  sub->add_option("--b", o->b, "second object size")->required();
  sub->callback([o] {
    knaster::JointProjection jp =
        knaster::joint_project(LinearGraph{o->a}, LinearGraph{o->b});
    Json out;
    out["c"] = jp.c.n;
    out["p_a"] = knaster::morphism_to_json(jp.p_a);
    out["p_b"] = knaster::morphism_to_json(jp.p_b);
    emit(out);
  });
}

void add_generic_build(CLI::App& app, const std::shared_ptr<Globals>& g) {
  auto* sub = app.add_subcommand(
      "generic-build", "Build a saturated tower (certificates included)");
  struct O {
    std::string category = "k";
    int budget = 0;
  };
  auto o = std::make_shared<O>();
  sub->add_option("--category", o->category, "k or kstar (default k)");
  sub->add_option("--budget", o->budget, "maximum tower levels")->required();
  sub->callback([o, g] {
    GenericSequence seq =
        knaster::build_generic(parse_category(o->category), o->budget, g->seed);
    Json out;
    out["levels"] = seq.levels();
    out["certificates"] = seq.certificates.size();
    out["unfulfilled"] = seq.unfulfilled.size();
    if (g->check) {
      knaster::VerificationReport rep = knaster::verify_sequence(seq);
      if (!rep.ok) knaster::fail("InternalError", "fresh tower failed verification");
      out["checked"] = true;
    }
    out["sequence"] = knaster::sequence_to_json(seq);
    emit(out);
  });
}

void add_generic_verify(CLI::App& app) {
  auto* sub = app.add_subcommand(
      "generic-verify", "Replay every certificate of a stored tower");
  struct O {
    std::string seq;
  };
  auto o = std::make_shared<O>();
  sub->add_option("--seq", o->seq, "sequence JSON or @file")->required();
  sub->callback([o] {
    GenericSequence seq =
        knaster::sequence_from_json(knaster::parse_json_text(resolve_at(o->seq)));
    knaster::VerificationReport rep = knaster::verify_sequence(seq);
    Json out;
    out["ok"] = rep.ok;
    out["problems"] = rep.problems;
    emit(out);
    if (!rep.ok) knaster::fail("VerificationFailed", "sequence did not verify");
  });
}

void add_separate(CLI::App& app, const std::shared_ptr<Globals>& g) {
  auto* sub = app.add_subcommand(
      "separate", "Extend a tower so two level vertices get fiber distance > 2");
  struct O {
    std::string seq;
    int level = 1, x = 0, y = 0;
  };
  auto o = std::make_shared<O>();
  sub->add_option("--seq", o->seq, "sequence JSON or @file (default: one fresh level)");
  sub->add_option("--level", o->level, "level holding the vertices (default 1)");
  sub->add_option("--x", o->x, "first vertex")->required();
  sub->add_option("--y", o->y, "second vertex")->required();
  sub->callback([o, g] {
    GenericSequence seq =
        sequence_from_flag(o->seq, std::max(o->x, o->y) + 1);
    knaster::SeparationRecord rec =
        knaster::separation_extension(seq, o->level, o->x, o->y);
    Json out;
    Json jr;
    jr["level"] = rec.level;
    jr["x"] = rec.x;
    jr["y"] = rec.y;
    jr["padded_vertex"] = rec.padded_vertex;
    jr["answer_level"] = rec.answer_level;
    out["record"] = std::move(jr);
    if (g->check) {
      int dist = knaster::fiber_distance(seq, rec.level, rec.answer_level, rec.x, rec.y);
      if (dist <= 2) knaster::fail("InternalError", "separation replay mismatch");
      out["fiber_distance"] = dist;
      out["checked"] = true;
    }
    out["sequence"] = knaster::sequence_to_json(seq);
    emit(out);
  });
}

void add_realize_degree(CLI::App& app, const std::shared_ptr<Globals>& g) {
  auto* sub = app.add_subcommand(
      "realize-degree", "Stage-1 automorphism approximation of degree p/q");
  struct O {
    std::string seq;
    int p = 0, q = 0;
  };
  auto o = std::make_shared<O>();
  sub->add_option("--seq", o->seq, "sequence JSON or @file (default: fresh 2-vertex level)");
  sub->add_option("--p", o->p, "numerator degree")->required();
  sub->add_option("--q", o->q, "denominator degree")->required();
  sub->callback([o, g] {
    GenericSequence seq = sequence_from_flag(o->seq, 2);
    knaster::AutomorphismApprox a = knaster::realize_degree(seq, o->p, o->q);
    Rational d = knaster::approx_degree(a, seq);
    Json out;
    out["i1"] = a.i1;
    out["g1"] = knaster::morphism_to_json(a.g1);
    out["approx_degree"] = knaster::rational_to_json(d);
    if (g->check) {
      if (d != Rational(o->p, o->q)) {
        knaster::fail("InternalError", "approximation degree replay mismatch");
      }
      out["checked"] = true;
    }
    out["sequence"] = knaster::sequence_to_json(seq);
    emit(out);
  });
}

void add_ramsey_number(CLI::App& app) {
  auto* sub = app.add_subcommand(
      "ramsey-number", "Least n so every coloring admits a monochromatic subset");
  struct O {
    int k = 0, m = 0, d = 0, cap = -1;
  };
  auto o = std::make_shared<O>();
  sub->add_option("-k,--tuple-size", o->k, "size of the colored subsets")->required();
  sub->add_option("-m,--subset-size", o->m, "size of the monochromatic subset")->required();
  sub->add_option("-d,--colors", o->d, "number of colors")->required();
  sub->add_option("--cap", o->cap, "search cap (default: KNASTER_RAMSEY_CAP or 10)");
  sub->callback([o] {
    int cap = o->cap >= 0 ? o->cap : default_ramsey_cap();
    knaster::RamseyResult r = knaster::ramsey_number(o->k, o->m, o->d, cap);
    if (r.known) {
      std::cout << r.value << "\n";
    } else {
      std::cout << "unknown\n";
    }
  });
}

void add_ramsey_witness(CLI::App& app) {
  auto* sub = app.add_subcommand(
      "ramsey-witness", "Witness object for a coloring problem (A, B, d)");
  struct O {
    int a_n = 0, b_n = 0, d = 0, cap = -1;
    std::string a_w = "1", b_w = "1";
  };
  auto o = std::make_shared<O>();
  sub->add_option("--a-n", o->a_n, "vertex count of A")->required();
  sub->add_option("--a-weight", o->a_w, "weight of A (rational, default 1)");
  sub->add_option("--b-n", o->b_n, "vertex count of B")->required();
  sub->add_option("--b-weight", o->b_w, "weight of B (rational, default 1)");
  sub->add_option("-d,--colors", o->d, "number of colors")->required();
  sub->add_option("--cap", o->cap, "search cap (default: KNASTER_RAMSEY_CAP or 10)");
  sub->callback([o] {
    int cap = o->cap >= 0 ? o->cap : default_ramsey_cap();
    AnnotatedObject a{LinearGraph{o->a_n}, knaster::parse_rational(o->a_w)};
    AnnotatedObject b{LinearGraph{o->b_n}, knaster::parse_rational(o->b_w)};
    knaster::WitnessResult w = knaster::witness(a, b, o->d, cap);
    Json out;
    switch (w.kind) {
      case knaster::WitnessResult::Kind::Found: {
        out["kind"] = "found";
        Json c;
        c["n"] = w.c.graph.n;
        c["weight"] = knaster::rational_to_json(w.c.weight);
        out["c"] = std::move(c);
        break;
      }
      case knaster::WitnessResult::Kind::Vacuous:
        out["kind"] = "vacuous";
        break;
      case knaster::WitnessResult::Kind::Unknown:
        out["kind"] = "unknown";
        break;
    }
    emit(out);
  });
}

void add_mono_search(CLI::App& app, const std::shared_ptr<Globals>& g) {
  auto* sub = app.add_subcommand(
      "mono-search", "Find g: C -> B on which a coloring of Epi(C,A) is constant");
  struct O {
    int c_n = 0, b_n = 0, a_n = 0, d = 0;
    std::string c_w = "1", b_w = "1", a_w = "1", coloring;
    bool random = false;
  };
  auto o = std::make_shared<O>();
  sub->add_option("--c-n", o->c_n, "vertex count of C")->required();
  sub->add_option("--c-weight", o->c_w, "weight of C (default 1)");
  sub->add_option("--b-n", o->b_n, "vertex count of B")->required();
  sub->add_option("--b-weight", o->b_w, "weight of B (default 1)");
  sub->add_option("--a-n", o->a_n, "vertex count of A")->required();
  sub->add_option("--a-weight", o->a_w, "weight of A (default 1)");
  sub->add_option("-d,--colors", o->d, "number of colors")->required();
  sub->add_option("--coloring", o->coloring,
                  "comma list or @file, one color per Epi(C,A) element in "
                  "lexicographic order");
  sub->add_flag("--random", o->random, "draw the coloring uniformly from --seed");
  sub->callback([o, g] {
    AnnotatedObject c{LinearGraph{o->c_n}, knaster::parse_rational(o->c_w)};
    AnnotatedObject b{LinearGraph{o->b_n}, knaster::parse_rational(o->b_w)};
    AnnotatedObject a{LinearGraph{o->a_n}, knaster::parse_rational(o->a_w)};
    Coloring coloring;
    coloring.d = o->d;
    if (o->random) {
      if (!o->coloring.empty()) {
        throw CLI::ValidationError("mono-search", "--coloring and --random are exclusive");
      }
      Rational ratio = c.weight / a.weight;
      std::uint64_t total = 0;
      if (denominator(ratio) == 1 && numerator(ratio) >= 1 &&
          numerator(ratio) <= 1'000'000) {
        total = knaster::count_epi_of_degree(
            c.graph, a.graph, static_cast<int>(numerator(ratio)));
      }
      std::mt19937_64 rng(g->seed);
      for (std::uint64_t i = 0; i < total; ++i) {
        coloring.assignment.push_back(static_cast<int>(
            knaster::uniform_u64(rng, static_cast<std::uint64_t>(o->d))));
      }
    } else {
      if (o->coloring.empty()) {
        throw CLI::ValidationError("mono-search", "need --coloring or --random");
      }
      std::string body = resolve_at(o->coloring);
      std::size_t first = body.find_first_not_of(" \t\r\n");
      if (first != std::string::npos && body[first] == '[') {
        coloring.assignment =
            knaster::parse_json_text(body).get<std::vector<int>>();
      } else {
        coloring.assignment = parse_int_list(body);
      }
    }
    knaster::MonoSearchResult r = knaster::find_monochromatic(c, b, a, coloring);
    Json out;
    out["g"] = knaster::morphism_to_json(r.g);
    out["color"] = r.color;
    out["coloring_size"] = coloring.assignment.size();
    emit(out);
  });
}

void add_degree_color(CLI::App& app) {
  auto* sub = app.add_subcommand(
      "degree-color", "2-adic valuation of the degree, mod n");
  struct O {
    std::string values;
    int cod = 0, n = 0;
  };
  auto o = std::make_shared<O>();
  sub->add_option("--values", o->values, "morphism values or @file")->required();
  sub->add_option("--cod", o->cod, "codomain size");
  sub->add_option("-n,--colors", o->n, "number of colors")->required();
  sub->callback([o] {
    Morphism m = morphism_from_flags(o->values, o->cod);
    Json out;
    out["degree"] = knaster::degree(m);
    out["color"] = knaster::degree_coloring(m, o->n);
    emit(out);
  });
}

void add_infinite_degree(CLI::App& app, const std::shared_ptr<Globals>& g) {
  auto* sub = app.add_subcommand(
      "infinite-degree",
      "Check the 2-adic coloring attains every color on Epi(B,A) composed with "
      "sampled maps");
  struct O {
    int n = 0, c_n = 0, samples = 0;
  };
  auto o = std::make_shared<O>();
  sub->add_option("-n,--colors", o->n, "number of colors")->required();
  sub->add_option("--c-n", o->c_n, "vertex count of the test domain C")->required();
  sub->add_option("--samples", o->samples, "sampled maps C -> B (default 0)");
  sub->callback([o, g] {
    std::mt19937_64 rng(g->seed);
    knaster::InfiniteDegreeReport rep =
        knaster::infinite_degree_check(o->n, LinearGraph{o->c_n}, o->samples, rng);
    Json out;
    out["colors"] = rep.colors;
    out["checked"] = rep.checked;
    out["all_colors_every_time"] = rep.all_colors_every_time;
    emit(out);
  });
}

void add_tent(CLI::App& app) {
  auto* sub = app.add_subcommand("tent", "Standard degree-d tent map");
  struct O {
    int d = 0;
  };
  auto o = std::make_shared<O>();
  sub->add_option("-d,--degree", o->d, "degree")->required();
  sub->callback([o] { emit(knaster::plmap_to_json(knaster::tent(o->d))); });
}

void add_lift(CLI::App& app) {
  auto* sub = app.add_subcommand(
      "lift", "PL open map through a morphism's change points");
  struct O {
    std::string values;
    int cod = 0;
  };
  auto o = std::make_shared<O>();
  sub->add_option("--values", o->values, "morphism values or @file")->required();
  sub->add_option("--cod", o->cod, "codomain size");
  sub->callback([o] {
    emit(knaster::plmap_to_json(knaster::lift(morphism_from_flags(o->values, o->cod))));
  });
}

void add_commute(CLI::App& app) {
  auto* sub = app.add_subcommand(
      "commute", "Exact commutation check of two tent maps");
  struct O {
    int c = 0, d = 0;
  };
  auto o = std::make_shared<O>();
  sub->add_option("-c,--first", o->c, "first tent degree")->required();
  sub->add_option("-d,--second", o->d, "second tent degree")->required();
  sub->callback([o] {
    Json out;
    out["commute"] = knaster::commute_check(o->c, o->d);
    emit(out);
  });
}

void add_chain_tower(CLI::App& app, const std::shared_ptr<Globals>& g) {
  auto* sub = app.add_subcommand(
      "chain-tower", "Build and certify a tower of fine chains");
  struct O {
    std::string degrees;
    int levels = 0;
    bool emit_chains = false;
  };
  auto o = std::make_shared<O>();
  sub->add_option("--degrees", o->degrees, "comma list of tent degrees")->required();
  sub->add_option("--levels", o->levels, "number of chains")->required();
  sub->add_flag("--emit-chains", o->emit_chains,
                "include full link data (large for deep towers)");
  sub->callback([o, g] {
    ChainTower t = knaster::chain_tower(parse_int_list(o->degrees), o->levels);
    knaster::validate_tower(t, g->jobs);
    Json out;
    out["levels"] = t.chains.size();
    out["tent_degrees"] = t.tent_degrees;
    Json counts = Json::array(), eps = Json::array(), meshes = Json::array();
    for (const Chain& c : t.chains) {
      counts.push_back(c.links.size());
      eps.push_back(knaster::rational_to_json(c.epsilon));
      meshes.push_back(knaster::rational_to_json(knaster::chain_mesh(c)));
    }
    out["link_counts"] = std::move(counts);
    out["epsilons"] = std::move(eps);
    out["meshes"] = std::move(meshes);
    out["validated"] = true;
    if (o->emit_chains) out["chains"] = knaster::tower_to_json(t)["chains"];
    emit(out);
  });
}

void add_discretize(CLI::App& app, const std::shared_ptr<Globals>& g) {
  auto* sub = app.add_subcommand(
      "discretize", "Morphism induced by a PL map between two chains");
  struct O {
    std::string degrees, pl, fine, coarse;
    int levels = 0, level = 0;
  };
  auto o = std::make_shared<O>();
  sub->add_option("--degrees", o->degrees, "tower tent degrees (tower mode)");
  sub->add_option("--levels", o->levels, "tower levels (tower mode)");
  sub->add_option("--level", o->level, "coarse level index in the tower (tower mode)");
  sub->add_option("--pl", o->pl, "PL map JSON or @file (overrides the tent)");
  sub->add_option("--fine", o->fine, "fine chain JSON or @file (explicit mode)");
  sub->add_option("--coarse", o->coarse, "coarse chain JSON or @file (explicit mode)");
  sub->callback([o, g] {
    PLOpenMap t;
    Chain fine, coarse;
    if (!o->fine.empty() || !o->coarse.empty()) {
      if (o->fine.empty() || o->coarse.empty()) {
        throw CLI::ValidationError("discretize", "--fine and --coarse go together");
      }
      if (o->pl.empty()) {
        throw CLI::ValidationError("discretize", "--pl is required with explicit chains");
      }
      t = knaster::plmap_from_json(knaster::parse_json_text(resolve_at(o->pl)));
      fine = knaster::chain_from_json(knaster::parse_json_text(resolve_at(o->fine)));
      coarse = knaster::chain_from_json(knaster::parse_json_text(resolve_at(o->coarse)));
    } else {
      if (o->degrees.empty() || o->levels <= 0) {
        throw CLI::ValidationError(
            "discretize", "give --degrees/--levels/--level or --pl/--fine/--coarse");
      }
      ChainTower tower = knaster::chain_tower(parse_int_list(o->degrees), o->levels);
      if (o->level < 0 || o->level + 1 >= static_cast<int>(tower.chains.size())) {
        throw CLI::ValidationError("discretize", "--level must address an adjacent pair");
      }
      t = o->pl.empty()
              ? knaster::tent(tower.tent_degrees[static_cast<std::size_t>(o->level)])
              : knaster::plmap_from_json(knaster::parse_json_text(resolve_at(o->pl)));
      fine = tower.chains[static_cast<std::size_t>(o->level) + 1];
      coarse = tower.chains[static_cast<std::size_t>(o->level)];
    }
    Morphism m = knaster::discretize(t, fine, coarse);
    Json out;
    out["degree"] = knaster::degree(m);
    if (g->check) {
      if (knaster::degree(m) != knaster::pl_degree(t)) {
        knaster::fail("InternalError", "discretization degree replay mismatch");
      }
      out["checked"] = true;
    }
    out["morphism"] = knaster::morphism_to_json(m);
    emit(out);
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact combinatorics of pointed linear graph epimorphisms, "
               "their Fraisse towers, Ramsey data, and chain discretizations"};
  app.require_subcommand(1);
  app.fallthrough();
  auto globals = std::make_shared<Globals>();
  app.add_option("--seed", globals->seed, "PRNG seed for randomized verbs (default 0)");
  app.add_option("--jobs", globals->jobs, "worker threads where supported (default 1)");
  app.add_flag("--check", globals->check, "re-verify emitted certificates");

  add_validate(app);
  add_compose(app);
  add_enumerate(app, globals);
  add_amalgamate(app, globals);
  add_joint_project(app);
  add_generic_build(app, globals);
  add_generic_verify(app);
  add_separate(app, globals);
  add_realize_degree(app, globals);
  add_ramsey_number(app);
  add_ramsey_witness(app);
  add_mono_search(app, globals);
  add_degree_color(app);
  add_infinite_degree(app, globals);
  add_tent(app);
  add_discretize(app, globals);
  add_lift(app);
  add_chain_tower(app, globals);
  add_commute(app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const knaster::DomainError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "InternalError: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
