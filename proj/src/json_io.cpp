// json_io.cpp — conversions between library types and their JSON wire form.
#include "knaster/json_io.hpp"

#include <utility>

#include "knaster/error.hpp"

namespace knaster {

namespace {

// nlohmann throws its own exception hierarchy on missing keys / bad types;
// surface those uniformly as JsonParse while letting DomainError pass.
template <class F>
auto guarded(F&& f) {
  try {
    return f();
  } catch (const DomainError&) {
    throw;
  } catch (const std::exception& e) {
    fail("JsonParse", e.what());
  }
}

}  // namespace

Json parse_json_text(const std::string& text) {
  return guarded([&] { return Json::parse(text); });
}

Json rational_to_json(const Rational& q) {
  return Json::array({num_i64(q), den_i64(q)});
}

Rational rational_from_json(const Json& j) {
  return guarded([&] {
    if (!j.is_array() || j.size() != 2) {
      fail("JsonParse", "a rational is a [numerator, denominator] pair");
    }
    std::int64_t num = j[0].get<std::int64_t>();
    std::int64_t den = j[1].get<std::int64_t>();
    if (den == 0) fail("RationalParse", "zero denominator");
    return Rational(BigInt(num), BigInt(den));
  });
}

Json morphism_to_json(const Morphism& f) {
  Json j;
  j["dom"] = f.dom;
  j["cod"] = f.cod;
  j["values"] = f.values;
  return j;
}

Morphism morphism_from_json(const Json& j) {
  return guarded([&] {
    int dom = j.at("dom").get<int>();
    int cod = j.at("cod").get<int>();
    std::vector<int> values = j.at("values").get<std::vector<int>>();
    return validate(dom, cod, std::move(values));
  });
}

Json plmap_to_json(const PLOpenMap& f) {
  Json pts = Json::array();
  for (const PLBreakpoint& p : f.points) {
    pts.push_back(Json::array({rational_to_json(p.x), rational_to_json(p.y)}));
  }
  Json j;
  j["degree"] = pl_degree(f);
  j["points"] = std::move(pts);
  return j;
}

PLOpenMap plmap_from_json(const Json& j) {
  return guarded([&] {
    const Json& pts = j.is_array() ? j : j.at("points");
    std::vector<PLBreakpoint> points;
    for (const Json& p : pts) {
      if (!p.is_array() || p.size() != 2) {
        fail("JsonParse", "a breakpoint is an [x, y] pair of rationals");
      }
      points.push_back(
          PLBreakpoint{rational_from_json(p[0]), rational_from_json(p[1])});
    }
    return make_pl(std::move(points));
  });
}

Json chain_to_json(const Chain& c) {
  Json links = Json::array();
  for (const ChainLink& l : c.links) {
    links.push_back(Json::array({rational_to_json(l.lo), rational_to_json(l.hi)}));
  }
  Json j;
  j["links"] = std::move(links);
  j["epsilon"] = rational_to_json(c.epsilon);
  return j;
}

Chain chain_from_json(const Json& j) {
  return guarded([&] {
    Chain c;
    for (const Json& l : j.at("links")) {
      if (!l.is_array() || l.size() != 2) {
        fail("JsonParse", "a link is a [lo, hi] pair of rationals");
      }
      c.links.push_back(ChainLink{rational_from_json(l[0]), rational_from_json(l[1])});
    }
    c.epsilon = rational_from_json(j.at("epsilon"));
    return c;
  });
}

Json tower_to_json(const ChainTower& t) {
  Json chains = Json::array();
  for (const Chain& c : t.chains) chains.push_back(chain_to_json(c));
  Json j;
  j["tent_degrees"] = t.tent_degrees;
  j["chains"] = std::move(chains);
  return j;
}

ChainTower tower_from_json(const Json& j) {
  return guarded([&] {
    ChainTower t;
    t.tent_degrees = j.at("tent_degrees").get<std::vector<int>>();
    for (const Json& c : j.at("chains")) t.chains.push_back(chain_from_json(c));
    return t;
  });
}

Json plan_to_json(const AmalgamationPlan& p) {
  Json segments = Json::array();
  for (const std::pair<int, int>& s : p.segments) {
    segments.push_back(Json::array({s.first, s.second}));
  }
  Json j;
  j["alpha"] = p.alpha;
  j["beta"] = p.beta;
  j["piece_sizes"] = p.piece_sizes;
  j["segments"] = std::move(segments);
  j["total"] = p.total;
  return j;
}

Json sequence_to_json(const GenericSequence& s) {
  Json objects = Json::array();
  for (const AnnotatedObject& o : s.objects) {
    Json jo;
    jo["n"] = o.graph.n;
    jo["weight"] = rational_to_json(o.weight);
    objects.push_back(std::move(jo));
  }
  Json bonds = Json::array();
  for (const Morphism& b : s.bonds) bonds.push_back(morphism_to_json(b));
  Json certs = Json::array();
  for (const SaturationCertificate& c : s.certificates) {
    Json jc;
    jc["level"] = c.level;
    jc["e"] = morphism_to_json(c.e);
    jc["g"] = morphism_to_json(c.g);
    jc["answer_level"] = c.answer_level;
    jc["h"] = morphism_to_json(c.h);
    certs.push_back(std::move(jc));
  }
  Json seps = Json::array();
  for (const SeparationRecord& r : s.separations) {
    Json jr;
    jr["level"] = r.level;
    jr["x"] = r.x;
    jr["y"] = r.y;
    jr["padded_vertex"] = r.padded_vertex;
    jr["answer_level"] = r.answer_level;
    seps.push_back(std::move(jr));
  }
  Json open = Json::array();
  for (const SaturationRequest& r : s.unfulfilled) {
    Json jr;
    jr["level"] = r.level;
    jr["e"] = morphism_to_json(r.e);
    jr["g"] = morphism_to_json(r.g);
    open.push_back(std::move(jr));
  }
  Json j;
  j["category"] = s.category == Category::Kstar ? "Kstar" : "K";
  j["objects"] = std::move(objects);
  j["bonds"] = std::move(bonds);
  j["certificates"] = std::move(certs);
  j["separations"] = std::move(seps);
  j["unfulfilled"] = std::move(open);
  return j;
}

GenericSequence sequence_from_json(const Json& j) {
  return guarded([&] {
    GenericSequence s;
    std::string cat = j.at("category").get<std::string>();
    if (cat == "K") {
      s.category = Category::K;
    } else if (cat == "Kstar") {
      s.category = Category::Kstar;
    } else {
      fail("JsonParse", "category must be \"K\" or \"Kstar\"");
    }
    for (const Json& o : j.at("objects")) {
      AnnotatedObject obj;
      obj.graph.n = o.at("n").get<int>();
      obj.weight = rational_from_json(o.at("weight"));
      s.objects.push_back(std::move(obj));
    }
    for (const Json& b : j.at("bonds")) s.bonds.push_back(morphism_from_json(b));
    for (const Json& c : j.at("certificates")) {
      SaturationCertificate cert;
      cert.level = c.at("level").get<int>();
      cert.e = morphism_from_json(c.at("e"));
      cert.g = morphism_from_json(c.at("g"));
      cert.answer_level = c.at("answer_level").get<int>();
      cert.h = morphism_from_json(c.at("h"));
      s.certificates.push_back(std::move(cert));
    }
    for (const Json& r : j.at("separations")) {
      SeparationRecord rec;
      rec.level = r.at("level").get<int>();
      rec.x = r.at("x").get<int>();
      rec.y = r.at("y").get<int>();
      rec.padded_vertex = r.at("padded_vertex").get<int>();
      rec.answer_level = r.at("answer_level").get<int>();
      s.separations.push_back(rec);
    }
    for (const Json& r : j.at("unfulfilled")) {
      SaturationRequest req;
      req.level = r.at("level").get<int>();
      req.e = morphism_from_json(r.at("e"));
      req.g = morphism_from_json(r.at("g"));
      s.unfulfilled.push_back(std::move(req));
    }
    return s;
  });
}

}  // namespace knaster
