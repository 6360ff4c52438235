#include "sklyanin/presentation.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

namespace sklyanin {

namespace {

NcPoly x(std::size_t k) { return NcPoly::generator(k); }

bool degenerate(const TowerScalar& t) { return t.is_zero() || t == TowerScalar(1) || t == TowerScalar(-1); }

}  // namespace

Parameters derive_parameters(const TowerScalar& beta, const TowerScalar& gamma) {
  const TowerScalar denom = TowerScalar(1) + beta * gamma;
  if (denom.is_zero()) throw Error(ErrorCode::DegenerateParameter, "1 + beta*gamma = 0");
  return {-(beta + gamma) / denom, beta, gamma};
}

ParameterCheck validate_parameters(const Parameters& p) {
  ParameterCheck check;
  if (!(p.alpha + p.beta + p.gamma + p.alpha * p.beta * p.gamma).is_zero())
    check.issues.push_back(ErrorCode::ConstraintViolated);
  if (degenerate(p.alpha) || degenerate(p.beta) || degenerate(p.gamma))
    check.issues.push_back(ErrorCode::DegenerateParameter);
  return check;
}

std::size_t Presentation::max_relation_degree() const {
  std::size_t d = 0;
  for (const auto& r : relations)
    if (!r.is_zero()) d = std::max(d, r.degree());
  return d;
}

Presentation sklyanin_presentation(const Parameters& params) {
  const auto check = validate_parameters(params);
  if (!check.ok())
    throw Error(check.issues.front(), "alpha=" + params.alpha.to_string() + " beta=" + params.beta.to_string() +
                                          " gamma=" + params.gamma.to_string());
  Presentation p;
  p.params = params;
  p.relations = {
      commutator(x(0), x(1)) - params.alpha * anticommutator(x(2), x(3)),
      anticommutator(x(0), x(1)) - commutator(x(2), x(3)),
      commutator(x(0), x(2)) - params.beta * anticommutator(x(3), x(1)),
      anticommutator(x(0), x(2)) - commutator(x(3), x(1)),
      commutator(x(0), x(3)) - params.gamma * anticommutator(x(1), x(2)),
      anticommutator(x(0), x(3)) - commutator(x(1), x(2)),
  };
  return p;
}

Presentation quotient(const Presentation& p, const std::vector<NcPoly>& extra) {
  Presentation q = p;
  for (const auto& f : extra) {
    if (!f.is_homogeneous()) throw Error(ErrorCode::Inhomogeneous, f.to_string(p.prefix));
    if (!f.is_zero()) q.relations.push_back(f);
  }
  return q;
}

NcPoly omega1(const Parameters&) { return -(x(0) * x(0)) + x(1) * x(1) + x(2) * x(2) + x(3) * x(3); }

NcPoly omega2(const Parameters& p) {
  const TowerScalar one(1);
  return x(1) * x(1) + ((one + p.alpha) / (one - p.beta)) * (x(2) * x(2)) +
         ((one - p.alpha) / (one + p.gamma)) * (x(3) * x(3));
}

NcPoly theta1(const Parameters&) { return -(x(0) * x(0)) + x(1) * x(1) + x(2) * x(2) - x(3) * x(3); }

NcPoly theta2(const Parameters& p) {
  const TowerScalar one(1);
  return x(1) * x(1) + ((one + p.alpha) / (one - p.beta)) * (x(2) * x(2)) -
         ((one - p.alpha) / (one + p.gamma)) * (x(3) * x(3));
}

nlohmann::json to_json(const Presentation& p) {
  nlohmann::json j;
  nlohmann::json gens = nlohmann::json::array();
  nlohmann::json degs = nlohmann::json::array();
  for (std::size_t k = 0; k < kGenerators; ++k) {
    gens.push_back(std::string(1, p.prefix) + std::to_string(k));
    degs.push_back(p.g_degrees[k].to_string());
  }
  j["generators"] = gens;
  j["g_degrees"] = degs;
  nlohmann::json rels = nlohmann::json::array();
  for (const auto& r : p.relations) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [w, c] : r.terms())
      terms.push_back({{"word", w.letters()}, {"coeff", c.to_string()}});
    rels.push_back(terms);
  }
  j["relations"] = rels;
  if (p.params)
    j["params"] = {{"alpha", p.params->alpha.to_string()},
                   {"beta", p.params->beta.to_string()},
                   {"gamma", p.params->gamma.to_string()}};
  return j;
}

Presentation presentation_from_json(const nlohmann::json& j, const FieldSpecPtr& spec) {
  try {
    Presentation p;
    const auto gens = j.at("generators");
    if (gens.size() != kGenerators) throw Error(ErrorCode::Parse, "expected four generators");
    const auto first = gens.at(0).get<std::string>();
    if (first.empty()) throw Error(ErrorCode::Parse, "empty generator name");
    p.prefix = first.front();
    const auto degs = j.at("g_degrees");
    for (std::size_t k = 0; k < kGenerators; ++k) {
      const auto name = degs.at(k).get<std::string>();
      bool found = false;
      for (auto g : KleinElement::all())
        if (g.to_string() == name) {
          p.g_degrees[k] = g;
          found = true;
        }
      if (!found) throw Error(ErrorCode::Parse, "unknown group element '" + name + "'");
    }
    for (const auto& rel : j.at("relations")) {
      NcPoly f;
      for (const auto& term : rel) {
        std::vector<std::uint8_t> letters;
        for (const auto& l : term.at("word")) {
          const auto v = l.get<int>();
          if (v < 0 || v >= static_cast<int>(kGenerators)) throw Error(ErrorCode::Parse, "generator index out of range");
          letters.push_back(static_cast<std::uint8_t>(v));
        }
        f.add(Word(std::move(letters)), TowerScalar::parse(term.at("coeff").get<std::string>(), spec));
      }
      if (!f.is_homogeneous()) throw Error(ErrorCode::Inhomogeneous, f.to_string(p.prefix));
      p.relations.push_back(std::move(f));
    }
    if (j.contains("params")) {
      const auto& q = j.at("params");
      p.params = Parameters{TowerScalar::parse(q.at("alpha").get<std::string>(), spec),
                            TowerScalar::parse(q.at("beta").get<std::string>(), spec),
                            TowerScalar::parse(q.at("gamma").get<std::string>(), spec)};
    }
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Parse, e.what());
  }
}

}  // namespace sklyanin
