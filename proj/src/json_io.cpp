#include "berncone/json_io.hpp"

#include <nlohmann/json.hpp>

#include <fstream>

#include "berncone/errors.hpp"

namespace berncone {

using nlohmann::json;

namespace {

Rational rational_from_fields(const json& j) {
  const std::string num = j.at("num").get<std::string>();
  const std::string den = j.value("den", std::string("1"));
  const Rational denominator = parse_rational(den);
  if (denominator == 0) throw ParseError("zero denominator in '" + num + "/" + den + "'");
  return parse_rational(num) / denominator;
}

json rational_to_fields(const Rational& value) {
  return json{{"num", numerator_string(value)}, {"den", denominator_string(value)}};
}

MultiIndex index_from_json(const json& j) {
  MultiIndex index;
  for (const auto& e : j) {
    const int v = e.get<int>();
    if (v < 0) throw ParseError("negative exponent in index");
    index.push_back(v);
  }
  return index;
}

template <typename Fn>
auto guard(Fn&& fn) {
  try {
    return fn();
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed document: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("invalid value: ") + e.what());
  }
}

}  // namespace

json polynomial_to_json(const Polynomial& p) {
  json terms = json::array();
  for (const auto& [exponents, value] : p.terms()) {
    json term = rational_to_fields(value);
    term["exp"] = exponents;
    terms.push_back(std::move(term));
  }
  return json{{"n_vars", p.n_vars()}, {"terms", std::move(terms)}};
}

Polynomial polynomial_from_json(const json& j) {
  return guard([&] {
    Polynomial p(j.at("n_vars").get<int>());
    for (const auto& term : j.at("terms")) {
      p.add_term(index_from_json(term.at("exp")), rational_from_fields(term));
    }
    return p;
  });
}

json gambles_to_json(const AssessmentSet& assessments) {
  json gambles = json::array();
  for (const Polynomial& g : assessments.gambles) gambles.push_back(polynomial_to_json(g));
  return json{{"gambles", std::move(gambles)}};
}

AssessmentSet gambles_from_json(const json& j) {
  return guard([&] {
    std::vector<Polynomial> gambles;
    for (const auto& g : j.at("gambles")) gambles.push_back(polynomial_from_json(g));
    if (gambles.empty()) throw ParseError("gamble set is empty; n_vars is undetermined");
    const int n_vars = gambles.front().n_vars();
    return AssessmentSet::of(n_vars, std::move(gambles));
  });
}

json certificate_to_json(const Certificate& certificate) {
  json weights = json::array();
  for (const auto& [index, value] : certificate.weights) {
    json w = rational_to_fields(value);
    w["index"] = index;
    weights.push_back(std::move(w));
  }
  return json{{"degree", certificate.degree}, {"weights", std::move(weights)}};
}

Certificate certificate_from_json(const json& j) {
  return guard([&] {
    Certificate certificate{j.at("degree").get<int>(), {}};
    for (const auto& w : j.at("weights")) {
      certificate.weights.emplace(index_from_json(w.at("index")), rational_from_fields(w));
    }
    return certificate;
  });
}

json domain_to_json(const SemiAlgebraicDomain& domain) {
  json constraints = json::array();
  for (int k = 0; k < domain.constraint_count(); ++k) {
    json c;
    c["terms"] = polynomial_to_json(domain.raw_constraint(k)).at("terms");
    c["sup"] = to_fraction_string(domain.sup_value(k));
    constraints.push_back(std::move(c));
  }
  return json{{"n_vars", domain.n_vars()}, {"constraints", std::move(constraints)}};
}

SemiAlgebraicDomain domain_from_json(const json& j) {
  return guard([&] {
    const int n_vars = j.at("n_vars").get<int>();
    std::vector<Polynomial> constraints;
    std::vector<Rational> sups;
    for (const auto& c : j.at("constraints")) {
      Polynomial p(n_vars);
      for (const auto& term : c.at("terms")) {
        p.add_term(index_from_json(term.at("exp")), rational_from_fields(term));
      }
      constraints.push_back(std::move(p));
      sups.push_back(parse_rational(c.at("sup").get<std::string>()));
    }
    return normalize_domain(std::move(constraints), std::move(sups));
  });
}

json state_to_json(const MomentState& state) {
  json moments = json::array();
  for (const auto& [gamma, value] : state.moments()) {
    json m = rational_to_fields(value);
    m["exp"] = gamma;
    moments.push_back(std::move(m));
  }
  return json{{"n_vars", state.n_vars()},
              {"degree", state.degree()},
              {"moments", std::move(moments)}};
}

MomentState state_from_json(const json& j) {
  return guard([&] {
    std::map<MultiIndex, Rational> moments;
    for (const auto& m : j.at("moments")) {
      moments.emplace(index_from_json(m.at("exp")), rational_from_fields(m));
    }
    return MomentState(j.at("n_vars").get<int>(), j.at("degree").get<int>(),
                       std::move(moments));
  });
}

json prevision_to_json(const PrevisionResult& result) {
  json out;
  out["vacuous"] = result.vacuous;
  out["degree_used"] = result.degree_used;
  if (!result.vacuous) {
    out["value"] = rational_to_fields(result.value);
    out["value_float"] = to_double(result.value);
    json lambdas = json::array();
    for (const Rational& l : result.lambda_weights) lambdas.push_back(rational_to_fields(l));
    out["lambda"] = std::move(lambdas);
    out["certificate"] = certificate_to_json(result.certificate);
  }
  return out;
}

json verdict_to_json(const CoherenceVerdict& verdict) {
  json out;
  out["consistent"] = verdict.consistent;
  if (!verdict.consistent) {
    json lambdas = json::array();
    for (const Rational& l : verdict.witness_lambda) lambdas.push_back(rational_to_fields(l));
    out["witness"] = json{{"lambda", std::move(lambdas)},
                          {"certificate", certificate_to_json(*verdict.witness_certificate)}};
  }
  return out;
}

json parse_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  out << json_text(j);
}

std::string json_text(const json& j) { return j.dump(2) + "\n"; }

}  // namespace berncone
