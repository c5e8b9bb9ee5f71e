#include "pscalc/serialize.hpp"

namespace pscalc {

namespace {

Integer integer_field(const Json& json) {
  try {
    if (json.is_string()) return Integer(json.get<std::string>());
    if (json.is_number_integer()) return Integer(json.dump());
  } catch (const std::invalid_argument&) {
  }
  throw DomainError("expected an integer, got " + json.dump());
}

Json optional_or_null(const auto& value, auto&& convert) {
  return value ? convert(*value) : Json(nullptr);
}

// Wraps nlohmann's exceptions so malformed documents surface as DomainError.
template <typename F>
auto guarded(const char* what, F&& body) {
  try {
    return body();
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed ") + what + ": " + e.what());
  }
}

}  // namespace

Json to_json(const BernoulliRecord& record) {
  Json j;
  j["m"] = record.m;
  j["numerator"] = record.value.numerator().get_str();
  j["denominator"] = record.value.denominator().get_str();
  j["num_b_over_2m"] = record.num_b_over_2m.get_str();
  return j;
}

template <>
BernoulliRecord from_json(const Json& json) {
  return guarded("Bernoulli record", [&] {
    return BernoulliRecord{json.at("m").get<unsigned>(),
                           Rational(integer_field(json.at("numerator")),
                                    integer_field(json.at("denominator"))),
                           integer_field(json.at("num_b_over_2m"))};
  });
}

Json to_json(const ObstructionConstant& constant) {
  Json j;
  j["m"] = constant.m;
  j["value"] = constant.value.get_str();
  j["factors"] = Json::array();
  if (constant.m > 0) {
    j["factors"].push_back(constant.factor_power.get_str());
    j["factors"].push_back(constant.factor_num.get_str());
  }
  return j;
}

template <>
ObstructionConstant from_json(const Json& json) {
  return guarded("obstruction constant", [&] {
    ObstructionConstant c;
    c.m = json.at("m").get<unsigned>();
    c.value = integer_field(json.at("value"));
    const auto& factors = json.at("factors");
    if (factors.empty()) {
      c.factor_power = 1;
      c.factor_num = 1;
    } else {
      c.factor_power = integer_field(factors.at(0));
      c.factor_num = integer_field(factors.at(1));
    }
    return c;
  });
}

Json to_json(const AConstantRecord& record) {
  Json j;
  j["m"] = record.m;
  j["n"] = record.n;
  j["value"] = record.value.get_str();
  return j;
}

template <>
AConstantRecord from_json(const Json& json) {
  return guarded("A(m,n) record", [&] {
    return AConstantRecord{json.at("m").get<unsigned>(), json.at("n").get<unsigned>(),
                           integer_field(json.at("value"))};
  });
}

Json to_json(const SweepReport& report, bool include_seconds) {
  Json j;
  j["m_max"] = report.m_max;
  j["strategy"] = to_string(report.strategy);
  j["failures"] = report.failures;
  if (include_seconds) j["seconds"] = report.wall_time.count();
  return j;
}

template <>
SweepReport from_json(const Json& json) {
  return guarded("sweep report", [&] {
    SweepReport report;
    report.m_max = json.at("m_max").get<unsigned>();
    report.strategy = sweep_strategy_from_string(json.at("strategy").get<std::string>());
    report.failures = json.at("failures").get<std::vector<unsigned>>();
    if (json.contains("seconds")) {
      report.wall_time = std::chrono::duration<double>(json.at("seconds").get<double>());
    }
    return report;
  });
}

Json to_json(const PrimeRecord& record) {
  Json j;
  j["p"] = record.p;
  j["regular"] = record.regular;
  j["very_regular"] = record.very_regular;
  return j;
}

template <>
PrimeRecord from_json(const Json& json) {
  return guarded("prime record", [&] {
    return PrimeRecord{json.at("p").get<std::uint64_t>(), json.at("regular").get<bool>(),
                       json.at("very_regular").get<bool>()};
  });
}

Json to_json(const KOGroup& group) {
  Json j;
  j["degree"] = group.degree;
  j["kind"] = to_string(group.kind);
  j["generator"] = group.generator;
  return j;
}

template <>
KOGroup from_json(const Json& json) {
  return guarded("KO group", [&] {
    return KOGroup{json.at("degree").get<int>(),
                   ko_kind_from_string(json.at("kind").get<std::string>()),
                   json.at("generator").get<std::string>()};
  });
}

Json to_json(const KOElement& element) {
  Json j;
  j["degree"] = element.degree();
  j["coefficient"] = element.coefficient().get_str();
  j["generator"] = element.generator();
  return j;
}

template <>
KOElement from_json(const Json& json) {
  return guarded("KO element", [&] {
    return KOElement(json.at("degree").get<int>(), integer_field(json.at("coefficient")));
  });
}

Json to_json(const SurjectivityReport& report) {
  Json j;
  j["d"] = report.dimension;
  j["k"] = report.k;
  j["target"] = to_json(report.target);
  j["rational_surjective"] = report.rational_surjective;
  j["mod2_surjective"] = report.mod2_surjective;
  j["integrally_surjective"] = report.integrally_surjective;
  j["away_from_2"] = optional_or_null(report.away_from_two, [](const AwayFromTwoBound& b) {
    Json bound;
    bound["m"] = b.m;
    bound["n"] = b.n;
    bound["index_divides"] = b.index_divisor.get_str();
    return bound;
  });
  j["citations"] = report.citations;
  return j;
}

template <>
SurjectivityReport from_json(const Json& json) {
  return guarded("surjectivity report", [&] {
    SurjectivityReport report;
    report.dimension = json.at("d").get<int>();
    report.k = json.at("k").get<int>();
    report.target = from_json<KOGroup>(json.at("target"));
    report.rational_surjective = json.at("rational_surjective").get<bool>();
    report.mod2_surjective = json.at("mod2_surjective").get<bool>();
    report.integrally_surjective = json.at("integrally_surjective").get<bool>();
    if (const auto& b = json.at("away_from_2"); !b.is_null()) {
      report.away_from_two = AwayFromTwoBound{b.at("m").get<unsigned>(),
                                              b.at("n").get<unsigned>(),
                                              integer_field(b.at("index_divides"))};
    }
    report.citations = json.at("citations").get<std::vector<std::string>>();
    return report;
  });
}

Json to_json(const GenusRecord& record) {
  Json j;
  j["name"] = record.name;
  j["dimension"] = record.dimension;
  j["ahat"] = record.ahat.to_string();
  j["signature"] = record.signature.to_string();
  j["ko_ahat"] = optional_or_null(record.ko_ahat, [](const KOElement& e) { return to_json(e); });
  return j;
}

template <>
GenusRecord from_json(const Json& json) {
  return guarded("genus record", [&] {
    GenusRecord record;
    record.name = json.at("name").get<std::string>();
    record.dimension = json.at("dimension").get<unsigned>();
    record.ahat = Rational::parse(json.at("ahat").get<std::string>());
    record.signature = Rational::parse(json.at("signature").get<std::string>());
    if (const auto& e = json.at("ko_ahat"); !e.is_null()) {
      record.ko_ahat = from_json<KOElement>(e);
    }
    return record;
  });
}

Json to_json(const PontPolynomial& polynomial) {
  Json j;
  j["degree"] = polynomial.degree();
  j["text"] = polynomial.to_string();
  Json terms = Json::object();
  for (const auto& [monomial, coefficient] : polynomial.terms()) {
    terms[monomial.to_string()] = coefficient.to_string();
  }
  j["terms"] = std::move(terms);
  return j;
}

Json to_json(const RepresentRecord& record) {
  Json j;
  j["target"] = record.target;
  j["parity"] = record.parity == Parity::any ? "any" : "even_vector";
  j["bound"] = record.bound;
  j["found"] = record.vector.has_value();
  j["vector"] = optional_or_null(record.vector, [](const IntVector& v) { return Json(v); });
  return j;
}

template <>
RepresentRecord from_json(const Json& json) {
  return guarded("representation record", [&] {
    RepresentRecord record;
    record.target = json.at("target").get<std::int64_t>();
    const auto parity = json.at("parity").get<std::string>();
    if (parity != "any" && parity != "even_vector") {
      throw DomainError("unknown parity '" + parity + "'");
    }
    record.parity = parity == "any" ? Parity::any : Parity::even_vector;
    record.bound = json.at("bound").get<std::int64_t>();
    if (const auto& v = json.at("vector"); !v.is_null()) record.vector = v.get<IntVector>();
    return record;
  });
}

Json to_json(const LatticeRecord& record) {
  Json j;
  j["form"] = record.form;
  j["rank"] = record.rank;
  j["signature"] = record.signature ? Json(*record.signature) : Json(nullptr);
  j["determinant"] = record.determinant.get_str();
  j["even"] = record.even;
  j["represent"] = optional_or_null(record.represent,
                                    [](const RepresentRecord& r) { return to_json(r); });
  return j;
}

template <>
LatticeRecord from_json(const Json& json) {
  return guarded("lattice record", [&] {
    LatticeRecord record;
    record.form = json.at("form").get<std::string>();
    record.rank = json.at("rank").get<std::size_t>();
    if (const auto& s = json.at("signature"); !s.is_null()) record.signature = s.get<int>();
    record.determinant = integer_field(json.at("determinant"));
    record.even = json.at("even").get<bool>();
    if (const auto& r = json.at("represent"); !r.is_null()) {
      record.represent = from_json<RepresentRecord>(r);
    }
    return record;
  });
}

Json manifold_to_json(const Manifold& manifold) {
  Json j;
  j["name"] = manifold.name;
  j["dimension"] = manifold.numbers.dimension();
  Json numbers = Json::object();
  for (const auto& [monomial, value] : manifold.numbers.values()) {
    numbers[monomial.to_string()] = value.get_str();
  }
  j["pontrjagin"] = std::move(numbers);
  return j;
}

Manifold manifold_from_json(const Json& json) {
  return guarded("manifold file", [&] {
    const auto dimension = json.at("dimension").get<long long>();
    if (dimension <= 0 || dimension > 4096) {
      throw DomainError("manifold dimension out of range");
    }
    Manifold manifold{json.value("name", std::string("manifold")),
                      PontNumbers(static_cast<unsigned>(dimension))};
    for (const auto& [key, value] : json.at("pontrjagin").items()) {
      manifold.numbers.set(Monomial::parse(key), integer_field(value));
    }
    return manifold;
  });
}

Json gram_to_json(const IntegralLattice& lattice) { return Json(lattice.gram()); }

IntegralLattice lattice_from_json(const Json& json) {
  return guarded("Gram matrix", [&] {
    if (!json.is_array()) throw DomainError("Gram matrix must be an array of rows");
    return IntegralLattice(json.get<std::vector<IntVector>>());
  });
}

}  // namespace pscalc
