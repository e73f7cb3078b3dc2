#pragma once

// Line-delimited JSON records. Polynomials are lists of terms
// {"a","aL","c","g","s"} in ascending exponent order with the coefficient as a
// decimal string; rational functions are {"den","num"}. Skein vectors are a
// header line followed by one line per W_λ in graded partition order.

#include <json.hpp>

#include <sstream>
#include <string>
#include <string_view>

#include "skein.hpp"

namespace skein {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

inline Json polynomial_records(const LaurentPolynomial& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms()) {
    out.push_back({{"s", e.s}, {"a", e.a}, {"aL", e.aL}, {"g", e.g}, {"c", c.get_str()}});
  }
  return out;
}

/// Strict inverse of polynomial_records: terms must be nonzero and strictly
/// ascending, so every accepted input re-serializes to the same bytes.
inline LaurentPolynomial polynomial_from_records(const Json& j) {
  if (!j.is_array()) throw SerializationError("polynomial must be a list of terms");
  std::vector<std::pair<Exponent, Integer>> terms;
  for (const Json& t : j) {
    if (!t.is_object() || t.size() != 5) throw SerializationError("malformed term record");
    Exponent e;
    Integer c;
    try {
      e = {t.at("s").get<int>(), t.at("a").get<int>(), t.at("aL").get<int>(), t.at("g").get<int>()};
      const std::string& digits = t.at("c").get_ref<const std::string&>();
      if (digits.empty() || digits.front() == '+' || c.set_str(digits, 10) != 0) {
        throw SerializationError("bad coefficient '" + digits + "'");
      }
      if (c.get_str() != digits) throw SerializationError("noncanonical coefficient '" + digits + "'");
    } catch (const Json::exception& ex) {
      throw SerializationError(std::string("malformed term record: ") + ex.what());
    }
    if (c == 0) throw SerializationError("zero coefficient in term record");
    if (!terms.empty() && !(terms.back().first < e)) {
      throw SerializationError("term records not in strictly ascending order");
    }
    terms.emplace_back(e, c);
  }
  return LaurentPolynomial::from_terms(terms);
}

inline Json rational_record(const RationalFunction& x) {
  return {{"num", polynomial_records(x.numerator())}, {"den", polynomial_records(x.denominator())}};
}

inline RationalFunction rational_from_record(const Json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den")) {
    throw SerializationError("rational record needs num and den");
  }
  LaurentPolynomial den = polynomial_from_records(j["den"]);
  if (den.is_zero()) throw SerializationError("zero denominator");
  if (!den.is_s_only()) throw SerializationError("denominator must involve s only");
  return RationalFunction::from_parts(polynomial_from_records(j["num"]), den);
}

inline Json skein_entry_record(const Partition& p, const RationalFunction& c) {
  return {{"schema_version", kSchemaVersion},
          {"partition", p.to_string()},
          {"coefficient", rational_record(c)}};
}

inline std::string serialize_skein_vector(const SkeinVector& v, const Json& manifest = Json::object()) {
  std::string out;
  Json header = {{"schema_version", kSchemaVersion},
                 {"kind", "skein-vector"},
                 {"max_degree", v.max_degree()},
                 {"manifest", manifest}};
  out += header.dump() + "\n";
  for (const auto& [p, c] : v.coefficients()) out += skein_entry_record(p, c).dump() + "\n";
  return out;
}

struct SkeinVectorDocument {
  SkeinVector vector;
  Json manifest;
};

inline SkeinVectorDocument deserialize_skein_vector(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  auto parse_line = [](const std::string& l) {
    try {
      return Json::parse(l);
    } catch (const Json::exception& ex) {
      throw SerializationError(std::string("bad record line: ") + ex.what());
    }
  };
  if (!std::getline(in, line)) throw SerializationError("empty skein-vector document");
  Json header = parse_line(line);
  if (header.value("kind", "") != "skein-vector" ||
      header.value("schema_version", -1) != kSchemaVersion || !header.contains("max_degree")) {
    throw SerializationError("not a skein-vector document of schema " +
                             std::to_string(kSchemaVersion));
  }
  SkeinVectorDocument doc{SkeinVector(header["max_degree"].get<int>()),
                          header.value("manifest", Json::object())};
  std::optional<Partition> previous;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    Json rec = parse_line(line);
    if (rec.value("schema_version", -1) != kSchemaVersion || !rec.contains("partition") ||
        !rec.contains("coefficient")) {
      throw SerializationError("malformed skein-vector entry");
    }
    Partition p;
    try {
      p = Partition::parse(rec["partition"].get<std::string>());
    } catch (const InvalidPartition& e) {
      throw SerializationError(e.what());
    }
    if (previous && !(*previous < p)) throw SerializationError("entries out of order");
    RationalFunction c = rational_from_record(rec["coefficient"]);
    if (c.is_zero()) throw SerializationError("zero coefficient entry");
    try {
      doc.vector.add(p, c);
    } catch (const std::out_of_range& e) {
      throw SerializationError(e.what());
    }
    previous = p;
  }
  return doc;
}

}  // namespace skein
