#include "latknot/certificate_io.hpp"

#include <istream>
#include <iterator>
#include <ostream>

#include <nlohmann/json.hpp>

namespace latknot {

namespace {

using json = nlohmann::ordered_json;

json step_to_json(const CertificateStep& step) {
  if (const auto* rebase = std::get_if<Rebase>(&step)) return json{{"rebase", rebase->shift}};
  const auto& m = std::get<SwitchMove>(step);
  return json{{"i", m.start}, {"j", m.end}, {"c", std::string(1, m.conjugator.to_char())}};
}

Word word_field(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc.at(key).is_string()) {
    throw CertificateFormatError(std::string("certificate field '") + key + "' must be a string");
  }
  try {
    return parse_word(doc.at(key).get<std::string>());
  } catch (const ParseError& e) {
    throw CertificateFormatError(std::string("certificate field '") + key + "': " + e.what());
  }
}

CertificateStep step_from_json(const json& s, std::size_t index) {
  const std::string where = "step " + std::to_string(index);
  if (!s.is_object()) throw CertificateFormatError(where + " must be an object");
  if (s.contains("rebase")) {
    if (s.size() != 1 || !s.at("rebase").is_number_integer()) {
      throw CertificateFormatError(where + ": rebase step must be {\"rebase\": <integer>}");
    }
    return Rebase{s.at("rebase").get<std::int64_t>()};
  }
  if (s.size() != 3 || !s.contains("i") || !s.contains("j") || !s.contains("c")) {
    throw CertificateFormatError(where + ": switch step must have exactly i, j, c");
  }
  if (!s.at("i").is_number_unsigned() || !s.at("j").is_number_unsigned()) {
    throw CertificateFormatError(where + ": i and j must be non-negative integers");
  }
  const auto& c = s.at("c");
  if (!c.is_string() || c.get<std::string>().size() != 1) {
    throw CertificateFormatError(where + ": c must be a single letter");
  }
  const auto letter = Letter::from_char(c.get<std::string>()[0]);
  if (!letter) throw CertificateFormatError(where + ": c is not a word letter");
  return SwitchMove{s.at("i").get<std::size_t>(), s.at("j").get<std::size_t>(), *letter};
}

}  // namespace

std::string certificate_to_string(const Certificate& cert) {
  json steps = json::array();
  for (const auto& s : cert.steps) steps.push_back(step_to_json(s));
  json doc{{"start", format_word(cert.start_word)}, {"steps", steps},
           {"end", format_word(cert.end_word)}};
  return doc.dump(2) + "\n";
}

Certificate certificate_from_string(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw CertificateFormatError(std::string("certificate is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw CertificateFormatError("certificate must be a JSON object");
  Certificate cert;
  cert.start_word = word_field(doc, "start");
  cert.end_word = word_field(doc, "end");
  if (!doc.contains("steps") || !doc.at("steps").is_array()) {
    throw CertificateFormatError("certificate field 'steps' must be a list");
  }
  const auto& steps = doc.at("steps");
  for (std::size_t k = 0; k < steps.size(); ++k) cert.steps.push_back(step_from_json(steps[k], k));
  return cert;
}

void write_certificate(std::ostream& out, const Certificate& cert) {
  out << certificate_to_string(cert);
}

Certificate read_certificate(std::istream& in) {
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return certificate_from_string(text);
}

}  // namespace latknot
