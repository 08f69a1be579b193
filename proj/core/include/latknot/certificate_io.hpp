#pragma once

// Certificate files are a JSON object with keys start, steps, end, in that
// order. A step is {"i": 2, "j": 2, "c": "x"} or {"rebase": 3}. Files are
// written with two-space indentation (one key per line) and a trailing
// newline; any valid JSON with the same content reads back.

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "latknot/moves.hpp"

namespace latknot {

class CertificateFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string certificate_to_string(const Certificate& cert);
Certificate certificate_from_string(const std::string& text);

void write_certificate(std::ostream& out, const Certificate& cert);
Certificate read_certificate(std::istream& in);

}  // namespace latknot
