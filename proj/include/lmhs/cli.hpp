#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "lmhs/degeneration.hpp"

namespace lmhs::cli {

using nlohmann::json;

/// Parsed command request. Parameters arrive as raw strings and are
/// validated per command inside run().
struct Request {
  std::string command;  // reconstruct | forward | extension-class | limit-mhs | verify
  std::map<std::string, std::string> params;
  double tolerance = kDefaultTol;
  std::string format = "json";  // json | text
};

/// Command outcome: a status, the command-specific payload, and the named
/// numerical residuals gathered along the way. exit_code follows the
/// convention 0 = ok, 2 = invalid input, 3 = numerical failure.
struct Report {
  std::string status = "ok";
  json payload;
  std::map<std::string, double> residuals;
  int exit_code = 0;
};

/// Parse a complex literal of the form a+bi (optional signs, no spaces):
/// "2i", "0.3+0.2i", "-1.5-0.7i", "3", "i". Throws InvalidInput.
Complex parse_complex(const std::string& text);

json to_json(Complex z);
json to_json(const CxMatrix& m);
json to_json(const IntMatrix& m);
json to_json(const ComplexLattice& l);
json to_json(const TorusPoint& p);

/// Execute a request. Never throws: failures are reported through status
/// and exit_code.
Report run(const Request& req);

/// Render a report as JSON or as key: value text.
std::string render(const Report& rep, const std::string& format);

/// Full command-line entry point (argument parsing, dispatch, printing).
int main_entry(int argc, const char* const* argv);

}  // namespace lmhs::cli
