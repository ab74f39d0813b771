#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rvc/coloring.hpp"
#include "rvc/decomposition.hpp"
#include "rvc/oracle.hpp"
#include "rvc/structure.hpp"
#include "rvc/verification.hpp"

namespace rvc {

enum class OutputFormat { human, structured };

/// Provenance header attached to every CLI output. Everything in it is
/// derived from the invocation, so equal invocations give equal bytes.
struct RunReport {
  std::string command;
  std::string input_digest;
  std::vector<std::pair<std::string, std::string>> parameters;
};

/// "fnv1a64:<16 hex digits>"
std::string input_digest(std::string_view bytes);

std::string format_coloring(const Coloring& c, const RunReport& report, OutputFormat format);
std::string format_ear_decomposition(const EarDecomposition& d, const RunReport& report, OutputFormat format);
std::string format_blocks(const BlockDecomposition& b, const RunReport& report, OutputFormat format);
std::string format_certificate(const Certificate& cert, const RunReport& report, OutputFormat format);
std::string format_oracle(const OracleResult& result, RainbowMode mode, bool with_timing, const RunReport& report,
                          OutputFormat format);
std::string format_cycle_table(const std::vector<CycleTableRow>& rows, const RunReport& report, OutputFormat format);

/// Accepts a coloring record in either format, or a bare whitespace-separated
/// list of color ids (`#` comments allowed). Throws ParseError.
std::vector<Color> parse_coloring(std::string_view text);

}  // namespace rvc
