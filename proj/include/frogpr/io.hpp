#pragma once

#include <string>

#include "frogpr/frog.hpp"
#include "frogpr/spectral.hpp"

namespace frogpr {

// Shortest form that round-trips a double: %.17g.
std::string format_number(double x);

// {"N": n, "values": [[re, im], ...], "spectrum": [[re, im], ...]}
std::string signal_to_json(const TimeSignal& z, bool with_spectrum = true);
TimeSignal signal_from_json(const std::string& text);

// {"N": n, "L": l, "entries": [[k, m, value], ...]} in (k, m) order.
std::string measurements_to_json(const FrogMeasurements& meas);
FrogMeasurements measurements_from_json(const std::string& text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace frogpr
