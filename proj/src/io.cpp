#include "frogpr/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "frogpr/error.hpp"

namespace frogpr {

namespace {

using nlohmann::json;

std::string location(const std::string& text, std::size_t byte)
{
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

json parse(const std::string& text)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        std::string what = e.what();
        auto pos = what.find("syntax error");
        throw ParseError("malformed JSON at " + location(text, e.byte) + ": " +
                         (pos == std::string::npos ? what : what.substr(pos)));
    }
}

const json& field(const json& j, const char* key)
{
    if (!j.is_object())
        throw ParseError("expected a JSON object at the top level");
    auto it = j.find(key);
    if (it == j.end())
        throw ParseError(std::string("missing field \"") + key + "\"");
    return *it;
}

long integer(const json& j, const char* what)
{
    if (!j.is_number_integer())
        throw ParseError(std::string(what) + " must be an integer");
    return j.get<long>();
}

double number(const json& j, const char* what)
{
    if (!j.is_number())
        throw ParseError(std::string(what) + " must be a number");
    return j.get<double>();
}

std::vector<cplx> complex_array(const json& j, const char* key, long n)
{
    if (!j.is_array())
        throw ParseError(std::string("\"") + key + "\" must be an array of [re, im] pairs");
    if (static_cast<long>(j.size()) != n)
        throw ParseError(std::string("\"") + key + "\" has " + std::to_string(j.size()) +
                         " entries but N = " + std::to_string(n));
    std::vector<cplx> out;
    out.reserve(n);
    for (std::size_t i = 0; i < j.size(); ++i) {
        const json& p = j[i];
        std::string where = std::string(key) + "[" + std::to_string(i) + "]";
        if (!p.is_array() || p.size() != 2)
            throw ParseError(where + " must be a [re, im] pair");
        out.emplace_back(number(p[0], where.c_str()), number(p[1], where.c_str()));
    }
    return out;
}

void append_complex_array(std::string& out, const std::vector<cplx>& v)
{
    out += "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            out += ", ";
        out += "[" + format_number(v[i].real()) + ", " + format_number(v[i].imag()) + "]";
    }
    out += "]";
}

}  // namespace

std::string format_number(double x)
{
    if (!std::isfinite(x))
        throw InvalidArgument("cannot write a non-finite number to JSON");
    if (x == 0)
        x = 0;  // drop the sign of -0
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string signal_to_json(const TimeSignal& z, bool with_spectrum)
{
    std::string out = "{\n  \"N\": " + std::to_string(z.size()) + ",\n  \"values\": ";
    append_complex_array(out, z.values());
    if (with_spectrum) {
        out += ",\n  \"spectrum\": ";
        append_complex_array(out, dft(z).coeffs());
    }
    out += "\n}\n";
    return out;
}

TimeSignal signal_from_json(const std::string& text)
{
    const json j = parse(text);
    const long n = integer(field(j, "N"), "\"N\"");
    if (n < 2)
        throw ParseError("\"N\" must be at least 2");
    return TimeSignal(complex_array(field(j, "values"), "values", n));
}

std::string measurements_to_json(const FrogMeasurements& meas)
{
    std::string out = "{\n  \"N\": " + std::to_string(meas.params().N()) +
                      ",\n  \"L\": " + std::to_string(meas.params().L()) + ",\n  \"entries\": [";
    bool first = true;
    for (auto& [key, v] : meas.entries()) {
        out += first ? "\n    " : ",\n    ";
        first = false;
        out += "[" + std::to_string(key.first) + ", " + std::to_string(key.second) + ", " +
               format_number(v) + "]";
    }
    out += first ? "]\n}\n" : "\n  ]\n}\n";
    return out;
}

FrogMeasurements measurements_from_json(const std::string& text)
{
    const json j = parse(text);
    const long n = integer(field(j, "N"), "\"N\"");
    const long l = integer(field(j, "L"), "\"L\"");
    FrogParams params = [&] {
        try {
            return FrogParams(static_cast<int>(n), static_cast<int>(l));
        } catch (const InvalidArgument& e) {
            throw ParseError(e.what());
        }
    }();
    FrogMeasurements meas(params);
    const json& entries = field(j, "entries");
    if (!entries.is_array())
        throw ParseError("\"entries\" must be an array of [k, m, value] triples");
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const json& e = entries[i];
        std::string where = "entries[" + std::to_string(i) + "]";
        if (!e.is_array() || e.size() != 3)
            throw ParseError(where + " must be a [k, m, value] triple");
        long k = integer(e[0], where.c_str());
        long m = integer(e[1], where.c_str());
        double v = number(e[2], where.c_str());
        try {
            meas.set(static_cast<int>(k), static_cast<int>(m), v);
        } catch (const InvalidArgument& err) {
            throw ParseError(where + ": " + err.what());
        }
    }
    return meas;
}

std::string read_text_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw UsageError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw UsageError("cannot write " + path);
    out << text;
    if (!out)
        throw UsageError("write failed for " + path);
}

}  // namespace frogpr
