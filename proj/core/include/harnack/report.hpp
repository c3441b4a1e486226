#pragma once

#include <string>
#include <utility>
#include <vector>

namespace harnack {

/// Ordered JSON-like document used for every machine- and human-readable
/// report. Field order is insertion order and numbers are rendered with 17
/// significant digits, so renderings are byte-identical for equal inputs
/// and round-trip doubles exactly.
struct JValue {
    enum class Type { null, boolean, number, string, array, object };

    Type type = Type::null;
    bool b = false;
    double num = 0.0;
    std::string str;
    std::vector<JValue> arr;
    std::vector<std::pair<std::string, JValue>> obj;

    JValue() = default;
    static JValue null() { return JValue(); }
    static JValue boolean(bool v);
    static JValue number(double v);
    static JValue string_value(std::string v);
    static JValue array();
    static JValue object();
    static JValue number_array(const std::vector<double>& v);

    JValue& set(const std::string& key, JValue v);  // object field, append order
    JValue& push(JValue v);                         // array element
    const JValue* find(const std::string& key) const;
};

/// Fixed-format rendering of a double: %.17g, never NaN/Inf.
std::string format_number(double v);

std::string render_json(const JValue& v);
/// Indented `key: value` block format for terminals.
std::string render_text(const JValue& v);
/// Flat `dotted.key,value` CSV lines (arrays indexed numerically).
std::string render_csv_flat(const JValue& v);

/// Dispatch on format in {"json", "text", "csv"}; throws InvalidConfig on
/// anything else.
std::string render(const JValue& v, const std::string& format);

}  // namespace harnack
