#include "harnack/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "harnack/errors.hpp"

namespace harnack {

JValue JValue::boolean(bool v) {
    JValue j;
    j.type = Type::boolean;
    j.b = v;
    return j;
}

JValue JValue::number(double v) {
    JValue j;
    j.type = Type::number;
    j.num = v;
    return j;
}

JValue JValue::string_value(std::string v) {
    JValue j;
    j.type = Type::string;
    j.str = std::move(v);
    return j;
}

JValue JValue::array() {
    JValue j;
    j.type = Type::array;
    return j;
}

JValue JValue::object() {
    JValue j;
    j.type = Type::object;
    return j;
}

JValue JValue::number_array(const std::vector<double>& v) {
    JValue j = array();
    for (double x : v) j.push(number(x));
    return j;
}

JValue& JValue::set(const std::string& key, JValue v) {
    obj.emplace_back(key, std::move(v));
    return *this;
}

JValue& JValue::push(JValue v) {
    arr.push_back(std::move(v));
    return *this;
}

const JValue* JValue::find(const std::string& key) const {
    for (const auto& [k, v] : obj)
        if (k == key) return &v;
    return nullptr;
}

std::string format_number(double v) {
    if (!std::isfinite(v))
        throw InvalidConfig("reports may only contain finite numbers");
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

std::string escape_json(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default: out += c;
        }
    }
    return out;
}

void render_json_rec(const JValue& v, std::string& out) {
    switch (v.type) {
        case JValue::Type::null: out += "null"; break;
        case JValue::Type::boolean: out += v.b ? "true" : "false"; break;
        case JValue::Type::number: out += format_number(v.num); break;
        case JValue::Type::string:
            out += '"';
            out += escape_json(v.str);
            out += '"';
            break;
        case JValue::Type::array: {
            out += '[';
            for (std::size_t i = 0; i < v.arr.size(); ++i) {
                if (i) out += ',';
                render_json_rec(v.arr[i], out);
            }
            out += ']';
            break;
        }
        case JValue::Type::object: {
            out += '{';
            for (std::size_t i = 0; i < v.obj.size(); ++i) {
                if (i) out += ',';
                out += '"';
                out += escape_json(v.obj[i].first);
                out += "\":";
                render_json_rec(v.obj[i].second, out);
            }
            out += '}';
            break;
        }
    }
}

bool is_scalar_array(const JValue& v) {
    for (const auto& e : v.arr)
        if (e.type == JValue::Type::array || e.type == JValue::Type::object)
            return false;
    return true;
}

std::string scalar_to_text(const JValue& v) {
    switch (v.type) {
        case JValue::Type::null: return "-";
        case JValue::Type::boolean: return v.b ? "true" : "false";
        case JValue::Type::number: return format_number(v.num);
        case JValue::Type::string: return v.str;
        default: return "";
    }
}

void render_text_rec(const JValue& v, int indent, std::string& out) {
    const std::string pad(2 * indent, ' ');
    if (v.type == JValue::Type::object) {
        for (const auto& [k, e] : v.obj) {
            if (e.type == JValue::Type::object ||
                (e.type == JValue::Type::array && !is_scalar_array(e))) {
                out += pad + k + ":\n";
                render_text_rec(e, indent + 1, out);
            } else if (e.type == JValue::Type::array) {
                out += pad + k + ": [";
                for (std::size_t i = 0; i < e.arr.size(); ++i) {
                    if (i) out += ", ";
                    out += scalar_to_text(e.arr[i]);
                }
                out += "]\n";
            } else {
                out += pad + k + ": " + scalar_to_text(e) + "\n";
            }
        }
    } else if (v.type == JValue::Type::array) {
        for (std::size_t i = 0; i < v.arr.size(); ++i) {
            out += pad + "- \n";
            render_text_rec(v.arr[i], indent + 1, out);
        }
    } else {
        out += pad + scalar_to_text(v) + "\n";
    }
}

std::string csv_escape(const std::string& s) {
    if (s.find(',') == std::string::npos && s.find('"') == std::string::npos &&
        s.find('\n') == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

void render_csv_rec(const JValue& v, const std::string& prefix, std::string& out) {
    switch (v.type) {
        case JValue::Type::object:
            for (const auto& [k, e] : v.obj)
                render_csv_rec(e, prefix.empty() ? k : prefix + "." + k, out);
            break;
        case JValue::Type::array:
            for (std::size_t i = 0; i < v.arr.size(); ++i)
                render_csv_rec(v.arr[i], prefix + "." + std::to_string(i), out);
            break;
        case JValue::Type::null: out += prefix + ",\n"; break;
        case JValue::Type::boolean:
            out += prefix + "," + (v.b ? "true" : "false") + "\n";
            break;
        case JValue::Type::number:
            out += prefix + "," + format_number(v.num) + "\n";
            break;
        case JValue::Type::string:
            out += prefix + "," + csv_escape(v.str) + "\n";
            break;
    }
}

}  // namespace

std::string render_json(const JValue& v) {
    std::string out;
    render_json_rec(v, out);
    out += '\n';
    return out;
}

std::string render_text(const JValue& v) {
    std::string out;
    render_text_rec(v, 0, out);
    return out;
}

std::string render_csv_flat(const JValue& v) {
    std::string out = "key,value\n";
    render_csv_rec(v, "", out);
    return out;
}

std::string render(const JValue& v, const std::string& format) {
    if (format == "json") return render_json(v);
    if (format == "text") return render_text(v);
    if (format == "csv") return render_csv_flat(v);
    throw InvalidConfig("unknown output format: " + format);
}

}  // namespace harnack
