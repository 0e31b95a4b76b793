#include "netgood/report_writer.hpp"

#include <cassert>
#include <cmath>
#include <cstdio>

namespace netgood {

namespace {

std::string format_with_sig(double v, int sig) {
    if (!std::isfinite(v)) return "null";
    if (v == 0.0) return "0";  // normalizes -0
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", sig, v);
    return buf;
}

}  // namespace

std::string format_report_float(double v) { return format_with_sig(v, 12); }
std::string format_exact_float(double v) { return format_with_sig(v, 17); }

JsonWriter& JsonWriter::begin_object() {
    prepare_slot();
    out_ += '{';
    stack_.push_back({'{', 0, false});
    return *this;
}

JsonWriter& JsonWriter::end_object() {
    assert(!stack_.empty() && stack_.back().kind == '{');
    const bool had_items = stack_.back().count > 0;
    stack_.pop_back();
    if (had_items) newline_indent();
    out_ += '}';
    return *this;
}

JsonWriter& JsonWriter::begin_array() {
    prepare_slot();
    out_ += '[';
    stack_.push_back({'[', 0, false});
    return *this;
}

JsonWriter& JsonWriter::end_array() {
    assert(!stack_.empty() && stack_.back().kind == '[');
    stack_.pop_back();
    out_ += ']';
    return *this;
}

JsonWriter& JsonWriter::key(const std::string& k) {
    assert(!stack_.empty() && stack_.back().kind == '{' && !stack_.back().key_pending);
    if (stack_.back().count > 0) out_ += ',';
    ++stack_.back().count;
    newline_indent();
    out_ += '"';
    out_ += escape(k);
    out_ += "\": ";
    stack_.back().key_pending = true;
    return *this;
}

void JsonWriter::prepare_slot() {
    if (stack_.empty()) return;
    Frame& top = stack_.back();
    if (top.kind == '{') {
        assert(top.key_pending);
        top.key_pending = false;
    } else {
        if (top.count > 0) out_ += ", ";
        ++top.count;
    }
}

void JsonWriter::newline_indent() {
    out_ += '\n';
    out_.append(2 * stack_.size(), ' ');
}

std::string JsonWriter::escape(const std::string& s) {
    std::string r;
    r.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '"': r += "\\\""; break;
            case '\\': r += "\\\\"; break;
            case '\n': r += "\\n"; break;
            case '\t': r += "\\t"; break;
            case '\r': r += "\\r"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    r += buf;
                } else {
                    r += c;
                }
        }
    }
    return r;
}

JsonWriter& JsonWriter::value(double v) {
    prepare_slot();
    out_ += format_report_float(v);
    return *this;
}

JsonWriter& JsonWriter::value(int v) { return value(static_cast<long long>(v)); }

JsonWriter& JsonWriter::value(long long v) {
    prepare_slot();
    out_ += std::to_string(v);
    return *this;
}

JsonWriter& JsonWriter::value(bool v) {
    prepare_slot();
    out_ += v ? "true" : "false";
    return *this;
}

JsonWriter& JsonWriter::value(const char* v) { return value(std::string(v)); }

JsonWriter& JsonWriter::value(const std::string& v) {
    prepare_slot();
    out_ += '"';
    out_ += escape(v);
    out_ += '"';
    return *this;
}

JsonWriter& JsonWriter::null_value() {
    prepare_slot();
    out_ += "null";
    return *this;
}

JsonWriter& JsonWriter::number_array(const Vector& values) {
    begin_array();
    for (double v : values) value(v);
    return end_array();
}

JsonWriter& JsonWriter::int_array(const std::vector<int>& values) {
    begin_array();
    for (int v : values) value(v);
    return end_array();
}

std::string JsonWriter::str() const {
    assert(stack_.empty());
    return out_ + "\n";
}

}  // namespace netgood
