#pragma once

#include <string>
#include <vector>

#include "netgood/linalg.hpp"

namespace netgood {

/// Fixed-precision float formatting for reports: 12 significant digits,
/// shortest form, so identical inputs yield byte-identical documents.
std::string format_report_float(double v);

/// Full-precision formatting (17 significant digits) for values that must
/// survive a parse round trip bit-for-bit.
std::string format_exact_float(double v);

/// Streaming JSON writer with insertion-ordered keys and deterministic
/// number formatting. No pretty options beyond two-space indentation:
/// reports must be diffable.
class JsonWriter {
public:
    JsonWriter& begin_object();
    JsonWriter& end_object();
    JsonWriter& begin_array();
    JsonWriter& end_array();
    JsonWriter& key(const std::string& k);

    JsonWriter& value(double v);
    JsonWriter& value(int v);
    JsonWriter& value(long long v);
    JsonWriter& value(bool v);
    JsonWriter& value(const char* v);
    JsonWriter& value(const std::string& v);
    JsonWriter& null_value();

    JsonWriter& number_array(const Vector& values);
    JsonWriter& int_array(const std::vector<int>& values);

    /// Finished document text, newline-terminated.
    std::string str() const;

private:
    void prepare_slot();
    void newline_indent();
    static std::string escape(const std::string& s);

    struct Frame {
        char kind;  // '{' or '['
        int count = 0;
        bool key_pending = false;
    };
    std::vector<Frame> stack_;
    std::string out_;
};

}  // namespace netgood
