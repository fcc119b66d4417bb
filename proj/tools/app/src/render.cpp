#include <sstream>

#include "invar_app/commands.hpp"

namespace invar::app {

namespace {

std::string scalar(const Report& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

bool all_scalars(const Report& a) {
    for (const auto& x : a)
        if (x.is_structured()) return false;
    return true;
}

void emit(std::ostringstream& out, const Report& v, int indent);

void emit_member(std::ostringstream& out, const std::string& key, const Report& v, int indent) {
    std::string pad(indent, ' ');
    if (!v.is_structured()) {
        out << pad << key << ": " << scalar(v) << "\n";
    } else if (v.is_array() && all_scalars(v)) {
        // Per-degree tables read best with the degree as the column index.
        out << pad << key << ":";
        for (const auto& x : v) out << " " << scalar(x);
        out << "\n";
    } else {
        out << pad << key << ":\n";
        emit(out, v, indent + 2);
    }
}

void emit(std::ostringstream& out, const Report& v, int indent) {
    std::string pad(indent, ' ');
    if (v.is_object()) {
        for (const auto& [k, x] : v.items()) emit_member(out, k, x, indent);
    } else if (v.is_array()) {
        for (const auto& x : v) {
            if (x.is_object()) {
                std::ostringstream inner;
                emit(inner, x, indent + 2);
                std::string s = inner.str();
                // First line gets the list marker in place of its indentation.
                out << pad << "- " << s.substr(indent + 2);
            } else {
                out << pad << "- " << scalar(x) << "\n";
            }
        }
    } else {
        out << pad << scalar(v) << "\n";
    }
}

std::string render_suite(const Report& r) {
    std::ostringstream out;
    for (const auto& c : r.at("criteria")) {
        out << (c.at("pass").get<bool>() ? "PASS" : "FAIL") << "  " << c.at("id").get<int>() << "  "
            << c.at("title").get<std::string>();
        if (c.contains("seconds")) {
            char buf[32];
            std::snprintf(buf, sizeof buf, " (%.2f s)", c.at("seconds").get<double>());
            out << buf;
        }
        out << "\n";
        for (const auto& d : c.at("details")) out << "      " << d.get<std::string>() << "\n";
    }
    out << r.at("passed").get<int>() << " of " << r.at("total").get<int>() << " criteria pass\n";
    return out.str();
}

}  // namespace

std::string render_text(const Report& r) {
    if (r.is_object() && r.value("command", "") == "suite") return render_suite(r);
    std::ostringstream out;
    emit(out, r, 0);
    return out.str();
}

}  // namespace invar::app
