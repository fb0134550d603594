#include "gridstab/textio.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "gridstab/error.hpp"

namespace gridstab {

std::string fmt_g(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", ch);
          out += buf;
        } else {
          out += ch;
        }
    }
  }
  return out;
}

void JsonWriter::separate() {
  if (pending_key_) {
    pending_key_ = false;
    return;
  }
  if (!has_items_.empty()) {
    if (has_items_.back()) out_ += ',';
    has_items_.back() = true;
    newline_indent();
  }
}

void JsonWriter::newline_indent() {
  out_ += '\n';
  out_.append(static_cast<std::size_t>(depth_) * 2, ' ');
}

void JsonWriter::begin_object() {
  separate();
  out_ += '{';
  has_items_.push_back(false);
  ++depth_;
}

void JsonWriter::end_object() {
  const bool had = has_items_.back();
  has_items_.pop_back();
  --depth_;
  if (had) newline_indent();
  out_ += '}';
}

void JsonWriter::begin_array() {
  separate();
  out_ += '[';
  has_items_.push_back(false);
  ++depth_;
}

void JsonWriter::end_array() {
  const bool had = has_items_.back();
  has_items_.pop_back();
  --depth_;
  if (had) newline_indent();
  out_ += ']';
}

void JsonWriter::key(const std::string& k) {
  separate();
  out_ += '"';
  out_ += json_escape(k);
  out_ += "\": ";
  pending_key_ = true;
}

void JsonWriter::value(double v) {
  separate();
  out_ += fmt_g(v);
}

void JsonWriter::value(const std::string& v) {
  separate();
  out_ += '"';
  out_ += json_escape(v);
  out_ += '"';
}

void JsonWriter::value(std::size_t v) {
  separate();
  out_ += std::to_string(v);
}

void JsonWriter::value(bool v) {
  separate();
  out_ += v ? "true" : "false";
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::IoError, "cannot open for reading: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) fail(ErrorCode::IoError, "read failed: " + path);
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::IoError, "cannot open for writing: " + path);
  out << content;
  out.flush();
  if (!out) fail(ErrorCode::IoError, "write failed: " + path);
}

} // namespace gridstab
