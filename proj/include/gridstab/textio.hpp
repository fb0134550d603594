#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace gridstab {

// All floats leaving the library (CSV, JSON, text reports) go through fmt_g:
// %.12g, so identical inputs yield byte-identical files.
std::string fmt_g(double v);

std::string json_escape(const std::string& s);

// Minimal append-style JSON writer with deterministic key order and fmt_g
// number formatting.  Callers are responsible for well-formed nesting; this
// only handles separators and indentation.
class JsonWriter {
public:
  std::string take() { return std::move(out_); }

  void begin_object();
  void end_object();
  void begin_array();
  void end_array();

  void key(const std::string& k);

  void value(double v);
  void value(const std::string& v);
  void value(const char* v) { value(std::string(v)); }
  void value(std::size_t v);
  void value(bool v);

  void kv(const std::string& k, double v) { key(k); value(v); }
  void kv(const std::string& k, const std::string& v) { key(k); value(v); }
  void kv(const std::string& k, const char* v) { key(k); value(v); }
  void kv(const std::string& k, std::size_t v) { key(k); value(v); }
  void kv(const std::string& k, bool v) { key(k); value(v); }

private:
  void separate();
  void newline_indent();

  std::string out_;
  std::vector<bool> has_items_; // per open scope
  int depth_ = 0;
  bool pending_key_ = false;
};

std::string read_text_file(const std::string& path); // IoError on failure
void write_text_file(const std::string& path, const std::string& content);

} // namespace gridstab
