#include "table_writer.hpp"

#include "chpi/realnum.hpp"

namespace chpi::cli {

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) {
    return field;
  }
  std::string quoted = "\"";
  for (const char c : field) {
    if (c == '"') {
      quoted += '"';
    }
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

TableWriter::TableWriter(Format format, std::vector<std::string> header, std::ostream& out)
    : format_(format), header_(std::move(header)), out_(out) {
  emit_header();
}

void TableWriter::emit_header() {
  if (format_ == Format::csv) {
    for (std::size_t i = 0; i < header_.size(); ++i) {
      out_ << (i ? "," : "") << csv_escape(header_[i]);
    }
    out_ << '\n';
    return;
  }
  out_ << '|';
  for (const auto& h : header_) {
    out_ << ' ' << h << " |";
  }
  out_ << "\n|";
  for (std::size_t i = 0; i < header_.size(); ++i) {
    out_ << "---|";
  }
  out_ << '\n';
}

void TableWriter::row(const std::vector<std::string>& fields) {
  if (fields.size() != header_.size()) {
    throw Error("row width does not match header");
  }
  if (format_ == Format::csv) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
      out_ << (i ? "," : "") << csv_escape(fields[i]);
    }
    out_ << '\n';
    return;
  }
  out_ << '|';
  for (const auto& f : fields) {
    out_ << ' ' << f << " |";
  }
  out_ << '\n';
}

void TableWriter::note(const std::string& line) {
  if (format_ == Format::csv) {
    out_ << "# " << line << '\n';
    return;
  }
  if (!notes_started_) {
    out_ << '\n';
    notes_started_ = true;
  }
  out_ << line << "  \n";
}

}  // namespace chpi::cli
