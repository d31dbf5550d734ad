#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "chpi/cli.hpp"

namespace chpi::cli {

// Emits one table in CSV or Markdown. Footer notes come after the rows:
// "# " comment lines in CSV, plain lines after a blank line in Markdown.
class TableWriter {
 public:
  TableWriter(Format format, std::vector<std::string> header, std::ostream& out);

  void row(const std::vector<std::string>& fields);
  void note(const std::string& line);

 private:
  void emit_header();

  Format format_;
  std::vector<std::string> header_;
  std::ostream& out_;
  bool notes_started_ = false;
};

std::string csv_escape(const std::string& field);

}  // namespace chpi::cli
