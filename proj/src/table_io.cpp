#include "splitpde/table_io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace splitpde {
namespace {

std::string fmt(const char* spec, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, x);
  return buf;
}

std::string cell(const std::optional<double>& x, const char* spec) {
  return x ? fmt(spec, *x) : std::string("--");
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        fields.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        fields.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else {
      fields.back() += c;
    }
  }
  if (quoted) throw std::invalid_argument("unterminated quote in CSV line");
  return fields;
}

std::optional<double> parse_number(const std::string& s) {
  if (s.empty()) return std::nullopt;
  std::size_t used = 0;
  double x = 0.0;
  try {
    x = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || used == 0) throw std::invalid_argument("bad CSV number '" + s + "'");
  return x;
}

const char* norm_symbol(NormKind k) {
  switch (k) {
    case NormKind::inf: return "l^inf";
    case NormKind::one: return "l^1";
    case NormKind::two: return "l^2";
  }
  return "?";
}

std::string emit_csv(const Study& study) {
  std::ostringstream os;
  os << "scheme,step_size";
  for (NormKind k : study.norms) os << ",error_" << to_string(k) << ",order_" << to_string(k);
  os << '\n';
  for (const ResultTable& t : study.tables) {
    for (const ResultRow& r : t.rows) {
      os << csv_field(t.scheme) << ',' << fmt("%.17g", r.step);
      for (std::size_t k = 0; k < study.norms.size(); ++k) {
        os << ',' << (r.errors[k] ? fmt("%.17g", *r.errors[k]) : "");
        os << ',' << (r.orders[k] ? fmt("%.17g", *r.orders[k]) : "");
      }
      os << '\n';
    }
  }
  return os.str();
}

/// Splits the tables into display groups: Lie next to Lie (modified), Strang
/// next to Strang (modified). Unpaired tables get a group of their own.
std::vector<std::vector<const ResultTable*>> group_tables(const Study& study) {
  std::vector<std::vector<const ResultTable*>> groups;
  std::vector<bool> used(study.tables.size(), false);
  for (std::size_t i = 0; i < study.tables.size(); ++i) {
    if (used[i]) continue;
    used[i] = true;
    const std::string& name = study.tables[i].scheme;
    const bool modified = name.ends_with("-mod");
    const std::string partner = modified ? name.substr(0, name.size() - 4) : name + "-mod";
    std::vector<const ResultTable*> group{&study.tables[i]};
    for (std::size_t j = i + 1; j < study.tables.size(); ++j) {
      if (!used[j] && study.tables[j].scheme == partner &&
          study.tables[j].rows.size() == study.tables[i].rows.size()) {
        used[j] = true;
        if (modified) group.insert(group.begin(), &study.tables[j]);
        else group.push_back(&study.tables[j]);
        break;
      }
    }
    groups.push_back(std::move(group));
  }
  return groups;
}

std::string emit_markdown(const Study& study) {
  std::ostringstream os;
  for (const auto& [key, value] : study.metadata) os << "- " << key << ": " << value << '\n';
  if (!study.metadata.empty()) os << '\n';
  const std::string prefix = study.local ? "local " : "";
  const auto groups = group_tables(study);
  for (std::size_t k = 0; k < study.norms.size(); ++k) {
    const std::string err = prefix + norm_symbol(study.norms[k]) + " error";
    const std::string ord = prefix + "order";
    for (const auto& group : groups) {
      os << "| step size |";
      for (const ResultTable* t : group) os << ' ' << t->label << ' ' << err << " | " << ord << " |";
      os << "\n|---:|";
      for (std::size_t g = 0; g < group.size(); ++g) os << "---:|---:|";
      os << '\n';
      for (std::size_t r = 0; r < group.front()->rows.size(); ++r) {
        os << "| " << fmt("%.3e", group.front()->rows[r].step) << " |";
        for (const ResultTable* t : group) {
          const ResultRow& row = t->rows[r];
          os << ' ' << cell(row.errors[k], "%.3e") << " | " << cell(row.orders[k], "%.4g")
             << " |";
        }
        os << '\n';
      }
      os << '\n';
    }
  }
  bool header = false;
  for (const ResultTable& t : study.tables) {
    for (const ResultRow& r : t.rows) {
      if (!r.failure) continue;
      if (!header) os << "Failed cells:\n\n";
      header = true;
      os << "- " << t.scheme << ", step " << fmt("%.3e", r.step) << ": " << *r.failure << '\n';
    }
  }
  return os.str();
}

}  // namespace

OutputFormat parse_output_format(const std::string& name) {
  if (name == "csv") return OutputFormat::csv;
  if (name == "markdown" || name == "md") return OutputFormat::markdown;
  throw std::invalid_argument("unknown output format '" + name + "' (expected csv or markdown)");
}

std::string emit(const Study& study, OutputFormat format) {
  return format == OutputFormat::csv ? emit_csv(study) : emit_markdown(study);
}

Study parse_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("empty CSV");
  const auto header = split_csv_line(line);
  if (header.size() < 2 || header[0] != "scheme" || header[1] != "step_size" ||
      header.size() % 2 != 0) {
    throw std::invalid_argument("unexpected CSV header");
  }
  Study study;
  for (std::size_t c = 2; c < header.size(); c += 2) {
    const std::string& e = header[c];
    if (!e.starts_with("error_") || header[c + 1] != "order_" + e.substr(6)) {
      throw std::invalid_argument("unexpected CSV column '" + e + "'");
    }
    study.norms.push_back(parse_norm_kind(e.substr(6)));
  }
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto fields = split_csv_line(line);
    if (fields.size() != header.size()) throw std::invalid_argument("ragged CSV line");
    if (study.tables.empty() || study.tables.back().scheme != fields[0]) {
      ResultTable t;
      t.scheme = fields[0];
      study.tables.push_back(std::move(t));
    }
    ResultRow row;
    row.step = parse_number(fields[1]).value_or(0.0);
    for (std::size_t c = 2; c < fields.size(); c += 2) {
      row.errors.push_back(parse_number(fields[c]));
      row.orders.push_back(parse_number(fields[c + 1]));
    }
    study.tables.back().rows.push_back(std::move(row));
  }
  return study;
}

}  // namespace splitpde
