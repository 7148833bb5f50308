#pragma once

#include <string>

#include "splitpde/harness.hpp"

namespace splitpde {

enum class OutputFormat { csv, markdown };

OutputFormat parse_output_format(const std::string& name);

/// CSV: header `scheme,step_size,error_<norm>,order_<norm>,...` and one line
/// per (scheme, step) with full precision; missing values are empty fields.
/// Markdown: metadata list, then per norm one table per splitting kind with
/// the classical and modified columns side by side.
std::string emit(const Study& study, OutputFormat format);

/// Inverse of emit(study, csv) for the numeric content (no metadata, labels
/// or failure messages). Throws std::invalid_argument on malformed input.
Study parse_csv(const std::string& text);

}  // namespace splitpde
