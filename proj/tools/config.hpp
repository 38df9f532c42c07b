#pragma once

#include <map>
#include <string>

namespace dhist::tools {

// Flat key=value configuration file, one pair per line, '#' starts a
// comment.  Unknown keys are rejected by the caller, not here.
std::map<std::string, std::string> load_config(const std::string& path);

double parse_double(const std::string& value, const std::string& key);
long parse_long(const std::string& value, const std::string& key);
bool parse_bool(const std::string& value, const std::string& key);

}  // namespace dhist::tools
