#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace waldkit {

struct RunConfig {
    std::string command;
    std::string category;
    std::string y;               // path or builtin name; empty for the command default
    std::string field = "q";
    int cap = -1;                // -1: command default
    int p = -1, q = -1;
    std::string range;           // "A..B"
    std::string output = "text"; // text | structured
    bool crosscheck = false;
    std::string functor = "meet";
    std::string homotopy = "vertex";
};

// args excludes the program name.  Returns 0 on success, 1 when a check or
// construction fails on well-formed input, 2 on malformed flags or files.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Where builtin data files are looked up; empty disables the lookup.
void set_data_dir(std::string dir);

}  // namespace waldkit
