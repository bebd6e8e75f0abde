#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "indmatch/graph.hpp"

namespace indmatch {

// Plain text graph format: a "n m" header, then m lines "u v" with
// 0-based ids; lines starting with '#' are ignored anywhere.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

Graph parse_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g);

Graph read_edge_list_file(const std::string& path);
void write_edge_list_file(const Graph& g, const std::string& path);

}  // namespace indmatch
