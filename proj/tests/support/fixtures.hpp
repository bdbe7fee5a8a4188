#pragma once

#include <string>
#include <vector>

#include "termcheck/detector.hpp"
#include "termcheck/parser.hpp"

namespace termcheck::testkit {

struct Fixture {
    std::string name;  // "p1" ... "p7"
    std::vector<std::string> queries;
};

/// The seven example programs with the queries they are analysed against.
const std::vector<Fixture>& fixtures();

std::string fixture_path(const std::string& name);
std::string read_file(const std::string& path);
Program load_fixture(const std::string& name);

std::vector<Literal> parse_queries(const std::vector<std::string>& texts);

/// Analysis of one fixture over the given queries (all of them by default).
Verdict analyse(const std::string& name, const std::vector<std::string>& queries, std::size_t depth_bound = 2);

}  // namespace termcheck::testkit
