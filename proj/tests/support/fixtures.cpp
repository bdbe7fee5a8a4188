#include "fixtures.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace termcheck::testkit {

const std::vector<Fixture>& fixtures() {
    static const std::string e = "[[a,b],[b,c],[c,a]]";
    static const std::vector<Fixture> all = {
        {"p1", {"p(a)"}},
        {"p2", {"p", "q"}},
        {"p3",
         {"append([1,2],[3],L)", "append([1,2],[3],[4])", "append(L1,L2,[1,2])", "append(L1,[1,2],L3)",
          "append(L1,L2,L3)", "append([X|Y],[],Y)", "append([X|Y],Y,[Z|Y])"}},
        {"p4", {"p([a,b])"}},
        {"p5", {"win(a)", "win(X)"}},
        {"p6", {"r(a,c," + e + ",[a])", "r(a,Y," + e + ",[a])", "r(X,Y," + e + ",[X])"}},
        {"p7", {"p([a],100)"}},
    };
    return all;
}

std::string fixture_path(const std::string& name) { return std::string(TERMCHECK_FIXTURE_DIR) + "/" + name + ".pl"; }

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Program load_fixture(const std::string& name) { return parse_program(read_file(fixture_path(name))); }

std::vector<Literal> parse_queries(const std::vector<std::string>& texts) {
    std::vector<Literal> out;
    for (const auto& t : texts) out.push_back(parse_query(t));
    return out;
}

Verdict analyse(const std::string& name, const std::vector<std::string>& queries, std::size_t depth_bound) {
    AnalysisConfig config;
    config.depth_bound = depth_bound;
    return test(load_fixture(name), parse_queries(queries), config);
}

}  // namespace termcheck::testkit
