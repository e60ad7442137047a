#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "qtau/algebra_io.hpp"

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw qtau::error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline qtau::AlgebraPtr load_fixture(const std::string& name) {
    return qtau::parse_algebra(read_file(std::string(QTAU_FIXTURE_DIR) + "/" + name + ".qa"));
}
