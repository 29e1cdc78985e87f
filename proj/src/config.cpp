#include "branching/config.hpp"

#include <sstream>
#include <stdexcept>

namespace branching {

std::map<std::string, Rational*> Constants::table() {
    return {{"c", &c},
            {"c_sep_target", &c_sep_target},
            {"c_sep", &c_sep},
            {"separator_balance", &separator_balance},
            {"bisection_factor", &bisection_factor},
            {"cycle_cut_factor", &cycle_cut_factor},
            {"deletion_factor", &deletion_factor},
            {"dense_threshold", &dense_threshold},
            {"shrink", &shrink},
            {"half", &half},
            {"class_threshold", &class_threshold},
            {"type_threshold", &type_threshold},
            {"part_fraction", &part_fraction}};
}

std::map<std::string, const Rational*> Constants::table() const {
    std::map<std::string, const Rational*> out;
    for (auto& [name, ptr] : const_cast<Constants*>(this)->table()) out.emplace(name, ptr);
    return out;
}

void apply_overrides(Constants& k, const std::string& text) {
    auto entries = k.table();
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("config line " + std::to_string(line_no) + ": expected name = value");
        auto trim = [](std::string s) {
            const auto a = s.find_first_not_of(" \t\r");
            const auto b = s.find_last_not_of(" \t\r");
            return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        const std::string name = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        auto it = entries.find(name);
        if (it == entries.end()) throw std::invalid_argument("config line " + std::to_string(line_no) + ": unknown constant " + name);
        Rational v;
        try {
            v = parse_rational(value);
        } catch (const std::exception& e) {
            throw std::invalid_argument("config line " + std::to_string(line_no) + ": " + e.what());
        }
        if (v <= 0) throw std::invalid_argument("config line " + std::to_string(line_no) + ": " + name + " must be positive");
        *it->second = v;
    }
}

}  // namespace branching
