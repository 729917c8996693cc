#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"

#include "ctrliso/c2.hpp"
#include "ctrliso/graph6.hpp"
#include "ctrliso/iso.hpp"
#include "ctrliso/random.hpp"
#include "ctrliso/refine.hpp"
#include "ctrliso/walk.hpp"

namespace ctrliso::cli {

using nlohmann::json;

// Input problem attributable to the user; maps to exit code 1.
struct CliError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CommandOutcome {
    json doc;
    int exit_code = 0;
};

namespace detail {

inline std::vector<std::string> read_lines(const std::string& path) {
    std::vector<std::string> lines;
    auto consume = [&](std::istream& in) {
        std::string line;
        while (std::getline(in, line)) {
            while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
                line.pop_back();
            if (!line.empty()) lines.push_back(line);
        }
    };
    if (path == "-") {
        consume(std::cin);
    } else {
        std::ifstream in(path);
        if (!in) throw CliError("cannot open file: " + path);
        consume(in);
    }
    if (lines.empty()) throw CliError("no graph6 lines in " + path);
    return lines;
}

inline Graph parse_line(const std::string& path, std::size_t line_no, const std::string& line) {
    try {
        return parse_graph6(line);
    } catch (const Graph6Error& e) {
        throw CliError(path + ":" + std::to_string(line_no) + ": " + e.what());
    }
}

inline std::vector<Graph> read_graphs(const std::string& path) {
    const auto lines = read_lines(path);
    std::vector<Graph> out;
    out.reserve(lines.size());
    for (std::size_t i = 0; i < lines.size(); ++i) out.push_back(parse_line(path, i + 1, lines[i]));
    return out;
}

inline Graph read_first_graph(const std::string& path) {
    const auto lines = read_lines(path);
    return parse_line(path, 1, lines[0]);
}

inline json coeffs_json(const IntPoly& p) {
    json arr = json::array();
    for (const auto& c : p.coefficients()) arr.push_back(to_decimal(c));
    return arr;
}

inline json coeffs_json(const RatPoly& p) {
    json arr = json::array();
    for (const auto& c : p.coefficients()) arr.push_back(to_decimal(c));
    return arr;
}

inline json matrix_json(const RatMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(to_decimal(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    long long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                     start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

inline json command_result(const std::string& command, const std::vector<std::string>& inputs,
                           json result, const Timer& t) {
    return json{{"command", command}, {"inputs", inputs}, {"result", std::move(result)},
                {"timing_ms", t.ms()}};
}

}  // namespace detail

inline CommandOutcome run_iso(const std::string& file_a, const std::string& file_b, int bruteforce_max) {
    detail::Timer t;
    const Graph g = detail::read_first_graph(file_a);
    const Graph h = detail::read_first_graph(file_b);
    const IsoVerdict verdict = decide_isomorphism(g, h, bruteforce_max);
    json result{{"kind", to_string(verdict.kind)}, {"reason", to_string(verdict.reason)}};
    if (verdict.certificate) {
        result["certificate"] = verdict.certificate->image;
    } else {
        result["certificate"] = nullptr;
    }
    const int code = verdict.kind == IsoKind::Inconclusive ? 2 : 0;
    return {detail::command_result("iso", {write_graph6(g), write_graph6(h)}, std::move(result), t), code};
}

inline CommandOutcome run_controllable(const std::string& file) {
    detail::Timer t;
    const auto graphs = detail::read_graphs(file);
    json verdicts = json::array();
    std::vector<std::string> inputs;
    for (const auto& g : graphs) {
        const std::string g6 = write_graph6(g);
        inputs.push_back(g6);
        verdicts.push_back(json{{"graph6", g6}, {"controllable", is_controllable(g)}});
    }
    return {detail::command_result("controllable", inputs, std::move(verdicts), t), 0};
}

inline CommandOutcome run_spectrum(const std::string& file, bool with_complement, bool with_generalized) {
    detail::Timer t;
    const auto graphs = detail::read_graphs(file);
    json entries = json::array();
    std::vector<std::string> inputs;
    for (const auto& g : graphs) {
        const std::string g6 = write_graph6(g);
        inputs.push_back(g6);
        json entry{{"graph6", g6}, {"char_poly", detail::coeffs_json(char_poly(adjacency_matrix(g)))}};
        if (with_complement)
            entry["complement_char_poly"] = detail::coeffs_json(char_poly(adjacency_matrix(complement(g))));
        if (with_generalized)
            entry["generalized_s1"] = detail::coeffs_json(generalized_char_poly_at(g, Rat(1)));
        entries.push_back(std::move(entry));
    }
    return {detail::command_result("spectrum", inputs, std::move(entries), t), 0};
}

inline CommandOutcome run_refine(const std::string& file_a, const std::string& file_b, bool witness) {
    detail::Timer t;
    const Graph g = detail::read_first_graph(file_a);
    const Graph h = detail::read_first_graph(file_b);
    const JointColoring jc = joint_refine({g, h});
    const bool equivalent = jc.class_count[0] == jc.class_count[1];
    json result{{"equivalent", equivalent},
                {"classes", json::array({jc.class_count[0], jc.class_count[1]})}};
    if (witness) {
        if (equivalent && g.order() == h.order()) {
            const auto s = fractional_iso_witness(g, h);
            result["witness"] = s ? detail::matrix_json(*s) : json(nullptr);
        } else {
            result["witness"] = nullptr;
        }
    }
    return {detail::command_result("refine", {write_graph6(g), write_graph6(h)}, std::move(result), t), 0};
}

inline CommandOutcome run_c2_emit(long q, int r, int degree_bound) {
    detail::Timer t;
    C2Builder builder(degree_bound);
    const FormulaPtr phi = builder.phi(q, r);
    json result{{"q", q},
                {"r", r},
                {"degree_bound", degree_bound},
                {"formula", to_string(phi)},
                {"nodes", builder.nodes_created()}};
    return {detail::command_result("c2-emit", {}, std::move(result), t), 0};
}

inline CommandOutcome run_c2_check(long q, int r, int degree_bound, const std::string& file) {
    detail::Timer t;
    const auto graphs = detail::read_graphs(file);
    C2Builder builder(degree_bound);
    const FormulaPtr phi = builder.phi(q, r);
    json entries = json::array();
    std::vector<std::string> inputs;
    for (const auto& g : graphs) {
        const std::string g6 = write_graph6(g);
        inputs.push_back(g6);
        const bool holds = eval_formula(g, phi);
        const Int count = walk_count(g, r);
        entries.push_back(json{{"graph6", g6},
                               {"walk_count", to_decimal(count)},
                               {"holds", holds},
                               {"match", holds == (count == q)}});
    }
    json result{{"q", q}, {"r", r}, {"degree_bound", degree_bound}, {"checks", std::move(entries)}};
    return {detail::command_result("c2-check", inputs, std::move(result), t), 0};
}

// Independent seeded samples (seed + index), distributed over a worker pool;
// the outcome does not depend on the thread count.
inline CommandOutcome run_survey(int n, long samples, std::uint64_t seed, int threads) {
    detail::Timer t;
    if (n < 1 || n > 62) throw CliError("survey: n must be within 1..62");
    if (samples < 1) throw CliError("survey: need at least one sample");
    if (threads < 1) threads = 1;
    std::atomic<long> next{0};
    std::atomic<long> controllable_count{0};
    auto worker = [&]() {
        for (;;) {
            const long i = next.fetch_add(1);
            if (i >= samples) return;
            const Graph g = random_graph(n, seed + static_cast<std::uint64_t>(i));
            if (is_controllable(g)) controllable_count.fetch_add(1);
        }
    };
    std::vector<std::thread> pool;
    for (int i = 1; i < threads; ++i) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    const long count = controllable_count.load();
    json result{{"n", n},
                {"samples", samples},
                {"seed", seed},
                {"controllable_count", count},
                {"fraction", static_cast<double>(count) / static_cast<double>(samples)}};
    return {detail::command_result("survey", {}, std::move(result), t), 0};
}

}  // namespace ctrliso::cli
