#include "bregman/prob.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <string>

#include <json.hpp>

#include "bregman/errors.hpp"

namespace bregman {

void require_point_in_domain(const Generator& gen, const Point& x, const char* field) {
    if (x.empty()) fail(errc::dimension_mismatch, std::string(field) + ": empty point (K >= 1 required)");
    for (double c : x) gen.require_interior(c, field);
}

void require_same_dimension(const Point& x, const Point& y) {
    if (x.empty() || y.empty() || x.size() != y.size())
        fail(errc::dimension_mismatch, "points: dimensions " + std::to_string(x.size()) + " vs " +
                                           std::to_string(y.size()));
}

FiniteProbSpace::FiniteProbSpace(std::vector<double> w) : weights(std::move(w)) {
    if (weights.empty()) fail(errc::bad_input, "weights: empty");
    double sum = 0.0;
    for (double wi : weights) {
        if (!(wi >= 0.0)) fail(errc::bad_input, "weights: negative or NaN entry");
        sum += wi;
    }
    if (std::abs(sum - 1.0) > 1e-12) fail(errc::bad_input, "weights: sum to " + std::to_string(sum) + ", not 1");
}

FiniteProbSpace FiniteProbSpace::uniform(std::size_t n) {
    if (n == 0) fail(errc::bad_input, "weights: empty");
    return FiniteProbSpace(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

void require_rv_on_space(const FiniteProbSpace& space, const RandomVector& X, const char* field) {
    if (X.values.size() != space.size())
        fail(errc::space_mismatch, std::string(field) + ": " + std::to_string(X.values.size()) +
                                       " outcomes for a space of size " + std::to_string(space.size()));
    const std::size_t dim = X.dimension();
    if (dim == 0) fail(errc::dimension_mismatch, std::string(field) + ": empty points");
    for (const auto& pt : X.values)
        if (pt.size() != dim) fail(errc::dimension_mismatch, std::string(field) + ": ragged dimensions");
}

void require_rv_in_domain(const Generator& gen, const RandomVector& X, const char* field) {
    for (const auto& pt : X.values) require_point_in_domain(gen, pt, field);
}

Partition::Partition(std::vector<std::vector<std::size_t>> b, std::size_t n)
    : blocks(std::move(b)), n_outcomes(n) {
    if (n_outcomes == 0) fail(errc::invalid_partition, "partition: zero outcomes");
    std::vector<char> seen(n_outcomes, 0);
    std::size_t covered = 0;
    for (const auto& block : blocks) {
        if (block.empty()) fail(errc::invalid_partition, "partition: empty block");
        for (std::size_t idx : block) {
            if (idx >= n_outcomes)
                fail(errc::invalid_partition, "partition: outcome index " + std::to_string(idx) +
                                                  " out of range for " + std::to_string(n_outcomes) +
                                                  " outcomes");
            if (seen[idx]) fail(errc::invalid_partition,
                                "partition: outcome " + std::to_string(idx) + " appears in two blocks");
            seen[idx] = 1;
            ++covered;
        }
    }
    if (covered != n_outcomes) fail(errc::invalid_partition, "partition: does not cover all outcomes");
}

Partition Partition::trivial(std::size_t n) {
    std::vector<std::size_t> all(n);
    std::iota(all.begin(), all.end(), std::size_t{0});
    return Partition({all}, n);
}

Partition Partition::discrete(std::size_t n) {
    std::vector<std::vector<std::size_t>> blocks;
    blocks.reserve(n);
    for (std::size_t i = 0; i < n; ++i) blocks.push_back({i});
    return Partition(std::move(blocks), n);
}

double expectation(const FiniteProbSpace& space, const std::vector<double>& f) {
    if (f.size() != space.size())
        fail(errc::length_mismatch, "f: " + std::to_string(f.size()) + " values for a space of size " +
                                        std::to_string(space.size()));
    double acc = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) acc += space.weights[i] * f[i];
    return acc;
}

std::vector<double> conditional_expectation_real(const FiniteProbSpace& space,
                                                 const std::vector<double>& f,
                                                 const Partition& part) {
    if (part.n_outcomes != space.size())
        fail(errc::invalid_partition, "partition: defined on " + std::to_string(part.n_outcomes) +
                                          " outcomes, space has " + std::to_string(space.size()));
    if (f.size() != space.size())
        fail(errc::length_mismatch, "f: length does not match the space");

    std::vector<double> out(f.size(), 0.0);
    double unconditional = 0.0;
    bool have_unconditional = false;
    for (const auto& block : part.blocks) {
        double mass = 0.0, acc = 0.0;
        for (std::size_t idx : block) {
            mass += space.weights[idx];
            acc += space.weights[idx] * f[idx];
        }
        double value;
        if (mass > 0.0) {
            value = acc / mass;
        } else {
            if (!have_unconditional) {
                unconditional = expectation(space, f);
                have_unconditional = true;
            }
            value = unconditional;
        }
        for (std::size_t idx : block) out[idx] = value;
    }
    return out;
}

bool refines(const Partition& p1, const Partition& p2) {
    if (p1.n_outcomes != p2.n_outcomes)
        fail(errc::space_mismatch, "partition: defined on different outcome counts");
    std::vector<std::size_t> block_of(p2.n_outcomes, 0);
    for (std::size_t b = 0; b < p2.blocks.size(); ++b)
        for (std::size_t idx : p2.blocks[b]) block_of[idx] = b;
    for (const auto& block : p1.blocks) {
        const std::size_t target = block_of[block.front()];
        for (std::size_t idx : block)
            if (block_of[idx] != target) return false;
    }
    return true;
}

std::vector<std::vector<double>> map_h(const Generator& gen, const RandomVector& X) {
    require_rv_in_domain(gen, X);
    std::vector<std::vector<double>> out;
    out.reserve(X.values.size());
    for (const auto& pt : X.values) {
        std::vector<double> row(pt.size());
        for (std::size_t i = 0; i < pt.size(); ++i) row[i] = gen.h(pt[i]);
        out.push_back(std::move(row));
    }
    return out;
}

namespace {

using nlohmann::json;

Point parse_point(const json& j, const char* field) {
    if (!j.is_array() || j.empty())
        fail(errc::bad_input, std::string(field) + ": expected a nonempty array of numbers");
    Point p;
    p.reserve(j.size());
    for (const auto& v : j) {
        if (!v.is_number()) fail(errc::bad_input, std::string(field) + ": non-numeric entry");
        p.push_back(v.get<double>());
    }
    return p;
}

} // namespace

JsonInput parse_json_input(std::istream& in) {
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        fail(errc::bad_input, std::string("input: JSON parse error: ") + e.what());
    }
    if (!j.is_object()) fail(errc::bad_input, "input: expected a JSON object");

    JsonInput out;
    for (const auto& [key, value] : j.items()) {
        if (key == "weights") {
            out.space.emplace(parse_point(value, "weights"));
        } else if (key == "values" || key == "values_y") {
            if (!value.is_array() || value.empty())
                fail(errc::bad_input, key + ": expected a nonempty array of points");
            RandomVector rv;
            for (const auto& row : value) rv.values.push_back(parse_point(row, key.c_str()));
            (key == "values" ? out.values : out.values_y) = std::move(rv);
        } else if (key == "partition") {
            if (!value.is_array() || value.empty())
                fail(errc::bad_input, "partition: expected a nonempty array of index arrays");
            std::vector<std::vector<std::size_t>> blocks;
            for (const auto& row : value) {
                if (!row.is_array()) fail(errc::bad_input, "partition: blocks must be arrays");
                std::vector<std::size_t> block;
                for (const auto& v : row) {
                    if (!v.is_number_unsigned())
                        fail(errc::bad_input, "partition: outcome indices must be nonnegative integers");
                    block.push_back(v.get<std::size_t>());
                }
                blocks.push_back(std::move(block));
            }
            // n_outcomes inferred from the cover; validated against the space by callers.
            std::size_t n = 0;
            for (const auto& b : blocks)
                for (std::size_t idx : b) n = std::max(n, idx + 1);
            out.partition.emplace(std::move(blocks), n);
        } else if (key == "x" || key == "y" || key == "v") {
            auto& slot = key == "x" ? out.x : (key == "y" ? out.y : out.v);
            slot = parse_point(value, key.c_str());
        } else {
            fail(errc::bad_input, "input: unknown field '" + key + "'");
        }
    }
    return out;
}

JsonInput parse_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(errc::bad_input, "input: cannot open '" + path + "'");
    return parse_json_input(in);
}

} // namespace bregman
