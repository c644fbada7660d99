#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <vector>

#include "bregman/point.hpp"

namespace bregman {

// Finite probability space: nonnegative weights summing to 1 within 1e-12.
struct FiniteProbSpace {
    std::vector<double> weights;

    explicit FiniteProbSpace(std::vector<double> w);
    static FiniteProbSpace uniform(std::size_t n);

    std::size_t size() const { return weights.size(); }
};

// M-valued random vector: one Point per outcome of a space it is used with;
// the pairing with a space is validated at every use site.
struct RandomVector {
    std::vector<Point> values;

    std::size_t n_outcomes() const { return values.size(); }
    std::size_t dimension() const { return values.empty() ? 0 : values.front().size(); }
};

void require_rv_on_space(const FiniteProbSpace& space, const RandomVector& X,
                         const char* field = "values");
void require_rv_in_domain(const Generator& gen, const RandomVector& X,
                          const char* field = "values");

// Sub-sigma-algebra of a finite space: disjoint nonempty blocks of outcome
// indices covering all outcomes.
struct Partition {
    std::vector<std::vector<std::size_t>> blocks;
    std::size_t n_outcomes = 0;

    Partition(std::vector<std::vector<std::size_t>> blocks, std::size_t n_outcomes);
    static Partition trivial(std::size_t n);
    static Partition discrete(std::size_t n);
};

// E[f] = sum of weights * f.
double expectation(const FiniteProbSpace& space, const std::vector<double>& f);

// Classical conditional expectation on a partition: constant on each block,
// equal to the weight-normalized block average. Blocks of zero probability
// receive the unconditional expectation (a.s.-equivalence convention that
// keeps the tower property exact in floating point).
std::vector<double> conditional_expectation_real(const FiniteProbSpace& space,
                                                 const std::vector<double>& f,
                                                 const Partition& part);

// True iff every block of p1 is contained in some block of p2.
bool refines(const Partition& p1, const Partition& p2);

// Componentwise h applied per outcome.
std::vector<std::vector<double>> map_h(const Generator& gen, const RandomVector& X);

// JSON ingestion for the CLI. Accepted fields:
//   {"weights": [...], "values": [[...], ...], "partition": [[...], ...]}  (0-based indices)
//   {"x": [...], "y": [...], "v": [...]}                                   (point payloads)
//   {"values_y": [[...], ...]}                                             (second random vector)
// Unknown fields are rejected; diagnostics name the offending field.
struct JsonInput {
    std::optional<FiniteProbSpace> space;
    std::optional<RandomVector> values;
    std::optional<RandomVector> values_y;
    std::optional<Partition> partition;
    std::optional<Point> x, y, v;
};

JsonInput parse_json_input(std::istream& in);
JsonInput parse_json_file(const std::string& path);

} // namespace bregman
