#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace protex {

struct protex_error: std::runtime_error {
    explicit protex_error(const std::string& what): std::runtime_error(what) {}
};

// Malformed external input: text forms, JSON documents, CLI arguments.
struct parse_error: protex_error {
    explicit parse_error(const std::string& what): protex_error(what) {}
};

// A constructed value would break one of its invariants.
struct invariant_violation: protex_error {
    explicit invariant_violation(const std::string& what): protex_error(what) {}
};

// Some null direction of the domain has an image of nonzero norm.
struct unbounded_map: protex_error {
    explicit unbounded_map(std::size_t basis_index);
    std::size_t basis_index;
};

struct not_non_expanding: protex_error {
    explicit not_non_expanding(const std::string& what): protex_error(what) {}
};

struct not_spanning: protex_error {
    explicit not_spanning(const std::string& what): protex_error(what) {}
};

struct not_composable: protex_error {
    explicit not_composable(const std::string& what): protex_error(what) {}
};

struct solver_unavailable: protex_error {
    explicit solver_unavailable(const std::string& what): protex_error(what) {}
};

// Enumeration would exceed the configured budget.
struct budget_exceeded: protex_error {
    explicit budget_exceeded(const std::string& what): protex_error(what) {}
};

// Factorization ran out of fuel with lifting problems still open.
// The templated subclass in factor/factorization.hpp carries the partial certificate.
struct fuel_exhausted: protex_error {
    explicit fuel_exhausted(const std::string& what): protex_error(what) {}
};

inline unbounded_map::unbounded_map(std::size_t i):
    protex_error("map is unbounded: null basis direction " + std::to_string(i) + " has an image of nonzero norm"),
    basis_index(i)
{}

} // namespace protex
