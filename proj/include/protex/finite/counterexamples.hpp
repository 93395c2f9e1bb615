#pragma once

#include <span>
#include <string>
#include <vector>

#include <protex/core/report.hpp>
#include <protex/finite/pointed_set.hpp>

namespace protex {

// Replayed pointed-set fixtures. Each fixture becomes one report item whose
// verdict is the axiom verdict the fixture demonstrates; any observed value
// that differs from the fixture's "expect" block is listed as a deviation.
struct CounterexampleResult {
    AuditReport report;
    std::vector<std::string> deviations;

    bool as_expected() const { return deviations.empty(); }
};

// Strict epi f: {0,x1,x2} -> {0} pulled back along g: {0,z} -> {0}.
json pullback_not_strict_fixture();
// Inclusion f: {0,x} -> {0,x,y} and g collapsing x, y to x, so g o f = id.
json right_obscure_fixture();

CounterexampleResult replay_fixtures(std::span<const json> fixtures);

// Both fixtures, plus the exhaustive left and right obscure audits of pointed
// sets with at most max_elements non-base elements (left passes, right fails).
CounterexampleResult counterexample_suite(int max_elements = 4);

} // namespace protex
