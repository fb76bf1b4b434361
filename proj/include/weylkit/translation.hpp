#pragma once

#include "weylkit/exponent.hpp"
#include "weylkit/grid_function.hpp"
#include "weylkit/seminorms.hpp"

#include <cstddef>
#include <vector>

namespace weylkit {

/**
 * Which notion of translation defect backs a search: EquiWeyl evaluates the
 * windowed metric at the largest schedule length (one fixed l must work for
 * the whole candidate set); Weyl extrapolates the metric along the schedule
 * and uses the limit estimate.
 */
enum class APMode { EquiWeyl, Weyl };

struct TranslationSearch {
    double eps = 0.1;            // acceptance threshold for the defect
    double start = 0.0;          // candidate interval [start, end]
    double end = 10.0;
    double step = 0.01;          // candidate spacing; must not exceed density_length
    double density_length = 1.0; // L: every subinterval of this length should hold a hit
    APMode mode = APMode::EquiWeyl;
};

struct TranslationRecord {
    double tau = 0.0;    // realized shift (snapped to whole cells)
    double defect = 0.0;
};

struct TranslationReport {
    std::vector<TranslationRecord> accepted;
    std::size_t candidates = 0;   // after snapping and deduplication
    double largest_gap = 0.0;     // between accepted shifts, including interval ends
    bool relatively_dense = false;
    double defect_length = 0.0;   // window length backing the reported defects
    APMode mode = APMode::EquiWeyl;
};

/**
 * Defect of a single shift: the windowed p-mean distance between f(.+tau)
 * and f, with the sup over every window start the span accommodates.  tau is
 * snapped to whole cells; a span too short to hold one shifted window is a
 * range error.
 */
double translation_defect(const GridFunction& f, const Exponent& e, double tau, APMode mode,
                          const SeminormParams& sp);

/**
 * Scan [start, end] in steps for shifts whose defect stays within eps.
 * Candidates snap to the grid; duplicates after snapping collapse.  The
 * report records the largest hit-free stretch; failing the density check
 * only clears relatively_dense, it never throws.
 */
TranslationReport find_translation_numbers(const GridFunction& f, const Exponent& e,
                                           const TranslationSearch& ts, const SeminormParams& sp);

} // namespace weylkit
