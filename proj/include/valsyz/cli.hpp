#pragma once

// Command-line front end.
//
// Instance file: `key: value` header lines, then `vectors:` and one vector per
// line. Blank lines and lines starting with '#' are ignored.
//
//     domain: zp:2
//     task: saturate-vx          # saturate-free | saturate-vx | syzygy
//     degree-bound: 6            # optional, for --verify
//     max-iter: 64               # optional
//     verify: true               # optional
//     vectors:
//     2
//     X
//
// The result document has the same shape: a header, a `vectors:` section
// holding G (saturate-free) or B (saturate-vx, syzygy), then optional
// `scaled:` (syzygy inputs to the saturation), `trace:` (CSV) and
// `diagrams:` sections.

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "valsyz/polyvec.hpp"
#include "valsyz/valuation.hpp"
#include "valsyz/vxsat.hpp"

namespace valsyz::cli {

enum class Task { SaturateFree, SaturateVx, Syzygy };

Task parse_task(std::string_view name);
std::string_view task_name(Task task);

struct VectorLine {
    std::size_t line = 0;  ///< 1-based line in the instance file
    std::string text;
};

struct InstanceFile {
    std::optional<DomainSpec> domain;
    std::optional<Task> task;
    std::vector<VectorLine> vectors;
    std::optional<int> degree_bound;
    std::optional<int> max_iter;
    bool verify = false;
};

/// Throws Error(ParseError) with a "line L, column C" prefix.
InstanceFile parse_instance(std::string_view contents);

struct RunOptions {
    std::optional<Task> task;
    std::optional<DomainSpec> domain;
    bool verify = false;
    std::optional<int> degree_bound;
    std::optional<int> max_iter;
    std::optional<std::filesystem::path> out_dir;
    bool diagram = false;
};

inline constexpr int exit_ok = 0;
inline constexpr int exit_input_error = 1;
inline constexpr int exit_verify_mismatch = 2;

/// Runs one instance: 0 on success, 1 on input or domain errors, 2 when
/// --verify finds a disagreement with the brute-force oracle.
int run(const std::filesystem::path& path, const RunOptions& opts, std::ostream& out, std::ostream& err);
int run_text(std::string_view contents, const RunOptions& opts, std::ostream& out, std::ostream& err);

/// Grid of pivot positions, row i = n..1, column r = 0..max_exp:
///   O  pivot of a column of H          @  pivot of a supernumerary column of H
///   o  pivot of an older column of G   #  cell of a row with no pivot at all
///   .  anything else
std::string pivot_diagram(const std::vector<PivotIndex>& older, const std::vector<PivotIndex>& current,
                          std::size_t n, int max_exp);

/// Diagram for a basis G whose last `h_count` columns form H.
template <ValuationDomain D>
std::string pivot_diagram(const D& dom, const std::vector<PolyVec<element_t<D>>>& G,
                          const std::vector<PolyVec<element_t<D>>>& H, std::size_t n, int max_exp) {
    std::vector<PivotIndex> current, older;
    for (const auto& h : H) current.push_back(piv(dom, h).pivot);
    for (const auto& g : G) {
        auto p = piv(dom, g).pivot;
        if (std::find(current.begin(), current.end(), p) == current.end()) older.push_back(p);
    }
    return pivot_diagram(older, current, n, max_exp);
}

std::string trace_csv(const std::vector<IterationRecord>& trace);

/// The `vectors:` section of a result document, as raw lines.
std::vector<std::string> result_vector_lines(std::string_view document);

}  // namespace valsyz::cli
