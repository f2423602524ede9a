#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qhopf/holonomy.hpp"

namespace qhopf {

/// State file: JSON object with "amplitudes" = four [re, im] pairs
/// (unit-normalized within 1e-9) and an optional "label".
struct StateFile {
    TwoQubitState state;
    std::optional<std::string> label;
};

StateFile load_state_file(const std::string& path);
StateFile parse_state_json(const std::string& text);

/// Loop file: JSON object with "kind" in {"c_kappa", "spin5", "sampled"}
/// ("kappa" / "alpha" 5x5 / "points" list of 5-vectors), optional "t_end"
/// (default 2 pi) and "n_steps" (default 20000).
struct LoopFile {
    LoopSpec loop;
    double t_end;
    int n_steps;
    std::string kind;
    double kappa = 0.0;  // c_kappa only
};

LoopFile load_loop_file(const std::string& path);
LoopFile parse_loop_json(const std::string& text);

/// Ordered key/value record; values already rendered as text. Doubles are
/// printed with 15 significant digits so reruns are byte-identical.
class Record {
public:
    void put(const std::string& key, const std::string& value);
    void put(const std::string& key, double value);
    void put(const std::string& key, long value);
    void put(const std::string& key, cplx value);

    std::string as_kv() const;    // one "key value" line per field
    std::string as_json() const;  // single JSON object, insertion order

private:
    std::vector<std::pair<std::string, std::string>> fields_;
    std::vector<std::pair<std::string, bool>> numeric_;  // key -> value is numeric
};

std::string format_double(double v);

} // namespace qhopf
