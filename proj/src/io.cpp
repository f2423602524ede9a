#include "qhopf/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace qhopf {

namespace {

using nlohmann::json;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) raise(ErrorCode::ParseError, "cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

json parse_or_raise(const std::string& text, const std::string& what) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        raise(ErrorCode::ParseError, what + ": " + e.what());
    }
}

cplx complex_entry(const json& pair, const std::string& what) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number())
        raise(ErrorCode::ParseError, what + ": expected a [re, im] pair");
    return {pair[0].get<double>(), pair[1].get<double>()};
}

} // namespace

StateFile parse_state_json(const std::string& text) {
    const json j = parse_or_raise(text, "state file");
    if (!j.is_object() || !j.contains("amplitudes"))
        raise(ErrorCode::ParseError, "state file: missing \"amplitudes\"");
    const json& amps = j["amplitudes"];
    if (!amps.is_array() || amps.size() != 4)
        raise(ErrorCode::ParseError, "state file: \"amplitudes\" must list 4 entries");
    std::array<cplx, 4> a{};
    for (int i = 0; i < 4; ++i) a[i] = complex_entry(amps[i], "state file amplitude");
    StateFile out{TwoQubitState::from_unit_amplitudes(a), std::nullopt};
    if (j.contains("label")) out.label = j["label"].get<std::string>();
    return out;
}

StateFile load_state_file(const std::string& path) { return parse_state_json(slurp(path)); }

LoopFile parse_loop_json(const std::string& text) {
    const json j = parse_or_raise(text, "loop file");
    if (!j.is_object() || !j.contains("kind"))
        raise(ErrorCode::ParseError, "loop file: missing \"kind\"");
    LoopFile out{LoopSpec::sampled_loop({S4Point({1, 0, 0, 0, 0}), S4Point({1, 0, 0, 0, 0})}),
                 2.0 * M_PI, 20000, j["kind"].get<std::string>()};
    if (j.contains("t_end")) out.t_end = j["t_end"].get<double>();
    if (j.contains("n_steps")) out.n_steps = j["n_steps"].get<int>();
    if (out.n_steps < 2) raise(ErrorCode::ParseError, "loop file: n_steps must be at least 2");

    if (out.kind == "c_kappa") {
        if (!j.contains("kappa")) raise(ErrorCode::ParseError, "loop file: c_kappa needs \"kappa\"");
        out.kappa = j["kappa"].get<double>();
        const CKappaLoop ck = loop_c_kappa(out.kappa);
        out.loop = LoopSpec::generator_orbit_loop(ck.generator, ck.base, out.t_end);
    } else if (out.kind == "spin5") {
        if (!j.contains("alpha")) raise(ErrorCode::ParseError, "loop file: spin5 needs \"alpha\"");
        const json& a = j["alpha"];
        if (!a.is_array() || a.size() != 5)
            raise(ErrorCode::ParseError, "loop file: \"alpha\" must be a 5x5 array");
        Eigen::Matrix<double, 5, 5> alpha;
        for (int r = 0; r < 5; ++r) {
            if (!a[r].is_array() || a[r].size() != 5)
                raise(ErrorCode::ParseError, "loop file: \"alpha\" must be a 5x5 array");
            for (int c = 0; c < 5; ++c) alpha(r, c) = a[r][c].get<double>();
        }
        const QMat2 s = spin5_generator(alpha);
        S4Point base({0, 0, 0, 1, 0});
        if (j.contains("base")) {
            const json& b = j["base"];
            if (!b.is_array() || b.size() != 5)
                raise(ErrorCode::ParseError, "loop file: \"base\" must be a 5-vector");
            std::array<double, 5> xi{};
            for (int i = 0; i < 5; ++i) xi[i] = b[i].get<double>();
            base = S4Point(xi);
        }
        out.loop = LoopSpec::generator_orbit_loop(s, base, out.t_end);
    } else if (out.kind == "sampled") {
        if (!j.contains("points")) raise(ErrorCode::ParseError, "loop file: sampled needs \"points\"");
        const json& pts = j["points"];
        if (!pts.is_array() || pts.size() < 2)
            raise(ErrorCode::ParseError, "loop file: \"points\" must list at least 2 samples");
        std::vector<S4Point> samples;
        samples.reserve(pts.size());
        for (const auto& p : pts) {
            if (!p.is_array() || p.size() != 5)
                raise(ErrorCode::ParseError, "loop file: each point must be a 5-vector");
            std::array<double, 5> xi{};
            for (int i = 0; i < 5; ++i) xi[i] = p[i].get<double>();
            samples.emplace_back(xi);
        }
        out.loop = LoopSpec::sampled_loop(std::move(samples));
    } else {
        raise(ErrorCode::ParseError, "loop file: unknown kind \"" + out.kind + "\"");
    }
    return out;
}

LoopFile load_loop_file(const std::string& path) { return parse_loop_json(slurp(path)); }

std::string format_double(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.15g", v);
    // normalize the sign of zero so reruns are byte-identical across code paths
    if (std::string(buf) == "-0") return "0";
    return buf;
}

void Record::put(const std::string& key, const std::string& value) {
    fields_.emplace_back(key, value);
    numeric_.emplace_back(key, false);
}

void Record::put(const std::string& key, double value) {
    fields_.emplace_back(key, format_double(value));
    numeric_.emplace_back(key, true);
}

void Record::put(const std::string& key, long value) {
    fields_.emplace_back(key, std::to_string(value));
    numeric_.emplace_back(key, true);
}

void Record::put(const std::string& key, cplx value) {
    put(key + "_re", value.real());
    put(key + "_im", value.imag());
}

std::string Record::as_kv() const {
    std::string out;
    for (const auto& [k, v] : fields_) {
        out += k;
        out += ' ';
        out += v;
        out += '\n';
    }
    return out;
}

std::string Record::as_json() const {
    std::string out = "{";
    for (std::size_t i = 0; i < fields_.size(); ++i) {
        if (i) out += ", ";
        out += nlohmann::json(fields_[i].first).dump();
        out += ": ";
        out += numeric_[i].second ? fields_[i].second : nlohmann::json(fields_[i].second).dump();
    }
    out += "}";
    return out;
}

} // namespace qhopf
