#include "rgw/json_io.hpp"

namespace rgw {

using nlohmann::json;

json to_json(const VerificationReport& r, const Alphabet& ab) {
    json failures = json::array();
    for (const auto& f : r.failures) {
        failures.push_back({
            {"kind", f.kind == VerificationFailure::Kind::Stability ? "stability" : "absorption"},
            {"class_i", f.label_i},
            {"class_j", f.label_j},
            {"witness", ab.render(f.witness)},
        });
    }
    return {{"verified", r.verified}, {"failures", failures}};
}

json to_json(const CrosscheckResult& r, const Alphabet& ab) {
    json out = {{"ok", r.ok}};
    if (!r.ok) {
        out["word"] = ab.render(r.word);
        out["expected"] = r.expected;
        out["got"] = r.got;
    }
    return out;
}

json to_json(const OctalCheck& r) {
    json out = {{"ok", r.ok}, {"positions_checked", r.positions_checked}};
    if (!r.ok) out["detail"] = r.detail;
    return out;
}

json to_json(const ForcedRun& r, const Alphabet& ab) {
    json applied = json::array();
    for (RuleKind k : r.applied) applied.push_back(to_string(k));
    return {
        {"moves", r.move_count()},
        {"halted", r.halted},
        {"verdict", r.verdict == ForcedRun::Verdict::AWins         ? "AWins"
                    : r.verdict == ForcedRun::Verdict::ALoses ? "ALoses"
                                                              : "BudgetExceeded"},
        {"final", ab.render(r.trajectory.back())},
        {"applied", applied},
    };
}

json to_json(const CrosscheckRun& r) {
    json out = {
        {"ok", r.ok},           {"game_moves", r.game_moves}, {"tm_steps", r.tm_steps},
        {"game_halted", r.game_halted}, {"tm_halted", r.tm_halted},
    };
    if (!r.ok) out["detail"] = r.detail;
    return out;
}

json to_json(const SynthesisResult& r, const Alphabet& ab) {
    json attempts = json::array();
    for (const auto& a : r.attempts)
        attempts.push_back({{"length", a.length}, {"outcome", a.outcome}});
    json out = {
        {"status", to_string(r.status)},
        {"detail", r.detail},
        {"attempts", attempts},
    };
    if (r.machine) {
        out["states"] = r.machine->num_states();
        out["table_length"] = r.table_length;
        out["report"] = to_json(r.report, ab);
    }
    return out;
}

json to_json(const TmConfig& c) {
    return {{"state", c.state}, {"head", c.head}, {"tape", c.tape}};
}

} // namespace rgw
