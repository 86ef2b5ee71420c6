#pragma once

#include <stdexcept>
#include <string>

namespace wfs {

enum class SettingLevel { Basic, Ineqs, Enhanced };

// Feature switches for the fixed-length model and the native search. The
// three presets form the standard ladder; individual toggles exist for
// ablation experiments only.
struct Settings {
    SettingLevel level = SettingLevel::Basic;

    bool count_upper_bounds = false;   // per-symbol occurrence caps
    bool adjacency_fixings = false;    // no symbol next to itself (incl. wrap)
    bool objective_fixings = false;    // drop gap variables priced at >= z*
    bool rhs_lifting = false;          // raise occurrence minimums under an incumbent
    bool improvement_cap = false;      // cap the objective below the incumbent
    bool symmetry_breaking = false;    // first-position fix + tied-symbol order
    bool skip_rule = false;            // skip lengths proven non-improving
    bool lifted_count_bounds = false;  // incumbent-lifted occurrence caps
    bool extended_count_model = false; // occurrence-count selector variables

    static Settings preset(SettingLevel level) {
        Settings s;
        s.level = level;
        if (level == SettingLevel::Basic) return s;
        s.count_upper_bounds = true;
        s.adjacency_fixings = true;
        s.objective_fixings = true;
        s.rhs_lifting = true;
        s.improvement_cap = true;
        s.symmetry_breaking = true;
        if (level == SettingLevel::Ineqs) return s;
        s.skip_rule = true;
        s.lifted_count_bounds = true;
        s.extended_count_model = true;
        return s;
    }
};

inline std::string to_string(SettingLevel level) {
    switch (level) {
        case SettingLevel::Basic: return "basic";
        case SettingLevel::Ineqs: return "ineqs";
        case SettingLevel::Enhanced: return "enhanced";
    }
    return "?";
}

inline SettingLevel setting_level_from_string(const std::string& name) {
    if (name == "basic") return SettingLevel::Basic;
    if (name == "ineqs") return SettingLevel::Ineqs;
    if (name == "enhanced") return SettingLevel::Enhanced;
    throw std::invalid_argument("unknown setting '" + name + "' (use basic, ineqs or enhanced)");
}

} // namespace wfs
